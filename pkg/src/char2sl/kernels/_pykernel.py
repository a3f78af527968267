"""Pure-Python small-field kernels.

A matrix over GF(q), q <= 256, is a ``bytes`` object of length n*n in
row-major order.  ``mul`` is a q*q multiplication table and ``inv`` a
length-q inverse table, both as ``bytes``.  Groups are passed as one
concatenated blob of such matrices.
"""
from __future__ import annotations

from itertools import product

KIND_GL = 1
KIND_SL = 2
KIND_SYM = 3


def det(m, n, q, mul, inv):
    w = [list(m[i * n:(i + 1) * n]) for i in range(n)]
    d = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if w[r][c]), -1)
        if piv < 0:
            return 0
        if piv != c:
            w[c], w[piv] = w[piv], w[c]
        pc = w[c][c]
        d = mul[d * q + pc]
        pinv = inv[pc]
        rowc = w[c]
        for r in range(c + 1, n):
            e = w[r][c]
            if e:
                f = mul[e * q + pinv] * q
                wr = w[r]
                for j in range(c, n):
                    wr[j] ^= mul[f + rowc[j]]
    return d


def matmul(a, b, n, q, mul):
    out = bytearray(n * n)
    for i in range(n):
        ri = i * n
        for k in range(n):
            x = a[ri + k]
            if not x:
                continue
            xq = x * q
            rk = k * n
            for j in range(n):
                y = b[rk + j]
                if y:
                    out[ri + j] ^= mul[xq + y]
    return bytes(out)


def transpose(m, n):
    return bytes(m[j * n + i] for i in range(n) for j in range(n))


def inverse(m, n, q, mul, inv):
    w = [list(m[i * n:(i + 1) * n]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if w[r][c]), -1)
        if piv < 0:
            return None
        w[c], w[piv] = w[piv], w[c]
        pinv = inv[w[c][c]] * q
        w[c] = [mul[pinv + v] for v in w[c]]
        rowc = w[c]
        for r in range(n):
            e = w[r][c]
            if r != c and e:
                eq = e * q
                w[r] = [v ^ mul[eq + u] for v, u in zip(w[r], rowc)]
    return bytes(v for row in w for v in row[n:])


def enumerate_matrices(n, q, mul, inv, kind, limit):
    """All matrices of the requested kind; raises ValueError past ``limit`` candidates."""
    if kind == KIND_SYM:
        slots = n * (n + 1) // 2
        if q ** slots > limit:
            raise ValueError("enumeration budget exceeded")
        out = []
        idx = [(i, j) for i in range(n) for j in range(i, n)]
        for vals in product(range(q), repeat=slots):
            m = bytearray(n * n)
            for (i, j), v in zip(idx, vals):
                m[i * n + j] = v
                m[j * n + i] = v
            m = bytes(m)
            if det(m, n, q, mul, inv):
                out.append(m)
        return out
    if q ** (n * n) > limit:
        raise ValueError("enumeration budget exceeded")
    out = []
    # enumerate row by row, keeping only invertible prefixes would complicate the
    # order; a plain scan keeps the output order identical to the compiled kernel
    for vals in product(range(q), repeat=n * n):
        m = bytes(vals)
        d = det(m, n, q, mul, inv)
        if (kind == KIND_GL and d) or (kind == KIND_SL and d == 1):
            out.append(m)
    return out


def _chunks(blob, nn):
    return [blob[i:i + nn] for i in range(0, len(blob), nn)]


def conj_images(a, blob, blob_inv, n, q, mul):
    """{C A C^-1 : C in group}."""
    nn = n * n
    out = set()
    for c, ci in zip(_chunks(blob, nn), _chunks(blob_inv, nn)):
        out.add(matmul(matmul(c, a, n, q, mul), ci, n, q, mul))
    return out


def congruence_images(a, blob, n, q, mul):
    """{Q^T A Q : Q in group}."""
    nn = n * n
    out = set()
    for c in _chunks(blob, nn):
        out.add(matmul(matmul(transpose(c, n), a, n, q, mul), c, n, q, mul))
    return out


def commuting(blob, a, n, q, mul):
    """Members X of the blob with A X = X A."""
    return [x for x in _chunks(blob, n * n) if matmul(a, x, n, q, mul) == matmul(x, a, n, q, mul)]


def preserving(blob, a, n, q, mul):
    """Members X of the blob with X^T A X = A."""
    a = bytes(a)
    return [x for x in _chunks(blob, n * n) if matmul(matmul(transpose(x, n), a, n, q, mul), x, n, q, mul) == a]


def _is_scalar(m, n):
    c = m[0]
    for i in range(n):
        for j in range(n):
            v = m[i * n + j]
            if (i == j and v != c) or (i != j and v):
                return False
    return True


def square_scalar(blob, n, q, mul):
    """Members A of the blob with A^2 scalar and A not scalar."""
    out = []
    for a in _chunks(blob, n * n):
        if not _is_scalar(a, n) and _is_scalar(matmul(a, a, n, q, mul), n):
            out.append(a)
    return out
