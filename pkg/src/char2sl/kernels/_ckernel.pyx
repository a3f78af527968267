# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled small-field kernels; same interface as the pure-Python module."""

from libc.string cimport memcpy, memcmp, memset

cdef enum:
    MAXNN = 256

KIND_GL = 1
KIND_SL = 2
KIND_SYM = 3


cdef inline int _det(const unsigned char* m, int n, int q, const unsigned char* mul,
                     const unsigned char* inv) noexcept nogil:
    cdef unsigned char w[MAXNN]
    cdef unsigned char t
    cdef int d = 1, c, r, j, piv, f, pinv
    memcpy(w, m, n * n)
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if w[r * n + c]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            for j in range(n):
                t = w[c * n + j]
                w[c * n + j] = w[piv * n + j]
                w[piv * n + j] = t
        d = mul[d * q + w[c * n + c]]
        pinv = inv[w[c * n + c]]
        for r in range(c + 1, n):
            if w[r * n + c]:
                f = mul[w[r * n + c] * q + pinv] * q
                for j in range(c, n):
                    w[r * n + j] ^= mul[f + w[c * n + j]]
    return d


cdef inline void _matmul(const unsigned char* a, const unsigned char* b, unsigned char* out,
                         int n, int q, const unsigned char* mul) noexcept nogil:
    cdef int i, j, k, x
    memset(out, 0, n * n)
    for i in range(n):
        for k in range(n):
            x = a[i * n + k]
            if x:
                x *= q
                for j in range(n):
                    if b[k * n + j]:
                        out[i * n + j] ^= mul[x + b[k * n + j]]


cdef inline void _transpose(const unsigned char* a, unsigned char* out, int n) noexcept nogil:
    cdef int i, j
    for i in range(n):
        for j in range(n):
            out[i * n + j] = a[j * n + i]


cdef inline bint _is_scalar(const unsigned char* m, int n) noexcept nogil:
    cdef int i, j
    cdef unsigned char c = m[0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if m[i * n + j] != c:
                    return False
            elif m[i * n + j]:
                return False
    return True


def _check(int n):
    if n * n > MAXNN:
        raise ValueError("dimension too large for the compiled kernel")


def det(const unsigned char[::1] m, int n, int q, const unsigned char[::1] mul, const unsigned char[::1] inv):
    _check(n)
    return _det(&m[0], n, q, &mul[0], &inv[0])


def matmul(const unsigned char[::1] a, const unsigned char[::1] b, int n, int q, const unsigned char[::1] mul):
    _check(n)
    cdef unsigned char out[MAXNN]
    _matmul(&a[0], &b[0], out, n, q, &mul[0])
    return out[:n * n]


def transpose(const unsigned char[::1] m, int n):
    _check(n)
    cdef unsigned char out[MAXNN]
    _transpose(&m[0], out, n)
    return out[:n * n]


def inverse(const unsigned char[::1] m, int n, int q, const unsigned char[::1] mul, const unsigned char[::1] inv):
    _check(n)
    cdef unsigned char w[2 * MAXNN]
    cdef unsigned char t
    cdef int c, r, j, piv, f, w2 = 2 * n
    cdef const unsigned char* M = &mul[0]
    for r in range(n):
        for j in range(n):
            w[r * w2 + j] = m[r * n + j]
            w[r * w2 + n + j] = 1 if r == j else 0
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if w[r * w2 + c]:
                piv = r
                break
        if piv < 0:
            return None
        if piv != c:
            for j in range(w2):
                t = w[c * w2 + j]
                w[c * w2 + j] = w[piv * w2 + j]
                w[piv * w2 + j] = t
        f = inv[w[c * w2 + c]] * q
        for j in range(w2):
            w[c * w2 + j] = M[f + w[c * w2 + j]]
        for r in range(n):
            if r != c and w[r * w2 + c]:
                f = w[r * w2 + c] * q
                for j in range(w2):
                    w[r * w2 + j] ^= M[f + w[c * w2 + j]]
    cdef unsigned char out[MAXNN]
    for r in range(n):
        for j in range(n):
            out[r * n + j] = w[r * w2 + n + j]
    return out[:n * n]


def enumerate_matrices(int n, int q, const unsigned char[::1] mul, const unsigned char[::1] inv, int kind, limit):
    """All matrices of the requested kind, in the same order as the Python kernel."""
    _check(n)
    cdef int nn = n * n, slots, i, j, k, d, pos
    cdef unsigned char m[MAXNN]
    cdef int dig[MAXNN]
    cdef int si[MAXNN]
    cdef int sj[MAXNN]
    cdef const unsigned char* M = &mul[0]
    cdef const unsigned char* I = &inv[0]
    out = []
    k = 0
    if kind == KIND_SYM:
        slots = n * (n + 1) // 2
        for i in range(n):
            for j in range(i, n):
                si[k] = i
                sj[k] = j
                k += 1
    else:
        slots = nn
        for i in range(n):
            for j in range(n):
                si[k] = i
                sj[k] = j
                k += 1
    if (<object>q) ** slots > limit:
        raise ValueError("enumeration budget exceeded")
    memset(m, 0, nn)
    for k in range(slots):
        dig[k] = 0
    while True:
        d = _det(m, n, q, M, I)
        if kind == KIND_SYM:
            if d:
                out.append(m[:nn])
        elif (kind == KIND_GL and d) or (kind == KIND_SL and d == 1):
            out.append(m[:nn])
        # odometer, last slot fastest (matches itertools.product)
        pos = slots - 1
        while pos >= 0:
            dig[pos] += 1
            if dig[pos] == q:
                dig[pos] = 0
            m[si[pos] * n + sj[pos]] = dig[pos]
            if kind == KIND_SYM:
                m[sj[pos] * n + si[pos]] = dig[pos]
            if dig[pos]:
                break
            pos -= 1
        if pos < 0:
            break
    return out


def conj_images(const unsigned char[::1] a, const unsigned char[::1] blob,
                const unsigned char[::1] blob_inv, int n, int q, const unsigned char[::1] mul):
    _check(n)
    cdef int nn = n * n, count = blob.shape[0] // nn, g
    cdef unsigned char t1[MAXNN]
    cdef unsigned char t2[MAXNN]
    cdef const unsigned char* M = &mul[0]
    out = set()
    for g in range(count):
        _matmul(&blob[g * nn], &a[0], t1, n, q, M)
        _matmul(t1, &blob_inv[g * nn], t2, n, q, M)
        out.add(t2[:nn])
    return out


def congruence_images(const unsigned char[::1] a, const unsigned char[::1] blob, int n, int q,
                      const unsigned char[::1] mul):
    _check(n)
    cdef int nn = n * n, count = blob.shape[0] // nn, g
    cdef unsigned char tt[MAXNN]
    cdef unsigned char t1[MAXNN]
    cdef unsigned char t2[MAXNN]
    cdef const unsigned char* M = &mul[0]
    out = set()
    for g in range(count):
        _transpose(&blob[g * nn], tt, n)
        _matmul(tt, &a[0], t1, n, q, M)
        _matmul(t1, &blob[g * nn], t2, n, q, M)
        out.add(t2[:nn])
    return out


def commuting(const unsigned char[::1] blob, const unsigned char[::1] a, int n, int q,
              const unsigned char[::1] mul):
    _check(n)
    cdef int nn = n * n, count = blob.shape[0] // nn, g
    cdef unsigned char t1[MAXNN]
    cdef unsigned char t2[MAXNN]
    cdef const unsigned char* M = &mul[0]
    out = []
    for g in range(count):
        _matmul(&a[0], &blob[g * nn], t1, n, q, M)
        _matmul(&blob[g * nn], &a[0], t2, n, q, M)
        if memcmp(t1, t2, nn) == 0:
            out.append((&blob[g * nn])[:nn])
    return out


def preserving(const unsigned char[::1] blob, const unsigned char[::1] a, int n, int q,
               const unsigned char[::1] mul):
    _check(n)
    cdef int nn = n * n, count = blob.shape[0] // nn, g
    cdef unsigned char tt[MAXNN]
    cdef unsigned char t1[MAXNN]
    cdef unsigned char t2[MAXNN]
    cdef const unsigned char* M = &mul[0]
    out = []
    for g in range(count):
        _transpose(&blob[g * nn], tt, n)
        _matmul(tt, &a[0], t1, n, q, M)
        _matmul(t1, &blob[g * nn], t2, n, q, M)
        if memcmp(t2, &a[0], nn) == 0:
            out.append((&blob[g * nn])[:nn])
    return out


def square_scalar(const unsigned char[::1] blob, int n, int q, const unsigned char[::1] mul):
    _check(n)
    cdef int nn = n * n, count = blob.shape[0] // nn, g
    cdef unsigned char t1[MAXNN]
    cdef const unsigned char* M = &mul[0]
    out = []
    for g in range(count):
        if _is_scalar(&blob[g * nn], n):
            continue
        _matmul(&blob[g * nn], &blob[g * nn], t1, n, q, M)
        if _is_scalar(t1, n):
            out.append((&blob[g * nn])[:nn])
    return out
