"""Symmetric bilinear forms in characteristic 2.

Forms are given by symmetric invertible Gram matrices.  Alternate forms
(zero diagonal) reduce to J; non-alternate forms diagonalize.  For the
supported fields ``[k : k^2] <= 2`` and a non-alternate form is determined
up to congruence by two invariants:

* the value set ``{x^T A x}``, a k^2-subspace of k of dimension d in {1, 2}
  (for d = 1 it is ``a k^2`` for one square class a), and
* the square class of ``det A``.

The normal forms are ``diag(a, ..., a)`` for d = 1 and, for d = 2,
``diag(1, ..., 1, e)`` (e = det class, a non-square) or
``diag(1, ..., 1, x, x)`` (det a square).
"""
from __future__ import annotations

from .errors import (
    AlternateInput,
    DimensionMismatch,
    FieldMismatch,
    NotAlternate,
    NotSymmetric,
    OddDimension,
    SingularMatrix,
    VerificationError,
)
from .involutions import OuterAlternate, OuterDiagonal, make_J
from .matrix import Matrix


def _check_symmetric(A: Matrix):
    if not A.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")


def _form(A: Matrix, x, y):
    acc = A.field.zero
    Ay = A.apply_vec(y)
    for a, b in zip(x, Ay):
        if a and b:
            acc = acc + a * b
    return acc


def _vadd(x, y, c=None):
    if c is None:
        return [a + b for a, b in zip(x, y)]
    return [a + c * b for a, b in zip(x, y)]


def _vscale(x, c):
    return [a * c for a in x]


def is_alternate(A: Matrix) -> bool:
    _check_symmetric(A)
    return not any(A.rows[i][i] for i in range(A.n))


# ---------------------------------------------------------------------------
# diagonalization and symplectic bases
# ---------------------------------------------------------------------------

def _diagonal_basis(A: Matrix, basis):
    """Orthogonal basis of span(basis) with nonzero values; uses the fold move.

    Returns (vectors, values).  Raises AlternateInput when the span is
    alternate and no earlier pivot is available.
    """
    rest = [list(v) for v in basis]
    done, vals = [], []
    budget = 4 * len(rest) ** 2 + 4
    while rest:
        budget -= 1
        if budget < 0:
            raise SingularMatrix("form is degenerate")
        idx = next((i for i, v in enumerate(rest) if _form(A, v, v)), None)
        if idx is None:
            if not done:
                raise AlternateInput("form is alternate on this subspace")
            # fold the last pivot w back in as u + w, which has value q(w)
            w = done.pop()
            vals.pop()
            rest[0] = _vadd(rest[0], w)
            rest.append(w)
            idx = 0
        p = rest.pop(idx)
        d = _form(A, p, p)
        for i, x in enumerate(rest):
            c = _form(A, x, p)
            if c:
                rest[i] = _vadd(x, p, c / d)
        if not any(p):
            raise SingularMatrix("form is degenerate")
        done.append(p)
        vals.append(d)
    for v in vals:
        if not v:
            raise SingularMatrix("form is degenerate")
    return done, vals


def _std_basis(F, n):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def diagonalize_congruence(A: Matrix):
    """Return (Q, D) with Q^T A Q = D diagonal and invertible."""
    _check_symmetric(A)
    if not A.det():
        raise SingularMatrix("form is singular")
    if is_alternate(A):
        raise AlternateInput("alternate forms do not diagonalize")
    F = A.field
    vecs, vals = _diagonal_basis(A, _std_basis(F, A.n))
    Q = Matrix.from_columns(F, vecs)
    D = Matrix.diag(F, vals)
    if Q.T @ A @ Q != D:
        raise VerificationError("diagonalization failed verification")
    return Q, D


def symplectic_normalize(A: Matrix) -> Matrix:
    """Return Q with Q^T A Q = J by extracting hyperbolic pairs."""
    _check_symmetric(A)
    n = A.n
    if n % 2:
        raise OddDimension("alternate forms need even dimension")
    if not is_alternate(A):
        raise NotAlternate("form is not alternate")
    if not A.det():
        raise SingularMatrix("form is singular")
    F = A.field
    rest = _std_basis(F, n)
    us, vs = [], []
    while rest:
        u = rest.pop(0)
        j = next((i for i, v in enumerate(rest) if _form(A, u, v)), None)
        if j is None:
            raise SingularMatrix("form is degenerate")
        v = rest.pop(j)
        v = _vscale(v, F.one / _form(A, u, v))
        for i, w in enumerate(rest):
            a, b = _form(A, w, v), _form(A, w, u)
            if a:
                w = _vadd(w, u, a)
            if b:
                w = _vadd(w, v, b)
            rest[i] = w
        us.append(u)
        vs.append(v)
    Q = Matrix.from_columns(F, us + vs)
    if Q.T @ A @ Q != make_J(F, n):
        raise VerificationError("symplectic normalization failed verification")
    return Q


# ---------------------------------------------------------------------------
# square classes over k = k^2 + x k^2
# ---------------------------------------------------------------------------

def _split(a):
    """(a0, a1) with a = a0^2 + x a1^2; finite fields have a1 = 0."""
    if a.field.is_finite:
        return a.sqrt(), a.field.zero
    return a.frobenius_split()


def _independent(a, b) -> bool:
    """True when a, b are linearly independent over k^2 (b/a not a square)."""
    return not (b / a).is_square()


def solve_two_squares(a, b, c):
    """(s, t) with a s^2 + b t^2 = c, or None when c is not in a k^2 + b k^2."""
    F = a.field
    if not _independent(a, b):
        r = c / a
        return (r.sqrt(), F.zero) if r.is_square() else None
    a0, a1 = _split(a)
    b0, b1 = _split(b)
    c0, c1 = _split(c)
    det = a0 * b1 + a1 * b0
    s = (c0 * b1 + c1 * b0) / det
    t = (a0 * c1 + a1 * c0) / det
    return s, t


class _Work:
    """Orthogonal basis (columns of Q) with the values q(v) = v^T A v."""

    def __init__(self, A, vecs, vals):
        self.A = A
        self.F = A.field
        self.vecs = vecs
        self.vals = vals

    def rescale(self, i, target):
        """Scale v_i so its value becomes ``target`` (same square class required)."""
        s = (self.vals[i] / target).sqrt()
        self.vecs[i] = _vscale(self.vecs[i], self.F.one / s)
        self.vals[i] = target

    def normalize(self, i):
        self.rescale(i, self.vals[i].square_class_rep())

    def pair_to(self, i, j, c):
        """<a, b> = <c, abc> on positions i, j."""
        a, b = self.vals[i], self.vals[j]
        s, t = solve_two_squares(a, b, c)
        vi, vj = self.vecs[i], self.vecs[j]
        u = _vadd(_vscale(vi, s), vj, t)
        w = _vadd(_vscale(vi, b * t), vj, a * s)
        self.vecs[i], self.vals[i] = u, c
        self.vecs[j], self.vals[j] = w, a * b * c
        self.normalize(j)

    def replace_block(self, idx, firsts):
        """Put orthogonal vectors ``firsts`` (in span of idx) first; diagonalize the rest."""
        A, F = self.A, self.F
        span = [self.vecs[i] for i in idx]
        # coordinates beta in span with B(f, sum beta_j v_j) = 0 for every f
        rows = [[_form(A, f, v) for v in span] for f in firsts]
        null = Matrix._raw(F, rows).nullspace()
        comp = []
        for beta in null:
            y = [F.zero] * A.n
            for bj, v in zip(beta, span):
                if bj:
                    y = _vadd(y, v, bj)
            comp.append(y)
        cvecs, cvals = _diagonal_basis(A, comp)
        new_vecs = list(firsts) + cvecs
        new_vals = [_form(A, f, f) for f in firsts] + cvals
        for pos, v, val in zip(idx, new_vecs, new_vals):
            self.vecs[pos], self.vals[pos] = v, val
        for pos in idx:
            self.normalize(pos)


def _value_class(vals):
    """(d, a): d = dim over k^2 of the span of vals; a = common class when d = 1."""
    a = vals[0]
    for b in vals[1:]:
        if _independent(a, b):
            return 2, None
    return 1, a.square_class_rep()


def _det_class(vals):
    det = vals[0].field.one
    for v in vals:
        det = det * v
    return det.square_class_rep()


def congruence_normal_form(A: Matrix):
    """Return (Q, N) with Q^T A Q = N the normal form of a non-alternate form."""
    Q0, D = diagonalize_congruence(A)
    F = A.field
    n = A.n
    vecs = [Q0.col(j) for j in range(n)]
    w = _Work(A, vecs, [D[i, i] for i in range(n)])
    for i in range(n):
        w.normalize(i)
    d, a = _value_class(w.vals)
    if d == 2:
        one = F.one
        # make non-1 entries pairwise dependent, producing ones along the way
        changed = True
        while changed:
            changed = False
            others = [i for i in range(n) if w.vals[i] != one]
            for ii, i in enumerate(others):
                for j in others[ii + 1:]:
                    if _independent(w.vals[i], w.vals[j]):
                        w.pair_to(i, j, one)
                        changed = True
                        break
                if changed:
                    break
        ones = [i for i in range(n) if w.vals[i] == one]
        rest = [i for i in range(n) if w.vals[i] != one]
        # <1, a, a, a> = <1, 1, 1, a>
        while len(rest) >= 3:
            i0, (i1, i2, i3) = ones[0], rest[:3]
            av = w.vals[i1]
            v0, v1, v2, v3 = (w.vecs[i] for i in (i0, i1, i2, i3))
            ainv = one / av
            f1 = _vadd(_vadd(v0, v1), v2)
            f2 = _vadd(_vadd(v0, v1, ainv), v3, ainv)
            idx = [i0, i1, i2, i3]
            w.replace_block(idx, [f1, f2])
            # the complement has det class a, so its two values are independent
            w.pair_to(i2, i3, one)
            ones = [i for i in range(n) if w.vals[i] == one]
            rest = [i for i in range(n) if w.vals[i] != one]
        if len(rest) == 2:
            xx = F.x
            if w.vals[rest[0]] != xx:
                # <1, a, a> = <1, x, x>
                i0, i1, i2 = ones[0], rest[0], rest[1]
                s, t = solve_two_squares(w.vals[i0], w.vals[i1], xx)
                f = _vadd(_vscale(w.vecs[i0], s), w.vecs[i1], t)
                w.replace_block([i0, i1, i2], [f])
                if w.vals[i1] != one:
                    w.pair_to(i1, i2, one)
                for i in (i0, i1, i2):
                    if w.vals[i] not in (one, xx):
                        raise VerificationError("normal form reduction did not converge")
    order = sorted(range(n), key=lambda i: (w.vals[i] != F.one, w.vals[i].sort_key()))
    Q = Matrix.from_columns(F, [w.vecs[i] for i in order])
    N = Matrix.diag(F, [w.vals[i] for i in order])
    if Q.T @ A @ Q != N:
        raise VerificationError("normal form failed verification")
    _check_normal(N, d, a)
    return Q, N


def _check_normal(N: Matrix, d, a):
    F = N.field
    vals = [N[i, i] for i in range(N.n)]
    if d == 1:
        ok = all(v == a for v in vals)
    else:
        tail = [v for v in vals if v != F.one]
        ok = len(tail) == 1 or (len(tail) == 2 and tail[0] == tail[1] == F.x)
    if not ok:
        raise VerificationError(f"reduction ended outside the normal forms: {vals}")


def outer_invariants(A: Matrix):
    """('alt',) or ('diag', d, value class or None, det class)."""
    _check_symmetric(A)
    if is_alternate(A):
        return ("alt",)
    _, D = diagonalize_congruence(A)
    vals = [D[i, i] for i in range(A.n)]
    d, a = _value_class(vals)
    return ("diag", d, a, _det_class(vals))


def _projective_scalar(A: Matrix):
    """Scalar p such that p*A has the canonical invariants of its projective class."""
    F = A.field
    _, D = diagonalize_congruence(A)
    vals = [D[i, i] for i in range(A.n)]
    d, a = _value_class(vals)
    if d == 1:
        return F.one / a
    if A.n % 2:
        return _det_class(vals)
    return F.one


def classify_outer(A: Matrix):
    _check_symmetric(A)
    if not A.det():
        raise SingularMatrix("form is singular")
    if is_alternate(A):
        return OuterAlternate()
    p = _projective_scalar(A)
    _, N = congruence_normal_form(A * p)
    return OuterDiagonal(tuple(N[i, i].square_class_rep() for i in range(A.n)))


def are_congruent_proj(A: Matrix, B: Matrix):
    """Decide whether Q^T A Q = p B for some Q, p; returns (bool, (Q, p) or None)."""
    _check_symmetric(A)
    _check_symmetric(B)
    if A.field != B.field:
        raise FieldMismatch("forms over different fields")
    if A.n != B.n:
        raise DimensionMismatch("forms of different dimension")
    if not A.det() or not B.det():
        raise SingularMatrix("form is singular")
    F = A.field
    if classify_outer(A) != classify_outer(B):
        return False, None
    if is_alternate(A):
        Q = symplectic_normalize(A) @ symplectic_normalize(B).inverse()
        p = F.one
    else:
        p = _projective_scalar(B) / _projective_scalar(A)
        QA, NA = congruence_normal_form(A)
        QB, NB = congruence_normal_form(B * p)
        if NA != NB:
            raise VerificationError("equal labels but different normal forms")
        Q = QA @ QB.inverse()
    if Q.T @ A @ Q != B * p:
        raise VerificationError("congruence witness failed verification")
    return True, (Q, p)
