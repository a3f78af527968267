"""k-automorphisms of SL(n, k) and the classification of inner involutions.

An automorphism is stored as ``(parity, A)``.  Inner means ``X -> A X A^-1``;
outer means ``X -> theta(A X A^-1)`` with ``theta(X) = (X^-1)^T``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    InconsistentLabel,
    NotAnInvolution,
    OddDimension,
    SingularMatrix,
    VerificationError,
    WrongParity,
)
from .matrix import Matrix, are_conjugate

INNER = "inner"
OUTER = "outer"


# ---------------------------------------------------------------------------
# labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LType:
    """Inner class of L_{m,c^2,c}; every c gives the same class so c is 1."""

    m: int

    def to_json(self, field=None):
        return {"type": "L", "m": self.m}


@dataclass(frozen=True)
class PType:
    """Inner class of L_{n/2,p} with p a non-square; ``p`` is the square-class representative."""

    p: object

    def to_json(self, field=None):
        return {"type": "P", "p": self.p.field.format_element(self.p)}


@dataclass(frozen=True)
class OuterDiagonal:
    """Outer class of a non-alternate symmetric A; sorted square-class representatives."""

    classes: tuple

    def to_json(self, field=None):
        return {"type": "outer-diag", "classes": [c.field.format_element(c) for c in self.classes]}


@dataclass(frozen=True)
class OuterAlternate:
    def to_json(self, field=None):
        return {"type": "outer-alt"}


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

class Automorphism:
    __slots__ = ("parity", "mat", "_inv")

    def __init__(self, parity: str, mat: Matrix):
        if parity not in (INNER, OUTER):
            raise ValueError(f"parity must be 'inner' or 'outer', got {parity!r}")
        if not mat.is_square():
            raise DimensionMismatch("automorphism matrix must be square")
        if not mat.det():
            raise SingularMatrix("automorphism matrix must be invertible")
        if parity == OUTER and mat.n <= 2:
            raise WrongParity("theta is inner for n = 2; outer automorphisms need n > 2")
        self.parity = parity
        self.mat = mat
        self._inv = None

    @classmethod
    def inner(cls, A: Matrix) -> "Automorphism":
        return cls(INNER, A)

    @classmethod
    def outer(cls, A: Matrix) -> "Automorphism":
        return cls(OUTER, A)

    @property
    def n(self) -> int:
        return self.mat.n

    @property
    def field(self):
        return self.mat.field

    @property
    def inv(self) -> Matrix:
        if self._inv is None:
            self._inv = self.mat.inverse()
        return self._inv

    def __call__(self, X: Matrix) -> Matrix:
        return apply(self, X)

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.parity == other.parity and self.mat == other.mat

    def __hash__(self):
        return hash((self.parity, self.mat))

    def __repr__(self):
        return f"Automorphism({self.parity!r}, {self.mat.to_lists()!r})"


def apply(phi: Automorphism, X: Matrix) -> Matrix:
    """Inner: A X A^-1.  Outer: A^-T (X^-1)^T A^T."""
    if X.field != phi.field:
        raise FieldMismatch("matrix and automorphism over different fields")
    if not X.is_square() or X.n != phi.n:
        raise DimensionMismatch(f"expected a {phi.n}x{phi.n} matrix")
    A, Ai = phi.mat, phi.inv
    if phi.parity == INNER:
        return A @ X @ Ai
    return Ai.T @ X.inverse().T @ A.T


def acts_trivially(phi: Automorphism) -> bool:
    if phi.parity != INNER:
        raise WrongParity("outer automorphisms never act trivially for n > 2")
    return phi.mat.is_scalar()


def is_involution(phi: Automorphism) -> bool:
    A = phi.mat
    if phi.parity == INNER:
        return (A @ A).is_scalar() and not A.is_scalar()
    return A.is_symmetric()


def transvections(field, n):
    """Id + E_ij for i != j; they generate SL(n, k)."""
    return [Matrix.elementary(field, n, i, j) for i in range(n) for j in range(n) if i != j]


def squares_to_identity(phi: Automorphism) -> bool:
    """Direct check that phi o phi fixes every transvection."""
    return all(apply(phi, apply(phi, X)) == X for X in transvections(phi.field, phi.n))


# ---------------------------------------------------------------------------
# canonical matrices
# ---------------------------------------------------------------------------

def _block(field, n, blocks, pad):
    rows = [[field.zero] * n for _ in range(n)]
    i = 0
    for b in blocks:
        for r in range(2):
            for c in range(2):
                rows[i + r][i + c] = field.coerce(b[r][c])
        i += 2
    while i < n:
        rows[i][i] = field.coerce(pad)
        i += 1
    return Matrix._raw(field, rows)


def _check_m(n, m):
    if m < 1 or 2 * m > n:
        raise InconsistentLabel(f"need 1 <= m <= n/2, got m={m}, n={n}")


def make_L_mc(field, n: int, m: int, c=1) -> Matrix:
    """L_{m,c^2,c}: m blocks [[0,1],[c^2,0]] then n-2m copies of c."""
    _check_m(n, m)
    c = field.coerce(c)
    if not c:
        raise InconsistentLabel("c must be nonzero")
    return _block(field, n, [[[0, 1], [c * c, 0]]] * m, c)


def make_L_np(field, n: int, p) -> Matrix:
    """L_{n/2,p}: n/2 blocks [[0,1],[p,0]]."""
    if n % 2:
        raise InconsistentLabel("L_{n/2,p} needs even n")
    p = field.coerce(p)
    if not p:
        raise InconsistentLabel("p must be nonzero")
    return _block(field, n, [[[0, 1], [p, 0]]] * (n // 2), 1)


def make_U_mc(field, n: int, m: int, c=1) -> Matrix:
    """U_{m,c}: m blocks [[1,0],[c,1]] then ones."""
    _check_m(n, m)
    return _block(field, n, [[[1, 0], [field.coerce(c), 1]]] * m, 1)


def make_B1(field, n: int, m: int, c=1) -> Matrix:
    """Unit upper-triangular B with c^-1 above the diagonal inside each of the m blocks."""
    _check_m(n, m)
    ci = field.one / field.coerce(c)
    return _block(field, n, [[[1, ci], [0, 1]]] * m, 1)


def make_J(field, n: int) -> Matrix:
    """[[0, I], [I, 0]]."""
    if n % 2:
        raise OddDimension("J needs even n")
    h = n // 2
    rows = [[field.zero] * n for _ in range(n)]
    for i in range(h):
        rows[i][h + i] = field.one
        rows[h + i][i] = field.one
    return Matrix._raw(field, rows)


def canonical_matrix(label, n: int, field=None) -> Matrix:
    if isinstance(label, LType):
        if field is None:
            raise ValueError("field required for L-type labels")
        return make_L_mc(field, n, label.m, 1)
    if isinstance(label, PType):
        return make_L_np(label.p.field, n, label.p)
    if isinstance(label, OuterDiagonal):
        if len(label.classes) != n:
            raise InconsistentLabel(f"label has {len(label.classes)} entries, expected {n}")
        return Matrix.diag(label.classes[0].field, list(label.classes))
    if isinstance(label, OuterAlternate):
        if field is None:
            raise ValueError("field required for the alternate label")
        return make_J(field, n)
    raise InconsistentLabel(f"unknown label: {label!r}")


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InnerClassification:
    """label plus a verified witness: C A C^-1 = p * canonical."""

    label: object
    canonical: Matrix
    C: Matrix
    p: object


def involution_scalar(A: Matrix):
    """q with A^2 = q Id, or raise NotAnInvolution."""
    A2 = A @ A
    if not A2.is_scalar() or A.is_scalar():
        raise NotAnInvolution("Inn_A is not an involution (A^2 not scalar, or A scalar)")
    return A2[0, 0]


def classify_inner(A: Matrix) -> InnerClassification:
    F = A.field
    n = A.n
    q = involution_scalar(A)
    if q.is_square():
        c = q.sqrt()
        m = (A + Matrix.scalar(F, n, c)).rank()
        label = LType(m)
        canon = make_L_mc(F, n, m, 1)
        p = c
    else:
        if n % 2:
            raise VerificationError("non-square A^2 with odd n is impossible")
        rep = q.square_class_rep()
        label = PType(rep)
        canon = make_L_np(F, n, rep)
        p = (q / rep).sqrt()
    ok, C = are_conjugate(A, canon * p)
    if not ok:
        raise VerificationError("involution not conjugate to its predicted canonical form")
    if C @ A != (canon * p) @ C:
        raise VerificationError("classification witness failed verification")
    return InnerClassification(label, canon, C, p)


def inner_label(A: Matrix):
    return classify_inner(A).label


def are_isomorphic(phi1: Automorphism, phi2: Automorphism):
    """Decide isomorphy of two involutions; returns (bool, witness or None).

    Inner witness ``(C, p)`` satisfies C A C^-1 = p B.  Outer witness
    ``(Q, p)`` satisfies Q^T A Q = p B.
    """
    if phi1.n != phi2.n:
        raise DimensionMismatch("automorphisms of different SL(n)")
    if phi1.field != phi2.field:
        raise FieldMismatch("automorphisms over different fields")
    if phi1.parity != phi2.parity:
        return False, None
    if phi1.parity == OUTER:
        from .bilinear import are_congruent_proj

        return are_congruent_proj(phi1.mat, phi2.mat)
    r1 = classify_inner(phi1.mat)
    r2 = classify_inner(phi2.mat)
    if r1.label != r2.label:
        return False, None
    C = r2.C.inverse() @ r1.C
    p = r1.p / r2.p
    A, B = phi1.mat, phi2.mat
    if C @ A != (B * p) @ C:
        raise VerificationError("isomorphism witness failed verification")
    return True, (C, p)
