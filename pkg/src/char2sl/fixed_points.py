"""Fixed-point groups H = {X in SL(n, k) : phi(X) = X}."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import kernels
from .errors import DimensionMismatch, NotASquare, SingularMatrix, VerificationError
from .involutions import (
    INNER,
    Automorphism,
    LType,
    OuterAlternate,
    OuterDiagonal,
    PType,
    apply,
    make_J,
)
from .matrix import Matrix
from .smallfield import DEFAULT_BUDGET, context, group

FULL_CHECK_ORDER = 1500


def is_fixed(phi: Automorphism, X: Matrix) -> bool:
    if not X.det():
        raise SingularMatrix("fixed-point test needs an invertible matrix")
    return apply(phi, X) == X


# ---------------------------------------------------------------------------
# coordinate descriptions
# ---------------------------------------------------------------------------

def _two_block_ok(X, i0, j0, s):
    """X[i0:i0+2, j0:j0+2] == [[a, b], [s b, a]]."""
    a, b = X[i0, j0], X[i0, j0 + 1]
    return X[i0 + 1, j0 + 1] == a and X[i0 + 1, j0] == s * b


def _l_type_ok(X: Matrix, m: int, c):
    n = X.n
    s = c * c
    for I in range(m):
        for J in range(m):
            if not _two_block_ok(X, 2 * I, 2 * J, s):
                return False
    for I in range(m):
        for t in range(2 * m, n):
            # even row = c times the odd row above it
            if X[2 * I + 1, t] != c * X[2 * I, t]:
                return False
    for t in range(2 * m, n):
        for J in range(m):
            # from L X = X L on the lower-left border: column 2J = c * column 2J+1
            if X[t, 2 * J] != c * X[t, 2 * J + 1]:
                return False
    return True


def block_structure_predicate(label, X: Matrix, *, A: Matrix | None = None, c=None) -> bool:
    """Coordinate description of the fixed group attached to ``label``.

    L-type: 2x2 blocks [[a, b], [c^2 b, a]] in the upper-left corner and
    c-multiple relations on the borders (c defaults to 1, the canonical label).
    P-type: every 2x2 block [[a, b], [p b, a]].  Outer diagonal: X^T A X = A
    with A the label's diagonal unless given.  Outer alternate: J X J = X.
    """
    F = X.field
    n = X.n
    if isinstance(label, LType):
        return _l_type_ok(X, label.m, F.one if c is None else F.coerce(c))
    if isinstance(label, PType):
        if n % 2:
            raise DimensionMismatch("P-type needs even n")
        return all(_two_block_ok(X, 2 * I, 2 * J, label.p) for I in range(n // 2) for J in range(n // 2))
    if isinstance(label, OuterDiagonal):
        if A is None:
            A = Matrix.diag(F, list(label.classes))
        if A.n != n:
            raise DimensionMismatch("label and matrix sizes differ")
        return X.T @ A @ X == A
    if isinstance(label, OuterAlternate):
        J = make_J(F, n)
        return J @ X @ J == X
    raise TypeError(f"unknown label {label!r}")


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@dataclass
class FixedGroupReport:
    field: str
    n: int
    parity: str
    order: int
    elements: list = dc_field(default_factory=list)
    all_unipotent: bool = False
    abelian: bool = False
    closed: bool = False
    exhaustive_closure: bool = True
    label: object = None
    encoded: list = dc_field(default_factory=list, repr=False)

    def to_json(self, max_elements: int = 64):
        out = {
            "field": self.field,
            "n": self.n,
            "parity": self.parity,
            "order": self.order,
            "all_unipotent": self.all_unipotent,
            "abelian": self.abelian,
            "closed": self.closed,
            "exhaustive_closure": self.exhaustive_closure,
        }
        if self.label is not None:
            out["label"] = self.label.to_json()
        if self.order <= max_elements:
            out["elements"] = [X.to_lists() for X in self.elements]
        else:
            out["sample"] = [X.to_lists() for X in self.elements[:max_elements]]
        return out


def fixed_elements(phi: Automorphism, budget: int = DEFAULT_BUDGET):
    """Byte-encoded members of SL(n, q) fixed by phi, by a full scan."""
    ctx = context(phi.field, phi.n)
    _, blob, _ = group(phi.field, phi.n, "SL", budget)
    a = ctx.encode(phi.mat)
    if phi.parity == INNER:
        return kernels.commuting(blob, a, ctx.n, ctx.q, ctx.mul)
    # A^-T X^-T A^T = X  <=>  X^T A^T X = A^T
    return kernels.preserving(blob, ctx.t_b(a), ctx.n, ctx.q, ctx.mul)


def _closure(ctx, elems, rng):
    members = set(elems)
    if len(elems) <= FULL_CHECK_ORDER:
        pairs = ((x, y) for x in elems for y in elems)
        exhaustive = True
    else:
        pairs = ((rng.choice(elems), rng.choice(elems)) for _ in range(20000))
        exhaustive = False
    closed, abelian = True, True
    for x, y in pairs:
        xy = ctx.mul_b(x, y)
        if xy not in members:
            closed = False
        if abelian and xy != ctx.mul_b(y, x):
            abelian = False
    closed = closed and all(ctx.inv_b(x) in members for x in elems)
    return closed, abelian, exhaustive


def enumerate_fixed_group(phi: Automorphism, budget: int = DEFAULT_BUDGET, *, seed: int = 0, label=None):
    ctx = context(phi.field, phi.n)
    elems = sorted(fixed_elements(phi, budget))
    closed, abelian, exhaustive = _closure(ctx, elems, random.Random(seed))
    if not closed:
        raise VerificationError("fixed-point set is not closed under products and inverses")
    return FixedGroupReport(
        field=phi.field.descriptor,
        n=phi.n,
        parity=phi.parity,
        order=len(elems),
        elements=[ctx.decode(e) for e in elems],
        all_unipotent=all(ctx.is_unipotent_b(e) for e in elems),
        abelian=abelian,
        closed=closed,
        exhaustive_closure=exhaustive,
        label=label,
        encoded=elems,
    )


def predicate_set(label, field, n: int, budget: int = DEFAULT_BUDGET, *, A: Matrix | None = None):
    """Byte-encoded members of SL(n, q) satisfying the coordinate description."""
    ctx = context(field, n)
    mats, _, _ = group(field, n, "SL", budget)
    return sorted(m for m in mats if block_structure_predicate(label, ctx.decode(m), A=A))


def transport_fixed_group(C: Matrix, H1, H2) -> bool:
    """True when X -> C X C^-1 maps the element list H1 bijectively onto H2."""
    Ci = C.inverse()
    image = {C @ X @ Ci for X in H1}
    return len(image) == len(H1) and image == set(H2)


# ---------------------------------------------------------------------------
# n = 2 models
# ---------------------------------------------------------------------------

def additive_model(field, y) -> Matrix:
    """M(y) = Id + y N with N = [[1, 1], [1, 1]]."""
    return Matrix(field, [[field.one + y, y], [y, field.one + y]])


def check_additive_model(field, elements) -> bool:
    """H(L_1) = {M(y) : y in k} and y -> M(y) is a homomorphism from (k, +)."""
    models = {y: additive_model(field, y) for y in field.elements()}
    if set(models.values()) != set(elements) or len(set(models.values())) != field.order:
        return False
    return all(models[a] @ models[b] == models[a + b] for a in models for b in models)


def verify_unipotent_model(p, field=None, *, budget: int = DEFAULT_BUDGET, rng=None) -> bool:
    """Check the conjugation of L_p to sqrt(p) B and the unipotent fixed group of Inn_B."""
    field = field or p.field
    p = field.coerce(p)
    if not p.is_square():
        raise NotASquare(f"{field.format_element(p)} has no square root in {field.descriptor}")
    s = p.sqrt()
    one, zero = field.one, field.zero
    C = Matrix(field, [[one, zero], [s, one]])
    A = Matrix(field, [[zero, one], [p, zero]])
    ok = C @ A @ C == Matrix(field, [[s, one], [zero, s]])
    B = Matrix(field, [[one, one / s], [zero, one]])
    ok = ok and C @ A @ C.inverse() == B * s
    if field.is_finite:
        H_A = [context(field, 2).decode(e) for e in fixed_elements(Automorphism.inner(A), budget)]
        H_B = [context(field, 2).decode(e) for e in fixed_elements(Automorphism.inner(B), budget)]
        unip = {Matrix(field, [[one, t], [zero, one]]) for t in field.elements()}
        ok = ok and set(H_B) == unip and transport_fixed_group(C, H_A, H_B)
    else:
        rng = rng or random.Random(0)
        for _ in range(16):
            t = field.random_element(rng)
            U = Matrix(field, [[one, t], [zero, one]])
            ok = ok and B @ U == U @ B and is_fixed(Automorphism.inner(A), C.inverse() @ U @ C)
    return bool(ok)
