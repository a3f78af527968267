"""Elements of the symmetric variety Q_k = {X phi(X)^-1 : X in SL(n, k)}."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DimensionMismatch, SingularMatrix, ZeroInput
from .involutions import INNER, Automorphism, apply
from .matrix import Matrix
from .poly import Poly
from .smallfield import DEFAULT_BUDGET, context, group


@dataclass(frozen=True)
class VarietyElement:
    source: Matrix
    value: Matrix
    semisimple: bool


def q_element(phi: Automorphism, X: Matrix) -> VarietyElement:
    """V = X phi(X)^-1.

    Inner: X A X^-1 A^-1.  Outer (A symmetric): X A^-1 X^T A.
    """
    if not X.det():
        raise SingularMatrix("variety elements need an invertible source")
    A, Ai = phi.mat, phi.inv
    if phi.parity == INNER:
        V = X @ A @ X.inverse() @ Ai
    else:
        V = X @ apply(phi, X).inverse()
    return VarietyElement(X, V, V.is_semisimple())


def alt_outer_form(phi: Automorphism, X: Matrix) -> Matrix:
    """X A X^T A^-1, the alternative outer expression; equals q_element when A^2 is scalar."""
    return X @ phi.mat @ X.T @ phi.inv


def _n2_entries(X: Matrix, p):
    if X.nrows != 2 or X.ncols != 2:
        raise DimensionMismatch("formula applies to 2x2 matrices")
    if not p:
        raise ZeroInput("p must be nonzero")
    if X.det() != X.field.one:
        raise SingularMatrix("formula needs det X = 1")
    return X[0, 0], X[0, 1], X[1, 0], X[1, 1]


def formula_expression(p, X: Matrix):
    """a^2 + d^2 + p b^2 + c^2 / p for X = [[a, b], [c, d]]."""
    a, b, c, d = _n2_entries(X, p)
    return a * a + d * d + p * b * b + c * c / p


def semisimple_by_formula_n2(p, X: Matrix) -> bool:
    return bool(formula_expression(p, X))


def expanded_form_n2(p, X: Matrix) -> Matrix:
    """Closed form of X L_p X^-1 L_p^-1 as a matrix in a, b, c, d, p."""
    a, b, c, d = _n2_entries(X, p)
    off = p * b * d + a * c
    return Matrix(X.field, [[p * b * b + a * a, off / p], [off, (p * d * d + c * c) / p]])


def candidate_minpoly_n2(p, X: Matrix) -> Poly:
    """t^2 + t (a^2 + d^2 + p b^2 + c^2/p) + (p d b + a c)^2 / p."""
    a, b, c, d = _n2_entries(X, p)
    s = formula_expression(p, X)
    const = (p * d * b + a * c) ** 2 / p
    return Poly(X.field, [const, s, X.field.one])


@dataclass
class VarietyReport:
    field: str
    n: int
    parity: str
    size: int
    semisimple: int
    non_semisimple: int
    elements: dict = dc_field(default_factory=dict, repr=False)

    def to_json(self, max_elements: int = 32):
        sample = sorted(self.elements.items(), key=lambda kv: kv[0])[:max_elements]
        return {
            "field": self.field,
            "n": self.n,
            "parity": self.parity,
            "size": self.size,
            "semisimple": self.semisimple,
            "non_semisimple": self.non_semisimple,
            "sample": [{"value": ve.value.to_lists(), "source": ve.source.to_lists(), "semisimple": ve.semisimple}
                       for _, ve in sample],
        }


def enumerate_variety(phi: Automorphism, budget: int = DEFAULT_BUDGET) -> VarietyReport:
    """Deduplicated {q_element(phi, X) : X in SL(n, q)} keyed by encoded value."""
    F, n = phi.field, phi.n
    ctx = context(F, n)
    mats, _, _ = group(F, n, "SL", budget)
    a = ctx.encode(phi.mat)
    ai = ctx.inv_b(a)
    seen = {}
    for x in mats:
        if phi.parity == INNER:
            v = ctx.mul_b(ctx.mul_b(ctx.mul_b(x, a), ctx.inv_b(x)), ai)
        else:
            v = ctx.mul_b(ctx.mul_b(ctx.mul_b(x, ai), ctx.t_b(x)), a)
        if v not in seen:
            seen[v] = x
    elements = {}
    for v, x in seen.items():
        V = ctx.decode(v)
        elements[v] = VarietyElement(ctx.decode(x), V, V.is_semisimple())
    ss = sum(1 for e in elements.values() if e.semisimple)
    return VarietyReport(F.descriptor, n, phi.parity, len(elements), ss, len(elements) - ss, elements)


@dataclass
class FormulaAudit:
    """Comparison of the n = 2 formula with the direct minimal-polynomial test."""

    field: str
    p: object
    checked: int = 0
    agree_nonscalar: int = 0
    disagree_nonscalar: list = dc_field(default_factory=list)
    scalar_exceptions: list = dc_field(default_factory=list)
    expanded_mismatch: list = dc_field(default_factory=list)
    minpoly_failures: list = dc_field(default_factory=list)

    @property
    def formula_ok(self) -> bool:
        return not self.disagree_nonscalar and not self.expanded_mismatch

    @property
    def minpoly_ok(self) -> bool:
        return not self.minpoly_failures

    def to_json(self):
        F = self.p.field
        return {
            "field": self.field,
            "p": F.format_element(self.p),
            "checked": self.checked,
            "agree_nonscalar": self.agree_nonscalar,
            "disagree_nonscalar": [X.to_lists() for X in self.disagree_nonscalar],
            "scalar_exceptions": [X.to_lists() for X in self.scalar_exceptions],
            "expanded_mismatch": len(self.expanded_mismatch),
            "candidate_minpoly_failures": len(self.minpoly_failures),
            "formula_ok": self.formula_ok,
            "candidate_minpoly_ok": self.minpoly_ok,
        }


def audit_formula_n2(field, p, budget: int = DEFAULT_BUDGET) -> FormulaAudit:
    """Run every X in SL(2, q) through the formula, the expanded form, and the candidate M_X."""
    p = field.coerce(p)
    A = Matrix(field, [[field.zero, field.one], [p, field.zero]])
    phi = Automorphism.inner(A)
    ctx = context(field, 2)
    mats, _, _ = group(field, 2, "SL", budget)
    audit = FormulaAudit(field.descriptor, p)
    for x in mats:
        X = ctx.decode(x)
        V = q_element(phi, X).value
        audit.checked += 1
        if expanded_form_n2(p, X) != V:
            audit.expanded_mismatch.append(X)
        direct = V.is_semisimple()
        by_formula = semisimple_by_formula_n2(p, X)
        if V.is_scalar():
            if direct != by_formula:
                audit.scalar_exceptions.append(X)
        elif direct == by_formula:
            audit.agree_nonscalar += 1
        else:
            audit.disagree_nonscalar.append(X)
        if not candidate_minpoly_n2(p, X)(V).is_zero():
            audit.minpoly_failures.append(X)
    return audit
