"""The rational function field F_q(x), q = 2^r.

This is the imperfect field used for everything that needs more than one
square class: k* / (k*)^2 is infinite here, and k is a 2-dimensional vector
space over its subfield of squares with basis {1, x}.
"""
from __future__ import annotations

import random

from .errors import DivisionByZero, FieldMismatch, LimitExceeded, NotASquare, ParseError, ZeroInput
from .gf2m import GF2m, GFElement
from .poly import Poly, _split_top_level, is_square_poly, poly_gcd, squarefree_kernel

MAX_RATFUNC_DEGREE = 64


class RatFuncField:
    is_finite = False
    characteristic = 2

    def __init__(self, base: GF2m, *, max_degree: int = MAX_RATFUNC_DEGREE):
        self.base = base
        self.max_degree = max_degree
        self.zero = RatFunc._make(self, Poly.zero(base), Poly.one(base))
        self.one = RatFunc._make(self, Poly.one(base), Poly.one(base))

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and other.base == self.base

    def __hash__(self):
        return hash(("ratfunc", self.base))

    def __repr__(self):
        return f"RatFuncField(q={self.base.order})"

    @property
    def descriptor(self) -> str:
        return f"ratfunc:q={self.base.order}"

    @property
    def x(self) -> "RatFunc":
        return RatFunc._make(self, Poly.x(self.base), Poly.one(self.base))

    generator = x

    # -- construction ---------------------------------------------------
    def __call__(self, num, den=None) -> "RatFunc":
        if isinstance(num, str) and den is None:
            return self.parse_element(num)
        num = self._as_poly(num)
        den = Poly.one(self.base) if den is None else self._as_poly(den)
        return RatFunc.reduced(self, num, den)

    def _as_poly(self, value) -> Poly:
        if isinstance(value, Poly):
            if value.field != self.base:
                raise FieldMismatch("polynomial over a different base field")
            return value
        if isinstance(value, str):
            return Poly.parse(self.base, value, "x")
        return Poly.const(self.base, self.base.coerce(value))

    def coerce(self, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.field is not self and value.field != self:
                raise FieldMismatch(f"{value.field!r} vs {self!r}")
            return value
        if isinstance(value, GFElement):
            if value.field != self.base:
                raise FieldMismatch("constant from a different finite field")
            return RatFunc._make(self, Poly.const(self.base, value), Poly.one(self.base))
        if isinstance(value, int):
            return self.one if value & 1 else self.zero
        raise FieldMismatch(f"cannot coerce {value!r} into {self!r}")

    def elements(self):
        from .errors import InfiniteField

        raise InfiniteField("F_q(x) cannot be enumerated")

    def random_element(self, rng: random.Random | None = None, max_deg: int = 4, nonzero: bool = False) -> "RatFunc":
        rng = rng or random
        while True:
            num = Poly(self.base, [self.base.random_element(rng) for _ in range(rng.randint(0, max_deg) + 1)])
            den_deg = rng.randint(0, max_deg)
            den = Poly(self.base, [self.base.random_element(rng) for _ in range(den_deg)] + [self.base.one])
            if nonzero and not num:
                continue
            return RatFunc.reduced(self, num, den)

    def random_polynomial_element(self, rng: random.Random, max_deg: int, nonzero: bool = True) -> "RatFunc":
        while True:
            num = Poly(self.base, [self.base.random_element(rng) for _ in range(max_deg + 1)])
            if num or not nonzero:
                return RatFunc._make(self, num, Poly.one(self.base))

    def parse_element(self, text: str) -> "RatFunc":
        s = text.replace(" ", "")
        parts = _split_top_level(s, "/")
        if len(parts) == 1:
            num, den = parts[0], "1"
        elif len(parts) == 2:
            num, den = parts
        else:
            raise ParseError(f"bad rational function {text!r}")
        num_p = Poly.parse(self.base, _strip_parens(num), "x")
        den_p = Poly.parse(self.base, _strip_parens(den), "x")
        if not den_p:
            raise ParseError(f"zero denominator in {text!r}")
        return RatFunc.reduced(self, num_p, den_p)

    def format_element(self, a: "RatFunc") -> str:
        if a.den.is_one():
            return a.num.to_text("x")
        num = a.num.to_text("x")
        den = a.den.to_text("x")
        if "+" in num:
            num = f"({num})"
        if "+" in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


def _strip_parens(s: str) -> str:
    while s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1]
    return s


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


class RatFunc:
    """A reduced fraction num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("field", "num", "den")

    @classmethod
    def _make(cls, field, num, den):
        obj = cls.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def reduced(cls, field, num: Poly, den: Poly) -> "RatFunc":
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return field.zero
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.lc
        if lc != field.base.one:
            inv = field.base.one / lc
            num = num * inv
            den = den * inv
        if max(num.degree, den.degree) > field.max_degree:
            raise LimitExceeded(f"rational function degree exceeds cap {field.max_degree}")
        return cls._make(field, num, den)

    def _other(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._other(other)
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc.reduced(self.field, self.num + o.num, self.den)
        return RatFunc.reduced(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if not self.num or not o.num:
            return self.field.zero
        return RatFunc.reduced(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if not o.num:
            raise DivisionByZero("division by zero rational function")
        return RatFunc.reduced(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._other(other) / self

    def inverse(self):
        return self.field.one / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc.reduced(self.field, self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, GFElement)):
            return self == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    # -- squares ----------------------------------------------------------
    def is_square(self) -> bool:
        """True iff this element lies in (k*)^2 or is zero.

        For a reduced fraction both numerator and denominator must be square
        polynomials (the base field is perfect, so constants are squares).
        """
        if not self.num:
            return True
        return is_square_poly(self.num)[0] and is_square_poly(self.den)[0]

    def sqrt(self) -> "RatFunc":
        if not self.num:
            return self
        ok_n, rn = is_square_poly(self.num)
        ok_d, rd = is_square_poly(self.den)
        if not (ok_n and ok_d):
            raise NotASquare(f"{self} is not a square in {self.field.descriptor}")
        return RatFunc.reduced(self.field, rn, rd)

    def square_class_rep(self) -> "RatFunc":
        """Monic odd-multiplicity part of num*den; equal outputs iff the ratio is a square."""
        if not self.num:
            raise ZeroInput("square class of zero")
        kern = squarefree_kernel(self.num * self.den)
        return RatFunc._make(self.field, kern, Poly.one(self.field.base))

    def frobenius_split(self):
        """Return (g, h) with self = g**2 + x * h**2 (k = k^2 + x k^2)."""
        base = self.field.base
        f = self.num * self.den
        even = Poly(base, [c.sqrt() for c in f.coeffs[0::2]])
        odd = Poly(base, [c.sqrt() for c in f.coeffs[1::2]])
        return RatFunc.reduced(self.field, even, self.den), RatFunc.reduced(self.field, odd, self.den)

    def frobenius(self) -> "RatFunc":
        return self * self

    def sort_key(self):
        return (1, self.num.sort_key(), self.den.sort_key())

    def __repr__(self):
        return f"RatFunc({self.field.format_element(self)!r})"

    def __str__(self):
        return self.field.format_element(self)
