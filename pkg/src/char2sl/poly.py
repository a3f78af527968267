"""Dense univariate polynomials over a characteristic-2 field.

Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -1.
"""
from __future__ import annotations

import re

from .errors import DivisionByZero, FieldMismatch, LimitExceeded, NotASquare, ParseError, ZeroInput

MAX_DEGREE = 128


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field, coeffs):
        # coeffs already coerced; strip only
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = tuple(cs)
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def one(cls, field):
        return cls._raw(field, (field.one,))

    @classmethod
    def const(cls, field, c):
        return cls._raw(field, (field.coerce(c),))

    @classmethod
    def monomial(cls, field, k: int, c=1):
        c = field.coerce(c)
        return cls._raw(field, (field.zero,) * k + (c,))

    @classmethod
    def x(cls, field):
        return cls.monomial(field, 1)

    # -- basic properties -----------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    @property
    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == self.field.one:
            return self
        inv = self.field.one / lc
        return Poly._raw(self.field, tuple(c * inv for c in self.coeffs))

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    # -- arithmetic -----------------------------------------------------
    def _check(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        return Poly.const(self.field, other)

    def __add__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(self.field, out)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.field.coerce(other)
            if not c:
                return Poly.zero(self.field)
            return Poly._raw(self.field, tuple(x * c for x in self.coeffs))
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly.zero(self.field), self
        inv_lc = self.field.one / other.coeffs[-1]
        quot = [self.field.zero] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv_lc
            quot[k - db] = f
            for j, y in enumerate(bc):
                if y:
                    rem[k - db + j] = rem[k - db + j] + f * y
        return Poly._raw(self.field, quot), Poly._raw(self.field, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other) -> bool:
        """True iff ``self`` divides ``other``."""
        if not self.coeffs:
            return not other.coeffs
        return not (other % self).coeffs

    def derivative(self) -> "Poly":
        # char 2: odd exponents survive with coefficient 1, even vanish
        zero = self.field.zero
        return Poly._raw(self.field, tuple(c if i % 2 else zero for i, c in enumerate(self.coeffs))[1:])

    def __call__(self, value):
        """Evaluate by Horner's rule at a field element or square matrix."""
        from .matrix import Matrix

        if isinstance(value, Matrix):
            n = value.nrows
            result = Matrix.zeros(value.field, n, n)
            ident = Matrix.identity(value.field, n)
            for c in reversed(self.coeffs):
                result = result @ value + ident * c
            return result
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, fn, field=None) -> "Poly":
        field = field or self.field
        return Poly(field, [fn(c) for c in self.coeffs])

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and (not self.coeffs or self.field == other.field)
        if isinstance(other, int):
            return self == Poly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self):
        return (self.degree, tuple(c.sort_key() for c in reversed(self.coeffs)))

    # -- text -----------------------------------------------------------
    def to_text(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            ctext = self.field.format_element(c)
            if any(ch in ctext for ch in "+/ "):
                ctext = f"({ctext})"
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                terms.append("1" if c == self.field.one else ctext)
            elif c == self.field.one:
                terms.append(mono)
            else:
                terms.append(f"{ctext}*{mono}")
        return "+".join(terms)

    @property
    def default_var(self) -> str:
        # over F_q(x) the indeterminate name is taken by the coefficients
        return "x" if self.field.is_finite else "t"

    def __str__(self):
        return self.to_text(self.default_var)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, field, text: str, var: str = "x") -> "Poly":
        """Parse sparse text such as ``x^3+x+1`` or ``0x2*x^2+0x3``."""
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial")
        terms = _split_top_level(s, "+")
        acc: dict[int, object] = {}
        term_re = re.compile(rf"^(?:(?P<c>\(.*\)|[^*()]+)\*)?{re.escape(var)}(?:\^(?P<e>\d+))?$")
        for term in terms:
            if not term:
                raise ParseError(f"empty term in {text!r}")
            m = term_re.match(term)
            if m:
                ctext = m.group("c")
                coeff = field.one if ctext is None else _parse_coeff(field, ctext)
                e = int(m.group("e")) if m.group("e") else 1
            else:
                coeff = _parse_coeff(field, term)
                e = 0
            acc[e] = acc.get(e, field.zero) + coeff
        deg = max(acc)
        if deg > 4 * MAX_DEGREE:
            raise LimitExceeded(f"degree {deg} too large")
        return cls(field, [acc.get(i, field.zero) for i in range(deg + 1)])


def _split_top_level(s: str, sep: str):
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _parse_coeff(field, text: str):
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    try:
        return field.parse_element(text)
    except ParseError:
        raise
    except Exception as exc:  # noqa: BLE001
        raise ParseError(f"bad coefficient {text!r}: {exc}") from None


# ---------------------------------------------------------------------------
# gcd and squarefree machinery
# ---------------------------------------------------------------------------

def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the plain Euclidean algorithm; gcd(0, 0) = 0."""
    f = f.monic()
    g = g.monic()
    while g.coeffs:
        f, g = g, (f % g).monic()
    return f


def poly_xgcd(f: Poly, g: Poly):
    """Return (d, s, t) with s*f + t*g = d, d monic."""
    field = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(field), Poly.zero(field)
    t0, t1 = Poly.zero(field), Poly.one(field)
    while r1.coeffs:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.coeffs:
        return r0, s0, t0
    inv = field.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if not f.coeffs or not g.coeffs:
        return Poly.zero(f.field)
    return (f * g).exact_div(poly_gcd(f, g)).monic()


def poly_sqrt(f: Poly) -> Poly:
    """Square root of a polynomial with zero derivative (coefficientwise Frobenius root)."""
    if f.derivative().coeffs:
        raise NotASquare(f"{f} is not a square")
    return Poly._raw(f.field, tuple(c.sqrt() for c in f.coeffs[::2]))


def is_square_poly(f: Poly):
    """Return ``(True, g)`` with ``g*g == f`` when f is a square, else ``(False, None)``.

    In characteristic 2, f is a square iff f' = 0 and every even-degree
    coefficient has a square root in the coefficient field.
    """
    if f.derivative().coeffs:
        return False, None
    try:
        root = Poly._raw(f.field, tuple(c.sqrt() for c in f.coeffs[::2]))
    except NotASquare:
        return False, None
    return True, root


def squarefree_decomposition(f: Poly):
    """Return [(a_i, i), ...] with f = lc * prod a_i**i, each a_i monic squarefree, pairwise coprime.

    Characteristic-2 variant of Yun's algorithm: the derivative-zero residue
    is a perfect square and is handled by recursion on its square root.
    Requires a perfect coefficient field (finite base).
    """
    if not f.coeffs:
        raise ZeroInput("squarefree decomposition of zero")
    f = f.monic()
    factors: dict[int, Poly] = {}
    _sqf_into(f, 1, factors)
    return sorted(((p, i) for i, p in factors.items() if p.degree > 0), key=lambda t: t[1])


def _sqf_into(f: Poly, scale: int, out: dict):
    if f.degree <= 0:
        return
    one = Poly.one(f.field)
    d = f.derivative()
    if not d.coeffs:
        _sqf_into(poly_sqrt(f), 2 * scale, out)
        return
    c = poly_gcd(f, d)
    w = f.exact_div(c).monic()
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        fac = w.exact_div(y).monic()
        if fac.degree > 0:
            key = i * scale
            out[key] = out.get(key, one) * fac
        w = y
        c = c.exact_div(y).monic()
        i += 1
    if c.degree > 0:
        _sqf_into(poly_sqrt(c), 2 * scale, out)


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f (the radical)."""
    result = Poly.one(f.field)
    for p, _ in squarefree_decomposition(f):
        result = result * p
    return result


def squarefree_kernel(f: Poly) -> Poly:
    """Monic product of the irreducible factors occurring to an odd power.

    f / squarefree_kernel(f) is a square times a constant; this is the
    polynomial that labels the square class of f.
    """
    result = Poly.one(f.field)
    for p, i in squarefree_decomposition(f):
        if i % 2:
            result = result * p
    return result


def squarefree_over_closure(f: Poly) -> bool:
    """True iff f has no repeated root in the algebraic closure: gcd(f, f') = 1."""
    if not f.coeffs:
        raise ZeroInput("zero polynomial")
    return poly_gcd(f, f.derivative()).degree == 0


def check_degree(f: Poly, cap: int = MAX_DEGREE):
    if f.degree > cap:
        raise LimitExceeded(f"polynomial degree {f.degree} exceeds cap {cap}")
    return f
