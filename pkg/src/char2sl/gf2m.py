"""Binary extension fields GF(2^r).

Elements are stored as coefficient bitmasks of polynomials in ``t`` reduced
modulo an irreducible polynomial over F_2.  Bit ``i`` of the mask is the
coefficient of ``t**i``, so ``0x3`` encodes ``t + 1``.
"""
from __future__ import annotations

import random
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch, LimitExceeded, NotIrreducible, ParseError

MAX_EXTENSION_DEGREE = 24

# Lexicographically smallest irreducible polynomial of each degree (degree 1
# uses t+1 so that every modulus has a constant term).
DEFAULT_MODULI = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B, 17: 0x20009, 18: 0x40009, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001B,
}

_TABLE_LIMIT = 256


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bitmask polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def bitpoly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible_bitpoly(f: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(f)//2."""
    r = f.bit_length() - 1
    if r < 1:
        return False
    for g in range(2, 1 << (r // 2 + 1)):
        if bitpoly_mod(f, g) == 0:
            return False
    return True


class GF2m:
    """The finite field with ``2**r`` elements."""

    is_finite = True
    characteristic = 2

    def __init__(self, r: int, modulus: int | None = None, *, max_degree: int = MAX_EXTENSION_DEGREE):
        if r < 1:
            raise ValueError("extension degree must be >= 1")
        if r > max_degree:
            raise LimitExceeded(f"extension degree {r} exceeds cap {max_degree}")
        if modulus is None:
            modulus = DEFAULT_MODULI[r]
        if modulus.bit_length() - 1 != r:
            raise NotIrreducible(f"modulus {modulus:#x} does not have degree {r}")
        if not _irreducible_cached(modulus):
            raise NotIrreducible(f"modulus {modulus:#x} is reducible over F_2")
        self.r = r
        self.modulus = modulus
        self.order = 1 << r
        self._tables = None
        self.zero = GFElement(self, 0)
        self.one = GFElement(self, 1)

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, GF2m) and other.r == self.r and other.modulus == self.modulus

    def __hash__(self):
        return hash(("gf2m", self.r, self.modulus))

    def __repr__(self):
        return f"GF2m({self.r}, {self.modulus:#x})"

    @property
    def descriptor(self) -> str:
        if self.r == 1:
            return "gf2"
        if self.modulus == DEFAULT_MODULI[self.r]:
            return f"gf2e:r={self.r}"
        return f"gf2e:r={self.r}:mod={self.modulus:#x}"

    # -- construction ---------------------------------------------------
    def __call__(self, value) -> "GFElement":
        if isinstance(value, GFElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, str):
            return self.parse_element(value)
        if not 0 <= value < self.order:
            raise ValueError(f"bitmask {value:#x} out of range for GF(2^{self.r})")
        return GFElement(self, int(value))

    def coerce(self, value) -> "GFElement":
        """Accept field elements or Python ints (ints are read mod 2)."""
        if isinstance(value, GFElement):
            if value.field is not self and value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            return self.one if value & 1 else self.zero
        raise FieldMismatch(f"cannot coerce {value!r} into {self!r}")

    @property
    def generator(self) -> "GFElement":
        """Residue class of ``t``."""
        return GFElement(self, 2 % self.modulus if self.r > 1 else 1)

    def elements(self):
        return [GFElement(self, v) for v in range(self.order)]

    def nonzero_elements(self):
        return [GFElement(self, v) for v in range(1, self.order)]

    def random_element(self, rng: random.Random | None = None, nonzero: bool = False) -> "GFElement":
        rng = rng or random
        lo = 1 if nonzero else 0
        return GFElement(self, rng.randrange(lo, self.order))

    def parse_element(self, text: str) -> "GFElement":
        s = text.strip().lower()
        try:
            value = int(s, 16) if s.startswith("0x") else int(s)
        except ValueError:
            raise ParseError(f"bad finite-field element {text!r}") from None
        if not 0 <= value < self.order:
            raise ParseError(f"element {text!r} out of range for GF(2^{self.r})")
        return GFElement(self, value)

    def format_element(self, a: "GFElement") -> str:
        return f"{a.value:#x}"

    # -- raw integer arithmetic ----------------------------------------
    def _build_tables(self):
        q = self.order
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = bitpoly_mod(clmul(a, b), self.modulus)
                mul[a][b] = mul[b][a] = v
        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            inv[a] = row.index(1)
        sqrt = [0] * q
        for a in range(q):
            sqrt[mul[a][a]] = a
        self._tables = (mul, inv, sqrt)
        return self._tables

    @property
    def tables(self):
        """(mul, inv, sqrt) lookup tables; only for fields with at most 256 elements."""
        if self.order > _TABLE_LIMIT:
            raise LimitExceeded("lookup tables are only built for q <= 256")
        return self._tables or self._build_tables()

    def mul_raw(self, a: int, b: int) -> int:
        if self.order <= _TABLE_LIMIT:
            return (self._tables or self._build_tables())[0][a][b]
        return bitpoly_mod(clmul(a, b), self.modulus)

    def inv_raw(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.order <= _TABLE_LIMIT:
            return (self._tables or self._build_tables())[1][a]
        # a^(q-2)
        return self.pow_raw(a, self.order - 2)

    def pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul_raw(result, a)
            a = self.mul_raw(a, a)
            e >>= 1
        return result

    def sqrt_raw(self, a: int) -> int:
        if self.order <= _TABLE_LIMIT:
            return (self._tables or self._build_tables())[2][a]
        for _ in range(self.r - 1):
            a = self.mul_raw(a, a)
        return a


@lru_cache(maxsize=None)
def _irreducible_cached(f: int) -> bool:
    return is_irreducible_bitpoly(f)


class GFElement:
    """An element of GF(2^r); immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF2m, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, GFElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other & 1
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(self.field, self.value ^ v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(self.field, self.field.mul_raw(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(self.field, self.field.mul_raw(self.value, self.field.inv_raw(v)))

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(self.field, self.field.mul_raw(v, self.field.inv_raw(self.value)))

    def __pow__(self, e: int):
        if e < 0:
            return GFElement(self.field, self.field.pow_raw(self.field.inv_raw(self.value), -e))
        return GFElement(self.field, self.field.pow_raw(self.value, e))

    def inverse(self):
        return GFElement(self.field, self.field.inv_raw(self.value))

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == (other & 1)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.r, self.value))

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    # every element of a finite field of characteristic 2 is a square
    def is_square(self) -> bool:
        return True

    def sqrt(self) -> "GFElement":
        """The unique square root, ``a**(2**(r-1))``."""
        return GFElement(self.field, self.field.sqrt_raw(self.value))

    def square_class_rep(self) -> "GFElement":
        if self.value == 0:
            from .errors import ZeroInput

            raise ZeroInput("square class of zero")
        return self.field.one

    def frobenius(self) -> "GFElement":
        return GFElement(self.field, self.field.mul_raw(self.value, self.value))

    def sort_key(self):
        return (0, self.value)

    def __repr__(self):
        return f"GFElement({self.value:#x}, r={self.field.r})"

    def __str__(self):
        return f"{self.value:#x}"
