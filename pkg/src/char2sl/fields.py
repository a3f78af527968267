"""Field descriptors and the field-agnostic entry points.

Descriptor grammar::

    gf2                      the prime field
    gf2e:r=<r>[:mod=<hex>]   GF(2^r), optional modulus bitmask
    ratfunc:q=<2^r>          F_q(x)
"""
from __future__ import annotations

import re
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch, InfiniteField, ParseError, ZeroInput
from .gf2m import GF2m, GFElement
from .ratfunc import RatFunc, RatFuncField

__all__ = [
    "GF2m",
    "RatFuncField",
    "GFElement",
    "RatFunc",
    "parse_field",
    "arith",
    "sqrt",
    "is_square",
    "square_class_rep",
    "enumerate_field",
]

_GF2E = re.compile(r"^gf2e:r=(\d+)(?::mod=(0x[0-9a-fA-F]+|\d+))?$")
_RATFUNC = re.compile(r"^ratfunc:q=(\d+)$")


@lru_cache(maxsize=64)
def parse_field(descriptor: str):
    """Build a field from its descriptor string."""
    d = descriptor.strip()
    if d == "gf2":
        return GF2m(1)
    m = _GF2E.match(d)
    if m:
        r = int(m.group(1))
        mod = m.group(2)
        modulus = None if mod is None else int(mod, 0)
        return GF2m(r, modulus)
    m = _RATFUNC.match(d)
    if m:
        q = int(m.group(1))
        if q < 2 or q & (q - 1):
            raise ParseError(f"q={q} is not a power of two")
        return RatFuncField(GF2m(q.bit_length() - 1))
    raise ParseError(f"unknown field descriptor {descriptor!r}")


def arith(a, b, op: str):
    """Exact ``add``/``mul``/``div`` of two elements of one field."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def sqrt(a):
    return a.sqrt()


def is_square(a) -> bool:
    return a.is_square()


def square_class_rep(a):
    if not a:
        raise ZeroInput("zero has no square class")
    return a.square_class_rep()


def enumerate_field(field):
    if not field.is_finite:
        raise InfiniteField(f"{field.descriptor} is infinite")
    return field.elements()
