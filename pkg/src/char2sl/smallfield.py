"""Bridge between :class:`Matrix` and the byte-encoded kernels for GF(q), q <= 256."""
from __future__ import annotations

from functools import lru_cache

from . import kernels
from .errors import BudgetExceeded, InfiniteField, LimitExceeded
from .matrix import Matrix

DEFAULT_BUDGET = 1 << 20


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def sl_order(n: int, q: int) -> int:
    return gl_order(n, q) // (q - 1)


class SmallContext:
    """Tables and encoders for n x n matrices over a small finite field."""

    def __init__(self, field, n: int):
        if not field.is_finite:
            raise InfiniteField(f"{field.descriptor} cannot be enumerated")
        if field.order > 256:
            raise LimitExceeded("byte kernels need q <= 256")
        self.field = field
        self.n = n
        self.q = field.order
        mul, inv, _ = field.tables
        self.mul = bytes(v for row in mul for v in row)
        self.inv = bytes(inv)
        self.identity = bytes(1 if i == j else 0 for i in range(n) for j in range(n))

    # -- conversion -------------------------------------------------------
    def encode(self, M: Matrix) -> bytes:
        return bytes(v.value for row in M.rows for v in row)

    def decode(self, b: bytes) -> Matrix:
        F, n = self.field, self.n
        return Matrix._raw(F, [[F(b[i * n + j]) for j in range(n)] for i in range(n)])

    # -- arithmetic -------------------------------------------------------
    def mul_b(self, a: bytes, b: bytes) -> bytes:
        return kernels.matmul(a, b, self.n, self.q, self.mul)

    def inv_b(self, a: bytes) -> bytes:
        return kernels.inverse(a, self.n, self.q, self.mul, self.inv)

    def det_b(self, a: bytes) -> int:
        return kernels.det(a, self.n, self.q, self.mul, self.inv)

    def t_b(self, a: bytes) -> bytes:
        return kernels.transpose(a, self.n)

    def add_b(self, a: bytes, b: bytes) -> bytes:
        return bytes(x ^ y for x, y in zip(a, b))

    def is_unipotent_b(self, a: bytes) -> bool:
        m = self.add_b(a, self.identity)
        p = m
        for _ in range(self.n - 1):
            p = self.mul_b(p, m)
        return not any(p)

    # -- enumeration ------------------------------------------------------
    def enumerate(self, kind: str, budget: int = DEFAULT_BUDGET):
        code = {"GL": kernels.KIND_GL, "SL": kernels.KIND_SL, "sym": kernels.KIND_SYM}[kind]
        try:
            return kernels.enumerate_matrices(self.n, self.q, self.mul, self.inv, code, budget)
        except ValueError as exc:
            raise BudgetExceeded(f"{kind}({self.n}, {self.q}) exceeds budget {budget}") from exc

    def blob(self, mats) -> bytes:
        return b"".join(mats)


@lru_cache(maxsize=32)
def context(field, n: int) -> SmallContext:
    return SmallContext(field, n)


@lru_cache(maxsize=16)
def _group_cached(field, n, kind, budget):
    ctx = context(field, n)
    mats = ctx.enumerate(kind, budget)
    blob = ctx.blob(mats)
    inv_blob = ctx.blob(ctx.inv_b(m) for m in mats) if kind in ("GL", "SL") else b""
    return tuple(mats), blob, inv_blob


def group(field, n: int, kind: str, budget: int = DEFAULT_BUDGET):
    """(matrices, blob, inverse blob) for GL, SL, or symmetric invertible matrices."""
    return _group_cached(field, n, kind, budget)
