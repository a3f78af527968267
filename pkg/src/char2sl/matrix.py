"""Exact matrices over a characteristic-2 field.

Besides the usual arithmetic this module computes characteristic and minimal
polynomials, invariant factors (Smith form of ``tI - A`` over ``k[t]``),
rational canonical forms with an explicit change of basis, and constructive
conjugacy witnesses.
"""
from __future__ import annotations

from .errors import DimensionMismatch, FieldMismatch, LimitExceeded, SingularMatrix, VerificationError
from .poly import Poly, poly_lcm, squarefree_over_closure

MAX_DIM = 16


class Matrix:
    """Immutable matrix; ``rows`` is a tuple of tuples of field elements."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, field, rows):
        rows = tuple(tuple(field.coerce(v) for v in row) for row in rows)
        if len({len(r) for r in rows}) > 1:
            raise DimensionMismatch("ragged matrix rows")
        self._init(field, rows)

    def _init(self, field, rows):
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if self.nrows > MAX_DIM or self.ncols > MAX_DIM:
            raise LimitExceeded(f"matrix dimension exceeds cap {MAX_DIM}")
        self._hash = None

    @classmethod
    def _raw(cls, field, rows):
        m = cls.__new__(cls)
        m._init(field, tuple(tuple(r) for r in rows))
        return m

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, field, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = field.zero
        return cls._raw(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        return cls.scalar(field, n, field.one)

    @classmethod
    def scalar(cls, field, n, c):
        c = field.coerce(c)
        z = field.zero
        return cls._raw(field, [[c if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, field, entries):
        entries = [field.coerce(e) for e in entries]
        n = len(entries)
        z = field.zero
        return cls._raw(field, [[entries[i] if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, field, blocks):
        n = sum(b.nrows for b in blocks)
        out = [[field.zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls._raw(field, out)

    @classmethod
    def from_columns(cls, field, cols):
        cols = [list(c) for c in cols]
        n = len(cols[0]) if cols else 0
        return cls._raw(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @classmethod
    def from_ints(cls, field, rows):
        """Rows of ints read as bitmasks (finite fields) or 0/1 constants."""
        if field.is_finite:
            return cls._raw(field, [[field(v) for v in row] for row in rows])
        return cls(field, rows)

    @classmethod
    def elementary(cls, field, n, i, j, c=1):
        """Id + c*E_ij."""
        rows = [list(r) for r in cls.identity(field, n).rows]
        rows[i][j] = rows[i][j] + field.coerce(c)
        return cls._raw(field, rows)

    # -- access -----------------------------------------------------------
    @property
    def n(self) -> int:
        if self.nrows != self.ncols:
            raise DimensionMismatch("matrix is not square")
        return self.nrows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return [r[j] for r in self.rows]

    def entries(self):
        return [v for r in self.rows for v in r]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.field == other.field

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"Matrix({self.to_lists()!r})"

    def to_lists(self):
        fmt = self.field.format_element
        return [[fmt(v) for v in r] for r in self.rows]

    def to_text(self) -> str:
        cells = self.to_lists()
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    __str__ = to_text

    # -- arithmetic -------------------------------------------------------
    def _same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._same(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in addition")
        return Matrix._raw(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return self @ c
        c = self.field.coerce(c)
        return Matrix._raw(self.field, [[v * c for v in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._same(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        zero = self.field.zero
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix._raw(self.field, out)

    def apply_vec(self, v):
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.field, list(zip(*self.rows)))

    transpose = T

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def trace(self):
        acc = self.field.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    # -- elimination ------------------------------------------------------
    def rref(self):
        """Return (reduced row echelon rows, pivot columns)."""
        rows = [list(r) for r in self.rows]
        pivots = []
        prow = 0
        one = self.field.one
        for c in range(self.ncols):
            piv = next((i for i in range(prow, self.nrows) if rows[i][c]), None)
            if piv is None:
                continue
            rows[prow], rows[piv] = rows[piv], rows[prow]
            inv = one / rows[prow][c]
            rows[prow] = [v * inv for v in rows[prow]]
            pr = rows[prow]
            for i in range(self.nrows):
                if i != prow and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a + f * b for a, b in zip(rows[i], pr)]
            pivots.append(c)
            prow += 1
            if prow == self.nrows:
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of {v : A v = 0} as a list of vectors."""
        rows, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [self.field.zero] * self.ncols
            v[f] = self.field.one
            for i, p in enumerate(pivots):
                v[p] = rows[i][f]  # char 2: -x = x
            basis.append(v)
        return basis

    def det(self):
        n = self.n
        rows = [list(r) for r in self.rows]
        det = self.field.one
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c]), None)
            if piv is None:
                return self.field.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
            p = rows[c][c]
            det = det * p
            inv = self.field.one / p
            for i in range(c + 1, n):
                if rows[i][c]:
                    f = rows[i][c] * inv
                    rows[i] = [a + f * b for a, b in zip(rows[i], rows[c])]
        return det

    def inverse(self) -> "Matrix":
        n = self.n
        one, zero = self.field.one, self.field.zero
        aug = Matrix._raw(self.field, [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)])
        rows, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix._raw(self.field, [r[n:] for r in rows])

    def is_invertible(self) -> bool:
        return bool(self.det())

    def adjugate(self) -> "Matrix":
        """Division-free adjugate from the characteristic polynomial.

        With chi(t) = t^n + c_{n-1} t^{n-1} + ... + c_0, Cayley-Hamilton gives
        adj(A) = A^{n-1} + c_{n-1} A^{n-2} + ... + c_1 I in characteristic 2.
        """
        n = self.n
        cs = self.char_poly().coeffs
        result = Matrix.zeros(self.field, n, n)
        ident = Matrix.identity(self.field, n)
        for k in range(n, 0, -1):
            result = result @ self + ident * cs[k]
        return result

    # -- predicates -------------------------------------------------------
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and self.rows == tuple(zip(*self.rows))

    def is_zero(self) -> bool:
        return not any(v for r in self.rows for v in r)

    def is_scalar(self) -> bool:
        n = self.n
        c = self.rows[0][0]
        return all((self.rows[i][j] == c) if i == j else not self.rows[i][j] for i in range(n) for j in range(n))

    def is_identity(self) -> bool:
        return self.is_scalar() and self.rows[0][0] == self.field.one

    def is_unipotent(self) -> bool:
        n = self.n
        return ((self + Matrix.identity(self.field, n)) ** n).is_zero()

    def is_semisimple(self) -> bool:
        return squarefree_over_closure(self.min_poly())

    # -- polynomials ------------------------------------------------------
    def char_poly(self) -> Poly:
        """det(tI - A) by Berkowitz's division-free algorithm."""
        n = self.n
        F = self.field
        A = self.rows
        C = [F.one]
        for k in range(1, n + 1):
            a = A[k - 1][k - 1]
            R = A[k - 1][: k - 1]
            S = [A[i][k - 1] for i in range(k - 1)]
            q = [F.one, a]
            v = S
            for _ in range(k - 1):
                acc = F.zero
                for x, y in zip(R, v):
                    if x and y:
                        acc = acc + x * y
                q.append(acc)
                v = [_dot(A[i][: k - 1], v, F.zero) for i in range(k - 1)]
            newC = []
            for i in range(k + 1):
                acc = F.zero
                for j in range(min(i, k - 1) + 1):
                    if j < len(C) and i - j < len(q):
                        acc = acc + q[i - j] * C[j]
                newC.append(acc)
            C = newC
        return Poly(F, list(reversed(C)))

    def min_poly(self) -> Poly:
        """Last invariant factor of tI - A."""
        facs = self.invariant_factors()
        return facs[-1] if facs else Poly.one(self.field)

    def min_poly_krylov(self) -> Poly:
        """lcm over basis vectors of the local minimal polynomials (Krylov iteration)."""
        n = self.n
        F = self.field
        result = Poly.one(F)
        for i in range(n):
            e = [F.one if j == i else F.zero for j in range(n)]
            result = poly_lcm(result, _local_min_poly(self, e))
        return result

    def smith_form(self):
        """Smith form of tI - A over k[t].

        Returns ``(diagonal, Pinv)`` where ``diagonal`` lists the monic
        diagonal entries and ``Pinv`` is the inverse of the accumulated row
        transformation with entries reduced modulo the characteristic
        polynomial (only its values at A are ever used).
        """
        return _smith(self)

    def invariant_factors(self):
        """Nontrivial invariant factors d_1 | d_2 | ... of tI - A (monic)."""
        diag, _ = _smith(self)
        return [d for d in diag if d.degree > 0]

    def rational_canonical_form(self):
        """Return (P, R, factors) with P^{-1} A P = R, R block diagonal of companions."""
        diag, Pinv = _smith(self)
        n = self.n
        F = self.field
        cols = []
        blocks = []
        factors = []
        for i, d in enumerate(diag):
            if d.degree <= 0:
                continue
            u = [Pinv[j][i] for j in range(n)]
            v = _eval_poly_vector(self, u)
            for _ in range(d.degree):
                cols.append(v)
                v = self.apply_vec(v)
            blocks.append(companion(F, d))
            factors.append(d)
        P = Matrix.from_columns(F, cols)
        R = Matrix.block_diag(F, blocks)
        if not P.is_invertible() or self @ P != P @ R:
            raise VerificationError("rational canonical form transition failed verification")
        return P, R, factors


def _dot(r, v, zero):
    acc = zero
    for x, y in zip(r, v):
        if x and y:
            acc = acc + x * y
    return acc


def companion(field, d: Poly) -> Matrix:
    """Companion matrix of a monic d: subdiagonal ones, last column = coefficients."""
    k = d.degree
    rows = [[field.zero] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = field.one
    for i in range(k):
        rows[i][k - 1] = d.coeffs[i]
    return Matrix._raw(field, rows)


def _local_min_poly(A: Matrix, v) -> Poly:
    """Monic least-degree f with f(A) v = 0, by incremental elimination."""
    F = A.field
    n = A.nrows
    # each stored vector carries its combination in terms of the Krylov powers
    basis = []  # list of (pivot index, reduced vector, combination coeffs)
    cur = list(v)
    k = 0
    while True:
        comb = [F.zero] * k + [F.one]
        red = list(cur)
        for p, bv, bc in basis:
            if red[p]:
                f = red[p]
                red = [a + f * b for a, b in zip(red, bv)]
                comb = [a + f * b for a, b in zip(comb, bc + [F.zero] * (len(comb) - len(bc)))]
        piv = next((i for i in range(n) if red[i]), None)
        if piv is None:
            return Poly(F, comb)
        inv = F.one / red[piv]
        basis.append((piv, [x * inv for x in red], [x * inv for x in comb]))
        cur = A.apply_vec(cur)
        k += 1


def _eval_poly_vector(A: Matrix, u):
    """sum_j u_j(A) e_j for a vector u of polynomials."""
    F = A.field
    n = A.nrows
    D = max((p.degree for p in u), default=-1)
    v = [F.zero] * n
    for l in range(D, -1, -1):
        v = A.apply_vec(v)
        for j in range(n):
            c = u[j][l]
            if c:
                v[j] = v[j] + c
    return v


def _smith(A: Matrix):
    n = A.n
    F = A.field
    chi = A.char_poly()
    t = Poly.x(F)
    M = [[(t if i == j else Poly.zero(F)) + Poly.const(F, A.rows[i][j]) for j in range(n)] for i in range(n)]
    P = [[Poly.one(F) if i == j else Poly.zero(F) for j in range(n)] for i in range(n)]

    def red(p):
        return p % chi if p.degree >= chi.degree else p

    def row_addmul(i, k, q):
        # R_i <- R_i + q R_k  ;  P col_k <- col_k + q col_i
        M[i] = [a + q * b if b else a for a, b in zip(M[i], M[k])]
        for r in range(n):
            if P[r][i]:
                P[r][k] = red(P[r][k] + q * P[r][i])

    def col_addmul(j, k, q):
        # C_j <- C_j + q C_k
        for r in range(n):
            if M[r][k]:
                M[r][j] = M[r][j] + q * M[r][k]

    def swap_rows(i, k):
        M[i], M[k] = M[k], M[i]
        for r in range(n):
            P[r][i], P[r][k] = P[r][k], P[r][i]

    def swap_cols(j, k):
        for r in range(n):
            M[r][j], M[r][k] = M[r][k], M[r][j]

    for k in range(n):
        while True:
            best = None
            for j in range(k, n):
                for i in range(k, n):
                    e = M[i][j]
                    if e and (best is None or e.degree < best[0]):
                        best = (e.degree, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != k:
                swap_rows(pi, k)
            if pj != k:
                swap_cols(pj, k)
            piv = M[k][k]
            clean = True
            for i in range(k + 1, n):
                if M[i][k]:
                    q, r = divmod(M[i][k], piv)
                    row_addmul(i, k, q)
                    if r:
                        clean = False
            for j in range(k + 1, n):
                if M[k][j]:
                    q, r = divmod(M[k][j], piv)
                    col_addmul(j, k, q)
                    if r:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if M[i][j] and not piv.divides(M[i][j]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # R_k <- R_k + R_bad ; P col_bad <- col_bad + col_k
            M[k] = [a + b for a, b in zip(M[k], M[bad])]
            for r in range(n):
                if P[r][k]:
                    P[r][bad] = red(P[r][bad] + P[r][k])
        lc = M[k][k].lc
        if M[k][k] and lc != F.one:
            inv = F.one / lc
            M[k] = [a * inv for a in M[k]]
            for r in range(n):
                P[r][k] = P[r][k] * lc
    diag = [M[i][i] for i in range(n)]
    return diag, P


# ---------------------------------------------------------------------------
# conjugacy and predicates
# ---------------------------------------------------------------------------

def char_poly(A: Matrix) -> Poly:
    return A.char_poly()


def min_poly(A: Matrix) -> Poly:
    return A.min_poly()


def invariant_factors(A: Matrix):
    return A.invariant_factors()


def are_conjugate(A: Matrix, B: Matrix):
    """Decide conjugacy; on success also return C with C A C^{-1} = B."""
    if A.field != B.field:
        raise FieldMismatch("matrices over different fields")
    if A.n != B.n:
        raise DimensionMismatch("matrices of different sizes")
    if A.invariant_factors() != B.invariant_factors():
        return False, None
    PA, RA, _ = A.rational_canonical_form()
    PB, RB, _ = B.rational_canonical_form()
    if RA != RB:
        raise VerificationError("equal invariant factors but different canonical forms")
    C = PB @ PA.inverse()
    if C @ A != B @ C:
        raise VerificationError("conjugacy witness failed verification")
    return True, C


def predicates(A: Matrix, which: str) -> bool:
    if which == "is_scalar":
        return A.is_scalar()
    if which == "is_unipotent":
        return A.is_unipotent()
    if which == "is_semisimple":
        return A.is_semisimple()
    raise ValueError(f"unknown predicate {which!r}")


def mat_arith(A: Matrix, B: Matrix | None, op: str):
    if op == "mul":
        return A @ B
    if op == "add":
        return A + B
    if op == "transpose":
        return A.T
    if op == "det":
        return A.det()
    if op == "inverse":
        return A.inverse()
    if op == "adjugate":
        return A.adjugate()
    raise ValueError(f"unknown op {op!r}")
