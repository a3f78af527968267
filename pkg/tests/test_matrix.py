import itertools
import random

import pytest

from char2sl.errors import DimensionMismatch, LimitExceeded, SingularMatrix
from char2sl.matrix import Matrix, are_conjugate, char_poly, companion, invariant_factors, min_poly
from char2sl.oracle import conjugacy_classes
from char2sl.poly import Poly
from char2sl.smallfield import context


def leibniz_det(M):
    """Permutation-sum determinant; in characteristic 2 the signs vanish."""
    F, n = M.field, M.n
    total = F.zero
    for perm in itertools.permutations(range(n)):
        term = F.one
        for i, j in enumerate(perm):
            term = term * M[i, j]
        total = total + term
    return total


def rand_matrix(F, n, rng):
    return Matrix(F, [[F.random_element(rng) for _ in range(n)] for _ in range(n)])


def test_det_and_inverse_against_leibniz(F4, K2, rng):
    for F, n in [(F4, 3), (F4, 4), (K2, 3)]:
        for _ in range(15):
            M = rand_matrix(F, n, rng)
            assert M.det() == leibniz_det(M)
            if M.det():
                assert M @ M.inverse() == Matrix.identity(F, n)
                assert M.adjugate() == M.inverse() * M.det()
            else:
                with pytest.raises(SingularMatrix):
                    M.inverse()


def test_cayley_hamilton_exhaustive_2x2_gf2(F2):
    for bits in itertools.product(range(2), repeat=4):
        A = Matrix.from_ints(F2, [bits[:2], bits[2:]])
        assert char_poly(A)(A).is_zero()
        assert min_poly(A)(A).is_zero()
        assert min_poly(A).divides(char_poly(A))


def test_cayley_hamilton_random_4x4_gf4(F4, rng):
    for _ in range(20):
        A = rand_matrix(F4, 4, rng)
        assert char_poly(A)(A).is_zero()
        assert min_poly(A) == A.min_poly_krylov()


def test_rank_nullspace(F4, rng):
    for _ in range(20):
        A = rand_matrix(F4, 4, rng) @ Matrix.from_ints(F4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]])
        ns = A.nullspace()
        assert A.rank() + len(ns) == 4
        for v in ns:
            assert all(not c for c in A.apply_vec(v))


def test_rational_canonical_form(F4, rng):
    for _ in range(20):
        A = rand_matrix(F4, 4, rng)
        P, R, facs = A.rational_canonical_form()
        assert A @ P == P @ R
        prod = Poly.one(F4)
        for f in facs:
            prod = prod * f
        assert prod == char_poly(A)
        assert facs == invariant_factors(A)


def test_companion(F2):
    f = Poly.parse(F2, "x^3+x+1")
    C = companion(F2, f)
    assert char_poly(C) == f == min_poly(C)


def test_are_conjugate_matches_oracle_gl2_gf2(F2):
    ctx = context(F2, 2)
    classes = conjugacy_classes(F2, 2)
    where = {m: i for i, c in enumerate(classes) for m in c}
    mats = list(where)
    for a in mats:
        for b in mats:
            ok, C = are_conjugate(ctx.decode(a), ctx.decode(b))
            assert ok == (where[a] == where[b])
            if ok:
                assert C @ ctx.decode(a) @ C.inverse() == ctx.decode(b)


def test_are_conjugate_matches_oracle_gl2_gf4(F4):
    ctx = context(F4, 2)
    classes = conjugacy_classes(F4, 2)
    where = {m: i for i, c in enumerate(classes) for m in c}
    mats = sorted(where)
    rng = random.Random(7)
    for _ in range(400):
        a, b = rng.choice(mats), rng.choice(mats)
        if rng.random() < 0.3:
            b = rng.choice(classes[where[a]])
        ok, _ = are_conjugate(ctx.decode(a), ctx.decode(b))
        assert ok == (where[a] == where[b])


def test_predicates(F2):
    J = Matrix.from_ints(F2, [[0, 1], [1, 0]])
    U = Matrix.from_ints(F2, [[1, 1], [0, 1]])
    assert J.is_symmetric() and not J.is_semisimple() and J.is_unipotent()
    assert U.is_unipotent() and not U.is_symmetric()
    assert Matrix.identity(F2, 3).is_semisimple()
    assert Matrix.scalar(F2, 2, 1).is_scalar()


def test_shape_errors(F2):
    with pytest.raises(DimensionMismatch):
        Matrix(F2, [[1, 0], [1]])
    with pytest.raises(DimensionMismatch):
        Matrix.from_ints(F2, [[1, 0]]) @ Matrix.from_ints(F2, [[1, 0]])
    with pytest.raises(LimitExceeded):
        Matrix.zeros(F2, 17)
