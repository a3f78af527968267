import pytest

from char2sl.bilinear import (
    are_congruent_proj,
    classify_outer,
    congruence_normal_form,
    diagonalize_congruence,
    is_alternate,
    outer_invariants,
    solve_two_squares,
    symplectic_normalize,
)
from char2sl.errors import NotSymmetric, SingularMatrix
from char2sl.involutions import OuterAlternate, OuterDiagonal, make_J
from char2sl.matrix import Matrix
from char2sl.smallfield import context, group


def diag(F, vals):
    return Matrix.diag(F, vals)


def rand_invertible(F, n, rng):
    while True:
        Q = Matrix(F, [[F.random_element(rng, max_deg=2) if not F.is_finite else F.random_element(rng)
                        for _ in range(n)] for _ in range(n)])
        if Q.det():
            return Q


def test_identity_and_J_labels(F2):
    assert classify_outer(Matrix.identity(F2, 4)) == OuterDiagonal((F2.one,) * 4)
    assert classify_outer(make_J(F2, 4)) == OuterAlternate()
    assert is_alternate(make_J(F2, 4))


def test_diag_1_x_label(K2):
    x = K2.x
    lab = classify_outer(diag(K2, [K2.one, x, K2.one]))
    assert isinstance(lab, OuterDiagonal)
    assert lab.to_json()["type"] == "outer-diag"


def test_multiset_is_not_an_invariant(K2):
    """<1,1,x> and <1,1+x,x(1+x)> are congruent although the square-class multisets differ."""
    x = K2.x
    A = diag(K2, [K2.one, K2.one, x])
    B = diag(K2, [K2.one, x + 1, x * (x + 1)])
    ok, (Q, p) = are_congruent_proj(A, B)
    assert ok and p == K2.one
    assert Q.T @ A @ Q == B
    assert classify_outer(A) == classify_outer(B)


def test_invariants_separate_inequivalent_forms(K2):
    x = K2.x
    one = K2.one
    # value set k^2 versus x k^2 + k^2
    assert outer_invariants(diag(K2, [one, one]))[1] == 1
    assert outer_invariants(diag(K2, [one, x]))[1] == 2
    A, B = diag(K2, [one, one, one, one]), diag(K2, [one, one, one, x])
    assert are_congruent_proj(A, B) == (False, None)


def test_diagonalize_and_symplectic_on_all_symmetric_gl3_gl4_gf2(F2):
    for n in (3, 4):
        ctx = context(F2, n)
        for s in group(F2, n, "sym")[0]:
            A = ctx.decode(s)
            if is_alternate(A):
                Q = symplectic_normalize(A)
                assert Q.T @ A @ Q == make_J(F2, n)
            else:
                Q, D = diagonalize_congruence(A)
                assert Q.det() and Q.T @ A @ Q == D
                assert all(D[i, j] == F2.zero for i in range(n) for j in range(n) if i != j)


def test_random_congruent_pairs_over_ratfunc(K2, rng):
    x = K2.x
    for _ in range(25):
        vals = [K2.random_element(rng, max_deg=2, nonzero=True) for _ in range(3)]
        A = diag(K2, vals)
        Q = rand_invertible(K2, 3, rng)
        s = rng.choice([K2.one, x, x + 1])
        B = Q.T @ A @ Q * s
        ok, (Q2, p) = are_congruent_proj(A, B)
        assert ok and Q2.T @ A @ Q2 == B * p
        assert classify_outer(A) == classify_outer(B)


def test_normal_form_is_diagonal(K2, rng):
    for _ in range(20):
        vals = [K2.random_element(rng, max_deg=3, nonzero=True) for _ in range(4)]
        A = diag(K2, vals)
        Q, N = congruence_normal_form(A)
        assert Q.T @ A @ Q == N


def test_solve_two_squares(K2, rng):
    x = K2.x
    for _ in range(40):
        a = K2.random_element(rng, nonzero=True)
        b = a * x * K2.random_element(rng, nonzero=True) ** 2
        c = K2.random_element(rng, nonzero=True)
        s, t = solve_two_squares(a, b, c)
        assert a * s * s + b * t * t == c
    assert solve_two_squares(K2.one, K2.one, x) is None


def test_errors(F2):
    with pytest.raises(NotSymmetric):
        classify_outer(Matrix.from_ints(F2, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(SingularMatrix):
        classify_outer(Matrix.from_ints(F2, [[1, 1, 0], [1, 1, 0], [0, 0, 1]]))
