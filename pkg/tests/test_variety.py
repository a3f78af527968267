import pytest

from char2sl.errors import SingularMatrix, ZeroInput
from char2sl.involutions import Automorphism, make_J, make_L_mc, make_L_np
from char2sl.matrix import Matrix
from char2sl.smallfield import context, group
from char2sl.variety import (
    audit_formula_n2,
    alt_outer_form,
    candidate_minpoly_n2,
    enumerate_variety,
    expanded_form_n2,
    formula_expression,
    q_element,
)


def test_q_element_definition(F4, rng):
    phi = Automorphism.inner(make_L_mc(F4, 3, 1, F4(3)))
    ctx = context(F4, 3)
    mats = group(F4, 3, "SL")[0]
    for _ in range(30):
        X = ctx.decode(rng.choice(mats))
        V = q_element(phi, X).value
        assert V == X @ phi(X).inverse()
        assert V.det() == F4.one


def test_outer_q_element_and_alternative_shape(F2, rng):
    ctx = context(F2, 4)
    mats = group(F2, 4, "SL")[0]
    A = Matrix.from_ints(F2, [[1, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])  # A^2 not scalar
    for M, shared in ((make_J(F2, 4), True), (A, False)):
        phi = Automorphism.outer(M)
        agree = []
        for _ in range(40):
            X = ctx.decode(rng.choice(mats))
            V = q_element(phi, X).value
            assert V == X @ phi(X).inverse()
            agree.append(V == alt_outer_form(phi, X))
        assert all(agree) if shared else not all(agree)


def test_variety_counts_match_orbit_stabilizer(F4):
    """|Q| = |SL| / |H| since X -> X phi(X)^-1 is constant exactly on cosets X H."""
    from char2sl.fixed_points import enumerate_fixed_group
    from char2sl.smallfield import sl_order

    phi = Automorphism.inner(make_L_mc(F4, 2, 1, 1))
    rep = enumerate_variety(phi)
    assert rep.size == sl_order(2, 4) // enumerate_fixed_group(phi).order
    assert rep.size == rep.semisimple + rep.non_semisimple


def test_expanded_form_and_formula(F4):
    p = F4(2)
    phi = Automorphism.inner(make_L_np(F4, 2, p))
    ctx = context(F4, 2)
    for m in group(F4, 2, "SL")[0]:
        X = ctx.decode(m)
        V = q_element(phi, X).value
        assert expanded_form_n2(p, X) == V
        assert formula_expression(p, X) == V.trace()


def test_audit_boundary_is_scalar_values(F4):
    for p in F4.nonzero_elements():
        au = audit_formula_n2(F4, p)
        assert au.formula_ok
        assert au.agree_nonscalar > 0
        phi = Automorphism.inner(make_L_np(F4, 2, p))
        for X in au.scalar_exceptions:
            assert q_element(phi, X).value.is_identity()


def test_candidate_minpoly_constant_term_differs_from_det(F2):
    """det V = 1 always, while the candidate constant term vanishes at X = Id."""
    X = Matrix.identity(F2, 2)
    f = candidate_minpoly_n2(F2.one, X)
    assert f[0] == F2.zero
    assert q_element(Automorphism.inner(make_L_np(F2, 2, F2.one)), X).value.det() == F2.one


def test_errors(F2):
    with pytest.raises(ZeroInput):
        formula_expression(F2.zero, Matrix.identity(F2, 2))
    with pytest.raises(SingularMatrix):
        q_element(Automorphism.inner(make_L_mc(F2, 2, 1)), Matrix.zeros(F2, 2))
