import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from char2sl.errors import NotASquare, ZeroInput
from char2sl.fields import parse_field
from char2sl.poly import (
    Poly,
    is_square_poly,
    poly_gcd,
    poly_lcm,
    poly_sqrt,
    poly_xgcd,
    squarefree_decomposition,
    squarefree_kernel,
    squarefree_over_closure,
    squarefree_part,
)

F4 = parse_field("gf2e:r=2")
coeff_lists = st.lists(st.integers(0, 3), min_size=0, max_size=7)


def P(cs):
    return Poly(F4, [F4(v) for v in cs])


def test_parse_and_print(F2):
    f = Poly.parse(F2, "x^3+x+1")
    assert f.degree == 3 and f.to_text() == "x^3+x+1"
    assert str(Poly.parse(F4, "0x2*x^2+1")) == "0x2*x^2+1"


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists)
def test_divmod_identity(a, b):
    f, g = P(a), P(b)
    if not g:
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists)
def test_gcd_and_bezout(a, b):
    f, g = P(a), P(b)
    if not f and not g:
        return
    d, s, t = poly_xgcd(f, g)
    assert s * f + t * g == d
    assert d == poly_gcd(f, g)
    assert d.divides(f) and d.divides(g)
    if f and g:
        assert poly_lcm(f, g) * d == (f * g).monic()


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(coeff_lists, st.integers(1, 4)), min_size=1, max_size=3))
def test_squarefree_decomposition_reassembles(parts):
    f = Poly.one(F4)
    for cs, e in parts:
        g = P(cs + [1])
        f = f * g ** e
    dec = squarefree_decomposition(f)
    prod = Poly.one(F4)
    for p, i in dec:
        assert squarefree_over_closure(p)
        prod = prod * p ** i
    assert prod == f.monic()
    assert squarefree_part(f).divides(f)
    k = squarefree_kernel(f)
    ok, _ = is_square_poly(f.monic().exact_div(k))
    assert ok


def test_squares(F2):
    x = Poly.x(F2)
    assert poly_sqrt((x + 1) ** 2 * x ** 4) == (x + 1) * x ** 2
    with pytest.raises(NotASquare):
        poly_sqrt(x ** 3)
    assert is_square_poly(x ** 2 + 1) == (True, x + 1)
    assert is_square_poly(x)[0] is False
    with pytest.raises(ZeroInput):
        squarefree_decomposition(Poly.zero(F2))


def test_evaluation_at_matrix(F2):
    from char2sl.matrix import Matrix

    A = Matrix.from_ints(F2, [[0, 1], [1, 0]])
    x = Poly.x(F2)
    assert (x * x + 1)(A).is_zero()
    assert not (x + 1)(A).is_zero()
