import pytest

from char2sl.errors import DimensionMismatch, FieldMismatch, ParseError
from char2sl.involutions import Automorphism, LType, OuterAlternate, OuterDiagonal, PType, make_J
from char2sl.matrix import Matrix
from char2sl.serialize import (
    automorphism_from_json,
    automorphism_to_json,
    label_from_json,
    matrix_from_json,
    matrix_to_json,
)


def test_matrix_roundtrip(F4, K2):
    M = Matrix(F4, [[F4(1), F4(3)], [F4(2), F4(0)]])
    obj = matrix_to_json(M)
    assert obj == {"field": "gf2e:r=2", "n": 2, "rows": [["0x1", "0x3"], ["0x2", "0x0"]]}
    assert matrix_from_json(obj) == M
    x = K2.x
    N = Matrix(K2, [[x, K2.one / (x + 1)], [K2.zero, x ** 3]])
    assert matrix_from_json(matrix_to_json(N)) == N


def test_bare_rows(F2, F4):
    assert matrix_from_json([[0, 1], [1, 0]], F2) == Matrix.from_ints(F2, [[0, 1], [1, 0]])
    with pytest.raises(ParseError):
        matrix_from_json([[0, 1], [1, 0]])
    with pytest.raises(DimensionMismatch):
        matrix_from_json([[0, 1], [1, 0]], F2, n=3)
    with pytest.raises(FieldMismatch):
        matrix_from_json({"field": "gf2", "rows": [[1]]}, field=F4)


def test_automorphism_roundtrip(F2):
    phi = Automorphism.outer(make_J(F2, 4))
    assert automorphism_from_json(automorphism_to_json(phi)) == phi
    with pytest.raises(ParseError):
        automorphism_from_json({"parity": "sideways", "A": [[1]]}, F2)


def test_labels(F2, K2):
    for lab, F in [(LType(2), F2), (PType(K2.x), K2), (OuterDiagonal((F2.one,) * 3), F2), (OuterAlternate(), F2)]:
        assert label_from_json(lab.to_json(), F) == lab
    with pytest.raises(ParseError):
        label_from_json({"type": "Q"}, F2)
