from fractions import Fraction

import pytest

from affschur.element import (
    Element,
    Idempotent,
    Unit,
    Weight,
    bracket_element,
    compositions,
    e,
    f,
    generator_element,
    h,
    idempotent,
    identity,
    parse_generator,
    serialize,
    unit,
)
from affschur.lattice import AffineMatrix, diag, sigma, split_pm, unit_matrix

E12 = unit_matrix(1, 2, 2)


def basis(*entries, n=2):
    return Element.basis(AffineMatrix(n, entries))


def test_compositions():
    assert compositions(2, 1) == ((1, 0), (0, 1))
    assert compositions(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert compositions(3, 0) == ((0, 0, 0),)
    assert compositions(3, -1) == ()


def test_arithmetic():
    x = basis((1, 2, 1), (1, 1, 1))
    zero = Element.zero(2, 2)
    assert x + zero == x
    assert 0 * x == zero
    assert x + (-1) * x == zero
    assert x - x == zero
    with pytest.raises(ValueError):
        x + Element.zero(2, 3)


def test_bracket_element_examples():
    got = bracket_element(E12, (0, 0), 2)
    assert got == basis((1, 2, 1), (1, 1, 1)) + basis((1, 2, 1), (2, 2, 1))
    assert bracket_element(E12, (1, 0), 2) == basis((1, 2, 1), (1, 1, 1))
    assert not bracket_element(E12, (0, 0), 0)
    with pytest.raises(ValueError):
        bracket_element(diag((1, 0)), (0, 0), 1)


def test_bracket_element_weights():
    # lam^j with 0**0 = 1: coefficients are lam_1^2 * lam_2
    x = bracket_element(E12, (2, 1), 4)
    expected = {E12 + diag(lam): lam[0] ** 2 * lam[1] for lam in compositions(2, 3)}
    assert x.terms == {k: v for k, v in expected.items() if v}


@pytest.mark.parametrize("n,r", [(2, 0), (2, 3), (3, 2), (4, 1)])
@pytest.mark.parametrize("sig", [0, 1, 2])
def test_bracket_element_shape(n, r, sig):
    A = AffineMatrix(n, [(1, 1 + n, sig)]) if sig else AffineMatrix(n)
    x = bracket_element(A, (0,) * n, r)
    assert len(x) == len(compositions(n, r - sig))
    for B, c in x.terms.items():
        assert c == 1 and sigma(B) == r
        up, _, lo = split_pm(B)
        assert up + lo == A


def test_generators():
    assert generator_element(e(1, 2), 2, 1) == basis((1, 2, 1))
    assert generator_element(f(1, 2), 2, 1) == basis((2, 1, 1))
    assert generator_element(h(1, 2), 2, 1) == basis((1, 1, 1))
    assert generator_element(Weight(1), 2, 2) == 2 * basis((1, 1, 2)) + basis((1, 1, 1), (2, 2, 1))
    assert generator_element(Idempotent((3, 0)), 2, 2) == Element.zero(2, 2)
    assert idempotent((1, 1), 2) == basis((1, 1, 1), (2, 2, 1))


def test_generator_canonical_forms():
    assert e(2, 2) == Unit(2, 3)
    assert f(2, 2) == Unit(1, 0)
    assert unit(3, 3, 2) == Weight(1)
    assert unit(4, 1, 3) == Unit(1, -2)


def test_parse_generator():
    assert parse_generator("e1", 2) == Unit(1, 2)
    assert parse_generator("f2", 3) == Unit(3, 2)
    assert parse_generator("E1,5", 2) == Unit(1, 5)
    assert parse_generator("E2,2", 2) == Weight(2)
    assert parse_generator("h2", 2) == Weight(2)
    assert parse_generator("k1,0", 2) == Idempotent((1, 0))
    assert parse_generator("k(2,1)", 2) == Idempotent((2, 1))
    assert parse_generator("k21", 2) == Idempotent((2, 1))
    for bad in ("x1", "e", "E1", "k1,0,0"):
        with pytest.raises(ValueError):
            parse_generator(bad, 2)


def test_serialize_and_json():
    x = basis((1, 2, 1), (1, 1, 1)) * Fraction(-3, 2) + basis((2, 2, 2))
    assert serialize(Element.zero(2, 2)) == "0"
    assert serialize(x) == "-3/2*[1,1:1; 1,2:1] + 1/1*[2,2:2]"
    obj = x.to_json()
    assert [t["coeff"] for t in obj["terms"]] == ["-3/2", "1/1"]
    assert Element.from_json(obj) == x
    assert x == x and x != 2 * x


def test_from_json_rejects_wrong_degree():
    obj = {"n": 2, "r": 3, "terms": [{"matrix": {"n": 2, "entries": [[1, 1, 1]]}, "coeff": "1/1"}]}
    with pytest.raises(ValueError):
        Element.from_json(obj)


def test_identity_is_sum_of_idempotents():
    total = Element.zero(3, 2)
    for lam in compositions(3, 2):
        total = total + idempotent(lam, 2)
    assert total == identity(3, 2)
