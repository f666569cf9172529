from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modres import schubert as sc
from modres.schubert import SchubertError, carrier_degree, carrier_dimension, evaluate, pieri, schubert_class


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_paper_products():
    assert str(evaluate("s(1)^4", 5)) == "3*W(3,1) + 2*W(2,2)"
    assert str(evaluate("s(1)^4 * s(2)", 5)) == "3*W(3,3)"
    assert str(pieri(2, evaluate("s(1)^4", 5))) == "3*W(3,3)"


def test_identity_and_point():
    for k in range(2, 8):
        one = sc.identity(k)
        assert pieri(0, one) == one
        pt = schubert_class(k - 2, k - 2, k)
        assert pieri(1, pt) == sc.ChowClass(k)


@pytest.mark.parametrize("k", range(3, 9))
def test_degree_of_grassmannian(k):
    # deg G(2,k) in the Plucker embedding is a Catalan number
    assert evaluate(f"s(1)^{2 * (k - 2)}", k).coefficient(k - 2, k - 2) == catalan(k - 2)


@pytest.mark.parametrize("k", range(3, 8))
def test_commutative_and_associative(k):
    parts = [(a, b) for a in range(k - 1) for b in range(a + 1)]
    for a in range(5):
        for b in range(5):
            for x in parts:
                base = schubert_class(*x, k)
                assert pieri(a, pieri(b, base)) == pieri(b, pieri(a, base))
    for x in parts:
        for y in parts:
            X, Y = schubert_class(*x, k), schubert_class(*y, k)
            assert X * Y == Y * X
            for z in parts[:6]:
                Z = schubert_class(*z, k)
                assert (X * Y) * Z == X * (Y * Z)


@given(st.integers(2, 8).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, 4),
                                                    st.integers(0, k - 2), st.data())))
def test_codimension_additivity(data):
    k, s, a, d = data
    b = d.draw(st.integers(0, a))
    out = pieri(s, schubert_class(a, b, k))
    assert out.codimensions() <= {a + b + s}
    assert all(c > 0 for _, c in out.coeffs)


def test_giambelli():
    k = 6
    assert evaluate("s(2) * s(1)", k) - evaluate("s(3)", k) == schubert_class(2, 1, k)
    assert evaluate("W(2,1)", k) == schubert_class(2, 1, k)


def test_carrier_degree_examples():
    assert carrier_degree(5, [1, 1, 1, 1], 1).degree == 3
    assert carrier_degree(4, [1, 1, 1], 1).degree == 2
    for k in range(2, 8):
        assert carrier_degree(k, [], k - 1).degree == 1
    res = carrier_degree(5, [1, 1, 1, 1], 1)
    assert res.s == 2 and res.sigma == (3, 3) and str(res.expansions[3]) == "3*W(3,1) + 2*W(2,2)"
    with pytest.raises(SchubertError):
        carrier_degree(4, [2, 2, 2], 1)


def test_carrier_dimension():
    assert carrier_dimension(2, 1) == 3
    assert carrier_dimension(0, 1) == 1
    assert carrier_dimension(1, 1) == 2
    with pytest.raises(SchubertError):
        carrier_dimension(1, 3)


def test_bad_input():
    with pytest.raises(SchubertError):
        schubert_class(3, 1, 4)
    with pytest.raises(SchubertError):
        evaluate("t(1)", 5)
    with pytest.raises(SchubertError):
        evaluate("s(1,2)", 5)
    with pytest.raises(SchubertError):
        pieri(-1, sc.identity(5))
