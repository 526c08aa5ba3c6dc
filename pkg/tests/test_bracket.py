import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotflype.bracket import (
    LaurentPolynomial,
    ONE,
    bracket_span,
    kauffman_bracket,
    normalized_bracket,
)
from knotflype.builders import pretzel, twist_closure

coeff_dicts = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5)


@given(coeff_dicts, coeff_dicts)
@settings(max_examples=100, deadline=None)
def test_laurent_ring_axioms(a, b):
    p, q = LaurentPolynomial(a), LaurentPolynomial(b)
    assert p + q == q + p
    assert p * q == q * p
    assert p - p == LaurentPolynomial({})
    assert p * ONE == p
    assert (p * q).substituted_inverse() == p.substituted_inverse() * q.substituted_inverse()


def test_laurent_zero_coeffs_dropped():
    assert LaurentPolynomial({3: 0, 1: 2}) == LaurentPolynomial({1: 2})
    assert not LaurentPolynomial({0: 0})


def test_trefoil_bracket_anchor(trefoil):
    raw = kauffman_bracket(trefoil)
    expected = LaurentPolynomial({-5: -1, 3: -1, 7: 1})
    assert raw in (expected, expected.substituted_inverse())
    assert kauffman_bracket(trefoil.mirrored()) == raw.substituted_inverse()


def test_fig8_normalized_bracket_anchor(fig8):
    expected = LaurentPolynomial({-8: 1, -4: -1, 0: 1, 4: -1, 8: 1})
    assert normalized_bracket(fig8) == expected
    assert normalized_bracket(fig8.mirrored()) == expected


def test_trefoil_normalized_bracket_chirality(trefoil):
    f = normalized_bracket(trefoil)
    m = normalized_bracket(trefoil.mirrored())
    assert f != m
    assert m == f.substituted_inverse()


@pytest.mark.parametrize("d_factory", [
    lambda: twist_closure(3),
    lambda: twist_closure(5),
    lambda: twist_closure(7),
    lambda: pretzel(2, 1, 1),
    lambda: pretzel(1, 2, 3),
    lambda: pretzel(2, 1, 3, 1),
    lambda: pretzel(3, 3, 3),
])
def test_span_is_4n_for_reduced_alternating(d_factory):
    d = d_factory()
    assert bracket_span(d) == 4 * d.n


def test_normalized_bracket_is_flype_invariant(p2131):
    from knotflype.flype import apply_flype, find_flype_sites

    base = normalized_bracket(p2131)
    for site in sorted(find_flype_sites(p2131)):
        new, _ = apply_flype(p2131, site)
        assert normalized_bracket(new) == base
