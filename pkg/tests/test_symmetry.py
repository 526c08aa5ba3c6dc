import pytest

from knotflype import validate_alternating, validate_reduced
from knotflype.bracket import normalized_bracket
from knotflype.builders import pretzel, twist_closure
from knotflype.symmetry import (
    automorphisms,
    detect_period,
    period_symmetries,
    quotient,
    remove_curls,
)


def test_identity_is_always_an_automorphism(fig8):
    auts = automorphisms(fig8)
    assert any(s.order == 1 for s in auts)


def test_torus25_automorphism_group_contains_order_5(torus25):
    orders = {s.order for s in automorphisms(torus25) if s.orientation_preserving}
    assert 5 in orders


def test_period_symmetry_shape(torus25):
    syms = list(period_symmetries(torus25, 5))
    assert syms
    for s in syms:
        assert s.order == 5
        assert s.orientation_preserving
        assert len(s.fixed_faces) == 2
        assert not s.fixed_crossings
        assert not s.fixed_edges


def test_fig8_has_no_odd_prime_period(fig8):
    for p in (3, 5, 7):
        result = detect_period(fig8, p)
        assert result.conclusive
        assert result.report is None


def test_divisibility_short_circuit(fig8):
    result = detect_period(fig8, 3)
    assert "divisibility" in result.reason


def test_torus_knots_have_full_period():
    for p in (3, 5, 7):
        result = detect_period(twist_closure(p), p)
        assert result.conclusive
        assert result.report is not None
        assert result.report.p == p


def test_p333_has_period_3():
    result = detect_period(pretzel(3, 3, 3), 3)
    assert result.report is not None
    sym = result.report.symmetry
    crossing_orbits = [c for c in sym.cycles() if len(c) > 1]
    assert result.report.diagram.n == 9


def test_inconclusive_when_truncated(p2131):
    # the flype graph of this knot has two nodes; capping at one leaves
    # the scan unable to certify absence
    result = detect_period(p2131, 7, use_shortcuts=False, max_nodes=1)
    assert not result.conclusive
    assert result.report is None
    assert "truncated" in result.reason


def test_quotient_of_torus_period(torus25):
    rep = detect_period(torus25, 5).report
    q = quotient(rep)
    assert q.n == torus25.n // 5
    assert validate_alternating(q).ok


def test_quotient_preserves_crossing_ratio():
    d = twist_closure(9)
    rep = detect_period(d, 3).report
    q = quotient(rep)
    assert q.n == 3
    # the quotient of the (2,9) torus diagram by its 3-fold symmetry is a trefoil
    t = twist_closure(3)
    assert normalized_bracket(q) in (
        normalized_bracket(t),
        normalized_bracket(t.mirrored()),
    )


def test_p333_quotient_reduces_to_unknot():
    rep = detect_period(pretzel(3, 3, 3), 3).report
    q = quotient(rep)
    assert q.n == 3
    assert not validate_reduced(q).ok
    from knotflype.errors import InvalidDiagram

    with pytest.raises(InvalidDiagram):
        remove_curls(q)  # every crossing is a kink: the quotient knot is trivial


def test_remove_curls_strips_kinks():
    rep = detect_period(twist_closure(3), 3).report
    q = quotient(rep)  # one crossing, necessarily a kink
    assert q.n == 1
    from knotflype.errors import InvalidDiagram

    with pytest.raises(InvalidDiagram):
        remove_curls(q)


def test_report_serialization(torus25):
    rep = detect_period(torus25, 5).report
    data = rep.to_dict()
    assert data["p"] == 5
    assert isinstance(data["diagram_pd"], str)
    assert len(data["fixed_faces"]) == 2
