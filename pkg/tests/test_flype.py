import pytest

from knotflype import canonical_code, writhe
from knotflype.bracket import normalized_bracket
from knotflype.builders import pretzel, twist_closure
from knotflype.errors import LimitExceeded
from knotflype.flype import (
    FlypeSite,
    apply_flype,
    build_flype_graph,
    find_flype_sites,
    find_flype_sites_brute,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)


def test_fig8_has_no_flype_sites(fig8):
    assert find_flype_sites(fig8) == set()


def test_trefoil_has_no_flype_sites(trefoil):
    assert find_flype_sites(trefoil) == set()


def test_torus_sites_are_self_isomorphisms(torus25):
    sites = find_flype_sites(torus25)
    assert len(sites) == 10
    code = canonical_code(torus25)
    for s in sites:
        new, _ = apply_flype(torus25, s)
        assert canonical_code(new) == code


def test_pretzel_123_domain_sizes():
    d = pretzel(1, 2, 3)
    sizes = {len(s.domain_side) for s in find_flype_sites(d)}
    assert sizes == {2, 3}


def test_pruned_matches_brute_force(fig8, torus25, p2131):
    for d in (fig8, torus25, p2131, pretzel(1, 2, 3), pretzel(3, 3, 3)):
        assert find_flype_sites(d) == find_flype_sites_brute(d)


def test_flype_conserves_invariants(p2131):
    bracket = normalized_bracket(p2131)
    w = writhe(p2131)
    for s in sorted(find_flype_sites(p2131)):
        new, created = apply_flype(p2131, s)
        assert new.n == p2131.n
        assert created == s.crossing_removed
        assert writhe(new) == w
        assert normalized_bracket(new) == bracket


def test_flype_is_reversible(p2131):
    for s in sorted(find_flype_sites(p2131)):
        new, created = apply_flype(p2131, s)
        undo = [
            t for t in find_flype_sites(new)
            if t.crossing_removed == created
            and canonical_code(apply_flype(new, t)[0]) == canonical_code(p2131)
        ]
        assert undo


def test_p2131_graph_has_two_nodes(p2131):
    g = build_flype_graph(p2131)
    assert g.node_count == 2
    assert g.complete


def test_graph_json_round_trip(p2131):
    g = build_flype_graph(p2131)
    h = graph_from_json(graph_to_json(g))
    assert graph_to_json(h) == graph_to_json(g)
    assert h.node_count == g.node_count and h.edge_count == g.edge_count


def test_graph_dot_output(p2131):
    text = graph_to_dot(build_flype_graph(p2131))
    assert text.startswith("digraph")
    assert "->" in text


def test_limit_exceeded_carries_partial(p2131):
    with pytest.raises(LimitExceeded) as exc:
        build_flype_graph(p2131, max_nodes=1)
    partial = exc.value.partial
    assert partial.node_count == 1
    assert not partial.complete


def test_invalid_site_rejected(p2131):
    from knotflype.errors import InvalidSite

    with pytest.raises(InvalidSite):
        FlypeSite(0, (0, 4), frozenset())
    with pytest.raises(InvalidSite):
        FlypeSite(0, (0, 4), frozenset({0, 1}))


def test_mirror_graph_identifies_chiralities(trefoil):
    g = build_flype_graph(trefoil, mirror=True)
    assert g.node_count == 1
    g2 = build_flype_graph(twist_closure(5), mirror=True)
    assert g2.node_count == 1
