from knotflype import canonical_code, validate_alternating, validate_prime, validate_reduced
from knotflype.tables import EXPECTED_COUNTS, entries_up_to, load_table


def test_census_counts(table):
    by_n = {}
    for e in table:
        by_n[e.crossings] = by_n.get(e.crossings, 0) + 1
    assert by_n == EXPECTED_COUNTS
    assert len(table) == sum(EXPECTED_COUNTS.values())


def test_names_are_well_formed(table):
    seen = set()
    for e in table:
        n, k = e.name.split("_")
        assert int(n) == e.crossings
        assert int(k) >= 1
        assert e.name not in seen
        seen.add(e.name)


def test_entries_realize_as_reduced_prime_alternating(table):
    for e in table:
        d = e.diagram
        assert d.n == e.crossings
        assert validate_alternating(d).ok
        assert validate_reduced(d).ok
        assert validate_prime(d).ok


def test_entries_are_pairwise_distinct_knots(table):
    # distinct up to mirror image on the representative diagrams
    codes = {canonical_code(e.diagram, mirror=True) for e in table}
    assert len(codes) == len(table)


def test_entries_up_to_filters(table):
    small = entries_up_to(7)
    assert {e.crossings for e in small} == {3, 4, 5, 6, 7}
    assert len(small) == 1 + 1 + 2 + 3 + 7


def test_first_entries_are_torus_and_fig8(table, trefoil, fig8):
    from knotflype import isomorphic

    named = {e.name: e for e in table}
    assert isomorphic(named["3_1"].diagram, trefoil, mirror=True)
    assert isomorphic(named["4_1"].diagram, fig8, mirror=True)
