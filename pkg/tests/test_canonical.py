import random

from hypothesis import given, settings
from hypothesis import strategies as st

from knotflype import canonical_code, canonical_form, isomorphic
from knotflype.builders import pretzel, twist_closure
from tests.conftest import random_dart_perm


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_canonical_code_relabeling_invariant(seed):
    rng = random.Random(seed)
    d = rng.choice([twist_closure(3), twist_closure(5), pretzel(2, 1, 1), pretzel(2, 1, 3, 1)])
    code = canonical_code(d)
    perm = random_dart_perm(rng, d.num_darts)
    assert canonical_code(d.relabeled(perm)) == code


def test_canonical_form_is_fixed_point(trefoil, fig8):
    for d in (trefoil, fig8):
        form = canonical_form(d)
        assert canonical_form(form) == form
        assert canonical_code(form) == canonical_code(d)


def test_trefoil_mirror_codes(trefoil):
    m = trefoil.mirrored()
    assert canonical_code(trefoil) != canonical_code(m)
    assert canonical_code(trefoil, mirror=True) == canonical_code(m, mirror=True)
    assert not isomorphic(trefoil, m)
    assert isomorphic(trefoil, m, mirror=True)


def test_fig8_is_amphichiral(fig8):
    assert isomorphic(fig8, fig8.mirrored())


def test_distinct_knots_have_distinct_codes(trefoil, fig8):
    assert canonical_code(trefoil, mirror=True) != canonical_code(fig8, mirror=True)
