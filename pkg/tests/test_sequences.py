import random

import pytest

from knotflype import canonical_code
from knotflype.builders import pretzel
from knotflype.flype import apply_flype, find_flype_sites
from knotflype.sequences import (
    FlypeSequence,
    _minimal_repeat_word,
    is_normalized,
    normalize_flype_sequence,
)


def random_sequence(rng: random.Random, seed_diagram, max_len: int) -> FlypeSequence:
    sites = []
    d = seed_diagram
    for _ in range(rng.randrange(max_len + 1)):
        options = sorted(find_flype_sites(d))
        if not options:
            break
        s = rng.choice(options)
        sites.append(s)
        d, _ = apply_flype(d, s)
    return FlypeSequence(seed_diagram, tuple(sites))


def test_empty_sequence_is_normalized(p2131):
    seq = FlypeSequence(p2131, ())
    assert is_normalized(seq.sites)
    assert normalize_flype_sequence(seq) is seq or normalize_flype_sequence(seq).sites == ()


def test_single_flype_is_normalized(p2131):
    s = sorted(find_flype_sites(p2131))[0]
    seq = FlypeSequence(p2131, (s,))
    assert is_normalized(seq.sites)


def test_immediate_cancellation_normalizes_to_identity(p2131):
    s = sorted(find_flype_sites(p2131))[0]
    d, created = apply_flype(p2131, s)
    undo = next(
        t for t in sorted(find_flype_sites(d))
        if t.crossing_removed == created
        and canonical_code(apply_flype(d, t)[0]) == canonical_code(p2131)
    )
    seq = FlypeSequence(p2131, (s, undo))
    assert not is_normalized(seq.sites)
    norm = normalize_flype_sequence(seq)
    assert is_normalized(norm.sites)
    assert len(norm.sites) < 2
    assert canonical_code(norm.final) == canonical_code(seq.final)


def test_invalid_sequence_rejected(p2131, fig8):
    bad = sorted(find_flype_sites(p2131))[0]
    with pytest.raises(Exception):
        FlypeSequence(fig8, (bad,))


def test_from_steps_matches_diagrams(p2131):
    s = sorted(find_flype_sites(p2131))[0]
    seq = FlypeSequence(p2131, (s,))
    again = FlypeSequence.from_steps(seq.steps)
    assert again.sites == seq.sites


@pytest.mark.parametrize("seed", range(12))
def test_random_sequences_normalize(seed):
    rng = random.Random(1000 + seed)
    base = rng.choice([pretzel(2, 1, 3, 1), pretzel(1, 2, 3), pretzel(3, 3, 3)])
    seq = random_sequence(rng, base, 6)
    norm = normalize_flype_sequence(seq)
    if not is_normalized(norm.sites):
        # Repeated removals may only survive when no word between the
        # endpoints avoids them entirely.
        assert _minimal_repeat_word(seq.initial, seq.final, 0) is None
    assert canonical_code(norm.initial) == canonical_code(seq.initial)
    assert canonical_code(norm.final) == canonical_code(seq.final)
