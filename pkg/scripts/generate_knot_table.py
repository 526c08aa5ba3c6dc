#!/usr/bin/env python3
"""Regenerate the bundled prime alternating knot table (<= 9 crossings).

Pipeline per crossing number n:
  1. enumerate DT pairings (odd passage i paired with an even label),
     skipping pairings with an adjacent chord (reducible kink) and
     keeping one representative per dihedral relabeling orbit;
  2. realize each pairing as a diagram, dropping the unrealizable ones
     and any diagram failing the reduced or prime checks;
  3. deduplicate by mirror-insensitive canonical code;
  4. merge diagrams connected by flypes: each knot is one flype class.

The counts per crossing number must come out as the classical census of
prime alternating knots; the script refuses to write the table
otherwise.  Output goes to src/knotflype/data/alternating_knots_up_to_9.txt.
"""

from __future__ import annotations

import sys
import time
from itertools import permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from knotflype.canonical import canonical_code, canonical_form
from knotflype.diagram import export_dt, parse_dt, validate_prime, validate_reduced
from knotflype.errors import KnotError
from knotflype.flype import FlypeEnumerator
from knotflype.tables import EXPECTED_COUNTS

OUT = Path(__file__).resolve().parent.parent / "src" / "knotflype" / "data"


def dihedral_min(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Least DT sequence over relabelings of the traversal start/direction."""
    n = len(seq)
    m = 2 * n
    partner = [0] * m  # positions 0..2n-1; odd passage i sits at 2i-2
    for i, a in enumerate(seq):
        p, q = 2 * i, a - 1
        partner[p], partner[q] = q, p
    best = None
    for s in range(m):
        for refl in (False, True):
            if refl:
                relab = [(s - p) % m for p in range(m)]
            else:
                relab = [(p + s) % m for p in range(m)]
            cand = tuple(
                relab[partner[p]] + 1
                for p in sorted(range(m), key=lambda p: relab[p])
                if relab[p] % 2 == 0
            )
            if best is None or cand < best:
                best = cand
    return best


def pairings(n: int):
    """Kink-free DT sequences for n crossings, one per dihedral orbit."""
    m = 2 * n
    evens = list(range(2, m + 1, 2))
    for perm in permutations(evens):
        ok = True
        for i, a in enumerate(perm):
            odd = 2 * i + 1
            if a % m == odd % m + 1 or odd % m == a % m + 1 or {odd, a} == {1, m}:
                ok = False
                break
        if not ok:
            continue
        if dihedral_min(perm) == perm:
            yield perm


def knots_with(n: int):
    reps = {}
    for seq in pairings(n):
        try:
            d = parse_dt(" ".join(str(x) for x in seq))
        except KnotError:
            continue
        if not validate_reduced(d).ok or not validate_prime(d).ok:
            continue
        key = canonical_code(d, mirror=True)
        reps.setdefault(key, d)
    # merge flype-connected diagrams: the class key is the least
    # mirror-insensitive code over the whole flype graph
    classes = {}
    for d in reps.values():
        key = min(
            canonical_code(node, mirror=True) for node in FlypeEnumerator(d)
        )
        if key not in classes or canonical_code(d, mirror=True) < canonical_code(
            classes[key], mirror=True
        ):
            classes[key] = d
    return [classes[k] for k in sorted(classes)]


def main() -> None:
    lines = ["# prime alternating knots up to 9 crossings, one DT code each"]
    for n in range(3, 10):
        t0 = time.time()
        knots = knots_with(n)
        print(f"n={n}: {len(knots)} knots ({time.time() - t0:.1f}s)", flush=True)
        if len(knots) != EXPECTED_COUNTS[n]:
            raise SystemExit(
                f"census mismatch at n={n}: got {len(knots)}, "
                f"expected {EXPECTED_COUNTS[n]}"
            )
        for k, d in enumerate(knots, 1):
            dt = export_dt(canonical_form(d))
            lines.append(f"{n}_{k} " + " ".join(str(x) for x in dt))
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "alternating_knots_up_to_9.txt").write_text("\n".join(lines) + "\n")
    print("table written:", OUT / "alternating_knots_up_to_9.txt")


if __name__ == "__main__":
    main()
