"""Four-ended tangles: sub-diagrams cut out by a circle meeting four strands.

A tangle is stored like a diagram except that four darts are loose:
they are the stubs where the boundary circle cuts the strands, labeled
by compass corner (nw, ne, se, sw) going clockwise from the top left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram
from .errors import InvalidTangle


@dataclass(frozen=True)
class Tangle:
    """Crossings inside a disk, with four boundary stubs.

    rotation and over_pair are as in Diagram; pairs lists the internal
    edges as dart pairs, and boundary names the four loose darts in
    (nw, ne, se, sw) order around the disk.
    """

    rotation: tuple[tuple[int, int, int, int], ...]
    pairs: tuple[tuple[int, int], ...]
    over_pair: tuple[int, ...]
    boundary: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        nd = 4 * self.n
        if sorted(x for q in self.rotation for x in q) != list(range(nd)):
            raise InvalidTangle("rotation darts must be 0..4n-1")
        if len(self.over_pair) != self.n:
            raise InvalidTangle("one over flag per crossing required")
        used = [0] * nd
        for a, b in self.pairs:
            used[a] += 1
            used[b] += 1
        for x in self.boundary:
            used[x] += 1
        if len(set(self.boundary)) != 4 or any(u != 1 for u in used):
            raise InvalidTangle("darts must be paired once or loose on the boundary")
        if self.n < 1:
            raise InvalidTangle("tangle must contain at least one crossing")

    @property
    def n(self) -> int:
        return len(self.rotation)

    def rotated(self) -> "Tangle":
        """Quarter-turn of the disk: boundary roles shift one corner."""
        nw, ne, se, sw = self.boundary
        return Tangle(self.rotation, self.pairs, self.over_pair, (sw, nw, ne, se))

    def flipped(self) -> "Tangle":
        """Left-right mirror of the boundary role assignment only."""
        nw, ne, se, sw = self.boundary
        return Tangle(self.rotation, self.pairs, self.over_pair, (ne, nw, sw, se))


def twist_tangle(t: int, *, over_first: int = 0) -> Tangle:
    """Vertical chain of t crossings twisting two strands around each other.

    over_first picks the chirality: which of the two strands of the top
    crossing runs over.  For odd t the strands trade sides through the
    tangle (a through-strand entering nw leaves at se), which is what a
    one-component necklace closure needs; for even t each side pair is
    internally connected and closures come out as links.
    """
    if t < 1:
        raise InvalidTangle("twist tangle needs at least one crossing")
    rotation = []
    pairs = []
    for i in range(t):
        b = 4 * i
        rotation.append((b, b + 1, b + 2, b + 3))
        if i + 1 < t:
            pairs.append((b + 1, b + 4))
            pairs.append((b + 2, b + 7))
    last = 4 * (t - 1)
    boundary = (0, 3, last + 2, last + 1)  # nw, ne, se, sw
    return Tangle(
        tuple(rotation), tuple(pairs), (over_first & 1,) * t, boundary
    )


def tangle_from_crossings(
    d: Diagram, crossings: frozenset[int], boundary: tuple[int, int, int, int]
) -> Tangle:
    """Cut the sub-diagram on a crossing subset out of a full diagram.

    boundary lists the four outward darts in their intended
    (nw, ne, se, sw) roles; the caller decides the geometry.
    """
    order = sorted(crossings)
    index = {c: k for k, c in enumerate(order)}
    relab = {}
    for c in order:
        for pos, x in enumerate(d.rotation[c]):
            relab[x] = 4 * index[c] + pos
    rotation = tuple((4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3) for k in range(len(order)))
    pairs = []
    loose = set()
    for c in order:
        for x in d.rotation[c]:
            y = d.alpha[x]
            if d.dart_crossing[y] in crossings:
                if x < y:
                    pairs.append((relab[x], relab[y]))
            else:
                loose.add(x)
    if loose != set(boundary):
        raise InvalidTangle("boundary darts must be exactly the outward darts")
    over = tuple(d.over_pair[c] for c in order)
    return Tangle(rotation, tuple(pairs), over, tuple(relab[x] for x in boundary))
