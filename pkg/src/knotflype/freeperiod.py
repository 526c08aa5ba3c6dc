"""Free-period templates: p tangle copies on a necklace with a twist box.

A free period of odd prime order p is realized diagrammatically by a
cyclic arrangement of p isomorphic 4-ended tangles joined by two
parallel strands, with one band segment carrying n full twists (2|n|
crossings); the symmetry shifts the copies and screws along the band.
This module builds such diagrams from a tangle and recovers the
decomposition from a diagram by scanning the flype graph nodes for a
crossing subset whose p-fold reclosure reproduces the node.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .builders import solve_alternation
from .canonical import canonical_code
from .diagram import (
    Diagram,
    export_pd,
    validate_alternating,
    validate_prime,
    validate_reduced,
)
from .errors import (
    InvalidDiagram,
    InvalidTangle,
    LimitExceeded,
    NotAKnot,
    NotPrime,
    NotReduced,
)
from .flype import FlypeEnumerator, _require_flypable
from .symmetry import _is_odd_prime
from .tangles import Tangle, tangle_from_crossings


def construct_free_periodic(tangle: Tangle, p: int, n: int) -> Diagram:
    """Close p copies of the tangle in a cycle with n full twists.

    Copies are chained west-to-east (ne/se of one copy onto nw/sw of the
    next) and the band closing the cycle carries 2|n| twist crossings.
    The over/under assignment is the alternating one agreeing with the
    tangle's own labels; the twist handedness this forces must match the
    sign of n.  The closure must come out a reduced prime knot diagram.
    """
    if not _is_odd_prime(p):
        raise InvalidDiagram(f"copy count must be an odd prime, got {p}")
    if n == 0:
        # without the twist box the closure is the ordinary periodic one,
        # whose rotation fixes an axis and is therefore not free
        raise InvalidTangle("twist count must be non-zero")
    t = tangle.n
    k = abs(n)
    rotation: list[tuple[int, int, int, int]] = []
    pairs: list[tuple[int, int]] = []
    bounds = []
    for i in range(p):
        off = 4 * t * i
        rotation.extend(tuple(x + off for x in q) for q in tangle.rotation)
        pairs.extend((a + off, b + off) for a, b in tangle.pairs)
        bounds.append(tuple(x + off for x in tangle.boundary))
    for i in range(p - 1):
        _, ne, se, _ = bounds[i]
        nw2, _, _, sw2 = bounds[i + 1]
        pairs.append((ne, nw2))
        pairs.append((se, sw2))
    _, ne_last, se_last, _ = bounds[p - 1]
    nw0, _, _, sw0 = bounds[0]
    base = 4 * t * p
    box = []
    for i in range(2 * k):  # a full twist is two crossings
        b = base + 4 * i
        rotation.append((b, b + 1, b + 2, b + 3))
        if i + 1 < 2 * k:
            box.append((b + 1, b + 4))
            box.append((b + 2, b + 7))
    first, last = base, base + 4 * (2 * k - 1)
    # two band orientations through the box; exactly one is planar
    closing = [
        box + [(ne_last, first), (se_last, first + 3),
               (last + 1, nw0), (last + 2, sw0)],
        box + [(ne_last, first + 3), (se_last, first),
               (last + 2, nw0), (last + 1, sw0)],
    ]
    diagram = None
    for close in closing:
        alpha = [-1] * (4 * len(rotation))
        for a, b in pairs + close:
            alpha[a], alpha[b] = b, a
        over = solve_alternation(rotation, alpha)
        if over is None:
            continue
        if over[0] != tangle.over_pair[0]:
            over = tuple(x ^ 1 for x in over)
        cand = Diagram(tuple(rotation), tuple(alpha), over)
        if cand.is_planar and cand.is_connected:
            diagram = cand
            break
    if diagram is None:
        raise InvalidTangle("tangle boundary pattern admits no planar closure")
    if any(
        diagram.over_pair[t * i + c] != tangle.over_pair[c]
        for i in range(p)
        for c in range(t)
    ):
        raise InvalidTangle("tangle labels are not alternating in the closure")
    if diagram.component_count != 1:
        raise NotAKnot("closure has more than one component")
    if k:
        sign = diagram.crossing_signs[t * p]
        if any(s != sign for s in diagram.crossing_signs[t * p :]):
            raise InvalidDiagram("twist box crossings disagree in sign")
        if sign != (1 if n > 0 else -1):
            raise InvalidTangle("tangle chirality forces the opposite twist sign")
    assert validate_alternating(diagram).ok
    if not validate_reduced(diagram).ok:
        raise NotReduced("closure has a nugatory crossing")
    if not validate_prime(diagram).ok:
        raise NotPrime("closure is a connected sum")
    return diagram


@dataclass(frozen=True)
class FreePeriodReport:
    """Witness of a free period: the template decomposition of a node."""

    p: int
    tangle: Tangle
    twist_count: int
    diagram: Diagram

    def __post_init__(self) -> None:
        built = construct_free_periodic(self.tangle, self.p, self.twist_count)
        if canonical_code(built) != canonical_code(self.diagram):
            raise InvalidDiagram("tangle reclosure does not reproduce the diagram")

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "twist_count": self.twist_count,
            "diagram_pd": export_pd(self.diagram),
            "tangle": {
                "rotation": [list(q) for q in self.tangle.rotation],
                "pairs": [list(e) for e in self.tangle.pairs],
                "over_pair": list(self.tangle.over_pair),
                "boundary": list(self.tangle.boundary),
            },
        }


@dataclass(frozen=True)
class FreePeriodDetection:
    report: Optional[FreePeriodReport]
    conclusive: bool
    reason: str

    @property
    def found(self) -> bool:
        return self.report is not None


def _connected_subsets(d: Diagram, size: int) -> Iterator[frozenset[int]]:
    """Connected crossing subsets of the given size, each once."""
    adj = d.crossing_adjacency

    def grow(current: frozenset[int], frontier: set[int], banned: set[int]):
        if len(current) == size:
            yield current
            return
        frontier = set(frontier)
        banned = set(banned)
        while frontier:
            v = min(frontier)
            frontier.discard(v)
            new_frontier = frontier | (set(adj[v]) - current - banned - {v})
            yield from grow(current | {v}, new_frontier, banned)
            banned.add(v)

    for start in range(d.n):
        yield from grow(frozenset([start]), set(adj[start]), set(range(start)))


def _boundary_darts(d: Diagram, subset: frozenset[int]) -> list[int]:
    return [
        x
        for c in sorted(subset)
        for x in d.rotation[c]
        if d.dart_crossing[d.alpha[x]] not in subset
    ]


def _stub_cycle(d: Diagram, subset: frozenset[int], stubs: list[int]) -> Optional[list[int]]:
    """Cyclic order of the four stubs around the disk holding the subset.

    Walks the subset's outer boundary face; if that walk does not visit
    all four stubs in one cycle, the subset is not a disk tangle.
    """
    order = [stubs[0]]
    x = stubs[0]
    while True:
        y = d.sigma[x]
        while d.dart_crossing[d.alpha[y]] in subset:
            y = d.sigma[d.alpha[y]]
        if y == stubs[0]:
            break
        if y in order or len(order) > 4:
            return None
        order.append(y)
        x = y
    return order if len(order) == 4 else None


def _node_reports(node: Diagram, p: int) -> Iterator[FreePeriodReport]:
    """Template decompositions of one diagram, largest twist box first."""
    m = node.n
    code = canonical_code(node)
    # k = 0 is excluded: a closure with no twist box is the ordinary
    # periodic one, whose rotation is not free
    for k in range((m - p) // 2, 0, -1):
        if (m - 2 * k) % p:
            continue
        t = (m - 2 * k) // p
        if t < 1:
            continue
        twists = (k, -k)
        for subset in _connected_subsets(node, t):
            stubs = _boundary_darts(node, subset)
            if len(stubs) != 4:
                continue
            cyc = _stub_cycle(node, subset, stubs)
            if cyc is None:
                continue
            assignments = [tuple(cyc[(s + i) % 4] for i in range(4)) for s in range(4)]
            assignments += [tuple(reversed(a)) for a in assignments]
            for roles in assignments:
                tangle = tangle_from_crossings(node, subset, roles)
                for n in twists:
                    try:
                        built = construct_free_periodic(tangle, p, n)
                    except (InvalidDiagram, InvalidTangle, NotAKnot,
                            NotReduced, NotPrime):
                        continue
                    if canonical_code(built) == code:
                        yield FreePeriodReport(p, tangle, n, node)


def detect_free_period(
    seed: Diagram,
    p: int,
    *,
    max_nodes: int | None = None,
    max_edges: int | None = None,
) -> FreePeriodDetection:
    """Decide whether the knot has a free period of odd prime order p.

    Every flype-graph node is scanned for the necklace template; a hit
    is a constructive witness.  A clean sweep certifies absence because
    a free-periodic alternating knot must have a free-periodic reduced
    alternating diagram, hence a matching node.  No crossing-count
    divisibility obstruction applies: the twist box absorbs any excess.
    """
    _require_flypable(seed)
    if not _is_odd_prime(p):
        raise InvalidDiagram(f"period must be an odd prime, got {p}")
    enum = FlypeEnumerator(seed, max_nodes=max_nodes, max_edges=max_edges)
    try:
        for node in enum:
            for report in _node_reports(node, p):
                return FreePeriodDetection(report, True, "template witness found")
    except LimitExceeded:
        return FreePeriodDetection(
            None, False, "flype graph truncated before a witness"
        )
    if not enum.complete:
        return FreePeriodDetection(
            None, False, "flype graph truncated before a witness"
        )
    return FreePeriodDetection(None, True, "no node matches the template")
