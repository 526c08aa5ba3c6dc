"""Diagram automorphisms, odd-prime period detection, and quotients.

A diagram automorphism is a dart permutation preserving the crossing
structure and over/under labels.  Orientation-preserving automorphisms
commute with the rotation; orientation-reversing ones conjugate it to
its inverse.  An odd prime p is a period of the knot exactly when some
reduced alternating diagram of it admits an orientation-preserving
automorphism of order p whose only fixed cells are two faces (the
rotation axis punctures the sphere inside those faces, away from the
knot), so detection scans every node of the flype graph for such a
symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .builders import twist_closure
from .canonical import canonical_code, isomorphic
from .diagram import Diagram, build_diagram, export_pd
from .errors import InvalidDiagram, InvalidReport, LimitExceeded
from .flype import FlypeEnumerator, _require_flypable


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    """A diagram automorphism with its order and fixed cells."""

    dart_map: tuple[int, ...]
    order: int
    orientation_preserving: bool
    fixed_faces: tuple[int, ...]
    fixed_crossings: tuple[int, ...]
    fixed_edges: tuple[int, ...]

    @property
    def fixed_cells(self) -> list[tuple[str, int]]:
        return (
            [("face", f) for f in self.fixed_faces]
            + [("crossing", c) for c in self.fixed_crossings]
            + [("edge", e) for e in self.fixed_edges]
        )

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition of the dart permutation."""
        seen = [False] * len(self.dart_map)
        out = []
        for d0 in range(len(self.dart_map)):
            if seen[d0]:
                continue
            cyc = []
            d = d0
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = self.dart_map[d]
            out.append(tuple(cyc))
        return out


def _perm_order(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    order = 1
    for d0 in range(len(perm)):
        if seen[d0]:
            continue
        length = 0
        d = d0
        while not seen[d]:
            seen[d] = True
            length += 1
            d = perm[d]
        g = _gcd(order, length)
        order = order // g * length
    return order


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _propagate(
    d: Diagram, target_sigma: tuple[int, ...], image_of_zero: int
) -> Optional[tuple[int, ...]]:
    """Extend dart 0 -> image to a full automorphism, or fail."""
    nd = d.num_darts
    m = [-1] * nd
    m[0] = image_of_zero
    stack = [0]
    while stack:
        x = stack.pop()
        for xn, yn in (
            (d.sigma[x], target_sigma[m[x]]),
            (d.alpha[x], d.alpha[m[x]]),
        ):
            if m[xn] < 0:
                m[xn] = yn
                stack.append(xn)
            elif m[xn] != yn:
                return None
    if any(d.is_over(x) != d.is_over(m[x]) for x in range(nd)):
        return None
    return tuple(m)


def _fixed_cells(
    d: Diagram, perm: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    faces = tuple(
        i
        for i, cyc in enumerate(d.faces)
        if {perm[x] for x in cyc} == set(cyc)
    )
    crossings = tuple(
        c
        for c in range(d.n)
        if {perm[x] for x in d.rotation[c]} == set(d.rotation[c])
    )
    edges = tuple(
        a for a, b in d.edges if {perm[a], perm[b]} == {a, b}
    )
    return faces, crossings, edges


def _as_symmetry(d: Diagram, perm: tuple[int, ...], preserving: bool) -> Symmetry:
    faces, crossings, edges = _fixed_cells(d, perm)
    return Symmetry(perm, _perm_order(perm), preserving, faces, crossings, edges)


def automorphisms(d: Diagram) -> list[Symmetry]:
    """All label-preserving automorphisms, both orientation classes.

    Anchoring dart 0's image determines the rest, so there are at most
    8n candidates to propagate.
    """
    out = []
    seen = set()
    for preserving, target in ((True, d.sigma), (False, d.sigma_inv)):
        for t in range(d.num_darts):
            perm = _propagate(d, target, t)
            if perm is not None and perm not in seen:
                seen.add(perm)
                out.append(_as_symmetry(d, perm, preserving))
    return out


# ---------------------------------------------------------------------------
# Period detection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodReport:
    """Witness that the knot has period p: a diagram of the knot with an
    order-p rotation whose axis meets the sphere in two faces."""

    p: int
    diagram: Diagram
    symmetry: Symmetry

    def __post_init__(self) -> None:
        s = self.symmetry
        if s.order != self.p or not s.orientation_preserving:
            raise InvalidReport("symmetry must be orientation-preserving of order p")
        if len(s.fixed_faces) != 2 or s.fixed_crossings or s.fixed_edges:
            raise InvalidReport("axis must pierce exactly two faces off the knot")
        if self.diagram.n % self.p:
            raise InvalidReport("crossing count not divisible by the period")

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "diagram_pd": export_pd(self.diagram),
            "dart_cycles": [list(c) for c in self.symmetry.cycles()],
            "fixed_faces": [
                list(self.diagram.faces[f]) for f in self.symmetry.fixed_faces
            ],
        }


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of a period search.

    conclusive is False only when the flype graph hit an enumeration
    cap before any witness appeared, so absence could not be certified.
    """

    report: Optional[PeriodReport]
    conclusive: bool
    reason: str
    reports: tuple[PeriodReport, ...] = field(default=())

    @property
    def found(self) -> bool:
        return self.report is not None


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, int(p**0.5) + 1, 2))


def period_symmetries(d: Diagram, p: int) -> Iterator[Symmetry]:
    """Order-p rotations of the diagram with axis in two faces."""
    for s in automorphisms(d):
        if (
            s.order == p
            and s.orientation_preserving
            and len(s.fixed_faces) == 2
            and not s.fixed_crossings
            and not s.fixed_edges
        ):
            yield s


def is_two_strand_torus(d: Diagram) -> bool:
    """Whether the diagram is the standard closed 2-strand twist T(2,n)."""
    return d.n >= 3 and d.n % 2 == 1 and isomorphic(
        d, twist_closure(d.n), mirror=True
    )


def detect_period(
    seed: Diagram,
    p: int,
    *,
    use_shortcuts: bool = True,
    census: bool = False,
    max_nodes: int | None = None,
    max_edges: int | None = None,
) -> DetectionResult:
    """Decide whether the knot of this diagram has period p.

    Soundness: any returned report exhibits the rotation.  Completeness
    rests on every reduced alternating diagram of the knot being a
    flype-graph node, so a clean sweep with no witness certifies "no".
    With census=True the whole graph is searched and every witness is
    collected; otherwise the first one (in canonical-code order of
    discovery) is returned.
    """
    _require_flypable(seed)
    if not _is_odd_prime(p):
        raise InvalidDiagram(f"period must be an odd prime, got {p}")
    if seed.n % p:
        return DetectionResult(
            None, True, f"divisibility: {p} does not divide crossing count {seed.n}"
        )
    if use_shortcuts and is_two_strand_torus(seed):
        # Closed 2-strand twists are torus knots T(2,n): the period
        # exists iff p divides n, and the standard diagram realizes it.
        hits = tuple(
            PeriodReport(p, seed, s) for s in period_symmetries(seed, p)
        )
        if hits:
            return DetectionResult(
                hits[0], True, "torus pattern witness", hits if census else (hits[0],)
            )
        return DetectionResult(None, True, "torus pattern without a p-rotation")
    enum = FlypeEnumerator(seed, max_nodes=max_nodes, max_edges=max_edges)
    hits: list[PeriodReport] = []
    truncated = False
    try:
        for node in enum:
            for s in period_symmetries(node, p):
                hits.append(PeriodReport(p, node, s))
                if census:
                    break  # one witness per node is enough for a census
                return DetectionResult(hits[0], True, "witness found", tuple(hits))
    except LimitExceeded:
        truncated = True
    if not enum.complete:
        truncated = True
    if hits:
        return DetectionResult(hits[0], True, "witness found", tuple(hits))
    if truncated:
        return DetectionResult(None, False, "flype graph truncated before a witness")
    return DetectionResult(None, True, "no diagram admits a p-rotation off the knot")


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


def quotient(report: PeriodReport) -> Diagram:
    """Orbit quotient of the diagram by its rotation: n/p crossings.

    The rotation acts freely on darts (no fixed crossings or edges), so
    rotation and involution descend to the orbit set.  The result is
    alternating whenever the input is, though possibly non-reduced.
    """
    d = report.diagram
    f = report.symmetry.dart_map
    p = report.symmetry.order
    # orbit of each dart, represented by the orbit's crossing of least id
    orbit_of: dict[int, int] = {}
    rep_crossings = []
    for c in range(d.n):
        x = d.rotation[c][0]
        y = x
        least = c
        for _ in range(p - 1):
            y = f[y]
            least = min(least, d.dart_crossing[y])
        if least == c:
            rep_crossings.append(c)
    rep_index = {c: k for k, c in enumerate(rep_crossings)}

    def rep_dart(x: int) -> int:
        y = x
        for _ in range(p):
            c = d.dart_crossing[y]
            if c in rep_index:
                k = rep_index[c]
                return 4 * k + d.rotation[c].index(y)
            y = f[y]
        raise InvalidReport("symmetry does not act freely on darts")

    for x in range(d.num_darts):
        y = x
        for j in range(1, p):
            y = f[y]
            if y == x and j < p:
                raise InvalidReport("symmetry does not act freely on darts")

    rotation = [(4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3) for k in range(len(rep_crossings))]
    alpha_pairs = set()
    for c in rep_crossings:
        for pos, x in enumerate(d.rotation[c]):
            a = 4 * rep_index[c] + pos
            b = rep_dart(d.alpha[x])
            alpha_pairs.add((min(a, b), max(a, b)))
    over = tuple(d.over_pair[c] for c in rep_crossings)
    return build_diagram(rotation, alpha_pairs, over)


def remove_curls(d: Diagram) -> Diagram:
    """Strip reducible crossings (one-sided kinks) until none remain.

    Never applied implicitly: quotients are returned as computed, and
    callers opt in to this cleanup.
    """
    while True:
        if d.n == 0:
            return d
        curl = None
        for c in range(d.n):
            q = d.rotation[c]
            if d.alpha[q[0]] == q[1] or d.alpha[q[1]] == q[2]:
                curl = c
                break
        if curl is None:
            return d
        if d.n == 1:
            raise InvalidDiagram("diagram reduces to the unknot (no crossings)")
        q = d.rotation[curl]
        if d.alpha[q[0]] == q[1]:
            loose = (q[2], q[3])
        else:
            loose = (q[3], q[0])
        # splice the two loose ends together, dropping the crossing
        ends = (d.alpha[loose[0]], d.alpha[loose[1]])
        keep = [c for c in range(d.n) if c != curl]
        old_to_new = {}
        for k, c in enumerate(keep):
            for pos, x in enumerate(d.rotation[c]):
                old_to_new[x] = 4 * k + pos
        rotation = [(4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3) for k in range(len(keep))]
        pairs = set()
        if ends[0] in old_to_new and ends[1] in old_to_new:
            pairs.add(tuple(sorted((old_to_new[ends[0]], old_to_new[ends[1]]))))
        for c in keep:
            for x in d.rotation[c]:
                y = d.alpha[x]
                if y in old_to_new and x < y:
                    pairs.add((old_to_new[x], old_to_new[y]))
        over = tuple(d.over_pair[c] for c in keep)
        d = build_diagram(rotation, pairs, over)
