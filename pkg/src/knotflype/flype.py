"""Flype sites, flype application, and the flype graph.

A flype is the move that slides a crossing across a tangle, flipping the
tangle over.  It is described combinatorially by a site: the crossing to
be removed, the pair of edges the flype curve crosses, and the set of
crossings inside the flipped tangle.  The flype graph of a diagram is the
closure of the diagram under all flypes, with nodes identified by
canonical code; for a reduced alternating prime knot it is exactly the
set of its reduced alternating diagrams.

Site search uses the facial structure: the flype curve passes through
the two corner faces of the removed crossing that separate its dart
pairs, so the crossed edges must bound those faces (and share a third
face between them).  Candidates are verified by a connectivity check.
A quadratic all-pairs search is kept as ``find_flype_sites_brute`` for
cross-checking.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .canonical import Code, canonical_code, canonical_dart_map, canonical_form
from .diagram import (
    Diagram,
    validate_alternating,
    validate_prime,
    validate_reduced,
)
from .errors import InvalidDiagram, InvalidSite, LimitExceeded


@dataclass(frozen=True)
class FlypeSite:
    """One legal flype: removed crossing, crossed edge pair, flipped side.

    target_edges holds edge ids (an edge's id is its least dart) in
    ascending order; domain_side is the set of crossings strictly inside
    the flipped tangle, never containing crossing_removed.
    """

    crossing_removed: int
    target_edges: tuple[int, int]
    domain_side: frozenset[int] = field(compare=True)

    def __post_init__(self) -> None:
        if self.target_edges[0] >= self.target_edges[1]:
            object.__setattr__(
                self, "target_edges", tuple(sorted(self.target_edges))
            )
        if self.crossing_removed in self.domain_side or not self.domain_side:
            raise InvalidSite("domain must be non-empty and exclude the crossing")

    def __lt__(self, other: "FlypeSite") -> bool:
        return self._key() < other._key()

    def _key(self):
        return (self.crossing_removed, self.target_edges, sorted(self.domain_side))

    def to_dict(self) -> dict:
        return {
            "crossing_removed": self.crossing_removed,
            "target_edges": list(self.target_edges),
            "domain_side": sorted(self.domain_side),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FlypeSite":
        return cls(
            data["crossing_removed"],
            tuple(data["target_edges"]),
            frozenset(data["domain_side"]),
        )


def _require_flypable(d: Diagram) -> None:
    for check, label in (
        (validate_alternating, "alternating"),
        (validate_reduced, "reduced"),
        (validate_prime, "prime"),
    ):
        ok, witness = check(d)
        if not ok:
            raise InvalidDiagram(f"diagram is not {label} (witness {witness})")


def _split_sides(
    d: Diagram, c: int, in_darts: set[int], cut: set[int]
) -> Optional[frozenset[int]]:
    """Crossings on the in-dart side if the cut separates the split crossing.

    Crossing c is split into two degree-2 vertices along in_darts; the
    two cut edge ids are removed.  Returns None unless exactly two
    components result, one per half of c, each containing a crossing.
    """
    n = d.n
    v_in, v_out = n, n + 1

    def vertex(dart: int) -> int:
        k = d.dart_crossing[dart]
        if k != c:
            return k
        return v_in if dart in in_darts else v_out

    adj: list[list[int]] = [[] for _ in range(n + 2)]
    for a, b in d.edges:
        if min(a, b) in cut:
            continue
        va, vb = vertex(a), vertex(b)
        adj[va].append(vb)
        adj[vb].append(va)

    def component(start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    side_in = component(v_in)
    if v_out in side_in:
        return None
    side_out = component(v_out)
    # all n+1 split-graph vertices must land in one of the two sides
    if len(side_in) + len(side_out) != n + 1:
        return None
    inside = frozenset(k for k in side_in if k < n)
    # non-trivial tangles on both sides: a one-crossing tangle only admits
    # the flype that slides the crossing around a clasp, an isotopy
    if len(inside) < 2 or len(inside) > n - 3:
        return None
    return inside


def _corner_faces(d: Diagram, c: int, i: int) -> tuple[int, int]:
    """Faces crossed by a flype curve splitting darts (i, i+1) from the rest."""
    quad = d.rotation[c]
    return d.face_of[quad[(i + 2) % 4]], d.face_of[quad[i]]


def _arcs_realizable(d: Diagram, f1: int, f2: int, e1: int, e2: int) -> bool:
    """Whether a simple closed curve can cross e1 then e2 between the corners.

    The curve's first arc reaches e1 inside face f1 and the last arc
    leaves e2 inside face f2; since the curve crosses each edge
    transversally, the middle arc runs on the far side of e1 from f1 and
    on the far side of e2 from f2, and those two sides must be one face.
    """
    sides1 = (d.face_of[e1], d.face_of[d.alpha[e1]])
    sides2 = (d.face_of[e2], d.face_of[d.alpha[e2]])
    for j in (0, 1):
        if sides1[j] != f1:
            continue
        mid = sides1[j ^ 1]
        for k in (0, 1):
            if sides2[k] == f2 and sides2[k ^ 1] == mid:
                return True
    return False


def _edges_of_face(d: Diagram) -> list[set[int]]:
    out: list[set[int]] = []
    for cyc in d.faces:
        out.append({d.edge_id(x) for x in cyc})
    return out


def _candidate_sites(
    d: Diagram, pairs_for: "callable"
) -> set[FlypeSite]:
    sites: set[FlypeSite] = set()
    for c in range(d.n):
        quad = d.rotation[c]
        for i in range(4):
            in_darts = {quad[i], quad[(i + 1) % 4]}
            f1, f2 = _corner_faces(d, c, i)
            for e1, e2 in pairs_for(c, i):
                if e1 == e2:
                    continue
                if not _arcs_realizable(d, f1, f2, e1, e2):
                    continue
                inside = _split_sides(d, c, in_darts, {e1, e2})
                if inside is None or d.dart_crossing[d.alpha[quad[i]]] not in inside:
                    continue
                site = FlypeSite(c, (min(e1, e2), max(e1, e2)), inside)
                if site in sites:
                    continue
                try:
                    apply_flype(d, site)
                except InvalidSite:
                    continue
                sites.add(site)
    return sites


def find_flype_sites(d: Diagram) -> set[FlypeSite]:
    """All legal flype sites of a reduced prime alternating diagram."""
    _require_flypable(d)
    face_edges = _edges_of_face(d)

    def pairs_for(c: int, i: int):
        f1, f2 = _corner_faces(d, c, i)
        for e1 in face_edges[f1]:
            for e2 in face_edges[f2]:
                yield e1, e2

    return _candidate_sites(d, pairs_for)


def find_flype_sites_brute(d: Diagram) -> set[FlypeSite]:
    """All-edge-pairs oracle for find_flype_sites (slow, for testing).

    The facial constraint is still enforced: each crossed edge must
    bound the corresponding corner face of the removed crossing.
    """
    _require_flypable(d)
    all_edges = [min(a, b) for a, b in d.edges]
    face_edges = _edges_of_face(d)

    def pairs_for(c: int, i: int):
        f1, f2 = _corner_faces(d, c, i)
        for e1 in all_edges:
            for e2 in all_edges:
                if e1 in face_edges[f1] and e2 in face_edges[f2]:
                    yield e1, e2

    return _candidate_sites(d, pairs_for)


def _check_site(d: Diagram, s: FlypeSite) -> int:
    """Validate a site against a diagram, returning the split corner index."""
    c = s.crossing_removed
    if not (0 <= c < d.n):
        raise InvalidSite(f"no crossing {c}")
    quad = d.rotation[c]
    e1, e2 = s.target_edges
    edge_ids = {min(a, b) for a, b in d.edges}
    if e1 == e2:
        raise InvalidSite("target edges must be distinct")
    if e1 not in edge_ids or e2 not in edge_ids:
        raise InvalidSite("target edges not present in diagram")
    corner = -1
    for i in range(4):
        if (
            d.dart_crossing[d.alpha[quad[i]]] in s.domain_side
            and d.dart_crossing[d.alpha[quad[(i + 1) % 4]]] in s.domain_side
        ):
            corner = i
            break
    if corner < 0:
        raise InvalidSite("crossing does not face the claimed domain")
    in_darts = {quad[corner], quad[(corner + 1) % 4]}
    inside = _split_sides(d, c, in_darts, {e1, e2})
    if inside != s.domain_side:
        raise InvalidSite("target edges do not cut off the claimed domain")
    return corner


def apply_flype(d: Diagram, s: FlypeSite) -> tuple[Diagram, int]:
    """Perform the flype, returning the new diagram and created crossing id.

    The removed crossing's darts are reused for the created crossing, so
    every surviving crossing keeps its id and the created crossing id
    equals s.crossing_removed.
    """
    corner = _check_site(d, s)
    c = s.crossing_removed
    quad = d.rotation[c]
    x1, x2 = quad[corner], quad[(corner + 1) % 4]
    y1, y2 = quad[(corner + 2) % 4], quad[(corner + 3) % 4]
    a1, a2 = d.alpha[x1], d.alpha[x2]
    b1, b2 = d.alpha[y1], d.alpha[y2]

    alpha = list(d.alpha)
    # the tangle slides off the crossing: its stubs join the outside stubs
    alpha[a1], alpha[b1] = b1, a1
    alpha[a2], alpha[b2] = b2, a2

    # inside dart of each crossed edge; the outside end is looked up after
    # the deletion so that edges formerly incident to c resolve correctly
    def inside_dart(e: int) -> int:
        u, v = e, d.alpha[e]
        if d.dart_crossing[u] in s.domain_side:
            return u
        if d.dart_crossing[v] in s.domain_side:
            return v
        raise InvalidSite("crossed edge does not touch the domain")

    p1 = inside_dart(s.target_edges[0])
    p2 = inside_dart(s.target_edges[1])
    q1, q2 = alpha[p1], alpha[p2]

    # the crossing reappears across the cut; reuse the old dart labels
    z1, z2, w1, w2 = quad
    for u, v in ((z1, p1), (w1, q1), (z2, p2), (w2, q2)):
        alpha[u], alpha[v] = v, u
    alpha = tuple(alpha)

    base_rotation = []
    over = list(d.over_pair)
    for k, rq in enumerate(d.rotation):
        if k in s.domain_side:
            base_rotation.append((rq[0], rq[3], rq[2], rq[1]))
            over[k] ^= 1
        else:
            base_rotation.append(rq)

    # over/under of the created crossing is forced by alternation: each
    # new dart must be opposite its partner, whose over-ness flipped iff
    # it sits in the domain
    def over_after(dart: int) -> bool:
        return d.is_over(dart) ^ (d.dart_crossing[dart] in s.domain_side)

    ov1 = not over_after(p1)
    ov2 = not over_after(p2)
    if ov1 != (not over_after(q1)) or ov2 != (not over_after(q2)) or ov1 == ov2:
        raise InvalidSite("site cannot be completed to an alternating diagram")

    survivors = None
    for cand in ((z1, z2, w1, w2), (z1, w2, w1, z2)):
        rotation = list(base_rotation)
        rotation[c] = cand
        over_cand = list(over)
        over_cand[c] = 0 if ov1 else 1
        trial = Diagram(tuple(rotation), alpha, tuple(over_cand))
        if trial.is_planar:
            assert survivors is None, "flype reconnection is ambiguous"
            survivors = trial
    if survivors is None:
        raise InvalidSite("no planar reconnection exists")
    return survivors, c


# ---------------------------------------------------------------------------
# Flype graph
# ---------------------------------------------------------------------------

GraphEdge = tuple[Code, FlypeSite, Code]


@dataclass
class FlypeGraph:
    """Closure of a diagram under flypes, nodes keyed by canonical code."""

    nodes: dict[Code, Diagram]
    edges: set[GraphEdge]
    seed: Code
    complete: bool = True
    mirror: bool = False

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_codes(self) -> list[Code]:
        return sorted(self.nodes)


class FlypeEnumerator:
    """Lazy breadth-first closure of a seed diagram under flypes.

    Iterating yields canonical representatives as they are discovered;
    after exhaustion, ``complete`` says whether the closure finished
    within the node cap.  Nodes and edges accumulated so far are exposed
    for conversion into a FlypeGraph.
    """

    def __init__(
        self,
        seed: Diagram,
        *,
        mirror: bool = False,
        max_nodes: Optional[int] = None,
        max_edges: Optional[int] = None,
    ) -> None:
        _require_flypable(seed)
        self.mirror = mirror
        self.max_nodes = max_nodes
        self.max_edges = max_edges
        rep = canonical_form(seed, mirror=mirror)
        self.seed_code = canonical_code(rep, mirror=mirror)
        self.nodes: dict[Code, Diagram] = {self.seed_code: rep}
        self.edges: set[GraphEdge] = set()
        self._queue: deque[Code] = deque([self.seed_code])
        self.complete = False
        self.exhausted = False

    def __iter__(self) -> Iterator[Diagram]:
        yield self.nodes[self.seed_code]
        while self._queue:
            src = self._queue.popleft()
            rep = self.nodes[src]
            for site in sorted(find_flype_sites(rep)):
                out, _ = apply_flype(rep, site)
                dst_rep = canonical_form(out, mirror=self.mirror)
                dst = canonical_code(dst_rep, mirror=self.mirror)
                fresh = dst not in self.nodes
                if fresh:
                    # admit the node before its edge so truncation never
                    # records an edge whose endpoint is missing
                    if (
                        self.max_nodes is not None
                        and len(self.nodes) >= self.max_nodes
                    ):
                        self.exhausted = True
                        return
                    self.nodes[dst] = dst_rep
                    self._queue.append(dst)
                if (src, site, dst) not in self.edges:
                    if (
                        self.max_edges is not None
                        and len(self.edges) >= self.max_edges
                    ):
                        self.exhausted = True
                        return
                    self.edges.add((src, site, dst))
                if fresh:
                    yield dst_rep
        self.complete = True
        self.exhausted = True

    def graph(self) -> FlypeGraph:
        return FlypeGraph(
            nodes=dict(self.nodes),
            edges=set(self.edges),
            seed=self.seed_code,
            complete=self.complete,
            mirror=self.mirror,
        )


def build_flype_graph(
    seed: Diagram,
    *,
    max_nodes: Optional[int] = None,
    max_edges: Optional[int] = None,
    mirror: bool = False,
) -> FlypeGraph:
    """BFS closure of seed under flypes with canonical-code dedup.

    Raises LimitExceeded (carrying the partial graph, flagged
    incomplete) if a cap is hit first.
    """
    enum = FlypeEnumerator(
        seed, mirror=mirror, max_nodes=max_nodes, max_edges=max_edges
    )
    for _ in enum:
        pass
    if not enum.complete:
        raise LimitExceeded(
            f"flype graph capped at {len(enum.nodes)} nodes"
            f" / {len(enum.edges)} edges",
            partial=enum.graph(),
        )
    return enum.graph()


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _code_hash(code: Code) -> str:
    return hashlib.sha256(repr(code).encode()).hexdigest()[:12]


def _diagram_to_dict(d: Diagram) -> dict:
    return {
        "rotation": [list(q) for q in d.rotation],
        "alpha": list(d.alpha),
        "over_pair": list(d.over_pair),
    }


def _diagram_from_dict(data: dict) -> Diagram:
    return Diagram(
        tuple(tuple(q) for q in data["rotation"]),
        tuple(data["alpha"]),
        tuple(data["over_pair"]),
    )


def graph_to_json(g: FlypeGraph) -> str:
    codes = g.sorted_codes()
    index = {code: i for i, code in enumerate(codes)}
    payload = {
        "seed": index[g.seed],
        "complete": g.complete,
        "mirror": g.mirror,
        "nodes": [
            {"code": list(code), "diagram": _diagram_to_dict(g.nodes[code])}
            for code in codes
        ],
        "edges": [
            {"source": index[src], "site": site.to_dict(), "target": index[dst]}
            for src, site, dst in sorted(
                g.edges, key=lambda e: (e[0], e[1]._key(), e[2])
            )
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def graph_from_json(text: str) -> FlypeGraph:
    payload = json.loads(text)
    codes = [tuple(entry["code"]) for entry in payload["nodes"]]
    nodes = {
        code: _diagram_from_dict(entry["diagram"])
        for code, entry in zip(codes, payload["nodes"])
    }
    edges = {
        (
            codes[e["source"]],
            FlypeSite.from_dict(e["site"]),
            codes[e["target"]],
        )
        for e in payload["edges"]
    }
    return FlypeGraph(
        nodes=nodes,
        edges=edges,
        seed=codes[payload["seed"]],
        complete=payload["complete"],
        mirror=payload["mirror"],
    )


def graph_to_dot(g: FlypeGraph) -> str:
    codes = g.sorted_codes()
    index = {code: i for i, code in enumerate(codes)}
    lines = ["digraph flypes {"]
    for code in codes:
        rep = g.nodes[code]
        lines.append(
            f'  n{index[code]} [label="{_code_hash(code)} ({rep.n} crossings)"];'
        )
    for src, site, dst in sorted(g.edges, key=lambda e: (e[0], e[1]._key(), e[2])):
        _, created = apply_flype(g.nodes[src], site)
        lines.append(
            f'  n{index[src]} -> n{index[dst]}'
            f' [label="-{site.crossing_removed}+{created}"];'
        )
    lines.append("}")
    return "\n".join(lines)
