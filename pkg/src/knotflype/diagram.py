"""Knot diagrams as combinatorial maps on the sphere.

A diagram with n crossings is stored as dart-level permutation data: the
darts are the integers 0..4n-1, each crossing owns four darts listed in
counterclockwise rotation order, and a fixed-point-free involution pairs
the two darts of every edge.  Faces are orbits of rotation-after-involution,
so the sphere condition reads F = V + 2.  Everything downstream (flypes,
canonical codes, symmetries) works on this representation.

Conventions, fixed once and tested bit-exactly:

* PD code ``X(a,b,c,d)``: `a` is the incoming under-strand edge and the
  four edge labels are listed counterclockwise around the crossing.
* DT code: comma-separated even integers, all positive; entry i is the
  even passage number paired with odd passage 2i-1.  An all-positive code
  is realized as the alternating diagram whose odd passages are
  over-passes.  Realization is defined up to reflection; the parser
  returns the realization with the lexicographically least canonical code.
* Gauss code: comma-separated tokens ``O<sign><k>`` / ``U<sign><k>``
  along the knot; the sign is the crossing sign and pins the chirality.
* Knot orientation (for writhe, exports): start at the lowest-id dart of
  crossing 0 and follow the strand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    Disconnected,
    InvalidDiagram,
    MalformedCode,
    NonPlanar,
    NotAKnot,
    NotFourValent,
    NotReduced,
    TooLarge,
    Unrealizable,
)

Dart = int

# Hard cap for the 2^n realization search in parse_dt / unsigned parse_gauss.
_REALIZATION_CAP = 16


@dataclass(frozen=True)
class Crossing:
    """Read-only view of one crossing."""

    id: int
    darts: tuple[int, int, int, int]
    over_pair: int  # 0 -> rotation positions {0,2} carry the over strand


@dataclass(frozen=True)
class Diagram:
    """Immutable labeled combinatorial map of a knot diagram.

    rotation[c] lists the four darts of crossing c counterclockwise,
    alpha is the edge involution on darts, over_pair[c] selects which
    opposite dart pair of the rotation is the over strand (0 for
    positions {0,2}, 1 for {1,3}).
    """

    rotation: tuple[tuple[int, int, int, int], ...]
    alpha: tuple[int, ...]
    over_pair: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.rotation)
        nd = 4 * n
        seen = [False] * nd
        try:
            for quad in self.rotation:
                for d in quad:
                    if seen[d]:
                        raise InvalidDiagram(f"dart {d} appears twice")
                    seen[d] = True
        except (IndexError, TypeError):
            raise InvalidDiagram("dart ids must cover 0..4n-1") from None
        if len(self.alpha) != nd or len(self.over_pair) != n:
            raise InvalidDiagram("field lengths inconsistent with crossing count")
        for d in range(nd):
            a = self.alpha[d]
            if not (0 <= a < nd) or a == d or self.alpha[a] != d:
                raise InvalidDiagram("alpha is not a fixed-point-free involution")
        if any(p not in (0, 1) for p in self.over_pair):
            raise InvalidDiagram("over_pair entries must be 0 or 1")

    # -- basic sizes ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def num_darts(self) -> int:
        return 4 * len(self.rotation)

    def crossing(self, c: int) -> Crossing:
        return Crossing(c, self.rotation[c], self.over_pair[c])

    @property
    def crossings(self) -> list[Crossing]:
        return [self.crossing(c) for c in range(self.n)]

    # -- derived permutations -------------------------------------------

    @cached_property
    def dart_crossing(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for c, quad in enumerate(self.rotation):
            for d in quad:
                out[d] = c
        return tuple(out)

    @cached_property
    def dart_pos(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for quad in self.rotation:
            for j, d in enumerate(quad):
                out[d] = j
        return tuple(out)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Counterclockwise rotation successor of every dart."""
        out = [0] * self.num_darts
        for quad in self.rotation:
            for j, d in enumerate(quad):
                out[d] = quad[(j + 1) % 4]
        return tuple(out)

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for d, s in enumerate(self.sigma):
            out[s] = d
        return tuple(out)

    def opposite(self, d: Dart) -> Dart:
        """The dart of the same strand on the far side of the crossing."""
        quad = self.rotation[self.dart_crossing[d]]
        return quad[(self.dart_pos[d] + 2) % 4]

    def is_over(self, d: Dart) -> bool:
        return (self.dart_pos[d] % 2) == self.over_pair[self.dart_crossing[d]]

    # -- edges ----------------------------------------------------------

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted dart pairs, ordered by lower dart."""
        return tuple(
            (d, self.alpha[d]) for d in range(self.num_darts) if d < self.alpha[d]
        )

    def edge_id(self, d: Dart) -> int:
        """Identify an edge by the smaller of its two darts."""
        return min(d, self.alpha[d])

    # -- faces ------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of sigma∘alpha; each cycle starts at its least dart."""
        phi = self.sigma
        alpha = self.alpha
        seen = [False] * self.num_darts
        out = []
        for d0 in range(self.num_darts):
            if seen[d0]:
                continue
            cyc = []
            d = d0
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = phi[alpha[d]]
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for i, cyc in enumerate(self.faces):
            for d in cyc:
                out[d] = i
        return tuple(out)

    def edge_faces(self, d: Dart) -> tuple[int, int]:
        """The (unordered, possibly equal) face pair bordering dart d's edge."""
        a, b = self.face_of[d], self.face_of[self.alpha[d]]
        return (a, b) if a <= b else (b, a)

    @property
    def is_planar(self) -> bool:
        return len(self.faces) == self.n + 2

    # -- connectivity and traversal ---------------------------------------

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        adj = self.crossing_adjacency
        while stack:
            c = stack.pop()
            for c2 in adj[c]:
                if c2 not in seen:
                    seen.add(c2)
                    stack.append(c2)
        return len(seen) == self.n

    @cached_property
    def crossing_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for d, a in enumerate(self.alpha):
            if d < a:
                c1, c2 = self.dart_crossing[d], self.dart_crossing[a]
                adj[c1].append(c2)
                if c2 != c1:
                    adj[c2].append(c1)
        return tuple(tuple(x) for x in adj)

    @cached_property
    def component_count(self) -> int:
        """Number of link components of the underlying curve."""
        seen = [False] * self.num_darts
        count = 0
        for d0 in range(self.num_darts):
            if seen[d0]:
                continue
            count += 1
            d = d0
            while not seen[d]:
                seen[d] = True
                d = self.opposite(self.alpha[d])
        return count // 2

    @cached_property
    def traversal(self) -> tuple[int, ...]:
        """Outgoing darts along the knot, from the canonical start.

        The orientation convention: start at the lowest-id dart of
        crossing 0 and follow the strand.
        """
        if self.component_count != 1:
            raise NotAKnot(f"{self.component_count} components")
        start = min(self.rotation[0])
        seq = [start]
        d = self.opposite(self.alpha[start])
        while d != start:
            seq.append(d)
            d = self.opposite(self.alpha[d])
        return tuple(seq)

    @cached_property
    def crossing_signs(self) -> tuple[int, ...]:
        """Sign of each crossing under the traversal orientation."""
        out_over = [-1] * self.n
        out_under = [-1] * self.n
        for d in self.traversal:
            c = self.dart_crossing[d]
            if self.is_over(d):
                out_over[c] = self.dart_pos[d]
            else:
                out_under[c] = self.dart_pos[d]
        signs = []
        for c in range(self.n):
            po, pu = out_over[c], out_under[c]
            signs.append(1 if pu == (po + 1) % 4 else -1)
        return tuple(signs)

    # -- relabeling and mirroring ----------------------------------------

    def relabeled(self, perm: Sequence[int]) -> "Diagram":
        """Apply a dart permutation (old -> new) and renormalize.

        Crossings are reordered by least new dart and each rotation tuple
        is rotated to start at its least dart, so the result is a
        structurally normalized equal diagram.
        """
        quads = []
        for c, quad in enumerate(self.rotation):
            nd = [perm[d] for d in quad]
            k = nd.index(min(nd))
            quads.append((tuple(nd[k:] + nd[:k]), self.over_pair[c] ^ (k & 1)))
        quads.sort(key=lambda t: t[0][0])
        alpha = [0] * self.num_darts
        for d, a in enumerate(self.alpha):
            alpha[perm[d]] = perm[a]
        return Diagram(
            tuple(q for q, _ in quads),
            tuple(alpha),
            tuple(p for _, p in quads),
        )

    def mirrored(self) -> "Diagram":
        """Reflection of the sphere: rotations reverse, labels stay."""
        quads = tuple((q[0], q[3], q[2], q[1]) for q in self.rotation)
        return Diagram(quads, self.alpha, self.over_pair)


def build_diagram(
    rotation: Iterable[Sequence[int]],
    alpha_pairs: Iterable[tuple[int, int]],
    over_pair: Iterable[int],
) -> Diagram:
    """Assemble a Diagram from rotation tuples and edge dart pairs."""
    rot = tuple(tuple(q) for q in rotation)
    nd = 4 * len(rot)
    alpha = [-1] * nd
    for a, b in alpha_pairs:
        if alpha[a] != -1 or alpha[b] != -1:
            raise InvalidDiagram(f"dart reused in edge ({a},{b})")
        alpha[a], alpha[b] = b, a
    if any(x < 0 for x in alpha):
        raise InvalidDiagram("some dart has no edge partner")
    return Diagram(rot, tuple(alpha), tuple(over_pair))


# ---------------------------------------------------------------------------
# Validators
# ---------------------------------------------------------------------------


class Verdict(NamedTuple):
    ok: bool
    witness: Optional[object]


def validate_alternating(d: Diagram) -> Verdict:
    """True iff every edge has one over-end and one under-end.

    On failure the witness is the offending edge (dart pair).
    """
    for a, b in d.edges:
        if d.is_over(a) == d.is_over(b):
            return Verdict(False, (a, b))
    return Verdict(True, None)


def validate_reduced(d: Diagram) -> Verdict:
    """True iff no crossing has two coincident opposite corner faces."""
    f = d.face_of
    for c, quad in enumerate(d.rotation):
        if f[quad[0]] == f[quad[2]] or f[quad[1]] == f[quad[3]]:
            return Verdict(False, c)
    return Verdict(True, None)


def validate_prime(d: Diagram) -> Verdict:
    """True iff no facially-realizable 2-edge cut splits off crossings.

    A connected-sum sphere meets the diagram in two edge points lying on
    a common pair of faces; the witness is such an edge pair.
    """
    edges = d.edges
    by_faces: dict[tuple[int, int], list[int]] = {}
    for i, (a, _) in enumerate(edges):
        by_faces.setdefault(d.edge_faces(a), []).append(i)
    adj = [[] for _ in range(d.n)]
    for i, (a, b) in enumerate(edges):
        adj[d.dart_crossing[a]].append((d.dart_crossing[b], i))
        adj[d.dart_crossing[b]].append((d.dart_crossing[a], i))
    for group in by_faces.values():
        for k, i in enumerate(group):
            for j in group[k + 1 :]:
                # connectivity of the crossing graph minus edges i and j
                seen = {0}
                stack = [0]
                while stack:
                    c = stack.pop()
                    for c2, e in adj[c]:
                        if e != i and e != j and c2 not in seen:
                            seen.add(c2)
                            stack.append(c2)
                if len(seen) != d.n:
                    return Verdict(False, (edges[i], edges[j]))
    return Verdict(True, None)


def validate_structure(d: Diagram) -> None:
    """Raise the typed error for the first violated global invariant."""
    if not d.is_connected:
        raise Disconnected("underlying graph is not connected")
    if not d.is_planar:
        raise NonPlanar(f"{len(d.faces)} faces for {d.n} crossings")
    if d.component_count != 1:
        raise NotAKnot(f"{d.component_count} components")


# ---------------------------------------------------------------------------
# PD codes
# ---------------------------------------------------------------------------

_PD_TOKEN = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pd(text: str, *, allow_small: bool = False) -> Diagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` tuples.

    `a` is the incoming under-strand edge; labels run counterclockwise.
    """
    tuples = []
    rest = text
    for m in _PD_TOKEN.finditer(text):
        tuples.append(tuple(int(g) for g in m.groups()))
    if _PD_TOKEN.sub("", text).strip():
        raise MalformedCode("unrecognized text in PD code")
    if not tuples:
        raise MalformedCode("empty PD code")
    n = len(tuples)
    if n <= 2 and not allow_small:
        raise NotReduced(f"diagrams with {n} crossings are rejected")
    slots: dict[int, list[int]] = {}
    for c, quad in enumerate(tuples):
        for j, lab in enumerate(quad):
            slots.setdefault(lab, []).append(4 * c + j)
    for lab, ds in slots.items():
        if len(ds) != 2:
            raise NotFourValent(f"edge label {lab} used {len(ds)} times")
    rotation = tuple(tuple(range(4 * c, 4 * c + 4)) for c in range(n))
    # position 0 is the incoming under strand, so positions {1,3} are over
    d = build_diagram(rotation, (tuple(ds) for ds in slots.values()), (1,) * n)
    validate_structure(d)
    return d


def export_pd(d: Diagram) -> str:
    """PD code under the canonical traversal orientation."""
    labels = {}
    for k, dart in enumerate(d.traversal):
        labels[d.edge_id(dart)] = k + 1
    outgoing = set(d.traversal)
    parts = []
    for c in range(d.n):
        under_in = [
            x for x in d.rotation[c] if not d.is_over(x) and x not in outgoing
        ]
        assert len(under_in) == 1
        x = under_in[0]
        quad = []
        for _ in range(4):
            quad.append(labels[d.edge_id(x)])
            x = d.sigma[x]
        parts.append("X({},{},{},{})".format(*quad))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# DT codes
# ---------------------------------------------------------------------------


def _parse_dt_entries(code) -> list[int]:
    if isinstance(code, str):
        text = code.strip()
        if not text:
            raise MalformedCode("empty DT code")
        try:
            entries = [int(t) for t in re.split(r"[,\s]+", text) if t]
        except ValueError as exc:
            raise MalformedCode(f"bad DT entry: {exc}") from None
    else:
        entries = [int(x) for x in code]
    if not entries:
        raise MalformedCode("empty DT code")
    return entries


def parse_dt(code) -> Diagram:
    """Realize an all-positive DT code as an alternating planar diagram.

    Among the planar realizations (which differ at most by reflection for
    prime codes) the one with the least canonical code is returned.
    """
    from .canonical import canonical_code, canonical_form

    entries = _parse_dt_entries(code)
    n = len(entries)
    if all(e < 0 for e in entries):
        entries = [-e for e in entries]
    if any(e <= 0 for e in entries):
        raise Unrealizable("mixed-sign DT codes are not alternating")
    if sorted(entries) != list(range(2, 2 * n + 1, 2)):
        raise MalformedCode("DT entries must be a permutation of 2,4,..,2n")
    if n <= 2:
        raise Unrealizable(f"no reduced alternating diagram with {n} crossings")
    if n > _REALIZATION_CAP:
        raise TooLarge(f"realization search capped at {_REALIZATION_CAP} crossings")

    best = None
    best_code = None
    for diag in _realize_pairing(entries):
        code2 = canonical_code(diag)
        if best_code is None or code2 < best_code:
            best_code, best = code2, diag
    if best is None:
        raise Unrealizable("DT code has no planar realization")
    return canonical_form(best)


def _realize_pairing(entries: list[int]):
    """Yield planar alternating diagrams realizing a DT pairing.

    Crossing k owns darts 4k..4k+3: (in_odd, out_odd, in_even, out_even).
    Odd passages are over-passes.
    """
    n = len(entries)
    crossing_of = {}
    for k, e in enumerate(entries):
        crossing_of[2 * k + 1] = k
        crossing_of[e] = k
    alpha = [0] * (4 * n)
    for t in range(1, 2 * n + 1):
        t2 = t % (2 * n) + 1
        c1, c2 = crossing_of[t], crossing_of[t2]
        d_out = 4 * c1 + (1 if t % 2 == 1 else 3)
        d_in = 4 * c2 + (0 if t2 % 2 == 1 else 2)
        alpha[d_out], alpha[d_in] = d_in, d_out
    alpha = tuple(alpha)
    for bits in product((0, 1), repeat=n):
        rotation = []
        for k, b in enumerate(bits):
            io, oo, ie, oe = 4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3
            rotation.append((io, ie, oo, oe) if b == 0 else (io, oe, oo, ie))
        if _face_count(rotation, alpha) != n + 2:
            continue
        yield Diagram(tuple(rotation), alpha, (0,) * n)


def _face_count(rotation, alpha) -> int:
    nd = 4 * len(rotation)
    sigma = [0] * nd
    for quad in rotation:
        for j, d in enumerate(quad):
            sigma[d] = quad[(j + 1) % 4]
    seen = [False] * nd
    count = 0
    for d0 in range(nd):
        if seen[d0]:
            continue
        count += 1
        d = d0
        while not seen[d]:
            seen[d] = True
            d = sigma[alpha[d]]
    return count


def export_dt(d: Diagram) -> tuple[int, ...]:
    """DT code under the canonical traversal orientation.

    Only meaningful for alternating diagrams (the code is emitted
    all-positive and so is defined up to reflection).
    """
    ok, witness = validate_alternating(d)
    if not ok:
        raise InvalidDiagram(f"diagram is not alternating at edge {witness}")
    passages: dict[int, list[int]] = {}
    for k, dart in enumerate(d.traversal):
        passages.setdefault(d.dart_crossing[dart], []).append(k + 1)
    code = [0] * d.n
    for ts in passages.values():
        a, b = ts
        odd, even = (a, b) if a % 2 == 1 else (b, a)
        assert even % 2 == 0, "odd/even passage property violated"
        code[(odd - 1) // 2] = even
    return tuple(code)


# ---------------------------------------------------------------------------
# Gauss codes
# ---------------------------------------------------------------------------

_GAUSS_TOKEN = re.compile(r"^([OU])([+-]?)(\d+)$")


def parse_gauss(text: str) -> Diagram:
    """Parse comma-separated ``O±k`` / ``U±k`` tokens.

    With signs (the crossing signs) present the diagram is reconstructed
    exactly; without signs the least-canonical-code planar realization is
    returned, as for DT codes.
    """
    from .canonical import canonical_code, canonical_form

    raw = [t.strip() for t in text.split(",") if t.strip()]
    if not raw:
        raise MalformedCode("empty Gauss code")
    seq = []
    for tok in raw:
        m = _GAUSS_TOKEN.match(tok)
        if not m:
            raise MalformedCode(f"bad Gauss token {tok!r}")
        over, sgn, num = m.group(1) == "O", m.group(2), int(m.group(3))
        seq.append((over, -1 if sgn == "-" else (1 if sgn == "+" else 0), num))
    signedness = {s != 0 for _, s, _ in seq}
    if len(signedness) != 1:
        raise MalformedCode("mixed signed and unsigned Gauss tokens")
    signed = signedness.pop()

    by_label: dict[int, list[int]] = {}
    for t, (_, _, num) in enumerate(seq):
        by_label.setdefault(num, []).append(t)
    n = len(seq) // 2
    if len(seq) % 2 or len(by_label) != n:
        raise MalformedCode("each crossing label must occur exactly twice")
    for num, ts in by_label.items():
        if len(ts) != 2 or seq[ts[0]][0] == seq[ts[1]][0]:
            raise MalformedCode(f"label {num} needs one O and one U passage")
        if signed and seq[ts[0]][1] != seq[ts[1]][1]:
            raise MalformedCode(f"label {num} has inconsistent signs")
    if n <= 2:
        raise Unrealizable(f"no reduced alternating diagram with {n} crossings")

    labels = sorted(by_label)
    cr_index = {num: k for k, num in enumerate(labels)}
    # crossing k darts: (in_first, out_first, in_second, out_second)
    alpha = [0] * (4 * n)
    visit = {}  # passage index -> (crossing, 0 first / 1 second)
    for num, ts in by_label.items():
        k = cr_index[num]
        visit[ts[0]] = (k, 0)
        visit[ts[1]] = (k, 1)
    for t in range(2 * n):
        t2 = (t + 1) % (2 * n)
        c1, v1 = visit[t]
        c2, v2 = visit[t2]
        d_out = 4 * c1 + 2 * v1 + 1
        d_in = 4 * c2 + 2 * v2
        alpha[d_out], alpha[d_in] = d_in, d_out
    alpha = tuple(alpha)
    over_pair = []
    for num in labels:
        t1 = min(by_label[num])
        over_pair.append(0 if seq[t1][0] else 1)
    over_pair = tuple(over_pair)

    if signed:
        rotation = []
        for num in labels:
            k = cr_index[num]
            t1, t2 = sorted(by_label[num])
            over_first = seq[t1][0]
            io, oo = (4 * k, 4 * k + 1) if over_first else (4 * k + 2, 4 * k + 3)
            iu, ou = (4 * k + 2, 4 * k + 3) if over_first else (4 * k, 4 * k + 1)
            if seq[t1][1] > 0:
                rotation.append((oo, ou, io, iu))
            else:
                rotation.append((oo, iu, io, ou))
        d = _rebuild_from_quads(rotation, alpha, over_pair)
        validate_structure(d)
        return d

    best = None
    best_code = None
    if n > _REALIZATION_CAP:
        raise TooLarge(f"realization search capped at {_REALIZATION_CAP} crossings")
    for bits in product((0, 1), repeat=n):
        rotation = []
        for k, b in enumerate(bits):
            i1, o1, i2, o2 = 4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3
            rotation.append((i1, i2, o1, o2) if b == 0 else (i1, o2, o1, i2))
        if _face_count(rotation, alpha) != n + 2:
            continue
        diag = _rebuild_from_quads(rotation, alpha, over_pair)
        code2 = canonical_code(diag)
        if best_code is None or code2 < best_code:
            best_code, best = code2, diag
    if best is None:
        raise Unrealizable("Gauss code has no planar realization")
    return canonical_form(best)


def _rebuild_from_quads(rotation, alpha, over_pair) -> Diagram:
    """Normalize rotation tuples so position 0 semantics match over_pair."""
    quads = []
    pairs = []
    for quad, p in zip(rotation, over_pair):
        quads.append(tuple(quad))
        pairs.append(p)
    # over_pair refers to dart identity; recompute positional flag
    fixed = []
    for quad, p in zip(quads, pairs):
        # p was defined against darts 4k..4k+3 layout: over darts are
        # {4k,4k+1} when p==0 (first passage over) else {4k+2,4k+3}.
        base = min(quad)
        over_darts = {base + 0, base + 1} if p == 0 else {base + 2, base + 3}
        fixed.append(0 if quad[0] in over_darts else 1)
    return Diagram(tuple(quads), tuple(alpha), tuple(fixed))


def export_gauss(d: Diagram) -> str:
    """Signed Gauss code under the canonical traversal orientation."""
    labels: dict[int, int] = {}
    toks = []
    signs = d.crossing_signs
    for dart in d.traversal:
        c = d.dart_crossing[dart]
        if c not in labels:
            labels[c] = len(labels) + 1
        mark = "O" if d.is_over(dart) else "U"
        toks.append(f"{mark}{'+' if signs[c] > 0 else '-'}{labels[c]}")
    return ",".join(toks)


def writhe(d: Diagram) -> int:
    """Sum of crossing signs under the canonical orientation."""
    return sum(d.crossing_signs)
