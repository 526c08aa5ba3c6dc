"""Constructors for standard diagram families used throughout.

Diagrams are assembled from vertical twist columns: a column of t
crossings has four boundary ends (two on top, two on bottom), and a
pretzel closes k columns side by side into a cycle.  The (2,m) torus
diagram is the one-column pretzel.  Over/under data is not chosen by
hand: alternation is a 2-coloring problem over the crossings, solved by
BFS, which doubles as a constructive proof that the family is
alternating.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .diagram import Diagram
from .errors import InvalidDiagram, NotAKnot


def solve_alternation(
    rotation: Sequence[tuple[int, int, int, int]], alpha: Sequence[int]
) -> Optional[tuple[int, ...]]:
    """Over-strand assignment making the map alternating, if one exists.

    Each edge forces its two end crossings' over_pair bits relative to
    the dart rotation parities, so this is graph 2-coloring.
    """
    n = len(rotation)
    crossing_of = {}
    pos_of = {}
    for c, quad in enumerate(rotation):
        for j, d in enumerate(quad):
            crossing_of[d] = c
            pos_of[d] = j
    color: list[Optional[int]] = [None] * n
    for start in range(n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for d in rotation[c]:
                u = alpha[d]
                c2 = crossing_of[u]
                need = color[c] ^ 1 ^ (pos_of[d] & 1) ^ (pos_of[u] & 1)
                if color[c2] is None:
                    color[c2] = need
                    queue.append(c2)
                elif color[c2] != need:
                    return None
    return tuple(color)  # type: ignore[arg-type]


def _twist_column(base: int, t: int):
    """Rotations and inner edges of a t-crossing vertical twist column.

    Crossing i (top to bottom) owns darts base+4i .. base+4i+3 labeled
    (nw, sw, se, ne) in counterclockwise order.  Returns the rotations,
    the inner dart pairs, and the four boundary darts (nw, ne, sw, se).
    """
    rotation = []
    pairs = []
    for i in range(t):
        b = base + 4 * i
        rotation.append((b, b + 1, b + 2, b + 3))
        if i + 1 < t:
            pairs.append((b + 1, b + 4))  # sw of i to nw of i+1
            pairs.append((b + 2, b + 7))  # se of i to ne of i+1
    top_nw, top_ne = base, base + 3
    bot_sw, bot_se = base + 4 * (t - 1) + 1, base + 4 * (t - 1) + 2
    return rotation, pairs, (top_nw, top_ne, bot_sw, bot_se)


def pretzel(*twists: int) -> Diagram:
    """Alternating pretzel diagram P(t1, ..., tk), all twists positive.

    Columns are closed side by side into a cycle: tops to tops, bottoms
    to bottoms.  Needs at least two columns; the one-column closure of
    this kind is a kink, use twist_closure for (2, m) torus diagrams.
    """
    if len(twists) < 2 or any(t < 1 for t in twists):
        raise InvalidDiagram("pretzel needs at least two positive twist counts")
    rotation = []
    pairs = []
    bounds = []
    base = 0
    for t in twists:
        rot, prs, bnd = _twist_column(base, t)
        rotation.extend(rot)
        pairs.extend(prs)
        bounds.append(bnd)
        base += 4 * t
    k = len(twists)
    for j in range(k):
        nw, ne, sw, se = bounds[j]
        nw2 = bounds[(j + 1) % k][0]
        sw2 = bounds[(j + 1) % k][2]
        pairs.append((ne, nw2))
        pairs.append((se, sw2))
    alpha = [-1] * base
    for a, b in pairs:
        alpha[a], alpha[b] = b, a
    over = solve_alternation(rotation, alpha)
    if over is None:
        raise InvalidDiagram("pretzel closure is not alternating")
    d = Diagram(tuple(rotation), tuple(alpha), over)
    if not d.is_planar:
        raise InvalidDiagram("pretzel closure is not planar")
    return d


def twist_closure(m: int) -> Diagram:
    """Standard reduced alternating diagram of the (2, m) torus knot.

    Braid closure of one twist column: each top end joins the bottom end
    on its own side.
    """
    if m < 3 or m % 2 == 0:
        raise NotAKnot("(2,m) closure is a knot only for odd m >= 3")
    rotation, pairs, (nw, ne, sw, se) = _twist_column(0, m)
    pairs.append((nw, sw))
    pairs.append((ne, se))
    alpha = [-1] * (4 * m)
    for a, b in pairs:
        alpha[a], alpha[b] = b, a
    over = solve_alternation(rotation, alpha)
    if over is None:
        raise InvalidDiagram("twist closure is not alternating")
    d = Diagram(tuple(rotation), tuple(alpha), over)
    if not d.is_planar:
        raise InvalidDiagram("twist closure is not planar")
    return d


def connect_sum(a: Diagram, b: Diagram) -> Diagram:
    """Diagrammatic connected sum preserving alternation.

    Cuts the edge of least id in each diagram and splices the free ends
    in the orientation whose result is still alternating.
    """
    shift = a.num_darts
    rotation = list(a.rotation) + [
        tuple(x + shift for x in q) for q in b.rotation
    ]
    ea = a.edges[0]
    eb = tuple(x + shift for x in b.edges[0])
    base_alpha = list(a.alpha) + [x + shift for x in b.alpha]
    for u1, v1 in ((eb[0], eb[1]), (eb[1], eb[0])):
        alpha = list(base_alpha)
        alpha[ea[0]], alpha[u1] = u1, ea[0]
        alpha[ea[1]], alpha[v1] = v1, ea[1]
        over = solve_alternation(rotation, alpha)
        if over is None:
            continue
        d = Diagram(tuple(rotation), tuple(alpha), over)
        if d.is_planar and d.component_count == 1:
            return d
    raise InvalidDiagram("no alternating splice exists")
