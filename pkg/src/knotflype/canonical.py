"""Canonical codes for labeled diagrams.

Two diagrams describe the same reduced alternating knot projection iff
some relabeling of darts carries one to the other preserving rotation,
edge involution and over/under data.  The canonical code is the least
breadth-first relabeling certificate over all start darts, so equality of
codes decides isomorphism in O(n^2) time.  With ``mirror=True`` the
minimum also ranges over the reflected map, giving a mirror-insensitive
code.
"""

from __future__ import annotations

from typing import Optional

from .diagram import Diagram

Code = tuple[int, ...]


def _bfs_code(d: Diagram, sigma: tuple[int, ...], root: int) -> Code:
    """Certificate of the relabeling that breadth-first orders darts from root.

    Neighbors are explored rotation-successor first, then edge partner, so
    the labeling is determined by the root alone.
    """
    nd = d.num_darts
    alpha = d.alpha
    lab = [-1] * nd
    order = [root]
    lab[root] = 0
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in (sigma[x], alpha[x]):
            if lab[y] < 0:
                lab[y] = len(order)
                order.append(y)
    code = []
    for x in order:
        code.append(lab[sigma[x]])
        code.append(lab[alpha[x]])
        code.append(1 if d.is_over(x) else 0)
    return tuple(code)


def canonical_code(d: Diagram, *, mirror: bool = False) -> Code:
    """Least breadth-first certificate over all roots (and reflections)."""
    best: Optional[Code] = None
    sigmas = [d.sigma]
    if mirror:
        sigmas.append(d.sigma_inv)
    for sigma in sigmas:
        for root in range(d.num_darts):
            code = _bfs_code(d, sigma, root)
            if best is None or code < best:
                best = code
    assert best is not None
    return best


def canonical_dart_map(
    d: Diagram, *, mirror: bool = False
) -> tuple[Diagram, tuple[int, ...]]:
    """Canonical form together with the dart relabeling (old -> new).

    Canonically equal diagrams map to the identical Diagram value.
    """
    best: Optional[Code] = None
    best_root = -1
    best_mirrored = False
    sigmas = [(d.sigma, False)]
    if mirror:
        sigmas.append((d.sigma_inv, True))
    for sigma, is_mirror in sigmas:
        for root in range(d.num_darts):
            code = _bfs_code(d, sigma, root)
            if best is None or code < best:
                best, best_root, best_mirrored = code, root, is_mirror
    src = d.mirrored() if best_mirrored else d
    nd = src.num_darts
    sigma, alpha = src.sigma, src.alpha
    lab = [-1] * nd
    order = [best_root]
    lab[best_root] = 0
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in (sigma[x], alpha[x]):
            if lab[y] < 0:
                lab[y] = len(order)
                order.append(y)
    return src.relabeled(lab), tuple(lab)


def canonical_form(d: Diagram, *, mirror: bool = False) -> Diagram:
    """The relabeled diagram whose dart order realizes the canonical code."""
    return canonical_dart_map(d, mirror=mirror)[0]


def isomorphic(a: Diagram, b: Diagram, *, mirror: bool = False) -> bool:
    """Label-independent equality of diagrams as maps with over/under data."""
    if a.n != b.n:
        return False
    return canonical_code(a, mirror=mirror) == canonical_code(b, mirror=mirror)
