"""Flype sequences and their normal form.

apply_flype keeps every surviving crossing's id and gives the created
crossing the removed crossing's id, so crossing identity is tracked by
plain labels along a sequence: the crossing removed by a step was
created by the latest earlier step that removed the same label (or is
original if there is none).  A sequence is in normal form when no
created crossing is removed later, i.e. when no two steps share a
removed-crossing label.

Normalization rewrites the sequence with two primitives: commuting an
independent adjacent pair (the two flypes have disjoint or nested
domains and neither consumes the other's crossing, so they can run in
either order), and combining a dependent adjacent pair into a single
flype, or into nothing when the composite is a plain isomorphism (the
second step undoes the first, or the two domains exhaust the diagram).
Rewritten composites agree with the original up to an isomorphism,
through which the remainder of the sequence is transported; a dart
relabeling fixing every crossing id is preferred, and an arbitrary
orientation-preserving one is accepted otherwise.  A dependent pair
admitting no rewrite signals a connected sum, which cannot happen for
prime knots; it is reported as ConfigurationA.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .canonical import Code, canonical_code, canonical_dart_map
from .diagram import Diagram
from .errors import ConfigurationA, InvalidSite, KnotError
from .flype import FlypeSite, apply_flype, find_flype_sites


@dataclass(frozen=True)
class FlypeSequence:
    """A composable chain of flypes from an initial diagram."""

    initial: Diagram
    sites: tuple[FlypeSite, ...]

    def __post_init__(self) -> None:
        d = self.initial
        for site in self.sites:
            d, _ = apply_flype(d, site)  # raises InvalidSite when broken

    @property
    def diagrams(self) -> list[Diagram]:
        """All len+1 diagrams along the sequence."""
        out = [self.initial]
        for site in self.sites:
            out.append(apply_flype(out[-1], site)[0])
        return out

    @property
    def steps(self) -> list[tuple[Diagram, FlypeSite]]:
        """(source diagram, site) pairs, one per flype."""
        ds = self.diagrams
        return list(zip(ds[:-1], self.sites))

    @property
    def final(self) -> Diagram:
        d = self.initial
        for site in self.sites:
            d, _ = apply_flype(d, site)
        return d

    def __len__(self) -> int:
        return len(self.sites)

    @classmethod
    def from_steps(
        cls, steps: Iterable[tuple[Diagram, FlypeSite]]
    ) -> "FlypeSequence":
        steps = list(steps)
        if not steps:
            raise InvalidSite("empty step list has no initial diagram")
        for (d, site), (d_next, _) in zip(steps, steps[1:]):
            if apply_flype(d, site)[0] != d_next:
                raise InvalidSite("steps are not composable")
        return cls(steps[0][0], tuple(site for _, site in steps))


def is_normalized(sites: Sequence[FlypeSite]) -> bool:
    """No created crossing is removed later: removed labels are distinct."""
    labels = [s.crossing_removed for s in sites]
    return len(labels) == len(set(labels))


def _first_violation(sites: Sequence[FlypeSite]) -> tuple[int, int] | None:
    """Earliest (creator, consumer) step pair sharing a removed label."""
    last_removed: dict[int, int] = {}
    for j, site in enumerate(sites):
        c = site.crossing_removed
        if c in last_removed:
            return last_removed[c], j
        last_removed[c] = j
    return None


# ---------------------------------------------------------------------------
# Isomorphism plumbing
# ---------------------------------------------------------------------------


def _crossing_fixing_iso(a: Diagram, b: Diagram) -> Optional[tuple[int, ...]]:
    """Dart bijection a -> b preserving structure and every crossing id."""
    if a.n != b.n:
        return None
    if a == b:
        return tuple(range(a.num_darts))
    nd = a.num_darts
    start = 0
    for t in b.rotation[a.dart_crossing[start]]:
        m = [-1] * nd
        m[start] = t
        stack = [start]
        ok = True
        while stack and ok:
            x = stack.pop()
            for xn, yn in ((a.sigma[x], b.sigma[m[x]]), (a.alpha[x], b.alpha[m[x]])):
                if m[xn] < 0:
                    m[xn] = yn
                    stack.append(xn)
                elif m[xn] != yn:
                    ok = False
                    break
        if not ok or any(v < 0 for v in m):
            continue
        if any(a.dart_crossing[x] != b.dart_crossing[m[x]] for x in range(nd)):
            continue
        if any(a.is_over(x) != b.is_over(m[x]) for x in range(nd)):
            continue
        return tuple(m)
    return None


def _any_iso(a: Diagram, b: Diagram) -> Optional[tuple[int, ...]]:
    """Some orientation-preserving structural iso a -> b, labels free."""
    if a.n != b.n or canonical_code(a) != canonical_code(b):
        return None
    _, pa = canonical_dart_map(a)
    _, pb = canonical_dart_map(b)
    inv_pb = [0] * len(pb)
    for x, y in enumerate(pb):
        inv_pb[y] = x
    return tuple(inv_pb[pa[x]] for x in range(a.num_darts))


def _best_iso(a: Diagram, b: Diagram) -> Optional[tuple[int, ...]]:
    return _crossing_fixing_iso(a, b) or _any_iso(a, b)


def _transport_site(
    site: FlypeSite, src: Diagram, dst: Diagram, iso: tuple[int, ...]
) -> FlypeSite:
    """Rewrite a site for src through a structural dart bijection to dst."""

    def cross(c: int) -> int:
        return dst.dart_crossing[iso[src.rotation[c][0]]]

    edges = tuple(
        sorted(min(iso[e], iso[src.alpha[e]]) for e in site.target_edges)
    )
    return FlypeSite(
        cross(site.crossing_removed),
        edges,
        frozenset(cross(k) for k in site.domain_side),
    )


def _transport_chain(
    tail: Sequence[FlypeSite],
    old_d: Diagram,
    new_d: Diagram,
    iso: tuple[int, ...],
) -> list[FlypeSite]:
    """Rewrite a site chain valid from old_d so it runs from new_d instead.

    The bijection is refreshed after each step since the two runs may
    label the created crossing's darts differently.
    """
    out = []
    for s in tail:
        old_next = apply_flype(old_d, s)[0]
        moved = _transport_site(s, old_d, new_d, iso)
        out.append(moved)
        new_next = apply_flype(new_d, moved)[0]
        nxt_iso = _best_iso(old_next, new_next)
        if nxt_iso is None:
            raise KnotError("suffix transport lost the diagram identification")
        old_d, new_d, iso = old_next, new_next, nxt_iso
    return out


# ---------------------------------------------------------------------------
# Rewrite primitives
# ---------------------------------------------------------------------------


def _commute(
    d: Diagram, first: FlypeSite, second: FlypeSite
) -> tuple[list[FlypeSite], tuple[int, ...], Diagram]:
    """Reorder an adjacent pair so second's crossing is removed earlier.

    Returns a replacement word of at most two sites, plus a structural
    dart bijection from the old composite result to the new one and
    that new result.  Preference order: a label-exact swap; a single
    flype; any pair that still removes second's crossing in its later
    step.  The last tier handles twist regions, where a mid-chain
    crossing only becomes flypable after a neighbour moves aside and a
    label-exact swap therefore need not exist.
    """
    mid0, _ = apply_flype(d, first)
    target, _ = apply_flype(mid0, second)
    sites_d = sorted(find_flype_sites(d))
    fallback = None
    for sa in sites_d:
        if sa.crossing_removed != second.crossing_removed:
            continue
        mid, _ = apply_flype(d, sa)
        for sb in sorted(find_flype_sites(mid)):
            if sb.crossing_removed != first.crossing_removed:
                continue
            out, _ = apply_flype(mid, sb)
            iso = _crossing_fixing_iso(target, out)
            if iso is not None:
                return [sa, sb], iso, out
            if fallback is None:
                iso = _any_iso(target, out)
                if iso is not None:
                    fallback = ([sa, sb], iso, out)
    if fallback is not None:
        return fallback
    for s in sites_d:
        out, _ = apply_flype(d, s)
        iso = _best_iso(target, out)
        if iso is not None:
            return [s], iso, out
    for sa in sites_d:
        mid, _ = apply_flype(d, sa)
        for sb in sorted(find_flype_sites(mid)):
            if sb.crossing_removed != second.crossing_removed:
                continue
            if sa == first and sb == second:
                continue
            out, _ = apply_flype(mid, sb)
            iso = _crossing_fixing_iso(target, out)
            if iso is not None:
                return [sa, sb], iso, out
            if fallback is None:
                iso = _any_iso(target, out)
                if iso is not None:
                    fallback = ([sa, sb], iso, out)
    if fallback is not None:
        return fallback
    raise KnotError("adjacent independent flypes admit no commutation")


def _combine(
    d: Diagram, first: FlypeSite, second: FlypeSite
) -> tuple[list[FlypeSite], tuple[int, ...], Diagram]:
    """Collapse a dependent adjacent pair to one flype or to nothing.

    Nothing remains when the composite is a plain isomorphism: the
    second flype undid the first, or the two domains jointly exhaust
    the diagram so the composite merely rotates it.
    """
    mid, _ = apply_flype(d, first)
    target, _ = apply_flype(mid, second)
    iso = _best_iso(target, d)
    if iso is not None:
        return [], iso, d
    candidates = sorted(find_flype_sites(d))
    preferred = [s for s in candidates if s.crossing_removed == first.crossing_removed]
    rest = [s for s in candidates if s.crossing_removed != first.crossing_removed]
    fallback = None
    for s in preferred + rest:
        out, _ = apply_flype(d, s)
        iso = _crossing_fixing_iso(target, out)
        if iso is not None:
            return [s], iso, out
        if fallback is None:
            iso = _any_iso(target, out)
            if iso is not None:
                fallback = ([s], iso, out)
    if fallback is not None:
        return fallback
    # twist regions: two moves of one crossing along a chain need not be
    # a single flype, but can be two flypes of distinct crossings
    for sa in candidates:
        mid2, _ = apply_flype(d, sa)
        for sb in sorted(find_flype_sites(mid2)):
            if sb.crossing_removed == sa.crossing_removed:
                continue
            out, _ = apply_flype(mid2, sb)
            iso = _crossing_fixing_iso(target, out)
            if iso is not None:
                return [sa, sb], iso, out
            if fallback is None:
                iso = _any_iso(target, out)
                if iso is not None:
                    fallback = ([sa, sb], iso, out)
    if fallback is not None:
        return fallback
    # last resort: the pair may re-cross the crossing along its other
    # axis, whose composite needs three flypes of distinct crossings
    for sa in candidates:
        mid2, _ = apply_flype(d, sa)
        for sb in sorted(find_flype_sites(mid2)):
            if sb.crossing_removed == sa.crossing_removed:
                continue
            mid3, _ = apply_flype(mid2, sb)
            for sc in sorted(find_flype_sites(mid3)):
                if sc.crossing_removed in (
                    sa.crossing_removed,
                    sb.crossing_removed,
                ):
                    continue
                out, _ = apply_flype(mid3, sc)
                iso = _crossing_fixing_iso(target, out)
                if iso is not None:
                    return [sa, sb, sc], iso, out
                if fallback is None:
                    iso = _any_iso(target, out)
                    if iso is not None:
                        fallback = ([sa, sb, sc], iso, out)
    if fallback is not None:
        return fallback
    raise ConfigurationA(
        "dependent flype pair is neither combinable nor cancelling;"
        " the diagram splits as a connected sum"
    )


def _minimal_repeat_word(
    initial: Diagram, final: Diagram, max_repeats: int
) -> Optional[list[FlypeSite]]:
    """Flype word initial -> final with the fewest repeated removals.

    Uniform-cost search over (canonical code, labels already removed,
    repeats spent) ordered by (repeats, length).  A repeat is a step
    removing a crossing label that an earlier step already removed,
    i.e. a create/remove matching pair; zero-repeat solutions are the
    fully normalized ones.  Returns None only when the endpoints are
    not joined within max_repeats, which cannot happen when the caller
    passes the repeat count of a witnessing word.
    """
    import heapq
    from itertools import count

    target = canonical_code(final)
    tie = count()
    heap: list = [(0, 0, next(tie), initial, [], frozenset())]
    best: dict[tuple[Code, frozenset[int]], int] = {
        (canonical_code(initial), frozenset()): 0
    }
    while heap:
        repeats, length, _, d, word, used = heapq.heappop(heap)
        if canonical_code(d) == target:
            return word
        for s in sorted(find_flype_sites(d)):
            r2 = repeats + (1 if s.crossing_removed in used else 0)
            if r2 > max_repeats:
                continue
            out, _ = apply_flype(d, s)
            used2 = used | {s.crossing_removed}
            key = (canonical_code(out), used2)
            if best.get(key, max_repeats + 1) <= r2:
                continue
            best[key] = r2
            heapq.heappush(
                heap, (r2, length + 1, next(tie), out, word + [s], used2)
            )
    return None


def _repeat_count(sites: Sequence[FlypeSite]) -> int:
    labels = [s.crossing_removed for s in sites]
    return len(labels) - len(set(labels))


def normalize_flype_sequence(seq: FlypeSequence) -> FlypeSequence:
    """Equivalent sequence in which no created crossing is removed later.

    Local rewriting first: each consumer step is pulled back to its
    creator by commuting it past the step before it, and the adjacent
    dependent pair is then combined or cancelled.  When a local rewrite
    has no solution (the lemma-style configurations are not exhaustive
    once twist regions and axis changes enter), a uniform-cost search
    replaces the whole word with a repeat-minimal one between the same
    endpoint diagrams.  A repeated removal survives only when no word
    between the endpoints avoids it, e.g. an in-plane tangle rotation
    that decomposes solely into two flypes through the same crossing.
    """
    if is_normalized(seq.sites):
        return seq
    try:
        return _normalize_locally(seq)
    except ConfigurationA:
        word = _minimal_repeat_word(
            seq.initial, seq.final, _repeat_count(seq.sites)
        )
        if word is None:
            raise ConfigurationA(
                "no flype word joins the endpoints within the input's"
                " repeat budget; the diagram splits as a connected sum"
            )
        return FlypeSequence(seq.initial, tuple(word))
    except KnotError:
        word = _minimal_repeat_word(
            seq.initial, seq.final, _repeat_count(seq.sites)
        )
        if word is None:
            raise KnotError("sequence normalization did not converge")
        return FlypeSequence(seq.initial, tuple(word))


def _normalize_locally(seq: FlypeSequence) -> FlypeSequence:
    sites = list(seq.sites)
    initial = seq.initial
    budget = 100 * (len(sites) + 1) ** 2
    while True:
        hit = _first_violation(sites)
        if hit is None:
            break
        budget -= 1
        if budget < 0:
            raise KnotError("sequence normalization did not converge")
        i, j = hit
        diagrams = [initial]
        for s in sites:
            diagrams.append(apply_flype(diagrams[-1], s)[0])
        if j > i + 1:
            # pull the consumer back one step; if the swapped site does
            # not exist yet (its crossing can sit mid twist-region until
            # a neighbour moves aside), push the creator forward instead
            try:
                word, iso, new_after = _commute(
                    diagrams[j - 1], sites[j - 1], sites[j]
                )
                tail = _transport_chain(
                    sites[j + 1 :], diagrams[j + 1], new_after, iso
                )
                sites = sites[: j - 1] + word + tail
            except ConfigurationA:
                raise
            except KnotError:
                word, iso, new_after = _commute(
                    diagrams[i], sites[i], sites[i + 1]
                )
                tail = _transport_chain(
                    sites[i + 2 :], diagrams[i + 2], new_after, iso
                )
                sites = sites[:i] + word + tail
        else:
            replacement, iso, new_after = _combine(
                diagrams[i], sites[i], sites[i + 1]
            )
            tail = _transport_chain(sites[i + 2 :], diagrams[i + 2], new_after, iso)
            sites = sites[:i] + replacement + tail
    return FlypeSequence(initial, tuple(sites))
