"""Milnor invariants of string links from the Magnus expansion.

Every arc meridian is resolved into a truncated series in the base meridians
by iterating the Wirtinger relations to a fixed point.  The corrected
longitude of component ``j`` is then expanded, and for an index sequence
``I = (i_1, ..., i_k, j)`` the invariant ``mu(I)`` is the coefficient of
``X_{i_1} ... X_{i_k}`` in that expansion.  String links are based, so this
coefficient is an integer invariant of the diagram's isotopy (and
concordance) class; Milnor's indeterminacy ``delta`` is computed alongside
but never applied.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .diagram import StringLinkDiagram
from .errors import NoConvergence, TruncationTooLow
from .series import TruncatedSeries, series_inverse, series_mul
from .wirtinger import WirtingerPresentation, presentation_from_diagram

DEFAULT_Q = 4


@dataclass(frozen=True)
class MilnorValue:
    index_sequence: tuple[int, ...]
    mu: int
    delta: int
    q: int

    def as_record(self) -> dict:
        return {"index_sequence": list(self.index_sequence), "mu": self.mu,
                "delta": self.delta, "q": self.q}


def relation_order(p: WirtingerPresentation) -> list[int]:
    """Relations ordered bottom to top, except that along each component a
    relation always comes after the one producing its incoming arc."""
    chains: list[list[int]] = [[] for _ in range(p.strands)]
    for r_index, r in enumerate(p.relations):
        chains[p.arc_component[r.out_arc] - 1].append(r_index)
    heap = [(p.relations[c[0]].event, comp, 0) for comp, c in enumerate(chains) if c]
    heapq.heapify(heap)
    order = []
    while heap:
        _, comp, k = heapq.heappop(heap)
        order.append(chains[comp][k])
        if k + 1 < len(chains[comp]):
            heapq.heappush(heap, (p.relations[chains[comp][k + 1]].event, comp, k + 1))
    return order


def resolve_arcs(p: WirtingerPresentation, q: int, return_sweeps: bool = False):
    """Express every arc meridian as a truncated series in the base meridians."""
    if q < 1:
        raise ValueError("truncation degree must be at least 1")
    n = p.strands
    resolved = [TruncatedSeries.generator(comp, n, q) for comp in p.arc_component]
    inverses = {}
    order = relation_order(p)

    def inverse(arc: int) -> TruncatedSeries:
        cached = inverses.get(arc)
        if cached is None or cached[0] is not resolved[arc]:
            cached = (resolved[arc], series_inverse(resolved[arc], q))
            inverses[arc] = cached
        return cached[1]

    for sweep in range(1, q + 2):
        changed = False
        for r_index in order:
            r = p.relations[r_index]
            a, a_inv = resolved[r.over_arc], inverse(r.over_arc)
            left, right = (a_inv, a) if r.sign > 0 else (a, a_inv)
            new = series_mul(series_mul(left, resolved[r.in_arc]), right)
            if new != resolved[r.out_arc]:
                resolved[r.out_arc] = new
                changed = True
        if not changed:
            return (resolved, sweep) if return_sweeps else resolved
    raise NoConvergence(f"arc series did not stabilize within {q + 1} sweeps")


def longitude_series(p: WirtingerPresentation, resolved: Sequence[TruncatedSeries],
                     j: int, q: int) -> TruncatedSeries:
    n = p.strands
    out = TruncatedSeries.one(n, q)
    for arc, sign in p.longitude_traversal[j - 1]:
        factor = resolved[arc] if sign > 0 else series_inverse(resolved[arc], q)
        out = series_mul(out, factor)
    f = p.framing_exponent[j - 1]
    if f:
        correction = TruncatedSeries.generator(j, n, q, -1 if f > 0 else 1)
        for _ in range(abs(f)):
            out = series_mul(out, correction)
    return out


@lru_cache(maxsize=512)
def longitudes(d: StringLinkDiagram, q: int = DEFAULT_Q) -> tuple[TruncatedSeries, ...]:
    """All corrected longitude expansions of ``d`` at truncation ``q``."""
    p = presentation_from_diagram(d)
    resolved = resolve_arcs(p, q)
    return tuple(longitude_series(p, resolved, j, q) for j in range(1, d.strands + 1))


def _check_sequence(d: StringLinkDiagram, index: Sequence[int], q: int) -> tuple[int, ...]:
    index = tuple(int(i) for i in index)
    if len(index) < 2:
        raise ValueError("an index sequence needs at least two entries")
    if any(not 1 <= i <= d.strands for i in index):
        raise IndexError(f"index sequence {index} out of range 1..{d.strands}")
    if q < len(index) - 1:
        raise TruncationTooLow(f"mu{index} needs q >= {len(index) - 1}, got q = {q}")
    return index


def mu(d: StringLinkDiagram, index: Sequence[int], q: int = DEFAULT_Q) -> int:
    index = _check_sequence(d, index, q)
    return longitudes(d, q)[index[-1] - 1].coefficient(index[:-1])


def _reduced_sequences(index: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Sequences from deleting at least one entry, then rotating cyclically."""
    out = set()
    k = len(index)
    for size in range(2, k):
        for keep in itertools.combinations(range(k), size):
            sub = tuple(index[i] for i in keep)
            for r in range(size):
                out.add(sub[r:] + sub[:r])
    return out


def delta(d: StringLinkDiagram, index: Sequence[int], q: int = DEFAULT_Q) -> int:
    index = _check_sequence(d, index, q)
    g = 0
    for sub in _reduced_sequences(index):
        g = math.gcd(g, mu(d, sub, q))
    return g


def mu_bar(d: StringLinkDiagram, index: Sequence[int], q: int = DEFAULT_Q) -> MilnorValue:
    index = _check_sequence(d, index, q)
    return MilnorValue(index, mu(d, index, q), delta(d, index, q), q)


def sato_levine(d: StringLinkDiagram, i: int, j: int, q: int = DEFAULT_Q) -> int:
    """``mu(i, i, j, j)``."""
    if i == j:
        raise ValueError("the Sato-Levine invariant needs two distinct components")
    return mu(d, (i, i, j, j), q)


def index_sequences(n: int, max_weight: int, min_weight: int = 2) -> Iterable[tuple[int, ...]]:
    for k in range(min_weight, max_weight + 1):
        yield from itertools.product(range(1, n + 1), repeat=k)


def all_mu_up_to_weight(d: StringLinkDiagram, w: int, q: int | None = None) -> list[MilnorValue]:
    if w < 2:
        raise ValueError("weight must be at least 2")
    if q is None:
        q = max(DEFAULT_Q, w - 1)
    if q < w - 1:
        raise TruncationTooLow(f"weight {w} needs q >= {w - 1}, got q = {q}")
    return [mu_bar(d, index, q) for index in index_sequences(d.strands, w)]


def first_nonvanishing_weight(d: StringLinkDiagram, max_w: int, q: int | None = None) -> int | None:
    """Smallest length of an index sequence with nonzero ``mu``, if any up to ``max_w``."""
    if q is None:
        q = max(DEFAULT_Q, max_w - 1)
    if q < max_w - 1:
        raise TruncationTooLow(f"weight {max_w} needs q >= {max_w - 1}, got q = {q}")
    for k in range(2, max_w + 1):
        if any(mu(d, index, q) for index in index_sequences(d.strands, k, k)):
            return k
    return None
