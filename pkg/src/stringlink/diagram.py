"""Morse-word diagrams of string links.

A diagram is read bottom to top as a list of elementary slices:

* ``Cross(p, s)`` crosses the strands at positions ``p`` and ``p + 1``.  For
  ``s = +1`` the strand running from bottom position ``p`` to top position
  ``p + 1`` passes over; for ``s = -1`` the other one does.  The sign is
  geometric; the oriented crossing sign is only known after tracing.
* ``Cup(p)`` is a local minimum creating two new strands at ``p, p + 1``.
* ``Cap(p)`` is a local maximum joining the strands at ``p, p + 1``.

Positions are 1-based and refer to the running width.  A segment of the
diagram is addressed by ``(level, position)`` where level ``k`` is the
horizontal slab between event ``k - 1`` and event ``k`` (level 0 is the
bottom boundary, level ``len(events)`` the top).

Oriented crossing sign: with both strands running upward ``Cross(p, +1)``
is positive (right-handed).  In general the sign is positive when the cross
product of the over direction with the under direction points toward the
viewer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import (
    ClosedComponent,
    EmptySelection,
    OddCrossingParity,
    PermutedEndpoints,
    WidthMismatch,
    WidthUnderflow,
)

UP, DOWN = 1, -1


@dataclass(frozen=True)
class Cross:
    pos: int
    sign: int = 1

    def __post_init__(self):
        if self.pos < 1:
            raise ValueError(f"positions are 1-based, got {self.pos}")
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class Cup:
    pos: int

    def __post_init__(self):
        if self.pos < 1:
            raise ValueError(f"positions are 1-based, got {self.pos}")


@dataclass(frozen=True)
class Cap:
    pos: int

    def __post_init__(self):
        if self.pos < 1:
            raise ValueError(f"positions are 1-based, got {self.pos}")


SliceEvent = Union[Cross, Cup, Cap]


@dataclass(frozen=True)
class SliceWord:
    boundary_strands: int
    events: tuple[SliceEvent, ...] = ()

    def __post_init__(self):
        if self.boundary_strands < 0:
            raise ValueError("strand count must be non-negative")
        object.__setattr__(self, "events", tuple(self.events))

    def __len__(self):
        return len(self.events)

    def widths(self) -> list[int]:
        """Running width at every level; raises if the bookkeeping fails."""
        w = self.boundary_strands
        out = [w]
        for k, ev in enumerate(self.events):
            if isinstance(ev, Cross):
                if ev.pos + 1 > w:
                    raise WidthUnderflow(f"event {k}: crossing at {ev.pos} needs width {ev.pos + 1}, have {w}")
            elif isinstance(ev, Cup):
                if ev.pos > w + 1:
                    raise WidthUnderflow(f"event {k}: cup at {ev.pos} beyond width {w}")
                w += 2
            elif isinstance(ev, Cap):
                if ev.pos + 1 > w:
                    raise WidthUnderflow(f"event {k}: cap at {ev.pos} needs width {ev.pos + 1}, have {w}")
                w -= 2
            else:
                raise TypeError(f"not a slice event: {ev!r}")
            out.append(w)
        if w != self.boundary_strands:
            raise WidthMismatch(f"final width {w} differs from boundary width {self.boundary_strands}")
        return out


@dataclass(frozen=True)
class CrossingInfo:
    """Resolved data of one ``Cross`` event after tracing."""

    event: int
    over: int            # component label of the over strand
    under: int
    sign: int            # oriented crossing sign
    over_lower: int      # position (at the lower level) where the over strand sits
    under_lower: int


@dataclass(frozen=True)
class Step:
    """One passage of a traced component through a ``Cross`` event."""

    event: int
    under: bool
    piece: int       # index in the component's path of the segment before the crossing


@dataclass(frozen=True, eq=False)
class StringLinkDiagram:
    """A validated slice word with traced components and orientations.

    Equality and hashing use the event list only; isotopy is never decided.
    Build instances through :func:`validate`.
    """

    word: SliceWord
    component_of_segment: dict = field(repr=False)
    orientation_of_segment: dict = field(repr=False)
    crossings: tuple[CrossingInfo, ...] = field(repr=False)
    # per component: ordered ((level, pos), direction) pieces and crossing passages
    paths: tuple[tuple[tuple[tuple[int, int], int], ...], ...] = field(repr=False)
    passages: tuple[tuple[Step, ...], ...] = field(repr=False)

    @property
    def strands(self) -> int:
        return self.word.boundary_strands

    @property
    def events(self) -> tuple[SliceEvent, ...]:
        return self.word.events

    @property
    def crossing_signs(self) -> dict[int, int]:
        return {c.event: c.sign for c in self.crossings}

    def __eq__(self, other):
        if not isinstance(other, StringLinkDiagram):
            return NotImplemented
        return self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __len__(self):
        return len(self.word.events)

    @cached_property
    def has_downward_segments(self) -> bool:
        return any(o == DOWN for o in self.orientation_of_segment.values())


def _step(events: Sequence[SliceEvent], top: int, level: int, pos: int, direction: int):
    """Follow a strand through one event.

    Returns ``(level, pos, direction, crossed_event)``; ``level`` is ``None``
    when the boundary is reached.
    """
    if direction == UP:
        if level == top:
            return None, pos, direction, None
        ev = events[level]
        if isinstance(ev, Cross):
            if pos == ev.pos:
                return level + 1, pos + 1, UP, level
            if pos == ev.pos + 1:
                return level + 1, pos - 1, UP, level
            return level + 1, pos, UP, None
        if isinstance(ev, Cup):
            return level + 1, (pos if pos < ev.pos else pos + 2), UP, None
        # Cap
        if pos < ev.pos:
            return level + 1, pos, UP, None
        if pos == ev.pos:
            return level, pos + 1, DOWN, None
        if pos == ev.pos + 1:
            return level, pos - 1, DOWN, None
        return level + 1, pos - 2, UP, None
    if level == 0:
        return None, pos, direction, None
    ev = events[level - 1]
    if isinstance(ev, Cross):
        if pos == ev.pos:
            return level - 1, pos + 1, DOWN, level - 1
        if pos == ev.pos + 1:
            return level - 1, pos - 1, DOWN, level - 1
        return level - 1, pos, DOWN, None
    if isinstance(ev, Cup):
        if pos < ev.pos:
            return level - 1, pos, DOWN, None
        if pos == ev.pos:
            return level, pos + 1, UP, None
        if pos == ev.pos + 1:
            return level, pos - 1, UP, None
        return level - 1, pos - 2, DOWN, None
    # Cap
    return level - 1, (pos if pos < ev.pos else pos + 2), DOWN, None


def _trace_from_bottom(word: SliceWord, start: int):
    """Trace the strand leaving bottom position ``start``.

    Returns ``(pieces, crossed, end)`` where ``end`` is ``("top", p)`` or
    ``("bottom", p)`` and ``crossed`` lists ``(event, lower_pos, piece_index)`` passages.
    """
    events = word.events
    top = len(events)
    level, pos, direction = 0, start, UP
    pieces = [((0, start), UP)]
    crossed = []
    while True:
        nlevel, npos, ndir, ev = _step(events, top, level, pos, direction)
        if nlevel is None:
            return pieces, crossed, ("top" if direction == UP else "bottom", pos)
        if ev is not None:
            lower_pos = pos if direction == UP else npos
            crossed.append((ev, lower_pos, len(pieces) - 1))
        level, pos, direction = nlevel, npos, ndir
        pieces.append(((level, pos), direction))


def _trace(word: SliceWord):
    widths = word.widths()
    n = word.boundary_strands
    traces = []
    ends = []
    for i in range(1, n + 1):
        pieces, crossed, end = _trace_from_bottom(word, i)
        traces.append((pieces, crossed))
        ends.append(end)
    return widths, traces, ends


def endpoint_permutation(word: SliceWord):
    """Top endpoint reached from every bottom endpoint, or an error if some
    strand returns to the bottom or a closed loop exists."""
    widths, traces, ends = _trace(word)
    for i, (side, p) in enumerate(ends, start=1):
        if side == "bottom":
            raise PermutedEndpoints(f"bottom endpoint {i} is joined to bottom endpoint {p}")
    _check_closed(widths, traces)
    return [p for _, p in ends]


def _check_closed(widths, traces):
    visited = sum(len(pieces) for pieces, _ in traces)
    if visited != sum(widths):
        raise ClosedComponent(f"{sum(widths) - visited} segments lie on closed loops")


def validate(word: SliceWord) -> StringLinkDiagram:
    """Trace components and orientations of a slice word."""
    widths, traces, ends = _trace(word)
    for i, (side, p) in enumerate(ends, start=1):
        if side == "bottom":
            raise PermutedEndpoints(f"bottom endpoint {i} is joined to bottom endpoint {p}")
        if p != i:
            raise PermutedEndpoints(f"bottom endpoint {i} is joined to top endpoint {p}")
    _check_closed(widths, traces)

    component_of = {}
    orientation_of = {}
    for comp, (pieces, _) in enumerate(traces, start=1):
        for seg, direction in pieces:
            component_of[seg] = comp
            orientation_of[seg] = direction

    crossings = []
    over_lower_of = {}
    for k, ev in enumerate(word.events):
        if not isinstance(ev, Cross):
            continue
        over_lower = ev.pos if ev.sign > 0 else ev.pos + 1
        under_lower = ev.pos + 1 if ev.sign > 0 else ev.pos
        o_over = orientation_of[(k, over_lower)]
        o_under = orientation_of[(k, under_lower)]
        crossings.append(CrossingInfo(
            event=k,
            over=component_of[(k, over_lower)],
            under=component_of[(k, under_lower)],
            sign=ev.sign * o_over * o_under,
            over_lower=over_lower,
            under_lower=under_lower,
        ))
        over_lower_of[k] = over_lower

    passages = tuple(
        tuple(Step(ev, lower != over_lower_of[ev], piece) for ev, lower, piece in crossed)
        for _, crossed in traces
    )
    d = StringLinkDiagram(
        word=word,
        component_of_segment=component_of,
        orientation_of_segment=orientation_of,
        crossings=tuple(crossings),
        paths=tuple(tuple(pieces) for pieces, _ in traces),
        passages=passages,
    )
    linking_matrix(d)  # integrality check
    return d


def diagram(n: int, events: Iterable[SliceEvent]) -> StringLinkDiagram:
    return validate(SliceWord(n, tuple(events)))


# ---------------------------------------------------------------------------
# algebra on diagrams


def _check_widths(a: StringLinkDiagram, b: StringLinkDiagram):
    if a.strands != b.strands:
        raise WidthMismatch(f"diagrams have {a.strands} and {b.strands} strands")


def compose(d1: StringLinkDiagram, d2: StringLinkDiagram) -> StringLinkDiagram:
    """Stack ``d2`` on top of ``d1``."""
    _check_widths(d1, d2)
    return validate(SliceWord(d1.strands, d1.events + d2.events))


def compose_all(ds: Sequence[StringLinkDiagram]) -> StringLinkDiagram:
    if not ds:
        raise ValueError("nothing to compose")
    for d in ds[1:]:
        _check_widths(ds[0], d)
    return validate(SliceWord(ds[0].strands, tuple(ev for d in ds for ev in d.events)))


def _mirror_event(ev: SliceEvent) -> SliceEvent:
    if isinstance(ev, Cross):
        return Cross(ev.pos, -ev.sign)
    if isinstance(ev, Cup):
        return Cap(ev.pos)
    return Cup(ev.pos)


def mirror_events(events: Sequence[SliceEvent]) -> tuple[SliceEvent, ...]:
    return tuple(_mirror_event(ev) for ev in reversed(events))


def invert(d: StringLinkDiagram) -> StringLinkDiagram:
    """Reflect the diagram top to bottom."""
    return validate(SliceWord(d.strands, mirror_events(d.events)))


def conjugate(s: StringLinkDiagram, p: StringLinkDiagram) -> StringLinkDiagram:
    """``s p s^-1``."""
    _check_widths(s, p)
    return compose_all([s, p, invert(s)])


def commutator(a: StringLinkDiagram, b: StringLinkDiagram) -> StringLinkDiagram:
    """``a b a^-1 b^-1``."""
    _check_widths(a, b)
    return compose_all([a, b, invert(a), invert(b)])


def delete_components(d: StringLinkDiagram, keep: Iterable[int]) -> StringLinkDiagram:
    """Erase every component not in ``keep`` and renumber the rest in order."""
    keep = set(keep)
    if not keep:
        raise EmptySelection("must keep at least one component")
    for c in keep:
        if not 1 <= c <= d.strands:
            raise IndexError(f"no component {c} in a {d.strands}-component diagram")
    comp = d.component_of_segment

    def new_pos(level: int, pos: int) -> int:
        return sum(1 for p in range(1, pos) if comp[(level, p)] in keep) + 1

    events = []
    for k, ev in enumerate(d.events):
        if isinstance(ev, Cross):
            if comp[(k, ev.pos)] in keep and comp[(k, ev.pos + 1)] in keep:
                events.append(Cross(new_pos(k, ev.pos), ev.sign))
        elif isinstance(ev, Cup):
            if comp[(k + 1, ev.pos)] in keep:
                events.append(Cup(new_pos(k + 1, ev.pos)))
        else:
            if comp[(k, ev.pos)] in keep:
                events.append(Cap(new_pos(k, ev.pos)))
    return validate(SliceWord(len(keep), tuple(events)))


def embed(d: StringLinkDiagram, n: int, positions: Sequence[int]) -> StringLinkDiagram:
    """Place ``d`` on the given strands of an ``n``-strand diagram.

    Trivial strands to the left of ``positions[0]`` stay put.  The others are
    routed behind ``d`` to its right side and back again, so deleting them
    recovers ``d`` exactly.
    """
    positions = list(positions)
    m = d.strands
    if len(positions) != m:
        raise IndexError(f"need {m} positions, got {len(positions)}")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise IndexError("positions must be strictly increasing")
    if m and not (1 <= positions[0] and positions[-1] <= n):
        raise IndexError(f"positions must lie in 1..{n}")
    chosen = set(positions)
    left = sum(1 for p in range(1, n + 1) if p not in chosen and (not m or p < positions[0]))

    # bubble the routed trivial strands rightward, each passing under
    row = ["d" if p in chosen else "t" for p in range(1, n + 1)]
    prefix = []
    for _ in range(n):
        for p in range(left, n - 1):
            if row[p] == "t" and row[p + 1] == "d":
                row[p], row[p + 1] = row[p + 1], row[p]
                prefix.append(Cross(p + 1, -1))
    body = tuple(_shift(ev, left) for ev in d.events)
    events = tuple(prefix) + body + mirror_events(prefix)
    return validate(SliceWord(n, events))


def _shift(ev: SliceEvent, offset: int) -> SliceEvent:
    if isinstance(ev, Cross):
        return Cross(ev.pos + offset, ev.sign)
    return type(ev)(ev.pos + offset)


def linking_matrix(d: StringLinkDiagram) -> list[list[int]]:
    """Half the signed count of crossings between each pair of components."""
    n = d.strands
    twice = [[0] * n for _ in range(n)]
    for c in d.crossings:
        if c.over != c.under:
            twice[c.over - 1][c.under - 1] += c.sign
            twice[c.under - 1][c.over - 1] += c.sign
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if twice[i][j] % 2:
                raise OddCrossingParity(f"components {i + 1}, {j + 1}: odd signed crossing count")
            out[i][j] = twice[i][j] // 2
    return out


def wiggle(d: StringLinkDiagram, event_position: int, strand_position: int,
           side: str = "right") -> StringLinkDiagram:
    """Insert a cancelling cup/cap zigzag on one strand before event
    ``event_position`` (0 inserts at the bottom)."""
    if not 0 <= event_position <= len(d.events):
        raise IndexError(f"event position {event_position} out of range")
    width = d.word.widths()[event_position]
    if not 1 <= strand_position <= width:
        raise IndexError(f"strand position {strand_position} out of range at width {width}")
    p = strand_position
    if side == "right":
        zig = (Cup(p + 1), Cap(p))
    elif side == "left":
        zig = (Cup(p), Cap(p + 1))
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    ev = d.events
    return validate(SliceWord(d.strands, ev[:event_position] + zig + ev[event_position:]))


# ---------------------------------------------------------------------------
# builders


def trivial(n: int) -> StringLinkDiagram:
    return validate(SliceWord(n, ()))


def hopf() -> StringLinkDiagram:
    """One full twist: the string link whose closure is the Hopf link."""
    return validate(SliceWord(2, (Cross(1, 1), Cross(1, 1))))


# Strand 2 runs up, turns down at a cap and up again at a cup on its right.
# Its up leg makes a full twist with strand 1, crosses its own down leg, and
# the down leg twists back around strand 1: five crossings, linking number 0.
# Any 5-crossing two-component diagram with linking number 0 and a nonzero
# mixed invariant is a Whitehead link diagram.
WHITEHEAD_EVENTS: tuple[SliceEvent, ...] = (
    Cup(3), Cross(1, 1), Cross(1, 1), Cross(2, -1), Cross(1, 1), Cross(1, 1), Cap(2),
)


def whitehead() -> StringLinkDiagram:
    """A fixed string link representative of the Whitehead link."""
    return validate(SliceWord(2, WHITEHEAD_EVENTS))


# Closed braids of the knots, cut open along the first strand's closing arc.
_KNOT_BRAIDS = {
    "trefoil": (2, (1, 1, 1)),
    "figure_eight": (3, (1, -2, 1, -2)),
}


def long_knot(knot: str) -> StringLinkDiagram:
    """A one-strand diagram of a knot cut open at a point."""
    try:
        width, letters = _KNOT_BRAIDS[knot]
    except KeyError:
        raise ValueError(f"unknown knot {knot!r}; choose from {sorted(_KNOT_BRAIDS)}") from None
    # nested return legs to the right of the braid region
    cups = tuple(Cup(k) for k in range(2, width + 1))
    crosses = tuple(Cross(abs(k), 1 if k > 0 else -1) for k in letters)
    caps = tuple(Cap(k) for k in range(width, 1, -1))
    return validate(SliceWord(1, cups + crosses + caps))


def borromean() -> StringLinkDiagram:
    """The pure braid commutator [A_12, A_23]; its closure is the Borromean rings."""
    from .braid import braid_commutator, pure_generator, to_slice_word

    return validate(to_slice_word(braid_commutator(pure_generator(1, 2, 3), pure_generator(2, 3, 3))))


def clasp_commutator() -> StringLinkDiagram:
    """The commutator of the Hopf and Whitehead representatives."""
    return commutator(hopf(), whitehead())


def split_knot(n: int, i: int, knot: str) -> StringLinkDiagram:
    """Knot ``knot`` tied in strand ``i``, all other strands straight."""
    if not 1 <= i <= n:
        raise IndexError(f"strand {i} out of range 1..{n}")
    return embed(long_knot(knot), n, [i])


def random_string_link(n: int, length: int, seed: int, max_extra: int = 4,
                       cup_rate: float = 0.2) -> StringLinkDiagram:
    """A seeded random string link built from crossings and zigzags.

    Cups open temporary extra strands that later crossings can tangle with;
    caps close them again.  A final sorting braid restores the endpoint
    permutation.  Samples that produce closed loops or bottom-to-bottom arcs
    are redrawn.
    """
    rng = random.Random(seed)
    while True:
        events: list[SliceEvent] = []
        w = n
        for _ in range(length):
            r = rng.random()
            if r < cup_rate and w < n + max_extra:
                events.append(Cup(rng.randint(1, w + 1)))
                w += 2
            elif r < 2 * cup_rate and w > n:
                events.append(Cap(rng.randint(1, w - 1)))
                w -= 2
            elif w >= 2:
                events.append(Cross(rng.randint(1, w - 1), rng.choice((1, -1))))
        while w > n:
            events.append(Cap(rng.randint(1, w - 1)))
            w -= 2
        word = SliceWord(n, tuple(events))
        try:
            ends = endpoint_permutation(word)
        except (ClosedComponent, PermutedEndpoints):
            continue
        events.extend(_sorting_crosses(ends, rng))
        return validate(SliceWord(n, tuple(events)))


def _sorting_crosses(ends: list[int], rng: random.Random) -> list[Cross]:
    # strand_at[p] = bottom endpoint of the strand now at top position p
    strand_at = [0] * len(ends)
    for start, end in enumerate(ends, start=1):
        strand_at[end - 1] = start
    out = []
    for _ in range(len(ends)):
        for p in range(len(ends) - 1):
            if strand_at[p] > strand_at[p + 1]:
                strand_at[p], strand_at[p + 1] = strand_at[p + 1], strand_at[p]
                out.append(Cross(p + 1, rng.choice((1, -1))))
    return out
