"""Wirtinger presentations of string link diagrams.

Arcs run between undercrossings.  Each component's first arc is the one
meeting the bottom boundary; its meridian is the base meridian ``x_j``.

Paths compose left to right and meridians are right-handed with respect to
the strand orientation, with the basepoint on the viewer's side.  With these
conventions a crossing of sign ``e`` with over arc ``a`` gives

    out = a^-e * in * a^e

and the longitude of component ``j`` reads the over arcs it passes under, in
order of traversal, as ``prod a^e``, then appends ``x_j^-f`` where ``f`` is
the framing exponent (the total exponent on component ``j``'s own arcs).
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import StringLinkDiagram


@dataclass(frozen=True)
class Relation:
    out_arc: int
    over_arc: int
    sign: int
    in_arc: int
    event: int


@dataclass(frozen=True)
class WirtingerPresentation:
    strands: int
    arc_component: tuple[int, ...]          # component label of every arc
    relations: tuple[Relation, ...]         # in traversal order per component
    base_meridian: tuple[int, ...]          # arc id per component
    longitude_traversal: tuple[tuple[tuple[int, int], ...], ...]
    framing_exponent: tuple[int, ...]

    @property
    def arcs(self) -> int:
        return len(self.arc_component)

    def dump(self) -> str:
        """Human-readable arc and relation tables."""
        lines = [f"arcs {self.arcs}"]
        for a, comp in enumerate(self.arc_component):
            base = " base" if a in self.base_meridian else ""
            lines.append(f"  a{a} component {comp}{base}")
        lines.append(f"relations {len(self.relations)}")
        for r in self.relations:
            e = "+" if r.sign > 0 else "-"
            lines.append(f"  a{r.out_arc} = a{r.over_arc}^({'-' if r.sign > 0 else '+'}1)"
                         f" a{r.in_arc} a{r.over_arc}^({e}1)   [event {r.event}]")
        for j, trav in enumerate(self.longitude_traversal, start=1):
            word = " ".join(f"a{a}^{s:+d}" for a, s in trav) or "1"
            lines.append(f"longitude {j}: {word} * x{j}^{-self.framing_exponent[j - 1]:+d}")
        return "\n".join(lines)


def presentation_from_diagram(d: StringLinkDiagram) -> WirtingerPresentation:
    crossing_at = {c.event: c for c in d.crossings}
    arc_component: list[int] = []
    base = []
    # arc containing each traced segment
    arc_of_segment: dict[tuple[int, int], int] = {}
    under_events: list[list[tuple[int, int, int]]] = []   # (event, in_arc, out_arc)

    for comp, (pieces, steps) in enumerate(zip(d.paths, d.passages), start=1):
        arc = len(arc_component)
        arc_component.append(comp)
        base.append(arc)
        unders = []
        breaks = {st.piece: st.event for st in steps if st.under}
        for k, (seg, _) in enumerate(pieces):
            arc_of_segment[seg] = arc
            if k in breaks:
                new_arc = len(arc_component)
                arc_component.append(comp)
                unders.append((breaks[k], arc, new_arc))
                arc = new_arc
        under_events.append(unders)

    relations = []
    traversal = []
    framing = []
    for comp, unders in enumerate(under_events, start=1):
        trav = []
        f = 0
        for event, in_arc, out_arc in unders:
            c = crossing_at[event]
            over_arc = arc_of_segment[(event, c.over_lower)]
            relations.append(Relation(out_arc, over_arc, c.sign, in_arc, event))
            trav.append((over_arc, c.sign))
            if arc_component[over_arc] == comp:
                f += c.sign
        traversal.append(tuple(trav))
        framing.append(f)

    return WirtingerPresentation(
        strands=d.strands,
        arc_component=tuple(arc_component),
        relations=tuple(relations),
        base_meridian=tuple(base),
        longitude_traversal=tuple(traversal),
        framing_exponent=tuple(framing),
    )


def abelianized_longitude(p: WirtingerPresentation, j: int) -> list[int]:
    """Exponent sums of the corrected longitude of component ``j`` on the meridians."""
    vec = [0] * p.strands
    for arc, sign in p.longitude_traversal[j - 1]:
        vec[p.arc_component[arc] - 1] += sign
    vec[j - 1] -= p.framing_exponent[j - 1]
    return vec
