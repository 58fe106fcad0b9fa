"""Chord diagrams, boundary traversal, and planar diagrams of the boundary link.

Geometric model
---------------

The 2n foot positions sit on a horizontal baseline with the disc below it.
Band k with feet p < q is a flat ribbon above the baseline whose outer edge
spans [p-e, q+e] and whose inner edge spans [p+e, q-e] for a small offset e.
Two bands interleave exactly when one foot of each lies between the feet of
the other; each of the four (edge, edge) pairs of an interleaved band pair
then crosses exactly once, and the band on the shallower page (smaller
letter) passes over at all four crossings.

The boundary of the surface is traced by pairing up the endpoints of those
edges: writing L_x/R_x for the left/right end of the foot interval at
position x, the outer edge joins L_p to R_q, the inner edge joins R_p to L_q,
and the disc boundary contributes the gap segments R_x -- L_{x+1}
(cyclically).  Cycles of this pairing are the link components.  The same
pairing convention underlies the handle-slide side rule in the word module,
so both share one geometric model.

Crossing bookkeeping
--------------------

Endpoints are given the exact integer coordinate 4*x - 1 (left of foot x) or
4*x + 1 (right of foot x), so every edge is an interval [lo, hi] and two
edges cross exactly when their intervals interleave.  Each edge is drawn as
a rectangular arc: a vertical rise at lo up to an elevation H(edge), a
horizontal run, and a vertical drop at hi.  Elevations are ordered by
(interval width, lo), so a nested edge always runs strictly below the edge
containing it and only interleaved pairs meet, in exactly one point each:
the riser of the higher edge crosses the run of the lower one.  Every
crossing therefore has exact integer/tuple coordinates, the drawing is
planar by construction, and the crossing order along each edge (up the
riser, along the run, down the drop) is deterministic with no ties.

At a crossing of edges a (starting further left) and b, the counterclockwise
order of the four strand ends is (a-left, b-left, a-right, b-right),
whichever of the two arcs is the vertical one.  Each crossing is stored as
the four incident strand segments (arcs) in counterclockwise order starting
at an end of the under-strand, so slots 0/2 carry the under-strand and
slots 1/3 the over-strand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .words import BasketWord


@dataclass(frozen=True)
class ChordDiagram:
    n: int
    feet: tuple[tuple[int, int], ...]  # feet[k-1] = (p_k, q_k), 1-based positions, p < q


def to_chords(w: BasketWord) -> ChordDiagram:
    positions: dict[int, list[int]] = {}
    for pos, v in enumerate(w.letters, start=1):
        positions.setdefault(v, []).append(pos)
    feet = tuple(tuple(positions[k]) for k in range(1, w.n + 1))
    return ChordDiagram(n=w.n, feet=feet)


def interleaved(c: ChordDiagram, i: int, j: int) -> bool:
    """True iff exactly one foot of band j lies strictly between the feet of band i."""
    if i == j:
        raise ValueError("interleaved is defined for distinct bands")
    pi, qi = c.feet[i - 1]
    pj, qj = c.feet[j - 1]
    return (pi < pj < qi) != (pi < qj < qi)


def interleaved_pairs(c: ChordDiagram) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(1, c.n + 1)
        for j in range(i + 1, c.n + 1)
        if interleaved(c, i, j)
    ]


# ---------------------------------------------------------------------------
# boundary traversal


@dataclass(frozen=True)
class BoundaryTrace:
    count: int
    # labels[x-1] = (component of L_x, component of R_x); components numbered
    # in order of first visit
    labels: tuple[tuple[int, int], ...]


def boundary_components(w: BasketWord) -> BoundaryTrace:
    """Components of the boundary link, by walking the endpoint pairing."""
    n = w.n
    if n == 0:
        return BoundaryTrace(count=1, labels=())
    m = 2 * n
    chords = to_chords(w)
    # endpoints are (position, side) with side 0 = L, 1 = R
    band_partner: dict[tuple[int, int], tuple[int, int]] = {}
    for p, q in chords.feet:
        band_partner[(p, 0)] = (q, 1)  # outer edge
        band_partner[(q, 1)] = (p, 0)
        band_partner[(p, 1)] = (q, 0)  # inner edge
        band_partner[(q, 0)] = (p, 1)
    gap_partner = {}
    for x in range(1, m + 1):
        y = x % m + 1
        gap_partner[(x, 1)] = (y, 0)
        gap_partner[(y, 0)] = (x, 1)

    comp: dict[tuple[int, int], int] = {}
    count = 0
    for start_x in range(1, m + 1):
        for start_side in (0, 1):
            start = (start_x, start_side)
            if start in comp:
                continue
            label = count
            count += 1
            # alternate band edge / gap segment; starting edge type depends on
            # the side: an L endpoint's gap neighbour is behind it
            node = start
            use_band = True
            while True:
                comp[node] = label
                node = band_partner[node] if use_band else gap_partner[node]
                use_band = not use_band
                if node == start:
                    break
    labels = tuple((comp[(x, 0)], comp[(x, 1)]) for x in range(1, m + 1))
    return BoundaryTrace(count=count, labels=labels)


# ---------------------------------------------------------------------------
# planar diagrams


@dataclass(frozen=True)
class Crossing:
    over_band: int
    under_band: int
    ends: tuple[int, int, int, int]  # arc ids, ccw; ends[0]/ends[2] on the under-strand


@dataclass(frozen=True)
class PlanarDiagram:
    n: int
    crossings: tuple[Crossing, ...]
    arc_count: int
    free_loops: int  # closed curves that meet no crossing
    # per closed curve through crossings: passages (crossing index, entry slot)
    curves: tuple[tuple[tuple[int, int], ...], ...]
    base_signs: tuple[int, ...]  # crossing sign under the reference orientation
    under_component: tuple[int, ...]
    over_component: tuple[int, ...]

    @property
    def components(self) -> int:
        return len(self.curves) + self.free_loops


def diagram_from_crossings(
    n: int, crossings: Iterable[tuple[int, int, tuple[int, int, int, int]]], free_loops: int
) -> PlanarDiagram:
    """Assemble a PlanarDiagram from raw crossing data.

    Each crossing is (over_band, under_band, ends) with ends as described on
    Crossing.  Every arc id must occur exactly twice over all ends.  The
    closed curves, reference orientation and crossing signs are derived here.
    """
    recs = [Crossing(o, u, tuple(e)) for o, u, e in crossings]
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, rec in enumerate(recs):
        for slot, arc in enumerate(rec.ends):
            occurrences.setdefault(arc, []).append((ci, slot))
    for arc, occ in occurrences.items():
        if len(occ) != 2:
            raise ValueError(f"arc {arc} has {len(occ)} ends, expected 2")

    visited: set[tuple[int, int]] = set()
    curves: list[tuple[tuple[int, int], ...]] = []
    entry_of: dict[tuple[int, int], tuple[int, int]] = {}  # (ci, slot entered) -> (curve, step)
    for ci in range(len(recs)):
        for slot in range(4):
            if (ci, slot) in visited:
                continue
            passages = []
            cur, cur_slot = ci, slot
            while (cur, cur_slot) not in visited:
                visited.add((cur, cur_slot))
                out_slot = (cur_slot + 2) % 4
                visited.add((cur, out_slot))
                passages.append((cur, cur_slot))
                out_arc = recs[cur].ends[out_slot]
                a, b = occurrences[out_arc]
                cur, cur_slot = b if a == (cur, out_slot) else a
            curve_index = len(curves)
            for step, (c, s) in enumerate(passages):
                entry_of[(c, s)] = (curve_index, step)
            curves.append(tuple(passages))

    base_signs = []
    under_comp = []
    over_comp = []
    for ci, rec in enumerate(recs):
        entered0 = (ci, 0) in entry_of
        entered1 = (ci, 1) in entry_of
        base_signs.append(1 if entered0 != entered1 else -1)
        u_slot = 0 if entered0 else 2
        o_slot = 1 if entered1 else 3
        under_comp.append(entry_of[(ci, u_slot)][0])
        over_comp.append(entry_of[(ci, o_slot)][0])

    return PlanarDiagram(
        n=n,
        crossings=tuple(recs),
        arc_count=len(occurrences),
        free_loops=free_loops,
        curves=tuple(curves),
        base_signs=tuple(base_signs),
        under_component=tuple(under_comp),
        over_component=tuple(over_comp),
    )


def _edge_interval(feet: tuple[int, int], kind: int) -> tuple[int, int]:
    # kind 0 = outer, 1 = inner; coordinates 4x -/+ 1 around foot x
    p, q = feet
    if kind == 0:
        return (4 * p - 1, 4 * q + 1)
    return (4 * p + 1, 4 * q - 1)


def _elevation(interval: tuple[int, int]) -> tuple[int, int]:
    # wider intervals run higher; equal widths are never nested, so the
    # tiebreak by position is safe
    lo, hi = interval
    return (hi - lo, lo)


def to_planar_diagram(w: BasketWord) -> PlanarDiagram:
    """Deterministic projection of the boundary link.

    Crossings arise only between edges of interleaved band pairs; the
    shallower band is the over-strand everywhere.  The construction follows
    the module docstring; closed curves of the result always agree with
    boundary_components.
    """
    n = w.n
    if n == 0:
        return diagram_from_crossings(0, [], free_loops=1)
    chords = to_chords(w)
    m = 2 * n

    # raw crossings: (left edge, right edge, x, y); the crossing sits where
    # the riser of the higher edge meets the run of the lower one
    raw: list[tuple[tuple[int, int], tuple[int, int], int, tuple[int, int]]] = []
    for i, j in interleaved_pairs(chords):
        for ki in (0, 1):
            for kj in (0, 1):
                ei, ej = (i, ki), (j, kj)
                int_i = _edge_interval(chords.feet[i - 1], ki)
                int_j = _edge_interval(chords.feet[j - 1], kj)
                (left, lint), (right, rint) = sorted(
                    ((ei, int_i), (ej, int_j)), key=lambda t: t[1][0]
                )
                if _elevation(rint) > _elevation(lint):
                    x, y = rint[0], _elevation(lint)  # right edge rises through left's run
                else:
                    x, y = lint[1], _elevation(rint)  # left edge drops through right's run
                raw.append((left, right, x, y))
    # deterministic processing order: sweep left to right, bottom to top
    raw.sort(key=lambda r: (r[2], r[3]))

    # ccw slots before under-rotation: (left-, right-, left+, right+); the
    # under-strand is the deeper (larger-letter) band, rotated into slot 0
    slot_of: dict[tuple[tuple[int, int], int], tuple[int, int]] = {}
    over_under: list[tuple[int, int]] = []
    for ci, (left, right, _, _) in enumerate(raw):
        if left[0] > right[0]:
            # left edge is deeper: slots (left-, right-, left+, right+)
            layout = {(left, 0): 0, (right, 0): 1, (left, 1): 2, (right, 1): 3}
            over, under = right[0], left[0]
        else:
            # right edge is deeper: start ccw order at right-
            layout = {(right, 0): 0, (left, 1): 1, (right, 1): 2, (left, 0): 3}
            over, under = left[0], right[0]
        for (edge, end), slot in layout.items():
            slot_of[(edge, end, ci)] = slot  # end 0 = toward smaller coordinate
        over_under.append((over, under))

    # ordered crossings along each edge: up the riser (ascending partner
    # elevation), along the run (ascending x), down the drop (descending
    # partner elevation); the keys are distinct by construction
    def edge_key(edge: tuple[int, int], x: int, y: tuple[int, int]):
        lo, hi = _edge_interval(chords.feet[edge[0] - 1], edge[1])
        if x == lo:
            return (0, y)
        if x == hi:
            return (2, (-y[0], -y[1]))
        return (1, (x,))

    per_edge: dict[tuple[int, int], list[tuple[object, int]]] = {}
    for ci, (left, right, x, y) in enumerate(raw):
        per_edge.setdefault(left, []).append((edge_key(left, x, y), ci))
        per_edge.setdefault(right, []).append((edge_key(right, x, y), ci))
    for lst in per_edge.values():
        lst.sort()

    # nodes: crossing ports (ci, slot) and boundary points (x, side), side 0=L 1=R
    adj: dict[object, list[object]] = {}

    def connect(a: object, b: object) -> None:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for band in range(1, n + 1):
        p, q = chords.feet[band - 1]
        for kind in (0, 1):
            edge = (band, kind)
            if kind == 0:
                left_terminal, right_terminal = ("b", p, 0), ("b", q, 1)
            else:
                left_terminal, right_terminal = ("b", p, 1), ("b", q, 0)
            chain = [left_terminal]
            for _, ci in per_edge.get(edge, []):
                chain.append(("p", ci, slot_of[(edge, 0, ci)]))
                chain.append(("p", ci, slot_of[(edge, 1, ci)]))
            chain.append(right_terminal)
            # pairs (terminal, in-port), (out-port, next in-port), ...; the
            # in/out ports of one crossing connect through the crossing itself
            for a, b in zip(chain[::2], chain[1::2]):
                connect(a, b)
    for x in range(1, m + 1):
        connect(("b", x, 1), ("b", x % m + 1, 0))

    # walk maximal strand segments between ports; port nodes have one external
    # neighbour, boundary points have two
    arc_at: dict[tuple[int, int], int] = {}  # (ci, slot) -> arc id
    arc_count = 0
    visited_points: set[object] = set()
    for ci in range(len(raw)):
        for slot in range(4):
            if (ci, slot) in arc_at:
                continue
            arc = arc_count
            arc_count += 1
            arc_at[(ci, slot)] = arc
            prev: object = ("p", ci, slot)
            node = adj[prev][0]
            while node[0] != "p":
                visited_points.add(node)
                nxt = [t for t in adj[node] if t != prev]
                # two identical neighbours means a doubled edge; pick the other copy
                if not nxt:
                    nxt = [t for t in adj[node]]
                prev, node = node, nxt[0]
            arc_at[(node[1], node[2])] = arc
    free_loops = 0
    for x in range(1, m + 1):
        for side in (0, 1):
            start = ("b", x, side)
            if start in visited_points:
                continue
            free_loops += 1
            prev, node = start, adj[start][0]
            visited_points.add(start)
            while node != start:
                visited_points.add(node)
                nxt = [t for t in adj[node] if t != prev]
                if not nxt:
                    nxt = [adj[node][0]]
                prev, node = node, nxt[0]

    crossing_data = []
    for ci in range(len(raw)):
        over, under = over_under[ci]
        ends = tuple(arc_at[(ci, slot)] for slot in range(4))
        crossing_data.append((over, under, ends))
    return diagram_from_crossings(n, crossing_data, free_loops)


def pd_text(d: PlanarDiagram) -> str:
    """One line per crossing: "X a b c d o=<band> u=<band>".

    The four arc ids are listed counterclockwise starting from the incoming
    under-strand with respect to the reference orientation of the curves.
    Arc ids are 0-based.
    """
    entered: set[tuple[int, int]] = set()
    for passages in d.curves:
        entered.update(passages)
    lines = []
    for ci, rec in enumerate(d.crossings):
        ends = rec.ends
        if (ci, 2) in entered:  # under-strand walks from slot 2 to slot 0
            ends = (ends[2], ends[3], ends[0], ends[1])
        lines.append(
            f"X {ends[0]} {ends[1]} {ends[2]} {ends[3]} o={rec.over_band} u={rec.under_band}"
        )
    return "\n".join(lines)


def _genus(d: PlanarDiagram) -> int:
    """Total genus of the rotation system, summed over connected pieces.

    Zero means the stored cyclic orders at crossings are realizable in the
    plane exactly as recorded.  Crossing-free loops are ignored.
    """
    if not d.crossings:
        return 0
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, rec in enumerate(d.crossings):
        for slot, arc in enumerate(rec.ends):
            occurrences.setdefault(arc, []).append((ci, slot))

    # connected pieces of the 4-valent graph
    parent = list(range(len(d.crossings)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for occ in occurrences.values():
        (c1, _), (c2, _) = occ
        r1, r2 = find(c1), find(c2)
        if r1 != r2:
            parent[r1] = r2

    # face tracing: dart (ci, slot) departs along ends[slot]; on arrival turn
    # to the next port counterclockwise
    seen: set[tuple[int, int]] = set()
    faces: dict[int, int] = {}
    for ci in range(len(d.crossings)):
        for slot in range(4):
            if (ci, slot) in seen:
                continue
            root = find(ci)
            faces[root] = faces.get(root, 0) + 1
            cur = (ci, slot)
            while cur not in seen:
                seen.add(cur)
                arc = d.crossings[cur[0]].ends[cur[1]]
                a, b = occurrences[arc]
                arrive = b if a == cur else a
                cur = (arrive[0], (arrive[1] + 1) % 4)

    genus_total = 0
    verts: dict[int, int] = {}
    for ci in range(len(d.crossings)):
        verts[find(ci)] = verts.get(find(ci), 0) + 1
    for root, v in verts.items():
        e = 2 * v
        f = faces[root]
        genus_total += (2 - v + e - f) // 2
    return genus_total
