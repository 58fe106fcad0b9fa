"""Exact link invariants of basket boundary links.

Everything is computed over the integers.  The Kauffman bracket lives in the
variable A; the Jones polynomial is written in q with q^2 = t (so A^-4 = t
corresponds to A = q^-(1/2) and every exponent stays an integer).  Links are
classified up to mirror image and up to the orientation of each component:
the canonical Jones value is the lexicographically least coefficient encoding
over every orientation choice and the mirror map q <-> q^-1.

The Seifert matrix of the basket surface is read off combinatorially: bands
carry no twists, so V_kk = 0, and an interleaved pair contributes a single
+-1 on the side of the deeper band.  That rule is cross-checked against
core_linking_oracle, which recomputes each entry from an explicit two-curve
planar diagram of the pushed-off band cores.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import (
    PlanarDiagram,
    diagram_from_crossings,
    interleaved,
    to_chords,
    to_planar_diagram,
)
from .laurent import LaurentPolynomial, poly_min
from .words import BasketWord

_DELTA = {2: -1, -2: -1}  # loop value -A^2 - A^-2


# ---------------------------------------------------------------------------
# raw dict-polynomial helpers (hot path)


def _padd_into(acc: dict[int, int], p: dict[int, int]) -> None:
    for e, c in p.items():
        v = acc.get(e, 0) + c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


def _pshift(p: dict[int, int], k: int) -> dict[int, int]:
    return {e + k: c for e, c in p.items()}


def _pmul_delta(p: dict[int, int], times: int) -> dict[int, int]:
    for _ in range(times):
        out: dict[int, int] = {}
        for e, c in p.items():
            for de, dc in _DELTA.items():
                ee = e + de
                v = out.get(ee, 0) + c * dc
                if v:
                    out[ee] = v
                else:
                    del out[ee]
        p = out
    return p


def _pdiv_delta(p: dict[int, int]) -> dict[int, int]:
    """Exact division by -A^2 - A^-2."""
    p = dict(p)
    q: dict[int, int] = {}
    while p:
        e = max(p)
        c = p[e]
        q[e - 2] = -c
        # subtract (-c A^(e-2)) * delta = c A^e + c A^(e-4)
        for ee, cc in ((e, -c), (e - 4, -c)):
            v = p.get(ee, 0) + cc
            if v:
                p[ee] = v
            else:
                p.pop(ee, None)
    return q


def _splice(pairing: dict[int, int], x: int, y: int) -> int:
    """Join the free ends of arcs x and y; returns 1 when a loop closes."""
    if x == y:
        return 1
    ex = pairing.pop(x, x)
    ey = pairing.pop(y, y)
    if ex == y:
        return 1
    pairing[ex] = ey
    pairing[ey] = ex
    return 0


# ---------------------------------------------------------------------------
# Kauffman bracket


def kauffman_bracket(d: PlanarDiagram) -> LaurentPolynomial:
    """Bracket polynomial, normalized so a crossingless unknot diagram gives 1.

    Crossings are contracted one at a time; a state is the planar matching of
    the arcs with exactly one consumed endpoint, so the state space stays
    small for diagrams whose crossings are sorted along the baseline.
    """
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    for rec in d.crossings:
        a0, a1, a2, a3 = rec.ends
        new_states: dict[tuple, dict[int, int]] = {}
        for key, poly in states.items():
            base: dict[int, int] = {}
            for a, b in key:
                base[a] = b
                base[b] = a
            for pairs, apow in ((((a0, a1), (a2, a3)), 1), (((a0, a3), (a1, a2)), -1)):
                pairing = dict(base)
                loops = 0
                for x, y in pairs:
                    loops += _splice(pairing, x, y)
                coeff = _pmul_delta(_pshift(poly, apow), loops)
                new_key = tuple(sorted((a, b) for a, b in pairing.items() if a < b))
                acc = new_states.get(new_key)
                if acc is None:
                    new_states[new_key] = coeff
                else:
                    _padd_into(acc, coeff)
        states = {k: v for k, v in new_states.items() if v}
    result = states.get((), {})
    result = _pmul_delta(dict(result), d.free_loops)
    return LaurentPolynomial.from_coeffs("A", _pdiv_delta(result))


def bracket_state_sum(d: PlanarDiagram) -> LaurentPolynomial:
    """Plain 2^c state enumeration; the independent cross-check for the bracket."""
    c = len(d.crossings)
    if c > 20:
        raise ValueError("state enumeration is limited to 20 crossings")
    total: dict[int, int] = {}
    for mask in range(1 << c):
        apow = 0
        parent: dict[int, int] = {}

        def find(a: int) -> int:
            while parent.setdefault(a, a) != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        loops = 0
        for ci, rec in enumerate(d.crossings):
            a0, a1, a2, a3 = rec.ends
            if (mask >> ci) & 1:
                apow += 1
                joins = ((a0, a1), (a2, a3))
            else:
                apow -= 1
                joins = ((a0, a3), (a1, a2))
            for x, y in joins:
                rx, ry = find(x), find(y)
                if rx == ry:
                    loops += 1
                else:
                    parent[rx] = ry
        term = _pmul_delta({apow: 1}, loops)
        _padd_into(total, term)
    total = _pmul_delta(total, d.free_loops)
    return LaurentPolynomial.from_coeffs("A", _pdiv_delta(total))


# ---------------------------------------------------------------------------
# orientations, writhe, linking


def orient_and_writhe(
    d: PlanarDiagram, orientation: tuple[int, ...]
) -> tuple[int, tuple[int, ...]]:
    """Crossing signs and writhe for a choice of +-1 per component.

    The orientation tuple covers all components (crossing-free loops
    included, though they cannot affect any sign).
    """
    if len(orientation) != d.components:
        raise ValueError(f"need {d.components} orientation entries")
    signs = []
    for ci in range(len(d.crossings)):
        s = (
            d.base_signs[ci]
            * orientation[d.under_component[ci]]
            * orientation[d.over_component[ci]]
        )
        signs.append(s)
    return sum(signs), tuple(signs)


def _writhe_values(d: PlanarDiagram) -> set[int]:
    k = len(d.curves)
    same = 0
    inter: dict[tuple[int, int], int] = {}
    for ci in range(len(d.crossings)):
        u, o = d.under_component[ci], d.over_component[ci]
        if u == o:
            same += d.base_signs[ci]
        else:
            key = (min(u, o), max(u, o))
            inter[key] = inter.get(key, 0) + d.base_signs[ci]
    values = set()
    for eps_mask in range(1 << max(k - 1, 0)):
        eps = [1] + [1 if (eps_mask >> i) & 1 else -1 for i in range(k - 1)]
        w = same + sum(v * eps[a] * eps[b] for (a, b), v in inter.items())
        values.add(w)
    return values or {0}


def linking_of_diagram(d: PlanarDiagram) -> tuple[int, ...]:
    """Sorted multiset of |lk| over all unordered component pairs."""
    comps = d.components
    acc: dict[tuple[int, int], int] = {}
    for ci in range(len(d.crossings)):
        u, o = d.under_component[ci], d.over_component[ci]
        if u != o:
            key = (min(u, o), max(u, o))
            acc[key] = acc.get(key, 0) + d.base_signs[ci]
    values = []
    for a in range(comps):
        for b in range(a + 1, comps):
            total = acc.get((a, b), 0)
            if total % 2 != 0:
                raise AssertionError("inter-component crossing signs must sum evenly")
            values.append(abs(total) // 2)
    return tuple(sorted(values))


def linking_matrix(w: BasketWord) -> tuple[int, ...]:
    return linking_of_diagram(to_planar_diagram(w))


# ---------------------------------------------------------------------------
# Jones polynomial


def _bracket_to_jones(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    # V = (-A)^(-3w) * <D>, then A = q^(-1/2); exponent parities always match
    sign = -1 if writhe % 2 else 1
    coeffs: dict[int, int] = {}
    for e, c in bracket.terms:
        a_exp = e - 3 * writhe
        if a_exp % 2 != 0:
            raise AssertionError("bracket exponent parity violated")
        q_exp = -a_exp // 2
        coeffs[q_exp] = coeffs.get(q_exp, 0) + sign * c
    return LaurentPolynomial.from_coeffs("q", coeffs)


def jones_of_diagram(d: PlanarDiagram) -> LaurentPolynomial:
    bracket = kauffman_bracket(d)
    candidates = []
    for w in _writhe_values(d):
        v = _bracket_to_jones(bracket, w)
        candidates.append(v)
        candidates.append(v.mirror())
    return poly_min(candidates)


def jones(w: BasketWord) -> LaurentPolynomial:
    """Canonical Jones polynomial in q (q^2 = t), normalized over orientations
    and mirror image."""
    return jones_of_diagram(to_planar_diagram(w))


# ---------------------------------------------------------------------------
# Seifert matrix and Alexander polynomial


@dataclass(frozen=True)
class SeifertMatrix:
    n: int
    rows: tuple[tuple[int, ...], ...]


def core_linking_oracle(w: BasketWord, i: int, j: int) -> int:
    """lk of the pushed-off core of band i with the core of band j.

    Built from an explicit planar diagram of the two cores: each core runs
    through its band above the baseline and chords across the disc below it.
    The pushed-off copy sits just in front of the disc, so its chord is the
    over-strand wherever the chords cross; above the baseline the shallower
    band is the over-strand as usual.
    """
    chords = to_chords(w)
    if i == j:
        raise ValueError("core_linking_oracle needs distinct bands")
    if not interleaved(chords, i, j):
        return 0
    pi, _ = chords.feet[i - 1]
    pj, _ = chords.feet[j - 1]
    # arcs: 0 = i1 (band-exit to chord-entry), 1 = i2 (chord-exit to band-entry),
    #       2 = j1, 3 = j2
    i1, i2, j1, j2 = 0, 1, 2, 3
    alpha_is_i = pi < pj

    if alpha_is_i:
        upper = (i2, j2, i1, j1)  # ccw: (alpha-, beta-, alpha+, beta+)
        lower = (i2, j1, i1, j2)  # ccw below the line: (alpha-, beta+, alpha+, beta-)
    else:
        upper = (j2, i2, j1, i1)
        lower = (j2, i1, j1, i2)

    def rotate_to_under(ends: tuple[int, int, int, int], under_arcs: set[int]):
        if ends[0] in under_arcs:
            return ends
        return (ends[1], ends[2], ends[3], ends[0])

    upper_over, upper_under = (i, j) if i < j else (j, i)
    under_arcs_upper = {i1, i2} if upper_under == i else {j1, j2}
    upper_ends = rotate_to_under(upper, under_arcs_upper)
    lower_ends = rotate_to_under(lower, {j1, j2})  # pushed core i is over below

    d = diagram_from_crossings(
        2,
        [(upper_over, upper_under, upper_ends), (i, j, lower_ends)],
        free_loops=0,
    )
    if d.components != 2:
        raise AssertionError("core diagram must have two components")

    # orient both cores band-first: entering the upper crossing via the
    # "minus" arc (i2 resp. j2) means the walker already runs that way
    eps_of_component = [0, 0]
    for curve_index, passages in enumerate(d.curves):
        arcs = {d.crossings[c].ends[s] for c, s in passages}
        arcs |= {d.crossings[c].ends[(s + 2) % 4] for c, s in passages}
        minus_arc = i2 if (i1 in arcs or i2 in arcs) else j2
        upper_entry = next(s for c, s in passages if c == 0)
        entered_arc = d.crossings[0].ends[upper_entry]
        eps_of_component[curve_index] = 1 if entered_arc == minus_arc else -1

    total = 0
    for ci in range(2):
        u, o = d.under_component[ci], d.over_component[ci]
        total += d.base_signs[ci] * eps_of_component[u] * eps_of_component[o]
    if total % 2 != 0:
        raise AssertionError("core crossings must pair up")
    return total // 2


def seifert_matrix(w: BasketWord, validate: bool = False) -> SeifertMatrix:
    """V with V[i][j] = lk(core_i pushed off, core_j), read off combinatorially.

    Flat bands have zero framing, so the diagonal vanishes; an interleaved
    pair contributes a single +-1 in the row of the deeper band, positive
    exactly when the shallower band's first foot comes first.  With
    validate=True every entry is recomputed through core_linking_oracle.
    """
    n = w.n
    chords = to_chords(w)
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j or not interleaved(chords, i, j):
                continue
            if i > j:
                pi, _ = chords.feet[i - 1]
                pj, _ = chords.feet[j - 1]
                rows[i - 1][j - 1] = 1 if pj < pi else -1
    if validate:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                oracle = core_linking_oracle(w, i, j)
                if oracle != rows[i - 1][j - 1]:
                    raise AssertionError(
                        f"Seifert rule disagrees with the core-linking oracle at "
                        f"({i},{j}): rule {rows[i - 1][j - 1]}, oracle {oracle}"
                    )
    return SeifertMatrix(n=n, rows=tuple(tuple(r) for r in rows))


def _det(entries: list[list[dict[int, int]]]) -> dict[int, int]:
    n = len(entries)
    if n == 0:
        return {0: 1}
    memo: dict[int, dict[int, int]] = {}

    def rec(mask: int) -> dict[int, int]:
        if mask == 0:
            return {0: 1}
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = n - bin(mask).count("1")
        total: dict[int, int] = {}
        sign = 1
        for col in range(n):
            if not (mask >> col) & 1:
                continue
            entry = entries[row][col]
            if entry:
                sub = rec(mask & ~(1 << col))
                for e1, c1 in entry.items():
                    for e2, c2 in sub.items():
                        e = e1 + e2
                        v = total.get(e, 0) + sign * c1 * c2
                        if v:
                            total[e] = v
                        else:
                            del total[e]
            sign = -sign
        memo[mask] = total
        return total

    return rec((1 << n) - 1)


def _canonical_alexander(coeffs: dict[int, int]) -> LaurentPolynomial:
    """Normalize up to units +-t^k and t <-> 1/t.

    Shift so that the minimum exponent is 0, then take the lexicographically
    least leading-coefficient-positive candidate among the polynomial, its
    negation, and their exponent reversals.
    """
    if not coeffs:
        return LaurentPolynomial.zero("t")
    lo = min(coeffs)
    hi = max(coeffs)
    shifted = {e - lo: c for e, c in coeffs.items()}
    reverse = {(hi - lo) - e: c for e, c in shifted.items()}
    deg = hi - lo
    candidates = []
    for base in (shifted, reverse):
        for s in (1, -1):
            cand = {e: s * c for e, c in base.items()}
            if cand[deg] > 0:
                candidates.append(LaurentPolynomial.from_coeffs("t", cand))
    return poly_min(candidates)


def alexander(w: BasketWord) -> LaurentPolynomial:
    """det(V - t V^T) canonicalized; 0 for split basket boundaries."""
    v = seifert_matrix(w)
    n = v.n
    entries: list[list[dict[int, int]]] = []
    for a in range(n):
        row = []
        for b in range(n):
            coeffs: dict[int, int] = {}
            if v.rows[a][b]:
                coeffs[0] = v.rows[a][b]
            if v.rows[b][a]:
                coeffs[1] = coeffs.get(1, 0) - v.rows[b][a]
            row.append(coeffs)
        entries.append(row)
    return _canonical_alexander(_det(entries))


# ---------------------------------------------------------------------------
# fingerprint


@dataclass(frozen=True)
class LinkFingerprint:
    components: int
    jones: LaurentPolynomial
    alexander: LaurentPolynomial
    linking: tuple[int, ...]

    def as_json(self) -> str:
        return json.dumps(
            {
                "components": self.components,
                "jones": self.jones.text(),
                "alexander": self.alexander.text(),
                "linking": list(self.linking),
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, line: str) -> LinkFingerprint:
        data = json.loads(line)
        return cls(
            components=data["components"],
            jones=LaurentPolynomial.parse(data["jones"], "q"),
            alexander=LaurentPolynomial.parse(data["alexander"], "t"),
            linking=tuple(data["linking"]),
        )


_FINGERPRINT_CACHE: dict[tuple[int, ...], LinkFingerprint] = {}


def fingerprint(w: BasketWord) -> LinkFingerprint:
    """The classification key (components, Jones, Alexander, linking numbers)."""
    cached = _FINGERPRINT_CACHE.get(w.letters)
    if cached is not None:
        return cached
    d = to_planar_diagram(w)
    fp = LinkFingerprint(
        components=d.components,
        jones=jones_of_diagram(d),
        alexander=alexander(w),
        linking=linking_of_diagram(d),
    )
    _FINGERPRINT_CACHE[w.letters] = fp
    return fp
