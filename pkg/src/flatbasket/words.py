"""Flat plumbing basket words and the moves between them.

A basket surface with n flat annuli is recorded as a word of 2n letters over
{1..n}: walking once around the boundary of the disc page, each letter names
the band whose foot sits at that position.  Every band has exactly two feet,
and the letter value doubles as the page depth of the band (1 = the page
nearest the viewer).  The empty word (n = 0) is the bare disc.

Words that split with every letter appearing once in each half factor into a
pair of permutations (sigma : mu).  sigma records how the second-half foot
positions connect back to the first half (the connection permutation), mu the
top-to-bottom page order of the bands (the order permutation).

Moves implemented here:

- rotate: cyclic shift of the starting point.  Letters are page depths, so
  they are not renumbered.
- reduction: a cyclic subword (i, j, i) with i != j lets both bands i and j be
  removed; the survivors are compressed onto {1..n-2} preserving page order.
- handle slide: a foot immediately left of a foot of another band may move to
  immediately right of that band's other foot (travelling along the band's
  outer edge), and a foot immediately right may move to immediately left of
  the other foot (inner edge).
- page relabeling: a dihedral permutation of the page depths.  Unlike the
  three moves above, link invariance of this operation is only verified
  empirically by the test suite, never assumed by the library.

Positions are 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


class InvalidWord(ValueError):
    """Raised when a letter sequence is not a valid basket word."""


class InvalidMove(ValueError):
    """Raised when a move does not apply to the given word."""


class NotFactorable(ValueError):
    """Raised when a word does not split into a permutations presentation."""


@dataclass(frozen=True)
class BasketWord:
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if len(letters) % 2 != 0:
            raise InvalidWord(f"odd length {len(letters)}")
        n = len(letters) // 2
        counts = [0] * (n + 1)
        for pos, v in enumerate(letters):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise InvalidWord(f"letter {v!r} at position {pos} outside 1..{n}")
            counts[v] += 1
        for v in range(1, n + 1):
            if counts[v] != 2:
                raise InvalidWord(f"letter {v} occurs {counts[v]} times, expected 2")

    @property
    def n(self) -> int:
        return len(self.letters) // 2

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def text(self) -> str:
        return ",".join(str(v) for v in self.letters)

    @classmethod
    def parse(cls, text: str) -> BasketWord:
        text = text.strip()
        if not text:
            return cls(())
        try:
            letters = tuple(int(p) for p in text.split(","))
        except ValueError as exc:
            raise InvalidWord(f"cannot parse word {text!r}: {exc}") from None
        return cls(letters)


def validate(letters: Sequence[int]) -> BasketWord:
    """Check the word invariants and wrap the letters; raises InvalidWord."""
    return BasketWord(tuple(letters))


@dataclass(frozen=True)
class PermutationsPresentation:
    sigma: tuple[int, ...]  # one-line images, sigma[k-1] = sigma(k)
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "mu", tuple(self.mu))
        if len(self.sigma) != len(self.mu):
            raise InvalidWord("sigma and mu act on different sets")
        n = len(self.sigma)
        for name, perm in (("sigma", self.sigma), ("mu", self.mu)):
            if sorted(perm) != list(range(1, n + 1)):
                raise InvalidWord(f"{name}={perm} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.sigma)

    def text(self) -> str:
        def fmt(perm: tuple[int, ...]) -> str:
            if perm and max(perm) > 9:
                return ",".join(str(v) for v in perm)
            return "".join(str(v) for v in perm)

        return f"{fmt(self.sigma)}:{fmt(self.mu)}"

    @classmethod
    def parse(cls, text: str) -> PermutationsPresentation:
        parts = text.strip().split(":")
        if len(parts) != 2:
            raise InvalidWord(f"expected 'sigma:mu', got {text!r}")

        def parse_perm(s: str) -> tuple[int, ...]:
            s = s.strip()
            if not s:
                return ()
            if "," in s:
                return tuple(int(p) for p in s.split(","))
            return tuple(int(ch) for ch in s)

        return cls(parse_perm(parts[0]), parse_perm(parts[1]))


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class Rotation:
    k: int


@dataclass(frozen=True)
class Reduction:
    position: int  # index of the first letter of the cyclic (i, j, i) pattern
    i: int
    j: int


@dataclass(frozen=True)
class HandleSlide:
    foot: int  # index of the slid foot
    along: int  # band slid over
    via: str  # "outer" or "inner"


@dataclass(frozen=True)
class PageRotation:
    # empirically link-preserving in all tested cases; not assumed by the library
    k: int


@dataclass(frozen=True)
class PageReflection:
    # same empirical status as PageRotation
    pass


Move = Union[Rotation, Reduction, HandleSlide, PageRotation, PageReflection]


def from_permutations(p: PermutationsPresentation) -> BasketWord:
    """Word with first half (1..n) and second half placing letter k at position sigma(k),
    every letter then relabeled through mu."""
    n = p.n
    second = [0] * n
    for k in range(1, n + 1):
        second[p.sigma[k - 1] - 1] = k
    base = list(range(1, n + 1)) + second
    return BasketWord(tuple(p.mu[v - 1] for v in base))


def to_permutations(w: BasketWord) -> PermutationsPresentation:
    """Inverse of from_permutations; raises NotFactorable when a letter repeats in a half."""
    n = w.n
    first, second = w.letters[:n], w.letters[n:]
    for half, name in ((first, "first"), (second, "second")):
        seen = set()
        for v in half:
            if v in seen:
                raise NotFactorable(f"letter {v} occurs twice in the {name} half")
            seen.add(v)
    mu = first
    mu_inv = [0] * (n + 1)
    for k, v in enumerate(mu, start=1):
        mu_inv[v] = k
    base_second = [mu_inv[v] for v in second]
    sigma = [0] * n
    for pos, k in enumerate(base_second, start=1):
        sigma[k - 1] = pos
    return PermutationsPresentation(tuple(sigma), tuple(mu))


def splits(w: BasketWord) -> bool:
    try:
        to_permutations(w)
        return True
    except NotFactorable:
        return False


def rotate(w: BasketWord, k: int) -> BasketWord:
    """Cyclic left shift by k; page depths are absolute so letters are unchanged."""
    if len(w) == 0:
        return w
    k %= len(w)
    return BasketWord(w.letters[k:] + w.letters[:k])


def find_reductions(w: BasketWord) -> list[Reduction]:
    """All cyclic (i, j, i) patterns, one move per unordered band pair {i, j}.

    Overlapping patterns such as (i, j, i, j) describe the same removal of
    bands i and j, so only the earliest starting position is kept.
    """
    m = len(w)
    if m < 3:
        # (1,1) has no third letter distinct from the band itself
        return []
    letters = w.letters
    by_pair: dict[frozenset[int], Reduction] = {}
    for p in range(m):
        a, b, c = letters[p], letters[(p + 1) % m], letters[(p + 2) % m]
        if a == c and a != b:
            key = frozenset((a, b))
            if key not in by_pair:
                by_pair[key] = Reduction(position=p, i=a, j=b)
    return sorted(by_pair.values(), key=lambda r: r.position)


def apply_reduction(w: BasketWord, move: Reduction) -> BasketWord:
    """Delete all four feet of bands i and j, then compress the survivors onto
    {1..n-2} preserving page order."""
    m = len(w)
    p = move.position
    if m < 3 or not (0 <= p < m):
        raise InvalidMove(f"position {p} out of range")
    a, b, c = w.letters[p], w.letters[(p + 1) % m], w.letters[(p + 2) % m]
    if not (a == move.i and c == move.i and b == move.j and a != b):
        raise InvalidMove(f"letters at {p} are ({a},{b},{c}), not ({move.i},{move.j},{move.i})")
    survivors = [v for v in w.letters if v not in (move.i, move.j)]
    remaining = sorted(set(survivors))
    relabel = {old: new for new, old in enumerate(remaining, start=1)}
    return BasketWord(tuple(relabel[v] for v in survivors))


def find_slides(w: BasketWord) -> list[HandleSlide]:
    """Every foot cyclically adjacent to a foot of another band can slide.

    A foot immediately left of a foot of band x moves to immediately right of
    x's other foot (along x's outer edge when the neighbour is x's first foot,
    inner edge otherwise); a foot immediately right moves to immediately left,
    with the edges swapping roles.
    """
    m = len(w)
    if m < 4:
        return []
    letters = w.letters
    feet: dict[int, list[int]] = {}
    for pos, v in enumerate(letters):
        feet.setdefault(v, []).append(pos)
    moves = []
    seen = set()
    for f in range(m):
        y = letters[f]
        for side in (+1, -1):  # +1: neighbour to the right of f, so f is left of it
            g = (f + side) % m
            x = letters[g]
            if x == y:
                continue
            p, q = feet[x]
            if side == +1:
                # f immediately left of g
                via = "outer" if g == p else "inner"
            else:
                # f immediately right of g
                via = "inner" if g == p else "outer"
            move = HandleSlide(foot=f, along=x, via=via)
            # a foot wedged between both feet of x yields the same move twice
            if move not in seen:
                seen.add(move)
                moves.append(move)
    return moves


def apply_slide(w: BasketWord, move: HandleSlide) -> BasketWord:
    m = len(w)
    f = move.foot
    if not (0 <= f < m):
        raise InvalidMove(f"foot index {f} out of range")
    letters = list(w.letters)
    x = move.along
    if letters[f] == x:
        raise InvalidMove("cannot slide a band along itself")
    positions = [pos for pos, v in enumerate(letters) if v == x]
    if len(positions) != 2:
        raise InvalidMove(f"band {x} not present")
    p, q = positions

    candidates = []  # (anchor g, destination side at other foot h: "left"|"right")
    right_neighbour = (f + 1) % m
    left_neighbour = (f - 1) % m
    if letters[right_neighbour] == x:
        g = right_neighbour
        via = "outer" if g == p else "inner"
        if via == move.via:
            candidates.append((g, "right"))
    if letters[left_neighbour] == x:
        g = left_neighbour
        via = "inner" if g == p else "outer"
        if via == move.via:
            candidates.append((g, "left"))
    if not candidates:
        raise InvalidMove(
            f"foot {f} is not adjacent to band {x} on the {move.via}-edge side"
        )
    # both candidates (possible only when the foot sits between x's feet)
    # produce the identical word, so the first is fine
    g, dest = candidates[0]
    h = q if g == p else p

    slid = letters[f]
    del letters[f]
    if h > f:
        h -= 1
    if dest == "right":
        letters.insert(h + 1, slid)
    else:
        letters.insert(h, slid)
    return BasketWord(tuple(letters))


def relabel_pages(w: BasketWord, rotation: int = 0, reflect: bool = False) -> BasketWord:
    """Apply the dihedral page-depth relabeling v -> rot_k(refl(v)).

    Reflection is v -> n+1-v, rotation v -> ((v + k - 1) mod n) + 1; the
    reflection, when requested, is applied first.
    """
    n = w.n
    if n == 0:
        return w

    def g(v: int) -> int:
        if reflect:
            v = n + 1 - v
        return (v + rotation - 1) % n + 1

    return BasketWord(tuple(g(v) for v in w.letters))


def apply_move(w: BasketWord, move: Move) -> BasketWord:
    if isinstance(move, Rotation):
        return rotate(w, move.k)
    if isinstance(move, Reduction):
        return apply_reduction(w, move)
    if isinstance(move, HandleSlide):
        return apply_slide(w, move)
    if isinstance(move, PageRotation):
        return relabel_pages(w, rotation=move.k)
    if isinstance(move, PageReflection):
        return relabel_pages(w, reflect=True)
    raise InvalidMove(f"unknown move {move!r}")


def rotations(w: BasketWord) -> Iterator[BasketWord]:
    for k in range(max(1, len(w))):
        yield rotate(w, k)


def canonical_form(w: BasketWord) -> BasketWord:
    """Lexicographically least word over all cyclic rotations.

    Rotation is the only symmetry used for deduplication; page relabelings are
    excluded because their link invariance is empirical, not structural.
    """
    if len(w) == 0:
        return w
    best = min(w.letters[k:] + w.letters[:k] for k in range(len(w)))
    return BasketWord(best)


def dihedral_elements(n: int) -> Iterator[tuple[int, bool]]:
    """All (rotation, reflect) pairs of the page-relabeling group."""
    if n == 0:
        yield (0, False)
        return
    for reflect in (False, True):
        for k in range(n):
            yield (k, reflect)


def multiset_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All distinct arrangements of the multiset {1,1,2,2,...,n,n}."""
    if n == 0:
        yield ()
        return
    counts = [2] * (n + 1)
    word: list[int] = []
    total = 2 * n

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == total:
            yield tuple(word)
            return
        for v in range(1, n + 1):
            if counts[v]:
                counts[v] -= 1
                word.append(v)
                yield from rec()
                word.pop()
                counts[v] += 1

    yield from rec()


def permutations_of(n: int) -> Iterator[tuple[int, ...]]:
    yield from itertools.permutations(range(1, n + 1))
