"""Braid words, pure braid generators and seeded samplers.

Convention: the Artin generator ``s_i`` carries the strand at position ``i``
over the strand at position ``i + 1`` (a right-handed crossing when both
strands run upward).  Words are read bottom to top and are never reduced
implicitly; :func:`free_reduce` is available when cancellation is wanted.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable

from .diagram import Cross, SliceWord
from .errors import WidthMismatch


@dataclass(frozen=True)
class BraidLetter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"generator index must be positive, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.index, -self.sign)

    def __str__(self):
        return f"s{self.index}" + ("" if self.sign > 0 else "'")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.index > self.strands - 1:
                raise IndexError(
                    f"generator s{letter.index} does not exist on {self.strands} strands")

    @classmethod
    def from_ints(cls, strands: int, word: Iterable[int]) -> BraidWord:
        """Build from signed integers: ``2`` is s2, ``-2`` is s2 inverse."""
        return cls(strands, tuple(BraidLetter(abs(k), 1 if k > 0 else -1) for k in word))

    def to_ints(self) -> list[int]:
        return [letter.index * letter.sign for letter in self.letters]

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose_braids(self, other)

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters) or "1"


@dataclass(frozen=True)
class Permutation:
    """``images[p - 1]`` is where the strand starting at position ``p`` ends."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def __matmul__(self, other: Permutation) -> Permutation:
        """Composition ``self ∘ other`` (apply ``other`` first)."""
        return Permutation(tuple(self(other(p)) for p in range(1, len(self.images) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for p, image in enumerate(self.images, start=1):
            inv[image - 1] = p
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self.images) + 1))


def permutation(w: BraidWord) -> Permutation:
    # slot[p] is the starting position of the strand currently at position p
    slot = list(range(1, w.strands + 1))
    for letter in w.letters:
        i = letter.index - 1
        slot[i], slot[i + 1] = slot[i + 1], slot[i]
    images = [0] * w.strands
    for end, start in enumerate(slot, start=1):
        images[start - 1] = end
    return Permutation(tuple(images))


def is_pure(w: BraidWord) -> bool:
    return permutation(w).is_identity()


def compose_braids(a: BraidWord, b: BraidWord) -> BraidWord:
    """Stack ``b`` on top of ``a``."""
    if a.strands != b.strands:
        raise WidthMismatch(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def invert_braid(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(letter.inverse() for letter in reversed(a.letters)))


def braid_commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    return compose_braids(compose_braids(a, b), compose_braids(invert_braid(a), invert_braid(b)))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[BraidLetter] = []
    for letter in w.letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(w.strands, tuple(stack))


def pure_generator(i: int, j: int, n: int) -> BraidWord:
    """The standard generator A_ij = (s_{j-1}...s_{i+1}) s_i^2 (s_{j-1}...s_{i+1})^-1."""
    if not 1 <= i < j <= n:
        raise IndexError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    prefix = BraidWord(n, tuple(BraidLetter(k) for k in range(j - 1, i, -1)))
    twist = BraidWord(n, (BraidLetter(i), BraidLetter(i)))
    return compose_braids(compose_braids(prefix, twist), invert_braid(prefix))


def pure_generator_power(i: int, j: int, n: int, power: int) -> BraidWord:
    g = pure_generator(i, j, n)
    if power < 0:
        g = invert_braid(g)
    return BraidWord(n, g.letters * abs(power))


def random_pure_braid(n: int, length: int, seed: int, commutator_only: bool = False) -> BraidWord:
    """Product of ``length`` random factors A_ij^(+-1), or commutators of them.

    Pairs and signs are drawn uniformly.  Commutator factors guarantee that
    every pairwise linking number of the result is zero.
    """
    if n < 2:
        raise ValueError("pure braid sampling needs at least two strands")
    if length < 0:
        raise ValueError("length must be non-negative")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(1, n + 1), 2))

    def factor() -> BraidWord:
        i, j = rng.choice(pairs)
        return pure_generator_power(i, j, n, rng.choice((1, -1)))

    word = BraidWord(n)
    for _ in range(length):
        if commutator_only:
            word = compose_braids(word, braid_commutator(factor(), factor()))
        else:
            word = compose_braids(word, factor())
    return word


def random_braid(n: int, length: int, seed: int) -> BraidWord:
    """Uniform random letters; not necessarily pure."""
    rng = random.Random(seed)
    return BraidWord(n, tuple(BraidLetter(rng.randrange(1, n), rng.choice((1, -1)))
                              for _ in range(length)))


def sorting_braid(perm: Permutation) -> BraidWord:
    """A positive braid word that, appended to a braid with permutation
    ``perm``, returns every strand to its starting position."""
    n = len(perm.images)
    # order[p] = starting position of the strand at position p
    order = list(perm.inverse().images)
    letters = []
    for _ in range(n):
        for p in range(n - 1):
            if order[p] > order[p + 1]:
                order[p], order[p + 1] = order[p + 1], order[p]
                letters.append(BraidLetter(p + 1))
    return BraidWord(n, tuple(letters))


def to_slice_word(w: BraidWord) -> SliceWord:
    return SliceWord(w.strands, tuple(Cross(letter.index, letter.sign) for letter in w.letters))

