"""Braid words over the Artin generators of Br_{n+1} and their images in S_{n+1}.

A letter is a nonzero signed integer: ``g`` stands for s_g and ``-g`` for its
inverse. Every word carries its strand count so that words from different
braid groups are never silently mixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., size} stored by its image sequence.

    For the image of a braid, ``images[k-1]`` is the strand that ends at
    position ``k``; composition follows the braid product, so the image of
    ``u * v`` is ``project(u) * project(v)`` with ``(p * q)(k) = p(q(k))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def transposition(cls, size: int, a: int, b: int) -> Permutation:
        images = list(range(1, size + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.size != other.size:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))


@dataclass(frozen=True)
class BraidWord:
    """A word in s_1, ..., s_{strands-1} and their inverses."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for g in letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"letter {g} out of range for {self.strands} strands")

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        """Parse the whitespace-separated signed-integer format, e.g. ``"1 2 -1"``."""
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise ValueError(f"malformed braid word {text!r}") from exc
        return cls(strands, letters)

    @classmethod
    def from_letters(cls, strands: int, letters: Iterable[int]) -> BraidWord:
        return cls(strands, tuple(letters))

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise ValueError(
                f"cannot multiply braids on {self.strands} and {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))


def concat(words: Sequence[BraidWord], strands: int) -> BraidWord:
    """Product of ``words`` in order; the empty product is the identity on ``strands``."""
    letters: list[int] = []
    for w in words:
        if w.strands != strands:
            raise ValueError(f"word on {w.strands} strands in a product on {strands}")
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for g in w.letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.strands, tuple(stack))


def reverse_word(w: BraidWord) -> BraidWord:
    """The antiautomorphism reading a word backwards; exponents are kept."""
    return BraidWord(w.strands, w.letters[::-1])


def project_to_permutation(w: BraidWord) -> Permutation:
    arrangement = list(range(1, w.strands + 1))
    for g in w.letters:
        g = abs(g)
        arrangement[g - 1], arrangement[g] = arrangement[g], arrangement[g - 1]
    return Permutation(tuple(arrangement))


def is_pure(w: BraidWord) -> bool:
    return project_to_permutation(w).is_identity()
