"""The dihedral Artin group B(I_n) = <s1, s2 | (s1 s2 ...)_n = (s2 s1 ...)_n>, its
pure subgroup (the kernel onto the dihedral group of order 2n), and the rank
comparison between that subgroup's abelianization and the image of the three
wall monodromies s1^2, s2^2, Delta^2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .smith import IntegerMatrix, smith_normal_form


@dataclass(frozen=True)
class DihedralWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 2:
            raise ValueError("the edge label must be at least 2")
        if any(g not in (1, 2, -1, -2) for g in self.letters):
            raise ValueError("dihedral words use the generators 1 and 2 only")

    def __mul__(self, other: DihedralWord) -> DihedralWord:
        if self.n != other.n:
            raise ValueError("dihedral words with different labels")
        return DihedralWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> DihedralWord:
        if k < 0:
            return self.inverse() ** (-k)
        return DihedralWord(self.n, self.letters * k)

    def inverse(self) -> DihedralWord:
        return DihedralWord(self.n, tuple(-g for g in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters)


def alternating(n: int, first: int, length: int) -> DihedralWord:
    other = 3 - first
    return DihedralWord(n, tuple(first if t % 2 == 0 else other for t in range(length)))


def braid_relator(n: int) -> DihedralWord:
    """(s1 s2 ...)_n (s2 s1 ...)_n^{-1}."""
    return alternating(n, 1, n) * alternating(n, 2, n).inverse()


def delta(n: int) -> DihedralWord:
    return alternating(n, 1, n)


@dataclass(frozen=True, order=True)
class DihedralElement:
    """r^rotation f^flip in D_{2n}, with f r f = r^{-1}."""

    n: int
    rotation: int
    flip: bool

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % self.n)

    @classmethod
    def identity(cls, n: int) -> DihedralElement:
        return cls(n, 0, False)

    @classmethod
    def reflection(cls, n: int, g: int) -> DihedralElement:
        # s1 -> f, s2 -> r f, so s1 s2 = r^{-1} has order n
        return cls(n, 0 if g == 1 else 1, True)

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        sign = -1 if self.flip else 1
        return DihedralElement(self.n, self.rotation + sign * other.rotation,
                               self.flip != other.flip)

    def is_identity(self) -> bool:
        return self.rotation == 0 and not self.flip


def dihedral_project(w: DihedralWord) -> DihedralElement:
    x = DihedralElement.identity(w.n)
    for g in w.letters:
        x = x * DihedralElement.reflection(w.n, abs(g))
    return x


# --- Reidemeister-Schreier -------------------------------------------------

Letter = tuple[int, int]  # (Schreier generator index, exponent)


@dataclass
class SubgroupPresentation:
    n: int
    transversal: list[DihedralWord]
    generators: list[tuple[int, int]]          # (coset, group generator) per Schreier generator
    generator_words: list[DihedralWord]
    relators: list[list[Letter]]
    _coset_of: dict = field(repr=False, default_factory=dict)
    _action: dict = field(repr=False, default_factory=dict)
    _gen_index: dict = field(repr=False, default_factory=dict)

    @property
    def index(self) -> int:
        return len(self.transversal)

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def rewrite(self, w: DihedralWord, start: int = 0) -> tuple[list[Letter], int]:
        """Rewrite ``w`` read from coset ``start`` as a word in Schreier generators."""
        if w.n != self.n:
            raise ValueError("word for a different dihedral group")
        coset = start
        out: list[Letter] = []
        for g in w.letters:
            x = abs(g)
            if g > 0:
                idx = self._gen_index.get((coset, x))
                if idx is not None:
                    out.append((idx, 1))
                coset = self._action[(coset, x)]
            else:
                # s_x projects to an involution, so the predecessor coset is coset * s_x
                prev = self._action[(coset, x)]
                idx = self._gen_index.get((prev, x))
                if idx is not None:
                    out.append((idx, -1))
                coset = prev
        return out, coset

    def exponent_vector(self, word: list[Letter]) -> list[int]:
        vec = [0] * self.generator_count
        for idx, e in word:
            vec[idx] += e
        return vec

    def relation_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows([self.exponent_vector(r) for r in self.relators],
                                       self.generator_count)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "index": self.index,
            "transversal": [str(t) for t in self.transversal],
            "generator_count": self.generator_count,
            "generators": [{"coset": c, "letter": x, "word": str(w)}
                           for (c, x), w in zip(self.generators, self.generator_words)],
            "relators": [[[idx, e] for idx, e in r] for r in self.relators],
        }


def reidemeister_schreier(n: int) -> SubgroupPresentation:
    if n < 2:
        raise ValueError("the edge label must be at least 2")
    # breadth-first search with s1 before s2 yields the shortlex transversal
    start = DihedralElement.identity(n)
    coset_of = {start: 0}
    reps = [DihedralWord(n)]
    elements = [start]
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for x in (1, 2):
            y = elements[c] * DihedralElement.reflection(n, x)
            if y not in coset_of:
                coset_of[y] = len(elements)
                elements.append(y)
                reps.append(reps[c] * DihedralWord(n, (x,)))
                queue.append(coset_of[y])
    action = {(c, x): coset_of[elements[c] * DihedralElement.reflection(n, x)]
              for c in range(len(elements)) for x in (1, 2)}

    generators, words, gen_index = [], [], {}
    for c in range(len(elements)):
        for x in (1, 2):
            d = action[(c, x)]
            if reps[c].letters + (x,) == reps[d].letters:
                continue  # tree edge, trivial generator
            gen_index[(c, x)] = len(generators)
            generators.append((c, x))
            words.append(reps[c] * DihedralWord(n, (x,)) * reps[d].inverse())

    pres = SubgroupPresentation(n, reps, generators, words, [], coset_of, action, gen_index)
    rel = braid_relator(n)
    for c in range(len(elements)):
        word, end = pres.rewrite(rel, c)
        if end != c:
            raise AssertionError("the braid relator does not lie in the pure subgroup")
        pres.relators.append(word)
    return pres


class Abelianization(NamedTuple):
    rank: int
    torsion: list[int]
    diagonal: list[int]


def abelianization_rank(p: SubgroupPresentation) -> Abelianization:
    snf = smith_normal_form(p.relation_matrix())
    diag = snf.D.diagonal()
    nonzero = [d for d in diag if d != 0]
    return Abelianization(p.generator_count - len(nonzero), [d for d in nonzero if d > 1], diag)


def wall_monodromies(n: int) -> list[DihedralWord]:
    """s1^2, s2^2 and Delta^2 with Delta the positive alternating word of length n."""
    return [DihedralWord(n, (1, 1)), DihedralWord(n, (2, 2)), delta(n) ** 2]


class KRank(NamedTuple):
    rank: int
    proper: bool
    pure_rank: int


def k_subgroup_rank(n: int) -> KRank:
    """Rank of the image of the wall monodromies in the abelianized pure subgroup."""
    pres = reidemeister_schreier(n)
    snf = smith_normal_form(pres.relation_matrix())
    r = len(snf.invariants)
    free = range(r, pres.generator_count)
    images = []
    for w in wall_monodromies(n):
        word, end = pres.rewrite(w)
        if end != 0:
            raise AssertionError(f"{w} is not a pure braid")
        coords = (IntegerMatrix.from_rows([pres.exponent_vector(word)], pres.generator_count)
                  @ snf.V).entries[0]
        images.append([coords[t] for t in free])
    rank = len(smith_normal_form(IntegerMatrix.from_rows(images, len(free))).invariants)
    pure_rank = pres.generator_count - r
    return KRank(rank, rank < pure_rank, pure_rank)
