"""Abelianization of pure braids: the pairwise linking numbers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .braid import BraidWord, is_pure


@dataclass(frozen=True)
class LinkingVector:
    strands: int
    entries: tuple[int, ...]  # indexed by pairs (p, q), p < q, in lexicographic order

    def __post_init__(self):
        if len(self.entries) != self.strands * (self.strands - 1) // 2:
            raise ValueError("linking vector has the wrong dimension")

    @classmethod
    def zero(cls, strands: int) -> LinkingVector:
        return cls(strands, (0,) * (strands * (strands - 1) // 2))

    @classmethod
    def unit(cls, strands: int, p: int, q: int) -> LinkingVector:
        p, q = min(p, q), max(p, q)
        return cls(strands, tuple(int(pair == (p, q)) for pair in pairs(strands)))

    def __add__(self, other: LinkingVector) -> LinkingVector:
        if self.strands != other.strands:
            raise ValueError("linking vectors of different braid groups")
        return LinkingVector(self.strands, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> LinkingVector:
        return LinkingVector(self.strands, tuple(-a for a in self.entries))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = min(pq), max(pq)
        return self.entries[pair_index(self.strands, p, q)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def as_dict(self) -> dict[str, int]:
        return {f"{p},{q}": v for (p, q), v in zip(pairs(self.strands), self.entries)}


def pairs(strands: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, strands + 1), 2))


def pair_index(strands: int, p: int, q: int) -> int:
    # pairs starting at r < p number strands - r each
    return (p - 1) * strands - p * (p - 1) // 2 + (q - p - 1)


def linking(w: BraidWord) -> LinkingVector:
    """Half the signed number of crossings between each pair of strands."""
    if not is_pure(w):
        raise ValueError("linking numbers are defined for pure braids only")
    m = w.strands
    doubled = [0] * (m * (m - 1) // 2)
    at = list(range(1, m + 1))  # strand at each position
    for g in w.letters:
        k = abs(g)
        p, q = at[k - 1], at[k]
        doubled[pair_index(m, min(p, q), max(p, q))] += 1 if g > 0 else -1
        at[k - 1], at[k] = q, p
    return LinkingVector(m, tuple(d // 2 for d in doubled))
