"""Left Garside normal form in Br_m, used as the word-problem oracle.

Canonical factors are positive permutation braids, each stored as the image
tuple of its permutation (see :class:`purebraid.braid.Permutation`). A pair of
factors (A, B) is left-weighted when every generator starting B is already a
finishing generator of A.

Negative letters are absorbed with s_g^{-1} = Delta^{-1} (Delta s_g^{-1}); the
Delta^{-1} is pushed to the front through the factors already collected, which
conjugates each of them by Delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, Permutation

Perm = tuple[int, ...]


def _delta(m: int) -> Perm:
    return tuple(range(m, 0, -1))


def _identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def _tau(a: Perm) -> Perm:
    # conjugation by Delta, s_i -> s_{m-i}
    m = len(a)
    return tuple(m + 1 - a[m - 1 - k] for k in range(m))


def _right_descents(a: Perm) -> int:
    mask = 0
    for g in range(1, len(a)):
        if a[g - 1] > a[g]:
            mask |= 1 << g
    return mask


def _left_descents(a: Perm) -> int:
    pos = [0] * (len(a) + 1)
    for k, v in enumerate(a):
        pos[v] = k
    mask = 0
    for g in range(1, len(a)):
        if pos[g + 1] < pos[g]:
            mask |= 1 << g
    return mask


def _swap_positions(a: Perm, g: int) -> Perm:
    b = list(a)
    b[g - 1], b[g] = b[g], b[g - 1]
    return tuple(b)


def _swap_values(a: Perm, g: int) -> Perm:
    return tuple(g + 1 if v == g else g if v == g + 1 else v for v in a)


@lru_cache(maxsize=1 << 20)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move generators from the front of ``b`` to the back of ``a`` until left-weighted."""
    while True:
        movable = _left_descents(b) & ~_right_descents(a)
        if not movable:
            return a, b
        g = (movable & -movable).bit_length() - 1
        a = _swap_positions(a, g)
        b = _swap_values(b, g)


@lru_cache(maxsize=None)
def _reduced_word(a: Perm) -> tuple[int, ...]:
    letters = []
    while True:
        desc = _right_descents(a)
        if not desc:
            break
        g = (desc & -desc).bit_length() - 1
        letters.append(g)
        a = _swap_positions(a, g)
    return tuple(reversed(letters))


def is_left_weighted(a: Perm, b: Perm) -> bool:
    return not (_left_descents(b) & ~_right_descents(a))


@dataclass(frozen=True)
class GarsideNormalForm:
    """Delta^infimum times the canonical factors, left to right."""

    strands: int
    infimum: int
    factors: tuple[Permutation, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def to_word(self) -> BraidWord:
        delta = _reduced_word(_delta(self.strands))
        if self.infimum >= 0:
            letters = list(delta) * self.infimum
        else:
            letters = [-g for g in reversed(delta)] * (-self.infimum)
        for f in self.factors:
            letters.extend(_reduced_word(f.images))
        return BraidWord(self.strands, tuple(letters))

    def serialize(self) -> str:
        lines = [str(self.infimum)]
        lines.extend(" ".join(str(v) for v in f.images) for f in self.factors)
        return "\n".join(lines) + "\n"

    @classmethod
    def deserialize(cls, text: str, strands: int) -> GarsideNormalForm:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty normal form")
        factors = tuple(Permutation(tuple(int(v) for v in ln.split())) for ln in lines[1:])
        if any(f.size != strands for f in factors):
            raise ValueError(f"factor size does not match {strands} strands")
        return cls(strands, int(lines[0]), factors)

    def to_json(self) -> dict:
        return {"strands": self.strands, "infimum": self.infimum,
                "factors": [list(f.images) for f in self.factors]}


def _normal_factors(w: BraidWord) -> tuple[int, list[Perm]]:
    m = w.strands
    delta, ident = _delta(m), _identity(m)
    inf = 0
    factors: list[Perm] = []
    for g in w.letters:
        if g > 0:
            p = _swap_positions(ident, g)
        else:
            inf -= 1
            factors = [_tau(f) for f in factors]
            p = _swap_positions(delta, -g)
        factors.append(p)
        i = len(factors) - 2
        while i >= 0:
            a, b = factors[i], factors[i + 1]
            a2, b2 = _left_weight(a, b)
            if a2 == a:
                break
            factors[i], factors[i + 1] = a2, b2
            i -= 1
        # Delta can only surface at the front, identities only at the back
        lead = 0
        while lead < len(factors) and factors[lead] == delta:
            lead += 1
        if lead:
            inf += lead
            factors = factors[lead:]
        while factors and factors[-1] == ident:
            factors.pop()
    return inf, factors


def normal_form(w: BraidWord) -> GarsideNormalForm:
    inf, factors = _normal_factors(w)
    return GarsideNormalForm(w.strands, inf, tuple(Permutation(f) for f in factors))


def equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise ValueError(f"braids on {u.strands} and {v.strands} strands are incomparable")
    return _normal_factors(u) == _normal_factors(v)


def is_trivial(w: BraidWord) -> bool:
    inf, factors = _normal_factors(w)
    return inf == 0 and not factors


def delta_word(strands: int) -> BraidWord:
    """The positive half twist Delta as a reduced word."""
    return BraidWord(strands, _reduced_word(_delta(strands)))


def permutation_braid(p: Permutation) -> BraidWord:
    """The positive permutation braid lifting ``p``."""
    return BraidWord(p.size, _reduced_word(p.images))
