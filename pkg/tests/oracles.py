"""Reference computations that share no code with the package.

Braid equality is decided through the Artin action on the free group F_m,
which is faithful, so two words agree iff they move every free generator to
the same reduced word. This is exponential in word length; keep inputs short.
"""

from __future__ import annotations

from itertools import combinations
from math import comb


def _reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inv(word):
    return tuple(-x for x in reversed(word))


def artin_images(strands: int, letters) -> tuple:
    img = [(x,) for x in range(1, strands + 1)]
    for g in letters:
        i = abs(g) - 1
        a, b = img[i], img[i + 1]
        if g > 0:
            # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            img[i], img[i + 1] = _reduce(a + b + _inv(a)), a
        else:
            # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            img[i], img[i + 1] = b, _reduce(_inv(b) + a + b)
    return tuple(img)


def braid_equal(strands: int, u, v) -> bool:
    return artin_images(strands, u) == artin_images(strands, v)


def permutation_of(strands: int, letters) -> tuple:
    """Strand sitting at each position after the braid, positions 1..strands."""
    at = list(range(1, strands + 1))
    for g in letters:
        k = abs(g)
        at[k - 1], at[k] = at[k], at[k - 1]
    return tuple(at)


def brute_commutator_count(n: int) -> int:
    """Unordered pairs of distinct intervals of 1..n that are nested or two apart."""
    ivs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    count = 0
    for (a, b), (c, d) in combinations(ivs, 2):
        nested = (a <= c and d <= b) or (c <= a and b <= d)
        gap = max(c - b, a - d)  # edges strictly between, when disjoint
        if nested or gap >= 2:
            count += 1
    return count


def box_count(n: int) -> int:
    return comb(n + 2, 5)


def crossing_linking(strands: int, letters) -> dict:
    """Signed crossings per strand pair divided by two, computed from scratch."""
    at = list(range(1, strands + 1))
    tally = {(p, q): 0 for p, q in combinations(range(1, strands + 1), 2)}
    for g in letters:
        k = abs(g)
        p, q = sorted((at[k - 1], at[k]))
        tally[(p, q)] += 1 if g > 0 else -1
        at[k - 1], at[k] = at[k], at[k - 1]
    return {f"{p},{q}": v // 2 for (p, q), v in tally.items()}
