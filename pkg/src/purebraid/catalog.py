"""Named braid words: longest-element lifts over intervals of the A_n graph,
the classical pure braid generators, and the staircase words attached to a
box configuration. Each word identity relating them can be replayed through
:func:`verify_identity`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .braid import BraidWord, concat, reverse_word
from .report import ReportItem, VerificationReport, check_equal


@dataclass(frozen=True, order=True)
class Interval:
    """The connected subgraph [lo, hi] of A_n; ``hi < lo`` is the empty subgraph."""

    lo: int
    hi: int
    ambient: int

    def __post_init__(self):
        if self.ambient < 1:
            raise ValueError("ambient rank must be positive")
        if not self.is_empty and not 1 <= self.lo <= self.hi <= self.ambient:
            raise ValueError(f"interval [{self.lo},{self.hi}] outside A_{self.ambient}")

    @classmethod
    def from_pair(cls, i: int, j: int, ambient: int) -> Interval:
        """The interval [i, j-1] indexed by the strand pair ij, 1 <= i < j <= n+1."""
        if not 1 <= i < j <= ambient + 1:
            raise ValueError(f"pair {i}{j} outside 1..{ambient + 1}")
        return cls(i, j - 1, ambient)

    @property
    def is_empty(self) -> bool:
        return self.hi < self.lo

    @property
    def pair(self) -> tuple[int, int]:
        return (self.lo, self.hi + 1)

    @property
    def size(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def contains(self, other: Interval) -> bool:
        return other.is_empty or (self.lo <= other.lo and other.hi <= self.hi)

    def intersects(self, other: Interval) -> bool:
        return not (self.is_empty or other.is_empty) and \
            max(self.lo, other.lo) <= min(self.hi, other.hi)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def _desc(hi: int, lo: int) -> list[int]:
    """s_hi s_{hi-1} ... s_lo (empty when hi < lo)."""
    return list(range(hi, lo - 1, -1))


def _asc(lo: int, hi: int) -> list[int]:
    """s_lo s_{lo+1} ... s_hi (empty when hi < lo)."""
    return list(range(lo, hi + 1))


def _word(n: int, letters) -> BraidWord:
    return BraidWord(n + 1, tuple(letters))


def longest_lift(v: Interval) -> BraidWord:
    """(s_i)(s_{i+1} s_i)...(s_j ... s_i); the identity for the empty interval."""
    letters: list[int] = []
    for t in range(v.lo, v.hi + 1):
        letters += _desc(t, v.lo)
    return _word(v.ambient, letters)


def longest_square(v: Interval) -> BraidWord:
    w = longest_lift(v)
    return w * w


def ell(i: int, j: int, n: int) -> BraidWord:
    return longest_lift(Interval(i, j, n))


def ell2(i: int, j: int, n: int) -> BraidWord:
    return longest_square(Interval(i, j, n))


def classical_generator(i: int, j: int, n: int) -> tuple[BraidWord, BraidWord]:
    """sigma_{i,j} = (s_{j-1}...s_{i+1}) s_i (s_{i+1}^{-1}...s_{j-1}^{-1}) and A_{i,j} = sigma^2."""
    if not 1 <= i < j <= n + 1:
        raise ValueError(f"need 1 <= i < j <= {n + 1}, got ({i}, {j})")
    conj = _desc(j - 1, i + 1)
    sigma = _word(n, conj + [i] + [-g for g in reversed(conj)])
    return sigma, sigma * sigma


@dataclass(frozen=True)
class BoxConfig:
    """Intervals A=[i,j], B=[a,k], C=[j+2,p] with 1 <= i < a <= j+1 <= k < p <= n."""

    i: int
    a: int
    j: int
    k: int
    p: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i < self.a <= self.j + 1 <= self.k < self.p <= self.n:
            raise ValueError(f"invalid box configuration {self.params}")

    @property
    def params(self) -> tuple[int, ...]:
        return (self.i, self.a, self.j, self.k, self.p)

    @property
    def x(self) -> int:
        return self.k - self.j

    @property
    def y(self) -> int:
        return self.j + 2 - self.a

    @property
    def b(self) -> int:
        return self.i + (self.k - (self.j + 1))

    @property
    def h(self) -> int:
        return self.a + (self.p - (self.j + 1))

    @property
    def left(self) -> Interval:
        return Interval(self.i, self.j, self.n)

    @property
    def middle(self) -> Interval:
        return Interval(self.a, self.k, self.n)

    @property
    def right(self) -> Interval:
        return Interval(self.j + 2, self.p, self.n)


def box_configs(n: int) -> Iterator[BoxConfig]:
    for i in range(1, n + 1):
        for a in range(i + 1, n + 1):
            for j in range(a - 1, n):
                for k in range(j + 1, n):
                    for p in range(k + 1, n + 1):
                        yield BoxConfig(i, a, j, k, p, n)


class ChiWords(NamedTuple):
    c_left: BraidWord     # c_{a-1,b}
    c_middle: BraidWord   # c_{j+1,x+a-1}
    d_right: BraidWord    # d_{k+1,h}
    d_middle: BraidWord   # d_{j+1,k-y+1}


def chi_words(cfg: BoxConfig) -> ChiWords:
    """The staircase words of a box configuration.

    The c-words are products of ascending runs of length x whose starting index
    drops by one per factor; the d-words are products of descending runs of
    length y whose starting index rises by one per factor.
    """
    x, y = cfg.x, cfg.y

    def c(start: int, stop: int) -> BraidWord:
        letters: list[int] = []
        for t in range(start, stop - 1, -1):
            letters += _asc(t, t + x - 1)
        return _word(cfg.n, letters)

    def d(start: int, stop: int) -> BraidWord:
        letters: list[int] = []
        for t in range(start, stop + 1):
            letters += _desc(t, t - y + 1)
        return _word(cfg.n, letters)

    return ChiWords(
        c_left=c(cfg.a - 1, cfg.i),
        c_middle=c(cfg.j + 1, cfg.a),
        d_right=d(cfg.k + 1, cfg.p),
        d_middle=d(cfg.j + 1, cfg.k),
    )


# --- identity families -----------------------------------------------------

Equation = tuple[str, BraidWord, BraidWord]


def _hook_down(t: int, i: int) -> list[int]:
    """s_t ... s_{i+1} s_i^2 s_{i+1} ... s_t for t >= i."""
    return _desc(t, i) + _asc(i, t)


def _hook_up(t: int, p: int) -> list[int]:
    """s_t ... s_{p-1} s_p^2 s_{p-1} ... s_t for t <= p."""
    return _asc(t, p) + _desc(p, t)


def _longest_factorizations(i: int, j: int, n: int) -> list[Equation]:
    w = lambda letters: _word(n, letters)
    canonical = ell(i, j, n)
    from_right = []
    for t in range(j, i - 1, -1):
        from_right += _asc(t, j)
    forms = {
        "asc*ell(i,j-1)": w(_asc(i, j)) * ell(i, j - 1, n),
        "ell(i,j-1)*desc": ell(i, j - 1, n) * w(_desc(j, i)),
        "reversed-staircase": w(from_right),
        "desc*ell(i+1,j)": w(_desc(j, i)) * ell(i + 1, j, n),
        "ell(i+1,j)*asc": ell(i + 1, j, n) * w(_asc(i, j)),
    }
    return [(name, canonical, rhs) for name, rhs in forms.items()]


def _square_factorizations(i: int, j: int, n: int) -> list[Equation]:
    w = lambda letters: _word(n, letters)
    sq = ell2(i, j, n)
    desc, asc = w(_desc(j, i)), w(_asc(i, j))
    return [
        ("desc*asc*sq(i,j-1)", sq, desc * asc * ell2(i, j - 1, n)),
        ("asc*desc*sq(i+1,j)", sq, asc * desc * ell2(i + 1, j, n)),
        ("sq(i,j-1)*desc*asc", sq, ell2(i, j - 1, n) * desc * asc),
        ("sq(i+1,j)*asc*desc", sq, ell2(i + 1, j, n) * asc * desc),
    ]


def _coxeter_commute(item: int, lo: int, hi: int, n: int) -> list[Equation]:
    w = lambda letters: _word(n, letters)
    if item == 1:
        z = w(_desc(n, 1) + _asc(1, n))
    else:
        z = w(_asc(1, n) + _desc(n, 1))
    lk = ell(lo, hi, n)
    return [(f"item{item}", lk * z, z * lk)]


def _square_power(i: int, j: int, n: int) -> list[Equation]:
    w = lambda letters: _word(n, letters)
    sq = ell2(i, j, n)
    e = j - i + 2
    return [("desc-power", sq, w(_desc(j, i)) ** e),
            ("asc-power", sq, w(_asc(i, j)) ** e)]


def _pairs_desc(hi: int, lo: int) -> list[int]:
    """(s_{lo+1} s_lo)(s_{lo+2} s_{lo+1})...(s_hi s_{hi-1})."""
    letters: list[int] = []
    for t in range(lo, hi):
        letters += [t + 1, t]
    return letters


def _pairs_asc(hi: int, lo: int) -> list[int]:
    """(s_{hi-1} s_hi)(s_{hi-2} s_{hi-1})...(s_lo s_{lo+1})."""
    letters: list[int] = []
    for t in range(hi - 1, lo - 1, -1):
        letters += [t, t + 1]
    return letters


def _hook_products(i: int, j: int, n: int) -> list[Equation]:
    w = lambda letters: _word(n, letters)
    one = (w(_hook_down(j, i) + _hook_down(j - 1, i)),
           w(_desc(j, i + 1) * 2 + [i, i + 1] + _pairs_desc(j, i)))
    two = (w(_hook_up(i, j) + _hook_up(i + 1, j)),
           w(_asc(i, j - 1) * 2 + [j, j - 1] + _pairs_asc(j, i)))
    three = (w(_hook_down(j - 1, i) + _hook_down(j, i)),
             w(_pairs_asc(j, i) + [i + 1, i] + _asc(i + 1, j) * 2))
    four = (w(_hook_up(i + 1, j) + _hook_up(i, j)),
            w(_pairs_desc(j, i) + [j - 1, j] + _desc(j - 1, i) * 2))
    return [(f"item{k}", lhs, rhs) for k, (lhs, rhs) in enumerate((one, two, three, four), 1)]


def _box_products(cfg: BoxConfig) -> list[Equation]:
    i, a, j, k, p, n = cfg.i, cfg.a, cfg.j, cfg.k, cfg.p, cfg.n
    x, y = cfg.x, cfg.y
    w = lambda letters: _word(n, letters)
    cw = chi_words(cfg)
    bar = reverse_word
    down_ka = w(_desc(k, a))
    up_ak = w(_asc(a, k))

    def hooks_down(ts) -> BraidWord:
        return w([g for t in ts for g in _hook_down(t, i)])

    def hooks_up(ts) -> BraidWord:
        return w([g for t in ts for g in _hook_up(t, p)])

    return [
        ("item1", hooks_down(range(k, j, -1)),
         down_ka ** x * cw.c_left * bar(cw.c_left) * bar(cw.c_middle)),
        ("item2", hooks_up(range(j + 1, a - 1, -1)),
         cw.d_middle * cw.d_right * bar(cw.d_right) * down_ka ** y),
        ("item3", hooks_up(range(a, j + 2)),
         up_ak ** y * cw.d_right * bar(cw.d_right) * bar(cw.d_middle)),
        ("item4", hooks_down(range(j + 1, k + 1)),
         cw.c_middle * cw.c_left * bar(cw.c_left) * up_ak ** x),
    ]


def _chi_swap(cfg: BoxConfig) -> list[Equation]:
    cw = chi_words(cfg)
    return [("c=d", cw.c_middle, cw.d_middle),
            ("bar(c)=bar(d)", reverse_word(cw.c_middle), reverse_word(cw.d_middle))]


@dataclass(frozen=True)
class IdentityFamily:
    name: str
    description: str
    instances: Callable[[int], Iterator[tuple]]
    equations: Callable[..., list[Equation]]


def _intervals(n: int, strict: bool):
    for i in range(1, n + 1):
        for j in range(i + (1 if strict else 0), n + 1):
            yield (i, j, n)


def _coxeter_params(n: int):
    if n < 2:
        return
    for lo in range(1, n):
        for hi in range(lo, n):
            yield (1, lo, hi, n)
    for lo in range(2, n + 1):
        for hi in range(lo, n + 1):
            yield (2, lo, hi, n)


def _hook_params(n: int):
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            yield (i, j, n)


FAMILIES: dict[str, IdentityFamily] = {
    f.name: f for f in [
        IdentityFamily("longest-factorizations",
                       "all spellings of the longest lift over [i,j] agree",
                       lambda n: _intervals(n, strict=False), _longest_factorizations),
        IdentityFamily("square-factorizations",
                       "peeling an end generator off the square of a longest lift",
                       lambda n: _intervals(n, strict=True), _square_factorizations),
        IdentityFamily("coxeter-commute",
                       "(s_n..s_1)(s_1..s_n) commutes with lifts in [1,n-1], mirrored for [2,n]",
                       _coxeter_params, _coxeter_commute),
        IdentityFamily("square-power",
                       "the square of a longest lift is a power of a Coxeter word",
                       lambda n: _intervals(n, strict=True), _square_power),
        IdentityFamily("hook-products",
                       "products of two adjacent hooks rewritten (run length two)",
                       _hook_params, _hook_products),
        IdentityFamily("box-products",
                       "products of hooks rewritten via staircase words",
                       lambda n: ((c,) for c in box_configs(n)), _box_products),
        IdentityFamily("chi-swap",
                       "the middle c and d staircase words coincide",
                       lambda n: ((c,) for c in box_configs(n)), _chi_swap),
    ]
}


def _param_label(params: tuple) -> str:
    if len(params) == 1 and isinstance(params[0], BoxConfig):
        c = params[0]
        return f"i={c.i},a={c.a},j={c.j},k={c.k},p={c.p},n={c.n}"
    return ",".join(str(v) for v in params)


def _family(name: str) -> IdentityFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown identity family {name!r}; "
                         f"choose from {sorted(FAMILIES)}") from None


def identity_items(name: str, params: tuple) -> list[ReportItem]:
    fam = _family(name)
    label = _param_label(params)
    return [check_equal(f"{name}({label}):{tag}", name, lhs, rhs)
            for tag, lhs, rhs in fam.equations(*params)]


def verify_identity(name: str, params: tuple) -> VerificationReport:
    """Check one instance of an identity family; ``params`` as produced by its sweep."""
    fam = _family(name)
    legal = set(fam.instances(_ambient_of(params)))
    if tuple(params) not in legal:
        raise ValueError(f"parameters {params} out of range for {name}")
    return VerificationReport(f"lemma:{name}", _ambient_of(params), identity_items(name, params))


def _ambient_of(params: tuple) -> int:
    if len(params) == 1 and isinstance(params[0], BoxConfig):
        return params[0].n
    return params[-1]


def sweep_identity(name: str, n: int, *, cumulative: bool = True) -> VerificationReport:
    """Check every instance of a family for ambient rank n (and all smaller ranks)."""
    fam = _family(name)
    report = VerificationReport(f"lemma:{name}", n)
    for m in range(1, n + 1) if cumulative else [n]:
        for params in fam.instances(m):
            report.extend(identity_items(name, params))
    return report
