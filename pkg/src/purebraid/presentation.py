"""The classical presentation G = <A_ij | R1> and the interval presentation
H = <I_ij | commutators, box relations>, the map phi: G -> H, and their
checks against the braid-group oracle.

Interval symbols I_{i,j} realize as squares of longest lifts; classical
symbols A_{i,j} realize as sigma_{i,j}^2.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .braid import BraidWord, concat
from .catalog import Interval, classical_generator, longest_square
from .report import ReportItem, VerificationReport, check_equal

CLASSICAL = "A"
INTERVAL = "I"


@dataclass(frozen=True, order=True)
class Symbol:
    """A_{first,second} (first < second) or I_{first,second} (empty when second < first)."""

    kind: str
    first: int
    second: int

    def __post_init__(self):
        if self.kind not in (CLASSICAL, INTERVAL):
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.kind == CLASSICAL and not 1 <= self.first < self.second:
            raise ValueError(f"classical symbol needs first < second: {self}")

    @property
    def is_trivial(self) -> bool:
        return self.kind == INTERVAL and self.second < self.first

    def __str__(self) -> str:
        return f"{self.kind}{self.first},{self.second}"


def A(i: int, j: int) -> Symbol:
    return Symbol(CLASSICAL, i, j)


def I(i: int, j: int) -> Symbol:
    return Symbol(INTERVAL, i, j)


Letter = tuple[Symbol, int]


@dataclass(frozen=True)
class PresentationWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        kinds = {s.kind for s, _ in self.letters}
        if len(kinds) > 1:
            raise ValueError("a presentation word mixes classical and interval symbols")
        for s, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"exponent {e} is not +-1")
            if s.kind == CLASSICAL and s.second > self.n + 1:
                raise ValueError(f"{s} outside PBr_(A_{self.n})")
            if s.kind == INTERVAL and not s.is_trivial and not 1 <= s.first <= s.second <= self.n:
                raise ValueError(f"{s} outside A_{self.n}")

    @classmethod
    def of(cls, n: int, *letters: Symbol | Letter) -> PresentationWord:
        out = []
        for x in letters:
            out.append((x, 1) if isinstance(x, Symbol) else x)
        return cls(n, tuple(out))

    @classmethod
    def parse(cls, text: str, n: int) -> PresentationWord:
        """Parse tokens like ``A1,3``, ``I2,4^-1`` separated by whitespace."""
        letters = []
        for tok in text.split():
            m = re.fullmatch(r"([AI])(\d+),(\d+)(\^-1)?", tok)
            if not m:
                raise ValueError(f"malformed presentation letter {tok!r}")
            sym = Symbol(m.group(1), int(m.group(2)), int(m.group(3)))
            letters.append((sym, -1 if m.group(4) else 1))
        return cls(n, tuple(letters))

    def __str__(self) -> str:
        return " ".join(str(s) + ("^-1" if e < 0 else "") for s, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: PresentationWord) -> PresentationWord:
        if self.n != other.n:
            raise ValueError("presentation words over different ranks")
        return PresentationWord(self.n, self.letters + other.letters)

    def inverse(self) -> PresentationWord:
        return PresentationWord(self.n, tuple((s, -e) for s, e in reversed(self.letters)))

    def reversed(self) -> PresentationWord:
        """Symbol order reversed, exponents kept."""
        return PresentationWord(self.n, self.letters[::-1])

    def drop_trivial(self) -> PresentationWord:
        return PresentationWord(self.n, tuple(l for l in self.letters if not l[0].is_trivial))

    def free_reduce(self) -> PresentationWord:
        stack: list[Letter] = []
        for s, e in self.letters:
            if s.is_trivial:
                continue
            if stack and stack[-1] == (s, -e):
                stack.pop()
            else:
                stack.append((s, e))
        return PresentationWord(self.n, tuple(stack))


@dataclass(frozen=True)
class Relation:
    lhs: PresentationWord
    rhs: PresentationWord
    kind: str
    label: str

    def to_json(self) -> dict:
        return {"label": self.label, "kind": self.kind, "lhs": str(self.lhs), "rhs": str(self.rhs)}


# --- the interval presentation H ---------------------------------------------

def enumerate_generators(n: int) -> list[Interval]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return [Interval(i, j, n) for i in range(1, n + 1) for j in range(i, n + 1)]


def distance(u: Interval, v: Interval) -> int:
    """0 for intersecting intervals, otherwise the number of edges strictly between them."""
    if u.ambient != v.ambient:
        raise ValueError("intervals in different ambient graphs")
    if u.intersects(v):
        return 0
    if u.hi < v.lo:
        return v.lo - u.hi
    return u.lo - v.hi


def nested(u: Interval, v: Interval) -> bool:
    return u.contains(v) or v.contains(u)


def commute_in_h(u: Interval, v: Interval) -> bool:
    return u != v and (distance(u, v) >= 2 or nested(u, v))


def compatible_Bs(a_iv: Interval, c_iv: Interval) -> list[Interval]:
    """Intervals [a,k] with A.lo < a <= A.hi+1 <= k < C.hi, for A one node left of C."""
    if a_iv.hi >= c_iv.lo or distance(a_iv, c_iv) != 2:
        raise ValueError(f"{a_iv} and {c_iv} are not one node apart with A on the left")
    n = a_iv.ambient
    return [Interval(a, k, n)
            for a in range(a_iv.lo + 1, a_iv.hi + 2)
            for k in range(a_iv.hi + 1, c_iv.hi)]


def _isym(v: Interval) -> Symbol:
    return I(v.lo, v.hi)


def commutator_relations(n: int) -> list[Relation]:
    rels = []
    for u, v in combinations(enumerate_generators(n), 2):
        if not commute_in_h(u, v):
            continue
        kind = "far-commutator" if distance(u, v) >= 2 else "inclusion-commutator"
        x, y = _isym(u), _isym(v)
        rels.append(Relation(PresentationWord.of(n, x, y), PresentationWord.of(n, y, x),
                             kind, f"[{u},{v}]"))
    return rels


def box_relation(a_iv: Interval, b_iv: Interval, c_iv: Interval) -> Relation:
    n = a_iv.ambient
    ab = Interval(a_iv.lo, b_iv.hi, n)
    bc = Interval(b_iv.lo, c_iv.hi, n)
    lhs = PresentationWord.of(n, (_isym(ab), -1), _isym(a_iv), _isym(b_iv), _isym(c_iv),
                              (_isym(bc), -1))
    rhs = PresentationWord.of(n, (_isym(bc), -1), _isym(c_iv), _isym(b_iv), _isym(a_iv),
                              (_isym(ab), -1))
    return Relation(lhs, rhs, "box", f"box(A={a_iv},B={b_iv},C={c_iv})")


def box_relations(n: int) -> list[Relation]:
    gens = enumerate_generators(n)
    rels = []
    for a_iv in gens:
        for c_iv in gens:
            if a_iv.hi + 2 == c_iv.lo:
                rels.extend(box_relation(a_iv, b, c_iv) for b in compatible_Bs(a_iv, c_iv))
    return rels


def enumerate_relations(n: int, kind: str = "all") -> list[Relation]:
    if kind not in ("all", "commutator", "box"):
        raise ValueError(f"unknown relation kind {kind!r}")
    rels: list[Relation] = []
    if kind in ("all", "commutator"):
        rels += commutator_relations(n)
    if kind in ("all", "box"):
        rels += box_relations(n)
    return rels


# --- double-index form ---------------------------------------------------------

def interval_to_pair(v: Interval) -> tuple[int, int]:
    return v.pair


def pair_to_interval(i: int, j: int, n: int) -> Interval:
    return Interval.from_pair(i, j, n)


def z_commute(ij: tuple[int, int], kl: tuple[int, int]) -> bool:
    """Commutation of z_ij and z_kl read off the strand pairs.

    The intervals [i,j-1] and [k,l-1] are k-j+1 edges apart when k >= j, so
    far commutation means k >= j+1 (or i >= l+1); nesting translates to
    k <= i < j <= l or its mirror.
    """
    (i, j), (k, l) = ij, kl
    if ij == kl:
        return False
    far = k >= j + 1 or i >= l + 1
    inside = (k <= i and j <= l) or (i <= k and l <= j)
    return far or inside


# --- the classical presentation G and phi ---------------------------------------

def classical_relations(n: int) -> list[Relation]:
    """Every instance of A_rs^-1 A_ij A_rs = (conjugate of A_ij) for strand indices <= n+1."""
    m = n + 1
    rels = []
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    for r, s in pairs:
        for i, j in pairs:
            conj: list[Letter] | None
            if r < s < i < j or i < r < s < j:
                case, conj = 1, []
            elif r < s == i < j:
                case, conj = 2, [(A(r, j), 1)]
            elif r == i < s < j:
                case, conj = 3, [(A(i, j), 1), (A(s, j), 1)]
            elif r < i < s < j:
                case, conj = 4, [(A(r, j), 1), (A(s, j), 1), (A(r, j), -1), (A(s, j), -1)]
            else:
                continue
            lhs = PresentationWord(n, ((A(r, s), -1), (A(i, j), 1), (A(r, s), 1)))
            c = PresentationWord(n, tuple(conj))
            rhs = c * PresentationWord.of(n, A(i, j)) * c.inverse()
            rels.append(Relation(lhs, rhs, f"classical-R1-case-{case}",
                                 f"R1(r={r},s={s},i={i},j={j})"))
    return rels


def _phi_block(i: int, j: int) -> list[Letter]:
    return [(I(i, j - 2), -1), (I(i, j - 1), 1), (I(i + 1, j - 2), 1), (I(i + 1, j - 1), -1)]


def phi(w: PresentationWord) -> PresentationWord:
    """A_ij -> I_{i,j-2}^-1 I_{i,j-1} I_{i+1,j-2} I_{i+1,j-1}^-1, trivial symbols dropped."""
    out: list[Letter] = []
    for s, e in w.letters:
        if s.kind != CLASSICAL:
            raise ValueError("phi is defined on classical words")
        block = _phi_block(s.first, s.second)
        if e < 0:
            block = [(t, -f) for t, f in reversed(block)]
        out.extend(l for l in block if not l[0].is_trivial)
    return PresentationWord(w.n, tuple(out))


def realize_symbol(s: Symbol, n: int) -> BraidWord:
    if s.kind == INTERVAL:
        if s.is_trivial:
            return BraidWord.identity(n + 1)
        return longest_square(Interval(s.first, s.second, n))
    return classical_generator(s.first, s.second, n)[1]


def realize(w: PresentationWord, n: int | None = None) -> BraidWord:
    n = w.n if n is None else n
    parts = []
    for s, e in w.letters:
        b = realize_symbol(s, n)
        parts.append(b if e > 0 else b.inverse())
    return concat(parts, n + 1)


# --- verification -----------------------------------------------------------------

def _check_relation(rel: Relation) -> ReportItem:
    return check_equal(rel.label, rel.kind, realize(rel.lhs), realize(rel.rhs))


def _check_phi_image(rel: Relation) -> ReportItem:
    return check_equal(rel.label, rel.kind, realize(phi(rel.lhs)), realize(phi(rel.rhs)))


def _run(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def verify_relations(n: int, relations: Iterable[Relation] | None = None,
                     jobs: int = 1) -> VerificationReport:
    rels = list(enumerate_relations(n) if relations is None else relations)
    return VerificationReport("verify:relations", n, _run(_check_relation, rels, jobs))


def verify_classical(n: int, jobs: int = 1) -> VerificationReport:
    """R1 itself holds for sigma_{i,j}^2 in the braid group."""
    return VerificationReport("verify:classical", n,
                              _run(_check_relation, classical_relations(n), jobs))


def verify_phi_well_defined(n: int, jobs: int = 1) -> VerificationReport:
    return VerificationReport("verify:phi", n,
                              _run(_check_phi_image, classical_relations(n), jobs))


def _generation_item(ij: tuple[int, int, int]) -> ReportItem:
    i, j, n = ij
    a = PresentationWord.of(n, A(i, j))
    return check_equal(f"phi(A{i},{j})", "generation", realize(phi(a)), realize(a))


def verify_generation(n: int, jobs: int = 1) -> VerificationReport:
    params = [(i, j, n) for i in range(1, n + 2) for j in range(i + 1, n + 2)]
    return VerificationReport("verify:generation", n, _run(_generation_item, params, jobs))


def surjectivity_witness(v: Interval) -> PresentationWord:
    """A classical word g with phi(g) freely equal to I_v, by induction on the length of v."""
    n = v.ambient
    if v.is_empty:
        return PresentationWord(n)
    i, j = v.lo, v.hi
    if i == j:
        return PresentationWord.of(n, A(i, i + 1))
    g1 = surjectivity_witness(Interval(i, j - 1, n))
    g2 = surjectivity_witness(Interval(i + 1, j - 1, n))
    g3 = surjectivity_witness(Interval(i + 1, j, n))
    return g1 * PresentationWord.of(n, A(i, j + 1)) * g3 * g2.inverse()


def certify_witness(v: Interval) -> ReportItem:
    g = surjectivity_witness(v)
    target = PresentationWord.of(v.ambient, _isym(v))
    image = phi(g).free_reduce()
    item = check_equal(f"witness{v}", "witness", realize(g), realize(target))
    if image != target:
        return ReportItem(item.id, item.kind, False,
                          {"witness": str(g), "phi_image": str(image), "expected": str(target)})
    return item


def verify_witnesses(n: int, jobs: int = 1) -> VerificationReport:
    return VerificationReport("verify:witnesses", n,
                              _run(certify_witness, enumerate_generators(n), jobs))
