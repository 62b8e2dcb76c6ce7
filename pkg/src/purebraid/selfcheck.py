"""Seeded randomized checks of the Garside oracle and the linking map."""

from __future__ import annotations

import random

from .abelian import linking
from .braid import BraidWord, free_reduce, project_to_permutation
from .garside import equal, is_trivial, normal_form, permutation_braid
from .report import ReportItem, VerificationReport


def random_word(rng: random.Random, strands: int, max_len: int = 30) -> BraidWord:
    if strands < 2:
        return BraidWord.identity(strands)
    length = rng.randint(0, max_len)
    return BraidWord(strands, tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                                    for _ in range(length)))


def random_relator(rng: random.Random, strands: int) -> BraidWord:
    """A conjugate (or inverse) of a defining relator of Br_strands."""
    m = strands
    choices = []
    if m >= 3:
        i = rng.randint(1, m - 2)
        choices.append((i, i + 1, i, -(i + 1), -i, -(i + 1)))
    if m >= 4:
        i, j = rng.choice([(i, j) for i in range(1, m) for j in range(1, m) if abs(i - j) >= 2])
        choices.append((i, j, -i, -j))
    choices.append((1, -1))
    rel = BraidWord(m, rng.choice(choices))
    if rng.random() < 0.5:
        rel = rel.inverse()
    conj = random_word(rng, m, 6)
    return conj * rel * conj.inverse()


def insert_at(w: BraidWord, pos: int, r: BraidWord) -> BraidWord:
    return BraidWord(w.strands, w.letters[:pos] + r.letters + w.letters[pos:])


def random_pure_word(rng: random.Random, strands: int, max_len: int = 30) -> BraidWord:
    w = random_word(rng, strands, max_len)
    return w * permutation_braid(project_to_permutation(w).inverse())


def oracle_checks(trials: int = 1000, seed: int = 0, max_strands: int = 7) -> VerificationReport:
    rng = random.Random(seed)
    items = []
    for t in range(trials):
        m = rng.randint(2, max_strands)
        w = random_word(rng, m)
        r = random_relator(rng, m)
        v = insert_at(w, rng.randint(0, len(w)), r)
        tag = f"trial{t}(strands={m})"
        items.append(ReportItem(f"{tag}:relator-insertion", "relator-insertion", equal(w, v)))
        items.append(ReportItem(f"{tag}:inverse-cancellation", "inverse-cancellation",
                                is_trivial(w * w.inverse())))
        items.append(ReportItem(f"{tag}:free-reduction", "free-reduction",
                                equal(w, free_reduce(w))))
        items.append(ReportItem(f"{tag}:projection", "projection",
                                project_to_permutation(w) == project_to_permutation(v)))
        nf = normal_form(w)
        items.append(ReportItem(f"{tag}:idempotence", "idempotence",
                                normal_form(nf.to_word()) == nf))
    return VerificationReport("verify:oracle", max_strands - 1, items)


def linking_checks(trials: int = 1000, seed: int = 0, max_strands: int = 7) -> VerificationReport:
    """Garside-equal pure words built by relator insertion have equal linking vectors."""
    rng = random.Random(seed)
    items = []
    for t in range(trials):
        m = rng.randint(2, max_strands)
        u = random_pure_word(rng, m)
        v = u
        for _ in range(rng.randint(1, 3)):
            v = insert_at(v, rng.randint(0, len(v)), random_relator(rng, m))
        ok = equal(u, v) and linking(u) == linking(v)
        items.append(ReportItem(f"trial{t}(strands={m})", "linking-invariance", ok))
    return VerificationReport("verify:linking", max_strands - 1, items)
