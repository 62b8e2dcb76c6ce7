"""Exact Smith normal form over the integers, with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [tuple(int(v) for v in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, size: int) -> IntegerMatrix:
        return cls(size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntegerMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def diagonal(self) -> list[int]:
        return [self.entries[t][t] for t in range(min(self.rows, self.cols))]


class SmithForm(NamedTuple):
    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def invariants(self) -> list[int]:
        return [d for d in self.D.diagonal() if d != 0]


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    """Return (U, D, V) with U @ m @ V == D diagonal, d_1 | d_2 | ..., d_t >= 0."""
    r, c = m.rows, m.cols
    a = m.tolist()
    u = IntegerMatrix.identity(r).tolist()
    v = IntegerMatrix.identity(c).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, r) for j in range(t, c) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            rest = [(abs(a[i][t]), i, "r") for i in range(t + 1, r) if a[i][t]]
            rest += [(abs(a[t][j]), j, "c") for j in range(t + 1, c) if a[t][j]]
            if rest:
                # a remainder smaller than the pivot becomes the new pivot
                _, k, where = min(rest)
                swap_rows(t, k) if where == "r" else swap_cols(t, k)
                continue
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SmithForm(IntegerMatrix.from_rows(u, r), IntegerMatrix.from_rows(a, c),
                     IntegerMatrix.from_rows(v, c))
