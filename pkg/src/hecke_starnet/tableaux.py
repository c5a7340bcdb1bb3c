"""
Tableaux filled with the paths of a covering family.

A tableau is stored as its columns, each a tuple of source indices listed
bottom to top. A single-row tableau of length n has n columns of height one;
a tableau of shape lambda^tr has columns of heights lambda_1 >= ... >= lambda_r.
The L-filling is the columns themselves, the R-filling replaces each source by
the sink of its path.

Column classes:

* column-closed: every column's sinks are a permutation of its sources;
* left column-strict: sources increase from bottom to top in every column;
* column-strict: left column-strict and no two paths of one column pass
  through a common star center.

The sign-reversing involution ``zeta_map`` acts on the set T_I of column-closed,
left column-strict tableaux whose k-th column holds the sources I_k. Its fixed
points are exactly the column-strict tableaux, which forces type e.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InputError, InvariantViolation, NotInTI
from .perm import Partition, Perm, ordered_set_partitions, u_of_partition
from .starnet import PathFamily, StarNetwork, covering_families

__all__ = [
    "GTableau",
    "make_row_tableau",
    "incross_stat",
    "cdncross_stat",
    "delta_map",
    "zeta_map",
    "ZetaStep",
    "y_of",
    "t_set",
    "enumerate_column_strict_type_e",
]


@dataclass(frozen=True)
class GTableau:
    family: PathFamily
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        seen = sorted(x for c in cols for x in c)
        if seen != list(range(1, self.family.n + 1)):
            raise InputError(f"columns {cols} do not hold each of 1..{self.family.n} once")

    @cached_property
    def column_of(self) -> dict[int, int]:
        return {src: k for k, col in enumerate(self.columns) for src in col}

    @property
    def shape(self) -> Partition:
        heights = sorted((len(c) for c in self.columns), reverse=True)
        return Partition(heights).transpose()

    def left_filling(self) -> tuple[tuple[int, ...], ...]:
        return self.columns

    def right_filling(self) -> tuple[tuple[int, ...], ...]:
        t = self.family.type
        return tuple(tuple(t[s - 1] for s in col) for col in self.columns)

    @property
    def column_closed(self) -> bool:
        return all(sorted(l) == sorted(r) for l, r in zip(self.columns, self.right_filling()))

    @property
    def left_column_strict(self) -> bool:
        return all(all(c[k] < c[k + 1] for k in range(len(c) - 1)) for c in self.columns)

    def column_meets(self, k: int) -> list[tuple[int, int]]:
        col = set(self.columns[k])
        return [pair for pair in self.family.meets if pair[0] in col and pair[1] in col]

    @property
    def column_strict(self) -> bool:
        if not self.left_column_strict:
            return False
        col = self.column_of
        return all(col[i] != col[j] for i, j in self.family.meets)

    def with_family(self, family: PathFamily) -> GTableau:
        if family.n != self.family.n:
            raise InputError("replacement family lives on a different number of wires")
        t = object.__new__(GTableau)
        object.__setattr__(t, "family", family)
        object.__setattr__(t, "columns", self.columns)
        return t

    def __str__(self) -> str:
        return "".join("[" + " ".join(str(x) for x in c) + "]" for c in self.columns)


def make_row_tableau(pf: PathFamily, u: Sequence[int]) -> GTableau:
    """U(pi, u, u*type): cell k holds the path from source u_k."""
    if len(u) != pf.n:
        raise InputError("row word has the wrong length")
    return GTableau(pf, tuple((x,) for x in u))


def incross_stat(t: GTableau) -> int:
    """Noncrossings whose upper path sits in a strictly earlier column than the lower one."""
    col = t.column_of
    return sum(
        1
        for tr in t.family.intersections
        if not tr.crossing and col[tr.upper] < col[tr.lower]
    )


def cdncross_stat(t: GTableau) -> int:
    """Defective noncrossings of two paths in the same column."""
    col = t.column_of
    return sum(
        1
        for tr in t.family.intersections
        if not tr.crossing and tr.defective and col[tr.i] == col[tr.j]
    )


def _check_partition(I: Sequence[Sequence[int]], n: int) -> Partition:
    lam = Partition([len(b) for b in I])
    if sorted(x for b in I for x in b) != list(range(1, n + 1)):
        raise InputError(f"{I} is not an ordered set partition of [{n}]")
    return lam


def delta_map(U: GTableau, I: Sequence[Sequence[int]]) -> GTableau:
    """Regroup the row tableau U(pi, u(I), y u(I)) into columns by the blocks of I."""
    n = U.family.n
    lam = _check_partition(I, n)
    if any(len(c) != 1 for c in U.columns):
        raise InputError("delta expects a single-row tableau")
    word = [c[0] for c in U.columns]
    u = u_of_partition(I)
    if tuple(word) != tuple(u):
        raise InputError(f"reading word {word} is not u(I) = {list(u)}")
    sinks = [U.family.type[s - 1] for s in word]
    cols = []
    for block in lam.blocks():
        src = tuple(word[i - 1] for i in block)
        if sorted(sinks[i - 1] for i in block) != sorted(src):
            raise InputError("sinks of a block are not a permutation of its sources")
        cols.append(src)
    return GTableau(U.family, tuple(cols))


def y_of(pf: PathFamily, I: Sequence[Sequence[int]]) -> Perm:
    """The y in S_lambda with R-filling y*u(I) when the columns are the blocks of I."""
    u = u_of_partition(I)
    pos = {x: k + 1 for k, x in enumerate(u)}
    y = Perm._trusted(pos[pf.type[s - 1]] for s in u)
    return y


def _in_t_set(W: GTableau, I: Sequence[Sequence[int]]) -> bool:
    return (
        len(W.columns) == len(I)
        and all(tuple(c) == tuple(sorted(b)) for c, b in zip(W.columns, I))
        and W.column_closed
    )


@dataclass(frozen=True)
class ZetaStep:
    """A non-fixed application of zeta, with the data its statistics depend on."""

    column: int
    star: int
    pair: tuple[int, int]
    pivot_crossing: bool
    pivot_defective: bool


def zeta_map(W: GTableau, I: Sequence[Sequence[int]]) -> tuple[GTableau, Perm, ZetaStep | None]:
    """Apply the involution zeta to W in T_I.

    Returns ``(zeta(W), y', step)``; ``step`` is None exactly at fixed points.
    """
    if not _in_t_set(W, I):
        raise NotInTI(f"{W} is not column-closed with columns {I}")
    pf = W.family
    if W.column_strict:
        return W, y_of(pf, I), None

    t = max(k for k in range(len(W.columns)) if W.column_meets(k))
    col = set(W.columns[t])
    p = max(
        tr.p for tr in pf.intersections if tr.i in col and tr.j in col
    )
    through = [s for s in pf.through_center(p) if s in col]
    if len(through) < 2:
        raise InvariantViolation("chosen star has fewer than two column paths")
    sink = {s: pf.type[s - 1] for s in through}
    # right-to-left lexicographic: largest sink first, then the next largest
    ranked = sorted(through, key=lambda s: sink[s], reverse=True)
    if len({sink[s] for s in ranked}) != len(ranked):
        raise InvariantViolation("tie among sink indices")
    a, b = ranked[1], ranked[0]
    pivot = next(
        tr for tr in pf.intersections if tr.p == p and {tr.i, tr.j} == {a, b}
    )
    new_pf = pf.swap_terminal(a, b, p)
    W2 = W.with_family(new_pf)
    step = ZetaStep(t, p, (min(a, b), max(a, b)), pivot.crossing, pivot.defective)
    return W2, y_of(new_pf, I), step


def t_set(net: StarNetwork, I: Sequence[Sequence[int]], families=None) -> Iterator[GTableau]:
    """All W in T_I over covering families of net."""
    cols = tuple(tuple(sorted(b)) for b in I)
    block_of = {x: k for k, b in enumerate(cols) for x in b}
    for pf in families if families is not None else covering_families(net):
        t = pf.type
        if all(block_of[t[s - 1]] == block_of[s] for s in range(1, net.n + 1)):
            yield GTableau(pf, cols)


def enumerate_column_strict_type_e(
    net: StarNetwork, lam: Partition
) -> Iterator[tuple[PathFamily, GTableau]]:
    """Pairs (type-e covering family, column-strict tableau of shape lam^tr over it)."""
    lam = Partition(lam)
    if lam.n != net.n:
        raise InputError(f"partition of {lam.n} used with a network on {net.n} wires")
    partitions = [tuple(tuple(sorted(b)) for b in I) for I in ordered_set_partitions(lam)]
    for pf in covering_families(net):
        if not pf.type.is_identity():
            continue
        meets = pf.meets
        for cols in partitions:
            block_of = {x: k for k, b in enumerate(cols) for x in b}
            if all(block_of[i] != block_of[j] for i, j in meets):
                yield pf, GTableau(pf, cols)

