"""
Weighted path matrices of star networks and the evaluation map sigma_B.

Edges entering the center of star p from wire h carry z_{h,p,1}, edges leaving
it toward wire h carry z_{h,p,2}, all other edges carry 1. The letters
quasi-commute: two letters with equal (p, k) pick up a factor q^{1/2} when the
one with the larger h is moved to the right of the smaller one, all other pairs
commute. z_G is the product of every letter in lexicographic order of (h, p, k).

sigma_B(x^{e,v}) is the coefficient of z_G in b_{1,v_1} ... b_{n,v_n}. Only
choices of one path per row that use each letter exactly once can contribute,
so the expansion is a depth-first search over rows with a bitmask of used
letters: a branch is cut as soon as a letter would repeat. The q-power of a
surviving choice is accumulated incrementally, one inversion per earlier letter
with the same (p, k) and a larger h.

This route never looks at covering families, so it is an independent check on
``sigma_comb``, which sums q^{cross/2 + incross} over families directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .errors import SizeMismatch
from .laurent import ZERO, LaurentPoly, half_power
from .perm import Perm, compose
from .qmatrix import XMonomial, straighten
from .starnet import StarNetwork, covering_families, cross_stat
from .tableaux import incross_stat, make_row_tableau

__all__ = [
    "Letter",
    "ZWord",
    "zg_normalize",
    "zg_letters",
    "path_matrix",
    "sigma_e",
    "sigma_table",
    "sigma_general",
    "sigma_comb",
]

Letter = tuple[int, int, int]  # (h, p, k)


@dataclass(frozen=True)
class ZWord:
    letters: tuple[Letter, ...] = ()
    scalar: LaurentPoly = LaurentPoly.const(1)

    def __mul__(self, other: ZWord) -> ZWord:
        return ZWord(self.letters + other.letters, self.scalar * other.scalar)

    def __str__(self) -> str:
        body = "*".join(f"z[{h},{p},{k}]" for h, p, k in self.letters) or "1"
        return body if self.scalar == 1 else f"({self.scalar})*{body}"


def _inversions(letters: tuple[Letter, ...]) -> int:
    inv = 0
    for a in range(len(letters)):
        ha, pa, ka = letters[a]
        for b in range(a + 1, len(letters)):
            hb, pb, kb = letters[b]
            if pa == pb and ka == kb and ha > hb:
                inv += 1
    return inv


def zg_normalize(w: ZWord) -> ZWord:
    """Sort letters lexicographically, folding q^{1/2} per same-(p,k) disorder into the scalar."""
    return ZWord(tuple(sorted(w.letters)), w.scalar * half_power(_inversions(w.letters)))


def zg_letters(net: StarNetwork) -> tuple[Letter, ...]:
    """The letters of z_G in lexicographic order."""
    return tuple(sorted(
        (h, p, k)
        for p, J in enumerate(net.intervals, start=1)
        for h in range(J.a, J.b + 1)
        for k in (1, 2)
    ))


@lru_cache(maxsize=None)
def _paths(net: StarNetwork) -> dict[tuple[int, int], tuple[tuple[Letter, ...], ...]]:
    # states: current wire -> list of letter words, built one star at a time
    out: dict[tuple[int, int], list] = {}
    for i in range(1, net.n + 1):
        states: list[tuple[int, tuple[Letter, ...]]] = [(i, ())]
        for p, J in enumerate(net.intervals, start=1):
            nxt = []
            for wire, word in states:
                if J.a <= wire <= J.b:
                    for h in range(J.a, J.b + 1):
                        nxt.append((h, word + ((wire, p, 1), (h, p, 2))))
                else:
                    nxt.append((wire, word))
            states = nxt
        for wire, word in states:
            out.setdefault((i, wire), []).append(word)
    return {key: tuple(v) for key, v in out.items()}


def path_matrix(net: StarNetwork) -> list[list[list[ZWord]]]:
    """``B[i-1][j-1]`` lists the weights of all paths from source i to sink j."""
    paths = _paths(net)
    n = net.n
    return [
        [[ZWord(word) for word in paths.get((i, j), ())] for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def _bit(letter: Letter, n: int) -> int:
    h, p, k = letter
    return 1 << (((p - 1) * 2 + (k - 1)) * n + (h - 1))


def _greater_mask(letter: Letter, n: int) -> int:
    # bits of letters with the same (p, k) and a larger h
    h, p, k = letter
    base = ((p - 1) * 2 + (k - 1)) * n
    return sum(1 << (base + g - 1) for g in range(h + 1, n + 1))


@lru_cache(maxsize=None)
def _encoded(net: StarNetwork):
    """Per (source, sink): tuples (letter mask, greater masks) for each path."""
    n = net.n
    enc = {}
    for key, words in _paths(net).items():
        enc[key] = tuple(
            (
                sum(_bit(x, n) for x in word),
                tuple(_greater_mask(x, n) for x in word),
            )
            for word in words
        )
    full = sum(_bit(x, n) for x in zg_letters(net))
    return enc, full


def _inv_against(used: int, greater: tuple[int, ...]) -> int:
    return sum(bin(used & g).count("1") for g in greater)


def sigma_e(net: StarNetwork, v: Perm) -> LaurentPoly:
    """sigma_B(x^{e,v}) by path choices, row by row."""
    n = net.n
    if len(v) != n:
        raise SizeMismatch(f"{v} is not in S_{n}")
    enc, full = _encoded(net)
    acc: dict[int, int] = {}

    def walk(row: int, used: int, inv: int) -> None:
        if row > n:
            if used == full:
                acc[inv] = acc.get(inv, 0) + 1
            return
        for mask, greater in enc.get((row, v[row - 1]), ()):
            if used & mask:
                continue
            walk(row + 1, used | mask, inv + _inv_against(used, greater))

    walk(1, 0, 0)
    return LaurentPoly(acc)


@lru_cache(maxsize=None)
def sigma_table(net: StarNetwork) -> Mapping[Perm, LaurentPoly]:
    """sigma_B(x^{e,v}) for every v with a nonzero value, in one search."""
    n = net.n
    enc, full = _encoded(net)
    by_source = [
        [(j, mask, greater) for j in range(1, n + 1) for mask, greater in enc.get((i, j), ())]
        for i in range(1, n + 1)
    ]
    acc: dict[tuple[int, ...], dict[int, int]] = {}
    sinks: list[int] = []

    def walk(row: int, used: int, inv: int) -> None:
        if row > n:
            if used == full:
                slot = acc.setdefault(tuple(sinks), {})
                slot[inv] = slot.get(inv, 0) + 1
            return
        for j, mask, greater in by_source[row - 1]:
            if used & mask or j in sinks:
                continue
            sinks.append(j)
            walk(row + 1, used | mask, inv + _inv_against(used, greater))
            sinks.pop()

    walk(1, 0, 0)
    return MappingProxyType({Perm._trusted(v): LaurentPoly(t) for v, t in acc.items()})


def sigma_general(net: StarNetwork, u: Perm, w: Perm) -> LaurentPoly:
    """sigma_B(x^{u,w}): straighten first, then substitute."""
    if len(u) != net.n or len(w) != net.n:
        raise SizeMismatch("u, w and the network must share n")
    table = sigma_table(net)
    total = ZERO
    for v, c in straighten(XMonomial.of(u, w)).coeffs.items():
        s = table.get(v)
        if s is not None:
            total = total + c * s
    return total


def sigma_comb(net: StarNetwork, u: Perm, w: Perm) -> LaurentPoly:
    """Sum over families of type u^{-1} w of q^{cross/2} q^{incross} of the row tableau on u."""
    if len(u) != net.n or len(w) != net.n:
        raise SizeMismatch("u, w and the network must share n")
    target = compose(Perm(u).inverse(), w)
    acc: dict[int, int] = {}
    for pf in covering_families(net):
        if pf.type != target:
            continue
        e = cross_stat(pf) + 2 * incross_stat(make_row_tableau(pf, u))
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)
