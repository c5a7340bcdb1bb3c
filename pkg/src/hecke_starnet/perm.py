"""
Permutations of [n] in one-line notation.

Product convention: ``(uv)(i) = v(u(i))``, i.e. apply u first, then v. In word
form ``compose(u, v)[i] = v[u[i]]``. With this convention

* right multiplication ``w * s_i`` swaps the *values* i and i+1 in the word
  of w, left multiplication ``s_i * w`` swaps the *positions* i and i+1;
* minimal representatives of the right cosets of a Young subgroup are the
  words that increase inside each block;
* path-family types compose left to right along a concatenated network.

Values are 1-based, matching one-line notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .errors import InputError, SizeMismatch

__all__ = [
    "Perm",
    "Interval",
    "Partition",
    "identity",
    "compose",
    "length",
    "bruhat_leq",
    "interval_subgroup",
    "reversal",
    "left_coset_factor",
    "young_subgroup",
    "young_min_reps",
    "young_factor",
    "ordered_set_partitions",
    "u_of_partition",
    "avoids_3412_4231",
    "all_perms",
    "generator",
]


class Perm(tuple):
    """A permutation stored as its one-line word ``(w_1, ..., w_n)``."""

    __slots__ = ()

    def __new__(cls, word: Sequence[int] | str):
        if isinstance(word, str):
            word = _parse_word(word)
        w = tuple(int(x) for x in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise InputError(f"{w} is not a permutation of 1..{len(w)}")
        return tuple.__new__(cls, w)

    @classmethod
    def _trusted(cls, word) -> Perm:
        return tuple.__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Perm) -> Perm:  # type: ignore[override]
        return compose(self, other)

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x - 1] = i + 1
        return Perm._trusted(inv)

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self))

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(str(x) for x in self)
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Perm('{self}')"


def _parse_word(s: str) -> list[int]:
    s = s.strip()
    if "," in s:
        return [int(x) for x in s.split(",")]
    return [int(ch) for ch in s]


def identity(n: int) -> Perm:
    return Perm._trusted(range(1, n + 1))


def generator(i: int, n: int) -> Perm:
    """The adjacent transposition s_i in S_n."""
    if not 1 <= i < n:
        raise InputError(f"generator index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Perm._trusted(w)


def all_perms(n: int) -> Iterator[Perm]:
    for w in itertools.permutations(range(1, n + 1)):
        yield Perm._trusted(w)


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """(uv)(i) = v(u(i))."""
    if len(u) != len(v):
        raise SizeMismatch(f"cannot compose permutations of sizes {len(u)} and {len(v)}")
    return Perm._trusted(v[x - 1] for x in u)


def length(w: Sequence[int]) -> int:
    """Number of inversions of the word."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def bruhat_leq(v: Sequence[int], w: Sequence[int]) -> bool:
    """Tableau criterion: every sorted prefix of v is entrywise <= that of w."""
    if len(v) != len(w):
        raise SizeMismatch("Bruhat comparison needs equal sizes")
    for i in range(1, len(v)):
        a = sorted(v[:i])
        b = sorted(w[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


@dataclass(frozen=True, order=True)
class Interval:
    """The subinterval [a, b] of [n]."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        if not (1 <= self.a <= self.b <= self.n):
            raise InputError(f"invalid interval [{self.a},{self.b}] in [1,{self.n}]")

    def __contains__(self, i: int) -> bool:
        return self.a <= i <= self.b

    def __len__(self) -> int:
        return self.b - self.a + 1

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] | str):
        if isinstance(parts, str):
            try:
                parts = [int(x) for x in parts.split(",") if x.strip()]
            except ValueError as exc:
                raise InputError(f"malformed partition {parts!r}") from exc
        p = tuple(int(x) for x in parts)
        if not p:
            raise InputError("a partition needs at least one part")
        if any(x <= 0 for x in p):
            raise InputError(f"partition parts must be positive: {p}")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise InputError(f"{p} is not weakly decreasing")
        return tuple.__new__(cls, p)

    @property
    def n(self) -> int:
        return sum(self)

    def transpose(self) -> Partition:
        return Partition([sum(1 for x in self if x > k) for k in range(self[0])])

    def blocks(self) -> list[range]:
        """Position ranges (1-based) of the consecutive blocks."""
        out = []
        start = 1
        for part in self:
            out.append(range(start, start + part))
            start += part
        return out

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, cap), 0, -1):
            for rest in rec(rem - k, k):
                yield (k,) + rest

    for p in rec(n, n):
        yield Partition(p)


__all__.append("partitions_of")


def interval_subgroup(J: Interval) -> Iterator[Perm]:
    """The (b-a+1)! permutations fixing every point outside [a, b], lexicographically."""
    head = tuple(range(1, J.a))
    tail = tuple(range(J.b + 1, J.n + 1))
    for mid in itertools.permutations(range(J.a, J.b + 1)):
        yield Perm._trusted(head + mid + tail)


def reversal(J: Interval) -> Perm:
    head = tuple(range(1, J.a))
    tail = tuple(range(J.b + 1, J.n + 1))
    return Perm._trusted(head + tuple(range(J.b, J.a - 1, -1)) + tail)


def left_coset_factor(w: Sequence[int], J: Interval) -> tuple[Perm, Perm]:
    """Factor w = w_minus * w_star with w_star in S_J and w_minus minimal.

    w_minus carries the values a..b in increasing positional order.
    """
    if len(w) != J.n:
        raise SizeMismatch("permutation and interval live in different S_n")
    pos = [i for i, x in enumerate(w) if J.a <= x <= J.b]
    wm = list(w)
    for k, i in enumerate(pos):
        wm[i] = J.a + k
    ws = list(range(1, J.n + 1))
    for i, x in enumerate(wm):
        ws[x - 1] = w[i]
    return Perm._trusted(wm), Perm._trusted(ws)


def young_subgroup(lam: Partition) -> Iterator[Perm]:
    """Elements of S_lambda, product of the block interval subgroups."""
    blocks = lam.blocks()
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        yield Perm._trusted(x for part in parts for x in part)


def ordered_set_partitions(lam: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered set partitions (I_1, ..., I_r) of [n] with |I_k| = lam_k.

    Each block is returned sorted.
    """
    n = lam.n

    def rec(k, remaining):
        if k == len(lam):
            yield ()
            return
        for block in itertools.combinations(remaining, lam[k]):
            rest = tuple(x for x in remaining if x not in block)
            for tail in rec(k + 1, rest):
                yield (block,) + tail

    yield from rec(0, tuple(range(1, n + 1)))


def u_of_partition(I: Sequence[Sequence[int]]) -> Perm:
    """Minimal right-coset representative whose k-th block is sorted I_k."""
    return Perm._trusted(x for block in I for x in sorted(block))


def young_min_reps(lam: Partition) -> Iterator[Perm]:
    """Words that increase within each block of lam."""
    for I in ordered_set_partitions(lam):
        yield u_of_partition(I)


def young_factor(w: Sequence[int], lam: Partition) -> tuple[Perm, Perm]:
    """Factor w = w_circ * w_min with w_circ in S_lambda and w_min block-increasing."""
    if lam.n != len(w):
        raise SizeMismatch(f"partition of {lam.n} used with S_{len(w)}")
    wmin = list(w)
    wcirc = [0] * len(w)
    for block in lam.blocks():
        idx = [i - 1 for i in block]
        vals = sorted(w[i] for i in idx)
        for i, x in zip(idx, vals):
            wmin[i] = x
        where = {x: i for i, x in zip(idx, vals)}
        for i in idx:
            wcirc[i] = where[w[i]] + 1
    return Perm._trusted(wcirc), Perm._trusted(wmin)


def multinomial(lam: Sequence[int]) -> int:
    out = factorial(sum(lam))
    for x in lam:
        out //= factorial(x)
    return out


__all__.append("multinomial")

_PATTERNS = ((3, 4, 1, 2), (4, 2, 3, 1))


def avoids_3412_4231(w: Sequence[int]) -> bool:
    for sub in itertools.combinations(w, 4):
        order = tuple(sorted(sub).index(x) + 1 for x in sub)
        if order in _PATTERNS:
            return False
    return True
