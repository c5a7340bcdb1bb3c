"""
Star networks and the path families that cover them.

A star network is a left-to-right concatenation of simple stars G_{[a,b]}:
wires a..b funnel through one interior vertex, all other wires run straight.
Because every center edge must be used exactly once, a covering path family
is the same thing as one permutation of the window [a_p, b_p] per star; that
tuple of local permutations is the stored representation. Trajectories,
intersections and statistics are derived from it.

An intersection is a triple (i, j, p): paths from sources i < j both pass the
center of star p. It is a crossing when their relative order on entry and on
exit differ, and defective when the same two paths crossed an odd number of
times at earlier stars.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InputError, NotIntersecting, SizeMismatch
from .hecke import HeckeElt, _accumulate
from .laurent import half_power
from .perm import Interval, Perm, interval_subgroup

__all__ = [
    "StarNetwork",
    "PathFamily",
    "IntersectionTriple",
    "parse_intervals",
    "covering_families",
    "family_type",
    "intersections",
    "cross_stat",
    "dfct_stat",
    "defect_expansion",
    "pair_between_count",
    "all_networks",
]


@dataclass(frozen=True)
class StarNetwork:
    n: int
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InputError("networks need n >= 1")
        ivs = tuple(self.intervals)
        for J in ivs:
            if J.n != self.n:
                raise SizeMismatch(f"interval {J} lives in [1,{J.n}], not [1,{self.n}]")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def of(cls, n: int, pairs: Sequence[tuple[int, int]]) -> StarNetwork:
        return cls(n, tuple(Interval(a, b, n) for a, b in pairs))

    @property
    def m(self) -> int:
        return len(self.intervals)

    def split(self, k: int) -> tuple[StarNetwork, StarNetwork]:
        """(first k stars, remaining stars)."""
        return StarNetwork(self.n, self.intervals[:k]), StarNetwork(self.n, self.intervals[k:])

    def __add__(self, other: StarNetwork) -> StarNetwork:
        if self.n != other.n:
            raise SizeMismatch("cannot concatenate networks of different sizes")
        return StarNetwork(self.n, self.intervals + other.intervals)

    def __str__(self) -> str:
        return ",".join(str(J) for J in self.intervals)


def parse_intervals(text: str, n: int) -> StarNetwork:
    """Parse ``"a-b,a-b,..."``; the empty string is the empty network."""
    text = text.strip()
    if not text:
        return StarNetwork(n, ())
    out = []
    for chunk in text.split(","):
        parts = chunk.strip().split("-")
        if len(parts) != 2:
            raise InputError(f"malformed interval {chunk!r}; expected a-b")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InputError(f"malformed interval {chunk!r}") from exc
        out.append(Interval(a, b, n))
    return StarNetwork(n, tuple(out))


def all_networks(n: int, m: int) -> Iterator[StarNetwork]:
    """Every sequence of m subintervals of [n] (trivial [a,a] included)."""
    ivs = [Interval(a, b, n) for a in range(1, n + 1) for b in range(a, n + 1)]
    for seq in itertools.product(ivs, repeat=m):
        yield StarNetwork(n, seq)


@dataclass(frozen=True)
class IntersectionTriple:
    i: int
    j: int
    p: int
    crossing: bool
    lower: int
    prior_crossings: int

    @property
    def kind(self) -> str:
        return "crossing" if self.crossing else "noncrossing"

    @property
    def upper(self) -> int:
        return self.j if self.lower == self.i else self.i

    @property
    def defective(self) -> bool:
        return self.prior_crossings % 2 == 1

    @property
    def proper(self) -> bool:
        return not self.defective


class PathFamily:
    """A covering path family, stored as one local permutation per star.

    ``locals[p-1]`` is an element of S_{J_p} written as a full word of length n.
    """

    __slots__ = ("network", "locals", "__dict__")

    def __init__(self, network: StarNetwork, local_perms: Sequence[Sequence[int]]):
        if len(local_perms) != network.m:
            raise InputError(f"expected {network.m} local permutations, got {len(local_perms)}")
        locs = []
        for J, w in zip(network.intervals, local_perms):
            w = w if isinstance(w, Perm) else Perm(w)
            if len(w) != network.n or any(w[i - 1] != i for i in range(1, network.n + 1) if i not in J):
                raise InputError(f"{w} is not an element of S_[{J.a},{J.b}]")
            locs.append(w)
        self.network = network
        self.locals = tuple(locs)

    @classmethod
    def _trusted(cls, network: StarNetwork, local_perms: tuple[Perm, ...]) -> PathFamily:
        pf = cls.__new__(cls)
        pf.network = network
        pf.locals = local_perms
        return pf

    @classmethod
    def from_windows(cls, network: StarNetwork, windows: Sequence[Sequence[int]]) -> PathFamily:
        """Build from window words: ``windows[p]`` lists the images of a_p..b_p."""
        full = []
        for J, win in zip(network.intervals, windows):
            if sorted(win) != list(range(J.a, J.b + 1)):
                raise InputError(f"window word {list(win)} is not a permutation of {J.a}..{J.b}")
            full.append(Perm(tuple(range(1, J.a)) + tuple(win) + tuple(range(J.b + 1, network.n + 1))))
        return cls(network, full)

    def windows(self) -> list[list[int]]:
        return [list(w[J.a - 1:J.b]) for J, w in zip(self.network.intervals, self.locals)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathFamily):
            return NotImplemented
        return self.network == other.network and self.locals == other.locals

    def __hash__(self) -> int:
        return hash((self.network, self.locals))

    def __repr__(self) -> str:
        return f"PathFamily({self.network}; {self.windows()})"

    @property
    def n(self) -> int:
        return self.network.n

    @cached_property
    def trajectory(self) -> tuple[tuple[int, ...], ...]:
        """``trajectory[p][i-1]``: wire of the path from source i after star p (p = 0..m)."""
        cur = tuple(range(1, self.n + 1))
        rows = [cur]
        for w in self.locals:
            cur = tuple(w[x - 1] for x in cur)
            rows.append(cur)
        return tuple(rows)

    @cached_property
    def type(self) -> Perm:
        return Perm._trusted(self.trajectory[-1])

    @cached_property
    def intersections(self) -> tuple[IntersectionTriple, ...]:
        out = []
        crossed: dict[tuple[int, int], int] = {}
        traj = self.trajectory
        for p, (J, w) in enumerate(zip(self.network.intervals, self.locals), start=1):
            before = traj[p - 1]
            inside = [i for i in range(1, self.n + 1) if J.a <= before[i - 1] <= J.b]
            here = []
            for i, j in itertools.combinations(inside, 2):
                ei, ej = before[i - 1], before[j - 1]
                li, lj = w[ei - 1], w[ej - 1]
                crossing = (ei < ej) != (li < lj)
                prior = crossed.get((i, j), 0)
                here.append(IntersectionTriple(i, j, p, crossing, i if ei < ej else j, prior))
            for t in here:
                if t.crossing:
                    crossed[(t.i, t.j)] = crossed.get((t.i, t.j), 0) + 1
            out.extend(here)
        return tuple(out)

    @cached_property
    def meets(self) -> frozenset[tuple[int, int]]:
        """Pairs (i, j), i < j, sharing at least one interior vertex."""
        return frozenset((t.i, t.j) for t in self.intersections)

    def through_center(self, p: int) -> list[int]:
        """Sources of the paths passing the center of star p."""
        J = self.network.intervals[p - 1]
        before = self.trajectory[p - 1]
        return [i for i in range(1, self.n + 1) if J.a <= before[i - 1] <= J.b]

    def restrict(self, k: int) -> tuple[PathFamily, PathFamily]:
        """Split into the families on the first k stars and on the rest."""
        g, h = self.network.split(k)
        return PathFamily(g, self.locals[:k]), PathFamily(h, self.locals[k:])

    def swap_terminal(self, i: int, j: int, p: int) -> PathFamily:
        """Exchange the parts of paths i and j after the center of star p."""
        before = self.trajectory[p - 1]
        J = self.network.intervals[p - 1]
        ei, ej = before[i - 1], before[j - 1]
        if not (J.a <= ei <= J.b and J.a <= ej <= J.b):
            raise NotIntersecting(f"paths {i} and {j} do not both pass star {p}")
        w = list(self.locals[p - 1])
        w[ei - 1], w[ej - 1] = w[ej - 1], w[ei - 1]
        locs = list(self.locals)
        locs[p - 1] = Perm._trusted(w)
        return PathFamily._trusted(self.network, tuple(locs))


def covering_families(net: StarNetwork) -> Iterator[PathFamily]:
    """All prod |J_p|! covering families; odometer order with the last star fastest."""
    per_star = [list(interval_subgroup(J)) for J in net.intervals]
    for locs in itertools.product(*per_star):
        yield PathFamily._trusted(net, locs)


def family_type(pf: PathFamily) -> Perm:
    return pf.type


def intersections(pf: PathFamily) -> list[IntersectionTriple]:
    return list(pf.intersections)


def cross_stat(pf: PathFamily) -> int:
    return sum(1 for t in pf.intersections if t.crossing)


def dfct_stat(pf: PathFamily) -> int:
    return sum(1 for t in pf.intersections if t.defective)


def defect_expansion(net: StarNetwork) -> HeckeElt:
    """sum over covering families of q^{dfct} T_{type}."""
    out: dict = {}
    for pf in covering_families(net):
        _accumulate(out, pf.type, half_power(2 * dfct_stat(pf)))
    return HeckeElt._raw(net.n, out)


def pair_between_count(pf: PathFamily, i: int, j: int, p: int) -> int:
    """Paths entering strictly between paths i and j at star p and leaving strictly between them."""
    inside = pf.through_center(p)
    if i not in inside or j not in inside or i == j:
        raise NotIntersecting(f"paths {i} and {j} do not meet at star {p}")
    before = pf.trajectory[p - 1]
    after = pf.trajectory[p]
    e_lo, e_hi = sorted((before[i - 1], before[j - 1]))
    l_lo, l_hi = sorted((after[i - 1], after[j - 1]))
    return sum(
        1
        for k in inside
        if k not in (i, j)
        and e_lo < before[k - 1] < e_hi
        and l_lo < after[k - 1] < l_hi
    )
