"""
Degree-n monomials in the quantum matrix bialgebra A(n; q).

Only monomials x^{u,w} = x_{u_1,w_1} ... x_{u_n,w_n} with distinct rows and
distinct columns are handled. Their span has the basis {x^{e,v}}, reached by
sorting factors by row with adjacent rewrites. For rows i < j and columns
k < l the two relevant rules are

    x_{j,k} x_{i,l} = x_{i,l} x_{j,k}
    x_{j,l} x_{i,k} = x_{i,k} x_{j,l} + (q^{1/2} - q^{-1/2}) x_{i,l} x_{j,k}

and every rewrite lowers the number of row inversions by one, so sorting
terminates. Confluence is checked by the test suite with random rewrite orders.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import InputError, SizeMismatch
from .hecke import LinearFunctional
from .laurent import ONE, ZERO, LaurentPoly
from .perm import (
    Partition,
    Perm,
    all_perms,
    compose,
    length,
    ordered_set_partitions,
    young_min_reps,
    young_subgroup,
)

__all__ = [
    "XMonomial",
    "ImmanantVector",
    "straighten",
    "qdet_block",
    "imm_epsilon",
    "functional_from_immanant",
    "imm_theta",
]

# q^{1/2} - q^{-1/2}
_DIFF = LaurentPoly({1: 1, -1: -1})


@dataclass(frozen=True)
class XMonomial:
    """x_{r_1,c_1} ... x_{r_n,c_n}, factors in product order."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        fs = tuple((int(r), int(c)) for r, c in self.factors)
        n = len(fs)
        if sorted(r for r, _ in fs) != list(range(1, n + 1)):
            raise InputError(f"rows of {fs} are not a permutation of 1..{n}")
        if sorted(c for _, c in fs) != list(range(1, n + 1)):
            raise InputError(f"columns of {fs} are not a permutation of 1..{n}")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def of(cls, u: Sequence[int], w: Sequence[int]) -> XMonomial:
        if len(u) != len(w):
            raise SizeMismatch("row and column words differ in length")
        return cls(tuple(zip(u, w)))

    @property
    def n(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "".join(f"x{r}{c}" if self.n < 10 else f"x[{r},{c}]" for r, c in self.factors)


class ImmanantVector:
    """sum_v coeffs[v] x^{e,v}; zero coefficients are dropped."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Perm, LaurentPoly] | None = None):
        self.n = n
        self.coeffs: dict[Perm, LaurentPoly] = {}
        for v, c in (coeffs or {}).items():
            if len(v) != n:
                raise SizeMismatch(f"{v} is not in S_{n}")
            c = LaurentPoly.coerce(c)
            if c:
                self.coeffs[Perm(v)] = c

    def __getitem__(self, v: Perm) -> LaurentPoly:
        return self.coeffs.get(v, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImmanantVector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other: ImmanantVector) -> ImmanantVector:
        if self.n != other.n:
            raise SizeMismatch("immanant vectors of different sizes")
        out = dict(self.coeffs)
        for v, c in other.coeffs.items():
            out[v] = out.get(v, ZERO) + c
        return ImmanantVector(self.n, out)

    def scale(self, s) -> ImmanantVector:
        s = LaurentPoly.coerce(s)
        return ImmanantVector(self.n, {v: c * s for v, c in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({self.coeffs[v]})*x^(e,{v})" for v in sorted(self.coeffs))

    __repr__ = __str__


def _add_into(out: dict, key, c: LaurentPoly) -> None:
    s = out.get(key, ZERO) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def _descents(fs: tuple[tuple[int, int], ...]) -> list[int]:
    return [k for k in range(len(fs) - 1) if fs[k][0] > fs[k + 1][0]]


def _rewrite(fs: tuple, k: int) -> list[tuple[tuple, LaurentPoly]]:
    (r1, c1), (r2, c2) = fs[k], fs[k + 1]
    head, tail = fs[:k], fs[k + 2:]
    swapped = head + ((r2, c2), (r1, c1)) + tail
    if c1 < c2:
        return [(swapped, ONE)]
    extra = head + ((r2, c1), (r1, c2)) + tail
    return [(swapped, ONE), (extra, _DIFF)]


@lru_cache(maxsize=None)
def _normal_form(fs: tuple) -> tuple[tuple[Perm, LaurentPoly], ...]:
    ds = _descents(fs)
    if not ds:
        return ((Perm._trusted(c for _, c in fs), ONE),)
    out: dict[Perm, LaurentPoly] = {}
    for nxt, coef in _rewrite(fs, ds[0]):
        for v, c in _normal_form(nxt):
            _add_into(out, v, c * coef)
    return tuple(sorted(out.items()))


def _normal_form_random(fs: tuple, rng: random.Random) -> dict[Perm, LaurentPoly]:
    ds = _descents(fs)
    if not ds:
        return {Perm._trusted(c for _, c in fs): ONE}
    out: dict[Perm, LaurentPoly] = {}
    for nxt, coef in _rewrite(fs, rng.choice(ds)):
        for v, c in _normal_form_random(nxt, rng).items():
            _add_into(out, v, c * coef)
    return out


def straighten(m: XMonomial, rng: random.Random | None = None) -> ImmanantVector:
    """Expand x^{u,w} in the basis {x^{e,v}}.

    With ``rng`` the descent to rewrite is chosen at random at every step,
    which is how confluence is exercised; otherwise the leftmost descent is
    used and results are memoized.
    """
    if rng is None:
        return ImmanantVector(m.n, dict(_normal_form(m.factors)))
    return ImmanantVector(m.n, _normal_form_random(m.factors, rng))


def qdet_block(I: Sequence[int]) -> list[tuple[tuple[tuple[int, int], ...], LaurentPoly]]:
    """Terms of qdet(x_{I,I}) as (factor pairs, coefficient).

    The factors are index pairs rather than an XMonomial because a block is
    only part of a full degree-n monomial.
    """
    idx = sorted(int(i) for i in I)
    if not idx or len(set(idx)) != len(idx):
        raise InputError(f"block {list(I)} must be nonempty with distinct indices")
    sign = LaurentPoly({-1: -1})  # -q^{-1/2}
    out = []
    for v in all_perms(len(idx)):
        pairs = tuple((idx[k], idx[v[k] - 1]) for k in range(len(idx)))
        out.append((pairs, sign ** length(v)))
    return out


def _imm_epsilon_partitions(lam: Partition) -> dict[Perm, LaurentPoly]:
    out: dict[Perm, LaurentPoly] = {}
    for I in ordered_set_partitions(lam):
        terms = [((), ONE)]
        for block in I:
            terms = [(f + g, c * d) for f, c in terms for g, d in qdet_block(block)]
        for fs, c in terms:
            for v, a in _normal_form(fs):
                _add_into(out, v, a * c)
    return out


def _imm_epsilon_cosets(lam: Partition) -> dict[Perm, LaurentPoly]:
    out: dict[Perm, LaurentPoly] = {}
    ys = list(young_subgroup(lam))
    for u in young_min_reps(lam):
        for y in ys:
            ly = length(y)
            c = LaurentPoly({-ly: -1 if ly % 2 else 1})
            fs = tuple(zip(u, compose(y, u)))
            for v, a in _normal_form(fs):
                _add_into(out, v, a * c)
    return out


def imm_epsilon(lam: Partition, route: str = "partitions") -> ImmanantVector:
    """The generating function of the induced sign character, straightened.

    ``route="partitions"`` multiplies block quantum determinants over ordered
    set partitions; ``route="cosets"`` sums signed x^{u,yu} over minimal
    coset representatives u and Young subgroup elements y.
    """
    lam = Partition(lam)
    if route == "partitions":
        return ImmanantVector(lam.n, _imm_epsilon_partitions(lam))
    if route == "cosets":
        return ImmanantVector(lam.n, _imm_epsilon_cosets(lam))
    raise InputError(f"unknown route {route!r}")


def functional_from_immanant(v: ImmanantVector) -> LinearFunctional:
    return LinearFunctional(v.n, {w: c.shift(length(w)) for w, c in v.coeffs.items()})


def imm_theta(theta: LinearFunctional) -> ImmanantVector:
    return ImmanantVector(theta.n, {w: c.shift(-length(w)) for w, c in theta.values.items()})
