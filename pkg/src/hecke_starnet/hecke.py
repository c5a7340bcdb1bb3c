"""
The type A Hecke algebra H_n(q) in its natural basis {T_w}.

Normalization: ``T_s^2 = (q - 1) T_s + q T_e``. Right multiplication by a
generator follows

    T_w T_{s_i} = T_{w s_i}                      if l(w s_i) > l(w)
                = (q - 1) T_w + q T_{w s_i}      otherwise

with ``w s_i`` the word of w with values i and i+1 exchanged (see ``perm`` for
the product convention). General products split each right factor into
generators along a reduced word built from right descents, memoizing partial
products so every prefix is computed once.

Kazhdan-Lusztig elements appear only where all KL polynomials are 1: the
reversal elements ``C_{s_J} = sum_{w in S_J} T_w`` and, more generally,
``C_w = sum_{v <= w} T_v`` for w avoiding 3412 and 4231.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .errors import InputError, PatternNotAvoided, SizeMismatch, ZeroG
from .laurent import ONE, ZERO, LaurentPoly
from .perm import (
    Partition,
    Interval,
    Perm,
    all_perms,
    avoids_3412_4231,
    bruhat_leq,
    identity,
    interval_subgroup,
    length,
    young_factor,
    young_min_reps,
)

__all__ = [
    "HeckeElt",
    "LinearFunctional",
    "mul_right_gen",
    "hecke_mul",
    "kl_reversal",
    "kl_smooth",
    "product_of_reversals",
    "apply_functional",
    "induced_sign_char",
    "sign_character_table",
    "verify_kl_factorization",
]

_Q = LaurentPoly.q()
_QM1 = _Q - 1


class HeckeElt:
    """Sparse linear combination of natural basis elements."""

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs: Mapping[Perm, LaurentPoly] | None = None):
        self.n = n
        self._c: dict[Perm, LaurentPoly] = {}
        for w, c in (coeffs or {}).items():
            if len(w) != n:
                raise SizeMismatch(f"basis element {w} is not in S_{n}")
            c = LaurentPoly.coerce(c)
            if c:
                self._c[Perm(w) if not isinstance(w, Perm) else w] = c

    @classmethod
    def _raw(cls, n: int, coeffs: dict) -> HeckeElt:
        obj = cls.__new__(cls)
        obj.n = n
        obj._c = coeffs
        return obj

    @classmethod
    def basis(cls, w: Perm) -> HeckeElt:
        return cls._raw(len(w), {w: ONE})

    @classmethod
    def one(cls, n: int) -> HeckeElt:
        return cls.basis(identity(n))

    @classmethod
    def zero(cls, n: int) -> HeckeElt:
        return cls._raw(n, {})

    def coeff(self, w: Perm) -> LaurentPoly:
        return self._c.get(w, ZERO)

    def items(self):
        return self._c.items()

    def support(self) -> list[Perm]:
        return sorted(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __add__(self, other: HeckeElt) -> HeckeElt:
        _same_n(self, other)
        out = dict(self._c)
        for w, c in other._c.items():
            _accumulate(out, w, c)
        return HeckeElt._raw(self.n, out)

    def __sub__(self, other: HeckeElt) -> HeckeElt:
        return self + other.scale(-1)

    def scale(self, s) -> HeckeElt:
        s = LaurentPoly.coerce(s)
        if not s:
            return HeckeElt.zero(self.n)
        return HeckeElt._raw(self.n, {w: c * s for w, c in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hecke_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for w in sorted(self._c):
            name = "T_e" if w.is_identity() else f"T_{w}"
            parts.append(f"({self._c[w]})*{name}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"perm": list(w), "poly": self._c[w].to_json()} for w in sorted(self._c)],
        }

    @classmethod
    def from_json(cls, data: dict) -> HeckeElt:
        n = int(data["n"])
        coeffs: dict[Perm, LaurentPoly] = {}
        for t in data["terms"]:
            coeffs[Perm(t["perm"])] = LaurentPoly.from_json(t["poly"])
        return cls(n, coeffs)


def _same_n(a, b) -> None:
    if a.n != b.n:
        raise SizeMismatch(f"operands live in H_{a.n} and H_{b.n}")


def _accumulate(out: dict, w, c: LaurentPoly) -> None:
    s = out.get(w)
    s = c if s is None else s + c
    if s:
        out[w] = s
    else:
        out.pop(w, None)


def _times_gen(w: Perm, i: int) -> tuple[Perm, bool]:
    """(w s_i, whether the length goes up)."""
    lst = list(w)
    a = lst.index(i)
    b = lst.index(i + 1)
    lst[a], lst[b] = i + 1, i
    return Perm._trusted(lst), a < b


def mul_right_gen(h: HeckeElt, i: int) -> HeckeElt:
    """h * T_{s_i}."""
    if not 1 <= i < h.n:
        raise InputError(f"generator index {i} out of range for n={h.n}")
    out: dict[Perm, LaurentPoly] = {}
    for w, c in h._c.items():
        ws, up = _times_gen(w, i)
        if up:
            _accumulate(out, ws, c)
        else:
            _accumulate(out, w, c * _QM1)
            _accumulate(out, ws, c * _Q)
    return HeckeElt._raw(h.n, out)


def right_descent(w: Perm) -> int | None:
    """Smallest i with l(w s_i) < l(w), i.e. value i+1 sits left of value i."""
    pos = [0] * (len(w) + 1)
    for k, x in enumerate(w):
        pos[x] = k
    for i in range(1, len(w)):
        if pos[i + 1] < pos[i]:
            return i
    return None


def reduced_word(w: Perm) -> list[int]:
    """A reduced word i_1 ... i_l with w = s_{i_1} ... s_{i_l}."""
    word: list[int] = []
    while True:
        i = right_descent(w)
        if i is None:
            return word[::-1]
        word.append(i)
        w, _ = _times_gen(w, i)


def hecke_mul(h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
    """The product h1 * h2."""
    _same_n(h1, h2)
    memo: dict[Perm, HeckeElt] = {identity(h1.n): h1}

    def times_basis(v: Perm) -> HeckeElt:
        got = memo.get(v)
        if got is not None:
            return got
        i = right_descent(v)
        prefix, _ = _times_gen(v, i)
        got = mul_right_gen(times_basis(prefix), i)
        memo[v] = got
        return got

    out: dict[Perm, LaurentPoly] = {}
    for v in sorted(h2._c, key=length):
        c = h2._c[v]
        for w, a in times_basis(v)._c.items():
            _accumulate(out, w, a * c)
    return HeckeElt._raw(h1.n, out)


def kl_reversal(J: Interval) -> HeckeElt:
    """C_{s_J}: every element of S_J with coefficient 1."""
    return HeckeElt._raw(J.n, {w: ONE for w in interval_subgroup(J)})


def kl_smooth(w: Perm) -> HeckeElt:
    """C_w = sum_{v <= w} T_v, valid when w avoids 3412 and 4231."""
    if not avoids_3412_4231(w):
        raise PatternNotAvoided(f"{w} contains 3412 or 4231")
    return HeckeElt._raw(len(w), {v: ONE for v in all_perms(len(w)) if bruhat_leq(v, w)})


def product_of_reversals(net) -> HeckeElt:
    """C_{s_{J_1}} ... C_{s_{J_m}}, multiplied left to right."""
    h = HeckeElt.one(net.n)
    for J in net.intervals:
        if len(J) > 1:
            h = hecke_mul(h, kl_reversal(J))
    return h


class LinearFunctional:
    """theta: H_n(q) -> Z[q^{1/2}, q^{-1/2}], given by its values on T_w (default 0)."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping[Perm, LaurentPoly] | None = None):
        self.n = n
        self.values: dict[Perm, LaurentPoly] = {}
        for w, c in (values or {}).items():
            if len(w) != n:
                raise SizeMismatch(f"{w} is not in S_{n}")
            c = LaurentPoly.coerce(c)
            if c:
                self.values[Perm(w)] = c

    def __call__(self, w: Perm) -> LaurentPoly:
        return self.values.get(w, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearFunctional):
            return NotImplemented
        return self.n == other.n and self.values == other.values


def apply_functional(theta: LinearFunctional, h: HeckeElt) -> LaurentPoly:
    _same_n(theta, h)
    total = ZERO
    for w, c in h.items():
        t = theta.values.get(w)
        if t is not None:
            total = total + t * c
    return total


@lru_cache(maxsize=None)
def sign_character_table(lam: Partition) -> LinearFunctional:
    """Values of the induced sign character on every T_w.

    The induced module is realized as sgn (x) H_n over H_lambda, a right module
    with basis T_u for u the block-increasing words. T_u * T_w is expanded in
    the natural basis and each T_x with x = x_circ * x_min is sent to
    (-1)^{l(x_circ)} T_{x_min}; the trace collects the T_u -> T_u entries.
    """
    n = lam.n
    reps = list(young_min_reps(lam))
    proj: dict[Perm, tuple[Perm, int]] = {}
    for x in all_perms(n):
        xc, xm = young_factor(x, lam)
        proj[x] = (xm, -1 if length(xc) % 2 else 1)
    table: dict[Perm, LaurentPoly] = {}
    for u in reps:
        memo: dict[Perm, HeckeElt] = {identity(n): HeckeElt.basis(u)}
        # every w is reached from a shorter prefix, so iterate by length
        for w in sorted(all_perms(n), key=length):
            if w not in memo:
                i = right_descent(w)
                prefix, _ = _times_gen(w, i)
                memo[w] = mul_right_gen(memo[prefix], i)
            acc = ZERO
            for x, c in memo[w].items():
                xm, sgn = proj[x]
                if xm == u:
                    acc = acc + (c if sgn > 0 else -c)
            if acc:
                table[w] = table.get(w, ZERO) + acc
    return LinearFunctional(n, table)


def induced_sign_char(lam: Partition, h: HeckeElt) -> LaurentPoly:
    """The induced sign character of H_n(q) evaluated at h."""
    lam = Partition(lam)
    if lam.n != h.n:
        raise SizeMismatch(f"partition of {lam.n} applied to an element of H_{h.n}")
    return apply_functional(sign_character_table(lam), h)


def verify_kl_factorization(w: Perm, g, net) -> bool:
    """Whether g(q) C_w equals the product of the network's reversal elements."""
    g = LaurentPoly.coerce(g)
    if not g:
        raise ZeroG("g(q) must be nonzero")
    if len(w) != net.n:
        raise SizeMismatch("permutation and network sizes differ")
    return product_of_reversals(net) == kl_smooth(w).scale(g)
