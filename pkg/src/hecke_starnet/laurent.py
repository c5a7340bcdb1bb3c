"""
Exact Laurent polynomials in q^{1/2}.

Every coefficient in this package lives in Z[q^{1/2}, q^{-1/2}]. Exponents are
stored in units of v = q^{1/2} as plain integers, so ``vexp=3`` means q^{3/2}
and no half-integer arithmetic ever happens downstream. Coefficients are Python
ints, which never overflow.

>>> q = LaurentPoly.q()
>>> (1 + q) * (1 + q)
1 + 2*q + q^2
>>> half_power(-5)
q^(-5/2)
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

from .errors import InexactDivision, InputError

__all__ = [
    "LaurentPoly",
    "InexactDivision",
    "half_power",
    "classify",
    "ZERO",
    "ONE",
]


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable element of Z[v, v^{-1}] with v = q^{1/2}.

    ``terms`` maps vexp -> nonzero integer coefficient.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("vexp and coeff must be integers")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, vexp: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({vexp: coeff} if coeff else {})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls._raw({2: 1})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({e + ea: c * ca for e, c in b.items()})
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({-e * (-k): c ** (-k)})
            raise ValueError("only unit monomials have negative powers")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, dv: int) -> LaurentPoly:
        """Multiply by v^dv = q^{dv/2}."""
        if not dv:
            return self
        return LaurentPoly._raw({e + dv: c for e, c in self._terms.items()})

    def min_vexp(self) -> int:
        return min(self._terms)

    def max_vexp(self) -> int:
        return max(self._terms)

    def at_one(self) -> int:
        """Specialize q^{1/2} = 1."""
        return sum(self._terms.values())

    def exact_div(self, g: LaurentPoly) -> LaurentPoly:
        """Return h with h * g == self, or raise InexactDivision.

        Candidate quotient by leading-term elimination; exactness is then
        confirmed by multiplying back.
        """
        g = LaurentPoly.coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        gtop = g.max_vexp()
        gc = g._terms[gtop]
        glow = g.min_vexp()
        rem = self
        quot: dict[int, int] = {}
        while rem:
            top = rem.max_vexp()
            if top - gtop < self.min_vexp() - glow:
                break
            c, r = divmod(rem._terms[top], gc)
            if r:
                break
            quot[top - gtop] = c
            rem = rem - g.shift(top - gtop) * c
        h = LaurentPoly(quot)
        if h * g != self:
            raise InexactDivision(f"{self} is not divisible by {g}")
        return h

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mono = _render_power(e)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Read the format produced by ``str``, e.g. ``"1 + q"`` or ``"-q^(-1/2) + 2*q^3"``."""
        s = text.replace(" ", "")
        if not s:
            raise InputError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        acc: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise InputError(f"cannot parse polynomial {text!r} near {s[pos:]!r}")
            sign, coeff, var, exp = m.group("sign", "coeff", "var", "exp")
            if coeff is None and var is None:
                raise InputError(f"cannot parse polynomial {text!r}")
            c = int(coeff) if coeff is not None else 1
            if var is None:
                vexp = 0
            elif exp is None:
                vexp = 2
            else:
                vexp = _parse_exponent(exp, text)
            acc[vexp] = acc.get(vexp, 0) + (-c if sign == "-" else c)
            pos = m.end()
        return cls(acc)

    def to_json(self) -> dict:
        return {"terms": [{"vexp": e, "coeff": c} for e, c in sorted(self._terms.items())]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls((int(t["vexp"]), int(t["coeff"])) for t in data["terms"])


_TERM = re.compile(
    r"(?P<sign>[+-])(?:(?P<coeff>\d+)\*?)?(?P<var>q(?:\^(?P<exp>\(-?\d+(?:/\d+)?\)|-?\d+))?)?"
)


def _parse_exponent(exp: str, text: str) -> int:
    body = exp.strip("()")
    num, _, den = body.partition("/")
    if den and den not in ("1", "2"):
        raise InputError(f"exponent {exp} in {text!r} is not a multiple of 1/2")
    return int(num) * (1 if den == "2" else 2)


def _render_power(vexp: int) -> str:
    if vexp % 2:
        return f"q^({vexp}/2)"
    k = vexp // 2
    if k == 0:
        return "1"
    if k == 1:
        return "q"
    return f"q^{k}"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})


def half_power(k: int) -> LaurentPoly:
    """The monomial q^{k/2}."""
    return LaurentPoly._raw({k: 1})


def classify(a: LaurentPoly) -> tuple[bool, int]:
    """(is a genuine polynomial in q with nonnegative coefficients, value at q=1)."""
    nonneg = all(e % 2 == 0 and e >= 0 and c >= 0 for e, c in a.items())
    return nonneg, a.at_one()
