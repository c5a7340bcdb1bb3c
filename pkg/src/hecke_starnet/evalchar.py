"""
Evaluating induced sign characters at products of reversal elements.

Three independent routes give the same polynomial:

* ``tableaux``: sum over type-e covering families and column-strict tableaux
  of shape lambda^tr of q^{cross/2 + incross}; no Hecke products needed.
* ``induced``: expand the product in the natural basis and apply the trace
  table of the induced sign character.
* ``sigma``: straighten the immanant generating function and evaluate it on
  the weighted path matrix.

The tableaux route is the default. Dividing by g(q) turns it into an
evaluation at a single KL basis element C_w whenever g(q) C_w is a product of
reversal elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FactorizationInvalid, InputError, InvariantViolation, SizeMismatch, ZeroG
from .hecke import (
    LinearFunctional,
    apply_functional,
    induced_sign_char,
    product_of_reversals,
    verify_kl_factorization,
)
from .laurent import ZERO, LaurentPoly, half_power
from .perm import Partition, Perm, identity
from .qmatrix import imm_epsilon, imm_theta
from .starnet import StarNetwork, cross_stat, parse_intervals
from .tableaux import enumerate_column_strict_type_e, incross_stat
from .zring import sigma_comb, sigma_table

__all__ = [
    "METHODS",
    "EvalRequest",
    "eval_epsilon",
    "eval_epsilon_kl",
    "eval_theta",
    "theta_via_sigma",
    "theta_via_sigma_comb",
    "KL_FIXTURES",
]

METHODS = ("tableaux", "induced", "sigma")


@dataclass(frozen=True)
class EvalRequest:
    n: int
    lam: Partition
    net: StarNetwork
    method: str = "tableaux"

    def __post_init__(self):
        lam = Partition(self.lam)
        object.__setattr__(self, "lam", lam)
        if lam.n != self.n:
            raise InputError(f"{lam} is not a partition of {self.n}")
        if self.net.n != self.n:
            raise SizeMismatch(f"network lives on {self.net.n} wires, not {self.n}")
        if self.method not in METHODS:
            raise InputError(f"unknown method {self.method!r}; choose from {', '.join(METHODS)}")


def _by_tableaux(net: StarNetwork, lam: Partition) -> LaurentPoly:
    acc: dict[int, int] = {}
    for pf, W in enumerate_column_strict_type_e(net, lam):
        e = cross_stat(pf) + 2 * incross_stat(W)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def _by_sigma(net: StarNetwork, lam: Partition) -> LaurentPoly:
    table = sigma_table(net)
    total = ZERO
    for v, c in imm_epsilon(lam).coeffs.items():
        s = table.get(v)
        if s is not None:
            total = total + c * s
    return total


def eval_epsilon(req: EvalRequest) -> LaurentPoly:
    if req.method == "tableaux":
        return _by_tableaux(req.net, req.lam)
    if req.method == "induced":
        return induced_sign_char(req.lam, product_of_reversals(req.net))
    return _by_sigma(req.net, req.lam)


def eval_epsilon_kl(w: Perm, g, net: StarNetwork, lam: Partition) -> LaurentPoly:
    """epsilon_q^lambda(C_w), given that g(q) C_w is the network's product."""
    g = LaurentPoly.coerce(g)
    if not g:
        raise ZeroG("g(q) must be nonzero")
    if not verify_kl_factorization(w, g, net):
        raise FactorizationInvalid(f"({g}) C_{w} is not the product over {net}")
    return _by_tableaux(net, Partition(lam)).exact_div(g)


def theta_via_sigma(net: StarNetwork, theta: LinearFunctional) -> LaurentPoly:
    """sigma_B applied to imm_theta, with sigma_B from path-matrix expansion."""
    table = sigma_table(net)
    total = ZERO
    for v, c in imm_theta(theta).coeffs.items():
        s = table.get(v)
        if s is not None:
            total = total + c * s
    return total


def theta_via_sigma_comb(net: StarNetwork, theta: LinearFunctional) -> LaurentPoly:
    """sigma_B applied to imm_theta, with sigma_B from path families."""
    e = identity(net.n)
    total = ZERO
    for v, c in imm_theta(theta).coeffs.items():
        total = total + c * sigma_comb(net, e, v)
    return total


def eval_theta(net: StarNetwork, theta: LinearFunctional, check: bool = False) -> LaurentPoly:
    """theta applied to the product of reversal elements.

    With ``check`` the value is recomputed through sigma_B and a mismatch
    raises InvariantViolation.
    """
    if theta.n != net.n:
        raise SizeMismatch("functional and network sizes differ")
    direct = apply_functional(theta, product_of_reversals(net))
    if check:
        other = theta_via_sigma(net, theta)
        if other != direct:
            raise InvariantViolation(f"direct {direct} but sigma route {other} on {net}")
    return direct


def _fixture(w: str, intervals: str, g: LaurentPoly) -> tuple[Perm, StarNetwork, LaurentPoly]:
    p = Perm(w)
    return p, parse_intervals(intervals, len(p)), g


_ONE_PLUS_Q = 1 + LaurentPoly.q()

# g(q) C_w equals the product of reversal elements for each entry below;
# every one is re-checked in the test suite.
KL_FIXTURES: tuple[tuple[Perm, StarNetwork, LaurentPoly], ...] = (
    _fixture("3421", "2-4,1-3", _ONE_PLUS_Q),
    _fixture("4312", "1-3,2-4", _ONE_PLUS_Q),
    _fixture("2341", "3-4,2-3,1-2", half_power(0)),
    _fixture("2413", "2-3,1-2,3-4", half_power(0)),
    _fixture("4132", "1-2,2-4", half_power(0)),
    _fixture("3142", "1-2,3-4,2-3", half_power(0)),
    _fixture("4321", "1-4", half_power(0)),
)
