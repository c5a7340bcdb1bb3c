import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import networks
from hecke_starnet import evalchar
from hecke_starnet.errors import FactorizationInvalid, InputError, InvariantViolation, SizeMismatch, ZeroG
from hecke_starnet.evalchar import (
    KL_FIXTURES,
    METHODS,
    EvalRequest,
    eval_epsilon,
    eval_epsilon_kl,
    eval_theta,
    theta_via_sigma,
    theta_via_sigma_comb,
)
from hecke_starnet.hecke import (
    LinearFunctional,
    apply_functional,
    induced_sign_char,
    kl_smooth,
    product_of_reversals,
    verify_kl_factorization,
)
from hecke_starnet.laurent import ONE, ZERO
from hecke_starnet.perm import Partition, Perm, partitions_of
from hecke_starnet.starnet import parse_intervals
from hecke_starnet.verify import random_functional


def ev(n, lam, intervals, method="tableaux"):
    return eval_epsilon(EvalRequest(n, Partition(lam), parse_intervals(intervals, n), method))


@pytest.mark.parametrize("method", METHODS)
def test_two_wire_examples(method, q):
    assert ev(2, (2,), "1-2", method) == ZERO
    assert ev(2, (1, 1), "1-2", method) == 1 + q


@pytest.mark.parametrize("method", METHODS)
def test_headline_example(method, q):
    assert ev(4, (2, 1, 1), "1-2,2-4,1-2", method) == q + 3 * q**2 + 3 * q**3 + q**4


@settings(max_examples=40, deadline=None)
@given(networks(max_n=4, max_m=3), st.data())
def test_methods_agree(net, data):
    lam = data.draw(st.sampled_from(list(partitions_of(net.n))))
    values = {m: eval_epsilon(EvalRequest(net.n, lam, net, m)) for m in METHODS}
    assert len(set(values.values())) == 1
    assert all(c >= 0 for c in values["tableaux"].terms.values())


def test_request_validation():
    net = parse_intervals("1-2", 2)
    with pytest.raises(InputError):
        EvalRequest(2, Partition((2, 1)), net)
    with pytest.raises(SizeMismatch):
        EvalRequest(3, Partition((2, 1)), net)
    with pytest.raises(InputError):
        EvalRequest(2, Partition((2,)), net, "magic")


@pytest.mark.parametrize("w,net,g", KL_FIXTURES, ids=lambda x: str(x))
def test_kl_fixtures_factor(w, net, g):
    assert verify_kl_factorization(w, g, net)
    for lam in partitions_of(len(w)):
        value = eval_epsilon_kl(w, g, net, lam)
        assert value == induced_sign_char(lam, kl_smooth(w))


def test_kl_example(q):
    w, net, g = KL_FIXTURES[0]
    value = eval_epsilon_kl(w, g, net, Partition((1, 1, 1, 1)))
    assert value == 1 + 3 * q + 8 * q**2 + 8 * q**3 + 3 * q**4 + q**5


def test_kl_errors(q):
    net = parse_intervals("2-4,1-3", 4)
    with pytest.raises(ZeroG):
        eval_epsilon_kl(Perm("3421"), 0, net, Partition((4,)))
    with pytest.raises(FactorizationInvalid):
        eval_epsilon_kl(Perm("3421"), q, net, Partition((4,)))


def test_theta_example(q):
    net = parse_intervals("2-4,1-3", 4)
    theta = LinearFunctional(4, {Perm("3412"): ONE, Perm("4312"): -ONE})
    assert eval_theta(net, theta, check=True) == 1 + q
    assert theta_via_sigma(net, theta) == 1 + q
    assert theta_via_sigma_comb(net, theta) == 1 + q


def test_theta_mismatch_and_size(monkeypatch):
    net = parse_intervals("1-2", 2)
    theta = LinearFunctional(2, {Perm("21"): ONE})
    with pytest.raises(SizeMismatch):
        eval_theta(parse_intervals("1-2", 3), theta)
    monkeypatch.setattr(evalchar, "theta_via_sigma", lambda *_: ZERO)
    with pytest.raises(InvariantViolation):
        eval_theta(net, theta, check=True)


@settings(max_examples=30, deadline=None)
@given(networks(max_n=4, max_m=2), st.data())
def test_theta_routes_agree(net, data):
    theta = random_functional(net.n, random.Random(data.draw(st.integers(0, 10**6))))
    direct = apply_functional(theta, product_of_reversals(net))
    assert theta_via_sigma(net, theta) == direct == theta_via_sigma_comb(net, theta)
