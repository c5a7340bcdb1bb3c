import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import networks, perms
from hecke_starnet.errors import SizeMismatch
from hecke_starnet.hecke import product_of_reversals
from hecke_starnet.laurent import ONE, ZERO, half_power
from hecke_starnet.perm import Interval, Perm, all_perms, compose, left_coset_factor, length
from hecke_starnet.starnet import StarNetwork, covering_families, parse_intervals
from hecke_starnet.zring import (
    ZWord,
    path_matrix,
    sigma_comb,
    sigma_e,
    sigma_general,
    sigma_table,
    zg_letters,
    zg_normalize,
)


def test_normalize_quasi_commutes():
    assert zg_normalize(ZWord(((2, 1, 1), (1, 1, 1)))) == ZWord(((1, 1, 1), (2, 1, 1)), half_power(1))
    # different (p, k) commute freely
    assert zg_normalize(ZWord(((2, 1, 2), (1, 1, 1)))) == ZWord(((1, 1, 1), (2, 1, 2)))
    w = ZWord(((3, 1, 1), (2, 1, 1), (1, 1, 1)))
    assert zg_normalize(w).scalar == half_power(3)
    assert str(ZWord()) == "1"


def test_letters_of_z_g():
    net = parse_intervals("1-2,2-3", 3)
    assert zg_letters(net) == ((1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 2, 2))


def test_path_matrix_entries():
    B = path_matrix(parse_intervals("2-4,1-3", 4))
    assert [str(z) for z in B[1][3]] == ["z[2,1,1]*z[4,1,2]"]
    # wire 1 misses the first star, then has three exits from the second
    assert [str(z) for z in B[0][0]] == ["z[1,2,1]*z[1,2,2]"]
    assert B[0][3] == []
    empty = path_matrix(StarNetwork(2, ()))
    assert [[len(e) for e in row] for row in empty] == [[1, 0], [0, 1]]


@given(networks(max_n=4, max_m=3))
def test_sigma_at_one_counts_families(net):
    # at q = 1 a letter-disjoint choice of paths is exactly a covering family
    total = sum(c.at_one() for c in sigma_table(net).values())
    assert total == sum(1 for _ in covering_families(net))


def test_sigma_e_examples(q):
    assert sigma_e(parse_intervals("2-4,1-3", 4), Perm("3412")) == q**2 + q**3
    assert sigma_e(parse_intervals("1-4", 4), Perm("3412")) == q**2
    assert sigma_e(parse_intervals("1-2", 3), Perm("132")) == ZERO
    with pytest.raises(SizeMismatch):
        sigma_general(parse_intervals("1-2", 3), Perm("12"), Perm("12"))


@settings(deadline=None)
@given(networks(max_n=4, max_m=3))
def test_coefficients_are_sigma_values(net):
    prod = product_of_reversals(net)
    table = sigma_table(net)
    for w in all_perms(net.n):
        assert prod.coeff(w).shift(length(w)) == table.get(w, ZERO)


@settings(max_examples=40, deadline=None)
@given(networks(max_n=3, max_m=2), st.data())
def test_general_equals_comb(net, data):
    u = data.draw(perms(net.n))
    w = data.draw(perms(net.n))
    assert sigma_general(net, u, w) == sigma_comb(net, u, w)


@settings(max_examples=25, deadline=None)
@given(networks(max_n=4, max_m=3), st.data())
def test_concatenation(net, data):
    if net.m < 2:
        return
    k = data.draw(st.integers(1, net.m - 1))
    u = data.draw(perms(net.n))
    w = data.draw(perms(net.n))
    left, right = net.split(k)
    total = ZERO
    for v in all_perms(net.n):
        total = total + sigma_comb(left, u, v) * sigma_comb(right, v, w)
    assert total == sigma_comb(net, u, w)


@pytest.mark.parametrize("J", [Interval(1, 2, 3), Interval(2, 4, 4), Interval(1, 3, 3)], ids=str)
def test_simple_star_values(J):
    net = StarNetwork(J.n, (J,))
    for u in all_perms(J.n):
        for w in all_perms(J.n):
            rel = compose(u.inverse(), w)
            inside = all(rel[i - 1] == i for i in range(1, J.n + 1) if i not in J)
            if inside:
                exp = length(left_coset_factor(u, J)[1]) + length(left_coset_factor(w, J)[1])
                assert sigma_general(net, u, w) == half_power(exp)
            else:
                assert sigma_general(net, u, w) == ZERO


def test_sigma_table_is_read_only():
    table = sigma_table(parse_intervals("1-2", 2))
    assert table[Perm("12")] == ONE
    with pytest.raises(TypeError):
        table[Perm("21")] = ONE
