"""
Verification harness: named suites of exact property checks.

Each suite turns its parameters into an ordered list of cases and a checker
that maps one case to ``(property, ok, detail)`` records. Cases may run in a
process pool (HECKE_STARNET_THREADS, 0 = one worker per CPU), but results are
folded back in case order, so reports are identical for any worker count.
Randomized cases draw from ``random.Random`` seeded with the suite name, the
user seed and the case index.

Random networks at n = max_n + 1 are drawn uniformly from all interval
sequences of length max_stars + 1 and redrawn while they have more than
MAX_RANDOM_FAMILIES covering families; exhaustive enumeration is otherwise
out of reach for sequences such as [1,5]^4.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .errors import InputError
from .evalchar import EvalRequest, eval_epsilon, theta_via_sigma
from .hecke import (
    HeckeElt,
    LinearFunctional,
    apply_functional,
    hecke_mul,
    kl_reversal,
    mul_right_gen,
    product_of_reversals,
    sign_character_table,
)
from .laurent import ZERO, LaurentPoly, classify, half_power
from .perm import (
    Interval,
    Partition,
    Perm,
    all_perms,
    compose,
    generator,
    left_coset_factor,
    length,
    ordered_set_partitions,
    partitions_of,
)
from .qmatrix import XMonomial, functional_from_immanant, imm_epsilon, imm_theta, straighten
from .starnet import (
    StarNetwork,
    all_networks,
    covering_families,
    cross_stat,
    defect_expansion,
    pair_between_count,
)
from .tableaux import cdncross_stat, incross_stat, t_set, y_of, zeta_map
from .zring import sigma_comb, sigma_general, sigma_table

__all__ = [
    "SUITES",
    "MAX_RANDOM_FAMILIES",
    "PropertyResult",
    "SuiteReport",
    "VerifyParams",
    "run_suite",
    "worker_count",
    "random_network",
]

MAX_RANDOM_FAMILIES = 20_000


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteReport:
    suite: str
    properties: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties.values())

    def record(self, name: str, ok: bool, detail: str) -> None:
        p = self.properties.setdefault(name, PropertyResult(name))
        if ok:
            p.passed += 1
        else:
            p.failed += 1
            if p.first_counterexample is None:
                p.first_counterexample = detail

    def lines(self) -> list[str]:
        out = []
        for p in self.properties.values():
            status = "PASS" if p.ok else "FAIL"
            line = f"{self.suite}.{p.name}: {status} ({p.passed} passed, {p.failed} failed)"
            if not p.ok:
                line += f" first counterexample: {p.first_counterexample}"
            out.append(line)
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "properties": [
                {
                    "name": p.name,
                    "passed": p.passed,
                    "failed": p.failed,
                    "first_counterexample": p.first_counterexample,
                }
                for p in self.properties.values()
            ],
        }


@dataclass(frozen=True)
class VerifyParams:
    max_n: int = 4
    max_stars: int = 3
    seed: int = 0
    samples: int = 20
    functionals: int = 50


Record = tuple[str, bool, str]


def worker_count() -> int:
    raw = os.environ.get("HECKE_STARNET_THREADS", "1").strip() or "1"
    try:
        k = int(raw)
    except ValueError as exc:
        raise InputError(f"HECKE_STARNET_THREADS must be an integer, got {raw!r}") from exc
    if k < 0:
        raise InputError("HECKE_STARNET_THREADS must be >= 0")
    return k or (os.cpu_count() or 1)


def _rng(suite: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{suite}:{seed}:{index}")


def family_count(net: StarNetwork) -> int:
    return math.prod(math.factorial(len(J)) for J in net.intervals)


def random_network(n: int, m: int, rng: random.Random, cap: int = MAX_RANDOM_FAMILIES) -> StarNetwork:
    ivs = [Interval(a, b, n) for a in range(1, n + 1) for b in range(a, n + 1)]
    while True:
        net = StarNetwork(n, tuple(rng.choice(ivs) for _ in range(m)))
        if family_count(net) <= cap:
            return net


def _exhaustive_nets(p: VerifyParams) -> Iterator[StarNetwork]:
    for n in range(1, p.max_n + 1):
        for m in range(p.max_stars + 1):
            yield from all_networks(n, m)


def _random_nets(suite: str, p: VerifyParams) -> list[StarNetwork]:
    return [
        random_network(p.max_n + 1, p.max_stars + 1, _rng(suite, p.seed, k))
        for k in range(p.samples)
    ]


def _random_poly(rng: random.Random) -> LaurentPoly:
    return LaurentPoly({rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))})


def random_functional(n: int, rng: random.Random) -> LinearFunctional:
    perms = list(all_perms(n))
    support = rng.sample(perms, rng.randint(1, len(perms)))
    return LinearFunctional(n, {w: _random_poly(rng) for w in support})


# --- defect -----------------------------------------------------------------

def _check_defect(net: StarNetwork) -> list[Record]:
    ok = defect_expansion(net) == product_of_reversals(net)
    return [("defect_equals_product", ok, f"net {net or '(empty)'} n={net.n}")]


def _cases_defect(p: VerifyParams) -> list:
    return list(_exhaustive_nets(p)) + _random_nets("defect", p)


# --- qstem: Hecke coefficients and q-immanant evaluation ----------------------

def _check_qstem(case) -> list[Record]:
    net, seed, count = case
    out = []
    prod = product_of_reversals(net)
    table = sigma_table(net)
    for w in all_perms(net.n):
        ok = prod.coeff(w).shift(length(w)) == table.get(w, ZERO)
        out.append(("coefficient_equals_sigma", ok, f"net {net} n={net.n} w={w}"))
    rng = random.Random(seed)
    for k in range(count):
        theta = random_functional(net.n, rng)
        ok = apply_functional(theta, prod) == theta_via_sigma(net, theta)
        out.append(("theta_equals_sigma_imm", ok, f"net {net} n={net.n} functional #{k}"))
    return out


def _cases_qstem(p: VerifyParams) -> list:
    cases = []
    for idx, net in enumerate(_exhaustive_nets(p)):
        # every network gets the coefficient check; one in five also gets functionals
        count = p.functionals if idx % 5 == 0 else 0
        cases.append((net, f"qstem:{p.seed}:{idx}", count))
    return cases


# --- epsilon ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _classical_induced_sign(lam: Partition, w: Perm) -> int:
    """Induced sign character of S_n at w by conjugation counting."""
    n = lam.n
    block = {}
    for k, blk in enumerate(lam.blocks()):
        for x in blk:
            block[x] = k
    sign = -1 if length(w) % 2 else 1
    hits = 0
    for g in all_perms(n):
        c = compose(compose(g.inverse(), w), g)
        if all(block[c[i - 1]] == block[i] for i in range(1, n + 1)):
            hits += 1
    return sign * hits // math.prod(math.factorial(x) for x in lam)


def _check_epsilon(case) -> list[Record]:
    net, methods = case
    out = []
    n = net.n
    prod_at_one = {w: c.at_one() for w, c in product_of_reversals(net).items()}
    for fam in covering_families(net):
        if fam.type.is_identity():
            out.append(("type_e_cross_even", cross_stat(fam) % 2 == 0, f"net {net} family {fam!r}"))
    for lam in partitions_of(n):
        vals = {m: eval_epsilon(EvalRequest(n, lam, net, m)) for m in methods}
        first = vals[methods[0]]
        detail = f"net {net} n={n} lambda={lam} " + " ".join(f"{m}={v}" for m, v in vals.items())
        out.append(("methods_agree", all(v == first for v in vals.values()), detail))
        out.append(("nonnegative_q_polynomial", classify(first)[0], detail))
        classical = sum(c * _classical_induced_sign(lam, w) for w, c in prod_at_one.items())
        out.append(("q_equals_one_specialization", first.at_one() == classical, detail))
    return out


def _cases_epsilon(p: VerifyParams) -> list:
    full = ("tableaux", "induced", "sigma")
    return [(net, full) for net in _exhaustive_nets(p)] + [
        (net, ("tableaux", "induced")) for net in _random_nets("epsilon", p)
    ]


# --- zeta -------------------------------------------------------------------

def _check_zeta(net: StarNetwork) -> list[Record]:
    out = []
    fams = list(covering_families(net))
    canon = {f.locals: f for f in fams}

    def canonical(W):
        return W.with_family(canon[W.family.locals])

    def invariant(W, y) -> int:
        # twice cross/2 + cdncross + incross - l(y)/2
        return cross_stat(W.family) + 2 * cdncross_stat(W) + 2 * incross_stat(W) - length(y)

    for lam in partitions_of(net.n):
        for I in ordered_set_partitions(lam):
            for W in t_set(net, I, fams):
                detail = f"net {net} n={net.n} I={I} W={W} windows={W.family.windows()}"
                y = y_of(W.family, I)
                W2, y2, step = zeta_map(W, I)
                if step is None:
                    ok = (
                        W.column_strict
                        and cdncross_stat(W) == 0
                        and W.family.type.is_identity()
                    )
                    out.append(("fixed_points_column_strict_type_e", ok, detail))
                    continue
                W2 = canonical(W2)
                W3, y3, _ = zeta_map(W2, I)
                out.append(("involution", W3.family == W.family and y3 == y, detail))
                b = pair_between_count(W.family, *step.pair, step.star)
                cr, df = step.pivot_crossing, step.pivot_defective
                dl = length(y2) - length(y)
                out.append(("length_change", dl == (-1 if cr != df else 1), detail))
                dc = cross_stat(W2.family) - cross_stat(W.family)
                out.append(("cross_change", dc == (-(1 + 2 * b) if cr else 1 + 2 * b), detail))
                di = incross_stat(W2) - incross_stat(W)
                out.append(("incross_change", di == (b if cr else -b), detail))
                dd = cdncross_stat(W2) - cdncross_stat(W)
                out.append(("cdncross_change", dd == ((1 if cr else -1) if df else 0), detail))
                out.append(("weight_preserved", invariant(W, y) == invariant(W2, y2), detail))
    return out


def _cases_zeta(p: VerifyParams) -> list:
    return list(_exhaustive_nets(p))


# --- sigma ------------------------------------------------------------------

def _check_sigma(case) -> list[Record]:
    kind, payload = case
    out = []
    if kind == "grid":
        net, pairs = payload
        for u, w in pairs:
            ok = sigma_general(net, u, w) == sigma_comb(net, u, w)
            out.append(("general_equals_comb", ok, f"net {net} u={u} w={w}"))
    elif kind == "concat":
        net, k, pairs = payload
        left, right = net.split(k)
        perms = list(all_perms(net.n))
        for u, w in pairs:
            total = ZERO
            for v in perms:
                a = sigma_comb(left, u, v)
                if a:
                    total = total + a * sigma_comb(right, v, w)
            ok = total == sigma_comb(net, u, w)
            out.append(("concatenation", ok, f"net {net} split {k} u={u} w={w}"))
    else:
        J = payload
        net = StarNetwork(J.n, (J,))
        for u in all_perms(J.n):
            us = left_coset_factor(u, J)[1]
            for w in all_perms(J.n):
                ws = left_coset_factor(w, J)[1]
                rel = compose(u.inverse(), w)
                inside = all(rel[i - 1] == i for i in range(1, J.n + 1) if i not in J)
                want = half_power(length(us) + length(ws)) if inside else ZERO
                ok = sigma_general(net, u, w) == want
                out.append(("simple_star", ok, f"J={J} u={u} w={w}"))
    return out


def _cases_sigma(p: VerifyParams) -> list:
    cases = []
    for n in range(1, min(p.max_n, 3) + 1):
        perms = list(all_perms(n))
        grid = [(u, w) for u in perms for w in perms]
        for m in range(min(p.max_stars, 2) + 1):
            for net in all_networks(n, m):
                cases.append(("grid", (net, grid)))
    if p.max_n >= 4:
        rng = _rng("sigma", p.seed, 0)
        perms = list(all_perms(4))
        for k in range(p.samples):
            net = random_network(4, rng.randint(1, max(p.max_stars, 1)), rng)
            pairs = [(rng.choice(perms), rng.choice(perms)) for _ in range(4)]
            cases.append(("grid", (net, pairs)))
    rng = _rng("sigma-concat", p.seed, 0)
    for k in range(p.samples):
        n = rng.randint(2, p.max_n)
        m = rng.randint(2, max(p.max_stars, 2))
        net = random_network(n, m, rng)
        perms = list(all_perms(n))
        pairs = [(rng.choice(perms), rng.choice(perms)) for _ in range(3)]
        cases.append(("concat", (net, rng.randint(1, m - 1), pairs)))
    for n in range(1, p.max_n + 1):
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                cases.append(("star", Interval(a, b, n)))
    return cases


# --- coset: Hecke relations, associativity and the coset identity -----------

def _check_coset(case) -> list[Record]:
    kind, n, seed = case
    out = []
    q = LaurentPoly.q()
    if kind == "relations":
        one = HeckeElt.one(n)
        for i in range(1, n):
            ti = HeckeElt.basis(generator(i, n))
            sq = hecke_mul(ti, ti)
            out.append(("quadratic", sq == ti.scale(q - 1) + one.scale(q), f"n={n} i={i}"))
            for j in range(1, n):
                tj = HeckeElt.basis(generator(j, n))
                if abs(i - j) > 1:
                    ok = hecke_mul(ti, tj) == hecke_mul(tj, ti)
                    out.append(("commuting", ok, f"n={n} i={i} j={j}"))
                elif j == i + 1:
                    ok = hecke_mul(hecke_mul(ti, tj), ti) == hecke_mul(hecke_mul(tj, ti), tj)
                    out.append(("braid", ok, f"n={n} i={i}"))
        perms = list(all_perms(n))
        rng = random.Random(seed)
        pairs = [(v, w) for v in perms for w in perms] if n <= 4 else [
            (rng.choice(perms), rng.choice(perms)) for _ in range(200)
        ]
        for v, w in pairs:
            if length(v) + length(w) == length(compose(v, w)):
                ok = hecke_mul(HeckeElt.basis(v), HeckeElt.basis(w)) == HeckeElt.basis(compose(v, w))
                out.append(("length_additive_product", ok, f"v={v} w={w}"))
        for v in perms if n <= 4 else rng.sample(perms, 20):
            h = HeckeElt.basis(v)
            for i in range(1, n):
                ok = mul_right_gen(h, i) == hecke_mul(h, HeckeElt.basis(generator(i, n)))
                out.append(("generator_action", ok, f"v={v} i={i}"))
    elif kind == "assoc":
        rng = random.Random(seed)
        perms = list(all_perms(n))

        def rand_elt() -> HeckeElt:
            return HeckeElt(n, {rng.choice(perms): _random_poly(rng) for _ in range(3)})

        for k in range(10):
            a, b, c = rand_elt(), rand_elt(), rand_elt()
            ok = hecke_mul(hecke_mul(a, b), c) == hecke_mul(a, hecke_mul(b, c))
            out.append(("associativity", ok, f"n={n} triple #{k} seed {seed}"))
    else:
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                J = Interval(a, b, n)
                C = kl_reversal(J)
                for w in all_perms(n):
                    wm, ws = left_coset_factor(w, J)
                    lhs = hecke_mul(HeckeElt.basis(w), C)
                    rhs = hecke_mul(HeckeElt.basis(wm), C).scale(q ** length(ws))
                    out.append(("coset_identity", lhs == rhs, f"J={J} w={w}"))
    return out


def _cases_coset(p: VerifyParams) -> list:
    top = p.max_n + 1
    cases = [("relations", n, f"coset:{p.seed}:{n}") for n in range(1, top + 1)]
    cases += [("assoc", n, f"assoc:{p.seed}:{n}") for n in range(2, top + 1)]
    cases += [("identity", n, "") for n in range(1, p.max_n + 1)]
    return cases


# --- straighten -------------------------------------------------------------

def _check_straighten(case) -> list[Record]:
    n, seed = case
    out = []
    rng = random.Random(seed)
    perms = list(all_perms(n))
    for u in perms:
        for w in perms:
            m = XMonomial.of(u, w)
            ref = straighten(m)
            ok = all(straighten(m, rng) == ref for _ in range(3))
            out.append(("confluence", ok, f"x^({u},{w})"))
    for lam in partitions_of(n):
        a = imm_epsilon(lam)
        out.append(("imm_epsilon_routes_agree", a == imm_epsilon(lam, "cosets"), f"lambda={lam}"))
        ok = functional_from_immanant(a) == sign_character_table(lam)
        out.append(("immanant_matches_induced_trace", ok, f"lambda={lam}"))
    for k in range(10):
        theta = random_functional(n, rng)
        out.append(("imm_theta_roundtrip", functional_from_immanant(imm_theta(theta)) == theta, f"n={n} #{k}"))
    return out


def _cases_straighten(p: VerifyParams) -> list:
    return [(n, f"straighten:{p.seed}:{n}") for n in range(1, p.max_n + 1)]


SUITES: dict[str, tuple[Callable[[VerifyParams], list], Callable[[object], list[Record]], str]] = {
    "defect": (_cases_defect, _check_defect, "defect expansion equals the product of reversal elements"),
    "qstem": (_cases_qstem, _check_qstem, "Hecke coefficients and functionals through sigma_B"),
    "epsilon": (_cases_epsilon, _check_epsilon, "tableaux, induced and sigma routes for epsilon agree"),
    "zeta": (_cases_zeta, _check_zeta, "the involution on T_I and its statistic changes"),
    "sigma": (_cases_sigma, _check_sigma, "sigma_B by straightening, by families, concatenation, single stars"),
    "coset": (_cases_coset, _check_coset, "Hecke relations, associativity and the coset identity"),
    "straighten": (_cases_straighten, _check_straighten, "confluence and the immanant generating functions"),
}


def _run_chunk(args) -> list[list[Record]]:
    suite, cases = args
    check = SUITES[suite][1]
    return [check(c) for c in cases]


def run_suite(suite: str, params: VerifyParams, workers: int | None = None) -> SuiteReport:
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    make_cases, check, _ = SUITES[suite]
    cases = make_cases(params)
    workers = worker_count() if workers is None else workers
    report = SuiteReport(suite)
    if workers <= 1 or len(cases) < 2:
        results: Iterable[list[Record]] = (check(c) for c in cases)
    else:
        size = max(1, len(cases) // (workers * 8))
        chunks = [(suite, cases[k:k + size]) for k in range(0, len(cases), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for chunk in pool.map(_run_chunk, chunks) for r in chunk]
    for records in results:
        for name, ok, detail in records:
            report.record(name, ok, detail)
    return report
