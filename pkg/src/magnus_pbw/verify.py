"""Verification suites driving the invariant checks; each returns a JSON-able report."""
from __future__ import annotations

import os
import random
from itertools import permutations
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .free.lie import LiePolynomial, eval_tree
from .free.ncpoly import NCPolynomial, symmetrized_product
from .free.perms import enumerate_lie_permutations, lie_permutations_direct
from .mu import (
    coshuffle,
    coshuffle_projection,
    decompose_linear,
    decompose_rewrite,
    log_exp_xy,
    mu_ass_dynkin,
    mu_ass_logexp_oracle,
    mu_dynkin,
    mu_lieperm,
    mu_magnus,
)
from .mu.lieperm import decoe_basis_vector
from .mu.identities import swap_identity_residual, symmetrized_sum
from .mu.series import alpha_first_form, alpha_second_form, beta_coefficients
from .pbw import (
    Report,
    associativity_check,
    bch_series,
    build_free_nilpotent,
    denominator_audit,
    mu_sigma_descent_check,
    pbw_roundtrip,
)

SUITES = (
    "mu-identities",
    "cross-construction",
    "oracle",
    "coshuffle",
    "pbw",
    "associativity",
    "denominators",
)
THREADS_ENV = "MAGNUS_PBW_THREADS"
DESK_ALGEBRAS = ((2, 2), (2, 3), (3, 2))


@dataclass
class VerifyConfig:
    max_n: int = 6
    oracle_bound: int = 5
    d: int | None = None
    k: int | None = None
    degree: int = 3
    assoc_degree: int = 5
    cases: int = 200
    seed: int = 0

    def algebras(self) -> list[tuple[int, int]]:
        if self.d is not None or self.k is not None:
            return [(self.d or 2, self.k or 3)]
        return list(DESK_ALGEBRAS)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _ordered_map(fn, items):
    items = list(items)
    if _workers() > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=_workers()) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def suite_mu_identities(cfg: VerifyConfig) -> list[Report]:
    coeffs = Report("coefficient identities")
    table = beta_coefficients(max(cfg.max_n, 10)).values
    for s in range(len(table)):
        total = sum((table[j] / factorial(s + 1 - j) for j in range(s + 1)), Fraction(0))
        coeffs.record(total == (1 if s == 0 else 0), {"s": s})
    coeffs.record(alpha_first_form(10, 10) == alpha_second_form(10, 10), "alpha forms")

    swap = Report("swap identity")
    vanish = Report("symmetrized vanishing")
    for n in range(2, cfg.max_n + 1):
        mu_n, mu_prev = mu_dynkin(n).value, mu_dynkin(n - 1).value
        for k in range(2, n + 1):
            swap.record(not swap_identity_residual(mu_n, mu_prev, n, k), {"n": n, "k": k})
        vanish.record(not symmetrized_sum(mu_n, n), {"n": n})
    return [coeffs, swap, vanish]


def suite_cross_construction(cfg: VerifyConfig) -> list[Report]:
    agree = Report("constructions agree")
    pivots = Report("pivot independence")
    for n in range(1, cfg.max_n + 1):
        ref = mu_dynkin(n).value
        others = {
            "magnus_L": mu_magnus(n, "L").value,
            "magnus_R": mu_magnus(n, "R").value,
            "magnus_C": mu_magnus(n, "C").value,
            "lieperm": mu_lieperm(n).value,
        }
        for name, value in others.items():
            agree.record(value == ref, {"n": n, "construction": name})
        for k in list(range(1, n + 1)) + ["averaged"]:
            pivots.record(mu_dynkin(n, k).value == ref, {"n": n, "pivot": k})
    counts = Report("lie-permutation counts")
    for n in range(0, max(cfg.max_n, 8) + 1):
        lps = enumerate_lie_permutations(n)
        ok = len(lps) == factorial(n) == len(set(lps))
        ok = ok and set(lps) == set(lie_permutations_direct(n))
        ok = ok and sorted(lp.to_permutation() for lp in lps) == sorted(permutations(range(1, n + 1)))
        counts.record(ok, {"n": n})
    solvers = Report("decomposition solvers agree")
    for n in range(0, min(cfg.max_n, 5) + 1):
        rewrite = decompose_rewrite(n)
        solvers.record(rewrite == decompose_linear(n), {"n": n})
        rebuilt = NCPolynomial.zero()
        for lp, c in rewrite.items():
            rebuilt = rebuilt + decoe_basis_vector(lp).scale(c)
        solvers.record(rebuilt == NCPolynomial.monomial(range(1, n + 1)), {"n": n, "rebuild": True})
    return [agree, pivots, counts, solvers]


def suite_oracle(cfg: VerifyConfig) -> list[Report]:
    oracle = Report("log-exp oracle")
    for n in range(1, cfg.oracle_bound + 1):
        ass = mu_ass_dynkin(n)
        ok = ass == mu_ass_logexp_oracle(n, bound=cfg.oracle_bound) == mu_dynkin(n).value.evaluate()
        oracle.record(ok, {"n": n})
    bch = Report("bch against log(exp X exp Y)")
    order = min(cfg.oracle_bound, 5) if cfg.oracle_bound >= 1 else 0
    if order:
        reference = log_exp_xy(order)
        for n, term in enumerate(bch_series(order), start=1):
            bch.record(term.evaluate() == reference.homogeneous_part(n), {"n": n})
    return [oracle, bch]


def random_commutator_monomial(rng: random.Random, degree: int, letters: int = 4) -> NCPolynomial:
    def tree(size):
        if size == 1:
            return rng.randint(1, letters)
        cut = rng.randint(1, size - 1)
        return (tree(cut), tree(size - cut))

    return NCPolynomial(eval_tree(tree(degree)))


def coshuffle_case(rng: random.Random, p: int, s: int) -> tuple[bool, dict]:
    max_deg = {1: 4, 2: 3, 3: 2}[s]
    degrees = [rng.randint(1, max_deg) for _ in range(s)]
    factors = [random_commutator_monomial(rng, deg) for deg in degrees]
    sym = symmetrized_product(factors)
    ok = coshuffle(sym, p) == sym.scale(p ** s)
    return ok, {"p": p, "s": s, "degrees": degrees}


def suite_coshuffle(cfg: VerifyConfig) -> list[Report]:
    rng = random.Random(cfg.seed)
    eigen = Report(f"eigenvalue law (seed={cfg.seed})")
    for i in range(cfg.cases):
        p, s = i % 4 + 1, (i // 4) % 3 + 1
        ok, info = coshuffle_case(rng, p, s)
        eigen.record(ok, info)
    proj = Report("first-eigenspace projection")
    for n in range(1, min(cfg.oracle_bound, 5) + 1):
        proj.record(coshuffle_projection(tuple(range(1, n + 1)), n) == mu_ass_dynkin(n), {"n": n})
    return [eigen, proj]


def _pbw_one(args) -> list[Report]:
    d, k, degree = args
    alg = build_free_nilpotent(d, k)
    reports = [mu_sigma_descent_check(alg, g) for g in range(2, degree + 1)]
    reports += [pbw_roundtrip(alg, g) for g in range(1, degree + 1)]
    return reports


def suite_pbw(cfg: VerifyConfig) -> list[Report]:
    jac = Report("structure constants")
    for d, k in cfg.algebras():
        alg = build_free_nilpotent(d, k)
        jac.record(not alg.jacobi_violations() and not alg.antisymmetry_violations(), {"d": d, "k": k})
    out = [jac]
    for reports in _ordered_map(_pbw_one, [(d, k, cfg.degree) for d, k in cfg.algebras()]):
        out.extend(reports)
    return out


def _assoc_one(args) -> Report:
    d, k, degree = args
    return associativity_check(build_free_nilpotent(d, k), degree)


def suite_associativity(cfg: VerifyConfig) -> list[Report]:
    jobs = [(d, k, cfg.assoc_degree) for d, k in cfg.algebras()]
    return _ordered_map(_assoc_one, jobs)


def suite_denominators(cfg: VerifyConfig) -> list[Report]:
    return [denominator_audit(min(cfg.max_n, 5))]


RUNNERS = {
    "mu-identities": suite_mu_identities,
    "cross-construction": suite_cross_construction,
    "oracle": suite_oracle,
    "coshuffle": suite_coshuffle,
    "pbw": suite_pbw,
    "associativity": suite_associativity,
    "denominators": suite_denominators,
}


def run_suite(name: str, cfg: VerifyConfig) -> dict:
    names = SUITES if name == "all" else (name,)
    if any(n not in RUNNERS for n in names):
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}")
    results = {}
    for n in names:
        results[n] = [r.to_json() for r in RUNNERS[n](cfg)]
    passed = all(r["passed"] for rs in results.values() for r in rs)
    return {"suite": name, "passed": passed, "results": results}
