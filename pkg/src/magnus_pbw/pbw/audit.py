"""Denominators of mu_n and of the symmetrized bch_{n,m} maps."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from ..free.lie import LiePolynomial
from ..mu import compute_mu
from .sigma import Report


def prime_factors(m: int) -> set[int]:
    out, p = set(), 2
    while p * p <= m:
        while m % p == 0:
            out.add(p)
            m //= p
        p += 1
    if m > 1:
        out.add(m)
    return out


def bch_lie(n: int, m: int, construction: str = "dynkin") -> LiePolynomial:
    """bch_{n,m} on free variables a_i = X_i, b_j = X_{n+j}."""
    if n + m < 1:
        raise ValueError("bch needs n + m >= 1")
    mu = compute_mu(n + m, construction).value
    acc = LiePolynomial.zero()
    for pa in permutations(range(1, n + 1)):
        for pb in permutations(range(n + 1, n + m + 1)):
            order = pa + pb
            acc = acc + mu.relabel({slot + 1: v for slot, v in enumerate(order)})
    return acc.scale(Fraction(1, factorial(n) * factorial(m)))


def denominator_audit(k: int, construction: str = "dynkin") -> Report:
    """Every denominator in mu_n (n <= k) and bch_{n,m} (n + m <= k) has primes <= degree.

    ``details`` also records whether each denominator divides degree! itself.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    report = Report(f"denominators k={k}")
    divides_factorial = True
    largest: dict = {}
    for deg in range(1, k + 1):
        polys = {f"mu_{deg}": compute_mu(deg, construction).value}
        for n in range(deg + 1):
            polys[f"bch_{n},{deg - n}"] = bch_lie(n, deg - n, construction)
        for name, poly in polys.items():
            dens = [c.denominator for _, c in poly.items()]
            top = max(dens, default=1)
            largest[name] = top
            bad = [d for d in dens if max(prime_factors(d), default=1) > deg]
            report.record(not bad, {"map": name, "denominators": sorted(set(bad))})
            if any(factorial(deg) % d for d in dens):
                divides_factorial = False
    report.details = {"largest_denominator": largest, "all_divide_degree_factorial": divides_factorial}
    return report
