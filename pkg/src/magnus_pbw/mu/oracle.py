"""Formal log/exp oracles, independent of the closed-form coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..free.ncpoly import NCPolynomial, _add_into

ORACLE_BOUND = 5


def mu_ass_logexp_oracle(n: int, bound: int = ORACLE_BOUND) -> NCPolynomial:
    """Coefficient of t_1...t_n in log(exp(t_1 X_1) ... exp(t_n X_n)).

    Terms are keyed by (bitmask of t's, word). Any t_i^2 term can never reach
    the t_1...t_n coefficient, so each factor reduces to 1 + t_i X_i and
    overlapping masks are dropped.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the oracle bound {bound}")
    z: dict = {(0, ()): Fraction(1)}
    for i in range(n):
        step = dict(z)
        for (mask, word), c in z.items():
            _add_into(step, (mask | 1 << i, word + (i + 1,)), c)
        z = step
    z.pop((0, ()))  # z - 1
    full = (1 << n) - 1
    power = dict(z)
    log: dict = {}
    for k in range(1, n + 1):
        sign = Fraction((-1) ** (k - 1), k)
        for key, c in power.items():
            _add_into(log, key, sign * c)
        nxt: dict = {}
        for (m1, w1), c1 in power.items():
            for (m2, w2), c2 in z.items():
                if not m1 & m2:
                    _add_into(nxt, (m1 | m2, w1 + w2), c1 * c2)
        power = nxt
    return NCPolynomial({w: c for (m, w), c in log.items() if m == full})


def _exp_series(letter: int, order: int) -> dict:
    return {(letter,) * k: Fraction(1, factorial(k)) for k in range(order + 1)}


def _truncated_product(a: dict, b: dict, order: int) -> dict:
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            if len(wa) + len(wb) <= order:
                _add_into(out, wa + wb, ca * cb)
    return out


def log_exp_xy(order: int, x: int = 1, y: int = 2) -> NCPolynomial:
    """log(exp X * exp Y) through total degree ``order`` (X, Y = variables x, y)."""
    z = _truncated_product(_exp_series(x, order), _exp_series(y, order), order)
    z.pop(())
    power = dict(z)
    log: dict = {}
    for k in range(1, order + 1):
        for w, c in power.items():
            _add_into(log, w, Fraction((-1) ** (k - 1), k) * c)
        power = _truncated_product(power, z, order)
    return NCPolynomial(log)
