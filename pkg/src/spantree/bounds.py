"""Lower and upper bounds on the spanning-tree count of a Cartesian product.

All bounds are returned as natural logs, since the raw values overflow
doubles quickly. A count of zero is represented by ``-math.inf``
(:data:`LOG_ZERO`). Logs of exact counts use :func:`math.log` on Python ints,
which is correctly rounded to double precision for any magnitude.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from spantree.exact import tau_exact
from spantree.graph import DomainError, Graph, is_complete, is_connected
from spantree.product import cartesian_product

LOG_ZERO = -math.inf
GAP_TOL = 1e-9


class BoundsViolation(AssertionError):
    """A computed count contradicts a bound or its equality characterization."""


def log_count(x: int | Fraction) -> float:
    if x == 0:
        return LOG_ZERO
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


def _check_orders(g1: Graph, g2: Graph, least: int = 2) -> None:
    if g1.n < least or g2.n < least:
        raise DomainError(f"factors need at least {least} vertices, got {g1.n} and {g2.n}")


def _lower_from_counts(n1: int, n2: int, t1: int, t2: int) -> float:
    if t1 == 0 or t2 == 0:
        return LOG_ZERO
    return math.fsum([
        (n1 - 1) * (n2 - 1) * math.log(2),
        -math.log(n1 * n2),
        (n2 + 1) / 2 * math.log(t1 * n1),
        (n1 + 1) / 2 * math.log(t2 * n2),
    ])


def _upper_from_counts(n1: int, m1: int, n2: int, m2: int, t1: int, t2: int) -> float:
    if t1 == 0 or t2 == 0:
        return LOG_ZERO
    mean_degree_sum = Fraction(2 * m1, n1 - 1) + Fraction(2 * m2, n2 - 1)
    return math.fsum([
        math.log(t1),
        math.log(t2),
        (n1 - 1) * (n2 - 1) * log_count(mean_degree_sum),
    ])


def lower_bound_log(g1: Graph, g2: Graph) -> float:
    """log of 2^((n1-1)(n2-1)) / (n1 n2) * (t1 n1)^((n2+1)/2) * (t2 n2)^((n1+1)/2)."""
    _check_orders(g1, g2)
    return _lower_from_counts(g1.n, g2.n, tau_exact(g1), tau_exact(g2))


def upper_bound_log(g1: Graph, g2: Graph) -> float:
    """log of t1 t2 [2 m1/(n1-1) + 2 m2/(n2-1)]^((n1-1)(n2-1))."""
    _check_orders(g1, g2)
    return _upper_from_counts(g1.n, g1.m, g2.n, g2.m, tau_exact(g1), tau_exact(g2))


def equality_lower(g1: Graph, g2: Graph) -> bool:
    _check_orders(g1, g2)
    if not (is_connected(g1) and is_connected(g2)):
        return True
    return g1.n == g2.n and is_complete(g1) and is_complete(g2)


def equality_upper(g1: Graph, g2: Graph) -> bool:
    _check_orders(g1, g2)
    if not (is_connected(g1) and is_connected(g2)):
        return True
    return is_complete(g1) and is_complete(g2)


def tree_bounds_log(n1: int, n2: int) -> tuple[float, float]:
    """Strict (lower, upper) log bounds valid for any two trees of orders n1, n2 >= 3."""
    if n1 < 3 or n2 < 3:
        raise DomainError(f"tree bounds need n1, n2 >= 3, got {n1}, {n2}")
    k = (n1 - 1) * (n2 - 1)
    lower = math.fsum([
        k * math.log(2),
        (n2 - 1) / 2 * math.log(n1),
        (n1 - 1) / 2 * math.log(n2),
    ])
    return lower, 2 * k * math.log(2)


def rook_tau(n1: int, n2: int) -> int:
    """Exact spanning-tree count of the rook's graph K_n1 x K_n2."""
    if n1 < 1 or n2 < 1:
        raise DomainError(f"orders must be positive, got {n1}, {n2}")

    def cayley(n):
        return n ** (n - 2) if n >= 2 else 1

    return cayley(n1) * cayley(n2) * (n1 + n2) ** ((n1 - 1) * (n2 - 1))


def _gap(hi: float, lo: float) -> float:
    if hi == LOG_ZERO and lo == LOG_ZERO:
        return 0.0
    return hi - lo


@dataclass(frozen=True)
class BoundsReport:
    n1: int
    n2: int
    tau_exact_product: int
    log_tau: float
    log_lower: float
    log_upper: float
    equality_lower_predicted: bool
    equality_upper_predicted: bool
    equality_lower_observed: bool
    equality_upper_observed: bool
    sandwich_ok: bool

    @property
    def consistent(self) -> bool:
        return (
            self.sandwich_ok
            and self.equality_lower_predicted == self.equality_lower_observed
            and self.equality_upper_predicted == self.equality_upper_observed
        )

    def to_json(self) -> dict:
        def num(x):
            return None if x == LOG_ZERO else x

        return {
            "n1": self.n1,
            "n2": self.n2,
            "tau": str(self.tau_exact_product),
            "log_tau": num(self.log_tau),
            "log_lower": num(self.log_lower),
            "log_upper": num(self.log_upper),
            "equality_lower": self.equality_lower_predicted,
            "equality_upper": self.equality_upper_predicted,
            "sandwich_ok": self.sandwich_ok,
        }


def bounds_report(g1: Graph, g2: Graph, strict: bool = True) -> BoundsReport:
    """Exact product count, both bounds, and the equality predictions.

    With ``strict`` set, a failed sandwich or a disagreement between the
    structural equality predicates and the observed log gaps raises
    :class:`BoundsViolation`.
    """
    _check_orders(g1, g2)
    t1, t2 = tau_exact(g1), tau_exact(g2)
    tau = tau_exact(cartesian_product(g1, g2))
    log_tau = log_count(tau)
    lo = _lower_from_counts(g1.n, g2.n, t1, t2)
    hi = _upper_from_counts(g1.n, g1.m, g2.n, g2.m, t1, t2)
    gap_lo, gap_hi = _gap(log_tau, lo), _gap(hi, log_tau)
    report = BoundsReport(
        n1=g1.n,
        n2=g2.n,
        tau_exact_product=tau,
        log_tau=log_tau,
        log_lower=lo,
        log_upper=hi,
        equality_lower_predicted=equality_lower(g1, g2),
        equality_upper_predicted=equality_upper(g1, g2),
        equality_lower_observed=gap_lo <= GAP_TOL,
        equality_upper_observed=gap_hi <= GAP_TOL,
        sandwich_ok=gap_lo >= -GAP_TOL and gap_hi >= -GAP_TOL,
    )
    if strict and not report.consistent:
        raise BoundsViolation(f"inconsistent bounds report: {asdict(report)}")
    return report
