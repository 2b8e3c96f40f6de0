"""Exact evaluation of the edge-count bounds for friendship hypergraphs.

Everything here is a :class:`fractions.Fraction` over Python integers; no
floating point is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .hypergraph import Hypergraph, degree_profile
from .verify.friendship import decomposition, is_universal, verify_friendship
from .verify.shadow import shadow_bound


class AuditError(ValueError):
    """Input outside the hypotheses of the bounds (not a friendship hypergraph)."""


class AuditInconsistency(AssertionError):
    """Lower-bound tightness disagreed with universality."""


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check(n: int, r: int) -> None:
    if r < 3 or n < r + 1:
        raise ValueError(f"bounds need r >= 3 and n >= r+1, got n={n}, r={r}")


def lower_bound_edges(n: int, r: int) -> Fraction:
    _check(n, r)
    return Fraction(r + 1, r) * math.comb(n - 1, r - 1)


def upper_bound_decomp(n: int, r: int) -> Fraction:
    """Upper bound on the number of cliques in the decomposition."""
    _check(n, r)
    floor_term = shadow_bound(r)
    ceil_term = _ceil_div(2 * (r + 1), 3)
    return (
        Fraction(2, r * (r + 1) ** 2) * floor_term * math.comb(n, r)
        + Fraction(4, r**2 * (r + 1) ** 2) * ceil_term * math.comb(n, r - 1)
    )


def upper_bound_edges(n: int, r: int) -> Fraction:
    """Upper bound on edges, evaluated directly and checked against (r+1) x the clique bound."""
    _check(n, r)
    direct = (
        Fraction(2, r * (r + 1)) * shadow_bound(r) * math.comb(n, r)
        + Fraction(4, r**2 * (r + 1)) * _ceil_div(2 * (r + 1), 3) * math.comb(n, r - 1)
    )
    if direct != (r + 1) * upper_bound_decomp(n, r):
        raise ArithmeticError(f"edge bound forms disagree at n={n}, r={r}")
    return direct


def upper_bound_edges_integral(n: int, r: int) -> int:
    """(r+1) * floor(clique bound): uses that the clique count is an integer."""
    return (r + 1) * math.floor(upper_bound_decomp(n, r))


def lrss_upper_bound(n: int) -> Fraction:
    """Earlier 3-uniform bound C(n,3) * 2(n-3)/(3n-10)."""
    if n < 4:
        raise ValueError(f"lrss bound needs n >= 4, got {n}")
    return Fraction(math.comb(n, 3) * 2 * (n - 3), 3 * n - 10)


def cubic_decomp_closed_form(n: int) -> Fraction:
    return Fraction(n * n * (n - 1), 48)


@dataclass
class BoundReport:
    n: int
    r: int
    lower_edges: Fraction
    upper_edges: Fraction
    upper_decomp: Fraction
    upper_edges_integral: int
    lrss_upper: Fraction | None = None
    actual: int | None = None
    cliques: int | None = None
    universal: bool | None = None
    degree_regular: bool | None = None
    verdicts: dict[str, dict[str, bool]] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        def q(x):
            return None if x is None else str(x)

        return {
            "n": self.n,
            "r": self.r,
            "lower_edges": q(self.lower_edges),
            "upper_edges": q(self.upper_edges),
            "upper_decomp": q(self.upper_decomp),
            "upper_decomp_floor": math.floor(self.upper_decomp),
            "upper_edges_integral": self.upper_edges_integral,
            "lrss_upper": q(self.lrss_upper),
            "actual": self.actual,
            "cliques": self.cliques,
            "universal": self.universal,
            "degree_regular": self.degree_regular,
            "verdicts": self.verdicts,
        }


def bound_report(n: int, r: int) -> BoundReport:
    return BoundReport(
        n=n,
        r=r,
        lower_edges=lower_bound_edges(n, r),
        upper_edges=upper_bound_edges(n, r),
        upper_decomp=upper_bound_decomp(n, r),
        upper_edges_integral=upper_bound_edges_integral(n, r),
        lrss_upper=lrss_upper_bound(n) if r == 3 else None,
    )


def audit(h: Hypergraph, jobs: int = 1) -> BoundReport:
    """Compare a friendship hypergraph against every bound.

    Refuses non-friendship input.  Raises :class:`AuditInconsistency` if
    lower-bound tightness and universality disagree.
    """
    cert = verify_friendship(h, jobs=jobs)
    if not cert.passed:
        raise AuditError(f"audit needs a friendship hypergraph; verifier said {cert.verdict}: {cert.witness}")
    report = bound_report(h.n, h.r)
    d = decomposition(h)
    m, c = h.m, len(d.cliques)
    report.actual = m
    report.cliques = c
    report.universal = is_universal(h).passed
    degrees = degree_profile(d.as_hypergraph(), h.r - 1)
    report.degree_regular = len(set(degrees.values())) == 1

    floor_decomp = math.floor(report.upper_decomp)
    report.verdicts = {
        "lower_edges": {"satisfied": m >= report.lower_edges, "tight": m == report.lower_edges},
        "upper_edges": {"satisfied": m <= report.upper_edges, "tight": m == report.upper_edges},
        "upper_decomp": {"satisfied": c <= report.upper_decomp, "tight": c == floor_decomp},
        "upper_edges_integral": {"satisfied": m <= report.upper_edges_integral, "tight": m == report.upper_edges_integral},
    }
    if report.lrss_upper is not None:
        report.verdicts["lrss_upper"] = {"satisfied": m <= report.lrss_upper, "tight": m == report.lrss_upper}
    if report.verdicts["lower_edges"]["tight"] != report.universal:
        raise AuditInconsistency(
            f"lower bound tight={report.verdicts['lower_edges']['tight']} but universal={report.universal}"
        )
    if report.verdicts["upper_edges"]["tight"] and not report.degree_regular:
        raise AuditInconsistency("upper bound attained by a hypergraph with unequal (r-1)-set degrees")
    return report
