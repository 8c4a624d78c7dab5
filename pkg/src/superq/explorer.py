"""Conjecture laboratory: structure constants of the frak-p basis, the
deg1 filtration scan, and the E_n[p_2] non-polynomiality experiment.

A violation found by the scan is a *result*, not an error: the scan's
whole purpose is falsification, so violations are returned prominently in
the report (and the CLI still exits 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .content import OrdinaryPSumExpr
from .frakp import expand_gamma_in_frak, frak_p
from .partitions import OddPartition, enumerate_odd, term_sort_key
from .plancherel import average_bruteforce
from .rational import Rat, rat, rat_str


def _deg1_of(rho: OddPartition) -> int:
    return rho.size + rho.multiplicity(1)


@dataclass(frozen=True)
class StructureConstantRecord:
    """One nonzero coefficient f^rho_{sigma,tau} of frak_p(sigma)*frak_p(tau)."""

    sigma: OddPartition
    tau: OddPartition
    rho: OddPartition
    value: Rat
    deg1_lhs: int
    deg1_rhs: int

    @property
    def slack(self) -> int:
        return self.deg1_rhs - self.deg1_lhs

    @property
    def violates(self) -> bool:
        return self.deg1_lhs > self.deg1_rhs

    def to_json_obj(self) -> dict:
        return {
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "rho": str(self.rho),
            "value": rat_str(self.value),
            "deg1_lhs": self.deg1_lhs,
            "deg1_rhs": self.deg1_rhs,
        }


def structure_constants(
    sigma: OddPartition, tau: OddPartition
) -> list[StructureConstantRecord]:
    """All nonzero records of the product expansion, in canonical order."""
    expansion = expand_gamma_in_frak(frak_p(sigma) * frak_p(tau))
    rhs = _deg1_of(sigma) + _deg1_of(tau)
    records = [
        StructureConstantRecord(sigma, tau, rho, value, _deg1_of(rho), rhs)
        for rho, value in expansion.items()
    ]
    records.sort(key=lambda rec: term_sort_key(rec.rho))
    return records


@dataclass
class ScanReport:
    """Outcome of a deg1 filtration scan over all products up to a total size."""

    max_total: int
    pairs_scanned: int = 0
    records_checked: int = 0
    min_slack: int | None = None
    max_slack: int | None = None
    violations: list[StructureConstantRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_obj(self) -> dict:
        return {
            "max_total": self.max_total,
            "pairs_scanned": self.pairs_scanned,
            "records_checked": self.records_checked,
            "min_slack": self.min_slack,
            "max_slack": self.max_slack,
            "violations_found": len(self.violations),
            "violations": [rec.to_json_obj() for rec in self.violations],
            "conjecture_holds_in_range": self.ok,
        }


def deg1_conjecture_scan(max_total: int) -> ScanReport:
    """Scan every unordered pair (sigma, tau) with |sigma| + |tau| <= max_total.

    Records violating |rho| + m_1(rho) <= deg1(sigma) + deg1(tau) are
    collected verbatim; an empty list is the expected outcome, a nonempty
    one is a counterexample to the filtration conjecture.
    """
    if max_total < 2:
        raise ValueError("max_total must be at least 2")
    report = ScanReport(max_total=max_total)
    for a in range(1, max_total):
        for sigma in enumerate_odd(a):
            for b in range(a, max_total - a + 1):
                for tau in enumerate_odd(b):
                    if b == a and term_sort_key(tau) < term_sort_key(sigma):
                        continue
                    report.pairs_scanned += 1
                    for rec in structure_constants(sigma, tau):
                        report.records_checked += 1
                        slack = rec.slack
                        if report.min_slack is None or slack < report.min_slack:
                            report.min_slack = slack
                        if report.max_slack is None or slack > report.max_slack:
                            report.max_slack = slack
                        if rec.violates:
                            report.violations.append(rec)
    return report


@dataclass
class P2Report:
    """Exact E_n[p_2] values and the failed degree-2 interpolation."""

    max_n: int
    values: list[tuple[int, Rat]]
    fit_nodes: tuple[int, int, int]
    residuals: list[tuple[int, Rat]]

    @property
    def polynomial_fit_fails(self) -> bool:
        return any(r for _, r in self.residuals)

    def to_json_obj(self) -> dict:
        return {
            "max_n": self.max_n,
            "values": {str(n): rat_str(v) for n, v in self.values},
            "fit_nodes": list(self.fit_nodes),
            "residuals": {str(n): rat_str(r) for n, r in self.residuals},
            "degree2_fit_fails": self.polynomial_fit_fails,
        }


def p2_experiment(max_n: int, cap: int = 14) -> P2Report:
    """Exact E_n[p_2] for n <= max_n plus a degree-2 interpolation check.

    The interpolating quadratic through n = 1, 2, 3 is evaluated exactly at
    4..6; a nonzero residual certifies that no quadratic matches all six
    paper values.  ``cap`` guards against runaway enumeration and can be
    raised freely.
    """
    if max_n < 6:
        raise ValueError("max_n must be at least 6 to cover the reference table")
    if max_n > cap:
        raise ValueError(f"max_n = {max_n} exceeds the cap {cap}; raise cap= to allow")
    p2 = OrdinaryPSumExpr.p(2)
    values = [(n, average_bruteforce(p2, n)) for n in range(0, max_n + 1)]
    by_n = dict(values)

    def quadratic_through_123(x: int) -> Rat:
        y1, y2, y3 = by_n[1], by_n[2], by_n[3]
        return (
            y1 * rat((x - 2) * (x - 3), 2)
            - y2 * rat((x - 1) * (x - 3), 1)
            + y3 * rat((x - 1) * (x - 2), 2)
        )

    residuals = [(n, by_n[n] - quadratic_through_123(n)) for n in (4, 5, 6)]
    return P2Report(max_n=max_n, values=values, fit_nodes=(1, 2, 3),
                    residuals=residuals)
