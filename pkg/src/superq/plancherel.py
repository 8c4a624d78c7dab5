"""Shifted Plancherel measures, exact brute-force averages, and symbolic
averages as polynomials in n.

``PolynomialInN`` stores a polynomial in the symbol n in the falling-
factorial basis n^(j) = n(n-1)...(n-j+1) with exact rational coefficients;
monomial and binomial C(n, j) renderings are exact, invertible views.
Symbolic averages come from the frak-p expansion: E_n picks out the
coefficients of frak_p((1^r)), and E_{mu,n} sends each frak_p(rho) to
(n + |mu| - |rho-tilde|)^(m_1(rho)) * frak_p(rho-tilde)(mu).
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import Iterable, Mapping

from .frakp import expand_gamma_in_frak, frak_p, frak_p_eval, tilde
from .gamma import GammaElement
from .partitions import (
    OddPartition,
    StrictPartition,
    _stirling2_row,
    enumerate_strict,
    falling,
    g,
    g_skew,
    z,
)
from .rational import Rat, ZERO, rat, rat_str


@cache
def _falling_monomial(j: int) -> tuple[int, ...]:
    # Integer monomial coefficients (low to high) of n(n-1)...(n-j+1).
    coeffs = [1]
    for i in range(j):
        shifted = [0] + coeffs
        coeffs = [shifted[m] - i * (coeffs[m] if m < len(coeffs) else 0)
                  for m in range(len(shifted))]
    return tuple(coeffs)


def _monomial_to_falling(m: int) -> tuple[int, ...]:
    # n^m = sum_j T(m, j) n^(j); row of Stirling numbers with T(0,0) = 1.
    return _stirling2_row(m)


class PolynomialInN:
    """Polynomial in the symbol n, stored in the falling-factorial basis."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean = {}
        for j, c in pairs:
            c = rat(c)
            if c:
                clean[int(j)] = c
        self._coeffs = clean

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls) -> "PolynomialInN":
        return cls()

    @classmethod
    def constant(cls, c) -> "PolynomialInN":
        return cls({0: c})

    @classmethod
    def n(cls) -> "PolynomialInN":
        return cls({1: 1})

    @classmethod
    def from_falling(cls, coeffs: Mapping) -> "PolynomialInN":
        return cls(coeffs)

    @classmethod
    def from_monomial(cls, coeffs: Mapping) -> "PolynomialInN":
        out: dict[int, Rat] = {}
        for m, c in coeffs.items():
            c = rat(c)
            if not c:
                continue
            row = _monomial_to_falling(int(m))
            for j, t in enumerate(row):
                if t:
                    out[j] = out.get(j, ZERO) + c * t
        return cls(out)

    @classmethod
    def from_binomial(cls, coeffs: Mapping) -> "PolynomialInN":
        return cls({int(j): rat(c) * rat(1, factorial(int(j)))
                    for j, c in coeffs.items()})

    @classmethod
    def coerce(cls, value) -> "PolynomialInN":
        if isinstance(value, cls):
            return value
        return cls.constant(value)

    # -- views -----------------------------------------------------------------

    def falling_coeffs(self) -> dict[int, Rat]:
        return dict(self._coeffs)

    def monomial_coeffs(self) -> dict[int, Rat]:
        out: dict[int, Rat] = {}
        for j, c in self._coeffs.items():
            for m, t in enumerate(_falling_monomial(j)):
                if t:
                    new = out.get(m, ZERO) + c * t
                    if new:
                        out[m] = new
                    else:
                        out.pop(m, None)
        return out

    def binomial_coeffs(self) -> dict[int, Rat]:
        return {j: c * factorial(j) for j, c in self._coeffs.items()}

    def degree(self) -> int:
        """Polynomial degree; -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate(self, n: int) -> Rat:
        return sum((c * falling(n, j) for j, c in self._coeffs.items()),
                   start=ZERO)

    # -- arithmetic --------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, PolynomialInN) and self._coeffs == other._coeffs

    def __add__(self, other):
        if not isinstance(other, PolynomialInN):
            other = PolynomialInN.constant(other)
        out = dict(self._coeffs)
        for j, c in other._coeffs.items():
            new = out.get(j, ZERO) + c
            if new:
                out[j] = new
            else:
                out.pop(j, None)
        return PolynomialInN(out)

    __radd__ = __add__

    def __neg__(self):
        return PolynomialInN({j: -c for j, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, PolynomialInN):
            other = PolynomialInN.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return PolynomialInN.constant(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, PolynomialInN):
            a = self.monomial_coeffs()
            b = other.monomial_coeffs()
            prod: dict[int, Rat] = {}
            for ma, ca in a.items():
                for mb, cb in b.items():
                    prod[ma + mb] = prod.get(ma + mb, ZERO) + ca * cb
            return PolynomialInN.from_monomial(prod)
        scalar = rat(other)
        return PolynomialInN({j: c * scalar for j, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"PolynomialInN({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        chunks = []
        for j in sorted(self._coeffs, reverse=True):
            c = self._coeffs[j]
            base = f"n^({j})" if j > 1 else ("n" if j == 1 else "")
            mag = abs(c)
            if not base:
                body = rat_str(mag)
            elif mag == 1:
                body = base
            else:
                body = f"{rat_str(mag)}*{base}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def to_json_obj(self) -> dict:
        """All three exact views, keys descending, rationals as strings."""

        def render(mapping):
            return {str(k): rat_str(v)
                    for k, v in sorted(mapping.items(), reverse=True)}

        return {
            "falling": render(self._coeffs),
            "monomial": render(self.monomial_coeffs()),
            "binomial": render(self.binomial_coeffs()),
        }


def falling_shifted(shift: int, k: int) -> PolynomialInN:
    """(n + shift)^(k) expanded exactly in the n^(j) basis."""
    return PolynomialInN.coerce(falling(PolynomialInN.n() + shift, k))


# --- measures ----------------------------------------------------------------


def prob(n: int, lam: StrictPartition) -> Rat:
    """P_n(lambda) = 2^{n - l(lambda)} (g^lambda)^2 / n!."""
    if lam.size != n:
        raise ValueError(f"|lambda| = {lam.size} but n = {n}")
    return rat(2 ** (n - lam.length) * g(lam) ** 2, factorial(n))


def prob_mu(mu: StrictPartition, n: int, lam: StrictPartition) -> Rat:
    """P_{mu,n}(lambda); zero unless the diagram of mu sits inside lambda."""
    m = mu.size
    if lam.size != n + m:
        raise ValueError(f"|lambda| = {lam.size} but n + |mu| = {n + m}")
    skew = g_skew(lam, mu)
    if skew == 0:
        return rat(0)
    numer = factorial(m) * 2 ** (n - lam.length + mu.length) * g(lam) * skew
    return rat(numer, factorial(n + m) * g(mu))


# --- averages ----------------------------------------------------------------


def average_bruteforce(f, n: int) -> Rat:
    """E_n[f] summed over all strict partitions of n.

    f may be any evaluator with an ``evaluate(lambda)`` method; this admits
    ordinary power-sum expressions (even parts included) alongside Gamma
    elements.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = ZERO
    for lam in enumerate_strict(n):
        total += prob(n, lam) * f.evaluate(lam)
    return total


def average_mu_bruteforce(f, mu: StrictPartition, n: int) -> Rat:
    """E_{mu,n}[f] summed over all strict partitions of n + |mu|."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = ZERO
    for lam in enumerate_strict(n + mu.size):
        p = prob_mu(mu, n, lam)
        if p:
            total += p * f.evaluate(lam)
    return total


def _require_gamma(f):
    if not isinstance(f, GammaElement):
        raise TypeError(
            "symbolic averages are defined only for supersymmetric functions "
            "(odd power-sum elements); even power sums have no polynomial "
            "average and must go through average_bruteforce"
        )


def average_symbolic(f: GammaElement) -> PolynomialInN:
    """E_n[f] as an exact polynomial: the (1^r) frak-p coefficients of f."""
    _require_gamma(f)
    expansion = expand_gamma_in_frak(f)
    coeffs = {}
    for rho, a in expansion.items():
        if all(p == 1 for p in rho.parts):
            coeffs[rho.length] = a
    return PolynomialInN(coeffs)


def average_mu_symbolic(f: GammaElement, mu: StrictPartition) -> PolynomialInN:
    """E_{mu,n}[f] as an exact polynomial in n."""
    _require_gamma(f)
    expansion = expand_gamma_in_frak(f)
    m = mu.size
    total = PolynomialInN.zero()
    for rho, a in expansion.items():
        rho_t, m1 = tilde(rho)
        value = frak_p_eval(rho_t, mu)
        if not value:
            continue
        total = total + (a * value) * falling_shifted(m - rho_t.size, m1)
    return total


def product_average_closed_form(rho: OddPartition) -> PolynomialInN:
    """The closed form 2^{|rho| - l(rho)} z_rho n^(|rho|) of the product average."""
    return PolynomialInN(
        {rho.size: rat(2 ** (rho.size - rho.length) * z(rho))}
    )


def product_average_check(rho: OddPartition, sigma: OddPartition) -> PolynomialInN:
    """E_n[frak_p(rho) frak_p(sigma)] computed through the symbolic route.

    Contract: equals product_average_closed_form(rho) when rho == sigma and the zero
    polynomial otherwise.  Both arguments must have no part equal to 1.
    """
    if rho.multiplicity(1) or sigma.multiplicity(1):
        raise ValueError("product averages require m_1(rho) = m_1(sigma) = 0")
    return average_symbolic(frak_p(rho) * frak_p(sigma))
