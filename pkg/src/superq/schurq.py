"""Schur P- and Q-functions and the projective character values X^lambda_rho.

Q_lambda is assembled in the p-basis from three ingredients: the one-row
expansion Q_(k) = sum_{rho in OP_k} 2^{l(rho)} z_rho^{-1} p_rho, the
two-row recursion

    Q_(r,s) = Q_(r) Q_(s) + 2 sum_{i=1}^{s} (-1)^i Q_(r+i) Q_(s-i),

and, for length >= 3, the Pfaffian of the skew matrix of two-row functions
(a zero part is appended when the length is odd).  Character values are
read off as coefficients: the coefficient of p_rho in Q_lambda equals
2^{l(rho)} z_rho^{-1} X^lambda_rho; the scalar-product route
X = <p_rho, Q_lambda> is kept alongside as a cross-check.
"""

from __future__ import annotations

from functools import cache

from .gamma import GammaElement, scalar_product
from .partitions import (
    OddPartition,
    StrictPartition,
    enumerate_odd,
    enumerate_strict,
    z,
)
from .rational import Rat, rat


@cache
def q_onerow(k: int) -> GammaElement:
    """The one-row Schur Q-function Q_(k); Q_(0) = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return GammaElement.one()
    return GammaElement(
        {rho: rat(2**rho.length, z(rho)) for rho in enumerate_odd(k)}
    )


@cache
def _two_row(r: int, s: int) -> GammaElement:
    # Q_(r,s) for r > s >= 0, with Q_(r,0) = Q_(r).
    if s == 0:
        return q_onerow(r)
    acc = q_onerow(r) * q_onerow(s)
    for i in range(1, s + 1):
        term = 2 * (q_onerow(r + i) * q_onerow(s - i))
        acc = acc - term if i % 2 else acc + term
    return acc


@cache
def _pfaffian_q(parts: tuple[int, ...]) -> GammaElement:
    # Pfaffian of (Q_(parts_i, parts_j))_{i<j}, expanded along the first row.
    # parts is strictly decreasing with an even number of entries, last >= 0.
    if not parts:
        return GammaElement.one()
    first, rest = parts[0], parts[1:]
    total = GammaElement.zero()
    for idx, pj in enumerate(rest):
        minor = _pfaffian_q(rest[:idx] + rest[idx + 1 :])
        contribution = _two_row(first, pj) * minor
        total = total + contribution if idx % 2 == 0 else total - contribution
    return total


@cache
def q(lam: StrictPartition) -> GammaElement:
    """The Schur Q-function Q_lambda in the p-basis."""
    parts = lam.parts
    if len(parts) == 0:
        return GammaElement.one()
    if len(parts) == 1:
        return q_onerow(parts[0])
    if len(parts) == 2:
        return _two_row(*parts)
    if len(parts) % 2:
        parts = parts + (0,)
    return _pfaffian_q(parts)


def p_fn(lam: StrictPartition) -> GammaElement:
    """The Schur P-function P_lambda = 2^{-l(lambda)} Q_lambda."""
    return q(lam) * rat(1, 2**lam.length)


class CharacterTable:
    """All values X^lambda_rho for |lambda| = |rho| = k (zeros included)."""

    def __init__(self, k: int):
        self.k = k
        self.strict = enumerate_strict(k)
        self.odd = enumerate_odd(k)
        values = {}
        for lam in self.strict:
            expansion = q(lam)
            for rho in self.odd:
                coeff = expansion.coefficient(rho)
                values[(lam, rho)] = coeff * rat(z(rho), 2**rho.length)
        self._values = values

    def value(self, lam: StrictPartition, rho: OddPartition) -> Rat:
        return self._values[(lam, rho)]

    def rows(self):
        """(lambda, [(rho, X^lambda_rho), ...]) in enumeration order."""
        for lam in self.strict:
            yield lam, [(rho, self._values[(lam, rho)]) for rho in self.odd]


@cache
def character_table(k: int) -> CharacterTable:
    return CharacterTable(k)


def character(lam: StrictPartition, rho: OddPartition) -> Rat:
    """X^lambda_rho, read off as a coefficient of Q_lambda."""
    if lam.size != rho.size:
        raise ValueError(
            f"size mismatch: |lambda|={lam.size} but |rho|={rho.size}"
        )
    return character_table(lam.size).value(lam, rho)


def character_via_scalar(lam: StrictPartition, rho: OddPartition) -> Rat:
    """X^lambda_rho = <p_rho, Q_lambda>; independent of the coefficient route."""
    if lam.size != rho.size:
        raise ValueError(
            f"size mismatch: |lambda|={lam.size} but |rho|={rho.size}"
        )
    return scalar_product(GammaElement.p(rho), q(lam))


def expand_p_in_P(rho: OddPartition) -> dict[StrictPartition, Rat]:
    """Coefficients of p_rho = sum_lambda X^lambda_rho P_lambda (zeros dropped)."""
    table = character_table(rho.size)
    out = {}
    for lam in table.strict:
        x = table.value(lam, rho)
        if x:
            out[lam] = x
    return out


def expand_in_P(f: GammaElement) -> dict[StrictPartition, Rat]:
    """P-basis coefficients of an arbitrary element, degree by degree."""
    out: dict[StrictPartition, Rat] = {}
    for d, component in f.homogeneous_split().items():
        table = character_table(d)
        for lam in table.strict:
            total = sum(
                (c * table.value(lam, rho) for rho, c in component.items()),
                start=rat(0),
            )
            if total:
                out[lam] = total
    return out
