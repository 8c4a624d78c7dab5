"""The deformed power-sum basis frak-p and its basis changes.

frak_p(rho) = sum_{lambda} X^lambda_rho P*_lambda has top-degree term
p_rho, evaluates in closed form through a single character value, and is
the basis in which shifted Plancherel averages become trivial to read off.
A ``FrakExpansion`` stores coefficients in this basis; it deliberately is
not a ``GammaElement`` so the two bases cannot be mixed up.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Mapping

from .factorial import p_star, p_to_pstar_coeffs
from .gamma import GammaElement, render_terms
from .partitions import (
    OddPartition,
    StrictPartition,
    display_sort_key,
    enumerate_odd,
    falling,
    g,
    z,
)
from .rational import Rat, ZERO, rat, rat_str, parse_rat
from .schurq import character_table


def tilde(rho: OddPartition) -> tuple[OddPartition, int]:
    """Strip the parts equal to 1: returns (rho-tilde, m_1(rho))."""
    kept = tuple(p for p in rho.parts if p != 1)
    return OddPartition(kept), rho.length - len(kept)


def union_ones(rho: OddPartition, k: int) -> OddPartition:
    """The odd partition rho with k extra parts equal to 1 appended."""
    return OddPartition(rho.parts + (1,) * k)


class FrakExpansion:
    """Sparse coefficients of an element written in the frak-p basis."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean = {}
        for key, value in pairs:
            value = rat(value)
            if value:
                if not isinstance(key, OddPartition):
                    key = OddPartition(key)
                clean[key] = value
        self._coeffs = clean

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: display_sort_key(kv[0]))

    def support(self) -> list[OddPartition]:
        return [rho for rho, _ in self.items()]

    def coefficient(self, rho) -> Rat:
        if not isinstance(rho, OddPartition):
            rho = OddPartition(rho)
        return self._coeffs.get(rho, ZERO)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        return isinstance(other, FrakExpansion) and self._coeffs == other._coeffs

    def __repr__(self):
        return f"FrakExpansion({self._coeffs!r})"

    def __str__(self):
        return render_terms(self.items(), "fp")

    def to_json_obj(self) -> list:
        return [
            {"partition": str(rho), "coeff": rat_str(c)} for rho, c in self.items()
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "FrakExpansion":
        return cls(
            {
                OddPartition.from_text(rec["partition"]): parse_rat(rec["coeff"])
                for rec in obj
            }
        )


def deg1(expansion: FrakExpansion) -> int:
    """The filtration degree max(|rho| + m_1(rho)) over the support."""
    if expansion.is_zero():
        raise ValueError("deg1 of the zero element is undefined")
    return max(rho.size + rho.multiplicity(1) for rho in expansion.support())


@cache
def frak_p(rho: OddPartition) -> GammaElement:
    """frak_p(rho) = sum over |lambda| = |rho| of X^lambda_rho P*_lambda."""
    table = character_table(rho.size)
    out = GammaElement.zero()
    for lam in table.strict:
        x = table.value(lam, rho)
        if x:
            out = out + x * p_star(lam)
    return out


def frak_p_eval(rho: OddPartition, lam: StrictPartition) -> Rat:
    """Closed-form value |lambda|^{falling |rho|} X^lambda_{rho-tilde + 1s} / g^lambda."""
    rho_t, _ = tilde(rho)
    n = lam.size
    if rho_t.size > n:
        return rat(0)
    fall = falling(n, rho.size)
    if fall == 0:
        return rat(0)
    x = character_table(n).value(lam, union_ones(rho_t, n - rho_t.size))
    return fall * x * rat(1, g(lam))


def expand_p_in_frak(rho: OddPartition) -> FrakExpansion:
    """Expand p_rho in the frak-p basis by the three-step chain
    p -> P -> P* -> frak-p."""
    k = rho.size
    table = character_table(k)

    # step 1: p_rho = sum_lambda X^lambda_rho P_lambda
    # step 2: each P_lambda into the P*-basis via the Stirling system
    pstar_coeffs: dict[StrictPartition, Rat] = {}
    for lam in table.strict:
        x = table.value(lam, rho)
        if not x:
            continue
        for mu, c in p_to_pstar_coeffs(lam).items():
            new = pstar_coeffs.get(mu, ZERO) + x * c
            if new:
                pstar_coeffs[mu] = new
            else:
                pstar_coeffs.pop(mu, None)

    # step 3: P*_mu = sum_sigma 2^{l(sigma)-l(mu)} z_sigma^{-1} X^mu_sigma fp_sigma
    out: dict[OddPartition, Rat] = {}
    for mu, c in pstar_coeffs.items():
        mu_table = character_table(mu.size)
        for sigma in enumerate_odd(mu.size):
            x = mu_table.value(mu, sigma)
            if not x:
                continue
            weight = c * x * rat(2 ** sigma.length, z(sigma) * 2**mu.length)
            new = out.get(sigma, ZERO) + weight
            if new:
                out[sigma] = new
            else:
                out.pop(sigma, None)
    return FrakExpansion(out)


def expand_gamma_in_frak(f: GammaElement) -> FrakExpansion:
    """Coefficients of an arbitrary element in the frak-p basis.

    Peels homogeneous top components: frak_p(rho) = p_rho + lower degree,
    so the top p-coefficients are the top frak-p coefficients.
    """
    coeffs: dict[OddPartition, Rat] = {}
    remainder = f
    while not remainder.is_zero():
        top = remainder.homogeneous_component(remainder.degree())
        for rho, c in top.items():
            coeffs[rho] = c
            remainder = remainder - c * frak_p(rho)
    return FrakExpansion(coeffs)


def assemble(expansion: FrakExpansion) -> GammaElement:
    """Inverse of :func:`expand_gamma_in_frak`: substitute frak_p(rho)."""
    out = GammaElement.zero()
    for rho, c in expansion.items():
        out = out + c * frak_p(rho)
    return out
