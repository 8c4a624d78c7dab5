"""The algebra Gamma of supersymmetric functions in the odd power-sum basis.

A ``GammaElement`` is a finite linear combination of basis monomials
p_rho = p_{rho_1} p_{rho_2} ... indexed by odd partitions rho, stored
sparsely with exact rational coefficients and no explicit zeros.  The
deformed scalar product is <p_rho, p_sigma> = 2^{-l(rho)} z_rho delta.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .partitions import OddPartition, StrictPartition, display_sort_key, z
from .rational import Rat, ZERO, rat, rat_str, parse_rat


def _as_odd(key) -> OddPartition:
    if isinstance(key, OddPartition):
        return key
    return OddPartition(key)


class GammaElement:
    """Immutable sparse element of Gamma in the p-basis."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean = {}
        for key, value in pairs:
            value = rat(value)
            if value:
                clean[_as_odd(key)] = value
        self._coeffs = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "GammaElement":
        return cls()

    @classmethod
    def one(cls) -> "GammaElement":
        return cls({OddPartition(): 1})

    @classmethod
    def p(cls, rho) -> "GammaElement":
        """The basis monomial p_rho (p_r for a single part r)."""
        if isinstance(rho, int):
            rho = (rho,)
        return cls({_as_odd(rho): 1})

    @classmethod
    def term(cls, rho, coeff) -> "GammaElement":
        return cls({_as_odd(rho): coeff})

    # -- structure -----------------------------------------------------------

    def items(self):
        """(rho, coeff) pairs, degree-descending then decreasing lex."""
        return sorted(self._coeffs.items(), key=lambda kv: display_sort_key(kv[0]))

    def support(self) -> list[OddPartition]:
        return [rho for rho, _ in self.items()]

    def coefficient(self, rho) -> Rat:
        return self._coeffs.get(_as_odd(rho), ZERO)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Max |rho| over the support; -1 for the zero element."""
        if not self._coeffs:
            return -1
        return max(rho.size for rho in self._coeffs)

    def homogeneous_component(self, d: int) -> "GammaElement":
        return GammaElement(
            {rho: c for rho, c in self._coeffs.items() if rho.size == d}
        )

    def homogeneous_split(self) -> dict[int, "GammaElement"]:
        by_degree: dict[int, dict] = {}
        for rho, c in self._coeffs.items():
            by_degree.setdefault(rho.size, {})[rho] = c
        return {d: GammaElement(m) for d, m in sorted(by_degree.items())}

    # -- ring operations ------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, GammaElement) and self._coeffs == other._coeffs

    def __add__(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented
        out = dict(self._coeffs)
        for rho, c in other._coeffs.items():
            new = out.get(rho, ZERO) + c
            if new:
                out[rho] = new
            else:
                out.pop(rho, None)
        result = GammaElement.__new__(GammaElement)
        result._coeffs = out
        return result

    def __neg__(self):
        result = GammaElement.__new__(GammaElement)
        result._coeffs = {rho: -c for rho, c in self._coeffs.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GammaElement):
            return self._scale(other)
        out: dict[OddPartition, Rat] = {}
        for rho, a in self._coeffs.items():
            for sigma, b in other._coeffs.items():
                key = OddPartition(
                    sorted(rho.parts + sigma.parts, reverse=True)
                )
                new = out.get(key, ZERO) + a * b
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        result = GammaElement.__new__(GammaElement)
        result._coeffs = out
        return result

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, scalar):
        scalar = rat(scalar)
        result = GammaElement.__new__(GammaElement)
        if not scalar:
            result._coeffs = {}
        else:
            result._coeffs = {rho: c * scalar for rho, c in self._coeffs.items()}
        return result

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = GammaElement.one()
        for _ in range(exponent):
            out = out * self
        return out

    # -- analysis -------------------------------------------------------------

    def evaluate(self, lam: StrictPartition) -> Rat:
        """Value f(lam): substitute p_r -> sum_i lam_i^r in every monomial."""
        total = ZERO
        psums: dict[int, int] = {}
        for rho, c in self._coeffs.items():
            v = c
            for r in rho.parts:
                pr = psums.get(r)
                if pr is None:
                    pr = sum(x**r for x in lam.parts)
                    psums[r] = pr
                v = v * pr
            total += v
        return total

    def d_dp1(self) -> "GammaElement":
        """Formal partial derivative in the p_1 coordinate."""
        out = {}
        for rho, c in self._coeffs.items():
            m1 = rho.multiplicity(1)
            if m1:
                out[OddPartition(rho.parts[:-1])] = c * m1
        return GammaElement(out)

    # -- rendering -------------------------------------------------------------

    def __repr__(self):
        return f"GammaElement({self._coeffs!r})"

    def __str__(self):
        return render_terms(self.items(), "p")

    def to_json_obj(self) -> list:
        return [
            {"partition": str(rho), "coeff": rat_str(c)} for rho, c in self.items()
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "GammaElement":
        return cls(
            {
                OddPartition.from_text(rec["partition"]): parse_rat(rec["coeff"])
                for rec in obj
            }
        )


def render_terms(pairs, symbol: str) -> str:
    """ASCII rendering like ``p[3,1] - 4/3*p[1,1,1]``; "0" when empty."""
    if not pairs:
        return "0"
    chunks = []
    for rho, c in pairs:
        name = f"{symbol}[{rho}]" if rho.parts else "1"
        mag = abs(c)
        if mag == 1 and rho.parts:
            body = name
        elif rho.parts:
            body = f"{rat_str(mag)}*{name}"
        else:
            body = rat_str(mag)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def scalar_product(f: GammaElement, g: GammaElement) -> Rat:
    """Bilinear extension of <p_rho, p_sigma> = 2^{-l(rho)} z_rho delta."""
    total = ZERO
    small, large = (f, g) if len(f._coeffs) <= len(g._coeffs) else (g, f)
    for rho, a in small._coeffs.items():
        b = large._coeffs.get(rho)
        if b is not None:
            total += a * b * rat(z(rho), 2 ** rho.length)
    return total
