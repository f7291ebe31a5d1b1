"""Exact reduction of gamma-function products at rational argument.

The objects here are finite products of Gamma(p+m) and Gamma(2p+m) factors
with integer offsets m and integer exponents, times a rational scalar.
At a concrete rational p every factor is rewritten against the canonical
bases Gamma(p) and Gamma(2p) through rising factorials,

    Gamma(t+m) = Gamma(t) * (t)_m,

leaving an integer exponent for each base and an exact rational cofactor.
No Legendre duplication is applied: the two bases stay independent, which
keeps every cofactor rational.

When the anchor t (p or 2p) is itself a nonpositive integer, Gamma(t) has
a pole even where Gamma(t+m) is finite, so such factors are folded all the
way down to factorials instead (contributing exponent zero).  Any factor
whose own argument t+m lands on a nonpositive integer is a genuine pole
and raises PoleEncountered.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, ExponentMismatch, PoleEncountered, ZeroDivisor
from .sequences import Rational, rising_factorial

__all__ = [
    "GammaProduct",
    "ReducedGamma",
    "gamma_reduce",
    "beta_factor",
    "beta_sum",
]

BASES = ("p", "2p")


@dataclass(frozen=True)
class GammaProduct:
    """Product of Gamma(base+offset)**exponent factors times a scalar.

    ``factors`` is kept canonical: merged by (base, offset), zero exponents
    dropped, sorted.  Multiplication by another product or by a rational
    works through ``*``.
    """

    factors: tuple[tuple[str, int, int], ...] = ()
    scalar: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        merged: dict[tuple[str, int], int] = {}
        for base, offset, exponent in self.factors:
            if base not in BASES:
                raise DomainError(f"unknown gamma base {base!r}")
            merged[(base, offset)] = merged.get((base, offset), 0) + exponent
        canonical = tuple(
            (base, offset, exponent)
            for (base, offset), exponent in sorted(merged.items())
            if exponent != 0
        )
        object.__setattr__(self, "factors", canonical)
        object.__setattr__(self, "scalar", Fraction(self.scalar))

    def __mul__(self, other: "GammaProduct | Rational | int") -> "GammaProduct":
        if isinstance(other, GammaProduct):
            return GammaProduct(self.factors + other.factors, self.scalar * other.scalar)
        return GammaProduct(self.factors, self.scalar * Fraction(other))

    __rmul__ = __mul__


@dataclass(frozen=True)
class ReducedGamma:
    """Gamma(p)**a * Gamma(2p)**b * value, with value an exact rational."""

    exp_gamma_p: int
    exp_gamma_2p: int
    value: Fraction


def _nonpositive_integer(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


def gamma_reduce(g: GammaProduct, p: Rational) -> ReducedGamma:
    """Reduce ``g`` at the rational point ``p`` to base exponents and cofactor.

    Raises PoleEncountered when any factor's argument is a nonpositive
    integer, and ZeroDivisor if a rising-factorial step would divide by
    zero (unreachable once the pole guard has passed, but kept explicit).
    """
    p = Fraction(p)
    value = g.scalar
    exponents = {"p": 0, "2p": 0}
    for base, offset, exponent in g.factors:
        anchor = p if base == "p" else 2 * p
        argument = anchor + offset
        if _nonpositive_integer(argument):
            raise PoleEncountered(f"Gamma({base}+{offset}) at p={p} has argument {argument}")
        if _nonpositive_integer(anchor):
            # Gamma(anchor) itself is singular; the factor is a pure
            # factorial here and contributes no base exponent.
            value *= Fraction(factorial(int(argument) - 1)) ** exponent
            continue
        if offset >= 0:
            cofactor = rising_factorial(anchor, offset)
        else:
            divisor = rising_factorial(argument, -offset)
            if divisor == 0:
                raise ZeroDivisor(f"({argument})_{-offset} vanishes at p={p}")
            cofactor = 1 / divisor
        if cofactor == 0 and exponent < 0:
            raise ZeroDivisor(f"({anchor})_{offset} vanishes in a denominator at p={p}")
        value *= cofactor**exponent
        exponents[base] += exponent
    return ReducedGamma(exponents["p"], exponents["2p"], value)


def beta_factor(k: int) -> GammaProduct:
    """Beta factor beta(p+k, p+1) = Gamma(p+k) Gamma(p+1) / Gamma(2p+k+1).

    Symbolic in p; evaluate with gamma_reduce at a concrete rational point.
    """
    if k < 1:
        raise DomainError(f"beta factor index must be positive, got {k}")
    return GammaProduct((("p", k, 1), ("p", 1, 1), ("2p", k + 1, -1)))


def beta_sum(n: int, p: Rational) -> ReducedGamma:
    """Sum of beta(p+k, p+1) for k = 1 .. 2n-1, reduced at ``p``.

    Every summand must reduce to the same pair of base exponents; the
    cofactors are then summed.  A disagreement would mean the summands are
    not commensurable and raises ExponentMismatch.
    """
    if n < 1:
        raise DomainError(f"beta sum requires n >= 1, got {n}")
    terms = [gamma_reduce(beta_factor(k), p) for k in range(1, 2 * n)]
    exponents = (terms[0].exp_gamma_p, terms[0].exp_gamma_2p)
    for term in terms[1:]:
        if (term.exp_gamma_p, term.exp_gamma_2p) != exponents:
            raise ExponentMismatch(f"beta summands disagree at p={p}")
    total = sum((term.value for term in terms), Fraction(0))
    return ReducedGamma(exponents[0], exponents[1], total)
