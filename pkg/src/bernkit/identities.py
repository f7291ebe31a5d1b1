"""Exact verifiers for the Bernoulli/Euler convolution identities.

Every verifier evaluates both sides of one identity in exact rational
arithmetic and returns an IdentityReport whose residual is lhs - rhs;
ok means the residual is literally zero, never merely small.

The quadratic identities (Euler, Miki, the modified Miki form, the FPZ
identity and the mixed B/Bbar identity) are plain folded sums.  The
one-parameter families evaluate gamma-weighted versions of the latter
three at any rational p where no gamma factor is singular: both sides are
assembled term by term as GammaProducts, reduced against the Gamma(p) and
Gamma(2p) bases, checked for a common exponent pair, and compared through
their rational cofactors.  The cubic identities are triple convolutions.
Lemma-expansion checks reconstruct the intermediate asymptotic series of
the squared generating functions by two independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, ExponentMismatch, UnknownName
from .gammaalg import GammaProduct, beta_factor, gamma_reduce
from .sequences import (
    Rational,
    SequenceCache,
    bernoulli,
    bernoulli_bar,
    binomial,
    euler_number,
    harmonic,
    harmonic_second,
    multinomial,
)
from .series import (
    ASYMPTOTIC,
    TAYLOR,
    TruncatedSeries,
    laplace_asymptotic,
    named_series,
    series_add,
    series_mul,
    series_pow,
)

__all__ = [
    "IdentityReport",
    "verify_euler",
    "verify_miki",
    "verify_miki_modified",
    "verify_fpz",
    "verify_mixed",
    "verify_family",
    "verify_p1",
    "verify_gessel",
    "verify_gessel_modified",
    "verify_fpz_cubic",
    "multi_lhs",
    "verify_euler_bernoulli",
    "verify_lemma_expansion",
    "FAMILY_KINDS",
    "LEMMA_IDS",
]

FAMILY_KINDS = ("miki", "fpz", "mixed")
LEMMA_IDS = ("coth-product", "coth-harmonic", "sinh-product", "sinh-harmonic")


@dataclass(frozen=True)
class IdentityReport:
    """Exact evaluation of one identity at one parameter point."""

    identity: str
    n: int
    lhs: Fraction
    rhs: Fraction
    residual: Fraction
    ok: bool
    p: Fraction | None = None
    N: int | None = None

    def as_dict(self) -> dict:
        row: dict = {"identity": self.identity, "n": self.n}
        if self.p is not None:
            row["p"] = str(self.p)
        if self.N is not None:
            row["N"] = self.N
        row["lhs"] = str(self.lhs)
        row["rhs"] = str(self.rhs)
        row["residual"] = str(self.residual)
        row["ok"] = self.ok
        return row


def _report(
    identity: str,
    n: int,
    lhs: Fraction,
    rhs: Fraction,
    p: Fraction | None = None,
    N: int | None = None,
) -> IdentityReport:
    residual = lhs - rhs
    return IdentityReport(identity, n, lhs, rhs, residual, residual == 0, p, N)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def verify_euler(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """sum C(2n,2k) B_2k B_{2n-2k} = -(2n+1) B_2n, for n >= 2."""
    _require(n >= 2, f"euler identity needs n >= 2, got {n}")
    lhs = sum(
        (
            binomial(2 * n, 2 * k) * bernoulli(2 * k, cache) * bernoulli(2 * n - 2 * k, cache)
            for k in range(1, n)
        ),
        Fraction(0),
    )
    rhs = -(2 * n + 1) * bernoulli(2 * n, cache)
    return _report("euler", n, lhs, rhs)


def _quadratic_lhs(n: int, first, second) -> Fraction:
    return sum(
        (
            first(2 * k) * second(2 * n - 2 * k) / Fraction(2 * k) / (2 * n - 2 * k)
            for k in range(1, n)
        ),
        Fraction(0),
    )


def verify_miki(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """Miki's identity, the form with the full harmonic number H_2n."""
    _require(n >= 2, f"miki identity needs n >= 2, got {n}")
    B = lambda m: bernoulli(m, cache)
    lhs = _quadratic_lhs(n, B, B)
    rhs = sum(
        (
            B(2 * k) * B(2 * n - 2 * k) / Fraction(2 * k) / (2 * n - 2 * k) * binomial(2 * n, 2 * k)
            for k in range(1, n)
        ),
        Fraction(0),
    ) + B(2 * n) * harmonic(2 * n) / n
    return _report("miki", n, lhs, rhs)


def verify_miki_modified(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """Miki's identity rewritten with a k=n term and H_{2n-1}.

    The rewritten right side must equal the H_2n form exactly (the k=n
    term and the harmonic shift 1/(2n) trade off), so the two are
    cross-asserted before reporting.
    """
    _require(n >= 2, f"miki identity needs n >= 2, got {n}")
    B = lambda m: bernoulli(m, cache)
    lhs = _quadratic_lhs(n, B, B)
    rhs = (
        sum(
            (
                B(2 * k) * B(2 * n - 2 * k) / Fraction(2 * k) * binomial(2 * n, 2 * k)
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
        / n
        + B(2 * n) * harmonic(2 * n - 1) / n
    )
    assert rhs == verify_miki(n, cache).rhs
    return _report("miki-modified", n, lhs, rhs)


def verify_fpz(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """The Faber-Pandharipande-Zagier identity for the Bbar numbers."""
    _require(n >= 2, f"fpz identity needs n >= 2, got {n}")
    B = lambda m: bernoulli(m, cache)
    Bb = lambda m: bernoulli_bar(m, cache)
    lhs = _quadratic_lhs(n, Bb, Bb)
    rhs = (
        sum(
            (
                B(2 * k) * Bb(2 * n - 2 * k) / Fraction(2 * k) * binomial(2 * n, 2 * k)
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
        / n
        + Bb(2 * n) * harmonic(2 * n - 1) / n
    )
    return _report("fpz", n, lhs, rhs)


def verify_mixed(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """The mixed identity convolving B with Bbar via the doubling relation."""
    _require(n >= 2, f"mixed identity needs n >= 2, got {n}")
    B = lambda m: bernoulli(m, cache)
    Bb = lambda m: bernoulli_bar(m, cache)
    lhs = _quadratic_lhs(n, B, Bb)
    rhs = (
        sum(
            (
                B(2 * k)
                * B(2 * n - 2 * k)
                / Fraction(2 * k)
                * binomial(2 * n, 2 * k)
                * Fraction(1 - 2 ** (2 * k - 1), 2 ** (2 * n - 1))
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
        / n
        + B(2 * n) * harmonic(2 * n - 1) / (n * Fraction(2) ** (2 * n))
    )
    return _report("mixed", n, lhs, rhs)


def _reduce_side(terms: list[GammaProduct], p: Fraction) -> tuple[tuple[int, int], Fraction]:
    reduced = [gamma_reduce(term, p) for term in terms]
    exponents = {(r.exp_gamma_p, r.exp_gamma_2p) for r in reduced}
    if len(exponents) != 1:
        raise ExponentMismatch(f"terms reduce to mixed gamma exponents {sorted(exponents)}")
    return exponents.pop(), sum((r.value for r in reduced), Fraction(0))


def verify_family(
    which: str, n: int, p: Rational, cache: SequenceCache | None = None
) -> IdentityReport:
    """One-parameter gamma-weighted family of the quadratic identities.

    which selects the plain (miki), Bbar (fpz) or mixed variant.  Both
    sides are built as GammaProduct terms, reduced at the rational point p,
    required to share one (Gamma(p), Gamma(2p)) exponent pair, and compared
    through their rational cofactors.
    """
    if which not in FAMILY_KINDS:
        raise UnknownName(f"no family {which!r}")
    _require(n >= 2, f"family identities need n >= 2, got {n}")
    p = Fraction(p)
    B = lambda m: bernoulli(m, cache)
    Bb = lambda m: bernoulli_bar(m, cache)
    lhs_first = Bb if which == "fpz" else B
    lhs_second = B if which == "miki" else Bb

    lhs_terms = []
    for k in range(1, n):
        rat = (
            lhs_first(2 * k)
            * lhs_second(2 * n - 2 * k)
            / Fraction(2 * k)
            / (2 * n - 2 * k)
            / factorial(2 * k - 1)
            / factorial(2 * n - 2 * k - 1)
        )
        lhs_terms.append(GammaProduct((("p", 2 * k, 1), ("p", 2 * n - 2 * k, 1)), rat))

    rhs_terms = []
    for k in range(1, n + 1):
        pair = B(2 * k) * (Bb(2 * n - 2 * k) if which == "fpz" else B(2 * n - 2 * k))
        weight = Fraction(1 - 2 ** (2 * k - 1), 2 ** (2 * n - 1)) if which == "mixed" else Fraction(1)
        rat = 2 * pair * weight / Fraction(factorial(2 * k)) / factorial(2 * n - 2 * k)
        rhs_terms.append(
            GammaProduct(
                (("p", 1, 1), ("p", 2 * k, 1), ("2p", 2 * n, 1), ("2p", 2 * k + 1, -1)), rat
            )
        )
    if which == "miki":
        tail = 2 * B(2 * n) / Fraction(factorial(2 * n))
    elif which == "fpz":
        tail = 2 * Bb(2 * n) / Fraction(factorial(2 * n))
    else:
        tail = B(2 * n) / Fraction(factorial(2 * n)) / 2 ** (2 * n - 1)
    for k in range(1, 2 * n):
        rhs_terms.append(beta_factor(k) * GammaProduct((("2p", 2 * n, 1),), tail))

    lhs_exp, lhs_value = _reduce_side(lhs_terms, p)
    rhs_exp, rhs_value = _reduce_side(rhs_terms, p)
    if lhs_exp != rhs_exp:
        raise ExponentMismatch(f"sides reduce to gamma exponents {lhs_exp} vs {rhs_exp}")
    return _report(f"family-{which}", n, lhs_value, rhs_value, p=p)


def verify_p1(which: str, n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """The p = 1 specializations in their reduced binomial form.

    Each reduced form extends the family's left sum with its k=n term and
    absorbs that term into the right side, so against verify_family at
    p=1 the miki and fpz variants differ by exactly B_2n (resp. Bbar_2n)
    on both sides while the mixed variant coincides; both facts are
    asserted where the domains overlap.
    """
    if which not in FAMILY_KINDS:
        raise UnknownName(f"no family {which!r}")
    B = lambda m: bernoulli(m, cache)
    Bb = lambda m: bernoulli_bar(m, cache)
    if which == "miki":
        _require(n >= 2, f"p=1 miki form needs n >= 2, got {n}")
        lhs = sum((B(2 * k) * B(2 * n - 2 * k) for k in range(1, n + 1)), Fraction(0))
        rhs = (
            sum(
                (
                    B(2 * k) * B(2 * n - 2 * k) * binomial(2 * n + 2, 2 * k + 2)
                    for k in range(1, n + 1)
                ),
                Fraction(0),
            )
            / (n + 1)
            + 2 * n * B(2 * n)
        )
        shift = B(2 * n)
    elif which == "fpz":
        _require(n >= 1, f"p=1 fpz form needs n >= 1, got {n}")
        lhs = sum((Bb(2 * k) * Bb(2 * n - 2 * k) for k in range(1, n + 1)), Fraction(0))
        rhs = (
            sum(
                (
                    B(2 * k) * Bb(2 * n - 2 * k) * binomial(2 * n + 2, 2 * k + 2)
                    for k in range(1, n + 1)
                ),
                Fraction(0),
            )
            / (n + 1)
            + 2 * n * Bb(2 * n)
        )
        shift = Bb(2 * n)
    else:
        _require(n >= 1, f"p=1 mixed form needs n >= 1, got {n}")
        lhs = sum((B(2 * k) * Bb(2 * n - 2 * k) for k in range(1, n)), Fraction(0))
        rhs = (
            sum(
                (
                    B(2 * k)
                    * B(2 * n - 2 * k)
                    * Fraction(1 - 2 ** (2 * k - 1), 2 ** (2 * n - 1))
                    * binomial(2 * n + 2, 2 * k + 2)
                    for k in range(1, n + 1)
                ),
                Fraction(0),
            )
            / (n + 1)
            + (2 * n - 1) * B(2 * n) / Fraction(2) ** (2 * n)
        )
        shift = Fraction(0)
    if n >= 2:
        family = verify_family(which, n, Fraction(1), cache)
        assert lhs == family.lhs + shift and rhs == family.rhs + shift
    return _report(f"p1-{which}", n, lhs, rhs)


def _triple_terms(n: int):
    for k in range(1, n - 1):
        for l in range(1, n - k):
            yield k, l, n - k - l


def _gessel_polynomial_term(n: int, cache: SequenceCache | None) -> Fraction:
    return Fraction(4 * n * n - 6 * n + 5, 4) * bernoulli(2 * n - 2, cache) / (2 * n - 2)


def verify_gessel(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """Gessel's triple convolution identity, for n >= 3."""
    _require(n >= 3, f"gessel identity needs n >= 3, got {n}")
    B = lambda m: bernoulli(m, cache)
    lhs = multi_lhs(3, n, "plain", cache)
    rhs = (
        sum(
            (
                B(2 * k)
                * B(2 * l)
                * B(2 * m)
                / Fraction(8 * k * l * m)
                * multinomial(2 * n, [2 * k, 2 * l, 2 * m])
                for k, l, m in _triple_terms(n)
            ),
            Fraction(0),
        )
        + 3
        * harmonic(2 * n)
        * sum(
            (
                binomial(2 * n, 2 * k) * B(2 * k) * B(2 * n - 2 * k) / Fraction(2 * k) / (2 * n - 2 * k)
                for k in range(1, n)
            ),
            Fraction(0),
        )
        + 6 * harmonic_second(n) * B(2 * n) / (2 * n)
        - _gessel_polynomial_term(n, cache)
    )
    return _report("gessel", n, lhs, rhs)


def verify_gessel_modified(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """The modified Gessel form produced by skipping the integration by parts."""
    _require(n >= 3, f"gessel identity needs n >= 3, got {n}")
    B = lambda m: bernoulli(m, cache)
    lhs = multi_lhs(3, n, "plain", cache)
    rhs = (
        Fraction(3, 2 * n)
        * sum(
            (
                B(2 * k) * B(2 * l) * B(2 * m) / Fraction(4 * k * l)
                * multinomial(2 * n, [2 * k, 2 * l, 2 * m])
                for k, l, m in _triple_terms(n)
            ),
            Fraction(0),
        )
        + Fraction(3, n)
        * harmonic(2 * n)
        * sum(
            (
                binomial(2 * n, 2 * k) * B(2 * k) * B(2 * n - 2 * k) / Fraction(2 * k)
                for k in range(1, n)
            ),
            Fraction(0),
        )
        + 6 * harmonic_second(n) * B(2 * n) / (2 * n)
        - _gessel_polynomial_term(n, cache)
    )
    return _report("gessel-modified", n, lhs, rhs)


def verify_fpz_cubic(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """Cubic analog of the FPZ identity, for n >= 3."""
    _require(n >= 3, f"cubic identities need n >= 3, got {n}")
    B = lambda m: bernoulli(m, cache)
    Bb = lambda m: bernoulli_bar(m, cache)
    lhs = multi_lhs(3, n, "bar", cache)
    rhs = (
        Fraction(3, 2 * n)
        * sum(
            (
                B(2 * k) * B(2 * l) * Bb(2 * m) / Fraction(4 * k * l)
                * multinomial(2 * n, [2 * k, 2 * l, 2 * m])
                for k, l, m in _triple_terms(n)
            ),
            Fraction(0),
        )
        + Fraction(3, n)
        * harmonic(2 * n)
        * sum(
            (
                binomial(2 * n, 2 * k) * B(2 * k) * Bb(2 * n - 2 * k) / Fraction(2 * k)
                for k in range(1, n)
            ),
            Fraction(0),
        )
        + Fraction(3, 2 * n * n)
        * sum(
            (
                binomial(2 * n, 2 * k)
                * B(2 * k)
                / Fraction(2 * k)
                * (B(2 * n - 2 * k) - Bb(2 * n - 2 * k))
                for k in range(1, n)
            ),
            Fraction(0),
        )
        + Fraction(3, 2 * n * n) * harmonic(2 * n - 1) * (B(2 * n) - Bb(2 * n))
        + 6 * harmonic_second(n) * Bb(2 * n) / (2 * n)
        - Fraction(2 * n - 1, 4) * Bb(2 * n - 2)
    )
    return _report("fpz-cubic", n, lhs, rhs)


def multi_lhs(
    N: int, n: int, variant: str = "plain", cache: SequenceCache | None = None
) -> Fraction:
    """N-fold convolution sum of B_2k/(2k) (or Bbar) over k_1+...+k_N = n.

    Computed by direct nested summation and independently as the x^(-2n)
    coefficient of the N-th power of the matching asymptotic series (up to
    the sign (-1)^N); the two routes are asserted equal.
    """
    _require(N >= 2, f"convolution fold count must be >= 2, got {N}")
    _require(n >= N, f"order n must be at least N={N}, got {n}")
    if variant not in ("plain", "bar"):
        raise UnknownName(f"no variant {variant!r}")
    value = bernoulli if variant == "plain" else bernoulli_bar

    memo: dict[tuple[int, int], Fraction] = {}

    def fold(parts: int, total: int) -> Fraction:
        if parts == 1:
            return value(2 * total, cache) / Fraction(2 * total)
        if (parts, total) in memo:
            return memo[(parts, total)]
        acc = sum(
            (value(2 * k, cache) / Fraction(2 * k) * fold(parts - 1, total - k)
             for k in range(1, total - parts + 2)),
            Fraction(0),
        )
        memo[(parts, total)] = acc
        return acc

    direct = fold(N, n)
    base = named_series("psi_tilde" if variant == "plain" else "psi_bar", 2 * n, cache=cache)
    via_series = (-1) ** N * series_pow(base, N).coeff(2 * n)
    assert direct == via_series
    return direct


def verify_euler_bernoulli(n: int, cache: SequenceCache | None = None) -> IdentityReport:
    """Euler-number convolution expressed through Bernoulli numbers, n >= 1."""
    _require(n >= 1, f"euler-bernoulli identity needs n >= 1, got {n}")
    lhs = Fraction(
        sum(
            euler_number(2 * k - 2, cache) * euler_number(2 * n - 2 * k, cache)
            for k in range(1, n + 1)
        )
    )
    rhs = (
        Fraction(2, n)
        * sum(
            (
                bernoulli(2 * k, cache)
                * bernoulli(2 * n - 2 * k, cache)
                / Fraction(k)
                * (2 ** (2 * k) - 1)
                * 2 ** (2 * k - 1)
                * (1 - Fraction(2) ** (2 * n - 2 * k - 1))
                * binomial(2 * n, 2 * k)
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
    )
    return _report("euler-bernoulli", n, lhs, rhs)


def _scaled(series: TruncatedSeries, c: Fraction) -> TruncatedSeries:
    return TruncatedSeries(series.kind, {m: c * v for m, v in series.coeffs.items()}, series.trunc)


def _lemma_closed_form(which: str, order: int, cache: SequenceCache | None) -> TruncatedSeries:
    B = lambda m: bernoulli(m, cache)
    Bb = lambda m: bernoulli_bar(m, cache)
    coeffs: dict[int, Fraction] = {}
    for n in range(1, order // 2 + 1):
        if which == "coth-product":
            if n < 2:
                continue
            coeffs[2 * n] = sum(
                (
                    B(2 * k) * B(2 * n - 2 * k) / Fraction(2 * k) / (2 * n - 2 * k)
                    * binomial(2 * n, 2 * k)
                    for k in range(1, n)
                ),
                Fraction(0),
            )
        elif which == "coth-harmonic":
            coeffs[2 * n] = B(2 * n) * harmonic(2 * n) / n
        elif which == "sinh-product":
            coeffs[2 * n] = (
                sum(
                    (
                        B(2 * k) * Bb(2 * n - 2 * k) / Fraction(2 * k) * binomial(2 * n, 2 * k)
                        for k in range(1, n + 1)
                    ),
                    Fraction(0),
                )
                / n
            )
        else:
            coeffs[2 * n] = Bb(2 * n) * harmonic(2 * n - 1) / n
    return TruncatedSeries(ASYMPTOTIC, coeffs, order)


def _lemma_integral(which: str, order: int, cache: SequenceCache | None) -> TruncatedSeries:
    if which == "coth-product":
        coth = named_series("coth_minus_inv", order, cache=cache)
        log_ratio = named_series("log_sinh_ratio", order, cache=cache)
        return laplace_asymptotic(_scaled(series_mul(coth, log_ratio), Fraction(2)))
    if which == "sinh-product":
        inv_sinh = named_series("inv_sinh_minus_inv", order, cache=cache)
        full = series_add(inv_sinh, TruncatedSeries(TAYLOR, {-1: Fraction(1)}, order))
        log_ratio = named_series("log_sinh_ratio", order, cache=cache)
        return laplace_asymptotic(_scaled(series_mul(full, log_ratio), Fraction(2)))
    # The harmonic-number lemmas: the inner integral of the bracketed
    # difference quotient turns each y^(2m-1) term into -H_2m (plain case,
    # bracket carries an extra u) or -H_{2m-1} (Bbar case, u-free bracket).
    name = "coth_minus_inv" if which == "coth-harmonic" else "inv_sinh_minus_inv"
    source = named_series(name, order - 1, cache=cache)
    offset = 1 if which == "coth-harmonic" else 0
    coeffs = {m: 2 * c * harmonic(m + offset) for m, c in source.coeffs.items()}
    return laplace_asymptotic(TruncatedSeries(TAYLOR, coeffs, order - 1))


def verify_lemma_expansion(which: str, order: int, cache: SequenceCache | None = None) -> bool:
    """Check one intermediate expansion of a squared generating function.

    Each id names a kernel (coth-* for the plain series, sinh-* for the
    modified one) and a form: the *-product ids state the expansion as the
    transform of twice the kernel times the log-sinh-ratio series, the
    *-harmonic ids state it through harmonic-number coefficients.  Route
    (a) evaluates the stated coefficient formula directly; route (b)
    rebuilds it by exact inner integration followed by the term-wise
    transform.  True iff all coefficients through ``order`` agree.
    """
    if which not in LEMMA_IDS:
        raise UnknownName(f"no lemma expansion {which!r}")
    _require(order >= 4 and order % 2 == 0, f"order must be even and >= 4, got {order}")
    closed = _lemma_closed_form(which, order, cache)
    integral = _lemma_integral(which, order, cache)
    return all(closed.coeff(m) == integral.coeff(m) for m in range(order + 1))
