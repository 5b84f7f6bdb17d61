"""Double-coset sums of the explicit matrix coefficient against
Iwahori-type volumes, growth series of the affine Weyl group, and the
closed Poincare-series value they converge to.

With the parahoric normalized to volume 1, the double coset indexed by
w0 * pi**k has volume q0**(f**2 * l(w0)) (a block version of the
Iwahori-Matsumoto volume formula, k-independent because the rotation
normalizes the subgroup).  Each volume times the normalized coefficient
value collapses exactly to (-1/q0**f)**l(w0): the exponents satisfy
f**2 - 2f - f(f-1) = -f.  Summing over the e rotation classes and all of
W0 therefore gives

    e * P(-1/q0**f)

for the Poincare series P(X) = sum X**l(w0), computed as the product

    prod_{i=1}^{e-1} (1 - X**(i+1)) / ((1 - X)(1 - X**i))

whose Maclaurin coefficients are cross-checked against breadth-first
enumeration.  Every factor is positive on (-1, 1), so P never vanishes
there.  All arithmetic is exact; truncation quality is reported through
the exact tail bound e * sum_{l > L} N(l) (1/q0**f)**l rather than any
floating tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import LaurentPoly, format_rational
from .spherical import SphericalParams, matrix_coefficient_scalar
from .weyl import AffinePermutation, enumerate_by_length

__all__ = [
    "GrowthSeries",
    "IntegralReport",
    "RequiresOddE",
    "coset_measure",
    "per_term_value",
    "growth_bfs",
    "growth_closed_form",
    "poincare_closed_form",
    "poincare_series_coefficients",
    "poincare_value",
    "distinction_integral",
    "nonvanishing_scan",
]


class RequiresOddE(ValueError):
    """The distinction sum is computed in the odd-rank regime only."""


@dataclass(frozen=True)
class GrowthSeries:
    """Counts N(0..L) of W0 elements by length, with their provenance."""

    e: int
    counts: tuple[int, ...]
    provenance: str  # "BFS" or "ClosedForm"

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("N(0) must be 1 (the identity)")
        if len(self.counts) > 1 and self.counts[1] != self.e:
            raise ValueError("N(1) must equal the number of generators e")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    def to_json(self) -> dict:
        return {"e": self.e, "counts": list(self.counts), "provenance": self.provenance}


def coset_measure(w0: AffinePermutation, k: int, f: int, q0) -> Fraction:
    """Volume q0**(f**2 * l(w0)) of the double coset at w0 * pi**k."""
    q0 = Fraction(q0)
    if q0 < 2:
        raise ValueError("q0 must be at least 2")
    if f < 1:
        raise ValueError("f must be a positive integer")
    return q0 ** (f * f * w0.length())


def per_term_value(w0: AffinePermutation, f: int, q0) -> Fraction:
    """Volume times normalized coefficient value for one coset.

    Computed as the product of the two independent factors; it must
    collapse to (-1/q0**f)**l(w0) by the exponent cancellation.
    """
    p = SphericalParams.numeric(w0.e, f, q0)
    return coset_measure(w0, 0, f, q0) * matrix_coefficient_scalar(w0, 0, p)


def growth_bfs(e: int, max_length: int, max_elems: int | None = None) -> GrowthSeries:
    layers = enumerate_by_length(e, max_length, max_elems)
    return GrowthSeries(e, tuple(len(layer) for layer in layers), "BFS")


def poincare_closed_form(e: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Numerator and denominator of the length generating function.

    The product form over the exponents m_i = i of the finite symmetric
    group: prod (1 - X**(i+1)) / ((1 - X)(1 - X**i)).
    """
    if e < 2:
        raise ValueError("rank e must be at least 2")
    one = LaurentPoly.constant(1, "X")
    x = LaurentPoly.variable("X")
    num = one
    den = one
    for i in range(1, e):
        num = num * (one - x ** (i + 1))
        den = den * (one - x) * (one - x**i)
    return num, den


def poincare_series_coefficients(e: int, max_degree: int) -> list[Fraction]:
    """Maclaurin coefficients of the closed form, by exact long division."""
    num, den = poincare_closed_form(e)
    n = {k: v for k, v in num.coefficients().items()}
    d = {k: v for k, v in den.coefficients().items()}
    d0 = d.get(0)
    if not d0:
        raise ValueError("denominator must have a nonzero constant term")
    coeffs: list[Fraction] = []
    for deg in range(max_degree + 1):
        acc = n.get(deg, Fraction(0))
        for j in range(1, deg + 1):
            dj = d.get(j)
            if dj:
                acc -= dj * coeffs[deg - j]
        coeffs.append(acc / d0)
    return coeffs


def growth_closed_form(e: int, max_length: int) -> GrowthSeries:
    coeffs = poincare_series_coefficients(e, max_length)
    counts = []
    for c in coeffs:
        if c.denominator != 1 or c < 0:
            raise ValueError("closed form produced a non-count coefficient")
        counts.append(int(c))
    return GrowthSeries(e, tuple(counts), "ClosedForm")


def poincare_value(e: int, x) -> Fraction:
    """Exact value of the closed form at a rational point of (-1, 1)."""
    x = Fraction(x)
    if not -1 < x < 1:
        raise ValueError("evaluation point must lie in the open interval (-1, 1)")
    num, den = poincare_closed_form(e)
    d = den.evaluate(x)
    if d == 0:
        raise ZeroDivisionError("pole of the closed form")
    return num.evaluate(x) / d


@dataclass(frozen=True)
class IntegralReport:
    """Exact truncated double-coset sum against its closed-form value."""

    e: int
    f: int
    q0: Fraction
    chi_pi: Fraction
    L: int
    partial_sum: Fraction
    closed_form: Fraction
    abs_error: Fraction
    tail_bound: Fraction
    per_term_ok: bool

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "f": self.f,
            "q0": int(self.q0) if self.q0.denominator == 1 else format_rational(self.q0),
            "L": self.L,
            "chi_pi": format_rational(self.chi_pi),
            "partial_sum": format_rational(self.partial_sum),
            "closed_form": format_rational(self.closed_form),
            "abs_error": format_rational(self.abs_error),
            "tail_bound": format_rational(self.tail_bound),
            "per_term_ok": self.per_term_ok,
        }


def distinction_integral(
    e: int, f: int, q0, L: int, max_elems: int | None = None
) -> IntegralReport:
    """Truncated coset expansion of the invariant-pairing integral.

    partial_sum = e * sum over l(w0) <= L of volume * coefficient,
    normalized by the vector pairing; the k-sum over the e rotation
    classes contributes the factor e because every term is
    k-independent.  closed_form = e * P(-1/q0**f).  The exact tail
    bound dominates |partial_sum - closed_form| and shrinks
    geometrically with L.
    """
    if e % 2 == 0:
        raise RequiresOddE("RequiresOddE: the coset sum is derived for odd e")
    q0 = Fraction(q0)
    if q0 < 2:
        raise ValueError("q0 must be at least 2")
    if L < 0:
        raise ValueError("truncation L must be nonnegative")
    y = Fraction(1) / q0**f
    layers = enumerate_by_length(e, L, max_elems)
    inner = Fraction(0)
    tail_partial = Fraction(0)
    per_term_ok = True
    for ell, layer in enumerate(layers):
        expected = (-y) ** ell
        for w0 in layer:
            term = per_term_value(w0, f, q0)
            if term != expected:
                per_term_ok = False
            inner += term
        tail_partial += len(layer) * y**ell
    partial = e * inner
    closed = e * poincare_value(e, -y)
    tail_bound = e * (poincare_value(e, y) - tail_partial)
    return IntegralReport(
        e=e,
        f=f,
        q0=q0,
        chi_pi=Fraction(1),
        L=L,
        partial_sum=partial,
        closed_form=closed,
        abs_error=abs(partial - closed),
        tail_bound=tail_bound,
        per_term_ok=per_term_ok,
    )


def nonvanishing_scan(e: int, samples) -> dict:
    """Exact positivity of the closed form at rational points of (-1, 1)."""
    rows = []
    all_positive = True
    for x in samples:
        x = Fraction(x)
        value = poincare_value(e, x)
        positive = value > 0
        all_positive = all_positive and positive
        rows.append({"x": format_rational(x), "value": format_rational(value), "positive": positive})
    return {"e": e, "all_positive": all_positive, "samples": rows}
