"""Exact scalar arithmetic shared by every algebra module.

Two interchangeable coefficient modes:

* numeric mode: plain `fractions.Fraction` values (arbitrary precision,
  always reduced, positive denominator);
* generic mode: :class:`LaurentPoly`, a one-variable Laurent polynomial
  with Fraction coefficients, for verifying identities at a formal unit
  parameter.

Both modes support ``+``, ``-``, ``*``, integer ``**`` and exact equality,
so the algebra modules are written against ordinary Python arithmetic and
stay agnostic of the mode.  No floating point is used anywhere.

>>> q = LaurentPoly.variable()
>>> q * q.inverse() == 1
True
>>> (-q.inverse()) ** 3 == LaurentPoly.term(-1, -3)
True
>>> (q + 1).evaluate(Fraction(4))
Fraction(5, 1)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "ExactScalar",
    "LaurentPoly",
    "NonInvertibleError",
    "scalar_add",
    "scalar_mul",
    "scalar_neg",
    "scalar_inverse",
    "scalar_power",
    "evaluate",
    "format_rational",
    "parse_rational",
    "scalar_to_json",
]

# Exact rationals.  fractions.Fraction already guarantees the canonical
# form we need: reduced, denominator > 0, zero stored as 0/1.
Rational = Fraction


class NonInvertibleError(ArithmeticError):
    """Inversion of a scalar that is not a unit ("NonInvertible")."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LaurentPoly:
    """Laurent polynomial ``sum c_n * x**n`` with Fraction coefficients.

    Instances are immutable by convention: the constructor normalizes
    (drops zero coefficients) and no method mutates ``self``.  The
    variable name is display-only; arithmetic keeps the left operand's.
    """

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs=None, var: str = "q1"):
        clean: dict[int, Fraction] = {}
        for n, c in (coeffs or {}).items():
            c = _as_fraction(c)
            if c:
                clean[int(n)] = c
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def variable(cls, var: str = "q1") -> "LaurentPoly":
        return cls({1: 1}, var)

    @classmethod
    def constant(cls, c, var: str = "q1") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def term(cls, c, n: int, var: str = "q1") -> "LaurentPoly":
        return cls({n: c}, var)

    # -- inspection ---------------------------------------------------

    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, n: int) -> Fraction:
        return self._coeffs.get(n, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_unit(self) -> bool:
        """True iff the polynomial is a nonzero monomial."""
        return len(self._coeffs) == 1

    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self._coeffs)

    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other}, self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        coeffs = dict(self._coeffs)
        for n, c in other._coeffs.items():
            coeffs[n] = coeffs.get(n, Fraction(0)) + c
        return LaurentPoly(coeffs, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return LaurentPoly({n: -c for n, c in self._coeffs.items()}, self.var)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        coeffs: dict[int, Fraction] = {}
        for n1, c1 in self._coeffs.items():
            for n2, c2 in other._coeffs.items():
                n = n1 + n2
                coeffs[n] = coeffs.get(n, Fraction(0)) + c1 * c2
        return LaurentPoly(coeffs, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPoly({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit:
            raise NonInvertibleError(
                "NonInvertible: only monomials are units in the Laurent ring"
            )
        ((n, c),) = self._coeffs.items()
        return LaurentPoly({-n: Fraction(1) / c}, self.var)

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other}, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # -- evaluation / output ------------------------------------------

    def evaluate(self, x) -> Fraction:
        """Exact substitution of the variable by a rational.

        ``x = 0`` is rejected when negative exponents are present.
        """
        x = _as_fraction(x)
        if x == 0 and any(n < 0 for n in self._coeffs):
            raise ZeroDivisionError(
                "cannot evaluate at 0: negative exponents present"
            )
        total = Fraction(0)
        for n, c in self._coeffs.items():
            total += c * x**n
        return total

    def to_json(self) -> dict[str, str]:
        return {
            str(n): format_rational(c)
            for n, c in sorted(self._coeffs.items())
        }

    def __repr__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for n, c in sorted(self._coeffs.items(), reverse=True):
            if n == 0:
                mono = str(c)
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                mono = f"{head}{self.var}" if n == 1 else f"{head}{self.var}^{n}"
            parts.append(mono)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


ExactScalar = Union[Fraction, LaurentPoly]


# -- mode-agnostic helpers --------------------------------------------


def scalar_add(a, b):
    return a + b


def scalar_mul(a, b):
    return a * b


def scalar_neg(a):
    return -a


def scalar_inverse(a):
    """Inverse of a unit; raises :class:`NonInvertibleError` otherwise."""
    if isinstance(a, LaurentPoly):
        return a.inverse()
    a = _as_fraction(a)
    if a == 0:
        raise NonInvertibleError("NonInvertible: zero has no inverse")
    return 1 / a


def scalar_power(a, n: int):
    """``a ** n`` for any integer n, negative powers through the inverse."""
    if n >= 0:
        if isinstance(a, int):
            a = Fraction(a)
        return a**n
    return scalar_inverse(a) ** (-n)


def evaluate(p, x) -> Fraction:
    """Specialize a scalar at a rational; rationals pass through."""
    if isinstance(p, LaurentPoly):
        return p.evaluate(x)
    return _as_fraction(p)


# -- serialization ----------------------------------------------------


def format_rational(x) -> str:
    """Render as "num/den", always including the denominator."""
    x = _as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse "num/den" or a bare integer string."""
    return Fraction(s.strip())


def scalar_to_json(x):
    if isinstance(x, LaurentPoly):
        return x.to_json()
    return format_rational(x)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
