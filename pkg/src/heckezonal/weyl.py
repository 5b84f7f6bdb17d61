"""Extended affine Weyl group of the e-node cyclic (affine type A) diagram.

Elements are affine permutations in window notation: bijections w of the
integers satisfying w(x + e) = w(x) + e, stored through the window
[w(1), ..., w(e)].  Those with zero shift sum form the affine Weyl group
W0, a Coxeter group on the generators s_0, ..., s_{e-1}, where s_i for
i >= 1 swaps the values i, i+1 (mod e) and s_0 = pi * s_1 * pi**-1 for the
rotation element pi : x -> x - 1.  Every element of the extended group
W = <pi> x| W0 has the canonical form pi**k * w0, and the length of w0 is
counted by affine inversions:

    l(w) = sum over 1 <= i < j <= e of |floor((w(j) - w(i)) / e)|

Conjugation by pi lowers generator indices: pi s_i pi**-1 = s_{i-1 mod e}.

>>> s1 = generator(3, 1)
>>> s1.w0.window
(2, 1, 3)
>>> multiply(s1, s1) == ExtendedWeylElement.identity(3)
True
>>> length(multiply(pi_element(3), s1))
1
"""

from __future__ import annotations

import os
from dataclasses import dataclass

__all__ = [
    "AffinePermutation",
    "ExtendedWeylElement",
    "EnumerationCapExceeded",
    "generator",
    "pi_element",
    "multiply",
    "inverse",
    "length",
    "reduced_word",
    "all_reduced_words",
    "is_length_increasing",
    "enumerate_by_length",
    "project_to_finite",
    "conjugate_by_pi",
    "perm_compose",
]

ENUM_CAP_ENV = "HECKE_MAX_ELEMS"
DEFAULT_ENUM_CAP = 1_000_000


class EnumerationCapExceeded(RuntimeError):
    """Enumeration would exceed the configured element cap."""


@dataclass(frozen=True)
class AffinePermutation:
    """An element of W0: a zero-shift affine permutation in window notation."""

    e: int
    window: tuple[int, ...]

    def __post_init__(self):
        e = self.e
        if e < 2:
            raise ValueError("rank e must be at least 2 (W0 is trivial below)")
        if len(self.window) != e:
            raise ValueError("window must have exactly e entries")
        residues = sorted(((v - 1) % e) + 1 for v in self.window)
        if residues != list(range(1, e + 1)):
            raise ValueError("window residues mod e must permute 1..e")
        if sum(self.window) != e * (e + 1) // 2:
            raise ValueError("window shift sum must be zero (not in W0)")

    @classmethod
    def identity(cls, e: int) -> "AffinePermutation":
        return cls(e, tuple(range(1, e + 1)))

    def apply(self, x: int) -> int:
        """Evaluate the bijection at any integer via periodicity."""
        j = (x - 1) % self.e
        return self.window[j] + (x - 1 - j)

    def compose(self, other: "AffinePermutation") -> "AffinePermutation":
        """Function composition self o other (other applied first)."""
        if self.e != other.e:
            raise ValueError("rank mismatch")
        return AffinePermutation(
            self.e, tuple(self.apply(other.apply(i)) for i in range(1, self.e + 1))
        )

    def inverse(self) -> "AffinePermutation":
        e = self.e
        win = [0] * e
        by_residue = {((v - 1) % e): (j, v) for j, v in enumerate(self.window)}
        for target in range(1, e + 1):
            j, v = by_residue[(target - 1) % e]
            win[target - 1] = (j + 1) + (target - v)
        return AffinePermutation(e, tuple(win))

    def length(self) -> int:
        """Coxeter length, via the affine inversion count."""
        e, win = self.e, self.window
        total = 0
        for i in range(e):
            for j in range(i + 1, e):
                total += abs((win[j] - win[i]) // e)
        return total

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.e + 1))

    def has_left_descent(self, i: int) -> bool:
        """True iff l(s_i * self) = l(self) - 1, for i in 0..e-1.

        Left descent at i means the value i appears after the value i+1,
        i.e. self**-1(i) > self**-1(i+1).
        """
        inv = self.inverse()
        return inv.apply(i) > inv.apply(i + 1)

    def reduced_word(self) -> list[int]:
        """A reduced word [i_1, ..., i_l] with self = s_{i_1} ... s_{i_l}."""
        word: list[int] = []
        w = self
        while not w.is_identity():
            for i in range(w.e):
                if w.has_left_descent(i):
                    word.append(i)
                    w = _simple(w.e, i).compose(w)
                    break
            else:  # pragma: no cover - impossible for a non-identity element
                raise AssertionError("non-identity element without descent")
        return word

    def __mul__(self, other):
        if isinstance(other, AffinePermutation):
            return self.compose(other)
        return NotImplemented


def _simple(e: int, i: int) -> AffinePermutation:
    """The simple affine permutation s_i as an element of W0."""
    if not 0 <= i <= e - 1:
        raise ValueError(f"generator index {i} out of range 0..{e - 1}")
    win = list(range(1, e + 1))
    if i >= 1:
        win[i - 1], win[i] = win[i], win[i - 1]
    else:
        win[0] = 0
        win[e - 1] = e + 1
    return AffinePermutation(e, tuple(win))


@dataclass(frozen=True)
class ExtendedWeylElement:
    """Canonical form pi**k * w0 of an extended affine Weyl group element."""

    k: int
    w0: AffinePermutation

    @property
    def e(self) -> int:
        return self.w0.e

    @classmethod
    def identity(cls, e: int) -> "ExtendedWeylElement":
        return cls(0, AffinePermutation.identity(e))

    @classmethod
    def from_w0(cls, w0: AffinePermutation) -> "ExtendedWeylElement":
        return cls(0, w0)

    @classmethod
    def from_full_window(cls, e: int, full: tuple[int, ...]) -> "ExtendedWeylElement":
        """Canonicalize an arbitrary-shift window into pi**k * w0."""
        shift, rem = divmod(sum(full) - e * (e + 1) // 2, e)
        if rem:
            raise ValueError("window shift sum must be a multiple of e")
        k = -shift
        return cls(k, AffinePermutation(e, tuple(v + k for v in full)))

    def full_window(self) -> tuple[int, ...]:
        """Window of the underlying bijection, (pi**k w0)(x) = w0(x) - k."""
        return tuple(v - self.k for v in self.w0.window)

    def apply(self, x: int) -> int:
        return self.w0.apply(x) - self.k

    def length(self) -> int:
        return self.w0.length()

    def is_identity(self) -> bool:
        return self.k == 0 and self.w0.is_identity()

    def multiply(self, other: "ExtendedWeylElement") -> "ExtendedWeylElement":
        if self.e != other.e:
            raise ValueError("rank mismatch")
        full = tuple(self.apply(other.apply(i)) for i in range(1, self.e + 1))
        return ExtendedWeylElement.from_full_window(self.e, full)

    def inverse(self) -> "ExtendedWeylElement":
        e = self.e
        full = self.full_window()
        win = [0] * e
        by_residue = {((v - 1) % e): (j, v) for j, v in enumerate(full)}
        for target in range(1, e + 1):
            j, v = by_residue[(target - 1) % e]
            win[target - 1] = (j + 1) + (target - v)
        return ExtendedWeylElement.from_full_window(e, tuple(win))

    def __mul__(self, other):
        if isinstance(other, ExtendedWeylElement):
            return self.multiply(other)
        return NotImplemented

    def to_json(self) -> dict:
        return {"k": self.k, "window": list(self.w0.window)}

    @classmethod
    def from_json(cls, data: dict, e: int | None = None) -> "ExtendedWeylElement":
        window = tuple(data["window"])
        return cls(int(data["k"]), AffinePermutation(e or len(window), window))


# -- the operations of the group interface -----------------------------


def generator(e: int, i: int) -> ExtendedWeylElement:
    """The Coxeter generator s_i (i in 0..e-1) as an extended element."""
    return ExtendedWeylElement(0, _simple(e, i))


def pi_element(e: int) -> ExtendedWeylElement:
    """The rotation element pi: k = 1, w0 = identity."""
    return ExtendedWeylElement(1, AffinePermutation.identity(e))


def multiply(a: ExtendedWeylElement, b: ExtendedWeylElement) -> ExtendedWeylElement:
    return a.multiply(b)


def inverse(a: ExtendedWeylElement) -> ExtendedWeylElement:
    return a.inverse()


def length(a: ExtendedWeylElement) -> int:
    """Length of the W0 part; the pi power does not contribute."""
    return a.length()


def reduced_word(a) -> list[int]:
    """Reduced word of the W0 part (the pi power is carried separately)."""
    if isinstance(a, ExtendedWeylElement):
        return a.w0.reduced_word()
    return a.reduced_word()


def all_reduced_words(a) -> list[list[int]]:
    """Every reduced word of the W0 part, by exhaustive descent recursion."""
    w0 = a.w0 if isinstance(a, ExtendedWeylElement) else a
    cache: dict[AffinePermutation, list[list[int]]] = {}

    def walk(w: AffinePermutation) -> list[list[int]]:
        if w.is_identity():
            return [[]]
        if w in cache:
            return cache[w]
        words = []
        for i in range(w.e):
            if w.has_left_descent(i):
                for tail in walk(_simple(w.e, i).compose(w)):
                    words.append([i] + tail)
        cache[w] = words
        return words

    return walk(w0)


def is_length_increasing(i: int, a: ExtendedWeylElement) -> bool:
    """True iff l(s_i * a) = l(a) + 1 (the only alternative is l(a) - 1)."""
    if not 0 <= i <= a.e - 1:
        raise ValueError(f"generator index {i} out of range 0..{a.e - 1}")
    # s_i * pi**k * w0 = pi**k * s_{i+k mod e} * w0
    return not a.w0.has_left_descent((i + a.k) % a.e)


def _enum_cap(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


def enumerate_by_length(
    e: int, max_length: int, max_elems: int | None = None
) -> list[list[AffinePermutation]]:
    """Layers of W0 grouped by length, from a breadth-first search.

    Layer l holds every w0 of length exactly l, each once, sorted by
    window, so the output is independent of hash or visit order.  The
    search multiplies by generators only and never consults length(),
    which keeps it usable as an independent distance oracle.
    """
    if max_length < 0:
        raise ValueError("max_length must be nonnegative")
    cap = _enum_cap(max_elems)
    gens = [_simple(e, i) for i in range(e)]
    identity = AffinePermutation.identity(e)
    seen = {identity}
    layers = [[identity]]
    for _ in range(max_length):
        frontier = set()
        for w in layers[-1]:
            for s in gens:
                u = s.compose(w)
                if u not in seen:
                    frontier.add(u)
        if len(seen) + len(frontier) > cap:
            raise EnumerationCapExceeded(
                f"enumeration cap exceeded ({ENUM_CAP_ENV}={cap})"
            )
        seen |= frontier
        layers.append(sorted(frontier, key=lambda p: p.window))
    return layers


def project_to_finite(a: ExtendedWeylElement) -> tuple[int, ...]:
    """Reduction mod e: the induced permutation of residues {1..e}.

    Returned in one-line notation, entry i-1 holding the image of i.
    This is a group homomorphism sending s_i (i >= 1) to the
    transposition (i, i+1), s_0 to (1, e), and pi to the e-cycle
    i -> i-1, the slot cycle of the rotation operator on tensor places.
    """
    e = a.e
    return tuple(((v - 1) % e) + 1 for v in a.full_window())


def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """One-line composition (p o q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def conjugate_by_pi(w0: AffinePermutation, k: int) -> AffinePermutation:
    """pi**k * w0 * pi**-k, again in W0; preserves length."""
    e = w0.e
    return AffinePermutation(
        e, tuple(w0.apply(i + k) - k for i in range(1, e + 1))
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
