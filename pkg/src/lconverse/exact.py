"""Exact Gaussian-rational scalars, affine forms in ``s``, and multisets.

Every complex number handled by the library lives in Q(i): real and
imaginary parts are :class:`fractions.Fraction` values, so equality, the
integer-difference order below and multiset comparisons are all decidable.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import EmptyMultisetError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.re) is not Fraction:
            object.__setattr__(self, "re", Fraction(self.re))
        if type(self.im) is not Fraction:
            object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if type(value) is GaussianRational:
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls(Fraction(value))
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @property
    def key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic sort key on (re, im)."""
        return (self.re, self.im)

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianRational({self})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
HALF = Fraction(1, 2)


def gr(re: Rational | str = 0, im: Rational | str = 0) -> GaussianRational:
    """Shorthand constructor; string parts such as ``"1/2"`` are accepted."""
    return GaussianRational(Fraction(re), Fraction(im))


@dataclass(frozen=True)
class AffineForm:
    """``constant + slope * s`` in the single formal variable ``s``."""

    constant: GaussianRational = ZERO
    slope: GaussianRational = ZERO

    def __post_init__(self):
        object.__setattr__(self, "constant", GaussianRational.coerce(self.constant))
        object.__setattr__(self, "slope", GaussianRational.coerce(self.slope))

    def __add__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.constant + other.constant, self.slope + other.slope)

    def __sub__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.constant - other.constant, self.slope - other.slope)

    def __neg__(self) -> "AffineForm":
        return AffineForm(-self.constant, -self.slope)

    def scale(self, factor) -> "AffineForm":
        return AffineForm(self.constant * factor, self.slope * factor)

    def substitute_shift(self, c) -> "AffineForm":
        """The form obtained by replacing ``s`` with ``s + c``."""
        return AffineForm(self.constant + self.slope * c, self.slope)

    def is_zero(self) -> bool:
        return not self.constant and not self.slope

    def __call__(self, s: complex) -> complex:
        return complex(self.constant) + complex(self.slope) * s

    def __str__(self):
        return f"({self.constant}) + ({self.slope})s"


class Order(enum.Enum):
    PRECEDES = "precedes"
    EQUAL = "equal"
    SUCCEEDS = "succeeds"
    INCOMPARABLE = "incomparable"


def compare(t1: GaussianRational, t2: GaussianRational) -> Order:
    """Position of ``t1`` relative to ``t2`` under the integer-step order.

    ``t1`` precedes ``t2`` exactly when ``t2 - t1`` is a positive integer,
    i.e. when the poles of Gamma(s + t2) form a proper subset of those of
    Gamma(s + t1).
    """
    diff = t2 - t1
    if not diff.is_integer():
        return Order.INCOMPARABLE
    if diff.re > 0:
        return Order.PRECEDES
    if diff.re < 0:
        return Order.SUCCEEDS
    return Order.EQUAL


def _coerce_all(entries) -> list[GaussianRational]:
    return [GaussianRational.coerce(e) for e in entries]


class ScalarMultiset:
    """Immutable finite multiset of Gaussian rationals.

    Entries are kept sorted lexicographically, so equality and hashing are
    multiset semantics and iteration order is deterministic.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable = ()):
        self._entries = tuple(sorted(_coerce_all(entries), key=lambda t: t.key))

    @classmethod
    def from_counts(cls, counts: Counter) -> "ScalarMultiset":
        return cls(t for t, c in counts.items() for _ in range(c))

    def counts(self) -> Counter:
        return Counter(self._entries)

    def __iter__(self) -> Iterator[GaussianRational]:
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __contains__(self, item):
        return GaussianRational.coerce(item) in self._entries

    def count(self, item) -> int:
        return self._entries.count(GaussianRational.coerce(item))

    def __eq__(self, other):
        if not isinstance(other, ScalarMultiset):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __add__(self, other: "ScalarMultiset") -> "ScalarMultiset":
        return ScalarMultiset(self._entries + other._entries)

    def __sub__(self, other: "ScalarMultiset") -> "ScalarMultiset":
        mine, theirs = self.counts(), other.counts()
        if any(mine[t] < c for t, c in theirs.items()):
            raise ValueError("not a sub-multiset")
        return ScalarMultiset.from_counts(mine - theirs)

    def issubset(self, other: "ScalarMultiset") -> bool:
        mine, theirs = self.counts(), other.counts()
        return all(theirs[t] >= c for t, c in mine.items())

    def shifted(self, c) -> "ScalarMultiset":
        return ScalarMultiset(t + c for t in self._entries)

    def distinct(self) -> tuple[GaussianRational, ...]:
        return tuple(dict.fromkeys(self._entries))

    def __repr__(self):
        return "{" + ", ".join(str(t) for t in self._entries) + "}"


def minimal_elements(entries) -> ScalarMultiset:
    """Distinct elements of ``entries`` with no strict predecessor in it.

    Raises :class:`EmptyMultisetError` on empty input.
    """
    values = ScalarMultiset(entries).distinct()
    if not values:
        raise EmptyMultisetError("empty multiset")
    # two values are comparable iff they share the class of t mod Z, so the
    # minimal ones are the smallest real parts within each class
    lowest: dict[tuple, GaussianRational] = {}
    for t in values:
        cls = (t.re - (t.re.numerator // t.re.denominator), t.im)
        if cls not in lowest or t.re < lowest[cls].re:
            lowest[cls] = t
    return ScalarMultiset(lowest.values())


def least_minimal_element(entries) -> GaussianRational:
    """The lexicographically smallest minimal element (deterministic choice)."""
    return next(iter(minimal_elements(entries)))


def multiset_equal(a, b) -> bool:
    return ScalarMultiset(a) == ScalarMultiset(b)
