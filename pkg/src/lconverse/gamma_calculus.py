"""Symbolic L-factors: ``2^a(s) * pi^b(s) * prod Gamma(m*s + c)``.

Atoms have scale ``m`` in {1, 1/2}.  The canonical form of an expression
is obtained by splitting every full-scale atom with the duplication formula

    Gamma(z) = 2^(z-1) pi^(-1/2) Gamma(z/2) Gamma((z+1)/2)

and then re-merging half-scale pairs ``{Gamma(s/2+a), Gamma(s/2+a+1/2)}``
greedily in increasing lexicographic order of ``a``.  Because the fully
split form is determined by the function itself (its pole multiset fixes
the half-scale shifts), two expressions are equal as functions of ``s``
exactly when their canonical forms coincide.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import lanczos
from .errors import NearPoleError, NonDivisibleError
from .exact import HALF, ONE, ZERO, AffineForm, GaussianRational, ScalarMultiset
from .params import (
    ComplexCharacter,
    DiscreteSummand,
    Parameter,
    RealCharacter,
    canonicalize,
)

FULL = Fraction(1)
S = AffineForm(ZERO, ONE)
_LOG2 = math.log(2.0)
_LOGPI = math.log(math.pi)


@dataclass(frozen=True)
class GammaAtom:
    """Gamma(scale * s + shift)."""

    scale: Fraction
    shift: GaussianRational

    def __post_init__(self):
        scale = Fraction(self.scale)
        if scale not in (FULL, HALF):
            raise ValueError(f"atom scale must be 1 or 1/2, got {scale}")
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "shift", GaussianRational.coerce(self.shift))

    @property
    def sort_key(self):
        return (self.scale, self.shift.re, self.shift.im)

    @property
    def pole_shift(self) -> GaussianRational:
        """``shift / scale``: the maximal pole sits at ``s = -pole_shift``."""
        return self.shift / self.scale

    def __str__(self):
        m = "s" if self.scale == FULL else "s/2"
        return f"Gamma({m} + {self.shift})"


@dataclass(frozen=True)
class FactorExpr:
    exp2: AffineForm = AffineForm()
    exp_pi: AffineForm = AffineForm()
    gammas: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "gammas", tuple(sorted(self.gammas, key=lambda a: a.sort_key)))

    @classmethod
    def one(cls) -> "FactorExpr":
        return cls()

    def is_one(self) -> bool:
        return not self.gammas and self.exp2.is_zero() and self.exp_pi.is_zero()

    def __mul__(self, other: "FactorExpr") -> "FactorExpr":
        return FactorExpr(self.exp2 + other.exp2, self.exp_pi + other.exp_pi,
                          self.gammas + other.gammas)

    def shifted(self, c) -> "FactorExpr":
        """The expression in ``s`` obtained by substituting ``s + c``."""
        c = GaussianRational.coerce(c)
        return FactorExpr(
            self.exp2.substitute_shift(c),
            self.exp_pi.substitute_shift(c),
            tuple(GammaAtom(a.scale, a.shift + c * a.scale) for a in self.gammas),
        )

    def __str__(self):
        parts = [f"2^[{self.exp2}]", f"pi^[{self.exp_pi}]"]
        parts += [str(a) for a in self.gammas]
        return " * ".join(parts)


class FourthRootOfUnity:
    """The value ``i**k``."""

    __slots__ = ("k",)

    def __init__(self, k: int = 0):
        self.k = k % 4

    def __mul__(self, other: "FourthRootOfUnity") -> "FourthRootOfUnity":
        return FourthRootOfUnity(self.k + other.k)

    def __eq__(self, other):
        if not isinstance(other, FourthRootOfUnity):
            return NotImplemented
        return self.k == other.k

    def __hash__(self):
        return hash(("i^k", self.k))

    def __complex__(self):
        return (1 + 0j, 1j, -1 + 0j, -1j)[self.k]

    def __repr__(self):
        return ("1", "i", "-1", "-i")[self.k]


def _gamma_c(x: GaussianRational) -> FactorExpr:
    # 2 (2 pi)^-(s+x) Gamma(s+x)
    arg = S + AffineForm(x)
    return FactorExpr(AffineForm(ONE) - arg, -arg, (GammaAtom(FULL, x),))


def _gamma_r(x: GaussianRational) -> FactorExpr:
    # pi^-(s+x)/2 Gamma((s+x)/2)
    arg = S + AffineForm(x)
    return FactorExpr(AffineForm(), arg.scale(-HALF), (GammaAtom(HALF, x * HALF),))


def _summand_factor(x) -> FactorExpr:
    if isinstance(x, ComplexCharacter):
        return _gamma_c(x.t if x.N >= 0 else x.t - x.N)
    if isinstance(x, RealCharacter):
        return _gamma_r(x.t)
    if isinstance(x, DiscreteSummand):
        # only reached with N > 0 after canonicalization
        return _gamma_c(x.t)
    raise TypeError(f"unknown summand {x!r}")


def _product(factors: Iterable[FactorExpr]) -> FactorExpr:
    out = FactorExpr.one()
    for f in factors:
        out = out * f
    return out


def l_factor(p: Parameter) -> FactorExpr:
    """L(p x |.|^s) in canonical form."""
    p = canonicalize(p)
    return canonicalize_expr(_product(_summand_factor(x) for x in p.summands))


def epsilon_factor(p: Parameter) -> FourthRootOfUnity:
    p = canonicalize(p)
    k = 0
    for x in p.summands:
        if isinstance(x, ComplexCharacter):
            k += abs(x.N)
        elif isinstance(x, RealCharacter):
            k += 3 * x.eps
        else:
            k += abs(x.N) + 3  # -i^(|N|+1)
    return FourthRootOfUnity(k)


def split_expr(f: FactorExpr) -> FactorExpr:
    """Rewrite every full-scale atom as a pair of half-scale atoms."""
    exp2, exp_pi, atoms = f.exp2, f.exp_pi, []
    for a in f.gammas:
        if a.scale == HALF:
            atoms.append(a)
            continue
        x = a.shift
        # Gamma(s+x) = 2^(s+x-1) pi^(-1/2) Gamma(s/2 + x/2) Gamma(s/2 + x/2 + 1/2)
        exp2 = exp2 + S + AffineForm(x - 1)
        exp_pi = exp_pi + AffineForm(GaussianRational(-HALF))
        atoms.append(GammaAtom(HALF, x * HALF))
        atoms.append(GammaAtom(HALF, x * HALF + HALF))
    return FactorExpr(exp2, exp_pi, tuple(atoms))


def _half_counts(f: FactorExpr) -> Counter:
    assert all(a.scale == HALF for a in f.gammas)
    return Counter(a.shift for a in f.gammas)


def _merge(exp2: AffineForm, exp_pi: AffineForm, counts: Counter) -> FactorExpr:
    atoms = []
    for a in sorted(counts, key=lambda t: t.key):
        c = counts[a]
        if c <= 0:
            continue
        partner = a + HALF
        k = min(c, counts.get(partner, 0))
        if k:
            # Gamma(s/2+a) Gamma(s/2+a+1/2) = 2^(1-s-2a) pi^(1/2) Gamma(s+2a)
            x = a * 2
            exp2 = exp2 + (AffineForm(ONE) - S - AffineForm(x)).scale(k)
            exp_pi = exp_pi + AffineForm(GaussianRational(HALF * k))
            atoms.extend([GammaAtom(FULL, x)] * k)
            counts[partner] -= k
        atoms.extend([GammaAtom(HALF, a)] * (c - k))
    return FactorExpr(exp2, exp_pi, tuple(atoms))


def canonicalize_expr(f: FactorExpr) -> FactorExpr:
    split = split_expr(f)
    return _merge(split.exp2, split.exp_pi, _half_counts(split))


def expr_equal(f: FactorExpr, g: FactorExpr) -> bool:
    return canonicalize_expr(f) == canonicalize_expr(g)


def maximal_pole_shifts(f: FactorExpr, scale=None) -> ScalarMultiset:
    """Multiset of ``shift/scale`` over the atoms of ``f`` as given.

    With ``scale`` set, only atoms of that scale class are read.
    """
    if scale is not None:
        scale = Fraction(scale)
    return ScalarMultiset(
        a.pole_shift for a in f.gammas if scale is None or a.scale == scale)


def divide_expr(f: FactorExpr, g: FactorExpr) -> FactorExpr:
    """``f / g``; raises :class:`NonDivisibleError` unless it is again a
    Gamma product (compared through the fully split forms)."""
    fs, gs = split_expr(f), split_expr(g)
    fc, gc = _half_counts(fs), _half_counts(gs)
    if any(fc[a] < c for a, c in gc.items()):
        raise NonDivisibleError("non-divisible")
    return _merge(fs.exp2 - gs.exp2, fs.exp_pi - gs.exp_pi, fc - gc)


def eval_numeric(f: FactorExpr, s0: complex, pole_tol: float = 1e-6) -> complex:
    """Floating-point value of ``f`` at ``s = s0``."""
    s0 = complex(s0)
    total = f.exp2(s0) * _LOG2 + f.exp_pi(s0) * _LOGPI
    for a in f.gammas:
        m = float(a.scale)
        w = m * s0 + complex(a.shift)
        k = round(w.real)
        if k <= 0 and abs(w - k) / m < pole_tol:
            raise NearPoleError(f"near pole: {a} at s = {s0}")
        total += lanczos.loggamma(w)
    return cmath.exp(total)


def pole_free_point(f: FactorExpr, rng, radius: float = 5.0,
                    min_distance: float = 1e-3) -> complex:
    """Sample a point in the disc of given radius at least ``min_distance``
    away from every pole of ``f``."""
    while True:
        s0 = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        try:
            eval_numeric(f, s0, pole_tol=min_distance)
        except NearPoleError:
            continue
        return s0


def closed_form(const2=0, const_pi=0, slope2=0, slope_pi=0, atoms=()) -> FactorExpr:
    """Build an expression from raw exponent coefficients and ``(scale, shift)`` pairs."""
    return FactorExpr(
        AffineForm(GaussianRational.coerce(const2), GaussianRational.coerce(slope2)),
        AffineForm(GaussianRational.coerce(const_pi), GaussianRational.coerce(slope_pi)),
        tuple(GammaAtom(m, c) for m, c in atoms),
    )


def gamma_c_factor(x) -> FactorExpr:
    """2 (2 pi)^-(s+x) Gamma(s+x), the complex Gamma factor shifted by ``x``."""
    return _gamma_c(GaussianRational.coerce(x))


def gamma_r_factor(x) -> FactorExpr:
    """pi^-(s+x)/2 Gamma((s+x)/2), the real Gamma factor shifted by ``x``."""
    return _gamma_r(GaussianRational.coerce(x))

