"""GL(1) and GL(2) twists, tensor products and Rankin-Selberg L-factors.

Twisting data carries only the constant offsets; the variable ``s`` is
introduced exactly once, by :func:`~lconverse.gamma_calculus.l_factor`.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from .errors import FieldMismatchError, NonCanonicalError
from .gamma_calculus import FactorExpr, l_factor
from .params import (
    ComplexCharacter,
    DiscreteSummand,
    Field,
    Parameter,
    RealCharacter,
    canonicalize,
    multiply_complex_chars,
    multiply_real_chars,
)


class TwistKind(enum.Enum):
    COMPLEX_CHAR = "C-char"
    REAL_CHAR = "R-char"
    REAL_DISC = "R-disc"


@dataclass(frozen=True)
class FormalTwist:
    """Twist by chi_{-M,s}, lam_{delta,s} or phi_{-M,s} with ``s`` formal."""

    kind: TwistKind
    value: int

    def __post_init__(self):
        kind = TwistKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is TwistKind.REAL_CHAR and self.value not in (0, 1):
            raise ValueError("real character twist needs delta in {0, 1}")
        if kind is TwistKind.REAL_DISC and self.value <= 0:
            raise ValueError("discrete twist needs M > 0")

    @classmethod
    def complex_char(cls, M: int) -> "FormalTwist":
        return cls(TwistKind.COMPLEX_CHAR, M)

    @classmethod
    def real_char(cls, delta: int) -> "FormalTwist":
        return cls(TwistKind.REAL_CHAR, delta)

    @classmethod
    def real_disc(cls, M: int) -> "FormalTwist":
        return cls(TwistKind.REAL_DISC, M)

    @property
    def field(self) -> Field:
        return Field.COMPLEX if self.kind is TwistKind.COMPLEX_CHAR else Field.REAL

    @property
    def degree(self) -> int:
        """t in GL(t): 2 for discrete twists, otherwise 1."""
        return 2 if self.kind is TwistKind.REAL_DISC else 1

    def as_parameter(self) -> Parameter:
        """The twisting parameter at s = 0."""
        if self.kind is TwistKind.COMPLEX_CHAR:
            return Parameter.complex(ComplexCharacter(self.value, 0))
        if self.kind is TwistKind.REAL_CHAR:
            return Parameter.real(RealCharacter(self.value, 0))
        return Parameter.real(DiscreteSummand(self.value, 0))

    def __str__(self):
        name = {TwistKind.COMPLEX_CHAR: "chi_{-%d,s}", TwistKind.REAL_CHAR: "lam_{%d,s}",
                TwistKind.REAL_DISC: "phi_{-%d,s}"}[self.kind]
        return name % self.value


def _require(p: Parameter, field: Field):
    if p.field is not field:
        raise FieldMismatchError(f"expected a parameter over {field.value}")


def twist_complex(p: Parameter, M: int) -> Parameter:
    _require(p, Field.COMPLEX)
    return Parameter(Field.COMPLEX, (ComplexCharacter(x.N + M, x.t) for x in p.summands))


def twist_real_by_char(p: Parameter, delta: int) -> Parameter:
    _require(p, Field.REAL)
    twist = RealCharacter(delta, 0)
    out = []
    for x in p.summands:
        if isinstance(x, RealCharacter):
            out.append(multiply_real_chars(x, twist))
        else:
            out.append(DiscreteSummand(x.N, x.t - delta))
    return Parameter(Field.REAL, out)


def tensor_disc_disc(a: DiscreteSummand, b: DiscreteSummand) -> Parameter:
    """phi_{-N,t} (x) phi_{-M,u} = phi_{-(N+M),t+u} + phi_{-(N-M),t+u-M}."""
    if a.N <= 0 or b.N <= 0:
        raise NonCanonicalError("tensor_disc_disc needs N > 0 on both factors")
    N, t, M, u = a.N, a.t, b.N, b.t
    return canonicalize(Parameter.real(
        DiscreteSummand(N + M, t + u), DiscreteSummand(N - M, t + u - M)))


def _tensor_summands(x, y) -> list:
    if isinstance(x, ComplexCharacter):
        return [multiply_complex_chars(x, y)]
    if isinstance(x, RealCharacter) and isinstance(y, RealCharacter):
        return [multiply_real_chars(x, y)]
    if isinstance(x, DiscreteSummand) and isinstance(y, DiscreteSummand):
        return list(tensor_disc_disc(x, y).summands)
    char, disc = (x, y) if isinstance(x, RealCharacter) else (y, x)
    # Ind(chi) (x) lam_{delta,u} = Ind(chi * chi_{0,u-delta})
    return [DiscreteSummand(disc.N, disc.t + char.t - char.eps)]


def tensor(p: Parameter, q: Parameter) -> Parameter:
    if p.field is not q.field:
        raise FieldMismatchError("tensor product of parameters over different fields")
    p, q = canonicalize(p), canonicalize(q)
    out = []
    for x in p.summands:
        for y in q.summands:
            out.extend(_tensor_summands(x, y))
    return canonicalize(Parameter(p.field, out))


def apply_twist(p: Parameter, twist: FormalTwist) -> Parameter:
    """``p`` tensored with the twisting parameter of ``twist`` (s = 0)."""
    if twist.kind is TwistKind.COMPLEX_CHAR:
        return twist_complex(p, twist.value)
    if twist.kind is TwistKind.REAL_CHAR:
        return twist_real_by_char(canonicalize(p), twist.value)
    return tensor(p, twist.as_parameter())


def rankin_selberg_l(p: Parameter, q: Parameter) -> FactorExpr:
    """L(s, p x q) = L(p (x) q (x) |.|^s)."""
    return l_factor(tensor(p, q))


@functools.lru_cache(maxsize=1 << 16)
def twisted_l_factor(p: Parameter, twist: FormalTwist) -> FactorExpr:
    """L-factor of ``p`` twisted by ``twist``, i.e. L(s, p x twist); cached."""
    if p.field is not twist.field:
        raise FieldMismatchError(f"{twist} does not twist parameters over {p.field.value}")
    return l_factor(apply_twist(p, twist))
