"""Langlands parameters for GL_n over R and C.

Summands store the integer ``N`` of the subscript ``-N`` literally:
``ComplexCharacter(N, t)`` is the character z -> z^(-N) ||z||^t and
``DiscreteSummand(N, t)`` is the induced representation of that character
from W_C to W_R.  ``RealCharacter(eps, t)`` is r -> r^(-eps) |r|^t.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import FieldMismatchError, NonCanonicalError
from .exact import GaussianRational


class Field(enum.Enum):
    REAL = "R"
    COMPLEX = "C"


@dataclass(frozen=True)
class ComplexCharacter:
    N: int
    t: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "t", GaussianRational.coerce(self.t))

    @property
    def sort_key(self):
        return (0, self.N, self.t.re, self.t.im)

    dimension = 1


@dataclass(frozen=True)
class RealCharacter:
    eps: int
    t: GaussianRational

    def __post_init__(self):
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps!r}")
        object.__setattr__(self, "t", GaussianRational.coerce(self.t))

    @property
    def sort_key(self):
        return (0, self.eps, self.t.re, self.t.im)

    dimension = 1


@dataclass(frozen=True)
class DiscreteSummand:
    N: int
    t: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "t", GaussianRational.coerce(self.t))

    @property
    def sort_key(self):
        return (1, self.N, self.t.re, self.t.im)

    dimension = 2


Summand = Union[ComplexCharacter, RealCharacter, DiscreteSummand]
Character = Union[ComplexCharacter, RealCharacter]

_ALLOWED = {
    Field.COMPLEX: (ComplexCharacter,),
    Field.REAL: (RealCharacter, DiscreteSummand),
}


def chi(N: int, t=0) -> ComplexCharacter:
    return ComplexCharacter(N, t)


def lam(eps: int, t=0) -> RealCharacter:
    return RealCharacter(eps, t)


def phi(N: int, t=0) -> DiscreteSummand:
    return DiscreteSummand(N, t)


class Parameter:
    """A finite direct sum of irreducible Weil-group summands.

    The summand multiset is stored as a sorted tuple, so two parameters
    built from the same summands in any order compare equal.  Construction
    does not canonicalize; see :func:`canonicalize`.
    """

    __slots__ = ("field", "summands")

    def __init__(self, field: Field, summands: Iterable[Summand] = ()):
        field = Field(field)
        summands = tuple(summands)
        for x in summands:
            if not isinstance(x, _ALLOWED[field]):
                raise FieldMismatchError(
                    f"{type(x).__name__} is not a summand over {field.value}")
        self.field = field
        self.summands = tuple(sorted(summands, key=lambda x: x.sort_key))

    @classmethod
    def complex(cls, *summands: ComplexCharacter) -> "Parameter":
        return cls(Field.COMPLEX, summands)

    @classmethod
    def real(cls, *summands) -> "Parameter":
        return cls(Field.REAL, summands)

    @classmethod
    def of(cls, *summands: Summand) -> "Parameter":
        """Infer the field from the summand types."""
        if any(isinstance(x, ComplexCharacter) for x in summands):
            return cls(Field.COMPLEX, summands)
        return cls(Field.REAL, summands)

    @property
    def dimension(self) -> int:
        return sum(x.dimension for x in self.summands)

    @property
    def is_canonical(self) -> bool:
        return all(x.N > 0 for x in self.summands if isinstance(x, DiscreteSummand))

    @property
    def characters(self) -> tuple:
        return tuple(x for x in self.summands if not isinstance(x, DiscreteSummand))

    @property
    def discrete(self) -> tuple:
        return tuple(x for x in self.summands if isinstance(x, DiscreteSummand))

    def __add__(self, other: "Parameter") -> "Parameter":
        if other.field is not self.field:
            raise FieldMismatchError("direct sum of parameters over different fields")
        return Parameter(self.field, self.summands + other.summands)

    def __eq__(self, other):
        if not isinstance(other, Parameter):
            return NotImplemented
        return self.field is other.field and self.summands == other.summands

    def __hash__(self):
        return hash((self.field, self.summands))

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __repr__(self):
        body = " + ".join(_summand_str(x) for x in self.summands) or "0"
        return f"Parameter[{self.field.value}]({body})"


def _summand_str(x: Summand) -> str:
    if isinstance(x, ComplexCharacter):
        return f"chi(-{x.N}, {x.t})" if x.N >= 0 else f"chi({-x.N}, {x.t})"
    if isinstance(x, RealCharacter):
        return f"lam({x.eps}, {x.t})"
    return f"phi(-{x.N}, {x.t})" if x.N >= 0 else f"phi({-x.N}, {x.t})"


def canonicalize(raw: Parameter) -> Parameter:
    """Rewrite discrete summands so that every one has ``N > 0``.

    ``N < 0`` uses the conjugation identity (N, t) -> (-N, t - N); ``N = 0``
    is reducible and splits into lam(0, t) + lam(1, t + 1).
    """
    if raw.is_canonical:
        return raw
    out = []
    for x in raw.summands:
        if isinstance(x, DiscreteSummand) and x.N < 0:
            out.append(DiscreteSummand(-x.N, x.t - x.N))
        elif isinstance(x, DiscreteSummand) and x.N == 0:
            out.extend((RealCharacter(0, x.t), RealCharacter(1, x.t + 1)))
        else:
            out.append(x)
    return Parameter(raw.field, out)


def conjugate_complex_char(c: ComplexCharacter) -> ComplexCharacter:
    return ComplexCharacter(-c.N, c.t - c.N)


def multiply_complex_chars(a: ComplexCharacter, b: ComplexCharacter) -> ComplexCharacter:
    return ComplexCharacter(a.N + b.N, a.t + b.t)


def multiply_real_chars(a: RealCharacter, b: RealCharacter) -> RealCharacter:
    # r^-1 * r^-1 = |r|^-2, hence the shift by 2 when both are odd
    gamma = 2 if a.eps == b.eps == 1 else 0
    return RealCharacter((a.eps + b.eps) % 2, a.t + b.t - gamma)


def _disc_determinant(x: DiscreteSummand) -> RealCharacter:
    # sign(r) r^-N |r|^(2t) = sign^(N+1) |r|^(2t-N), and lam(E, T) = sign^E |r|^(T-E)
    E = (x.N + 1) % 2
    return RealCharacter(E, 2 * x.t - x.N + E)


def central_character(p: Parameter) -> Character:
    """Determinant of the parameter, as a character of F^x."""
    if not p.is_canonical:
        raise NonCanonicalError("central_character needs a canonical parameter")
    if p.field is Field.COMPLEX:
        out = ComplexCharacter(0, 0)
        for x in p.summands:
            out = multiply_complex_chars(out, x)
        return out
    out = RealCharacter(0, 0)
    for x in p.summands:
        factor = _disc_determinant(x) if isinstance(x, DiscreteSummand) else x
        out = multiply_real_chars(out, factor)
    return out


def params_equal(a: Parameter, b: Parameter) -> bool:
    if a.field is not b.field:
        raise FieldMismatchError("cannot compare parameters over different fields")
    return canonicalize(a).summands == canonicalize(b).summands


def conductor_bound(*params: Parameter) -> int:
    """Largest ``|N|`` among the canonical summands of ``params`` (0 if none)."""
    bound = 0
    for p in params:
        for x in canonicalize(p).summands:
            if hasattr(x, "N"):
                bound = max(bound, abs(x.N))
    return bound
