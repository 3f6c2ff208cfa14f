"""Reconstruction of parameters from twisted L-factors, and witnesses.

Reconstruction reads pole multisets off oracle answers and peels one
constituent at a time, dividing its contribution out of every cached
answer before looking for the next one.  The bookkeeping rests on the
integer-step partial order of :mod:`lconverse.exact`: a Gamma product
prod Gamma(s + x) determines the multiset {x}, and minimal elements of
such multisets correspond to maximal poles.
"""

from __future__ import annotations

import abc
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import (
    FieldMismatchError,
    InconsistentOracleError,
    LFactorError,
    NonDivisibleError,
    ScopeError,
)
from .exact import HALF, GaussianRational, ScalarMultiset, least_minimal_element
from .gamma_calculus import (
    FULL,
    FactorExpr,
    divide_expr,
    epsilon_factor,
    expr_equal,
    canonicalize_expr,
    l_factor,
    maximal_pole_shifts,
    split_expr,
)
from .params import (
    ComplexCharacter,
    DiscreteSummand,
    Field,
    Parameter,
    RealCharacter,
    canonicalize,
    central_character,
    conductor_bound,
    params_equal,
)
from .twisting import FormalTwist, TwistKind, twist_real_by_char, twisted_l_factor

log = logging.getLogger(__name__)


class TwistOracle(abc.ABC):
    """Answers twisted L-factor queries about a parameter it does not reveal.

    ``bound`` caps ``|N|`` over the hidden summands and ``n_max`` caps its
    dimension.  Reconstruction only ever asks for twists inside the finite
    family determined by ``bound``.
    """

    field: Field
    bound: int
    n_max: int

    @abc.abstractmethod
    def answer(self, twist: FormalTwist) -> FactorExpr:
        ...


class ParameterOracle(TwistOracle):
    """Oracle backed by an explicit hidden parameter; records a transcript."""

    def __init__(self, hidden: Parameter, bound: Optional[int] = None,
                 n_max: Optional[int] = None):
        self._hidden = canonicalize(hidden)
        self.field = hidden.field
        self.bound = conductor_bound(hidden) if bound is None else bound
        self.n_max = hidden.dimension if n_max is None else n_max
        self.transcript: list[tuple[FormalTwist, FactorExpr]] = []
        self._cache: dict[FormalTwist, FactorExpr] = {}

    def answer(self, twist: FormalTwist) -> FactorExpr:
        if twist not in self._cache:
            result = twisted_l_factor(self._hidden, twist)
            self._cache[twist] = result
            self.transcript.append((twist, result))
        return self._cache[twist]

    @property
    def query_count(self) -> int:
        return len(self.transcript)


class TranscriptOracle(TwistOracle):
    """Oracle replaying a fixed table of answers."""

    def __init__(self, entries, field: Field, bound: int, n_max: int):
        self.field = Field(field)
        self.bound = bound
        self.n_max = n_max
        self._table = dict(entries)

    def answer(self, twist: FormalTwist) -> FactorExpr:
        try:
            return self._table[twist]
        except KeyError:
            raise InconsistentOracleError(f"transcript has no answer for {twist}") from None


@dataclass(frozen=True)
class Witness:
    twist: FormalTwist
    left: FactorExpr
    right: FactorExpr


@dataclass(frozen=True)
class EqualityCertificate:
    parameter: Parameter
    checked: tuple = ()


def _poles(f: FactorExpr, scale=FULL) -> Counter:
    return maximal_pole_shifts(f, scale=scale).counts()


def _full_poles(f: FactorExpr) -> Counter:
    """Pole multiset of an expression that must be a product of Gamma(s + x)."""
    if any(a.scale != FULL for a in f.gammas):
        raise InconsistentOracleError("expected a product of full-scale Gamma factors")
    return _poles(f)


def _peel(base: Counter, moved: Counter) -> GaussianRational:
    """Find an element of ``D`` given ``base = T`` and ``moved = (T - D) + (D + 1)``.

    Let ``a`` be minimal in ``moved``.  Anything of ``T - D`` lies in
    ``moved``, so if ``a - 1`` occurs in ``T`` it must come from ``D``.
    Otherwise ``a`` itself is an untouched element of ``T - D``; cancel it
    on both sides and look again.
    """
    base, moved = Counter(base), Counter(moved)
    while +moved:
        a = least_minimal_element(ScalarMultiset.from_counts(+moved))
        if base[a - 1] > 0:
            return a - 1
        if base[a] <= 0:
            break
        base[a] -= 1
        moved[a] -= 1
    raise InconsistentOracleError("no consistent parameter")


def _shift_counts(c: Counter, by) -> Counter:
    return Counter({t + by: n for t, n in c.items()})


class _Residuals:
    """Oracle answers with the already recovered constituents divided out."""

    def __init__(self, oracle: TwistOracle):
        self.oracle = oracle
        self.found: list = []
        self._res: dict[FormalTwist, FactorExpr] = {}

    def __getitem__(self, twist: FormalTwist) -> FactorExpr:
        if twist not in self._res:
            raw = self.oracle.answer(twist)
            if self.found:
                raw = self._divide(raw, Parameter(self.oracle.field, self.found), twist)
            self._res[twist] = raw
        return self._res[twist]

    def _divide(self, f, part, twist):
        try:
            return divide_expr(f, twisted_l_factor(part, twist))
        except NonDivisibleError:
            raise InconsistentOracleError("no consistent parameter") from None

    def remove(self, summand):
        self.found.append(summand)
        if sum(x.dimension for x in self.found) > self.oracle.n_max:
            raise InconsistentOracleError("no consistent parameter within the dimension bound")
        part = Parameter(self.oracle.field, [summand])
        for twist, f in list(self._res.items()):
            self._res[twist] = self._divide(f, part, twist)

    def all_trivial(self) -> bool:
        return all(f.is_one() for f in self._res.values())

    def result(self) -> Parameter:
        if not self.all_trivial():
            raise InconsistentOracleError("no consistent parameter")
        return Parameter(self.oracle.field, self.found)


def reconstruct_complex(oracle: TwistOracle) -> Parameter:
    """Recover the hidden complex parameter from GL(1) twists chi_{-M,s}.

    With ``B`` the oracle's bound, the twist M = B leaves every shift
    untouched and exposes T = {t_i}.  Lowering M, the pole multiset first
    moves at M = -N_min - 1, where the constituents with N_i = N_min have
    their shift raised by one; :func:`_peel` then names one of them.
    """
    if oracle.field is not Field.COMPLEX:
        raise FieldMismatchError("reconstruct_complex needs a complex oracle")
    B = oracle.bound
    res = _Residuals(oracle)
    twist = FormalTwist.complex_char
    while True:
        top = res[twist(B)]
        if not top.gammas:
            break
        T = _full_poles(top)
        for M in range(B, -B - 2, -1):
            moved = _full_poles(res[twist(M)])
            if moved != T:
                break
        else:
            raise InconsistentOracleError("no consistent parameter")
        n_min = -M - 1
        t = _peel(T, moved)
        log.debug("complex constituent chi(-%d, %s)", n_min, t)
        res.remove(ComplexCharacter(n_min, t))
    return res.result()


def _split_characters(X0: Counter, X1: Counter):
    """Separate E = {t_i - eps_i} and U = {u_j} from

        X0 = E + U + U   and   X1 = E + U + (U - 1).

    If ``x`` is minimal in X0 then ``x - 1`` can only occur in X1 through
    U - 1, so its presence decides whether ``x`` belongs to U or to E.
    """
    X0, X1 = Counter(X0), Counter(X1)
    E, U = Counter(), Counter()
    while +X0:
        x = least_minimal_element(ScalarMultiset.from_counts(+X0))
        if X1[x - 1] > 0:
            if X0[x] < 2 or X1[x] < 1:
                raise InconsistentOracleError("no consistent parameter")
            U[x] += 1
            X0[x] -= 2
            X1[x] -= 1
            X1[x - 1] -= 1
        else:
            if X1[x] < 1:
                raise InconsistentOracleError("no consistent parameter")
            E[x] += 1
            X0[x] -= 1
            X1[x] -= 1
    if +X1:
        raise InconsistentOracleError("no consistent parameter")
    return E, U


def _pair_parities(T: Counter, E: Counter) -> list[RealCharacter]:
    """Match {t_i} against {t_i - eps_i}.  For ``t`` minimal in T, ``t - 1``
    can only sit in E as ``t - eps`` with eps = 1."""
    T, E = Counter(T), Counter(E)
    chars = []
    while +T:
        t = least_minimal_element(ScalarMultiset.from_counts(+T))
        if E[t - 1] > 0:
            eps = 1
        elif E[t] > 0:
            eps = 0
        else:
            raise InconsistentOracleError("no consistent parameter")
        E[t - eps] -= 1
        T[t] -= 1
        chars.append(RealCharacter(eps, t))
    if +E:
        raise InconsistentOracleError("no consistent parameter")
    return chars


def reconstruct_real(oracle: TwistOracle) -> Parameter:
    """Recover the hidden real parameter from lam_{0,s}, lam_{1,s} and
    phi_{-M,s} (1 <= M <= B + 1) twists.

    1. The product L(p x lam_0 |.|^s) L(p x lam_1 |.|^(s+1)) is the twist by
       phi_{0,s} and has poles E + U + U; the M = 1 twist has E + U + (U - 1).
    2. The lam_0 twist, with U divided out, exposes {t_i} at half scale.
    3. With characters removed, the phi_{-M} twist has poles
       U + {u_j - min(M, N_j)}; shifting the second part by M gives
       {u_j + max(0, M - N_j)}, which first moves at M = N_min + 1.
    """
    if oracle.field is not Field.REAL:
        raise FieldMismatchError("reconstruct_real needs a real oracle")
    B = oracle.bound
    q0 = oracle.answer(FormalTwist.real_char(0))
    q1 = oracle.answer(FormalTwist.real_char(1))
    X0 = _full_poles(canonicalize_expr(q0 * q1.shifted(1)))
    X1 = _full_poles(oracle.answer(FormalTwist.real_disc(1)))
    E, U = _split_characters(X0, X1)

    u_part = Parameter.real(*(DiscreteSummand(1, u) for u in ScalarMultiset.from_counts(U)))
    try:
        rest = split_expr(divide_expr(q0, l_factor(u_part)))
    except NonDivisibleError:
        raise InconsistentOracleError("no consistent parameter") from None
    T = _poles(rest, scale=HALF)
    chars = _pair_parities(T, E)

    res = _Residuals(oracle)
    for c in chars:
        res.remove(c)
    remaining = Counter(U)
    twist = FormalTwist.real_disc
    while +remaining:
        for M in range(1, B + 2):
            poles = _full_poles(res[twist(M)])
            if any(poles[u] < c for u, c in remaining.items()):
                raise InconsistentOracleError("no consistent parameter")
            moved = _shift_counts(poles - remaining, M)
            if moved != +remaining:
                break
        else:
            raise InconsistentOracleError("no consistent parameter")
        n_min = M - 1
        if n_min < 1:
            raise InconsistentOracleError("no consistent parameter")
        u = _peel(remaining, moved)
        log.debug("real constituent phi(-%d, %s)", n_min, u)
        res.remove(DiscreteSummand(n_min, u))
        remaining[u] -= 1
    # every character answer must be reproduced as well
    for delta in (0, 1):
        res[FormalTwist.real_char(delta)]
    return res.result()


def reconstruct(oracle: TwistOracle) -> Parameter:
    if oracle.field is Field.COMPLEX:
        return reconstruct_complex(oracle)
    return reconstruct_real(oracle)


def twist_family(field: Field, bound: int) -> list[FormalTwist]:
    """The finite twist family searched by :func:`distinguish`, in order."""
    if field is Field.COMPLEX:
        return [FormalTwist.complex_char(M) for M in range(-2 * bound - 1, bound + 1)]
    return ([FormalTwist.real_char(0), FormalTwist.real_char(1)]
            + [FormalTwist.real_disc(M) for M in range(1, bound + 2)])


def distinguish(p: Parameter, q: Parameter) -> Union[Witness, EqualityCertificate]:
    """A twist whose L-factors differ on ``p`` and ``q``, or a certificate
    that the two parameters coincide."""
    if p.field is not q.field:
        raise FieldMismatchError("cannot distinguish parameters over different fields")
    family = twist_family(p.field, conductor_bound(p, q))
    if params_equal(p, q):
        return EqualityCertificate(canonicalize(p), tuple(family))
    for twist in family:
        left, right = twisted_l_factor(p, twist), twisted_l_factor(q, twist)
        if not expr_equal(left, right):
            return Witness(twist, left, right)
    raise LFactorError(f"no witness in the twist family for {p} and {q}")


def gl1_signature(p: Parameter) -> tuple:
    """Canonical L-factors of ``p`` under every GL(1) twist of a real parameter."""
    return tuple(twisted_l_factor(p, FormalTwist.real_char(d)) for d in (0, 1))


@dataclass(frozen=True)
class GL3Report:
    central_characters_equal: bool
    gl1_l_factors_equal: bool
    params_equal: bool

    @property
    def is_counterexample(self) -> bool:
        return (self.central_characters_equal and self.gl1_l_factors_equal
                and not self.params_equal)

    def to_dict(self) -> dict:
        return {
            "central_characters_equal": self.central_characters_equal,
            "gl1_l_factors_equal": self.gl1_l_factors_equal,
            "params_equal": self.params_equal,
        }


def check_gl3_central_proposition(p: Parameter, q: Parameter) -> GL3Report:
    """Evaluate both hypotheses and the conclusion of the n <= 3 statement:
    equal central characters and equal GL(1)-twisted L-factors force
    equal parameters."""
    if p.field is not Field.REAL or q.field is not Field.REAL:
        raise FieldMismatchError("the proposition concerns real parameters")
    if p.dimension > 3 or q.dimension > 3:
        raise ScopeError("proposition scope")
    p, q = canonicalize(p), canonicalize(q)
    return GL3Report(
        central_character(p) == central_character(q),
        gl1_signature(p) == gl1_signature(q),
        params_equal(p, q),
    )


@dataclass(frozen=True)
class GL2CounterexampleReport:
    gl1_l_factors_equal: bool
    epsilon_factors_equal: bool
    epsilon_expected_equal: bool
    params_distinct: bool
    witness: Optional[Witness] = field(default=None)

    @property
    def epsilon_rule_holds(self) -> bool:
        return self.epsilon_factors_equal == self.epsilon_expected_equal

    @property
    def gl2_witness(self) -> bool:
        return self.witness is not None and self.witness.twist.kind is TwistKind.REAL_DISC

    @property
    def ok(self) -> bool:
        return (self.gl1_l_factors_equal and self.epsilon_rule_holds
                and self.params_distinct and self.gl2_witness)

    def to_dict(self) -> dict:
        return {
            "gl1_l_factors_equal": self.gl1_l_factors_equal,
            "epsilon_factors_equal": self.epsilon_factors_equal,
            "epsilon_expected_equal": self.epsilon_expected_equal,
            "params_distinct": self.params_distinct,
            "gl2_witness": self.gl2_witness,
            "ok": self.ok,
        }


def verify_gl2_counterexample(N: int, Np: int, t) -> GL2CounterexampleReport:
    if N <= 0 or Np <= 0:
        raise ScopeError("N and N' must be positive")
    if N == Np:
        raise ScopeError("not a counterexample")
    t = GaussianRational.coerce(t)
    p = Parameter.real(DiscreteSummand(N, t))
    q = Parameter.real(DiscreteSummand(Np, t))
    eps_equal = all(
        epsilon_factor(twist_real_by_char(p, d)) == epsilon_factor(twist_real_by_char(q, d))
        for d in (0, 1))
    witness = distinguish(p, q)
    return GL2CounterexampleReport(
        gl1_l_factors_equal=gl1_signature(p) == gl1_signature(q),
        epsilon_factors_equal=eps_equal,
        epsilon_expected_equal=(N - Np) % 4 == 0,
        params_distinct=not params_equal(p, q),
        witness=witness if isinstance(witness, Witness) else None,
    )


@dataclass(frozen=True)
class GL4CounterexampleReport:
    gl1_l_factors_equal: bool
    epsilon_factors_equal: bool
    central_characters_equal: bool
    params_distinct: bool
    witness: Optional[Witness] = field(default=None)

    @property
    def gl2_witness(self) -> bool:
        return self.witness is not None and self.witness.twist.kind is TwistKind.REAL_DISC

    @property
    def ok(self) -> bool:
        return (self.gl1_l_factors_equal and self.epsilon_factors_equal
                and self.central_characters_equal and self.params_distinct
                and self.gl2_witness)

    def to_dict(self) -> dict:
        return {
            "gl1_l_factors_equal": self.gl1_l_factors_equal,
            "epsilon_factors_equal": self.epsilon_factors_equal,
            "central_characters_equal": self.central_characters_equal,
            "params_distinct": self.params_distinct,
            "gl2_witness": self.gl2_witness,
            "ok": self.ok,
        }


def verify_gl4_counterexample(N1, N2, N1p, N2p, t1, t2) -> GL4CounterexampleReport:
    if min(N1, N2, N1p, N2p) <= 0:
        raise ScopeError("all N must be positive")
    if sorted((N1, N2)) == sorted((N1p, N2p)) or N1 + N2 != N1p + N2p:
        raise ScopeError("not a counterexample")
    p = Parameter.real(DiscreteSummand(N1, t1), DiscreteSummand(N2, t2))
    q = Parameter.real(DiscreteSummand(N1p, t1), DiscreteSummand(N2p, t2))
    eps_equal = all(
        epsilon_factor(twist_real_by_char(p, d)) == epsilon_factor(twist_real_by_char(q, d))
        for d in (0, 1))
    witness = distinguish(p, q)
    return GL4CounterexampleReport(
        gl1_l_factors_equal=gl1_signature(p) == gl1_signature(q),
        epsilon_factors_equal=eps_equal,
        central_characters_equal=central_character(p) == central_character(q),
        params_distinct=not params_equal(p, q),
        witness=witness if isinstance(witness, Witness) else None,
    )


__all__ = [
    "TwistOracle", "ParameterOracle", "TranscriptOracle", "Witness",
    "EqualityCertificate", "reconstruct", "reconstruct_complex", "reconstruct_real",
    "distinguish", "twist_family", "check_gl3_central_proposition",
    "verify_gl2_counterexample", "verify_gl4_counterexample",
]
