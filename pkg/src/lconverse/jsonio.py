"""JSON encoding of scalars, parameters, twists and factor expressions.

Integers inside rationals are written as decimal strings so that
arbitrary-precision values survive any JSON consumer.  Decoders accept
either strings or native JSON integers and raise :class:`SchemaError`
on anything malformed.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import SchemaError
from .exact import AffineForm, GaussianRational
from .gamma_calculus import FULL, FactorExpr, FourthRootOfUnity, GammaAtom
from .params import ComplexCharacter, DiscreteSummand, Field, Parameter, RealCharacter
from .twisting import FormalTwist, TwistKind


def _int(value, what="integer") -> int:
    if isinstance(value, bool):
        raise SchemaError(f"expected {what}, got boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            pass
    raise SchemaError(f"expected {what}, got {value!r}")


def _require(obj, keys, what):
    if not isinstance(obj, dict):
        raise SchemaError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaError(f"{what} is missing {', '.join(missing)}")


def encode_fraction(q: Fraction) -> list:
    return [str(q.numerator), str(q.denominator)]


def decode_fraction(obj) -> Fraction:
    if not isinstance(obj, list) or len(obj) != 2:
        raise SchemaError(f"rational must be [num, den], got {obj!r}")
    num, den = _int(obj[0]), _int(obj[1])
    if den <= 0:
        raise SchemaError("rational denominator must be positive")
    return Fraction(num, den)


def encode_gr(t: GaussianRational) -> dict:
    return {"re": encode_fraction(t.re), "im": encode_fraction(t.im)}


def decode_gr(obj) -> GaussianRational:
    _require(obj, ("re", "im"), "Gaussian rational")
    return GaussianRational(decode_fraction(obj["re"]), decode_fraction(obj["im"]))


def encode_affine(a: AffineForm) -> dict:
    return {"c0": encode_gr(a.constant), "c1": encode_gr(a.slope)}


def decode_affine(obj) -> AffineForm:
    _require(obj, ("c0", "c1"), "affine form")
    return AffineForm(decode_gr(obj["c0"]), decode_gr(obj["c1"]))


def encode_parameter(p: Parameter) -> dict:
    out = []
    for x in p.summands:
        if isinstance(x, RealCharacter):
            out.append({"kind": "char", "eps": x.eps, "t": encode_gr(x.t)})
        elif isinstance(x, ComplexCharacter):
            out.append({"kind": "char", "N": x.N, "t": encode_gr(x.t)})
        else:
            out.append({"kind": "disc", "N": x.N, "t": encode_gr(x.t)})
    return {"field": p.field.value, "summands": out}


def decode_parameter(obj) -> Parameter:
    _require(obj, ("field", "summands"), "parameter")
    if obj["field"] not in ("R", "C"):
        raise SchemaError(f"field must be 'R' or 'C', got {obj['field']!r}")
    field = Field(obj["field"])
    if not isinstance(obj["summands"], list):
        raise SchemaError("summands must be a list")
    summands = []
    for x in obj["summands"]:
        _require(x, ("kind", "t"), "summand")
        t = decode_gr(x["t"])
        if x["kind"] == "disc":
            if field is not Field.REAL:
                raise SchemaError("discrete summands only exist over R")
            _require(x, ("N",), "summand")
            summands.append(DiscreteSummand(_int(x["N"]), t))
        elif x["kind"] == "char" and field is Field.REAL:
            if "eps" not in x or "N" in x:
                raise SchemaError("characters over R carry 'eps' (0 or 1)")
            eps = _int(x["eps"])
            if eps not in (0, 1):
                raise SchemaError("eps must be 0 or 1")
            summands.append(RealCharacter(eps, t))
        elif x["kind"] == "char":
            if "N" not in x or "eps" in x:
                raise SchemaError("characters over C carry 'N'")
            summands.append(ComplexCharacter(_int(x["N"]), t))
        else:
            raise SchemaError(f"unknown summand kind {x['kind']!r}")
    return Parameter(field, summands)


def encode_expr(f: FactorExpr) -> dict:
    return {
        "exp2": encode_affine(f.exp2),
        "expPi": encode_affine(f.exp_pi),
        "gammas": [{"scale": "1" if a.scale == FULL else "1/2", "shift": encode_gr(a.shift)}
                   for a in f.gammas],
    }


def decode_expr(obj) -> FactorExpr:
    _require(obj, ("exp2", "expPi", "gammas"), "factor expression")
    if not isinstance(obj["gammas"], list):
        raise SchemaError("gammas must be a list")
    atoms = []
    for a in obj["gammas"]:
        _require(a, ("scale", "shift"), "gamma atom")
        if a["scale"] not in ("1", "1/2"):
            raise SchemaError("atom scale must be '1' or '1/2'")
        atoms.append(GammaAtom(Fraction(a["scale"]), decode_gr(a["shift"])))
    return FactorExpr(decode_affine(obj["exp2"]), decode_affine(obj["expPi"]), tuple(atoms))


def encode_twist(tw: FormalTwist) -> dict:
    if tw.kind is TwistKind.REAL_CHAR:
        return {"twist": tw.kind.value, "delta": tw.value}
    return {"twist": tw.kind.value, "M": tw.value}


def decode_twist(obj) -> FormalTwist:
    _require(obj, ("twist",), "twist descriptor")
    kind = obj["twist"]
    try:
        if kind == "C-char":
            _require(obj, ("M",), "twist descriptor")
            return FormalTwist.complex_char(_int(obj["M"]))
        if kind == "R-char":
            _require(obj, ("delta",), "twist descriptor")
            return FormalTwist.real_char(_int(obj["delta"]))
        if kind == "R-disc":
            _require(obj, ("M",), "twist descriptor")
            return FormalTwist.real_disc(_int(obj["M"]))
    except ValueError as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(str(exc)) from None
    raise SchemaError(f"unknown twist kind {kind!r}")


def encode_epsilon(e: FourthRootOfUnity) -> dict:
    return {"k": e.k, "value": repr(e)}


def encode_transcript(entries) -> list:
    return [{"query": encode_twist(tw), "answer": encode_expr(f)} for tw, f in entries]


def decode_transcript(obj) -> list:
    if not isinstance(obj, list):
        raise SchemaError("transcript must be a JSON array")
    out = []
    for entry in obj:
        _require(entry, ("query", "answer"), "transcript entry")
        out.append((decode_twist(entry["query"]), decode_expr(entry["answer"])))
    return out


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True)
