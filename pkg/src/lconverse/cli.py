"""Command-line interface: JSON in, JSON out.

Payload arguments are inline JSON text, a path to a JSON file, or ``-``
for standard input.  Exit status: 0 success, 2 malformed input, 3 a
comparison came out false / distinct, 4 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import converse, grids, jsonio
from .errors import LFactorError, SchemaError
from .exact import GaussianRational
from .gamma_calculus import canonicalize_expr, epsilon_factor, eval_numeric, expr_equal, l_factor
from .params import Field, canonicalize, params_equal
from .twisting import apply_twist, rankin_selberg_l, tensor

EXIT_OK, EXIT_MALFORMED, EXIT_FALSE, EXIT_DOMAIN = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(message)


def load_json(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith(("{", "[")):
        text = arg
    elif os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        raise SchemaError(f"{arg!r} is neither JSON nor a readable file")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _param(arg):
    return jsonio.decode_parameter(load_json(arg))


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise SchemaError(f"expected comma-separated integers, got {text!r}") from None


def _scalars(text: str) -> list[GaussianRational]:
    """Parse ``"re,im[,re,im...]"`` into Gaussian rationals."""
    parts = [x.strip().strip('"') for x in text.split(",")]
    if len(parts) % 2:
        raise SchemaError(f"expected re,im pairs, got {text!r}")
    try:
        vals = [Fraction(x) for x in parts]
    except ValueError:
        raise SchemaError(f"bad rational in {text!r}") from None
    return [GaussianRational(vals[i], vals[i + 1]) for i in range(0, len(vals), 2)]


def _complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise SchemaError(f"--s takes 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise SchemaError(f"bad number in {text!r}") from None


def _witness(w) -> dict:
    if isinstance(w, converse.EqualityCertificate):
        return {"equal": True, "parameter": jsonio.encode_parameter(w.parameter)}
    return {"equal": False, "twist": jsonio.encode_twist(w.twist),
            "left": jsonio.encode_expr(w.left), "right": jsonio.encode_expr(w.right)}


def cmd_lfactor(args):
    return jsonio.encode_expr(l_factor(_param(args.param))), EXIT_OK


def cmd_epsilon(args):
    return jsonio.encode_epsilon(epsilon_factor(_param(args.param))), EXIT_OK


def cmd_twist(args):
    p = _param(args.param)
    tw = jsonio.decode_twist(load_json(args.twist))
    if tw.field is not p.field:
        raise SchemaError("twist and parameter live over different fields")
    return jsonio.encode_parameter(apply_twist(p, tw)), EXIT_OK


def cmd_tensor(args):
    return jsonio.encode_parameter(tensor(_param(args.left), _param(args.right))), EXIT_OK


def cmd_rs_lfactor(args):
    return jsonio.encode_expr(rankin_selberg_l(_param(args.left), _param(args.right))), EXIT_OK


def cmd_compare(args):
    left, right = load_json(args.left), load_json(args.right)
    if args.kind == "param":
        equal = params_equal(jsonio.decode_parameter(left), jsonio.decode_parameter(right))
    else:
        equal = expr_equal(jsonio.decode_expr(left), jsonio.decode_expr(right))
    return {"equal": equal}, EXIT_OK if equal else EXIT_FALSE


def cmd_canonicalize(args):
    obj = load_json(args.payload)
    if isinstance(obj, dict) and "field" in obj:
        return jsonio.encode_parameter(canonicalize(jsonio.decode_parameter(obj))), EXIT_OK
    return jsonio.encode_expr(canonicalize_expr(jsonio.decode_expr(obj))), EXIT_OK


def cmd_eval(args):
    value = eval_numeric(jsonio.decode_expr(load_json(args.expr)), _complex(args.s))
    return {"re": f"{value.real:.15g}", "im": f"{value.imag:.15g}"}, EXIT_OK


def cmd_reconstruct(args):
    if (args.hidden is None) == (args.transcript is None):
        raise SchemaError("give exactly one of --hidden or --transcript")
    if args.hidden is not None:
        hidden = _param(args.hidden)
        oracle = converse.ParameterOracle(hidden, bound=args.bound, n_max=args.n_max)
    else:
        if args.field is None or args.bound is None or args.n_max is None:
            raise SchemaError("--transcript needs --field, --bound and --n-max")
        entries = jsonio.decode_transcript(load_json(args.transcript))
        oracle = converse.TranscriptOracle(entries, Field(args.field), args.bound, args.n_max)
    result = converse.reconstruct(oracle)
    out = {"parameter": jsonio.encode_parameter(result)}
    if isinstance(oracle, converse.ParameterOracle):
        out["queries"] = oracle.query_count
        if args.save_transcript:
            with open(args.save_transcript, "w") as fh:
                fh.write(jsonio.dumps(jsonio.encode_transcript(oracle.transcript)) + "\n")
    return out, EXIT_OK


def cmd_distinguish(args):
    if args.grid:
        params = grids.complex_grid() if args.grid == "C" else grids.real_grid()
        failures = grids.undistinguished_pairs(params)
        out = {"grid": args.grid, "parameters": len(params), "failures": len(failures),
               "examples": [[jsonio.encode_parameter(p), jsonio.encode_parameter(q)]
                            for p, q in failures[:5]]}
        return out, EXIT_OK if not failures else EXIT_FALSE
    if args.left is None or args.right is None:
        raise SchemaError("distinguish needs two parameters or --grid")
    w = converse.distinguish(_param(args.left), _param(args.right))
    return _witness(w), EXIT_OK if isinstance(w, converse.EqualityCertificate) else EXIT_FALSE


def cmd_counterexample(args):
    if args.which == "gl2":
        Ns = _ints(args.N)
        ts = _scalars(args.t)
        if len(Ns) != 2 or len(ts) != 1:
            raise SchemaError("gl2 needs --N N,N' and --t re,im")
        report = converse.verify_gl2_counterexample(Ns[0], Ns[1], ts[0])
        out = report.to_dict()
        out["witness"] = _witness(report.witness) if report.witness else None
        return out, EXIT_OK
    if args.which == "gl4":
        Ns = _ints(args.N)
        ts = _scalars(args.t)
        if len(Ns) != 4 or len(ts) != 2:
            raise SchemaError("gl4 needs --N N1,N2,N1',N2' and --t re,im,re,im")
        report = converse.verify_gl4_counterexample(*Ns, *ts)
        out = report.to_dict()
        out["witness"] = _witness(report.witness) if report.witness else None
        return out, EXIT_OK
    # gl3
    if args.grid:
        params = grids.real_grid()
        bad = grids.gl3_violations(params)
        return {"parameters": len(params), "violations": len(bad)}, EXIT_OK if not bad else EXIT_FALSE
    if args.left is None or args.right is None:
        raise SchemaError("gl3 needs two parameters or --grid")
    report = converse.check_gl3_central_proposition(_param(args.left), _param(args.right))
    return report.to_dict(), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lconverse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lfactor", help="L-factor of a parameter")
    p.add_argument("param")
    p.set_defaults(func=cmd_lfactor)

    p = sub.add_parser("epsilon", help="epsilon-factor of a parameter")
    p.add_argument("param")
    p.set_defaults(func=cmd_epsilon)

    p = sub.add_parser("twist", help="apply a twist descriptor to a parameter")
    p.add_argument("param")
    p.add_argument("twist")
    p.set_defaults(func=cmd_twist)

    for name, func, help_ in (("tensor", cmd_tensor, "tensor product of two parameters"),
                              ("rs-lfactor", cmd_rs_lfactor, "Rankin-Selberg L-factor")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(func=func)

    p = sub.add_parser("compare", help="decide equality of parameters or expressions")
    p.add_argument("--kind", choices=("param", "expr"), required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("canonicalize", help="canonical form of a parameter or expression")
    p.add_argument("payload")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("eval", help="evaluate a factor expression numerically")
    p.add_argument("expr")
    p.add_argument("--s", required=True, help="point as 're,im'; write --s=-1,0 for a negative real part")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("reconstruct", help="recover a parameter from twisted L-factors")
    p.add_argument("--hidden", help="parameter hidden behind an in-process oracle")
    p.add_argument("--transcript", help="JSON array of {query, answer} pairs")
    p.add_argument("--field", choices=("R", "C"))
    p.add_argument("--bound", type=int)
    p.add_argument("--n-max", type=int, dest="n_max")
    p.add_argument("--save-transcript", dest="save_transcript")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("distinguish", help="find a twist separating two parameters")
    p.add_argument("left", nargs="?")
    p.add_argument("right", nargs="?")
    p.add_argument("--grid", choices=("R", "C"), help="sweep the desk-scale grid instead")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("counterexample", help="low-rank sharpness checks")
    p.add_argument("which", choices=("gl2", "gl3", "gl4"))
    p.add_argument("left", nargs="?")
    p.add_argument("right", nargs="?")
    p.add_argument("--N")
    p.add_argument("--t")
    p.add_argument("--grid", action="store_true")
    p.set_defaults(func=cmd_counterexample)
    return parser


def _error(kind: str, message: str) -> dict:
    return {"error": {"type": kind, "message": message}}


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "counterexample" and args.which in ("gl2", "gl4"):
            if args.N is None or args.t is None:
                raise SchemaError(f"{args.which} needs --N and --t")
        payload, status = args.func(args)
    except SchemaError as exc:
        payload, status = _error("malformed_input", str(exc)), EXIT_MALFORMED
    except (LFactorError, ValueError) as exc:
        payload, status = _error(type(exc).__name__, str(exc)), EXIT_DOMAIN
    stdout.write(jsonio.dumps(payload) + "\n")
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
