import io
import json
import subprocess
import sys

import pytest

from lconverse import jsonio
from lconverse.cli import run
from lconverse.exact import gr
from lconverse.gamma_calculus import gamma_c_factor
from lconverse.params import Parameter, chi, lam, phi

T = gr("1/3", 1)


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), stdout=out)
    return status, json.loads(out.getvalue())


def P(*summands):
    return json.dumps(jsonio.encode_parameter(Parameter.of(*summands)))


def test_lfactor_complex_character():
    status, out = call("lfactor", P(chi(0, T)))
    assert status == 0
    assert jsonio.decode_expr(out) == gamma_c_factor(T)
    assert jsonio.decode_affine(out["exp2"]).constant == 1 - T


def test_epsilon():
    status, out = call("epsilon", P(lam(1, T)))
    assert status == 0 and out["value"] == "-i"


def test_compare_param_orders():
    a = jsonio.encode_parameter(Parameter.real(phi(3, T), lam(0, 1)))
    b = dict(a, summands=list(reversed(a["summands"])))
    assert call("compare", "--kind", "param", json.dumps(a), json.dumps(b))[0] == 0
    status, out = call("compare", "--kind", "param", P(phi(1, T)), P(phi(5, T)))
    assert status == 3 and out == {"equal": False}


def test_compare_expr():
    f = json.dumps(jsonio.encode_expr(gamma_c_factor(T)))
    g = json.dumps(jsonio.encode_expr(gamma_c_factor(T + 1)))
    assert call("compare", "--kind", "expr", f, f)[0] == 0
    assert call("compare", "--kind", "expr", f, g)[0] == 3


def test_counterexample_gl4():
    status, out = call("counterexample", "gl4", "--N", "1,3,2,2", "--t", '"0,0","1,0"')
    assert status == 0
    assert all(out[k] for k in ("gl1_l_factors_equal", "epsilon_factors_equal",
                                "central_characters_equal", "params_distinct", "gl2_witness", "ok"))
    assert out["witness"]["twist"]["twist"] == "R-disc"


def test_counterexample_gl2_and_gl3():
    status, out = call("counterexample", "gl2", "--N", "1,5", "--t", "1/2,0")
    assert status == 0 and out["ok"]
    status, out = call("counterexample", "gl3", P(phi(1, T)), P(phi(3, T)))
    assert status == 0 and out["params_equal"] is False


def test_twist_and_tensor():
    status, out = call("twist", P(lam(1, T)), '{"twist": "R-char", "delta": 1}')
    assert status == 0 and jsonio.decode_parameter(out) == Parameter.real(lam(0, T - 2))
    status, out = call("tensor", P(phi(1, T)), P(phi(1, 0)))
    assert jsonio.decode_parameter(out).dimension == 4
    status, out = call("rs-lfactor", P(phi(2, T)), P(lam(0, 0)))
    assert jsonio.decode_expr(out) == gamma_c_factor(T)


def test_canonicalize_both_kinds():
    status, out = call("canonicalize", P(phi(-3, T)))
    assert jsonio.decode_parameter(out) == Parameter.real(phi(3, T + 3))
    half = {"exp2": {"c0": {"re": [0, 1], "im": [0, 1]}, "c1": {"re": [0, 1], "im": [0, 1]}},
            "expPi": {"c0": {"re": [0, 1], "im": [0, 1]}, "c1": {"re": [0, 1], "im": [0, 1]}},
            "gammas": [{"scale": "1/2", "shift": {"re": [0, 1], "im": [0, 1]}},
                       {"scale": "1/2", "shift": {"re": [1, 2], "im": [0, 1]}}]}
    status, out = call("canonicalize", json.dumps(half))
    assert [a["scale"] for a in out["gammas"]] == ["1"]


def test_eval_and_near_pole():
    one = json.dumps(jsonio.encode_expr(gamma_c_factor(0)))
    status, out = call("eval", one, "--s", "1,0")
    # Gamma_C(1) = 2 (2 pi)^-1 = 1/pi
    assert status == 0 and abs(float(out["re"]) - 0.318309886183791) < 1e-14
    assert len(out["re"].replace("-", "").replace(".", "").lstrip("0")) <= 15
    status, out = call("eval", one, "--s=-1,0")
    assert status == 4 and out["error"]["type"] == "NearPoleError"


def test_reconstruct_hidden_and_transcript(tmp_path):
    hidden = P(chi(1, T), chi(-2, 0))
    path = tmp_path / "t.json"
    status, out = call("reconstruct", "--hidden", hidden, "--bound", "3",
                       "--n-max", "2", "--save-transcript", str(path))
    assert status == 0 and out["parameter"] == json.loads(hidden)
    status, out = call("reconstruct", "--transcript", str(path), "--field", "C",
                       "--bound", "3", "--n-max", "2")
    assert status == 0 and out["parameter"] == json.loads(hidden)


def test_distinguish():
    status, out = call("distinguish", P(phi(1, T)), P(phi(5, T)))
    assert status == 3 and out["twist"]["twist"] == "R-disc"
    status, out = call("distinguish", P(phi(1, T)), P(phi(1, T)))
    assert status == 0 and out["equal"]


def test_distinguish_real_grid():
    status, out = call("distinguish", "--grid", "R")
    assert status == 0 and out["failures"] == 0


@pytest.mark.parametrize("argv", [
    ["lfactor", "{not json"],
    ["lfactor", '{"field": "X", "summands": []}'],
    ["lfactor", "/no/such/file.json"],
    ["bogus"],
    ["counterexample", "gl2", "--N", "1"],
    ["counterexample", "gl2", "--N", "1,x", "--t", "0,0"],
    ["eval", "{}", "--s", "1"],
])
def test_malformed_inputs(argv):
    status, out = call(*argv)
    assert status == 2 and out["error"]["type"] == "malformed_input"


def test_domain_error():
    status, out = call("counterexample", "gl2", "--N", "2,2", "--t", "0,0")
    assert status == 4 and out["error"]["type"] == "ScopeError"


def test_json_from_file_and_stdin(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(P(chi(0, T)))
    assert call("lfactor", str(path))[0] == 0
    proc = subprocess.run([sys.executable, "-m", "lconverse", "lfactor", "-"],
                          input=P(chi(0, T)), capture_output=True, text=True)
    assert proc.returncode == 0
    assert jsonio.decode_expr(json.loads(proc.stdout)) == gamma_c_factor(T)


def test_byte_stable_output():
    argv = [sys.executable, "-m", "lconverse", "rs-lfactor", P(phi(3, T), lam(1, 0)), P(phi(2, 1))]
    first = subprocess.run(argv, capture_output=True).stdout
    second = subprocess.run(argv, capture_output=True).stdout
    assert first == second and first
