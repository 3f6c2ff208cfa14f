import json

import pytest
from hypothesis import given, strategies as st

from lconverse import jsonio
from lconverse.errors import SchemaError
from lconverse.exact import gr
from lconverse.gamma_calculus import l_factor, split_expr
from lconverse.twisting import FormalTwist

from strategies import complex_params, real_params, scalars

twists = st.one_of(
    st.integers(-9, 9).map(FormalTwist.complex_char),
    st.integers(0, 1).map(FormalTwist.real_char),
    st.integers(1, 9).map(FormalTwist.real_disc),
)


def _through_text(obj):
    return json.loads(jsonio.dumps(obj))


@given(scalars)
def test_scalar_roundtrip(t):
    assert jsonio.decode_gr(_through_text(jsonio.encode_gr(t))) == t


@given(st.one_of(complex_params(), real_params(raw=True)))
def test_parameter_roundtrip(p):
    assert jsonio.decode_parameter(_through_text(jsonio.encode_parameter(p))) == p


@given(real_params(raw=True))
def test_expr_roundtrip(p):
    for f in (l_factor(p), split_expr(l_factor(p))):
        assert jsonio.decode_expr(_through_text(jsonio.encode_expr(f))) == f


@given(twists)
def test_twist_roundtrip(tw):
    assert jsonio.decode_twist(_through_text(jsonio.encode_twist(tw))) == tw


def test_big_integers_survive():
    t = gr(10 ** 40 + 1, -(10 ** 30))
    enc = jsonio.encode_gr(t)
    assert enc["re"] == [str(10 ** 40 + 1), "1"]
    assert jsonio.decode_gr(enc) == t


def test_native_integers_accepted():
    assert jsonio.decode_gr({"re": [1, 2], "im": [0, 1]}) == gr("1/2")


@pytest.mark.parametrize("bad", [
    {"field": "Q", "summands": []},
    {"field": "R"},
    {"field": "R", "summands": [{"kind": "char", "N": 1, "t": {"re": [0, 1], "im": [0, 1]}}]},
    {"field": "C", "summands": [{"kind": "disc", "N": 1, "t": {"re": [0, 1], "im": [0, 1]}}]},
    {"field": "R", "summands": [{"kind": "char", "eps": 2, "t": {"re": [0, 1], "im": [0, 1]}}]},
    {"field": "R", "summands": [{"kind": "char", "eps": 0, "t": {"re": [0, 0], "im": [0, 1]}}]},
    {"field": "R", "summands": [{"kind": "blob", "t": {"re": [0, 1], "im": [0, 1]}}]},
    [],
])
def test_malformed_parameters(bad):
    with pytest.raises(SchemaError):
        jsonio.decode_parameter(bad)


def test_malformed_twist():
    with pytest.raises(SchemaError):
        jsonio.decode_twist({"twist": "R-disc", "M": 0})
    with pytest.raises(SchemaError):
        jsonio.decode_twist({"twist": "X"})


@given(real_params())
def test_dumps_deterministic(p):
    assert jsonio.dumps(jsonio.encode_parameter(p)) == jsonio.dumps(jsonio.encode_parameter(p))
