import pytest
from hypothesis import given, settings, strategies as st

from qcongr.identities import MACROS, Evaluator, evaluate, load_registry
from qcongr.qexpr import (
    Dissect,
    ExprError,
    HalveBy,
    Leaf,
    NegateQ,
    Oracle,
    Product,
    Sum,
    format_expr,
    from_json,
    has_halving,
    parse_expr,
    to_json,
    validate,
)
from qcongr.qfunctions import EtaMonomial
from qcongr.series import Ring


def test_monomial_arithmetic_folds_into_one_leaf():
    e = parse_expr("2 q^3 f2^4 f1^-1 / (f3 f1)")
    assert e == Leaf(EtaMonomial(2, 0, 3, eta={1: -2, 2: 4, 3: -1}))


def test_scalar_power_of_two_divisor_records_halving():
    e = parse_expr("f1/4")
    assert e == Leaf(EtaMonomial(1, 2, 0, eta={1: 1}))
    s = parse_expr("(f1 - f2)/2")
    assert isinstance(s, HalveBy) and s.d == 1 and isinstance(s.child, Sum)
    assert has_halving(s) and not has_halving(parse_expr("f1 - f2"))


def test_signs_and_sums():
    e = parse_expr("-f1 + 3 f2 - q f4")
    assert isinstance(e, Sum)
    assert [c.mono.scalar for c in e.children] == [-1, 3, -1]


def test_theta_and_structural_nodes():
    assert parse_expr("a(q^3)") == Leaf(EtaMonomial(theta_a={3: 1}))
    assert parse_expr("a(-q)") == NegateQ(Leaf(EtaMonomial(theta_a={1: 1})))
    assert parse_expr("phi(q)^2") == Leaf(EtaMonomial(theta_phi={1: 2}))
    d = parse_expr("dissect(f1, 3, 2)")
    assert d == Dissect(Leaf(EtaMonomial(eta={1: 1})), 3, 2)
    assert parse_expr("oracle(PDt)") == Oracle("PDt")
    assert isinstance(parse_expr("(f1 + f2)^2"), Product)


def test_macros_expand():
    assert parse_expr("PDT", MACROS) == MACROS["PDT"]
    assert parse_expr("dissect(PDOT, 8, 6)", MACROS).child == MACROS["PDOT"]


@pytest.mark.parametrize(
    "text",
    [
        "f1 +",
        "(f1",
        "dissect(f1, 3)",
        "dissect(f1, 3, 3)",
        "sub(f1, 0)",
        "f1/3",
        "f1/(f2 + f3)",
        "f1/q",
        "(f1 + f2)^-1",
        "g7",
        "oracle(XYZ)",
        "f1 $ f2",
    ],
)
def test_malformed_text_rejected(text):
    with pytest.raises(ExprError):
        parse_expr(text, MACROS)


def test_registry_round_trips_through_json_and_text():
    claims = load_registry()
    ev = Evaluator()
    ring = Ring.mod(1 << 32)
    for c in claims:
        for side in (c.lhs, c.rhs):
            assert from_json(to_json(side)) == side
            if not _mentions_oracle(side):
                again = parse_expr(format_expr(side))
                assert ev(again, 12, ring) == ev(side, 12, ring), c.id


def _mentions_oracle(e):
    if isinstance(e, Oracle):
        return True
    if isinstance(e, (Sum, Product)):
        return any(_mentions_oracle(c) for c in e.children)
    return hasattr(e, "child") and _mentions_oracle(e.child)


@pytest.mark.parametrize(
    "obj, path",
    [
        ({"kind": "eta", "scalar": "1", "eta": {"0": 1}}, "expr.eta"),
        ({"kind": "eta", "scalar": "1", "eta": {"2": 0}}, "expr.eta"),
        ({"kind": "eta", "scalar": True}, "expr"),
        ({"kind": "sum", "children": []}, "expr"),
        ({"kind": "sum", "children": [{"kind": "bogus"}]}, "expr.children[0]"),
        ({"kind": "dissect", "m": 4, "r": 4, "child": {"kind": "eta", "scalar": 1}}, "expr"),
        ({"kind": "substitute", "k": 0, "child": {"kind": "eta", "scalar": 1}}, "expr"),
        ({"kind": "halve", "d": 1}, "expr"),
        ([1, 2], "expr"),
    ],
)
def test_malformed_json_reports_path(obj, path):
    with pytest.raises(ExprError) as info:
        from_json(obj)
    assert info.value.path == path


def test_big_scalars_survive_json():
    big = 10**30 + 7
    leaf = Leaf(EtaMonomial(big, eta={1: 1}))
    assert to_json(leaf)["scalar"] == str(big)
    assert from_json(to_json(leaf)) == leaf


def test_validate_rejects_foreign_objects():
    with pytest.raises(ExprError):
        validate("f1")


monomials = st.builds(
    lambda s, q, eta: EtaMonomial(s, 0, q, eta=eta),
    st.integers(-9, 9).filter(bool),
    st.integers(0, 4),
    st.dictionaries(st.integers(1, 12), st.integers(-5, 5), max_size=3),
)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.lists(monomials, min_size=1, max_size=4))
def test_formatted_sums_parse_back_to_same_series(monos):
    expr = Sum(tuple(Leaf(m) for m in monos)) if len(monos) > 1 else Leaf(monos[0])
    assert evaluate(parse_expr(format_expr(expr)), 30) == evaluate(expr, 30)
