import json

import pytest
from hypothesis import given, settings, strategies as st

from qcongr import identities
from qcongr.identities import (
    MACROS,
    Evaluator,
    IdentityClaim,
    RegistryError,
    claim_to_json,
    evaluate,
    filter_claims,
    load_registry,
    verify,
    verify_all,
)
from qcongr.oracle import enumerate_counts
from qcongr.qexpr import Leaf, Sum, parse_expr
from qcongr.qfunctions import EtaMonomial
from qcongr.series import EXACT, Ring

F1F3_EVEN = "f2 f8^2 f12^4/(f4^2 f6 f24^2)"
F1F3_ODD = "q f4^4 f6 f24^2/(f2 f8^2 f12^2)"


def claim(lhs, rhs, mod=None, id_="T", order=200, probe=False):
    return IdentityClaim(id_, parse_expr(lhs, MACROS), parse_expr(rhs, MACROS), mod, "", order, probe)


@pytest.fixture(scope="module")
def registry():
    return load_registry()


def test_two_dissection_of_f1f3_holds_exactly():
    assert verify(claim("f1 f3", f"{F1F3_EVEN} - {F1F3_ODD}"), 500).passed


def test_perturbed_identity_reports_first_mismatch():
    report = verify(claim("f1 f3", f"{F1F3_EVEN} + {F1F3_ODD}"), 500)
    assert not report.passed and report.status == "failed"
    assert (report.first_mismatch, report.lhs_coeff, report.rhs_coeff) == (1, -1, 1)
    assert "first mismatch at q^1" in report.line()


def test_sequence_expansions_match_enumeration():
    ev = Evaluator()
    cols = list(zip(*(enumerate_counts(n) for n in range(21))))
    for macro, col in zip(("PDGF", "PDOGF", "PDT", "PDOT"), cols):
        assert ev(parse_expr(macro, MACROS), 21).to_list() == list(col)


def test_halving_in_residue_ring_matches_exact_reduction():
    expr = MACROS["PDT"]
    exact = evaluate(expr, 400)
    for m in (2, 4, 8, 9, 72):
        assert evaluate(expr, 400, Ring.mod(m)) == exact.reduce(Ring.mod(m))


def test_halving_failure_becomes_error_report():
    report = verify(claim("(f1 + f2)/2", "f1"), 20)
    assert report.status == "error" and "not divisible" in report.error.lower()
    assert report.to_dict()["status"] == "error"


def test_probe_status_prefix():
    report = verify(claim("f1", "f2", probe=True), 20)
    assert report.status == "probe-failed"


def test_mod_relation_compares_residues():
    assert verify(claim("f1^2", "f2", mod=2), 300).passed
    assert not verify(claim("f1^2", "f2", mod=4), 300).passed


def test_verification_is_monotone_in_order():
    c = claim("f1^4", "f2^2", mod=4)
    assert all(verify(c, n).passed for n in (2, 17, 100, 400))


expr_monos = st.builds(
    lambda s, q, eta: Leaf(EtaMonomial(s, 0, q, eta=eta)),
    st.integers(-50, 50).filter(bool),
    st.integers(0, 6),
    st.dictionaries(st.integers(1, 9), st.integers(-4, 4), max_size=3),
)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.lists(expr_monos, min_size=1, max_size=3), st.sampled_from([2, 8, 27, 216, 1 << 33]))
def test_evaluation_commutes_with_reduction(leaves, m):
    expr = Sum(tuple(leaves)) if len(leaves) > 1 else leaves[0]
    assert evaluate(expr, 150).reduce(Ring.mod(m)) == evaluate(expr, 150, Ring.mod(m))


def test_cached_results_reused_across_rings():
    ev = Evaluator()
    expr = MACROS["PDOT"]
    wide = ev(expr, 300, Ring.mod(216))
    assert ev(expr, 300, Ring.mod(8)) == wide.reduce(Ring.mod(8))
    assert ev(expr, 100, Ring.mod(9)) == evaluate(expr, 100, Ring.mod(9))


def test_shipped_registry_shape(registry):
    assert len(registry) >= 40
    ids = {c.id for c in registry}
    assert {"GEN-PDT", "GEN-PDOT", "THM11-A", "THM11-B", "EQ-2.5", "EQ-2.20"} <= ids
    assert all(c.anchor for c in registry)
    assert len(ids) == len(registry)


def test_filter_glob(registry):
    picked = filter_claims(registry, "EQ-2.1?")
    assert picked and all(c.id.startswith("EQ-2.1") and len(c.id) == 7 for c in picked)
    assert filter_claims(registry, None) == registry


def test_basic_identities_non_probe_pass(registry):
    basic = [c for c in filter_claims(registry, "EQ-2.*") if not c.probe]
    reports = verify_all(basic, 300, threads=2)
    assert [r.id for r in reports] == [c.id for c in basic]
    assert all(r.passed for r in reports)


def _write(tmp_path, claims):
    path = tmp_path / "reg.json"
    path.write_text(json.dumps({"claims": claims}))
    return path


def test_registry_rejects_zero_substitution_step(tmp_path):
    bad = claim_to_json(claim("sub(f1, 2)", "f2"))
    bad["lhs"]["k"] = 0
    with pytest.raises(RegistryError, match="substitution step"):
        load_registry(_write(tmp_path, [bad]))


def test_registry_rejects_bad_fields(tmp_path):
    good = claim_to_json(claim("f1", "f1"))
    for key, value, needle in [
        ("relation", "mod:0", "relation"),
        ("relation", "approx", "relation"),
        ("order", 1, "order"),
    ]:
        bad = dict(good, **{key: value})
        with pytest.raises(RegistryError, match=needle):
            load_registry(_write(tmp_path, [bad]))
    with pytest.raises(RegistryError, match="missing field 'rhs'"):
        load_registry(_write(tmp_path, [{k: v for k, v in good.items() if k != "rhs"}]))
    with pytest.raises(RegistryError, match="duplicate"):
        load_registry(_write(tmp_path, [good, good]))


def test_registry_json_syntax_error_has_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"claims": [\n  {"id": }\n]}')
    with pytest.raises(RegistryError, match="line 2 column"):
        load_registry(path)


def test_registry_json_round_trip(tmp_path, registry):
    path = _write(tmp_path, [claim_to_json(c) for c in registry])
    assert load_registry(path) == registry


def test_default_evaluator_order_guard():
    with pytest.raises(ValueError):
        verify(claim("f1", "f1"), 1)
    assert identities.default_registry_path().name == "identities.json"
    assert EXACT.is_exact
