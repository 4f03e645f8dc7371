from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qint.classify import rule_from_uv
from qint.identities import rule_difference, shift_rule, verify_zero_identity, zero_identity_from_uv
from qint.polyring import FormatError, ONE, Q, ZERO, Poly
from qint.quantum import RULE_NAMES, named_rule, quantum_int
from qint.rules import (
    IndexOutOfHorizon,
    QuadRule,
    SeqTable,
    apply_rule,
    spot_check_rule,
    verify_rule,
)

from conftest import rationals, seqtables

N = 8


def corrupt_t(rule, m, n, value):
    r, s, t = rule.tables
    t = [list(row) for row in t]
    t[m - 1][n - 1] = value
    return QuadRule(rule.N, r, s, t)


def test_apply_examples():
    assert apply_rule(named_rule("fundamental", 3), 1, 1, ONE, ONE) == Q + 1
    # 1 + (1+q) - (1-q)(1+q) = 1 + q + q^2
    assert apply_rule(named_rule("rule1", 3), 1, 2, quantum_int(1), quantum_int(2)) == Poly([1, 1, 1])
    assert apply_rule(named_rule("rule1", 3), 2, 3, ZERO, ZERO) == ZERO


def test_apply_out_of_horizon():
    with pytest.raises(IndexOutOfHorizon):
        apply_rule(named_rule("rule1", 3), 4, 1, ONE, ONE)


@pytest.mark.parametrize("name", ["fundamental", "rule2"])
def test_verify_named_20(name):
    report = verify_rule(named_rule(name, 20), 20)
    assert report.ok and report.failures == ()


def test_verify_catches_corruption():
    rule = corrupt_t(named_rule("rule1", 2), 2, 2, Q)
    report = verify_rule(rule, 2)
    assert report.failing_pairs == [(2, 2)]
    # defect = (q - (q-1)) [2]^2 = (1+q)^2
    assert report.failures[0].defect == Poly([1, 2, 1])


def test_verify_horizon_checks():
    rule = named_rule("rule1", 4)
    with pytest.raises(IndexOutOfHorizon):
        verify_rule(rule, 5)
    assert verify_rule(rule, 2).N == 2


def test_report_is_ordered():
    rule = named_rule("rule1", 4)
    r, s, t = rule.tables
    bad = QuadRule(4, r, [ONE, ONE, Q, ONE], t)
    pairs = verify_rule(bad).failing_pairs
    assert pairs == sorted(pairs) == [(3, n) for n in range(1, 5)]
    assert spot_check_rule(bad, trials=3, seed=2).failing_pairs == pairs


@pytest.mark.parametrize("name", RULE_NAMES)
def test_spot_check_builtins(name):
    assert spot_check_rule(named_rule(name, 10), 10, 5, seed=1).ok


def test_spot_check_flags_corruption():
    rule = corrupt_t(named_rule("fundamental", 6), 3, 4, Q)
    report = spot_check_rule(rule, trials=5, seed=7)
    assert report.failing_pairs == [(3, 4)]
    assert report.failures[0].point is not None


def test_spot_check_at_one():
    rule = named_rule("rule1", 6)
    assert spot_check_rule(rule, points=[1]).ok
    # at q = 1 every quantum integer collapses to its index
    for m in range(1, 7):
        for n in range(1, 7):
            assert apply_rule(rule, m, n, quantum_int(m), quantum_int(n))(1) == m + n


def test_spot_check_is_deterministic():
    rule = corrupt_t(named_rule("rule2", 4), 1, 1, ZERO)
    assert spot_check_rule(rule, seed=3) == spot_check_rule(rule, seed=3)


@given(seqtables(N), seqtables(N), seqtables(N), seqtables(N))
def test_difference_of_rules_is_zero_identity(U1, V1, U2, V2):
    a, b = rule_from_uv(U1, V1, N), rule_from_uv(U2, V2, N)
    assert verify_rule(a).ok and verify_rule(b).ok
    assert verify_zero_identity(rule_difference(a, b)).ok


@given(seqtables(N), seqtables(N), rationals())
def test_rule_plus_zero_identity(U, V, lam):
    for name in RULE_NAMES:
        shifted = shift_rule(named_rule(name, N), zero_identity_from_uv(U, V, N), lam)
        assert verify_rule(shifted).ok


@given(seqtables(6), seqtables(6))
def test_consistency_symmetric(U, V):
    rule = rule_from_uv(U, V, 6)
    for m in range(1, 7):
        for n in range(1, 7):
            a = apply_rule(rule, m, n, quantum_int(m), quantum_int(n))
            b = apply_rule(rule, n, m, quantum_int(n), quantum_int(m))
            assert a == b == quantum_int(m + n)


def test_uv_cross_check_on_construction():
    r, s, t = named_rule("rule1", 3).tables
    with pytest.raises(ValueError):
        QuadRule(3, r, s, t, uv=(SeqTable.zeros(3), SeqTable.zeros(3)))


def test_shape_validation():
    with pytest.raises(ValueError):
        QuadRule(2, [ONE], [ONE, ONE], [[ONE, ONE], [ONE, ONE]])
    with pytest.raises(ValueError):
        QuadRule(0, [], [], [])


def test_json_round_trip():
    rule = named_rule("rule2", 4)
    data = rule.to_json()
    assert data["N"] == 4
    assert data["t"][1][2] == {"coeffs": ["1", "-1"]}
    back = QuadRule.from_json(data)
    assert back == rule and back.uv is None
    assert verify_rule(back).ok


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("s"),
        lambda d: d.update(N=5),
        lambda d: d.update(N="4"),
        lambda d: d["t"].pop(),
        lambda d: d["t"][0].append({"coeffs": []}),
        lambda d: d.update(extra=1),
    ],
)
def test_json_rejects(mutate):
    data = named_rule("rule1", 4).to_json()
    mutate(data)
    with pytest.raises(FormatError):
        QuadRule.from_json(data)


def test_seqtable():
    table = SeqTable.build(3, lambda n: Q**n)
    assert table[2] == Q**2 and table.N == 3
    with pytest.raises(IndexOutOfHorizon):
        table[0]
    with pytest.raises(IndexOutOfHorizon):
        table[4]
    assert SeqTable.from_json(table.to_json()) == table
    assert table.truncate(2) == SeqTable((Q, Q**2))


@given(st.integers(1, 5), st.integers(1, 5))
def test_rule_truncation_keeps_verdict(N1, N2):
    rule = named_rule("rule2", max(N1, N2))
    assert verify_rule(rule.truncate(min(N1, N2))).ok


def test_failure_json():
    rule = corrupt_t(named_rule("rule1", 2), 1, 1, ZERO)
    data = verify_rule(rule).to_json()
    assert data["ok"] is False
    assert data["failures"][0]["m"] == 1 and data["failures"][0]["n"] == 1
    pt = spot_check_rule(rule, points=[Fraction(1, 2)]).to_json()
    assert pt["failures"][0]["point"] == "1/2"
