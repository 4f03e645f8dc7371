import pytest

from qint.polyring import ONE, Q, ZERO, Poly
from qint.quantum import RULE_NAMES, UnknownRuleName, named_rule, quantum_int
from qint.rules import verify_rule

N = 15


def test_quantum_int_values():
    assert quantum_int(0) == ZERO
    assert quantum_int(1) == ONE
    assert quantum_int(4) == Poly([1, 1, 1, 1])
    with pytest.raises(ValueError):
        quantum_int(-1)


@pytest.mark.parametrize("n", range(1, 2 * N + 1))
def test_quantum_int_shape(n):
    p = quantum_int(n)
    assert p.degree == n - 1
    assert p.is_monic()
    assert (1 - Q) * p == 1 - Q**n
    assert p(1) == n


def test_linear_example_expansion():
    for m in range(1, N + 1):
        for n in range(1, N + 1):
            assert quantum_int(m + n) == quantum_int(m) + Q**m * quantum_int(n)


def test_fundamental_coefficients():
    rule = named_rule("fundamental", 5)
    assert (rule.r(1), rule.s(1), rule.t(1, 1)) == (ZERO, ZERO, Q + 1)
    assert (rule.r(3), rule.s(2), rule.t(2, 3)) == (ONE, ONE, Q - 1)
    assert rule.t(1, 4) == Q


def test_rule2_coefficients():
    rule = named_rule("rule2", 5)
    assert (rule.r(3), rule.s(2), rule.t(2, 3)) == (Q**3, Q**2, 1 - Q)


def test_rule1_coefficients():
    rule = named_rule("rule1", 6)
    for m in range(1, 7):
        for n in range(1, 7):
            assert (rule.r(n), rule.s(m), rule.t(m, n)) == (ONE, ONE, Q - 1)


def test_linear_example_coefficients():
    rule = named_rule("linear_example", 4)
    assert (rule.r(2), rule.s(3), rule.t(2, 2)) == (ONE, Q**3, ZERO)


@pytest.mark.parametrize("name", RULE_NAMES)
def test_named_rules_verify(name):
    assert verify_rule(named_rule(name, N)).ok


def test_unknown_name():
    with pytest.raises(UnknownRuleName):
        named_rule("rule3")
