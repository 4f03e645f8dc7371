import random

import pytest
from hypothesis import given

from qint.identities import (
    NotAZeroIdentity,
    ZeroIdentity,
    check_degree_bound,
    decompose_zero_identity,
    linear_witness,
    linear_zero_identity,
    verify_zero_identity,
    zero_identity_from_uv,
)
from qint.polyring import FormatError, ONE, Q, ZERO, divrem
from qint.quantum import quantum_int
from qint.rules import SeqTable, random_seqtable

from conftest import polys, seqtables

N = 7


def with_w(zi, m, n, value):
    w = [list(row) for row in zi.tables[2]]
    w[m - 1][n - 1] = value
    return zi.replace(w=w)


def test_all_zero_identity():
    zi = zero_identity_from_uv(SeqTable.zeros(N), SeqTable.zeros(N))
    assert all(p == ZERO for p in zi.tables[0] + zi.tables[1])
    assert verify_zero_identity(zi).ok
    U, V = decompose_zero_identity(zi)
    assert U == V == SeqTable.zeros(N)
    assert check_degree_bound(zi)


def test_commutativity_identity():
    zi = zero_identity_from_uv(SeqTable.build(N, lambda n: ONE), SeqTable.zeros(N))
    assert zi.u(4) == quantum_int(4)
    assert zi.v(3) == ZERO
    assert zi.w(2, 5) == -1
    assert verify_zero_identity(zi).ok


def test_linear_specialization():
    z = Q**2 - 3
    zi = zero_identity_from_uv(SeqTable.build(N, lambda n: z), SeqTable.build(N, lambda m: -z))
    assert all(zi.w(m, n) == ZERO for m in range(1, N + 1) for n in range(1, N + 1))
    assert zi.u(3) == z * quantum_int(3)
    assert zi.v(3) == -z * quantum_int(3)
    assert zi == linear_zero_identity(z, N)
    assert linear_witness(zi) == z


def test_decompose_linear_identity_z_q():
    # proof formulas: u_n = -(v'_1 + w'_{1,n}) = -(-q + 0) = q, v_m = -(u'_1 + 0) = -q
    U, V = decompose_zero_identity(linear_zero_identity(Q, N))
    assert all(U[n] == Q and V[n] == -Q for n in range(1, N + 1))


def test_perturbed_identity_fails_at_1_1():
    zi = zero_identity_from_uv(*[random_seqtable(random.Random(4), N)] * 2)
    bad = with_w(zi, 1, 1, zi.w(1, 1) + 1)
    report = verify_zero_identity(bad)
    assert report.failing_pairs == [(1, 1)]
    assert report.failures[0].defect == ONE
    with pytest.raises(NotAZeroIdentity):
        decompose_zero_identity(bad)


def test_witness_checked_on_construction():
    zi = linear_zero_identity(Q, 3)
    with pytest.raises(ValueError):
        ZeroIdentity(3, *zi.tables, witness=(SeqTable.zeros(3), SeqTable.zeros(3)))


@given(seqtables(N), seqtables(N))
def test_round_trip(U, V):
    zi = zero_identity_from_uv(U, V, N)
    assert verify_zero_identity(zi).ok
    assert decompose_zero_identity(zi) == (U, V)
    assert check_degree_bound(zi)


@given(seqtables(N), seqtables(N))
def test_divisibility(U, V):
    zi = zero_identity_from_uv(U, V, N)
    for n in range(1, N + 1):
        assert divrem(zi.u(n), quantum_int(n))[1] == ZERO
        assert divrem(zi.v(n), quantum_int(n))[1] == ZERO


@given(polys(3, 5, 3))
def test_w_zero_forces_common_z(z):
    zi = ZeroIdentity(N, *linear_zero_identity(z, N).tables)  # drop the witness
    U, V = decompose_zero_identity(zi)
    assert len(set(U.entries)) == 1 and len(set(V.entries)) == 1
    assert U[1] == -V[1] == z


def test_linear_witness_rejects_nonlinear():
    zi = zero_identity_from_uv(SeqTable.build(N, lambda n: ONE), SeqTable.zeros(N))
    with pytest.raises(NotAZeroIdentity):
        linear_witness(zi)


def test_degree_bound_flags_violations():
    # not an identity, but exercises the predicate itself
    zi = zero_identity_from_uv(SeqTable.zeros(3), SeqTable.zeros(3))
    u = list(zi.tables[0])
    u[2] = Q
    assert not check_degree_bound(zi.replace(u=u))
    assert check_degree_bound(linear_zero_identity(ONE, 5))


def test_json_round_trip():
    zi = zero_identity_from_uv(*[random_seqtable(random.Random(1), 4)] * 2)
    data = zi.to_json()
    assert set(data) == {"N", "u", "v", "w"}
    assert ZeroIdentity.from_json(data) == zi
    data.pop("w")
    with pytest.raises(FormatError):
        ZeroIdentity.from_json(data)
