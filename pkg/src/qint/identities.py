"""Quadratic and linear zero identities.

A zero identity is a triple of families ``u'_n``, ``v'_m``, ``w'_{m,n}`` with

    u'_n [m]_q + v'_m [n]_q + w'_{m,n} [m]_q [n]_q = 0

for all ``m, n``.  Every such triple comes from a unique pair of sequences
``(U, V)`` via ``u'_n = u_n [n]_q``, ``v'_m = v_m [m]_q`` and
``w'_{m,n} = -(u_n + v_m)``; this module builds, checks and inverts that
correspondence over a finite horizon.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .polyring import FormatError, Poly
from .quantum import quantum_int
from .rules import (
    Failure,
    IndexOutOfHorizon,
    QuadRule,
    SeqTable,
    VerifyReport,
    _get_horizon,
    _poly_list,
    _table_from_json,
)

__all__ = [
    "NotAZeroIdentity",
    "ZeroIdentity",
    "check_degree_bound",
    "decompose_zero_identity",
    "linear_witness",
    "linear_zero_identity",
    "rule_difference",
    "shift_rule",
    "verify_zero_identity",
    "zero_identity_from_uv",
]


class NotAZeroIdentity(ValueError):
    pass


def _witness_tables(U: SeqTable, V: SeqTable, N: int):
    idx = range(1, N + 1)
    u = [U[n] * quantum_int(n) for n in idx]
    v = [V[m] * quantum_int(m) for m in idx]
    w = [[-(U[n] + V[m]) for n in idx] for m in idx]
    return u, v, w


class ZeroIdentity:
    """Tables ``u'``, ``v'``, ``w'`` up to horizon ``N``, optionally with witness ``(U, V)``."""

    __slots__ = ("N", "_u", "_v", "_w", "witness")

    def __init__(
        self,
        N: int,
        u: Sequence[Poly],
        v: Sequence[Poly],
        w: Sequence[Sequence[Poly]],
        witness: Optional[tuple[SeqTable, SeqTable]] = None,
    ):
        if isinstance(N, bool) or not isinstance(N, int) or N < 1:
            raise ValueError(f"horizon must be a positive integer, got {N!r}")
        self.N = N
        self._u = tuple(u)
        self._v = tuple(v)
        self._w = tuple(tuple(row) for row in w)
        if len(self._u) != N or len(self._v) != N:
            raise ValueError(f"u and v tables must have exactly {N} entries")
        if len(self._w) != N or any(len(row) != N for row in self._w):
            raise ValueError(f"w table must be {N}x{N}")
        if witness is not None:
            U, V = witness
            witness = (U.truncate(N), V.truncate(N))
            u2, v2, w2 = _witness_tables(*witness, N)
            if list(self._u) != u2 or list(self._v) != v2 or [list(r) for r in self._w] != w2:
                raise ValueError("identity tables disagree with the attached witness")
        self.witness = witness

    def u(self, n: int) -> Poly:
        self._bounds(n)
        return self._u[n - 1]

    def v(self, m: int) -> Poly:
        self._bounds(m)
        return self._v[m - 1]

    def w(self, m: int, n: int) -> Poly:
        self._bounds(m)
        self._bounds(n)
        return self._w[m - 1][n - 1]

    def _bounds(self, k: int) -> None:
        if not 1 <= k <= self.N:
            raise IndexOutOfHorizon(f"index {k} outside 1..{self.N}")

    @property
    def tables(self):
        return self._u, self._v, self._w

    def replace(self, u=None, v=None, w=None) -> ZeroIdentity:
        """Copy with some tables swapped out (the witness is dropped)."""
        return ZeroIdentity(
            self.N,
            self._u if u is None else u,
            self._v if v is None else v,
            self._w if w is None else w,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZeroIdentity):
            return NotImplemented
        return self.N == other.N and self.tables == other.tables

    def __hash__(self) -> int:
        return hash(self.tables)

    def __repr__(self) -> str:
        return f"ZeroIdentity(N={self.N}{', with witness' if self.witness else ''})"

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "u": [p.to_json() for p in self._u],
            "v": [p.to_json() for p in self._v],
            "w": [[p.to_json() for p in row] for row in self._w],
        }

    @classmethod
    def from_json(cls, data) -> ZeroIdentity:
        N = _get_horizon(data)
        if set(data) != {"N", "u", "v", "w"}:
            raise FormatError("zero identity JSON needs exactly the keys N, u, v, w")
        u = _poly_list(data["u"], "'u'")
        v = _poly_list(data["v"], "'v'")
        if len(u) != N or len(v) != N:
            raise FormatError(f"'u' and 'v' must have {N} entries")
        return cls(N, u, v, _table_from_json(data, "w", N))


def zero_identity_from_uv(U: SeqTable, V: SeqTable, N: Optional[int] = None) -> ZeroIdentity:
    if N is None:
        N = min(U.N, V.N)
    if U.N < N or V.N < N:
        raise IndexOutOfHorizon(f"(U, V) tabulated to {min(U.N, V.N)}, need {N}")
    return ZeroIdentity(N, *_witness_tables(U, V, N), witness=(U, V))


def _horizon_for(zi: ZeroIdentity, N: Optional[int]) -> int:
    if N is None:
        return zi.N
    if N < 1 or N > zi.N:
        raise IndexOutOfHorizon(f"identity has horizon {zi.N}, asked for {N}")
    return N


def verify_zero_identity(zi: ZeroIdentity, N: Optional[int] = None) -> VerifyReport:
    N = _horizon_for(zi, N)
    failures = []
    for m in range(1, N + 1):
        qm = quantum_int(m)
        for n in range(1, N + 1):
            qn = quantum_int(n)
            lhs = zi.u(n) * qm + zi.v(m) * qn + zi.w(m, n) * (qm * qn)
            if lhs:
                failures.append(Failure(m, n, lhs))
    return VerifyReport(N, tuple(failures))


def decompose_zero_identity(
    zi: ZeroIdentity, N: Optional[int] = None
) -> tuple[SeqTable, SeqTable]:
    """Recover the ``(U, V)`` pair behind a zero identity.

    Reads ``u_n = -(v'_1 + w'_{1,n})`` off the ``m = 1`` row and
    ``v_m = -(u'_1 + w'_{m,1})`` off the ``n = 1`` column, then confirms that
    the pair regenerates every table entry.

    Raises:
        NotAZeroIdentity: if ``zi`` fails verification up to ``N`` or the
            recovered pair does not reproduce it.
    """
    N = _horizon_for(zi, N)
    report = verify_zero_identity(zi, N)
    if not report.ok:
        raise NotAZeroIdentity(f"identity fails at {report.failing_pairs[:5]}")
    U = SeqTable.build(N, lambda n: -(zi.v(1) + zi.w(1, n)))
    V = SeqTable.build(N, lambda m: -(zi.u(1) + zi.w(m, 1)))
    for n in range(1, N + 1):
        if zi.u(n) != U[n] * quantum_int(n):
            raise NotAZeroIdentity(f"u'_{n} != u_{n} [{n}]_q")
        if zi.v(n) != V[n] * quantum_int(n):
            raise NotAZeroIdentity(f"v'_{n} != v_{n} [{n}]_q")
    for m in range(1, N + 1):
        for n in range(1, N + 1):
            if zi.w(m, n) != -(U[n] + V[m]):
                raise NotAZeroIdentity(f"w'_({m},{n}) != -(u_{n} + v_{m})")
    return U, V


def check_degree_bound(zi: ZeroIdentity, N: Optional[int] = None) -> bool:
    """Check that no ``u'_n`` (or ``v'_m``) is nonzero with degree below ``n - 1``.

    On a verified identity this always holds, since ``[n]_q`` divides
    ``u'_n``; a ``False`` return points at an arithmetic bug.
    """
    N = _horizon_for(zi, N)
    for k in range(1, N + 1):
        for p in (zi.u(k), zi.v(k)):
            if p and p.degree < k - 1:
                return False
    return True


def linear_zero_identity(z: Poly, N: int) -> ZeroIdentity:
    """``u'_n = z [n]_q``, ``v'_m = -z [m]_q``, ``w' = 0``."""
    return zero_identity_from_uv(SeqTable.build(N, lambda n: z), SeqTable.build(N, lambda m: -z), N)


def linear_witness(zi: ZeroIdentity, N: Optional[int] = None) -> Poly:
    """Return the ``z`` of a verified identity whose ``w'`` table vanishes.

    Raises:
        NotAZeroIdentity: if ``zi`` is not a zero identity with ``w' = 0`` up to ``N``.
    """
    N = _horizon_for(zi, N)
    if any(zi.w(m, n) for m in range(1, N + 1) for n in range(1, N + 1)):
        raise NotAZeroIdentity("w' is not identically zero")
    U, V = decompose_zero_identity(zi, N)
    z = U[1]
    if any(U[n] != z or V[n] != -z for n in range(1, N + 1)):
        raise NotAZeroIdentity("linear identity without a common z; arithmetic bug")
    return z


def rule_difference(a: QuadRule, b: QuadRule, N: Optional[int] = None) -> ZeroIdentity:
    """Componentwise ``a - b``; a zero identity whenever both are addition rules."""
    if N is None:
        N = min(a.N, b.N)
    idx = range(1, N + 1)
    return ZeroIdentity(
        N,
        [a.r(n) - b.r(n) for n in idx],
        [a.s(m) - b.s(m) for m in idx],
        [[a.t(m, n) - b.t(m, n) for n in idx] for m in idx],
    )


def shift_rule(rule: QuadRule, zi: ZeroIdentity, lam=1, N: Optional[int] = None) -> QuadRule:
    """``rule + lam * zi`` componentwise, over the common horizon."""
    if N is None:
        N = min(rule.N, zi.N)
    idx = range(1, N + 1)
    return QuadRule(
        N,
        [rule.r(n) + zi.u(n) * lam for n in idx],
        [rule.s(m) + zi.v(m) * lam for m in idx],
        [[rule.t(m, n) + zi.w(m, n) * lam for n in idx] for m in idx],
    )
