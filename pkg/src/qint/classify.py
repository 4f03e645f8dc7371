"""Normal form and classification of quadratic addition rules.

Dividing ``r'_n`` by ``[n]_q`` and ``s'_m`` by ``[m]_q`` splits any rule into
a zero identity plus a residual rule with ``deg r_n <= n - 2`` and
``deg s_m <= m - 2``.  For a genuine addition rule the residual is always
the fundamental rule, so every rule is pinned down by its quotient
sequences ``(U, V)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .identities import zero_identity_from_uv
from .polyring import divrem
from .quantum import delta, named_rule, quantum_int
from .rules import QuadRule, SeqTable, uv_tables

__all__ = [
    "NormalizationResult",
    "NotAQuantumAdditionRule",
    "extract_uv",
    "normalize",
    "rule_from_uv",
]


class NotAQuantumAdditionRule(ValueError):
    pass


def rule_from_uv(U: SeqTable, V: SeqTable, N: Optional[int] = None) -> QuadRule:
    if N is None:
        N = min(U.N, V.N)
    return QuadRule(N, *uv_tables(U, V, N), uv=(U, V))


def _horizon_for(rule: QuadRule, N: Optional[int]) -> int:
    if N is None:
        return rule.N
    if N < 1:
        raise ValueError(f"horizon must be positive, got {N}")
    return rule.truncate(N).N


def extract_uv(rule: QuadRule, N: Optional[int] = None) -> tuple[SeqTable, SeqTable]:
    """Invert :func:`rule_from_uv`.

    Raises:
        NotAQuantumAdditionRule: if some ``r'_n - 1 + d_n`` is not divisible
            by ``[n]_q`` (likewise for ``s'``), or ``t'`` does not match.
    """
    N = _horizon_for(rule, N)
    us, vs = [], []
    for n in range(1, N + 1):
        qn = quantum_int(n)
        for name, coeff, out in (("r'", rule.r(n), us), ("s'", rule.s(n), vs)):
            quot, rem = divrem(coeff - 1 + delta(n), qn)
            if rem:
                raise NotAQuantumAdditionRule(
                    f"{name}_{n} - 1 + d_{n} is not divisible by [{n}]_q"
                )
            out.append(quot)
    U, V = SeqTable(tuple(us)), SeqTable(tuple(vs))
    t_expected = uv_tables(U, V, N)[2]
    for m in range(1, N + 1):
        for n in range(1, N + 1):
            if rule.t(m, n) != t_expected[m - 1][n - 1]:
                raise NotAQuantumAdditionRule(
                    f"t'_({m},{n}) != q - 1 - u_{n} - v_{m} + d_{m} + d_{n}"
                )
    return U, V


@dataclass(frozen=True)
class NormalizationResult:
    U: SeqTable
    V: SeqTable
    residual: QuadRule
    is_fundamental: bool

    def to_json(self) -> dict:
        return {
            "U": self.U.to_json(),
            "V": self.V.to_json(),
            "residual": self.residual.to_json(),
            "is_fundamental": self.is_fundamental,
        }


def normalize(rule: QuadRule, N: Optional[int] = None) -> NormalizationResult:
    """Reduce ``rule`` to its division-algorithm normal form.

    Works for any tables, verified or not; ``is_fundamental`` reports whether
    the residual coincides with the fundamental rule.
    """
    N = _horizon_for(rule, N)
    us, rs, vs, ss = [], [], [], []
    for n in range(1, N + 1):
        u, r = divrem(rule.r(n), quantum_int(n))
        v, s = divrem(rule.s(n), quantum_int(n))
        us.append(u)
        rs.append(r)
        vs.append(v)
        ss.append(s)
    U, V = SeqTable(tuple(us)), SeqTable(tuple(vs))
    zi = zero_identity_from_uv(U, V, N)
    t = [[rule.t(m, n) - zi.w(m, n) for n in range(1, N + 1)] for m in range(1, N + 1)]
    residual = QuadRule(N, rs, ss, t)
    return NormalizationResult(U, V, residual, residual == named_rule("fundamental", N))
