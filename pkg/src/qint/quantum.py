"""Quantum integers and the built-in addition rules."""

from __future__ import annotations

from functools import lru_cache

from .polyring import ONE, Q, ZERO, Poly

__all__ = ["RULE_NAMES", "UnknownRuleName", "delta", "named_rule", "named_uv", "quantum_int"]

RULE_NAMES = ("fundamental", "rule1", "rule2", "linear_example")


class UnknownRuleName(KeyError):
    pass


@lru_cache(maxsize=None)
def quantum_int(n: int) -> Poly:
    """``[n]_q = 1 + q + ... + q^(n-1)``, with ``[0]_q = 0``."""
    if n < 0:
        raise ValueError(f"quantum integer index must be nonnegative, got {n}")
    return Poly([1] * n)


def delta(n: int) -> int:
    return 1 if n == 1 else 0


def named_uv(name: str, N: int):
    """The ``(U, V)`` parameterization of a built-in rule up to horizon ``N``."""
    from .rules import SeqTable

    if name == "fundamental":
        return SeqTable.zeros(N), SeqTable.zeros(N)
    if name == "rule1":
        f = lambda n: ONE if n == 1 else ZERO
        return SeqTable.build(N, f), SeqTable.build(N, f)
    if name == "rule2":
        f = lambda n: Q if n == 1 else Q - 1
        return SeqTable.build(N, f), SeqTable.build(N, f)
    if name == "linear_example":
        return (
            SeqTable.build(N, lambda n: ONE if n == 1 else ZERO),
            SeqTable.build(N, lambda m: Q if m == 1 else Q - 1),
        )
    raise UnknownRuleName(name)


def named_rule(name: str, N: int = 20):
    """Build one of the built-in quadratic addition rules over horizon ``N``.

    ============== ============ ============ ===================
    name           r'_n         s'_m         t'_{m,n}
    ============== ============ ============ ===================
    fundamental    1 - d_n      1 - d_m      q - 1 + d_m + d_n
    rule1          1            1            q - 1
    rule2          q^n          q^m          1 - q
    linear_example 1            q^m          0
    ============== ============ ============ ===================

    where ``d_n`` is 1 at ``n = 1`` and 0 otherwise.  The tables are written
    out directly; the attached ``(U, V)`` is cross-checked against them when
    the rule is constructed.
    """
    from .rules import QuadRule

    idx = range(1, N + 1)
    if name == "fundamental":
        r = [ONE - delta(n) for n in idx]
        s = list(r)
        t = [[Q - 1 + delta(m) + delta(n) for n in idx] for m in idx]
    elif name == "rule1":
        r = [ONE] * N
        s = [ONE] * N
        t = [[Q - 1] * N for _ in idx]
    elif name == "rule2":
        r = [Q**n for n in idx]
        s = list(r)
        t = [[1 - Q] * N for _ in idx]
    elif name == "linear_example":
        r = [ONE] * N
        s = [Q**m for m in idx]
        t = [[ZERO] * N for _ in idx]
    else:
        raise UnknownRuleName(name)
    return QuadRule(N, r, s, t, uv=named_uv(name, N))
