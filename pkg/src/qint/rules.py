"""Quadratic addition rules tabulated up to a finite horizon.

A rule is the triple of families ``r'_n``, ``s'_m``, ``t'_{m,n}`` for which

    [m+n]_q = r'_n [m]_q + s'_m [n]_q + t'_{m,n} [m]_q [n]_q

is expected to hold.  Indices are 1-based everywhere in the public API; the
JSON form flattens them into 0-based arrays.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .polyring import ZERO, FormatError, Poly, eval_at, random_poly
from .quantum import delta, quantum_int

__all__ = [
    "Failure",
    "IndexOutOfHorizon",
    "QuadRule",
    "SeqTable",
    "VerifyReport",
    "apply_rule",
    "random_seqtable",
    "spot_check_rule",
    "uv_tables",
    "verify_rule",
]


class IndexOutOfHorizon(IndexError):
    pass


def _check_horizon(N) -> None:
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise ValueError(f"horizon must be a positive integer, got {N!r}")


def _poly_list(data, what: str) -> list[Poly]:
    if not isinstance(data, list):
        raise FormatError(f"{what} must be a list")
    return [Poly.from_json(p) for p in data]


def _table_from_json(data, key: str, N: int) -> list[list[Poly]]:
    rows = data.get(key)
    if not isinstance(rows, list) or len(rows) != N:
        raise FormatError(f"'{key}' must be an {N}x{N} array")
    out = []
    for row in rows:
        row = _poly_list(row, f"row of '{key}'")
        if len(row) != N:
            raise FormatError(f"'{key}' must be an {N}x{N} array")
        out.append(row)
    return out


def _get_horizon(data) -> int:
    if not isinstance(data, dict):
        raise FormatError("expected a JSON object")
    N = data.get("N")
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise FormatError(f"'N' must be a positive integer, got {N!r}")
    return N


@dataclass(frozen=True)
class SeqTable:
    """A sequence of polynomials indexed ``1..N``."""

    entries: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("a SeqTable needs at least one entry")
        if not all(isinstance(p, Poly) for p in self.entries):
            raise TypeError("SeqTable entries must be Poly")

    @classmethod
    def build(cls, N: int, fn: Callable[[int], Poly]) -> SeqTable:
        _check_horizon(N)
        return cls(tuple(fn(n) for n in range(1, N + 1)))

    @classmethod
    def zeros(cls, N: int) -> SeqTable:
        return cls.build(N, lambda n: ZERO)

    @property
    def N(self) -> int:
        return len(self.entries)

    def __getitem__(self, n: int) -> Poly:
        if not 1 <= n <= len(self.entries):
            raise IndexOutOfHorizon(f"index {n} outside 1..{len(self.entries)}")
        return self.entries[n - 1]

    def truncate(self, N: int) -> SeqTable:
        if N > self.N:
            raise IndexOutOfHorizon(f"cannot extend a table of length {self.N} to {N}")
        return SeqTable(self.entries[:N])

    def __sub__(self, other: SeqTable) -> SeqTable:
        N = min(self.N, other.N)
        return SeqTable(tuple(a - b for a, b in zip(self.entries[:N], other.entries[:N])))

    def to_json(self) -> list:
        return [p.to_json() for p in self.entries]

    @classmethod
    def from_json(cls, data) -> SeqTable:
        entries = _poly_list(data, "sequence")
        if not entries:
            raise FormatError("sequence must be nonempty")
        return cls(tuple(entries))


def uv_tables(U: SeqTable, V: SeqTable, N: int):
    """Rule tables determined by ``(U, V)`` through the classification formulas.

    ``r'_n = u_n [n]_q + 1 - d_n``, ``s'_m = v_m [m]_q + 1 - d_m`` and
    ``t'_{m,n} = q - 1 - u_n - v_m + d_m + d_n``.
    """
    if U.N < N or V.N < N:
        raise IndexOutOfHorizon(f"(U, V) tabulated to {min(U.N, V.N)}, need {N}")
    q_minus_1 = Poly((-1, 1))
    idx = range(1, N + 1)
    r = [U[n] * quantum_int(n) + (1 - delta(n)) for n in idx]
    s = [V[m] * quantum_int(m) + (1 - delta(m)) for m in idx]
    t = [[q_minus_1 - U[n] - V[m] + (delta(m) + delta(n)) for n in idx] for m in idx]
    return r, s, t


class QuadRule:
    """Coefficient tables ``r'``, ``s'``, ``t'`` of a quadratic rule up to ``N``.

    ``uv`` optionally carries the ``(U, V)`` pair the rule was built from; it
    is checked against the tables on construction.
    """

    __slots__ = ("N", "_r", "_s", "_t", "uv")

    def __init__(
        self,
        N: int,
        r: Sequence[Poly],
        s: Sequence[Poly],
        t: Sequence[Sequence[Poly]],
        uv: Optional[tuple[SeqTable, SeqTable]] = None,
    ):
        _check_horizon(N)
        self.N = N
        self._r = tuple(r)
        self._s = tuple(s)
        self._t = tuple(tuple(row) for row in t)
        if len(self._r) != N or len(self._s) != N:
            raise ValueError(f"r and s tables must have exactly {N} entries")
        if len(self._t) != N or any(len(row) != N for row in self._t):
            raise ValueError(f"t table must be {N}x{N}")
        if uv is not None:
            U, V = uv
            uv = (U.truncate(N), V.truncate(N))
            r2, s2, t2 = uv_tables(*uv, N)
            if (
                list(self._r) != r2
                or list(self._s) != s2
                or [list(row) for row in self._t] != t2
            ):
                raise ValueError("rule tables disagree with the attached (U, V)")
        self.uv = uv

    def r(self, n: int) -> Poly:
        self._bounds(n)
        return self._r[n - 1]

    def s(self, m: int) -> Poly:
        self._bounds(m)
        return self._s[m - 1]

    def t(self, m: int, n: int) -> Poly:
        self._bounds(m)
        self._bounds(n)
        return self._t[m - 1][n - 1]

    def _bounds(self, k: int) -> None:
        if not 1 <= k <= self.N:
            raise IndexOutOfHorizon(f"index {k} outside 1..{self.N}")

    @property
    def tables(self):
        return self._r, self._s, self._t

    def truncate(self, N: int) -> QuadRule:
        if N > self.N:
            raise IndexOutOfHorizon(f"rule has horizon {self.N}, asked for {N}")
        if N == self.N:
            return self
        return QuadRule(
            N, self._r[:N], self._s[:N], [row[:N] for row in self._t[:N]], uv=self.uv
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadRule):
            return NotImplemented
        return self.N == other.N and self.tables == other.tables

    def __hash__(self) -> int:
        return hash(self.tables)

    def __repr__(self) -> str:
        return f"QuadRule(N={self.N}{', with uv' if self.uv else ''})"

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "r": [p.to_json() for p in self._r],
            "s": [p.to_json() for p in self._s],
            "t": [[p.to_json() for p in row] for row in self._t],
        }

    @classmethod
    def from_json(cls, data) -> QuadRule:
        N = _get_horizon(data)
        if set(data) != {"N", "r", "s", "t"}:
            raise FormatError("rule JSON needs exactly the keys N, r, s, t")
        r = _poly_list(data["r"], "'r'")
        s = _poly_list(data["s"], "'s'")
        if len(r) != N or len(s) != N:
            raise FormatError(f"'r' and 's' must have {N} entries")
        return cls(N, r, s, _table_from_json(data, "t", N))


@dataclass(frozen=True)
class Failure:
    """One index pair at which an identity did not hold.

    ``defect`` is the offending difference: a polynomial for symbolic checks,
    or a constant for point evaluations (with ``point`` set).
    """

    m: int
    n: int
    defect: Poly
    point: Optional[Fraction] = None

    def to_json(self) -> dict:
        d = {"m": self.m, "n": self.n, "defect": self.defect.to_json()}
        if self.point is not None:
            d["point"] = str(self.point)
        return d


@dataclass(frozen=True)
class VerifyReport:
    N: int
    failures: tuple[Failure, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failing_pairs(self) -> list[tuple[int, int]]:
        return [(f.m, f.n) for f in self.failures]

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"N": self.N, "ok": self.ok, "failures": [f.to_json() for f in self.failures]}


def apply_rule(rule: QuadRule, m: int, n: int, a: Poly, b: Poly) -> Poly:
    """``a (+) b = r'_n a + s'_m b + t'_{m,n} a b`` at index pair ``(m, n)``."""
    return rule.r(n) * a + rule.s(m) * b + rule.t(m, n) * (a * b)


def _horizon_for(rule: QuadRule, N: Optional[int]) -> int:
    if N is None:
        return rule.N
    _check_horizon(N)
    if N > rule.N:
        raise IndexOutOfHorizon(f"rule has horizon {rule.N}, asked to verify to {N}")
    return N


def verify_rule(rule: QuadRule, N: Optional[int] = None) -> VerifyReport:
    """Check the addition identity exactly for every ``1 <= m, n <= N``."""
    N = _horizon_for(rule, N)
    failures = []
    for m in range(1, N + 1):
        for n in range(1, N + 1):
            defect = apply_rule(rule, m, n, quantum_int(m), quantum_int(n)) - quantum_int(m + n)
            if defect:
                failures.append(Failure(m, n, defect))
    return VerifyReport(N, tuple(failures))


def _random_point(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))


def spot_check_rule(
    rule: QuadRule,
    N: Optional[int] = None,
    trials: int = 5,
    seed: int = 0,
    points: Optional[Iterable] = None,
) -> VerifyReport:
    """Randomized cross-check of :func:`verify_rule` by evaluation.

    Both sides of the addition identity are evaluated at ``trials`` random
    rational points (or at the given ``points``).  A pair is reported at the
    first point where the sides differ.  A nonzero defect polynomial of
    degree at most ``2N`` vanishes on at most ``2N`` points, so drawing from
    roughly ``10**12`` candidates makes a false pass negligible.
    """
    N = _horizon_for(rule, N)
    if points is None:
        rng = random.Random(seed)
        points = [_random_point(rng) for _ in range(trials)]
    else:
        points = [Fraction(x) for x in points]
    failures = []
    seen: set[tuple[int, int]] = set()
    for x in points:
        qx = [eval_at(quantum_int(k), x) for k in range(2 * N + 1)]
        rx = [eval_at(rule.r(k), x) for k in range(1, N + 1)]
        sx = [eval_at(rule.s(k), x) for k in range(1, N + 1)]
        for m in range(1, N + 1):
            for n in range(1, N + 1):
                if (m, n) in seen:
                    continue
                lhs = qx[m + n]
                rhs = (
                    rx[n - 1] * qx[m]
                    + sx[m - 1] * qx[n]
                    + eval_at(rule.t(m, n), x) * qx[m] * qx[n]
                )
                if lhs != rhs:
                    failures.append(Failure(m, n, Poly.constant(rhs - lhs), x))
                    seen.add((m, n))
    failures.sort(key=lambda f: (f.m, f.n))
    return VerifyReport(N, tuple(failures))


def random_seqtable(rng: random.Random, N: int, max_degree: int = 3) -> SeqTable:
    """A random ``SeqTable`` for fuzzing; see :func:`random_poly`."""
    return SeqTable.build(N, lambda n: random_poly(rng, max_degree))
