"""Functional equations attached to quadratic addition rules.

Given a rule, a sequence ``f_1, f_2, ...`` solves the associated equation when

    f_{m+n} = r'_n f_m + s'_m f_n + t'_{m,n} f_m f_n

for all ``m, n``.  A solution is forced by its seed ``h = f_1`` through
``f_n = h (+) f_{n-1}``, so the questions are which seeds work and what the
resulting sequences look like.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .classify import extract_uv
from .polyring import Q, ZERO, FormatError, Poly, divrem
from .rules import (
    Failure,
    IndexOutOfHorizon,
    QuadRule,
    SeqTable,
    VerifyReport,
    _get_horizon,
    _poly_list,
    apply_rule,
)

__all__ = [
    "CLOSED_FORM_NAMES",
    "AdmissibilityReport",
    "InternalDivisibilityViolation",
    "SolutionSeq",
    "Verdict",
    "admissibility",
    "admissibility_cubic",
    "check_functional_equation",
    "closed_form",
    "generate_sequence",
    "rule_uv",
    "test_seed",
]

CLOSED_FORM_NAMES = ("fundamental", "rule1", "rule2")


class InternalDivisibilityViolation(ArithmeticError):
    """A closed-form numerator that must be divisible turned out not to be."""


@dataclass(frozen=True)
class SolutionSeq:
    rule: QuadRule
    h: Poly
    N: int
    f: tuple[Poly, ...]

    def __getitem__(self, n: int) -> Poly:
        if not 1 <= n <= self.N:
            raise IndexOutOfHorizon(f"index {n} outside 1..{self.N}")
        return self.f[n - 1]

    def to_json(self) -> dict:
        return {"h": self.h.to_json(), "N": self.N, "f": [p.to_json() for p in self.f]}

    @classmethod
    def from_json(cls, data, rule: QuadRule) -> SolutionSeq:
        N = _get_horizon(data)
        if set(data) != {"h", "N", "f"}:
            raise FormatError("sequence JSON needs exactly the keys h, N, f")
        f = _poly_list(data["f"], "'f'")
        if len(f) != N:
            raise FormatError(f"'f' must have {N} entries")
        h = Poly.from_json(data["h"])
        if f[0] != h:
            raise FormatError("f[0] must equal the seed h")
        return cls(rule, h, N, tuple(f))


def generate_sequence(rule: QuadRule, h: Poly, N: int) -> SolutionSeq:
    """Build ``f_1 = h`` and ``f_n = apply_rule(rule, 1, n-1, h, f_{n-1})`` up to ``N``."""
    if N < 1:
        raise ValueError(f"horizon must be positive, got {N}")
    if N - 1 > rule.N:
        raise IndexOutOfHorizon(f"generating to {N} needs a rule of horizon {N - 1}, have {rule.N}")
    f = [h]
    for n in range(2, N + 1):
        f.append(apply_rule(rule, 1, n - 1, h, f[-1]))
    return SolutionSeq(rule, h, N, tuple(f))


def check_functional_equation(
    rule: QuadRule, seq: SolutionSeq, N: Optional[int] = None
) -> VerifyReport:
    """Failures over all ``(m, n)`` with ``m + n <= N``.

    An empty report certifies both the equation and consistency of the
    induced addition on ``seq`` up to ``N``.
    """
    if N is None:
        N = seq.N
    if N > seq.N:
        raise IndexOutOfHorizon(f"sequence has horizon {seq.N}, asked for {N}")
    if N - 1 > rule.N:
        raise IndexOutOfHorizon(f"checking to {N} needs a rule of horizon {N - 1}")
    failures = []
    for m in range(1, N):
        for n in range(1, N - m + 1):
            defect = apply_rule(rule, m, n, seq[m], seq[n]) - seq[m + n]
            if defect:
                failures.append(Failure(m, n, defect))
    return VerifyReport(N, tuple(failures))


def _exact_div(num: Poly, den: Poly) -> Poly:
    quot, rem = divrem(num, den)
    if rem:
        raise InternalDivisibilityViolation(f"{num!r} is not divisible by {den!r}")
    return quot


def closed_form(name: str, h: Poly, n: int) -> Poly:
    """Closed-form ``f_n`` for the built-in rules, seeded by ``h``.

    * fundamental: ``h (1 - (q h)^n) / (1 - q h) + q^(n-2) h^(n-1) (h - 1)``
      for ``n >= 2``, and ``h`` for ``n = 1``;
    * rule1: ``(1 - (1 - (1 - q) h)^n) / (1 - q)``;
    * rule2: ``((q + (1 - q) h)^n - q^n) / (1 - q)``.

    All divisions are exact polynomial divisions.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    one_minus_q = 1 - Q
    if name == "fundamental":
        if n == 1:
            return h
        if not h:
            return ZERO
        qh = Q * h
        geometric = _exact_div(h * (1 - qh**n), 1 - qh)
        return geometric + Q ** (n - 2) * h ** (n - 1) * (h - 1)
    if name == "rule1":
        return _exact_div(1 - (1 - one_minus_q * h) ** n, one_minus_q)
    if name == "rule2":
        return _exact_div((Q + one_minus_q * h) ** n - Q**n, one_minus_q)
    raise ValueError(f"no closed form for {name!r}; expected one of {CLOSED_FORM_NAMES}")


class Verdict(enum.Enum):
    ALL_SEEDS = "ALL_SEEDS"
    ONLY_TRIVIAL = "ONLY_TRIVIAL"
    UNIQUE_CANDIDATE = "UNIQUE_CANDIDATE"
    NO_POLYNOMIAL_CANDIDATE = "NO_POLYNOMIAL_CANDIDATE"


@dataclass(frozen=True)
class AdmissibilityReport:
    """The linear seed condition ``A h = B`` beyond the trivial seeds 0 and 1.

    This is only a necessary condition, read off the equations with
    ``m + n <= 3``.  ``UNIQUE_CANDIDATE`` names the one extra seed that
    might work; whether it does is for :func:`test_seed` to decide.
    """

    A: Poly
    B: Poly
    verdict: Verdict
    candidate: Optional[Poly] = None

    def permits(self, h: Poly) -> bool:
        return h == 0 or h == 1 or self.A * h == self.B

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "verdict": self.verdict.value,
            "candidate": None if self.candidate is None else self.candidate.to_json(),
        }


def admissibility(U: SeqTable, V: SeqTable) -> AdmissibilityReport:
    u1, u2, v1, v2 = U[1], U[2], V[1], V[2]
    A = (u2 - v2 - u1 + v1) * (Q + 1 - u1 - v1)
    B = u1 * u1 - v1 * v1 - (u2 - v2) * (Q + 1)
    if not A:
        verdict = Verdict.ONLY_TRIVIAL if B else Verdict.ALL_SEEDS
        return AdmissibilityReport(A, B, verdict)
    quot, rem = divrem(B, A)
    if rem:
        return AdmissibilityReport(A, B, Verdict.NO_POLYNOMIAL_CANDIDATE)
    return AdmissibilityReport(A, B, Verdict.UNIQUE_CANDIDATE, quot)


def admissibility_cubic(U: SeqTable, V: SeqTable) -> tuple[Poly, Poly, Poly]:
    """Coefficients of ``x^3, x^2, x`` in the cubic every seed must satisfy.

    Written out term by term rather than from :func:`admissibility`, so the
    two can be checked against each other.
    """
    u1, u2, v1, v2 = U[1], U[2], V[1], V[2]
    q1 = Q + 1
    c3 = (u2 - v2 - u1 + v1) * (q1 - u1 - v1)
    c2 = (u2 - v2) * (u1 + v1) + q1 * (u1 - v1) - 2 * (u1 * u1 - v1 * v1)
    c1 = u1 * u1 - v1 * v1 - (u2 - v2) * q1
    return c3, c2, c1


def rule_uv(rule: QuadRule) -> tuple[SeqTable, SeqTable]:
    """The rule's ``(U, V)``, from its cache or by extraction."""
    if rule.uv is not None:
        return rule.uv
    return extract_uv(rule)


def test_seed(rule: QuadRule, h: Poly, N: int = 12) -> bool:
    """Whether the sequence seeded by ``h`` solves the equation up to ``N``."""
    seq = generate_sequence(rule, h, N)
    return check_functional_equation(rule, seq, N).ok


test_seed.__test__ = False  # keep pytest from collecting it
