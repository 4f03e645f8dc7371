"""Exact computation with quadratic addition rules for quantum integers.

The quantum integer ``[n]_q`` is ``1 + q + ... + q^(n-1)``.  A quadratic
addition rule expresses ``[m+n]_q`` as ``r'_n [m]_q + s'_m [n]_q +
t'_{m,n} [m]_q [n]_q``.  This package builds, verifies, normalizes and
classifies such rules over a finite index horizon, and studies the
functional equations they induce on arbitrary polynomial sequences.
"""

from .classify import NormalizationResult, NotAQuantumAdditionRule, extract_uv, normalize, rule_from_uv
from .funceq import (
    AdmissibilityReport,
    InternalDivisibilityViolation,
    SolutionSeq,
    Verdict,
    admissibility,
    check_functional_equation,
    closed_form,
    generate_sequence,
)
from .identities import (
    NotAZeroIdentity,
    ZeroIdentity,
    check_degree_bound,
    decompose_zero_identity,
    verify_zero_identity,
    zero_identity_from_uv,
)
from .polyring import NEG_INF, ONE, Q, ZERO, DivisionByZeroPoly, FormatError, Poly, divrem, eval_at
from .polytext import ParseError, parse_poly, render_poly
from .quantum import UnknownRuleName, named_rule, quantum_int
from .rules import IndexOutOfHorizon, QuadRule, SeqTable, VerifyReport, apply_rule, spot_check_rule, verify_rule

__version__ = "0.1.0"
