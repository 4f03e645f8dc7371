"""``qint``: command-line access to rule verification, classification and seeds.

Exit status is 0 on success, 1 when a verification or classification check
fails, and 2 on malformed input.  Results go to stdout (JSON by default),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import funceq
from .classify import NotAQuantumAdditionRule, extract_uv, normalize, rule_from_uv
from .identities import (
    NotAZeroIdentity,
    ZeroIdentity,
    check_degree_bound,
    decompose_zero_identity,
    verify_zero_identity,
    zero_identity_from_uv,
)
from .polyring import FormatError, Poly, eval_at
from .polytext import FORMATS, ParseError, parse_poly, render_poly
from .quantum import RULE_NAMES, UnknownRuleName, named_rule
from .rules import (
    IndexOutOfHorizon,
    QuadRule,
    SeqTable,
    VerifyReport,
    apply_rule,
    spot_check_rule,
    verify_rule,
)

DEFAULT_HORIZON = 20
SEED_TEST_HORIZON = 12


class UsageError(Exception):
    """Bad arguments or input files; maps to exit status 2."""


# -- input helpers -----------------------------------------------------------


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON ({e})") from None


def _load_uv(path: str) -> tuple[SeqTable, SeqTable]:
    data = _load_json(path)
    if not isinstance(data, dict) or set(data) != {"U", "V"}:
        raise FormatError("uv file needs exactly the keys U and V")
    return SeqTable.from_json(data["U"]), SeqTable.from_json(data["V"])


def _poly_arg(text: str) -> Poly:
    return parse_poly(text)


def _rational_arg(text: str) -> Fraction:
    p = parse_poly(text)
    if p.degree > 0:
        raise UsageError(f"expected a rational number, got {text!r}")
    return p[0]


def _rule_from_args(args, default_horizon: int = DEFAULT_HORIZON) -> QuadRule:
    N = args.horizon
    if args.name:
        if args.name not in RULE_NAMES:
            raise UnknownRuleName(args.name)
        return named_rule(args.name, N or default_horizon)
    if args.uv_file:
        U, V = _load_uv(args.uv_file)
        if N is None:
            N = min(U.N, V.N)
        return rule_from_uv(U, V, N)
    rule = QuadRule.from_json(_load_json(args.file))
    return rule if N is None else rule.truncate(N)


def _zero_from_file(args) -> ZeroIdentity:
    zi = ZeroIdentity.from_json(_load_json(args.file))
    if args.horizon is not None and args.horizon > zi.N:
        raise IndexOutOfHorizon(f"identity has horizon {zi.N}, asked for {args.horizon}")
    return zi


# -- output helpers ----------------------------------------------------------


def _emit(args, payload, lines: Sequence[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for line in lines:
            print(line)


def _fmt(args, p: Poly) -> str:
    return render_poly(p, "plain" if args.format == "json" else args.format)


def _report_lines(args, report: VerifyReport, what: str) -> list[str]:
    if report.ok:
        return [f"{what} holds for all checked pairs up to N = {report.N}"]
    lines = [f"{what} fails at {len(report.failures)} pair(s) up to N = {report.N}"]
    for f in report.failures:
        at = f" at q = {f.point}" if f.point is not None else ""
        lines.append(f"  (m, n) = ({f.m}, {f.n}){at}: defect {_fmt(args, f.defect)}")
    return lines


def _uv_payload(U: SeqTable, V: SeqTable) -> dict:
    return {"U": U.to_json(), "V": V.to_json()}


def _uv_lines(args, U: SeqTable, V: SeqTable) -> list[str]:
    lines = [f"u_{n} = {_fmt(args, U[n])}" for n in range(1, U.N + 1)]
    lines += [f"v_{m} = {_fmt(args, V[m])}" for m in range(1, V.N + 1)]
    return lines


def _rule_lines(args, rule: QuadRule) -> list[str]:
    idx = range(1, rule.N + 1)
    lines = [f"r'_{n} = {_fmt(args, rule.r(n))}" for n in idx]
    lines += [f"s'_{m} = {_fmt(args, rule.s(m))}" for m in idx]
    lines += [f"t'_{m},{n} = {_fmt(args, rule.t(m, n))}" for m in idx for n in idx]
    return lines


# -- commands ----------------------------------------------------------------


def cmd_rule_verify(args) -> int:
    report = verify_rule(_rule_from_args(args))
    _emit(args, report.to_json(), _report_lines(args, report, "addition identity"))
    return 0 if report.ok else 1


def cmd_rule_spot_check(args) -> int:
    report = spot_check_rule(_rule_from_args(args), trials=args.trials, seed=args.seed)
    _emit(args, report.to_json(), _report_lines(args, report, "pointwise addition identity"))
    return 0 if report.ok else 1


def cmd_rule_normalize(args) -> int:
    result = normalize(_rule_from_args(args))
    lines = [f"residual is fundamental: {str(result.is_fundamental).lower()}"]
    lines += _uv_lines(args, result.U, result.V)
    if not result.is_fundamental:
        lines += _rule_lines(args, result.residual)
    _emit(args, result.to_json(), lines)
    return 0 if result.is_fundamental else 1


def cmd_rule_from_uv(args) -> int:
    U, V = _load_uv(args.uv_file)
    rule = rule_from_uv(U, V, args.horizon or min(U.N, V.N))
    _emit(args, rule.to_json(), _rule_lines(args, rule))
    return 0


def cmd_rule_extract_uv(args) -> int:
    rule = _rule_from_args(args)
    try:
        U, V = extract_uv(rule)
    except NotAQuantumAdditionRule as e:
        print(f"qint: not a quantum addition rule: {e}", file=sys.stderr)
        return 1
    _emit(args, _uv_payload(U, V), _uv_lines(args, U, V))
    return 0


def cmd_rule_apply(args) -> int:
    rule = _rule_from_args(args, default_horizon=max(DEFAULT_HORIZON, args.m, args.n))
    p = apply_rule(rule, args.m, args.n, _poly_arg(args.a), _poly_arg(args.b))
    _emit(args, p.to_json(), [_fmt(args, p)])
    return 0


def cmd_zero_verify(args) -> int:
    report = verify_zero_identity(_zero_from_file(args), args.horizon)
    _emit(args, report.to_json(), _report_lines(args, report, "zero identity"))
    return 0 if report.ok else 1


def cmd_zero_from_uv(args) -> int:
    U, V = _load_uv(args.uv_file)
    zi = zero_identity_from_uv(U, V, args.horizon or min(U.N, V.N))
    idx = range(1, zi.N + 1)
    lines = [f"u'_{n} = {_fmt(args, zi.u(n))}" for n in idx]
    lines += [f"v'_{m} = {_fmt(args, zi.v(m))}" for m in idx]
    lines += [f"w'_{m},{n} = {_fmt(args, zi.w(m, n))}" for m in idx for n in idx]
    _emit(args, zi.to_json(), lines)
    return 0


def cmd_zero_decompose(args) -> int:
    zi = _zero_from_file(args)
    try:
        U, V = decompose_zero_identity(zi, args.horizon)
    except NotAZeroIdentity as e:
        print(f"qint: not a zero identity: {e}", file=sys.stderr)
        return 1
    _emit(args, _uv_payload(U, V), _uv_lines(args, U, V))
    return 0


def cmd_zero_degree_bound(args) -> int:
    zi = _zero_from_file(args)
    report = verify_zero_identity(zi, args.horizon)
    if not report.ok:
        print("qint: input is not a zero identity; degree bound not applicable", file=sys.stderr)
        return 1
    holds = check_degree_bound(zi, args.horizon)
    _emit(args, {"N": report.N, "holds": holds}, [f"degree bound holds: {str(holds).lower()}"])
    return 0 if holds else 1


def _seq_lines(args, f: Sequence[Poly]) -> list[str]:
    return [f"f_{n} = {_fmt(args, p)}" for n, p in enumerate(f, 1)]


def cmd_seq_generate(args) -> int:
    rule = _rule_from_args(args)
    seq = funceq.generate_sequence(rule, _poly_arg(args.h), args.horizon or rule.N)
    _emit(args, seq.to_json(), _seq_lines(args, seq.f))
    return 0


def cmd_seq_check(args) -> int:
    rule = _rule_from_args(args)
    seq = funceq.SolutionSeq.from_json(_load_json(args.seq_file), rule)
    report = funceq.check_functional_equation(rule, seq)
    _emit(args, report.to_json(), _report_lines(args, report, "functional equation"))
    return 0 if report.ok else 1


def cmd_seq_closed_form(args) -> int:
    h = _poly_arg(args.h)
    if args.n is not None:
        p = funceq.closed_form(args.name, h, args.n)
        _emit(args, p.to_json(), [_fmt(args, p)])
        return 0
    N = args.horizon or DEFAULT_HORIZON
    f = [funceq.closed_form(args.name, h, n) for n in range(1, N + 1)]
    _emit(args, {"h": h.to_json(), "N": N, "f": [p.to_json() for p in f]}, _seq_lines(args, f))
    return 0


def cmd_seed_admissible(args) -> int:
    U, V = funceq.rule_uv(_rule_from_args(args))
    rep = funceq.admissibility(U, V)
    lines = [
        f"A = {_fmt(args, rep.A)}",
        f"B = {_fmt(args, rep.B)}",
        f"verdict: {rep.verdict.value}",
    ]
    if rep.candidate is not None:
        lines.append(f"candidate seed (necessary condition only): {_fmt(args, rep.candidate)}")
    _emit(args, rep.to_json(), lines)
    return 0


def cmd_seed_test(args) -> int:
    rule = _rule_from_args(args, default_horizon=SEED_TEST_HORIZON)
    h = _poly_arg(args.h)
    seq = funceq.generate_sequence(rule, h, rule.N)
    report = funceq.check_functional_equation(rule, seq)
    payload = {"h": h.to_json(), **report.to_json()}
    _emit(args, payload, _report_lines(args, report, f"seed {_fmt(args, h)}"))
    return 0 if report.ok else 1


def cmd_poly_eval(args) -> int:
    value = eval_at(_poly_arg(args.p), _rational_arg(args.x))
    _emit(args, {"value": str(value)}, [str(value)])
    return 0


def cmd_poly_render(args) -> int:
    print(render_poly(_poly_arg(args.p), args.format))
    return 0


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common(fmt_default: str = "json") -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--horizon", type=int, default=None, help="index bound N")
    p.add_argument("--format", choices=FORMATS, default=fmt_default)
    return p


def _rule_source(p: argparse.ArgumentParser, names=RULE_NAMES) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--name", choices=names, help="built-in rule")
    g.add_argument("--file", help="rule JSON file")
    g.add_argument("--uv-file", help="(U, V) JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qint", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)
    common = _common()

    rule = groups.add_parser("rule", help="quadratic addition rules").add_subparsers(
        dest="verb", required=True, parser_class=_Parser
    )
    p = rule.add_parser("verify", parents=[common])
    _rule_source(p)
    p.set_defaults(func=cmd_rule_verify)
    p = rule.add_parser("spot-check", parents=[common])
    _rule_source(p)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_rule_spot_check)
    p = rule.add_parser("normalize", parents=[common])
    _rule_source(p)
    p.set_defaults(func=cmd_rule_normalize)
    p = rule.add_parser("from-uv", parents=[common])
    p.add_argument("--uv-file", required=True)
    p.set_defaults(func=cmd_rule_from_uv)
    p = rule.add_parser("extract-uv", parents=[common])
    _rule_source(p)
    p.set_defaults(func=cmd_rule_extract_uv)
    p = rule.add_parser("apply", parents=[_common("plain")])
    _rule_source(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True, help="polynomial in the m slot")
    p.add_argument("--b", required=True, help="polynomial in the n slot")
    p.set_defaults(func=cmd_rule_apply)

    zero = groups.add_parser("zero", help="zero identities").add_subparsers(
        dest="verb", required=True, parser_class=_Parser
    )
    for verb, func in (
        ("verify", cmd_zero_verify),
        ("decompose", cmd_zero_decompose),
        ("degree-bound", cmd_zero_degree_bound),
    ):
        p = zero.add_parser(verb, parents=[common])
        p.add_argument("--file", required=True, help="zero identity JSON file")
        p.set_defaults(func=func)
    p = zero.add_parser("from-uv", parents=[common])
    p.add_argument("--uv-file", required=True)
    p.set_defaults(func=cmd_zero_from_uv)

    seq = groups.add_parser("seq", help="functional-equation sequences").add_subparsers(
        dest="verb", required=True, parser_class=_Parser
    )
    p = seq.add_parser("generate", parents=[common])
    _rule_source(p)
    p.add_argument("--h", required=True, help="seed polynomial f_1")
    p.set_defaults(func=cmd_seq_generate)
    p = seq.add_parser("check", parents=[common])
    _rule_source(p)
    p.add_argument("--seq-file", required=True, help="sequence JSON file")
    p.set_defaults(func=cmd_seq_check)
    p = seq.add_parser("closed-form", parents=[common])
    p.add_argument("--name", choices=funceq.CLOSED_FORM_NAMES, required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--n", type=int, default=None, help="single index; otherwise 1..horizon")
    p.set_defaults(func=cmd_seq_closed_form)

    seed = groups.add_parser("seed", help="seed polynomials").add_subparsers(
        dest="verb", required=True, parser_class=_Parser
    )
    p = seed.add_parser("admissible", parents=[common])
    _rule_source(p)
    p.set_defaults(func=cmd_seed_admissible)
    p = seed.add_parser("test", parents=[common])
    _rule_source(p)
    p.add_argument("--h", required=True)
    p.set_defaults(func=cmd_seed_test)

    poly = groups.add_parser("poly", help="polynomial utilities").add_subparsers(
        dest="verb", required=True, parser_class=_Parser
    )
    p = poly.add_parser("eval", parents=[_common("plain")])
    p.add_argument("--p", required=True)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_poly_eval)
    p = poly.add_parser("render", parents=[_common("plain")])
    p.add_argument("--p", required=True)
    p.set_defaults(func=cmd_poly_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.horizon is not None and args.horizon < 1:
            raise UsageError("--horizon must be positive")
        return args.func(args)
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else 0
    except UsageError as e:
        print(f"qint: {e}", file=sys.stderr)
        return 2
    except (ParseError, FormatError, UnknownRuleName, IndexOutOfHorizon, ValueError) as e:
        print(f"qint: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
