"""Text formats for polynomials: a small infix parser and three renderers."""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .polyring import Poly

__all__ = ["FORMATS", "ParseError", "parse_poly", "render_poly"]

FORMATS = ("plain", "latex", "json")

_TOKEN = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|(q)|(\^)|([+\-])|(\*))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        kind = ("num", "q", "^", "sign", "*")[m.lastindex - 1]
        yield kind, m.group(m.lastindex), start
        pos = m.end()
    yield "end", "", len(text)


def parse_poly(text: str) -> Poly:
    """Parse e.g. ``"1 - 2/3 q^2 + q^5"`` or ``"3*q - q^2"``.

    Terms are ``[coeff][*][q[^k]]`` separated by ``+``/``-``, optionally with a
    leading sign.  Like powers are combined.

    Raises:
        ParseError: with the offending character position.
    """
    toks = list(_tokens(text))
    i = 0
    coeffs: dict[int, Fraction] = {}

    def peek():
        return toks[i]

    def take():
        nonlocal i
        tok = toks[i]
        i += 1
        return tok

    sign = 1
    if peek()[0] == "sign":
        sign = -1 if take()[1] == "-" else 1
    while True:
        kind, val, pos = peek()
        coeff = None
        if kind == "num":
            take()
            num, _, den = val.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", pos)
            coeff = Fraction(int(num), int(den) if den else 1)
            if peek()[0] == "*":
                take()
                if peek()[0] != "q":
                    raise ParseError("expected 'q' after '*'", peek()[2])
        power = 0
        if peek()[0] == "q":
            take()
            power = 1
            if peek()[0] == "^":
                take()
                kind2, val2, pos2 = take()
                if kind2 != "num" or "/" in val2:
                    raise ParseError("expected a nonnegative integer exponent", pos2)
                power = int(val2)
        elif coeff is None:
            raise ParseError("expected a term", peek()[2])
        c = Fraction(1) if coeff is None else coeff
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * c
        kind, val, pos = take()
        if kind == "end":
            break
        if kind != "sign":
            raise ParseError("expected '+' or '-'", pos)
        sign = -1 if val == "-" else 1
    if not coeffs:
        return Poly()
    top = max(coeffs)
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


def _plain_term(c: Fraction, k: int) -> str:
    mono = "" if k == 0 else "q" if k == 1 else f"q^{k}"
    if not mono:
        return str(c)
    if c == 1:
        return mono
    return f"{c} {mono}"


def _latex_term(c: Fraction, k: int) -> str:
    mono = "" if k == 0 else "q" if k == 1 else f"q^{{{k}}}"
    if c.denominator == 1:
        num = str(c.numerator)
    else:
        num = rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
    if not mono:
        return num
    if c == 1:
        return mono
    return f"{num} {mono}"


def render_poly(p: Poly, fmt: str = "plain") -> str:
    """Render ``p`` as ``plain``, ``latex`` or ``json`` text.

    Plain and latex list terms in ascending degree, e.g. ``1 + q + q^{2}``.
    """
    if fmt == "json":
        return json.dumps(p.to_json(), separators=(",", ":"))
    if fmt not in ("plain", "latex"):
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    term = _plain_term if fmt == "plain" else _latex_term
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        body = term(abs(c), k)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"
