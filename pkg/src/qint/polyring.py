"""Exact univariate polynomials over the rationals.

Coefficients are stored densely in ascending degree as a tuple of
:class:`fractions.Fraction`, with trailing zeros stripped, so the zero
polynomial is the empty tuple and equality is structural.  Instances are
immutable and hashable.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from itertools import zip_longest
from math import lcm
from numbers import Rational
from typing import Iterable, Union

__all__ = [
    "NEG_INF",
    "Poly",
    "DivisionByZeroPoly",
    "FormatError",
    "Q",
    "ONE",
    "ZERO",
    "divrem",
    "eval_at",
    "random_poly",
]

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]

_COEFF_RE = re.compile(r"-?\d+(/\d+)?\Z")


class DivisionByZeroPoly(ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""


class FormatError(ValueError):
    """Raised when serialized input does not match the expected JSON shape."""


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    """A polynomial in ``q`` with rational coefficients.

    ``Poly([1, 0, Fraction(2, 3)])`` is ``1 + 2/3 q^2``.  Ints and Fractions
    mix freely with polynomials in ``+``, ``-`` and ``*``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        out = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, Rational):
                raise TypeError(f"polynomial coefficient must be rational, got {c!r}")
            out.append(Fraction(c))
        self._c = _strip(out)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Poly:
        p = object.__new__(cls)
        p._c = coeffs
        return p

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Poly:
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls([0] * k + [c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | float:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def lead(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative exponent")
        return self._c[i] if i < len(self._c) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- ring structure ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(
            _strip([a + b for a, b in zip_longest(self._c, o._c, fillvalue=0)])
        )

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self._c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(
            _strip([a - b for a, b in zip_longest(self._c, o._c, fillvalue=0)])
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c: Scalar) -> Poly:
        c = Fraction(c)
        if not c:
            return ZERO
        return Poly._raw(tuple(c * a for a in self._c))

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return divrem(self, o)

    def __call__(self, x: Scalar) -> Fraction:
        return eval_at(self, x)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        if len(self._c) <= 1:
            return hash(self._c[0] if self._c else 0)
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self._c)}])"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self._c]}

    @classmethod
    def from_json(cls, data) -> Poly:
        if not isinstance(data, dict) or set(data) != {"coeffs"}:
            raise FormatError(f"expected {{'coeffs': [...]}}, got {data!r}")
        raw = data["coeffs"]
        if not isinstance(raw, list):
            raise FormatError("'coeffs' must be a list")
        out = []
        for c in raw:
            if not isinstance(c, str) or not _COEFF_RE.match(c):
                raise FormatError(f"bad coefficient {c!r}; expected 'n' or 'n/d'")
            try:
                out.append(Fraction(c))
            except ZeroDivisionError:
                raise FormatError(f"zero denominator in {c!r}") from None
        return cls(out)


def _mul(a: Poly, b: Poly) -> Poly:
    if not a._c or not b._c:
        return ZERO
    # Convolve over integers with a common denominator; far cheaper than
    # Fraction-by-Fraction products.
    da = lcm(*(c.denominator for c in a._c))
    db = lcm(*(c.denominator for c in b._c))
    ia = [c.numerator * (da // c.denominator) for c in a._c]
    ib = [c.numerator * (db // c.denominator) for c in b._c]
    out = [0] * (len(ia) + len(ib) - 1)
    for i, x in enumerate(ia):
        if x:
            for j, y in enumerate(ib):
                out[i + j] += x * y
    d = da * db
    return Poly._raw(tuple(Fraction(v, d) for v in out))


ZERO = Poly()
ONE = Poly((1,))
Q = Poly((0, 1))


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Return ``(quot, rem)`` with ``a == quot*b + rem`` and ``deg rem < deg b``."""
    if not b._c:
        raise DivisionByZeroPoly("polynomial division by zero")
    db = len(b._c) - 1
    rem = list(a._c)
    if len(rem) <= db:
        return ZERO, a
    lead = b._c[-1]
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        c = c / lead
        quot[k - db] = c
        for i, bc in enumerate(b._c):
            if bc:
                rem[k - db + i] -= c * bc
    return Poly._raw(_strip(quot)), Poly._raw(_strip(rem[:db]))


def eval_at(p: Poly, x: Scalar) -> Fraction:
    """Evaluate ``p`` at the rational point ``x`` by Horner's rule."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p._c):
        acc = acc * x + c
    return acc


def random_poly(
    rng: random.Random, max_degree: int = 3, coeff_bound: int = 5, max_den: int = 3
) -> Poly:
    """Draw a small random polynomial for fuzzing.

    The degree is uniform on ``0..max_degree``; each coefficient is an integer
    in ``[-coeff_bound, coeff_bound]`` divided by a denominator in
    ``[1, max_den]``.  Cancellation to lower degree (or zero) is possible.
    """
    d = rng.randint(0, max_degree)
    return Poly(
        Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, max_den))
        for _ in range(d + 1)
    )
