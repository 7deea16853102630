"""Exact rational arithmetic backend.

Every quantity in this library is an exact rational; floats are rejected at
construction time.  Two interchangeable backends provide the rational type:

* ``gmpy2.mpq`` -- a compiled (GMP-backed) kernel, used when importable;
* ``fractions.Fraction`` -- the pure-Python fallback.

The backend is chosen once at import.  Set ``SYZSTAB_BACKEND=fraction`` (or
``gmpy2``) to force a choice; ``benchmarks/bench_backends.py`` times the two
against each other.  All arithmetic downstream is duck-typed, both types
compare, hash and ``str()`` identically, so every report is byte-identical
regardless of backend.
"""

from __future__ import annotations

import numbers
import os
import re
from fractions import Fraction
from typing import Union

Rational = numbers.Rational

_choice = os.environ.get("SYZSTAB_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "gmpy2", "fraction"):
    raise RuntimeError(f"SYZSTAB_BACKEND must be auto, gmpy2 or fraction, got {_choice!r}")

if _choice in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as _make

        BACKEND = "gmpy2"
    except ImportError:
        if _choice == "gmpy2":
            raise RuntimeError("SYZSTAB_BACKEND=gmpy2 but gmpy2 is not installed")
        _make = Fraction
        BACKEND = "fraction"
else:
    _make = Fraction
    BACKEND = "fraction"

_RATIONAL_TOKEN = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def rational(value: Union[int, str, Rational], den: Union[int, None] = None) -> Rational:
    """Build an exact rational from an int, a rational, or a ``"p/q"`` string.

    Floats (and anything else inexact) are refused: exactness is the core
    promise of this library.
    """
    if den is not None:
        if not isinstance(value, numbers.Integral) or not isinstance(den, numbers.Integral):
            raise TypeError("two-argument rational() takes integers")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return _make(int(value), int(den))
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, numbers.Rational):
        return _make(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational_token(value)
    raise TypeError(f"not an exact rational: {value!r} of type {type(value).__name__}")


def parse_rational_token(token: Union[int, str]) -> Rational:
    """Parse the wire form of a rational: a JSON integer or a ``"p/q"`` string.

    The parse is exact; malformed tokens (including ``"1/0"`` and anything
    float-like) raise ``ValueError``.
    """
    if isinstance(token, bool):
        raise ValueError(f"not a rational token: {token!r}")
    if isinstance(token, numbers.Integral):
        return _make(int(token))
    if not isinstance(token, str) or not _RATIONAL_TOKEN.match(token.strip()):
        raise ValueError(f"not a rational token: {token!r} (want an integer or 'p/q')")
    text = token.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational token {token!r}")
        return _make(int(num), int(den))
    return _make(int(text))


def rat_str(value: Rational) -> str:
    """Canonical wire form: ``"p/q"`` in lowest terms, or ``"n"`` for integers."""
    return str(value)


def is_integral(value: Rational) -> bool:
    return value.denominator == 1
