# -*- coding: utf-8 -*-

# Copyright (C) 2026 The appellkit developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Exact rational scalars and the combinatorial primitives built on them.
"""

import re, math
from fractions import Fraction

from sympy import Rational, rf, ff

from .common import UsageError, InvalidParameter

# Fractions are stored gcd-reduced with a positive denominator, so equality is structural
ExactScalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def to_scalar(value):
    """
    Coerce an int, Fraction or rational literal ("p" or "p/q") to an ExactScalar.

    Floats and bools are refused.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError("Cannot convert %r to an exact rational" % (value,))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError("Cannot convert %r to an exact rational" % (value,))


def parse_rational(text):
    if not isinstance(text, str):
        raise UsageError("Invalid rational literal %r (expected a string p or p/q)" % (text,))
    match = RATIONAL_RE.match(text.strip())
    if match is None:
        raise UsageError("Invalid rational literal '%s' (expected p or p/q)" % text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise UsageError("Invalid rational literal '%s' (zero denominator)" % text)
    return Fraction(numerator, denominator)


def parse_rational_list(text):
    text = text.strip()
    if text == "":
        return []
    return [parse_rational(part) for part in text.split(",")]


def format_rational(value):
    """
    Render as "p/q" with the sign on the numerator, integers without "/1".
    """
    return str(to_scalar(value))


def is_nonpositive_integer(value):
    value = to_scalar(value)
    return value.denominator == 1 and value <= 0


def _check_count(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidParameter("Expected a nonnegative integer, got %r" % (n,))


def _to_sympy(value):
    value = to_scalar(value)
    return Rational(value.numerator, value.denominator)


def _from_sympy(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def pochhammer(x, n):
    """
    Rising factorial x(x+1)...(x+n-1); the empty product for n = 0 is 1.
    """
    _check_count(n)
    return _from_sympy(rf(_to_sympy(x), n))


def falling_factorial(x, n):
    """
    Falling factorial x(x-1)...(x-n+1); the empty product for n = 0 is 1.
    """
    _check_count(n)
    return _from_sympy(ff(_to_sympy(x), n))


def factorial(n):
    _check_count(n)
    return Fraction(math.factorial(n))


def binomial(n, i):
    _check_count(n)
    _check_count(i)
    return Fraction(math.comb(n, i))
