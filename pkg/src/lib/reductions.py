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
Closed-form special cases of the family, computed without touching the
family constructors so that they can act as oracles.
"""

import logging
from fractions import Fraction

from .common import BadReduction, InvalidParameter
from .exactcore import to_scalar, factorial, ONE
from .hyperappell import FamilySpec, HyperParams
from .polyfps import LaurentPoly

_logger = logging.getLogger("reductions")

HERMITE = "hermite"
GOULD_HOPPER = "gould_hopper"

REDUCTION_KINDS = (HERMITE, GOULD_HOPPER)


def hermite_probabilists(n):
    """
    He_n from He_(n+1) = x He_n - n He_(n-1), He_0 = 1, He_1 = x.
    """
    if n < 0:
        raise InvalidParameter("Index n must be nonnegative, got %r" % (n,))
    previous, current = LaurentPoly.constant(ONE), LaurentPoly.x()
    if n == 0:
        return previous
    x = LaurentPoly.x()
    for j in range(1, n):
        previous, current = current, x * current - previous.scale(j)
    return current


def gould_hopper(n, k, h):
    """
    The coefficient of t^n/n! in e^{xt + h t^k}: sum_i n!/(i!(n-ki)!) h^i x^(n-ki).
    """
    if n < 0 or k < 1:
        raise InvalidParameter("Need n >= 0 and k >= 1, got n=%r k=%r" % (n, k))
    h = to_scalar(h)
    terms = {}
    for i in range(n // k + 1):
        terms[n - k * i] = factorial(n) / (factorial(i) * factorial(n - k * i)) * h ** i
    return LaurentPoly.from_dict(terms)


def reduce_spec(kind, k=2, h=None):
    """
    The family parameters under which A_n^(k)(m, x) becomes a named classical family.

    For gould_hopper m = (-1)^k h k^k; for hermite k must be 2 and h is ignored.
    """
    kind = kind.replace("-", "_")
    if kind == HERMITE:
        if k != 2:
            raise BadReduction("The Hermite reduction needs k = 2, got k = %r" % (k,))
        return FamilySpec(HyperParams(), 2, Fraction(-2))
    elif kind == GOULD_HOPPER:
        if h is None:
            raise BadReduction("The Gould-Hopper reduction needs a value for h")
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise BadReduction("The Gould-Hopper reduction needs k >= 1, got k = %r" % (k,))
        m = (-1) ** k * to_scalar(h) * Fraction(k) ** k
        _logger.debug("Gould-Hopper k=%d h=%s maps to m=%s", k, h, m)
        return FamilySpec(HyperParams(), k, m)
    raise BadReduction("Unknown reduction '%s' (expected one of %s)" % (kind, ", ".join(REDUCTION_KINDS)))
