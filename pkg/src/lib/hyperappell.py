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
The generalized hypergeometric Appell family A_n^(k)(m, x).

The standard basis expansion (appell_poly) is the canonical constructor. The
hypergeometric Laurent form, the generating function product, the
differential operator form and the general Appell binomial form are built
independently and serve as cross-checks.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from .common import InvalidParameter, LowerParamPole, ComposeWithLaurent
from .exactcore import to_scalar, pochhammer, factorial, binomial, is_nonpositive_integer, format_rational, ZERO, ONE
from .polyfps import LaurentPoly, TruncatedSeries, exp_xt_series

_logger = logging.getLogger("hyperappell")


@dataclass(frozen=True)
class HyperParams:
    """
    Upper parameters a_1..a_p and lower parameters b_1..b_q of a pFq.
    """
    upper: tuple = ()
    lower: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(to_scalar(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(to_scalar(b) for b in self.lower))
        for b in self.lower:
            if is_nonpositive_integer(b):
                raise InvalidParameter("Lower parameter b = %s is zero or a negative integer; "
                                       "pFq lower parameters must avoid the nonpositive integers" % format_rational(b))

    def shifted(self):
        """
        Every parameter increased by one, as produced by differentiating in z.
        """
        return HyperParams(tuple(a + 1 for a in self.upper), tuple(b + 1 for b in self.lower))

    def gamma_ratio(self, i):
        return gamma_ratio(self, i)


@dataclass(frozen=True)
class FamilySpec:
    params: HyperParams
    k: int
    m: Fraction

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InvalidParameter("Order k must be a positive integer, got %r" % (self.k,))
        object.__setattr__(self, "m", to_scalar(self.m))

    @classmethod
    def create(cls, upper=(), lower=(), k=1, m=0):
        return cls(HyperParams(tuple(upper), tuple(lower)), k, to_scalar(m))

    def with_m(self, m):
        return FamilySpec(self.params, self.k, to_scalar(m))

    def with_k(self, k):
        return FamilySpec(self.params, k, self.m)

    def to_dict(self):
        return {
            "a": [format_rational(a) for a in self.params.upper],
            "b": [format_rational(b) for b in self.params.lower],
            "k": self.k,
            "m": format_rational(self.m)
            }

    def __str__(self):
        return "k=%d m=%s a=[%s] b=[%s]" % (self.k, format_rational(self.m),
                                            ",".join(format_rational(a) for a in self.params.upper),
                                            ",".join(format_rational(b) for b in self.params.lower))


@dataclass(frozen=True)
class DeltaArray:
    """
    The k ratios -n/k, -(n-1)/k, ..., -(n-k+1)/k appended to the upper parameters.
    """
    k: int
    n: int
    entries: tuple


def _check_index(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidParameter("Index %s must be a nonnegative integer, got %r" % (name, n))


def gamma_ratio(params, i):
    """
    prod_r (a_r)^(i) / prod_s (b_s)^(i). This is a function of i, not the i-th
    power of a fixed scalar.
    """
    _check_index(i, "i")
    numerator = ONE
    for a in params.upper:
        numerator *= pochhammer(a, i)
    denominator = ONE
    for b in params.lower:
        denominator *= pochhammer(b, i)
    if denominator == 0:
        raise LowerParamPole("A lower parameter reaches a pole within %d terms" % i)
    return numerator / denominator


def gamma_ratios(params, count):
    """
    [gamma_ratio(params, i) for i in 0..count], by the running product
    gamma^(i+1) = gamma^i * prod_r (a_r + i) / prod_s (b_s + i).
    """
    _check_index(count, "count")
    ratios = [ONE]
    for i in range(count):
        numerator = ONE
        for a in params.upper:
            numerator *= a + i
        denominator = ONE
        for b in params.lower:
            denominator *= b + i
        if denominator == 0:
            raise LowerParamPole("A lower parameter reaches a pole within %d terms" % (i + 1))
        ratios.append(ratios[-1] * numerator / denominator)
    return ratios


def delta_array(k, n):
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidParameter("Order k must be a positive integer, got %r" % (k,))
    _check_index(n)
    return DeltaArray(k, n, tuple(Fraction(-(n - j), k) for j in range(k)))


def product_delta(d):
    result = ONE
    for entry in d.entries:
        result *= entry
    return result


def pfq_coefficients(params, extraUpper, maxTerms):
    """
    Term weights c_0..c_maxTerms of the pFq with upper list params.upper + extraUpper,
    so that the function equals sum_i c_i z^i.

    Stops early once an upper parameter has run into zero.
    """
    _check_index(maxTerms, "max_terms")
    upper = list(params.upper) + [to_scalar(a) for a in extraUpper]
    coeffs = [ONE]
    weight = ONE
    for i in range(1, maxTerms + 1):
        numerator = ONE
        for a in upper:
            numerator *= a + i - 1
        if numerator == 0:
            break
        denominator = Fraction(i)
        for b in params.lower:
            denominator *= b + i - 1
        if denominator == 0:
            raise LowerParamPole("Lower parameter pole reached at term %d" % i)
        weight = weight * numerator / denominator
        coeffs.append(weight)
    return coeffs


def pfq_polynomial(params, extraUpper, maxTerms):
    """
    The truncated or terminating pFq as a polynomial in z.
    """
    return LaurentPoly(pfq_coefficients(params, extraUpper, maxTerms))


def pfq_terminating(params, extraUpper, z, maxTerms):
    """
    Sum of the pFq terms i = 0..maxTerms at the rational point z.
    """
    return pfq_polynomial(params, extraUpper, maxTerms).evaluate(z)


def pfq_laurent(params, extraUpper, m, k, maxTerms):
    """
    The pFq at z = m/x^k expanded in powers x^(-ki).
    """
    m = to_scalar(m)
    terms = {}
    for i, c in enumerate(pfq_coefficients(params, extraUpper, maxTerms)):
        terms[-k * i] = c * m ** i
    return LaurentPoly.from_dict(terms)


def _standard_coefficient(spec, n, i, gamma):
    k = spec.k
    return (factorial(n) * (-1) ** (k * i) * gamma * spec.m ** i
            / (factorial(i) * Fraction(k) ** (k * i) * factorial(n - k * i)))


def appell_poly(spec, n):
    """
    A_n^(k)(m, x) over the standard basis: monic of degree n with support
    n, n-k, n-2k, ...
    """
    _check_index(n)
    ratios = gamma_ratios(spec.params, n // spec.k)
    terms = {}
    for i, gamma in enumerate(ratios):
        terms[n - spec.k * i] = _standard_coefficient(spec, n, i, gamma)
    return LaurentPoly.from_dict(terms)


def appell_sequence(spec, nMax):
    _check_index(nMax, "n_max")
    _logger.debug("Building A_0..A_%d for %s", nMax, spec)
    return [appell_poly(spec, n) for n in range(nMax + 1)]


def appell_laurent_form(spec, n):
    """
    x^n times the terminating pFq with Delta(k, -n) appended, built literally
    as a Laurent sum in x^(-k).
    """
    _check_index(n)
    delta = delta_array(spec.k, n)
    series = pfq_laurent(spec.params, delta.entries, spec.m, spec.k, n // spec.k)
    return series.shift(n)


def generating_series(spec, order):
    """
    A(t) = pFq(a; b | (-1)^k m t^k / k^k) through t^order.
    """
    _check_index(order, "order")
    k = spec.k
    coeffs = [ZERO] * (order + 1)
    for r, gamma in enumerate(gamma_ratios(spec.params, order // k)):
        coeffs[k * r] = (gamma * (-1) ** (k * r) * spec.m ** r
                         / (Fraction(k) ** (k * r) * factorial(r)))
    return TruncatedSeries(coeffs, order)


def gf_coefficient_poly(spec, n):
    """
    n! times the t^n coefficient of A(t) e^{xt}.
    """
    _check_index(n)
    product = generating_series(spec, n) * exp_xt_series(n)
    return product.coefficient(n).scale(factorial(n))


def apply_diff_operator(spec, n):
    """
    sum_i (-1)^(ki) gamma^i m^i / (i! k^(ki)) D^(ki) applied to x^n.
    """
    _check_index(n)
    k = spec.k
    derived = LaurentPoly.monomial(n)
    result = LaurentPoly()
    for i, gamma in enumerate(gamma_ratios(spec.params, n // k)):
        if i:
            derived = derived.nth_derivative(k)
        weight = ((-1) ** (k * i) * gamma * spec.m ** i
                  / (factorial(i) * Fraction(k) ** (k * i)))
        if weight != 0:
            result = result + derived.scale(weight)
    return result


def appell_binomial_form(spec, n):
    """
    The expansion shared by every Appell sequence, sum_i C(n, i) a_(n-i) x^i,
    with a_j = j! [t^j] A(t).
    """
    _check_index(n)
    moments = generating_series(spec, n).scalar_coefficients()
    terms = {}
    for i in range(n + 1):
        terms[i] = binomial(n, i) * factorial(n - i) * moments[n - i]
    return LaurentPoly.from_dict(terms)


def composed_poly(spec, n, f):
    """
    A_n^(k)(m, f(x)) for an ordinary polynomial f.
    """
    if not f.is_polynomial():
        raise ComposeWithLaurent("Inner polynomial %s has negative powers" % f)
    if f.is_zero():
        raise InvalidParameter("Inner polynomial must have a nonzero leading coefficient")
    return appell_poly(spec, n).compose(f)
