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
Laurent polynomials in x over the rationals, and truncated power series in t
whose coefficients are Laurent polynomials.

A LaurentPoly is a sympy dense univariate block over QQ times a power of x.
Series products and reciprocals run in the sparse ring QQ[x, xinv, t], with
x^-e stored as xinv^e and folded back when reading the result.
"""

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.densearith import dup_add, dup_sub, dup_neg, dup_mul, dup_mul_ground, dup_lshift
from sympy.polys.densebasic import dup_strip, dup_from_dict
from sympy.polys.densetools import dup_diff, dup_eval, dup_compose, dup_mirror
from sympy.polys.rings import ring
from sympy.polys.ring_series import rs_mul, rs_series_inversion

from .common import EvalAtPole, ComposeWithLaurent, NonUnitConstantTerm, InvalidParameter
from .exactcore import to_scalar, factorial, ZERO, ONE

SERIES_RING, _X, _XINV, _T = ring("x,xinv,t", QQ)


def to_qq(value):
    if QQ.of_type(value):
        return value
    value = to_scalar(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


class LaurentPoly:
    """
    x^minExponent * P(x), with P a dense QQ block in sympy order (highest
    degree first). P never has a zero constant term, so the representation is
    canonical; the zero polynomial is the empty block with minExponent 0.
    Instances are immutable.
    """

    __slots__ = ("minExponent", "rep")

    def __init__(self, coeffs=(), minExponent=0):
        """
        coeffs[j] is the coefficient of x^(minExponent + j).
        """
        self._assign(dup_strip([to_qq(c) for c in reversed(list(coeffs))]), minExponent)

    def _assign(self, rep, minExponent):
        trailing = 0
        while trailing < len(rep) and not rep[len(rep) - 1 - trailing]:
            trailing += 1
        if trailing == len(rep):
            rep, minExponent = [], 0
        elif trailing:
            rep = rep[:len(rep) - trailing]
            minExponent += trailing
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "minExponent", minExponent)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_rep(cls, rep, minExponent=0):
        """
        Wrap a sympy dense block (highest degree first) times x^minExponent.
        """
        poly = cls.__new__(cls)
        poly._assign(dup_strip(list(rep)), minExponent)
        return poly

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def monomial(cls, exponent, coefficient=ONE):
        return cls([coefficient], exponent)

    @classmethod
    def x(cls):
        return cls([ONE], 1)

    @classmethod
    def from_dict(cls, terms):
        terms = dict((e, to_qq(c)) for e, c in terms.items())
        terms = dict((e, c) for e, c in terms.items() if c)
        if not terms:
            return cls()
        low = min(terms)
        return cls.from_rep(dup_from_dict(dict((e - low, c) for e, c in terms.items()), QQ), low)

    # -- inspection

    def is_zero(self):
        return not self.rep

    def degree(self):
        """
        Highest exponent present; None for the zero polynomial.
        """
        if self.is_zero():
            return None
        return self.minExponent + len(self.rep) - 1

    def valuation(self):
        if self.is_zero():
            return None
        return self.minExponent

    def is_polynomial(self):
        return self.is_zero() or self.minExponent >= 0

    def is_constant(self):
        return self.is_zero() or (self.minExponent == 0 and len(self.rep) == 1)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("%s is not a constant" % self)
        return from_qq(self.rep[0]) if self.rep else ZERO

    def coefficient(self, exponent):
        j = exponent - self.minExponent
        if 0 <= j < len(self.rep):
            return from_qq(self.rep[len(self.rep) - 1 - j])
        return ZERO

    def leading_coefficient(self):
        return from_qq(self.rep[0]) if self.rep else ZERO

    def qq_items(self):
        return [(self.minExponent + j, c) for j, c in enumerate(reversed(self.rep)) if c]

    def items(self):
        """
        (exponent, coefficient) pairs for the nonzero terms, ascending.
        """
        return [(e, from_qq(c)) for e, c in self.qq_items()]

    def to_dict(self):
        return dict(self.items())

    def support(self):
        return [e for e, c in self.qq_items()]

    def dense(self):
        """
        The block padded down to x^0; only for ordinary polynomials.
        """
        return dup_lshift(self.rep, self.minExponent, QQ)

    # -- ring operations

    def _aligned(self, other):
        low = min(self.minExponent, other.minExponent)
        return (dup_lshift(self.rep, self.minExponent - low, QQ),
                dup_lshift(other.rep, other.minExponent - low, QQ), low)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        f, g, low = self._aligned(other)
        return LaurentPoly.from_rep(dup_add(f, g, QQ), low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_rep(dup_neg(self.rep, QQ), self.minExponent)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return -other
        f, g, low = self._aligned(other)
        return LaurentPoly.from_rep(dup_sub(f, g, QQ), low)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return LaurentPoly.from_rep(dup_mul(self.rep, other.rep, QQ), self.minExponent + other.minExponent)
        if _as_poly(other) is None:
            return NotImplemented
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor):
        return LaurentPoly.from_rep(dup_mul_ground(self.rep, to_qq(factor), QQ), self.minExponent)

    def shift(self, exponent):
        """
        Multiply by x^exponent.
        """
        if self.is_zero():
            return self
        return LaurentPoly.from_rep(self.rep, self.minExponent + exponent)

    # -- calculus and evaluation

    def derivative(self):
        # (x^e P)' = x^(e-1) (e P + x P')
        if self.is_zero():
            return self
        e = self.minExponent
        body = dup_add(dup_mul_ground(self.rep, QQ(e), QQ), dup_lshift(dup_diff(self.rep, 1, QQ), 1, QQ), QQ)
        return LaurentPoly.from_rep(body, e - 1)

    def nth_derivative(self, order):
        if self.is_polynomial():
            return LaurentPoly.from_rep(dup_diff(self.dense(), order, QQ))
        result = self
        for _ in range(order):
            result = result.derivative()
        return result

    def evaluate(self, x0):
        x0 = to_qq(x0)
        if self.is_zero():
            return ZERO
        if not x0 and self.minExponent < 0:
            raise EvalAtPole("Cannot evaluate %s at x = 0: negative powers present" % self)
        value = dup_eval(self.rep, x0, QQ)
        if self.minExponent > 0:
            value = value * x0 ** self.minExponent
        elif self.minExponent < 0:
            value = value / x0 ** -self.minExponent
        return from_qq(value)

    __call__ = evaluate

    def compose(self, f):
        """
        Return self(f(x)). Only ordinary polynomials may be composed.
        """
        if not self.is_polynomial():
            raise ComposeWithLaurent("Cannot compose %s: negative powers present" % self)
        f = _as_poly(f)
        if f is None:
            raise TypeError("Cannot substitute a non-polynomial into %s" % self)
        if not f.is_polynomial():
            raise ComposeWithLaurent("Cannot substitute %s: negative powers present" % f)
        return LaurentPoly.from_rep(dup_compose(self.dense(), f.dense(), QQ))

    def negate_argument(self):
        """
        Return self(-x).
        """
        body = dup_mirror(self.rep, QQ)
        if self.minExponent % 2:
            body = dup_neg(body, QQ)
        return LaurentPoly.from_rep(body, self.minExponent)

    # -- protocol

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.minExponent == other.minExponent and self.rep == other.rep
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self == other

    def __hash__(self):
        return hash((self.minExponent, tuple(self.rep)))

    def __repr__(self):
        return "LaurentPoly(%r, %d)" % ([str(from_qq(c)) for c in reversed(self.rep)], self.minExponent)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in reversed(self.items()):
            power = "x" if e == 1 else "x^%d" % e
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(power)
            elif c == -1:
                parts.append("-" + power)
            else:
                parts.append("%s*%s" % (c, power))
        return " + ".join(parts).replace("+ -", "- ")


def _as_poly(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return LaurentPoly.constant(value)
    return None


def poly_arith(op, lhs, rhs=None):
    """
    Dispatch one of add, mul, scale or negate on Laurent polynomials.
    """
    if op == "add":
        return lhs + rhs
    elif op == "mul":
        return lhs * rhs
    elif op == "scale":
        return lhs.scale(rhs)
    elif op == "negate":
        return -lhs
    raise ValueError("Unknown polynomial operation '%s'" % op)


def poly_derivative(p):
    return p.derivative()


def poly_eval(p, x0):
    return p.evaluate(x0)


def poly_compose(p, f):
    return p.compose(f)


class TruncatedSeries:
    """
    Power series in t known through t^order. Each coefficient is a LaurentPoly
    in x; scalar series have constant coefficients.

    Binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [_as_poly(c) for c in coeffs]
        if any(c is None for c in coeffs):
            raise TypeError("Series coefficients must be Laurent polynomials or rationals")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise InvalidParameter("Truncation order must be nonnegative, got %r" % (order,))
        coeffs = coeffs[:order + 1]
        coeffs.extend([LaurentPoly()] * (order + 1 - len(coeffs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order):
        return cls([ONE], order)

    def to_ring(self):
        terms = {}
        for s, c in enumerate(self.coeffs):
            for e, value in c.qq_items():
                terms[(e, 0, s) if e >= 0 else (0, -e, s)] = value
        return SERIES_RING.from_dict(terms)

    @classmethod
    def from_ring(cls, element, order):
        buckets = [dict() for _ in range(order + 1)]
        for (e, einv, s), value in element.items():
            if s <= order:
                bucket = buckets[s]
                bucket[e - einv] = bucket.get(e - einv, QQ.zero) + value
        return cls([LaurentPoly.from_dict(b) for b in buckets], order)

    def coefficient(self, s):
        if 0 <= s <= self.order:
            return self.coeffs[s]
        raise IndexError("t^%d lies beyond the truncation order %d" % (s, self.order))

    def scalar_coefficients(self):
        return [c.constant_value() for c in self.coeffs]

    def truncate(self, order):
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[s] + other.coeffs[s] for s in range(order + 1)], order)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if _as_poly(other) is None:
                return NotImplemented
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        return TruncatedSeries.from_ring(rs_mul(self.to_ring(), other.to_ring(), _T, order + 1), order)

    __rmul__ = __mul__

    def reciprocal(self):
        a0 = self.coeffs[0]
        if a0.is_zero() or not a0.is_constant():
            raise NonUnitConstantTerm("Series constant term %s is not a nonzero constant" % a0)
        return TruncatedSeries.from_ring(rs_series_inversion(self.to_ring(), _T, self.order + 1), self.order)

    def negate_variable(self):
        """
        Return the series in -t.
        """
        return TruncatedSeries([-c if s % 2 else c for s, c in enumerate(self.coeffs)], self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return "TruncatedSeries([%s], order=%d)" % (", ".join(str(c) for c in self.coeffs), self.order)


def series_mul(a, b):
    return a * b


def series_reciprocal(a):
    return a.reciprocal()


def exp_xt_series(order):
    """
    e^{xt} through t^order: the coefficient of t^s is x^s/s!.
    """
    if order < 0:
        raise InvalidParameter("Truncation order must be nonnegative, got %r" % (order,))
    return TruncatedSeries([LaurentPoly.monomial(s, ONE / factorial(s)) for s in range(order + 1)], order)
