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
Exact checks of the identities satisfied by the family.

Every check returns an IdentityReport; a failed identity is a verdict, not an
exception. Identities in two variables are certified on an integer grid one
point wider than the degree in each variable.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from .common import InvalidParameter
from .exactcore import to_scalar, pochhammer, binomial, factorial, format_rational, ONE
from .hyperappell import (FamilySpec, HyperParams, gamma_ratio, gamma_ratios, delta_array, product_delta, pfq_laurent,
                          pfq_polynomial, pfq_terminating, appell_poly, appell_sequence, appell_laurent_form,
                          generating_series, gf_coefficient_poly, apply_diff_operator, appell_binomial_form,
                          composed_poly)
from .polyfps import LaurentPoly

_logger = logging.getLogger("identities")

FAMILY_OVER_MONOMIALS = "family_over_monomials"
MONOMIALS_OVER_FAMILY = "monomials_over_family"
DIRECTIONS = (FAMILY_OVER_MONOMIALS, MONOMIALS_OVER_FAMILY)

REPRESENTATIONS = (
    ("standard basis", appell_poly),
    ("hypergeometric Laurent form", appell_laurent_form),
    ("generating function product", gf_coefficient_poly),
    ("differential operator", apply_diff_operator),
    ("Appell binomial form", appell_binomial_form),
    )


@dataclass(frozen=True)
class IdentityReport:
    """
    Verdict for one instance of an identity. holds is True exactly when the
    two witnesses are structurally equal.
    """
    identityName: str
    inputs: dict
    holds: bool
    lhsWitness: object
    rhsWitness: object
    note: str = ""
    vsOracle: bool = False

    def summary(self):
        verdict = "holds" if self.holds else "FAILS"
        if self.vsOracle:
            verdict += " vs oracle"
        if self.note:
            verdict += "; " + self.note
        return verdict


def _report(name, inputs, lhs, rhs, note="", vsOracle=False):
    holds = lhs == rhs
    if not holds:
        _logger.info("%s does not hold for %s: %s != %s", name, inputs, lhs, rhs)
    return IdentityReport(name, inputs, holds, lhs, rhs, note, vsOracle)


def _inputs(spec, **indices):
    inputs = {"family": spec.to_dict()}
    inputs.update(indices)
    return inputs


def _require_positive(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParameter("This identity needs n >= 1, got %r" % (n,))


def check_appell_derivative(spec, n):
    _require_positive(n)
    lhs = appell_poly(spec, n).derivative()
    rhs = appell_poly(spec, n - 1).scale(n)
    return _report("appell", _inputs(spec, n=n), lhs, rhs)


def check_representations(spec, n):
    """
    All constructors of A_n agree exactly.
    """
    reference = appell_poly(spec, n)
    disagreeing = []
    witness = reference
    for name, constructor in REPRESENTATIONS[1:]:
        candidate = constructor(spec, n)
        if candidate != reference:
            disagreeing.append(name)
            if witness is reference:
                witness = candidate
    note = "disagreeing: " + ", ".join(disagreeing) if disagreeing else ""
    return _report("representations", _inputs(spec, n=n), reference, witness, note)


def check_corollary1(spec, n):
    """
    n x^(n-1) F[Delta(k,-(n-1))] = n x^(n-1) F[Delta(k,-n)]
        - k m gamma_1 Delta_1(k,-n) x^(n-k-1) F[a+1; b+1; Delta(k,-(n-k))]

    with every F taken at m/x^k and expanded as a Laurent polynomial.
    """
    _require_positive(n)
    k, m, params = spec.k, spec.m, spec.params

    previous = delta_array(k, n - 1)
    lhs = pfq_laurent(params, previous.entries, m, k, (n - 1) // k).shift(n - 1).scale(n)

    current = delta_array(k, n)
    leading = pfq_laurent(params, current.entries, m, k, n // k).shift(n - 1).scale(n)

    deltaProduct = product_delta(current)
    note = ""
    if n >= k:
        shifted = delta_array(k, n - k)
        tail = pfq_laurent(params.shifted(), shifted.entries, m, k, (n - k) // k)
    else:
        # Delta(k,-n) contains 0 here, so the correction term vanishes
        tail = LaurentPoly.constant(ONE)
        note = "correction term vanishes (Delta_1 = 0)"
    factor = k * m * gamma_ratio(params, 1) * deltaProduct
    rhs = leading - tail.shift(n - k - 1).scale(factor)
    return _report("corollary1", _inputs(spec, n=n), lhs, rhs, note)


def _value_table(sequence, points):
    """
    point -> [A_0(point), ..., A_n(point)]
    """
    return dict((p, [a.evaluate(p) for a in sequence]) for p in points)


def check_addition(spec, n, gridStart=1):
    """
    A_n(x+y) = sum_i C(n,i) y^(n-i) A_i(x) and its mirror with x and y swapped,
    on x in 0..n, y in gridStart..gridStart+n.
    """
    sequence = appell_sequence(spec, n)
    xs = [Fraction(x) for x in range(n + 1)]
    ys = [Fraction(y) for y in range(gridStart, gridStart + n + 1)]
    values = _value_table(sequence, set(xs) | set(ys))
    weights = [binomial(n, i) for i in range(n + 1)]
    lhsValues, rhsValues, mirrorValues = [], [], []
    for x0 in xs:
        for y0 in ys:
            lhsValues.append(sequence[n].evaluate(x0 + y0))
            rhsValues.append(sum((weights[i] * y0 ** (n - i) * values[x0][i] for i in range(n + 1)), Fraction(0)))
            mirrorValues.append(sum((weights[i] * x0 ** (n - i) * values[y0][i] for i in range(n + 1)), Fraction(0)))
    return _report("addition", _inputs(spec, n=n), tuple(lhsValues + lhsValues),
                   tuple(rhsValues + mirrorValues))


def check_multiplication(spec, n, M):
    """
    A_n(Mx) = sum_i C(n,i) (M-1)^(n-i) x^(n-i) A_i(x), as polynomials in x.

    The note records whether the rescaled sequence keeps the Appell derivative
    property at this n.
    """
    M = to_scalar(M)
    sequence = appell_sequence(spec, n)
    scaledX = LaurentPoly.monomial(1, M)
    lhs = sequence[n].compose(scaledX)
    rhs = LaurentPoly()
    for i in range(n + 1):
        rhs = rhs + LaurentPoly.monomial(n - i, binomial(n, i) * (M - 1) ** (n - i)) * sequence[i]

    if n >= 1:
        keeps = lhs.derivative() == sequence[n - 1].compose(scaledX).scale(n)
        note = "A_n(m,Mx) %s the Appell derivative property" % ("keeps" if keeps else "loses")
    else:
        note = ""
    return _report("multiplication", _inputs(spec, n=n, M=format_rational(M)), lhs, rhs, note)


def check_index_interchange(params, m, k1, k2, n):
    """
    sum_i C(n,i) A_i^(k1)(x) A_(n-i)^(k2)(y) is symmetric under k1 <-> k2,
    checked on the (n+1) x (n+1) grid of integer points.
    """
    spec = FamilySpec(params, k1, to_scalar(m))
    points = [Fraction(p) for p in range(n + 1)]
    first = _value_table(appell_sequence(spec, n), points)
    second = _value_table(appell_sequence(spec.with_k(k2), n), points)
    weights = [binomial(n, i) for i in range(n + 1)]
    lhsValues, rhsValues = [], []
    for x0 in points:
        for y0 in points:
            lhsValues.append(sum((weights[i] * first[x0][i] * second[y0][n - i] for i in range(n + 1)), Fraction(0)))
            rhsValues.append(sum((weights[i] * second[x0][i] * first[y0][n - i] for i in range(n + 1)), Fraction(0)))
    return _report("interchange", _inputs(spec, k2=k2, n=n), tuple(lhsValues), tuple(rhsValues))


def convolution_closed_form(spec, n):
    """
    ((-1)^n m^(n/k) n!/k^n) sum_i gamma^i gamma^(n/k-i) / (i! (n/k-i)!), defined only when k | n.
    """
    k = spec.k
    if n % k:
        return None
    q = n // k
    ratios = gamma_ratios(spec.params, q)
    total = Fraction(0)
    for i in range(q + 1):
        total += (ratios[i] * ratios[q - i]
                  / (factorial(i) * factorial(q - i)))
    return (-1) ** n * spec.m ** q * factorial(n) / Fraction(k) ** n * total


def check_convolution(spec, n):
    """
    sum_i (-1)^i C(n,i) A_i(x) A_(n-i)(x) against n! [t^n] A(t) A(-t).

    The closed form is compared too, but only recorded in the note.
    """
    sequence = appell_sequence(spec, n)
    lhs = LaurentPoly()
    for i in range(n + 1):
        lhs = lhs + (sequence[i] * sequence[n - i]).scale((-1) ** i * binomial(n, i))

    series = generating_series(spec, n)
    oracle = (series * series.negate_variable()).coefficient(n).constant_value() * factorial(n)

    notes = []
    if not lhs.is_constant():
        notes.append("LHS depends on x")
    closedForm = convolution_closed_form(spec, n)
    if closedForm is None:
        notes.append("closed-form RHS undefined (k does not divide n)")
    elif closedForm == oracle:
        notes.append("closed-form RHS agrees")
    else:
        _logger.info("Convolution closed form gives %s, series product gives %s (%s, n=%d)",
                     closedForm, oracle, spec, n)
        notes.append("closed-form RHS mismatch (%s vs %s)" % (format_rational(closedForm), format_rational(oracle)))
    return _report("convolution", _inputs(spec, n=n), lhs, LaurentPoly.constant(oracle), "; ".join(notes),
                   vsOracle=True)


def check_parity(spec, n):
    """
    Even k: A_n(m,-x) = (-1)^n A_n(m,x).
    Odd k:  A_n(m,-x) = (-1)^n A_n(-m,x).
    """
    lhs = appell_poly(spec, n).negate_argument()
    if spec.k % 2 == 0:
        rhs = appell_poly(spec, n).scale((-1) ** n)
        note = ""
    else:
        rhs = appell_poly(spec.with_m(-spec.m), n).scale((-1) ** n)
        note = "odd k: argument negation pairs with m -> -m"
    return _report("parity", _inputs(spec, n=n), lhs, rhs, note)


def connection_coefficients(spec, N, direction):
    """
    alpha_0..alpha_N of the generating function ratio for the connection problem.

    family_over_monomials expands A_n over x^j (the ratio is A(t) itself);
    monomials_over_family expands x^n over A_j (the ratio is 1/A(t)).
    """
    series = generating_series(spec, N)
    if direction == FAMILY_OVER_MONOMIALS:
        return series.scalar_coefficients()
    elif direction == MONOMIALS_OVER_FAMILY:
        return series.reciprocal().scalar_coefficients()
    raise InvalidParameter("Unknown connection direction '%s' (expected one of %s)"
                           % (direction, ", ".join(DIRECTIONS)))


def reconstruct_connection(spec, n, direction):
    """
    Q_n(x) = sum_j n!/j! alpha_(n-j) P_j(x).
    """
    alpha = connection_coefficients(spec, n, direction)
    if direction == FAMILY_OVER_MONOMIALS:
        basis = [LaurentPoly.monomial(j) for j in range(n + 1)]
    else:
        basis = appell_sequence(spec, n)
    result = LaurentPoly()
    for j in range(n + 1):
        weight = factorial(n) / factorial(j) * alpha[n - j]
        if weight != 0:
            result = result + basis[j].scale(weight)
    return result


def check_connection(spec, n, direction=FAMILY_OVER_MONOMIALS):
    lhs = reconstruct_connection(spec, n, direction)
    if direction == FAMILY_OVER_MONOMIALS:
        rhs = appell_poly(spec, n)
    else:
        rhs = LaurentPoly.monomial(n)
    return _report("connection", _inputs(spec, n=n, direction=direction), lhs, rhs)


def check_composed_derivative(spec, n, f):
    """
    d/dx A_n(m, f(x)) = n f'(x) A_(n-1)(m, f(x)).
    """
    _require_positive(n)
    lhs = composed_poly(spec, n, f).derivative()
    rhs = (composed_poly(spec, n - 1, f) * f.derivative()).scale(n)
    return _report("composed", _inputs(spec, n=n, f=str(f)), lhs, rhs)


def check_pfq_derivative(params, extraUpper, maxTerms):
    """
    d/dz F(a; b | z) = (prod a / prod b) F(a+1; b+1 | z), for the pFq truncated
    after maxTerms terms (exact when it terminates earlier).
    """
    extraUpper = [to_scalar(a) for a in extraUpper]
    upper = list(params.upper) + extraUpper
    combined = HyperParams(tuple(upper), params.lower)
    lhs = pfq_polynomial(combined, [], maxTerms).derivative()
    factor = ONE
    for a in upper:
        factor *= a
    for b in params.lower:
        factor /= b
    if maxTerms == 0:
        rhs = LaurentPoly()
    else:
        rhs = pfq_polynomial(combined.shifted(), [], maxTerms - 1).scale(factor)
    inputs = {"a": [format_rational(a) for a in upper], "b": [format_rational(b) for b in params.lower],
              "max_terms": maxTerms}
    return _report("pfq-derivative", inputs, lhs, rhs)


def check_terminating_sum(params, mPrime, z):
    """
    pFq(-m', a; b | z) = sum_j (-1)^j C(m', j) gamma^j z^j.
    """
    z = to_scalar(z)
    lhs = pfq_terminating(params, [-mPrime], z, mPrime)
    rhs = sum(((-1) ** j * binomial(mPrime, j) * gamma_ratio(params, j) * z ** j for j in range(mPrime + 1)),
              Fraction(0))
    inputs = {"a": [format_rational(a) for a in params.upper], "b": [format_rational(b) for b in params.lower],
              "m'": mPrime, "z": format_rational(z)}
    return _report("terminating-sum", inputs, lhs, rhs)


def check_gauss_product(lam, k, n):
    """
    (-lam)^(kn) = k^(kn) prod_j (-(lam-j+1)/k)^(n), j = 1..k.
    """
    lam = to_scalar(lam)
    lhs = pochhammer(-lam, k * n)
    rhs = Fraction(k) ** (k * n)
    for j in range(1, k + 1):
        rhs *= pochhammer(-(lam - j + 1) / k, n)
    return _report("gauss", {"lambda": format_rational(lam), "k": k, "n": n}, lhs, rhs)
