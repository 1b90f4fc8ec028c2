import unittest
from fractions import Fraction

from lib.common import InvalidParameter, ComposeWithLaurent
from lib.polyfps import LaurentPoly, TruncatedSeries
from lib.hyperappell import *

UPPERS = [(), (Fraction(1, 2),), (2, 7)]
LOWERS = [(), (Fraction(5, 3),), (1, 2)]
ORDERS = [1, 2, 3, 4]
MS = [-2, Fraction(-1, 2), 1, 3]


def family_lattice(ms=MS):
    for upper in UPPERS:
        for lower in LOWERS:
            for k in ORDERS:
                for m in ms:
                    yield FamilySpec.create(upper, lower, k, m)


HERMITE = FamilySpec.create((), (), 2, -2)


class ParameterTest(unittest.TestCase):

    def testLowerParameterPoles(self):
        self.assertRaises(InvalidParameter, HyperParams, (), (-1,))
        self.assertRaises(InvalidParameter, HyperParams, (), (0,))
        self.assertRaises(InvalidParameter, FamilySpec.create, (1,), (Fraction(1, 2), -3), 2, 1)

    def testUpperParametersMayBeAnything(self):
        params = HyperParams((-2, 0), (Fraction(-1, 2),))
        self.assertEqual(params.upper, (Fraction(-2), Fraction(0)))

    def testOrderMustBePositive(self):
        self.assertRaises(InvalidParameter, FamilySpec.create, (), (), 0, 1)
        self.assertRaises(InvalidParameter, FamilySpec.create, (), (), True, 1)

    def testNegativeIndex(self):
        self.assertRaises(InvalidParameter, appell_poly, HERMITE, -1)

    def testToDict(self):
        spec = FamilySpec.create((Fraction(1, 2),), (3,), 2, Fraction(-4, 6))
        self.assertEqual(spec.to_dict(), {"a": ["1/2"], "b": ["3"], "k": 2, "m": "-2/3"})
        self.assertEqual(spec.with_m(1).m, 1)
        self.assertEqual(spec.with_k(5).k, 5)

    def testShifted(self):
        params = HyperParams((Fraction(1, 2),), (3,)).shifted()
        self.assertEqual(params, HyperParams((Fraction(3, 2),), (4,)))


class GammaRatioTest(unittest.TestCase):

    def testExamples(self):
        self.assertEqual(gamma_ratio(HyperParams((1,), (2,)), 3), Fraction(1, 4))
        self.assertEqual(HyperParams().gamma_ratio(5), 1)
        self.assertEqual(gamma_ratio(HyperParams((-1,), ()), 2), 0)

    def testIsNotAPower(self):
        params = HyperParams((2,), ())
        self.assertEqual(gamma_ratio(params, 2), 6)
        self.assertNotEqual(gamma_ratio(params, 2), gamma_ratio(params, 1) ** 2)

    def testRunningProduct(self):
        for upper, lower in zip(UPPERS, LOWERS):
            params = HyperParams(upper, lower)
            self.assertEqual(gamma_ratios(params, 12), [gamma_ratio(params, i) for i in range(13)])
        self.assertEqual(gamma_ratios(HyperParams((-1,), ()), 3), [1, -1, 0, 0])
        self.assertEqual(gamma_ratios(HERMITE.params, 0), [1])


class DeltaArrayTest(unittest.TestCase):

    def testEntries(self):
        self.assertEqual(delta_array(2, 3).entries, (Fraction(-3, 2), Fraction(-1)))
        self.assertEqual(delta_array(1, 4).entries, (Fraction(-4),))
        self.assertEqual(delta_array(2, 0).entries, (Fraction(0), Fraction(1, 2)))

    def testProduct(self):
        self.assertEqual(product_delta(delta_array(2, 2)), Fraction(1, 2))
        self.assertEqual(product_delta(delta_array(2, 0)), 0)
        self.assertEqual(product_delta(delta_array(3, 3)), Fraction(-2, 9))

    def testVanishesBelowOrder(self):
        for k in range(1, 6):
            for n in range(k):
                self.assertEqual(product_delta(delta_array(k, n)), 0)


class PfqTest(unittest.TestCase):

    def testZeroUpperParameterTruncates(self):
        self.assertEqual(pfq_terminating(HyperParams(), [0], 5, 3), 1)

    def testTerminatingSum(self):
        params = HyperParams((-2,), (1,))
        self.assertEqual(pfq_terminating(params, [], 1, 2), Fraction(-1, 2))
        self.assertEqual(pfq_terminating(params, [], 1, 10), Fraction(-1, 2))

    def testPolynomial(self):
        self.assertEqual(pfq_polynomial(HyperParams(), [-1], 5), LaurentPoly([1, -1]))
        self.assertEqual(pfq_polynomial(HyperParams(), [], 3),
                         LaurentPoly([1, 1, Fraction(1, 2), Fraction(1, 6)]))

    def testLaurentExpansion(self):
        entries = delta_array(2, 2).entries
        self.assertEqual(pfq_laurent(HyperParams(), entries, -2, 2, 1), LaurentPoly([-1, 0, 1], -2))

    def testAgreesWithPointEvaluation(self):
        params = HyperParams((Fraction(1, 2), 3), (Fraction(5, 3),))
        extra = delta_array(3, 7).entries
        laurent = pfq_laurent(params, extra, Fraction(-3, 4), 3, 2)
        for x0 in (Fraction(1, 2), 2, -5):
            z = Fraction(-3, 4) / Fraction(x0) ** 3
            self.assertEqual(laurent(x0), pfq_terminating(params, extra, z, 2))


class AppellPolyTest(unittest.TestCase):

    def testHermite(self):
        self.assertEqual(appell_poly(HERMITE, 3), LaurentPoly([0, -3, 0, 1]))
        self.assertEqual(appell_poly(HERMITE, 4), LaurentPoly([3, 0, -6, 0, 1]))

    def testGouldHopper(self):
        self.assertEqual(appell_poly(FamilySpec.create((), (), 3, -27), 3), LaurentPoly([6, 0, 0, 1]))

    def testBelowOrderIsMonomial(self):
        self.assertEqual(appell_poly(FamilySpec.create((), (), 3, 5), 2), LaurentPoly.monomial(2))
        for spec in family_lattice():
            for n in range(spec.k):
                self.assertEqual(appell_poly(spec, n), LaurentPoly.monomial(n))

    def testMonicWithStrideSupport(self):
        for spec in family_lattice():
            for n in range(16):
                poly = appell_poly(spec, n)
                self.assertEqual(poly.degree(), n)
                self.assertEqual(poly.leading_coefficient(), 1)
                for e in poly.support():
                    self.assertTrue(e >= 0 and (n - e) % spec.k == 0, "%s n=%d" % (spec, n))

    def testZeroMIsMonomial(self):
        spec = FamilySpec.create((2,), (3,), 2, 0)
        self.assertEqual(appell_poly(spec, 5), LaurentPoly.monomial(5))

    def testNonpositiveUpperTruncates(self):
        spec = FamilySpec.create((-1,), (), 1, 1)
        self.assertEqual(appell_poly(spec, 6), LaurentPoly([6, 1], 5))

    def testSequence(self):
        sequence = appell_sequence(HERMITE, 4)
        self.assertEqual(len(sequence), 5)
        self.assertEqual(sequence[2], LaurentPoly([-1, 0, 1]))

    def testLaurentForm(self):
        self.assertEqual(appell_laurent_form(HERMITE, 2), LaurentPoly([-1, 0, 1]))
        self.assertEqual(appell_laurent_form(HERMITE, 0), LaurentPoly.constant(1))
        self.assertEqual(appell_laurent_form(FamilySpec.create((), (), 2, 0), 4), LaurentPoly.monomial(4))


class RepresentationTest(unittest.TestCase):

    def testGeneratingSeries(self):
        self.assertEqual(generating_series(HERMITE, 4),
                         TruncatedSeries([1, 0, Fraction(-1, 2), 0, Fraction(1, 8)]))
        self.assertEqual(generating_series(FamilySpec.create((), (), 2, 0), 3), TruncatedSeries.one(3))
        self.assertEqual(generating_series(FamilySpec.create((), (), 1, 1), 3),
                         TruncatedSeries([1, -1, Fraction(1, 2), Fraction(-1, 6)]))

    def testGeneratingSeriesProducts(self):
        series = generating_series(HERMITE, 4)
        self.assertEqual((series * series.negate_variable()).truncate(2), TruncatedSeries([1, 0, -1]))
        self.assertEqual(series.reciprocal(), TruncatedSeries([1, 0, Fraction(1, 2), 0, Fraction(1, 8)]))

    def testGeneratingFunctionCoefficient(self):
        spec = FamilySpec.create((1,), (2,), 2, 4)
        self.assertEqual(gf_coefficient_poly(spec, 2), LaurentPoly([1, 0, 1]))

    def testDiffOperator(self):
        self.assertEqual(apply_diff_operator(HERMITE, 3), LaurentPoly([0, -3, 0, 1]))

    def testBinomialForm(self):
        self.assertEqual(appell_binomial_form(HERMITE, 4), LaurentPoly([3, 0, -6, 0, 1]))

    def testAllRepresentationsAgree(self):
        for spec in family_lattice():
            for n in range(31):
                canonical = appell_poly(spec, n)
                self.assertEqual(appell_laurent_form(spec, n), canonical, "%s n=%d" % (spec, n))
                self.assertEqual(gf_coefficient_poly(spec, n), canonical, "%s n=%d" % (spec, n))
                self.assertEqual(apply_diff_operator(spec, n), canonical, "%s n=%d" % (spec, n))
                self.assertEqual(appell_binomial_form(spec, n), canonical, "%s n=%d" % (spec, n))


class ComposedPolyTest(unittest.TestCase):

    def testExamples(self):
        x = LaurentPoly.x()
        self.assertEqual(composed_poly(HERMITE, 2, x), LaurentPoly([-1, 0, 1]))
        self.assertEqual(composed_poly(HERMITE, 2, x + 1), LaurentPoly([0, 2, 1]))
        self.assertEqual(composed_poly(HERMITE, 2, x.scale(2)), LaurentPoly([-1, 0, 4]))

    def testRejectsBadInner(self):
        self.assertRaises(ComposeWithLaurent, composed_poly, HERMITE, 2, LaurentPoly([1, 1], -1))
        self.assertRaises(InvalidParameter, composed_poly, HERMITE, 2, LaurentPoly())
