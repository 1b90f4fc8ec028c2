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

import io, csv, json, logging

from .common import UsageError
from .exactcore import format_rational, parse_rational
from .hyperappell import FamilySpec, HyperParams
from .polyfps import LaurentPoly

_logger = logging.getLogger("export")

FORMAT_JSON = "json"
FORMAT_LATEX = "latex"
FORMAT_CSV = "csv"
FORMAT_PLAIN = "plain"
FORMATS = (FORMAT_JSON, FORMAT_LATEX, FORMAT_CSV, FORMAT_PLAIN)

JSON_SEPARATORS = (",", ":")


def dump_json(data):
    return json.dumps(data, separators=JSON_SEPARATORS)


def dense_coefficients(poly):
    """
    (start, coefficients) listed from min(0, lowest exponent) up to the degree,
    so ordinary polynomials always start at x^0.
    """
    if poly.is_zero():
        return 0, []
    start = min(0, poly.minExponent)
    return start, [poly.coefficient(e) for e in range(start, poly.degree() + 1)]


def poly_document(poly, spec=None, n=None):
    """
    The coeffs schema: family, n, min_exponent and ascending coefficient strings.
    """
    start, coeffs = dense_coefficients(poly)
    return {
        "family": spec.to_dict() if spec is not None else None,
        "n": n,
        "min_exponent": start,
        "coeffs": [format_rational(c) for c in coeffs]
        }


def render_json(poly, spec=None, n=None):
    return dump_json(poly_document(poly, spec, n))


def parse_json(text):
    """
    Inverse of render_json: returns (spec, n, poly); spec and n may be None.
    """
    try:
        data = json.loads(text)
        coeffs = [parse_rational(c) for c in data["coeffs"]]
        poly = LaurentPoly(coeffs, int(data["min_exponent"]))
        family = data.get("family")
        spec = None
        if family is not None:
            params = HyperParams(tuple(parse_rational(a) for a in family.get("a", [])),
                                 tuple(parse_rational(b) for b in family.get("b", [])))
            spec = FamilySpec(params, int(family["k"]), parse_rational(family["m"]))
        n = data.get("n")
    except (ValueError, KeyError, TypeError, AttributeError) as e:
        _logger.debug("Rejected polynomial document: %r", text)
        raise UsageError("Malformed polynomial document: %s" % e)
    return spec, n, poly


def render_plain(poly):
    """
    Ascending "c * x^j" terms.
    """
    if poly.is_zero():
        return "0"
    return " + ".join("%s * x^%d" % (format_rational(c), e) for e, c in poly.items())


def _latex_scalar(value):
    if value.denominator == 1:
        return str(value.numerator)
    return "\\frac{%d}{%d}" % (value.numerator, value.denominator)


def render_latex(poly):
    """
    Descending powers with explicit signs, e.g. "x^{2} - 1".
    """
    if poly.is_zero():
        return "0"
    pieces = []
    for e, c in reversed(poly.items()):
        magnitude = abs(c)
        if e == 0:
            body = _latex_scalar(magnitude)
        else:
            power = "x" if e == 1 else "x^{%d}" % e
            body = power if magnitude == 1 else _latex_scalar(magnitude) + power
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def render_csv(poly):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["exponent", "coefficient"])
    start, coeffs = dense_coefficients(poly)
    for j, c in enumerate(coeffs):
        writer.writerow([start + j, format_rational(c)])
    return buffer.getvalue().rstrip("\n")


def render_poly(poly, outputFormat, spec=None, n=None):
    if outputFormat == FORMAT_JSON:
        return render_json(poly, spec, n)
    elif outputFormat == FORMAT_LATEX:
        return render_latex(poly)
    elif outputFormat == FORMAT_CSV:
        return render_csv(poly)
    elif outputFormat == FORMAT_PLAIN:
        return render_plain(poly)
    raise UsageError("Unknown output format '%s' (expected one of %s)" % (outputFormat, ", ".join(FORMATS)))


def render_scalars(values, outputFormat, header="index"):
    """
    A list of rationals: a JSON array, CSV rows or one value per line.
    """
    strings = [format_rational(v) for v in values]
    if outputFormat == FORMAT_JSON:
        return dump_json(strings)
    elif outputFormat == FORMAT_CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([header, "coefficient"])
        for j, s in enumerate(strings):
            writer.writerow([j, s])
        return buffer.getvalue().rstrip("\n")
    elif outputFormat in (FORMAT_PLAIN, FORMAT_LATEX):
        return "\n".join(strings)
    raise UsageError("Unknown output format '%s' (expected one of %s)" % (outputFormat, ", ".join(FORMATS)))
