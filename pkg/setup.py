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

from setuptools import setup

setup(
      name="appellkit",
      version="0.1.0",
      license="GPL v3",
      description="Exact construction and verification of generalized hypergeometric Appell polynomials",
      long_description="""appellkit builds the generalized hypergeometric Appell polynomials
A_n^(k)(m,x) in exact rational arithmetic, in several equivalent representations, and
checks the identities the family satisfies (Appell derivative, addition, multiplication,
index interchange, convolution, parity, connection coefficients) against independent
formal power series oracles. It includes a command line tool with json, latex and csv output.""",
      python_requires=">=3.8",
      install_requires=["sympy>=1.9"],
      package_dir={"appellkit": "src/lib"},
      packages=["appellkit"],
      scripts=["appellkit"]
      )
