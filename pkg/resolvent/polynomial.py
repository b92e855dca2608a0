# Copyright (c) 2026, Resolvent Lab contributors.
#
# This file is part of Resolvent Lab.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
# You should have received a copy of the MIT License
# along with Resolvent Lab. If not, see <https://opensource.org/licenses/MIT>.

from fractions import Fraction
from tokenize import TokenError

import sympy

from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import ExactQuotientFailed


class PolynomialError(RuntimeError):
    """
    A polynomial specific runtime error
    """

x = sympy.Symbol('x')

PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor,)

def to_sympy_number(value):
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)

    return sympy.Integer(value)

def from_sympy_number(value):
    value = sympy.Rational(value)
    if value.q == 1:
        return int(value.p)

    return Fraction(int(value.p), int(value.q))

class IntPolynomial(object):
    """
    A univariate polynomial over the integers backed by sympy.Poly in x,
    coeffs lists the coefficient of x^i at index i.
    """

    __slots__ = ('_poly', '_coeffs')

    def __init__(self, coeffs=()):
        if isinstance(coeffs, sympy.Poly):
            poly = coeffs
        else:
            values = [int(value) for value in coeffs]
            poly = sympy.Poly.from_list(list(reversed(values)) or [0], x, domain=sympy.ZZ)

        if not poly.domain.is_ZZ:
            if not all(sympy.Rational(value).q == 1 for value in poly.all_coeffs()):
                raise PolynomialError('%s has non-integer coefficients!' % poly.as_expr())

            poly = poly.set_domain(sympy.ZZ)

        self._poly = poly
        if poly.is_zero:
            self._coeffs = ()
        else:
            self._coeffs = tuple(int(value) for value in reversed(poly.all_coeffs()))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        if degree < 0:
            raise PolynomialError('Monomial degree must be nonnegative, got %d!' % degree)

        return cls(sympy.Poly(coefficient * x ** degree, x, domain=sympy.ZZ))

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def parse(cls, text):
        """
        Parses the canonical descending text form, e.g. "x^5 - 5*x^3 + 2*x - 1".
        """

        if not text.strip():
            raise PolynomialError('Cannot parse an empty polynomial!')

        try:
            expression = parse_expr(text, local_dict={'x': x}, transformations=PARSE_TRANSFORMATIONS)
        except (AttributeError, NameError, SyntaxError, TokenError, TypeError, ValueError) as e:
            raise PolynomialError('Malformed polynomial %r: %s' % (text, e))

        expression = sympy.sympify(expression)
        if expression.free_symbols - {x} or not expression.is_polynomial(x):
            raise PolynomialError('%r is not a polynomial in x!' % text)

        try:
            return cls(sympy.Poly(expression, x))
        except sympy.PolynomialError as e:
            raise PolynomialError('Malformed polynomial %r: %s' % (text, e))

    @property
    def poly(self):
        return self._poly

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def leading(self):
        if not self._coeffs:
            return 0

        return self._coeffs[-1]

    def is_zero(self):
        return not self._coeffs

    def coefficient(self, power):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]

        return 0

    def __call__(self, value):
        if not self._coeffs:
            return 0

        return from_sympy_number(self._poly.eval(to_sympy_number(value)))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)

        if not isinstance(other, IntPolynomial):
            return NotImplemented

        return IntPolynomial(self._poly + other._poly)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-self._poly)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)

        if not isinstance(other, IntPolynomial):
            return NotImplemented

        return IntPolynomial(self._poly - other._poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(self._poly.mul_ground(other))

        if not isinstance(other, IntPolynomial):
            return NotImplemented

        return IntPolynomial(self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return IntPolynomial(self._poly ** exponent)

    def shift(self, places):
        """
        Multiplies by x^places, a negative shift divides by x^-places and
        requires the dropped coefficients to vanish.
        """

        if places >= 0:
            return self * IntPolynomial.monomial(places)

        return self.divide_exact(IntPolynomial.monomial(-places))

    def divide_exact(self, divisor):
        """
        Exact division in Z[x], the remainder must be zero.
        """

        if divisor.is_zero():
            raise PolynomialError('Division by the zero polynomial!')

        try:
            return IntPolynomial(self._poly.exquo(divisor._poly, auto=False))
        except ExactQuotientFailed:
            raise PolynomialError('%s is not divisible by %s!' % (self, divisor))

    def derivative(self):
        return IntPolynomial(self._poly.diff(x))

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)

        if not isinstance(other, IntPolynomial):
            return NotImplemented

        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return '0'

        parts = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            value = self._coeffs[power]
            if not value:
                continue

            magnitude = abs(value)
            if power == 0:
                term = '%d' % magnitude
            else:
                variable = 'x' if power == 1 else 'x^%d' % power
                term = variable if magnitude == 1 else '%d*%s' % (magnitude, variable)

            if not parts:
                parts.append(term if value > 0 else '-' + term)
            else:
                parts.append(('+ ' if value > 0 else '- ') + term)

        return ' '.join(parts)

    def __repr__(self):
        return 'IntPolynomial(%r)' % str(self)
