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

import decimal


class RangeError(ValueError):
    """
    A malformed order range error
    """

DECIMAL_CONTEXT = decimal.Context(prec=12, rounding=decimal.ROUND_HALF_EVEN)

def format_decimal(value, digits=12):
    """
    Formats a Fraction with the given significant digits, rounding half
    to even; integral values keep a trailing ".0".
    """

    context = DECIMAL_CONTEXT if digits == 12 else decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    quotient = context.divide(decimal.Decimal(value.numerator), decimal.Decimal(value.denominator))
    text = format(quotient, 'f')
    if '.' not in text:
        text += '.0'

    return text

def format_rational(value):
    return '%d/%d' % (value.numerator, value.denominator)

def parse_n_range(text):
    """
    Parses "A..B" (inclusive) or a single order "A".
    """

    text = text.strip()
    try:
        if '..' in text:
            low, high = text.split('..', 1)
            low, high = int(low), int(high)
        else:
            low = high = int(text)
    except ValueError:
        raise RangeError('Malformed order range %r, expected A..B!' % text)

    if low > high:
        raise RangeError('Order range %r is empty!' % text)

    return low, high

def parse_options(pairs):
    """
    Parses "key=value" pairs into a dictionary.
    """

    options = {}
    for pair in pairs or ():
        if '=' not in pair:
            raise RangeError('Malformed option %r, expected key=value!' % pair)

        key, value = pair.split('=', 1)
        options[key.strip()] = value.strip()

    return options
