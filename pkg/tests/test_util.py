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

import pytest

from resolvent.util import RangeError, format_decimal, format_rational, parse_n_range, parse_options


@pytest.mark.parametrize('value, expected', [
    (Fraction(683, 615), '1.11056910569'),
    (Fraction(2755, 2523), '1.09195402299'),
    (Fraction(1), '1.0'),
    (Fraction(1, 2), '0.5'),
    (Fraction(-1, 8), '-0.125'),
])
def test_format_decimal(value, expected):
    assert format_decimal(value) == expected


def test_format_decimal_rounds_half_even():
    assert format_decimal(Fraction(125, 1000), digits=2) == '0.12'
    assert format_decimal(Fraction(135, 1000), digits=2) == '0.14'


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == '3/2'
    assert format_rational(Fraction(3)) == '3/1'


@pytest.mark.parametrize('text, expected', [
    ('5..10', (5, 10)),
    (' 7 ', (7, 7)),
    ('4..4', (4, 4)),
])
def test_parse_n_range(text, expected):
    assert parse_n_range(text) == expected


@pytest.mark.parametrize('text', ['10..5', 'a..b', '5-10', ''])
def test_parse_n_range_errors(text):
    with pytest.raises(RangeError):
        parse_n_range(text)


def test_parse_options():
    assert parse_options(['kmax=20', ' n = 100 ']) == {'kmax': '20', 'n': '100'}
    assert parse_options(None) == {}

    with pytest.raises(RangeError):
        parse_options(['kmax'])
