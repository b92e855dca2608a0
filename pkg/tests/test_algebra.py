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
import sympy
from hypothesis import given, settings, strategies as st

from resolvent import types
from resolvent.algebra import (DIFFERENCE_FORMULAS, AlgebraError, ClosedForm, UnsupportedFamilyError,
                               b2_from_charpoly, charpoly, charpoly_by_deletion, closed_form_errata,
                               cn_cnstar_gap, er_difference, er_exact, family_charpoly, family_charpoly_recomputed,
                               find_difference_formula, path_charpoly, poly_derivative, published_closed_form,
                               quotient_numerator,
                               recompute_quotient, recomputed_closed_form, recurrence_charpoly, root_claims,
                               roots_at_or_above, sturm_real_root_count, verify_difference_formula)
from resolvent.graph import FamilyId, Graph, b2_coefficient, build_family, edge_count, triangle_count
from resolvent.polynomial import IntPolynomial

from tests.strategies import connected_graphs, graphs

x = sympy.Symbol('x')

REALIZED_FAMILIES = [tag for tag in types.PUBLISHED_FAMILIES if tag not in types.UNREALIZABLE_CLOSED_FORMS]


def family(tag, n):
    return build_family(FamilyId(tag, n))


def parse(text):
    return IntPolynomial.parse(text)


@pytest.mark.parametrize('graph, expected', [
    (family(types.FAMILY_XN, 5), 'x^5 - 5*x^3 - 2*x^2 + 2*x'),
    (family(types.FAMILY_XN, 6), 'x^6 - 6*x^4 - 2*x^3 + 3*x^2'),
    (family(types.FAMILY_CN, 4), 'x^4 - 4*x^2'),
    (family(types.FAMILY_CN, 3), 'x^3 - 3*x - 2'),
    (family(types.FAMILY_Z1, 4), 'x^4 - 6*x^2 - 8*x - 3'),
    (Graph.from_edges(2, [(0, 1)]), 'x^2 - 1'),
    (Graph.empty(3), 'x^3'),
])
def test_charpoly_examples(graph, expected):
    assert charpoly(graph) == parse(expected)


@given(graphs(max_order=8))
def test_charpoly_matches_sympy(graph):
    expected = sympy.Matrix(graph.adjacency_matrix()).charpoly(x)
    assert list(reversed(charpoly(graph).coeffs)) == [int(value) for value in expected.all_coeffs()]


@given(graphs(min_order=4, max_order=8))
def test_charpoly_low_coefficients(graph):
    polynomial = charpoly(graph)
    n = graph.n
    assert polynomial.leading == 1
    assert polynomial.coefficient(n - 1) == 0
    assert polynomial.coefficient(n - 2) == -edge_count(graph)
    assert polynomial.coefficient(n - 3) == -2 * triangle_count(graph)
    assert b2_from_charpoly(polynomial) == b2_coefficient(graph)


def test_b2_below_order_four():
    assert b2_from_charpoly(charpoly(family(types.FAMILY_CN, 3))) == 0


@pytest.mark.parametrize('graph, vertex, expected', [
    (family(types.FAMILY_CN, 3), 0, 'x^3 - 3*x - 2'),
    (family(types.FAMILY_XN, 6), 0, 'x^6 - 6*x^4 - 2*x^3 + 3*x^2'),
    (Graph.from_edges(2, [(0, 1)]), 1, 'x^2 - 1'),
    (family(types.FAMILY_Z1, 4), 2, 'x^4 - 6*x^2 - 8*x - 3'),
])
def test_charpoly_by_deletion_examples(graph, vertex, expected):
    assert charpoly_by_deletion(graph, vertex) == parse(expected)


@given(connected_graphs(max_order=7), st.data())
def test_charpoly_by_deletion_matches_faddeev(graph, data):
    vertex = data.draw(st.integers(min_value=0, max_value=graph.n - 1))
    assert charpoly_by_deletion(graph, vertex) == charpoly(graph)


@pytest.mark.parametrize('n', [3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
def test_charpoly_by_deletion_on_enumerated(enumerator, n):
    for c in types.ENUMERATE_CYCLOMATIC:
        if n - 1 + c > n * (n - 1) // 2:
            continue

        for graph in enumerator.enumerate_connected(n, c):
            expected = charpoly(graph)
            assert charpoly_by_deletion(graph, 0) == expected
            assert charpoly_by_deletion(graph, n - 1) == expected


def test_charpoly_by_deletion_rejects_vertex():
    with pytest.raises(AlgebraError):
        charpoly_by_deletion(family(types.FAMILY_CN, 4), 4)


def test_poly_derivative():
    assert poly_derivative(parse('x^5 - 5*x^3 - 2*x^2 + 2*x')) == parse('5*x^4 - 15*x^2 - 4*x + 2')


@pytest.mark.parametrize('graph, expected', [
    (family(types.FAMILY_XN, 5), Fraction(683, 615)),
    (family(types.FAMILY_CN, 5), Fraction(2755, 2523)),
    (Graph.empty(4), Fraction(1)),
    (Graph.empty(1), Fraction(1)),
])
def test_er_exact(graph, expected):
    assert er_exact(graph) == expected


@pytest.mark.parametrize('n', range(2, 9))
def test_er_exact_complete_graph(n):
    complete = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    assert er_exact(complete) == 1 + Fraction(n - 1, n + 1)


def test_er_difference():
    xn, tilde = FamilyId(types.FAMILY_XN, 5), FamilyId(types.FAMILY_XN_TILDE, 5)
    assert er_difference(xn, tilde) == Fraction(437, 30873)
    assert er_difference(xn, xn) == 0

    with pytest.raises(AlgebraError):
        er_difference(xn, FamilyId(types.FAMILY_XN_TILDE, 6))


@pytest.mark.parametrize('tag, n, expected', [
    (types.FAMILY_XN, 5, 'x^5 - 5*x^3 - 2*x^2 + 2*x'),
    (types.FAMILY_XN_TILDE, 6, 'x^6 - 6*x^4 + 4*x^2'),
    (types.FAMILY_YN, 5, 'x^5 - 6*x^3 - 4*x^2 + 2*x'),
    (types.FAMILY_Z1, 6, 'x^6 - 8*x^4 - 8*x^3 + 3*x^2 + 4*x'),
    (types.FAMILY_Z6, 7, 'x^7 - 9*x^5 + 10*x^3 + 2*x'),
])
def test_family_charpoly_published(tag, n, expected):
    assert family_charpoly(FamilyId(tag, n)) == parse(expected)


def test_family_charpoly_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        family_charpoly(FamilyId(types.FAMILY_CN, 6))

    with pytest.raises(UnsupportedFamilyError):
        published_closed_form(types.FAMILY_THETA)


@pytest.mark.parametrize('tag', REALIZED_FAMILIES)
@pytest.mark.parametrize('n', range(6, 13))
def test_published_closed_forms_match_construction(tag, n):
    assert family_charpoly(FamilyId(tag, n)) == charpoly(family(tag, n))


@pytest.mark.slow
@pytest.mark.parametrize('tag', REALIZED_FAMILIES)
def test_published_closed_forms_match_construction_to_forty(tag):
    for n in range(types.FAMILY_MIN_ORDER[tag], 41):
        assert family_charpoly(FamilyId(tag, n)) == charpoly(family(tag, n))


@pytest.mark.parametrize('tag', types.PUBLISHED_FAMILIES)
@pytest.mark.parametrize('n', range(6, 13))
def test_recomputed_closed_forms_match_construction(tag, n):
    fid = FamilyId(tag, n)
    assert family_charpoly_recomputed(fid) == charpoly(build_family(fid))


def test_recomputed_closed_form_of_xn():
    assert recomputed_closed_form(types.FAMILY_XN) == published_closed_form(types.FAMILY_XN)
    assert published_closed_form(types.FAMILY_XN).value_polynomial() == parse('x^4 - x^3 - x - 3')
    assert published_closed_form(types.FAMILY_XN_TILDE).value_polynomial() == parse('x^4 - x^3 + 2*x - 8')


def test_recomputed_closed_form_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        recomputed_closed_form(types.FAMILY_CN)


def test_closed_form_errata():
    errata = closed_form_errata()
    assert [tag for tag, _, _ in errata] == list(types.UNREALIZABLE_CLOSED_FORMS)

    z5 = recomputed_closed_form(types.FAMILY_Z5)
    for n in range(5, 10):
        expected = parse('x^5 - %d*x^3 - 4*x^2 + %d*x' % (n + 2, 4 * n - 18)).shift(n - 5)
        assert z5.expand(n) == expected


def test_closed_form_normalization():
    padded = ClosedForm(6, {6: (0, 1), 4: (-1, 0), 3: (0, -2), 2: (1, -3)})
    assert padded.normalized().exponent == 4
    assert padded == published_closed_form(types.FAMILY_XN)
    assert padded.factor_at(5) == parse('x^6 - 5*x^4 - 2*x^3 + 2*x^2')


def test_closed_form_expand_below_exponent():
    with pytest.raises(AlgebraError):
        published_closed_form(types.FAMILY_XN).expand(2)


@pytest.mark.parametrize('length, expected', [
    (0, '1'),
    (1, 'x'),
    (2, 'x^2 - 1'),
    (4, 'x^4 - 3*x^2 + 1'),
])
def test_path_charpoly(length, expected):
    assert path_charpoly(length) == parse(expected)


@pytest.mark.parametrize('tag', [types.FAMILY_CN, types.FAMILY_CN_STAR])
def test_recurrence_charpoly(tag):
    for n in range(types.FAMILY_MIN_ORDER[tag], 20):
        fid = FamilyId(tag, n)
        assert recurrence_charpoly(fid) == charpoly(build_family(fid))


def test_recurrence_b2_gap():
    for n in range(6, 20):
        cycle = recurrence_charpoly(FamilyId(types.FAMILY_CN, n))
        starred = recurrence_charpoly(FamilyId(types.FAMILY_CN_STAR, n))
        assert b2_from_charpoly(cycle) == n * (n - 3) // 2
        assert b2_from_charpoly(starred) == n * (n - 3) // 2 - 1


def test_recurrence_charpoly_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        recurrence_charpoly(FamilyId(types.FAMILY_XN, 5))


def test_difference_formula_registry():
    assert len(DIFFERENCE_FORMULAS) == 7
    formula = find_difference_formula(types.FAMILY_Z1, types.FAMILY_Z3)
    assert formula.min_order == 6
    assert formula.scaled_by_n

    with pytest.raises(UnsupportedFamilyError):
        find_difference_formula(types.FAMILY_XN, types.FAMILY_YN)


def test_published_difference_at_five():
    formula = find_difference_formula(types.FAMILY_XN, types.FAMILY_XN_TILDE)
    difference, published, match = verify_difference_formula(formula, 5)
    assert difference == published == Fraction(437, 30873)
    assert match

    formula = find_difference_formula(types.FAMILY_Z1, types.FAMILY_Z2)
    assert formula.numerator(5) == 79920
    assert verify_difference_formula(formula, 5)[2]


def test_recompute_quotient_matches_published():
    formula = find_difference_formula(types.FAMILY_XN, types.FAMILY_XN_TILDE)
    assert recompute_quotient(formula, range(5, 21)) == formula.numerator.shift(1)


def test_recompute_quotient_on_short_ranges():
    formula = find_difference_formula(types.FAMILY_XN, types.FAMILY_XN_TILDE)
    assert recompute_quotient(formula, range(5, 7)) == formula.numerator.shift(1)
    assert recompute_quotient(formula, []) == formula.numerator.shift(1)


@pytest.mark.parametrize('tag', [types.FAMILY_Z5, types.FAMILY_Z6])
def test_recompute_quotient_unrealizable_pairs(tag):
    formula = find_difference_formula(types.FAMILY_Z1, tag)
    numerator = quotient_numerator(types.FAMILY_Z1, tag)
    assert recompute_quotient(formula, range(formula.min_order, formula.min_order + 2)) == numerator
    for n in range(formula.min_order, 20):
        family_a, family_b = formula.families(n)
        assert er_difference(family_a, family_b) * formula.denominator(n, recomputed=True) == numerator(n)


@pytest.mark.parametrize('text, lo, hi, expected', [
    ('x^2 - 1', -2, 2, 2),
    ('x^2 - 1', 1, 3, 0),
    ('x^2 - 1', -1, 1, 0),
    ('x^2 - 1', 0, 1, 0),
    ('x^3 - 3*x - 2', None, None, 2),
    ('x^2 + 1', None, None, 0),
    ('x^2 - 2', 1, 2, 1),
    ('x^4 - 3*x^2 + 1', 0, None, 2),
])
def test_sturm_real_root_count(text, lo, hi, expected):
    assert sturm_real_root_count(parse(text), lo, hi) == expected


def test_sturm_rejects_bad_input():
    with pytest.raises(AlgebraError):
        sturm_real_root_count(IntPolynomial())

    with pytest.raises(AlgebraError):
        sturm_real_root_count(parse('x^2 - 1'), 2, 1)


def test_roots_at_or_above():
    assert roots_at_or_above(parse('x^2 - 4'), 2) == 1
    assert roots_at_or_above(parse('x^2 - 4'), 3) == 0
    assert roots_at_or_above(parse('x^3 - 3*x - 2'), -1) == 2


def test_repeated_root_at_endpoint():
    # (x + 1)^2 (x - 2)
    polynomial = parse('x^3 - 3*x - 2')
    assert sturm_real_root_count(polynomial, -1, 3) == 1
    assert sturm_real_root_count(polynomial, -2, 2) == 1
    assert roots_at_or_above(polynomial, 2) == 1


polynomials = st.lists(st.integers(min_value=-9, max_value=9), min_size=2, max_size=6).map(
    IntPolynomial).filter(lambda p: p.degree >= 1)


@settings(max_examples=50, deadline=None)
@given(polynomials, st.fractions(min_value=-6, max_value=6, max_denominator=4),
       st.fractions(min_value=-6, max_value=6, max_denominator=4))
def test_sturm_matches_sympy(polynomial, a, b):
    if a == b:
        return

    lo, hi = min(a, b), max(a, b)
    roots = set(sympy.Poly(list(reversed(polynomial.coeffs)), x).real_roots())
    lo_s, hi_s = sympy.Rational(lo.numerator, lo.denominator), sympy.Rational(hi.numerator, hi.denominator)
    expected = sum(1 for root in roots if bool(lo_s < root) and bool(root < hi_s))
    assert sturm_real_root_count(polynomial, lo, hi) == expected


def test_published_root_claims_hold():
    claims = root_claims()
    assert len(claims) == 17
    for claim in claims:
        assert claim.offending_roots() == 0, claim.name


def test_tricyclic_value_polynomials_at_three():
    values = dict((tag, published_closed_form(tag).value_polynomial()(3)) for tag in types.TRICYCLIC_FAMILIES)
    assert values == {types.FAMILY_Z1: 16, types.FAMILY_Z2: 12, types.FAMILY_Z3: 24,
                      types.FAMILY_Z4: 143, types.FAMILY_Z5: 64, types.FAMILY_Z6: 244}


def test_cycle_gap():
    assert cn_cnstar_gap(5) < 0
    gap = cn_cnstar_gap(100)
    assert abs(100 ** 5 * gap + 4) <= Fraction(1, 10)
    assert abs(200 ** 5 * cn_cnstar_gap(200) + 4) < abs(100 ** 5 * gap + 4)

    with pytest.raises(AlgebraError):
        cn_cnstar_gap(4)
