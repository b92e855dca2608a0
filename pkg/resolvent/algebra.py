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

import sympy

from resolvent import types
from resolvent.graph import FamilyError, FamilyId, build_family, family_core, iter_bits
from resolvent.notifier import notify
from resolvent.polynomial import IntPolynomial, PolynomialError, to_sympy_number, x

algebra_notify = notify.new_category('algebra')


class AlgebraError(RuntimeError):
    """
    An exact algebra specific runtime error
    """

class UnsupportedFamilyError(AlgebraError):
    """
    A family without a published closed form was requested
    """

X = IntPolynomial.monomial(1)
N = sympy.Symbol('n')

def charpoly(graph):
    """
    Computes det(xI - A) with the Faddeev-LeVerrier recursion
    M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k, all in integers.
    A M is formed from neighbor row sums since A is a 0/1 matrix.
    """

    n = graph.n
    neighbors = [graph.neighbors(v) for v in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    previous = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        constant = coeffs[n - k + 1]
        current = []
        for i in range(n):
            row = [0] * n
            for u in neighbors[i]:
                source = previous[u]
                for j in range(n):
                    row[j] += source[j]

            row[i] += constant
            current.append(row)

        trace = 0
        for i in range(n):
            for u in neighbors[i]:
                trace += current[u][i]

        value, remainder = divmod(-trace, k)
        if remainder:
            raise AlgebraError('Faddeev-LeVerrier trace %d is not divisible by %d!' % (trace, k))

        coeffs[n - k] = value
        previous = current

    return IntPolynomial(coeffs)

def poly_derivative(polynomial):
    return polynomial.derivative()

def cycles_through(rows, mask, vertex):
    """
    Yields the vertex masks of the simple cycles through vertex inside the
    vertex set mask, each cycle once.
    """

    start_neighbors = rows[vertex] & mask
    for first in iter_bits(start_neighbors):
        # walk vertex -> first -> ... -> last -> vertex with first < last
        stack = [(first, (1 << vertex) | (1 << first))]
        while stack:
            current, visited = stack.pop()
            for following in iter_bits(rows[current] & mask & ~visited):
                if following > first and start_neighbors >> following & 1:
                    yield visited | (1 << following)

                stack.append((following, visited | (1 << following)))

def charpoly_by_deletion(graph, vertex):
    """
    Expands phi(G) = x phi(G - v) - sum_{vw in E} phi(G - v - w)
    - 2 sum_{Z through v} phi(G - V(Z)), recursing on induced subgraphs;
    the empty graph contributes 1.
    """

    if not 0 <= vertex < graph.n:
        raise AlgebraError('Vertex %d is outside the vertex range 0..%d!' % (vertex, graph.n - 1))

    rows = graph.rows
    memo = {0: IntPolynomial.constant(1)}

    def expand(mask, pivot):
        if pivot is None:
            if mask in memo:
                return memo[mask]

            pivot = (mask & -mask).bit_length() - 1

        rest = mask & ~(1 << pivot)
        result = X * expand(rest, None)
        for neighbor in iter_bits(rows[pivot] & rest):
            result = result - expand(rest & ~(1 << neighbor), None)

        for cycle in cycles_through(rows, mask, pivot):
            result = result - expand(mask & ~cycle, None) * 2

        if (mask & -mask).bit_length() - 1 == pivot:
            memo[mask] = result

        return result

    return expand((1 << graph.n) - 1, vertex)

def b2_from_charpoly(polynomial):
    """
    Returns the coefficient of x^(n-4), zero below n = 4.
    """

    return polynomial.coefficient(polynomial.degree - 4) if polynomial.degree >= 4 else 0

def er_from_charpoly(polynomial, n):
    return Fraction(polynomial.derivative()(n), polynomial(n))

def er_exact(graph):
    """
    Returns ER(G) = phi'(G, n) / phi(G, n) as a normalized Fraction.
    """

    return er_from_charpoly(charpoly(graph), graph.n)

class ClosedForm(object):
    """
    A family polynomial phi = x^(n - exponent) * f(x), where each coefficient
    of f is linear in n; terms maps power -> (a, b) for a*n + b.
    """

    def __init__(self, exponent, terms):
        self._exponent = exponent
        self._terms = dict((power, value) for power, value in terms.items() if value != (0, 0))

    @property
    def exponent(self):
        return self._exponent

    @property
    def terms(self):
        return dict(self._terms)

    def normalized(self):
        """
        Divides out x while the constant term of f vanishes for every n.
        """

        exponent = self._exponent
        terms = dict(self._terms)
        while terms and 0 not in terms:
            terms = dict((power - 1, value) for power, value in terms.items())
            exponent -= 1

        return ClosedForm(exponent, terms)

    def factor_at(self, n):
        """
        Returns f(x) with n substituted.
        """

        degree = max(self._terms) if self._terms else 0
        coeffs = [0] * (degree + 1)
        for power, (a, b) in self._terms.items():
            coeffs[power] = a * n + b

        return IntPolynomial(coeffs)

    def expand(self, n):
        try:
            return self.factor_at(n).shift(n - self._exponent)
        except PolynomialError:
            raise AlgebraError('Closed form is not a polynomial at n=%d!' % n)

    def factor_expr(self):
        """
        Returns f(x) with n kept symbolic.
        """

        return sympy.Add(*[(a * N + b) * x ** power for power, (a, b) in self._terms.items()])

    def value_expr(self):
        return self.factor_expr().subs(x, N)

    def slope_expr(self):
        """
        Returns f'(x) at x = n, the derivative taken with n fixed.
        """

        return sympy.diff(self.factor_expr(), x).subs(x, N)

    def value_polynomial(self):
        """
        Returns F(x) = f(x) with n = x, the factor evaluated along the diagonal.
        """

        return IntPolynomial(sympy.Poly(self.value_expr().subs(N, x), x))

    def __eq__(self, other):
        if not isinstance(other, ClosedForm):
            return NotImplemented

        left, right = self.normalized(), other.normalized()
        return left._exponent == right._exponent and left._terms == right._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __str__(self):
        parts = []
        for power in sorted(self._terms, reverse=True):
            a, b = self._terms[power]
            coefficient = ' + '.join(part for part in (
                '%d*n' % a if a else '', '%d' % b if b else '') if part).replace('+ -', '- ')
            parts.append('(%s)*x^%d' % (coefficient, power))

        return 'x^(n-%d) * [%s]' % (self._exponent, ' + '.join(parts))

    def __repr__(self):
        return 'ClosedForm(%r, %r)' % (self._exponent, self._terms)

PUBLISHED_CLOSED_FORMS = {
    types.FAMILY_XN: ClosedForm(4, {4: (0, 1), 2: (-1, 0), 1: (0, -2), 0: (1, -3)}),
    types.FAMILY_XN_TILDE: ClosedForm(4, {4: (0, 1), 2: (-1, 0), 0: (2, -8)}),
    types.FAMILY_YN: ClosedForm(4, {4: (0, 1), 2: (-1, -1), 1: (0, -4), 0: (2, -8)}),
    types.FAMILY_YN_TILDE: ClosedForm(4, {4: (0, 1), 2: (-1, -1), 0: (3, -15)}),
    types.FAMILY_Z1: ClosedForm(5, {5: (0, 1), 3: (-1, -2), 2: (0, -8), 1: (3, -15), 0: (2, -8)}),
    types.FAMILY_Z2: ClosedForm(4, {4: (0, 1), 2: (-1, -2), 1: (0, -6), 0: (3, -15)}),
    types.FAMILY_Z3: ClosedForm(4, {4: (0, 1), 2: (-1, -2), 0: (4, -24)}),
    types.FAMILY_Z4: ClosedForm(6, {6: (0, 1), 4: (-1, -2), 3: (0, -6), 2: (3, -12), 1: (0, 2), 0: (-1, 5)}),
    types.FAMILY_Z5: ClosedForm(5, {5: (0, 1), 3: (-1, -2), 2: (0, -4), 1: (4, -16), 0: (0, 4)}),
    types.FAMILY_Z6: ClosedForm(6, {6: (0, 1), 4: (-1, -2), 2: (5, -25), 0: (-2, 16)}),
}

def published_closed_form(tag):
    if tag not in PUBLISHED_CLOSED_FORMS:
        raise UnsupportedFamilyError('Family %s has no published closed form, use charpoly(build_family(...)); '
                                     'closed forms exist for %s!' % (tag, ', '.join(types.PUBLISHED_FAMILIES)))

    return PUBLISHED_CLOSED_FORMS[tag]

def family_charpoly(family_id):
    """
    Returns the published closed form expanded at the family order,
    including the x^(n - k) prefactor.
    """

    return published_closed_form(family_id.tag).expand(family_id.order)

def recomputed_closed_form(tag):
    """
    Derives the closed form from the family core Q with pendants on h:
    phi(Q + j pendants) = x^j phi(Q) - j x^(j - 1) phi(Q - h), j = n - |Q|.
    """

    try:
        core, hub = family_core(tag)
    except FamilyError:
        raise UnsupportedFamilyError('Family %s is not built by attaching pendants!' % tag)

    k = core.n
    whole = charpoly(core).shift(1)
    if k > 1:
        remainder = charpoly(core.delete_vertices([hub]))
    else:
        remainder = IntPolynomial.constant(1)

    terms = {}
    for power, value in enumerate(whole.coeffs):
        terms[power] = (0, value)

    for power, value in enumerate(remainder.coeffs):
        a, b = terms.get(power, (0, 0))
        terms[power] = (a - value, b + k * value)

    return ClosedForm(k + 1, terms).normalized()

def path_charpoly(length):
    if length < 0:
        raise AlgebraError('Path length must be nonnegative, got %d!' % length)

    previous, current = IntPolynomial.constant(1), X
    if length == 0:
        return previous

    for _ in range(length - 1):
        previous, current = current, X * current - previous

    return current

def recurrence_charpoly(family_id):
    """
    Cycle polynomials through the path recurrence:
    phi(C_n) = phi(P_n) - phi(P_{n-2}) - 2, phi(C_n*) = x phi(C_{n-1}) - phi(P_{n-2}).
    """

    n = family_id.order
    if family_id.tag == types.FAMILY_CN:
        return path_charpoly(n) - path_charpoly(n - 2) - 2

    if family_id.tag == types.FAMILY_CN_STAR:
        cycle = path_charpoly(n - 1) - path_charpoly(n - 3) - 2
        return X * cycle - path_charpoly(n - 2)

    raise UnsupportedFamilyError('No recurrence for family %s, only %s and %s!' % (
        family_id.tag, types.FAMILY_CN, types.FAMILY_CN_STAR))

def family_charpoly_recomputed(family_id):
    """
    The characteristic polynomial of a family member without forming
    its adjacency matrix.
    """

    if family_id.tag in (types.FAMILY_CN, types.FAMILY_CN_STAR):
        return recurrence_charpoly(family_id)

    if family_id.tag == types.FAMILY_THETA:
        return charpoly(build_family(family_id))

    return recomputed_closed_form(family_id.tag).expand(family_id.order)

def closed_form_errata():
    """
    Returns (tag, published, recomputed) for every published closed form
    that disagrees with the family construction.
    """

    errata = []
    for tag in types.PUBLISHED_FAMILIES:
        published = published_closed_form(tag)
        recomputed = recomputed_closed_form(tag)
        if published != recomputed:
            errata.append((tag, published, recomputed))

    return errata

def er_difference(family_a, family_b):
    if family_a.order != family_b.order:
        raise AlgebraError('Cannot compare %s with %s, orders differ!' % (family_a, family_b))

    return er_exact(build_family(family_a)) - er_exact(build_family(family_b))

class DifferenceFormula(object):
    """
    A published rational formula for ER(A_n) - ER(B_n): the numerator is a
    polynomial in n and the denominator is the product of the two closed
    form factors at x = n, times n when scaled_by_n is set.
    """

    def __init__(self, tag_a, tag_b, numerator, scaled_by_n, paper_ref):
        self.tag_a = tag_a
        self.tag_b = tag_b
        self.numerator = numerator
        self.scaled_by_n = scaled_by_n
        self.paper_ref = paper_ref

    @property
    def pair(self):
        return (self.tag_a, self.tag_b)

    @property
    def min_order(self):
        return max(types.FAMILY_MIN_ORDER[self.tag_a], types.FAMILY_MIN_ORDER[self.tag_b], 5)

    def denominator(self, n, recomputed=False):
        closed_form = recomputed_closed_form if recomputed else published_closed_form
        value = closed_form(self.tag_a).value_polynomial()(n) * closed_form(self.tag_b).value_polynomial()(n)
        if self.scaled_by_n or recomputed:
            value *= n

        return value

    def value(self, n):
        denominator = self.denominator(n)
        if not denominator:
            raise AlgebraError('Published denominator of %s - %s vanishes at n=%d!' % (
                self.tag_a, self.tag_b, n))

        return Fraction(self.numerator(n), denominator)

    def families(self, n):
        return FamilyId(self.tag_a, n), FamilyId(self.tag_b, n)

    def __repr__(self):
        return 'DifferenceFormula(%s, %s)' % self.pair

DIFFERENCE_FORMULAS = (
    DifferenceFormula(types.FAMILY_XN, types.FAMILY_XN_TILDE,
                      IntPolynomial([16, -4, 10, -24, 10]), False,
                      'Theorem 2.3 proof: (10n^4-24n^3+10n^2-4n+16)/((n^4-n^3-n-3)(n^4-n^3+2n-8))'),
    DifferenceFormula(types.FAMILY_YN, types.FAMILY_YN_TILDE,
                      IntPolynomial([60, 2, 8, -34, 16]), False,
                      'Theorem 3.2 proof: (16n^4-34n^3+8n^2+2n+60)/((n^4-n^3-n^2-2n-8)(n^4-n^3-n^2+3n-15))'),
    DifferenceFormula(types.FAMILY_Z1, types.FAMILY_Z2,
                      IntPolynomial([-120, -42, 0, -18, 42, -12, 6]), True,
                      'Theorem 4.2 proof: (6n^6-12n^5+42n^4-18n^3-42n-120)/(n f_1(n) f_2(n))'),
    DifferenceFormula(types.FAMILY_Z1, types.FAMILY_Z3,
                      IntPolynomial([-192, 80, 136, -8, 44, -56, 28]), True,
                      'Theorem 4.2 proof: (28n^6-56n^5+44n^4-8n^3+136n^2+80n-192)/(n f_1(n) f_3(n))'),
    DifferenceFormula(types.FAMILY_Z1, types.FAMILY_Z4,
                      IntPolynomial([-40, -132, -188, -96, -48, -2, 40, 0, 6]), True,
                      'Theorem 4.2 proof: (6n^8+40n^6-2n^5-48n^4-96n^3-188n^2-132n-40)/(n f_1(n) f_4(n))'),
    DifferenceFormula(types.FAMILY_Z1, types.FAMILY_Z5,
                      IntPolynomial([0, -188, -52, 4, -40, 56, -20, 16]), True,
                      'Theorem 4.2 proof: (16n^7-20n^6+56n^5-40n^4+4n^3-52n^2-188n)/(n f_1(n) f_5(n))'),
    DifferenceFormula(types.FAMILY_Z1, types.FAMILY_Z6,
                      IntPolynomial([-128, -432, -432, -2, 94, 92, 30, -62, 32]), True,
                      'Theorem 4.2 proof: (32n^8-62n^7+30n^6+92n^5+94n^4-2n^3-432n^2-432n-128)/(n f_1(n) f_6(n))'),
)

def find_difference_formula(tag_a, tag_b):
    for formula in DIFFERENCE_FORMULAS:
        if formula.pair == (tag_a, tag_b):
            return formula

    raise UnsupportedFamilyError('No published difference formula for (%s, %s), documented pairs: %s!' % (
        tag_a, tag_b, ', '.join('(%s, %s)' % formula.pair for formula in DIFFERENCE_FORMULAS)))

def verify_difference_formula(formula, n):
    """
    Returns (difference, published value, exact match) at order n.
    """

    family_a, family_b = formula.families(n)
    difference = er_difference(family_a, family_b)
    published = formula.value(n)
    return difference, published, difference == published

def quotient_numerator(tag_a, tag_b):
    """
    Returns N(n) = n F_A(n) F_B(n) (ER(A_n) - ER(B_n)) from the recomputed
    closed forms, using phi'/phi = (n - e)/x + f'/f at x = n.
    """

    form_a, form_b = recomputed_closed_form(tag_a), recomputed_closed_form(tag_b)
    value_a, value_b = form_a.value_expr(), form_b.value_expr()
    slope_a, slope_b = form_a.slope_expr(), form_b.slope_expr()
    numerator = ((form_b.exponent - form_a.exponent) * value_a * value_b +
                 N * (slope_a * value_b - slope_b * value_a))

    return IntPolynomial(sympy.Poly(numerator.subs(N, x), x))

def recompute_quotient(formula, orders):
    """
    Derives the numerator over n F_A(n) F_B(n) symbolically and checks it
    against the exact ER difference of the built graphs at every order.
    """

    numerator = quotient_numerator(formula.tag_a, formula.tag_b)
    for n in orders:
        family_a, family_b = formula.families(n)
        expected = er_difference(family_a, family_b) * formula.denominator(n, recomputed=True)
        if numerator(n) != expected:
            raise AlgebraError('Recomputed numerator of %s - %s disagrees at n=%d!' % (
                formula.tag_a, formula.tag_b, n))

    algebra_notify.debug('Recomputed numerator of %s - %s: %s', formula.tag_a, formula.tag_b, numerator)
    return numerator

def count_roots_between(polynomial, lo, hi):
    """
    Distinct real roots in the closed interval [lo, hi], None is unbounded.
    """

    # squarefree so a repeated root at an endpoint counts once
    squarefree = polynomial.poly.sqf_part()
    bounds = [None if endpoint is None else to_sympy_number(Fraction(endpoint)) for endpoint in (lo, hi)]
    return int(squarefree.count_roots(*bounds))

def sturm_real_root_count(polynomial, lo=None, hi=None):
    """
    Counts the distinct real roots in the open interval (lo, hi) with the
    Sturm sequence behind sympy's count_roots, a missing endpoint leaves
    that side unbounded.
    """

    if polynomial.is_zero():
        raise AlgebraError('Cannot count the roots of the zero polynomial!')

    if lo is not None and hi is not None and Fraction(lo) >= Fraction(hi):
        raise AlgebraError('Root counting interval (%s, %s) is empty!' % (lo, hi))

    count = count_roots_between(polynomial, lo, hi)
    for endpoint in (lo, hi):
        if endpoint is not None and polynomial(Fraction(endpoint)) == 0:
            count -= 1

    return count

def roots_at_or_above(polynomial, threshold):
    if polynomial.is_zero():
        raise AlgebraError('Cannot count the roots of the zero polynomial!')

    return count_roots_between(polynomial, threshold, None)

class RootClaim(object):
    """
    One published statement about the real roots of a fixed polynomial:
    threshold None means no real roots at all, otherwise no real root at
    or above the threshold.
    """

    def __init__(self, name, polynomial, threshold, paper_ref):
        self.name = name
        self.polynomial = polynomial
        self.threshold = threshold
        self.paper_ref = paper_ref

    def offending_roots(self):
        if self.threshold is None:
            return sturm_real_root_count(self.polynomial)

        return roots_at_or_above(self.polynomial, self.threshold)

def root_claims():
    claims = []
    quartic_ref = {
        types.FAMILY_XN: 'Theorem 2.3 proof: "does not have any real roots"',
        types.FAMILY_YN: 'Theorem 3.2 proof: "does not have any real roots"',
    }

    denominator_threshold = {types.FAMILY_XN: 2, types.FAMILY_YN: 3}
    for formula in DIFFERENCE_FORMULAS[:2]:
        claims.append(RootClaim('numerator %s - %s' % formula.pair, formula.numerator, None,
                                quartic_ref[formula.tag_a]))

        threshold = denominator_threshold[formula.tag_a]
        for tag in formula.pair:
            claims.append(RootClaim(
                'denominator factor %s' % tag, published_closed_form(tag).value_polynomial(), threshold,
                '%s proof: real roots of the denominator factors are less than %d' % (
                    'Theorem 2.3' if threshold == 2 else 'Theorem 3.2', threshold)))

    for formula in DIFFERENCE_FORMULAS[2:]:
        claims.append(RootClaim('numerator %s - %s' % formula.pair, formula.numerator, 2,
                                'Theorem 4.2 proof: "All the real roots of the polynomials that appear '
                                'in the numerators are less than 2"'))

    for tag in types.TRICYCLIC_FAMILIES:
        claims.append(RootClaim('f_%s' % tag[1:], published_closed_form(tag).value_polynomial(), 3,
                                'Theorem 4.2 proof: "all the real roots of the polynomials $f_i$ ... '
                                'are less than 3"'))

    return claims

def cn_cnstar_gap(n):
    """
    Returns ER(C_n) - ER(C_n*) exactly.
    """

    if n < 5:
        raise AlgebraError('The cycle gap needs n >= 5, got n=%d!' % n)

    cycle = recurrence_charpoly(FamilyId(types.FAMILY_CN, n))
    starred = recurrence_charpoly(FamilyId(types.FAMILY_CN_STAR, n))
    return er_from_charpoly(cycle, n) - er_from_charpoly(starred, n)
