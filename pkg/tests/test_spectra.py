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

import math
import random

import numpy
import pytest
from hypothesis import given, settings

from resolvent import types
from resolvent.algebra import er_exact
from resolvent.graph import FamilyId, Graph, build_family, edge_count, is_bipartite, triangle_count
from resolvent.spectra import (MomentVector, Spectrum, SpectrumError, compare_moments, default_series_terms,
                               ee_spectral, eigenvalues, er_series, er_spectral, jacobi_eigenvalues,
                               moment_dominance, moment_vector, series_tail_bound, spectral_moment)

from tests.strategies import graphs


def family(tag, n):
    return build_family(FamilyId(tag, n))


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_cycle_spectrum():
    spectrum = eigenvalues(family(types.FAMILY_CN, 4))
    assert spectrum.values == pytest.approx([2.0, 0.0, 0.0, -2.0], abs=1e-9)
    assert spectrum.largest == pytest.approx(2.0)
    assert len(spectrum) == 4


def test_odd_cycle_spectrum():
    spectrum = eigenvalues(family(types.FAMILY_CN, 5))
    expected = sorted((2 * math.cos(2 * math.pi * j / 5) for j in range(5)), reverse=True)
    assert list(spectrum) == pytest.approx(expected, abs=1e-9)


def test_complete_graph_spectrum():
    assert eigenvalues(complete(4)).values == pytest.approx([3.0, -1.0, -1.0, -1.0], abs=1e-9)


@settings(deadline=None)
@given(graphs(max_order=10))
def test_jacobi_matches_numpy(graph):
    expected = sorted(numpy.linalg.eigvalsh(numpy.array(graph.adjacency_matrix(), dtype=float)), reverse=True)
    assert eigenvalues(graph).values == pytest.approx(expected, abs=1e-8)


@settings(deadline=None)
@given(graphs(max_order=8))
def test_power_sums_match_moments(graph):
    spectrum = eigenvalues(graph)
    moments = moment_vector(graph, 6)
    for k, moment in enumerate(moments):
        assert spectrum.power_sum(k) == pytest.approx(moment, abs=1e-6)


def test_jacobi_rejects_asymmetric():
    with pytest.raises(SpectrumError):
        jacobi_eigenvalues([[0, 1], [0, 0]])


def test_jacobi_reports_nonconvergence():
    with pytest.raises(SpectrumError):
        jacobi_eigenvalues(family(types.FAMILY_CN, 4).adjacency_matrix(), max_sweeps=0)


def test_jacobi_diagonal_input():
    assert sorted(jacobi_eigenvalues([[2.0, 0.0], [0.0, -1.0]], max_sweeps=0)) == [-1.0, 2.0]


def test_spectrum_sorts_descending():
    spectrum = Spectrum([-1, 3, 0])
    assert spectrum.values == (3.0, 0.0, -1.0)
    assert spectrum[1] == 0.0
    assert spectrum.power_sum(2) == pytest.approx(10.0)


@pytest.mark.parametrize('graph', [
    family(types.FAMILY_XN, 5),
    family(types.FAMILY_CN, 7),
    family(types.FAMILY_Z4, 9),
    Graph.empty(3),
])
def test_er_spectral_matches_exact(graph):
    exact = er_exact(graph)
    assert abs(er_spectral(graph) - float(exact)) < 1e-9


@pytest.mark.parametrize('n', range(2, 8))
def test_er_spectral_complete_graph(n):
    assert er_spectral(complete(n)) == pytest.approx(1 + (n - 1.0) / (n + 1.0), abs=1e-12)


def test_ee_spectral():
    assert ee_spectral(complete(2)) == pytest.approx(math.e + 1.0 / math.e)
    assert ee_spectral(Graph.empty(3)) == pytest.approx(3.0)
    assert ee_spectral(family(types.FAMILY_CN, 4)) == pytest.approx(math.exp(2) + math.exp(-2) + 2.0)


def test_moment_vector_low_orders():
    graph = family(types.FAMILY_XN, 7)
    moments = moment_vector(graph, 4)
    assert isinstance(moments, MomentVector)
    assert moments.kmax == 4
    assert moments[0] == 7
    assert moments[1] == 0
    assert moments[2] == 2 * edge_count(graph)
    assert moments[3] == 6 * triangle_count(graph) == 6


def test_spectral_moment():
    assert spectral_moment(complete(3), 3) == 6
    assert spectral_moment(complete(3), 4) == 18
    assert spectral_moment(family(types.FAMILY_CN, 5), 5) == 10


def test_moment_vector_rejects_negative_index():
    with pytest.raises(SpectrumError):
        moment_vector(complete(3), -1)


def test_series_tail_bound():
    assert series_tail_bound(5, 0) == pytest.approx(4.0)
    assert series_tail_bound(5, 10) < series_tail_bound(5, 9)


def test_default_series_terms():
    kmax = default_series_terms(5)
    assert series_tail_bound(5, kmax) <= 1e-9
    assert series_tail_bound(5, kmax - 1) > 1e-9


@pytest.mark.parametrize('graph', [family(types.FAMILY_CN, 5), family(types.FAMILY_Z1, 6), complete(4)])
def test_er_series_within_tail(graph):
    value, tail = er_series(graph)
    assert tail <= 1e-9
    assert abs(value - float(er_exact(graph))) <= tail + 1e-12


@pytest.mark.parametrize('kmax', [10, 50, 300])
def test_er_series_truncation_bound(kmax):
    graph = family(types.FAMILY_YN, 6)
    value, tail = er_series(graph, kmax)
    assert tail == pytest.approx(series_tail_bound(6, kmax))
    assert -1e-12 <= float(er_exact(graph)) - value <= tail + 1e-12


def test_er_series_of_empty_graph():
    value, tail = er_series(Graph.empty(2), 0)
    assert value == 1.0
    assert tail == pytest.approx(1.0)


def test_er_series_rejects_single_vertex():
    with pytest.raises(SpectrumError):
        er_series(Graph.empty(1))


def test_moment_dominance():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    result = moment_dominance(path, complete(3), 4)
    assert result.dominated_all
    assert result.strict_somewhere
    assert result.first_strict_k == 2

    reverse = moment_dominance(complete(3), path, 4)
    assert not reverse.dominated_all
    assert not reverse.strict_somewhere
    assert reverse.first_strict_k is None


def test_moment_dominance_requires_equal_orders():
    with pytest.raises(SpectrumError):
        moment_dominance(complete(3), complete(4), 4)


def test_compare_equal_moments():
    moments = MomentVector([3, 0, 6])
    assert compare_moments(moments, moments) == (True, False, None)


ENUMERATED_ORDERS = [3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)]


def enumerated(enumerator, n):
    for c in types.ENUMERATE_CYCLOMATIC:
        if n - 1 + c <= n * (n - 1) // 2:
            for graph in enumerator.enumerate_connected(n, c):
                yield graph


@pytest.mark.parametrize('n', ENUMERATED_ORDERS)
def test_er_spectral_matches_exact_on_enumerated(enumerator, n):
    for graph in enumerated(enumerator, n):
        exact = er_exact(graph)
        assert exact > 1
        assert abs(er_spectral(graph) - float(exact)) < 1e-9


@pytest.mark.parametrize('tag', types.FAMILY_TAGS)
def test_er_spectral_matches_exact_on_families(tag):
    for n in range(max(5, types.FAMILY_MIN_ORDER[tag]), 31):
        graph = family(tag, n)
        assert abs(er_spectral(graph) - float(er_exact(graph))) < 1e-9, n


@pytest.mark.parametrize('n', ENUMERATED_ORDERS)
def test_bipartite_iff_odd_moments_vanish(enumerator, n):
    for graph in enumerated(enumerator, n):
        moments = moment_vector(graph, 9)
        bipartite = is_bipartite(graph)
        assert bipartite == all(moments[k] == 0 for k in range(1, 10, 2))
        if bipartite:
            values = eigenvalues(graph).values
            for value, mirrored in zip(values, reversed(values)):
                assert value == pytest.approx(-mirrored, abs=1e-9)


@pytest.mark.slow
def test_er_series_bound_on_random_enumerated(enumerator):
    graphs = list(enumerated(enumerator, 8))
    for graph in random.Random(8).sample(graphs, 20):
        exact = float(er_exact(graph))
        for kmax in (20, None):
            value, tail = er_series(graph, kmax)
            assert -1e-12 <= exact - value <= tail + 1e-12
