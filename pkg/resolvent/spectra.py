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

import collections
import math

from fractions import Fraction

import numpy

from resolvent.config import config
from resolvent.notifier import notify

spectra_notify = notify.new_category('spectra')


class SpectrumError(RuntimeError):
    """
    A spectrum specific runtime error
    """

class Spectrum(object):
    """
    The adjacency eigenvalues of a graph sorted descending.
    """

    __slots__ = ('_values',)

    def __init__(self, values):
        self._values = tuple(sorted((float(value) for value in values), reverse=True))

    @property
    def values(self):
        return self._values

    @property
    def largest(self):
        return self._values[0]

    def power_sum(self, k):
        return math.fsum(value ** k for value in self._values)

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, index):
        return self._values[index]

    def __repr__(self):
        return 'Spectrum(%r)' % (list(self._values),)

class MomentVector(object):
    """
    The exact spectral moments M_0..M_K.
    """

    __slots__ = ('_values',)

    def __init__(self, values):
        self._values = tuple(int(value) for value in values)

    @property
    def values(self):
        return self._values

    @property
    def kmax(self):
        return len(self._values) - 1

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, index):
        return self._values[index]

    def __repr__(self):
        return 'MomentVector(%r)' % (list(self._values),)

MomentDominance = collections.namedtuple('MomentDominance', ['dominated_all', 'strict_somewhere', 'first_strict_k'])

def jacobi_eigenvalues(matrix, tolerance=None, max_sweeps=None):
    """
    Cyclic Jacobi rotations on a dense symmetric matrix until the
    off-diagonal Frobenius norm drops below tolerance * ||A||_F.
    """

    if tolerance is None:
        tolerance = config.get_float('jacobi-tolerance', 1e-13)

    if max_sweeps is None:
        max_sweeps = config.get_int('jacobi-max-sweeps', 100)

    a = numpy.array(matrix, dtype=float)
    size = a.shape[0]
    if a.shape != (size, size) or not numpy.allclose(a, a.T):
        raise SpectrumError('Jacobi rotations need a square symmetric matrix!')

    scale = max(numpy.linalg.norm(a), 1.0)
    for sweep in range(max_sweeps + 1):
        off = numpy.sqrt(max(numpy.sum(a * a) - numpy.sum(numpy.diag(a) ** 2), 0.0))
        if off < tolerance * scale:
            spectra_notify.debug('Jacobi converged after %d sweeps on a %dx%d matrix.', sweep, size, size)
            return numpy.diag(a).copy()

        if sweep == max_sweeps:
            break

        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if apq == 0.0:
                    continue

                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                column_p, column_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * column_p - s * column_q
                a[:, q] = s * column_p + c * column_q
                a[p, q] = a[q, p] = 0.0

    raise SpectrumError('Jacobi rotations did not converge within %d sweeps!' % max_sweeps)

def eigenvalues(graph):
    return Spectrum(jacobi_eigenvalues(graph.adjacency_matrix()))

def er_spectral(graph):
    n = graph.n
    return math.fsum(1.0 / (n - value) for value in eigenvalues(graph))

def ee_spectral(graph):
    return math.fsum(math.exp(value) for value in eigenvalues(graph))

def moment_vector(graph, kmax):
    """
    Counts the closed walks of every length 0..kmax exactly, W_k = A W_{k-1}
    is kept as integer rows and M_k = tr(W_k).
    """

    if kmax < 0:
        raise SpectrumError('Moment index must be nonnegative, got %d!' % kmax)

    n = graph.n
    neighbors = [graph.neighbors(v) for v in range(n)]
    walks = [[int(i == j) for j in range(n)] for i in range(n)]
    values = [n]
    for _ in range(kmax):
        following = []
        for i in range(n):
            row = [0] * n
            for u in neighbors[i]:
                source = walks[u]
                for j in range(n):
                    row[j] += source[j]

            following.append(row)

        walks = following
        values.append(sum(walks[i][i] for i in range(n)))

    return MomentVector(values)

def spectral_moment(graph, k):
    return moment_vector(graph, k)[k]

def series_tail_bound(n, kmax):
    """
    Bounds the omitted terms by M_k <= n (n - 1)^k.
    """

    return n * ((n - 1.0) / n) ** (kmax + 1)

def default_series_terms(n):
    tolerance = config.get_float('series-tolerance', 1e-9)
    limit = config.get_int('series-max-terms', 10000)
    kmax = 0
    while kmax < limit and series_tail_bound(n, kmax) > tolerance:
        kmax += 1

    return kmax

def er_series(graph, kmax=None):
    """
    Returns (value, tail_bound) for (1/n) sum_{k <= K} M_k / n^k.
    """

    n = graph.n
    if n < 2:
        raise SpectrumError('The moment series needs n >= 2, got n=%d!' % n)

    if kmax is None:
        kmax = default_series_terms(n)

    moments = moment_vector(graph, kmax)
    value = sum((Fraction(moment, n ** (k + 1)) for k, moment in enumerate(moments)), Fraction(0))
    return float(value), series_tail_bound(n, kmax)

def moment_dominance(graph, other, kmax):
    """
    Compares M_k(graph) <= M_k(other) for every k <= kmax.
    """

    if graph.n != other.n:
        raise SpectrumError('Moment dominance needs equal orders, got %d and %d!' % (graph.n, other.n))

    return compare_moments(moment_vector(graph, kmax), moment_vector(other, kmax))

def compare_moments(moments, other):
    dominated_all = True
    first_strict_k = None
    for k, (a, b) in enumerate(zip(moments, other)):
        if a > b:
            dominated_all = False

        if a < b and first_strict_k is None:
            first_strict_k = k

    return MomentDominance(dominated_all, first_strict_k is not None, first_strict_k)
