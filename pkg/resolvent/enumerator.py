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

import itertools
import os
import time

from concurrent import futures

import networkx
import semidbm

from resolvent import types
from resolvent.algebra import er_exact
from resolvent.component import Component
from resolvent.config import config
from resolvent.graph import Graph, edge_count, is_bipartite, is_connected
from resolvent.io import graph6_decode, graph6_encode
from resolvent.notifier import notify


class EnumerationError(RuntimeError):
    """
    An enumeration specific runtime error
    """

def twin_of(rows, u, v):
    """
    True when swapping u and v is an automorphism (equal open or closed
    neighborhoods).
    """

    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)

def refine(rows, cells):
    """
    Splits the ordered partition until every vertex of a cell has the same
    number of neighbors in every cell; split order depends only on counts.
    """

    cells = [list(cell) for cell in cells]
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v

            masks.append(mask)

        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue

            groups = {}
            for v in cell:
                signature = tuple(bin(rows[v] & mask).count('1') for mask in masks)
                groups.setdefault(signature, []).append(v)

            for signature in sorted(groups):
                refined.append(groups[signature])

        if len(refined) == len(cells):
            return refined

        cells = refined

def graph6_key(graph):
    """
    The graph6 bit string as one integer; for a fixed order these integers
    sort like the graph6 texts.
    """

    value = 0
    for j in range(1, graph.n):
        for i in range(j):
            value = value << 1 | graph.has_edge(i, j)

    return value

def canonical_labeling(graph):
    """
    Returns the permutation (old label -> new label) reaching the canonical
    form: individualization-refinement over the first smallest non-singleton
    cell, one individualized vertex per twin class, minimum graph6 leaf.
    """

    rows = graph.rows
    degrees = graph.degrees()
    initial = []
    for degree in sorted(set(degrees)):
        initial.append([v for v in range(graph.n) if degrees[v] == degree])

    best = [None, None]

    def search(cells):
        cells = refine(rows, cells)
        target = None
        for index, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = index

        if target is None:
            permutation = [0] * graph.n
            for label, cell in enumerate(cells):
                permutation[cell[0]] = label

            key = graph6_key(graph.relabel(permutation))
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, permutation

            return

        cell = cells[target]
        representatives = []
        for v in cell:
            if not any(twin_of(rows, u, v) for u in representatives):
                representatives.append(v)

        for v in representatives:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(initial)
    return best[1]

def canonical_form(graph):
    return graph.relabel(canonical_labeling(graph))

def canonical_graph6(graph):
    return graph6_encode(canonical_form(graph))

def tree_skeletons(n):
    """
    Yields one labeled spanning tree per isomorphism class of trees on n vertices.
    """

    for tree in networkx.nonisomorphic_trees(n):
        yield Graph.from_edges(n, [(int(u), int(v)) for u, v in tree.edges()])

def chord_closure(tree, chords):
    """
    Returns the canonical graph6 text of every graph made from tree by adding
    chords non-edges; one work unit of the enumeration.
    """

    n = tree.n
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not tree.has_edge(u, v)]
    found = set()
    for extra in itertools.combinations(missing, chords):
        graph = Graph.from_edges(n, tree.edges() + list(extra))
        found.add(canonical_graph6(graph))

    return found

def chord_closure_graph6(text, chords):
    return chord_closure(graph6_decode(text), chords)

def check_enumeration_range(n, c):
    if not types.ENUMERATE_MIN_ORDER <= n <= types.ENUMERATE_MAX_ORDER:
        raise EnumerationError('Enumeration order must be within %d..%d, got n=%d!' % (
            types.ENUMERATE_MIN_ORDER, types.ENUMERATE_MAX_ORDER, n))

    if c not in types.ENUMERATE_CYCLOMATIC:
        raise EnumerationError('Cyclomatic number must be one of %s, got c=%d!' % (
            ', '.join(str(value) for value in types.ENUMERATE_CYCLOMATIC), c))

    if n - 1 + c > n * (n - 1) // 2:
        raise EnumerationError('No simple graph on n=%d vertices has %d edges!' % (n, n - 1 + c))

class WorkerPool(Component):
    """
    A process pool for enumeration work units, a single job runs inline.
    """

    notify = notify.new_category('WorkerPool')

    def __init__(self, jobs=1):
        self._jobs = max(int(jobs), 1)
        self._executor = None

    @property
    def jobs(self):
        return self._jobs

    def setup(self):
        if self._jobs > 1:
            self.notify.info('Starting worker pool with %d processes...' % self._jobs)
            self._executor = futures.ProcessPoolExecutor(max_workers=self._jobs)

    def map(self, function, *iterables):
        if self._executor is None:
            return list(map(function, *iterables))

        return list(self._executor.map(function, *iterables))

    def shutdown(self):
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

class EnumerationCache(Component):
    """
    A persistent semidbm store of enumeration results keyed by "n:c",
    values are newline separated canonical graph6 lines.
    """

    notify = notify.new_category('EnumerationCache')

    def __init__(self, filepath):
        self._filepath = filepath
        self._dbm = None

    @property
    def filepath(self):
        return self._filepath

    def setup(self):
        directory = os.path.dirname(self._filepath)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)

        self._dbm = semidbm.open(self._filepath, 'c')

    def get_key(self, n, c):
        return ('%d:%d' % (n, c)).encode('ascii')

    def has_value(self, n, c):
        return self._dbm is not None and self.get_key(n, c) in self._dbm

    def get_value(self, n, c):
        if not self.has_value(n, c):
            return None

        data = self._dbm[self.get_key(n, c)].decode('ascii')
        return [line for line in data.split('\n') if line]

    def set_value(self, n, c, lines):
        if self._dbm is None:
            raise EnumerationError('Enumeration cache %s is not open!' % self._filepath)

        self._dbm[self.get_key(n, c)] = '\n'.join(lines).encode('ascii')
        self._dbm.sync()

    def shutdown(self):
        if self._dbm is not None:
            self._dbm.close()
            self._dbm = None

class EnumerationReport(object):
    """
    The summary of one (n, c) enumeration.
    """

    def __init__(self, n, c, count, argmax_er, argmin_er, argmax_er_bipartite, elapsed):
        self.n = n
        self.c = c
        self.count = count
        self.argmax_er = argmax_er
        self.argmin_er = argmin_er
        self.argmax_er_bipartite = argmax_er_bipartite
        self.elapsed = elapsed

    def to_dict(self):
        return {
            'n': self.n,
            'c': self.c,
            'count': self.count,
            'argmax_er': self.argmax_er,
            'argmin_er': self.argmin_er,
            'argmax_er_bipartite': self.argmax_er_bipartite,
            'elapsed': round(self.elapsed, 3),
        }

class Enumerator(object):
    """
    Enumerates connected graphs with n vertices and n - 1 + c edges up to
    isomorphism, one work unit per tree skeleton, optionally through a
    worker pool and a persistent cache.
    """

    notify = notify.new_category('Enumerator')

    def __init__(self, pool=None, cache=None):
        self._pool = pool
        self._cache = cache
        self._memory = {}

    def enumerate_graph6(self, n, c):
        check_enumeration_range(n, c)
        key = (n, c)
        if key in self._memory:
            return self._memory[key]

        lines = None
        if self._cache is not None:
            lines = self._cache.get_value(n, c)
            if lines is not None:
                self.notify.debug('Loaded %d graphs for n=%d, c=%d from the cache.' % (len(lines), n, c))

        if lines is None:
            start = time.time()
            skeletons = [graph6_encode(tree) for tree in tree_skeletons(n)]
            if self._pool is not None:
                units = self._pool.map(chord_closure_graph6, skeletons, [c] * len(skeletons))
            else:
                units = [chord_closure_graph6(text, c) for text in skeletons]

            found = set()
            for unit in units:
                found.update(unit)

            lines = sorted(found)
            self.notify.info('Enumerated %d graphs for n=%d, c=%d in %.2fs.' % (
                len(lines), n, c, time.time() - start))

            if self._cache is not None:
                self._cache.set_value(n, c, lines)

        self._memory[key] = lines
        return lines

    def enumerate_connected(self, n, c):
        graphs = []
        for text in self.enumerate_graph6(n, c):
            graph = graph6_decode(text)
            check_enumerated(graph, n, c)
            graphs.append(graph)

        return graphs

    def rank(self, n, c):
        """
        Returns (ER, graph6) pairs sorted by exact ER, ties by graph6.
        """

        ranked = []
        for text in self.enumerate_graph6(n, c):
            ranked.append((er_exact(graph6_decode(text)), text))

        ranked.sort()
        return ranked

    def report(self, n, c):
        start = time.time()
        ranked = self.rank(n, c)
        bipartite = [text for _, text in ranked if is_bipartite(graph6_decode(text))]
        return EnumerationReport(
            n=n,
            c=c,
            count=len(ranked),
            argmax_er=ranked[-1][1],
            argmin_er=ranked[0][1],
            argmax_er_bipartite=bipartite[-1] if bipartite else None,
            elapsed=time.time() - start)

def enumerate_connected(n, c, enumerator=None):
    """
    Yields one graph per isomorphism class of connected graphs with n
    vertices and cyclomatic number c, in sorted canonical graph6 order.
    """

    enumerator = enumerator or Enumerator()
    for graph in enumerator.enumerate_connected(n, c):
        yield graph

def create_enumerator(component_manager, jobs=None, cache_path=None):
    """
    Builds an enumerator whose pool and cache are registered with the
    component manager so they are shut down with it.
    """

    if jobs is None:
        jobs = int(os.environ.get(types.JOBS_ENVIRONMENT_VARIABLE, config.get_int('enumerate-jobs', 1)))

    if cache_path is None:
        cache_path = config.get_string('enumerate-cache', '')

    pool = component_manager.add_component(WorkerPool(jobs))
    cache = None
    if cache_path:
        cache = component_manager.add_component(EnumerationCache(cache_path))

    return Enumerator(pool=pool, cache=cache)

def check_enumerated(graph, n, c):
    """
    Raises unless graph is connected with n vertices and n - 1 + c edges.
    """

    if graph.n != n or edge_count(graph) != n - 1 + c or not is_connected(graph):
        raise EnumerationError('Enumerated graph %s is not a connected (n=%d, c=%d) graph!' % (
            graph6_encode(graph), n, c))
