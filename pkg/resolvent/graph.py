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

from resolvent import types


class GraphError(RuntimeError):
    """
    A graph specific runtime error
    """

class FamilyError(GraphError):
    """
    An invalid graph family parameter error
    """

def popcount(value):
    return bin(value).count('1')

def iter_bits(value):
    """
    Yields the indices of the set bits of value in ascending order.
    """

    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low

class Graph(object):
    """
    An immutable simple undirected graph on the vertices 0..n-1,
    each row of the adjacency relation is stored as an integer bitmask...
    """

    __slots__ = ('_n', '_rows')

    def __init__(self, n, rows):
        if n < 1:
            raise GraphError('Graph order must be positive, got %d!' % n)

        rows = tuple(int(row) for row in rows)
        if len(rows) != n:
            raise GraphError('Expected %d adjacency rows, got %d!' % (n, len(rows)))

        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError('Adjacency row %d references a vertex outside 0..%d!' % (v, n - 1))

            if row >> v & 1:
                raise GraphError('Self-loop on vertex %d!' % v)

            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError('Adjacency is not symmetric at (%d, %d)!' % (v, u))

        self._n = n
        self._rows = rows

    @classmethod
    def from_edges(cls, n, edges):
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError('Edge (%d, %d) is outside the vertex range 0..%d!' % (u, v, n - 1))

            if u == v:
                raise GraphError('Self-loop on vertex %d!' % u)

            rows[u] |= 1 << v
            rows[v] |= 1 << u

        return cls(n, rows)

    @classmethod
    def from_adjacency(cls, matrix):
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise GraphError('Adjacency matrix row %d has length %d, expected %d!' % (i, len(line), n))

            row = 0
            for j, entry in enumerate(line):
                if entry:
                    row |= 1 << j

            rows.append(row)

        return cls(n, rows)

    @classmethod
    def empty(cls, n):
        return cls(n, [0] * n)

    @property
    def n(self):
        return self._n

    @property
    def rows(self):
        return self._rows

    def has_edge(self, u, v):
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v):
        return list(iter_bits(self._rows[v]))

    def degree(self, v):
        return popcount(self._rows[v])

    def degrees(self):
        return [popcount(row) for row in self._rows]

    def edges(self):
        return [(u, v) for u in range(self._n) for v in iter_bits(self._rows[u]) if u < v]

    def adjacency_matrix(self):
        return [[row >> j & 1 for j in range(self._n)] for row in self._rows]

    def relabel(self, permutation):
        """
        Returns the graph in which vertex v is renamed permutation[v].
        """

        if sorted(permutation) != list(range(self._n)):
            raise GraphError('Relabeling %r is not a permutation of 0..%d!' % (permutation, self._n - 1))

        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            target = 0
            for u in iter_bits(row):
                target |= 1 << permutation[u]

            rows[permutation[v]] = target

        return Graph(self._n, rows)

    def delete_vertices(self, vertices):
        """
        Returns G - V1, the remaining vertices keep their relative order.
        """

        removed = set(vertices)
        kept = [v for v in range(self._n) if v not in removed]
        if not kept:
            raise GraphError('Cannot delete every vertex of the graph!')

        index = dict((v, i) for i, v in enumerate(kept))
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(kept), edges)

    def add_pendants(self, vertex, count):
        """
        Returns the graph with count new vertices attached to vertex,
        the new vertices are labeled after the existing ones.
        """

        if not 0 <= vertex < self._n:
            raise GraphError('Vertex %d is outside the vertex range 0..%d!' % (vertex, self._n - 1))

        edges = self.edges() + [(vertex, self._n + i) for i in range(count)]
        return Graph.from_edges(self._n + count, edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented

        return self._n == other._n and self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return 'Graph(n=%d, edges=%r)' % (self._n, self.edges())

def edge_count(graph):
    return sum(popcount(row) for row in graph.rows) // 2

def is_connected(graph):
    seen = 1
    frontier = 1
    while frontier:
        reached = 0
        for v in iter_bits(frontier):
            reached |= graph.rows[v]

        frontier = reached & ~seen
        seen |= frontier

    return seen == (1 << graph.n) - 1

def cyclomatic_number(graph):
    if not is_connected(graph):
        raise GraphError('Cyclomatic number requires a connected graph, got %r!' % graph)

    return edge_count(graph) - graph.n + 1

def triangle_count(graph):
    rows = graph.rows
    count = 0
    for u in range(graph.n):
        for v in iter_bits(rows[u] >> (u + 1)):
            v += u + 1
            # only count w > v so each triangle is seen once
            count += popcount((rows[u] & rows[v]) >> (v + 1))

    return count

def quadrilateral_count(graph):
    rows = graph.rows
    total = 0
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            common = popcount(rows[u] & rows[v])
            total += common * (common - 1) // 2

    # every 4-cycle has two diagonals
    return total // 2

def matching_pair_count(graph):
    """
    Returns the number of 2-matchings (pairs of disjoint edges).
    """

    m = edge_count(graph)
    adjacent_pairs = sum(d * (d - 1) // 2 for d in graph.degrees())
    return m * (m - 1) // 2 - adjacent_pairs

def b2_coefficient(graph):
    return matching_pair_count(graph) - 2 * quadrilateral_count(graph)

def is_bipartite(graph):
    color = [None] * graph.n
    for start in range(graph.n):
        if color[start] is not None:
            continue

        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in iter_bits(graph.rows[v]):
                if color[u] is None:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False

    return True

def cycle_edges(length, offset=0):
    return [(offset + i, offset + (i + 1) % length) for i in range(length)]

def theta_edges(p, q, l):
    """
    Edges of three internally disjoint paths of lengths p, q and l joining
    vertex 0 to vertex 1, internal vertices numbered from 2 in path order.
    """

    edges = []
    label = 2
    for length in (p, q, l):
        if length == 1:
            edges.append((0, 1))
            continue

        path = [0] + list(range(label, label + length - 1)) + [1]
        edges.extend(zip(path, path[1:]))
        label += length - 1

    return edges

# (core order, core edges, vertex receiving the pendants)
FAMILY_CORES = {
    types.FAMILY_XN: (3, cycle_edges(3), 0),
    types.FAMILY_XN_TILDE: (4, cycle_edges(4), 0),
    types.FAMILY_YN: (4, theta_edges(2, 2, 1), 0),
    types.FAMILY_YN_TILDE: (5, theta_edges(2, 2, 2), 0),
    types.FAMILY_Z1: (4, [(u, v) for u in range(4) for v in range(u + 1, 4)], 0),
    types.FAMILY_Z2: (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], 0),
    types.FAMILY_Z3: (6, [(u, v) for u in (0, 1) for v in (2, 3, 4, 5)], 0),
    types.FAMILY_Z4: (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)], 0),
    types.FAMILY_Z5: (5, cycle_edges(4, offset=1) + [(0, 1), (0, 2), (0, 3)], 0),
    types.FAMILY_Z6: (6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5) if (u, v) != (2, 5)], 0),
}

class FamilyId(object):
    """
    Names one member of a graph family: a tag and the order n,
    theta graphs carry their three path lengths instead.
    """

    def __init__(self, tag, order=None, params=()):
        if tag not in types.FAMILY_TAGS:
            raise FamilyError('Unknown graph family %r, expected one of %s!' % (
                tag, ', '.join(types.FAMILY_TAGS)))

        params = tuple(int(value) for value in params)
        if tag == types.FAMILY_THETA:
            if len(params) != 3:
                raise FamilyError('Theta family needs three path lengths, got %r!' % (params,))

            if min(params) < 1 or sorted(params)[1] == 1:
                raise FamilyError('Theta path lengths must be >= 1 with at most one equal to 1, got %r!' % (
                    params,))

            implied = sum(params) - 1
            if order is not None and int(order) != implied:
                raise FamilyError('Theta%r has order %d, not %d!' % (params, implied, order))

            order = implied
        elif params:
            raise FamilyError('Family %s takes no extra parameters!' % tag)

        if order is None:
            raise FamilyError('Family %s needs an order!' % tag)

        order = int(order)
        minimum = types.FAMILY_MIN_ORDER[tag]
        if order < minimum:
            raise FamilyError('Family %s needs n >= %d, got n=%d!' % (tag, minimum, order))

        self._tag = tag
        self._order = order
        self._params = params

    @classmethod
    def parse(cls, text):
        """
        Parses "family:NAME:n" (the "family:" prefix is optional) and
        "family:Theta:p:q:l".
        """

        parts = text.strip().split(':')
        if parts and parts[0] == 'family':
            parts = parts[1:]

        if len(parts) < 2:
            raise FamilyError('Malformed family spec %r, expected family:NAME:n!' % text)

        tag = parts[0]
        try:
            values = [int(value) for value in parts[1:]]
        except ValueError:
            raise FamilyError('Malformed family spec %r, parameters must be integers!' % text)

        if tag == types.FAMILY_THETA:
            if len(values) not in (3, 4):
                raise FamilyError('Malformed theta spec %r, expected family:Theta:p:q:l!' % text)

            order = values[3] if len(values) == 4 else None
            return cls(tag, order, values[:3])

        if len(values) != 1:
            raise FamilyError('Malformed family spec %r, expected family:NAME:n!' % text)

        return cls(tag, values[0])

    @property
    def tag(self):
        return self._tag

    @property
    def order(self):
        return self._order

    @property
    def params(self):
        return self._params

    def with_order(self, order):
        return FamilyId(self._tag, order, self._params)

    def __eq__(self, other):
        if not isinstance(other, FamilyId):
            return NotImplemented

        return (self._tag, self._order, self._params) == (other._tag, other._order, other._params)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash((self._tag, self._order, self._params))

    def __str__(self):
        if self._tag == types.FAMILY_THETA:
            return 'family:Theta:%d:%d:%d' % self._params

        return 'family:%s:%d' % (self._tag, self._order)

    def __repr__(self):
        return 'FamilyId(%r)' % str(self)

def family_core(tag):
    """
    Returns (core graph, pendant vertex) for a family grown by pendants.
    """

    if tag not in FAMILY_CORES:
        raise FamilyError('Family %s is not built by attaching pendants!' % tag)

    order, edges, hub = FAMILY_CORES[tag]
    return Graph.from_edges(order, edges), hub

def build_family(family_id):
    tag = family_id.tag
    n = family_id.order
    if tag == types.FAMILY_CN:
        return Graph.from_edges(n, cycle_edges(n))

    if tag == types.FAMILY_CN_STAR:
        return Graph.from_edges(n, cycle_edges(n - 1) + [(0, n - 1)])

    if tag == types.FAMILY_THETA:
        return Graph.from_edges(n, theta_edges(*family_id.params))

    core, hub = family_core(tag)
    return core.add_pendants(hub, n - core.n)
