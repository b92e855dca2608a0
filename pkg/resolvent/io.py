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
import csv

import networkx
import simplejson

from resolvent import types
from resolvent.graph import FamilyId, Graph, build_family


class Graph6Error(RuntimeError):
    """
    A graph6 parse specific runtime error
    """

    def __init__(self, message, offset):
        RuntimeError.__init__(self, '%s (at byte offset %d)' % (message, offset))
        self.offset = offset

def to_networkx(graph):
    result = networkx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result

def graph6_encode(graph):
    """
    Short form graph6 text of the graph, without header or newline.
    """

    if graph.n > types.GRAPH6_MAX_ORDER:
        raise Graph6Error('graph6 long form is unsupported, n=%d exceeds %d' % (
            graph.n, types.GRAPH6_MAX_ORDER), 0)

    return networkx.to_graph6_bytes(to_networkx(graph), header=False).decode('ascii').rstrip('\n')

def check_graph6(text):
    """
    Validates short form graph6 text before it is unpacked, errors carry
    the offset of the first offending byte.
    """

    if not text:
        raise Graph6Error('Empty graph6 text', 0)

    if text.startswith('>>graph6<<'):
        raise Graph6Error('graph6 headers are unsupported', 0)

    for offset, character in enumerate(text):
        if not types.GRAPH6_OFFSET <= ord(character) <= 126:
            raise Graph6Error('Invalid graph6 character %r' % character, offset)

    n = ord(text[0]) - types.GRAPH6_OFFSET
    if n > types.GRAPH6_MAX_ORDER:
        raise Graph6Error('graph6 long form is unsupported', 0)

    if n < 1:
        raise Graph6Error('graph6 text describes a graph without vertices', 0)

    pairs = n * (n - 1) // 2
    expected = 1 + (pairs + 5) // 6
    if len(text) != expected:
        raise Graph6Error('Expected %d characters for n=%d, got %d' % (expected, n, len(text)),
                          min(len(text), expected))

    padding = 6 * (expected - 1) - pairs
    if padding and (ord(text[-1]) - types.GRAPH6_OFFSET) & ((1 << padding) - 1):
        raise Graph6Error('Nonzero padding bits', len(text) - 1)

    return n

def graph6_decode(text):
    text = text.strip()
    n = check_graph6(text)
    try:
        parsed = networkx.from_graph6_bytes(text.encode('ascii'))
    except (ValueError, networkx.NetworkXError) as e:
        raise Graph6Error(str(e), 0)

    return Graph.from_edges(n, [(int(u), int(v)) for u, v in parsed.edges()])

def parse_graph_spec(text):
    """
    Accepts "family:NAME:n" or graph6 text.
    """

    text = text.strip()
    if text.startswith('family:'):
        return build_family(FamilyId.parse(text))

    return graph6_decode(text)

def read_graph6_file(filepath):
    graphs = []
    with open(filepath, 'r') as io:
        for line in io:
            line = line.strip()
            if line:
                graphs.append(graph6_decode(line))

    return graphs

def write_graph6_lines(io, graphs):
    for graph in graphs:
        io.write(graph6_encode(graph) + '\n')

def write_graph6_file(filepath, graphs):
    with open(filepath, 'w') as io:
        write_graph6_lines(io, graphs)

def dump_json(value, io):
    simplejson.dump(value, io, sort_keys=True, indent=2)
    io.write('\n')

def write_csv(io, columns, rows):
    writer = csv.writer(io, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[column] for column in columns])
