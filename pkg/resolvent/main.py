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

import argparse
import os
import sys

from resolvent import types
from resolvent.algebra import (AlgebraError, DIFFERENCE_FORMULAS, charpoly, er_exact,
                               find_difference_formula, verify_difference_formula)
from resolvent.claims import CLAIMS, ClaimRunner, ClaimSpec, default_specs
from resolvent.component import ComponentError, ComponentManager
from resolvent.config import ConfigError, config
from resolvent.enumerator import EnumerationError, create_enumerator
from resolvent.graph import GraphError
from resolvent.io import (Graph6Error, dump_json, graph6_encode, parse_graph_spec, read_graph6_file, write_csv,
                          write_graph6_file)
from resolvent.notifier import notify
from resolvent.polynomial import PolynomialError
from resolvent.spectra import SpectrumError, ee_spectral, er_spectral, moment_vector
from resolvent.util import RangeError, format_decimal, format_rational, parse_n_range, parse_options
from resolvent.verifier import ClaimError

main_notify = notify.new_category('main')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (AlgebraError, ClaimError, ComponentError, ConfigError, EnumerationError,
                Graph6Error, GraphError, PolynomialError, RangeError, SpectrumError)

COMPARE_COLUMNS = ['n', 'family_a', 'family_b', 'difference', 'difference_decimal', 'formula', 'formula_match',
                   'positive']

def er_line(graph):
    exact = er_exact(graph)
    residual = abs(er_spectral(graph) - float(exact))
    if residual < 1e-9:
        residual_text = 'residual<1e-9'
    else:
        residual_text = 'residual=%.3e' % residual

    return '%s  %s  %s' % (format_rational(exact), format_decimal(exact), residual_text)

def cmd_er(text, io):
    """
    Prints the exact ER, its decimal form and the residual against the
    spectral definition. A "file:PATH" argument reads one graph6 text per
    line and prefixes each result with its graph6 text.
    """

    if not text.startswith('file:'):
        io.write('%s\n' % er_line(parse_graph_spec(text)))
        return EXIT_OK

    filepath = text[len('file:'):]
    try:
        graphs = read_graph6_file(filepath)
    except (IOError, OSError) as e:
        raise Graph6Error('Cannot read %s: %s' % (filepath, e), 0)

    for graph in graphs:
        io.write('%s  %s\n' % (graph6_encode(graph), er_line(graph)))

    return EXIT_OK

def cmd_charpoly(text, io):
    io.write('%s\n' % charpoly(parse_graph_spec(text)))
    return EXIT_OK

def cmd_moments(text, kmax, output_format, io):
    graph = parse_graph_spec(text)
    moments = moment_vector(graph, kmax)
    if output_format == 'csv':
        write_csv(io, ['k', 'moment'], [{'k': k, 'moment': value} for k, value in enumerate(moments)])
        return EXIT_OK

    dump_json({
        'n': graph.n,
        'moments': list(moments),
        'estrada': float('%.12g' % ee_spectral(graph)),
    }, io)

    return EXIT_OK

def compare_pairs(tags):
    if len(tags) < 2:
        raise AlgebraError('compare needs at least two families, documented pairs: %s' % ', '.join(
            '%s,%s' % formula.pair for formula in DIFFERENCE_FORMULAS))

    return [find_difference_formula(tags[0], tag) for tag in tags[1:]]

def compare_rows(tags, n_range):
    formulas = compare_pairs(tags)
    rows = []
    low, high = n_range
    for n in range(low, high + 1):
        for formula in formulas:
            if n < formula.min_order:
                continue

            difference, published, match = verify_difference_formula(formula, n)
            rows.append({
                'n': n,
                'family_a': formula.tag_a,
                'family_b': formula.tag_b,
                'difference': format_rational(difference),
                'difference_decimal': format_decimal(difference),
                'formula': format_rational(published),
                'formula_match': 'true' if match else 'false',
                'positive': 'true' if difference > 0 else 'false',
            })

    if not rows:
        raise AlgebraError('No order in %d..%d is defined for %s, smallest orders: %s' % (
            low, high, ', '.join('%s,%s' % formula.pair for formula in formulas),
            ', '.join(str(formula.min_order) for formula in formulas)))

    return rows

def cmd_compare(tags, n_range, output_format, io):
    rows = compare_rows(tags, n_range)
    if output_format == 'json':
        dump_json(rows, io)
    else:
        write_csv(io, COMPARE_COLUMNS, rows)

    return EXIT_OK

def cmd_enumerate(n, c, out_path, enumerator, io):
    graphs = enumerator.enumerate_connected(n, c)
    report = enumerator.report(n, c)
    if out_path:
        try:
            write_graph6_file(out_path, graphs)
        except (IOError, OSError) as e:
            raise EnumerationError('Cannot write %s: %s' % (out_path, e))

    dump_json(report.to_dict(), io)
    return EXIT_OK

def cmd_verify(specs, enumerator, io):
    results = ClaimRunner(enumerator).run_all(specs)
    dump_json([result.to_dict() for result in results], io)
    if all(result.passed for result in results):
        return EXIT_OK

    return EXIT_FAILED

def build_specs(claim_ids, n_range, options):
    if not claim_ids or claim_ids == ['all']:
        if n_range is None:
            specs = default_specs()
            for spec in specs:
                spec.options.update(options)

            return specs

        claim_ids = list(types.CLAIM_IDS)

    specs = []
    for claim_id in claim_ids:
        if claim_id not in CLAIMS:
            raise ClaimError('Unknown claim %r, registry: %s' % (claim_id, ', '.join(types.CLAIM_IDS)))

        specs.append(ClaimSpec(claim_id, n_range, options))

    return specs

def default_jobs():
    value = os.environ.get(types.JOBS_ENVIRONMENT_VARIABLE)
    if value:
        try:
            return int(value)
        except ValueError:
            raise ConfigError('%s=%r is not an integer!' % (types.JOBS_ENVIRONMENT_VARIABLE, value))

    return config.get_int('enumerate-jobs', 1)

def create_parser():
    parser = argparse.ArgumentParser(prog='resolvent', description='Exact resolvent energy toolkit.')
    parser.add_argument('--config', help='Reads configuration values from a TOML, YAML or JSON file.')
    parser.add_argument('-v', '--verbose', help='Enables debug logging.', action='store_true')
    parser.add_argument('--jobs', type=int, help='Number of enumeration worker processes.')
    parser.add_argument('--format', choices=['csv', 'json'], help='Report format.')
    parser.add_argument('--out', help='Output file path.')
    parser.add_argument('--n-range', help='Inclusive order range A..B.')
    parser.add_argument('--kmax', type=int, help='Largest spectral moment index.')

    subparsers = parser.add_subparsers(dest='command')
    er = subparsers.add_parser('er', help='Prints the resolvent energy of a graph6 text, family:NAME:n or file:PATH.')
    er.add_argument('graph')

    polynomial = subparsers.add_parser('charpoly', help='Prints the characteristic polynomial.')
    polynomial.add_argument('graph')

    moments = subparsers.add_parser('moments', help='Prints the spectral moments and the Estrada index.')
    moments.add_argument('graph')

    compare = subparsers.add_parser('compare', help='Tabulates ER differences against published quotients.')
    compare.add_argument('families', nargs='+')

    enumerate_parser = subparsers.add_parser('enumerate', help='Enumerates connected c-cyclic graphs.')
    enumerate_parser.add_argument('n', type=int)
    enumerate_parser.add_argument('c', type=int)

    verify = subparsers.add_parser('verify', help='Runs registry claims, "all" runs every claim.')
    verify.add_argument('claims', nargs='*')
    verify.add_argument('-o', '--option', action='append', help='Claim option key=value.')
    return parser

def dispatch(args, n_range, kmax, io):
    if args.command == 'er':
        return cmd_er(args.graph, io)

    if args.command == 'charpoly':
        return cmd_charpoly(args.graph, io)

    if args.command == 'moments':
        return cmd_moments(args.graph, kmax, args.format or 'json', io)

    if args.command == 'compare':
        tags = [text.replace('family:', '') for text in args.families]
        return cmd_compare(tags, n_range or (5, 10), args.format or 'csv', io)

    jobs = args.jobs if args.jobs is not None else default_jobs()
    with ComponentManager() as component_manager:
        enumerator = create_enumerator(component_manager, jobs=jobs)
        if args.command == 'enumerate':
            return cmd_enumerate(args.n, args.c, args.out, enumerator, io)

        options = parse_options(args.option)
        if args.kmax is not None:
            options.setdefault('kmax', str(args.kmax))

        return cmd_verify(build_specs(args.claims, n_range, options), enumerator, io)

def run(argv, io):
    parser = create_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    if args.config:
        config.read_config_file(args.config)

    notify.set_level('DEBUG' if args.verbose else config.get_string('log-level', 'INFO'))
    n_range = parse_n_range(args.n_range) if args.n_range else None
    kmax = args.kmax if args.kmax is not None else config.get_int('verify-kmax', 30)

    # enumerate writes its graph6 lines to --out and the report to io
    if not args.out or args.command == 'enumerate':
        return dispatch(args, n_range, kmax, io)

    try:
        handle = open(args.out, 'w')
    except (IOError, OSError) as e:
        raise ConfigError('Cannot write %s: %s' % (args.out, e))

    with handle:
        return dispatch(args, n_range, kmax, handle)

def main(argv=None):
    try:
        return run(sys.argv[1:] if argv is None else argv, sys.stdout)
    except USAGE_ERRORS as e:
        main_notify.error(str(e))
        return EXIT_USAGE

if __name__ == '__main__':
    sys.exit(main())
