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
from resolvent.config import config
from resolvent.enumerator import Enumerator
from resolvent.notifier import notify
from resolvent.verifier import (ClaimError, verify_bicyclic_max, verify_charpoly_identities,
                                verify_difference_formulas, verify_gap, verify_moment_lemma, verify_root_claims,
                                verify_tricyclic_max, verify_unicyclic_max, verify_unicyclic_min,
                                verify_unicyclic_min_weak)


class ClaimSpec(object):
    """
    One requested claim run: the registry id, an inclusive order range and
    free-form key=value options.
    """

    def __init__(self, claim_id, n_range=None, options=None):
        if claim_id not in CLAIMS:
            raise ClaimError('Unknown claim %r, registry: %s' % (claim_id, ', '.join(types.CLAIM_IDS)))

        entry = CLAIMS[claim_id]
        if n_range is None:
            n_range = entry.default_range

        low, high = n_range
        if entry.supported_range is not None:
            supported_low, supported_high = entry.supported_range
            if low < supported_low or high > supported_high:
                raise ClaimError('Claim %s supports n in %d..%d, got %d..%d!' % (
                    claim_id, supported_low, supported_high, low, high))

        self.claim_id = claim_id
        self.n_range = (low, high)
        self.options = dict(options or {})

    def get_int(self, key, default):
        value = self.options.get(key, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ClaimError('Option %s=%r of claim %s is not an integer!' % (key, value, self.claim_id))

    def orders(self):
        low, high = self.n_range
        return range(low, high + 1)

    def __repr__(self):
        return 'ClaimSpec(%s, %d..%d)' % ((self.claim_id,) + self.n_range)

class ClaimEntry(object):

    def __init__(self, claim_id, runner, default_range, supported_range):
        self.claim_id = claim_id
        self.runner = runner
        self.default_range = default_range
        self.supported_range = supported_range

def per_order(function):
    def run(spec, enumerator):
        return [function(n, enumerator) for n in spec.orders()]

    return run

def moment_lemma(claim_id):
    def run(spec, enumerator):
        kmax = spec.get_int('kmax', config.get_int('verify-kmax', 30))
        return [verify_moment_lemma(claim_id, n, kmax, enumerator) for n in spec.orders()]

    return run

def root_claims_runner(spec, enumerator):
    return verify_root_claims()

def gap_runner(spec, enumerator):
    low, high = spec.n_range
    return verify_gap(low, high, spec.get_int('n', 100))

def identities_runner(spec, enumerator):
    return verify_charpoly_identities(*spec.n_range)

def formulas_runner(spec, enumerator):
    return verify_difference_formulas(*spec.n_range)

CLAIMS = dict((entry.claim_id, entry) for entry in (
    ClaimEntry(types.CLAIM_THM_23_MAX, per_order(verify_unicyclic_max), (4, 9), (4, 9)),
    ClaimEntry(types.CLAIM_THM_25_MIN, per_order(verify_unicyclic_min_weak), (5, 9), (5, 9)),
    ClaimEntry(types.CLAIM_THM_26_MIN_STRONG, per_order(verify_unicyclic_min), (5, 9), (5, 9)),
    ClaimEntry(types.CLAIM_THM_32_MAX, per_order(verify_bicyclic_max), (5, 8), (5, 8)),
    ClaimEntry(types.CLAIM_THM_42_MAX, per_order(verify_tricyclic_max), (5, 8), (4, 8)),
    ClaimEntry(types.CLAIM_LEM_21, moment_lemma(types.CLAIM_LEM_21), (5, 7), (4, 9)),
    ClaimEntry(types.CLAIM_LEM_24, moment_lemma(types.CLAIM_LEM_24), (5, 7), (5, 9)),
    ClaimEntry(types.CLAIM_LEM_31, moment_lemma(types.CLAIM_LEM_31), (5, 7), (5, 8)),
    ClaimEntry(types.CLAIM_LEM_41, moment_lemma(types.CLAIM_LEM_41), (5, 7), (4, 8)),
    ClaimEntry(types.CLAIM_ROOT_CLAIMS, root_claims_runner, (0, 0), None),
    ClaimEntry(types.CLAIM_GAP_ASYMPTOTIC, gap_runner, (5, 200), (5, 400)),
    ClaimEntry(types.CLAIM_CHARPOLY_IDENTITIES, identities_runner, (5, 40), (4, 62)),
    ClaimEntry(types.CLAIM_DIFF_FORMULAS, formulas_runner, (5, 40), (5, 62)),
))

class ClaimRunner(object):
    """
    Runs claim specs against one shared enumerator so enumerations are
    computed once per (n, c).
    """

    notify = notify.new_category('ClaimRunner')

    def __init__(self, enumerator=None):
        self._enumerator = enumerator or Enumerator()

    def run(self, spec):
        self.notify.info('Verifying %s for n=%d..%d...' % ((spec.claim_id,) + spec.n_range))
        results = CLAIMS[spec.claim_id].runner(spec, self._enumerator)
        failed = [result for result in results if not result.passed]
        if failed:
            self.notify.warning('Claim %s: %d of %d checks failed!' % (spec.claim_id, len(failed), len(results)))
        else:
            self.notify.info('Claim %s: all %d checks passed.' % (spec.claim_id, len(results)))

        return results

    def run_all(self, specs):
        results = []
        for spec in specs:
            results.extend(self.run(spec))

        return results

def default_specs(max_order=None):
    """
    The full registry at its default ranges. Claims that enumerate graphs
    stop at verify-max-order; a claim whose range starts above it is left out.
    """

    if max_order is None:
        max_order = config.get_int('verify-max-order', 9)

    specs = []
    for claim_id in types.CLAIM_IDS:
        entry = CLAIMS[claim_id]
        low, high = entry.default_range
        if entry.supported_range is not None and entry.supported_range[1] <= types.ENUMERATE_MAX_ORDER:
            high = min(high, max_order)
            if high < low:
                continue

        specs.append(ClaimSpec(claim_id, (low, high)))

    return specs
