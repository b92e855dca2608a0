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

FAMILY_CN = 'Cn'
FAMILY_CN_STAR = 'CnStar'
FAMILY_XN = 'Xn'
FAMILY_XN_TILDE = 'XnTilde'
FAMILY_THETA = 'Theta'
FAMILY_YN = 'Yn'
FAMILY_YN_TILDE = 'YnTilde'
FAMILY_Z1 = 'Z1'
FAMILY_Z2 = 'Z2'
FAMILY_Z3 = 'Z3'
FAMILY_Z4 = 'Z4'
FAMILY_Z5 = 'Z5'
FAMILY_Z6 = 'Z6'

FAMILY_TAGS = (
    FAMILY_CN,
    FAMILY_CN_STAR,
    FAMILY_XN,
    FAMILY_XN_TILDE,
    FAMILY_THETA,
    FAMILY_YN,
    FAMILY_YN_TILDE,
    FAMILY_Z1,
    FAMILY_Z2,
    FAMILY_Z3,
    FAMILY_Z4,
    FAMILY_Z5,
    FAMILY_Z6,
)

FAMILY_MIN_ORDER = {
    FAMILY_CN: 3,
    FAMILY_CN_STAR: 4,
    FAMILY_XN: 3,
    FAMILY_XN_TILDE: 4,
    FAMILY_THETA: 4,
    FAMILY_YN: 4,
    FAMILY_YN_TILDE: 5,
    FAMILY_Z1: 4,
    FAMILY_Z2: 5,
    FAMILY_Z3: 6,
    FAMILY_Z4: 5,
    FAMILY_Z5: 5,
    FAMILY_Z6: 6,
}

TRICYCLIC_FAMILIES = (
    FAMILY_Z1,
    FAMILY_Z2,
    FAMILY_Z3,
    FAMILY_Z4,
    FAMILY_Z5,
    FAMILY_Z6,
)

# families with a closed form characteristic polynomial in print
PUBLISHED_FAMILIES = (
    FAMILY_XN,
    FAMILY_XN_TILDE,
    FAMILY_YN,
    FAMILY_YN_TILDE,
) + TRICYCLIC_FAMILIES

GRAPH6_MAX_ORDER = 62
GRAPH6_OFFSET = 63

ENUMERATE_MIN_ORDER = 3
ENUMERATE_MAX_ORDER = 10
ENUMERATE_CYCLOMATIC = (1, 2, 3)

STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'

CLAIM_THM_23_MAX = 'thm-2.3-max'
CLAIM_THM_25_MIN = 'thm-2.5-min'
CLAIM_THM_26_MIN_STRONG = 'thm-2.6-min-strong'
CLAIM_THM_32_MAX = 'thm-3.2-max'
CLAIM_THM_42_MAX = 'thm-4.2-max'
CLAIM_LEM_21 = 'lem-2.1'
CLAIM_LEM_24 = 'lem-2.4'
CLAIM_LEM_31 = 'lem-3.1'
CLAIM_LEM_41 = 'lem-4.1'
CLAIM_ROOT_CLAIMS = 'root-claims'
CLAIM_GAP_ASYMPTOTIC = 'gap-asymptotic'
CLAIM_CHARPOLY_IDENTITIES = 'charpoly-identities'
CLAIM_DIFF_FORMULAS = 'diff-formulas'

CLAIM_IDS = (
    CLAIM_THM_23_MAX,
    CLAIM_THM_25_MIN,
    CLAIM_THM_26_MIN_STRONG,
    CLAIM_THM_32_MAX,
    CLAIM_THM_42_MAX,
    CLAIM_LEM_21,
    CLAIM_LEM_24,
    CLAIM_LEM_31,
    CLAIM_LEM_41,
    CLAIM_ROOT_CLAIMS,
    CLAIM_GAP_ASYMPTOTIC,
    CLAIM_CHARPOLY_IDENTITIES,
    CLAIM_DIFF_FORMULAS,
)

JOBS_ENVIRONMENT_VARIABLE = 'RESOLVENT_LAB_JOBS'

# published closed forms that no graph realizes, checked against their
# recomputed counterparts instead
UNREALIZABLE_CLOSED_FORMS = (
    FAMILY_Z5,
    FAMILY_Z6,
)
