#
# Copyright (c) 2026 The restricted-trace Contributors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Exact regularized traces and cocycle formulas for Toeplitz operators.

Scalars are Gaussian rationals; every value is exact. Structured results
(trace results, cocycle reports, delta-sum limits) are returned as plain
dictionaries in the same layout as the command-line JSON output.
"""

from ._core import (
    BandedOperator,
    DecompositionUnavailable,
    GaussianRational,
    NonAffineCount,
    ParseError,
    TrigPoly,
    UnboundedInnerSum,
    block,
    closed_form,
    commutator,
    deltasum,
    dense_truncate,
    entry,
    f1,
    f2,
    f3_decomposed,
    f3_direct,
    hs_norm_sq,
    j_op,
    mult_op,
    parse,
    projector,
    report,
    run_cli,
    trace_symmetric,
)

__all__ = [
    "BandedOperator",
    "DecompositionUnavailable",
    "GaussianRational",
    "NonAffineCount",
    "ParseError",
    "TrigPoly",
    "UnboundedInnerSum",
    "block",
    "closed_form",
    "commutator",
    "deltasum",
    "dense_truncate",
    "entry",
    "f1",
    "f2",
    "f3_decomposed",
    "f3_direct",
    "hs_norm_sq",
    "j_op",
    "mult_op",
    "parse",
    "projector",
    "report",
    "run_cli",
    "trace_symmetric",
]
