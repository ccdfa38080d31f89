# Copyright 2024 The csmtutte developers
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

"""Checks deg(csm_k(M)) = (-1)^(d-k) t_(k+1),0 by three independent routes.

* geometric: stable intersection of csm_k(M) with a generic tropical linear
  space of complementary dimension, along a strictly decreasing direction;
* combinatorial: the signed sum of beta products over increasing flags with
  k + 1 steps;
* Tutte: the coefficient t_(k+1),0 of the activity generating function.

Extra random directions (random chambers) can be given as seeds: the
geometric degree must not depend on them.

Cones of flags whose beta product vanishes are intersected too: the points
they produce must carry no weight.
"""

from typing import Iterable, Optional, Sequence

from csmtutte.csm.cycles import (csm_cycle, null_flag_intersection,
                                 signed_flag_sum)
from csmtutte.invariants.flags import (beta_product, check_loopless,
                                       increasing_flags)
from csmtutte.invariants.tutte import tutte
from csmtutte.matroids.core import Matroid
from csmtutte.products.reports import VerificationReport, VerificationRow
from csmtutte.tropical.intersection import degree, intersect


def verify_degree(matroid: Matroid,
                  k: int,
                  seeds: Iterable[int] = (),
                  order: Optional[Sequence[int]] = None,
                  tutte_coefficient: Optional[int] = None) -> VerificationRow:
    """Computes deg(csm_k(M)) in three ways.

    Args:
        matroid: A loopless matroid on {0,...,n}.
        k: The index of the CSM cycle (0..d).
        seeds: Optional; seeds of extra random directions.
        order: Optional; the order used by the combinatorial route.
        tutte_coefficient: Optional; t_(k+1),0 if already known.
    """
    d = matroid.rank() - 1
    sign = (-1)**(d - k)
    cycle = csm_cycle(matroid, k)
    report = intersect(cycle.fan)
    null_report, null_weight = null_flag_intersection(matroid, cycle)
    if tutte_coefficient is None:
        tutte_coefficient = tutte(matroid)[(k + 1, 0)]
    connected_flags = sum(
        1 for flag in increasing_flags(matroid, k + 1, order)
        if beta_product(matroid, flag)
    )
    return VerificationRow(
        k=k,
        geometric=report.degree,
        combinatorial=signed_flag_sum(matroid, k, k + 1, order),
        tutte=sign * tutte_coefficient,
        points=len(report.points),
        increasing_flags=connected_flags,
        index_one=all(p.index == 1 for p in report.points),
        length_k_sum=signed_flag_sum(matroid, k, k, order),
        seeds={seed: degree(cycle.fan, seed, decreasing=False)
               for seed in seeds},
        null_points=len(null_report.points),
        null_weight=null_weight
    )


def verify_main_theorem(matroid: Matroid,
                        seeds: Iterable[int] = (),
                        order: Optional[Sequence[int]] = None
                        ) -> VerificationReport:
    """Verifies the CSM degree formula for every k = 0..d.

    Failures are reported (VerificationReport.passed), never raised.

    Raises:
        LoopPresentError: If the matroid has a loop.
    """
    check_loopless(matroid)
    seeds = tuple(seeds)
    polynomial = tutte(matroid)
    rows = [verify_degree(matroid, k, seeds, order, polynomial[(k + 1, 0)])
            for k in range(matroid.rank())]
    return VerificationReport(matroid.name, matroid.rank(), rows)
