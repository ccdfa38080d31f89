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

"""Chern-Schwartz-MacPherson cycles of loopless matroids.

The k-th CSM cycle of a loopless matroid M of rank d + 1 is supported on the
k-skeleton of the Bergman fan: its maximal cones are the cones of the proper
flags with k + 1 steps, and the cone of a flag F carries the weight
(-1)^(d-k) times the product of the beta invariants of the step minors
M|F_(i+1)/F_i, computed from rank functions. Cones of weight zero (some step
minor is disconnected) are dropped from the fan and kept aside in
CsmCycle.null_flags; null_flag_intersection checks that they carry no
intersection weight.

Example::

    cycle = csm_cycle(uniform(2, 3), 0)
    cycle.fan.cones      # {(): -1}
    csm_degree_geometric(uniform(2, 3), 0)     # -1
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from csmtutte.invariants.flags import (FlagOfFlats, beta_product,
                                       check_loopless, increasing_flags,
                                       proper_flags)
from csmtutte.invariants.tutte import beta_from_ranks
from csmtutte.matroids.core import Matroid
from csmtutte.tropical.fans import Cone, WeightedFan, cone_of_flag
from csmtutte.products.reports import IntersectionReport
from csmtutte.tropical.intersection import Seed, degree, intersect
from csmtutte.utils.exceptions import InputError, KOutOfRangeError


@dataclass
class CsmCycle:
    """The k-th CSM cycle of a matroid.

    Attributes:
        k: The dimension of the cycle.
        fan: The weighted fan.
        weights: The nonzero weight of each flag with k + 1 steps.
        null_flags: The flags with k + 1 steps of weight zero.
    """
    __slots__ = ('k', 'fan', 'weights', 'null_flags')
    k: int
    fan: WeightedFan
    weights: Dict[FlagOfFlats, int]
    null_flags: List[FlagOfFlats]


def _check_k(matroid: Matroid, k: int) -> int:
    """Returns the sign (-1)^(d-k) after checking that 0 <= k <= d."""
    check_loopless(matroid)
    d = matroid.rank() - 1
    if not 0 <= k <= d:
        msg = f'k must lie in 0..{d} for {matroid!r} (got {k})'
        raise KOutOfRangeError(msg)
    return (-1)**(d - k)


def csm_cycle(matroid: Matroid, k: int) -> CsmCycle:
    """Returns the k-th CSM cycle of a loopless matroid on {0,...,n}.

    Raises:
        LoopPresentError: If the matroid has a loop.
        KOutOfRangeError: If k is not in 0..d.
    """
    sign = _check_k(matroid, k)
    if not matroid.is_standard:
        raise InputError('CSM cycles need a ground set {0,...,n}')
    weights = {}
    null_flags = []
    for flag in proper_flags(matroid, k + 1):
        if weight := sign * beta_product(matroid, flag, beta_from_ranks):
            weights[flag] = weight
        else:
            null_flags.append(flag)
    fan = WeightedFan.from_cones(
        matroid.size - 1, k,
        ((cone_of_flag(flag), w) for flag, w in weights.items())
    )
    return CsmCycle(k, fan, weights, null_flags)


def null_flag_intersection(
        matroid: Matroid,
        cycle: CsmCycle,
        seed: Seed = None) -> Tuple[IntersectionReport, int]:
    """Intersects the cones of the null flags with a generic linear space.

    Each null flag is given weight 1, so that every intersection point it
    produces is listed. The second value is the sum, over these points, of
    the lattice index times the beta product of the flag (recomputed from
    basis activities); it is 0 when null flags carry no intersection weight.
    """
    ambient = matroid.size - 1
    cones = {cone_of_flag(flag).key: flag for flag in cycle.null_flags}
    fan = WeightedFan.from_cones(ambient, cycle.k,
                                 ((Cone(ambient, key), 1) for key in cones))
    report = intersect(fan, seed)
    weight = sum(beta_product(matroid, cones[point.cones[0]]) * point.index
                 for point in report.points)
    return report, weight


def csm_degree_geometric(matroid: Matroid,
                         k: int,
                         seed: Seed = None,
                         decreasing: bool = True) -> int:
    """Returns deg(csm_k(M)) by stable intersection with a linear space."""
    return degree(csm_cycle(matroid, k).fan, seed, decreasing)


def signed_flag_sum(matroid: Matroid,
                    k: int,
                    steps: int,
                    order: Optional[Sequence[int]] = None) -> int:
    """Returns (-1)^(d-k) sum of beta_product over increasing flags.

    Only flags with the given number of steps are summed over.
    """
    sign = _check_k(matroid, k)
    if not 1 <= steps <= matroid.rank():
        return 0
    return sign * sum(beta_product(matroid, flag)
                      for flag in increasing_flags(matroid, steps, order))


def csm_degree_combinatorial(matroid: Matroid,
                             k: int,
                             order: Optional[Sequence[int]] = None) -> int:
    """Returns deg(csm_k(M)) from increasing flags with k + 1 steps.

    This closed form involves no geometry at all.

    Raises:
        LoopPresentError: If the matroid has a loop.
        KOutOfRangeError: If k is not in 0..d.
    """
    return signed_flag_sum(matroid, k, k + 1, order)
