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

"""Stable intersection of fans of complementary dimensions, and degrees.

The stable intersection of two fans T and T' with dim T + dim T' = n is the
limit of |T| and |T'| + v as a generic v goes to 0. For a given generic v,
the pair of maximal cones (sigma, sigma') contributes a point iff the
system sum_i a_i r_i = v + sum_j b_j s_j has a solution with all a_i and b_j
positive; the point then carries c(sigma) c'(sigma') [N : N_sigma + N_sigma'].
Genericity is certified exactly: a vanishing coefficient means v lies on a
wall, and the whole computation is retried with a fresh v.

Example::

    fan = bergman_fan(uniform(2, 3))
    report = intersect(fan, seed=0)
    report.degree       # 1
"""

import sys
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from tqdm import tqdm

from csmtutte.matroids.generators import uniform
from csmtutte.products.reports import IntersectionPoint, IntersectionReport
from csmtutte.tropical.fans import (QuotientVector, Ray, WeightedFan,
                                   bergman_fan, canonical)
from csmtutte.utils.config import (cache_config, degree_config,
                                   perturbation_config)
from csmtutte.utils.exceptions import (DegenerateDirectionError,
                                       DimensionMismatchError,
                                       RankDeficientError, UnstableDegreeError)
from csmtutte.utils.linalg import integer_det, square_solve

# pylint: disable=invalid-name
# Ok for a custom type.
Seed = Union[None, int, np.random.Generator]


def lattice_index(basis_a: Sequence[Ray], basis_b: Sequence[Ray]) -> int:
    """Returns [N : N_a + N_b] for lattice bases of saturated sublattices.

    Raises:
        DimensionMismatchError: If the bases do not add up to n vectors.
        RankDeficientError: If the vectors are linearly dependent.
    """
    vectors = list(basis_a) + list(basis_b)
    n = len(vectors[0]) if vectors else 0
    if any(len(v) != n for v in vectors) or len(vectors) != n:
        msg = f'{len(vectors)} vectors cannot form a basis of Q^{n}'
        raise DimensionMismatchError(msg)
    det = integer_det(vectors)
    if det == 0:
        raise RankDeficientError('the two bases are not transverse')
    return abs(det)


def stable_intersection_points(fan: WeightedFan,
                               other: WeightedFan,
                               direction: QuotientVector
                               ) -> List[IntersectionPoint]:
    """Returns the points of |fan| and |other| + direction, with multiplicity.

    Args:
        fan: A fan of dimension k.
        other: A fan of dimension n - k.
        direction: A generic rational vector v.

    Raises:
        DimensionMismatchError: If dimensions are not complementary.
        DegenerateDirectionError: If v is not generic.
    """
    n = fan.ambient
    if other.ambient != n or len(direction) != n or fan.dim + other.dim != n:
        msg = (f'cannot intersect fans of dimensions {fan.dim} and '
               f'{other.dim} in N = Z^{n} along a direction of length '
               f'{len(direction)}')
        raise DimensionMismatchError(msg)
    direction = [Fraction(c) for c in direction]
    scale = reduce(lambda a, b: a * b // gcd(a, b),
                   (c.denominator for c in direction), 1)
    rhs = [int(c * scale) for c in direction]
    points = []
    for key, weight in sorted(fan.cones.items()):
        for other_key, other_weight in sorted(other.cones.items()):
            columns = list(key) + [tuple(-c for c in s) for s in other_key]
            matrix = [[col[i] for col in columns] for i in range(n)]
            det, solution = square_solve(matrix, rhs)
            if det == 0:
                continue
            if any(c == 0 for c in solution):
                msg = (f'direction {[str(c) for c in direction]} is not '
                       f'generic for cones {key} and {other_key}')
                raise DegenerateDirectionError(msg)
            if all(c > 0 for c in solution):
                point = tuple(
                    sum((solution[i] * ray[j] for i, ray in enumerate(key)),
                        Fraction(0)) / scale
                    for j in range(n)
                )
                points.append(IntersectionPoint(
                    point, weight * other_weight * abs(det), abs(det),
                    (key, other_key)
                ))
    return points


@lru_cache(maxsize=cache_config['max_linear_spaces'])
def _linear_space_cones(n: int, k: int) -> Tuple[Tuple[tuple, int], ...]:
    # Cones of flag fans are unimodular, so they are not re-checked here.
    fan = bergman_fan(uniform(n - k + 1, n + 1), validate=False)
    return tuple(sorted(fan.cones.items()))


def generic_linear_space(n: int, k: int) -> WeightedFan:
    """Returns the Bergman fan of U(n - k + 1, n + 1), of dimension n - k.

    Each call returns a fresh fan; only its cones are memoized.

    Raises:
        RankOutOfRangeError: If not 0 <= k <= n.
    """
    return WeightedFan(n, n - k, dict(_linear_space_cones(n, k)))


def perturbation(n: int,
                 seed: Seed = None,
                 decreasing: bool = True) -> QuotientVector:
    """Returns a random direction v in N (canonical coordinates).

    The lift of v is v_e = p_e * D + rho_e, where D is the configured scale,
    the rho_e are distinct random fractions of (0, 1) and p is n + 1 - e (a
    strictly decreasing lift) or a random permutation of 1..n+1 (a random
    chamber).

    Args:
        n: The dimension of N.
        seed: Optional; a seed or a numpy Generator.
        decreasing: Optional; whether v_0 > v_1 > ... > v_n.
    """
    rng = np.random.default_rng(seed)
    resolution = perturbation_config['jitter_resolution']
    scale = perturbation_config['scale']
    jitter = rng.choice(resolution - 1, size=n + 1, replace=False) + 1
    if decreasing:
        heights = range(n + 1, 0, -1)
    else:
        heights = rng.permutation(n + 1) + 1
    lift = [int(h) * scale + Fraction(int(j), resolution)
            for h, j in zip(heights, jitter)]
    return canonical(lift)


def intersect(fan: WeightedFan,
              seed: Seed = None,
              decreasing: bool = True) -> IntersectionReport:
    """Intersects a fan with a generic linear space of complementary dimension.

    Degenerate directions are replaced by fresh ones drawn from the same
    random generator, at most max_retries times.

    Args:
        fan: A fan.
        seed: Optional; a seed (config default if None) or a Generator.
        decreasing: Optional; see perturbation.

    Raises:
        DegenerateDirectionError: If no generic direction was found.
    """
    rng = np.random.default_rng(
        perturbation_config['default_seed'] if seed is None else seed
    )
    linear_space = generic_linear_space(fan.ambient, fan.dim)
    retries = perturbation_config['max_retries']
    for attempt in range(retries + 1):
        direction = perturbation(fan.ambient, rng, decreasing)
        try:
            points = stable_intersection_points(fan, linear_space, direction)
        except DegenerateDirectionError as degenerate:
            tqdm.write(f'attempt {attempt + 1}/{retries + 1}: {degenerate}',
                       file=sys.stderr)
        else:
            return IntersectionReport(points, direction)
    msg = f'no generic direction found in {retries + 1} attempts'
    raise DegenerateDirectionError(msg)


def degree(fan: WeightedFan,
           seed: Seed = None,
           decreasing: bool = True) -> int:
    """Returns the degree of a tropical cycle (sum of intersection weights).

    A single generic direction is used. degree_stability compares the
    degrees obtained for several directions.
    """
    return intersect(fan, seed, decreasing).degree


def degree_stability(fan: WeightedFan,
                     seeds: Optional[Iterable[int]] = None,
                     decreasing: bool = False) -> int:
    """Returns the degree of a fan, checked over several random directions.

    Args:
        fan: A tropical cycle.
        seeds: Optional; the seeds (0..stability_seeds-1 if None).
        decreasing: Optional; False draws directions in random chambers.

    Raises:
        UnstableDegreeError: If two directions give different degrees.
    """
    if seeds is None:
        seeds = range(degree_config['stability_seeds'])
    degrees = {seed: degree(fan, seed, decreasing) for seed in seeds}
    if len(set(degrees.values())) > 1:
        msg = f'degrees depend on the direction: {degrees}'
        raise UnstableDegreeError(msg)
    if not degrees:
        return degree(fan)
    return next(iter(degrees.values()))


def uniform_membership(point: QuotientVector, rank: int) -> bool:
    """Checks whether a point lies in the Bergman fan of U(rank, n + 1).

    The lift of the point with minimum 0 must have at most rank - 1 nonzero
    coordinates.
    """
    lift = (0,) + tuple(point)
    lowest = min(lift)
    return sum(1 for u in lift if u != lowest) <= rank - 1
