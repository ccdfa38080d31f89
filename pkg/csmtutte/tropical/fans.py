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

"""Weighted rational fans in N = Z^(n+1) / Z(1,...,1), and Bergman fans.

Quotient vectors are stored in canonical coordinates: a lift
(u_0, ..., u_n) is mapped to (u_1 - u_0, ..., u_n - u_0), which fixes an
isomorphism N = Z^n. The image of the indicator vector e_F of a subset F is
thus ((e in F) - (0 in F)) for e = 1..n.

Fans store their maximal cones only (simplicial cones given by rays forming
a lattice basis of their span), each with a nonzero integer weight. Ridges
are recovered on demand by matching facets of maximal cones, which is exact
for the simplicial flag fans handled here.
"""

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from csmtutte.invariants.flags import FlagOfFlats, check_flag, proper_flags
from csmtutte.matroids.core import Matroid
from csmtutte.products.reports import BalancingReport, RidgeFailure
from csmtutte.utils.config import validation_config
from csmtutte.utils.exceptions import (DimensionMismatchError, InputError,
                                       NotProperFlagError, RankDeficientError,
                                       SaturationError)
from csmtutte.utils.linalg import is_saturated, rational_rank, rational_solve
from csmtutte.utils.subsets import Subset, elements_of, popcount

# pylint: disable=invalid-name
# Ok for a custom type.
P = Union[str, Path]
Ray = Tuple[int, ...]
QuotientVector = Tuple[Union[int, Fraction], ...]


def canonical(lift: Sequence[Union[int, Fraction]]) -> QuotientVector:
    """Returns the canonical coordinates of a lift in Z^(n+1) (or Q^(n+1))."""
    return tuple(u - lift[0] for u in lift[1:])


def indicator_image(subset: Subset, ambient: int) -> Ray:
    """Returns the image of e_subset in N, for a ground set {0,...,ambient}."""
    first = subset & 1
    return tuple((subset >> e & 1) - first for e in range(1, ambient + 1))


@dataclass
class Cone:
    """A simplicial rational cone of N.

    Attributes:
        ambient: The dimension n of N.
        rays: Its rays, forming a lattice basis of the sublattice they span.
    """
    __slots__ = ('ambient', 'rays')
    ambient: int
    rays: Tuple[Ray, ...]

    @property
    def dim(self) -> int:
        return len(self.rays)

    @property
    def key(self) -> Tuple[Ray, ...]:
        """Returns the sorted rays, identifying the cone."""
        return tuple(sorted(self.rays))

    def check(self) -> None:
        """Checks that rays are independent and generate a saturated lattice.

        Raises:
            DimensionMismatchError: If a ray does not live in N.
            RankDeficientError: If rays are linearly dependent.
            SaturationError: If the lattice spanned by rays is not saturated.
        """
        if any(len(ray) != self.ambient for ray in self.rays):
            msg = f'rays of {self} must have {self.ambient} coordinates'
            raise DimensionMismatchError(msg)
        if rational_rank(self.rays) != len(self.rays):
            raise RankDeficientError(f'rays of {self} are dependent')
        if not is_saturated(self.rays):
            raise SaturationError(f'rays of {self} span a non-saturated '
                                  'sublattice')

    def contains(self, point: QuotientVector) -> bool:
        """Checks exactly whether a rational point lies in the cone."""
        if not self.rays:
            return all(c == 0 for c in point)
        coefficients = rational_solve(self.rays, point)
        return coefficients is not None and all(c >= 0 for c in coefficients)


def cone_of_flag(flag: FlagOfFlats,
                 matroid: Optional[Matroid] = None,
                 validate: Optional[bool] = None) -> Cone:
    """Returns the cone spanned by the images of e_F_1, ..., e_F_(k-1).

    The last flat F_k is the ground set, whose indicator vanishes in N.

    Args:
        flag: A proper flag on a ground set {0,...,n}.
        matroid: Optional; if given, flats are checked to be flats of it.
        validate: Optional; whether to check saturation (default taken from
            config.yaml).

    Raises:
        NotProperFlagError: If the flag is not a proper flag.
    """
    ground = flag.flats[-1] if flag.flats else 0
    if matroid is not None:
        check_flag(matroid, flag)
    elif (ground == 0 or ground & (ground + 1) or flag.flats[0] != 0
          or any(lower == upper or lower & ~upper
                 for lower, upper in zip(flag.flats, flag.flats[1:]))):
        msg = f'{flag.render()} is not a proper flag on some {{0,...,n}}'
        raise NotProperFlagError(msg)
    ambient = popcount(ground) - 1
    cone = Cone(ambient,
                tuple(indicator_image(f, ambient) for f in flag.intermediate))
    if validate is None:
        validate = validation_config['cone_saturation']
    if validate:
        cone.check()
    return cone


@dataclass
class WeightedFan:
    """A pure-dimensional weighted fan given by its maximal cones.

    Attributes:
        ambient: The dimension n of N.
        dim: The dimension of every maximal cone.
        cones: A dict sorted rays -> nonzero weight.
    """
    __slots__ = ('ambient', 'dim', 'cones')
    ambient: int
    dim: int
    cones: Dict[Tuple[Ray, ...], int]

    @classmethod
    def from_cones(cls,
                   ambient: int,
                   dim: int,
                   weighted_cones: Iterable[Tuple[Cone, int]]
                   ) -> 'WeightedFan':
        """Builds a fan, adding up weights of repeated cones.

        Raises:
            DimensionMismatchError: If a cone has a wrong dimension.
        """
        weights = defaultdict(int)
        for cone, weight in weighted_cones:
            if cone.dim != dim or cone.ambient != ambient:
                msg = (f'cone {cone} does not fit a fan of dimension {dim} '
                       f'in N = Z^{ambient}')
                raise DimensionMismatchError(msg)
            weights[cone.key] += weight
        return cls(ambient, dim,
                   {key: w for key, w in sorted(weights.items()) if w != 0})

    def maximal_cones(self) -> List[Tuple[Cone, int]]:
        """Returns (cone, weight) pairs, sorted by rays."""
        return [(Cone(self.ambient, key), w)
                for key, w in sorted(self.cones.items())]

    def ridges(self) -> Dict[Tuple[Ray, ...], List[Tuple[Ray, int]]]:
        """Returns the ridges, each with the (n_sigma, weight) of its cones.

        n_sigma is the ray of the maximal cone sigma not in the ridge.
        """
        ridges = defaultdict(list)
        for key, weight in sorted(self.cones.items()):
            for i, ray in enumerate(key):
                ridges[key[:i] + key[i + 1:]].append((ray, weight))
        return dict(ridges)

    def skeleton(self, k: int) -> List[Tuple[Ray, ...]]:
        """Returns the sorted k-dimensional faces of the maximal cones."""
        faces = set()
        for key in self.cones:
            for face in _subsequences(key, k):
                faces.add(face)
        return sorted(faces)

    def contains(self, point: QuotientVector) -> bool:
        """Checks whether a rational point lies in the support of the fan."""
        return any(cone.contains(point) for cone, _ in self.maximal_cones())

    def to_dict(self) -> dict:
        return {
            'ambient': self.ambient,
            'dim': self.dim,
            'cones': [{'rays': [list(ray) for ray in key], 'weight': w}
                      for key, w in sorted(self.cones.items())]
        }

    @classmethod
    def from_dict(cls, doc: dict) -> 'WeightedFan':
        """Builds and checks a fan from a JSON fan document.

        Raises:
            InputError: If the document is malformed.
        """
        try:
            ambient, dim = int(doc['ambient']), int(doc['dim'])
            cones = [(Cone(ambient, tuple(tuple(int(c) for c in ray)
                                          for ray in cone['rays'])),
                      int(cone['weight'])) for cone in doc['cones']]
        except (KeyError, TypeError, ValueError) as malformed:
            msg = ('a fan document is {"ambient": n, "dim": m, "cones": '
                   '[{"rays": [[...], ...], "weight": w}, ...]}')
            raise InputError(msg) from malformed
        for cone, _ in cones:
            cone.check()
        return cls.from_cones(ambient, dim, cones)

    def save(self, filename: P) -> None:
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, indent=1)

    @classmethod
    def from_file(cls, filename: P) -> 'WeightedFan':
        with open(filename, 'r') as f:
            return cls.from_dict(json.load(f))


def _subsequences(key, k):
    if k == 0:
        yield ()
        return
    for i in range(len(key) - k + 1):
        for rest in _subsequences(key[i + 1:], k - 1):
            yield (key[i],) + rest


def bergman_fan(matroid: Matroid,
                validate: Optional[bool] = None) -> WeightedFan:
    """Returns the Bergman fan of a loopless matroid on {0,...,n}.

    Its maximal cones are the cones of the complete flags of flats, all with
    weight 1; it has dimension rank - 1.

    Args:
        matroid: A loopless matroid on a standard ground set.
        validate: Optional; whether to check cones (see cone_of_flag).

    Raises:
        LoopPresentError: If the matroid has a loop.
        InputError: If the ground set is not {0,...,n}.
    """
    if not matroid.is_standard:
        msg = (f'Bergman fans need a ground set {{0,...,n}} (got '
               f'{elements_of(matroid.ground)})')
        raise InputError(msg)
    flags = proper_flags(matroid, matroid.rank())
    ambient = matroid.size - 1
    return WeightedFan.from_cones(
        ambient,
        matroid.rank() - 1,
        ((cone_of_flag(flag, validate=validate), 1) for flag in flags)
    )


def balancing_check(fan: WeightedFan) -> BalancingReport:
    """Checks the balancing condition at every ridge of a fan.

    At a ridge tau, the weighted sum of the n_sigma over the maximal cones
    sigma containing tau must lie in the linear span of tau. A fan of
    dimension 0 has no ridge and is balanced.
    """
    failures = []
    ridges = fan.ridges() if fan.dim > 0 else {}
    for ridge, adjacent in sorted(ridges.items()):
        total = [0] * fan.ambient
        for ray, weight in adjacent:
            total = [t + weight * r for t, r in zip(total, ray)]
        if rational_rank(list(ridge) + [total]) != len(ridge):
            failures.append(RidgeFailure(ridge, tuple(total)))
    return BalancingReport(fan.ambient, fan.dim, len(ridges), failures)
