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

"""Flags of flats, the beta expansion of T(M; x, 0) and broken circuits.

A proper flag of a matroid M on E is a chain of flats
emptyset = F_0 < F_1 < ... < F_k = E; its length is the number k of steps.
It is increasing (for a total order on E) when the minima of the successive
differences F_i - F_(i-1) increase. Summing over increasing proper flags the
product of the beta invariants of the step minors M|F_i/F_(i-1) weighted by
x^k gives back T(M; x, 0).

Example::

    m = uniform(2, 3)
    increasing_flags(m, 2)      # [FlagOfFlats(∅ ⊂ {0} ⊂ {0,1,2})]
    beta_expansion(m)           # Poly(x**2 + x, x, domain='ZZ')
    glv_count(m, 2)             # 1
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from sympy import Poly, ZZ

from csmtutte.invariants.tutte import (bases_with_activity, beta,
                                       positions_of, x)
from csmtutte.matroids.core import Matroid
from csmtutte.utils.exceptions import (KOutOfRangeError, LoopPresentError,
                                       NotProperFlagError)
from csmtutte.utils.subsets import (Subset, elements_of, mask_of, min_element,
                                    popcount, render_subset)


@dataclass
class FlagOfFlats:
    """A strictly increasing chain of subsets starting at the empty set.

    Attributes:
        flats: The chain (F_0, ..., F_k), as bitmasks.
    """
    __slots__ = ('flats',)
    flats: Tuple[Subset, ...]

    def __hash__(self) -> int:
        return hash(self.flats)

    @property
    def length(self) -> int:
        """Returns the number of steps k."""
        return len(self.flats) - 1

    @property
    def intermediate(self) -> Tuple[Subset, ...]:
        """Returns the flats F_1, ..., F_(k-1)."""
        return self.flats[1:-1]

    @property
    def deltas(self) -> List[Subset]:
        """Returns the differences F_i - F_(i-1), for i = 1..k."""
        return [upper & ~lower
                for lower, upper in zip(self.flats, self.flats[1:])]

    def is_increasing(self, order: Optional[Sequence[int]] = None) -> bool:
        """Checks that min(delta_1) < ... < min(delta_k) for an order."""
        position = _positions(order)
        minima = [_position_of(min_element(delta, position), position)
                  for delta in self.deltas]
        return all(a < b for a, b in zip(minima, minima[1:]))

    def to_list(self) -> List[List[int]]:
        return [elements_of(flat) for flat in self.flats]

    @classmethod
    def from_list(cls, flats: Sequence[Sequence[int]]) -> 'FlagOfFlats':
        return cls(tuple(mask_of(flat) for flat in flats))

    def render(self) -> str:
        """Renders the flag as '∅ ⊂ {0} ⊂ {0,1,2}'."""
        return ' ⊂ '.join(render_subset(flat) for flat in self.flats)

    def __repr__(self) -> str:
        return f'FlagOfFlats({self.render()})'


def _positions(order):
    if order is None:
        return None
    return {e: pos for pos, e in enumerate(order)}


def _position_of(e: int, position) -> int:
    return e if position is None else position[e]


def check_loopless(matroid: Matroid) -> None:
    """Raises LoopPresentError if the matroid has a loop."""
    if loops := matroid.loops():
        msg = (f'{matroid!r} has loops {elements_of(loops)}, a loopless '
               'matroid is required')
        raise LoopPresentError(msg)


def check_flag(matroid: Matroid, flag: FlagOfFlats) -> None:
    """Checks that a flag is a proper flag of flats of a matroid.

    Raises:
        NotProperFlagError: If the chain does not start at the empty set, end
            at the ground set, increase strictly, or contains a non-flat.
    """
    flats = flag.flats
    if not flats or flats[0] != 0 or flats[-1] != matroid.ground:
        msg = f'{flag.render()} does not go from ∅ to the ground set'
        raise NotProperFlagError(msg)
    for lower, upper in zip(flats, flats[1:]):
        if lower == upper or lower & ~upper:
            msg = f'{flag.render()} is not strictly increasing'
            raise NotProperFlagError(msg)
    if non_flats := [f for f in flats if not matroid.is_flat(f)]:
        msg = (f'{", ".join(render_subset(f) for f in non_flats)} are not '
               f'flats of {matroid!r}')
        raise NotProperFlagError(msg)


def _check_length(matroid: Matroid, k: int, lowest: int = 0) -> None:
    if not lowest <= k <= matroid.rank():
        msg = (f'flag lengths of {matroid!r} range from {lowest} to '
               f'{matroid.rank()} (got {k})')
        raise KOutOfRangeError(msg)


def _flags(matroid: Matroid,
           k: int,
           increasing: bool,
           order: Optional[Sequence[int]]) -> List[FlagOfFlats]:
    """Depth-first enumeration of the proper flags of length k."""
    position = positions_of(matroid, order)
    full_rank = matroid.rank()
    ground = matroid.ground
    flags = []

    def extend(chain, rank, last_min, steps):
        if steps == 1:
            delta = ground & ~chain[-1]
            if delta and (not increasing or _position_of(
                    min_element(delta, position), position) > last_min):
                flags.append(FlagOfFlats(tuple(chain) + (ground,)))
            return
        for next_rank in range(rank + 1, full_rank - steps + 2):
            for flat in matroid.flats(next_rank):
                if chain[-1] & ~flat or flat == ground:
                    continue
                delta_min = _position_of(
                    min_element(flat & ~chain[-1], position), position)
                if increasing and delta_min <= last_min:
                    continue
                extend(chain + [flat], next_rank, delta_min, steps - 1)

    if k == 0:
        if ground == 0:
            flags.append(FlagOfFlats((0,)))
    else:
        extend([0], 0, -1, k)
    return flags


def proper_flags(matroid: Matroid, k: int) -> List[FlagOfFlats]:
    """Returns the proper flags of flats of length k of a loopless matroid.

    Raises:
        LoopPresentError: If the matroid has a loop.
        KOutOfRangeError: If k is not in 0..rank.
    """
    check_loopless(matroid)
    _check_length(matroid, k)
    return _flags(matroid, k, False, None)


def increasing_flags(matroid: Matroid,
                     k: int,
                     order: Optional[Sequence[int]] = None
                     ) -> List[FlagOfFlats]:
    """Returns the increasing proper flags of length k.

    Args:
        matroid: A loopless matroid.
        k: The length of the flags.
        order: Optional; the total order (natural order if None).

    Raises:
        LoopPresentError: If the matroid has a loop.
        KOutOfRangeError: If k is not in 0..rank.
    """
    check_loopless(matroid)
    _check_length(matroid, k)
    return _flags(matroid, k, True, order)


def step_minors(matroid: Matroid, flag: FlagOfFlats) -> List[Matroid]:
    """Returns the minors M|F_i/F_(i-1), for i = 1..k."""
    return [matroid.minor_interval(lower, upper)
            for lower, upper in zip(flag.flats, flag.flats[1:])]


def beta_product(matroid: Matroid,
                 flag: FlagOfFlats,
                 invariant: Callable[[Matroid], int] = beta) -> int:
    """Returns the product of the beta invariants of the step minors.

    Args:
        matroid: A loopless matroid.
        flag: A proper flag of flats of matroid.
        invariant: Optional; the function computing beta (from basis
            activities by default).
    """
    result = 1
    for minor in step_minors(matroid, flag):
        result *= invariant(minor)
        if result == 0:
            break
    return result


def beta_expansion(matroid: Matroid,
                   order: Optional[Sequence[int]] = None) -> Poly:
    """Returns sum over increasing proper flags of beta_product * x^length.

    Raises:
        LoopPresentError: If the matroid has a loop.
    """
    check_loopless(matroid)
    terms = {}
    for k in range(1, matroid.rank() + 1):
        if c := sum(beta_product(matroid, flag)
                    for flag in _flags(matroid, k, True, order)):
            terms[(k,)] = c
    if not terms:
        return Poly(0, x, domain=ZZ)
    return Poly.from_dict(terms, x, domain=ZZ)


@dataclass
class GLVWitness:
    """An increasing flag along with one basis of each step minor.

    Each basis has internal activity 1 and external activity 0 in its minor.

    Attributes:
        flag: The increasing proper flag.
        bases: The bases B_1, ..., B_k (with global labels).
    """
    __slots__ = ('flag', 'bases')
    flag: FlagOfFlats
    bases: Tuple[Subset, ...]


def glv_witnesses(matroid: Matroid,
                  k: int,
                  order: Optional[Sequence[int]] = None
                  ) -> Iterator[GLVWitness]:
    """Yields the pairs (flag, bases) counted by t_k0.

    Step minors keep the global labels, hence the global order.

    Raises:
        LoopPresentError: If the matroid has a loop.
        KOutOfRangeError: If k is not in 1..rank.
    """
    check_loopless(matroid)
    _check_length(matroid, k, lowest=1)
    for flag in _flags(matroid, k, True, order):
        strata = [sorted(bases_with_activity(minor, 1, 0, order))
                  for minor in step_minors(matroid, flag)]
        for bases in product(*strata):
            yield GLVWitness(flag, bases)


def glv_count(matroid: Matroid,
              k: int,
              order: Optional[Sequence[int]] = None) -> int:
    """Returns the number of GLV witnesses of length k (equal to t_k0)."""
    return sum(1 for _ in glv_witnesses(matroid, k, order))


def broken_circuits(matroid: Matroid,
                    order: Optional[Sequence[int]] = None) -> List[Subset]:
    """Returns the circuits deprived of their minimal element."""
    position = positions_of(matroid, order)
    return sorted({circuit & ~(1 << min_element(circuit, position))
                   for circuit in matroid.circuits()})


def _nbc_faces(matroid: Matroid, order) -> Iterator[Subset]:
    broken = broken_circuits(matroid, order)
    for size in range(matroid.rank() + 1):
        for face in combinations(matroid.elements, size):
            mask = mask_of(face)
            if not any(bc & ~mask == 0 for bc in broken):
                yield mask


def f_vector(matroid: Matroid,
             order: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """Returns the face counts (f_0, ..., f_(d+1)) of the nbc complex.

    Raises:
        LoopPresentError: If the matroid has a loop.
    """
    check_loopless(matroid)
    counts = [0] * (matroid.rank() + 1)
    for face in _nbc_faces(matroid, order):
        counts[popcount(face)] += 1
    return tuple(counts)


def reduced_f_vector(matroid: Matroid,
                     order: Optional[Sequence[int]] = None
                     ) -> Tuple[int, ...]:
    """Returns the face counts of the reduced broken circuit complex.

    The reduced complex keeps the faces avoiding the minimal element; its
    face counts are, up to sign, the coefficients of the reduced
    characteristic polynomial.

    Raises:
        LoopPresentError: If the matroid has a loop.
    """
    check_loopless(matroid)
    position = positions_of(matroid, order)
    first = 1 << min_element(matroid.ground, position)
    counts = [0] * matroid.rank()
    for face in _nbc_faces(matroid, order):
        if not face & first:
            counts[popcount(face)] += 1
    return tuple(counts)


def broken_circuit_h_vector(matroid: Matroid,
                            order: Optional[Sequence[int]] = None
                            ) -> Tuple[int, ...]:
    """Returns the h-vector (h_0, ..., h_(d+1)) of the broken circuit complex.

    h_k = sum over i <= k of (-1)^(k-i) C(d+1-i, k-i) f_i; for a loopless
    matroid, h_i = t_(d+1-i),0.

    Raises:
        LoopPresentError: If the matroid has a loop.
    """
    f = f_vector(matroid, order)
    delta = len(f) - 1
    return tuple(
        sum((-1)**(k - i) * comb(delta - i, k - i) * f[i]
            for i in range(k + 1))
        for k in range(delta + 1)
    )

