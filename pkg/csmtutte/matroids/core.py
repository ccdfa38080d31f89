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

"""This module contains the Matroid class.

A Matroid is given by the explicit family of its bases, each basis being a
bitmask over the ground set (see csmtutte.utils.subsets). Everything else
(rank function, closure, flats, circuits, minors, duality, connectivity) is
derived from the bases and cached on demand. Matroids are immutable once
built, so every query is safe to run concurrently.

Elements keep their labels when taking minors: the minor M|F/G of a matroid
on {0,...,n} lives on F \\ G with the very same labels, so that comparisons
with respect to the total order of the ground set stay meaningful.

Example::

    m = from_bases(3, [[0, 1], [0, 2], [1, 2]], name='U23')
    m.rank(mask_of([0]))        # 1
    m.flats(1)                  # [1, 2, 4]
    m.minor_interval(1, 7)      # U(1,2) on {1, 2}
"""

import json
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Union

import networkx as nx

from csmtutte.utils.config import max_ground_size, validation_config
from csmtutte.utils.exceptions import (EmptyBasesError, ExchangeAxiomError,
                                       GroundSizeError, InputError,
                                       NotNestedError, RankOutOfRangeError,
                                       UnequalCardinalityError)
from csmtutte.utils.subsets import (Subset, SubsetLike, elements_of, mask_of,
                                    popcount)

# pylint: disable=invalid-name
# Ok for a custom type.
P = Union[str, Path]


class Matroid:
    """A matroid on a labelled ground set, described by its bases.

    Attributes:
        ground: The ground set (bitmask).
        bases: The bases (a frozenset of bitmasks).
        name: An optional name (used in reports).
    """
    __slots__ = ('_ground', '_bases', '_rank', '_name', '_rank_cache',
                 '_flats', '_circuits')

    def __init__(self,
                 ground: Subset,
                 bases: Iterable[Subset],
                 name: Optional[str] = None) -> None:
        """Inits a Matroid without any validation (see from_bases).

        Args:
            ground: The ground set (bitmask).
            bases: The bases (bitmasks included in ground).
            name: Optional; the name of the matroid.
        """
        self._ground = ground
        self._bases = frozenset(bases)
        self._rank = popcount(next(iter(self._bases)))
        self._name = name
        self._rank_cache: Dict[Subset, int] = {}
        self._flats: Optional[List[List[Subset]]] = None
        self._circuits: Optional[FrozenSet[Subset]] = None

    @classmethod
    def empty(cls) -> 'Matroid':
        """Returns the matroid on the empty ground set."""
        return cls(0, [0], 'empty')

    @property
    def ground(self) -> Subset:
        return self._ground

    @property
    def bases(self) -> FrozenSet[Subset]:
        return self._bases

    @property
    def name(self) -> Optional[str]:
        return self._name

    @property
    def elements(self) -> List[int]:
        """Returns the sorted list of elements of the ground set."""
        return elements_of(self._ground)

    @property
    def size(self) -> int:
        """Returns the number of elements of the ground set."""
        return popcount(self._ground)

    @property
    def is_standard(self) -> bool:
        """True if the ground set is {0, ..., size - 1}."""
        return self._ground == (1 << self.size) - 1

    def rank(self, subset: Optional[Subset] = None) -> int:
        """Returns the rank of a subset (or of the matroid if None)."""
        if subset is None:
            return self._rank
        rk = self._rank_cache.get(subset)
        if rk is None:
            rk = max(popcount(basis & subset) for basis in self._bases)
            self._rank_cache[subset] = rk
        return rk

    def closure(self, subset: Subset) -> Subset:
        """Returns the closure {e : rank(subset + e) = rank(subset)}."""
        rk = self.rank(subset)
        closed = subset
        for e in elements_of(self._ground & ~subset):
            if self.rank(subset | (1 << e)) == rk:
                closed |= 1 << e
        return closed

    def is_flat(self, subset: Subset) -> bool:
        return self.closure(subset) == subset

    def independent(self, subset: Subset) -> bool:
        return self.rank(subset) == popcount(subset)

    def is_basis(self, subset: Subset) -> bool:
        return subset in self._bases

    def flats(self, rank: Optional[int] = None) -> List[Subset]:
        """Returns the flats of the matroid, optionally those of a given rank.

        Flats are listed by increasing rank, then by increasing bitmask.
        """
        if self._flats is None:
            levels = [[self.closure(0)]]
            while levels[-1][0] != self._ground:
                next_level = set()
                for flat in levels[-1]:
                    for e in elements_of(self._ground & ~flat):
                        next_level.add(self.closure(flat | (1 << e)))
                levels.append(sorted(next_level))
            self._flats = levels
        if rank is None:
            return [flat for level in self._flats for flat in level]
        if 0 <= rank < len(self._flats):
            return list(self._flats[rank])
        return []

    def loops(self) -> Subset:
        """Returns the set of loops (elements in no basis)."""
        union = 0
        for basis in self._bases:
            union |= basis
        return self._ground & ~union

    def coloops(self) -> Subset:
        """Returns the set of coloops (elements in every basis)."""
        inter = self._ground
        for basis in self._bases:
            inter &= basis
        return inter

    def circuits(self) -> List[Subset]:
        """Returns the circuits (minimal dependent sets), sorted by bitmask.

        Every circuit is the fundamental circuit of some basis, hence they are
        read off the single-element swaps of the bases.
        """
        if self._circuits is None:
            circuits = set()
            for basis in self._bases:
                for e in elements_of(self._ground & ~basis):
                    circuit = 1 << e
                    for f in elements_of(basis):
                        if (basis | (1 << e)) & ~(1 << f) in self._bases:
                            circuit |= 1 << f
                    circuits.add(circuit)
            self._circuits = frozenset(circuits)
        return sorted(self._circuits)

    def cocircuits(self) -> List[Subset]:
        """Returns the cocircuits (circuits of the dual matroid)."""
        return self.dual().circuits()

    def components(self) -> List[Subset]:
        """Returns the connected components of the matroid.

        Two elements are in the same component iff they share a circuit.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self.elements)
        for circuit in self.circuits():
            elements = elements_of(circuit)
            graph.add_edges_from(zip(elements, elements[1:]))
        return sorted(mask_of(c) for c in nx.connected_components(graph))

    def is_connected(self) -> bool:
        """True if the matroid has no proper separator.

        The empty matroid and single-element matroids are connected.
        """
        return self.size <= 1 or len(self.components()) == 1

    def dual(self) -> 'Matroid':
        """Returns the dual matroid (bases are complements of bases)."""
        name = None if self._name is None else f'{self._name}*'
        return Matroid(self._ground,
                       (self._ground & ~basis for basis in self._bases),
                       name)

    def minor_interval(self, lower: Subset, upper: Subset) -> 'Matroid':
        """Returns the minor M|upper/lower, on upper minus lower.

        Its rank function is S -> rank(S + lower) - rank(lower); element
        labels are preserved. The empty matroid is returned if
        lower == upper, and a rank 0 matroid (all loops) if upper lies in the
        closure of lower.

        Args:
            lower: The contracted set.
            upper: The restriction set (must contain lower).

        Raises:
            NotNestedError: If lower is not included in upper, or upper not
                in the ground set.
        """
        if lower & ~upper or upper & ~self._ground:
            msg = (f'cannot build a minor from {elements_of(lower)} and '
                   f'{elements_of(upper)}: sets are not nested in the ground '
                   'set')
            raise NotNestedError(msg)
        ground = upper & ~lower
        if not ground:
            return Matroid.empty()
        if lower == 0 and upper == self._ground:
            return self
        rk_lower = self.rank(lower)
        rk_upper = self.rank(upper)
        bases = {basis & ground for basis in self._bases
                 if popcount(basis & lower) == rk_lower
                 and popcount(basis & upper) == rk_upper}
        return Matroid(ground, bases)

    def restrict(self, subset: Subset) -> 'Matroid':
        """Returns the restriction M|subset."""
        return self.minor_interval(0, subset)

    def contract(self, subset: Subset) -> 'Matroid':
        """Returns the contraction M/subset."""
        return self.minor_interval(subset, self._ground)

    def relabel(self, permutation: Sequence[int]) -> 'Matroid':
        """Returns the matroid obtained by renaming e into permutation[e]."""
        def image(mask):
            return mask_of(permutation[e] for e in elements_of(mask))

        return Matroid(image(self._ground),
                       (image(basis) for basis in self._bases),
                       self._name)

    def to_dict(self) -> dict:
        """Returns the JSON matroid document of this matroid."""
        if not self.is_standard:
            msg = 'only matroids on {0,...,n} can be serialized'
            raise InputError(msg)
        doc = {
            'ground_size': self.size,
            'bases': sorted(elements_of(basis) for basis in self._bases)
        }
        if self._name is not None:
            doc['name'] = self._name
        return doc

    def save(self, filename: P) -> None:
        """Writes the JSON matroid document of this matroid."""
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, indent=1)

    @classmethod
    def from_dict(cls, doc: dict) -> 'Matroid':
        """Builds a validated Matroid from a JSON matroid document."""
        try:
            ground_size = doc['ground_size']
            bases = doc['bases']
        except (KeyError, TypeError) as missing_key:
            msg = ('a matroid document needs both "ground_size" and "bases" '
                   'keys')
            raise InputError(msg) from missing_key
        try:
            return from_bases(ground_size, bases, name=doc.get('name'))
        except TypeError as malformed:
            msg = f'malformed matroid document ({malformed!r})'
            raise InputError(msg) from malformed

    @classmethod
    def from_file(cls, filename: P) -> 'Matroid':
        """Loads and validates a JSON matroid document."""
        with open(filename, 'r') as f:
            return cls.from_dict(json.load(f))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self._ground == other._ground and self._bases == other._bases

    def __hash__(self) -> int:
        return hash((self._ground, self._bases))

    def __repr__(self) -> str:
        name = '' if self._name is None else f'{self._name}, '
        return (f'Matroid({name}rank={self._rank}, '
                f'elements={self.elements}, bases={len(self._bases)})')


def check_ground_size(ground_size: int) -> None:
    """Raises GroundSizeError outside of 1..max_ground_size."""
    if not isinstance(ground_size, int) or isinstance(ground_size, bool):
        raise InputError(f'{ground_size!r} is not a number of elements')
    if not 1 <= ground_size <= max_ground_size:
        msg = (f'ground sets must have between 1 and {max_ground_size} '
               f'elements (got {ground_size})')
        raise GroundSizeError(msg)


def check_exchange_axiom(bases: FrozenSet[Subset]) -> None:
    """Checks the basis exchange axiom.

    For all bases B1, B2 and every e in B1 - B2, some f in B2 - B1 must make
    B1 - e + f a basis.

    Raises:
        ExchangeAxiomError: With the first witnessing (B1, B2, e) found.
    """
    for b1 in sorted(bases):
        for b2 in sorted(bases):
            if b1 == b2:
                continue
            candidates = elements_of(b2 & ~b1)
            for e in elements_of(b1 & ~b2):
                reduced = b1 & ~(1 << e)
                if not any(reduced | (1 << f) in bases for f in candidates):
                    msg = (f'basis exchange fails for B1={elements_of(b1)}, '
                           f'B2={elements_of(b2)} and e={e}')
                    raise ExchangeAxiomError(msg, (b1, b2, e))


def from_bases(ground_size: int,
               bases: Iterable[SubsetLike],
               name: Optional[str] = None,
               validate: Optional[bool] = None) -> Matroid:
    """Returns the validated matroid on {0,...,ground_size-1} with given bases.

    Args:
        ground_size: The number of elements (n + 1).
        bases: The bases, either as bitmasks or as iterables of elements.
        name: Optional; the name of the matroid.
        validate: Optional; whether to check the exchange axiom (default
            taken from config.yaml).

    Raises:
        GroundSizeError: If ground_size is not in 1..max_ground_size.
        EmptyBasesError: If no basis is given.
        UnequalCardinalityError: If bases do not share one cardinality.
        RankOutOfRangeError: If bases are empty sets (rank 0).
        ExchangeAxiomError: If the exchange axiom fails.
    """
    check_ground_size(ground_size)
    ground = (1 << ground_size) - 1
    masks = frozenset(mask_of(basis) for basis in bases)
    if not masks:
        raise EmptyBasesError('a matroid needs at least one basis')
    if any(mask & ~ground for mask in masks):
        msg = f'bases must be subsets of {{0,...,{ground_size - 1}}}'
        raise InputError(msg)
    sizes = {popcount(mask) for mask in masks}
    if len(sizes) != 1:
        msg = f'bases have several cardinalities: {sorted(sizes)}'
        raise UnequalCardinalityError(msg)
    if sizes == {0}:
        raise RankOutOfRangeError('matroids of rank 0 are not allowed')
    if validate is None:
        validate = validation_config['exchange_axiom']
    if validate:
        check_exchange_axiom(masks)
    return Matroid(ground, masks, name)

