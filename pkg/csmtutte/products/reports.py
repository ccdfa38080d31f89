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

"""This module contains the reports produced by csmtutte.

Reports are plain dataclasses holding the outcome of a check (balancing,
stable intersection, verification of the CSM degree formula). Each of them
can be dumped to (and loaded from) a JSON document; verification reports can
also be turned into a pandas DataFrame, and saved as CSV.

Example::

    report = verify_main_theorem(uniform(2, 3))
    print(report.to_frame())
    report.save('U23.json')
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

import pandas as pd

from csmtutte.utils.exceptions import InputError

# pylint: disable=invalid-name
# Ok for a custom type.
P = Union[str, Path]


def _load(filename: P) -> dict:
    with open(filename, 'r') as f:
        return json.load(f)


def _dump(doc: dict, filename: P) -> None:
    with open(filename, 'w') as f:
        json.dump(doc, f, indent=1)


@dataclass
class RidgeFailure:
    """A ridge at which the balancing condition fails.

    Attributes:
        ridge: The rays of the ridge.
        residual: The weighted sum of the n_sigma, out of the ridge's span.
    """
    __slots__ = ('ridge', 'residual')
    ridge: Tuple[Tuple[int, ...], ...]
    residual: Tuple[int, ...]


@dataclass
class BalancingReport:
    """The outcome of a balancing check.

    Attributes:
        ambient: The dimension n of N.
        dim: The dimension of the fan.
        ridges: The number of ridges checked.
        failures: The ridges where balancing fails.
        label: A description of the fan checked.
    """
    ambient: int
    dim: int
    ridges: int
    failures: List[RidgeFailure]
    label: Optional[str] = None

    @property
    def balanced(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            'label': self.label,
            'ambient': self.ambient,
            'dim': self.dim,
            'ridges': self.ridges,
            'balanced': self.balanced,
            'failures': [{'ridge': [list(ray) for ray in f.ridge],
                          'residual': list(f.residual)}
                         for f in self.failures]
        }

    @classmethod
    def from_dict(cls, doc: dict) -> 'BalancingReport':
        failures = [RidgeFailure(tuple(tuple(ray) for ray in f['ridge']),
                                 tuple(f['residual']))
                    for f in doc['failures']]
        return cls(doc['ambient'], doc['dim'], doc['ridges'], failures,
                   doc.get('label'))


@dataclass
class IntersectionPoint:
    """A point of a stable intersection.

    Attributes:
        point: Its rational coordinates in N.
        multiplicity: c(sigma) c'(sigma') [N : N_sigma + N_sigma'].
        index: The lattice index [N : N_sigma + N_sigma'].
        cones: The pair of maximal cones (sorted rays) producing it.
    """
    point: Tuple[Fraction, ...]
    multiplicity: int
    index: int
    cones: Optional[tuple] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {'coords': [str(c) for c in self.point],
                'mult': self.multiplicity,
                'index': self.index}

    @classmethod
    def from_dict(cls, doc: dict) -> 'IntersectionPoint':
        return cls(tuple(Fraction(c) for c in doc['coords']), doc['mult'],
                   doc.get('index', 1))


@dataclass
class IntersectionReport:
    """The finite stable intersection of two fans of complementary dimensions.

    Attributes:
        points: The intersection points, with multiplicities.
        direction: The generic direction v used (canonical coordinates).
    """
    points: List[IntersectionPoint]
    direction: Tuple[Fraction, ...] = ()

    @property
    def degree(self) -> int:
        return sum(p.multiplicity for p in self.points)

    def to_dict(self) -> dict:
        return {'points': [p.to_dict() for p in self.points],
                'degree': self.degree,
                'direction': [str(c) for c in self.direction]}

    @classmethod
    def from_dict(cls, doc: dict) -> 'IntersectionReport':
        return cls([IntersectionPoint.from_dict(p) for p in doc['points']],
                   tuple(Fraction(c) for c in doc.get('direction', ())))


@dataclass
class VerificationRow:
    """The three computations of the degree of one CSM cycle.

    Attributes:
        k: The index of the CSM cycle.
        geometric: Its degree, by stable intersection.
        combinatorial: The signed sum over increasing flags of beta products.
        tutte: The signed coefficient t_(k+1),0.
        points: The number of intersection points (decreasing direction).
        increasing_flags: The number of increasing flags with k + 1 steps
            and all step minors connected.
        index_one: Whether every intersection point has lattice index 1.
        length_k_sum: The same signed sum restricted to flags with k steps.
        seeds: The degrees obtained for extra random directions.
        null_points: The number of points where cones of null flags meet
            the linear space.
        null_weight: The intersection weight these points carry (0).
    """
    k: int
    geometric: int
    combinatorial: int
    tutte: int
    points: int = 0
    increasing_flags: int = 0
    index_one: bool = True
    length_k_sum: int = 0
    seeds: dict = field(default_factory=dict)
    null_points: int = 0
    null_weight: int = 0

    @property
    def passed(self) -> bool:
        return (self.geometric == self.combinatorial == self.tutte
                and self.null_weight == 0
                and all(d == self.geometric for d in self.seeds.values()))

    def to_dict(self) -> dict:
        return {
            'k': self.k,
            'geometric': self.geometric,
            'combinatorial': self.combinatorial,
            'tutte': self.tutte,
            'pass': self.passed,
            'points': self.points,
            'increasing_flags': self.increasing_flags,
            'index_one': self.index_one,
            'length_k_sum': self.length_k_sum,
            'seeds': {str(s): d for s, d in self.seeds.items()},
            'null_points': self.null_points,
            'null_weight': self.null_weight
        }

    @classmethod
    def from_dict(cls, doc: dict) -> 'VerificationRow':
        return cls(doc['k'], doc['geometric'], doc['combinatorial'],
                   doc['tutte'], doc.get('points', 0),
                   doc.get('increasing_flags', 0), doc.get('index_one', True),
                   doc.get('length_k_sum', 0),
                   {int(s): d for s, d in doc.get('seeds', {}).items()},
                   doc.get('null_points', 0), doc.get('null_weight', 0))


@dataclass
class VerificationReport:
    """Checks of deg(csm_k(M)) = (-1)^(d-k) t_(k+1),0 for k = 0..d.

    Attributes:
        matroid: The name of the matroid.
        rank: Its rank d + 1.
        rows: One row per k.
    """
    matroid: Optional[str]
    rank: int
    rows: List[VerificationRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_dict(self) -> dict:
        return {'matroid': self.matroid,
                'rank': self.rank,
                'rows': [row.to_dict() for row in self.rows]}

    @classmethod
    def from_dict(cls, doc: dict) -> 'VerificationReport':
        try:
            return cls(doc['matroid'], doc['rank'],
                       [VerificationRow.from_dict(row) for row in doc['rows']])
        except (KeyError, TypeError) as malformed:
            msg = 'malformed verification report'
            raise InputError(msg) from malformed

    def to_frame(self) -> pd.DataFrame:
        """Returns the rows as a DataFrame indexed by k."""
        records = []
        for row in self.rows:
            record = row.to_dict()
            del record['seeds']
            records.append(record)
        return pd.DataFrame.from_records(records, index='k')

    def save(self, filename: P) -> None:
        """Saves this report (as CSV if filename ends with '.csv', else JSON).

        Args:
            filename: Path of the output file.
        """
        if Path(filename).suffix == '.csv':
            self.to_frame().to_csv(filename)
        else:
            _dump(self.to_dict(), filename)

    @classmethod
    def from_file(cls, filename: P) -> 'VerificationReport':
        """Loads a report saved as JSON."""
        return cls.from_dict(_load(filename))
