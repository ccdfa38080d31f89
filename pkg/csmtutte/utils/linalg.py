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

"""Contains exact linear algebra routines (integers, rationals, GF(p)).

Nothing in csmtutte ever touches floating point numbers: matrices are
sympy DomainMatrix objects over ZZ, QQ or GF(p), and results are handed
back as Python integers and fractions.Fraction.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

# pylint: disable=invalid-name
# Ok for a custom type.
Q = Union[int, Fraction]


def _element(value: Q, domain):
    if domain == QQ:
        value = Fraction(value)
        return QQ(value.numerator, value.denominator)
    return domain(int(value))


def _to_domain(rows: Sequence[Sequence[Q]], domain) -> DomainMatrix:
    """Converts a list of rows into a DomainMatrix."""
    shape = (len(rows), len(rows[0]) if rows else 0)
    return DomainMatrix([[_element(x, domain) for x in row] for row in rows],
                        shape, domain)


def _fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def field_rank(vectors: Sequence[Sequence[int]], modulus: int = 0) -> int:
    """Returns the rank of a family of integer vectors over Q or GF(p).

    Args:
        vectors: The vectors (as rows).
        modulus: 0 for the rationals, a prime p for GF(p).
    """
    if not vectors or not len(vectors[0]):
        return 0
    return _to_domain(vectors, GF(modulus) if modulus else QQ).rank()


def rational_rank(vectors: Sequence[Sequence[Q]]) -> int:
    """Returns the rank over Q of a family of rational vectors."""
    if not vectors or not len(vectors[0]):
        return 0
    return _to_domain(vectors, QQ).rank()


def rational_solve(columns: Sequence[Sequence[Q]],
                   rhs: Sequence[Q]) -> Optional[List[Fraction]]:
    """Solves sum_i x_i * columns[i] = rhs for linearly independent columns.

    The system may be overdetermined (fewer columns than coordinates).

    Args:
        columns: The linearly independent vectors spanning the system.
        rhs: The target vector.

    Returns:
        The unique solution, or None if rhs is not in the span (or if the
        columns are dependent).
    """
    k = len(columns)
    if k == 0:
        return [] if all(b == 0 for b in rhs) else None
    augmented = [[col[i] for col in columns] + [rhs[i]]
                 for i in range(len(rhs))]
    reduced, pivots = _to_domain(augmented, QQ).rref()
    if tuple(pivots) != tuple(range(k)):
        return None
    values = reduced.to_Matrix()
    return [_fraction(values[i, k]) for i in range(k)]


def square_solve(matrix: Sequence[Sequence[int]],
                 rhs: Sequence[int]) -> Tuple[int, Optional[List[Fraction]]]:
    """Solves a square integer system.

    The determinant is computed over ZZ (fraction-free), the solution by LU
    decomposition over QQ.

    Args:
        matrix: A square integer matrix (list of rows).
        rhs: An integer vector.

    Returns:
        The determinant of the matrix and the solution (None when the
        determinant is 0).
    """
    n = len(matrix)
    if n == 0:
        return 1, []
    square = _to_domain(matrix, ZZ)
    det = int(square.det())
    if det == 0:
        return 0, None
    column = _to_domain([[b] for b in rhs], QQ)
    values = square.convert_to(QQ).lu_solve(column).to_Matrix()
    return det, [_fraction(values[i, 0]) for i in range(n)]


def integer_det(matrix: Sequence[Sequence[int]]) -> int:
    """Returns the determinant of a square integer matrix."""
    if not matrix:
        return 1
    return int(_to_domain(matrix, ZZ).det())


def invariant_factors_of(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Returns the Smith normal form invariant factors of an integer matrix."""
    if not rows or not rows[0]:
        return ()
    return tuple(int(f) for f in invariant_factors(Matrix(rows), domain=ZZ))


def is_saturated(rows: Sequence[Sequence[int]]) -> bool:
    """Checks that integer rows form a basis of a saturated sublattice.

    That is, the rows are linearly independent and every invariant factor of
    the matrix they form equals 1.
    """
    if not rows:
        return True
    factors = invariant_factors_of(rows)
    return (len(factors) >= len(rows)
            and all(abs(f) == 1 for f in factors[:len(rows)]))
