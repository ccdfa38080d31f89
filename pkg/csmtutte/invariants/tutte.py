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

"""Basis activities, the Tutte polynomial and its specializations.

Activities follow the usual definitions: given a total order on the ground
set, an element e outside a basis B is externally active if it is the
smallest element of its fundamental circuit, and an element e of B is
internally active if it is the smallest element of its fundamental cocircuit.
The Tutte polynomial is the generating function of (internal, external)
activities over all bases; it does not depend on the order, which is checked
against the corank-nullity expansion (tutte_corank_nullity).

Orders are given as permutations: order[pos] is the element at position pos.
An order on a larger set may be given for a minor, in which case the
inherited order is used.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy import Poly, ZZ, div, symbols

from csmtutte.matroids.core import Matroid
from csmtutte.utils.config import cache_config
from csmtutte.utils.exceptions import (ElementInBasisError,
                                       ElementNotInBasisError, InputError,
                                       InexactDivisionError, LoopPresentError,
                                       NotABasisError, RankOutOfRangeError)
from csmtutte.utils.subsets import Subset, elements_of, min_element, popcount

x, y, q = symbols('x y q')


def positions_of(
        matroid: Matroid,
        order: Optional[Sequence[int]] = None) -> Optional[Dict[int, int]]:
    """Returns the map element -> position of a total order (None: natural).

    Raises:
        InputError: If order repeats an element or misses one of the ground
            set.
    """
    if order is None:
        return None
    position = {e: pos for pos, e in enumerate(order)}
    if len(position) != len(order):
        raise InputError(f'{list(order)} is not a permutation')
    if missing := [e for e in matroid.elements if e not in position]:
        raise InputError(f'elements {missing} are missing from the order')
    elements = set(matroid.elements)
    if extra := [e for e in order if e not in elements]:
        raise InputError(f'elements {extra} are not in the ground set')
    return position


def _check_basis(matroid: Matroid, basis: Subset) -> None:
    if not matroid.is_basis(basis):
        msg = f'{elements_of(basis)} is not a basis of {matroid!r}'
        raise NotABasisError(msg)


def fundamental_circuit(matroid: Matroid, basis: Subset, e: int) -> Subset:
    """Returns the unique circuit contained in basis + e.

    Raises:
        NotABasisError: If basis is not a basis of matroid.
        ElementInBasisError: If e belongs to basis.
    """
    _check_basis(matroid, basis)
    if basis >> e & 1:
        raise ElementInBasisError(f'{e} belongs to {elements_of(basis)}')
    return _circuit(matroid, basis, e)


def fundamental_cocircuit(matroid: Matroid, basis: Subset, e: int) -> Subset:
    """Returns the unique cocircuit contained in (E - basis) + e.

    Raises:
        NotABasisError: If basis is not a basis of matroid.
        ElementNotInBasisError: If e does not belong to basis.
    """
    _check_basis(matroid, basis)
    if not basis >> e & 1:
        raise ElementNotInBasisError(f'{e} is not in {elements_of(basis)}')
    return _cocircuit(matroid, basis, e)


def _circuit(matroid: Matroid, basis: Subset, e: int) -> Subset:
    extended = basis | (1 << e)
    circuit = 1 << e
    for f in elements_of(basis):
        if extended & ~(1 << f) in matroid.bases:
            circuit |= 1 << f
    return circuit


def _cocircuit(matroid: Matroid, basis: Subset, e: int) -> Subset:
    reduced = basis & ~(1 << e)
    cocircuit = 1 << e
    for f in elements_of(matroid.ground & ~basis):
        if reduced | (1 << f) in matroid.bases:
            cocircuit |= 1 << f
    return cocircuit


@dataclass
class ActivityRecord:
    """Activities of a basis.

    Attributes:
        basis: The basis.
        internally_active: Elements of the basis minimal in their
            fundamental cocircuit.
        externally_active: Elements outside the basis minimal in their
            fundamental circuit.
    """
    __slots__ = ('basis', 'internally_active', 'externally_active')
    basis: Subset
    internally_active: Subset
    externally_active: Subset

    @property
    def internal(self) -> int:
        return popcount(self.internally_active)

    @property
    def external(self) -> int:
        return popcount(self.externally_active)


def activities(matroid: Matroid,
               basis: Subset,
               order: Optional[Sequence[int]] = None) -> ActivityRecord:
    """Computes the internal and external activities of a basis.

    Args:
        matroid: The matroid.
        basis: One of its bases.
        order: Optional; the total order (natural order if None).

    Raises:
        NotABasisError: If basis is not a basis of matroid.
    """
    _check_basis(matroid, basis)
    return _activities(matroid, basis, positions_of(matroid, order))


def _activities(matroid, basis, position) -> ActivityRecord:
    internal = 0
    for e in elements_of(basis):
        if min_element(_cocircuit(matroid, basis, e), position) == e:
            internal |= 1 << e
    external = 0
    for e in elements_of(matroid.ground & ~basis):
        if min_element(_circuit(matroid, basis, e), position) == e:
            external |= 1 << e
    return ActivityRecord(basis, internal, external)


@dataclass
class TuttePolynomial:
    """A bivariate polynomial with nonnegative integer coefficients.

    Attributes:
        coeffs: A dict (i, j) -> t_ij, zero coefficients being omitted.
    """
    __slots__ = ('coeffs',)
    coeffs: Dict[Tuple[int, int], int]

    def __post_init__(self):
        self.coeffs = {key: c for key, c in self.coeffs.items() if c != 0}

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.coeffs.get(key, 0)

    @property
    def total(self) -> int:
        """Returns T(1, 1), i.e. the number of bases."""
        return sum(self.coeffs.values())

    def evaluate(self, x_value: int, y_value: int) -> int:
        """Returns T(x_value, y_value)."""
        return sum(c * x_value**i * y_value**j
                   for (i, j), c in self.coeffs.items())

    def specialize_y0(self) -> Poly:
        """Returns T(x, 0) as an integer polynomial in x."""
        terms = {(i,): c for (i, j), c in self.coeffs.items() if j == 0}
        if not terms:
            return Poly(0, x, domain=ZZ)
        return Poly.from_dict(terms, x, domain=ZZ)

    def to_dict(self) -> dict:
        return {
            'terms': [{'i': i, 'j': j, 'c': c}
                      for (i, j), c in sorted(self.coeffs.items())]
        }

    @classmethod
    def from_dict(cls, doc: dict) -> 'TuttePolynomial':
        try:
            return cls({(t['i'], t['j']): t['c'] for t in doc['terms']})
        except (KeyError, TypeError) as malformed:
            msg = 'a Tutte document is {"terms": [{"i", "j", "c"}, ...]}'
            raise InputError(msg) from malformed

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        terms = []
        for i, j in sorted(self.coeffs, key=lambda key: (-key[0], key[1])):
            c = self.coeffs[(i, j)]
            monomial = ''.join(
                var if exp == 1 else f'{var}^{exp}'
                for var, exp in (('x', i), ('y', j)) if exp
            )
            if not monomial:
                terms.append(str(c))
            elif c == 1:
                terms.append(monomial)
            else:
                terms.append(f'{c}{monomial}')
        return ' + '.join(terms)


def tutte(matroid: Matroid,
          order: Optional[Sequence[int]] = None) -> TuttePolynomial:
    """Returns the Tutte polynomial as the activity generating function."""
    position = positions_of(matroid, order)
    counts = Counter()
    for basis in matroid.bases:
        record = _activities(matroid, basis, position)
        counts[(record.internal, record.external)] += 1
    return TuttePolynomial(dict(counts))


def bases_with_activity(matroid: Matroid,
                        i: int,
                        j: int,
                        order: Optional[Sequence[int]] = None
                        ) -> FrozenSet[Subset]:
    """Returns the bases with internal activity i and external activity j."""
    position = positions_of(matroid, order)
    stratum = []
    for basis in matroid.bases:
        record = _activities(matroid, basis, position)
        if record.internal == i and record.external == j:
            stratum.append(basis)
    return frozenset(stratum)


@lru_cache(maxsize=cache_config['max_minors'])
def beta(matroid: Matroid) -> int:
    """Returns Crapo's beta invariant, the coefficient t_10.

    It vanishes on the empty matroid, on a loop and on disconnected matroids,
    and equals 1 on a coloop.
    """
    return tutte(matroid)[(1, 0)]


def _subsets(mask: Subset):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=cache_config['max_minors'])
def beta_from_ranks(matroid: Matroid) -> int:
    """Returns the beta invariant from the rank function alone.

    beta(M) = (-1)^r(E) sum over S of (-1)^|S| r(S). Basis activities
    are not used.
    """
    total = sum((-1)**popcount(subset) * matroid.rank(subset)
                for subset in _subsets(matroid.ground))
    return (-1)**matroid.rank() * total


def tutte_corank_nullity(matroid: Matroid) -> TuttePolynomial:
    """Returns the Tutte polynomial from its corank-nullity expansion.

    T = sum over S of (x - 1)^(r(E) - r(S)) (y - 1)^(|S| - r(S)).
    """
    full_rank = matroid.rank()
    counts = Counter()
    for subset in _subsets(matroid.ground):
        rk = matroid.rank(subset)
        counts[(full_rank - rk, popcount(subset) - rk)] += 1
    coeffs = Counter()
    for (a, b), n in counts.items():
        for i in range(a + 1):
            for j in range(b + 1):
                coeffs[(i, j)] += (n * comb(a, i) * comb(b, j)
                                   * (-1)**(a - i + b - j))
    return TuttePolynomial(dict(coeffs))


def reduced_char_poly(matroid: Matroid, shifted: bool = False) -> Poly:
    """Returns the reduced characteristic polynomial of a loopless matroid.

    Args:
        matroid: A nonempty loopless matroid of rank d + 1.
        shifted: Optional; if True, returns q -> chi_bar(q + 1), i.e.
            (-1)^(d+1) T(-q, 0) / q, else (-1)^(d+1) T(1 - q, 0) / (q - 1).

    Raises:
        LoopPresentError: If the matroid has a loop.
        RankOutOfRangeError: If the matroid has rank 0.
        InexactDivisionError: If the division leaves a remainder.
    """
    if loops := matroid.loops():
        msg = f'{matroid!r} has loops {elements_of(loops)}'
        raise LoopPresentError(msg)
    if matroid.rank() == 0:
        raise RankOutOfRangeError('the matroid has rank 0')
    t_x0 = tutte(matroid).specialize_y0()
    if shifted:
        numerator, divisor = t_x0.as_expr().subs(x, -q), q
    else:
        numerator, divisor = t_x0.as_expr().subs(x, 1 - q), q - 1
    quotient, remainder = div(Poly(numerator, q, domain=ZZ),
                              Poly(divisor, q, domain=ZZ))
    if not remainder.is_zero:
        msg = f'T(x, 0) of {matroid!r} is not divisible as expected'
        raise InexactDivisionError(msg)
    return (-1)**matroid.rank() * quotient


def characteristic_poly(matroid: Matroid) -> Poly:
    """Returns the characteristic polynomial (q - 1) chi_bar(q)."""
    return Poly(q - 1, q, domain=ZZ) * reduced_char_poly(matroid)


def poly_coefficients(poly: Poly) -> List[int]:
    """Returns the coefficients of a polynomial, highest degree first."""
    return [int(c) for c in poly.all_coeffs()]
