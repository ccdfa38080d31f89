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

"""Contains helpers to handle subsets of a ground set encoded as bitmasks.

Element e belongs to the subset 'mask' iff bit e of 'mask' is set.
"""

from numbers import Integral
from typing import Iterable, List, Union

from csmtutte.utils.exceptions import InputError

# pylint: disable=invalid-name
# Ok for a custom type.
Subset = int
SubsetLike = Union[int, Iterable[int]]


def mask_of(elements: SubsetLike) -> Subset:
    """Returns the bitmask of some elements (masks are returned as is).

    Raises:
        InputError: If an element is not a nonnegative integer.
    """
    if isinstance(elements, int):
        return elements
    mask = 0
    for e in elements:
        if not isinstance(e, Integral) or isinstance(e, bool) or e < 0:
            raise InputError(f'{e!r} is not a valid element')
        mask |= 1 << int(e)
    return mask


def elements_of(mask: Subset) -> List[int]:
    """Returns the sorted list of elements of a bitmask."""
    elements = []
    e = 0
    while mask:
        if mask & 1:
            elements.append(e)
        mask >>= 1
        e += 1
    return elements


def popcount(mask: Subset) -> int:
    """Returns the cardinality of a bitmask."""
    return bin(mask).count('1')


def min_element(mask: Subset, position=None) -> int:
    """Returns the minimum of a nonempty subset.

    Args:
        mask: The subset.
        position: Optional; position[e] is the rank of element e in the
            total order used (natural order if None).
    """
    if position is None:
        return (mask & -mask).bit_length() - 1
    return min(elements_of(mask), key=position.__getitem__)


def render_subset(mask: Subset) -> str:
    """Renders a subset as '{0,1,2}' (or '∅')."""
    if not mask:
        return '∅'
    return '{' + ','.join(str(e) for e in elements_of(mask)) + '}'
