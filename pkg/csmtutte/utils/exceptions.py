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

"""Contains custom exceptions used in other parts of the code."""


class InputError(Exception):
    """Exception raised for errors in inputs (documents, specs, options)."""


class MatroidError(Exception):
    """Base exception for violated mathematical preconditions."""


class GroundSizeError(MatroidError):
    """Exception raised when a ground set is empty or too large."""


class EmptyBasesError(MatroidError):
    """Exception raised when a matroid is given no basis at all."""


class UnequalCardinalityError(MatroidError):
    """Exception raised when bases do not share one cardinality."""


class ExchangeAxiomError(MatroidError):
    """Exception raised when a family of sets violates basis exchange.

    Attributes:
        witness: The pair of bases (as bitmasks) and the element of the
            first one for which no exchange exists.
    """

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class RankOutOfRangeError(MatroidError):
    """Exception raised for a rank outside of the admissible range."""


class NonPrimeModulusError(MatroidError):
    """Exception raised when a finite field is asked with a non-prime size."""


class ZeroMatrixError(MatroidError):
    """Exception raised when a matrix has rank 0."""


class NotNestedError(MatroidError):
    """Exception raised when minor bounds are not nested."""


class NotABasisError(MatroidError):
    """Exception raised when a set is not a basis of the matroid."""


class ElementInBasisError(MatroidError):
    """Exception raised when an element unexpectedly lies in the basis."""


class ElementNotInBasisError(MatroidError):
    """Exception raised when an element unexpectedly lies outside the basis."""


class LoopPresentError(MatroidError):
    """Exception raised when a loopless matroid is required."""


class InexactDivisionError(MatroidError):
    """Exception raised when a polynomial division leaves a remainder."""


class NotProperFlagError(MatroidError):
    """Exception raised for chains which are not proper flags of flats."""


class KOutOfRangeError(MatroidError):
    """Exception raised for a CSM index outside of 0..d."""


class DimensionMismatchError(MatroidError):
    """Exception raised when two fans are not of complementary dimensions."""


class DegenerateDirectionError(MatroidError):
    """Exception raised when a perturbation direction is not generic."""


class RankDeficientError(MatroidError):
    """Exception raised when lattice vectors are linearly dependent."""


class SaturationError(MatroidError):
    """Exception raised when rays do not span a saturated sublattice."""


class UnstableDegreeError(MatroidError):
    """Exception raised when degrees disagree across generic directions."""
