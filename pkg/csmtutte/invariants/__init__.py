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

"""Tutte polynomials, beta invariants and flags of flats."""

# flake8: noqa: F401
from csmtutte.invariants.flags import (FlagOfFlats, GLVWitness,
                                       beta_expansion, beta_product,
                                       broken_circuit_h_vector, glv_count,
                                       glv_witnesses, increasing_flags,
                                       proper_flags)
from csmtutte.invariants.tutte import (ActivityRecord, TuttePolynomial,
                                       activities, bases_with_activity, beta,
                                       beta_from_ranks,
                                       fundamental_circuit,
                                       fundamental_cocircuit,
                                       reduced_char_poly, tutte,
                                       tutte_corank_nullity)
