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

"""CSM cycles of matroids and the verification of their degrees."""

# flake8: noqa: F401
from csmtutte.csm.cycles import (CsmCycle, csm_cycle,
                                 csm_degree_combinatorial,
                                 csm_degree_geometric, null_flag_intersection,
                                 signed_flag_sum)
from csmtutte.csm.verification import verify_degree, verify_main_theorem
