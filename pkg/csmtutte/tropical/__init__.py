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

"""Weighted fans, Bergman fans, stable intersections and degrees."""

# flake8: noqa: F401
from csmtutte.tropical.fans import (Cone, WeightedFan, balancing_check,
                                    bergman_fan, cone_of_flag)
from csmtutte.tropical.intersection import (degree, degree_stability,
                                            generic_linear_space, intersect,
                                            lattice_index, perturbation,
                                            stable_intersection_points,
                                            uniform_membership)
