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

"""Shared fixtures: small matroids and the named corpus."""

import pytest

from csmtutte.catalogs import matroid_catalog, slow_matroids
from csmtutte.matroids import from_bases, from_graph, uniform

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

FAST_NAMES = [name for name in matroid_catalog if name not in slow_matroids]
ALL_NAMES = [
    pytest.param(name, marks=pytest.mark.slow) if name in slow_matroids
    else name
    for name in matroid_catalog
]


@pytest.fixture
def u23():
    return uniform(2, 3)


@pytest.fixture
def k4():
    return from_graph(4, K4_EDGES, name='K4')


@pytest.fixture
def fano():
    return matroid_catalog['Fano']()


@pytest.fixture
def two_coloops():
    return from_bases(2, [[0, 1]])


@pytest.fixture
def with_loop():
    return from_bases(2, [[0]])


@pytest.fixture(params=FAST_NAMES)
def corpus_matroid(request):
    return matroid_catalog[request.param]()


@pytest.fixture(params=ALL_NAMES)
def any_corpus_matroid(request):
    return matroid_catalog[request.param]()
