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

import numpy as np
import pytest

from csmtutte.catalogs import matroid_catalog
from csmtutte.csm import (csm_cycle, csm_degree_combinatorial,
                          csm_degree_geometric, null_flag_intersection,
                          signed_flag_sum, verify_degree,
                          verify_main_theorem)
from csmtutte.invariants.flags import (FlagOfFlats, beta_product,
                                       increasing_flags)
from csmtutte.invariants.tutte import tutte
from csmtutte.matroids import uniform
from csmtutte.tropical.fans import balancing_check, bergman_fan, cone_of_flag
from csmtutte.tropical.intersection import degree_stability, intersect
from csmtutte.utils.exceptions import (InputError, KOutOfRangeError,
                                       LoopPresentError)
from csmtutte.utils.subsets import mask_of


def test_csm_cycles_of_u23(u23):
    cycle = csm_cycle(u23, 0)
    assert cycle.fan.cones == {(): -1}
    assert cycle.weights == {FlagOfFlats((0, 7)): -1}
    assert cycle.null_flags == []
    cycle = csm_cycle(u23, 1)
    assert cycle.fan == bergman_fan(u23)


def test_top_cycle_is_the_bergman_fan(any_corpus_matroid):
    d = any_corpus_matroid.rank() - 1
    assert csm_cycle(any_corpus_matroid, d).fan == bergman_fan(
        any_corpus_matroid
    )


def test_weights_follow_the_sign_pattern(corpus_matroid):
    d = corpus_matroid.rank() - 1
    for k in range(d + 1):
        cycle = csm_cycle(corpus_matroid, k)
        assert all(w * (-1)**(d - k) > 0 for w in cycle.weights.values())
        assert all(flag.length == k + 1 for flag in cycle.weights)


def test_null_flags_of_a_direct_sum():
    matroid = matroid_catalog['U12+U23']()
    cycle = csm_cycle(matroid, 0)
    assert cycle.fan.cones == {}
    assert cycle.null_flags == [FlagOfFlats((0, matroid.ground))]
    assert csm_degree_geometric(matroid, 0) == 0
    report, weight = null_flag_intersection(matroid, cycle)
    assert len(report.points) == 1
    assert weight == 0
    row = verify_degree(matroid, 0)
    assert (row.null_points, row.null_weight) == (1, 0)
    assert row.passed


def test_null_flags_carry_no_weight(corpus_matroid):
    for row in verify_main_theorem(corpus_matroid).rows:
        assert row.null_weight == 0


def test_csm_errors(u23, with_loop):
    with pytest.raises(KOutOfRangeError):
        csm_cycle(u23, 2)
    with pytest.raises(KOutOfRangeError):
        csm_cycle(u23, -1)
    with pytest.raises(LoopPresentError):
        csm_cycle(with_loop, 0)
    with pytest.raises(InputError):
        csm_cycle(uniform(2, 4).restrict(mask_of([1, 2, 3])), 0)


def test_cycles_are_balanced(corpus_matroid):
    for k in range(corpus_matroid.rank()):
        assert balancing_check(csm_cycle(corpus_matroid, k).fan).balanced


def test_degrees_of_u23(u23):
    assert csm_degree_geometric(u23, 0) == -1
    assert csm_degree_geometric(u23, 1) == 1
    assert csm_degree_combinatorial(u23, 0) == -1
    assert csm_degree_combinatorial(u23, 1) == 1


def test_degrees_of_k4(k4):
    assert [csm_degree_geometric(k4, k) for k in range(3)] == [2, -3, 1]
    assert [csm_degree_combinatorial(k4, k) for k in range(3)] == [2, -3, 1]


def test_signed_flag_sum(u23):
    assert signed_flag_sum(u23, 0, 0) == 0
    assert signed_flag_sum(u23, 1, 1) == 1
    assert signed_flag_sum(u23, 1, 3) == 0


def test_verify_degree(k4):
    row = verify_degree(k4, 1, seeds=[1, 2])
    assert (row.geometric, row.combinatorial, row.tutte) == (-3, -3, -3)
    assert row.seeds == {1: -3, 2: -3}
    assert row.passed
    assert row.index_one


def test_verify_u23(u23):
    report = verify_main_theorem(u23)
    assert report.passed
    assert report.rank == 2
    assert [(row.geometric, row.combinatorial, row.tutte)
            for row in report.rows] == [(-1, -1, -1), (1, 1, 1)]


def test_verify_k4(k4):
    report = verify_main_theorem(k4)
    assert report.passed
    assert [row.tutte for row in report.rows] == [2, -3, 1]


def test_verify_corpus(corpus_matroid):
    report = verify_main_theorem(corpus_matroid, seeds=range(5))
    assert report.passed
    polynomial = tutte(corpus_matroid)
    d = corpus_matroid.rank() - 1
    for row in report.rows:
        assert row.geometric == (-1)**(d - row.k) * polynomial[(row.k + 1, 0)]


def test_intersection_points_are_increasing_flags(corpus_matroid):
    for row in verify_main_theorem(corpus_matroid).rows:
        assert row.index_one
        assert row.points == row.increasing_flags


def test_multiplicities_are_beta_products(corpus_matroid):
    for k in range(corpus_matroid.rank()):
        cycle = csm_cycle(corpus_matroid, k)
        flags = {cone_of_flag(flag).key: flag for flag in cycle.weights}
        report = intersect(cycle.fan)
        hit = set()
        for point in report.points:
            flag = flags[point.cones[0]]
            hit.add(flag)
            assert point.index == 1
            assert flag.is_increasing()
            assert abs(point.multiplicity) == beta_product(corpus_matroid,
                                                           flag)
        assert hit == {flag for flag in increasing_flags(corpus_matroid,
                                                         k + 1)
                       if beta_product(corpus_matroid, flag)}


def test_connected_increasing_flags(k4):
    rows = verify_main_theorem(k4).rows
    assert rows[0].increasing_flags == 1
    assert rows[2].increasing_flags == len(increasing_flags(k4, 3))


@pytest.mark.slow
def test_verify_fano(fano):
    report = verify_main_theorem(fano)
    assert report.passed
    assert [row.tutte for row in report.rows] == [3, -4, 1]


def test_relabelling_invariance(corpus_matroid):
    matroid = corpus_matroid
    expected = [row.geometric for row in verify_main_theorem(matroid).rows]
    rng = np.random.default_rng(0)
    for _ in range(5):
        permutation = [int(e) for e in rng.permutation(matroid.size)]
        report = verify_main_theorem(matroid.relabel(permutation))
        assert report.passed
        assert [row.geometric for row in report.rows] == expected


def test_random_chambers_agree(k4):
    for k in range(k4.rank()):
        fan = csm_cycle(k4, k).fan
        assert degree_stability(fan, seeds=range(3)) == (
            csm_degree_combinatorial(k4, k)
        )


def test_combinatorial_route_ignores_the_order(k4):
    for order in ([5, 4, 3, 2, 1, 0], [3, 0, 5, 1, 4, 2]):
        assert [csm_degree_combinatorial(k4, k, order)
                for k in range(3)] == [2, -3, 1]
