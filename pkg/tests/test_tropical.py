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

from fractions import Fraction

import numpy as np
import pytest

import csmtutte.tropical.intersection as intersection
from csmtutte.invariants.flags import FlagOfFlats
from csmtutte.matroids import uniform
from csmtutte.tropical.fans import (Cone, WeightedFan, balancing_check,
                                    bergman_fan, canonical, cone_of_flag,
                                    indicator_image)
from csmtutte.tropical.intersection import (degree, degree_stability,
                                            generic_linear_space, intersect,
                                            lattice_index, perturbation,
                                            stable_intersection_points,
                                            uniform_membership)
from csmtutte.utils.exceptions import (DegenerateDirectionError,
                                       DimensionMismatchError, InputError,
                                       LoopPresentError, NotProperFlagError,
                                       RankDeficientError, SaturationError,
                                       UnstableDegreeError)
from csmtutte.utils.subsets import mask_of

TRIPOD = {((-1, -1),): 1, ((0, 1),): 1, ((1, 0),): 1}


def tripod(weight=1):
    cones = dict(TRIPOD)
    cones[((-1, -1),)] = weight
    return WeightedFan(2, 1, cones)


def test_quotient_coordinates():
    assert canonical((3, 1, 5)) == (-2, 2)
    assert canonical((Fraction(1, 2), 0)) == (Fraction(-1, 2),)
    assert indicator_image(mask_of([1]), 2) == (1, 0)
    assert indicator_image(mask_of([0]), 2) == (-1, -1)
    assert indicator_image(mask_of([0, 1, 2]), 2) == (0, 0)


def test_cone_of_flag(u23):
    assert cone_of_flag(FlagOfFlats((0, 7))) == Cone(2, ())
    assert cone_of_flag(FlagOfFlats((0, 2, 7))).rays == ((1, 0),)
    assert cone_of_flag(FlagOfFlats((0, 1, 7)), u23).rays == ((-1, -1),)
    with pytest.raises(NotProperFlagError):
        cone_of_flag(FlagOfFlats((0, 3, 7)), u23)
    with pytest.raises(NotProperFlagError):
        cone_of_flag(FlagOfFlats((0, 2, 6)))


def test_cone_checks():
    Cone(2, ((1, 0), (1, 1))).check()
    with pytest.raises(SaturationError):
        Cone(2, ((2, 0),)).check()
    with pytest.raises(RankDeficientError):
        Cone(2, ((1, 0), (2, 0))).check()
    with pytest.raises(DimensionMismatchError):
        Cone(2, ((1, 0, 0),)).check()


def test_cone_contains():
    cone = Cone(2, ((1, 0), (1, 1)))
    assert cone.contains((Fraction(3, 2), Fraction(1, 2)))
    assert not cone.contains((0, 1))
    assert Cone(2, ()).contains((0, 0))
    assert not Cone(2, ()).contains((0, 1))


def test_bergman_fan_of_u23(u23):
    fan = bergman_fan(u23)
    assert fan.ambient == 2
    assert fan.dim == 1
    assert fan.cones == TRIPOD


def test_bergman_fans_of_extreme_uniforms():
    point = bergman_fan(uniform(1, 3))
    assert point.dim == 0
    assert point.cones == {(): 1}
    plane = bergman_fan(uniform(3, 3))
    assert plane.dim == 2
    assert len(plane.cones) == 6
    assert plane.contains((Fraction(1, 3), -5))


def test_bergman_fan_errors(u23, with_loop):
    with pytest.raises(InputError):
        bergman_fan(u23.restrict(mask_of([1, 2])))
    with pytest.raises(LoopPresentError):
        bergman_fan(with_loop)


def test_fan_structure():
    fan = tripod()
    assert fan.skeleton(0) == [()]
    assert fan.skeleton(1) == sorted(TRIPOD)
    assert fan.ridges() == {(): [((-1, -1), 1), ((0, 1), 1), ((1, 0), 1)]}
    assert fan.contains((0, 3))
    assert not fan.contains((1, 1))


def test_from_cones_adds_up_weights():
    cone = Cone(2, ((1, 0),))
    fan = WeightedFan.from_cones(2, 1, [(cone, 2), (cone, -1)])
    assert fan.cones == {((1, 0),): 1}
    fan = WeightedFan.from_cones(2, 1, [(cone, 1), (cone, -1)])
    assert fan.cones == {}
    with pytest.raises(DimensionMismatchError):
        WeightedFan.from_cones(2, 0, [(cone, 1)])


def test_fan_documents(tmp_path, k4):
    fan = bergman_fan(k4)
    assert WeightedFan.from_dict(fan.to_dict()) == fan
    filename = tmp_path / 'fan.json'
    fan.save(filename)
    assert WeightedFan.from_file(filename) == fan
    with pytest.raises(InputError):
        WeightedFan.from_dict({'ambient': 2, 'cones': []})
    with pytest.raises(SaturationError):
        WeightedFan.from_dict({'ambient': 2, 'dim': 1,
                               'cones': [{'rays': [[2, 0]], 'weight': 1}]})


def test_balancing():
    report = balancing_check(tripod())
    assert report.balanced
    assert report.ridges == 1
    report = balancing_check(tripod(2))
    assert not report.balanced
    assert report.failures[0].ridge == ()
    assert report.failures[0].residual == (-1, -1)
    assert balancing_check(WeightedFan(2, 0, {(): 3})).balanced


def test_bergman_fans_are_balanced(any_corpus_matroid):
    report = balancing_check(bergman_fan(any_corpus_matroid))
    assert report.balanced
    assert report.dim == any_corpus_matroid.rank() - 1


def test_lattice_index():
    assert lattice_index([(1, 0)], [(0, 1)]) == 1
    assert lattice_index([(1, 1)], [(1, -1)]) == 2
    with pytest.raises(RankDeficientError):
        lattice_index([(1, 1)], [(2, 2)])
    with pytest.raises(DimensionMismatchError):
        lattice_index([(1, 0)], [])


def test_perturbation():
    direction = perturbation(3, seed=0)
    assert len(direction) == 3
    assert all(c < 0 for c in direction)
    assert list(direction) == sorted(direction, reverse=True)
    assert perturbation(3, seed=0) == direction
    chamber = perturbation(3, seed=1, decreasing=False)
    assert len(set(chamber)) == 3
    assert 0 not in chamber
    assert perturbation(0, seed=0) == ()


def test_stable_intersection_of_two_lines():
    points = stable_intersection_points(tripod(), tripod(),
                                        perturbation(2, seed=0))
    assert len(points) == 1
    assert points[0].multiplicity == 1
    assert points[0].index == 1


def test_degenerate_direction():
    with pytest.raises(DegenerateDirectionError):
        stable_intersection_points(tripod(), tripod(), (0, 1))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        stable_intersection_points(tripod(), tripod(), (1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        stable_intersection_points(tripod(), WeightedFan(2, 0, {(): 1}),
                                   (1, 2))


def test_generic_linear_space():
    assert generic_linear_space(2, 1) == bergman_fan(uniform(2, 3))
    assert generic_linear_space(2, 2).cones == {(): 1}
    assert generic_linear_space(2, 0).dim == 2
    shared = generic_linear_space(3, 1)
    shared.cones.clear()
    assert generic_linear_space(3, 1).cones


def test_degrees():
    assert degree(WeightedFan(3, 0, {(): 5})) == 5
    assert degree(tripod()) == 1
    assert degree(WeightedFan(2, 1, {})) == 0
    assert intersect(tripod(), seed=3).direction == perturbation(2, seed=3)


def test_bergman_fans_have_degree_one(any_corpus_matroid):
    assert degree(bergman_fan(any_corpus_matroid)) == 1


def test_degree_stability(k4):
    assert degree_stability(bergman_fan(k4), seeds=range(3)) == 1
    assert degree_stability(tripod(), seeds=[]) == 1


def test_unstable_degree(monkeypatch):
    monkeypatch.setattr(intersection, 'degree',
                        lambda fan, seed, decreasing: seed)
    with pytest.raises(UnstableDegreeError):
        degree_stability(tripod(), seeds=[0, 1])


def test_degenerate_directions_are_retried(monkeypatch):
    calls = []
    original = intersection.stable_intersection_points

    def flaky(fan, other, direction):
        calls.append(direction)
        if len(calls) == 1:
            raise DegenerateDirectionError('on a wall')
        return original(fan, other, direction)

    monkeypatch.setattr(intersection, 'stable_intersection_points', flaky)
    report = intersect(tripod(), seed=0)
    assert report.degree == 1
    assert len(calls) == 2
    assert calls[0] != calls[1]


def test_retries_are_bounded(monkeypatch):
    def degenerate(fan, other, direction):
        raise DegenerateDirectionError('on a wall')

    monkeypatch.setattr(intersection, 'stable_intersection_points',
                        degenerate)
    with pytest.raises(DegenerateDirectionError):
        intersect(tripod())


@pytest.mark.parametrize('rank', [1, 2, 3, 4])
def test_uniform_membership(rank):
    fan = bergman_fan(uniform(rank, 4))
    rng = np.random.default_rng(rank)
    for _ in range(50):
        lift = [Fraction(int(u), int(rng.integers(1, 4)))
                for u in rng.integers(0, 3, size=4)]
        point = canonical(lift)
        assert uniform_membership(point, rank) == fan.contains(point)


def test_uniform_membership_in_corpus_dimensions(corpus_matroid):
    size, rank = corpus_matroid.size, corpus_matroid.rank()
    fan = bergman_fan(uniform(rank, size))
    rng = np.random.default_rng(size * 10 + rank)
    for _ in range(200):
        lift = [Fraction(int(u), int(rng.integers(1, 4)))
                for u in rng.integers(0, 3, size=size)]
        point = canonical(lift)
        assert uniform_membership(point, rank) == fan.contains(point)


def test_uniform_membership_examples():
    assert uniform_membership((0, 0), 1)
    assert uniform_membership((1, 0), 2)
    assert not uniform_membership((1, 2), 2)
    assert uniform_membership((1, 2), 3)
