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

import json

import pandas as pd
import pytest

from csmtutte.builders import ReportBuilder
from csmtutte.invariants.tutte import tutte
from csmtutte.main import (create_batch_verification_reports,
                           create_verification_report, generate)
from csmtutte.products import (BalancingReport, IntersectionReport,
                               VerificationReport)
from csmtutte.tropical.fans import balancing_check, bergman_fan
from csmtutte.tropical.intersection import intersect
from csmtutte.utils.exceptions import InputError, LoopPresentError
from csmtutte.utils.main import (generate_report_filename, parse_params,
                                 safe_name)


def test_builder(k4):
    builder = ReportBuilder()
    builder.set_matroid(k4)
    builder.compute_tutte()
    builder.check_balancing()
    reports = builder.get_reports()
    assert reports.matroid == k4
    assert reports.tutte == tutte(k4)
    assert reports.verification is None
    assert [report.label for report in reports.balancing] == [
        'Bergman fan', 'csm_0', 'csm_1', 'csm_2'
    ]
    assert all(report.balanced for report in reports.balancing)


def test_builder_is_reset(u23):
    builder = ReportBuilder()
    builder.set_matroid(u23)
    builder.verify()
    assert builder.get_reports().verification.passed
    with pytest.raises(InputError):
        builder.verify()


def test_builder_rejects_loops(with_loop):
    builder = ReportBuilder()
    builder.set_matroid(with_loop)
    builder.compute_tutte()
    with pytest.raises(LoopPresentError):
        builder.verify()


def test_generate_tutte(u23):
    assert str(generate('tutte', {'matroid': 'U23'})) == 'x^2 + x + y'
    assert generate('tutte', {'matroid': u23, 'order': [2, 1, 0]}) == tutte(
        u23
    )


def test_generate_verification(tmp_path):
    report = generate('verification',
                      {'matroid': 'K4', 'seed': 3, 'dirname': tmp_path},
                      save=True)
    assert report.passed
    assert report.rows[0].seeds == {3: 2}
    saved = VerificationReport.from_file(tmp_path / 'K4_verification.json')
    assert saved == report


def test_generate_balancing():
    reports = generate('balancing', {'matroid': 'U24'})
    assert len(reports) == 3
    assert all(report.balanced for report in reports)


def test_generate_batch_verification():
    reports = generate('batch verification', {
        'matroids': ['U23', 'K4-e'],
        'parallel': False
    })
    assert reports._fields == ('U23', 'K4_e')
    assert reports.U23.passed
    assert reports.K4_e.passed


@pytest.mark.slow
def test_parallel_batch_verification(u23, k4):
    reports = create_batch_verification_reports([u23, k4], num_cpus=2)
    assert all(report.passed for report in reports)
    assert reports[1].matroid == 'K4'


def test_unknown_matroid():
    with pytest.raises(InputError):
        generate('tutte', {'matroid': 'K5'})


def test_parse_params(tmp_path):
    params = parse_params('batch verification',
                          {'matroid': 'U23', 'seeds': ['1', 2],
                           'dirname': str(tmp_path)})
    assert [m.name for m in params['matroids']] == ['U23']
    assert params['seeds'] == [1, 2]
    assert params['dirname'] == tmp_path


def test_filenames(k4):
    assert safe_name('U12+U23') == 'U12_U23'
    assert generate_report_filename(k4) == 'K4_verification.json'
    assert generate_report_filename(k4.dual(), 'balancing') == (
        'K4__balancing.json'
    )


def test_verification_report_io(tmp_path, u23):
    report = create_verification_report(u23, seeds=[1])
    doc = report.to_dict()
    assert doc['rows'][0]['pass']
    assert doc['rows'][0]['seeds'] == {'1': -1}
    assert VerificationReport.from_dict(json.loads(json.dumps(doc))) == report
    frame = report.to_frame()
    assert list(frame.index) == [0, 1]
    assert list(frame['geometric']) == [-1, 1]
    report.save(tmp_path / 'u23.csv')
    assert pd.read_csv(tmp_path / 'u23.csv', index_col='k').shape[0] == 2
    with pytest.raises(InputError):
        VerificationReport.from_dict({'rank': 2})


def test_failed_rows_are_reported(u23):
    report = create_verification_report(u23)
    report.rows[0].tutte += 1
    assert not report.rows[0].passed
    assert not report.passed
    report = create_verification_report(u23, seeds=[1])
    report.rows[1].seeds[1] = 0
    assert not report.passed


def test_intersection_and_balancing_reports(u23):
    report = intersect(bergman_fan(u23))
    doc = report.to_dict()
    assert doc['degree'] == 1
    assert IntersectionReport.from_dict(json.loads(json.dumps(doc))) == report
    assert report.direction
    balancing = balancing_check(bergman_fan(u23))
    balancing.label = 'Bergman fan'
    assert BalancingReport.from_dict(balancing.to_dict()) == balancing
