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

import pytest
from click.testing import CliRunner

from csmtutte import __version__
from csmtutte.cli import cli

LOOP = '{"ground_size": 2, "bases": [[0]]}'
TRIPOD = {'ambient': 2, 'dim': 1,
          'cones': [{'rays': [[-1, -1]], 'weight': 1},
                    {'rays': [[0, 1]], 'weight': 1},
                    {'rays': [[1, 0]], 'weight': 1}]}


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, args, **kwargs):
    result = runner.invoke(cli, args + ['--json'], **kwargs)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_tutte(runner):
    result = runner.invoke(cli, ['tutte', 'uniform 2 3'])
    assert result.exit_code == 0
    assert 'x^2 + x + y' in result.output
    assert 'beta(M) = 1' in result.output
    assert 'q - 1' in result.output


def test_tutte_json(runner):
    doc = run_json(runner, ['tutte', 'K4'])
    assert doc['rendered'] == 'x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3'
    assert doc['beta'] == 2
    assert doc['rank'] == 3
    assert doc['ground_size'] == 6
    assert doc['reduced_char_poly_shifted'] == [1, -3, 2]


def test_tutte_with_loops(runner):
    result = runner.invoke(cli, ['tutte', LOOP])
    assert result.exit_code == 0
    assert 'loops' in result.output
    doc = run_json(runner, ['tutte', LOOP])
    assert doc['rendered'] == 'xy'
    assert doc['reduced_char_poly_shifted'] is None


def test_tutte_from_stdin_and_file(runner, tmp_path):
    doc = {'vertex_count': 3, 'edges': [[0, 1], [1, 2], [0, 2]],
           'order': [2, 1, 0]}
    assert run_json(runner, ['tutte', '-'],
                    input=json.dumps(doc))['rendered'] == 'x^2 + x + y'
    filename = tmp_path / 'triangle.json'
    filename.write_text(json.dumps(doc))
    assert run_json(runner, ['tutte', str(filename)])['beta'] == 1


def test_out_option(runner, tmp_path):
    out = tmp_path / 'tutte.json'
    result = runner.invoke(cli, ['tutte', 'U23', '--out', str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text())['rendered'] == 'x^2 + x + y'


def test_malformed_json(runner, tmp_path):
    filename = tmp_path / 'broken.json'
    filename.write_text('{"ground_size": 3,\n "bases": [[0, 1],')
    result = runner.invoke(cli, ['tutte', str(filename)])
    assert result.exit_code == 2
    assert 'line 2' in result.output


@pytest.mark.parametrize('spec', [
    '{"ground_size": 4, "bases": [[0, 1], [2, 3]]}',
    '{"ground_size": 3, "bases": []}',
    '{"field": 4, "rows": [[1, 0], [0, 1]]}',
    'uniform 4 3',
    'uniform two three',
    'no_such_matroid',
    '{"ground_size": 3, "bases": [[0, -1]]}',
    '{"ground_size": 3, "bases": [[0, "a"]]}',
    '{"ground_size": "3", "bases": [[0, 1]]}',
    '{"ground_size": 2, "bases": [[0]], "order": 5}',
    '{"ground_size": 2, "bases": [[0]], "order": [0, 1, 2]}',
])
def test_invalid_matroids(runner, spec):
    result = runner.invoke(cli, ['tutte', spec])
    assert result.exit_code == 2
    assert 'Error' in result.output


def test_csm(runner):
    doc = run_json(runner, ['csm', 'uniform 2 3', '--k', '0'])
    cycle, = doc['cycles']
    assert cycle['fan']['cones'] == [{'rays': [], 'weight': -1}]
    doc = run_json(runner, ['csm', 'U23', '--k', '1'])
    assert len(doc['cycles'][0]['fan']['cones']) == 3
    result = runner.invoke(cli, ['csm', 'U23'])
    assert result.exit_code == 0
    assert '-1  ∅ ⊂ {0,1,2}' in result.output


def test_csm_null_flags(runner):
    doc = run_json(runner, ['csm', 'U12+U23', '--k', '0'])
    assert doc['cycles'][0]['null_flags'] == [[[], [0, 1, 2, 3, 4]]]
    assert doc['cycles'][0]['fan']['cones'] == []


def test_csm_errors(runner):
    assert runner.invoke(cli, ['csm', 'U23', '--k', '2']).exit_code == 2
    assert runner.invoke(cli, ['csm', LOOP]).exit_code == 2


def test_verify(runner):
    result = runner.invoke(cli, ['verify', 'uniform 2 3'])
    assert result.exit_code == 0
    assert 'PASS' in result.output
    doc = run_json(runner, ['verify', 'K4', '--seed', '1'])
    assert [row['geometric'] for row in doc['rows']] == [2, -3, 1]
    assert all(row['pass'] for row in doc['rows'])
    assert doc['rows'][1]['seeds'] == {'1': -3}


def test_verify_with_order(runner):
    doc = run_json(runner, ['verify', 'K4-e', '--order', '4,3,2,1,0'])
    assert all(row['pass'] for row in doc['rows'])


def test_verify_errors(runner):
    assert runner.invoke(cli, ['verify']).exit_code == 2
    assert runner.invoke(cli, ['verify', LOOP]).exit_code == 2
    result = runner.invoke(cli, ['verify', 'U23', '--order', '0,x'])
    assert result.exit_code == 2


@pytest.mark.slow
def test_verify_corpus(runner):
    doc = run_json(runner, ['verify', '--corpus', '--sequential'])
    assert doc['pass']
    assert 'K4' in [report['matroid'] for report in doc['reports']]


def test_balance(runner, tmp_path):
    result = runner.invoke(cli, ['balance', 'K4'])
    assert result.exit_code == 0
    assert 'Bergman fan: balanced' in result.output
    fan = tmp_path / 'tripod.json'
    fan.write_text(json.dumps(TRIPOD))
    doc = run_json(runner, ['balance', '--fan', str(fan)])
    assert doc['balanced']
    unbalanced = dict(TRIPOD)
    unbalanced['cones'] = [{'rays': [[-1, -1]], 'weight': 2}] + \
        TRIPOD['cones'][1:]
    fan.write_text(json.dumps(unbalanced))
    result = runner.invoke(cli, ['balance', '--fan', str(fan)])
    assert result.exit_code == 1
    assert 'NOT balanced' in result.output
    assert '(-1, -1)' in result.output


def test_balance_usage(runner, tmp_path):
    assert runner.invoke(cli, ['balance']).exit_code == 2
    fan = tmp_path / 'tripod.json'
    fan.write_text(json.dumps(TRIPOD))
    result = runner.invoke(cli, ['balance', 'U23', '--fan', str(fan)])
    assert result.exit_code == 2
    assert 'mutually exclusive' in result.output


def test_flags(runner):
    doc = run_json(runner, ['flags', 'uniform 2 3'])
    assert doc['beta_expansion'] == [1, 1, 0]
    assert doc['h_vector'] == [1, 1, 0]
    assert doc['glv_counts'] == {'1': 1, '2': 1}
    assert len(doc['flags']) == 4
    doc = run_json(runner, ['flags', 'U23', '--length', '2', '--increasing'])
    assert doc['flags'] == [{'length': 2, 'flag': [[], [0], [0, 1, 2]],
                             'increasing': True, 'beta_product': 1}]
    result = runner.invoke(cli, ['flags', 'K4'])
    assert result.exit_code == 0
    assert '(1, 3, 2, 0)' in result.output
    assert runner.invoke(cli, ['flags', 'U23', '--length', '3']).exit_code == 2


def test_degree(runner):
    assert run_json(runner, ['degree', 'uniform 2 3'])['degree'] == 1
    doc = run_json(runner, ['degree', 'K4', '--k', '0', '--seed', '1',
                            '--seed', '2', '--random-chamber'])
    assert doc['degree'] == 2
    assert doc['stable']
    assert len(doc['intersections']) == 2
    result = runner.invoke(cli, ['degree', 'K4', '--k', '1'])
    assert result.exit_code == 0
    assert 'degree -3' in result.output


def test_degree_of_a_fan_document(runner, tmp_path):
    fan = tmp_path / 'point.json'
    fan.write_text(json.dumps({'ambient': 3, 'dim': 0,
                               'cones': [{'rays': [], 'weight': 4}]}))
    assert run_json(runner, ['degree', '--fan', str(fan)])['degree'] == 4
    result = runner.invoke(cli, ['degree', 'U23', '--fan', str(fan)])
    assert result.exit_code == 2
    assert 'mutually exclusive' in result.output
    assert runner.invoke(cli, ['degree']).exit_code == 2


def test_corpus(runner):
    result = runner.invoke(cli, ['corpus'])
    assert result.exit_code == 0
    assert 'K4' in result.output
    assert 'Fano' in result.output
    doc = json.loads(runner.invoke(cli, ['corpus', 'U23']).output)
    assert doc == {'ground_size': 3, 'bases': [[0, 1], [0, 2], [1, 2]],
                   'name': 'U23'}
    assert runner.invoke(cli, ['corpus', 'K5']).exit_code == 2
    result = runner.invoke(cli, ['corpus', '--check'])
    assert result.exit_code == 0
    assert 'correctly registered' in result.output
