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

"""Contains paths and configs used in other parts of the code."""

from pathlib import Path

import yaml

root = Path(__file__).parent.parent.resolve()

resources = root / 'resources'

with open(resources / 'config.yaml', 'r') as f:
    config = yaml.full_load(f)

with open(resources / 'corpus.yaml', 'r') as f:
    corpus_config = yaml.full_load(f)

max_ground_size = config['max_ground_size']
perturbation_config = config['perturbation']
validation_config = config['validation']
degree_config = config['degree']
parallel_config = config['parallel']
cache_config = config['cache']

user_corpus = config.get('user_corpus')
if user_corpus is not None:
    with open(Path(user_corpus).expanduser(), 'r') as f:
        user_corpus_config = yaml.full_load(f) or {}
else:
    user_corpus_config = {}
