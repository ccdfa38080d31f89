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

"""Defines dicts containing named matroids."""

from csmtutte.utils.config import corpus_config, user_corpus_config
from csmtutte.utils.registration import register_matroids

matroid_catalog = {}
register_matroids(matroid_catalog)

_entries = {**user_corpus_config, **corpus_config}
long_names = {name: entry.get('long_name', name)
              for name, entry in _entries.items()}
slow_matroids = tuple(name for name, entry in _entries.items()
                      if entry.get('slow', False))
