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

"""Contains functions related to the registration of named matroids."""

from functools import partial
from typing import Callable, Dict

from csmtutte.matroids.core import Matroid
from csmtutte.matroids.generators import direct_sum, from_document, uniform
from csmtutte.utils.config import corpus_config, user_corpus_config
from csmtutte.utils.exceptions import InputError, MatroidError


def build_entry(name: str,
                entry: dict,
                catalog: Dict[str, Callable]) -> Matroid:
    """Builds the matroid described by an entry of corpus.yaml.

    Args:
        name: The name of the entry.
        entry: The entry (a dict with one construction key).
        catalog: The catalog used to resolve the operands of direct sums.
    """
    if 'uniform' in entry:
        rank, size = entry['uniform']
        return uniform(rank, size, name)
    if 'direct_sum' in entry:
        first, second = (catalog[operand]() for operand in entry['direct_sum'])
        return direct_sum(first, second, name)
    for key in ('graph', 'matrix', 'bases'):
        if key in entry:
            return from_document(entry[key], name)
    msg = (f'corpus entry "{name}" needs one of uniform, graph, matrix, bases '
           'or direct_sum')
    raise InputError(msg)


def register_matroids(catalog: dict) -> None:
    """Registers each named matroid (as a factory) into a dictionary.

    Matroids are only built when the factory is called.

    Args:
        catalog: the dictionary in which will be stored factories.
    """
    for name, entry in corpus_config.items():
        catalog[name] = partial(build_entry, name, entry, catalog)
    for name, entry in user_corpus_config.items():
        if name in corpus_config:
            print(f'A matroid with a similar name ("{name}") is already '
                  'provided with csmtutte. Please, rename yours to be able '
                  'to use it.')
            continue
        catalog[name] = partial(build_entry, name, entry, catalog)


def check_corpus(catalog: dict) -> bool:
    """Builds every named matroid, printing the ones which fail to build."""
    failures = 0
    for name, factory in catalog.items():
        try:
            factory()
        except (InputError, MatroidError) as error:
            print(f'"{name}" cannot be built: {error}')
            failures += 1
    if failures == 0:
        print('All named matroids are correctly registered.')
    return failures == 0
