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

"""Contains various useful functions used in main.py."""

import re
from pathlib import Path
from typing import Union

from csmtutte.catalogs import matroid_catalog
from csmtutte.matroids.core import Matroid
from csmtutte.utils.exceptions import InputError


def safe_name(name: str) -> str:
    """Returns a name usable as an identifier ('K4-e' -> 'K4_e')."""
    return re.sub(r'\W', '_', name)


def generate_report_filename(matroid: Matroid, kind: str = 'verification'
                             ) -> str:
    """Returns the default filename of a report about a matroid."""
    return f'{safe_name(matroid.name or "matroid")}_{kind}.json'


def to_matroid(value: Union[str, Matroid]) -> Matroid:
    """Returns a matroid, looking names up in the catalog."""
    if isinstance(value, Matroid):
        return value
    try:
        return matroid_catalog[value]()
    except KeyError as unknown:
        msg = (f'"{value}" is not a named matroid; please, choose one from '
               f'the following list: {list(matroid_catalog)}.')
        raise InputError(msg) from unknown


def parse_params(key: str, params: dict) -> dict:
    """Parse and verify params given to the function generate (main.py)."""
    params = dict(params)
    if 'matroid' in params and 'batch' in key:
        params['matroids'] = [params.pop('matroid')]
    if 'matroid' in params:
        params['matroid'] = to_matroid(params['matroid'])
    if 'matroids' in params:
        params['matroids'] = [to_matroid(m) for m in params['matroids']]
    if 'seed' in params:
        params['seeds'] = [params.pop('seed')]
    if 'seeds' in params:
        params['seeds'] = [int(seed) for seed in params['seeds']]
    if 'dirname' in params:
        params['dirname'] = Path(params['dirname']).expanduser()
    if 'filename' in params:
        params['filename'] = Path(params['filename']).expanduser()
    return params
