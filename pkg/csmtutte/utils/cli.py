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

"""Contains various useful functions and classes used in the CLI."""

import functools
import json
import sys
from pathlib import Path
from typing import Optional, Tuple

import click
import pandas as pd
from sympy import Poly

from csmtutte.catalogs import matroid_catalog
from csmtutte.invariants.tutte import TuttePolynomial
from csmtutte.matroids.core import Matroid
from csmtutte.matroids.generators import from_document, uniform
from csmtutte.utils.exceptions import InputError, MatroidError


class PathPath(click.Path):
    """A Click path argument that returns a pathlib Path, not a string"""
    def convert(self, value, param, ctx):
        return Path(super().convert(value, param, ctx))


def exclusive_sources(spec, fan) -> None:
    """Raises a UsageError unless exactly one of SPEC and --fan is given."""
    if spec is not None and fan is not None:
        raise click.UsageError('Illegal usage: "--fan" is mutually '
                               'exclusive with "SPEC".')
    if spec is None and fan is None:
        raise click.UsageError('give either a matroid spec or --fan')


def exit_on_error(func):
    """Turns input and mathematical errors into a message and exit code 2."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (InputError, MatroidError) as error:
            click.secho(f'Error: {error}', err=True, fg='red')
            sys.exit(2)
    return wrapper


def load_json(text: str, source: str = '<input>'):
    """Parses a JSON document, reporting the position of syntax errors."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        msg = (f'{source}: line {error.lineno}, column {error.colno}: '
               f'{error.msg}')
        raise InputError(msg) from error


def read_document(spec: str):
    """Reads a JSON document from a file, stdin ('-') or inline text."""
    if spec == '-':
        return load_json(click.get_text_stream('stdin').read(), '<stdin>')
    if spec.lstrip().startswith('{'):
        return load_json(spec)
    path = Path(spec).expanduser()
    if not path.is_file():
        msg = (f'"{spec}" is neither "uniform r m", a named matroid '
               f'({", ".join(matroid_catalog)}), a JSON document nor a file')
        raise InputError(msg)
    with open(path, 'r') as f:
        return load_json(f.read(), str(path))


def parse_matroid_spec(
        spec: str) -> Tuple[Matroid, Optional[Tuple[int, ...]]]:
    """Returns the matroid (and the optional order) described by a spec.

    A spec is either "uniform r m", the name of a matroid of the catalog, or
    a JSON document (a path, '-' for stdin, or inline) describing bases, a
    graph or a matrix, with optional "name" and "order" keys.
    """
    words = spec.split()
    if words and words[0] == 'uniform':
        try:
            rank, size = (int(w) for w in words[1:])
        except ValueError as malformed:
            msg = f'"{spec}" should read "uniform <rank> <size>"'
            raise InputError(msg) from malformed
        return uniform(rank, size), None
    if spec in matroid_catalog:
        return matroid_catalog[spec](), None
    doc = read_document(spec)
    order = doc.get('order') if isinstance(doc, dict) else None
    if order is not None and not (
            isinstance(order, list)
            and all(isinstance(e, int) and not isinstance(e, bool)
                    for e in order)):
        msg = f'"order" must be a list of elements (got {order!r})'
        raise InputError(msg)
    return from_document(doc), None if order is None else tuple(order)


def parse_order(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    """Parses an order given as a comma separated permutation ('2,0,1')."""
    if text is None:
        return None
    try:
        return tuple(int(e) for e in text.split(','))
    except ValueError as malformed:
        msg = f'"{text}" is not a comma separated list of elements'
        raise InputError(msg) from malformed


def render_poly(poly: Poly) -> str:
    """Renders an integer polynomial as 'q^2 - 3q + 2'."""
    var = str(poly.gens[0])
    terms = []
    for (exp,), c in sorted(poly.terms(), reverse=True):
        c = int(c)
        if c == 0:
            continue
        monomial = '' if exp == 0 else var if exp == 1 else f'{var}^{exp}'
        magnitude = abs(c)
        body = (str(magnitude) if not monomial
                else monomial if magnitude == 1 else f'{magnitude}{monomial}')
        if not terms:
            terms.append(body if c > 0 else f'-{body}')
        else:
            terms.append(f'+ {body}' if c > 0 else f'- {body}')
    return ' '.join(terms) if terms else '0'


def tutte_table(polynomial: TuttePolynomial) -> pd.DataFrame:
    """Returns the coefficients t_ij as a table (rows i, columns j)."""
    if not polynomial.coeffs:
        return pd.DataFrame()
    max_i = max(i for i, _ in polynomial.coeffs)
    max_j = max(j for _, j in polynomial.coeffs)
    table = pd.DataFrame(
        [[polynomial[(i, j)] for j in range(max_j + 1)]
         for i in range(max_i + 1)],
        index=pd.Index(range(max_i + 1), name='i'),
        columns=pd.Index(range(max_j + 1), name='j')
    )
    return table


def emit(doc: dict, as_json: bool, out: Optional[Path]) -> None:
    """Writes a JSON document to a file and/or to stdout."""
    text = json.dumps(doc, indent=1, ensure_ascii=False)
    if out is not None:
        with open(out, 'w') as f:
            f.write(text + '\n')
    if as_json:
        click.echo(text)


def header(title: str, as_json: bool) -> None:
    if not as_json:
        click.secho(f'{title}\n', bold=True, reverse=True)

