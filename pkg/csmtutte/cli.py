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

"""Defines the CLI of csmtutte (powered by click).

Exit codes: 0 on success, 1 when a verification fails (degrees, balancing),
2 on input errors (malformed documents, violated preconditions, usage).
"""

import sys

import click

from csmtutte._version import __version__
from csmtutte.catalogs import long_names, matroid_catalog, slow_matroids
from csmtutte.csm.cycles import csm_cycle
from csmtutte.invariants.flags import (beta_expansion, beta_product,
                                       broken_circuit_h_vector, glv_count,
                                       increasing_flags, proper_flags)
from csmtutte.invariants.tutte import poly_coefficients, reduced_char_poly
from csmtutte.main import generate
from csmtutte.tropical.fans import (WeightedFan, balancing_check, bergman_fan,
                                    cone_of_flag)
from csmtutte.tropical.intersection import intersect
from csmtutte.utils.cli import (PathPath, emit, exclusive_sources,
                                exit_on_error, header, parse_matroid_spec,
                                parse_order, read_document, render_poly,
                                tutte_table)
from csmtutte.utils.registration import check_corpus
from csmtutte.utils.subsets import render_subset

json_option = click.option('--json', 'as_json', is_flag=True,
                           help='print a JSON document instead of tables')
out_option = click.option('--out', '-o', type=PathPath(dir_okay=False),
                          help='the path of a JSON file to write')
order_option = click.option('--order',
                            help=('a total order of the ground set, given as '
                                  'a comma separated permutation (e.g. '
                                  '"2,0,1")'))


def _load(spec, order=None):
    matroid, doc_order = parse_matroid_spec(spec)
    order = parse_order(order)
    return matroid, doc_order if order is None else order


def _check_k(matroid, k):
    if k is not None and not 0 <= k <= matroid.rank() - 1:
        msg = f'k must lie in 0..{matroid.rank() - 1} for this matroid'
        raise click.BadParameter(msg, param_hint='--k')


def _fan_of(spec, fan, k):
    """Returns the fan given as a file, or csm_k(M) (Bergman fan if no k)."""
    exclusive_sources(spec, fan)
    if fan is not None:
        return 'fan', WeightedFan.from_dict(read_document(str(fan)))
    matroid, _ = _load(spec)
    _check_k(matroid, k)
    if k is None:
        return 'Bergman fan', bergman_fan(matroid)
    return f'csm_{k}', csm_cycle(matroid, k).fan


@click.group()
@click.version_option(__version__)
def cli():
    """csmtutte computes Chern-Schwartz-MacPherson cycles of matroids as
    weighted tropical fans, and checks that their degrees are signed
    coefficients of the Tutte polynomial.

    A matroid SPEC is either "uniform r m", the name of a matroid of the
    corpus (see "csmtutte corpus"), '-' (a JSON document read from stdin),
    the path of a JSON document, or an inline JSON document. Documents
    describe bases ({"ground_size", "bases"}), graphs ({"vertex_count",
    "edges"}) or matrices ({"field", "rows"}, field being 0 or a prime)."""


@cli.command('corpus')
@click.argument('name', required=False)
@click.option('--check', is_flag=True,
              help='build every named matroid to check the corpus files')
def cmd_corpus(name, check):
    """Lists named matroids (or prints the bases of one of them)."""
    if check:
        if not check_corpus(matroid_catalog):
            sys.exit(1)
        return
    if name is None:
        click.secho('AVAILABLE MATROIDS\n', bold=True, reverse=True)
        for key in matroid_catalog:
            slow = ' [slow]' if key in slow_matroids else ''
            click.echo(f'{click.style(key, underline=True)}: '
                       f'{long_names[key]}{slow}')
        return
    if name not in matroid_catalog:
        click.secho(f'Error: "{name}" is not a named matroid', err=True,
                    fg='red')
        sys.exit(2)
    emit(matroid_catalog[name]().to_dict(), True, None)


@cli.command('tutte')
@click.argument('spec')
@order_option
@json_option
@out_option
@exit_on_error
def cmd_tutte(spec, order, as_json, out):
    """Computes the Tutte polynomial from basis activities."""
    matroid, order = _load(spec, order)
    polynomial = generate('tutte', {'matroid': matroid, 'order': order})
    loops = matroid.loops()
    chi = None if loops else reduced_char_poly(matroid, shifted=True)
    doc = {
        'matroid': matroid.name,
        'ground_size': matroid.size,
        'rank': matroid.rank(),
        'tutte': polynomial.to_dict(),
        'rendered': str(polynomial),
        'beta': polynomial[(1, 0)],
        'reduced_char_poly_shifted': (None if chi is None
                                      else poly_coefficients(chi))
    }
    emit(doc, as_json, out)
    if as_json:
        return
    header('TUTTE POLYNOMIAL', as_json)
    click.echo(f'T(M; x, y) = {polynomial}')
    click.echo(f'beta(M) = {polynomial[(1, 0)]}\n')
    click.echo(tutte_table(polynomial).to_string())
    click.echo()
    if chi is None:
        click.secho(f'M has loops {render_subset(loops)}: the reduced '
                    'characteristic polynomial is only defined for loopless '
                    'matroids.', fg='yellow')
    else:
        click.echo(f'reduced characteristic polynomial at q + 1: '
                   f'{render_poly(chi)}')


@cli.command('csm')
@click.argument('spec')
@click.option('--k', '-k', type=click.INT,
              help='the index of the CSM cycle (all cycles if omitted)')
@json_option
@out_option
@exit_on_error
def cmd_csm(spec, k, as_json, out):
    """Builds CSM cycles, i.e. weighted skeleta of the Bergman fan."""
    matroid, _ = _load(spec)
    _check_k(matroid, k)
    ks = range(matroid.rank()) if k is None else [k]
    cycles = []
    for cycle in (csm_cycle(matroid, k_) for k_ in ks):
        flags = sorted(cycle.weights.items(),
                       key=lambda item: cone_of_flag(item[0],
                                                     validate=False).key)
        cycles.append({
            'k': cycle.k,
            'fan': cycle.fan.to_dict(),
            'flags': [{'flag': flag.to_list(), 'weight': w}
                      for flag, w in flags],
            'null_flags': [flag.to_list() for flag in cycle.null_flags]
        })
        if not as_json:
            header(f'csm_{cycle.k}(M): {len(flags)} cones', as_json)
            for flag, w in flags:
                click.echo(f'{w:+d}  {flag.render()}')
            if cycle.null_flags:
                click.echo(f'({len(cycle.null_flags)} flags of weight 0)')
            click.echo()
    emit({'matroid': matroid.name, 'rank': matroid.rank(), 'cycles': cycles},
         as_json, out)


@cli.command('verify')
@click.argument('spec', required=False)
@click.option('--seed', '-s', type=click.INT, multiple=True,
              help='the seed of an extra random perturbation direction')
@order_option
@click.option('--corpus', is_flag=True,
              help='verify every matroid of the corpus')
@click.option('--slow', is_flag=True,
              help='with --corpus, include slow matroids too')
@click.option('--num_cpus', type=click.INT,
              help='the maximum number of central processing units used')
@click.option('--sequential', is_flag=True,
              help='with --corpus, do not spawn worker processes')
@json_option
@out_option
@exit_on_error
def cmd_verify(spec, seed, order, corpus, slow, num_cpus, sequential,
               as_json, out):
    """Checks deg(csm_k(M)) = (-1)^(d-k) t_(k+1),0 in three ways."""
    if corpus:
        names = [name for name in matroid_catalog
                 if slow or name not in slow_matroids]
        reports = list(generate('batch verification', {
            'matroids': names,
            'seeds': seed,
            'num_cpus': num_cpus,
            'parallel': not sequential,
            'progress': not as_json
        }))
        doc = {'reports': [report.to_dict() for report in reports],
               'pass': all(report.passed for report in reports)}
    elif spec is None:
        raise click.UsageError('give a matroid spec, or use --corpus')
    else:
        matroid, order = _load(spec, order)
        reports = [generate('verification', {
            'matroid': matroid,
            'order': order,
            'seeds': seed,
            'progress': not as_json
        })]
        doc = reports[0].to_dict()
    emit(doc, as_json, out)
    if not as_json:
        for report in reports:
            header(f'{report.matroid} (rank {report.rank})', as_json)
            click.echo(report.to_frame().to_string())
            if report.passed:
                click.secho('PASS\n', fg='green')
            else:
                click.secho('FAIL\n', fg='red')
    if not all(report.passed for report in reports):
        sys.exit(1)


@cli.command('balance')
@click.argument('spec', required=False)
@click.option('--fan', type=PathPath(exists=True, dir_okay=False),
              help='the path of a JSON fan document')
@json_option
@out_option
@exit_on_error
def cmd_balance(spec, fan, as_json, out):
    """Checks the balancing condition of the Bergman fan and of every CSM
    cycle (or of a fan document)."""
    exclusive_sources(spec, fan)
    if fan is not None:
        report = balancing_check(
            WeightedFan.from_dict(read_document(str(fan)))
        )
        report.label = fan.name
        reports = [report]
    else:
        matroid, _ = _load(spec)
        reports = list(generate('balancing', {'matroid': matroid}))
    balanced = all(report.balanced for report in reports)
    emit({'reports': [report.to_dict() for report in reports],
          'balanced': balanced}, as_json, out)
    if not as_json:
        header('BALANCING', as_json)
        for report in reports:
            if report.balanced:
                click.secho(f'{report.label}: balanced ({report.ridges} '
                            'ridges)', fg='green')
                continue
            click.secho(f'{report.label}: NOT balanced', fg='red')
            for failure in report.failures:
                rays = ', '.join(str(ray) for ray in failure.ridge) or 'origin'
                click.echo(f'  ridge [{rays}]: weighted sum '
                           f'{failure.residual} out of its span')
    if not balanced:
        sys.exit(1)


@cli.command('flags')
@click.argument('spec')
@click.option('--length', '-l', type=click.INT,
              help='the length of the flags (all lengths if omitted)')
@click.option('--increasing', is_flag=True,
              help='only list increasing flags')
@order_option
@json_option
@out_option
@exit_on_error
def cmd_flags(spec, length, increasing, order, as_json, out):
    """Lists flags of flats, the beta expansion of T(M; x, 0) and the
    h-vector of the broken circuit complex."""
    matroid, order = _load(spec, order)
    if length is not None and not 1 <= length <= matroid.rank():
        msg = f'length must lie in 1..{matroid.rank()} for this matroid'
        raise click.BadParameter(msg, param_hint='--length')
    lengths = range(1, matroid.rank() + 1) if length is None else [length]
    rows = []
    for k in lengths:
        flags = (increasing_flags(matroid, k, order) if increasing
                 else proper_flags(matroid, k))
        for flag in flags:
            rows.append({'length': k,
                         'flag': flag.to_list(),
                         'increasing': flag.is_increasing(order),
                         'beta_product': beta_product(matroid, flag),
                         'rendered': flag.render()})
    expansion = beta_expansion(matroid, order)
    h_vector = broken_circuit_h_vector(matroid, order)
    glv = {k: glv_count(matroid, k, order)
           for k in range(1, matroid.rank() + 1)}
    emit({'matroid': matroid.name,
          'order': list(order) if order else None,
          'flags': [{key: row[key] for key in row if key != 'rendered'}
                    for row in rows],
          'beta_expansion': poly_coefficients(expansion),
          'h_vector': list(h_vector),
          'glv_counts': {str(k): c for k, c in glv.items()}},
         as_json, out)
    if as_json:
        return
    header('FLAGS OF FLATS', as_json)
    for row in rows:
        mark = '*' if row['increasing'] else ' '
        click.echo(f'{mark} {row["rendered"]}  beta {row["beta_product"]}')
    order_text = 'the natural order' if order is None else list(order)
    click.echo(f'\n(*: increasing for {order_text})')
    click.echo(f'beta expansion: {render_poly(expansion)}')
    click.echo(f'h-vector of the broken circuit complex: {h_vector}')
    click.echo('GLV witnesses per length: '
               + ', '.join(f'{k}: {c}' for k, c in glv.items()))


@cli.command('degree')
@click.argument('spec', required=False)
@click.option('--fan', type=PathPath(exists=True, dir_okay=False),
              help='the path of a JSON fan document')
@click.option('--k', '-k', type=click.INT,
              help='intersect csm_k(M) (default: the Bergman fan of M)')
@click.option('--seed', '-s', type=click.INT, multiple=True,
              help='the seed of the perturbation direction (repeatable)')
@click.option('--random-chamber', is_flag=True,
              help='draw directions in random chambers (default: v_0 > ... '
                   '> v_n)')
@json_option
@out_option
@exit_on_error
def cmd_degree(spec, fan, k, seed, random_chamber, as_json, out):
    """Intersects a fan with a generic tropical linear space of
    complementary dimension and sums multiplicities."""
    label, fan_ = _fan_of(spec, fan, k)
    seeds = seed or (None,)
    reports = [intersect(fan_, s, not random_chamber) for s in seeds]
    degrees = {report.degree for report in reports}
    emit({'fan': label,
          'degree': reports[0].degree,
          'stable': len(degrees) == 1,
          'intersections': [{'seed': s, **report.to_dict()}
                            for s, report in zip(seeds, reports)]},
         as_json, out)
    if not as_json:
        header(f'DEGREE OF THE {label.upper()}', as_json)
        for s, report in zip(seeds, reports):
            click.echo(f'seed {s}: degree {report.degree} '
                       f'({len(report.points)} points)')
            for point in report.points:
                coords = ', '.join(str(c) for c in point.point)
                click.echo(f'  ({coords})  multiplicity {point.multiplicity}'
                           f', index {point.index}')
    if len(degrees) > 1:
        sys.exit(1)
