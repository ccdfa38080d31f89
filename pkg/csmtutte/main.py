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

"""Contains "generate" (a function) and some standard recipes.

The "generate" function is the user-friendly way of using csmtutte. You give
the kind of report you want, a config dictionary and that's all: you can
then get the reports you asked for! It will automatically call the right
recipe, parse parameters (values in the config dict), and save generated
reports if asked.

Each recipe is responsible for executing the building steps in a particular
sequence (while the builder provides the implementation for those steps).
Strictly speaking, these recipes are optionals, since the client can control
the builder directly.
"""

from collections import namedtuple
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import psutil
import ray
from tqdm import tqdm

from csmtutte.builders import ReportBuilder
from csmtutte.invariants.tutte import TuttePolynomial
from csmtutte.matroids.core import Matroid
from csmtutte.products.reports import BalancingReport, VerificationReport
from csmtutte.utils.config import parallel_config
from csmtutte.utils.main import (generate_report_filename, parse_params,
                                 safe_name)


def create_tutte_polynomial(matroid: Matroid,
                            order: Optional[Sequence[int]] = None
                            ) -> TuttePolynomial:
    """Returns the Tutte polynomial of a matroid (computed from activities).

    Args:
        matroid: A matroid.
        order: Optional; the total order used to compute activities.
    """
    builder = ReportBuilder()
    builder.set_matroid(matroid, order)
    builder.compute_tutte()
    return builder.get_reports().tutte


def create_verification_report(matroid: Matroid,
                               order: Optional[Sequence[int]] = None,
                               seeds: Iterable[int] = (),
                               progress: bool = False,
                               save: bool = False,
                               dirname: Optional[Path] = None,
                               filename: Optional[Union[str, Path]] = None
                               ) -> VerificationReport:
    """Returns the verification report of the CSM degree formula.

    Args:
        matroid: A loopless matroid on {0,...,n}.
        order: Optional; the order used by the combinatorial route.
        seeds: Optional; seeds of extra random perturbation directions.
        progress: Optional; whether to display a progress bar.
        save: If True, write the report on disk.
        dirname: The path of the directory in which the report will be
            written (using an automatically generated name).
        filename: The wanted path of the report.
    """
    builder = ReportBuilder()
    builder.set_matroid(matroid, order, seeds, progress)
    builder.verify()
    report = builder.get_reports().verification

    if save:
        if filename is None:
            filename = generate_report_filename(matroid)
            if dirname is not None:
                filename = dirname / filename
        report.save(filename)

    return report


def create_balancing_reports(matroid: Matroid
                             ) -> Tuple[BalancingReport, ...]:
    """Returns balancing reports of the Bergman fan and of each csm_k(M)."""
    builder = ReportBuilder()
    builder.set_matroid(matroid)
    builder.check_balancing()
    return builder.get_reports().balancing


@ray.remote
def _mp_verification_report(matroid: Matroid,
                            order: Optional[Sequence[int]] = None,
                            seeds: Iterable[int] = ()) -> VerificationReport:
    return create_verification_report(matroid, order, seeds)


def create_batch_verification_reports(matroids: List[Matroid],
                                      seeds: Iterable[int] = (),
                                      num_cpus: Optional[int] = None,
                                      parallel: bool = True,
                                      progress: bool = False,
                                      save: bool = False,
                                      dirname: Optional[Path] = None
                                      ) -> Tuple[VerificationReport, ...]:
    """Returns verification reports of several matroids.

    Args:
        matroids: The list of matroids (with distinct names).
        seeds: Optional; seeds of extra random perturbation directions.
        num_cpus: The number of central processing units to use.
        parallel: If False, reports are computed one after the other in this
            process.
        progress: Optional; whether to display a progress bar (sequential
            mode only).
        save: If True, write reports on disk.
        dirname: The path of the directory in which reports will be written
            (using automatically generated names).

    Returns:
        A namedtuple of VerificationReports, with one field per matroid.

        matroids = [<U23>, <K4>]
        -> Collection(U23=<report>, K4=<report>)
    """
    Collection = namedtuple(
        'Collection',
        (safe_name(matroid.name or f'matroid_{i}')
         for i, matroid in enumerate(matroids)),
        rename=True
    )
    seeds = tuple(seeds)

    if parallel:
        if num_cpus is None:
            num_cpus = parallel_config['num_cpus']
        cpus = [psutil.cpu_count(logical=False), len(matroids), num_cpus]
        num_cpus = min(val for val in cpus if val is not None)
        if ray.is_initialized():
            ray.shutdown()
        ray.init(num_cpus=num_cpus)
        futures = [_mp_verification_report.remote(matroid, None, seeds)
                   for matroid in matroids]
        res = ray.get(futures)
        ray.shutdown()
    else:
        res = [create_verification_report(matroid, None, seeds)
               for matroid in tqdm(matroids, desc='matroids',
                                   disable=not progress)]
    res = Collection(*res)

    if save:
        for report, matroid in zip(res, matroids):
            filename = generate_report_filename(matroid)
            if dirname is not None:
                filename = dirname / filename
            report.save(filename)

    return res


def generate(key: str, params: dict, save=False, parse_params_=True):
    """Returns the wanted reports. Can also save them.

    Args:
        key: What report to generate ('tutte', 'verification', 'balancing'
            or 'batch verification').
        params: A dict of params (a matroid may be given by its name in the
            catalog).
        save: If True, write them on disk.
        parse_params_: If True, the params dict is checked (using the
            parse_params function).
    """
    func = {
        'tutte': create_tutte_polynomial,
        'verification': create_verification_report,
        'balancing': create_balancing_reports,
        'batch verification': create_batch_verification_reports
    }
    if parse_params_:
        params = parse_params(key, params)
    if key in ('verification', 'batch verification'):
        params['save'] = save
    return func[key](**params)
