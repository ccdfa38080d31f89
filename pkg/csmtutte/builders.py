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

"""Contains the ReportBuilder class.

The builder pattern organizes object construction into a set of steps
(set_matroid, compute_cycles, verify, check_balancing, etc). To create
reports, you execute a series of these steps on a builder object (here, a
ReportBuilder instance). You don't need to call all of the steps: only the
ones producing the reports you are interested in.

If the client code needs a special, fine-tuned set of reports, it can work
with the builder directly. Otherwise, the user can delegate the assembly to
the generate function (or directly one of the recipes), which knows how to
use a builder to construct the most standard reports.
"""

from collections import namedtuple
from typing import Iterable, Optional, Sequence

from tqdm import tqdm

from csmtutte.csm.cycles import csm_cycle
from csmtutte.csm.verification import verify_degree
from csmtutte.invariants.flags import check_loopless
from csmtutte.invariants.tutte import tutte
from csmtutte.matroids.core import Matroid
from csmtutte.products.reports import VerificationReport
from csmtutte.tropical.fans import balancing_check, bergman_fan
from csmtutte.utils.exceptions import InputError

Reports = namedtuple('Reports', ('matroid', 'tutte', 'verification',
                                 'balancing'))


class ReportBuilder:
    """The builder used to create reports about a matroid.

    It specifies methods for creating the different parts (or building
    steps) of the reports, and provides their implementations.
    """
    __slots__ = ('_matroid', '_order', '_seeds', '_progress', '_tutte',
                 '_cycles', '_verification', '_balancing')

    def __init__(self):
        self._matroid = None
        self._order = None
        self._seeds = ()
        self._progress = False
        self._tutte = None
        self._cycles = None
        self._verification = None
        self._balancing = None

    def set_matroid(self,
                    matroid: Matroid,
                    order: Optional[Sequence[int]] = None,
                    seeds: Iterable[int] = (),
                    progress: bool = False) -> None:
        """Sets the matroid (and the parameters) used by following steps.

        Args:
            matroid: A matroid on {0,...,n}.
            order: Optional; a total order of the ground set.
            seeds: Optional; seeds of extra random perturbation directions.
            progress: Optional; whether to display progress bars.
        """
        self._matroid = matroid
        self._order = None if order is None else tuple(order)
        self._seeds = tuple(seeds)
        self._progress = progress

    def _require_matroid(self) -> Matroid:
        if self._matroid is None:
            raise InputError('set_matroid must be called first')
        return self._matroid

    def compute_tutte(self) -> None:
        """Computes the Tutte polynomial (activities, given order)."""
        self._tutte = tutte(self._require_matroid(), self._order)

    def compute_cycles(self) -> None:
        """Computes every CSM cycle csm_0(M), ..., csm_d(M)."""
        matroid = self._require_matroid()
        check_loopless(matroid)
        self._cycles = [csm_cycle(matroid, k)
                        for k in range(matroid.rank())]

    def verify(self) -> None:
        """Computes the degrees of the CSM cycles in three ways."""
        matroid = self._require_matroid()
        check_loopless(matroid)
        if self._tutte is None:
            self.compute_tutte()
        rows = []
        for k in tqdm(range(matroid.rank()), desc=f'{matroid.name}: k',
                      leave=False, disable=not self._progress):
            rows.append(verify_degree(matroid, k, self._seeds, self._order,
                                      self._tutte[(k + 1, 0)]))
        self._verification = VerificationReport(matroid.name, matroid.rank(),
                                                rows)

    def check_balancing(self) -> None:
        """Checks the balancing of the Bergman fan and of each CSM cycle."""
        matroid = self._require_matroid()
        if self._cycles is None:
            self.compute_cycles()
        report = balancing_check(bergman_fan(matroid))
        report.label = 'Bergman fan'
        reports = [report]
        for cycle in self._cycles:
            report = balancing_check(cycle.fan)
            report.label = f'csm_{cycle.k}'
            reports.append(report)
        self._balancing = tuple(reports)

    def get_reports(self) -> Reports:
        """Returns the reports computed so far, and resets the builder."""
        reports = Reports(self._matroid, self._tutte, self._verification,
                          self._balancing)
        # Reset attributes
        self._matroid = None
        self._order = None
        self._seeds = ()
        self._progress = False
        self._tutte = None
        self._cycles = None
        self._verification = None
        self._balancing = None
        return reports
