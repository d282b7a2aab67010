# -*- coding: utf-8 -*-
#
# This file is part of the Dhvani project.
# Copyright (C) 2025  Dhvani developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA
"""
Parallel processing of a batch of input files.

Every file is independent: per-file seeds derive from the file URI, results
are reported in input order, so the number of workers never shows in outputs.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from threading import Lock
from typing import Any, Callable, Dict, Iterable, List, Optional

import arrow
from ordered_set import OrderedSet

from dhvani.lib.exceptions import DhvaniException

_log = logging.getLogger(__name__)


@dataclass
class RunSummary:
    """
    Outcome of a run.

    Attributes:
        items: Processed items, in input order, duplicates removed.
        results: Result of every successful item.
        errors: Error message of every failed item.
        started: When the run started.
        finished: When the run finished.
    """

    items: List[str] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    errors: Dict[str, str] = field(default_factory=dict)
    started: Optional[arrow.Arrow] = None
    finished: Optional[arrow.Arrow] = None

    @property
    def ok(self) -> bool:
        return not self.errors

    def ordered_results(self) -> List[Any]:
        """Results of the successful items, in input order."""
        return [self.results[item] for item in self.items if item in self.results]


class Runner:
    """
    Run a job over a batch of items with a bounded pool of workers.

    Attributes:
        workers (int): Number of parallel workers.
        error_counter (int): Number of failed items in the current run.
        error_counter_lock (`Lock`): Lock for `error_counter`.
        success_counter (int): Number of items processed successfully.
        success_counter_lock (`Lock`): Lock for `success_counter`.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError("workers must be at least 1")
        self.workers = workers
        self.error_counter_lock = Lock()
        self.error_counter = 0
        self.success_counter_lock = Lock()
        self.success_counter = 0
        _log.debug("Runner initialized with %s worker(s)", workers)

    def clear_counters(self):
        """
        Clear all counters.
        """
        with self.error_counter_lock:
            self.error_counter = 0
        with self.success_counter_lock:
            self.success_counter = 0

    def process(self, job: Callable[[str], Any], item: str, summary: RunSummary):
        """
        Run the job on one item and record its outcome.

        Processing errors, including OS errors and invalid input data, are
        recorded and logged; anything else propagates.
        """
        try:
            _log.debug("Processing %s", item)
            result = job(item)
        except (DhvaniException, OSError, ValueError) as err:
            _log.error("%s: %s", item, str(err))
            with self.error_counter_lock:
                self.error_counter += 1
                summary.errors[item] = str(err)
            return
        with self.success_counter_lock:
            self.success_counter += 1
            summary.results[item] = result

    def run(self, job: Callable[[str], Any], items: Iterable[str]) -> RunSummary:
        """
        Run ``job`` on every item.

        Args:
            job: Callable taking one item (usually a file path).
            items: The items; duplicates are processed once.

        Returns:
            The run summary.
        """
        self.clear_counters()
        queue = list(OrderedSet(items))
        summary = RunSummary(items=queue, started=arrow.utcnow())
        if not queue:
            summary.finished = summary.started
            return summary

        _log.info(
            "Starting run on %s item(s) with %s worker(s)", len(queue), self.workers
        )
        if self.workers == 1:
            for item in queue:
                self.process(job, item, summary)
        else:
            futures = {}
            items_iter = iter(queue)
            items_left = len(queue)
            with ThreadPoolExecutor(self.workers) as pool:
                while items_left:
                    for item in items_iter:
                        future = pool.submit(self.process, job, item, summary)
                        futures[future] = item
                        if len(futures) > self.workers:
                            break  # limit job submissions

                    for future in as_completed(futures):
                        items_left -= 1
                        # Re-raise anything that isn't a processing error
                        future.result()
                        del futures[future]
                        break  # give a chance to add more jobs

        summary.finished = arrow.utcnow()
        _log.info(
            "Run done in %.1f s. Processed (%s): error (%s), success (%s)",
            (summary.finished - summary.started).total_seconds(),
            len(queue),
            self.error_counter,
            self.success_counter,
        )
        return summary
