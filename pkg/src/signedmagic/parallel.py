#!/usr/bin/env python3
"""Parallel processing module for sweeping many parameter triples."""

import asyncio
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .assembler import generate_with_route
from .core import params_new
from .errors import InadmissibleParametersError, SearchExhaustedError, SignedMagicError
from .search import SearchBudget
from .verifier import verify_smr

Triple = Tuple[int, int, int]


@dataclass
class SweepOutcome:
    """Result of generating and re-verifying one triple."""

    triple: Triple
    status: str
    route: Optional[str] = None
    elapsed_ms: int = 0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def run_triple(triple: Triple, budget: SearchBudget) -> SweepOutcome:
    """
    Generate one rectangle and verify it independently.

    Runs in a worker process, so everything it takes and returns pickles.
    """
    start = time.perf_counter()
    route = None
    try:
        rect, chosen = generate_with_route(*triple, budget=budget)
        route = chosen.value
        report = verify_smr(rect, params_new(*triple))
        status = "pass" if report.passed else "fail"
        detail = "" if report.passed else report.summary()
    except InadmissibleParametersError as e:
        status, detail = "inadmissible", e.condition
    except SearchExhaustedError as e:
        status, detail = "exhausted", str(e)
    except SignedMagicError as e:
        status, detail = "error", str(e)
    elapsed = int((time.perf_counter() - start) * 1000)
    return SweepOutcome(triple, status, route, elapsed, detail)


class SweepProcessor:
    """Run triples through generate, in worker processes when asked to."""

    def __init__(self, max_workers: int = 1, budget: Optional[SearchBudget] = None):
        """
        Initialize sweep processor.

        Args:
            max_workers: Maximum number of concurrent worker processes
            budget: Search limits applied to every triple
        """
        self.max_workers = max_workers
        self.budget = budget or SearchBudget()

    async def process_triples(self, triples: Sequence[Triple]) -> List[SweepOutcome]:
        """
        Process triples, in parallel when more than one worker is configured.

        Args:
            triples: Parameter triples to generate

        Returns:
            One outcome per triple, in input order
        """
        if self.max_workers == 1:
            return await self._process_sequential(triples)

        loop = asyncio.get_running_loop()
        self.semaphore = asyncio.Semaphore(self.max_workers)
        with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
            tasks = [self._process_single(loop, pool, triple) for triple in triples]
            results = await asyncio.gather(*tasks, return_exceptions=True)

        processed = []
        for triple, result in zip(triples, results):
            if isinstance(result, BaseException):
                processed.append(SweepOutcome(triple, "error", detail=str(result)))
            else:
                processed.append(result)
        return processed

    async def _process_single(self, loop, pool, triple: Triple) -> SweepOutcome:
        async with self.semaphore:
            return await loop.run_in_executor(pool, run_triple, triple, self.budget)

    async def _process_sequential(
        self, triples: Sequence[Triple]
    ) -> List[SweepOutcome]:
        """Process triples one after another in this process (fallback method)."""
        results = []
        for triple in triples:
            results.append(run_triple(triple, self.budget))
            await asyncio.sleep(0)
        return results


class SweepTally:
    """Count sweep outcomes by status as they come in."""

    def __init__(self, total_items: int):
        self.total_items = total_items
        self.by_status: Counter = Counter()
        self.elapsed_ms = 0

    def record(self, outcome: SweepOutcome) -> None:
        self.by_status[outcome.status] += 1
        self.elapsed_ms += outcome.elapsed_ms

    @property
    def completed_items(self) -> int:
        return sum(self.by_status.values())

    @property
    def failed_items(self) -> int:
        return self.completed_items - self.by_status["pass"]

    def all_passed(self) -> bool:
        return self.completed_items == self.total_items and self.failed_items == 0

    def summary(self) -> str:
        """One line such as "12/12 passed" or "10/12 passed (1 fail, 1 exhausted)"."""
        line = f"{self.by_status['pass']}/{self.total_items} passed"
        others = sorted((s, c) for s, c in self.by_status.items() if s != "pass")
        if others:
            line += " (" + ", ".join(f"{c} {s}" for s, c in others) + ")"
        return line
