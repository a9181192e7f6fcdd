"""CLI orchestrator for the generate, verify, search, count and sweep workflows."""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple

import click
from rich.console import Console
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from .assembler import enumerate_params, generate_with_route
from .batch_reader import ParamsFileReader
from .config import OutputConfig, ParallelConfig, SearchConfig
from .core import Params, SparseRectangle, params_new
from .errors import (
    DimensionMismatchError,
    InadmissibleParametersError,
    RectangleParseError,
    SearchExhaustedError,
    SignedMagicError,
)
from .formatter import format_output, read_rectangle
from .parallel import SweepOutcome, SweepProcessor, SweepTally
from .search import SearchOutcome, count_smr, search_smr
from .verifier import VerificationReport, verify_smr

console = Console()
error_console = Console(stderr=True)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INADMISSIBLE = 2
EXIT_EXHAUSTED = 3
EXIT_IO = 4

_STATUS_STYLE = {
    "pass": "[green]pass[/green]",
    "fail": "[red]fail[/red]",
    "inadmissible": "[yellow]inadmissible[/yellow]",
    "exhausted": "[yellow]exhausted[/yellow]",
    "error": "[red]error[/red]",
}


def exit_code_for(error: BaseException) -> int:
    """Map a library exception onto the CLI exit-code scheme."""
    if isinstance(error, InadmissibleParametersError):
        return EXIT_INADMISSIBLE
    if isinstance(error, SearchExhaustedError):
        return EXIT_EXHAUSTED
    if isinstance(error, (RectangleParseError, OSError)):
        return EXIT_IO
    return EXIT_FAILED


class CLIOrchestrator:
    """Orchestrate the command workflows and turn their outcomes into exit codes."""

    def __init__(
        self,
        search_config: SearchConfig,
        output_config: OutputConfig,
        parallel_config: ParallelConfig,
    ):
        """
        Initialize CLI orchestrator.

        Args:
            search_config: Search limits and admissibility handling
            output_config: Output configuration
            parallel_config: Parallel processing configuration
        """
        self.search_config = search_config
        self.output_config = output_config
        self.parallel_config = parallel_config
        self.batch_reader = ParamsFileReader()

    @contextmanager
    def _spinner(self, description: str) -> Iterator[None]:
        if self.output_config.quiet:
            yield
            return
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=error_console,
            transient=True,
        ) as progress:
            task = progress.add_task(description, total=None)
            yield
            progress.update(task, completed=True)

    def _status(self, message: str) -> None:
        if not self.output_config.quiet:
            error_console.print(message)

    def _fail(self, error: BaseException) -> int:
        error_console.print(f"[red]Error:[/red] {escape(str(error))}", highlight=False)
        return exit_code_for(error)

    def handle_output(self, rect: SparseRectangle, params: Optional[Params]) -> int:
        """
        Write a rectangle to the output path, or stdout when none is set.

        Returns:
            EXIT_OK, or EXIT_IO when the file cannot be written
        """
        text = format_output(rect, self.output_config.output_format, params)
        if not self.output_config.output_path:
            click.echo(text, nl=False)
            return EXIT_OK
        output_path = Path(self.output_config.output_path)
        try:
            output_path.write_text(text, encoding="utf-8")
        except OSError as e:
            return self._fail(e)
        self._status(f"[green]✓[/green] Output saved to {output_path}")
        return EXIT_OK

    def run_generate(self, m: int, n: int, k: int) -> int:
        """Construct an SMR(m,n;k,3) and write it out."""
        try:
            params = params_new(m, n, k)
            with self._spinner(f"Constructing {params}..."):
                rect, route = generate_with_route(
                    m, n, k, self.search_config.budget()
                )
        except SignedMagicError as e:
            return self._fail(e)
        self._status(f"[green]✓[/green] {params} via {route.value}")
        return self.handle_output(rect, params)

    def print_report(self, report: VerificationReport) -> None:
        if report.passed:
            console.print(f"[green]✓[/green] {report.subject}: pass", highlight=False)
            return
        console.print(f"[red]✗[/red] {report.subject}: fail", highlight=False)
        for violation in report.violations:
            extra = report.counts[violation.rule] - 1
            more = f" (+{extra} more)" if extra > 0 else ""
            witness = "" if violation.witness is None else f" [{violation.witness}]"
            console.print(
                f"  {violation.rule}: {violation.detail}{witness}{more}",
                markup=False,
                highlight=False,
            )

    def run_verify(self, input_path: str, m: int, n: int, k: int) -> int:
        """Read a rectangle and report whether it is an SMR(m,n;k,3)."""
        try:
            rect = read_rectangle(input_path)
            params = params_new(m, n, k)
        except SignedMagicError as e:
            return self._fail(e)
        try:
            report = verify_smr(rect, params)
        except DimensionMismatchError as e:
            console.print(f"[red]✗[/red] {e.rule}: {e}", highlight=False)
            return EXIT_FAILED
        self.print_report(report)
        return EXIT_OK if report.passed else EXIT_FAILED

    def _search_params(self, m: int, n: int, k: int) -> Params:
        if self.search_config.allow_inadmissible:
            params = Params.unchecked(m, n, k)
            if not params.admissible:
                self._status(
                    f"[yellow]Warning:[/yellow] searching inadmissible {params}: "
                    f"{params.violation}"
                )
            return params
        return params_new(m, n, k)

    def run_search(self, m: int, n: int, k: int) -> int:
        """Run the exhaustive search oracle on one triple."""
        try:
            params = self._search_params(m, n, k)
            with self._spinner(f"Searching for {params}..."):
                result = search_smr(params, self.search_config.budget())
        except SignedMagicError as e:
            return self._fail(e)
        self._status(
            f"[cyan]{result.outcome.value}[/cyan] after {result.nodes} nodes, "
            f"{result.elapsed_ms} ms"
        )
        if result.outcome is SearchOutcome.FOUND:
            return self.handle_output(result.rectangle, params)
        if result.outcome is SearchOutcome.EXHAUSTED:
            error_console.print(
                f"[red]Error:[/red] desk-scale limit reached while searching for "
                f"{params} ({result.nodes} nodes)"
            )
            return EXIT_EXHAUSTED
        error_console.print(f"[red]Error:[/red] no {params} exists")
        return EXIT_FAILED

    def run_count(self, m: int, n: int, k: int, cap: int) -> int:
        """Count the arrays of a tiny shape, without symmetry reduction."""
        params = Params.unchecked(m, n, k)
        try:
            with self._spinner(f"Counting {params}..."):
                count = count_smr(params, cap, self.search_config.budget())
        except SignedMagicError as e:
            return self._fail(e)
        except ValueError as e:
            error_console.print(f"[red]Error:[/red] {e}")
            return EXIT_INADMISSIBLE
        click.echo(f"{params}: {count}")
        return EXIT_OK

    def run_enumerate(self, n_max: int) -> int:
        """List every admissible triple with n <= n_max, one per line."""
        for params in enumerate_params(n_max):
            click.echo(f"{params.m} {params.n} {params.k}")
        return EXIT_OK

    def _sweep_triples(
        self, n_max: Optional[int], batch_file: Optional[str]
    ) -> Tuple[List[Tuple[int, int, int]], Optional[int]]:
        if not batch_file:
            return [p.as_tuple() for p in enumerate_params(n_max or 0)], None
        is_valid, message = self.batch_reader.validate_batch_file(batch_file)
        if not is_valid:
            error_console.print(f"[red]Error:[/red] {message}")
            return [], EXIT_IO
        self._status(f"[cyan]{message}[/cyan]")
        try:
            triples, warnings = self.batch_reader.read_params_from_file(batch_file)
        except (OSError, ValueError) as e:
            error_console.print(f"[red]Error reading batch file:[/red] {e}")
            return [], EXIT_IO
        for warning in warnings:
            self._status(f"[yellow]Warning:[/yellow] {warning}")
        return triples, None

    def print_sweep_table(self, outcomes: Sequence[SweepOutcome]) -> None:
        table = Table(title="Sweep")
        table.add_column("m n k", justify="right")
        table.add_column("route")
        table.add_column("status")
        table.add_column("ms", justify="right")
        for outcome in outcomes:
            table.add_row(
                " ".join(str(x) for x in outcome.triple),
                outcome.route or "-",
                _STATUS_STYLE.get(outcome.status, outcome.status),
                str(outcome.elapsed_ms),
            )
        console.print(table)

    async def run_sweep(
        self, n_max: Optional[int] = None, batch_file: Optional[str] = None
    ) -> int:
        """
        Generate and verify every admissible triple up to n_max, or every
        triple in a batch file.

        Returns:
            EXIT_OK iff every triple passed
        """
        triples, failure = self._sweep_triples(n_max, batch_file)
        if failure is not None:
            return failure
        if not triples:
            error_console.print("[red]Error:[/red] No parameter triples to sweep")
            return EXIT_FAILED

        workers = self.parallel_config.max_workers
        parallel_info = f" (using {workers} workers)" if workers > 1 else ""
        self._status(f"[cyan]Sweeping {len(triples)} triples{parallel_info}[/cyan]")

        processor = SweepProcessor(workers, self.search_config.budget())
        with self._spinner("Generating and verifying..."):
            outcomes = await processor.process_triples(triples)

        tally = SweepTally(len(triples))
        for outcome in outcomes:
            tally.record(outcome)
        if not self.output_config.quiet:
            self.print_sweep_table(outcomes)
        for outcome in outcomes:
            if not outcome.passed and outcome.detail:
                error_console.print(
                    f"  {outcome.triple}: {outcome.detail}", markup=False
                )
        mark = "[green]✓[/green]" if tally.all_passed() else "[red]✗[/red]"
        console.print(f"{mark} {tally.summary()}", highlight=False)
        return EXIT_OK if tally.all_passed() else EXIT_FAILED
