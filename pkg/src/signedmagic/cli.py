#!/usr/bin/env python3
"""CLI interface for the signed magic rectangle toolkit."""

import asyncio
import sys

import click

from .cli_orchestrator import CLIOrchestrator
from .config import OUTPUT_FORMATS, ConfigBuilder


def _orchestrator(**kwargs) -> CLIOrchestrator:
    search_config, output_config, parallel_config = ConfigBuilder.build_all_configs(
        **kwargs
    )
    return CLIOrchestrator(
        search_config=search_config,
        output_config=output_config,
        parallel_config=parallel_config,
    )


def _run(workflow) -> None:
    """Run a workflow and exit with its code."""
    try:
        code = workflow()
    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        sys.exit(1)
    sys.exit(code)


def quiet_option(func):
    return click.option(
        "--quiet", "-q", is_flag=True, help="Suppress progress messages"
    )(func)


def output_options(func):
    func = quiet_option(func)
    func = click.option(
        "-o",
        "--output",
        type=click.Path(dir_okay=False),
        help="Output file path (default: stdout)",
    )(func)
    func = click.option(
        "-f",
        "--format",
        type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
        default="text",
        help="Output format (default: text)",
    )(func)
    return func


def budget_options(func):
    func = click.option(
        "--budget-ms",
        type=click.IntRange(min=1),
        default=60_000,
        help="Wall-clock limit per search in milliseconds (default: 60000)",
    )(func)
    func = click.option(
        "--budget-nodes",
        type=click.IntRange(min=1),
        default=10_000_000,
        help="Node limit per search (default: 10000000)",
    )(func)
    return func


def sweep_options(func):
    func = click.option(
        "--batch",
        type=click.Path(exists=True, dir_okay=False, readable=True),
        help="Read m n k triples from a file (one per line, # comments allowed)",
    )(func)
    func = click.option(
        "-j",
        "--proc",
        type=click.IntRange(1, 32),
        default=1,
        help="Number of worker processes (default: 1, max: 32)",
    )(func)
    return func


@click.group()
@click.version_option(package_name="signedmagic")
def main():
    """
    Generate, verify and search signed magic rectangles SMR(m,n;k,3).

    An SMR(m,n;k,3) is an m x n array with k filled cells per row and 3 per
    column, using every symbol of {0,±1,...} (mk odd) or {±1,...} (mk even)
    exactly once, with every row and column summing to zero. One exists
    exactly when mk = 3n and 3 <= m, k <= n.

    Examples:

        # Construct and print an SMR(10,30;9,3)
        signedmagic generate 10 30 9

        # Save as JSON and check it
        signedmagic generate 4 12 9 -f json -o smr.json
        signedmagic verify smr.json 4 12 9

        # Generate and verify every admissible triple up to n = 60
        signedmagic sweep 60 -j 4
    """


@main.command()
@click.argument("m", type=int, required=False)
@click.argument("n", type=int, required=False)
@click.argument("k", type=int, required=False)
@output_options
@budget_options
@sweep_options
@click.option(
    "--sweep",
    "sweep_n_max",
    type=click.IntRange(min=0),
    help="Instead, generate and verify every admissible triple with n <= N",
)
def generate(m, n, k, sweep_n_max, **kwargs):
    """Construct an SMR(M,N;K,3) and write it out."""
    orchestrator = _orchestrator(**kwargs)
    if sweep_n_max is not None or kwargs.get("batch"):
        _run(
            lambda: asyncio.run(
                orchestrator.run_sweep(sweep_n_max, kwargs.get("batch"))
            )
        )
    if None in (m, n, k):
        click.echo("Error: M, N and K are required unless --sweep is given", err=True)
        sys.exit(2)
    _run(lambda: orchestrator.run_generate(m, n, k))


@main.command()
@click.argument("input_path", metavar="PATH", type=str)
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.argument("k", type=int)
@quiet_option
def verify(input_path, m, n, k, **kwargs):
    """Check that the CSV or JSON array in PATH is an SMR(M,N;K,3)."""
    orchestrator = _orchestrator(**kwargs)
    _run(lambda: orchestrator.run_verify(input_path, m, n, k))


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.argument("k", type=int)
@output_options
@budget_options
@click.option(
    "--allow-inadmissible",
    is_flag=True,
    help="Search even when mk != 3n or a bound fails (reports none-exists)",
)
def search(m, n, k, **kwargs):
    """Search exhaustively for an SMR(M,N;K,3)."""
    orchestrator = _orchestrator(**kwargs)
    _run(lambda: orchestrator.run_search(m, n, k))


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option(
    "--cap",
    type=click.IntRange(min=1),
    default=1000,
    help="Stop counting at this many arrays (default: 1000)",
)
@budget_options
@quiet_option
def count(m, n, k, cap, **kwargs):
    """Count every SMR(M,N;K,3) of a tiny shape, without symmetry reduction."""
    orchestrator = _orchestrator(**kwargs)
    _run(lambda: orchestrator.run_count(m, n, k, cap))


@main.command("enumerate")
@click.argument("n_max", type=int)
def enumerate_command(n_max):
    """List every admissible m n k triple with n <= N_MAX."""
    orchestrator = _orchestrator()
    _run(lambda: orchestrator.run_enumerate(n_max))


@main.command()
@click.argument("n_max", type=int, required=False)
@budget_options
@sweep_options
@quiet_option
def sweep(n_max, **kwargs):
    """Generate and verify every admissible triple with n <= N_MAX."""
    if n_max is None and not kwargs.get("batch"):
        click.echo(
            "Error: Either N_MAX argument or --batch option must be provided",
            err=True,
        )
        sys.exit(1)
    orchestrator = _orchestrator(**kwargs)
    _run(lambda: asyncio.run(orchestrator.run_sweep(n_max, kwargs.get("batch"))))


if __name__ == "__main__":
    main()
