"""Command-line front end: classify, tables, verify, census, cache."""
from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import click

from . import reports, suites
from .cache import ENV_VAR, Cache
from .groups import DEFAULT_CAP, GroupError, build_group, parse_spec

FORMATS = click.Choice(["json", "markdown", "text"])


def _emit(report: dict, fmt: str) -> None:
    click.echo(reports.render(report, fmt), nl=False)
    if report.get("status") == "FAIL":
        sys.exit(1)


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


class _Main(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (GroupError, ValueError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)


@click.group(cls=_Main)
@click.version_option(package_name="artifact")
def main():
    """Exact classification of graded Hecke algebras for complex reflection groups."""


def _common(f):
    f = click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)(f)
    f = click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True, help="Enumeration cap.")(f)
    f = click.option("--jobs", type=int, default=1, show_default=True)(f)
    f = click.option("--seed", type=int, default=0, show_default=True)(f)
    return f


@main.command()
@click.option("--group", "spec", required=True, help='e.g. "G(4,2,3)", A3, I2(7), G24, file:gens.json')
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None, help=f"Defaults to ${ENV_VAR}.")
@click.option("--no-cache", is_flag=True)
@_common
def classify(spec, cache_dir, no_cache, fmt, cap, jobs, seed):
    """Admissible classes and the parameter-space dimension."""
    canon = parse_spec(spec).canonical()
    cache = None if no_cache else Cache(cache_dir)
    report = cache.report(canon, "classify") if cache else None
    if report is None:
        group = build_group(canon, cap=cap)
        report = reports.classification_report(group, spec=canon)
        if cache:
            cache.store_group(canon, group)
            cache.store_report(canon, "classify", report)
    _emit(report, fmt)


@main.command()
@click.option("--which", type=click.IntRange(1, 3), required=True)
@click.option("--max-r", type=int, default=6, show_default=True)
@click.option("--max-n", type=int, default=4, show_default=True)
@_common
def tables(which, max_r, max_n, fmt, cap, jobs, seed):
    """Recompute a reference table and mark each row PASS or FAIL."""
    if which == 1:
        rows = _map(partial(reports.table1_row, cap=cap), reports.TABLE1_ROWS, jobs)
        rows += reports.skipped_rows()
    elif which == 2:
        rows = _map(partial(reports.table2_row, cap=cap), reports.table2_grid(max_r, max_n), jobs)
    else:
        rows = _map(partial(reports.table3_row, cap=cap), reports.TABLE3_ROWS, jobs)
    _emit(reports.table_report(which, rows), fmt)


@main.command()
@click.argument("suite", type=click.Choice(["lusztig", "coefficients", "evaluation", "hstar", "relation", "forms"]))
@click.option("--type", "kind", type=click.Choice(list("ABDEFHI"), case_sensitive=False))
@click.option("--rank", type=int)
@click.option("--n", "n", type=int)
@click.option("--r", "r", type=int)
@click.option("--group", "spec")
@click.option("--samples", type=int, default=20, show_default=True)
@_common
def verify(suite, kind, rank, n, r, spec, samples, fmt, cap, jobs, seed):
    """Run an identity suite.

    \b
    lusztig       --type B --rank 3
    coefficients  --type I --rank 6
    evaluation    --n 4
    hstar         --r 2 --n 3
    relation      --r 6
    forms         --group "G(1,1,4)" [--samples 20 --seed 0]
    """

    def need(**kw):
        missing = [k for k, v in kw.items() if v is None]
        if missing:
            raise click.UsageError(f"{suite} needs " + ", ".join(f"--{m}" for m in missing))

    if suite in ("lusztig", "coefficients"):
        need(type=kind, rank=rank)
        fn = suites.lusztig_suite if suite == "lusztig" else suites.coefficient_suite
        report = fn(kind.upper(), rank)
    elif suite == "evaluation":
        need(n=n)
        report = suites.evaluation_suite(n)
    elif suite == "hstar":
        need(r=r, n=n)
        report = suites.hstar_suite(r, n)
    elif suite == "relation":
        need(r=r)
        report = suites.relation_suite(r)
    else:
        need(group=spec)
        report = suites.forms_suite(parse_spec(spec).canonical(), samples, seed, cap)
    _emit(report, fmt)


@main.command()
@click.option("--group", "spec", required=True)
@_common
def census(spec, fmt, cap, jobs, seed):
    """Codimension-2 count against the exponents, reflections and center."""
    canon = parse_spec(spec).canonical()
    group = build_group(canon, cap=cap)
    _emit(reports.census_report(group, canon), fmt)


@main.command()
@click.argument("op", type=click.Choice(["list", "clear", "path"]))
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
def cache(op, cache_dir):
    """Inspect or clear the on-disk cache."""
    c = Cache(cache_dir)
    if op == "path":
        click.echo(str(c.root))
    elif op == "clear":
        click.echo(f"removed {c.clear()} files")
    else:
        for e in c.entries():
            click.echo(f"{e['file']}  {e['spec']}  {e['version']}")


if __name__ == "__main__":
    main()
