"""Command-line front end: thin client over the shared command handlers.

Exit codes: 0 all checks pass, 1 verification failure (JSON report on
stdout), 2 invalid input.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .handlers import (
    InputError,
    run_check,
    run_fusion,
    run_gauss,
    run_info,
    run_modular,
)
from .lattice import GramParseError, parse_gram
from .render import render_approx, render_scalar
from .scalars import Cyclotomic
from .schemas import RunConfig


@click.group()
def main() -> None:
    """Exact braided Z2-crossed categories from discriminant forms."""


def _common(fn):
    fn = click.option(
        "--beta-sign",
        type=click.Choice(["pseudo-unitary", "negative"]),
        default="pseudo-unitary",
        show_default=True,
        help="Sign choice for the defect twist beta = +/- epsilon/alpha.",
    )(fn)
    fn = click.option(
        "--alpha-branch",
        type=click.Choice(["principal", "negative"]),
        default="principal",
        show_default=True,
        help="Square-root branch for the associator normalisation alpha.",
    )(fn)
    fn = click.option(
        "--epsilon",
        type=click.Choice(["+1", "-1"]),
        default="+1",
        show_default=True,
        help="Sign epsilon of the defect self-duality.",
    )(fn)
    fn = click.option(
        "--gram",
        "gram_path",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help="Gram matrix file of a strongly even lattice.",
    )(fn)
    fn = click.option(
        "--jordan",
        help='Jordan symbol, e.g. "4_1^+1" or "2_1^+1+3^-1".',
    )(fn)
    return fn


def _fmt_option(fn):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["table", "json"]),
        default="table",
        show_default=True,
        help="Output format.",
    )(fn)


def _config(jordan, gram_path, epsilon, alpha_branch, beta_sign, paper_order=False):
    gram = None
    if gram_path is not None:
        try:
            gram = parse_gram(Path(gram_path).read_text())
        except GramParseError as exc:
            raise click.UsageError(str(exc)) from exc
    return RunConfig(
        jordan=jordan,
        gram=gram,
        epsilon=int(epsilon),
        alpha_branch=alpha_branch,
        beta_sign=beta_sign,
        paper_order=paper_order,
    )


def _run(handler, cfg: RunConfig):
    try:
        return handler(cfg)
    except InputError as exc:
        raise click.UsageError(str(exc)) from exc


def _render(terms) -> str:
    return render_scalar(Cyclotomic.from_terms(terms))


def _scalar_line(name: str, terms) -> str:
    v = Cyclotomic.from_terms(terms)
    return f"{name}: {render_scalar(v)} (~{render_approx(v)})"


def _grid(rows: list[list[str]]) -> list[str]:
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return [
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    ]


def _header_lines(resp) -> list[str]:
    return [
        f"input: {resp.input}",
        f"epsilon: {resp.epsilon:+d}",
        _scalar_line("alpha", resp.alpha),
        _scalar_line("beta", resp.beta),
    ]


@main.command()
@_common
@_fmt_option
def check(jordan, gram_path, epsilon, alpha_branch, beta_sign, fmt):
    """Build the category and verify every axiom family."""
    cfg = _config(jordan, gram_path, epsilon, alpha_branch, beta_sign)
    resp = _run(run_check, cfg)
    if fmt == "json" or not resp.ok:
        click.echo(resp.model_dump_json(indent=2))
    else:
        for line in _header_lines(resp):
            click.echo(line)
        click.echo(f"delta: {resp.delta}")
        for name, status in resp.checks.items():
            click.echo(f"{name}: {status}")
        click.echo(f"all {len(resp.checks)} checks passed")
    if not resp.ok:
        sys.exit(1)


@main.command("modular-data")
@_common
@click.option(
    "--paper-order",
    is_flag=True,
    help="Emit the 4_1^+1 fixture in its published object order.",
)
@_fmt_option
def modular_data_cmd(
    jordan, gram_path, epsilon, alpha_branch, beta_sign, paper_order, fmt
):
    """Compute the equivariantisation's exact S and T matrices."""
    cfg = _config(jordan, gram_path, epsilon, alpha_branch, beta_sign, paper_order)
    resp = _run(run_modular, cfg)
    ok = all(v == "pass" for v in resp.checks.values())
    if fmt == "json" or not ok:
        click.echo(resp.model_dump_json(indent=2))
    else:
        for line in _header_lines(resp):
            click.echo(line)
        click.echo("objects (label, T entry, dim):")
        rows = [
            [
                f"{i}:",
                label,
                _render(t),
                f"{_render(d)} (~{render_approx(Cyclotomic.from_terms(d))})",
            ]
            for i, (label, t, d) in enumerate(zip(resp.objects, resp.T, resp.dims))
        ]
        for line in _grid(rows):
            click.echo("  " + line)
        click.echo("S matrix:")
        cells = [[_render(entry) for entry in row] for row in resp.S]
        for line in _grid(cells):
            click.echo("  " + line)
        click.echo(f"global_dim: {resp.global_dim}")
        click.echo(f"checks: all {len(resp.checks)} passed")
    if not ok:
        sys.exit(1)


@main.command()
@_common
@_fmt_option
def fusion(jordan, gram_path, epsilon, alpha_branch, beta_sign, fmt):
    """Print the fusion table of the equivariantisation."""
    cfg = _config(jordan, gram_path, epsilon, alpha_branch, beta_sign)
    resp = _run(run_fusion, cfg)
    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
        return
    click.echo(f"input: {resp.input}")
    click.echo(f"simple objects: {len(resp.objects)}")
    for a, row in zip(resp.objects, resp.table):
        for b, out in zip(resp.objects, row):
            click.echo(f"{a} * {b} = {' + '.join(out)}")


@main.command()
@_common
@_fmt_option
def gauss(jordan, gram_path, epsilon, alpha_branch, beta_sign, fmt):
    """Print the partial Gauss sums, the Milgram sum and the signature."""
    cfg = _config(jordan, gram_path, epsilon, alpha_branch, beta_sign)
    resp = _run(run_gauss, cfg)
    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
        return
    click.echo(f"input: {resp.input}")
    click.echo(_scalar_line("G_delta(q^-1)", resp.gauss_q_inverse))
    for coset, terms in resp.partial_Q.items():
        click.echo(_scalar_line(f"G_{{delta+{coset}}}(Q)", terms))
    click.echo(_scalar_line("milgram sum", resp.milgram_sum))
    click.echo(f"signature: {resp.signature} (mod 8)")


@main.command()
@_common
@_fmt_option
def info(jordan, gram_path, epsilon, alpha_branch, beta_sign, fmt):
    """Describe the group, the 2-torsion data and the chosen scalars."""
    cfg = _config(jordan, gram_path, epsilon, alpha_branch, beta_sign)
    resp = _run(run_info, cfg)
    if fmt == "json":
        click.echo(resp.model_dump_json(indent=2))
        return
    click.echo(f"input: {resp.input}")
    click.echo(f"group: {resp.group} (order {resp.order})")
    click.echo(f"|2G|: {resp.two_gamma_order}")
    click.echo(f"2-torsion: {' '.join(resp.torsion2)}")
    click.echo(f"delta: {resp.delta}")
    click.echo(f"epsilon: {resp.epsilon:+d}")
    click.echo(_scalar_line("alpha", resp.alpha))
    click.echo(_scalar_line("beta", resp.beta))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
