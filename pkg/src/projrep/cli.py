"""Command-line front end for the projective representation workbench."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .catalog import catalog, coclass_contexts
from .cohomology import DEFAULT_H2_CAP
from .errors import BadCoclassIndex, ProjrepError
from .groups import DEFAULT_ORDER_CAP, PiSet
from .verify import pi_decompose
from .workbench import (
    CHECK_NAMES,
    RunConfig,
    contexts_for,
    degrees_report,
    multiplier_report,
    regular_classes_report,
    resolve_group,
    run,
)


def _parse_pi(value: str | None) -> PiSet | None:
    if value is None:
        return None
    try:
        return PiSet(int(v) for v in value.split(","))
    except ValueError as exc:
        raise click.BadParameter(f"bad prime set {value!r}") from exc


@click.group()
@click.option("--tol", type=float, default=1e-6, show_default=True,
              help="Comparison tolerance for checks.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Base seed for all randomized numerics.")
@click.option("--h2-cap", type=int, default=DEFAULT_H2_CAP, show_default=True,
              help="Largest order for direct multiplier computation.")
@click.option("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
              show_default=True, help="Largest admissible group order.")
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="Directory for JSONL results and the CSV summary.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker threads for verification sweeps.")
@click.pass_context
def main(ctx, tol, seed, h2_cap, order_cap, out, jobs):
    """Projective representation workbench for small finite groups."""
    ctx.obj = RunConfig(tol=tol, seed=seed, h2_cap=h2_cap,
                        order_cap=order_cap, out=out, jobs=jobs)


@main.command("catalog")
@click.pass_obj
def catalog_cmd(config):
    """List the built-in groups."""
    for e in catalog():
        flags = "solvable" if e.solvable else "not solvable"
        note = f"  ({e.notes})" if e.notes else ""
        click.echo(f"{e.name:12s} order {e.order:4d}  {flags}{note}")


def _context(config, group, coclass_index):
    config.groups = [group]
    ctxs = contexts_for(group, config)
    if not 0 <= coclass_index < len(ctxs):
        raise BadCoclassIndex(
            f"{group} has {len(ctxs)} coclasses; index {coclass_index} "
            "is out of range")
    return ctxs[coclass_index]


@main.command()
@click.argument("group")
@click.pass_obj
def multiplier(config, group):
    """Invariant factors and basis hashes of the multiplier."""
    G = resolve_group(group, config.order_cap)
    if group in [e.name for e in catalog()]:
        # catalog entries above the cap may install a covering-derived
        # multiplier (A5); enumerate once so the report sees it
        coclass_contexts(group, h2_cap=config.h2_cap)
    click.echo(json.dumps(multiplier_report(G, h2_cap=config.h2_cap),
                          sort_keys=True))


@main.command()
@click.argument("group")
@click.option("--coclass", "coclass_index", type=int, default=0,
              show_default=True, help="Lexicographic coclass index.")
@click.pass_obj
def degrees(config, group, coclass_index):
    """Irreducible projective degrees for one coclass."""
    ctx = _context(config, group, coclass_index)
    click.echo(json.dumps(degrees_report(ctx, tol=config.tol), sort_keys=True))


@main.command("regular-classes")
@click.argument("group")
@click.option("--coclass", "coclass_index", type=int, default=0,
              show_default=True)
@click.pass_obj
def regular_classes_cmd(config, group, coclass_index):
    """c-regular conjugacy classes for one coclass."""
    ctx = _context(config, group, coclass_index)
    click.echo(json.dumps(regular_classes_report(ctx), sort_keys=True))


@main.command()
@click.argument("group")
@click.option("--check", "check", type=click.Choice(CHECK_NAMES),
              default=None, help="Run a single check instead of all.")
@click.option("--p", "prime", type=int, default=None,
              help="Restrict prime-indexed checks to one prime.")
@click.option("--pi", "pi", type=str, default=None,
              help="Comma-separated primes for set-indexed checks.")
@click.pass_obj
def verify(config, group, check, prime, pi):
    """Run theorem checks; nonzero exit iff any applicable check fails."""
    config.groups = [e.name for e in catalog()] if group == "all" else [group]
    if check:
        config.checks = [check]
    if prime is not None:
        config.primes = [prime]
    pset = _parse_pi(pi)
    if pset is not None:
        config.pi_sets = [pset]
    status, results = run(config)
    for r in results:
        click.echo(f"{r.verdict.upper():13s} {r.name:22s} {r.group:10s} "
                   f"c={r.coclass:8s} {r.param}")
    counts = {"pass": 0, "fail": 0, "inapplicable": 0}
    for r in results:
        counts[r.verdict] += 1
    click.echo(f"# pass={counts['pass']} fail={counts['fail']} "
               f"inapplicable={counts['inapplicable']}")
    sys.exit(status)


@main.command()
@click.argument("group")
@click.option("--coclass", "coclass_index", type=int, default=0,
              show_default=True)
@click.option("--pi", "pi", type=str, required=True,
              help="Comma-separated primes defining the split.")
@click.pass_obj
def decompose(config, group, coclass_index, pi):
    """Decomposition certificates along the pi-series, one per irreducible."""
    ctx = _context(config, group, coclass_index)
    pset = _parse_pi(pi)
    records = []
    for V in ctx.irreps:
        cert, rep = pi_decompose(V, pset, ctx)
        records.append({
            "degree": V.degree,
            "subgroup_order": cert.subgroup.order,
            "index": cert.index,
            "factor_degrees": cert.factor_degrees,
            "intertwiner_dim": cert.intertwiner_dim,
            "residual": cert.residual,
            "verdict": rep.verdict,
        })
    click.echo(json.dumps({"group": ctx.group.name, "coclass": ctx.label,
                           "pi": pset.label(), "certificates": records,
                           "seed": ctx.seed}, sort_keys=True))
    if any(r["verdict"] != "pass" for r in records):
        sys.exit(1)


def entry() -> None:
    try:
        main(auto_envvar_prefix="PROJREP")
    except ProjrepError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    entry()
