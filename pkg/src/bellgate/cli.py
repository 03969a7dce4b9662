"""Command-line front end: a thin client over the HTTP service.

Subcommands call the service endpoints, in-process by default or against a
remote ``--server`` URL, and render the JSON responses as text or emit
them verbatim.  Commands that produce a verification report exit nonzero
when any check fails; informational commands exit zero once they have an
answer.  Arguments documented as gate-or-file accept a catalog gate name
(``FAMILY:n`` for parameterized families) or a path to an interchange
file; file contents travel with the request, so remote servers never see
local paths.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path
from typing import Optional

import click
import httpx

from .reports import render_report


def _open_client(server: Optional[str]):
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    warnings.filterwarnings("ignore", message=r"Using `httpx` with `starlette.testclient`")
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _call(ctx: click.Context, method: str, path: str, **kwargs) -> dict:
    with _open_client(ctx.obj["server"]) as client:
        response = client.request(method, path, **kwargs)
    if response.status_code >= 400:
        try:
            detail = response.json()["detail"]
        except Exception:
            detail = response.text
        if isinstance(detail, list):
            detail = "; ".join(str(item.get("msg", item)) for item in detail)
        raise click.ClickException(str(detail))
    return response.json()


def _matrix_arg(target: str) -> dict:
    path = Path(target)
    if path.is_file():
        try:
            return {"matrix": json.loads(path.read_text())}
        except json.JSONDecodeError as exc:
            raise click.ClickException(
                f"parse error at line {exc.lineno}, column {exc.colno} in {target}"
            ) from None
    return {"gate": target}


def _dump(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _emit_report(ctx: click.Context, payload: dict, fmt: str) -> None:
    if fmt == "json":
        _dump(payload)
    else:
        click.echo(render_report(payload))
    if payload["summary"]["failed"]:
        ctx.exit(1)


def _flag(value, unknown: str = "n/a") -> str:
    if value is None:
        return unknown
    return "yes" if value else "no"


_FORMAT = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output rendering.",
)


@click.group()
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="Base URL of a running service; defaults to in-process execution.",
)
@click.pass_context
def main(ctx: click.Context, server: Optional[str]) -> None:
    """Exact gate-algebra toolkit: conjugation tables, teleportation
    corrections, canonical invariants, and operator identities."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@_FORMAT
@click.pass_context
def gates(ctx: click.Context, fmt: str) -> None:
    """List the named-gate vocabulary."""
    payload = _call(ctx, "GET", "/gates")
    if fmt == "json":
        _dump(payload)
        return
    for entry in payload["gates"]:
        tags = ", ".join(entry["tags"]) or "-"
        click.echo(f"{entry['name']:<10} {entry['qubits']} qubit(s)  [{tags}]")
    for entry in payload["families"]:
        tags = ", ".join(entry["tags"]) or "-"
        click.echo(f"{entry['name']:<10} family       [{tags}]  (use NAME:n)")


@main.command()
@click.option("--family", default=None, help="Restrict to one family or named table.")
@click.option("--n", type=int, default=None, help="Family size to check.")
@_FORMAT
@click.pass_context
def tables(ctx: click.Context, family: Optional[str], n: Optional[int], fmt: str) -> None:
    """Diff the generator-conjugation tables against their encodings."""
    payload = _call(ctx, "POST", "/tables", json={"family": family, "n": n})
    _emit_report(ctx, payload, fmt)


@main.command()
@click.argument("target")
@_FORMAT
@click.pass_context
def classify(ctx: click.Context, target: str, fmt: str) -> None:
    """Classify a gate or matrix file and factor it over Bell pairs.

    TARGET is a gate name or an interchange file.
    """
    payload = _call(ctx, "POST", "/classify", json=_matrix_arg(target))
    if fmt == "json":
        _dump(payload)
        return
    click.echo(f"{payload['input']}:")
    for warning in payload["warnings"]:
        click.echo(f"  warning: {warning}")
    unknown = "undetermined (needs exact entries)" if not payload["exact"] else "n/a"
    click.echo(f"  clifford: {_flag(payload['clifford'], unknown)}")
    click.echo(f"  parity preserving: {_flag(payload['parity_preserving'])}")
    click.echo(f"  matchgate: {_flag(payload['matchgate'])}")
    if payload["nonlocal_params"] is not None:
        a, b, c = payload["nonlocal_params"]
        click.echo(f"  nonlocal params: ({a:.9f}, {b:.9f}, {c:.9f})")
        click.echo(f"  entangling power: {payload['entangling_power']:.9f}")
    fact = payload["factorization"]
    if fact is not None:
        perm = ", ".join(str(p) for p in fact["permutation"])
        phases = ", ".join(fact["phases_text"])
        click.echo(f"  factorization: relabeling ({perm}); phases {phases}")
    else:
        click.echo(f"  factorization: none ({payload.get('factorization_error', 'unavailable')})")


def _grid_lines(title: str, rows: list[list[str]]) -> list[str]:
    width = max((len(cell) for row in rows for cell in row), default=1) + 2
    lines = [f"  {title}:"]
    for row in rows:
        lines.append("    " + "".join(cell.ljust(width) for cell in row).rstrip())
    return lines


def _entry_cell(entry: dict) -> str:
    return entry["word"] if entry["word"] is not None else f"<{entry['kind']}>"


@main.command()
@click.option("--bell", required=True, help="Two-qubit transform providing the shared pair.")
@click.option("--u", "u_gate", default=None, help="One-qubit gate carried through the protocol.")
@click.option("--cu", default=None, help="Two-qubit gate carried through the doubled protocol.")
@click.option("--simulate", "runs", type=int, default=None, metavar="N", help="Run N protocol simulations.")
@click.option("--seed", type=int, default=None, help="Seed for simulation (required with --simulate).")
@click.option("--kl", default=None, metavar="KL", help="Restrict to one shared-pair label, e.g. 01.")
@click.option("--psi", type=click.Choice(["0", "1", "+"]), default="0", show_default=True, help="Simulated input state.")
@_FORMAT
@click.pass_context
def teleport(
    ctx: click.Context,
    bell: str,
    u_gate: Optional[str],
    cu: Optional[str],
    runs: Optional[int],
    seed: Optional[int],
    kl: Optional[str],
    psi: str,
    fmt: str,
) -> None:
    """Verify teleportation identities, corrections, and carried gates."""
    body = {"bell": bell, "psi": psi}
    if u_gate is not None:
        body["u"] = u_gate
    if cu is not None:
        body["cu"] = cu
    if runs is not None:
        body["simulate"] = runs
    if seed is not None:
        body["seed"] = seed
    if kl is not None:
        body["kl"] = kl
    payload = _call(ctx, "POST", "/teleport", json=body)
    if fmt == "json":
        _dump(payload)
        if payload["report"]["summary"]["failed"]:
            ctx.exit(1)
        return
    click.echo(f"shared transform {payload['bell']}")
    for title, grid in (("corrections u[i][j]", payload["corrections"]["u"]),
                        ("corrections v[k][l]", payload["corrections"]["v"])):
        for line in _grid_lines(title, grid):
            click.echo(line)
    if "single_gate" in payload:
        block = payload["single_gate"]
        for title, grid in ((f"carried {block['u']} r[i][j]", block["r"]),
                            (f"carried {block['u']} s[k][l]", block["s"])):
            cells = [[_entry_cell(entry) for entry in row] for row in grid]
            for line in _grid_lines(title, cells):
                click.echo(line)
    if "two_gate" in payload:
        block = payload["two_gate"]
        click.echo(f"  doubled protocol with {block['cu']}: {block['entries']} index tuples factored")
    if "simulation" in payload:
        sim = payload["simulation"]
        counts = " ".join(f"{key}:{value}" for key, value in sorted(sim["outcome_counts"].items()))
        click.echo(
            f"  simulation: {sim['runs']} runs (seed {sim['seed']}, shared {sim['shared']},"
            f" psi {sim['psi']}) outcomes {counts}; {sim['exact_runs']}/{sim['runs']} exact"
        )
    _emit_report(ctx, payload["report"], "text")


@main.command()
@click.argument("target")
@click.option("--oracle", type=int, default=None, metavar="SAMPLES", help="Monte Carlo cross-check sample count.")
@click.option("--seed", type=int, default=None, help="Seed for the oracle (required with --oracle).")
@_FORMAT
@click.pass_context
def entangle(ctx: click.Context, target: str, oracle: Optional[int], seed: Optional[int], fmt: str) -> None:
    """Canonical two-qubit parameters and entangling power.

    TARGET is a gate name or an interchange file.
    """
    body = _matrix_arg(target)
    if oracle is not None:
        body["oracle"] = oracle
    if seed is not None:
        body["seed"] = seed
    payload = _call(ctx, "POST", "/entangle", json=body)
    if fmt == "json":
        _dump(payload)
        return
    for warning in payload["warnings"]:
        click.echo(f"warning: {warning}")
    a, b, c = payload["nonlocal_params"]
    click.echo(f"{payload['input']}: nonlocal params ({a:.9f}, {b:.9f}, {c:.9f});"
               f" entangling power {payload['entangling_power']:.9f}")
    if "oracle" in payload:
        est = payload["oracle"]
        click.echo(
            f"oracle estimate ({est['samples']} samples, seed {est['seed']}): {est['estimate']:.9f}"
        )


@main.command()
@click.argument("target")
@_FORMAT
@click.pass_context
def ybe(ctx: click.Context, target: str, fmt: str) -> None:
    """Check the braid relation for a two-qubit gate."""
    payload = _call(ctx, "POST", "/ybe", json=_matrix_arg(target))
    if fmt == "json":
        _dump(payload)
        return
    click.echo(f"{payload['input']} {payload['verdict']}")


@main.command()
@click.option("--name", default=None, help="Check a single registered identity.")
@_FORMAT
@click.pass_context
def identities(ctx: click.Context, name: Optional[str], fmt: str) -> None:
    """Verify the registered operator identities."""
    payload = _call(ctx, "POST", "/identities", json={"name": name})
    _emit_report(ctx, payload, fmt)


@main.command()
@_FORMAT
@click.option(
    "--quick/--full",
    default=False,
    show_default=True,
    help="Quick mode limits the two-gate sweep to one conjugated-gate column.",
)
@click.pass_context
def report(ctx: click.Context, fmt: str, quick: bool) -> None:
    """Run every verification suite and aggregate the results."""
    payload = _call(ctx, "GET", "/report", params={"full": not quick})
    if fmt == "json":
        _dump(payload)
    else:
        for suite in payload["suites"]:
            click.echo(render_report(suite))
        info = payload["summary"]
        click.echo(f"overall: {info['total']} checks, {info['passed']} passed, {info['failed']} failed")
    if payload["summary"]["failed"]:
        ctx.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, type=int, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
