"""Command-line front end: a thin client for the HTTP service.

With no --base-url (or LUCASKIT_URL) the commands talk to an in-process
instance of the service over an ASGI transport, so no server needs to
run; pointing --base-url at a deployed service switches to real HTTP
with identical behavior.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse
error, 3 evaluation or transport error.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

import click
import httpx

VERIFY_NAMES = (
    "ex1", "ex2", "ex3", "ex4", "ex5a", "ex5b", "ex6a", "ex6b",
    "remark_fib", "remark_luc", "all",
)

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_EVAL = 3


@dataclass
class RunConfig:
    output_format: str
    base_url: Optional[str]
    parallelism: Optional[int]

    def post(self, path: str, payload: dict) -> httpx.Response:
        if self.base_url:
            with httpx.Client(base_url=self.base_url, timeout=300.0) as client:
                return client.post(path, json=payload)
        # No server configured: drive an in-process instance of the
        # service through the same HTTP machinery.
        import asyncio

        from .service import app

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://lucaskit.local"
            ) as client:
                return await client.post(path, json=payload)

        return asyncio.run(go())


def _request(cfg: RunConfig, path: str, payload: dict) -> dict:
    try:
        resp = cfg.post(path, payload)
    except httpx.HTTPError as err:
        click.echo(f"transport error: {err}", err=True)
        sys.exit(EXIT_EVAL)
    if resp.status_code == 200:
        return resp.json()
    detail = {}
    try:
        detail = resp.json().get("detail", {})
    except ValueError:
        pass
    if resp.status_code == 422:
        click.echo(f"invalid request: {detail}", err=True)
        sys.exit(EXIT_USAGE)
    if isinstance(detail, dict) and detail.get("kind") == "parse":
        click.echo(
            f"parse error: line {detail.get('line')}, col {detail.get('col')}: "
            f"{detail.get('message')}",
            err=True,
        )
        sys.exit(EXIT_USAGE)
    if isinstance(detail, dict) and detail.get("kind") == "eval":
        where = ""
        if detail.get("n") is not None:
            where = f"at n={detail['n']}: "
        click.echo(f"evaluation error: {where}{detail.get('message')}", err=True)
        sys.exit(EXIT_EVAL)
    click.echo(f"service error ({resp.status_code}): {resp.text}", err=True)
    sys.exit(EXIT_EVAL)


def _emit_reports(cfg: RunConfig, data: dict) -> None:
    for report in data["reports"]:
        if cfg.output_format == "json":
            click.echo(json.dumps(report, separators=(",", ":")))
        else:
            status = "PASS" if report["pass"] else "FAIL"
            k_part = f" k={report['k']}" if report.get("k") is not None else ""
            line = f"[{status}] {report['name']} n={report['n']}{k_part}"
            if not report["pass"]:
                line += f"  lhs = {report['lhs']}  rhs = {report['rhs']}"
            click.echo(line)


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output format.",
)
@click.option(
    "--base-url",
    envvar="LUCASKIT_URL",
    default=None,
    help="URL of a running service; defaults to an in-process instance.",
)
@click.option(
    "--parallelism",
    "-j",
    type=click.IntRange(min=1),
    envvar="LUCASKIT_THREADS",
    default=None,
    help="Worker threads for verification [default: processor count].",
)
@click.pass_context
def main(ctx: click.Context, output_format: str, base_url: Optional[str], parallelism: Optional[int]) -> None:
    """Exact bivariate Fibonacci/Lucas polynomial toolkit."""
    ctx.obj = RunConfig(output_format, base_url, parallelism)


@main.command()
@click.option("--kind", type=click.Choice(["fib", "luc"]), required=True)
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.pass_obj
def poly(cfg: RunConfig, kind: str, n: int) -> None:
    """Print the n-th Fibonacci or Lucas polynomial."""
    data = _request(cfg, "/poly", {"kind": kind, "n": n})
    if cfg.output_format == "json":
        click.echo(json.dumps(data, separators=(",", ":")))
    else:
        click.echo(data["poly"])


@main.command()
@click.option(
    "--names",
    default="all",
    show_default=True,
    help="Comma-separated check names (ex1..ex6b, remark_fib, remark_luc, all).",
)
@click.option("--n-max", type=click.IntRange(min=0), default=32, show_default=True)
@click.pass_obj
def verify(cfg: RunConfig, names: str, n_max: int) -> None:
    """Run built-in identity checks for every admissible n <= n-max."""
    requested = [s.strip() for s in names.split(",") if s.strip()]
    unknown = [s for s in requested if s not in VERIFY_NAMES]
    if unknown or not requested:
        raise click.UsageError(
            f"unknown check name(s): {', '.join(unknown) or '(none given)'}; "
            f"choose from {', '.join(VERIFY_NAMES)}"
        )
    payload = {"names": requested, "n_max": n_max, "parallelism": cfg.parallelism}
    data = _request(cfg, "/verify", payload)
    _emit_reports(cfg, data)
    if not data["all_pass"]:
        sys.exit(EXIT_VERIFY_FAILED)


def _read_identity_file(path: str) -> str:
    p = Path(path)
    if p.is_file():
        return p.read_text(encoding="utf-8")
    # fall back to the bundled declarations shipped with the package
    bundled = resources.files("lucaskit").joinpath("dsl", Path(path).name)
    if bundled.is_file():
        return bundled.read_text(encoding="utf-8")
    raise click.UsageError(f"identity file not found: {path}")


def _parse_range(text: Optional[str]) -> tuple[Optional[int], int]:
    if text is None:
        return None, 32
    parts = text.split("..")
    try:
        if len(parts) == 1:
            single = int(parts[0])
            return single, single
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise click.UsageError(f"invalid range {text!r}; expected like 0..16")


@main.command("verify-expr")
@click.argument("path")
@click.option("--n", "n_range", default=None, help="Range of n, e.g. 0..16 [default: constraint..32].")
@click.pass_obj
def verify_expr(cfg: RunConfig, path: str, n_range: Optional[str]) -> None:
    """Verify the identity declarations in a .id file."""
    source = _read_identity_file(path)
    n_from, n_to = _parse_range(n_range)
    payload = {"source": source, "n_from": n_from, "n_to": n_to}
    data = _request(cfg, "/verify-expr", payload)
    _emit_reports(cfg, data)
    if not data["all_pass"]:
        sys.exit(EXIT_VERIFY_FAILED)


@main.command()
@click.option("--kind", type=click.Choice(["fib", "luc"]), required=True)
@click.option("--order", type=click.IntRange(min=0), default=128, show_default=True)
@click.pass_obj
def series(cfg: RunConfig, kind: str, order: int) -> None:
    """Expand the generating function; one "t^n: <poly>" line per coefficient."""
    data = _request(cfg, "/series", {"kind": kind, "order": order})
    for coeff in data["coeffs"]:
        if cfg.output_format == "json":
            click.echo(json.dumps(coeff, separators=(",", ":")))
        else:
            click.echo(f"t^{coeff['n']}: {coeff['poly']}")
    if not data["self_check"]:
        click.echo("self-check failed: series coefficients disagree with the recurrence", err=True)
        sys.exit(EXIT_VERIFY_FAILED)


@main.command()
@click.option("--kind", type=click.Choice(["fib", "luc", "pell"]), required=True)
@click.option("--n-max", type=click.IntRange(min=0), default=32, show_default=True)
@click.pass_obj
def numbers(cfg: RunConfig, kind: str, n_max: int) -> None:
    """Print the integer specialization (fib/luc at (1,1), pell at (2,1))."""
    data = _request(cfg, "/numbers", {"kind": kind, "n_max": n_max})
    if cfg.output_format == "json":
        click.echo(json.dumps(data, separators=(",", ":")))
    else:
        click.echo(" ".join(str(v) for v in data["values"]))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
