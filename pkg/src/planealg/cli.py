"""Command-line client for the verification pipelines.

Carries no logic of its own: flags are parsed, the shared service layer is
invoked in-process (the same functions the HTTP endpoints call), and the
resulting JSON is written out.  Exit codes: 0 all requested checks pass,
1 a verification failed (the report carries witnesses), 2 unusable input.
"""

import json
import sys
from pathlib import Path
from typing import Any

import click

from . import __version__, service

_POLY_HELP = (
    "Override the irreducible polynomial for extension orders, as "
    "comma-separated coefficients with the constant term first "
    "(e.g. '1,1,1' is x^2+x+1).  Pinned defaults: q=4 x^2+x+1, "
    "q=8 x^3+x+1, q=9 x^2+1, q=16 x^4+x+1."
)


def _parse_poly(_ctx: Any, _param: Any, value: str | None) -> list[int] | None:
    if value is None:
        return None
    try:
        return [int(c) for c in value.split(",")]
    except ValueError as exc:
        raise click.BadParameter("coefficients must be comma-separated integers") from exc


def _plane_source(plane: str | None, q: int | None, poly: list[int] | None) -> dict[str, Any]:
    if (plane is None) == (q is None):
        raise click.UsageError("provide exactly one of --plane or --q")
    if plane is not None:
        path = Path(plane)
        if not path.is_file():
            raise click.UsageError(f"plane file not found: {plane}")
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"{plane} is not valid JSON: {exc}") from exc
        return {"plane_doc": doc, "source": plane, "q": None, "poly": poly}
    return {"plane_doc": None, "q": q, "poly": poly}


def _write_json(path: str | None, payload: dict[str, Any]) -> None:
    data = service.to_json_bytes(payload)
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
    else:
        Path(path).write_bytes(data)


def _finish_report(payload: dict[str, Any], report_path: str | None) -> None:
    _write_json(report_path, payload)
    failed = [c for c in payload["checks"] if c["status"] == "fail"]
    for check in payload["checks"]:
        click.echo(f"{check['status']:>4}  {check['name']}", err=True)
    if failed:
        click.echo(f"{len(failed)} check(s) failed", err=True)
        sys.exit(1)
    click.echo("all checks passed", err=True)


def _plane_options(f):
    f = click.option("--plane", type=str, default=None, help="Incidence JSON file.")(f)
    f = click.option("--q", type=int, default=None, help="Build the coordinate plane of this order instead.")(f)
    f = click.option("--poly", type=str, default=None, callback=_parse_poly, help=_POLY_HELP)(f)
    return f


@click.group()
@click.version_option(__version__, prog_name="planealg")
def main() -> None:
    """Finite affine planes, translation groups, and the skew-field of
    trace-preserving endomorphisms, built and machine-verified."""


def _invoke(fn, *args: Any, **kwargs: Any) -> dict[str, Any]:
    try:
        return fn(*args, **kwargs)
    except service.InputError as exc:
        raise click.UsageError(str(exc)) from exc


@main.command("build-plane")
@click.option("--q", type=int, required=True, help="Order of the plane (prime power up to 16).")
@click.option("--poly", type=str, default=None, callback=_parse_poly, help=_POLY_HELP)
@click.option("--out", type=str, required=True, help="Output path for the incidence JSON ('-' for stdout).")
def build_plane_cmd(q: int, poly: list[int] | None, out: str) -> None:
    """Emit the coordinate plane of order q as an incidence document."""
    doc = _invoke(service.run_build_plane, q, poly)
    _write_json(out, doc)
    click.echo(f"AG(2,{q}): {doc['num_points']} points, {len(doc['lines'])} lines", err=True)


@main.command("check-axioms")
@_plane_options
@click.option("--report", "report_path", type=str, default=None, help="Write the report JSON here.")
def check_axioms_cmd(plane: str | None, q: int | None, poly: list[int] | None, report_path: str | None) -> None:
    """Decide whether an incidence structure is an affine plane."""
    payload = _invoke(service.run_check_axioms, **_plane_source(plane, q, poly))
    _finish_report(payload, report_path)


@main.command("enumerate")
@_plane_options
@click.option("--what", type=click.Choice(["translations", "dilations"]), required=True)
@click.option("--out", type=str, default="-", help="Output path for the enumeration JSON.")
def enumerate_cmd(plane: str | None, q: int | None, poly: list[int] | None, what: str, out: str) -> None:
    """List all translations or dilations of a plane."""
    payload = _invoke(service.run_enumerate, what, **_plane_source(plane, q, poly))
    if "elements" not in payload:
        _finish_report(payload, out)  # axioms failed; exits 1
        return
    _write_json(out, payload)
    click.echo(f"{payload['count']} {what}", err=True)


@main.command("verify-group")
@_plane_options
@click.option("--report", "report_path", type=str, default=None, help="Write the report JSON here.")
def verify_group_cmd(plane: str | None, q: int | None, poly: list[int] | None, report_path: str | None) -> None:
    """Verify the translation-group facts: abelian, normal in dilations,
    direction-preserving conjugation, direction closure, transitivity."""
    payload = _invoke(service.run_verify_group, **_plane_source(plane, q, poly))
    _finish_report(payload, report_path)


@main.command("verify-skewfield")
@_plane_options
@click.option("--base-point", type=int, default=0, show_default=True, help="Fixed point generating the algebra.")
@click.option("--oracle", is_flag=True, help="Cross-check against exhaustive endomorphism enumeration.")
@click.option("--report", "report_path", type=str, default=None, help="Write the report JSON here.")
def verify_skewfield_cmd(
    plane: str | None,
    q: int | None,
    poly: list[int] | None,
    base_point: int,
    oracle: bool,
    report_path: str | None,
) -> None:
    """Generate the trace-preserving endomorphism algebra and verify it is
    a skew-field, including explicit two-sided inverses."""
    payload = _invoke(
        service.run_verify_skewfield, base_point, oracle, **_plane_source(plane, q, poly)
    )
    if "num_elements" in payload["summary"]:
        click.echo(f"{payload['summary']['num_elements']} trace-preserving endomorphisms", err=True)
    _finish_report(payload, report_path)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve_cmd(host: str, port: int) -> None:
    """Run the HTTP API."""
    import uvicorn

    from .api import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
