"""Command-line front end.

Usage:
    rahman check --p 1,2,3,6
    rahman eval 1 0 1 0 --p 1,2,3,5 --N 1
    rahman table --p 1,2,3,5 --N 2 --format csv
    rahman verify all --p 1,2,3,5 --N 3
    rahman export structure --p 1,2,3,5 --N 2 --out dump.json

Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
malformed input.  All output is exact rational strings; identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import json
import os
import sys

import click

from .form import BilinearForm, dual_basis
from .params import ParameterSet, ValidationError, derive, load_params_file, validate
from .polymodule import lattice
from .polynomials import eval_P
from .report import Report
from .scalars import format_rational, parse_rational
from .sl3 import build
from .theorems import SUITES, run_suites

DEFAULT_MAX_N = 12


def _max_n() -> int:
    raw = os.environ.get("RAHMAN_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise click.UsageError(f"RAHMAN_MAX_N must be an integer, got {raw!r}")


def _resolve_params(p: str | None, params_file: str | None, n: int | None):
    """Combine --p / --params-file / --N into (ParameterSet, N or None)."""
    if p is not None and params_file is not None:
        raise click.UsageError("--p and --params-file are mutually exclusive")
    if params_file is not None:
        try:
            params, file_n = load_params_file(params_file)
        except (OSError, ValueError, KeyError) as exc:
            raise click.UsageError(f"bad parameter file: {exc}")
        if n is None:
            n = file_n
    elif p is not None:
        try:
            values = [parse_rational(x) for x in p.split(",")]
        except ValueError as exc:
            raise click.UsageError(f"bad --p value: {exc}")
        if len(values) != 4:
            raise click.UsageError("--p needs exactly 4 comma-separated rationals")
        params = ParameterSet(*values)
    else:
        raise click.UsageError("provide parameters via --p or --params-file")
    if n is not None:
        if n < 0:
            raise click.UsageError("N must be nonnegative")
        if n > _max_n():
            raise click.UsageError(
                f"N={n} exceeds the ceiling {_max_n()} (override with RAHMAN_MAX_N)"
            )
    return params, n


def _require_n(n: int | None) -> int:
    if n is None:
        raise click.UsageError("this command requires --N")
    return n


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text)
    else:
        with open(out, "w") as handle:
            handle.write(text + "\n")


def _dump_json(data) -> str:
    return json.dumps(data, indent=2)


def shared_options(command):
    for option in reversed([
        click.option("--p", "p", default=None, help="four rationals: 1,2,3,5"),
        click.option("--params-file", default=None, type=click.Path(),
                     help='JSON file: {"p": ["1","2","3","5"], "N": 4}'),
        click.option("--N", "n", default=None, type=int, help="total degree"),
        click.option("--format", "fmt", default="json",
                     type=click.Choice(["json", "csv"])),
        click.option("--out", default=None, type=click.Path(),
                     help="write output to a file instead of stdout"),
    ]):
        command = option(command)
    return command


@click.group()
def main():
    """Exact verification toolkit for the Rahman polynomial family."""


@main.command()
@shared_options
def check(p, params_file, n, fmt, out):
    """Validate the parameter set against the forbidden combinations."""
    params, _ = _resolve_params(p, params_file, n)
    try:
        validate(params)
    except ValidationError as exc:
        _emit(f"invalid: zero denominator {exc.expression}", out)
        sys.exit(2)
    _emit("ok", out)


@main.command("eval")
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.argument("c", type=int)
@click.argument("d", type=int)
@shared_options
def eval_command(a, b, c, d, p, params_file, n, fmt, out):
    """Evaluate P(A, B, C, D) at integer arguments."""
    params, n = _resolve_params(p, params_file, n)
    n = _require_n(n)
    try:
        derived = derive(params)
    except ValidationError as exc:
        raise click.UsageError(str(exc))
    if min(a, b, c, d) < 0:
        raise click.UsageError("arguments must be nonnegative integers")
    _emit(format_rational(eval_P(a, b, c, d, derived, n)), out)


def _value_table(params: ParameterSet, n: int) -> tuple:
    """Header pairs and the full P(s,t,sigma,tau) matrix in lattice order."""
    derived = derive(params)
    pairs = [(s, t) for (_, s, t) in lattice(n)]
    rows = [
        [format_rational(eval_P(s, t, sigma, tau, derived, n))
         for (sigma, tau) in pairs]
        for (s, t) in pairs
    ]
    return pairs, rows


@main.command()
@shared_options
def table(p, params_file, n, fmt, out):
    """Emit the full D x D matrix of P values over the index lattice."""
    params, n = _resolve_params(p, params_file, n)
    n = _require_n(n)
    try:
        pairs, rows = _value_table(params, n)
    except ValidationError as exc:
        raise click.UsageError(str(exc))
    if fmt == "json":
        _emit(_dump_json({"pairs": [list(x) for x in pairs], "values": rows}), out)
    else:
        header = "s,t," + ",".join(f"P(.|{s};{t})" for s, t in pairs)
        lines = [header]
        for (s, t), row in zip(pairs, rows):
            lines.append(f"{s},{t}," + ",".join(row))
        _emit("\n".join(lines), out)


@main.command()
@click.argument("suites", nargs=-1)
@click.option("--suite", "suite_flag", default=None,
              help="suite name (alternative to the positional form)")
@shared_options
def verify(suites, suite_flag, p, params_file, n, fmt, out):
    """Run verification suites; exits 1 if any identity fails.

    SUITES may be "all" (default) or any of: structure, module, form,
    transitions, orthogonality, recurrence, operators.
    """
    params, n = _resolve_params(p, params_file, n)
    n = _require_n(n)
    names = list(suites)
    if suite_flag is not None:
        names.append(suite_flag)
    if not names:
        names = ["all"]
    for name in names:
        if name != "all" and name not in SUITES:
            raise click.UsageError(
                f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}"
            )
    try:
        reports = run_suites(params, n, names)
    except ValidationError as exc:
        raise click.UsageError(str(exc))
    _emit(_dump_json([r.to_json() for r in reports]), out)
    if any(not r.ok for r in reports):
        sys.exit(1)


EXPORT_KINDS = ["structure", "gram", "dual-bases", "lattice"]


@main.command()
@click.argument("what", type=click.Choice(EXPORT_KINDS))
@shared_options
def export(what, p, params_file, n, fmt, out):
    """Export structural matrices, the Gram diagonal, or the dual bases."""
    params, n = _resolve_params(p, params_file, n)
    try:
        derived = derive(params)
        s = build(params, derived)
    except ValidationError as exc:
        raise click.UsageError(str(exc))

    if what == "structure":
        data = {
            "U": s.U.to_json(),
            "W": s.W.to_json(),
            "W~": s.Wt.to_json(),
            "R": s.R.to_json(),
            "R^-1": s.Rinv.to_json(),
            "varphi~": s.varphi_t.to_json(),
            "phi~": s.phi_t.to_json(),
            "constants": {
                "t": format_rational(derived.t),
                "u": format_rational(derived.u),
                "v": format_rational(derived.v),
                "w": format_rational(derived.w),
                "nu": format_rational(derived.nu),
                "theta": format_rational(derived.theta),
                "theta~": format_rational(derived.theta_t),
                "eta": [format_rational(x) for x in derived.eta],
                "eta~": [format_rational(x) for x in derived.eta_t],
                "k": [format_rational(x) for x in derived.k],
                "k~": [format_rational(x) for x in derived.k_t],
            },
        }
        _emit(_dump_json(data), out)
        return

    n = _require_n(n)
    f = BilinearForm(s, n)
    if what == "gram":
        if fmt == "csv":
            lines = ["r,s,t,norm_squared"]
            for point, value in zip(lattice(n), f.gram_json()):
                lines.append(",".join(str(x) for x in point) + "," + value)
            _emit("\n".join(lines), out)
        else:
            _emit(_dump_json({"lattice": [list(x) for x in lattice(n)],
                              "gram": f.gram_json()}), out)
    elif what == "dual-bases":
        data = {
            kind: [vector.to_json() for vector in dual_basis(f, s, kind)]
            for kind in ("plain", "tilde")
        }
        _emit(_dump_json(data), out)
    elif what == "lattice":
        _emit(_dump_json([list(x) for x in lattice(n)]), out)


if __name__ == "__main__":
    main()
