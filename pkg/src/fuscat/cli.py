"""Batch command line interface.

One verification or computation per invocation; exit codes are stable across
commands: 0 when every emitted report passes, 1 on a verification failure,
2 on an I/O or parse failure.  ``--format machine`` switches the output from
human-readable tables to newline-delimited JSON report documents (one per
report, parseable by :func:`fuscat.reporting.parse_report`).

Category and algebra arguments accept either file paths or bundled names
(``fuscat check-category ising``, ``fuscat torus toric_code_one_e``).  The
default tolerance can be overridden per invocation with ``--tolerance`` or
globally with the ``FUSCAT_TOLERANCE`` environment variable.
"""

from __future__ import annotations

import json
import os
import pathlib
import sys

import click
import numpy as np

from . import modules as md
from . import observables as ob
from .algebra import check_algebra, check_jandl, normalize_specialness
from .category import verify_category
from .data_io import bundled_path, load_algebra, load_category
from .errors import FuscatError, ParseError
from .reporting import CheckResult, ReportDocument, render_table

_EXIT_FAIL = 1
_EXIT_IO = 2


def _tolerance(value):
    if value is not None:
        return value
    env = os.environ.get("FUSCAT_TOLERANCE")
    if env:
        try:
            return float(env)
        except ValueError:
            raise click.UsageError(
                f"FUSCAT_TOLERANCE={env!r} is not a number")
    return None


def _resolve(name_or_path: str) -> pathlib.Path:
    p = pathlib.Path(name_or_path)
    if p.exists():
        return p
    try:
        return bundled_path(name_or_path)
    except ParseError:
        raise ParseError(
            f"{name_or_path!r} is neither a file nor a bundled name")


def _load_category(ref, tolerance):
    return load_category(_resolve(ref), tolerance=tolerance)


def _load_algebra(ref, category, tolerance):
    path = _resolve(ref)
    cat = _load_category(category, tolerance) if category else None
    alg = load_algebra(path, cat)
    if tolerance is not None:
        alg.cat.tolerance = tolerance
    return alg


def _emit(reports, fmt):
    ok = True
    for rep in reports:
        if fmt == "machine":
            # one report per line so streams stay parseable
            click.echo(json.dumps(json.loads(rep.to_json()),
                                  separators=(",", ":")))
        else:
            click.echo(render_table(rep))
            click.echo()
        ok = ok and rep.passed
    return 0 if ok else _EXIT_FAIL


def _matrix_lines(title, mat, labels_row=None, labels_col=None):
    mat = np.asarray(mat)
    out = [title]
    width = max(2, max(len(str(int(v))) for v in mat.ravel()))
    if labels_col is not None:
        head = " " * 8 + " ".join(f"{c:>{width}}" for c in labels_col)
        out.append(head)
    for r, row in enumerate(mat):
        tag = f"{labels_row[r]:>6}  " if labels_row is not None else "  "
        out.append(tag + " ".join(f"{int(v):>{width}}" for v in row))
    return "\n".join(out)


def _run(body):
    """Execute a command body, mapping failures to the stable exit codes."""
    try:
        sys.exit(body())
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(_EXIT_IO)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(_EXIT_IO)
    except FuscatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(_EXIT_FAIL)


_fmt_option = click.option(
    "--format", "fmt", type=click.Choice(["table", "machine"]),
    default="table", help="Output as human tables or JSON lines.")
_tol_option = click.option(
    "--tolerance", type=float, default=None,
    help="Override the numerical tolerance (or set FUSCAT_TOLERANCE).")


@click.group()
def main():
    """Verify skeletal categories and Frobenius algebras; compute the
    torus/defect partition functions, annulus coefficients, and boundary
    spectra of the associated full theories."""


@main.command("check-category")
@click.argument("category")
@_tol_option
@_fmt_option
def check_category_cmd(category, tolerance, fmt):
    """Verify pentagon/hexagon/ribbon/S-matrix data of a category file."""

    def body():
        cat = _load_category(category, _tolerance(tolerance))
        return _emit([verify_category(cat)], fmt)

    _run(body)


@main.command("check-algebra")
@click.argument("algebra")
@click.option("--category", default=None,
              help="Category file or bundled name (default: the algebra "
                   "file's own reference).")
@_tol_option
@_fmt_option
def check_algebra_cmd(algebra, category, tolerance, fmt):
    """Verify the Frobenius algebra axioms (and reversion, if present)."""

    def body():
        alg = _load_algebra(algebra, category, _tolerance(tolerance))
        reports = [check_algebra(alg)]
        if alg.jandl is not None:
            reports.append(check_jandl(alg))
        return _emit(reports, fmt)

    _run(body)


def _verified_algebra(algebra, category, tolerance, fmt):
    """Load, gate on the axioms, and normalize; None means already failed."""
    alg = _load_algebra(algebra, category, tolerance)
    rep = check_algebra(alg)
    if not rep.passed:
        _emit([rep], fmt)
        return None
    return normalize_specialness(alg)


@main.command("torus")
@click.argument("algebra")
@click.option("--category", default=None)
@_tol_option
@_fmt_option
def torus_cmd(algebra, category, tolerance, fmt):
    """Torus partition function and its modular-invariance certificate."""

    def body():
        alg = _verified_algebra(algebra, category, _tolerance(tolerance), fmt)
        if alg is None:
            return _EXIT_FAIL
        table = ob.torus_partition_function(alg)
        cert = ob.check_modular_invariance(alg.cat, table,
                                           haploid=alg.haploid)
        if fmt == "table":
            names = list(alg.cat.label_names)
            click.echo(_matrix_lines(f"torus Z for {table.algebra}:",
                                     table.z, names, names))
            click.echo()
        return _emit([cert], fmt)

    _run(body)


@main.command("annulus")
@click.argument("algebra")
@click.option("--category", default=None)
@_tol_option
@_fmt_option
def annulus_cmd(algebra, category, tolerance, fmt):
    """Annulus coefficients over the boundary conditions; NIMrep check."""

    def body():
        alg = _verified_algebra(algebra, category, _tolerance(tolerance), fmt)
        if alg is None:
            return _EXIT_FAIL
        ann = ob.annulus_coefficients(alg)
        cert = ob.check_nimrep(alg.cat, ann)
        if fmt == "table":
            mods = list(ann.modules)
            for i, mat in enumerate(ann.matrices):
                click.echo(_matrix_lines(
                    f"A_{alg.cat.label_names[i]}:", mat, mods, mods))
            click.echo()
        return _emit([cert], fmt)

    _run(body)


@main.command("modules")
@click.argument("algebra")
@click.option("--category", default=None)
@_tol_option
@_fmt_option
def modules_cmd(algebra, category, tolerance, fmt):
    """List the simple modules (boundary conditions) with multiplicities."""

    def body():
        alg = _verified_algebra(algebra, category, _tolerance(tolerance), fmt)
        if alg is None:
            return _EXIT_FAIL
        simples = md.list_simple_modules(alg)
        names = list(alg.cat.label_names)
        rows = {s.name: [int(v) for v in md.underlying_multiplicities(s)]
                for s in simples}
        rep = ReportDocument(
            "module_list", alg.name or "A", True, [],
            data={"labels": names, "modules": rows,
                  "count": len(simples)})
        if fmt == "table":
            click.echo(f"simple modules of {alg.name or 'A'} "
                       f"(multiplicities over {', '.join(names)}):")
            for s in simples:
                mults = md.underlying_multiplicities(s)
                click.echo(f"  {s.name}: " + " ".join(str(int(v))
                                                      for v in mults))
            click.echo(f"count: {len(simples)}")
            return 0
        return _emit([rep], fmt)

    _run(body)


def _pick_defect(spec, simples, reg):
    if spec == "regular":
        return reg
    try:
        idx = int(spec)
    except ValueError:
        raise click.UsageError(
            f"defect spec {spec!r} must be 'regular' or an index")
    if not 0 <= idx < len(simples):
        raise click.UsageError(
            f"defect index {idx} out of range 0..{len(simples) - 1}")
    return simples[idx]


@main.command("defects")
@click.argument("algebra")
@click.option("--category", default=None)
@click.option("--left", default="regular",
              help="Left defect: 'regular' or an index into the simple "
                   "defect list.")
@click.option("--right", default="regular",
              help="Right defect: 'regular' or an index.")
@_tol_option
@_fmt_option
def defects_cmd(algebra, category, left, right, tolerance, fmt):
    """Simple defect lines, their fusion table, and a defect partition
    function for the chosen pair."""

    def body():
        alg = _verified_algebra(algebra, category, _tolerance(tolerance), fmt)
        if alg is None:
            return _EXIT_FAIL
        simples, fusion = md.defect_fusion_table(alg)
        reg = md.regular_bimodule(alg)
        b_l = _pick_defect(left, simples, reg)
        b_r = _pick_defect(right, simples, reg)
        table = ob.defect_partition_function(alg, b_l, b_r)
        if left == right == "regular":
            # definitional reduction to the torus: full certificate applies
            cert = ob.check_modular_invariance(alg.cat, table,
                                               haploid=alg.haploid)
        else:
            # genuine defects need not commute with S or match twists;
            # only nonnegative integrality is a theorem here
            neg_ok = bool((table.z >= 0).all())
            cert = ReportDocument(
                "defect_table", table.algebra, neg_ok,
                [CheckResult("entries_nonnegative",
                             0.0 if neg_ok else 1.0, 0.5, neg_ok)])
        names = list(alg.cat.label_names)
        defect_rows = {s.name: [int(v) for v in
                                md.underlying_multiplicities(s)]
                       for s in simples}
        rep = ReportDocument(
            "defect_list", alg.name or "A", True, [],
            data={"labels": names, "defects": defect_rows,
                  "fusion": fusion.tolist(),
                  "z": table.z.tolist(), "left": table.left,
                  "right": table.right})
        if fmt == "table":
            click.echo(f"simple defects of {alg.name or 'A'}:")
            for s in simples:
                mults = md.underlying_multiplicities(s)
                click.echo(f"  {s.name}: " + " ".join(str(int(v))
                                                      for v in mults))
            dn = [s.name for s in simples]
            for a, xa in enumerate(simples):
                click.echo(_matrix_lines(f"fusion {xa.name} x (...):",
                                         fusion[a], dn, dn))
            click.echo(_matrix_lines(
                f"defect Z for {table.left} | {table.right}:",
                table.z, names, names))
            click.echo()
            return _emit([cert], fmt)
        return _emit([rep, cert], fmt)

    _run(body)


if __name__ == "__main__":
    main()
