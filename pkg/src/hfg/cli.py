"""Command-line interface.

Exit codes: 0 on success, 1 when a verification ran and failed, 2 on input
errors (malformed flags or files, invalid grids, exceeded budgets).  JSON
output is deterministic: key order is fixed and list-valued data is sorted
wherever the underlying object is a set.
"""
from __future__ import annotations

import dataclasses
import json
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from .budget import DEFAULT_BUDGET, Budget
from .errors import (
    BudgetExceededError,
    DomainError,
    GridError,
    HfgError,
    ParseError,
)
from .fatgrid import (
    FatGrid,
    abstract_grid,
    expand_pattern,
    grid_from_json,
    grid_ideal_intersection,
    grid_to_json,
)
from .invariants import (
    alpha_degree,
    generator_patterns,
    hilbert_from_resolution,
    invariants_report,
    pattern_ideal,
    resolution,
    resurgence_certificate,
)
from .polycore import (
    format_rational,
    hadamard_ideals,
    ideal_equal,
    ideal_from_json,
    ideal_to_json,
    join_ideals,
)
from .projective import Point
from .verify import (
    check_point_power_product,
    hilbert_function_oracle,
    vanishing_order,
)


_ERROR_PREFIX = {
    ParseError: "input parse error",
    GridError: "invalid grid",
    DomainError: "domain error",
    BudgetExceededError: "budget exceeded",
}


def _fail(exc: Exception) -> None:
    """Print a distinct message for the error class and exit with status 2."""
    for klass, prefix in _ERROR_PREFIX.items():
        if isinstance(exc, klass):
            click.echo("%s: %s" % (prefix, exc), err=True)
            sys.exit(2)
    click.echo("error: %s" % exc, err=True)
    sys.exit(2)


def _parse_int_list(text: str, label: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ParseError("%s must be a comma-separated integer list" % label)
    if not values:
        raise ParseError("%s must not be empty" % label)
    return values


def _load_grid(m: str | None, n: str | None, grid_path: str | None) -> FatGrid:
    if grid_path is not None and (m is not None or n is not None):
        raise click.UsageError("--grid conflicts with --m/--n")
    if grid_path is not None:
        try:
            with open(grid_path, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except OSError as exc:
            raise ParseError("cannot read %s: %s" % (grid_path, exc))
        except json.JSONDecodeError as exc:
            raise ParseError("%s is not valid JSON: %s" % (grid_path, exc))
        return grid_from_json(data)
    if m is None or n is None:
        raise click.UsageError("provide either --grid or both --m and --n")
    return abstract_grid(
        _parse_int_list(m, "--m"), _parse_int_list(n, "--n")
    )


def _load_ideal(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise ParseError("%s is not valid JSON: %s" % (path, exc))
    return ideal_from_json(data)


def _budget_from_flag(budget_degree: int | None) -> Budget:
    if budget_degree is None:
        return DEFAULT_BUDGET
    if budget_degree < 1:
        raise ParseError("--budget-degree must be a positive integer")
    return dataclasses.replace(
        DEFAULT_BUDGET, max_grid_multiplicity=budget_degree
    )


def _render_table(data) -> str:
    """Aligned-text rendering carrying the same data as the JSON output."""
    if isinstance(data, dict) and isinstance(data.get("instances"), list):
        head = [
            "%s: %s" % (key, _scalar(value))
            for key, value in data.items()
            if key != "instances"
        ]
        return "\n".join(head + ["", _rows_table(data["instances"])])
    if isinstance(data, list) and data and isinstance(data[0], dict):
        return _rows_table(data)
    if isinstance(data, dict):
        width = max(len(str(key)) for key in data)
        return "\n".join(
            "%-*s  %s" % (width, key, _scalar(value))
            for key, value in data.items()
        )
    return _scalar(data)


def _scalar(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(_scalar(v) for v in value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    return str(value)


def _rows_table(rows: list[dict]) -> str:
    columns = list(rows[0].keys())
    cells = [[_scalar(row.get(col)) for col in columns] for row in rows]
    widths = [
        max(len(col), *(len(row[i]) for row in cells))
        for i, col in enumerate(columns)
    ]
    out = ["  ".join("%-*s" % (w, c) for w, c in zip(widths, columns))]
    for row in cells:
        out.append("  ".join("%-*s" % (w, c) for w, c in zip(widths, row)))
    return "\n".join(out)


def _emit(data, output_format: str) -> None:
    if output_format == "table":
        click.echo(_render_table(data))
    else:
        click.echo(json.dumps(data, indent=2))


def _line_json(line) -> list[str]:
    return [format_rational(c) for c in line.coeffs]


_format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "table"]),
    default="json",
    show_default=True,
    help="Output rendering.",
)
_grid_options = (
    click.option("--m", "m", default=None, help="Row multiplicities, comma-separated."),
    click.option("--n", "n", default=None, help="Column multiplicities, comma-separated."),
    click.option(
        "--grid",
        "grid_path",
        type=click.Path(),
        default=None,
        help="Grid description file (JSON).",
    ),
)
_budget_option = click.option(
    "--budget-degree",
    type=int,
    default=None,
    help="Override the total-multiplicity cap for oracle computations.",
)


def _with_grid_options(fn):
    for option in reversed(_grid_options):
        fn = option(fn)
    return fn


@click.group()
@click.version_option(package_name="hfg", prog_name="hfg")
def main() -> None:
    """Exact invariants and verification for Hadamard fat grids."""


@main.command("grid")
@_with_grid_options
@_format_option
def grid_command(m, n, grid_path, output_format) -> None:
    """Build a grid and print its points, multiplicities and lines."""
    try:
        g = _load_grid(m, n, grid_path)
    except HfgError as exc:
        _fail(exc)
    r, s = g.shape
    payload = {
        "shape": [r, s],
        "swapped": g.swapped,
        "M": list(g.row_multiplicities),
        "N": list(g.col_multiplicities),
        "row_points": [p.to_json() for p in g.row_set.points],
        "col_points": [q.to_json() for q in g.col_set.points],
        "row_line": _line_json(g.row_line),
        "col_line": _line_json(g.col_line),
        "grid_points": [
            [p.to_json() for p in row] for row in g.grid_points
        ],
        "mult": [list(row) for row in g.mult],
        "degree": g.scheme_degree(),
        "total_multiplicity": g.total_multiplicity,
        "h_lines": [_line_json(line) for line in g.h_lines],
        "v_lines": [_line_json(line) for line in g.v_lines],
    }
    if output_format == "table":
        flat = dict(payload)
        flat["grid_points"] = [
            " | ".join(":".join(p) for p in row)
            for row in payload["grid_points"]
        ]
        flat["row_points"] = [":".join(p) for p in payload["row_points"]]
        flat["col_points"] = [":".join(p) for p in payload["col_points"]]
        flat["h_lines"] = [":".join(c) for c in payload["h_lines"]]
        flat["v_lines"] = [":".join(c) for c in payload["v_lines"]]
        flat["row_line"] = ":".join(payload["row_line"])
        flat["col_line"] = ":".join(payload["col_line"])
        _emit(flat, output_format)
    else:
        _emit(payload, output_format)


@main.command("resolution")
@_with_grid_options
@_format_option
def resolution_command(m, n, grid_path, output_format) -> None:
    """Print the twists of the minimal free resolution of the grid ideal."""
    try:
        g = _load_grid(m, n, grid_path)
        shifts = resolution(g)
    except HfgError as exc:
        _fail(exc)
    _emit(
        {
            "generator_twists": list(shifts.generator_twists),
            "syzygy_twists": list(shifts.syzygy_twists),
        },
        output_format,
    )


@main.command("generators")
@_with_grid_options
@_format_option
def generators_command(m, n, grid_path, output_format) -> None:
    """List the minimal generators: line-power patterns and expanded forms."""
    try:
        g = _load_grid(m, n, grid_path)
        patterns = generator_patterns(g)
        payload = []
        for pat in patterns:
            entry = pat.to_dict()
            entry["polynomial"] = expand_pattern(g, pat).to_string()
            payload.append(entry)
    except HfgError as exc:
        _fail(exc)
    _emit(payload, output_format)


@main.command("invariants")
@_with_grid_options
@click.option(
    "--t-max",
    type=int,
    default=2,
    show_default=True,
    help="Depth of the resurgence certificate.",
)
@_budget_option
@_format_option
def invariants_command(m, n, grid_path, t_max, budget_degree, output_format) -> None:
    """Print all closed-form invariants of the grid."""
    try:
        budget = _budget_from_flag(budget_degree)
        g = _load_grid(m, n, grid_path)
        payload = invariants_report(g, t_max=t_max, budget=budget)
    except HfgError as exc:
        _fail(exc)
    _emit(payload, output_format)


def _structure_job(grid_json: dict, budget: Budget) -> dict:
    g = grid_from_json(grid_json)
    patterns = generator_patterns(g)
    expected = g.row_multiplicities[-1] + g.col_multiplicities[-1]
    instances = [
        {
            "label": "pattern count equals m_r + n_s",
            "expected": str(expected),
            "computed": str(len(patterns)),
            "passed": len(patterns) == expected,
            "flag": None,
        }
    ]
    r, s = g.shape
    ok = True
    note = "all orders sufficient"
    for pat in patterns:
        poly = expand_pattern(g, pat)
        for i in range(r):
            for j in range(s):
                if vanishing_order(poly, g.grid_points[i][j]) < g.mult[i][j]:
                    ok = False
                    note = "pattern k=%d fails at point (%d,%d)" % (pat.k, i, j)
    instances.append(
        {
            "label": "every expanded pattern vanishes to full multiplicity"
            " at every grid point",
            "expected": "orders at least the multiplicities",
            "computed": note,
            "passed": ok,
            "flag": None,
        }
    )
    return {"instances": instances}


def _pattern_ideal_job(grid_json: dict, budget: Budget) -> dict:
    g = grid_from_json(grid_json)
    equal = ideal_equal(pattern_ideal(g), grid_ideal_intersection(g, budget))
    return {
        "instances": [
            {
                "label": "pattern ideal equals the intersection oracle",
                "expected": "equal",
                "computed": "equal" if equal else "different",
                "passed": equal,
                "flag": None,
            }
        ]
    }


def _hilbert_job(grid_json: dict, degree: int, budget: Budget) -> dict:
    g = grid_from_json(grid_json)
    predicted = hilbert_from_resolution(resolution(g), degree)
    computed = hilbert_function_oracle(g, degree, budget)
    return {
        "instances": [
            {
                "label": "resolution Hilbert function matches the rank oracle"
                " at degree %d" % degree,
                "expected": str(predicted),
                "computed": str(computed),
                "passed": predicted == computed,
                "flag": None,
            }
        ],
        "hilbert": [degree, computed],
    }


def _resurgence_job(grid_json: dict, t_max: int, budget: Budget) -> dict:
    g = grid_from_json(grid_json)
    report = resurgence_certificate(g, t_max, budget)
    return {"instances": [inst.to_dict() for inst in report.instances]}


def _run_verify_jobs(jobs, worker_count: int) -> list[dict]:
    if worker_count <= 1:
        return [fn(*args) for fn, args in jobs]
    with ProcessPoolExecutor(max_workers=worker_count) as pool:
        futures = [pool.submit(fn, *args) for fn, args in jobs]
        return [f.result() for f in futures]


@main.command("verify")
@_with_grid_options
@click.option(
    "--t-max",
    type=int,
    default=2,
    show_default=True,
    help="Depth of the resurgence certificate.",
)
@click.option(
    "--jobs",
    type=int,
    default=1,
    show_default=True,
    help="Worker processes for independent checks.",
)
@_budget_option
@_format_option
def verify_command(
    m, n, grid_path, t_max, jobs, budget_degree, output_format
) -> None:
    """Run every oracle check on a grid; exit 1 if any instance fails."""
    try:
        budget = _budget_from_flag(budget_degree)
        g = _load_grid(m, n, grid_path)
        budget.check_grid(g.total_multiplicity)
        grid_json = grid_to_json(g)
        top = max(resolution(g).syzygy_twists)
        job_list = [(_structure_job, (grid_json, budget))]
        job_list.append((_pattern_ideal_job, (grid_json, budget)))
        job_list.extend(
            (_hilbert_job, (grid_json, d, budget)) for d in range(top + 1)
        )
        job_list.append((_resurgence_job, (grid_json, t_max, budget)))
        results = _run_verify_jobs(job_list, jobs)
    except HfgError as exc:
        _fail(exc)

    instances: list[dict] = []
    hilbert: dict[int, int] = {}
    for result in results:
        instances.extend(result["instances"])
        if "hilbert" in result:
            degree, value = result["hilbert"]
            hilbert[degree] = value
    first_positive = min(
        (d for d, value in sorted(hilbert.items()) if value > 0), default=None
    )
    alpha = alpha_degree(g)
    instances.append(
        {
            "label": "initial degree matches the first nonzero oracle"
            " dimension",
            "expected": str(alpha),
            "computed": str(first_positive),
            "passed": first_positive == alpha,
            "flag": None,
        }
    )
    passed = all(inst["passed"] for inst in instances)
    payload = {
        "subject": "grid verification, M=%s, N=%s"
        % (list(g.row_multiplicities), list(g.col_multiplicities)),
        "passed": passed,
        "checks": len(instances),
        "instances": instances,
    }
    _emit(payload, output_format)
    if not passed:
        failed = sum(1 for inst in instances if not inst["passed"])
        click.echo(
            "verification failed: %d of %d checks" % (failed, len(instances)),
            err=True,
        )
        sys.exit(1)


def _binary_ideal_command(name: str, operation, help_text: str):
    @main.command(name, help=help_text)
    @click.option(
        "--ideal-a",
        "path_a",
        type=click.Path(),
        required=True,
        help="First ideal (JSON file).",
    )
    @click.option(
        "--ideal-b",
        "path_b",
        type=click.Path(),
        required=True,
        help="Second ideal (JSON file).",
    )
    @_format_option
    def command(path_a, path_b, output_format) -> None:
        try:
            a = _load_ideal(path_a)
            b = _load_ideal(path_b)
            result = operation(a, b)
        except HfgError as exc:
            _fail(exc)
        payload = ideal_to_json(result)
        if output_format == "table":
            _emit(
                {
                    "vars": payload["vars"],
                    "generators": [f.to_string() for f in result.generators],
                },
                output_format,
            )
        else:
            _emit(payload, output_format)

    return command


_binary_ideal_command(
    "hadamard",
    hadamard_ideals,
    "Hadamard product of two ideals (coordinate-wise product elimination).",
)
_binary_ideal_command(
    "join",
    join_ideals,
    "Join of two ideals (coordinate-wise sum elimination).",
)


@main.command("power-check")
@click.option("--p", "p_text", required=True, help="First point, p0:p1:p2.")
@click.option("--q", "q_text", required=True, help="Second point, q0:q1:q2.")
@click.option("-m", "power_m", type=int, default=1, show_default=True, help="Power on the first point ideal.")
@click.option("-n", "power_n", type=int, default=1, show_default=True, help="Power on the second point ideal.")
@_budget_option
@_format_option
def power_check_command(
    p_text, q_text, power_m, power_n, budget_degree, output_format
) -> None:
    """Compare a Hadamard power product against its stratum prediction."""
    try:
        budget = _budget_from_flag(budget_degree)
        report = check_point_power_product(
            Point.from_string(p_text),
            Point.from_string(q_text),
            power_m,
            power_n,
            budget,
        )
    except HfgError as exc:
        _fail(exc)
    _emit(report.to_dict(), output_format)
    if not report.passed:
        click.echo(
            "verification failed: %d of %d checks"
            % (len(report.failures()), len(report.instances)),
            err=True,
        )
        sys.exit(1)


if __name__ == "__main__":
    main()
