"""Command-line front end.

Subcommands::

    radial-fall   accumulated spin rotation for a zero-angular-momentum fall
    circular      per-orbit and N-orbit rotation for a circular orbit
    figure1       CSV sweep of the radial-fall rotation angle over (chi, x)
    figure2       CSV sweep of the per-orbit angle bound curves over x
    check         compatibility report (closed forms vs transport vs oracle)

Exit codes: 0 success, 2 invalid or censorship-violating parameters,
3 no circular orbit, 4 quadrature tolerance not met.

A JSON document passed with --json may supply any of the flag values by
field name; explicit flags win on conflict.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .errors import CensorshipError, DomainError, NoCircularOrbitError, ToleranceNotMetError
from .geodesics import (
    CIRCULAR_X_MAX,
    OrbitSense,
    circular_orbit_exists,
    circular_orbit_radicand,
    regime_check,
)
from .geometry import SPIN_LIMIT, GravitationalSource
from .qubit import QubitState, bell_chsh, orthogonal_error
from .report import compatibility_report
from .wigner import (
    DEFAULT_TOL,
    marginal_orbit_rotation,
    n_orbit_rotation,
    per_orbit_rotation,
    radial_fall_rotation,
    spin_bound_curves,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NO_ORBIT = 3
EXIT_TOLERANCE = 4

#: Default sweep grids: five evenly spaced spin curves, 201 radius points.
FIGURE_CHI_SAMPLES = 5
FIGURE_X_SAMPLES = 201

#: The sweeps and ordering checks fix one sense; the mirrored sense follows
#: from (chi, co) == (-chi, counter).
FIGURE_SENSE = OrbitSense.COUNTER_ROTATING



@dataclass(frozen=True)
class ScenarioSpec:
    """A single-scenario evaluation request."""

    scenario: str
    chi: float
    x: float | None = None          # circular target radius, x = rs/r
    x_start: float = 0.0            # radial fall
    x_end: float = 1.0
    sense: OrbitSense | None = None
    orbits: int = 1
    tol: float = DEFAULT_TOL
    out: str | None = None


@dataclass(frozen=True)
class SweepSpec:
    """A figure sweep request."""

    figure: int
    chi_samples: int = FIGURE_CHI_SAMPLES
    x_samples: int = FIGURE_X_SAMPLES
    tol: float = DEFAULT_TOL
    out: str | None = None


def fmt(value: float) -> str:
    """Fixed 9-significant-digit formatting used for all CSV values."""
    return f"{value:.9g}"


# --------------------------------------------------------------------------
# argument handling
# --------------------------------------------------------------------------


def _merge(args: argparse.Namespace, key: str, default, json_doc: dict):
    flag = getattr(args, key.replace("-", "_"), None)
    if flag is not None:
        return flag
    if json_doc and key in json_doc:
        return json_doc[key]
    return default


def _load_json(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError(f"scenario file {path} must contain a JSON object")
    return doc


def _parse_sense(value) -> OrbitSense:
    if isinstance(value, OrbitSense):
        return value
    try:
        return OrbitSense(value)
    except ValueError:
        raise ValueError(f"sense must be 'co' or 'counter', got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kerrspin",
        description="Frame-dragging-induced spin rotation on equatorial Kerr geodesics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rf = sub.add_parser("radial-fall", help="rotation accumulated on a zero-J radial fall")
    rf.add_argument("--chi", type=float, help="spin ratio a/rs in [-0.5, 0.5]")
    rf.add_argument("--x-start", type=float, help="start of the fall, x = rs/r (default 0)")
    rf.add_argument("--x-end", type=float, help="end of the fall (default 1, the stationary limit)")

    circ = sub.add_parser("circular", help="per-orbit rotation on a circular orbit")
    circ.add_argument("--chi", type=float, help="spin ratio a/rs in [-0.5, 0.5]")
    circ.add_argument("--x", type=float, help="orbit radius as x = rs/r in (0, 2/3]")
    circ.add_argument("--sense", choices=["co", "counter"], help="orbit sense")
    circ.add_argument("--orbits", type=int, help="number of completed orbits (default 1)")

    fig1 = sub.add_parser("figure1", help="CSV sweep: radial-fall rotation angle")
    fig2 = sub.add_parser("figure2", help="CSV sweep: per-orbit rotation bound curves")
    fig1.add_argument("--samples", type=int, help="number of x grid points (default 201)")
    fig2.add_argument("--samples", type=int, help="number of x grid points (default 201)")

    chk = sub.add_parser("check", help="compatibility report: closed forms vs transport")
    chk.add_argument("--samples", type=int, help="sample points per comparison (default 20)")

    for p in (rf, circ, fig1, fig2, chk):
        p.add_argument("--tol", type=float, help="absolute quadrature tolerance (default 1e-8)")
        p.add_argument("--out", type=str, help="output path")
        p.add_argument("--json", type=str, help="JSON file supplying flag values by name")
    return parser


# --------------------------------------------------------------------------
# scenario runs
# --------------------------------------------------------------------------


def run_radial_fall(spec: ScenarioSpec) -> int:
    source = GravitationalSource(rs=1.0, chi=spec.chi)
    rot = radial_fall_rotation(source, spec.x_start, spec.x_end, tol=spec.tol)
    try:
        regime = regime_check(source, 1.0 / spec.x_end, "radial_fall")
    except DomainError:
        # the chi = 0 endpoint at x = 1 is the degenerate horizon point;
        # the coordinate-time rates are continuous there, so step just off it
        regime = regime_check(source, (1.0 + 1e-9) / spec.x_end, "radial_fall")
    eps = orthogonal_error(QubitState(1.0, 0.0), rot.omega_total)
    chsh = bell_chsh(rot.omega_total)
    print(f"scenario: radial fall (chi={spec.chi:+.6f}, x {spec.x_start:.6f} -> {spec.x_end:.6f})")
    print(f"  omega                : {rot.omega_total:+.9f} rad")
    print(f"  quadrature error     : {rot.err_estimate:.3e} (tol {spec.tol:.1e})")
    print(f"  regime at x_end      : |dr/dt| = {regime.dr_dt:.6f}, "
          f"|r dphi/dt| = {regime.r_dphi_dt:.6f}, within bounds: {_yn(regime.within_bounds)}")
    print(f"  epsilon |0>          : {eps:.9f}")
    print(f"  chsh                 : {chsh:.9f}")
    if spec.out:
        _write_csv(spec.out, "chi,x_start,x_end,omega_rad,err_estimate",
                   [[fmt(spec.chi), fmt(spec.x_start), fmt(spec.x_end),
                     fmt(rot.omega_total), fmt(rot.err_estimate)]])
    return EXIT_OK


def run_circular(spec: ScenarioSpec) -> int:
    source = GravitationalSource(rs=1.0, chi=spec.chi)
    r = 1.0 / spec.x
    per_orbit = per_orbit_rotation(source, r, spec.sense)
    total = n_orbit_rotation(per_orbit, spec.orbits)
    regime = regime_check(source, r, "circular", spec.sense)
    omega_grav = 2.0 * math.pi * total.delta_omega
    omega_orbit_total = total.omega_total
    print(f"scenario: circular orbit (chi={spec.chi:+.6f}, x={spec.x:.6f}, "
          f"sense={spec.sense.value}, orbits={spec.orbits})")
    print(f"  omega per orbit      : {per_orbit.omega_total:+.9f} rad")
    print(f"  delta_omega          : {per_orbit.delta_omega:+.9f} (per orbit, gravitational)")
    print(f"  delta_omega_N        : {total.delta_omega:+.9f} (N={spec.orbits})")
    print("  quadrature error     : 0 (closed form, no quadrature)")
    print(f"  regime               : |r dphi/dt| = {regime.r_dphi_dt:.6f}, "
          f"within bounds: {_yn(regime.within_bounds)}")
    for label, omega in (("omega = 2*pi*delta_omega_N", omega_grav),
                         ("omega = N*omega_orbit     ", omega_orbit_total)):
        eps = orthogonal_error(QubitState(1.0, 0.0), omega)
        print(f"  epsilon |0> ({label}) : {eps:.9f}")
    for label, omega in (("omega = 2*pi*delta_omega_N", omega_grav),
                         ("omega = N*omega_orbit     ", omega_orbit_total)):
        print(f"  chsh        ({label}) : {bell_chsh(omega):.9f}")
    if spec.out:
        _write_csv(spec.out,
                   "chi,x,sense,orbits,omega_orbit,delta_omega,delta_omega_n",
                   [[fmt(spec.chi), fmt(spec.x), spec.sense.value, str(spec.orbits),
                     fmt(per_orbit.omega_total), fmt(per_orbit.delta_omega),
                     fmt(total.delta_omega)]])
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# --------------------------------------------------------------------------
# figure sweeps
# --------------------------------------------------------------------------


def figure1_rows(spec: SweepSpec) -> list[list[str]]:
    """Rows chi,x,omega_rad,err_estimate,error for the radial-fall sweep.

    For each spin curve the rotation is accumulated cumulatively over the
    ascending x grid, so a full curve costs one pass of short integrals.
    """
    if spec.x_samples < 2 or spec.chi_samples < 2:
        raise ValueError("grid sizes must be at least 2")
    step = 2.0 * SPIN_LIMIT / (spec.chi_samples - 1)
    chi_grid = [-SPIN_LIMIT + i * step for i in range(spec.chi_samples)]
    x_grid = [(i + 1) / spec.x_samples for i in range(spec.x_samples)]
    rows = []
    for chi in chi_grid:
        source = GravitationalSource(rs=1.0, chi=chi)
        omega = 0.0
        err = 0.0
        prev = 0.0
        broken = None
        for x in x_grid:
            if broken is None:
                try:
                    rot = radial_fall_rotation(source, prev, x, tol=spec.tol)
                    omega += rot.omega_total
                    err += rot.err_estimate
                    prev = x
                except (DomainError, ToleranceNotMetError) as exc:
                    broken = f"{type(exc).__name__}: {exc}"
            if broken is None:
                rows.append([fmt(chi), fmt(x), fmt(omega), fmt(err), ""])
            else:
                rows.append([fmt(chi), fmt(x), "", "", broken])
    return rows


def _figure2_cell(source: GravitationalSource, r: float, sense: OrbitSense) -> float | None:
    """delta_omega at (source, r), or None when no orbit exists.

    Marginal orbits (radicand zero to roundoff) get the limit evaluation.
    """
    radicand = circular_orbit_radicand(source, r, sense)
    if radicand > 1e-12:
        if not circular_orbit_exists(source, r, sense):
            return None
        return per_orbit_rotation(source, r, sense).delta_omega
    if radicand > -1e-12:
        return marginal_orbit_rotation(source, r, sense).delta_omega
    return None


def figure2_rows(spec: SweepSpec) -> list[list[str]]:
    """Rows for the per-orbit bound-curve sweep over x in (0, 2/3].

    Columns: the censorship-bound curves (chi = +-1/2), the non-spinning
    curve, and the orbit-existence bound curves evaluated where that bound
    is the operative one (|a_dynamics| <= rs/2).  All curves use the fixed
    sweep sense; ``admissible`` marks rows where the three spin curves all
    exist.
    """
    if spec.x_samples < 2:
        raise ValueError("grid sizes must be at least 2")
    x_grid = [CIRCULAR_X_MAX * (i + 1) / spec.x_samples for i in range(spec.x_samples)]
    rows = []
    for x in x_grid:
        r = 1.0 / x
        cells: dict[str, float | None] = {}
        for key, chi in (("aplus", SPIN_LIMIT), ("aminus", -SPIN_LIMIT), ("zero", 0.0)):
            cells[key] = _figure2_cell(GravitationalSource(1.0, chi), r, FIGURE_SENSE)
        bounds = spin_bound_curves(1.0, r)
        if 0.0 <= bounds.a_dynamics <= SPIN_LIMIT + 1e-12:
            chi_dyn = min(bounds.a_dynamics, SPIN_LIMIT)
            cells["dyn_plus"] = _figure2_cell(GravitationalSource(1.0, chi_dyn), r, FIGURE_SENSE)
            cells["dyn_minus"] = _figure2_cell(GravitationalSource(1.0, -chi_dyn), r, FIGURE_SENSE)
        else:
            cells["dyn_plus"] = None
            cells["dyn_minus"] = None
        admissible = all(cells[k] is not None for k in ("aplus", "aminus", "zero"))
        rows.append([
            fmt(x),
            *(fmt(cells[k]) if cells[k] is not None else ""
              for k in ("aplus", "aminus", "zero", "dyn_plus", "dyn_minus")),
            "true" if admissible else "false",
        ])
    return rows


FIGURE1_HEADER = "chi,x,omega_rad,err_estimate,error"
FIGURE2_HEADER = ("x,delta_omega_aplus,delta_omega_aminus,delta_omega_zero,"
                  "delta_omega_dynbound_plus,delta_omega_dynbound_minus,admissible")


def _write_csv(path: str, header: str, rows: list[list[str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _load_json(getattr(args, "json", None))
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    try:
        if args.command == "radial-fall":
            spec = ScenarioSpec(
                scenario="radial_fall",
                chi=_require_float(_merge(args, "chi", None, doc), "--chi"),
                x_start=float(_merge(args, "x_start", 0.0, doc)),
                x_end=float(_merge(args, "x_end", 1.0, doc)),
                tol=float(_merge(args, "tol", DEFAULT_TOL, doc)),
                out=_merge(args, "out", None, doc),
            )
            return run_radial_fall(spec)
        if args.command == "circular":
            spec = ScenarioSpec(
                scenario="circular",
                chi=_require_float(_merge(args, "chi", None, doc), "--chi"),
                x=_require_float(_merge(args, "x", None, doc), "--x"),
                sense=_parse_sense(_require(_merge(args, "sense", None, doc), "--sense")),
                orbits=int(_merge(args, "orbits", 1, doc)),
                tol=float(_merge(args, "tol", DEFAULT_TOL, doc)),
                out=_merge(args, "out", None, doc),
            )
            if spec.x <= 0.0:
                raise DomainError(f"--x must be positive, got {spec.x}")
            if spec.orbits < 0:
                raise DomainError(f"--orbits must be non-negative, got {spec.orbits}")
            return run_circular(spec)
        if args.command in ("figure1", "figure2"):
            figure = 1 if args.command == "figure1" else 2
            spec = SweepSpec(
                figure=figure,
                chi_samples=int(_merge(args, "chi_samples", FIGURE_CHI_SAMPLES, doc)),
                x_samples=int(_merge(args, "samples", FIGURE_X_SAMPLES, doc)),
                tol=float(_merge(args, "tol", DEFAULT_TOL, doc)),
                out=_merge(args, "out", None, doc) or f"figure{figure}.csv",
            )
            if figure == 1:
                rows = figure1_rows(spec)
                _write_csv(spec.out, FIGURE1_HEADER, rows)
            else:
                rows = figure2_rows(spec)
                _write_csv(spec.out, FIGURE2_HEADER, rows)
            print(f"wrote {len(rows)} rows to {spec.out}")
            return EXIT_OK
        if args.command == "check":
            samples = int(_merge(args, "samples", 20, doc))
            report = compatibility_report(samples=samples)
            text = report.format_text()
            print(text)
            out = _merge(args, "out", None, doc)
            if out:
                with open(out, "w", encoding="utf-8") as fh:
                    fh.write(text + "\n")
            return EXIT_OK
        raise ValueError(f"unknown command {args.command!r}")
    except NoCircularOrbitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ORBIT
    except ToleranceNotMetError as exc:
        print(f"error: {exc} (best estimate {exc.best_estimate:+.9f})", file=sys.stderr)
        return EXIT_TOLERANCE
    except (CensorshipError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


def _require_float(value, flag: str) -> float:
    return float(_require(value, flag))


if __name__ == "__main__":
    sys.exit(main())
