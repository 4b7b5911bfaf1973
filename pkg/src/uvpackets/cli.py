"""Command-line front end.

Subcommands
-----------
free      evaluate the free-particle packet on a grid, write CSV or PGM
box       evaluate the box packet series on a grid, write CSV or PGM
slope     1-D profile of the initial wave function and its initial slope
moments   half-line uncertainty report
classical classical-limit scan (alpha, fwhm, crest) as CSV
validate  run the full acceptance suite and write the validation report

Exit codes: 0 success, 1 validation failure, 2 invalid parameters (the
message names the violated invariant), 3 I/O failure.  Output files are
deterministic byte-for-byte for a fixed configuration: floats are rendered
in shortest round-trip form with LF line endings.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import boxpacket, freepacket, suite, validate
from .fields import Field2D, Grid2D, PhysicalConstants, sample

__all__ = ["RunConfig", "run", "write_csv", "write_csv_series", "write_pgm", "main"]

QUANTITIES = ("abs2", "re2", "im2", "re", "im", "phase")
PGM_QUANTITIES = ("abs2", "re2", "im2")


@dataclass
class RunConfig:
    """One CLI invocation, fully resolved."""

    command: str
    params: dict = dc_field(default_factory=dict)
    grid: Grid2D | None = None
    quantity: str = "abs2"
    format: str = "csv"
    out_path: str | None = None


def reduce_quantity(values: np.ndarray, quantity: str) -> np.ndarray:
    """Real reduction of a complex field: |Psi|^2, Re^2, Im^2, re, im, phase."""
    if quantity == "abs2":
        return values.real**2 + values.imag**2
    if quantity == "re2":
        return values.real**2
    if quantity == "im2":
        return values.imag**2
    if quantity == "re":
        return values.real.copy()
    if quantity == "im":
        return values.imag.copy()
    if quantity == "phase":
        return np.angle(values)
    raise ValueError(f"quantity must be one of {QUANTITIES} (got {quantity!r})")


def write_csv(field: Field2D, quantity: str, path: str) -> None:
    """Field as `u,v,value` rows, v-outer/u-inner, shortest round-trip floats."""
    data = reduce_quantity(field.values, quantity)
    u = field.grid.u
    v = field.grid.v
    with open(path, "w", newline="\n") as fh:
        fh.write("u,v,value\n")
        for j in range(field.grid.n_v):
            vj = repr(float(v[j]))
            row = data[j]
            for i in range(field.grid.n_u):
                fh.write(f"{float(u[i])!r},{vj},{float(row[i])!r}\n")


def write_csv_series(u: np.ndarray, value: np.ndarray, path: str) -> None:
    """1-D series as `u,value` rows."""
    with open(path, "w", newline="\n") as fh:
        fh.write("u,value\n")
        for ui, yi in zip(u, value):
            fh.write(f"{float(ui)!r},{float(yi)!r}\n")


def _write_table(path: str, header: list[str], columns: list[np.ndarray]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(repr(float(x)) for x in row) + "\n")


def write_pgm(field: Field2D, quantity: str, path: str) -> None:
    """Plain PGM (P2), maxval 255, linearly normalized by the field maximum.

    v increases downward (row 0 is v_min).  Only the non-negative
    reductions abs2/re2/im2 are valid image quantities.
    """
    if quantity not in PGM_QUANTITIES:
        raise ValueError(
            f"quantity for pgm must be one of {PGM_QUANTITIES} (got {quantity!r})")
    data = reduce_quantity(field.values, quantity)
    peak = float(data.max())
    if peak > 0:
        pixels = np.floor(data / peak * 255.0 + 0.5).astype(int)
    else:
        pixels = np.zeros(data.shape, dtype=int)
    with open(path, "w", newline="\n") as fh:
        fh.write("P2\n")
        fh.write(f"{field.grid.n_u} {field.grid.n_v}\n")
        fh.write("255\n")
        for row in pixels:
            fh.write(" ".join(str(int(x)) for x in row) + "\n")


def _grid_from_args(args, default_lim: float) -> Grid2D:
    umin = args.umin if args.umin is not None else -default_lim
    umax = args.umax if args.umax is not None else default_lim
    vmin = args.vmin if args.vmin is not None else -default_lim
    vmax = args.vmax if args.vmax is not None else default_lim
    return Grid2D(umin, umax, vmin, vmax, args.nu, args.nv)


def _emit(field: Field2D, config: RunConfig) -> None:
    if config.format == "csv":
        write_csv(field, config.quantity, config.out_path)
    elif config.format == "pgm":
        write_pgm(field, config.quantity, config.out_path)
    else:
        raise ValueError(f"format must be 'csv' or 'pgm' (got {config.format!r})")


def run(config: RunConfig) -> int:
    """Execute a resolved configuration.  Returns the exit status."""
    cmd = config.command
    if cmd == "free":
        p = freepacket.FreePacketParams(**config.params)
        field = sample(config.grid, lambda U, V: freepacket.packet_closed(U, V, p))
        _emit(field, config)
        return 0
    if cmd == "box":
        prm = dict(config.params)
        source = prm.pop("coeff_source", "numeric")
        p = boxpacket.BoxPacketParams(**prm)
        coeffs = boxpacket.mode_coefficients(p, source=source)
        field = boxpacket.series_field(config.grid, p, coeffs)
        _emit(field, config)
        return 0
    if cmd == "slope":
        p = freepacket.FreePacketParams(**config.params)
        u = config.grid.u
        psi0 = freepacket.initial_condition(u, p)
        slope = freepacket.initial_slope(u, p).imag
        _write_table(config.out_path, ["u", "psi0", "slope_im"], [u, psi0, slope])
        return 0
    if cmd == "moments":
        prm = dict(config.params)
        c = PhysicalConstants(hbar=prm.pop("hbar", 1.0), mass=prm.pop("mass", 1.0))
        p = freepacket.FreePacketParams(**prm)
        rep = validate.halfline_moments(p, c)
        text = (f"mean_u = {rep.mean_u!r}\n"
                f"var_u = {rep.var_u!r}\n"
                f"var_p = {rep.var_p!r}\n"
                f"product = {rep.product!r}\n"
                f"hbar = {rep.hbar!r}\n")
        if config.out_path:
            with open(config.out_path, "w", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    if cmd == "classical":
        prm = config.params
        scan = freepacket.classical_limit_scan(prm["alphas"], prm["d"], prm["v_probe"])
        cols = [np.array([s[i] for s in scan]) for i in range(3)]
        _write_table(config.out_path, ["alpha", "fwhm", "crest"], cols)
        return 0
    if cmd == "validate":
        def progress(res):
            flag = "PASS" if res.passed else "FAIL"
            print(f"criterion {res.index:2d} [{flag}] {res.name}")

        results = suite.run_all(progress=progress)
        findings = suite.erratum_findings()
        report = suite.format_report(results, findings)
        with open(config.out_path, "w", newline="\n") as fh:
            fh.write(report)
        print(f"report written to {config.out_path}")
        return 0 if all(r.passed for r in results) else 1
    raise ValueError(f"unknown command {config.command!r}")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="uvpackets",
        description="Non-dispersive wave packets on the (u, v) configuration plane")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_grid(sp, two_d=True):
        sp.add_argument("--umin", type=float, default=None)
        sp.add_argument("--umax", type=float, default=None)
        sp.add_argument("--nu", type=int, default=241)
        if two_d:
            sp.add_argument("--vmin", type=float, default=None)
            sp.add_argument("--vmax", type=float, default=None)
            sp.add_argument("--nv", type=int, default=241)

    def add_output(sp):
        sp.add_argument("--quantity", choices=QUANTITIES, default="abs2")
        sp.add_argument("--format", choices=("csv", "pgm"), default="csv")
        sp.add_argument("--out", required=True, help="output file path")

    sp = sub.add_parser("free", help="free-particle packet on a grid")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--d", type=float, required=True)
    add_grid(sp)
    add_output(sp)

    sp = sub.add_parser("box", help="particle-in-a-box packet on a grid")
    sp.add_argument("--L", type=float, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--d", type=float, required=True)
    sp.add_argument("--nmax", type=int, default=200)
    sp.add_argument("--coeff-source", choices=("numeric", "closed"),
                    default="numeric")
    add_grid(sp)
    add_output(sp)

    sp = sub.add_parser("slope", help="initial profile and initial slope (1-D)")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--d", type=float, required=True)
    add_grid(sp, two_d=False)
    sp.add_argument("--out", required=True)

    sp = sub.add_parser("moments", help="half-line uncertainty report")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--d", type=float, required=True)
    sp.add_argument("--hbar", type=float, default=1.0)
    sp.add_argument("--mass", type=float, default=1.0)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("classical", help="classical-limit scan as CSV")
    sp.add_argument("--alphas", type=str, required=True,
                    help="comma-separated increasing list, e.g. 1,4,16")
    sp.add_argument("--d", type=float, required=True)
    sp.add_argument("--v-probe", type=float, default=0.5)
    sp.add_argument("--out", required=True)

    sp = sub.add_parser("validate", help="run the acceptance suite")
    sp.add_argument("--out", default="validation_report.txt")

    return ap


def _config_from_args(args) -> RunConfig:
    cmd = args.command
    if cmd == "free":
        return RunConfig(
            command=cmd, params={"alpha": args.alpha, "d": args.d},
            grid=_grid_from_args(args, 6.0),
            quantity=args.quantity, format=args.format, out_path=args.out)
    if cmd == "box":
        grid_args = args
        default_lim = args.L / 2
        grid = Grid2D(
            grid_args.umin if grid_args.umin is not None else -default_lim,
            grid_args.umax if grid_args.umax is not None else default_lim,
            grid_args.vmin if grid_args.vmin is not None else -default_lim,
            grid_args.vmax if grid_args.vmax is not None else default_lim,
            grid_args.nu, grid_args.nv)
        return RunConfig(
            command=cmd,
            params={"L": args.L, "alpha": args.alpha, "d": args.d,
                    "n_max": args.nmax, "coeff_source": args.coeff_source},
            grid=grid, quantity=args.quantity, format=args.format,
            out_path=args.out)
    if cmd == "slope":
        umin = args.umin if args.umin is not None else -8.0
        umax = args.umax if args.umax is not None else 8.0
        grid = Grid2D(umin, umax, -1.0, 1.0, args.nu, 3)
        return RunConfig(command=cmd, params={"alpha": args.alpha, "d": args.d},
                         grid=grid, out_path=args.out)
    if cmd == "moments":
        return RunConfig(command=cmd,
                         params={"alpha": args.alpha, "d": args.d,
                                 "hbar": args.hbar, "mass": args.mass},
                         out_path=args.out)
    if cmd == "classical":
        try:
            alphas = [float(x) for x in args.alphas.split(",") if x.strip()]
        except ValueError as exc:
            raise ValueError(f"alphas must be a comma-separated float list "
                             f"(got {args.alphas!r})") from exc
        return RunConfig(command=cmd,
                         params={"alphas": alphas, "d": args.d,
                                 "v_probe": args.v_probe},
                         out_path=args.out)
    if cmd == "validate":
        return RunConfig(command=cmd, out_path=args.out)
    raise ValueError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        return run(config)
    except ValueError as exc:
        print(f"invalid parameter: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
