"""Command-line front end: figure data as CSV/JSON and the on-axis report.

Exit codes: 0 success, 2 invalid arguments or unwritable output,
3 tolerance failure in ``on-axis-report --strict``.
"""

import argparse
import io
import json
import sys

import numpy as np

from . import sweep
from .lg_mode import POLARIZATIONS, BeamParams
from .multipole import DetectorLine, Kind, Multipole
from .report import build_on_axis_report, default_detectors

EXIT_USAGE = 2
EXIT_TOLERANCE = 3

# figure-caption defaults per subcommand
DEFAULTS = {
    "radial-profile": dict(p=6, m=2, kw0=10.0, range="0:3:400"),
    "ratio-sweep": dict(p=6, m=2, kw0=10.0, range="4:100:97"),
    "field-map": dict(p=6, m=2, kw0=6.0, range="-2.5:2.5:101"),
    "on-axis-report": dict(p=1, m=2, kw0=10.0, range=None, format="json"),
}


class UsageError(Exception):
    pass


def parse_range(text):
    try:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError as exc:
        raise UsageError(f"--range expects MIN:MAX:COUNT, got {text!r}") from exc
    if n < 2 or not lo < hi:
        raise UsageError(f"--range needs COUNT >= 2 and MIN < MAX, got {text!r}")
    return lo, hi, n


def parse_polarization(text):
    if text in POLARIZATIONS:
        return POLARIZATIONS[text]
    if text.startswith("custom:"):
        try:
            a_re, a_im, b_re, b_im = (float(v) for v in text[len("custom:"):].split(","))
        except ValueError as exc:
            raise UsageError(f"custom polarization needs four numbers, got {text!r}") from exc
        return complex(a_re, a_im), complex(b_re, b_im)
    raise UsageError(f"unknown polarization {text!r}")


def parse_channel(text, args):
    """``KIND:M`` for M1/E2 (scalars from --m1/--q0.. flags) or ``E1:x|y|z``."""
    kind, _, rest = text.partition(":")
    try:
        kind = Kind(kind.upper())
        if kind is Kind.E1:
            axis = "xyz".index(rest or "x")
            d = [0.0, 0.0, 0.0]
            d[axis] = args.d1
            return Multipole(kind, 0, 1.0, tuple(d))
        M = int(rest)
        if kind is Kind.M1:
            return Multipole(kind, M, args.m0 if M == 0 else args.m1)
        return Multipole(kind, M, (args.q0, args.q1, args.q2)[min(abs(M), 2)])
    except ValueError as exc:
        raise UsageError(f"bad channel {text!r}: {exc}") from exc


def _channels(args, fallback):
    if not args.channel:
        return fallback
    if args.channel == ["none"]:
        return []
    return [parse_channel(c, args) for c in args.channel]


def _beam(args):
    alpha, beta = parse_polarization(args.pol)
    try:
        e0 = complex(args.e0.replace(" ", ""))
        return BeamParams(E0=e0, k=args.k, w0=args.kw0 / args.k, p=args.p, m=args.m,
                          alpha=alpha, beta=beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _line(args):
    try:
        return DetectorLine(args.detuning, args.gamma, args.hbar)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _fmt(v):
    return format(float(v), ".17g")


def render_table(cols, fmt):
    names = list(cols)
    data = [np.asarray(cols[n], dtype=float) for n in names]
    if fmt == "json":
        rows = [[float(v) for v in row] for row in zip(*data)]
        return json.dumps({"columns": names, "rows": rows}, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(",".join(names) + "\n")
    for row in zip(*data):
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def cmd_radial_profile(args):
    beam, line = _beam(args), _line(args)
    lo, hi, n = parse_range(args.range)
    if args.grid:
        n = args.grid
    channels = _channels(args, [Multipole(Kind.E2, 1, args.q1), Multipole(Kind.M1, 1, args.m1)])
    cols = sweep.radial_profile(beam, np.linspace(lo, hi, n), channels, line, z=args.z,
                                c=args.c, normalize=args.normalize)
    _write(render_table(cols, args.format), args.out)
    return 0


def cmd_ratio_sweep(args):
    beam = _beam(args)
    lo, hi, n = parse_range(args.range)
    if args.grid:
        n = args.grid
    if lo <= 0:
        raise UsageError("k w0 range must be positive")
    cols = sweep.ratio_sweep(beam, np.linspace(lo, hi, n), c=args.c)
    _write(render_table(cols, args.format), args.out)
    return 0


def cmd_field_map(args):
    beam = _beam(args)
    lo, hi, n = parse_range(args.range)
    if args.grid:
        n = args.grid
    cols = sweep.field_map(beam, np.linspace(lo, hi, n), z=args.z)
    _write(render_table(cols, args.format), args.out)
    return 0


def cmd_on_axis_report(args):
    if args.format != "json":
        raise UsageError("on-axis-report is written as JSON only")
    beam, line = _beam(args), _line(args)
    detectors = _channels(args, default_detectors((args.q0, args.q1, args.q2), args.m1))
    report = build_on_axis_report(beam, detectors, line, c=args.c)
    _write(json.dumps(report, indent=1) + "\n", args.out)
    if args.strict and report["deviations"]:
        print(f"{len(report['deviations'])} tolerance failure(s)", file=sys.stderr)
        return EXIT_TOLERANCE
    return 0


COMMANDS = {
    "radial-profile": (cmd_radial_profile, "radial energy density and excitation-rate profile"),
    "ratio-sweep": (cmd_ratio_sweep, "axis magnetic / peak electric energy versus k w0"),
    "field-map": (cmd_field_map, "real parts of E and B over the transverse plane"),
    "on-axis-report": (cmd_on_axis_report, "closed forms versus numeric fields on the axis"),
}


def _shared(parser, defaults):
    parser.add_argument("--p", type=int, default=defaults["p"], help="radial index")
    parser.add_argument("--m", type=int, default=defaults["m"], help="azimuthal index")
    parser.add_argument("--kw0", type=float, default=defaults["kw0"], help="focusing parameter k*w0")
    parser.add_argument("--k", type=float, default=1.0, help="wavenumber (sets the length unit)")
    parser.add_argument("--e0", default="1", help="field amplitude, complex allowed (e.g. 0.6+0.8j)")
    parser.add_argument("--pol", default="sigma-minus",
                        help="sigma-minus | sigma-plus | linear-x | linear-y | custom:a_re,a_im,b_re,b_im")
    parser.add_argument("--z", type=float, default=0.0, help="axial plane")
    parser.add_argument("--out", default="-", help="output file (default stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default=defaults.get("format", "csv"))
    parser.add_argument("--normalize", action="store_true", help="scale rate columns to unit maximum")
    parser.add_argument("--strict", action="store_true", help="exit 3 on tolerance failure")
    parser.add_argument("--grid", type=int, default=None, help="sample count, overrides COUNT")
    parser.add_argument("--range", default=defaults["range"], help="MIN:MAX:COUNT")
    parser.add_argument("--channel", action="append", default=[],
                        help="detector channel KIND:M (E2:1, M1:1, E1:x); repeatable; 'none' for no channels")
    parser.add_argument("--m0", type=float, default=1.0, help="M1 scalar m^(0)")
    parser.add_argument("--m1", type=float, default=1.0, help="M1 scalar m^(1)")
    parser.add_argument("--q0", type=float, default=1.0, help="E2 scalar Q^(0)")
    parser.add_argument("--q1", type=float, default=1.0, help="E2 scalar Q^(1)")
    parser.add_argument("--q2", type=float, default=1.0, help="E2 scalar Q^(2)")
    parser.add_argument("--d1", type=float, default=1.0, help="E1 dipole magnitude")
    parser.add_argument("--detuning", type=float, default=0.0, help="detuning delta omega")
    parser.add_argument("--gamma", type=float, default=2.0, help="linewidth Gamma")
    parser.add_argument("--hbar", type=float, default=1.0)
    parser.add_argument("--c", type=float, default=1.0, help="speed of light in energy densities")


def build_parser():
    parser = argparse.ArgumentParser(prog="spiralfield", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (fn, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        _shared(sp, DEFAULTS[name])
        sp.set_defaults(func=fn)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.grid is not None and args.grid < 2:
            raise UsageError("--grid must be >= 2")
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"spiralfield: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
