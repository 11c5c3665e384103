"""Command-line front end: ``sweep``, ``figure`` and ``verify``."""
import argparse
import math
import re
import sys

from .sweep import ROUTES, ConfigError, SweepConfig, figure_csv, sweep_csv
from .verify import format_report, run_checks

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2

_PI_TERM = re.compile(r"^\s*(?:([-+]?[0-9.eE+-]+)\s*\*?\s*)?pi\s*(?:/\s*([0-9.eE+-]+))?\s*$")


def parse_number(text):
    """Float, also accepting ``pi``, ``2pi``, ``pi/2`` and ``3*pi/4``."""
    m = _PI_TERM.match(text)
    if m:
        value = float(m.group(1) or 1.0) * math.pi
        return value / float(m.group(2)) if m.group(2) else value
    return float(text)


def parse_list(text, kind=parse_number):
    items = [t.strip() for t in str(text).split(",")]
    return tuple(kind(t) for t in items if t)


def _code(text):
    value = float(text)
    if value != int(value):
        raise ValueError(f"code must be an integer, got {text!r}")
    return int(value)


def _route(text):
    if text not in ROUTES:
        raise ValueError(f"unknown route {text!r}")
    return text


# config-file key -> (SweepConfig field, parser)
CONFIG_KEYS = {
    "alpha-min": ("alpha_min", parse_number),
    "alpha-max": ("alpha_max", parse_number),
    "alpha-steps": ("alpha_steps", int),
    "eta": ("etas", parse_list),
    "theta": ("thetas", parse_list),
    "w": ("ws", parse_list),
    "code": ("codes", lambda t: parse_list(t, _code)),
    "route": ("routes", lambda t: parse_list(t, _route)),
    "out": ("out", str),
    "workers": ("workers", int),
}


def read_config(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("_", "-")
            if key not in CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            name, parse = CONFIG_KEYS[key]
            try:
                values[name] = parse(value)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return values


def _flag_values(args):
    values = {}
    for key, (name, parse) in CONFIG_KEYS.items():
        raw = getattr(args, key.replace("-", "_"))
        if raw is None:
            continue
        try:
            values[name] = parse(raw)
        except ValueError as exc:
            raise ConfigError(f"--{key}: {exc}") from None
    return values


def build_config(args):
    values = read_config(args.config) if args.config else {}
    values.update(_flag_values(args))
    return SweepConfig(**values).validate()


def _parse_tolerances(items):
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--tol expects name=value, got {item!r}")
        try:
            out[name.strip()] = float(value)
        except ValueError:
            raise ConfigError(f"--tol {name}: not a number: {value!r}") from None
    return out


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)


def cmd_sweep(args):
    config = build_config(args)
    _emit(sweep_csv(config, pe_offset=args.pe_offset), config.out)
    return EXIT_OK


def cmd_figure(args):
    _emit(figure_csv(args.fig_id, args.resolution, args.out, args.route, args.workers), args.out)
    return EXIT_OK


def cmd_verify(args):
    try:
        results = run_checks(_parse_tolerances(args.tol), pe_offset=args.pe_offset,
                             codes=parse_list(args.code, _code) if args.code else (1, 3, 5))
    except KeyError as exc:
        raise ConfigError(exc.args[0]) from None
    print(format_report(results))
    return EXIT_FAILED if any(r.failed for r in results) else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="catdamp", description="Cat-state qubits through photon loss, with repetition codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate a parameter grid and write CSV")
    sweep.add_argument("--config", help="file of 'key = value' lines; flags override it")
    sweep.add_argument("--alpha-min")
    sweep.add_argument("--alpha-max")
    sweep.add_argument("--alpha-steps")
    sweep.add_argument("--eta", help="comma-separated transmissivities")
    sweep.add_argument("--theta", help="comma-separated phases, 'pi' allowed")
    sweep.add_argument("--w", help="comma-separated weights")
    sweep.add_argument("--code", help="comma-separated odd repetition counts")
    sweep.add_argument("--route", help=f"comma-separated subset of {','.join(ROUTES)}")
    sweep.add_argument("--out", help="output path (default: stdout)")
    sweep.add_argument("--workers")
    sweep.add_argument("--pe-offset", type=float, default=0.0, help=argparse.SUPPRESS)
    sweep.set_defaults(func=cmd_sweep)

    fig = sub.add_parser("figure", help="write the data behind one figure")
    fig.add_argument("fig_id", type=int, choices=range(1, 6), metavar="{1,2,3,4,5}")
    fig.add_argument("--resolution", type=int, default=61)
    fig.add_argument("--route", default="evolution", choices=("evolution", "general"))
    fig.add_argument("--out")
    fig.add_argument("--workers", type=int, default=1)
    fig.set_defaults(func=cmd_figure)

    ver = sub.add_parser("verify", help="run all cross-checks")
    ver.add_argument("--tol", action="append", metavar="NAME=VALUE",
                     help="override a check tolerance (repeatable)")
    ver.add_argument("--code", help="codes for the route checks (default 1,3,5)")
    ver.add_argument("--pe-offset", type=float, default=0.0,
                     help="add this to P_e on the factorised route (fault injection)")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
