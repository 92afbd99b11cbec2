"""Command-line entry point: ``qsc verify | probe-sharpness | list-params``."""

from __future__ import annotations

import argparse
import configparser
import json
import sys

from .congruence import ParameterError
from .runner import (
    EXIT_CONFIG,
    EXIT_OK,
    SUITES,
    ConfigError,
    SweepConfig,
    default_jobs,
    run,
    sharpness_probe,
)
from .theorems import FAMILIES, enumerate_valid_params


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ConfigError(f"expected a list of integers, got {text!r}") from None


def _suite_list(text: str) -> tuple[str, ...]:
    items = [x for x in text.replace(",", " ").split() if x]
    if items == ["all"]:
        return SUITES
    return tuple(items)


def _opt_int(text):
    if text is None or str(text).strip().lower() in ("", "none", "default"):
        return None
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"expected an integer, got {text!r}") from None


def load_config_file(path: str) -> dict:
    """INI file: a [verify] section with the flag names, plus an optional [precision] section."""
    parser = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from None
    out: dict = {}
    if parser.has_section("verify"):
        sec = parser["verify"]
        for key in sec:
            norm = key.replace("-", "_")
            value = sec[key]
            if norm == "suite":
                out["families"] = _suite_list(value)
            elif norm in ("n_max", "d_max", "jobs"):
                out[norm] = _opt_int(value)
            elif norm == "r_window":
                out["r_window"] = _opt_int(value)
            elif norm == "primes":
                out["primes"] = _int_list(value)
            elif norm == "out":
                out["output"] = value
            else:
                raise ConfigError(f"unknown key {key!r} in [verify]")
    if parser.has_section("precision"):
        out["precision"] = {k: _opt_int(v) for k, v in parser["precision"].items()}
    extra = [s for s in parser.sections() if s not in ("verify", "precision")]
    if extra:
        raise ConfigError(f"unknown section(s): {', '.join(extra)}")
    return out


def build_config(args) -> SweepConfig:
    values: dict = {"jobs": default_jobs()}
    if args.config:
        values.update({k: v for k, v in load_config_file(args.config).items() if v is not None})
    if args.suite is not None:
        values["families"] = _suite_list(",".join(args.suite))
    for name in ("n_max", "d_max", "jobs"):
        if getattr(args, name) is not None:
            values[name] = getattr(args, name)
    if args.r_window is not None:
        values["r_window"] = args.r_window
    if args.primes is not None:
        values["primes"] = _int_list(args.primes)
    if args.out is not None:
        values["output"] = args.out
    return SweepConfig(**values)


def _cmd_verify(args) -> int:
    try:
        cfg = build_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run(cfg)


def _cmd_probe(args) -> int:
    try:
        line = sharpness_probe(args.n, args.d, args.r, args.extra_power, args.family, args.m)
    except ParameterError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(line.to_json())
    return EXIT_OK


def _cmd_list(args) -> int:
    if args.n_max < 1 or args.d_max < 1:
        print("config error: n-max and d-max must be positive", file=sys.stderr)
        return EXIT_CONFIG
    families = FAMILIES if args.family == "all" else (args.family,)
    for family in families:
        for p in enumerate_valid_params(family, args.n_max, args.d_max, args.r_window, n_min=args.n_min):
            print(json.dumps({**p.as_dict(), "K": p.K}))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qsc", description="Exact verifier for unified (C.2)/(G.2) q-supercongruences.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a JSON-lines report")
    v.add_argument("--suite", action="append",
                   help=f"suite(s) to run, comma separated or repeated; one of {', '.join(SUITES)} or 'all'")
    v.add_argument("--n-max", type=int)
    v.add_argument("--d-max", type=int)
    v.add_argument("--r-window", type=int, help="sweep r in [-w, w] (default 2d+1), plus r = n")
    v.add_argument("--primes", help="comma separated odd primes for the classical suite")
    v.add_argument("--out", help="report path (default report.jsonl)")
    v.add_argument("--jobs", type=int, help="worker processes (default: CPU count)")
    v.add_argument("--config", help="INI file with a [verify] section; flags override it")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("probe-sharpness", help="re-check one instance modulo [n]Phi_n^(4+extra)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--extra-power", type=int, default=1)
    s.add_argument("--family", choices=FAMILIES)
    s.add_argument("--m", choices=("short", "long"), default="short")
    s.set_defaults(func=_cmd_probe)

    ls = sub.add_parser("list-params", help="print the valid (n, d, r) tuples")
    ls.add_argument("--family", choices=FAMILIES + ("all",), default="all")
    ls.add_argument("--n-max", type=int, default=21)
    ls.add_argument("--d-max", type=int, default=6)
    ls.add_argument("--r-window", type=int)
    ls.add_argument("--n-min", type=int, default=3)
    ls.set_defaults(func=_cmd_list)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
