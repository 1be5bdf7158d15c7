"""Command-line front end: ``borsuk-lab {borsuk,grade,freegroup}``.

Exit codes: 0 all checks pass, 1 a certificate or check failed, 2 bad config.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import platform
import sys
import time
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from .errors import ConfigurationError, LabError
from .experiments import (BORSUK_DEFAULTS, FREEGROUP_DEFAULTS, GRADE_DEFAULTS, merge_config, run_borsuk,
                          run_freegroup, run_grade)

log = logging.getLogger("borsuk_lab")

SUBCOMMANDS = {
    "borsuk": (BORSUK_DEFAULTS, run_borsuk, ["seed", "iteration", "residual"]),
    "grade": (GRADE_DEFAULTS, run_grade, ["seed", "component", "power", "signed_distance"]),
    "freegroup": (FREEGROUP_DEFAULTS, run_freegroup, ["element", "R", "lower", "upper"]),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="borsuk-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", type=Path, help="JSON config document")
        p.add_argument("--out", type=Path, help="report path (JSON); CSV written next to it")
        p.add_argument("--seed", type=int, help="override the base seed (drops an explicit seed list)")
        p.add_argument("--set", action="append", default=[], metavar="KEY=JSON",
                       help="override a top-level config key, value parsed as JSON")
        p.add_argument("--quiet", action="store_true")
    return parser


def load_config(args) -> dict:
    cfg: dict = {}
    if args.config is not None:
        try:
            cfg = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigurationError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(cfg, dict):
            raise ConfigurationError("config must be a JSON object")
    for item in args.set:
        key, sep, raw = item.partition("=")
        if not sep:
            raise ConfigurationError(f"--set expects KEY=JSON, got {item!r}")
        try:
            cfg[key] = json.loads(raw)
        except json.JSONDecodeError:
            cfg[key] = raw
    if args.seed is not None:
        if args.seed < 0:
            raise ConfigurationError("seed must be non-negative")
        cfg["seed"] = args.seed
        cfg.pop("seeds", None)
    return cfg


def write_csv(path: Path, columns: list[str], rows: list[dict]) -> None:
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=columns)
        w.writeheader()
        for r in rows:
            w.writerow(r)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s")
    defaults, runner, columns = SUBCOMMANDS[args.command]
    started = time.perf_counter()
    try:
        cfg = merge_config(defaults, load_config(args))
        out = args.out or (Path(cfg["out"]) if cfg.get("out") else None)
        cfg.pop("out", None)
        payload, rows, ok = runner(cfg)
    except (ConfigurationError, LabError, ValueError, KeyError, TypeError) as exc:
        log.error("configuration error: %s", exc)
        return 2

    report = {
        "config": cfg,
        "results": payload,
        "meta": {
            "versions": {"borsuk_lab": __version__, "python": platform.python_version(),
                         "numpy": np.__version__, "scipy": scipy.__version__},
            "wall_clock_seconds": round(time.perf_counter() - started, 3),
        },
    }
    text = json.dumps(report, indent=2, sort_keys=True, default=str)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n")
        write_csv(out.with_suffix(".csv"), columns, rows)
        log.info("report written to %s", out)
    elif not args.quiet:
        sys.stdout.write(text + "\n")
    summary = payload.get("summary", {})
    log.info("%s: %s", args.command, "PASS" if ok else "FAIL")
    if not ok:
        log.warning("summary: %s", json.dumps(summary, default=str))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
