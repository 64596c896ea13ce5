"""Command-line entry point: run the whole analysis from one config file."""

from __future__ import annotations

import argparse
import logging
import sys

from . import __version__
from .config import STAGES, MissingTextError, load_run_config
from .errors import ResourceFormatError
from .pipeline import run_analysis


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="analyze",
        description="Tokenize a text, build frequency dictionaries, compute "
                    "corpus indices and fit rank/length distribution models.",
    )
    parser.add_argument("--config", required=True, help="run configuration file")
    parser.add_argument("--out", help="output directory (overrides the config)")
    parser.add_argument(
        "--only",
        help="comma-separated stages to emit: " + ",".join(STAGES),
    )
    parser.add_argument("--basis", choices=("types", "tokens"),
                        help="length-distribution basis (overrides the config)")
    parser.add_argument("--threshold", type=int,
                        help="concentration-index frequency threshold")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="analyze: %(message)s")
    args = build_parser().parse_args(argv)

    only = None
    if args.only is not None:
        only = tuple(s.strip() for s in args.only.split(",") if s.strip())
        unknown = [s for s in only if s not in STAGES]
        if unknown:
            print(f"analyze: unknown stage(s): {', '.join(unknown)}", file=sys.stderr)
            return 2

    try:
        cfg = load_run_config(args.config)
    except MissingTextError as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 2
    except ResourceFormatError as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 3

    cfg = cfg.with_overrides(
        out=args.out, only=only, basis=args.basis, threshold=args.threshold
    )
    return run_analysis(cfg)


if __name__ == "__main__":
    sys.exit(main())
