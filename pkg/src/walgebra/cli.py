"""Command-line front end.

    walg MODE TYPE RANK (--labels 1,0 | --orbit ~A1) [options]

MODE is one of present, generators-only, onedim-fast.  Writes
report.json and report.txt to the output directory and prints the text
report.  Exit codes: 0 success, 2 invalid input, 3 undecided solver
(a configured budget was exceeded), 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalogue import names_for
from .report import (MODES, UndecidedSolverError, report_json, report_text,
                     run_pipeline)
from .rootsystem import InvalidTypeError
from .sl2grading import InvalidLabelsError

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_UNDECIDED = 3
EXIT_INTERNAL = 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="walg",
        description="Explicit presentations and one-dimensional "
                    "representations of finite W-algebras.")
    p.add_argument("mode", choices=MODES)
    p.add_argument("type", help="simple type letter A-G")
    p.add_argument("rank", type=int)
    p.add_argument("--labels",
                   help="weighted Dynkin diagram, comma-separated 0/1/2 "
                        "in Bourbaki simple-root order, e.g. 1,0")
    p.add_argument("--orbit",
                   help="named orbit from the bundled catalogue, e.g. ~A1")
    p.add_argument("--out", type=Path, default=None,
                   help="directory for report.json / report.txt")
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for interface stability; the pipeline "
                        "is currently sequential")
    p.add_argument("--max-candidates", type=int, default=None,
                   help="abort (exit 3) if any generator needs more "
                        "correction monomials than this")
    p.add_argument("--solver-degree-bound", type=int, default=None,
                   help="abort (exit 3) if the representation system "
                        "contains an equation above this total degree")
    return p


def parse_labels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InvalidLabelsError(f"cannot parse labels {text!r}") from None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.threads < 1:
            raise ValueError("--threads must be at least 1")
        labels = parse_labels(args.labels) if args.labels else None
        if labels is None and args.orbit is None:
            raise ValueError("one of --labels or --orbit is required")
        result = run_pipeline(args.type, args.rank, labels=labels,
                              orbit=args.orbit, mode=args.mode,
                              max_candidates=args.max_candidates,
                              solver_degree_bound=args.solver_degree_bound)
    except (InvalidLabelsError, InvalidTypeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except KeyError as exc:
        print(f"invalid input: {exc.args[0]}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except UndecidedSolverError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    text = report_text(result)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "report.json").write_text(report_json(result))
        (args.out / "report.txt").write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
