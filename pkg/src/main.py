import argparse
import logging
import os
import sys
from typing import List, Optional, Tuple

from .exceptions import SpadjorValidationError, YinSetError
from .operations_manager import OperationsManager
from .ui.svg_renderer import RenderStyle, render
from .utils.logging_config import setup_logging

logger = logging.getLogger(__name__)

BINARY_OPERATIONS = ("meet", "join", "difference", "symdiff")


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError("eps must be positive")
    return value


def _window(values: List[str]) -> Tuple[float, float, float, float]:
    parts = values[0].split(",") if len(values) == 1 else values
    if len(parts) != 4:
        raise ValueError("--window needs four numbers: x0,y0,x1,y1")
    try:
        x0, y0, x1, y1 = (float(v) for v in parts)
    except ValueError:
        raise ValueError(f"Invalid --window {' '.join(values)!r}")
    return x0, y0, x1, y1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=_positive_float, default=None,
                        help="tolerance (overrides the documents' epsilon)")
    common.add_argument("-o", "--output", default=None, help="output file")

    parser = argparse.ArgumentParser(
        prog="yinset",
        description="Boolean operations on Yin sets stored as spadjor files",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complement", parents=[common], help="complement of a set")
    p.add_argument("input")
    for name in BINARY_OPERATIONS:
        p = sub.add_parser(name, parents=[common], help=f"{name} of two sets")
        p.add_argument("first")
        p.add_argument("second")

    p = sub.add_parser("betti", parents=[common], help="print Betti numbers")
    p.add_argument("input")
    p = sub.add_parser("locate", parents=[common], help="classify a point")
    p.add_argument("input")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p = sub.add_parser("validate", parents=[common], help="check a document")
    p.add_argument("input")
    p = sub.add_parser("render", parents=[common], help="draw a set as SVG")
    p.add_argument("input")
    p.add_argument("--window", nargs="+", default=None, metavar="X0,Y0,X1,Y1",
                   help="area to draw, as x0,y0,x1,y1 or four numbers")
    return parser


def run_command(args, manager: OperationsManager) -> int:
    command = args.command
    if command == "complement" or command in BINARY_OPERATIONS:
        paths = [args.input] if command == "complement" else [args.first, args.second]
        operands, tol = manager.load_operands(paths, args.eps)
        result = manager.run(command, *operands, tol=tol)
        if args.output:
            manager.store.save(result, args.output, tol)
        else:
            sys.stdout.write(manager.store.document_for(result, tol).dumps())
        return 0

    if command == "betti":
        print(manager.betti(args.input, args.eps))
        return 0

    if command == "locate":
        print(manager.locate(args.input, args.x, args.y, args.eps).value)
        return 0

    if command == "validate":
        violations = manager.validate_file(args.input, args.eps)
        if not violations:
            print("ok")
            return 0
        for v in violations:
            print(v)
        return 1

    if command == "render":
        if not args.output:
            raise ValueError("render needs -o <file.svg>")
        (j,), _ = manager.load_operands([args.input], args.eps)
        window = _window(args.window) if args.window else None
        render(j, args.output, RenderStyle.from_settings(manager.settings), window)
        return 0

    raise ValueError(f"Unknown command {command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    # the CLI stays quiet unless asked
    level = "INFO" if args.verbose else os.getenv("YINSET_LOG_LEVEL", "WARNING")
    setup_logging(level)
    manager = OperationsManager()
    try:
        return run_command(args, manager)
    except SpadjorValidationError as e:
        logger.error(f"Validation failed: {e}")
        for v in e.violations:
            print(v, file=sys.stderr)
        return 1
    except (YinSetError, OSError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
