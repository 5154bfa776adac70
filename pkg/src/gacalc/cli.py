"""Command line interface: repl, eval, run, and draw subcommands.

Exit codes: 0 success, 1 evaluation error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blades import EUCLIDEAN, Signature
from .errors import EvalError, GaError, LexError, ParseError, SourceError
from .exporters import export_obj, export_svg
from .multivector import Multivector
from .scene import scene_from_multivector
from .session import Ack, Session, format_value, value_record


def _signature_arg(text: str) -> Signature:
    if text in ("euclid", "euclidean"):
        return EUCLIDEAN
    if text.isdigit():
        return Signature(int(text))
    raise argparse.ArgumentTypeError(
        f"bad signature {text!r}: expected a non-negative integer or 'euclid'")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gacalc",
        description="Geometric algebra calculator over exact rationals")
    sub = parser.add_subparsers(dest="command", required=True)

    repl = sub.add_parser("repl", help="interactive session")
    _session_flags(repl)

    evaluate = sub.add_parser("eval", help="evaluate ;-separated statements")
    evaluate.add_argument("-e", "--statements", required=True, metavar="STMTS")
    evaluate.add_argument("--json", action="store_true",
                          help="print results as serialization records")
    _session_flags(evaluate)

    run = sub.add_parser("run", help="evaluate a file, one statement per line")
    run.add_argument("path")
    run.add_argument("--json", action="store_true")
    _session_flags(run)

    draw = sub.add_parser("draw", help="render an expression to .obj or .svg")
    draw.add_argument("expression")
    draw.add_argument("-o", "--output", required=True)
    draw.add_argument("--axes", action="store_true", help="include an axis triad")
    _session_flags(draw)
    return parser


def _session_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sig", type=_signature_arg, default=EUCLIDEAN,
                        metavar="P|euclid", help="metric signature threshold")
    parser.add_argument("--dim", type=int, default=None,
                        help="default dimension for dual()")


def _make_session(args) -> Session:
    session = Session(signature=args.sig)
    if args.dim is not None:
        session.default_dim = args.dim
    return session


def _report(err: SourceError) -> None:
    print(f"error: {err}", file=sys.stderr)
    for line in err.caret_lines():
        print(line, file=sys.stderr)


def _print_result(result, session: Session, as_json: bool) -> None:
    if result is None or isinstance(result, Ack):
        return
    if as_json:
        print(json.dumps(value_record(result, session)))
    else:
        print(format_value(result))


def _cmd_eval(args) -> int:
    session = _make_session(args)
    for statement in args.statements.split(";"):
        try:
            result = session.eval(statement)
        except (LexError, ParseError) as err:
            _report(err)
            return 2
        except (EvalError, GaError) as err:
            if isinstance(err, SourceError):
                _report(err)
            else:
                print(f"error: {err}", file=sys.stderr)
            return 1
        _print_result(result, session, args.json)
    return 0


def _cmd_run(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    session = _make_session(args)
    parse_failed = eval_failed = False
    for number, line in enumerate(lines, start=1):
        try:
            result = session.eval(line)
        except (LexError, ParseError) as err:
            print(f"line {number}: error: {err}", file=sys.stderr)
            parse_failed = True
            continue
        except (EvalError, GaError) as err:
            print(f"line {number}: error: {err}", file=sys.stderr)
            eval_failed = True
            continue
        _print_result(result, session, args.json)
    if parse_failed:
        return 2
    if eval_failed:
        return 1
    return 0


def _cmd_repl(args) -> int:
    session = _make_session(args)
    print("gacalc: geometric algebra calculator. :sig p | :sig euclid, "
          ":dim n, :mode rational|float, :quit to leave.")
    while True:
        try:
            line = input("ga> ")
        except EOFError:
            print()
            return 0
        except KeyboardInterrupt:
            print()
            continue
        if line.strip() in (":quit", ":q"):
            return 0
        try:
            result = session.eval(line)
        except SourceError as err:
            _report(err)
            continue
        except GaError as err:
            print(f"error: {err}", file=sys.stderr)
            continue
        text = format_value(result)
        if text:
            print(text)


def _cmd_draw(args) -> int:
    from .parser import parse_expression
    from .session import eval_statement

    session = _make_session(args)
    if not (args.output.endswith(".obj") or args.output.endswith(".svg")):
        print("error: output must end in .obj or .svg", file=sys.stderr)
        return 2
    try:
        node = parse_expression(args.expression)
    except (LexError, ParseError) as err:
        _report(err)
        return 2
    try:
        value = eval_statement(node, session, args.expression)
        if not isinstance(value, Multivector):
            value = Multivector.scalar(value, session.signature)
        scene = scene_from_multivector(value)
        scene.show_axes = args.axes
        if args.output.endswith(".obj"):
            export_obj(scene, args.output)
        else:
            export_svg(scene, args.output)
    except (EvalError, GaError) as err:
        if isinstance(err, SourceError):
            _report(err)
        else:
            print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {"repl": _cmd_repl, "eval": _cmd_eval, "run": _cmd_run, "draw": _cmd_draw}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
