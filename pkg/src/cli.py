"""Command line front end.

Exit codes: 0 when every check passes, 1 on a verification failure (including
refusing to evaluate or convert invalid input), 2 on malformed input.
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from .config import config
from .schemas import dump_json, load_json
from .suite import run_suite
from .tools.arguments import window_argument
from .tools.category import CategoryTools
from .tools.diagrams import DiagramTools
from .tools.monoidal import MonoidalTools
from .tools.spectra import SpectraTools
from .tools.topology import TopologyTools
from .utils.errors import (
    CompositionError,
    InvalidDatumError,
    InvalidFunctorError,
    JSpecError,
    ValidationError,
    VerificationError,
    WindowError,
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

INPUT_ERRORS = (ValidationError, WindowError, CompositionError)
VERIFICATION_ERRORS = (InvalidDatumError, InvalidFunctorError, VerificationError)


def read_document(path: str) -> Dict[str, Any]:
    """Load a JSON document from a file, or from stdin for "-"."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e.strerror}", path)
    return load_json(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable JSON output")

    parser = argparse.ArgumentParser(prog="jspec", description="Verify 𝒥-diagrams, T-data and symmetric T-spectra over finite sets.")
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable JSON output")
    commands = parser.add_subparsers(dest="command", required=True)

    hom = commands.add_parser("hom", parents=[common], help="count or list morphisms")
    hom.add_argument("--src", required=True)
    hom.add_argument("--dst", required=True)
    hom.add_argument("--count", action="store_true", help="print only the count")

    compose = commands.add_parser("compose", parents=[common], help="compose g after f (morphism keys)")
    compose.add_argument("g")
    compose.add_argument("f")

    decompose = commands.add_parser("decompose", parents=[common], help="canonical (a, b, p) of a morphism key")
    decompose.add_argument("morphism")

    check = commands.add_parser("check", parents=[common], help="run a validator")
    checks = check.add_subparsers(dest="check", required=True)
    category = checks.add_parser("category", parents=[common])
    category.add_argument("--window")
    category.add_argument("--bound", type=int, default=4)
    for name in ("functor", "tdatum", "roundtrip"):
        checks.add_parser(name, parents=[common]).add_argument("document")
    monoidal = checks.add_parser("monoidal", parents=[common])
    monoidal.add_argument("documents", nargs="*")
    monoidal.add_argument("--window")
    spectrum = checks.add_parser("spectrum", parents=[common])
    spectrum.add_argument("document")
    spectrum.add_argument("--pmax", type=int, default=None)

    convert = commands.add_parser("convert", parents=[common], help="T-datum <-> 𝒥-functor")
    convert.add_argument("document")
    convert.add_argument("--to", required=True, choices=["functor", "tdatum"])

    convolve = commands.add_parser("convolve", parents=[common], help="Day convolution at one object")
    convolve.add_argument("left")
    convolve.add_argument("right")
    convolve.add_argument("--at", required=True)
    convolve.add_argument("--classes", action="store_true")

    prolong = commands.add_parser("prolong", parents=[common], help="apply f^K")
    prolong.add_argument("document")
    prolong.add_argument("--K", required=True)

    pi0 = commands.add_parser("pi0", parents=[common], help="connected components of a window")
    pi0.add_argument("--window")
    pi0.add_argument("--dot", action="store_true")

    gen = commands.add_parser("gen", parents=[common], help="seeded sample data")
    kinds = gen.add_subparsers(dest="kind", required=True)
    random_tdatum = kinds.add_parser("random-tdatum", parents=[common])
    random_tdatum.add_argument("--seed", type=int, default=None)
    random_tdatum.add_argument("--window")

    suite = commands.add_parser("suite", parents=[common], help="the full acceptance suite")
    suite.add_argument("--window")
    suite.add_argument("--seed", type=int, default=None)
    return parser


def _report_text(report: Dict[str, Any]) -> str:
    verdict = "PASS" if report.get("passed") else "FAIL"
    line = f"{report.get('check', 'result')}: {verdict} ({report.get('checked', 0)} instances)"
    if report.get("violations"):
        line += f"\n  first violation: {dump_json(report['violations'][0]).strip()}"
    return line


def _summary_text(result: Dict[str, Any]) -> str:
    return "\n".join(_report_text(report) for report in result["reports"])


async def dispatch(args: argparse.Namespace) -> Dict[str, Any]:
    """Run one command and return its JSON-ready result."""
    if args.command == "hom":
        if args.count:
            return await CategoryTools().count_hom(args.src, args.dst)
        return await CategoryTools().enumerate_hom(args.src, args.dst)
    if args.command == "compose":
        return await CategoryTools().compose(args.g, args.f)
    if args.command == "decompose":
        return await CategoryTools().decompose(args.morphism)
    if args.command == "check":
        if args.check == "category":
            return await CategoryTools().check_category(args.window, args.bound)
        if args.check == "functor":
            return await DiagramTools().check_functor(read_document(args.document))
        if args.check == "tdatum":
            return await DiagramTools().check_tdatum(read_document(args.document))
        if args.check == "roundtrip":
            return await DiagramTools().check_roundtrip(read_document(args.document))
        if args.check == "monoidal":
            if len(args.documents) > 2:
                raise ValidationError("check monoidal takes at most two documents", "documents")
            documents = [read_document(path) for path in args.documents]
            return await MonoidalTools().check_monoidal(*(documents + [None] * (2 - len(documents))), window=args.window)
        return await SpectraTools().check_spectrum(read_document(args.document), args.pmax)
    if args.command == "convert":
        return await DiagramTools().convert(read_document(args.document), args.to)
    if args.command == "convolve":
        return await MonoidalTools().convolve(read_document(args.left), read_document(args.right), args.at, args.classes)
    if args.command == "prolong":
        return await SpectraTools().prolong(read_document(args.document), args.K)
    if args.command == "pi0":
        return await TopologyTools().pi0(args.window, args.dot)
    if args.command == "gen":
        return await DiagramTools().random_tdatum(args.seed, args.window)
    seed = config.SEED if args.seed is None else args.seed
    report = run_suite(window_argument(args.window), seed)
    result = report.dict()
    result["passed"] = report.passed
    return result


def render(args: argparse.Namespace, result: Dict[str, Any]) -> str:
    """Human-readable output; documents are always printed as JSON."""
    if args.json:
        return dump_json(result)
    if args.command == "hom":
        if args.count:
            return f"{result['count']}\n"
        return "".join(f"{f['key']}\n" for f in result["morphisms"])
    if args.command == "compose":
        return f"{result['key']}\n"
    if args.command == "decompose":
        return f"a = {result['a']}  b = {result['b']}  p = {result['p']}\n"
    if args.command == "pi0":
        if args.dot:
            return result["dot"]
        lines = [f"{result['components']} components"]
        for component, members in result["members"].items():
            lines.append(f"  {component}: {' '.join(f'({m},{n})' for m, n in members)}")
        return "\n".join(lines) + "\n"
    if args.command == "convolve":
        return f"|X*Y({result['at'][0]},{result['at'][1]})| = {result['size']}\n"
    if args.command == "check":
        if "reports" in result:
            return _summary_text(result) + "\n"
        return _report_text(result) + "\n"
    if args.command == "suite":
        lines = [f"seed {result['seed']}, window {result['window'][0]},{result['window'][1]}"]
        lines += [_report_text(report) for report in result["reports"]]
        lines.append("PASS" if result["passed"] else "FAIL")
        return "\n".join(lines) + "\n"
    return dump_json(result)


def passed(result: Dict[str, Any]) -> bool:
    return result.get("passed", True) is not False


def run(argv: Optional[List[str]] = None, out: Callable[[str], Any] = None) -> int:
    """Parse a command line, run it, print the output and return the exit code."""
    out = out or sys.stdout.write
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_PASS
    try:
        result = asyncio.run(dispatch(args))
    except INPUT_ERRORS as e:
        out(dump_json({"error": e.to_json_rpc_error()}) if args.json else f"error: {e.message}{_field(e)}\n")
        return EXIT_INPUT
    except VERIFICATION_ERRORS as e:
        out(dump_json({"error": e.to_json_rpc_error()}) if args.json else f"refused: {e.message}\n")
        return EXIT_FAIL
    except JSpecError as e:
        out(dump_json({"error": e.to_json_rpc_error()}) if args.json else f"error: {e.message}\n")
        return EXIT_INPUT
    out(render(args, result))
    return EXIT_PASS if passed(result) else EXIT_FAIL


def _field(e: JSpecError) -> str:
    field = (e.data or {}).get("field")
    return f" (at {field})" if field else ""


def main() -> None:
    logging.basicConfig(
        level=logging.INFO if not config.DEBUG else logging.DEBUG,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    sys.exit(run())


if __name__ == "__main__":
    main()
