from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime
from pathlib import Path

from .catalog.elements import value
from .catalog.identities import run_identities
from .catalog.morphisms import get_morphism, morphism_names
from .catalog.subalgebra import subalgebra_express
from .catalog.suite_file import load_suite_file
from .catalog.suites import run_suite, suite_names
from .config import FORMATS, MIN_PRECISION, AppConfig, load_config
from .errors import AlgebraError, ConfigError, ParseError, RegistryError
from .maps.conjugation import build_z, normalize_to_standard_form
from .maps.morphism import apply
from .parsing.expr_parser import CONTEXT_TAGS, evaluate_text, render_value
from .rings.skew_laurent import TAG_FG, SkewLaurentPoly, variables
from .utils.logging_utils import abbreviate, build_logger
from .utils.reports import all_passed, render_json, render_text, save_report

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _precision(text: str) -> int:
    number = int(text)
    if number < MIN_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be >= {MIN_PRECISION}")
    return number


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=_precision, default=None, help="series precision (default QDR_PREC or 12)")
    common.add_argument("--format", choices=FORMATS, default=None, help="report format")
    common.add_argument("--log-file", type=Path, default=None, help="write the run log here")

    parser = argparse.ArgumentParser(prog="qdivring", description="Exact computations in the q-division ring k_q(x,y).")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="run an identity suite")
    verify.add_argument("suite_name", nargs="?", default=None, metavar="SUITE")
    verify.add_argument("--suite", dest="suite_flag", default=None, help=f"one of {', '.join(suite_names())}")
    verify.add_argument("--suite-file", type=Path, default=None, help="identities as 'name, context, lhs, rhs, mode'")

    evaluate = commands.add_parser("eval", parents=[common], help="evaluate an expression")
    evaluate.add_argument("expression")
    evaluate.add_argument("--context", choices=tuple(CONTEXT_TAGS), default="xy")

    apply_cmd = commands.add_parser("apply", parents=[common], help="apply a registered morphism")
    apply_cmd.add_argument("morphism", help=f"one of {', '.join(morphism_names())}")
    apply_cmd.add_argument("expression")

    z_coeffs = commands.add_parser("z-coeffs", parents=[common], help="coefficients z_0..z_N of the conjugator")
    z_coeffs.add_argument("morphism")
    z_coeffs.add_argument("n", type=int, metavar="N")

    express = commands.add_parser("express", parents=[common], help="write an element through generators")
    express.add_argument("target")
    express.add_argument("--gens", required=True, help="generator expressions separated by ';'")
    express.add_argument("--max-len", type=int, default=None)
    express.add_argument("--context", choices=tuple(CONTEXT_TAGS), default="xy")
    return parser


def _resolve(name: str, precision: int):
    return value(name, precision)


def _emit(document: dict, text: str, output_format: str) -> None:
    print(json.dumps(document, indent=2, ensure_ascii=False) if output_format == "json" else text)


def _cmd_verify(args, config: AppConfig, precision: int, output_format: str, logger, run_dir) -> int:
    if args.suite_file is not None:
        identities = load_suite_file(args.suite_file)
        label = args.suite_file.stem
        reports = run_identities(identities, precision, logger)
    else:
        label = args.suite_flag or args.suite_name or "all"
        reports = run_suite(label, precision, logger)

    if output_format == "json":
        output = render_json(label, precision, reports)
    else:
        output = render_text(label, precision, reports, config.show_notes)
    print(output)
    if run_dir is not None:
        path = save_report(run_dir, f"verify_{label}", output, "json" if output_format == "json" else "txt")
        logger.info("Report saved to %s", path)
    return EXIT_OK if all_passed(reports) else EXIT_FAILURE


def _cmd_eval(args, precision: int, output_format: str, logger) -> int:
    result = evaluate_text(args.expression, args.context, precision, _resolve)
    logger.info("eval %s", abbreviate(args.expression))
    rendered = render_value(result)
    document = {
        "expression": args.expression,
        "context": args.context,
        "exact": isinstance(result, SkewLaurentPoly),
        "value": rendered,
    }
    _emit(document, rendered, output_format)
    return EXIT_OK


def _cmd_apply(args, precision: int, output_format: str, logger) -> int:
    morphism = get_morphism(args.morphism, precision)
    context = "fg" if morphism.source_tag == TAG_FG else "xy"
    element = evaluate_text(args.expression, context, precision, _resolve)
    result = apply(morphism, element, precision)
    logger.info("apply %s to %s", morphism.name, abbreviate(args.expression))
    rendered = render_value(result)
    document = {
        "morphism": morphism.name,
        "expression": args.expression,
        "exact": isinstance(result, SkewLaurentPoly),
        "value": rendered,
    }
    _emit(document, rendered, output_format)
    return EXIT_OK


def _cmd_z_coeffs(args, precision: int, output_format: str, logger) -> int:
    if args.n < 0:
        raise AlgebraError("N must be non-negative")
    working = max(precision, args.n + 1)
    morphism = get_morphism(args.morphism, working)
    sf, corrections = normalize_to_standard_form(morphism.image_x, morphism.image_y, working)
    conjugator = build_z(sf, args.n + 1, logger)
    _, y_name = variables(sf.tag)
    lines = [f"{morphism.name}: s = {sf.s}"]
    lines += [f"correction: {m.name}" for m in corrections]
    lines += [f"z_{n} = {coeff.render(y_name)}" for n, coeff in enumerate(conjugator.coefficients)]
    document = {
        "morphism": morphism.name,
        "s": sf.s,
        "corrections": [m.name for m in corrections],
        "z": [coeff.render(y_name) for coeff in conjugator.coefficients],
    }
    _emit(document, "\n".join(lines), output_format)
    return EXIT_OK


def _cmd_express(args, config: AppConfig, precision: int, output_format: str, logger) -> int:
    target = evaluate_text(args.target, args.context, precision, _resolve)
    sources = [text.strip() for text in args.gens.split(";") if text.strip()]
    generators = [evaluate_text(text, args.context, precision, _resolve) for text in sources]
    for text, element in [(args.target, target), *zip(sources, generators)]:
        if not isinstance(element, SkewLaurentPoly):
            raise AlgebraError(f"'{text}' is not an exact polynomial")
    max_len = args.max_len if args.max_len is not None else config.max_word_length
    result = subalgebra_express(target, generators, max_len, sources, logger)
    rendered = result.render()
    document = {"target": args.target, "generators": sources, "found": bool(result), "result": rendered}
    _emit(document, rendered, output_format)
    return EXIT_OK if result else EXIT_FAILURE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = load_config()
    except ConfigError as exc:
        print(f"Config error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    run_id = datetime.now().strftime("%Y%m%d_%H%M%S")
    run_dir = None
    log_file = args.log_file
    if log_file is None and config.log_dir is not None:
        run_dir = config.log_dir / run_id
        log_file = run_dir / "run.log"
    elif log_file is not None:
        run_dir = log_file.parent
    logger = build_logger(log_file, config.log_level)

    precision = args.prec if args.prec is not None else config.precision
    output_format = args.format or config.output_format
    logger.info("Starting %s run_id=%s precision=%d", args.command, run_id, precision)

    try:
        if args.command == "verify":
            return _cmd_verify(args, config, precision, output_format, logger, run_dir)
        if args.command == "eval":
            return _cmd_eval(args, precision, output_format, logger)
        if args.command == "apply":
            return _cmd_apply(args, precision, output_format, logger)
        if args.command == "z-coeffs":
            return _cmd_z_coeffs(args, precision, output_format, logger)
        return _cmd_express(args, config, precision, output_format, logger)
    except RegistryError as exc:
        logger.error("%s", exc)
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as exc:
        if args.command == "verify":
            logger.error("Suite file rejected: %s", exc)
            print(f"Error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        logger.error("Evaluation failed: %s", exc)
        print(f"FAILED\nReason: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except AlgebraError as exc:
        logger.error("Evaluation failed: %s", exc)
        print(f"FAILED\nReason: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as exc:
        logger.exception("Unexpected failure: %s", exc)
        print(f"FAILED\nReason: unexpected error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
