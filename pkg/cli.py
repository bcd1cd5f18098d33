import logging.config
import sys
from argparse import ArgumentParser, ArgumentTypeError
from pathlib import Path

import config
from models.errors import PeiError
from models.report import IdentityReport
from utils import textformat
from workers import *

EXIT_CODES = {"syntax": 2, "io": 2, "dimension": 3, "validation": 3, "precondition": 3, "budget": 4}


def parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(value) for value in text.strip("()").split(","))
    except ValueError:
        raise ArgumentTypeError(f"Invalid point: {text!r}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="pei", description="Exact computations in pei(S) and pet(S) for orthohedral S")
    parser.add_argument("--output", type=Path, default=None, help="write the report to this file")
    verbs = parser.add_subparsers(dest="verb", required=True)

    verb = verbs.add_parser("set-eval", help="rank, height and tidy form of a set, or a Boolean operation")
    verb.add_argument("path", type=Path)
    verb.add_argument("--op", choices=["union", "intersect", "difference", "complement", "equals"], default=None)
    verb.add_argument("--with", dest="other", type=Path, default=None)

    verb = verbs.add_parser("elem-eval", help="flags and support of an element")
    verb.add_argument("path", type=Path)
    verb.add_argument("--point", type=parse_point, default=None)
    verb.add_argument("--power", type=int, default=None)

    verb = verbs.add_parser("invariants", help="rank-k invariants and the matrix of an ordered stabilizer")
    verb.add_argument("path", type=Path)
    verb.add_argument("--k", type=int, required=True)
    verb.add_argument("--orbit-budget", type=int, default=config.ORBIT_BUDGET)

    verb = verbs.add_parser("normal-form", help="pei or pet normal form with its witness")
    verb.add_argument("path", type=Path)
    verb.add_argument("--mode", choices=["pei", "pet"], default="pei")

    verb = verbs.add_parser("factor", help="word of generators for a pei-permutation")
    verb.add_argument("path", type=Path)
    verb.add_argument("--abelianization", dest="k", type=int, default=None)

    verb = verbs.add_parser("verify-identities", help="run the generator identity suite")
    verb.add_argument("--suite", choices=["all", "transpositions", "endotranslations"], default="all")

    verb = verbs.add_parser("flag-homology", help="reduced homology of the flag complex of a coloured graph")
    verb.add_argument("path", type=Path)
    verb.add_argument("--simplex-cap", type=int, default=config.SIMPLEX_CAP)

    verb = verbs.add_parser("fl-bounds", help="finiteness-length bounds for pei(S) or pet(S)")
    verb.add_argument("path", type=Path)
    verb.add_argument("--group", choices=["pei", "pet"], required=True)

    verb = verbs.add_parser("selftest", help="identity suite, flow checks and homology goldens")
    verb.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    verb.add_argument("--samples", type=int, default=config.SELFTEST_SAMPLES)
    return parser


def dispatch(args):
    match args.verb:
        case "set-eval":
            return set_eval.generate(args.path, args.op, args.other)
        case "elem-eval":
            return elem_eval.generate(args.path, args.point, args.power)
        case "invariants":
            return invariants.generate(args.path, args.k, args.orbit_budget)
        case "normal-form":
            return normal_form.generate(args.path, args.mode)
        case "factor":
            return factor.generate(args.path, args.k)
        case "verify-identities":
            return verify_identities.generate(args.suite)
        case "flag-homology":
            return flag_homology.generate(args.path, args.simplex_cap)
        case "fl-bounds":
            return fl_bounds.generate(args.path, args.group)
        case "selftest":
            return selftest.generate(args.seed, args.samples)
        case _:
            raise TypeError(f"Unsupported type: {args.verb}")


def run(argv: list[str] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = dispatch(args)
    except PeiError as error:
        sys.stdout.write(f"error category={error.Category} message={error}\n")
        return EXIT_CODES.get(error.Category, 3)
    except OSError as error:
        sys.stdout.write(f"error category=io message={error.strerror}: {error.filename}\n")
        return EXIT_CODES["io"]
    text = textformat.dump(result, args.output)
    if args.output is None:
        sys.stdout.write(text)
    if isinstance(result, IdentityReport) and not result.Passed:
        return 1
    return 0


if __name__ == "__main__":
    logging.config.fileConfig(Path(__file__).with_name("logging.ini"))
    logger = logging.getLogger("root")
    sys.exit(run())
