"""Command-line front end.

Subcommands: generate, verify, betti, check-identity, export,
replay-tietze.  Exit status is 0 on pass, 1 on a verification failure,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from .abelianization import betti as compute_betti
from .ambient import AmbientWord, are_equal
from .corpus import claim_images
from .presentations import Variant, VariantRankMismatch, build_presentation
from .report import default_jobs, run_verification
from .tietze import TietzeError, replay, simplification_script
from .wordio import (
    FORMATTERS,
    ParseError,
    parse_word,
    presentation_from_json,
    script_from_json,
    script_to_json,
)
from .words import substitute

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _add_common(p: argparse.ArgumentParser, rank_required: bool = True):
    p.add_argument("-r", "--rank", "--r", type=int, required=rank_required)
    p.add_argument("--variant", choices=[v.value for v in Variant])
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: all cpus)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write to file instead of stdout")


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _variant(args) -> Variant:
    if not args.variant:
        raise VariantRankMismatch("--variant is required")
    return Variant(args.variant)


def cmd_generate(args) -> int:
    p = build_presentation(args.rank, _variant(args))
    _emit(FORMATTERS[args.format](p), args.output)
    return 0


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    report = run_verification(args.rank, _variant(args), jobs=jobs, seed=args.seed,
                              mutate=args.mutate)
    _emit(report.render(verbose=args.verbose), args.output)
    return 0 if report.passed() else VERIFY_ERROR


def cmd_betti(args) -> int:
    p = build_presentation(args.rank, _variant(args))
    _emit(f"{compute_betti(p)}\n", args.output)
    return 0


def cmd_check_identity(args) -> int:
    images = claim_images(args.rank)
    lhs = AmbientWord(substitute(parse_word(args.lhs), images), args.rank)
    rhs = AmbientWord(substitute(parse_word(args.rhs), images), args.rank)
    equal = are_equal(lhs, rhs)
    _emit("EQUAL\n" if equal else "NOT-EQUAL\n", args.output)
    return 0 if equal else VERIFY_ERROR


def cmd_export(args) -> int:
    with open(args.input) as fh:
        p = presentation_from_json(fh.read())
    _emit(FORMATTERS[args.format](p), args.output)
    return 0


def cmd_replay_tietze(args) -> int:
    if args.script:
        with open(args.script) as fh:
            script = script_from_json(fh.read())
    else:
        script = simplification_script(args.rank)
    if args.save_script:
        with open(args.save_script, "w") as fh:
            fh.write(script_to_json(script))
    final, log = replay(script)
    lines = [f"replayed {len(script.moves)} moves from {script.start_variant.value} "
             f"at rank {script.rank}"]
    if args.verbose:
        lines += [f"  {entry}" for entry in log]
    lines.append(f"final presentation: {len(final.generators)} generators, "
                 f"{len(final.relators)} relators")
    if script.expect_variant:
        lines.append(f"matches {script.expect_variant.value}: yes")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfkernel",
        description="Generate and verify presentations of the torus-map kernel "
                    "in a product of genus-2 surface groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a presentation")
    _add_common(p)
    p.add_argument("--format", choices=sorted(FORMATTERS), default="text")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the full verification suite")
    _add_common(p)
    p.add_argument("--mutate", type=int, default=100,
                   help="number of single-letter mutation trials")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("betti", help="first Betti number of a presentation")
    _add_common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("check-identity", help="decide equality of two words in the product")
    _add_common(p)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_check_identity)

    p = sub.add_parser("export", help="convert a presentation JSON file")
    _add_common(p, rank_required=False)
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=sorted(FORMATTERS), default="gap")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("replay-tietze", help="replay a Tietze script with checks")
    _add_common(p, rank_required=False)
    p.add_argument("--script", help="script JSON (default: built-in simplification)")
    p.add_argument("--save-script", help="write the script JSON before replaying")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_replay_tietze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "replay-tietze" and not args.script and args.rank is None:
        parser.error("replay-tietze needs --rank or --script")
    try:
        return args.func(args)
    except (VariantRankMismatch, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except TietzeError as exc:
        print(f"replay failed: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
