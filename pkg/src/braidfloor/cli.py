"""Command-line surface.

Words are quoted strings in the shared syntax (signed integers separated by
spaces or commas); the strand count is always passed with ``--strands``.
Certificates go to ``--out`` or stdout; diagnostics and filter reasons go to
stderr.  Exit codes: 0 success, 1 usage error, 2 verification failure,
3 rewrite budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import IO, Sequence

from .certificates import CertificateError, read_certificates, write_certificates
from .classify import classify_closure, is_periodic
from .floors import dehornoy_floor
from .foliation import FoliationType, ValenceProfile, admissible_foliations, euler_identity_holds
from .generate import generate_family, generate_random
from .ordering import ReductionLimitError, compare, handle_reduce
from .words import parse_word


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _cmd_compare(args) -> int:
    a = parse_word(args.word_a, args.strands)
    b = parse_word(args.word_b, args.strands)
    print(compare(a, b).value)
    return 0


def _cmd_reduce(args) -> int:
    word = parse_word(args.word, args.strands)
    print(handle_reduce(word).to_text())
    return 0


def _cmd_floor(args) -> int:
    result = dehornoy_floor(parse_word(args.word, args.strands))
    print(result.value)
    if args.witness:
        print(
            f"lower={result.lower_witness.value}"
            f" upper={result.upper_witness.value}"
            f" failed_below={result.failed_below or 'none'}"
        )
    return 0


def _cmd_periodic(args) -> int:
    result = is_periodic(parse_word(args.word, args.strands))
    if result.periodic:
        print(f"periodic p={result.power} s={result.central_power}")
    else:
        print("aperiodic")
    return 0


def _cmd_classify(args) -> int:
    word = parse_word(args.word, args.strands)
    verdict = classify_closure(word)
    floor = verdict.floor_used
    if floor is None:
        floor = dehornoy_floor(word).value
    print(f"{verdict.kind.value} floor={floor}")
    return 0


def _cmd_foliation_bound(args) -> int:
    admissible = admissible_foliations(args.floor, args.genus)
    ordered = [t.value for t in (FoliationType.TILED, FoliationType.MIXED, FoliationType.CIRCULAR) if t in admissible]
    print(",".join(ordered))
    return 0


def _parse_valences(text: str) -> dict[int, int]:
    counts: dict[int, int] = {}
    for item in filter(None, (piece.strip() for piece in text.split(","))):
        valence_text, sep, count_text = item.partition(":")
        if not sep:
            raise ValueError(f"malformed valence entry {item!r}, expected v:count")
        try:
            valence, count = int(valence_text), int(count_text)
        except ValueError:
            raise ValueError(f"malformed valence entry {item!r}") from None
        if valence in counts:
            raise ValueError(f"duplicate valence {valence}")
        counts[valence] = count
    return counts


def _cmd_euler_check(args) -> int:
    profile = ValenceProfile(_parse_valences(args.valences), args.genus)
    print("holds" if euler_identity_holds(profile) else "fails")
    return 0


def _write_output(certificates, out: str | None) -> int:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as stream:
            written = write_certificates(certificates, stream)
    else:
        written = write_certificates(certificates, sys.stdout)
    logging.getLogger(__name__).info("%d certificate(s) written", written)
    return 0


def _cmd_generate_family(args) -> int:
    seed = parse_word(args.seed_word, args.strands)
    return _write_output(generate_family(seed, args.k_min, args.k_max), args.out)


def _cmd_generate_random(args) -> int:
    certificates = generate_random(
        args.strands, args.length, args.count, args.rng_seed, min_floor=args.min_floor
    )
    return _write_output(certificates, args.out)


def _cmd_verify(args) -> int:
    try:
        with open(args.infile, encoding="utf-8") as stream:
            certificates = read_certificates(stream, verify=True)
    except CertificateError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    print(f"verified {len(certificates)} certificate(s)")
    return 0


def _add_word_command(subparsers, name: str, handler, help_text: str, words: Sequence[str]):
    sub = subparsers.add_parser(name, help=help_text)
    for word in words:
        sub.add_argument(word)
    sub.add_argument("--strands", type=int, required=True, help="strand count n")
    sub.set_defaults(handler=handler)
    return sub


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="braidfloor", description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    _add_word_command(subparsers, "compare", _cmd_compare, "Dehornoy-order comparison (LT|EQ|GT)", ["word_a", "word_b"])
    _add_word_command(subparsers, "reduce", _cmd_reduce, "print an equal handle-free word", ["word"])
    floor_cmd = _add_word_command(subparsers, "floor", _cmd_floor, "print the Dehornoy floor", ["word"])
    floor_cmd.add_argument("--witness", action="store_true", help="also print the bracketing verdicts")
    _add_word_command(subparsers, "periodic", _cmd_periodic, "decide periodicity", ["word"])
    _add_word_command(subparsers, "classify", _cmd_classify, "classify the closure's geometry", ["word"])

    foliation = subparsers.add_parser("foliation-bound", help="admissible foliation types for a floor and genus")
    foliation.add_argument("--floor", type=int, required=True)
    foliation.add_argument("--genus", type=int, required=True)
    foliation.set_defaults(handler=_cmd_foliation_bound)

    euler = subparsers.add_parser("euler-check", help="check the tiling Euler identity for a valence census")
    euler.add_argument("--genus", type=int, required=True)
    euler.add_argument("--valences", required=True, help='comma-separated "valence:count" pairs')
    euler.set_defaults(handler=_cmd_euler_check)

    generate = subparsers.add_parser("generate", help="emit knot certificates")
    modes = generate.add_subparsers(dest="mode", required=True)

    family = modes.add_parser("family", help="sweep central twists of a seed word")
    family.add_argument("--strands", type=int, required=True)
    family.add_argument("--seed-word", required=True)
    family.add_argument("--k-min", type=int, required=True)
    family.add_argument("--k-max", type=int, required=True)
    family.add_argument("--out", help="output file (default stdout)")
    family.set_defaults(handler=_cmd_generate_family)

    rand = modes.add_parser("random", help="deterministic random sampling at prime strand count")
    rand.add_argument("--strands", type=int, required=True)
    rand.add_argument("--length", type=int, required=True)
    rand.add_argument("--count", type=int, required=True)
    rand.add_argument("--rng-seed", type=int, required=True)
    rand.add_argument("--min-floor", type=int, default=3)
    rand.add_argument("--out", help="output file (default stdout)")
    rand.set_defaults(handler=_cmd_generate_random)

    verify = subparsers.add_parser("verify", help="recheck a certificate file from scratch")
    verify.add_argument("--in", dest="infile", required=True)
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except ReductionLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
