"""Command line interface emitting JSON documents.

Commands: certify, orbit, homology, compile, verdict, sweep.  Exit codes:
0 on success, 2 on invalid input, 3 when a requested certificate comes back
inconclusive.  Output is deterministic: identical inputs give byte-identical
documents.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .certify import fathi_certificate, hyperbolicity_report, symbolic_orbit
from .homology import mapping_torus_h1, surgered_h1, casson_bleiler_check
from .surgery import SurgerySpec, compile_contact_diagram, tightness_verdict
from .words import (
    FamilyParams,
    SurfaceSpec,
    build_monodromy,
    curve_name,
    parse_curve_name,
    parse_word,
    word_to_text,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_INCONCLUSIVE = 3

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")
_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or a bare integer; normalized to lowest terms, q >= 1."""
    if not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"malformed rational {text!r}; expected 'p/q' or an integer")
    return Fraction(text.strip())


def parse_int_range(text: str) -> range:
    """Parse 'A..B' (inclusive) or a single integer."""
    text = text.strip()
    m = _RANGE_RE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        return range(lo, hi + 1)
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"malformed range {text!r}; expected 'A..B' or an integer") from None
    return range(value, value + 1)


def _emit(document, args) -> None:
    if args.pretty:
        text = json.dumps(document, indent=2)
    else:
        text = json.dumps(document, separators=(",", ":"))
    text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_certify(args) -> int:
    certificate = fathi_certificate(args.g, args.n)
    _emit(certificate.to_json_dict(), args)
    return EXIT_OK if certificate.certified else EXIT_INCONCLUSIVE


def _cmd_orbit(args) -> int:
    surface = SurfaceSpec(args.g)
    if args.word is not None:
        word = parse_word(args.word, surface)
    else:
        from .certify import family_orbit_word

        word = family_orbit_word(args.g, args.n)
    gamma = parse_curve_name(args.gamma)
    surface.validate_curve(gamma)
    max_iters = args.max_iters if args.max_iters is not None else 2 * args.g - 1
    result = symbolic_orbit(word, gamma, max_iters)
    document = {
        "g": args.g,
        "n": args.n,
        "word": word_to_text(word),
        **result.to_json_dict(),
    }
    _emit(document, args)
    return EXIT_OK if result.resolved else EXIT_INCONCLUSIVE


def _cmd_homology(args) -> int:
    params = FamilyParams(args.g, args.m, args.n)
    word = build_monodromy(params)
    document = {
        "g": args.g,
        "m": args.m,
        "n": args.n,
        "word": word_to_text(word),
        "mapping_torus": mapping_torus_h1(word).to_json_dict(),
        "r": None,
        "framing": args.framing,
        "surgered": None,
    }
    if args.r is not None:
        slope = parse_rational(args.r)
        document["r"] = str(slope)
        document["surgered"] = surgered_h1(word, slope, framing=args.framing).to_json_dict()
    _emit(document, args)
    return EXIT_OK


def _cmd_compile(args) -> int:
    params = FamilyParams(args.g, args.m, args.n)
    spec = SurgerySpec(params, parse_rational(args.r))
    diagram = compile_contact_diagram(spec)
    _emit(diagram.to_json_dict(), args)
    return EXIT_OK


def _cmd_verdict(args) -> int:
    params = FamilyParams(args.g, args.m, args.n)
    slope = parse_rational(args.r)
    verdict = tightness_verdict(args.g, slope, args.m, args.n)
    document = {
        "g": args.g,
        "m": args.m,
        "n": args.n,
        "r": str(slope),
        "tightness": verdict.to_json_dict(),
        "hyperbolicity": None,
        "hyperbolicity_note": None,
    }
    if args.g >= 2:
        document["hyperbolicity"] = hyperbolicity_report(params, slope).to_json_dict()
    else:
        document["hyperbolicity_note"] = "hyperbolicity reports need genus >= 2"
    _emit(document, args)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    m_range = parse_int_range(args.m)
    n_range = parse_int_range(args.n)
    slopes = []
    for token in args.r_list.split(","):
        token = token.strip()
        if not token:
            raise ValueError("empty slope in --r-list")
        slopes.append(parse_rational(token))
    records = []
    fathi_cache: dict[int, bool] = {}
    for m in sorted(m_range):
        for n in sorted(n_range):
            params = FamilyParams(args.g, m, n)
            word = build_monodromy(params)
            cb = casson_bleiler_check(word)
            if args.g >= 2:
                if n not in fathi_cache:
                    fathi_cache[n] = fathi_certificate(args.g, n).certified
                fathi_ok = fathi_cache[n]
            else:
                fathi_ok = None
            for slope in sorted(slopes):
                verdict = tightness_verdict(args.g, slope, m, n)
                records.append(
                    {
                        "g": args.g,
                        "m": m,
                        "n": n,
                        "r": str(slope),
                        "tightness": verdict.to_json_dict(),
                        "surgered_h1": surgered_h1(word, slope).to_json_dict(),
                        "cb_verdict": cb.value,
                        "fathi_certified": fathi_ok,
                    }
                )
    _emit({"g": args.g, "rows": len(records), "records": records}, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistchain",
        description=(
            "pseudo-Anosov certificates, mapping torus homology, and contact "
            "surgery compilation for twist words on a curve chain"
        ),
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser.add_argument("--output", metavar="PATH", help="write the document to a file")
    sub = parser.add_subparsers(dest="command", required=True)

    certify = sub.add_parser("certify", help="filling-orbit certificate for a (g, n) family")
    certify.add_argument("--g", type=int, required=True)
    certify.add_argument("--n", type=int, required=True)
    certify.set_defaults(func=_cmd_certify)

    orbit = sub.add_parser("orbit", help="symbolic orbit of a chain curve under a word")
    orbit.add_argument("--g", type=int, required=True)
    orbit.add_argument("--n", type=int, default=1)
    orbit.add_argument("--word", help="custom twist word, e.g. 'a1 a2 a3^-1'")
    orbit.add_argument("--gamma", default=curve_name(1), help="starting curve (default a1)")
    orbit.add_argument("--max-iters", type=int, dest="max_iters")
    orbit.set_defaults(func=_cmd_orbit)

    homology = sub.add_parser("homology", help="H_1 of the mapping torus and its surgeries")
    homology.add_argument("--g", type=int, required=True)
    homology.add_argument("--m", type=int, required=True)
    homology.add_argument("--n", type=int, required=True)
    homology.add_argument("--r", help="surgery slope 'p/q'")
    homology.add_argument("--framing", default="page")
    homology.set_defaults(func=_cmd_homology)

    compile_cmd = sub.add_parser("compile", help="compile a rational contact surgery")
    compile_cmd.add_argument("--g", type=int, required=True)
    compile_cmd.add_argument("--m", type=int, required=True)
    compile_cmd.add_argument("--n", type=int, required=True)
    compile_cmd.add_argument("--r", required=True)
    compile_cmd.set_defaults(func=_cmd_compile)

    verdict = sub.add_parser("verdict", help="tightness and hyperbolicity summary")
    verdict.add_argument("--g", type=int, required=True)
    verdict.add_argument("--m", type=int, required=True)
    verdict.add_argument("--n", type=int, required=True)
    verdict.add_argument("--r", required=True)
    verdict.set_defaults(func=_cmd_verdict)

    sweep = sub.add_parser("sweep", help="evaluate a parameter grid, sorted by (m, n, r)")
    sweep.add_argument("--g", type=int, required=True)
    sweep.add_argument("--m", required=True, help="range 'A..B' or a single integer")
    sweep.add_argument("--n", required=True, help="range 'A..B' or a single integer")
    sweep.add_argument("--r-list", dest="r_list", required=True, help="comma separated slopes")
    sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
