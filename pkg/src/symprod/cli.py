"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Sequence

from symprod.cycleindex import cycle_index_enumerated
from symprod.cyclepoly import format_rational
from symprod.errors import NumericalFailureError, PermutationParseError, SizeLimitError
from symprod.homoracle import DEFAULT_TOLERANCE, quotient_signature_oracle
from symprod.permgroups import (
    DEFAULT_LIMIT,
    PermutationGroup,
    alternating_group,
    cyclic_group,
    enumerate_group,
    parse_permutation,
    symmetric_group,
    wreath_product,
)
from symprod.sigformulas import Surface, sign_sym_prod

log = logging.getLogger("symprod")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class SpecError(ValueError):
    pass


def _split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested inside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise SpecError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _positive_int(text: str, what: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise SpecError(f"{what} must be an integer, got {text!r}") from None
    if n < 1:
        raise SpecError(f"{what} must be at least 1, got {n}")
    return n


def parse_group_spec(text: str, limit: int = DEFAULT_LIMIT) -> PermutationGroup:
    """Build a group from ``S:n``, ``C:n``, ``A:n``, ``wreath(<outer>,<inner>)``
    or ``gens:<degree>:<cycles>[;<cycles>...]``.

    In ``wreath(Q,H)`` the outer group ``Q`` permutes blocks that each carry
    a copy of ``H``; ``wreath(S:2,S:3)`` has order 72 on 6 points.
    """
    text = text.strip()
    if text.startswith("wreath(") and text.endswith(")"):
        args = _split_top_level(text[len("wreath("):-1])
        if len(args) != 2:
            raise SpecError(f"wreath needs two arguments: {text!r}")
        outer_text, inner_text = args
        inner = parse_group_spec(inner_text, limit)
        if outer_text.startswith("S:"):
            return wreath_product(_positive_int(outer_text[2:], "degree"), inner, limit)
        outer = parse_group_spec(outer_text, limit)
        return wreath_product(outer.degree, inner, limit, outer=outer)
    if text.startswith("gens:"):
        _, _, rest = text.partition(":")
        deg_text, sep, cycles_text = rest.partition(":")
        if not sep:
            raise SpecError(f"expected gens:<degree>:<cycles>, got {text!r}")
        degree = _positive_int(deg_text, "degree")
        try:
            gens = [parse_permutation(c, degree) for c in cycles_text.split(";")]
        except (PermutationParseError, ValueError) as exc:
            raise SpecError(str(exc)) from None
        return enumerate_group(gens, limit, degree=degree, name=text)
    family, sep, n_text = text.partition(":")
    builders = {"S": symmetric_group, "C": cyclic_group, "A": alternating_group}
    if not sep or family not in builders:
        raise SpecError(f"unknown group spec {text!r}")
    return builders[family](_positive_int(n_text, "degree"), limit)


def parse_range(text: str) -> range:
    """``a..b`` inclusive, or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        a, b = int(lo), int(hi)
    except ValueError:
        raise SpecError(f"bad range {text!r}; expected a..b") from None
    if a < 0 or b < a:
        raise SpecError(f"bad range {text!r}")
    return range(a, b + 1)


def _surface_arg(text: str) -> Surface:
    try:
        return Surface.parse(text)
    except ValueError as exc:
        raise SpecError(str(exc)) from None


def _value_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else format_rational(q)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _surface_json(s: Surface) -> dict:
    return {"kind": s.kind, "genus": s.genus, "punctures": s.punctures}


# commands

def cmd_cycle_index(args) -> tuple[int, str]:
    group = parse_group_spec(args.spec, args.limit)
    z = cycle_index_enumerated(group)
    if args.json:
        return EXIT_OK, dump_json({
            "command": "cycle-index",
            "input": {"group": args.spec, "degree": group.degree, "order": group.order},
            "cycleIndex": z.to_json_terms(),
        })
    return EXIT_OK, z.render()


def cmd_signature(args) -> tuple[int, str]:
    group = parse_group_spec(args.spec, args.limit)
    surface = _surface_arg(args.surface)
    z = cycle_index_enumerated(group)
    value = sign_sym_prod(z, surface)
    if args.json:
        return EXIT_OK, dump_json({
            "command": "signature",
            "input": {"group": args.spec, "surface": _surface_json(surface)},
            "substitution": {"odd": "0/1", "even": format_rational(Fraction(surface.even_cycle_value))},
            "cycleIndex": z.to_json_terms(),
            "value": _value_text(value),
        })
    return EXIT_OK, _value_text(value)


def _table_groups(args) -> tuple[dict, str]:
    if args.family == "sym":
        if args.degree is None:
            raise SpecError("table sym needs --degree")
        return {"degree": args.degree}, f"S:{args.degree}"
    if args.p is None or args.m is None:
        raise SpecError("table wreath needs --p and --m")
    return {"p": args.p, "m": args.m}, f"wreath(S:{args.p},S:{args.m})"


def cmd_table(args) -> tuple[int, str]:
    params, spec = _table_groups(args)
    genera = parse_range(args.table_range)
    z = cycle_index_enumerated(parse_group_spec(spec, args.limit))
    rows = []
    for g in genera:
        surface = Surface.closed(g) if args.surface == "closed" else Surface.punctured(g, 1)
        rows.append((g, surface, sign_sym_prod(z, surface)))
    if args.json:
        return EXIT_OK, dump_json({
            "command": "table",
            "input": {"family": args.family, "group": spec, "surface": args.surface, **params},
            "rows": [{"params": {**params, "genus": g, "surface": str(s)},
                      "signature": _value_text(v)} for g, s, v in rows],
        })
    width = max(len(_value_text(v)) for _, _, v in rows) if rows else 1
    lines = [f"# {spec} on {args.surface} surfaces", f"{'g':>3}  {'sign':>{width}}"]
    lines += [f"{g:>3}  {_value_text(v):>{width}}" for g, _, v in rows]
    return EXIT_OK, "\n".join(lines)


def verify_cases(max_degree: int, max_genus: int) -> list[tuple[str, Surface]]:
    specs = []
    for m in range(1, max_degree + 1):
        specs += [f"S:{m}", f"C:{m}", f"A:{m}"]
    if max_degree >= 4:
        specs.append("wreath(S:2,S:2)")
    cases = []
    for spec in specs:
        for g in range(max_genus + 1):
            cases.append((spec, Surface.closed(g)))
            cases.append((spec, Surface.punctured(g, 1)))
    return sorted(cases, key=lambda c: (c[0], c[1].kind, c[1].genus))


def cmd_verify(args) -> tuple[int, str]:
    results = []
    for spec, surface in verify_cases(args.max_degree, args.max_genus):
        group = parse_group_spec(spec, args.limit)
        formula = sign_sym_prod(group, surface)
        try:
            oracle = quotient_signature_oracle(group, surface, args.tolerance,
                                               blocks=args.blocks)
            ok = oracle == formula
        except NumericalFailureError as exc:
            log.warning("%s on %s: %s", spec, surface, exc)
            oracle, ok = None, False
        results.append((spec, surface, formula, oracle, ok))
    status = EXIT_OK if all(r[-1] for r in results) else EXIT_MISMATCH
    if args.json:
        return status, dump_json({
            "command": "verify",
            "input": {"maxDegree": args.max_degree, "maxGenus": args.max_genus,
                      "tolerance": args.tolerance},
            "cases": [{"group": spec, "surface": str(s), "formula": _value_text(f),
                       "oracle": None if o is None else str(o), "pass": ok}
                      for spec, s, f, o, ok in results],
            "value": "pass" if status == EXIT_OK else "fail",
        })
    lines = [f"{'PASS' if ok else 'FAIL'}  {spec:<16} {str(s):<10} formula={_value_text(f)} oracle={o}"
             for spec, s, f, o, ok in results]
    passed = sum(r[-1] for r in results)
    lines.append(f"{passed}/{len(results)} cases passed")
    return status, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                        help="maximum number of group elements to enumerate")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="numerical tolerance for the homology oracle")

    parser = argparse.ArgumentParser(
        prog="symprod",
        description="Signatures of G-symmetric products of surfaces via the cycle index.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cycle-index", parents=[common], help="print Z(G)")
    p.add_argument("spec", help="S:n | C:n | A:n | wreath(<spec>,<spec>) | gens:<deg>:<cycles>;...")
    p.set_defaults(func=cmd_cycle_index)

    p = sub.add_parser("signature", parents=[common], help="signature of M^m/G")
    p.add_argument("spec")
    p.add_argument("surface", help="closed:g or punct:g:k")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("table", parents=[common], help="signatures over a range of genera")
    p.add_argument("family", choices=["sym", "wreath"])
    p.add_argument("--degree", type=int, help="m for the S_m family")
    p.add_argument("--p", type=int, help="number of blocks for the wreath family")
    p.add_argument("--m", type=int, help="block size for the wreath family")
    p.add_argument("--table-range", default="0..4", help="genus range a..b")
    p.add_argument("--surface", choices=["closed", "punct"], default="punct")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="oracle vs cycle-index formula")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--max-genus", type=int, default=2)
    p.add_argument("--blocks", action="store_true",
                   help="split the oracle computation into invariant blocks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        code, out = args.func(args)
    except (SpecError, PermutationParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
