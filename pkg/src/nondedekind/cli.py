"""Command-line front end.

Every subcommand prints a human-readable line by default and the
documented JSON form under ``--json``. Numbers are always exact
(``p/q``). Exit status: 0 success, 1 domain or arithmetic error, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bisection import encode, interval_chain
from .dedekind_set import DEFAULT_DEPTH, classify_dedekind_set, membership_at_depth
from .errors import DomainError, ParseError
from .hyperreal import Hyperreal, classify, compare, parse_hyperreal
from .randomness import (
    BatteryConfig,
    NullCoverSpec,
    StringSet,
    battery_many,
    cylinder_measure,
    read_bits,
    relative_random_witness,
    verify_null_cover,
)
from .sequences import (
    DigitString,
    SequenceSpec,
    change_basis,
    expand,
    format_rational,
    parse_rational,
    value_exact,
)


def _fmt(x) -> str:
    return str(x) if isinstance(x, Hyperreal) else format_rational(x)


def _load_json_arg(text: str) -> str:
    """Inline JSON, or ``@path`` / a path to a file containing it."""
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    if text.lstrip().startswith("{"):
        return text
    return Path(text).read_text()


def _spec(text: str) -> SequenceSpec:
    return SequenceSpec.from_json(_load_json_arg(text))


def _emit(args, human: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _interval_pair(iv) -> list[str]:
    return [_fmt(iv.lo), _fmt(iv.hi)]


# -- handlers -----------------------------------------------------------------


def cmd_encode(args) -> None:
    bits = encode(parse_rational(args.value), parse_rational(args.lo), parse_rational(args.hi), args.depth)
    _emit(args, str(bits), {"bits": str(bits)})


def cmd_decode(args) -> None:
    chain = interval_chain(parse_rational(args.lo), parse_rational(args.hi), DigitString.from_str(args.bits, 2))
    payload = {
        "bits": str(chain.bits),
        "start": _interval_pair(chain.start),
        "steps": [_interval_pair(iv) for iv in chain.steps],
        "final": _interval_pair(chain.final),
    }
    _emit(args, str(chain.final), payload)


def cmd_value(args) -> None:
    v = format_rational(value_exact(_spec(args.spec)))
    _emit(args, v, {"value": v})


def cmd_expand(args) -> None:
    spec = expand(parse_rational(args.value), args.base)
    _emit(args, str(spec), spec.to_json())


def cmd_convert(args) -> None:
    spec = change_basis(_spec(args.spec), args.base)
    _emit(args, str(spec), spec.to_json())


def cmd_hyper_eval(args) -> None:
    h = parse_hyperreal(args.expr)
    _emit(args, str(h), {"value": str(h)})


def cmd_hyper_classify(args) -> None:
    h = parse_hyperreal(args.expr)
    kind = classify(h)
    val = None if h.is_zero() else h.valuation
    human = kind.value if val is None else f"{kind.value} (valuation {val})"
    _emit(args, human, {"kind": kind.value, "valuation": val})


def cmd_hyper_compare(args) -> None:
    result = compare(parse_hyperreal(args.x), parse_hyperreal(args.y))
    _emit(args, result, {"result": result})


def _endpoints(args):
    if args.real:
        return parse_rational(args.lo), parse_rational(args.hi)
    return parse_hyperreal(args.lo), parse_hyperreal(args.hi)


def cmd_dedekind_classify(args) -> None:
    lo, hi = _endpoints(args)
    desc = classify_dedekind_set(lo, hi, _spec(args.spec))
    payload = desc.to_json()
    human = f"{payload['case']} {payload['cardinality']}"
    if payload["std_limit"] is not None:
        human += f" std_limit={payload['std_limit']}"
    if desc.contains_all_reals:
        human += " contains_all_reals"
    _emit(args, human, payload)


def cmd_dedekind_member(args) -> None:
    lo, hi = _endpoints(args)
    point = parse_rational(args.point) if args.real else parse_hyperreal(args.point)
    ok = membership_at_depth(point, lo, hi, _spec(args.spec), args.depth)
    _emit(args, "true" if ok else "false", {"member": ok, "depth": args.depth})


def cmd_rand_battery(args) -> None:
    try:
        sizes = tuple(int(s) for s in args.block_sizes.split(",") if s.strip())
    except ValueError:
        raise DomainError(f"bad --block-sizes {args.block_sizes!r}") from None
    config = BatteryConfig(alpha=args.alpha, block_sizes=sizes)
    samples = [read_bits(Path(p).read_text()) for p in args.files]
    reports = battery_many(samples, config, jobs=args.jobs)
    if args.json:
        payload = [dict(r.to_json(), file=p) for p, r in zip(args.files, reports)]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True))
        return
    for path, rep in zip(args.files, reports):
        print(f"{path}: {rep.verdict}")
        for rec in rep.records:
            stat = "n/a" if rec.statistic is None else format_rational(rec.statistic)
            flag = "pass" if rec.passed else "fail"
            print(f"  {rec.name}: {flag} statistic={stat} threshold={format_rational(rec.threshold)}")


def cmd_rand_measure(args) -> None:
    m = cylinder_measure(StringSet.of(args.strings, args.base))
    _emit(args, format_rational(m), {"measure": format_rational(m)})


def cmd_rand_verify_cover(args) -> None:
    cover = NullCoverSpec.from_json(_load_json_arg(args.cover))
    target = _spec(args.target) if args.target else None
    verdict = verify_null_cover(cover, target)
    human = "valid" if verdict.valid else "invalid"
    if target is not None:
        human += ", target covered at every level" if all(verdict.covered_at) else ", target escapes"
    _emit(args, human, verdict.to_json())


def cmd_rand_witness(args) -> None:
    a1, b1 = (parse_rational(v) for v in args.outer)
    a2, b2 = (parse_rational(v) for v in args.inner)
    wit = relative_random_witness(a1, b1, a2, b2, _spec(args.spec))
    human = (
        f"w={format_rational(wit.w)} outer_value={format_rational(wit.outer_value)} "
        f"expansion={wit.expansion_in_outer} differ={'true' if wit.expansions_differ else 'false'}"
    )
    _emit(args, human, wit.to_json())


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand; the leaf copies
    # use SUPPRESS so they do not clobber a value given at the top.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--depth", type=int, default=argparse.SUPPRESS, help=f"bisection depth (default {DEFAULT_DEPTH})")

    parser = argparse.ArgumentParser(prog="nondedekind", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", default=False, help="emit JSON")
    parser.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help=f"bisection depth (default {DEFAULT_DEPTH})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="bits locating a rational in [lo, hi]")
    p.add_argument("--value", required=True)
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="interval chain for a bit string")
    p.add_argument("bits")
    p.add_argument("--lo", default="0")
    p.add_argument("--hi", default="1")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("value", parents=[common], help="exact value of a sequence")
    p.add_argument("--spec", required=True, help="sequence JSON, or a file holding it")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("expand", parents=[common], help="nonterminating expansion of a rational")
    p.add_argument("--value", required=True)
    p.add_argument("--base", type=int, default=2)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("convert", parents=[common], help="change the base of a sequence")
    p.add_argument("--spec", required=True)
    p.add_argument("--base", type=int, required=True)
    p.set_defaults(func=cmd_convert)

    hyper = sub.add_parser("hyper", help="hyperreal expressions").add_subparsers(dest="hyper_command", required=True)
    p = hyper.add_parser("eval", parents=[common])
    p.add_argument("expr")
    p.set_defaults(func=cmd_hyper_eval)
    p = hyper.add_parser("classify", parents=[common])
    p.add_argument("expr")
    p.set_defaults(func=cmd_hyper_classify)
    p = hyper.add_parser("compare", parents=[common])
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_hyper_compare)

    ded = sub.add_parser("dedekind", help="Dedekind sets").add_subparsers(dest="dedekind_command", required=True)
    for name, func in (("classify", cmd_dedekind_classify), ("member", cmd_dedekind_member)):
        p = ded.add_parser(name, parents=[common])
        if name == "member":
            p.add_argument("--point", required=True)
        p.add_argument("--lo", required=True, help="hyperreal expression")
        p.add_argument("--hi", required=True, help="hyperreal expression")
        p.add_argument("--spec", required=True)
        p.add_argument("--real", action="store_true", help="read endpoints as plain rationals")
        p.set_defaults(func=func)

    rand = sub.add_parser("rand", help="randomness tools").add_subparsers(dest="rand_command", required=True)
    p = rand.add_parser("battery", parents=[common])
    p.add_argument("files", nargs="+", help="ASCII 0/1 sample files")
    p.add_argument("--alpha", default="0.01")
    p.add_argument("--block-sizes", default="8,32,128")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_rand_battery)

    p = rand.add_parser("measure", parents=[common])
    p.add_argument("strings", nargs="*")
    p.add_argument("--base", type=int, default=2)
    p.set_defaults(func=cmd_rand_measure)

    p = rand.add_parser("verify-cover", parents=[common])
    p.add_argument("--cover", required=True, help="cover JSON, or a file holding it")
    p.add_argument("--target")
    p.set_defaults(func=cmd_rand_verify_cover)

    p = rand.add_parser("witness", parents=[common])
    p.add_argument("--outer", nargs=2, required=True, metavar=("A1", "B1"))
    p.add_argument("--inner", nargs=2, required=True, metavar=("A2", "B2"))
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_rand_witness)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.depth < 0:
        parser.error("--depth must be >= 0")
    try:
        args.func(args)
    except (DomainError, ParseError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
