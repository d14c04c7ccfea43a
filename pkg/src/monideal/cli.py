"""Command-line front end.

Exit codes: 0 success, 1 a reproduction check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import golden
from .arithmetic import frobenius_power, power
from .betti import Field, betti_numbers
from .core import (
    MonomialIdeal,
    MonomialSyntaxError,
    format_monomial,
    ideal_from_json,
    ideal_to_json,
    parse_ideal_text,
    parse_monomial,
)
from .decomposition import NotSquarefreeError, minimal_primes, symbolic_power
from .newton import in_newton_polyhedron, integral_closure_of_power
from .splitting import SplittingMap, apply_ideal
from . import repro

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_ideal(spec: str) -> MonomialIdeal:
    """``spec`` is a file path, inline text/JSON, or the name ``sturmfels``."""
    if spec == "sturmfels":
        return golden.J
    try:
        is_file = Path(spec).is_file()
    except OSError:  # inline text too long to be a path
        is_file = False
    text = Path(spec).read_text() if is_file else spec
    if text.lstrip().startswith("{"):
        try:
            return ideal_from_json(text)
        except json.JSONDecodeError as exc:
            raise MonomialSyntaxError(exc.msg, text, exc.lineno, exc.colno) from None
    return parse_ideal_text(text)


def parse_split(text: str, default: int) -> tuple[dict[str, int], int]:
    """Accept ``{"split": {"x1": 2}, "default": 1}`` or ``x1=2,x2=2``."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return {k: int(v) for k, v in data.get("split", {}).items()}, int(data.get("default", default))
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        name, _, count = part.partition("=")
        if not count:
            raise UsageError(f"bad split entry {part!r}; expected name=count")
        out[name.strip()] = int(count)
    return out, default


def _emit_ideal(I: MonomialIdeal, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(ideal_to_json(I))
    return "\n".join(format_monomial(I.ring, g) for g in I.gens)


def _positive_s(args) -> int:
    if args.s is None or args.s < 1:
        raise UsageError("--s must be a positive integer")
    return args.s


def cmd_compute(args) -> int:
    I = load_ideal(args.ideal)
    field = Field.parse(args.field)
    fmt = args.format
    cmd = args.command
    if cmd == "power":
        print(_emit_ideal(power(I, _positive_s(args)), fmt))
    elif cmd == "frobenius":
        print(_emit_ideal(frobenius_power(I, _positive_s(args)), fmt))
    elif cmd == "symbolic":
        print(_emit_ideal(symbolic_power(I, _positive_s(args)), fmt))
    elif cmd == "closure":
        print(_emit_ideal(integral_closure_of_power(I, _positive_s(args)), fmt))
    elif cmd == "in-closure":
        s = _positive_s(args)
        Is = power(I, s)
        m = parse_monomial(I.ring, args.monomial)
        ok, cert = in_newton_polyhedron(m, Is)
        if fmt == "json":
            out = {"member": ok, "certificate": None}
            if cert is not None:
                out["certificate"] = [
                    {"generator": format_monomial(I.ring, Is.gens[i]), "weight": str(w)} for i, w in cert.weights
                ]
            print(json.dumps(out))
        else:
            print("true" if ok else "false")
            if cert is not None:
                for i, w in cert.weights:
                    print(f"{w}  {format_monomial(I.ring, Is.gens[i])}")
    elif cmd == "minimal-primes":
        primes = [list(p.variables) for p in minimal_primes(I)]
        if fmt == "json":
            print(json.dumps(primes))
        else:
            print("\n".join("(" + ", ".join(p) + ")" for p in primes))
    elif cmd in ("betti", "reg", "projdim"):
        B = betti_numbers(I, field)
        if cmd == "reg":
            print(json.dumps(B.regularity()) if fmt == "json" else B.regularity())
        elif cmd == "projdim":
            print(json.dumps(B.projdim()) if fmt == "json" else B.projdim())
        elif fmt == "json":
            data = B.to_json() if args.multigraded else B.table().to_json()
            print(json.dumps(data))
        else:
            print(B.table().render())
    elif cmd == "split":
        split, default = parse_split(args.split, args.default)
        sigma = SplittingMap.from_spec(I.ring, split, default)
        print(_emit_ideal(apply_ideal(sigma, I), fmt))
    return EXIT_OK


def cmd_repro(args) -> int:
    field = Field.parse(args.field)
    if args.target == "sturmfels":
        checks = repro.repro_sturmfels(field)
    elif args.target == "theorem1":
        if args.e is None or args.e < 1:
            raise UsageError("theorem1 needs --e <positive int>")
        mode = "direct" if args.direct else "transfer" if args.transfer else "auto"
        checks = repro.repro_theorem1(args.e, mode, field)
    else:
        checks = repro.repro_table(args.rows, direct=args.direct, field=field)
    if args.format == "json":
        print(json.dumps({"checks": [c.to_json() for c in checks], "passed": all(c.passed for c in checks)}))
    else:
        print(repro.report(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_s=False):
        p.add_argument("--ideal", required=True, help="file path, inline generators, JSON, or 'sturmfels'")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--field", default="Q", help="Q or Fp:<prime>")
        if needs_s:
            p.add_argument("--s", type=int, required=True)
        return p

    common(sub.add_parser("power", help="ordinary power I^s"), True)
    common(sub.add_parser("frobenius", help="Frobenius power I^[s]"), True)
    common(sub.add_parser("symbolic", help="symbolic power of a squarefree ideal"), True)
    common(sub.add_parser("closure", help="integral closure of I^s"), True)
    p = common(sub.add_parser("in-closure", help="test a monomial against the closure of I^s"), True)
    p.add_argument("--monomial", required=True)
    common(sub.add_parser("minimal-primes", help="minimal primes of a squarefree ideal"))
    p = common(sub.add_parser("betti", help="Betti table"))
    p.add_argument("--multigraded", action="store_true", help="JSON with multidegrees")
    common(sub.add_parser("reg", help="Castelnuovo-Mumford regularity"))
    common(sub.add_parser("projdim", help="projective dimension"))
    p = common(sub.add_parser("split", help="apply a splitting map"))
    p.add_argument("--split", required=True, help='x1=2,x2=2 or {"split": {...}, "default": 1}')
    p.add_argument("--default", type=int, default=1)

    p = sub.add_parser("repro", help="recompute the published values and compare")
    p.add_argument("target", choices=("sturmfels", "theorem1", "table"))
    p.add_argument("--e", type=int)
    p.add_argument("--rows", default="all", help="'all' or e.g. 1,3,5-7")
    p.add_argument("--direct", action="store_true", help="also compute split ideals directly (<= 12 variables)")
    p.add_argument("--transfer", action="store_true", help="theorem1: force the transfer path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--field", default="Q")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "repro":
            return cmd_repro(args)
        return cmd_compute(args)
    except (UsageError, MonomialSyntaxError, NotSquarefreeError, ValueError, KeyError) as exc:
        if isinstance(exc, NotSquarefreeError):
            msg = f"{args.command} requires a squarefree ideal: {exc}"
        else:
            msg = str(exc)
        print(f"monideal {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError as exc:
        print(f"monideal {args.command}: resource limit: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
