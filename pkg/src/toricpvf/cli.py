"""
Command-line interface.

Exit codes: 0 success, 1 malformed input or arguments, 2 fan fails
validation, 3 crosscheck mismatch. Data goes to stdout (or --out),
diagnostics to stderr.
"""

import argparse
import json
import sys
from pathlib import Path

from .exact_linalg import LinalgError
from .fan import (FanError, FanValidationError, parse_fan, serialize_fan,
                  validate)
from .generators import from_family
from .oracle import crosscheck
from .polytope import UnboundedError
from .pvf import (decomposition, decomposition_to_json, dimension_table,
                  stratification)

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which would collide with "invalid fan"
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricpvf",
                     description="Holomorphic polyvector fields on smooth complete toric varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("fan", nargs="?", help="fan JSON file ('-' for stdin)")
        p.add_argument("--family", help="built-in fan instead of a file, e.g. projective:2, "
                                        "product:1,1, hirzebruch:3")
        p.add_argument("--normalize", action="store_true",
                       help="divide non-primitive rays by their gcd instead of failing")
        p.add_argument("--format", choices=["json", "tsv", "pretty"], default="json")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("validate", help="check smoothness and completeness")
    add_input(p)
    p = sub.add_parser("dims", help="dimension table via the face formula")
    add_input(p)
    p.add_argument("--k", default="all")
    p = sub.add_parser("decompose", help="weight-space bases")
    add_input(p)
    p.add_argument("--k", default="all")
    p = sub.add_parser("crosscheck", help="compare the formula with the oracles")
    add_input(p)
    p.add_argument("--k", default="all")
    p.add_argument("--margin", type=int, default=2)
    p = sub.add_parser("gen", help="write a built-in fan as a fan file")
    p.add_argument("family", help="projective:N | product:N1,N2,... | hirzebruch:A")
    p.add_argument("--out", help="output path (default stdout)")
    return parser


def _load(args):
    if args.family and args.fan:
        raise UsageError("give either a fan file or --family, not both")
    if args.family:
        try:
            return from_family(args.family)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not args.fan:
        raise UsageError("a fan file or --family is required")
    try:
        data = sys.stdin.buffer.read() if args.fan == "-" else Path(args.fan).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {args.fan}: {exc}") from None
    return parse_fan(data, normalize=args.normalize)


def _ks(args, n):
    if args.k == "all":
        return list(range(n + 1))
    try:
        k = int(args.k)
    except ValueError:
        raise UsageError(f"--k must be an integer or 'all', got {args.k!r}") from None
    if not 0 <= k <= n:
        raise UsageError(f"--k {k} out of range 0..{n}")
    return [k]


def _render_validate(report, fmt):
    if fmt == "json":
        return _dump(report.to_json())
    if fmt == "tsv":
        lines = [f"smooth\t{str(report.smooth).lower()}",
                 f"complete\t{str(report.complete).lower()}"]
        lines += [f"diagnostic\t{d['cone']}\t{d['reason']}" for d in report.diagnostics]
        return "\n".join(lines) + "\n"
    lines = [f"smooth:   {'yes' if report.smooth else 'NO'}",
             f"complete: {'yes' if report.complete else 'NO'}"]
    lines += [f"  - {d['reason']}" for d in report.diagnostics]
    return "\n".join(lines) + "\n"


def _render_dims(fan, table, ks, n_points, fmt):
    if fmt == "json":
        doc = table.to_json()
        doc["dim_table"] = {str(k): table[k] for k in ks}
        doc["breakdown"] = {str(k): doc["breakdown"][str(k)] for k in ks}
        doc["n"] = fan.dim
        doc["lattice_points"] = n_points
        return _dump(doc)
    if fmt == "tsv":
        return "k\tdim\n" + "".join(f"{k}\t{table[k]}\n" for k in ks)
    out = [f"n = {fan.dim}, |S| = {n_points}"]
    for k in ks:
        terms = " + ".join(f"C({fan.dim - i},{k - i})*{c}" for i, c, b, p in table.breakdown[k])
        out.append(f"k={k}: {table[k]:>6} = {terms}")
    return "\n".join(out) + "\n"


def _render_decompose(fan, table, per_k, fmt):
    if fmt == "json":
        doc = {"n": fan.dim,
               "dim_table": {str(k): table[k] for k in sorted(per_k)},
               "decompositions": [decomposition_to_json(fan, k, spaces)
                                  for k, spaces in sorted(per_k.items())]}
        return _dump(doc)
    if fmt == "tsv":
        lines = ["k\tI\trank\tdim\tgenerators"]
        for k, spaces in sorted(per_k.items()):
            for w in spaces:
                gens = ";".join(json.dumps(g.to_json(), sort_keys=True) for g in w.generators)
                lines.append(f"{k}\t{','.join(map(str, w.weight))}\t{w.rank}\t{w.dim}\t{gens}")
        return "\n".join(lines) + "\n"
    out = ["# weights are I; each summand is chi^I * rho(x), torus character -I"]
    for k, spaces in sorted(per_k.items()):
        out.append(f"k={k}: total {sum(w.dim for w in spaces)}")
        for w in spaces:
            gens = ", ".join(str(g) for g in w.generators)
            out.append(f"  I={list(w.weight)} i={w.rank} dim={w.dim}: {gens}")
    return "\n".join(out) + "\n"


def _render_crosscheck(reports, fmt):
    if fmt == "json":
        return _dump({"passed": all(r.passed for r in reports),
                      "reports": [r.to_json() for r in reports]})
    if fmt == "tsv":
        lines = ["k\tpassed\tformula\tkernel\tcharts\tlaurent\tfailures"]
        for r in reports:
            t = r.totals
            lines.append(f"{r.k}\t{str(r.passed).lower()}\t{t['formula']}\t{t['kernel']}"
                         f"\t{t['charts']}\t{t['laurent']}\t{len(r.failures)}")
        return "\n".join(lines) + "\n"
    out = []
    for r in reports:
        t = r.totals
        out.append(f"k={r.k}: {'PASS' if r.passed else 'FAIL'}  formula={t['formula']} "
                   f"kernel={t['kernel']} charts={t['charts']} laurent={t['laurent']} "
                   f"({r.points_checked} weights, margin {r.margin})")
        out += [f"    {json.dumps(f, sort_keys=True)}" for f in r.failures[:20]]
    return "\n".join(out) + "\n"


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "gen":
            try:
                fan = from_family(args.family)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            _emit(serialize_fan(fan).decode("utf-8"), args.out)
            return EXIT_OK

        fan = _load(args)
        report = validate(fan)
        if args.command == "validate":
            _emit(_render_validate(report, args.format), args.out)
            for d in report.diagnostics:
                print(d["reason"], file=sys.stderr)
            return EXIT_OK if report.ok else EXIT_INVALID
        if not report.ok:
            raise FanValidationError(report)

        ks = _ks(args, fan.dim)
        if args.command == "crosscheck":
            if args.margin < 1:
                raise UsageError("--margin must be >= 1")
            name = args.family or args.fan
            reports = [crosscheck(fan, k, args.margin, fan_id=name) for k in ks]
            _emit(_render_crosscheck(reports, args.format), args.out)
            return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH

        strat = stratification(fan)
        table = dimension_table(fan, strat)
        if args.command == "dims":
            n_points = sum(strat.counts())
            _emit(_render_dims(fan, table, ks, n_points, args.format), args.out)
        else:
            per_k = {k: decomposition(fan, k, strat) for k in ks}
            _emit(_render_decompose(fan, table, per_k, args.format), args.out)
        return EXIT_OK
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FanError, LinalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FanValidationError, UnboundedError) as exc:
        print(f"invalid fan: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
