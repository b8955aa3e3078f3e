"""Command-line interface.

Exit codes: 0 success or match, 1 usage error, 2 computation error,
3 cross-check mismatch (or too few remote terms), 4 fetch failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from fusscat import catalan, geometry, lagrange, oeis, render, series, trees
from fusscat.core_math import PartitionType

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTE = 2
EXIT_MISMATCH = 3
EXIT_NETWORK = 4

DEFAULT_CAP = 12


class UsageError(Exception):
    pass


class ConsistencyError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _seed(text: str) -> series.SeedPolynomial:
    try:
        return series.SeedPolynomial.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


class Output:
    """Collects one command's record and prints it as text or a JSON line."""

    def __init__(self, args: argparse.Namespace, params: dict[str, Any]):
        self.command = args.command
        self.fmt = getattr(args, "format", "text")
        self.timing = getattr(args, "timing", False)
        self.params = params
        self.results: dict[str, Any] = {}
        self.lines: list[str] = []
        self._start = time.perf_counter()

    def emit(self) -> None:
        if self.fmt == "json":
            record: dict[str, Any] = {"command": self.command, "params": self.params, "results": self.results}
            if self.timing:
                record["timing_s"] = round(time.perf_counter() - self._start, 6)
            print(json.dumps(record, sort_keys=True))
        else:
            for line in self.lines:
                print(line)
            if self.timing:
                print(f"# {time.perf_counter() - self._start:.6f} s")


def _coefficients(g: series.SeedPolynomial, order: int, method: str) -> tuple[list[int], bool | None]:
    lag = it = None
    if method in ("lagrange", "both"):
        lag = list(lagrange.reversion_series(g, order).coeffs[1:])
    if method in ("iterate", "both"):
        z, _ = series.iterate_to_fixpoint(g, order)
        it = list(z.coeffs[1:])
    if lag is not None and it is not None:
        if lag != it:
            raise ConsistencyError(f"Lagrange coefficients {lag} disagree with iteration {it}")
        return lag, True
    return (lag if lag is not None else it), None  # type: ignore[return-value]


def cmd_revert(args: argparse.Namespace) -> int:
    method = "iterate" if args.command == "iterate" else args.method
    out = Output(args, {"seed": args.seed.spec_string(), "order": args.order, "method": method})
    coeffs, agree = _coefficients(args.seed, args.order, method)
    out.results["coefficients"] = [str(c) for c in coeffs]
    out.lines.append(",".join(map(str, coeffs)))
    if agree is not None:
        out.results["methods_agree"] = agree
        out.lines.append("methods agree")
    out.emit()
    return EXIT_OK


def _parsed(build, value):
    # bad arguments are usage errors, not computation failures
    try:
        return build(value)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_count(args: argparse.Namespace) -> int:
    mode, arg = args.mode, args.value
    params: dict[str, Any] = {"mode": mode, "value": arg}
    try:
        if mode == "type":
            lam = _parsed(PartitionType.parse, arg)
            params["value"] = lam.spec_string()
            results = {"lambda": str(lam), "n": lam.n, "count": str(lagrange.type_count(lam))}
            lines = [results["count"]]
        elif mode == "trees":
            r = _parsed(catalan.DowndegreeSequence, tuple(_int_list(arg)))
            results = {"downdegree": str(r), "count": str(catalan.tree_count_for_sequence(r))}
            lines = [results["count"]]
        elif mode == "super":
            n = _nonneg(arg)
            results = {"n": n, "count": str(catalan.super_catalan(n))}
            lines = [results["count"]]
        elif mode == "decompose":
            n = _nonneg(arg)
            terms = lagrange.decompose_super_catalan(n)
            total = sum(t.count for t in terms)
            results = {
                "n": n,
                "terms": [{"lambda": t.lam.spec_string(), "count": str(t.count)} for t in terms],
                "total": str(total),
            }
            lines = [f"{t.lam}\t{t.count}" for t in terms] + [f"total\t{total}"]
        elif mode == "dissections":
            m = _nonneg(arg)
            pieces = args.pieces
            params["pieces"] = pieces
            results = {"m": m, "count": str(geometry.count_dissections(m, pieces))}
            lines = [results["count"]]
        elif mode == "colored":
            m = _nonneg(arg)
            if args.seed is None:
                raise UsageError("count colored needs --seed")
            params["seed"] = args.seed.spec_string()
            results = {"m": m, "count": str(geometry.colored_count(m, args.seed))}
            lines = [results["count"]]
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown count mode {mode}")
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc)) from None
    out = Output(args, params)
    out.results, out.lines = results, lines
    out.emit()
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.m > args.cap:
        print(
            f"refusing to list dissections of a {args.m}-gon: above the cap of {args.cap} "
            "(the count grows like 5.8^m; raise --cap to override)",
            file=sys.stderr,
        )
        return EXIT_COMPUTE
    if args.cap > DEFAULT_CAP:
        print(f"warning: cap raised to {args.cap}; listing may be slow and large", file=sys.stderr)
    found = geometry.enumerate_dissections(args.m, args.pieces)
    params = {"m": args.m, "pieces": args.pieces}
    if args.format == "svg":
        if args.out_dir is None:
            raise UsageError("--format svg needs --out-dir")
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for d in found:
            path = out_dir / render.svg_filename(d)
            path.write_text(render.dissection_svg(d), encoding="utf-8")
            print(path)
        return EXIT_OK
    out = Output(args, params)
    out.results = {"count": str(len(found)), "dissections": [d.serialize() for d in found]}
    out.lines = [d.serialize() for d in found]
    out.emit()
    return EXIT_OK


def cmd_biject(args: argparse.Namespace) -> int:
    text = args.input.strip()
    out = Output(args, {"input": text})
    if text.startswith("m="):
        d = _parsed(geometry.Dissection.parse, text)
        t = trees.dissection_to_tree(d)
        direction = "dissection-to-tree"
        image = t.serialize()
    elif text.startswith("("):
        t = _parsed(trees.PlaneTree.parse, text)
        d = trees.tree_to_dissection(t)
        direction = "tree-to-dissection"
        image = d.serialize()
    else:
        raise UsageError("input must be a dissection 'm=<m>;diags=...' or a parenthesized tree")
    r = trees.downdegree_sequence(t)
    lam = geometry.type_of(d)
    out.results = {
        "direction": direction,
        "image": image,
        "downdegree": [str(x) for x in r.counts],
        "lambda": lam.spec_string(),
    }
    out.lines = [image, f"downdegree ({r})", f"type {lam}"]
    out.emit()
    return EXIT_OK


def _client(args: argparse.Namespace) -> oeis.OEISClient:
    return oeis.OEISClient.from_env(
        base_url=args.base_url,
        timeout=args.timeout,
        fixture_dir=Path(args.fixture_dir) if args.fixture_dir else None,
        offline=not args.online,
    )


def cmd_oeis(args: argparse.Namespace) -> int:
    params = {
        "seed": args.seed.spec_string(),
        "order": args.order,
        "id": args.id,
        "offset": args.offset,
        "nonzero": args.nonzero,
        "source": "network" if args.online else "fixture",
    }
    coeffs, _ = _coefficients(args.seed, args.order, "lagrange")
    local = [c for c in coeffs if c] if args.nonzero else coeffs
    try:
        record = _client(args).fetch(args.id)
    except oeis.InvalidIdentifierError as exc:
        raise UsageError(str(exc)) from None
    except oeis.OEISError as exc:
        print(f"fetch failed: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    report = oeis.cross_check(local, record, args.offset)
    out = Output(args, params)
    out.results = {"local": [str(c) for c in local], **report.to_dict()}
    line = f"{args.id}: {report.verdict.value} ({report.matched_prefix_length} terms agree)"
    if report.first_mismatch:
        i, a, b = report.first_mismatch
        line += f"; index {i}: local {a} != remote {b}"
    out.lines = [line]
    out.emit()
    return EXIT_OK if report.verdict is oeis.Verdict.MATCH else EXIT_MISMATCH


def cmd_render(args: argparse.Namespace) -> int:
    d = _parsed(geometry.Dissection.parse, args.input)
    svg = render.dissection_svg(d)
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
        print(args.out)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--timing", action="store_true", help="append elapsed time to the output")

    parser = _Parser(prog="fusscat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    order_help = "number of coefficients a_0..a_{N-1}, i.e. powers x^1..x^N"
    for name in ("revert", "iterate"):
        p = sub.add_parser(name, parents=[common], help="reversion coefficients of x = z - sum c_d z^d")
        p.add_argument("--seed", type=_seed, required=True, help='terms "d:c[,d:c...]", e.g. 2:1,3:1')
        p.add_argument("--order", type=_nonneg, required=True, help=order_help)
        if name == "revert":
            p.add_argument("--method", choices=["lagrange", "iterate", "both"], default="lagrange")
        p.set_defaults(func=cmd_revert)

    p = sub.add_parser("count", parents=[common], help="exact counts")
    p.add_argument("mode", choices=["type", "trees", "super", "decompose", "dissections", "colored"])
    p.add_argument(
        "value",
        help='type: lambda as "j^k,..."; trees: downdegree list r0,r1,...; '
        "super/decompose: n; dissections/colored: polygon size m",
    )
    p.add_argument("--pieces", type=_int_list, default=None, help="allowed face sizes, e.g. 3,4")
    p.add_argument("--seed", type=_seed, default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list dissections of a convex m-gon")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--pieces", type=_int_list, default=None, help="allowed face sizes (default: all)")
    p.add_argument("--format", choices=["text", "json", "svg"], default="text")
    p.add_argument("--out-dir", default=None)
    p.add_argument("--cap", type=_nonneg, default=DEFAULT_CAP)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("biject", parents=[common], help="map a dissection to its tree or back")
    p.add_argument("input", help='"m=<m>;diags=(i,j),..." or a tree such as "(()())"')
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("oeis", parents=[common], help="cross-check reversion coefficients with OEIS")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--order", type=_nonneg, required=True, help=order_help)
    p.add_argument("--id", required=True)
    p.add_argument("--offset", type=_nonneg, default=0)
    p.add_argument("--nonzero", action="store_true", help="compare only the nonzero coefficients")
    p.add_argument("--online", action="store_true", help="query the network instead of fixtures")
    p.add_argument("--fixture-dir", default=None)
    p.add_argument("--base-url", default=None)
    p.add_argument("--timeout", type=float, default=None)
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("render", help="draw one dissection as SVG")
    p.add_argument("input")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fusscat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"fusscat: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (ValueError, ArithmeticError) as exc:
        print(f"fusscat: error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
