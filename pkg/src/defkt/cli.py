"""Command-line surface: defkt <subcommand>.

Subcommands: kdef, pi0, k0, irreps, monoid complete|check, variety.
Exit codes: 0 success, 2 parse error, 3 unsupported input,
4 computation bound exhausted.  JSON payloads carry "schema": 1 and
render deterministically (sorted keys), so parsing and re-rendering an
emitted document is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import commutative_monoid as cm
from . import finite_groups, kdef_calculus, rep_monoid, variety_emitter
from .presentation_dsl import (
    FINITE_LEAVES,
    GroupExpr,
    ParseError,
    atomic_factors,
    parse_group_expr,
    parse_presentation,
    render_group_expr,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_BOUND = 4

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CliConfig:
    max_degree: int = 10
    cache_dir: str | None = None
    output_format: str = "text"
    search_bound: int = cm.DEFAULT_SEARCH_BOUND
    group_order_cap: int = finite_groups.DEFAULT_ORDER_CAP

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max degree must be nonnegative")
        if self.search_bound < 1:
            raise ValueError("search bound must be at least 1")


def render_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _emit(payload: dict, text_lines: list[str], config: CliConfig) -> None:
    if config.output_format == "json":
        print(render_json(payload))
    else:
        for line in text_lines:
            print(line)


class _Unsupported(Exception):
    pass


def _finite_factor_monoids(expr: GroupExpr, config: CliConfig) -> list[rep_monoid.Pi0RepMonoid]:
    monoids = []
    for leaf in atomic_factors(expr):
        if not isinstance(leaf, FINITE_LEAVES):
            raise _Unsupported(
                f"leaf {render_group_expr(leaf)!r} is not a finite group; "
                "component data needs finite leaves"
            )
        group = finite_groups.build_group(leaf, order_cap=config.group_order_cap)
        data = finite_groups.irrep_data(group, cache_dir=config.cache_dir)
        if data.degrees is None:
            raise _Unsupported(
                f"irreducible degrees unavailable for {group.label}; "
                "cannot grade its components"
            )
        monoids.append(rep_monoid.pi0_rep_monoid(data, group.label))
    return monoids


def _cmd_kdef(args, config: CliConfig) -> int:
    expr = parse_group_expr(args.expr)
    w = kdef_calculus.kdef(
        expr, order_cap=config.group_order_cap, cache_dir=config.cache_dir
    )
    ranks = kdef_calculus.homotopy_groups(w, config.max_degree).ranks
    payload = {
        "schema": SCHEMA_VERSION,
        "expr": args.expr,
        "shifts": list(w.shifts),
        "ranks": list(ranks),
    }
    lines = [
        f"expression: {render_group_expr(expr)}",
        "shifts: " + " ".join(str(s) for s in w.shifts),
        "ranks:  " + " ".join(str(r) for r in ranks)
        + f"   (degrees 0..{config.max_degree})",
    ]
    _emit(payload, lines, config)
    return EXIT_OK


def _cmd_pi0(args, config: CliConfig) -> int:
    expr = parse_group_expr(args.expr)
    monoids = _finite_factor_monoids(expr, config)
    result = rep_monoid.free_product_components(monoids, args.dim)
    label = render_group_expr(expr)
    payload = {
        "schema": SCHEMA_VERSION,
        "group": label,
        "n": result.n,
        "count": result.count,
        "representatives": [list(v) for v in result.representatives],
        "truncated": result.truncated,
    }
    lines = [
        f"group: {label}",
        f"dimension: {result.n}",
        f"components: {result.count}",
    ]
    for v in result.representatives[:20]:
        lines.append("  " + " ".join(str(e) for e in v))
    if result.count > 20:
        lines.append(f"  ... ({result.count} total"
                     + (", representative list truncated" if result.truncated else "")
                     + ")")
    _emit(payload, lines, config)
    return EXIT_OK


def _cmd_k0(args, config: CliConfig) -> int:
    expr = parse_group_expr(args.expr)
    monoids = _finite_factor_monoids(expr, config)
    if len(monoids) == 1:
        group = rep_monoid.k0(monoids[0])
    else:
        group = rep_monoid.free_product_k0(monoids)
    label = render_group_expr(expr)
    payload = {
        "schema": SCHEMA_VERSION,
        "expr": args.expr,
        "rank": group.rank,
        "torsion": list(group.torsion),
        "group": group.describe(),
    }
    lines = [f"K0({label}) = {group.describe()}  (rank {group.rank})"]
    _emit(payload, lines, config)
    return EXIT_OK


def _cmd_irreps(args, config: CliConfig) -> int:
    expr = parse_group_expr(args.expr)
    factors = atomic_factors(expr)
    if len(factors) != 1 or not isinstance(factors[0], FINITE_LEAVES):
        raise _Unsupported("irreps needs a single finite atomic group")
    group = finite_groups.build_group(factors[0], order_cap=config.group_order_cap)
    data = finite_groups.irrep_data(group, cache_dir=config.cache_dir)
    payload = {
        "schema": SCHEMA_VERSION,
        "group": group.label,
        "order": group.order,
        "class_count": data.class_count,
        "degrees": None if data.degrees is None else list(data.degrees),
    }
    lines = [f"group: {group.label} (order {group.order})",
             f"irreducibles: {data.class_count}"]
    if data.degrees is None:
        lines.append("degrees: unavailable (not forced by order/class arithmetic)")
    else:
        lines.append("degrees: " + ",".join(str(d) for d in data.degrees))
    _emit(payload, lines, config)
    return EXIT_OK


def _read_monoid_file(path: str) -> cm.FgCommMonoid:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as ex:
            raise ParseError(f"cannot read monoid file {path}: {ex}", 0) from ex
    try:
        return cm.parse_monoid(text)
    except ValueError as ex:
        raise ParseError(str(ex), 0) from ex


def _parse_vector(text: str, k: int, what: str) -> cm.MonoidElement:
    try:
        values = tuple(int(tok) for tok in text.split())
    except ValueError as ex:
        raise ParseError(f"{what}: expected integers, got {text!r}", 0) from ex
    if len(values) != k:
        raise ParseError(f"{what}: expected {k} exponents, got {len(values)}", 0)
    if any(v < 0 for v in values):
        raise ParseError(f"{what}: exponents must be nonnegative", 0)
    return cm.MonoidElement(values)


def _cmd_monoid(args, config: CliConfig) -> int:
    monoid = _read_monoid_file(args.file)
    if args.action == "complete":
        group = cm.grothendieck_group(monoid)
        payload = {
            "schema": SCHEMA_VERSION,
            "generators": monoid.generator_count,
            "rank": group.rank,
            "torsion": list(group.torsion),
            "group": group.describe(),
        }
        lines = [f"group completion: {group.describe()}"
                 f"  (rank {group.rank}, torsion {list(group.torsion)})"]
        _emit(payload, lines, config)
        return EXIT_OK
    left = _parse_vector(args.left, monoid.generator_count, "left element")
    right = _parse_vector(args.right, monoid.generator_count, "right element")
    verdict = cm.equal_in_monoid(monoid, left, right, config.search_bound)
    payload = {
        "schema": SCHEMA_VERSION,
        "left": list(left.exponents),
        "right": list(right.exponents),
        "result": verdict,
    }
    _emit(payload, [verdict], config)
    return EXIT_BOUND if verdict == "unknown" else EXIT_OK


def _cmd_variety(args, config: CliConfig) -> int:
    pres = parse_presentation(args.presentation)
    options = variety_emitter.EmitOptions(
        full_redundant=args.full_redundant,
        prefix_vars=args.prefix_vars,
    )
    if args.flavor == "unitary":
        system = variety_emitter.unitary_variety(pres, args.n, options)
    else:
        system = variety_emitter.gl_variety(pres, args.n, options)
    fmt = args.format
    if fmt is None:
        fmt = config.output_format if config.output_format == "json" else "text"
    if fmt == "json":
        payload = {"schema": SCHEMA_VERSION, **variety_emitter.system_to_dict(system)}
        print(render_json(payload))
    else:
        print(variety_emitter.system_to_text(system), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="defkt",
        description=(
            "Exact invariants of free products: deformation K-theory ranks, "
            "component counts, group completions, representation-variety "
            "polynomial systems."
        ),
    )
    parser.add_argument("--json", action="store_true", help="emit JSON payloads")
    parser.add_argument("--max-degree", type=int, default=10,
                        help="top homotopy degree reported (default 10)")
    parser.add_argument("--bound", type=int, default=cm.DEFAULT_SEARCH_BOUND,
                        help="search bound for presented-monoid decisions (default 16)")
    parser.add_argument("--cache-dir", default=None,
                        help="cache directory for derived group data "
                             "(default: $DEFKT_CACHE, else no caching)")
    parser.add_argument("--order-cap", type=int, default=finite_groups.DEFAULT_ORDER_CAP,
                        help="largest allowed finite group order (default 1024)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kdef", help="homotopy ranks of deformation K-theory")
    p.add_argument("expr", help="group expression, e.g. 'Z/2 * Z/3'")
    p.set_defaults(func=_cmd_kdef)

    p = sub.add_parser("pi0", help="components of the dimension-n representation space")
    p.add_argument("expr")
    p.add_argument("--dim", type=int, required=True, help="representation dimension n")
    p.set_defaults(func=_cmd_pi0)

    p = sub.add_parser("k0", help="degree-zero K-group via group completion")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_k0)

    p = sub.add_parser("irreps", help="class count and irreducible degrees")
    p.add_argument("expr", help="a single finite atomic group, e.g. S3")
    p.set_defaults(func=_cmd_irreps)

    p = sub.add_parser("monoid", help="presented-monoid computations")
    p.add_argument("action", choices=["complete", "check"])
    p.add_argument("file", help="monoid description file, or - for stdin")
    p.add_argument("left", nargs="?", default=None,
                   help="exponent vector, e.g. '2 0' (check only)")
    p.add_argument("right", nargs="?", default=None,
                   help="exponent vector (check only)")
    p.set_defaults(func=_cmd_monoid)

    p = sub.add_parser("variety", help="polynomial system for a representation space")
    p.add_argument("presentation", help="finite presentation, e.g. '<a | a^2>'")
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument("--flavor", choices=["unitary", "gl"], default="unitary")
    p.add_argument("--format", choices=["text", "json"], default=None)
    p.add_argument("--full-redundant", action="store_true",
                   help="emit all 2n^2 unitarity equations per generator")
    p.add_argument("--prefix-vars", action="store_true",
                   help="auxiliary variables per relator prefix; degree <= 2 output")
    p.set_defaults(func=_cmd_variety)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "monoid" and args.action == "check":
        if args.left is None or args.right is None:
            parser.error("monoid check needs LEFT and RIGHT exponent vectors")
    try:
        config = CliConfig(
            max_degree=args.max_degree,
            cache_dir=args.cache_dir or os.environ.get(finite_groups.CACHE_ENV_VAR) or None,
            output_format="json" if args.json else "text",
            search_bound=args.bound,
            group_order_cap=args.order_cap,
        )
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args, config)
    except ParseError as ex:
        print(f"parse error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    except finite_groups.GroupTableError as ex:
        print(f"table error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    except (kdef_calculus.UnsupportedLeafError, finite_groups.OrderCapError,
            _Unsupported) as ex:
        print(f"unsupported: {ex}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (cm.BoundExhausted, variety_emitter.TermBudgetError) as ex:
        print(f"bound exhausted: {ex}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as ex:  # remaining input validation (negative dims, ...)
        print(f"invalid input: {ex}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
