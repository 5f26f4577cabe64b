"""Command-line front end.

Every command prints one compact JSON document on stdout (or writes it to
``-o``); logs go to stderr. Exit codes: 0 on success, 1 on usage or
validation errors, 2 when an exact search exceeds the size guard.

Examples::

    hierdim ldim -g c5.json
    hierdim gallery path-cycle --n 1 --k 4 | hierdim ldim -g -
    hierdim bounds -g p5.json -h c5.json --u 0,2,4
"""

import argparse
import json
import logging
import sys
from typing import Any, List, Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .core.client import HierDimClient
from .core.config import Settings
from .core.cover import STRATEGIES
from .core.errors import HierDimError, InstanceTooLarge
from .api.gallery import NAMES, TRUNCATED_CUBE_STAGES
from .api.graphs import plain_number

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
PRODUCT_KINDS = ("hier", "cartesian", "join", "corona")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _vertex_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}")


def _plain(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, float):
        return plain_number(value)
    return value


def _emit(document: Any, output: Optional[str]) -> None:
    text = json.dumps(_plain(document), separators=(",", ":"), ensure_ascii=False)
    if output:
        with open(output, "w") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hierdim", description="Local metric dimensions of graphs and hierarchical products")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = _Parser(add_help=False)
    common.add_argument("--help", action="help", help="show this help message and exit")
    common.add_argument("--workers", type=int, help="parallel search workers (HIERDIM_WORKERS)")
    common.add_argument("--log-level", help="logging level on stderr (HIERDIM_LOG_LEVEL)")
    common.add_argument("-o", "--output", help="write the JSON document here instead of stdout")

    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, summary in (
        ("dim", "metric dimension"),
        ("ldim", "local metric dimension"),
        ("uldim", "U-metric local dimension"),
    ):
        sub = subparsers.add_parser(name, parents=[common], add_help=False, help=summary)
        sub.add_argument("-g", "--graph", required=True, help="graph file, '-' for stdin")
        sub.add_argument("--all-bases", action="store_true", help="also list every minimum basis")
        sub.add_argument("--strategy", choices=STRATEGIES, default="pruned")
        if name == "uldim":
            sub.add_argument("--u", type=_vertex_list, required=True, help="U as comma-separated ids")

    product = subparsers.add_parser("product", parents=[common], add_help=False, help="build a product graph")
    product.add_argument("--kind", choices=PRODUCT_KINDS, default="hier")
    product.add_argument("-g", "--graph", required=True, help="first factor")
    product.add_argument("-h", "--h-graph", dest="h_graph", required=True, help="second factor")
    product.add_argument("--u", type=_vertex_list, help="U for --kind hier")

    bounds = subparsers.add_parser("bounds", parents=[common], add_help=False, help="verify product bounds")
    bounds.add_argument("-g", "--graph", required=True)
    bounds.add_argument("-h", "--h-graph", dest="h_graph", required=True)
    bounds.add_argument("--u", type=_vertex_list, required=True)
    bounds.add_argument("--max-exact", type=int, help="product order guard (HIERDIM_MAX_EXACT)")

    gallery = subparsers.add_parser("gallery", parents=[common], add_help=False, help="emit a named graph")
    gallery.add_argument("name", choices=NAMES)
    gallery.add_argument("--n", type=int)
    gallery.add_argument("--k", type=int)
    gallery.add_argument("--stage", choices=TRUNCATED_CUBE_STAGES, default="H")

    codes = subparsers.add_parser("codes", parents=[common], add_help=False, help="assign customer codes")
    codes.add_argument("--roster", required=True, help="roster file, '-' for stdin")
    codes.add_argument("--geodesic-rule", choices=("any", "all"))
    return parser


def _run(args: argparse.Namespace, client: HierDimClient) -> Any:
    if args.command in ("dim", "ldim", "uldim"):
        graph = client.graphs.read_graph(args.graph)
        kind = {"dim": "metric", "ldim": "local", "uldim": "u_local"}[args.command]
        result = client.dimension.find_dimension(
            graph,
            kind,
            u=getattr(args, "u", None),
            enumerate_all=args.all_bases,
            strategy=args.strategy,
        )
        return result.to_dict()

    if args.command == "product":
        g = client.graphs.read_graph(args.graph)
        h = client.graphs.read_graph(args.h_graph)
        products = client.products
        if args.kind == "hier":
            if not args.u:
                raise HierDimError("--u is required for --kind hier")
            graph = products.hierarchical_product(products.spec(g, args.u, h)).graph
        elif args.kind == "cartesian":
            graph = products.cartesian_product(g, h).graph
        elif args.kind == "join":
            graph = products.join(g, h)
        else:
            graph = products.corona(g, h)
        return client.graphs.graph_to_dict(graph)

    if args.command == "bounds":
        g = client.graphs.read_graph(args.graph)
        h = client.graphs.read_graph(args.h_graph)
        report = client.bounds.verify_bounds(client.products.spec(g, args.u, h), args.max_exact)
        return report.model_dump(mode="json")

    if args.command == "gallery":
        named = client.gallery.by_name(args.name, n=args.n, k=args.k, stage=args.stage)
        check = client.gallery.self_check(named)
        return {
            "name": named.name,
            "graph": client.graphs.graph_to_dict(named.graph),
            "self_check": check.model_dump(mode="json"),
        }

    roster = client.delivery.read_roster(args.roster)
    cg = client.delivery.build_customer_graph(roster, args.geodesic_rule)
    book = client.delivery.assign_codes(cg)
    report = client.delivery.validate_codebook(cg, book)
    return client.delivery.codebook_to_dict(cg, book, report)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = Settings.from_env(
            workers=args.workers,
            log_level=args.log_level,
            max_exact_vertices=getattr(args, "max_exact", None),
            geodesic_rule=getattr(args, "geodesic_rule", None),
        )
    except HierDimError as e:
        print(f"hierdim: error: {e}", file=sys.stderr)
        return 1

    logging.basicConfig(level=settings.log_level, format=LOG_FORMAT, stream=sys.stderr)
    client = HierDimClient(settings=settings)

    try:
        document = _run(args, client)
    except InstanceTooLarge as e:
        print(f"hierdim: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (HierDimError, ValidationError, OSError, KeyError, json.JSONDecodeError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"hierdim: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1

    _emit(document, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
