"""
WildColor CLI Entry Point
=========================

Command-line interface: compute chi of a .mg graph, count colorings,
tabulate the sequences, mine recurrences and run the verification sweeps.

Results go to stdout; logs and error lines go to stderr. Exit status is
0 on success, 1 when a verification fails and 2 on input or budget errors.
"""

import argparse
import sys
from typing import Callable, List, Optional, Sequence, Tuple

from wildcolor.algebra.bipoly import format_poly
from wildcolor.core.config import BudgetSettings, settings
from wildcolor.core.exceptions import InputError, WildColorError
from wildcolor.core.logging import get_logger, setup_logging
from wildcolor.engine.chi import ChiEngine
from wildcolor.engine.oracles import count_bruteforce, count_subset_expansion
from wildcolor.graphs.io import read_graph, serialize_graph
from wildcolor.graphs.multigraph import build_family
from wildcolor.models.schemas import (
    ColoringParams,
    EdgeStrategy,
    EngineConfig,
    FamilySpec,
    MemoMode,
    OracleKind,
    SeqParams,
    SequenceKind,
    VerificationSummary,
)
from wildcolor.sequences.generators import a_seq, b_seq
from wildcolor.sequences.recurrence import hankel_det_B, minimal_recurrence
from wildcolor.services.verification import VerificationService

logger = get_logger(__name__)

Outcome = Tuple[int, str]


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as InputError instead of exiting"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(f"{self.prog}: {message}")


# =====================
# Helpers
# =====================

def _budget(args: argparse.Namespace) -> BudgetSettings:
    overrides = {}
    if getattr(args, "max_brute_vertices", None) is not None:
        overrides["bruteforce_max_vertices"] = args.max_brute_vertices
    if getattr(args, "max_brute_colors", None) is not None:
        overrides["bruteforce_max_colors"] = args.max_brute_colors
    return settings.budget.model_copy(update=overrides)


def _engine(args: argparse.Namespace) -> ChiEngine:
    config = EngineConfig.from_settings()
    overrides = {}
    if getattr(args, "memo", None):
        overrides["memo_mode"] = MemoMode(args.memo)
    if getattr(args, "strategy", None):
        overrides["edge_strategy"] = EdgeStrategy(args.strategy)
    return ChiEngine(config.model_copy(update=overrides))


def _report(summary: VerificationSummary, as_json: bool) -> Outcome:
    output = summary.to_json() if as_json else summary.render()
    return (0 if summary.ok else 1), output


# =====================
# Commands
# =====================

def cmd_chi(args: argparse.Namespace) -> Outcome:
    graph = read_graph(args.file)
    chi = _engine(args).compute(graph)
    if args.eval is not None:
        params = ColoringParams.of(*args.eval)
        return 0, str(chi.evaluate(params.k, params.ell))
    return 0, format_poly(chi)


def cmd_count(args: argparse.Namespace) -> Outcome:
    graph = read_graph(args.file)
    params = ColoringParams.of(args.k, args.l)
    if OracleKind(args.oracle) == OracleKind.BRUTE:
        value = count_bruteforce(graph, params, _budget(args))
    else:
        value = count_subset_expansion(graph, params, _budget(args))
    return 0, str(value)


def cmd_seq(args: argparse.Namespace) -> Outcome:
    params = SeqParams.of(args.k, args.l)
    if args.n < 1:
        raise InputError(f"-n must be >= 1, got {args.n}")
    if SequenceKind(args.kind) == SequenceKind.PATH:
        values = a_seq(params, args.n)[1:]
    else:
        values = b_seq(params, args.n)
    return 0, " ".join(str(v) for v in values)


def cmd_recurrence(args: argparse.Namespace) -> Outcome:
    params = SeqParams.of(args.k, args.l)
    terms = settings.verification.recurrence_terms if args.terms is None else args.terms
    max_order = settings.verification.max_recurrence_order
    if terms < 2 * max_order + 2:
        raise InputError(f"--terms must be >= {2 * max_order + 2}, got {terms}")

    kind = SequenceKind(args.kind)
    values = a_seq(params, terms)[1:] if kind == SequenceKind.PATH else b_seq(params, terms)
    recurrence = minimal_recurrence(values, max_order)

    if recurrence is None:
        parts = ["order=none"]
    else:
        parts = [f"order={recurrence.order}", f"coeffs={recurrence.format_coefficients()}"]
    if kind == SequenceKind.CYCLE:
        det, _ = hankel_det_B(params)
        parts.append(f"detB={det}")
    return 0, " ".join(parts)


def cmd_family(args: argparse.Namespace) -> Outcome:
    graph = build_family(FamilySpec.of(args.kind, args.params))
    return 0, serialize_graph(graph).rstrip("\n")


def cmd_verify_identities(args: argparse.Namespace) -> Outcome:
    service = VerificationService()
    return _report(service.verify_identities(ell=args.l, max_index=args.max), args.json)


def cmd_verify_oracle(args: argparse.Namespace) -> Outcome:
    service = VerificationService(budget=_budget(args))
    summary = service.verify_oracles(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        kl_max=args.kl_max,
        random_count=args.random_count,
        simple_max_vertices=args.simple_max_vertices,
    )
    return _report(summary, args.json)


def cmd_verify_sneaky(args: argparse.Namespace) -> Outcome:
    r, s, t = args.rst
    FamilySpec.sneaky(r, s, t)  # range check
    service = VerificationService(budget=_budget(args))
    return _report(service.verify_sneaky(r, s, t, args.l), args.json)


def cmd_verify_recurrences(args: argparse.Namespace) -> Outcome:
    service = VerificationService()
    return _report(service.verify_recurrences(kl_max=args.kl_max, terms=args.terms), args.json)


# =====================
# Parser
# =====================

def _add_kl(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("-k", type=int, required=required, help="Number of proper colors")
    parser.add_argument("-l", type=int, required=required, help="Number of wildcard colors")


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-brute-vertices", type=int, default=None,
        help=f"Brute-force vertex cap (default: {settings.budget.bruteforce_max_vertices})"
    )
    parser.add_argument(
        "--max-brute-colors", type=int, default=None,
        help=f"Brute-force k+l cap (default: {settings.budget.bruteforce_max_colors})"
    )


def _set(parser: argparse.ArgumentParser, handler: Callable[[argparse.Namespace], Outcome]) -> None:
    parser.set_defaults(handler=handler)


def build_parser() -> CliParser:
    parser = CliParser(
        prog="wildcolor",
        description="WildColor - graph colorings with wildcards",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  wildcolor chi p2.mg                      chi as a polynomial in x, y
  wildcolor count c4.mg -k 2 -l 1          count proper (2,1)-colorings
  wildcolor seq path -k 2 -l 1 -n 5        3 7 17 41 99
  wildcolor recurrence cycle -k 2 -l 1     order=3 coeffs=1,3,1 detB=-32
  wildcolor verify identities -l 1 --max 20
  wildcolor family sneaky 2 2 1 > g.mg
        """
    )
    parser.add_argument(
        "--version", action="version",
        version=f"{settings.app_name} v{settings.app_version}"
    )
    subparsers = parser.add_subparsers(dest="command", parser_class=CliParser)
    subparsers.required = True

    # chi
    chi_parser = subparsers.add_parser("chi", help="Compute chi_G(x, y) of a .mg graph")
    chi_parser.add_argument("file", help="Graph file in .mg format")
    chi_parser.add_argument(
        "--eval", nargs=2, type=int, metavar=("K", "L"),
        help="Print the value at (K, L) instead of the polynomial"
    )
    chi_parser.add_argument("--memo", choices=[m.value for m in MemoMode], default=None)
    chi_parser.add_argument("--strategy", choices=[s.value for s in EdgeStrategy], default=None)
    _set(chi_parser, cmd_chi)

    # count
    count_parser = subparsers.add_parser("count", help="Count proper (k,l)-colorings directly")
    count_parser.add_argument("file", help="Graph file in .mg format")
    _add_kl(count_parser)
    count_parser.add_argument(
        "--oracle", choices=[o.value for o in OracleKind], default=OracleKind.BRUTE.value
    )
    _add_budget(count_parser)
    _set(count_parser, cmd_count)

    # seq
    seq_parser = subparsers.add_parser("seq", help="Tabulate a_1..a_N (path) or b_1..b_N (cycle)")
    seq_parser.add_argument("kind", choices=[s.value for s in SequenceKind])
    _add_kl(seq_parser)
    seq_parser.add_argument("-n", type=int, required=True, help="Number of terms")
    _set(seq_parser, cmd_seq)

    # recurrence
    rec_parser = subparsers.add_parser("recurrence", help="Find the minimal linear recurrence")
    rec_parser.add_argument("kind", choices=[s.value for s in SequenceKind])
    _add_kl(rec_parser)
    rec_parser.add_argument(
        "--terms", type=int, default=None,
        help=f"Terms fed to the solver (default: {settings.verification.recurrence_terms})"
    )
    _set(rec_parser, cmd_recurrence)

    # family
    family_parser = subparsers.add_parser("family", help="Print a named graph in .mg format")
    family_parser.add_argument("kind", help="path | cycle | complete | sneaky")
    family_parser.add_argument("params", nargs="+", type=int, help="n, or r s t for sneaky")
    _set(family_parser, cmd_family)

    # verify
    verify_parser = subparsers.add_parser("verify", help="Run a verification sweep")
    verify_sub = verify_parser.add_subparsers(dest="target", parser_class=CliParser)
    verify_sub.required = True

    ident_parser = verify_sub.add_parser("identities", help="Identity grids")
    ident_parser.add_argument("-l", type=int, default=1, help="Wildcard count (default: 1)")
    ident_parser.add_argument("--max", type=int, default=20, help="Largest index (default: 20)")
    _set(ident_parser, cmd_verify_identities)

    oracle_parser = verify_sub.add_parser("oracle", help="chi against the counting oracles")
    oracle_parser.add_argument(
        "--max-vertices", type=int, default=None,
        help=f"Random multigraph vertex cap (default: {settings.verification.random_max_vertices})"
    )
    oracle_parser.add_argument(
        "--max-edges", type=int, default=None,
        help=f"Random multigraph edge cap (default: {settings.verification.random_max_edges})"
    )
    oracle_parser.add_argument(
        "--kl-max", type=int, default=3, help="(k,l) grid bound (default: 3)"
    )
    oracle_parser.add_argument(
        "--random-count", type=int, default=None,
        help=f"Random multigraphs (default: {settings.verification.random_graphs})"
    )
    oracle_parser.add_argument(
        "--simple-max-vertices", type=int, default=5,
        help="Exhaustive simple-graph size (default: 5)"
    )
    _add_budget(oracle_parser)
    _set(oracle_parser, cmd_verify_oracle)

    sneaky_parser = verify_sub.add_parser("sneaky", help="Sneaky-graph reconstruction")
    sneaky_parser.add_argument("--rst", nargs=3, type=int, required=True, metavar=("R", "S", "T"))
    sneaky_parser.add_argument("-l", type=int, required=True, help="Wildcard count")
    _add_budget(sneaky_parser)
    _set(sneaky_parser, cmd_verify_sneaky)

    recur_parser = verify_sub.add_parser("recurrences", help="Cross-check, det(B) and minimality")
    recur_parser.add_argument("--kl-max", type=int, default=4, help="(k,l) grid bound (default: 4)")
    recur_parser.add_argument("--terms", type=int, default=None, help="Terms per sequence")
    _set(recur_parser, cmd_verify_recurrences)

    for sub in (ident_parser, oracle_parser, sneaky_parser, recur_parser):
        sub.add_argument("--json", action="store_true", help="Machine-readable report")

    return parser


def run(argv: Optional[Sequence[str]] = None) -> Outcome:
    """
    Run one CLI invocation.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        (exit code, stdout text); error lines are written to stderr
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        return args.handler(args)
    except WildColorError as exc:
        logger.debug("command failed", extra=exc.to_dict())
        sys.stderr.write(f"error[{exc.error_code}]: {exc.message}\n")
        return exc.exit_code, ""


def main(argv: Optional[List[str]] = None) -> None:
    """Main CLI entry point"""
    setup_logging(
        log_level=settings.monitoring.log_level,
        log_format="text",  # colored text for the terminal
        log_file=settings.monitoring.log_file,
    )
    code, output = run(argv)
    if output:
        print(output)
    sys.exit(code)


if __name__ == "__main__":
    main()
