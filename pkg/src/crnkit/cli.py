"""Command-line interface: ``crn analyze|decompose|check|numbers|steady-state``.

Exit codes: 0 success / affirmative verdict, 1 usage or parse error,
2 internal invariant violation, 3 negative verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import (
    DimensionError,
    Kinetics,
    NonPositivePointError,
    network_numbers,
    sfrf,
    is_steady_state,
    subnetwork,
)
from .decomposition import (
    InternalError,
    PartitionError,
    find_independent_decomposition,
    verify_decomposition,
)
from .model import Network, NetworkError
from .parser import parse_file
from .report import (
    build_report,
    format_numbers_table,
    numbers_to_dict,
    render_text,
    rank_equation,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2
EXIT_NEGATIVE = 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # The exit-code contract reserves 1 for usage errors (argparse uses 2).
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="crn",
        description="Analyze chemical reaction networks: independent decompositions, "
        "network numbers, deficiency theorems, and steady-state checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis report")
    p.add_argument("file", help="reaction network file (.crn)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("decompose", help="finest independent decomposition")
    p.add_argument("file")
    p.add_argument(
        "--contains",
        metavar="LABEL",
        help="check whether {LABEL} and its complement form an independent decomposition",
    )

    p = sub.add_parser("check", help="verify a user-supplied partition")
    p.add_argument("file")
    p.add_argument(
        "--parts",
        required=True,
        help="partition by labels: ',' within a part, '|' between parts",
    )

    p = sub.add_parser("numbers", help="network numbers table")
    p.add_argument("file")
    p.add_argument("--parts", help="optionally add one column per part")

    p = sub.add_parser("steady-state", help="test a point for steady state")
    p.add_argument("file")
    p.add_argument("--rates", required=True, help="per-reaction rate constants, e.g. R1=1,R2=2")
    p.add_argument("--point", required=True, help="per-species concentrations, e.g. X1=2,X2=3")
    p.add_argument("--tol", type=float, default=1e-9, help="relative tolerance (default 1e-9)")
    return parser


def _parse_parts(spec: str, net: Network) -> list[list[int]]:
    index = net.label_index()
    parts: list[list[int]] = []
    seen: set[str] = set()
    for chunk in spec.split("|"):
        labels = [x.strip() for x in chunk.split(",") if x.strip()]
        if not labels:
            raise _UsageError("empty part in --parts")
        part = []
        for label in labels:
            if label not in index:
                raise _UsageError(f"unknown reaction label {label!r}")
            if label in seen:
                raise _UsageError(f"reaction label {label!r} listed twice")
            seen.add(label)
            part.append(index[label])
        parts.append(part)
    missing = [lab for lab in net.labels if lab not in seen]
    if missing:
        raise _UsageError(f"labels not covered by --parts: {', '.join(missing)}")
    return parts


def _parse_assignments(spec: str, what: str) -> dict[str, float]:
    values: dict[str, float] = {}
    for chunk in spec.split(","):
        item = chunk.strip()
        if not item:
            continue
        if "=" not in item:
            raise _UsageError(f"expected NAME=VALUE in --{what}, got {item!r}")
        name, _, raw = item.partition("=")
        name = name.strip()
        try:
            value = float(raw.strip())
        except ValueError:
            raise _UsageError(f"invalid number {raw.strip()!r} for {name!r}") from None
        if name in values:
            raise _UsageError(f"{name!r} assigned twice in --{what}")
        values[name] = value
    return values


def _cmd_analyze(args: argparse.Namespace, net: Network) -> int:
    report = build_report(net).to_dict()
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report), end="")
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace, net: Network) -> int:
    if args.contains is not None:
        index = net.label_index()
        if args.contains not in index:
            raise _UsageError(f"unknown reaction label {args.contains!r}")
        chosen = index[args.contains]
        rest = [i for i in range(net.reaction_count) if i != chosen]
        if not rest:
            print(f"{{{args.contains}}} is the whole network (trivial decomposition)")
            return EXIT_OK
        rep = verify_decomposition(net, [[chosen], rest])
        eq = rank_equation(rep.network_rank, list(rep.part_ranks))
        if rep.independent:
            print(
                f"{{{args.contains}}} and its complement form an independent "
                f"decomposition ({eq})"
            )
            return EXIT_OK
        print(
            f"{{{args.contains}}} and its complement do not form an independent "
            f"decomposition ({eq})"
        )
        return EXIT_NEGATIVE

    decomposition = find_independent_decomposition(net)
    if decomposition is None:
        print("trivial only")
        return EXIT_NEGATIVE
    for k, part in enumerate(decomposition.labels(net), 1):
        print(f"P{k}: {', '.join(part)}")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, net: Network) -> int:
    parts = _parse_parts(args.parts, net)
    rep = verify_decomposition(net, parts)
    eq = rank_equation(rep.network_rank, list(rep.part_ranks))
    verdict = "independent" if rep.independent else "not independent"
    print(f"rank condition: {eq} ({verdict})")
    inc_eq = rank_equation(rep.incidence_network_rank, list(rep.incidence_part_ranks))
    inc_verdict = (
        "incidence independent" if rep.incidence_independent else "not incidence independent"
    )
    print(f"incidence rank condition: {inc_eq} ({inc_verdict})")
    return EXIT_OK if rep.independent else EXIT_NEGATIVE


def _cmd_numbers(args: argparse.Namespace, net: Network) -> int:
    columns = [("N", numbers_to_dict(network_numbers(net)))]
    if args.parts:
        parts = _parse_parts(args.parts, net)
        for k, part in enumerate(parts, 1):
            columns.append(
                (f"N{k}", numbers_to_dict(network_numbers(subnetwork(net, part))))
            )
    print(format_numbers_table(columns))
    return EXIT_OK


def _cmd_steady_state(args: argparse.Namespace, net: Network) -> int:
    rates_by_label = _parse_assignments(args.rates, "rates")
    point_by_name = _parse_assignments(args.point, "point")

    missing = [lab for lab in net.labels if lab not in rates_by_label]
    if missing:
        raise _UsageError(f"missing rate constants for: {', '.join(missing)}")
    unknown = [lab for lab in rates_by_label if lab not in net.labels]
    if unknown:
        raise _UsageError(f"unknown reaction labels in --rates: {', '.join(unknown)}")
    names = net.species_names
    missing = [name for name in names if name not in point_by_name]
    if missing:
        raise _UsageError(f"missing coordinates for species: {', '.join(missing)}")
    unknown = [name for name in point_by_name if name not in names]
    if unknown:
        raise _UsageError(f"unknown species in --point: {', '.join(unknown)}")

    rates = [rates_by_label[lab] for lab in net.labels]
    x = [point_by_name[name] for name in names]
    try:
        kinetics = Kinetics.mass_action(net, rates)
        f = sfrf(net, kinetics, x)
        steady = is_steady_state(net, kinetics, x, tol=args.tol)
    except (DimensionError, NonPositivePointError, ValueError) as exc:
        raise _UsageError(str(exc)) from None
    formatted = ", ".join(
        f"{name}: {value + 0.0:.12g}" for name, value in zip(names, f)
    )  # +0.0 folds negative zero into zero
    print(f"f(x) = ({formatted})")
    print("steady state" if steady else "not a steady state")
    return EXIT_OK if steady else EXIT_NEGATIVE


_HANDLERS = {
    "analyze": _cmd_analyze,
    "decompose": _cmd_decompose,
    "check": _cmd_check,
    "numbers": _cmd_numbers,
    "steady-state": _cmd_steady_state,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        net = parse_file(args.file)
    except (NetworkError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args, net)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NetworkError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
