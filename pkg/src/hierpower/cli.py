"""Command-line front end.

Subcommands: ``classify`` (structure and regularity flags), ``measure``
(power gauges by label), ``core`` (membership check or vertex list) and
``verify`` (theorem clauses over one network or a seeded random family).
All numbers are printed exactly as ``p/q``; decimals are annotations.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from fractions import Fraction

from . import __version__
from .coalitions import members
from .documents import NetworkDocument, load_document
from .errors import (
    AllocatorError,
    CapExceededError,
    GaugeError,
    HierPowerError,
    InputError,
    NotRegularError,
)
from .games import DEFAULT_PLAYER_CAP
from .generators import generate_random
from .measures import (
    PowerGauge,
    beta_measure,
    core_vertices,
    core_violation,
    degree_measure,
    gately_measure,
    proportional_measure,
    restricted_egalitarian,
)
from .networks import DEFAULT_SUBNETWORK_CAP, HierNet, classify, partition
from .rationals import format_exact
from .verification import FAIL, PASS, SKIP, check_axioms, shapley_oracle_agrees, verify_theorems

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3

MEASURES = {
    "beta": beta_measure,
    "gately": gately_measure,
    "egalitarian": restricted_egalitarian,
    "proportional": proportional_measure,
    "degree": degree_measure,
}
GAUGE_MEASURES = ("beta", "gately", "egalitarian", "proportional")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hierpower",
        description="Power measures and Core diagnostics for directed hierarchical networks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON result document")
    common.add_argument(
        "--cap", type=int, default=DEFAULT_PLAYER_CAP,
        help="largest node count for coalition enumeration (default %(default)s)",
    )
    common.add_argument(
        "--subnetwork-cap", type=int, default=DEFAULT_SUBNETWORK_CAP,
        help="largest simple-subnetwork count to enumerate (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="network class and node partition")
    p.add_argument("input", help="network file (JSON or edge list)")

    p = sub.add_parser("measure", parents=[common], help="compute power gauges")
    p.add_argument("input", help="network file (JSON or edge list)")
    for name in MEASURES:
        p.add_argument(f"--{name}", action="store_true", help=f"include the {name} measure")
    p.add_argument("--all", action="store_true", help="include every measure")

    p = sub.add_parser("core", parents=[common], help="Core membership and vertices")
    p.add_argument("input", help="network file (JSON or edge list)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", choices=sorted(MEASURES), help="test one measure's gauge")
    group.add_argument("--vertices", action="store_true", help="list the Core vertex gauges")

    p = sub.add_parser("verify", parents=[common], help="verify theorem clauses")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="verify on one network file")
    group.add_argument("--random", type=int, metavar="COUNT", help="verify on random networks")
    p.add_argument("--nodes", type=int, default=6, help="nodes per random network (default 6)")
    p.add_argument(
        "--edge-prob", default="1/2", metavar="P",
        help="edge probability as a rational, e.g. 1/4 (default 1/2)",
    )
    p.add_argument("--seed", type=int, default=42, help="base seed (default 42)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "measure":
            return _cmd_measure(args)
        if args.command == "core":
            return _cmd_core(args)
        return _cmd_verify(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, GaugeError, AllocatorError, NotRegularError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HierPowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _load(args) -> tuple[NetworkDocument, HierNet]:
    doc = load_document(args.input)
    return doc, doc.to_network()


def _network_summary(doc: NetworkDocument, net: HierNet) -> dict:
    parts = partition(net)
    flags = classify(net, parts)
    return {
        "nodes": list(doc.labels),
        "node_count": net.n,
        "edge_count": net.edge_count(),
        "dominated": parts.dominated_count,
        "single_pred": len(parts.single_pred),
        "multi_pred": len(parts.multi_pred),
        "class": {
            "simple": flags.simple,
            "regular": flags.regular,
            "weakly_regular": flags.weakly_regular,
            "principal": flags.principal,
        },
    }


def _gauge_json(labels: tuple[str, ...], values) -> dict:
    return {
        label: {"exact": format_exact(v), "decimal": float(v)}
        for label, v in zip(labels, values)
    }


def _emit(args, payload: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in human:
            print(line)


def _coalition_labels(mask: int, labels: tuple[str, ...]) -> str:
    return "{" + ", ".join(labels[i] for i in members(mask)) + "}"


def _cmd_classify(args) -> int:
    doc, net = _load(args)
    summary = _network_summary(doc, net)
    cls = summary["class"]
    human = [
        f"nodes: {summary['node_count']}   edges: {summary['edge_count']}",
        f"dominated: {summary['dominated']}   "
        f"single-predecessor: {summary['single_pred']}   "
        f"multi-predecessor: {summary['multi_pred']}",
        "   ".join(
            f"{name.replace('_', ' ')}: {'yes' if cls[name] else 'no'}"
            for name in ("simple", "regular", "weakly_regular", "principal")
        ),
    ]
    _emit(args, {"network": summary}, human)
    return EXIT_OK


def _cmd_measure(args) -> int:
    doc, net = _load(args)
    requested = [name for name in MEASURES if getattr(args, name)]
    if args.all:
        requested = list(MEASURES)
    if not requested:
        raise InputError("choose at least one measure flag or --all")
    results = {name: tuple(MEASURES[name](net)) for name in requested}
    payload = {
        "network": _network_summary(doc, net),
        "measures": {name: _gauge_json(doc.labels, values) for name, values in results.items()},
    }
    width = max(5, *(len(label) for label in doc.labels))
    header = "node".ljust(width) + "".join(f"  {name:>14}" for name in requested)
    human = [header]
    for i, label in enumerate(doc.labels):
        row = label.ljust(width)
        row += "".join(f"  {format_exact(results[name][i]):>14}" for name in requested)
        human.append(row)
    totals = "total".ljust(width) + "".join(
        f"  {format_exact(sum(results[name], Fraction(0))):>14}" for name in requested
    )
    human.append(totals)
    _emit(args, payload, human)
    return EXIT_OK


def _cmd_core(args) -> int:
    doc, net = _load(args)
    if args.vertices:
        vertices = core_vertices(net, cap=args.subnetwork_cap)
        payload = {
            "network": _network_summary(doc, net),
            "core_vertices": [
                [format_exact(v) for v in gauge] for gauge in vertices
            ],
        }
        human = [f"{len(vertices)} distinct Core vertex gauge(s) over nodes "
                 f"({', '.join(doc.labels)}):"]
        human.extend("(" + ", ".join(format_exact(v) for v in gauge) + ")" for gauge in vertices)
        _emit(args, payload, human)
        return EXIT_OK

    measure = MEASURES[args.check]
    values = measure(net)
    gauge = values if isinstance(values, PowerGauge) else PowerGauge(tuple(values))
    violation = core_violation(net, gauge, cap=args.cap)
    payload = {
        "network": _network_summary(doc, net),
        "measure": args.check,
        "gauge": _gauge_json(doc.labels, gauge),
        "in_core": violation is None,
    }
    if violation is None:
        human = [f"gauge {args.check}: in core"]
    else:
        witness = _coalition_labels(violation.mask, doc.labels)
        payload["violation"] = {
            "coalition": [doc.labels[i] for i in members(violation.mask)],
            "assigned": format_exact(violation.assigned),
            "required": format_exact(violation.required),
            "shortfall": format_exact(violation.shortfall),
        }
        human = [
            f"gauge {args.check}: NOT in core; violating coalition {witness}: "
            f"{format_exact(violation.assigned)} < {format_exact(violation.required)} "
            f"(short by {format_exact(violation.shortfall)})"
        ]
    _emit(args, payload, human)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.input is not None:
        doc = load_document(args.input)
        nets = [doc.to_network()]
        sources = [args.input]
    else:
        if args.random < 1:
            raise InputError("--random needs a positive count")
        nets = [
            generate_random(args.nodes, Fraction(args.edge_prob), seed=args.seed + k)
            for k in range(args.random)
        ]
        sources = [f"random(nodes={args.nodes}, seed={args.seed + k})" for k in range(len(nets))]

    counts: dict[str, dict[str, int]] = {}
    first_fail: dict[str, tuple[str, str]] = {}
    single_details: dict[str, str] = {}
    order: list[str] = []
    for net, source in zip(nets, sources):
        report = verify_theorems(net, cap=args.cap)
        for clause in report.clauses:
            if clause.name not in counts:
                counts[clause.name] = {PASS: 0, FAIL: 0, SKIP: 0}
                order.append(clause.name)
            counts[clause.name][clause.status] += 1
            if clause.status == FAIL and clause.name not in first_fail:
                first_fail[clause.name] = (source, clause.detail)
            if len(nets) == 1:
                single_details[clause.name] = clause.detail

    axioms = check_axioms(gately_measure, nets)
    for name, ok in (
        ("axiom-normalisation", axioms.normalisation),
        ("axiom-normality", axioms.normality),
        ("axiom-restricted-proportionality", axioms.restricted_proportionality),
    ):
        counts[name] = {PASS: int(ok), FAIL: int(not ok), SKIP: 0}
        order.append(name)
        if not ok and axioms.witness is not None:
            first_fail[name] = (sources[axioms.witness.net_index], "axiom failed")

    small = [net for net in nets if net.n <= 6]
    if small:
        oracle_ok = all(shapley_oracle_agrees(net, cap=args.cap) for net in small)
        counts["shapley-oracle"] = {PASS: int(oracle_ok), FAIL: int(not oracle_ok), SKIP: 0}
    else:
        counts["shapley-oracle"] = {PASS: 0, FAIL: 0, SKIP: 1}
    order.append("shapley-oracle")

    failed = any(c[FAIL] for c in counts.values())
    rows = []
    for name in order:
        c = counts[name]
        status = FAIL if c[FAIL] else (PASS if c[PASS] else SKIP)
        detail = ""
        if name in first_fail:
            detail = f"first failure on {first_fail[name][0]}: {first_fail[name][1]}"
        elif len(nets) == 1:
            detail = single_details.get(name, "")
        rows.append((name, status, c, detail))

    payload = {
        "networks": len(nets),
        "clauses": [
            {"name": name, "status": status, "pass": c[PASS], "fail": c[FAIL],
             "skip": c[SKIP], "detail": detail}
            for name, status, c, detail in rows
        ],
        "ok": not failed,
    }
    width = max(len(name) for name in order)
    human = [f"verified {len(nets)} network(s)", f"{'clause'.ljust(width)}  status  pass/fail/skip"]
    for name, status, c, detail in rows:
        line = f"{name.ljust(width)}  {status:<6}  {c[PASS]}/{c[FAIL]}/{c[SKIP]}"
        if detail:
            line += f"  {detail}"
        human.append(line)
    human.append("RESULT: " + ("all clauses hold" if not failed else "FAILURES detected"))
    _emit(args, payload, human)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
