"""Command-line interface.

Subcommands: ``check``, ``report``, ``enumerate``, ``verify``, ``examples``,
``project-gkm``.  Human-readable tables go to stdout by default; ``--json``
switches stdout to the machine-readable document (the human output never
contains information absent from the JSON).  Exit codes: 0 success/PASS,
1 violations or a failed verification, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cohomology
from .constraints import check_all
from .examples import (
    BUILTIN_NAMES,
    DegenerateDirection,
    ParamError,
    builtin,
    o_gkm_graph,
    project_gkm,
)
from .model import (
    SchemaError,
    StructureError,
    canonicalize,
    config_loads,
    config_to_dict,
    derive_weight_system,
)
from .search import (
    BudgetExceeded,
    SearchSpec,
    enumerate_configurations,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
)

_USAGE_EXIT = 2


def _emit(doc: dict, human_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        for line in human_lines:
            print(line)


def _load_config(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return config_loads(fh.read())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def _violation_table(violations) -> list[str]:
    lines = [f"{'rule':<24} {'location':<22} detail"]
    for v in violations:
        loc = ",".join(str(x) for x in v.vertices)
        if v.edges:
            loc += " " + ";".join(f"({a},{b},w{w})" for a, b, w in v.edges)
        lines.append(f"{v.rule:<24} {loc:<22} {v.detail}")
    return lines


def _cmd_check(args) -> int:
    config = _load_config(args.config)
    effective = None
    if args.effective:
        effective = True
    elif args.no_effective:
        effective = False
    report = check_all(config, effective=effective)
    doc = report.to_dict()
    human = [f"configuration: {config.label or args.config}"]
    human.append(f"pass: {report.passed}   c1: {report.c1}")
    if report.violations:
        human.extend(_violation_table(report.violations))
    _emit(doc, human, args.json)
    return 0 if report.passed else 1


def _cmd_report(args) -> int:
    config = _load_config(args.config)
    structural = check_all(config)
    if not structural.passed:
        _emit(
            structural.to_dict(),
            ["configuration fails constraint checks; no cohomology report"]
            + _violation_table(structural.violations),
            args.json,
        )
        return 1
    try:
        doc = cohomology.cohomology_report(config)
    except cohomology.CohomologyError as exc:
        _emit(
            {"error": type(exc).__name__, "detail": str(exc)},
            [f"cohomological obstruction: {exc}"],
            args.json,
        )
        return 1
    doc = {"c1": structural.c1, **doc}
    human = [
        f"configuration: {config.label or args.config}",
        f"c1 multiple:        {structural.c1}",
        f"ring multipliers q: {' '.join(doc['ring_q'])}",
        f"denominators a:     {' '.join(str(a) for a in doc['a'])}",
        f"chern (ordinary):   {' '.join(str(x) for x in doc['chern_ordinary'])}",
        "chern (equivariant expansions):",
    ]
    for m, row in enumerate(doc["chern_equivariant"], start=1):
        human.append(f"  c{m}: {row}")
    human.append(
        f"integrals: omega^5 = {doc['integrals']['omega5']}, "
        f"euler = {doc['integrals']['euler']}"
    )
    _emit(doc, human, args.json)
    return 0


def _parse_pairs(values) -> tuple[tuple[int, int], ...]:
    pairs = []
    for text in values or ():
        parts = text.split(",")
        if len(parts) != 2:
            raise ParamError(f"expected a vertex pair like 0,5 -- got {text!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return tuple(pairs)


def _spec_from_args(args) -> SearchSpec:
    disabled = set(args.no_prune or ())
    unknown = disabled - {"divisibility", "extremal", "gamma"}
    if unknown:
        raise ParamError(f"unknown pruning rules: {sorted(unknown)}")
    return SearchSpec(
        max_weight=args.max_weight,
        max_width=args.max_width,
        c1=args.c1,
        largest_from=_parse_pairs(args.largest_from),
        require_effective=args.effective,
        symmetry_gaps=args.symmetry_gaps,
        prune_divisibility="divisibility" not in disabled,
        prune_extremal="extremal" not in disabled,
        prune_gamma="gamma" not in disabled,
        node_limit=args.node_limit,
    )


def _stats_lines(stats) -> list[str]:
    parts = " ".join(f"{k}={v}" for k, v in stats.pruned.items())
    return [f"nodes explored: {stats.nodes}", f"pruned: {parts}"]


def _cmd_enumerate(args) -> int:
    spec = _spec_from_args(args)
    result = enumerate_configurations(spec, workers=args.threads)
    doc = result.to_dict()
    human = [
        f"configurations found: {len(result.configurations)}",
        f"distinct weight systems: {len(result.weight_systems())}",
    ]
    for c in result.configurations:
        ws = derive_weight_system(c)
        human.append(
            f"  gaps {c.profile.gaps}  weights "
            + " | ".join(" ".join(str(w) for w in row) for row in ws.weights)
        )
    if args.seed_stats:
        human.extend(_stats_lines(result.stats))
    print(f"wall time: {result.stats.wall_ms:.0f} ms", file=sys.stderr)
    _emit(doc, human, args.json)
    return 0


def _cmd_verify(args) -> int:
    if args.theorem == "thm1":
        report = verify_theorem1(
            max_width=args.max_width or 40,
            max_weight=args.max_weight or 4,
            workers=args.threads,
        )
    elif args.theorem == "thm2":
        report = verify_theorem2(max_width=args.max_width or 40, workers=args.threads)
    elif args.theorem == "thm3":
        report = verify_theorem3(workers=args.threads)
    else:
        if args.a is None or args.c is None:
            raise ParamError("verify thm4 requires --a and --c")
        try:
            report = verify_theorem4(args.a, args.c, workers=args.threads)
        except ValueError as exc:
            raise ParamError(str(exc)) from exc
    doc = report.to_dict()
    human = [f"{report.name}: {'PASS' if report.passed else 'FAIL'}", report.summary]
    if args.seed_stats:
        human.extend(_stats_lines(report.stats))
    _emit(doc, human, args.json)
    return 0 if report.passed else 1


def _builtin_from_args(args):
    return builtin(args.name, *(args.params or ()))


def _cmd_examples(args) -> int:
    if args.action == "list":
        for name in BUILTIN_NAMES:
            print(name)
        return 0
    config = _builtin_from_args(args)
    if args.action == "export":
        print(json.dumps(config_to_dict(config), indent=2))
        return 0
    # show
    ws = derive_weight_system(config)
    report = check_all(config)
    print(f"label:     {config.label}")
    print(f"moment:    {config.moment}")
    print(f"gaps:      {config.profile.gaps}")
    print(f"c1:        {report.c1}   pass: {report.passed}")
    for v in range(len(ws.weights)):
        print(f"  P{v}: {' '.join(str(w) for w in ws.weights[v])}")
    return 0


def _cmd_project_gkm(args) -> int:
    parts = args.xi.split(",")
    if len(parts) != 2:
        raise ParamError(f"--xi expects two integers like 1,2 -- got {args.xi!r}")
    xi = (int(parts[0]), int(parts[1]))
    config = canonicalize(project_gkm(o_gkm_graph(), xi))
    print(json.dumps(config_to_dict(config), indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamfix",
        description=(
            "Exact verifier, invariant calculator and classifier for "
            "fixed-point data of Hamiltonian circle actions (dimension 10, "
            "six fixed points)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run all constraint checks on a configuration file")
    p_check.add_argument("config")
    p_check.add_argument("--effective", action="store_true", help="require gcd of weights = 1")
    p_check.add_argument("--no-effective", action="store_true", help="ignore the file's effectiveness flag")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=_cmd_check)

    p_report = sub.add_parser("report", help="ring, Chern and localization report")
    p_report.add_argument("config")
    p_report.add_argument("--json", action="store_true")
    p_report.set_defaults(func=_cmd_report)

    p_enum = sub.add_parser("enumerate", help="exhaustive search within bounds")
    p_enum.add_argument("--max-weight", type=int, required=True)
    p_enum.add_argument("--max-width", type=int, required=True)
    p_enum.add_argument("--c1", type=int, default=None)
    p_enum.add_argument(
        "--largest-from",
        action="append",
        metavar="I,J",
        help="require the largest weight on this vertex pair (repeatable)",
    )
    p_enum.add_argument("--effective", action="store_true")
    p_enum.add_argument("--symmetry-gaps", action="store_true")
    p_enum.add_argument(
        "--no-prune",
        action="append",
        metavar="RULE",
        help="disable a pruning rule: divisibility, extremal, gamma (repeatable)",
    )
    p_enum.add_argument("--node-limit", type=int, default=None)
    p_enum.add_argument("--threads", type=int, default=None, help="worker count (default HAMFIX_THREADS or all cores)")
    p_enum.add_argument("--seed-stats", action="store_true", help="print prune counters")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run a classification verifier")
    p_verify.add_argument("theorem", choices=("thm1", "thm2", "thm3", "thm4"))
    p_verify.add_argument("--max-weight", type=int, default=None)
    p_verify.add_argument("--max-width", type=int, default=None)
    p_verify.add_argument("--a", type=int, default=None)
    p_verify.add_argument("--c", type=int, default=None)
    p_verify.add_argument("--threads", type=int, default=None)
    p_verify.add_argument("--seed-stats", action="store_true")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_ex = sub.add_parser("examples", help="builtin example configurations")
    p_ex.add_argument("action", choices=("list", "show", "export"))
    p_ex.add_argument("name", nargs="?", choices=BUILTIN_NAMES)
    p_ex.add_argument("params", nargs="*", type=int)
    p_ex.set_defaults(func=_cmd_examples)

    p_gkm = sub.add_parser(
        "project-gkm", help="project the builtin torus moment graph to a circle"
    )
    p_gkm.add_argument("--xi", default="1,2", metavar="X,Y")
    p_gkm.add_argument("--json", action="store_true")
    p_gkm.set_defaults(func=_cmd_project_gkm)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "examples" and args.action in ("show", "export") and not args.name:
        parser.error("examples show/export requires a builtin name")
    try:
        return args.func(args)
    except (SchemaError, ParamError, DegenerateDirection, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
