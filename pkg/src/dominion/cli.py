"""Command-line surface: compute, oracle, generate, perturb, verify-tables.

Exit codes are a stable contract: 0 success, 1 usage or parse error,
2 verification mismatch (two computation paths disagreed).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from . import closed_form, dp, families, oracle, perturbation
from .errors import DominionError, MismatchError, ParseError
from .tree import Tree, parse_edge_list, to_edge_list

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2

PERTURB_COLUMNS = (
    "h",
    "X",
    "m1",
    "gamma_before",
    "gamma_after",
    "zeta_before",
    "zeta_after",
    "envelope",
    "holds",
)


@dataclass(frozen=True)
class ReportRow:
    """One computed result; `zeta` is a decimal string so arbitrarily large
    counts survive any output format. `method` names the path that produced
    the values."""

    family: str
    n_vertices: int
    gamma: int
    zeta: str
    method: str

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n_vertices": self.n_vertices,
            "gamma": self.gamma,
            "zeta": self.zeta,
            "method": self.method,
        }


def _looks_like_spec(text: str) -> bool:
    kind = text.partition(":")[0].strip()
    return ":" in text and kind in families.KINDS


def _load_input(text: str) -> tuple[str, Tree, families.FamilySpec | None]:
    """Resolve a CLI input as either a family-spec string or an edge-list file."""
    if _looks_like_spec(text):
        spec = families.parse_family_spec(text)
        return spec.spec_string(), families.build_tree(spec), spec
    if os.path.exists(text):
        with open(text, encoding="utf-8") as handle:
            return text, parse_edge_list(handle.read()), None
    raise ParseError(f"{text!r} is neither a family spec nor an existing file")


def _has_closed_form(spec: families.FamilySpec) -> bool:
    if spec.kind == "random":
        return False
    if spec.kind == "binary" and spec.deleted_leaves:
        return False
    return True


def compute_row(text: str) -> ReportRow:
    """DP result for the input; family specs with a closed form are
    cross-checked against it and raise MismatchError on disagreement."""
    source, tree, spec = _load_input(text)
    dp_result = dp.dp_count(tree)
    method = "dp"
    if spec is not None and _has_closed_form(spec):
        formula = closed_form.summary_for(spec)
        if formula != dp_result:
            raise MismatchError(
                f"{source}: closed form gives (gamma={formula.gamma}, zeta={formula.zeta}) "
                f"but the dynamic program gives (gamma={dp_result.gamma}, zeta={dp_result.zeta})"
            )
        # For paths the count itself came from the DP; report that honestly.
        method = "dp" if spec.kind == "path" else "closed_form"
    return ReportRow(source, tree.vertex_count, dp_result.gamma, str(dp_result.zeta), method)


def _emit_row(row: ReportRow, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(row.to_dict()))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["family", "n_vertices", "gamma", "zeta", "method"])
        writer.writerow([row.family, row.n_vertices, row.gamma, row.zeta, row.method])
    else:
        print(f"family     {row.family}")
        print(f"vertices   {row.n_vertices}")
        print(f"gamma      {row.gamma}")
        print(f"zeta       {row.zeta}")
        print(f"method     {row.method}")


def _cmd_compute(args) -> int:
    _emit_row(compute_row(args.input), args.format)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    source, tree, _ = _load_input(args.input)
    if args.enumerate:
        witnesses = oracle.enumerate_min_sets(tree, cap=args.cap)
        for members in witnesses.sets:
            print(" ".join(str(v) for v in members))
        return EXIT_OK
    summary = oracle.oracle_count(tree, cap=args.cap)
    row = ReportRow(source, tree.vertex_count, summary.gamma, str(summary.zeta), "oracle")
    _emit_row(row, args.format)
    return EXIT_OK


def _cmd_generate(args) -> int:
    spec = families.parse_family_spec(args.spec)
    text = to_edge_list(families.build_tree(spec))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_OK


def _format_deleted(deleted: frozenset[str]) -> str:
    return "+".join(sorted(deleted, key=lambda s: int(s[1:])))


def _cmd_perturb(args) -> int:
    h = args.height
    if args.all_single_leaves:
        reports = [
            perturbation.analyze_deletion(h, {leaf})
            for leaf in families.level_labels(h, h)
        ]
    elif args.delete is not None:
        victims = frozenset(args.delete.split("+")) if args.delete else frozenset()
        reports = [perturbation.analyze_deletion(h, victims)]
    elif args.random_size is not None:
        victims = perturbation.random_leaf_subset(h, args.random_size, args.seed)
        reports = [perturbation.analyze_deletion(h, victims)]
    else:
        reports = [perturbation.analyze_deletion(h, frozenset())]
    writer = csv.writer(sys.stdout)
    writer.writerow(PERTURB_COLUMNS)
    for rep in reports:
        writer.writerow(
            [
                rep.h,
                _format_deleted(rep.deleted),
                rep.m1,
                rep.gamma_before,
                rep.gamma_after,
                rep.zeta_before,
                rep.zeta_after,
                rep.envelope,
                "true" if rep.bound_holds else "false",
            ]
        )
    return EXIT_OK


@dataclass(frozen=True)
class CheckCell:
    """One verification record: the same quantity computed several ways."""

    table: int
    family: str
    results: dict

    @property
    def ok(self) -> bool:
        values = list(self.results.values())
        return all(v == values[0] for v in values)

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "family": self.family,
            "ok": self.ok,
            "methods": {
                name: {"gamma": summary.gamma, "zeta": str(summary.zeta)}
                for name, summary in self.results.items()
            },
        }


def _table1_cells() -> list[CheckCell]:
    """Alternating combs, n = 2..10, each computed three independent ways."""
    cells = []
    for kind in ("alt-even", "alt-odd"):
        parity = kind.removeprefix("alt-")
        for n in range(2, 11):
            tree = families.make_alternating(n, parity)
            cells.append(
                CheckCell(
                    1,
                    f"{kind}:n={n}",
                    {
                        "closed_form": closed_form.alternating_summary(n, parity),
                        "dp": dp.dp_count(tree),
                        "oracle": oracle.oracle_count(tree),
                    },
                )
            )
    return cells


def _table2_cells() -> list[CheckCell]:
    """Each family's formula against the DP on concrete instances."""
    cells = []
    for n in range(4, 11):
        cases = [
            (f"comb:n={n}", closed_form.uniform_pendant_summary(n, 1),
             families.make_uniform_pendant(n, 1)),
            (f"uniform:n={n},r=2", closed_form.uniform_pendant_summary(n, 2),
             families.make_uniform_pendant(n, 2)),
            (f"interior:n={n}", closed_form.interior_pendant_summary(n),
             families.make_interior_pendant(n)),
            (f"alt-even:n={n}", closed_form.alternating_summary(n, "even"),
             families.make_alternating(n, "even")),
            (f"alt-odd:n={n}", closed_form.alternating_summary(n, "odd"),
             families.make_alternating(n, "odd")),
        ]
        for family, formula, tree in cases:
            cells.append(CheckCell(2, family, {"closed_form": formula, "dp": dp.dp_count(tree)}))
    for h in range(1, 7):
        cells.append(
            CheckCell(
                2,
                f"binary:h={h}",
                {
                    "closed_form": closed_form.binary_summary(h),
                    "dp": dp.dp_count(families.make_complete_binary(h)),
                },
            )
        )
    return cells


def verification_cells() -> list[CheckCell]:
    return _table1_cells() + _table2_cells()


def _cmd_verify(args) -> int:
    cells = verification_cells()
    failures = [cell for cell in cells if not cell.ok]
    if args.format == "json":
        payload = {
            "ok": not failures,
            "table1_cells": 2 * sum(1 for c in cells if c.table == 1),
            "table2_cells": 2 * sum(1 for c in cells if c.table == 2),
            "cells": [cell.to_dict() for cell in cells],
        }
        print(json.dumps(payload))
    else:
        for cell in failures:
            parts = ", ".join(
                f"{name}=(gamma={summary.gamma}, zeta={summary.zeta})"
                for name, summary in cell.results.items()
            )
            print(f"MISMATCH {cell.family}: {parts}")
        t1 = 2 * sum(1 for c in cells if c.table == 1)
        t2 = 2 * sum(1 for c in cells if c.table == 2)
        print(f"table 1: {t1} cells checked (alternating combs, n=2..10, 3 methods)")
        print(f"table 2: {t2} cells checked (family formulas vs dynamic program)")
        print("all checks passed" if not failures else f"{len(failures)} records disagree")
    return EXIT_OK if not failures else EXIT_MISMATCH


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, keeping argparse's 2 for mismatches
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_format_flags(parser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--json", dest="format", action="store_const", const="json", help="emit JSON"
    )
    group.add_argument(
        "--csv", dest="format", action="store_const", const="csv", help="emit CSV"
    )
    parser.set_defaults(format="human")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="dominion",
        description="Exact domination numbers and minimum-dominating-set counts for trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="gamma and zeta via the dynamic program (plus formula cross-check)"
    )
    p_compute.add_argument("input", help="edge-list file or family spec such as binary:h=3")
    _add_format_flags(p_compute)
    p_compute.set_defaults(func=_cmd_compute)

    p_oracle = sub.add_parser("oracle", help="brute-force count or enumeration (small trees)")
    p_oracle.add_argument("input", help="edge-list file or family spec")
    p_oracle.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP,
                          help="vertex-count limit (default %(default)s)")
    p_oracle.add_argument("--enumerate", action="store_true",
                          help="print every minimum dominating set, one per line")
    _add_format_flags(p_oracle)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_generate = sub.add_parser("generate", help="write a family as an edge-list file")
    p_generate.add_argument("spec", help="family spec, e.g. uniform:n=3,r=2")
    p_generate.add_argument("out", help="output path, or - for stdout")
    p_generate.set_defaults(func=_cmd_generate)

    p_perturb = sub.add_parser(
        "perturb", help="leaf-deletion reports for complete binary trees (CSV)"
    )
    p_perturb.add_argument("--h", dest="height", type=int, required=True, help="tree height")
    group = p_perturb.add_mutually_exclusive_group()
    group.add_argument("--delete", help="leaves to delete, e.g. b8+b11")
    group.add_argument("--random-size", type=int, help="draw a random leaf set of this size")
    group.add_argument("--all-single-leaves", action="store_true",
                       help="one report per bottom-level leaf")
    p_perturb.add_argument("--seed", type=int, default=0, help="seed for --random-size")
    p_perturb.set_defaults(func=_cmd_perturb)

    p_verify = sub.add_parser(
        "verify-tables", help="recompute every reference cell several ways; exit 2 on mismatch"
    )
    _add_format_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MismatchError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except DominionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
