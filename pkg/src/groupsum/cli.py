"""Command-line front end.

Subcommands: phi, q, graph, verify-main, criterion, tables, sweep.
Group specs: cyclic:N, abelian:d1xd2x..., dihedral:M, dicyclic:M, sym:K,
alt:K, sdp:A:B:R, prod:<spec>,<spec>, file:<path.json>.

Exit status: 0 on success / all verdicts passing, 1 when any verdict
fails (a counterexample is printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from functools import partial

from . import numtheory, powergraph, verify
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupValidationError,
    OrderCapError,
    SemidirectSpec,
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    semidirect_cyclic,
    symmetric,
)


class SpecError(ValueError):
    """Malformed group spec (a usage error)."""


def parse_group_spec(spec: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from its spec string (see module docstring)."""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "cyclic":
            return cyclic(int(rest), cap)
        if kind == "abelian":
            return abelian([int(d) for d in rest.split("x")], cap)
        if kind == "dihedral":
            return dihedral(int(rest), cap)
        if kind == "dicyclic":
            return dicyclic(int(rest), cap)
        if kind == "sym":
            return symmetric(int(rest), cap)
        if kind == "alt":
            return alternating(int(rest), cap)
        if kind == "sdp":
            a, b, r = (int(x) for x in rest.split(":"))
            return semidirect_cyclic(SemidirectSpec(a, b, r), cap)
        if kind == "prod":
            left, right = _split_prod(rest)
            return direct_product(
                parse_group_spec(left, cap), parse_group_spec(right, cap), cap
            )
        if kind == "file":
            with open(rest, "r", encoding="utf-8") as handle:
                return FiniteGroup.from_json(handle.read())
    except (ValueError, OSError) as exc:
        if isinstance(exc, (OrderCapError, SpecError)):
            raise
        raise SpecError(f"bad group spec {spec!r}: {exc}") from exc
    raise SpecError(f"unknown group spec kind {kind!r}")


def _split_prod(rest: str) -> tuple[str, str]:
    # only prod specs contain commas, so try each split point
    positions = [i for i, ch in enumerate(rest) if ch == ","]
    if not positions:
        raise SpecError("prod spec needs two comma-separated specs")
    for pos in positions:
        left, right = rest[:pos], rest[pos + 1 :]
        if _looks_like_spec(left) and _looks_like_spec(right):
            return left, right
    return rest[: positions[0]], rest[positions[0] + 1 :]


_KINDS = {"cyclic", "abelian", "dihedral", "dicyclic", "sym", "alt", "sdp", "prod", "file"}


def _looks_like_spec(s: str) -> bool:
    kind = s.partition(":")[0]
    if kind not in _KINDS:
        return False
    if kind == "prod":
        return "," in s
    return True


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise SpecError(f"bad range {text!r}: expected A..B")
    return int(lo), int(hi)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupsum",
        description="Totient sums, power graphs, and exact verification for finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices):
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                       help="maximum constructible group order")

    p_phi = sub.add_parser("phi", help="totient sum of a group, or of C_n via --n")
    p_phi.add_argument("--group", default=None)
    p_phi.add_argument("--n", type=int, default=None)
    common(p_phi, ["text", "json"])

    p_q = sub.add_parser("q", help="the rational Q of n, reduced")
    p_q.add_argument("--n", type=int, required=True)
    common(p_q, ["text", "json"])

    p_graph = sub.add_parser("graph", help="directed power graph of a group")
    p_graph.add_argument("--group", required=True)
    common(p_graph, ["dot", "json"])

    p_vm = sub.add_parser("verify-main", help="maximality checks over the catalog")
    p_vm.add_argument("--n", type=int, default=None)
    p_vm.add_argument("--range", dest="range_", default=None, metavar="A..B")
    p_vm.add_argument("--jobs", type=int, default=1)
    common(p_vm, ["text", "json", "csv"])

    p_cr = sub.add_parser("criterion", help="normal-Sylow witness criterion for a group")
    p_cr.add_argument("--group", required=True)
    common(p_cr, ["text", "json"])

    p_tb = sub.add_parser("tables", help="reproduce the tabulated Q values and spot checks")
    common(p_tb, ["text", "json"])

    p_sw = sub.add_parser("sweep", help="exhaustive arithmetic invariants up to a limit")
    p_sw.add_argument("--limit", type=int, default=10000)
    common(p_sw, ["text", "json"])

    return parser


def _cmd_phi(args) -> int:
    if (args.group is None) == (args.n is None):
        raise SpecError("phi needs exactly one of --group or --n")
    if args.group is not None:
        value = parse_group_spec(args.group, args.cap).phi()
        label = args.group
    else:
        value = numtheory.phi_cyclic_sum(args.n)
        label = f"cyclic:{args.n}"
    if args.format == "json":
        _emit(json.dumps({"group": label, "phi": value}, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"{value}\n", args.out)
    return 0


def _cmd_q(args) -> int:
    value = numtheory.q_of(args.n)
    if args.format == "json":
        _emit(
            json.dumps({"n": args.n, "Q": numtheory.format_rational(value)}, sort_keys=True)
            + "\n",
            args.out,
        )
    else:
        _emit(numtheory.format_rational(value) + "\n", args.out)
    return 0


def _cmd_graph(args) -> int:
    graph = powergraph.build(parse_group_spec(args.group, args.cap))
    if args.format == "json":
        _emit(powergraph.export_json(graph) + "\n", args.out)
    else:
        _emit(powergraph.export_dot(graph), args.out)
    return 0


def _cmd_verify_main(args) -> int:
    if (args.n is None) == (args.range_ is None):
        raise SpecError("verify-main needs exactly one of --n or --range")
    if args.n is not None:
        ns = [args.n]
    else:
        lo, hi = _parse_range(args.range_)
        ns = list(range(lo, hi + 1))
    worker = partial(verify.verify_main, cap=args.cap)
    if args.jobs > 1 and len(ns) > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            reports = pool.map(worker, ns)
    else:
        reports = [worker(n) for n in ns]

    if args.format == "csv":
        _emit(verify.reports_to_csv(reports), args.out)
    elif args.format == "json":
        _emit(verify.reports_to_json(reports) + "\n", args.out)
    else:
        lines = []
        for report in reports:
            status = "pass" if report.passed else "FAIL"
            lines.append(
                f"n={report.n}: phi(C_n)={report.phi_cyclic}, "
                f"{len(report.rows)} groups, {status}"
            )
            for key, verdict in report.verdicts.items():
                if not verdict.passed:
                    lines.append(f"  {key}: {verdict.detail} {verdict.counterexample}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_criterion(args) -> int:
    group = parse_group_spec(args.group, args.cap)
    verdict, outcomes = verify.verify_criterion(group)
    contra = verify.verify_contrapositive(group)
    n = group.order
    passed = verdict.passed and contra.passed

    if args.format == "json":
        payload = {
            "group": group.name,
            "n": n,
            "witnesses": [
                {
                    "element": o.witness,
                    "order": o.witness_order,
                    "sylow_prime": o.sylow_prime,
                    "sylow_order": o.sylow_order,
                    "unique": o.unique,
                    "normal": o.normal,
                    "cyclic": o.cyclic,
                    "contained_in_gen": o.contained_in_gen,
                    "satisfied": o.satisfied,
                }
                for o in outcomes
            ],
            "verdicts": {
                "thm-overall": verdict.to_json_dict(),
                "cor-contrapositive": contra.to_json_dict(),
            },
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
        return 0 if passed else 1

    lines = []
    if n == 1:
        lines.append("no witness; trivial group")
    else:
        fact = numtheory.factorize(n)
        q = numtheory.q_of(fact)
        p = fact.largest_prime
        orders = group.element_orders()
        best = max(q * numtheory.totient(o) for o in set(orders))
        count = group.count_sylow(p)
        if outcomes:
            for o in outcomes:
                tag = "ok" if o.satisfied else "VIOLATED"
                extra = " (identity exception)" if o.identity_exception else ""
                lines.append(
                    f"witness {o.witness} (order {o.witness_order}): "
                    f"Sylow-{o.sylow_prime} of order {o.sylow_order} "
                    f"unique={o.unique} normal={o.normal} cyclic={o.cyclic} "
                    f"in <g>={o.contained_in_gen} [{tag}]{extra}"
                )
        else:
            best_str = numtheory.format_rational(best)
            if best == n:
                comparison = f"n = Q*phi(o(g)) = {best_str}"
            else:
                comparison = f"max Q*phi(o(g)) = {best_str} < n = {n}"
            lines.append(f"no witness; {comparison}; Sylow-{p} count = {count}")
        lines.append(f"contrapositive: {contra.detail} [{'ok' if contra.passed else 'VIOLATED'}]")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if passed else 1


def _cmd_tables(args) -> int:
    rows = numtheory.table1()
    spot = verify.table2_spot_check()
    all_ok = all(v.passed for v in spot.values())

    if args.format == "json":
        payload = {
            "table1": [
                {
                    "ell": r.ell,
                    "prime": r.prime,
                    "q_first": numtheory.format_rational(r.q_first),
                    "q_skip": None if r.q_skip is None else numtheory.format_rational(r.q_skip),
                }
                for r in rows
            ],
            "table2": {key: v.to_json_dict() for key, v in sorted(spot.items())},
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
        return 0 if all_ok else 1

    lines = ["special values of Q:", "  ell  prime  Q(first)  Q(skip)"]
    for r in rows:
        skip = "*" if r.q_skip is None else numtheory.format_rational(r.q_skip)
        lines.append(
            f"  {r.ell:>3}  {r.prime:>5}  {numtheory.format_rational(r.q_first):>8}  {skip:>8}"
        )
    lines.append("")
    lines.append("exceptional-case spot checks (minimal exponents):")
    for key, v in spot.items():
        status = "reproduced" if v.passed else "NOT REPRODUCED"
        lines.append(
            f"  {key}: n={v.n} o(g)={v.witness_order} "
            f"n/phi(o(g))={numtheory.format_rational(v.ratio)} "
            f"{v.case.relation} Q={numtheory.format_rational(v.q)} -- "
            f"{v.case.printed} {v.case.relation} Q {status}"
        )
        for note in v.notes:
            lines.append(f"      note: {note}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all_ok else 1


def _cmd_sweep(args) -> int:
    verdicts = verify.verify_numtheory_sweep(args.limit)
    if args.format == "json":
        _emit(verify.verdicts_to_json(verdicts) + "\n", args.out)
    else:
        lines = []
        for key in sorted(verdicts):
            v = verdicts[key]
            status = "pass" if v.passed else "FAIL"
            suffix = "" if v.counterexample is None else f" counterexample: {v.counterexample}"
            lines.append(f"{key}: {status} ({v.detail}){suffix}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(v.passed for v in verdicts.values()) else 1


_COMMANDS = {
    "phi": _cmd_phi,
    "q": _cmd_q,
    "graph": _cmd_graph,
    "verify-main": _cmd_verify_main,
    "criterion": _cmd_criterion,
    "tables": _cmd_tables,
    "sweep": _cmd_sweep,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (SpecError, OrderCapError, GroupValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
