"""Command line entry point: catalog, analyze, verify, refute."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .action import DEFAULT_BUDGET, full_aut, inner_action
from .catalog import catalog_entry, catalog_names
from .errors import BadAction, BudgetExceeded, InputError, NotNormal
from .graph import build_graph, export_dot
from .io import FAMILIES, action_from_spec, group_from_spec, load_document
from .verifier import analyze, corollary_scans, refute_by_aut_clique

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _family_group(text: str):
    """`kind:a,b` shorthand, e.g. sl2:7 or elementary_abelian:3,2."""
    kind, _, args = text.partition(":")
    if kind not in FAMILIES:
        return None
    names = FAMILIES[kind][1]
    values = [int(a) for a in args.split(",") if a] if args else []
    if len(values) != len(names):
        raise InputError(f"{kind} takes {len(names)} parameter(s): {', '.join(names)}")
    return group_from_spec({"kind": kind, "params": dict(zip(names, values))})


def resolve_group(text: str):
    """Returns (group, named actions, expected by action, named elements)."""
    if text in catalog_names():
        E = catalog_entry(text)
        return E.group, dict(E.actions), dict(E.expected), E.data.get("reps")
    if Path(text).is_file():
        doc = load_document(text)
        G = group_from_spec(doc["group"])
        return G, {k: v for k, v in doc.get("actions", {}).items()}, {}, None
    G = _family_group(text)
    if G is None:
        raise InputError(f"{text!r} is not a catalog name, a file, or a kind:params shorthand")
    return G, {}, {}, None


def resolve_action(G, actions: dict, text: str, budget: int):
    if text == "inner":
        return inner_action(G)
    if text == "full_aut":
        return full_aut(G, budget)
    if text in actions:
        a = actions[text]
        return a if not isinstance(a, dict) else action_from_spec(G, a, budget=budget)
    if Path(text).is_file():
        spec = json.loads(Path(text).read_text())
        return action_from_spec(G, spec, budget=budget)
    known = ", ".join(["inner", "full_aut", *actions])
    raise InputError(f"unknown action {text!r}; known: {known}")


def _line(ok: bool, text: str) -> str:
    return f"{'PASS' if ok else 'FAIL'}  {text}"


def cmd_catalog(args) -> int:
    for name in catalog_names():
        E = catalog_entry(name)
        print(f"{name:14s} |G|={E.group.order:<6d} actions={','.join(E.actions)}  {E.description}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    G, actions, expected, named = resolve_group(args.group)
    A = resolve_action(G, actions, args.action, args.budget)
    report = analyze(G, A, expected.get(args.action), action_name=args.action, named=named)
    print(f"group {G.name} (order {G.order}), action {args.action}")
    print(f"orbits {report.orbit_sizes}")
    print(f"shape {report.shape['text']}")
    print(f"case {report.theorem_case['tag']} {report.theorem_case['flags'] or ''}".rstrip())
    for k, v in report.checklist.items():
        if v["status"] != "n/a":
            print(f"  checklist ({k}) {v['status']}")
    for k, v in report.expected.items():
        print("  " + _line(v["match"], f"expected {k}: {v['expected']} got {v['actual']}"))
    if args.json:
        Path(args.json).write_text(report.to_json())
    if args.dot:
        from .action import orbit_partition
        g = build_graph(G, orbit_partition(G, A), {"group": G.name, "action": args.action})
        Path(args.dot).write_text(export_dot(g, f"{G.name} {args.action}"))
    return EXIT_OK if report.passed else EXIT_FAIL


def _verify_entry(name: str):
    E = catalog_entry(name)
    out = []
    for an, A in E.actions.items():
        r = analyze(E.group, A, E.expected.get(an), action_name=an, named=E.data.get("reps"))
        out.append((name, an, r))
    return out


def cmd_verify(args) -> int:
    if not args.all:
        print("verify needs --all", file=sys.stderr)
        return EXIT_INPUT
    names = catalog_names()
    with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
        results = [r for batch in pool.map(_verify_entry, names) for r in batch]
    ok = True
    for name, an, r in results:
        bad = [k for k, v in r.checklist.items() if v["status"] == "fail"]
        bad += [k for k, v in r.expected.items() if not v["match"]]
        good = r.passed and sum(r.orbit_sizes) == r.group["order"]
        ok &= good
        detail = f"{name}/{an}: {r.shape['text']}, {r.theorem_case['tag']}"
        print(_line(good, detail + (f" [{', '.join(bad)}]" if bad else "")))
    scans = corollary_scans([catalog_entry(n) for n in names])
    for key in ("C1", "C2", "C3", "C4", "C5"):
        recs = scans[key]
        good = all(r["ok"] for r in recs)
        ok &= good
        print(_line(good, f"corollary scan {key}: {len(recs)} instance(s)"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_refute(args) -> int:
    G, _, _, _ = resolve_group(args.group)
    w = refute_by_aut_clique(G, args.budget)
    if w is None:
        print(f"no witness for {G.name}: no four pairwise-commuting elements lie in distinct Aut-orbits")
        return EXIT_FAIL
    print(f"witness for {G.name} (|Aut| = {w['aut_order']}):")
    for x, lab, o, orb in zip(w["elements"], w["labels"], w["orders"], w["orbits"]):
        print(f"  element {x} {lab} order {o} orbit {orb}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbitgraph", description="Commuting graphs of automorphism orbits.")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget for the Aut search")
    p.add_argument("--threads", type=int, default=1, help="worker threads for verify")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="catalog operations")
    c.add_argument("what", choices=["list"])
    c.set_defaults(func=cmd_catalog)

    a = sub.add_parser("analyze", help="analyze one group and action")
    a.add_argument("--group", required=True, help="catalog name, input file, or kind:params")
    a.add_argument("--action", required=True, help="action name, action file, inner, or full_aut")
    a.add_argument("--dot", help="write the graph as DOT")
    a.add_argument("--json", help="write the report as JSON")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="verify the whole catalog and the corollary scans")
    v.add_argument("--all", action="store_true")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("refute", help="search for a four-clique witness under Aut(G)")
    r.add_argument("--group", required=True)
    r.set_defaults(func=cmd_refute)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, BadAction, NotNormal, KeyError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
