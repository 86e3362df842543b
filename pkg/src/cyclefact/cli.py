"""
Command line front end.

    cyclefact count a2=3,a3=1 [--method genfunc|trees|oracle|all] [--profiles]
    cyclefact enumerate a2=3 [--trees]
    cyclefact check "(3 4)(1 2)(2 4)" [--n 4]
    cyclefact check "{(1 4 5),(1 3),(2 4)}" --n 5
    cyclefact convert '(1 2)' --from fact --to tree
    cyclefact selftest [--max-weight 4]

Every command takes --json.  Exit status: 0 success, 1 domain failure
(not a factorization, not arrangeable, method mismatch, oracle cap),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import factorization_to_tree, tree_to_factorization
from .cactus import Cactus, arrange, cactus_to_tree, is_arrangeable, tree_to_cactus
from .enumeration import (
    OracleTooLarge, brute_force_classes, count_by_profile, count_trees,
    enumerate_trees, oracle_cap,
)
from .genfunc import g_series, profile_counts, xi_series
from .perm_core import (
    Factorization, ParseError, Permutation, TypeVector, evaluate,
    heads_and_tails, is_minimal_ncycle_factorization, parse_multiset, type_of,
)
from .plane_tree import PlaneTree
from .selftest import run_checks

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class DomainError(Exception):
    pass


def _emit(args, human: str, machine) -> None:
    if args.json:
        print(json.dumps(machine, sort_keys=True))
    else:
        print(human)


def _profile_obj(p, c):
    return {"h": {str(j): k for j, k in p.h}, "t": {str(j): k for j, k in p.t}, "count": c}


# ─────────────────────────────────────────────
# count / enumerate
# ─────────────────────────────────────────────

def _count_by(method: str, alpha: TypeVector) -> int:
    if method == "genfunc":
        return xi_series(alpha.weight).coefficient(x=alpha.as_dict())
    if method == "trees":
        return count_trees(alpha)
    try:
        return len(brute_force_classes(alpha, alpha.weight + 1))
    except OracleTooLarge as exc:
        raise DomainError(str(exc)) from None


def cmd_count(args) -> int:
    alpha = TypeVector.parse(args.alpha)
    if args.method == "all":
        methods = ["genfunc", "trees"]
        if alpha.weight + 1 <= oracle_cap():
            methods.append("oracle")
    else:
        methods = [args.method]
    values = {m: _count_by(m, alpha) for m in methods}
    agree = len(set(values.values())) == 1
    count = values[methods[0]]

    profiles = None
    if args.profiles:
        tables = {}
        if args.method in ("genfunc", "all"):
            tables["genfunc"] = profile_counts(g_series(alpha.weight), alpha)
        if args.method in ("trees", "oracle", "all"):
            tables["trees"] = count_by_profile(alpha)
        profiles = next(iter(tables.values()))
        agree = agree and all(t == profiles for t in tables.values())

    lines = [f"{alpha}: {count}" + ("" if len(methods) == 1 else
             " (" + " ".join(f"{m}={v}" for m, v in values.items()) + ")")]
    if profiles is not None:
        for p, c in profiles.items():
            lines.append(f"  {p}  {c}")
    if not agree:
        lines.append("MISMATCH between methods")
    machine = {"alpha": str(alpha), "count": count, "methods": values, "agree": agree}
    if profiles is not None:
        machine["profiles"] = [_profile_obj(p, c) for p, c in profiles.items()]
    _emit(args, "\n".join(lines), machine)
    return EXIT_OK if agree else EXIT_DOMAIN


def cmd_enumerate(args) -> int:
    alpha = TypeVector.parse(args.alpha)
    rows = []
    for t in enumerate_trees(alpha):
        rows.append((str(tree_to_factorization(t)), t.to_json()))
    if args.json:
        print(json.dumps([{"factorization": f, "tree": json.loads(t)} for f, t in rows], sort_keys=True))
    else:
        for f, t in rows:
            print(t if args.trees else (f or "()"))
    return EXIT_OK


# ─────────────────────────────────────────────
# check
# ─────────────────────────────────────────────

def cmd_check(args) -> int:
    text = args.input
    if text.strip().startswith("{"):
        cycles = parse_multiset(text)
        n = args.n if args.n is not None else max((max(c.elements) for c in cycles), default=0)
        diag = is_arrangeable(cycles, n)
        machine = {"kind": "multiset", "n": n, "arrangeable": diag.ok, "violated": list(diag.violated)}
        if diag:
            f = arrange(cycles, n)
            machine["factorization"] = str(f)
            _emit(args, f"arrangeable: {f}", machine)
            return EXIT_OK
        human = "not arrangeable: " + ", ".join(f"condition {k}" for k in diag.violated)
        _emit(args, human + "\n" + diag.describe(), machine)
        return EXIT_DOMAIN

    f = Factorization.parse(text, args.n)
    perm = evaluate(f)
    alpha = type_of(f)
    target = Permutation.ncycle(f.n)
    machine = {"kind": "factorization", "n": f.n, "evaluates_to": str(perm),
               "type": str(alpha), "minimal": False}
    if not is_minimal_ncycle_factorization(f):
        why = "" if perm == target else f"; does not evaluate to {target}"
        _emit(args, f"evaluates to {perm}; not a minimal factorization of the {f.n}-cycle{why}", machine)
        return EXIT_DOMAIN
    heads, tails, prof = heads_and_tails(f)
    machine.update(minimal=True, heads=sorted(map(str, heads)), tails=sorted(map(str, tails)),
                   profile={"h": {str(j): k for j, k in prof.h}, "t": {str(j): k for j, k in prof.t}})
    human = (f"evaluates to {perm}; minimal; heads={prof.heads} tails={prof.tails}\n"
             f"type {alpha}; heads {''.join(map(str, sorted(heads)))}; "
             f"tails {''.join(map(str, sorted(tails)))}")
    _emit(args, human, machine)
    return EXIT_OK


# ─────────────────────────────────────────────
# convert
# ─────────────────────────────────────────────

def _read_input(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else arg


def _load_tree(args) -> PlaneTree:
    text = _read_input(args.input)
    if args.source == "fact":
        f = Factorization.parse(text, args.n)
        if not is_minimal_ncycle_factorization(f):
            raise DomainError(f"{f or '()'} is not a minimal factorization of the {f.n}-cycle")
        return factorization_to_tree(f)
    if args.source == "tree":
        try:
            return PlaneTree.from_json(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.pos) from None
    try:
        cactus = Cactus.from_json(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    diag = is_arrangeable(cactus.polygons, cactus.n)
    if not diag:
        raise DomainError(f"invalid cactus: {diag.describe()}")
    return cactus_to_tree(cactus)


def cmd_convert(args) -> int:
    try:
        tree = _load_tree(args)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise DomainError(f"invalid {args.source}: {exc}") from None
    if args.target == "fact":
        out = str(tree_to_factorization(tree))
    elif args.target == "tree":
        out = tree.to_json()
    elif args.target == "cactus":
        out = tree_to_cactus(tree).to_json()
    elif args.target == "dot":
        out = tree.to_dot().rstrip("\n")
    else:
        out = tree_to_cactus(tree).to_svg().rstrip("\n")
    if args.json and args.target in ("fact", "dot", "svg"):
        print(json.dumps({"format": args.target, "output": out}))
    else:
        print(out)
    return EXIT_OK


# ─────────────────────────────────────────────
# selftest
# ─────────────────────────────────────────────

def cmd_selftest(args) -> int:
    if args.max_weight < 1:
        raise ParseError("--max-weight must be >= 1", 0)
    results = run_checks(args.max_weight)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"passed": ok, "max_weight": args.max_weight,
                          "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                                     for r in results]}, sort_keys=True))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<32} {r.seconds:7.3f}s  {r.detail}")
        print("all checks passed" if ok else "SOME CHECKS FAILED")
    return EXIT_OK if ok else EXIT_DOMAIN


# ─────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclefact",
                                description="Inequivalent minimal factorizations of the n-cycle.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("count", cmd_count, "count classes of a given type, e.g. a2=3,a3=1")
    sp.add_argument("alpha")
    sp.add_argument("--method", choices=["genfunc", "trees", "oracle", "all"], default="genfunc")
    sp.add_argument("--profiles", action="store_true", help="break the count down by heads/tails")

    sp = add("enumerate", cmd_enumerate, "list one canonical factorization per class")
    sp.add_argument("alpha")
    sp.add_argument("--trees", action="store_true", help="print tree JSON instead")

    sp = add("check", cmd_check, "check a factorization or a {multiset} of cycles")
    sp.add_argument("input")
    sp.add_argument("--n", type=int, default=None)

    sp = add("convert", cmd_convert, "convert between factorization, tree and cactus forms")
    sp.add_argument("input", help="the object, or - for stdin")
    sp.add_argument("--from", dest="source", choices=["fact", "tree", "cactus"], required=True)
    sp.add_argument("--to", dest="target", choices=["fact", "tree", "cactus", "dot", "svg"], required=True)
    sp.add_argument("--n", type=int, default=None)

    sp = add("selftest", cmd_selftest, "run the exhaustive consistency checks")
    sp.add_argument("--max-weight", type=int, default=4)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
