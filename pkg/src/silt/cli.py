"""Command line entry point.

Commands: enumerate, mutate, chain, check, export, serve.  Output is
deterministic: identical invocations produce byte-identical bytes (fixed
seeds, canonical orderings, no timestamps).

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import checks, replicated, reporting, serialize
from .derived import DerivedCategory, StalkSum
from .quiver import parse_quiver
from .report import Report
from .silting import enumerate_silting, is_silting_in_window, mutate, mutation_edges

_fmt = StalkSum.format_entry

# Check suite tokens are part of the CLI contract and stay stable even if
# the underlying suites move.
CHECK_TOKENS = ("thm32", "thm34", "prop33", "prop35", "arrows", "thm42",
                "consistency", "all")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="silt",
        description="Silting mutation workbench for Dynkin-type path algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_instance(p):
        p.add_argument("--quiver", required=True,
                       help="instance label, e.g. A2, A3:1>2>3, A3:><, D4")
        p.add_argument("--m", type=int, required=True,
                       help="shift window parameter (m >= 1)")

    p = sub.add_parser("enumerate", help="list all silting objects in the window")
    add_instance(p)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--report-dir", help="also write CSV/figure artifacts here")

    p = sub.add_parser("mutate", help="mutate one summand of a silting object")
    add_instance(p)
    p.add_argument("--object", required=True,
                   help='comma separated summands, e.g. "P1,P2" or "S1,P2[1]"')
    p.add_argument("--at", type=int, required=True,
                   help="summand position in the sorted entry order")
    p.add_argument("--dir", choices=("left", "right"), default="left")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("chain", help="complement chain over a core object")
    add_instance(p)
    p.add_argument("--core", required=True,
                   help="comma separated core summands (one fewer than n)")
    p.add_argument("--window",
                   help="chain window as lo:hi; use --window=-2:4 for "
                        "negative bounds (widens the default)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report-dir", help="also write CSV/figure artifacts here")

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("suite", choices=CHECK_TOKENS)
    add_instance(p)
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--samples", type=int, default=15,
                   help="sampled maps per object for large instances")
    p.add_argument("--cutoff", type=int, default=None,
                   help="syzygy cutoff for global dimension checks")
    p.add_argument("--core", help="restrict core-indexed suites to this core")
    p.add_argument("--window", help="exchange window as lo:hi")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report-dir", help="also write CSV/figure artifacts here")

    p = sub.add_parser("export", help="export the silting exchange quiver")
    add_instance(p)
    p.add_argument("--format", choices=("json", "dot"), default="dot")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--report-dir", help="also write CSV/figure artifacts here")

    p = sub.add_parser("serve", help="run the HTTP explorer API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8174)
    return ap


def _instance(args) -> DerivedCategory:
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    try:
        q = parse_quiver(args.quiver)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return DerivedCategory(q)


def _parse_window(text: Optional[str]) -> tuple:
    if text is None:
        return None, None
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError("--window expects lo:hi")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise UsageError("--window expects integer bounds") from exc
    if lo > hi:
        raise UsageError("--window lower bound exceeds upper bound")
    return lo, hi


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _slug(text: str) -> str:
    keep = []
    for ch in text:
        keep.append(ch if ch.isalnum() else "_")
    return "".join(keep).strip("_")


def cmd_enumerate(args) -> int:
    d = _instance(args)
    objects = enumerate_silting(d, args.m)
    if args.format == "json":
        text = serialize.dumps(serialize.silting_list_json(d.quiver, args.m, objects))
    elif args.format == "dot":
        objects, arrows = mutation_edges(d, args.m, objects)
        text = serialize.silting_quiver_dot(d.quiver, args.m, objects, arrows)
    else:
        lines = [f"{len(objects)} silting objects for {d.quiver.label} m={args.m}"]
        lines += [f"  [{i}] {obj.pretty()}" for i, obj in enumerate(objects)]
        text = "\n".join(lines) + "\n"
    _emit(text, getattr(args, "out", None))
    if args.report_dir:
        _write_graph_artifacts(d, args.m, objects, args.report_dir)
    return 0


def _write_graph_artifacts(d, m, objects, report_dir) -> None:
    reporting.ensure_dir(report_dir)
    objects, arrows = mutation_edges(d, m, objects)
    base = f"silting_{_slug(d.quiver.label)}_m{m}"
    reporting.draw_silting_graph(
        objects, arrows, os.path.join(report_dir, base + ".png"),
        title=f"{d.quiver.label} m={m}")
    with open(os.path.join(report_dir, base + ".dot"), "w") as fh:
        fh.write(serialize.silting_quiver_dot(d.quiver, m, objects, arrows))


def cmd_mutate(args) -> int:
    d = _instance(args)
    try:
        x = d.parse_stalk_sum(args.object)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    if not is_silting_in_window(d, x, args.m):
        raise UsageError(f"{x.pretty()} is not silting inside the window")
    try:
        y, tri = mutate(d, x, args.at, args.dir)
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        doc = {
            "schema": serialize.SCHEMA,
            "quiver": d.quiver.label,
            "m": args.m,
            "direction": args.dir,
            "object": [_fmt(p) for p in x],
            "result": [_fmt(p) for p in y],
            "in_window": is_silting_in_window(d, y, args.m),
            "triangle": serialize.triangle_json(tri),
        }
        text = serialize.dumps(doc)
    else:
        star = "" if is_silting_in_window(d, y, args.m) else "  [outside window]"
        text = (f"{y.pretty()}{star}\n"
                f"triangle: {serialize.triangle_text(tri)}\n")
    _emit(text, None)
    return 0


def cmd_chain(args) -> int:
    d = _instance(args)
    try:
        core = d.parse_stalk_sum(args.core)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    lo, hi = _parse_window(args.window)
    kwargs = {}
    if lo is not None:
        kwargs = {"lo": lo, "hi": hi}
    try:
        crep = replicated.realizable_complements(d, core, args.m, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        text = serialize.dumps(serialize.chain_report_json(crep))
    else:
        text = replicated.chain_text(crep)
        if not text.endswith("\n"):
            text += "\n"
    _emit(text, None)
    if args.report_dir:
        reporting.ensure_dir(args.report_dir)
        base = f"chain_{_slug(d.quiver.label)}_m{args.m}_{_slug(core.pretty())}"
        reporting.draw_chain_degrees(
            crep, os.path.join(args.report_dir, base + ".png"))
    return 0


def _run_suite(token: str, d: DerivedCategory, args) -> Report:
    m = args.m
    cores = None
    if args.core:
        try:
            cores = [d.parse_stalk_sum(args.core)]
        except (ValueError, KeyError) as exc:
            raise UsageError(str(exc)) from exc
    wlo, whi = _parse_window(args.window)
    if token == "consistency":
        return checks.hom_consistency_suite(d, m)
    if token == "prop33":
        rep = checks.silting_graph_suite(d, m)
        rep.extend(checks.involution_suite(d, m))
        return rep
    if token == "thm32":
        return checks.equivalence_suite(d, m, seed=args.seed,
                                        samples=args.samples)
    if token == "thm34":
        kwargs = {"cores": cores}
        if wlo is not None:
            kwargs.update(wlo=wlo, whi=whi)
        return checks.exchange_simples_suite(d, m, **kwargs)
    if token == "prop35":
        return checks.endo_shape_suite(d, m, cutoff=args.cutoff)
    if token == "arrows":
        return checks.arrow_identity_suite(d, m)
    if token == "thm42":
        return replicated.model_suite(d, m, cores=cores)
    raise UsageError(f"unknown check suite {token!r}")


def cmd_check(args) -> int:
    d = _instance(args)
    if args.suite == "all":
        rep = Report(f"all suites {d.quiver.label} m={args.m}")
        for token in ("consistency", "prop33", "thm32", "thm34", "prop35",
                      "arrows", "thm42"):
            rep.extend(_run_suite(token, d, args))
    else:
        rep = _run_suite(args.suite, d, args)
    if args.format == "json":
        text = serialize.dumps(serialize.report_json(rep))
    else:
        text = serialize.report_table(rep)
        if not text.endswith("\n"):
            text += "\n"
    _emit(text, None)
    if args.report_dir:
        reporting.ensure_dir(args.report_dir)
        base = f"check_{args.suite}_{_slug(d.quiver.label)}_m{args.m}"
        reporting.write_report_csv(
            rep, os.path.join(args.report_dir, base + ".csv"))
        if args.suite in ("prop33", "all"):
            _write_graph_artifacts(d, args.m, None, args.report_dir)
    return 0 if rep.ok else 1


def cmd_export(args) -> int:
    d = _instance(args)
    objects, arrows = mutation_edges(d, args.m)
    if args.format == "json":
        text = serialize.dumps(
            serialize.silting_quiver_json(d.quiver, args.m, objects, arrows))
    else:
        text = serialize.silting_quiver_dot(d.quiver, args.m, objects, arrows)
    _emit(text, args.out)
    if args.report_dir:
        _write_graph_artifacts(d, args.m, objects, args.report_dir)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def run(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {
        "enumerate": cmd_enumerate,
        "mutate": cmd_mutate,
        "chain": cmd_chain,
        "check": cmd_check,
        "export": cmd_export,
        "serve": cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
