"""Command-line front end.

Exit codes: 0 = clean, 1 = flags/counterexamples found, 2 = input/usage
errors.  All data output is exact; reports are deterministic for identical
inputs (fixed orderings, no timestamps).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .chartable import (
    CharacterTable,
    SchemaError,
    build_abelian,
    build_cyclic,
    build_dihedral,
    build_symmetric,
    direct_product,
    load_table,
    save_table,
    validate,
)
from .hcover import NoCoverError, check_cover, min_cover
from .vanishing import (
    DataIntegrityError,
    burnside_check,
    camina_classes,
    central_type_characters,
    nonvanishing_classes,
    pattern_to_json,
    prime_power_check,
    vanishing_classes,
    zero_pattern,
)
from .zerographs import (
    bipartite_to_dot,
    bound_checks,
    components,
    delta_v,
    gamma_v,
    independence_number,
    theta,
    to_dot,
)

ALL_CHECKS = ("burnside", "mno", "camina", "hmm-components", "covers", "bounds", "witnesses")


def _err(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _cmd_gen(args) -> int:
    family = args.family
    params = args.params
    try:
        if family == "sym":
            table = build_symmetric(int(params[0]))
        elif family == "dihedral":
            table = build_dihedral(int(params[0]))
        elif family == "cyclic":
            table = build_cyclic(int(params[0]))
        elif family == "abelian":
            table = build_abelian([int(p) for p in params])
        elif family == "product":
            if len(params) != 2:
                return _err("product takes exactly two table files")
            table = direct_product(load_table(params[0]), load_table(params[1]))
        else:
            return _err(f"unknown family {family!r}")
    except (ValueError, IndexError, SchemaError, OSError) as exc:
        return _err(str(exc))
    save_table(table, args.output)
    return 0


def _load(path) -> CharacterTable:
    table = load_table(path)
    fails = validate(table)
    if fails:
        raise SchemaError(f"{path}: validation failed: {'; '.join(fails)}")
    return table


def _analysis(table: CharacterTable) -> dict:
    p = zero_pattern(table)
    names = lambda ixs: sorted(table.classes[c].name for c in ixs)
    cover = min_cover(p)
    g = gamma_v(p)
    d = delta_v(p)
    alpha_g, _ = independence_number(g)
    alpha_d, _ = independence_number(d)
    return {
        "group": table.group_name,
        "order": table.order,
        "n_classes": len(table.classes),
        "n_characters": len(table.characters),
        "n_nonlinear": p.n_rows,
        "vanishing_classes": names(vanishing_classes(p)),
        "nonvanishing_classes": names(nonvanishing_classes(p)),
        "camina_classes": names(camina_classes(table, p)),
        "central_type_characters": sorted(
            table.characters[r].name for r in central_type_characters(table, p)
        ),
        "k_min": cover.k_min,
        "witness": [table.classes[c].name for c in cover.witness],
        "gamma_v_components": len(components(g)),
        "delta_v_components": len(components(d)),
        "gamma_v_independence": alpha_g,
        "delta_v_independence": alpha_d,
    }


def _cmd_analyze(args) -> int:
    try:
        table = _load(args.file)
        info = _analysis(table)
    except (SchemaError, OSError, DataIntegrityError, NoCoverError) as exc:
        return _err(str(exc))
    if args.format == "json":
        print(json.dumps(info, indent=1))
    else:
        print(f"group {info['group']} of order {info['order']}")
        print(f"  classes: {info['n_classes']}, characters: {info['n_characters']}")
        if info["n_nonlinear"] == 0:
            print("  no nonlinear characters; H_0 (vacuous cover)")
        else:
            print(f"  nonlinear characters: {info['n_nonlinear']}")
        print(f"  vanishing classes: {', '.join(info['vanishing_classes']) or '-'}")
        print(f"  non-vanishing classes: {', '.join(info['nonvanishing_classes']) or '-'}")
        print(f"  Camina classes: {', '.join(info['camina_classes']) or '-'}")
        print(
            "  central-type characters: "
            f"{', '.join(info['central_type_characters']) or '-'}"
        )
        print(f"  k_min = {info['k_min']}, witness: {', '.join(info['witness']) or '-'}")
        print(
            f"  Gamma_v: {info['gamma_v_components']} component(s), "
            f"independence number {info['gamma_v_independence']}"
        )
        print(
            f"  Delta_v: {info['delta_v_components']} component(s), "
            f"independence number {info['delta_v_independence']}"
        )
    return 0


def _cmd_cover(args) -> int:
    try:
        table = _load(args.file)
        result = min_cover(zero_pattern(table))
    except (SchemaError, OSError, NoCoverError) as exc:
        return _err(str(exc))
    witness = [table.classes[c].name for c in result.witness]
    print(
        json.dumps(
            {
                "group": table.group_name,
                "k_min": result.k_min,
                "witness": witness,
                "explored_nodes": result.explored_nodes,
                "proof_lb": result.proof_lb,
            },
            indent=1,
        )
    )
    if args.max_k is not None and result.k_min > args.max_k:
        return 1
    return 0


def _cmd_graphs(args) -> int:
    try:
        table = _load(args.file)
    except (SchemaError, OSError) as exc:
        return _err(str(exc))
    p = zero_pattern(table)
    g = gamma_v(p)
    d = delta_v(p)
    th = theta(table, p)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "pattern.json").write_text(json.dumps(pattern_to_json(p), indent=1) + "\n")
    if args.dot:
        degrees = {ch.name: f"deg={ch.degree}" for ch in table.characters}
        orders = {c.name: f"ord={c.element_order}" for c in table.classes}
        (outdir / "gamma_v.dot").write_text(to_dot(g, "gamma_v", degrees))
        (outdir / "delta_v.dot").write_text(to_dot(d, "delta_v", orders))
        (outdir / "theta.dot").write_text(
            bipartite_to_dot(th, "theta", {**degrees, **orders})
        )
    return 0


def _collect_paths(paths) -> list[Path]:
    files: list[Path] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            files.extend(sorted(p.glob("*.json")))
        else:
            files.append(p)
    return sorted(set(files))


def _run_checks(table: CharacterTable, checks) -> list[str]:
    p = zero_pattern(table)
    flags: list[str] = []
    if "burnside" in checks:
        ok, bad = burnside_check(p)
        if not ok:
            flags.append(f"burnside:characters {bad} never vanish")
    if "mno" in checks:
        ok, bad = prime_power_check(table, p)
        if not ok:
            flags.append(f"mno:characters {bad} have no prime-power-order zero")
    if "camina" in checks:
        try:
            camina_classes(table, p)
        except DataIntegrityError as exc:
            flags.append(f"camina:{exc}")
    if "hmm-components" in checks:
        ng = len(components(gamma_v(p)))
        nd = len(components(delta_v(p)))
        if ng != nd:
            flags.append(f"hmm-components:Gamma_v has {ng}, Delta_v has {nd}")
    cover = None
    if "covers" in checks or "witnesses" in checks:
        try:
            cover = min_cover(p)
        except NoCoverError as exc:
            flags.append(f"covers:{exc}")
    if "covers" in checks and cover is not None:
        if cover.k_min > 3:
            flags.append(f"covers:k_min={cover.k_min}>3 (conjecture 1a counterexample)")
        if table.metadata.solvable and cover.k_min > 2:
            flags.append(f"covers:solvable with k_min={cover.k_min}>2 (conjecture 1b)")
        if table.metadata.r_value is not None and cover.k_min > table.metadata.r_value:
            flags.append(f"covers:k_min={cover.k_min} exceeds r(G)={table.metadata.r_value}")
        if table.metadata.simple and cover.k_min > 3:
            flags.append(f"covers:simple group with k_min={cover.k_min}>3")
    if "witnesses" in checks and cover is not None:
        ok, bad = check_cover(p, cover.witness)
        if not ok:
            flags.append(f"witnesses:solver witness leaves characters {bad} uncovered")
    if "bounds" in checks:
        flags.extend(f"bounds:{f}" for f in bound_checks(table, p))
    return flags


def _cmd_verify(args) -> int:
    checks = ALL_CHECKS if args.checks == "all" else tuple(args.checks.split(","))
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown or not checks:
        return _err(f"unknown or empty check selection: {sorted(unknown)}")
    files = _collect_paths(args.paths)
    if not files:
        return _err("no input files")
    rows = []
    had_error = False
    had_flags = False
    for f in files:
        try:
            table = _load(f)
        except (SchemaError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            rows.append({"file": str(f), "group": "", "flags": ["load-error"]})
            had_error = True
            continue
        flags = _run_checks(table, checks)
        had_flags = had_flags or bool(flags)
        rows.append({"file": str(f), "group": table.group_name, "flags": flags})

    if args.format == "json":
        print(json.dumps({"checks": list(checks), "tables": rows}, indent=1))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["file", "group", "flags"])
        for r in rows:
            writer.writerow([r["file"], r["group"], ";".join(r["flags"])])
        sys.stdout.write(buf.getvalue())
    if had_error:
        return 2
    return 1 if had_flags else 0


def _cmd_report(args) -> int:
    files = _collect_paths([args.dir])
    if not files:
        return _err(f"no tables found in {args.dir}")
    rows = []
    for f in files:
        try:
            table = _load(f)
        except (SchemaError, OSError) as exc:
            return _err(str(exc))
        p = zero_pattern(table)
        cover = min_cover(p)
        flags = _run_checks(table, ALL_CHECKS)
        rows.append(
            {
                "group": table.group_name,
                "order": table.order,
                "n_classes": len(table.classes),
                "n_nonlinear": p.n_rows,
                "k_min": cover.k_min,
                "witness_names": ";".join(table.classes[c].name for c in cover.witness),
                "flags": ";".join(flags),
            }
        )
    out = Path(args.output)
    if out.suffix == ".json":
        out.write_text(json.dumps(rows, indent=1) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf,
            fieldnames=[
                "group",
                "order",
                "n_classes",
                "n_nonlinear",
                "k_min",
                "witness_names",
                "flags",
            ],
        )
        writer.writeheader()
        writer.writerows(rows)
        out.write_text(buf.getvalue())
    return 1 if any(r["flags"] for r in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charzero")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a character table")
    gen.add_argument("family", choices=["sym", "dihedral", "cyclic", "abelian", "product"])
    gen.add_argument("params", nargs="+")
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=_cmd_gen)

    analyze = sub.add_parser("analyze", help="summarize one table")
    analyze.add_argument("file")
    analyze.add_argument("--format", choices=["json", "text"], default="text")
    analyze.set_defaults(func=_cmd_analyze)

    cover = sub.add_parser("cover", help="exact minimum class cover")
    cover.add_argument("file")
    cover.add_argument("--max-k", type=int, default=None)
    cover.set_defaults(func=_cmd_cover)

    graphs = sub.add_parser("graphs", help="emit zero pattern and graphs")
    graphs.add_argument("file")
    graphs.add_argument("--out", required=True)
    graphs.add_argument("--dot", action="store_true")
    graphs.set_defaults(func=_cmd_graphs)

    verify = sub.add_parser("verify", help="run the verification harness")
    verify.add_argument("paths", nargs="+")
    verify.add_argument("--checks", default="all")
    verify.add_argument("--format", choices=["csv", "json"], default="csv")
    verify.set_defaults(func=_cmd_verify)

    report = sub.add_parser("report", help="corpus summary report")
    report.add_argument("dir")
    report.add_argument("-o", "--output", required=True)
    report.set_defaults(func=_cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
