"""Command-line front end.

Exit codes: 0 success, 1 invariant failure, 2 usage or parse error,
3 unsupported input shape (odd-length sequence where even is required).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from cgraphs import oracle, tables
from cgraphs.errors import CGraphError, OddLengthUnsupported
from cgraphs.graphbuild import build_direct, build_recursive
from cgraphs.graphparams import (
    algebraic_connectivity,
    class_matches_comparison,
    classify,
    clique_number,
    comparison,
    compute_params,
)
from cgraphs.seqcore import count_sequences, enumerate_sequences, parse_sequence
from cgraphs.spectra import full_spectrum
from cgraphs.verify import run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SHAPE = 0, 1, 2, 3
ENUMERATE_CAP = 26
STATS_LIMIT = 18

# graph constructor used by `verify`; tests swap it for fault injection
BUILDER = build_direct

PARAMS_TSV_COLUMNS = ("sequence", "n", "k", "a", "kappa", "kappa_prime", "delta", "omega", "m", "class")
SPECTRUM_TSV_COLUMNS = ("sequence", "n", "k", "path", "m", "algebraic_connectivity", "spectral_radius", "distinct")


class UsageError(Exception):
    pass


def _seq_text(parts) -> str:
    return ",".join(map(str, parts))


def _tsv(columns, rows) -> str:
    lines = ["\t".join(columns)]
    for r in rows:
        lines.append("\t".join("" if v is None else str(v) for v in r))
    return "\n".join(lines)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def oracle_spectrum_report(s) -> dict:
    """Spectrum report for sequences the closed form does not cover."""
    g = build_recursive(s)
    vals = oracle.rounded_integers(oracle.laplacian_eigs(g))
    if vals is None:
        raise CGraphError(f"oracle eigenvalues of {s} are not integral within tolerance")
    mult = sorted(Counter(vals).items())
    return {
        "sequence": list(s.parts),
        "n": s.n,
        "k": s.k,
        "path": "oracle",
        "quotient_eigs": None,
        "bulk_eigs": None,
        "distinct": [v for v, _ in mult],
        "multiplicities": [[v, c] for v, c in mult],
        "m": len(mult),
        "algebraic_connectivity": vals[1] if len(vals) > 1 else 0,
        "spectral_radius": vals[-1],
    }


def spectrum_report(s) -> dict:
    return full_spectrum(s).to_dict() if s.eligible else oracle_spectrum_report(s)


def cmd_spectrum(args) -> tuple[int, str]:
    s = parse_sequence(args.sequence)
    rep = spectrum_report(s)
    if args.format == "json":
        return EXIT_OK, _dump(rep)
    if args.format == "tsv":
        row = [_seq_text(rep["sequence"]), rep["n"], rep["k"], rep["path"], rep["m"],
               rep["algebraic_connectivity"], rep["spectral_radius"], " ".join(map(str, rep["distinct"]))]
        return EXIT_OK, _tsv(SPECTRUM_TSV_COLUMNS, [row])
    spectrum = " ".join(f"{v}^{c}" if c > 1 else str(v) for v, c in rep["multiplicities"])
    lines = [f"C({_seq_text(rep['sequence'])})  n={rep['n']}  k={rep['k']}  [{rep['path']}]"]
    if rep["quotient_eigs"] is not None:
        lines.append(f"quotient eigenvalues: {' '.join(map(str, rep['quotient_eigs']))}")
        lines.append("bulk eigenvalues:     " + " ".join(f"{v}^{c}" for v, c in rep["bulk_eigs"]))
    lines += [
        f"spectrum:             {spectrum}",
        f"distinct (m={rep['m']}):      {' '.join(map(str, rep['distinct']))}",
        f"algebraic connectivity {rep['algebraic_connectivity']}, spectral radius {rep['spectral_radius']}",
    ]
    return EXIT_OK, "\n".join(lines)


def _params_row(d: dict) -> list:
    return [_seq_text(d["sequence"]), d["n"], d["k"], d["a"], d["kappa"], d["kappa_prime"],
            d["delta"], d["omega"], d["m_distinct"], d["class"]]


def cmd_params(args) -> tuple[int, str]:
    s = parse_sequence(args.sequence)
    d = compute_params(s, with_oracle=args.oracle).to_dict()
    if args.format == "json":
        return EXIT_OK, _dump(d)
    if args.format == "tsv":
        return EXIT_OK, _tsv(PARAMS_TSV_COLUMNS, [_params_row(d)])
    lines = [f"C({_seq_text(d['sequence'])})  n={d['n']}  k={d['k']}  edges={d['edges']}"]
    for key in ("a", "kappa", "kappa_prime", "delta", "omega", "m_distinct", "class", "comparison"):
        lines.append(f"  {key:<12} {d[key] if d[key] is not None else '-'}")
    for c in d["checks"]:
        lines.append(f"  [{'pass' if c['pass'] else 'FAIL'}] {c['name']}: {c['detail']}")
    ok = all(c["pass"] for c in d["checks"])
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines)


def cmd_classify(args) -> tuple[int, str]:
    s = parse_sequence(args.sequence)
    d = {
        "sequence": list(s.parts),
        "omega": clique_number(s),
        "a": algebraic_connectivity(s),
        "last_part": s[s.k],
        "class": classify(s).value,
        "comparison": f"omega{comparison(s)}a",
        "class_predicts_comparison": class_matches_comparison(s),
    }
    if args.format == "json":
        return EXIT_OK, _dump(d)
    cols = ("sequence", "omega", "a", "last_part", "class", "comparison", "class_predicts_comparison")
    row = [_seq_text(d["sequence"])] + [d[c] for c in cols[1:]]
    if args.format == "tsv":
        return EXIT_OK, _tsv(cols, [row])
    return EXIT_OK, "  ".join(f"{c}={v}" for c, v in zip(cols, row))


def cmd_table(args) -> tuple[int, str]:
    rows = tables.table1(args.oracle) if args.which == 1 else tables.table2(args.oracle)
    if args.format == "json":
        return EXIT_OK, _dump({"table": args.which, "rows": tables.render_rows(rows)})
    out = []
    if args.format == "tsv":
        out.append("\t".join(("row", "sequence", "field", "printed", "computed", "oracle", "status")))
        for r in rows:
            for c in r.cells:
                d = c.to_dict()
                out.append("\t".join(str(x) for x in (r.index, _seq_text(r.sequence), d["field"],
                                                      d["printed"], d["computed"], d["oracle"], d["status"])))
        return EXIT_OK, "\n".join(out)
    for r in rows:
        out.append(f"row {r.index:>2}  C({_seq_text(r.sequence)})  {r.status}")
        for c in r.cells:
            extra = f"  oracle={c.oracle}" if c.oracle is not None else ""
            out.append(f"    {c.name:<10} printed={c.printed}  computed={c.computed}{extra}  {c.status}")
        for note in r.notes:
            out.append(f"    note: {note}")
    matches = sum(r.status == tables.MATCH for r in rows)
    out.append(f"{matches}/{len(rows)} rows MATCH")
    return EXIT_OK, "\n".join(out)


def enumeration_stats(n: int, with_oracle: bool = False, limit: int = STATS_LIMIT) -> dict:
    stats: dict = {"n": n, "count": count_sequences(n), "materialized": n <= limit}
    if n > limit:
        return stats
    m_dist: Counter = Counter()
    classes: Counter = Counter()
    comps: Counter = Counter()
    best: dict[str, tuple[int, list]] = {}

    def track(key, value, parts, larger=True):
        cur = best.get(key)
        sign = 1 if larger else -1
        if cur is None or sign * value > sign * cur[0]:
            best[key] = (value, [list(parts)])
        elif value == cur[0]:
            cur[1].append(list(parts))

    seen = 0
    for s in enumerate_sequences(n):
        seen += 1
        spec = full_spectrum(s)
        m_dist[spec.m] += 1
        classes[classify(s).value] += 1
        comps[comparison(s)] += 1
        a = algebraic_connectivity(s)
        noncomplete = not (s.k == 2 and s[2] == 1)
        if noncomplete:
            track("max_a_noncomplete", a, s.parts)
        track("min_a", a, s.parts, larger=False)
        track("max_omega", clique_number(s), s.parts)
        track("min_omega", clique_number(s), s.parts, larger=False)
        if with_oracle and noncomplete:
            track("max_kappa_noncomplete", oracle.vertex_connectivity(build_direct(s)), s.parts)
    stats["enumerated"] = seen
    stats["m_distribution"] = {str(k): v for k, v in sorted(m_dist.items())}
    stats["classes"] = {c: classes.get(c, 0) for c in ("Minus", "Zero", "Plus")}
    stats["comparisons"] = {f"omega{c}a": comps.get(c, 0) for c in ("<", "=", ">")}
    stats["witnesses"] = {
        key: {"value": v, "sequences": [_seq_text(p) for p in w[:10]], "total": len(w)}
        for key, (v, w) in sorted(best.items())
    }
    return stats


def cmd_enumerate(args) -> tuple[int, str]:
    if not 2 <= args.n <= args.cap:
        raise UsageError(f"n must lie in 2..{args.cap}")
    if not args.stats:
        out = sys.stdout
        for s in enumerate_sequences(args.n, even_only=not args.all_lengths):
            out.write(str(s) + "\n")
        return EXIT_OK, ""
    st = enumeration_stats(args.n, args.oracle, args.stats_limit)
    if args.format == "json":
        return EXIT_OK, _dump(st)
    if args.format == "tsv":
        rows = [("count", st["count"])]
        for k, v in st.get("m_distribution", {}).items():
            rows.append((f"m={k}", v))
        for k, v in st.get("classes", {}).items():
            rows.append((f"class={k}", v))
        return EXIT_OK, _tsv(("key", "value"), rows)
    lines = [f"n={st['n']}  count={st['count']}"]
    if st["materialized"]:
        lines.append("m(G) distribution: " + ", ".join(f"{k}:{v}" for k, v in st["m_distribution"].items()))
        lines.append("classes: " + ", ".join(f"{k}:{v}" for k, v in st["classes"].items()))
        lines.append("comparisons: " + ", ".join(f"{k}:{v}" for k, v in st["comparisons"].items()))
        for key, w in st["witnesses"].items():
            lines.append(f"{key} = {w['value']} at {'; '.join(w['sequences'])}"
                         + (f" (+{w['total'] - 10} more)" if w["total"] > 10 else ""))
    else:
        lines.append(f"(statistics not materialized above n={args.stats_limit})")
    return EXIT_OK, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    rep = run_verification(
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        sample_max_n=args.sample_max_n,
        jobs=args.jobs,
        builder=BUILDER,
    )
    if args.log:
        with open(args.log, "w") as fh:
            fh.write(rep.to_json() + "\n")
    code = EXIT_OK if rep.ok else EXIT_FAIL
    if args.format == "json":
        return code, rep.to_json()
    if args.format == "tsv":
        rows = [(name, count, sum(f.invariant == name for f in rep.failures)) for name, count in sorted(rep.checks.items())]
        return code, _tsv(("invariant", "checked", "failed"), rows)
    lines = [f"{rep.sequences} sequences checked"]
    for name, count in sorted(rep.checks.items()):
        failed = sum(f.invariant == name for f in rep.failures)
        lines.append(f"  {'FAIL' if failed else 'ok  '} {name:<40} {count:>6} checked  {failed} failed")
    for f in rep.failures[:20]:
        lines.append(f"  failure: {f.invariant} C({_seq_text(f.sequence)}) {f.detail}")
    lines.append("PASS" if rep.ok else "FAIL")
    return code, "\n".join(lines)


def cmd_export(args) -> tuple[int, str]:
    s = parse_sequence(args.sequence)
    g = build_direct(s) if s.eligible else build_recursive(s)
    return EXIT_OK, (g.to_json() if args.as_ == "json" else g.to_edgelist().rstrip("\n"))


def _add_globals(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default=d("pretty"))
    p.add_argument("--oracle", action="store_true", default=d(False),
                   help="add brute-force oracle values (kappa, kappa', confirmations)")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for verification")
    p.add_argument("--seed", type=int, default=d(0), help="seed for sampled sequences")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgraphs",
        description="Exact Laplacian spectra and graph parameters of cographs from creation sequences.",
    )
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="full Laplacian spectrum")
    p.add_argument("sequence", help='creation sequence, e.g. "8,3,4,2,1,5,6,3,7,9"')
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("params", parents=[common], help="connectivity, clique number, classification")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("classify", parents=[common], help="omega against the last part and against a(G)")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", parents=[common], help="recompute a published table")
    p.add_argument("which", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", parents=[common], help="list or summarize all C-graphs of order n")
    p.add_argument("n", type=int)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--all-lengths", action="store_true", help="include odd-length sequences when listing")
    p.add_argument("--cap", type=int, default=ENUMERATE_CAP)
    p.add_argument("--stats-limit", type=int, default=STATS_LIMIT,
                   help="largest n for which statistics are materialized")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run the theory-vs-oracle invariant suite")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--sample-max-n", type=int, default=64)
    p.add_argument("--log", help="write the JSON report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write the graph as an edge list or JSON")
    p.add_argument("sequence")
    p.add_argument("--as", dest="as_", choices=("edgelist", "json"), default="edgelist")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except OddLengthUnsupported as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except (CGraphError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
