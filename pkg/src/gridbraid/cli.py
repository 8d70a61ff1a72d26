"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error (bad flags, guard
exceeded, invalid parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .configspace import duality, enumerate_config, graph_config
from .grid import build_grid
from .groups import as_raag, labeled_graph
from .invariants import betti, build_graph, cat_of, to_dot, tc_r
from .morse import MorseField
from .presentation import MorsePresentation
from .q2 import (Q2Params, codified_relations, datum_words, lemma_bounds, normalized_relation, phi_check,
                 rel_tuples)
from .structure import simplify
from .verify import SCHEMA_VERSION, SUITES, run_suite
from .words import format_word

MAX_PQ = 20
MAX_N = 12


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str | None = None):
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    if args.format == "json" or text is None:
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False, default=_jsonable))
    else:
        print(text)


def _jsonable(x):
    if isinstance(x, (set, frozenset, tuple)):
        return sorted(x) if isinstance(x, (set, frozenset)) else list(x)
    return str(x)


def _artifact(args, name: str, content: str):
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(content)


def _guard(args, p: int, q: int, n: int | None = None):
    if p < 2 or q < 2:
        raise UsageError("p and q must be at least 2")
    if n is not None and not 2 <= n < p * q:
        raise UsageError(f"need 2 <= n < pq (got n={n}, pq={p * q})")
    if args.force:
        return
    if p * q > args.max_pq:
        raise UsageError(f"pq = {p * q} exceeds --max-pq {args.max_pq}; pass --force to run anyway")
    if n is not None and n > MAX_N:
        raise UsageError(f"n = {n} exceeds {MAX_N}; pass --force to run anyway")


def _complex(args):
    _guard(args, args.p, args.q, args.n)
    return enumerate_config(build_grid((args.p, args.q)), args.n, not args.no_squares)


def _graph_payload(g, labels=None) -> dict:
    if labels is not None:
        g = labeled_graph(g, labels)
    return {"vertices": [str(v) for v in g.nodes], "edges": sorted([sorted(map(str, e)) for e in g.edges])}


# ---------------------------------------------------------------------------
# commands


def cmd_grid(args):
    # the bare grid is cheap, so only the shape is checked
    if args.p < 2 or args.q < 2:
        raise UsageError("p and q must be at least 2")
    amb = build_grid((args.p, args.q))
    _artifact(args, f"grid_{args.p}x{args.q}.dot", amb.to_dot())
    _artifact(args, f"grid_{args.p}x{args.q}.json", amb.to_json())
    _emit(args, {"command": "grid", **amb.to_dict()}, amb.to_dot())
    return 0


def cmd_complex(args):
    cx = _complex(args)
    d = cx.to_dict(full=args.full)
    _artifact(args, f"complex_{args.p}x{args.q}_n{args.n}.json", cx.to_json(full=args.full))
    text = f"counts {cx.counts()}  euler characteristic {cx.euler_characteristic()}"
    _emit(args, {"command": "complex", **d}, text)
    return 0


def cmd_critical(args):
    cx = _complex(args)
    field = MorseField(cx)
    rep = field.validate()
    out = {"command": "critical", "critical_counts": rep["critical_counts"],
           "euler_characteristic": rep["euler_characteristic"], "valid": rep["ok"], "problems": rep["problems"]}
    if args.list:
        out["critical_cells"] = [[[list(x) for x in cx.cells[d][k]] for k in field.critical(d)]
                                 for d in range(len(cx.cells))]
    text = f"critical cells per dimension {rep['critical_counts']} (valid field: {rep['ok']})"
    _emit(args, out, text)
    return 0 if rep["ok"] else 1


def cmd_present(args):
    cx = _complex(args)
    mp = MorsePresentation(cx)
    pres = mp.presentation(dedupe=args.dedupe)
    _emit(args, {"command": "present", "n_generators": pres.ngens, "n_relators": len(pres.relators),
                 **pres.to_dict()}, pres.to_text())
    return 0


def cmd_simplify(args):
    _guard(args, args.p, args.q, args.n)
    res = simplify(args.p, args.q, args.n, not args.no_squares)
    pres = res["presentation"]
    out = {"command": "simplify", "method": res["method"], "raag": res["raag"], "certified": res["certified"],
           **pres.to_dict()}
    if res["graph"] is not None:
        out["graph"] = _graph_payload(res["graph"], pres.generators if len(pres.generators) == res["graph"].number_of_nodes() else None)
    _emit(args, out, pres.to_text())
    return 0


def cmd_raag_check(args):
    _guard(args, args.p, args.q, args.n)
    res = simplify(args.p, args.q, args.n, not args.no_squares)
    pres = res["presentation"]
    ok, g = as_raag(pres)
    out = {"command": "raag-check", "method": res["method"], "raag": bool(ok and res["certified"])}
    if ok:
        lg = labeled_graph(g, pres.generators)
        out["graph"] = _graph_payload(lg)
        _artifact(args, f"raag_{args.p}x{args.q}_n{args.n}.dot", to_dot(lg, "RAAG"))
        text = f"RAAG on {lg.number_of_nodes()} vertices, edges {out['graph']['edges']}"
    else:
        out["witness"] = format_word(g, pres.generators)
        text = f"not recognized as a RAAG; relator {out['witness']}"
    _emit(args, out, text)
    return 0 if out["raag"] else 1


def cmd_duality(args):
    _guard(args, args.p, args.q)
    amb = build_grid((args.p, args.q))
    m = args.p * args.q
    if not 1 <= args.r < m:
        raise UsageError(f"need 1 <= r < pq (got r={args.r})")
    a, b = graph_config(amb, args.r), graph_config(amb, m - args.r)
    bad = 0
    for cells in a.cells:
        for c in cells:
            e = duality(c, amb)
            if e not in b or duality(e, amb) != c:
                bad += 1
    ok = bad == 0 and a.counts() == b.counts()
    out = {"command": "duality", "r": args.r, "dual_r": m - args.r, "counts": a.counts(),
           "dual_counts": b.counts(), "ok": ok}
    _emit(args, out, f"r={args.r}: {a.counts()}  r={m - args.r}: {b.counts()}  ok={ok}")
    return 0 if ok else 1


def cmd_betti(args):
    cx = _complex(args)
    b = betti(cx)
    _emit(args, {"command": "betti", **b}, f"betti {b['betti']}  torsion {b['torsion']}")
    return 0


def _load_graph(spec: str):
    try:
        return build_graph(spec)
    except (ValueError, OSError) as e:
        raise UsageError(str(e)) from None


def cmd_tc(args):
    if args.r < 2:
        raise UsageError("r must be at least 2")
    g = _load_graph(args.graph)
    value, exact = tc_r(g, args.r)
    _emit(args, {"command": "tc", "graph": args.graph, "r": args.r, "tc": value, "exact": exact},
          str(value) if exact else f"{value} (lower bound)")
    return 0


def cmd_cat(args):
    g = _load_graph(args.graph)
    value = cat_of(g)
    _emit(args, {"command": "cat", "graph": args.graph, "cat": value}, str(value))
    return 0


def cmd_q2(args):
    try:
        q = Q2Params(args.n, args.p)
    except ValueError as e:
        raise UsageError(str(e)) from None
    labels = [f"g{j}" for j in range(1, args.n)]

    def ampersand(U, W):
        return f"{format_word(U, labels)} & {format_word(W, labels)}"

    try:
        if args.action == "tuples":
            rows = [{"tuple": list(t), "datum": list(normalized_relation(t, q)),
                     "relation": ampersand(*datum_words(normalized_relation(t, q), q))} for t in rel_tuples(q)]
            out = {"tuples": rows, "count": len(rows)}
            ok = True
        elif args.action == "codified":
            rows = [ampersand(U, W) for U, W in codified_relations(q)]
            out = {"relations": rows, "count": len(rows)}
            ok = True
        elif args.action == "phi-check":
            out = phi_check(q)
            ok = out["ok"]
        else:
            out = lemma_bounds(q)
            ok = out["ok"]
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(args, {"command": "q2", "action": args.action, "n": args.n, "p": args.p, **out})
    return 0 if ok else 1


def cmd_verify(args):
    kw = {}
    if args.suite in ("thm1.2", "morse") and args.max_pq_suite is not None:
        kw["max_pq"] = args.max_pq_suite
    report = run_suite(args.suite, seed=args.seed, **kw)
    _artifact(args, f"verify_{args.suite}.json", json.dumps(report, indent=2, sort_keys=True, default=_jsonable))
    if args.format == "text":
        lines = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']}  [{r['instance']}]" for r in report["checks"]]
        lines.append(f"suite {args.suite}: {'PASS' if report['pass'] else 'FAIL'} (seed {args.seed})")
        print("\n".join(lines))
    else:
        print(json.dumps(report, indent=2, sort_keys=True, default=_jsonable))
    return 0 if report["pass"] else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out-dir", help="write JSON/DOT artifacts here")
    common.add_argument("--max-pq", type=int, default=MAX_PQ, help="largest board size allowed without --force")
    common.add_argument("--force", action="store_true", help="ignore the size guards")
    common.add_argument("--seed", type=int, default=0)

    board = argparse.ArgumentParser(add_help=False)
    board.add_argument("--p", type=int, required=True)
    board.add_argument("--q", type=int, required=True)

    conf = argparse.ArgumentParser(add_help=False, parents=[board])
    conf.add_argument("--n", type=int, required=True)
    conf.add_argument("--no-squares", action="store_true", help="graph configuration space (no square cells)")

    ap = argparse.ArgumentParser(prog="gridbraid", description="Braid groups of grid configuration spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("grid", parents=[common, board], help="ambient grid complex").set_defaults(fn=cmd_grid)
    sp = sub.add_parser("complex", parents=[common, conf], help="cell counts of the configuration complex")
    sp.add_argument("--full", action="store_true", help="list every cell")
    sp.set_defaults(fn=cmd_complex)
    sp = sub.add_parser("critical", parents=[common, conf], help="critical cells of the gradient field")
    sp.add_argument("--list", action="store_true")
    sp.set_defaults(fn=cmd_critical)
    sp = sub.add_parser("present", parents=[common, conf], help="fundamental group presentation")
    sp.add_argument("--dedupe", action="store_true", help="drop repeated relators")
    sp.set_defaults(fn=cmd_present)
    sub.add_parser("simplify", parents=[common, conf], help="simplified presentation").set_defaults(fn=cmd_simplify)
    sub.add_parser("raag-check", parents=[common, conf], help="recognize a RAAG").set_defaults(fn=cmd_raag_check)
    sp = sub.add_parser("duality", parents=[common, board], help="check UDConf(r) = UDConf(pq - r)")
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(fn=cmd_duality)
    sub.add_parser("betti", parents=[common, conf], help="integral homology").set_defaults(fn=cmd_betti)
    sp = sub.add_parser("tc", parents=[common], help="sequential topological complexity of a RAAG")
    sp.add_argument("--graph", required=True, help="ra:N, B:K, iso:K, sums like iso:3+B:2, or a DOT file")
    sp.add_argument("--r", type=int, default=2)
    sp.set_defaults(fn=cmd_tc)
    sp = sub.add_parser("cat", parents=[common], help="LS-category of a RAAG")
    sp.add_argument("--graph", required=True)
    sp.set_defaults(fn=cmd_cat)
    sp = sub.add_parser("q2", parents=[common], help="reduced generators and relations on p x 2")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("action", choices=("tuples", "codified", "phi-check", "lemma-check"))
    sp.set_defaults(fn=cmd_q2)
    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        # for verify, --max-pq bounds the instance range instead of guarding
        args.max_pq_suite = args.max_pq if args.max_pq != MAX_PQ else None
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
