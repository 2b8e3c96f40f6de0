"""Command-line entry point: ``friendship-hg <subcommand> ...``.

Exit codes: 0 success / PASS, 1 verified FAIL, 2 usage or input error.
``--format json`` prints exactly one JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds, constructions, hgio, search, steiner
from .certificate import ERROR, FAIL, PASS, Certificate
from .hypergraph import HypergraphError, members
from .verify import (
    saturation_bound_check,
    decompose,
    is_universal,
    lemma_lab_complement,
    lemma_lab_path,
    shadow_check,
    sociable_report,
    star_center,
    verify_friendship,
    verify_saturated,
)

EXIT = {PASS: 0, FAIL: 1, ERROR: 2}


class UsageError(Exception):
    pass


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _cert_text(cert: Certificate) -> str:
    lines = [f"{cert.check}: {cert.verdict}"]
    if cert.witness:
        lines.append(f"  witness: {json.dumps(cert.witness, sort_keys=True)}")
    for key in sorted(cert.stats):
        lines.append(f"  {key}: {cert.stats[key]}")
    return "\n".join(lines)


def _read_input(path: str):
    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        h, t = hgio.loads(data.decode())
    except UnicodeDecodeError:
        raise UsageError(f"{path}: not a text file") from None
    return h, t, hgio.sha256_hex(data)


def _write_hg(path: str | None, h, steiner_t=None) -> str:
    text = hgio.dumps(h, steiner_t)
    if path:
        Path(path).write_text(text)
    return text


# -- construct / steiner --------------------------------------------------


def _steiner_from_args(args) -> steiner.SteinerSystem:
    if getattr(args, "steiner", None):
        h, t, _ = _read_input(args.steiner)
        t = args.t if args.t is not None else t
        if t is None:
            raise UsageError("Steiner input needs a '# steiner t=<t>' line or --t")
        cert = steiner.verify_steiner(t, h.r, h.n, h.edges)
        if not cert.passed:
            raise UsageError(f"{args.steiner} is not an S({t},{h.r},{h.n}): {json.dumps(cert.witness)}")
        return steiner.SteinerSystem.from_hypergraph(h, t)
    if getattr(args, "sts", None) is not None:
        return steiner.steiner_triple_system(args.sts)
    if getattr(args, "sqs8", False):
        return steiner.sqs8()
    raise UsageError("choose a Steiner source: --sts N, --sqs8 or --steiner FILE")


def cmd_construct(args) -> int:
    kind = args.kind
    extra = {}
    if kind == "complete":
        h = constructions.complete(args.r)
        recipe = constructions.ConstructionRecipe("complete", {"r": args.r})
    elif kind == "cube":
        h = constructions.cube(args.k)
        recipe = constructions.ConstructionRecipe("cube", {"k": args.k})
    elif kind == "universal":
        s = _steiner_from_args(args)
        h = constructions.universal(s)
        recipe = constructions.ConstructionRecipe("universal", {"steiner": [s.t, s.k, s.n], "steiner_sha256": hgio.content_hash(s.as_hypergraph())})
    else:
        if args.steiner:
            s = _steiner_from_args(args)
        elif args.r is not None:
            s = constructions.truncated_system(args.r)
        else:
            raise UsageError("truncated needs --r R or --steiner FILE")
        abc = None
        if args.abc:
            try:
                abc = tuple(int(x) for x in args.abc.split(","))
            except ValueError:
                raise UsageError("--abc expects three comma-separated integers") from None
            if len(abc) != 3:
                raise UsageError("--abc expects three comma-separated integers")
        tc = constructions.truncated(s, abc)
        h, recipe = tc.hypergraph, tc.recipe
        extra = {"cliques": len(tc.decomposition), "vertex_map": list(tc.vertex_map)}
        if args.decomposition_output:
            _write_hg(args.decomposition_output, tc.decomposition.as_hypergraph())

    text = _write_hg(args.output, h)
    if args.recipe:
        Path(args.recipe).write_text(json.dumps(recipe.to_dict(), sort_keys=True, indent=2) + "\n")
    doc = {"command": "construct", "recipe": recipe.to_dict(), "n": h.n, "r": h.r, "edges": h.m, "sha256": hgio.sha256_hex(text), **extra}
    if args.output is None:
        if args.format == "json":
            doc["hg"] = text
        else:
            sys.stdout.write(text)
            return 0
    _emit(args, doc, f"{kind}: n={h.n} r={h.r} edges={h.m} -> {args.output}")
    return 0


def cmd_steiner(args) -> int:
    if args.kind == "sts":
        s = steiner.steiner_triple_system(args.n)
    elif args.kind == "sqs8":
        s = steiner.sqs8()
    else:
        s = steiner.s_5_6_12()
    text = _write_hg(args.output, s.as_hypergraph(), s.t)
    cert = steiner.certify(s)
    doc = {"command": "steiner", "t": s.t, "k": s.k, "n": s.n, "blocks": len(s.blocks), "sha256": hgio.sha256_hex(text), "verification": cert.to_dict()}
    if args.output is None:
        if args.format == "json":
            doc["hg"] = text
        else:
            sys.stdout.write(text)
            return 0
    _emit(args, doc, f"S({s.t},{s.k},{s.n}): {len(s.blocks)} blocks, {cert.verdict} -> {args.output}")
    return 0


# -- verify / decompose / analyze -----------------------------------------


def cmd_verify(args) -> int:
    h, t, sha = _read_input(args.file)
    if args.property == "friendship":
        cert = verify_friendship(h, jobs=args.jobs)
    elif args.property == "universal":
        cert = is_universal(h)
    elif args.property == "saturated":
        if args.l is None:
            raise UsageError("verify saturated needs --l")
        cert = verify_saturated(h, args.l)
    else:
        t = args.t if args.t is not None else t
        if t is None:
            raise UsageError("verify steiner needs --t or a '# steiner t=<t>' line")
        cert = steiner.verify_steiner(t, h.r, h.n, h.edges)
    cert.input_sha256 = sha
    _emit(args, cert.to_dict(), _cert_text(cert))
    return EXIT[cert.verdict]


def cmd_decompose(args) -> int:
    h, _, sha = _read_input(args.file)
    cert = decompose(h)
    cert.input_sha256 = sha
    doc = cert.to_dict()
    if cert.passed:
        d = cert.payload
        doc["cliques"] = [members(q) for q in d.cliques]
        if args.output:
            _write_hg(args.output, d.as_hypergraph())
    _emit(args, doc, _cert_text(cert))
    return EXIT[cert.verdict]


def cmd_analyze(args) -> int:
    h, _, sha = _read_input(args.file)
    friendship = verify_friendship(h, jobs=args.jobs)
    friendship.input_sha256 = sha
    if not friendship.passed:
        _emit(args, {"command": "analyze", "input_sha256": sha, "friendship": friendship.to_dict()}, _cert_text(friendship))
        return EXIT[friendship.verdict]
    report = bounds.audit(h)
    d = decompose(h).payload
    soc = sociable_report(d)
    soc_doc = soc.to_dict()
    soc_doc["star_center"] = star_center(soc.sociable, h.n, h.r - 1)
    shadow = shadow_check(d)
    shadow.input_sha256 = sha
    doc = {
        "command": "analyze",
        "input_sha256": sha,
        "friendship": friendship.to_dict(),
        "sociable": soc_doc,
        "shadow": shadow.to_dict(),
        "audit": report.to_dict(),
    }
    text = "\n".join(
        [
            _cert_text(friendship),
            f"sociable sets: {len(soc.sociable)} (star centre {soc_doc['star_center']}), unsociable: {len(soc.unsociable)}",
            _cert_text(shadow),
            f"edges {report.actual}: lower {report.lower_edges}, upper {report.upper_edges} "
            f"(integral {report.upper_edges_integral}), cliques {report.cliques} <= {report.upper_decomp}, universal={report.universal}",
        ]
    )
    _emit(args, doc, text)
    return EXIT[shadow.verdict]


# -- bounds / search / lemma-lab -------------------------------------------


def cmd_bounds(args) -> int:
    if args.n is not None:
        lo = hi = args.n
    else:
        if args.n_from is None or args.n_to is None:
            raise UsageError("bounds needs --n or both --n-from and --n-to")
        lo, hi = args.n_from, args.n_to
    if lo > hi:
        raise UsageError("--n-from must not exceed --n-to")
    rows = [bounds.bound_report(n, args.r).to_dict() for n in range(lo, hi + 1)]
    header = f"{'n':>3} {'r':>2} {'lower':>12} {'upper-decomp':>14} {'upper-edges':>14} {'lrss':>14}"
    lines = [header]
    for row in rows:
        lines.append(
            f"{row['n']:>3} {row['r']:>2} {row['lower_edges']:>12} {row['upper_decomp']:>14} "
            f"{row['upper_edges']:>14} {str(row['lrss_upper'] or '-'):>14}"
        )
    _emit(args, {"command": "bounds", "r": args.r, "rows": rows}, "\n".join(lines))
    return 0


def cmd_search(args) -> int:
    cfg = search.SearchConfig(
        args.n,
        args.r,
        max_solutions=args.max_solutions,
        node_budget=args.node_budget,
        symmetry_breaking=not args.no_symmetry,
    )
    outcome = search.enumerate_friendship(cfg, jobs=args.jobs)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, d in enumerate(outcome.solutions):
            _write_hg(str(out / f"solution_{i:04d}.hg"), d.expand())
    doc = {"command": "search", **outcome.to_dict()}
    text = (
        f"n={cfg.n} r={cfg.r}: {len(outcome.solutions)} solution(s), exhausted={outcome.exhausted}, "
        f"nodes={outcome.nodes_visited}"
    )
    _emit(args, doc, text)
    return 0


def cmd_lemma_lab(args) -> int:
    if args.lemma == "path":
        cert = lemma_lab_path(args.n_max)
    elif args.lemma == "complement":
        cert = lemma_lab_complement(args.r_max)
    else:
        if args.k + args.l > args.n_max:
            raise UsageError("saturation lab needs k + l <= n-max")
        per_n = []
        cert = Certificate("saturation-bound", PASS, None, {"k": args.k, "l": args.l, "n_max": args.n_max})
        for n in range(args.k + args.l, args.n_max + 1):
            c = saturation_bound_check(n, args.k, args.l)
            per_n.append(c.stats)
            if not c.passed and cert.passed:
                cert.verdict, cert.witness = FAIL, c.witness
        cert.stats["per_n"] = per_n
    _emit(args, cert.to_dict(), _cert_text(cert))
    return EXIT[cert.verdict]


# -- parser ---------------------------------------------------------------


def _default_jobs() -> int:
    raw = os.environ.get("FRIENDSHIP_HG_JOBS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (default: $FRIENDSHIP_HG_JOBS or 1)")

    p = argparse.ArgumentParser(prog="friendship-hg", description="Construct, verify and search friendship hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a friendship hypergraph")
    c.add_argument("kind", choices=("complete", "universal", "cube", "truncated"))
    c.add_argument("--r", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--sts", type=int, metavar="N", help="universal: use the STS on N points")
    c.add_argument("--sqs8", action="store_true", help="universal: use S(3,4,8)")
    c.add_argument("--steiner", metavar="FILE", help="Steiner system in .hg format")
    c.add_argument("--t", type=int, help="t of the --steiner file when it carries no comment")
    c.add_argument("--abc", help="truncated: removed points a,b,c")
    c.add_argument("--decomposition-output", metavar="FILE", help="truncated: also write the clique hypergraph")
    c.add_argument("-o", "--output", metavar="FILE")
    c.add_argument("--recipe", metavar="FILE", help="write the provenance record as JSON")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("steiner", parents=[common], help="generate a Steiner system")
    s.add_argument("kind", choices=("sts", "sqs8", "s5612"))
    s.add_argument("--n", type=int, default=7)
    s.add_argument("-o", "--output", metavar="FILE")
    s.set_defaults(func=cmd_steiner)

    v = sub.add_parser("verify", parents=[common], help="check a property of a .hg file")
    v.add_argument("property", choices=("friendship", "steiner", "saturated", "universal"))
    v.add_argument("file")
    v.add_argument("--l", type=int, help="saturated: clique size offset l")
    v.add_argument("--t", type=int, help="steiner: t (defaults to the file's comment)")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", parents=[common], help="K_(r+1)^r decomposition of a .hg file")
    d.add_argument("file")
    d.add_argument("-o", "--output", metavar="FILE", help="write the clique hypergraph")
    d.set_defaults(func=cmd_decompose)

    a = sub.add_parser("analyze", parents=[common], help="sociable sets, shadow check and bound audit")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", parents=[common], help="tabulate exact edge bounds")
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--n-from", type=int)
    b.add_argument("--n-to", type=int)
    b.set_defaults(func=cmd_bounds)

    se = sub.add_parser("search", parents=[common], help="enumerate friendship hypergraphs on tiny n")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--r", type=int, default=3)
    se.add_argument("--max-solutions", type=int)
    se.add_argument("--node-budget", type=int, default=search.DEFAULT_NODE_BUDGET)
    se.add_argument("--no-symmetry", action="store_true")
    se.add_argument("--out-dir", metavar="DIR", help="write each solution as solution_NNNN.hg")
    se.set_defaults(func=cmd_search)

    lab = sub.add_parser("lemma-lab", parents=[common], help="exhaustive small-graph lemma checks")
    lab.add_argument("lemma", choices=("path", "complement", "saturation"))
    lab.add_argument("--n-max", type=int, default=7)
    lab.add_argument("--r-max", type=int, default=5)
    lab.add_argument("--k", type=int, default=2)
    lab.add_argument("--l", type=int, default=1)
    lab.set_defaults(func=cmd_lemma_lab)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except (UsageError, HypergraphError, steiner.SteinerError, search.SearchConfigError, bounds.AuditError, ValueError, OSError) as exc:
        print(f"friendship-hg: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
