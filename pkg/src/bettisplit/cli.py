"""Command line interface.

Exit codes: 0 when the computation succeeded and the verdict is "yes" (or the
command only reports data), 1 when the verdict is "no", 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import corpus
from .complex import ComplexError, StandardDecomposition, face_vertices
from .enumeration import (DEFAULT_BUDGET, BudgetExceeded, admits_betti_splitting,
                          count_decompositions, facet_label, facet_splitting_probability,
                          find_homology_splitting, is_trivially_decomposable,
                          splitting_probability)
from .exactla import FieldSpec
from .hochster import alexander_dual_ideal, complex_from_ideal, graded_betti
from .homology import reduced_betti_all
from .io import (FormatError, complex_to_json, format_cplx, format_ideal, looks_like_ideal,
                 parse_complex_text, parse_ideal)
from .splitting import CHECKS, essential_facets, essential_notes, orientability

SCHEMA = "bettisplit/1"
THREADS_ENV = "BETTISPLIT_THREADS"


class UsageError(Exception):
    pass


def _load_complex(source: str):
    if source.startswith("corpus:"):
        return corpus.get(source.split(":", 1)[1])
    return parse_complex_text(Path(source).read_text())


def _fields(args) -> list[FieldSpec]:
    return [FieldSpec.parse(f) for f in (args.field or ["Q"])]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
    else:
        print(text)


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    return max(1, int(os.environ.get(THREADS_ENV, "1")))


def cmd_homology(args) -> int:
    cx = _load_complex(args.input)
    results, lines = [], []
    for fld in _fields(args):
        b = reduced_betti_all(cx, fld)
        results.append({"field": str(fld), "reduced_betti": {str(k - 1): v for k, v in enumerate(b)}})
        lines.append(f"{fld}: " + "  ".join(f"b~{k - 1}={v}" for k, v in enumerate(b)))
    _emit(args, {"results": results}, "\n".join(lines))
    return 0


def cmd_betti(args) -> int:
    cx = _load_complex(args.input)
    results, blocks = [], []
    for fld in _fields(args):
        table = graded_betti(cx, fld)
        results.append({"field": str(fld), "n": cx.n, "entries": table.triples()})
        blocks.append(f"Betti table of I* over {fld} (n={cx.n})\n{table.to_text()}")
    _emit(args, {"results": results}, "\n\n".join(blocks))
    return 0


def cmd_dualize(args) -> int:
    if args.input.startswith("corpus:"):
        kind, text = "complex", None
    else:
        text = Path(args.input).read_text()
        kind = args.source
        if kind == "auto":
            kind = "ideal" if looks_like_ideal(text) else "complex"
    if kind == "complex":
        cx = corpus.get(args.input.split(":", 1)[1]) if text is None else parse_complex_text(text)
        ideal = alexander_dual_ideal(cx)
        payload = {"n": ideal.n, "generators": [list(face_vertices(g)) for g in ideal.generators]}
        _emit(args, {"ideal": payload}, format_ideal(ideal).rstrip())
    else:
        cx = complex_from_ideal(parse_ideal(text))
        _emit(args, {"complex": complex_to_json(cx)}, format_cplx(cx).rstrip())
    return 0


def _parse_split(cx, spec: str) -> StandardDecomposition:
    try:
        idx = [int(t) for t in spec.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--split expects comma separated facet indices, got {spec!r}") from None
    return StandardDecomposition.from_indices(cx, idx)


def cmd_check(args) -> int:
    cx = _load_complex(args.input)
    dec = _parse_split(cx, args.split)
    check = CHECKS[args.mode]
    reports = [check(cx, dec, fld) for fld in _fields(args)]
    lines = [f"decomposition {dec}"]
    for r in reports:
        line = f"{r.field}: {r.mode} {'yes' if r.verdict else 'no'}"
        if r.witness:
            line += "  witness " + " ".join(f"{k}={v}" for k, v in r.witness.items())
        lines.append(line)
    _emit(args, {"decomposition": facet_label(cx, dec),
                 "results": [r.to_dict() for r in reports]}, "\n".join(lines))
    return 0 if all(r.verdict for r in reports) else 1


def cmd_essential(args) -> int:
    cx = _load_complex(args.input)
    results, lines = [], []
    notes = list(essential_notes(cx))
    for fld in _fields(args):
        ess = essential_facets(cx, fld, dim=args.dim)
        results.append({"field": str(fld), "count": len(ess), "total_facets": len(cx.facets),
                        "essential": [list(face_vertices(f)) for f in ess]})
        lines.append(f"{fld}: {len(ess)}/{len(cx.facets)} essential: "
                     + " ".join("".join(map(str, face_vertices(f))) for f in ess))
    _emit(args, {"results": results, "notes": notes}, "\n".join(lines + notes))
    return 0


def cmd_orient(args) -> int:
    cx = _load_complex(args.input)
    verdict = orientability(cx).value
    _emit(args, {"orientability": verdict}, verdict)
    return 0 if verdict == "orientable" else 1


def cmd_enumerate(args) -> int:
    cx = _load_complex(args.input)
    jobs = _threads(args)
    total = count_decompositions(cx)
    ok = True
    lines = []
    for fld in _fields(args):
        if args.format == "json":
            print(json.dumps({"schema": SCHEMA, "command": "enumerate", "event": "start",
                              "goal": args.goal, "field": str(fld), "decompositions": total},
                             sort_keys=True), flush=True)
        t0 = time.perf_counter()
        if args.goal == "trivial":
            hit = is_trivially_decomposable(cx, fld, jobs=jobs)
        elif args.goal == "hom":
            hit = find_homology_splitting(cx, fld, budget=args.budget)
        else:
            hit = admits_betti_splitting(cx, fld, budget=args.budget, jobs=jobs)
        elapsed = time.perf_counter() - t0
        ok = ok and hit is not None
        res = {"goal": args.goal, "field": str(fld), "decompositions": total,
               "found": hit is not None, "elapsed_seconds": round(elapsed, 4),
               "witness": facet_label(cx, hit) if hit is not None else None}
        if args.format == "json":
            print(json.dumps({"schema": SCHEMA, "command": "enumerate", "event": "result", **res},
                             sort_keys=True), flush=True)
        else:
            what = f"witness {hit}" if hit is not None else "none"
            lines.append(f"{fld}: goal={args.goal} {what}  (decompositions {total}, "
                         f"{elapsed:.2f}s)")
    if lines:
        print("\n".join(lines))
    return 0 if ok else 1


def cmd_prob(args) -> int:
    cx = _load_complex(args.input)
    reports = []
    for fld in _fields(args):
        if args.kind == "facet":
            reports.append(facet_splitting_probability(cx, fld))
        else:
            reports.append(splitting_probability(cx, fld, args.kind, sample=args.sample,
                                                 seed=args.seed, budget=args.budget,
                                                 jobs=_threads(args)))
    lines = [f"{r.field}: P_{r.kind} = {r.hits}/{r.total} = {r.ratio} ({r.mode})" for r in reports]
    _emit(args, {"results": [r.to_dict() for r in reports]}, "\n".join(lines))
    return 0


def cmd_corpus(args) -> int:
    if args.action == "list":
        items = []
        for name in corpus.names():
            e = corpus.load(name)
            items.append({"name": name, "description": e.description, "n": e.complex.n,
                          "facets": len(e.complex.facets), "dim": e.complex.dim})
        text = "\n".join(f"{i['name']:14s} n={i['n']:<3d} facets={i['facets']:<3d} "
                         f"dim={i['dim']}  {i['description']}" for i in items)
        _emit(args, {"entries": items}, text)
        return 0
    if not args.name:
        raise UsageError(f"corpus {args.action} needs a name")
    entry = corpus.load(args.name)
    if args.action == "dump":
        if args.format == "json":
            print(json.dumps(complex_to_json(entry.complex)))
        else:
            print(format_cplx(entry.complex), end="")
        return 0
    exp = entry.expected
    info = {"name": entry.name, "description": entry.description,
            "complex": complex_to_json(entry.complex), "f_vector": list(exp.f_vector),
            "reduced_betti": {str(FieldSpec(p)): list(v) for p, v in exp.betti.items()},
            "closed_pseudomanifold": exp.pseudomanifold,
            "orientability": orientability(entry.complex).value}
    text = "\n".join([f"{entry.name}: {entry.description}", f"complex {entry.complex}",
                      f"f-vector {exp.f_vector}"]
                     + [f"reduced Betti over {FieldSpec(p)}: {v}" for p, v in exp.betti.items()]
                     + [f"closed pseudomanifold: {exp.pseudomanifold}",
                        f"orientability: {info['orientability']}"])
    _emit(args, info, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bettisplit",
        description="Homology, Alexander dual Betti numbers and Betti splittings of complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="complex file (.cplx or JSON) or corpus:<name>")
        p.add_argument("--field", action="append",
                       help="Q or Fp:<prime>; repeat to run over several fields (default Q)")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--threads", type=int, default=None,
                       help=f"worker cap (default from ${THREADS_ENV} or 1)")
        return p

    common(sub.add_parser("homology", help="reduced Betti numbers"))
    common(sub.add_parser("betti", help="graded Betti table of the Alexander dual ideal"))
    p = common(sub.add_parser("dualize", help="convert a complex to its dual ideal or back"))
    p.add_argument("--from", dest="source", choices=["auto", "complex", "ideal"], default="auto")
    p = common(sub.add_parser("check", help="decide a splitting for a given decomposition"))
    p.add_argument("--mode", choices=list(CHECKS), default="betti")
    p.add_argument("--split", required=True,
                   help="0-based indices of the facets in part one, e.g. 0,2")
    p = common(sub.add_parser("essential", help="essential facets"))
    p.add_argument("--dim", type=int, default=None)
    common(sub.add_parser("orient", help="orientability of a closed pseudomanifold"))
    p = common(sub.add_parser("enumerate", help="search all standard decompositions"))
    p.add_argument("--goal", choices=["trivial", "hom", "betti"], default="trivial")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p = common(sub.add_parser("prob", help="splitting probabilities"))
    p.add_argument("--kind", choices=["betti", "hom", "facet"], default="betti")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p = common(sub.add_parser("corpus", help="built-in triangulations"), needs_input=False)
    p.add_argument("action", choices=["list", "show", "dump"])
    p.add_argument("name", nargs="?")
    return parser


COMMANDS = {
    "homology": cmd_homology, "betti": cmd_betti, "dualize": cmd_dualize, "check": cmd_check,
    "essential": cmd_essential, "orient": cmd_orient, "enumerate": cmd_enumerate,
    "prob": cmd_prob, "corpus": cmd_corpus,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ComplexError, FormatError, corpus.CorpusError, BudgetExceeded,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
