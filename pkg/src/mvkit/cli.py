"""Command line front end.  Indices on the command line and in files are 1-based.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
Domain errors are printed to stderr as a single JSON line {"error": name, "message": text}.
"""
import argparse
import json
import random
import sys

from . import cartan, crystal, gmatrix, layers, lusztig, mvpolytope, weyl
from .errors import BadInput, MvkitError


class UsageError(Exception):
    pass


def _ints(s):
    try:
        return tuple(int(x) for x in s.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {s!r}")


def _word(s, pair):
    w = tuple(i - 1 for i in _ints(s))
    if any(not 0 <= i < pair.n for i in w):
        raise UsageError(f"word {s} has letters outside 1..{pair.n}")
    return w


def _load_pair(args):
    if args.type and args.input:
        raise UsageError("give either --type or --input, not both")
    if args.type:
        if args.type not in cartan.PRESETS:
            raise UsageError(f"unknown type {args.type}; presets: {', '.join(cartan.PRESETS)}")
        sym = _ints(args.symmetrizer) if getattr(args, "symmetrizer", None) else None
        return cartan.validate_gcm(cartan.PRESETS[args.type], sym)
    if not args.input:
        raise UsageError("one of --type or --input is required")
    text = args.input
    if not text.lstrip().startswith("{"):
        try:
            with open(text) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInput(f"input is not valid JSON: {exc}")
    if not isinstance(doc, dict) or "cartan" not in doc:
        raise BadInput('input must be an object with a "cartan" field')
    orient = doc.get("orientation")
    if orient is not None:
        orient = [(int(i) - 1, int(j) - 1) for i, j in orient]
    return cartan.validate_gcm(doc["cartan"], doc.get("symmetrizer"), orient)


def _datum(args, pair):
    word = _word(args.word, pair)
    return lusztig.make_datum(pair, word, _ints(args.a))


def _emit(args, doc):
    if isinstance(doc, str):
        text = doc
    else:
        text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _one_based(w):
    return [i + 1 for i in w]


def cmd_cartan_validate(args):
    pair = _load_pair(args)
    cl = cartan.classify(pair)
    q = pair.quiver_data()
    doc = {
        "cartan": [list(r) for r in pair.C],
        "symmetrizer": list(pair.D),
        "minimal_symmetrizer": list(cartan.minimal_symmetrizer(pair.C)),
        "classification": {
            "components": [{"vertices": _one_based(c), "kind": k, "label": lab} for c, k, lab in cl.components],
            "finite": cl.finite,
            "max_edge_product": cl.max_edge_product,
            "g2": cl.has_g2,
        },
        "quiver": {
            "g": [{"i": i + 1, "j": j + 1, "g": v} for (i, j), v in sorted(q.g.items())],
            "f": [{"i": i + 1, "j": j + 1, "f": v} for (i, j), v in sorted(q.f.items())],
        },
    }
    if pair.orientation is not None:
        doc["orientation"] = [[i + 1, j + 1] for i, j in sorted(pair.orientation)]
    return doc


def cmd_weyl_words(args):
    pair = _load_pair(args)
    G = weyl.weyl_group(pair)
    w = G.longest if not args.element else G.from_word(_word(args.element, pair))
    return {
        "element": _one_based(G.word(w)),
        "length": weyl.length(w),
        "order": len(G),
        "weight_matrix": [list(r) for r in w.weight_matrix],
        "rank_matrix": [list(r) for r in w.rank_matrix],
        "reduced_words": [_one_based(x) for x in weyl.all_reduced_words(w, args.cap)],
    }


def cmd_gmatrix_lattice(args):
    pair = _load_pair(args)
    lat = gmatrix.sttilt_hasse(pair)
    if args.format == "dot":
        return lat.to_dot()
    doc = lat.to_json()
    doc["nakayama"] = _one_based(gmatrix.nakayama_involution(pair))
    return doc


def cmd_layers(args):
    pair = _load_pair(args)
    seq = layers.beta_sequence(pair, _word(args.word, pair))
    doc = seq.to_json()
    if args.a:
        doc["vertices"] = [list(v) for v in layers.hn_vertices(seq, _ints(args.a))]
    return doc


def cmd_lusztig_transition(args):
    pair = _load_pair(args)
    d = _datum(args, pair)
    target = _word(args.target, pair)
    res, trace = lusztig.transition_trace(d, target)
    return {"source": d.to_json(), "result": res.to_json(), "path": trace}


def _polytope_dot(P):
    F = mvpolytope.frame(P.pair)
    ids = {w: ".".join(str(i + 1) for i in w) or "e" for w in P.vertices}
    lines = ["graph mvpolytope {"]
    for w in sorted(P.vertices, key=lambda w: (len(w), w)):
        lines.append(f'  "{ids[w]}" [label="{" ".join(map(str, P.vertices[w]))}"];')
    for w in sorted(P.vertices, key=lambda w: (len(w), w)):
        for i in range(P.pair.n):
            u = F.times(w, i)
            if len(u) > len(w):
                lines.append(f'  "{ids[w]}" -- "{ids[u]}" [label="{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_mv_build(args):
    pair = _load_pair(args)
    P = mvpolytope.build_polytope(_datum(args, pair))
    if args.format == "dot":
        return _polytope_dot(P)
    return P.to_json()


def cmd_mv_verify(args):
    pair = _load_pair(args)
    if args.word:
        data = [_datum(args, pair)]
    else:
        rng = random.Random(args.seed)
        words = lusztig.move_graph(pair).words
        data = []
        for _ in range(args.random):
            w = rng.choice(words)
            data.append(lusztig.make_datum(pair, w, [rng.randint(0, args.max_entry) for _ in w]))
    failures = []
    for d in data:
        rep = mvpolytope.verify_bz(mvpolytope.build_polytope(d))
        if not rep.ok:
            failures.append({"datum": d.to_json(), "witnesses": [
                {"axiom": k, "w": _one_based(w), "i": i + 1, "j": None if j is None else j + 1} for k, w, i, j in rep.witnesses[:10]]})
    doc = {"checked": len(data), "ok": not failures, "failures": failures}
    return doc, (0 if not failures else 1)


def _fmt_el(b):
    X = crystal.crystal(b.pair)
    return {"word": _one_based(X.ref), "a": list(b.a), "wt": list(X.wt(b))}


def cmd_crystal_op(args):
    pair = _load_pair(args)
    b = crystal.element(_datum(args, pair))
    op = args.op
    doc = {"input": _fmt_el(b), "op": op}
    if op in ("wt", "star", "pbw"):
        i = None
    else:
        if args.i is None:
            raise UsageError(f"--i is required for {op}")
        if not 1 <= args.i <= pair.n:
            raise UsageError(f"--i must lie in 1..{pair.n}")
        i = args.i - 1
        doc["i"] = args.i
    scalar = {"phi": crystal.phi, "eps": crystal.eps, "phi*": crystal.phi_star, "eps*": crystal.eps_star}
    unary = {"e": crystal.e, "f": crystal.f, "e*": crystal.e_star, "f*": crystal.f_star, "fmax": crystal.f_max,
             "saito": crystal.saito, "saito*": crystal.saito_star}
    if op == "wt":
        doc["result"] = list(crystal.wt(b))
    elif op == "star":
        doc["result"] = _fmt_el(crystal.star(b))
    elif op == "pbw":
        target = _word(args.target, pair) if args.target else crystal.crystal(pair).ref
        doc["word"] = _one_based(target)
        doc["result"] = list(crystal.pbw_unwind(b, target))
    elif op in scalar:
        doc["result"] = scalar[op](b, i)
    else:
        r = unary[op](b, i)
        doc["result"] = None if r is None else _fmt_el(r)
    return doc


class _OffByOneF(crystal.Crystal):
    """f removes one from the first entry but reports the empty element already at phi = 1."""

    def f(self, b, i):
        if self.phi(b, i) <= 1:
            return None
        return super().f(b, i)


def cmd_crystal_verify(args):
    pair = _load_pair(args)
    ops = _OffByOneF(pair) if args.inject_fault else None
    rep = crystal.verify_tingley_webster(pair, args.height, ops=ops)
    wit = [{"check": v[0], "a": list(v[1]), "i": v[2] if not isinstance(v[2], int) else v[2] + 1, "detail": v[3]}
           for v in rep.violations if v is not None][:20]
    if wit:
        for x in wit:
            if isinstance(x["i"], tuple):
                x["i"] = [t + 1 for t in x["i"]]
    doc = {"height": args.height, "checked": rep.checked, "ok": rep.ok, "violations": len(rep.violations), "witnesses": wit}
    return doc, (0 if rep.ok else 1)


def cmd_crystal_graph(args):
    pair = _load_pair(args)
    g = crystal.enumerate_crystal(pair, args.height)
    return g.to_dot() if args.format == "dot" else g.to_json()


def build_parser():
    p = argparse.ArgumentParser(prog="mvkit", description="Weyl group, tau-tilting and MV polytope combinatorics.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, fmt=False):
        sp.add_argument("--type", help="built-in Cartan preset: " + ", ".join(cartan.PRESETS))
        sp.add_argument("--input", help='JSON file or inline JSON {"cartan":..,"symmetrizer":..,"orientation":..}')
        sp.add_argument("--symmetrizer", help="symmetrizer for a preset, e.g. 4,2")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized harnesses")
        if fmt:
            sp.add_argument("--format", choices=["json", "dot"], default="json")

    def datum_args(sp, required=True):
        sp.add_argument("--word", required=required, help="reduced word of w0, e.g. 1,2,1,2")
        sp.add_argument("--a", required=required, help="Lusztig datum entries, e.g. 1,0,0,0")

    sp = sub.add_parser("cartan-validate")
    common(sp)
    sp.set_defaults(fn=cmd_cartan_validate)

    sp = sub.add_parser("weyl-words")
    common(sp)
    sp.add_argument("--element", help="word of the element (default: longest element)")
    sp.add_argument("--cap", type=int, default=100000)
    sp.set_defaults(fn=cmd_weyl_words)

    sp = sub.add_parser("gmatrix-lattice")
    common(sp, fmt=True)
    sp.set_defaults(fn=cmd_gmatrix_lattice)

    sp = sub.add_parser("layers")
    common(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--a", help="optional multiplicities; adds HN vertices")
    sp.set_defaults(fn=cmd_layers)

    sp = sub.add_parser("lusztig-transition")
    common(sp)
    datum_args(sp)
    sp.add_argument("--target", required=True)
    sp.set_defaults(fn=cmd_lusztig_transition)

    sp = sub.add_parser("mv-build")
    common(sp, fmt=True)
    datum_args(sp)
    sp.set_defaults(fn=cmd_mv_build)

    sp = sub.add_parser("mv-verify")
    common(sp)
    datum_args(sp, required=False)
    sp.add_argument("--random", type=int, default=100, help="number of random data when no datum is given")
    sp.add_argument("--max-entry", type=int, default=6)
    sp.set_defaults(fn=cmd_mv_verify)

    sp = sub.add_parser("crystal-op")
    common(sp)
    datum_args(sp)
    sp.add_argument("--op", required=True,
                    choices=["wt", "phi", "eps", "phi*", "eps*", "e", "f", "e*", "f*", "fmax", "star", "saito", "saito*", "pbw"])
    sp.add_argument("--i", type=int, help="vertex (1-based)")
    sp.add_argument("--target", help="word for --op pbw")
    sp.set_defaults(fn=cmd_crystal_op)

    sp = sub.add_parser("crystal-verify")
    common(sp)
    sp.add_argument("--height", type=int, default=6)
    sp.add_argument("--inject-fault", action="store_true", help="replace f by an off-by-one version")
    sp.set_defaults(fn=cmd_crystal_verify)

    sp = sub.add_parser("crystal-graph")
    common(sp, fmt=True)
    sp.add_argument("--height", type=int, default=4)
    sp.set_defaults(fn=cmd_crystal_graph)
    return p


def _error_line(name, msg):
    return json.dumps({"error": name, "message": msg})


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb in ("mv-verify",) and bool(args.word) != bool(args.a):
            raise UsageError("--word and --a go together")
        out = args.fn(args)
        code = 0
        if isinstance(out, tuple):
            out, code = out
        _emit(args, out)
        return code
    except UsageError as exc:
        print(_error_line("UsageError", str(exc)), file=sys.stderr)
        return 2
    except MvkitError as exc:
        print(_error_line(exc.name, str(exc)), file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
