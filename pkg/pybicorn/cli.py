import argparse
import json
import sys

from .bicorn_base import Workbench
from .bicorns import (bicorn_sequence, enumerate_bicorns, extend_to_sequence, slim_triple,
                      third_reduction)
from .bounds_ledger import ledger, ledger_table
from .projection import (SubsurfaceContext, projection_arcs, projection_fixture,
                         projection_transfer_pair, shared_projection_witness)
from .surface.generators import SurfaceSpec, generate_family
from .surface.topology import validate
from .utils.serialization import bicorn_from_dict, document, dumps
from .visualization.dot import export_dot, to_dot, crossings_graph

# ======================================================================
# Command-line front end. One verb per invocation; results go to standard
# output (json, text or dot), diagnostics to standard error.
#
# Exit status: 0 success, 1 domain error (invalid configuration, failed
# precondition or internal check), 2 usage error.
# ======================================================================

VERBS = ("validate", "bicorns", "third", "sequence", "extend", "slim", "certify",
         "project", "ledger", "generate", "export-dot", "corpus")

def parse_graph(s):
    """curve | aug:K -> (graph, k)"""
    if s == "curve":
        return "curve", None
    if s.startswith("aug:"):
        try:
            k = int(s[4:])
        except ValueError:
            raise argparse.ArgumentTypeError(f"Malformed graph {s}; use curve or aug:K") from None
        if k < 2:
            raise argparse.ArgumentTypeError("Augmented graph needs K >= 2")
        return "augmented", k
    raise argparse.ArgumentTypeError(f"Unknown graph {s}; use curve or aug:K")

def build_parser():
    parser = argparse.ArgumentParser(prog="pybicorn",
                                     description="Bicorn curves, curve-graph distance certificates and bound ledgers")
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("source", nargs="?", default=None,
                        help="configuration JSON file or pattern name (grid-K, triple-K, bigon-K, genus2-i2, figure1, projection)")
    parser.add_argument("--input", dest="input", default=None, help="same as SOURCE")
    parser.add_argument("--params", default=None, help="YAML parameter file")
    parser.add_argument("--format", choices=("json", "text", "dot"), default="text")
    parser.add_argument("--alpha", type=int, default=0)
    parser.add_argument("--beta", type=int, default=1)
    parser.add_argument("--delta", type=int, default=2)
    parser.add_argument("--graph", type=parse_graph, default=None, help="curve or aug:K")
    parser.add_argument("--bicorn", default=None, help="JSON file holding a bicorn (extend)")
    parser.add_argument("--index", type=int, default=None, help="index into the enumerated bicorns (extend)")
    parser.add_argument("--subsurface", default=None, help="JSON file holding a subsurface (project)")
    parser.add_argument("--euler-char", type=int, default=None, help="target χ for generated patterns")
    parser.add_argument("--nonorientable", action="store_true", help="generate on a non-orientable surface")
    parser.add_argument("--strict", action="store_true", help="fail on non-decreasing reduced intersections")
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--kmin", type=int, default=None)
    parser.add_argument("--kmax", type=int, default=None)
    return parser

# =====================================================================================================
# VERBS
# Each returns (JSON payload, text, DOT text or None, ok)
# =====================================================================================================

def _surface(args):
    if args.euler_char is None and not args.nonorientable:
        return None
    return SurfaceSpec(-2 if args.euler_char is None else args.euler_char, not args.nonorientable)

def _load(wb, args):
    source = args.input or args.source
    if source is None:
        raise ValueError(f"{args.verb} needs a configuration file or pattern")
    return wb.load(source, _surface(args))

def _validate(wb, args):
    config, _ = _load(wb, args)
    report = validate(config)
    return report.to_dict(), str(report), to_dot(crossings_graph(config)), report.valid

def _bicorns(wb, args):
    config, _ = _load(wb, args)
    found = enumerate_bicorns(config, args.alpha, args.beta, log=wb.diagnostic)
    text = "\n".join("%3d  %s" %(j, b) for j, b in enumerate(found))
    return {"bicorns": [b.to_dict() for b in found]}, text, None, True

def _third(wb, args):
    config, _ = _load(wb, args)
    res = third_reduction(config, args.alpha, args.beta)
    n = config.intersection(args.alpha, args.beta)
    ia = next(ia for g, ia, _ in res.candidates if g.key() == res.bicorn.key())
    text = "%s\n  i(α,γ) = %d, i(β,γ) = %d, i(α,β) = %d" %(res.bicorn, ia, res.intersection, n)
    return res.to_dict(), text, None, True

def _seq_text(seq):
    lines = ["%3d  %s" %(j, b) for j, b in enumerate(seq.items)]
    lines.append("reduced i(β, γ): %s" %list(seq.reduced_beta))
    if seq.reduced_alpha is not None:
        lines.append("reduced i(α, γ): %s" %list(seq.reduced_alpha))
    return "\n".join(lines)

def _sequence(wb, args):
    config, _ = _load(wb, args)
    seq = bicorn_sequence(config, args.alpha, args.beta, strict=args.strict, log=wb.diagnostic)
    return seq.to_dict(), _seq_text(seq), export_dot(seq), True

def _extend(wb, args):
    config, extras = _load(wb, args)
    if args.index is not None:
        found = enumerate_bicorns(config, args.alpha, args.beta)
        if not 0 <= args.index < len(found):
            raise ValueError(f"Bicorn index {args.index} out of range 0..{len(found) - 1}")
        bicorn = found[args.index]
    elif args.bicorn is not None:
        with open(args.bicorn, "r", encoding="utf-8") as f:
            d = json.load(f)
        bicorn = bicorn_from_dict(d.get("bicorn", d))
    elif "bicorn" in extras:
        bicorn = extras["bicorn"]
    else:
        raise ValueError("extend needs --index, --bicorn or a document with a bicorn")
    seq = extend_to_sequence(config, bicorn, strict=args.strict, log=wb.diagnostic)
    return seq.to_dict(), _seq_text(seq), export_dot(seq), True

def _slim(wb, args):
    config, _ = _load(wb, args)
    cert = slim_triple(config, args.alpha, args.beta, args.delta, strict=args.strict, log=wb.diagnostic)
    text = "η = %s\nε = %s\nθ = %s\n  case %s, intersections %s" %(cert.eta, cert.epsilon, cert.theta,
                                                                     cert.case, cert.intersections)
    return cert.to_dict(), text, export_dot(cert), True

def _certify(wb, args):
    config, _ = _load(wb, args)
    graph, k = args.graph if args.graph is not None else (wb.graph, wb.k)
    cert = wb.certify(config, args.alpha, args.beta, graph, k if k is not None else wb.k)
    return cert.to_dict(), str(cert), export_dot(cert), cert.complete

def _project(wb, args):
    config, extras = _load(wb, args)
    if args.subsurface is not None:
        with open(args.subsurface, "r", encoding="utf-8") as f:
            ctx = SubsurfaceContext.from_dict(config, json.load(f))
    elif "subsurface" in extras:
        ctx = SubsurfaceContext.from_dict(config, extras["subsurface"])
    elif (args.input or args.source) == "projection":
        config, ctx = projection_fixture(_surface(args))
    else:
        raise ValueError("project needs --subsurface or a document with a subsurface")
    a, b = args.alpha, args.beta
    seq = bicorn_sequence(config, a, b, log=wb.diagnostic)
    try:
        transfer = projection_transfer_pair(ctx, seq)
    except ValueError as e:
        wb.diagnostic("no transfer pair: %s" %e)
        transfer = None
    witnesses = []
    for j, g in enumerate(seq.items):
        if g.alpha_arc.is_empty:
            continue
        w = shared_projection_witness(ctx, g, "alpha")
        if w is not None:
            witnesses.append((j, w))
    payload = {"subsurface": ctx.to_dict()["subsurface"],
               "projection": {"alpha": [p.to_dict() for p in projection_arcs(ctx, a)],
                              "beta": [p.to_dict() for p in projection_arcs(ctx, b)]},
               "witnesses": [{"index": j, "arc": w.to_dict()} for j, w in witnesses],
               "transfer": None if transfer is None else transfer.to_dict()}
    lines = ["π(α): %d arc(s), π(β): %d arc(s)" %(len(payload["projection"]["alpha"]), len(payload["projection"]["beta"]))]
    lines += ["item %d: shared arc %s" %(j, [p.to_list() for p in w.pieces]) for j, w in witnesses]
    lines.append("transfer pair: %s" %("none" if transfer is None else transfer.index))
    return payload, "\n".join(lines), None, True

def _ledger(wb, args):
    entries = ledger()
    return {"ledger": [e.to_dict() for e in entries]}, ledger_table(entries), None, True

def _generate(wb, args):
    source = args.input or args.source
    if source is None:
        raise ValueError("generate needs a pattern name")
    config = generate_family(source, _surface(args), wb.handle_face)
    return document(config), dumps(document(config)).rstrip("\n"), to_dot(crossings_graph(config)), True

def _export_dot(wb, args):
    config, _ = _load(wb, args)
    return None, None, to_dot(crossings_graph(config)), True

def _corpus(wb, args):
    ok = wb.run_corpus(args.kmin, args.kmax, args.jobs)
    return {"passed": ok}, "PASSED" if ok else "FAILED", None, ok

HANDLERS = {"validate": _validate, "bicorns": _bicorns, "third": _third, "sequence": _sequence,
            "extend": _extend, "slim": _slim, "certify": _certify, "project": _project,
            "ledger": _ledger, "generate": _generate, "export-dot": _export_dot, "corpus": _corpus}

def run(argv=None):
    """Run one command; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        # Log files only when a parameter file asks for them; corpus runs always log
        wb = Workbench(args.params, logging=args.params is not None or args.verb == "corpus")
        payload, text, dot, ok = HANDLERS[args.verb](wb, args)
    except (ValueError, RuntimeError, OSError) as e:
        print("error: %s" %e, file=sys.stderr)
        return 1

    fmt = "dot" if args.verb == "export-dot" else args.format
    if fmt == "json" and payload is not None:
        sys.stdout.write(dumps(payload))
    elif fmt == "dot":
        if dot is None:
            print("error: %s has no DOT output" %args.verb, file=sys.stderr)
            return 2
        sys.stdout.write(dot)
    elif text is not None and args.verb != "corpus":
        print(text)
    return 0 if ok else 1

def main():
    sys.exit(run())

if __name__ == "__main__":
    main()
