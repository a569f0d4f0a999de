"""Command-line front end.

Exit codes: 0 when the computation ran and decided (whatever the verdict),
2 for invalid input, 3 when the randomized Frobenius search is inconclusive.
"""
import argparse
import sys

from .errors import AxiomError, SchemaError
from .algebra import FinAlgebra
from .hopfalgebroid import HopfAlgebroid, hopf_axiom_report, verify_derived_identities
from .serialization import load, dumps, hopf_to_json
from .constructions import builtin, catalog_names, UnknownName
from .integrals import all_integral_spaces
from .maschke import maschke_report, dual_maschke_report
from .frobenius import frobenius_decide, qf_report, Undecided

EXIT_OK, EXIT_INVALID, EXIT_UNDECIDED = 0, 2, 3


class InvalidInput(Exception):
    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


def load_checked(path):
    """Load a document and run the full axiom suite; InvalidInput on any failure."""
    try:
        h = load(path)
    except (OSError, SchemaError) as e:
        raise InvalidInput("cannot load %s: %s" % (path, e))
    try:
        rep = hopf_axiom_report(h)
    except AxiomError as e:
        raise InvalidInput("axiom failure: %s" % e)
    if not rep.ok:
        raise InvalidInput("axiom failure: %s" % rep.first_failure()["check"], rep)
    h.axioms = rep
    return h, rep


# ---- commands ---------------------------------------------------------------------

def cmd_check(args):
    try:
        h = load(args.file)
    except (OSError, SchemaError) as e:
        raise InvalidInput("cannot load %s: %s" % (args.file, e))
    try:
        rep = hopf_axiom_report(h)
    except AxiomError as e:
        raise InvalidInput("axiom failure: %s" % e)
    doc = {"command": "check", "axioms": rep.to_json()}
    if not rep.ok:
        doc["ok"] = False
        raise InvalidInput("axiom failure: %s" % rep.first_failure()["check"], doc)
    derived = verify_derived_identities(h)
    doc["derived_identities"] = derived.to_json()
    doc["ok"] = derived.ok
    if not derived.ok:
        raise InvalidInput("derived identity fails: %s" % derived.first_failure()["check"], doc)
    return doc


def cmd_integrals(args):
    h, _ = load_checked(args.file)
    return {"command": "integrals",
            "spaces": [sp.to_json() for sp in all_integral_spaces(h).values()]}


def cmd_maschke(args):
    h, _ = load_checked(args.file)
    return {"command": "maschke", "report": maschke_report(h).to_json()}


def cmd_dual_maschke(args):
    h, _ = load_checked(args.file)
    return {"command": "dual-maschke", "report": dual_maschke_report(h).to_json()}


def cmd_frobenius(args):
    h, _ = load_checked(args.file)
    v = frobenius_decide(h, seed=args.seed, trials=args.trials)
    return {"command": "frobenius", "report": v.to_json(h)}


def cmd_qf(args):
    h, _ = load_checked(args.file)
    doc = {"command": "qf"}
    doc.update(qf_report(h))
    return doc


def cmd_example(args):
    try:
        obj = builtin(args.name)
    except UnknownName as e:
        raise InvalidInput(str(e.args[0]))
    if isinstance(obj, HopfAlgebroid):
        body = hopf_to_json(obj)
        kind = "hopf_algebroid"
    else:
        body = {"field": obj.F.name, "algebra": obj.to_json()}
        kind = "algebra"
    if args.emit:
        with open(args.emit, "w") as f:
            f.write(dumps(body))
    return {"command": "example", "name": args.name, "kind": kind, "dim": _dim(obj),
            "emitted": args.emit, "document": None if args.emit else body}


def _dim(obj):
    return obj.dim if isinstance(obj, FinAlgebra) else obj.A.dim


# ---- text rendering ---------------------------------------------------------------

def _yn(b):
    return "yes" if b else "no"


def render_text(doc):
    cmd = doc.get("command")
    lines = []
    if cmd == "check":
        for blk in ("axioms", "derived_identities"):
            if blk not in doc:
                continue
            lines.append("%s:" % blk)
            for item in doc[blk]["checks"]:
                mark = "ok  " if item["passed"] is not False else "FAIL"
                w = "  witness %s" % (item["witness"],) if "witness" in item and item["passed"] is False else ""
                lines.append("  %s %s%s" % (mark, item["check"], w))
        lines.append("overall: %s" % _yn(doc.get("ok")))
    elif cmd == "integrals":
        lines.append("%-12s %s" % ("space", "dim"))
        for sp in doc["spaces"]:
            lines.append("%-12s %d" % (sp["which"], sp["dim"]))
    elif cmd in ("maschke", "dual-maschke"):
        rep = doc["report"]
        lines.append("%s: %s (all conditions agree)" % (rep["theorem"], _yn(rep["verdict"])))
        for c in rep["conditions"]:
            lines.append("  %-6s %s" % (c["condition_id"], _yn(c["verdict"])))
    elif cmd == "frobenius":
        rep = doc["report"]
        lines.append("verdict: %s" % rep["verdict"])
        lines.append("method: %s" % rep["evidence"].get("method"))
        for k, s in sorted(rep.get("systems", {}).items()):
            lines.append("  system %-4s verified %s" % (k, _yn(all(s["verified"].values()))))
        if "rank_one" in rep:
            lines.append("  rank-one freeness: %s" % _yn(rep["rank_one"]["isomorphism"]))
    elif cmd == "qf":
        lines.append("leftQF=%s rightQF=%s" % (str(doc["leftQF"]).lower(), str(doc["rightQF"]).lower()))
        lines.append("%-8s %-5s %-6s %-6s %-6s" % ("side", "ext", "QF", "span", "lemma"))
        for v in doc["verdicts"]:
            span = "-" if v["span_criterion"] is None else _yn(v["span_criterion"])
            lines.append("%-8s %-5s %-6s %-6s %-6s" % (v["side"], v["extension"], _yn(v["result"]),
                                                      span, _yn(v["lemma_criterion"])))
    elif cmd == "example":
        lines.append("%s: %s of dimension %d" % (doc["name"], doc["kind"], doc["dim"]))
        if doc["emitted"]:
            lines.append("written to %s" % doc["emitted"])
        else:
            lines.append(dumps(doc["document"]).rstrip())
    else:
        lines.append(dumps(doc).rstrip())
    return "\n".join(lines) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="algebroid", description="Exact computations with finite Hopf algebroids.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.set_defaults(fn=fn)
        return sp

    add("check", cmd_check, "verify axioms and derived identities")
    add("integrals", cmd_integrals, "all six integral spaces")
    add("maschke", cmd_maschke, "Maschke theorem conditions")
    add("dual-maschke", cmd_dual_maschke, "dual Maschke theorem conditions")
    fp = add("frobenius", cmd_frobenius, "decide Frobenius")
    fp.add_argument("--seed", type=int, default=0)
    fp.add_argument("--trials", type=int, default=32)
    add("qf", cmd_qf, "decide left and right QF for the four base extensions")
    ep = add("example", cmd_example, "built-in examples (%s)" % ", ".join(catalog_names()), file=False)
    ep.add_argument("name")
    ep.add_argument("--emit", metavar="OUT")
    return p


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    fmt = args.format
    try:
        doc = args.fn(args)
        code = EXIT_OK
    except InvalidInput as e:
        doc = {"command": args.command, "error": "invalid_input", "message": str(e)}
        if e.report is not None:
            doc["report"] = e.report
        code = EXIT_INVALID
        err.write("error: %s\n" % e)
    except Undecided as e:
        doc = {"command": args.command, "error": "undecided", "message": str(e),
               "evidence": e.evidence, "verdict": "UndecidedProbablyNot"}
        code = EXIT_UNDECIDED
        err.write("%s\n" % e)
    if fmt == "json":
        out.write(dumps(doc))
    elif "error" in doc:
        out.write("%s: %s\n" % (doc["error"], doc["message"]))
    else:
        out.write(render_text(doc))
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
