"""Command-line front end.

Exit status: 0 on success, 1 on a parse error, 2 on a domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bridge, catalog, finite, orders, pseudotrees, syntax, trees
from .errors import DomainError, ParseError
from .tukey import RULES, compare_types, normalize_traced

KINDS = ("intalg", "treealg", "ptree", "catalog")


def _sorted_types(types):
    return sorted(types, key=lambda t: t.sort_key())


def _type_json(t):
    return {"text": str(t), "term": t.render(),
            "finsets": None if t.finsets is None else str(t.finsets),
            "factors": [str(k) for k in t.factors]}


def _set_text(types):
    return "{" + ", ".join(str(t) for t in _sorted_types(types)) + "}"


def _read_term(args):
    if args.file:
        with open(args.file) as fh:
            return fh.read()
    if args.term is None:
        raise ParseError("no term given (pass TERM or --file PATH)")
    return args.term


def _spectrum(kind, text):
    if kind == "intalg":
        return orders.intalg_spectrum(syntax.parse_order(text))
    if kind == "treealg":
        return trees.tree_spectrum(syntax.parse_tree(text))
    if kind == "ptree":
        return pseudotrees.ptree_spectrum(syntax.parse_ptree(text))
    return catalog.catalog_spectrum(syntax.parse_catalog(text))


def _chains(kind, text):
    if kind == "intalg":
        cs = orders.classify_cuts(syntax.parse_order(text))
        rows = [{"cf": str(c.cf), "ci": None if c.ci is None else str(c.ci),
                 "type": str(c.tukey)} for c in cs]
    elif kind == "treealg":
        cs = trees.tree_chain_classes(syntax.parse_tree(text))
        rows = [{"cf": str(c.cf), "succ_count": str(c.succ_count), "type": str(c.tukey)}
                for c in cs]
    elif kind == "ptree":
        cs = pseudotrees.ptree_chain_classes(syntax.parse_ptree(text))
        rows = []
        for c in cs:
            eps, chi = pseudotrees.epsilon_and_character(c)
            rows.append({"cf": str(c.cf),
                         "fan": [[str(m), str(th)] for m, th in c.fan.classes],
                         "lambda": str(c.fan.lam), "epsilon": str(eps),
                         "character": str(chi), "type": str(c.tukey)})
    else:
        raise DomainError("chains are not defined for catalog families")
    rows.sort(key=lambda r: json.dumps(r, sort_keys=True))
    return rows


def cmd_normalize(args):
    n = normalize_traced(syntax.parse_type(_read_term(args)))
    text = f"{n.type}\ntrace: [{', '.join(n.trace)}]"
    return text, {"result": _type_json(n.type), "rule_traces": list(n.trace)}


def cmd_compare(args):
    a = normalize_traced(syntax.parse_type(args.a)).type
    b = normalize_traced(syntax.parse_type(args.b)).type
    c = compare_types(a, b, args.mode)
    result = {"verdict": c.verdict.value, "mode": c.mode, "proper": c.proper,
              "a": _type_json(a), "b": _type_json(b)}
    return str(c), {"result": result, "rule_traces": list(c.trace)}


def cmd_spectrum(args):
    types = _spectrum(args.kind, _read_term(args))
    return _set_text(types), {"result": [_type_json(t) for t in _sorted_types(types)],
                              "rule_traces": []}


def cmd_chains(args):
    rows = _chains(args.kind, _read_term(args))
    text = "\n".join(" ".join(f"{k}={'-' if v is None else v}" for k, v in r.items()) for r in rows)
    return text, {"result": rows, "rule_traces": []}


def cmd_realize(args):
    text = _read_term(args)
    if args.variant == "interval":
        t = orders.realize_interval(syntax.parse_pairs(text))
        out = syntax.order_to_text(t)
        spec = orders.intalg_spectrum(t)
    else:
        t = pseudotrees.realize_weak_product(syntax.parse_card_list(text))
        out = syntax.tree_to_text(t)
        spec = pseudotrees.ptree_spectrum(t)
    result = {"term": out, "spectrum": [str(x) for x in _sorted_types(spec)]}
    if args.variant == "weakprod":
        result["root_type"] = str(pseudotrees.root_class(t).tukey)
    return f"{out}\nspectrum: {_set_text(spec)}", {"result": result, "rule_traces": []}


def cmd_oracle(args):
    suites = ("fans", "stone", "bridge") if args.suite == "all" else (args.suite,)
    texts, results = [], {}
    for s in suites:
        if s == "fans":
            r = finite.fan_invariance_oracle(args.max_n, bound=max(args.max_n, finite.DEFAULT_BOUND),
                                             workers=args.workers)
        elif s == "stone":
            r = finite.stone_oracle_sweep(min(args.max_n, 6))
        else:
            r = bridge.bridge_oracle(args.samples, seed=args.seed)
        texts.append(f"[{s}]\n{r.summary()}")
        results[s] = r.to_json()
    bad = sum(len(r.get("violations", r.get("failures", []))) for r in results.values())
    return "\n".join(texts), {"result": results, "rule_traces": []}, (3 if bad else 0)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    termargs = argparse.ArgumentParser(add_help=False)
    termargs.add_argument("term", nargs="?")
    termargs.add_argument("--file", help="read the term from PATH")

    p = argparse.ArgumentParser(prog="tukeyspec",
                                description="Compute the Tukey types realized by ultrafilters of symbolic Boolean algebras")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", parents=[common, termargs], help="normal form of a type term")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("compare", parents=[common], help="compare two type terms")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--mode", choices=("strict", "extended"), default="strict")
    s.set_defaults(func=cmd_compare)

    for name, func, blurb in (("spectrum", cmd_spectrum, "Tukey spectrum of an algebra"),
                              ("chains", cmd_chains, "chain classes behind the spectrum")):
        s = sub.add_parser(name, parents=[common, termargs], help=blurb)
        s.add_argument("--kind", choices=KINDS, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("realize", parents=[common], help="build an algebra with given types")
    s.add_argument("variant", choices=("interval", "weakprod"))
    s.add_argument("term", nargs="?")
    s.add_argument("--file")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("oracle", parents=[common], help="run brute-force checks")
    s.add_argument("--suite", choices=("fans", "stone", "bridge", "all"), default="all")
    s.add_argument("--max-n", type=int, default=finite.DEFAULT_BOUND)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_oracle)

    sub.add_parser("rules", parents=[common], help="list rule ids").set_defaults(func=cmd_rules)
    return p


def cmd_rules(args):
    rows = [{"id": r.id, "source": r.source, "statement": r.statement} for r in RULES.values()]
    text = "\n".join(f"{r['id']:<14} {r['source']:<9} {r['statement']}" for r in rows)
    return text, {"result": rows, "rule_traces": []}


def run(argv) -> tuple[int, str, str]:
    """Run one command; returns (exit status, stdout text, stderr text)."""
    args = build_parser().parse_args(argv)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "json")}
    try:
        out = args.func(args)
    except ParseError as e:
        return 1, "", f"parse error: {e}"
    except DomainError as e:
        return 2, "", f"domain error: {e}"
    text, payload, status = out if len(out) == 3 else (*out, 0)
    if args.json:
        text = json.dumps({"input": echo, **payload}, indent=2, sort_keys=True)
    return status, text, ""


def main(argv=None):
    status, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
