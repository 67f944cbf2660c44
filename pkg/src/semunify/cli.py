"""Command-line front end: ``semunify <command> PROBLEM [options]``.

Exit status is 0 on success, 1 when the input is well formed but the
requested construction fails (no gluing, inconsistent resolution, law
violations, no corpus support) and 2 for usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .distribution import BOOLEAN, RATIONAL, from_weights, pushforward, semiring_axiom_failures
from .drt import EMPTY, drs_to_section, enumerate_candidate_covers, merge, resolve_by_equations
from .dsl import ProblemFile, parse_problem
from .errors import (
    AllZero,
    DSLError,
    DSLNameError,
    Inconsistent,
    InconsistentCover,
    SemUnifyError,
)
from .generators import random_context, random_section
from .gluing import DEFAULT_MAX_SLOTS, Clash, Glued, all_gluings_bruteforce, glue
from .logic import Section
from .presheaf import Morphism, check_functor_laws, restrict
from .ranking import FrequencyTable, resolve

log = logging.getLogger("semunify")

SEMANTIC_FAILURE = 1
INPUT_ERROR = 2


class Failure(Exception):
    """Semantic failure carrying the report to print before exiting 1."""

    def __init__(self, report, text):
        self.report = report
        self.text = text


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _lits(s) -> List[str]:
    return [str(l) for l in sorted(s)]


def _names(arg: Optional[str]) -> List[str]:
    return [n.strip() for n in arg.split(",") if n.strip()] if arg else []


def _get(pf: ProblemFile, kind: str, name: str):
    try:
        return pf.lookup(kind, name)
    except DSLNameError as e:
        raise DSLNameError("--%s: %s" % (kind, e.bare_message)) from None


def _family_for(pf: ProblemFile, cover, names: List[str]) -> List[Section]:
    if names:
        return [_get(pf, "section", n) for n in names]
    family = []
    for i, leg in enumerate(cover.legs):
        matches = [n for n, s in pf.sections.items() if s.context == leg.source]
        if len(matches) != 1:
            raise DSLNameError(
                "cannot pick the section for leg %d: %d sections over its source; use --sections" % (i, len(matches))
            )
        family.append(pf.sections[matches[0]])
    return family


def _sole(pf: ProblemFile, kind: str, name: Optional[str]):
    if name:
        return name, _get(pf, kind, name)
    table = getattr(pf, kind + "s")
    if len(table) != 1:
        raise DSLNameError("the file declares %d %ss; name one with --%s" % (len(table), kind, kind))
    return next(iter(table.items()))


# commands


def cmd_glue(pf: ProblemFile, args):
    cname, cover = _sole(pf, "cover", args.cover)
    family = _family_for(pf, cover, _names(args.sections))
    legs = pf.cover_legs.get(cname) or tuple("leg%d" % i for i in range(len(cover.legs)))
    res = glue(cover, family)
    report = {"command": "glue", "cover": cname, "legs": list(legs)}
    if isinstance(res, Glued):
        report.update(outcome="glued", section=_lits(res.section))
        text = "cover %s: glued\n  %s" % (cname, res.section)
    elif isinstance(res, Clash):
        report.update(outcome="inconsistent", pair=[str(l) for l in res.pair])
        text = "cover %s: no gluing, pushed-forward literals clash: %s vs %s" % (cname, *map(str, res.pair))
    else:
        report.update(
            outcome="restriction-mismatch",
            leg=legs[res.leg],
            residue=_lits(res.residue),
            residues={legs[i]: _lits(r) for i, r in sorted(res.residues.items())},
            candidate=_lits(res.candidate),
        )
        text = "cover %s: no gluing\n  candidate %s\n  restriction along %s differs by {%s}" % (
            cname, res.candidate, legs[res.leg], ", ".join(_lits(res.residue)))
    if args.oracle:
        found = all_gluings_bruteforce(cover, family, max_slots=args.max_bruteforce)
        report["bruteforce"] = {"count": len(found), "gluings": [_lits(s) for s in found[:50]]}
        text += "\n  brute force: %d gluing(s)" % len(found)
    if not res.ok:
        raise Failure(report, text)
    return report, text


def cmd_restrict(pf: ProblemFile, args):
    m = _get(pf, "morphism", args.morphism)
    s = _get(pf, "section", args.section)
    out = restrict(m, s)
    report = {"command": "restrict", "morphism": args.morphism, "section": args.section, "result": _lits(out)}
    return report, "%s restricted along %s:\n  %s" % (args.section, args.morphism, out)


def _problem_parts(pf: ProblemFile, args):
    if not args.antecedent or not args.anaphors:
        raise DSLNameError("need --antecedent and --anaphors")
    ante = _get(pf, "section", args.antecedent)
    anaphors = [_get(pf, "section", n) for n in _names(args.anaphors)]
    vs = set().union(*(s.context.vars for s in anaphors))
    specs = [spec for spec in pf.anaphors if spec.anaphor_vars & vs]
    return ante, anaphors, specs


def _assignment(cover) -> str:
    first = cover.legs[0].source.vars
    a = cover.assignment()
    return ", ".join("%s -> %s" % (k, a[k]) for k in sorted(a) if k not in first)


def cmd_covers(pf: ProblemFile, args):
    ante, anaphors, specs = _problem_parts(pf, args)
    covers = enumerate_candidate_covers(ante, anaphors, specs)
    rows = [{"name": "c%d" % (i + 1), "assignment": _assignment(c)} for i, c in enumerate(covers)]
    report = {"command": "covers", "covers": rows}
    text = "\n".join("%s : %s" % (r["name"], r["assignment"]) for r in rows) or "no candidate cover"
    if not covers:
        raise Failure(report, text)
    return report, text


def _decimal(q: Fraction) -> str:
    return "%.4f" % float(q)


def cmd_rank(pf: ProblemFile, args):
    table = FrequencyTable.from_tsv(_read(args.frequencies))
    if args.covers:
        covers = [_get(pf, "cover", n) for n in _names(args.covers)]
        sections = _family_for(pf, covers[0], _names(args.sections))
    else:
        ante, anaphors, specs = _problem_parts(pf, args)
        covers = enumerate_candidate_covers(ante, anaphors, specs)
        sections = [ante] + anaphors
    try:
        res = resolve(covers, sections, pf.patterns, table, strict=args.strict)
    except (AllZero, InconsistentCover) as e:
        raise Failure({"command": "rank", "error": str(e)}, str(e)) from None
    label = {}
    for r in res.rows:
        label.setdefault(r.gluing, "t%d" % (r.index + 1))
    rows = []
    for r in res.rows:
        q = res.distribution[r.gluing]
        rows.append({
            "gluing": "t%d" % (r.index + 1),
            "same_as": label[r.gluing] if label[r.gluing] != "t%d" % (r.index + 1) else None,
            "covering": _assignment(r.cover),
            "weight": r.weight,
            "ratio": "%d/%d" % (r.weight, r.total),
            "probability": str(r.probability),
            "decimal": _decimal(r.probability),
            "pooled_probability": str(q),
            "section": _lits(r.gluing),
        })
    best = [label[s] for s in res.best]
    report = {
        "command": "rank",
        "rows": rows,
        "best": best,
        "entropy_bits": round(res.entropy, 6),
        "total": res.rows[0].total if res.rows else 0,
    }
    lines = ["%-4s %-22s %6s %8s %8s" % ("t", "covering", "weight", "ratio", "d(t)")]
    for row in rows:
        lines.append("%-4s %-22s %6d %8s %8s" % (row["gluing"], row["covering"], row["weight"], row["ratio"], row["decimal"]))
    for row in rows:
        lines.append("%s = {%s}" % (row["gluing"], ", ".join(row["section"])))
    lines.append("best: %s" % ", ".join(best))
    lines.append("entropy: %.4f bits" % res.entropy)
    return report, "\n".join(lines)


def _equation(text: str):
    left, sep, right = text.partition("=")
    if not sep or not left.strip() or not right.strip():
        raise argparse.ArgumentTypeError("equation must look like v=x")
    return left.strip(), right.strip()


def cmd_resolve(pf: ProblemFile, args):
    names = _names(args.drs) or list(pf.drss)
    if not names:
        raise DSLNameError("no DRS declared")
    k = EMPTY
    for n in names:
        k = merge(k, _get(pf, "drs", n))
    report = {"command": "resolve", "merged": str(k), "equations": ["%s=%s" % e for e in args.eq]}
    try:
        r = resolve_by_equations(k, args.eq)
    except Inconsistent as e:
        report["error"] = str(e)
        raise Failure(report, "merged %s\nresolution is inconsistent: %s" % (k, e)) from None
    report.update(resolved=str(r), section=_lits(drs_to_section(r)))
    return report, "merged   %s\nresolved %s" % (k, r)


def cmd_laws_check(args):
    rng = random.Random(args.seed)
    violations = []
    functor_cases = 0
    for _ in range(args.cases):
        A = random_context(rng, "a", min_vars=0)
        B = random_context(rng, "b", min_vars=0 if not A.vars else 1)
        C = random_context(rng, "c", min_vars=0 if not B.vars else 1)
        B = type(B)(A.vocab | B.vocab, B.vars)
        C = type(C)(B.vocab | C.vocab, C.vars)
        f = Morphism(A, B, {x: rng.choice(sorted(B.vars)) for x in A.vars})
        g = Morphism(B, C, {x: rng.choice(sorted(C.vars)) for x in B.vars})
        s = random_section(rng, C)
        rep = check_functor_laws([(g, f, s)])
        functor_cases += 1
        violations += ["functor: %s %s" % (v.law, v.detail) for v in rep.violations]
    rationals = [Fraction(rng.randint(0, 9), rng.randint(1, 5)) for _ in range(6)]
    violations += ["rational: " + v for v in semiring_axiom_failures(RATIONAL, rationals)]
    violations += ["boolean: " + v for v in semiring_axiom_failures(BOOLEAN, [False, True])]
    push_cases = 0
    for _ in range(args.cases):
        xs = ["x%d" % i for i in range(rng.randint(1, 5))]
        d = from_weights({x: rng.randint(1, 9) for x in xs})
        f = {x: rng.choice("pq") for x in xs}
        g = {y: rng.choice("uv") for y in "pq"}
        push_cases += 1
        if pushforward(lambda x: g[f[x]], d) != pushforward(g, pushforward(f, d)):
            violations.append("pushforward composition on %r" % (d.weights,))
        if sum(pushforward(f, d).weights.values()) != 1:
            violations.append("pushforward normalisation on %r" % (d.weights,))
    report = {
        "command": "laws-check",
        "seed": args.seed,
        "functor_cases": functor_cases,
        "pushforward_cases": push_cases,
        "violations": violations,
    }
    text = "functor laws: %d cases\npushforward: %d cases\nsemiring axioms: rational, boolean\nviolations: %d" % (
        functor_cases, push_cases, len(violations))
    if violations:
        raise Failure(report, text + "\n" + "\n".join(violations[:20]))
    return report, text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="print one JSON document instead of a table")
    common.add_argument("--max-bruteforce", type=int, default=DEFAULT_MAX_SLOTS, metavar="N",
                        help="literal-slot bound for brute-force enumeration (default %(default)s)")

    p = argparse.ArgumentParser(prog="semunify", description="Semantic unification of discourse by gluing sections.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("glue", parents=[common], help="glue a family of sections along a cover")
    g.add_argument("problem")
    g.add_argument("--cover")
    g.add_argument("--sections", help="comma-separated section names, one per leg")
    g.add_argument("--oracle", action="store_true", help="also enumerate all gluings by brute force")

    r = sub.add_parser("restrict", parents=[common], help="restrict a section along a morphism")
    r.add_argument("problem")
    r.add_argument("--morphism", required=True)
    r.add_argument("--section", required=True)

    for name, helptext in (("covers", "enumerate candidate covers for anaphora"),
                           ("rank", "rank candidate gluings by corpus frequencies")):
        c = sub.add_parser(name, parents=[common], help=helptext)
        c.add_argument("problem")
        if name == "rank":
            c.add_argument("frequencies", help="TSV file: label<TAB>count")
            c.add_argument("--covers", help="rank these declared covers instead of enumerating")
            c.add_argument("--sections", help="family for --covers")
            c.add_argument("--strict", dest="strict", action="store_true", default=True,
                           help="a missing pattern or count is an error (default)")
            c.add_argument("--no-strict", dest="strict", action="store_false", help="count missing patterns as 0")
        c.add_argument("--antecedent")
        c.add_argument("--anaphors", help="comma-separated anaphor section names")

    d = sub.add_parser("resolve", parents=[common], help="merge DRS and equate referents")
    d.add_argument("problem")
    d.add_argument("--drs", help="comma-separated DRS names, merged left to right (default: all)")
    d.add_argument("--eq", type=_equation, action="append", default=[], metavar="V=X",
                   help="equate anaphor V with antecedent X (repeatable)")

    lc = sub.add_parser("laws-check", parents=[common], help="run the functor, semiring and pushforward law suites")
    lc.add_argument("--seed", type=int, default=0)
    lc.add_argument("--cases", type=int, default=1000)
    return p


COMMANDS = {
    "glue": cmd_glue,
    "restrict": cmd_restrict,
    "covers": cmd_covers,
    "rank": cmd_rank,
    "resolve": cmd_resolve,
}


def _emit(report, text, machine, stream):
    if machine:
        stream.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        stream.write(text + "\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("warning: %(message)s"))
    logging.getLogger("semunify").addHandler(handler)
    try:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return INPUT_ERROR if e.code else 0
        try:
            if args.command == "laws-check":
                report, text = cmd_laws_check(args)
            else:
                pf = parse_problem(_read(args.problem))
                report, text = COMMANDS[args.command](pf, args)
        except Failure as f:
            _emit(f.report, f.text, args.machine, stdout)
            return SEMANTIC_FAILURE
        except Inconsistent as e:
            _emit({"command": args.command, "error": str(e)}, "inconsistent: %s" % e, args.machine, stdout)
            return SEMANTIC_FAILURE
        except (DSLError, SemUnifyError, OSError, UnicodeDecodeError) as e:
            if args.machine:
                _emit({"command": args.command, "error": str(e)}, "", True, stdout)
            stderr.write("error: %s\n" % e)
            return INPUT_ERROR
        _emit(report, text, args.machine, stdout)
        return 0
    finally:
        logging.getLogger("semunify").removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
