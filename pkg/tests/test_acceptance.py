"""Acceptance criteria, one test and one PASS/FAIL line each.

Run under pytest for the summary table, or directly with
``python3 tests/test_acceptance.py`` to print the lines as they finish.
"""

import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import ACCEPTANCE, PROBLEMS  # noqa: E402
from semunify import (  # noqa: E402
    BOOLEAN,
    RATIONAL,
    REAL,
    Clash,
    Glued,
    Inconsistent,
    RestrictionMismatch,
    all_gluings_bruteforce,
    canonical_glue,
    check_functor_laws,
    drs_to_section,
    enumerate_candidate_covers,
    entropy,
    from_weights,
    glue,
    merge,
    parse_literal,
    parse_problem,
    pushforward,
    resolve,
    resolve_by_equations,
    unification_cover,
)
from semunify.drt import DRS  # noqa: E402
from semunify.generators import exhaustive_functor_cases, random_cover, random_family  # noqa: E402
from semunify.logic import Literal  # noqa: E402
from semunify.ranking import FrequencyTable  # noqa: E402

TIME_LIMIT = 5.0  # seconds per criterion
DECIMAL_TOL = 0.01
REFERENCE_DECIMALS = {"t1": 0.29, "t2": 0.5, "t3": 0.0, "t4": 0.205}
FUNCTOR_CASES_MIN = 10_000
UNIQUENESS_CASES = 1_000
# three target variables already allow 3**12 gluings, too many to list in budget
UNIQUENESS_TARGET_VARS = 2
SHORTCUT_CASES = 1_000
DRT_CASES = 500
DISTRIBUTION_CASES = 2_000


def lits(*texts):
    return frozenset(parse_literal(t) for t in texts)


def load(name):
    return parse_problem((PROBLEMS / name).read_text(encoding="utf-8"))


def family(pf, cover, names):
    return pf.covers[cover], [pf.sections[n] for n in names]


def record(n, title, ok, detail, elapsed):
    if elapsed > TIME_LIMIT:
        ok = False
        detail += "; over the %.0fs budget" % TIME_LIMIT
    line = "criterion %d %s %s (%.2fs): %s" % (n, "PASS" if ok else "FAIL", title, elapsed, detail)
    ACCEPTANCE.append(line)
    print(line)
    return ok


class timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def test_1_sleeps_snores():
    with timer() as t:
        cover, fam = family(load("ex1_sleeps.sem"), "c", ["s1", "s2"])
        res = glue(cover, fam)
        want = lits("John(z)", "sleeps(z)", "snores(z)")
        ok = isinstance(res, Glued) and res.section.literals == want
    detail = "glued %s" % (res.section if isinstance(res, Glued) else res)
    assert record(1, "sleeps/snores golden", ok, detail, t.elapsed)


def test_2_donkey_golden_and_unique():
    with timer() as t:
        cover, fam = family(load("ex2_donkey.sem"), "c", ["s1", "s2", "s3"])
        res = glue(cover, fam)
        want = lits("John(a)", "donkey(b)", "owns(a, b)", "beats(a, b)")
        golden = isinstance(res, Glued) and res.section.literals == want
        found = all_gluings_bruteforce(cover, fam)
    ok = golden and len(found) == 1 and found[0] == res.section
    detail = "glue %s; brute force finds %d gluing(s)" % ("matches" if golden else "differs", len(found))
    if len(found) > 1:
        detail += " (John(b) and donkey(a) are reached by no leg, so each may be asserted, denied or omitted)"
    assert record(2, "donkey golden + oracle uniqueness", ok, detail, t.elapsed)


def test_3_grey_agreement():
    with timer() as t:
        pf = load("ex3_grey.sem")
        merged, fam = family(pf, "merged", ["s1", "s2", "s3"])
        bad = glue(merged, fam)
        rejected = isinstance(bad, Clash) and {l.relation.name for l in bad.pair} == {"Man"}
        good = glue(pf.covers["good"], fam)
        want = lits("John(a)", "Man(a)", "donkey(b)", "¬Man(b)", "grey(b)")
        accepted = isinstance(good, Glued) and good.section.literals == want
    ok = rejected and accepted
    detail = "merging cover -> %s; separating cover -> %s" % (
        "Clash on Man" if rejected else bad, good.section if isinstance(good, Glued) else good)
    assert record(3, "grey donkey agreement", ok, detail, t.elapsed)


def test_4_counterexample():
    with timer() as t:
        pf = load("counterexample.sem")
        cover, fam = family(pf, "c", ["s1", "s2"])
        res = glue(cover, fam)
        found = all_gluings_bruteforce(cover, fam)
    ok = (
        isinstance(res, RestrictionMismatch)
        and pf.cover_legs["c"][res.leg] == "f1"
        and res.residue == lits("S(x)", "R(u)")
        and found == []
    )
    detail = "%s on %s residue {%s}; brute force finds %d" % (
        type(res).__name__, pf.cover_legs["c"][getattr(res, "leg", 0)],
        ", ".join(str(l) for l in sorted(getattr(res, "residue", ()))), len(found))
    assert record(4, "sections with no gluing", ok, detail, t.elapsed)


def test_5_bananas():
    with timer() as t:
        pf = load("bananas.sem")
        table = FrequencyTable.from_tsv((PROBLEMS / "bananas.tsv").read_text(encoding="utf-8"))
        ante = pf.sections["s1"]
        anaphors = [pf.sections["s2"], pf.sections["s3"]]
        covers = enumerate_candidate_covers(ante, anaphors, pf.anaphors)
        res = resolve(covers, [ante] + anaphors, pf.patterns, table)
        probs = [r.probability for r in res.rows]
    exact = probs == [Fraction(14, 48), Fraction(24, 48), Fraction(0), Fraction(10, 48)]
    decimals = [abs(float(p) - REFERENCE_DECIMALS["t%d" % (i + 1)]) <= DECIMAL_TOL for i, p in enumerate(probs)]
    t2 = res.rows[1].gluing if len(res.rows) > 1 else None
    best_ok = res.best == [t2] and t2 is not None and lits("Ripe(y)", "Cheeky(z)") <= t2.literals
    ok = exact and all(decimals) and best_ok
    detail = "weights %s; decimals %s; argmax %s; entropy %.4f bits" % (
        ", ".join(str(p) for p in probs), ", ".join("%.4f" % float(p) for p in probs),
        "t2" if best_ok else res.best, entropy(res.distribution))
    assert record(5, "ripe bananas, cheeky monkeys", ok, detail, t.elapsed)


def test_6_functor_laws():
    with timer() as t:
        rep = check_functor_laws(exhaustive_functor_cases(random.Random(6)))
    ok = rep.ok and rep.checked >= FUNCTOR_CASES_MIN
    detail = "%d cases, %d violations" % (rep.checked, len(rep.violations))
    assert record(6, "restriction functor laws", ok, detail, t.elapsed)


def test_7_uniqueness():
    rng = random.Random(7)
    many = mismatched = 0
    example = None
    with timer() as t:
        for _ in range(UNIQUENESS_CASES):
            cover = random_cover(rng, max_target_vars=UNIQUENESS_TARGET_VARS)
            fam = random_family(rng, cover)
            found = all_gluings_bruteforce(cover, fam)
            res = glue(cover, fam)
            if len(found) > 1:
                many += 1
                example = example or (cover, len(found))
            if len(found) == 1 and not (isinstance(res, Glued) and res.section == found[0]):
                mismatched += 1
    ok = many == 0 and mismatched == 0
    detail = "%d instances; %d with several gluings, %d where the single gluing differs from glue" % (
        UNIQUENESS_CASES, many, mismatched)
    if example:
        detail += "; e.g. %d gluings over target %s" % (example[1], example[0].target.vars and sorted(example[0].target.vars))
    assert record(7, "uniqueness of gluings", ok, detail, t.elapsed)


def test_8_disjoint_shortcut():
    rng = random.Random(8)
    consistent = bad = 0
    with timer() as t:
        for _ in range(SHORTCUT_CASES):
            cover = random_cover(rng, disjoint_vocab=True)
            fam = random_family(rng, cover)
            try:
                canonical_glue(cover, fam)
            except Inconsistent:
                continue
            consistent += 1
            if not isinstance(glue(cover, fam), Glued):
                bad += 1
    ok = bad == 0
    detail = "%d instances, %d with consistent union, %d of those not glued" % (SHORTCUT_CASES, consistent, bad)
    if bad:
        detail += " (a non-injective leg sees one target atom under several names)"
    assert record(8, "pairwise-disjoint shortcut", ok, detail, t.elapsed)


def test_9_distributions():
    rng = random.Random(9)
    failures = []
    with timer() as t:
        for i in range(DISTRIBUTION_CASES):
            xs = ["x%d" % k for k in range(rng.randint(1, 6))]
            raw = {x: rng.randint(0, 9) for x in xs}
            raw[rng.choice(xs)] += 1
            f = {x: rng.choice("abc") for x in xs}
            g = {y: rng.choice("pq") for y in "abc"}
            for sr in (RATIONAL, REAL, BOOLEAN):
                d = from_weights(raw, sr)
                fd = pushforward(f, d)
                if pushforward(lambda x: g[f[x]], d) != pushforward(g, fd):
                    failures.append((i, sr.name, "composition"))
                if pushforward(lambda x: x, d) != d:
                    failures.append((i, sr.name, "identity"))
                if fd.support != frozenset(f[x] for x in d.support):
                    failures.append((i, sr.name, "support is the direct image"))
                if sr is RATIONAL and sum(fd.weights.values()) != 1:
                    failures.append((i, sr.name, "normalisation"))
                if sr is not BOOLEAN:
                    h = entropy(d)
                    if not (-1e-12 <= h <= math.log2(len(d)) + 1e-12):
                        failures.append((i, sr.name, "entropy bounds"))
    ok = not failures
    detail = "%d instances x 3 semirings, %d violations" % (DISTRIBUTION_CASES, len(failures))
    assert record(9, "distribution functor", ok, detail, t.elapsed)


def random_drs(rng, refs, rels=(("R", 1), ("S", 2))):
    conds = set()
    for _ in range(rng.randint(0, 4)):
        name, arity = rng.choice(rels)
        lit = Literal.of(name, *(rng.choice(refs) for _ in range(arity)), positive=rng.random() < 0.7)
        if lit.complement() not in conds:
            conds.add(lit)
    return DRS(frozenset(refs), frozenset(conds))


def test_10_drt_agreement():
    rng = random.Random(10)
    disagree = resolved_only = glued_only = 0
    example = None
    with timer() as t:
        for _ in range(DRT_CASES):
            k1 = random_drs(rng, ["a%d" % i for i in range(rng.randint(1, 3))])
            k2 = random_drs(rng, ["u%d" % i for i in range(rng.randint(1, 2))])
            eqs = {(u, rng.choice(sorted(k1.referents))) for u in sorted(k2.referents) if rng.random() < 0.8}
            cover, fam = unification_cover([k1, k2], eqs)
            res = glue(cover, fam)
            try:
                expected = drs_to_section(resolve_by_equations(merge(k1, k2), eqs))
            except Inconsistent:
                expected = None
            if expected is None and res.ok:
                glued_only += 1
            elif expected is not None and not res.ok:
                resolved_only += 1
                example = example or (k1, k2, sorted(eqs))
            elif expected is not None and res.section != expected:
                disagree += 1
    bad = disagree + resolved_only + glued_only
    ok = bad == 0
    detail = "%d instances; %d resolve but do not glue, %d glue but do not resolve, %d differ" % (
        DRT_CASES, resolved_only, glued_only, disagree)
    if example:
        detail += "; e.g. %s + %s with %s" % example
    assert record(10, "DRS resolution vs gluing", ok, detail, t.elapsed)


if __name__ == "__main__":
    code = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                code = 1
    sys.exit(code)
