"""
Compatible sections without a gluing
====================================

Two sections can agree wherever they overlap and still admit no gluing,
because a leg that sees both target variables is forced to see more
literals than it asserts.
"""

from pathlib import Path

from semunify import all_gluings_bruteforce, glue, parse_problem

pf = parse_problem((Path(__file__).parent / "problems" / "counterexample.sem").read_text(encoding="utf-8"))
cover = pf.covers["c"]
fam = [pf.sections["s1"], pf.sections["s2"]]

res = glue(cover, fam)
print(type(res).__name__)
print("candidate:", res.candidate)
print("first failing leg:", pf.cover_legs["c"][res.leg])
print("residue:", sorted(str(l) for l in res.residue))

# the oracle agrees: nothing over the target restricts to both
print("brute force:", all_gluings_bruteforce(cover, fam))
