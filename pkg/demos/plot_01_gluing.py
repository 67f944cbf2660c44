"""
Gluing local sections
=====================

Each sentence of a discourse gives a small theory over its own variables.
Gluing along a cover identifies variables across sentences and merges
the theories into one.
"""

from pathlib import Path

from semunify import Glued, all_gluings_bruteforce, glue, parse_problem, restrict

HERE = Path(__file__).parent / "problems"


def load(name):
    return parse_problem((HERE / name).read_text(encoding="utf-8"))


# "John sleeps. He snores."  Both x and y go to z.
pf = load("ex1_sleeps.sem")
cover = pf.covers["c"]
res = glue(cover, [pf.sections["s1"], pf.sections["s2"]])
print("sleeps/snores:", res.section)

# restricting the gluing back gives the local sections again
for leg, name in zip(cover.legs, ("s1", "s2")):
    print("  back along", name, "->", restrict(leg, res.section))

# "John beats his donkey."  Three sections, one per content word.
pf = load("ex2_donkey.sem")
fam = [pf.sections[n] for n in ("s1", "s2", "s3")]
res = glue(pf.covers["c"], fam)
print("\ndonkey:", res.section)

# The brute-force oracle lists every section over the target that restricts
# correctly.  Atoms no leg can see (John(b), donkey(a)) are left free, so
# there are more gluings than one; the computed gluing is the least of them.
found = all_gluings_bruteforce(pf.covers["c"], fam)
print("brute force finds %d gluings" % len(found))
print("least:", all(res.section.literals <= s.literals for s in found))

# Agreement: "John owns a donkey. It is grey."  Sending everything to one
# referent clashes on Man; the separating cover glues.
pf = load("ex3_grey.sem")
fam = [pf.sections[n] for n in ("s1", "s2", "s3")]
for name in ("merged", "good"):
    res = glue(pf.covers[name], fam)
    print("\n%s:" % name, res.section if isinstance(res, Glued) else res)
