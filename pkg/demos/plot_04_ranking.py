"""
Ranking resolutions with corpus counts
======================================

"John gave the bananas to the monkeys. They were ripe. They were cheeky."
Each plural pronoun may refer to the bananas or to the monkeys, so there
are four candidate covers.  Counts of adjective-noun pairs weight them.
"""

from pathlib import Path

from semunify import FrequencyTable, enumerate_candidate_covers, parse_problem, resolve

HERE = Path(__file__).parent / "problems"
pf = parse_problem((HERE / "bananas.sem").read_text(encoding="utf-8"))
table = FrequencyTable.from_tsv((HERE / "bananas.tsv").read_text(encoding="utf-8"))
print(table.counts)

ante = pf.sections["s1"]
anaphors = [pf.sections["s2"], pf.sections["s3"]]
covers = enumerate_candidate_covers(ante, anaphors, pf.anaphors)

res = resolve(covers, [ante] + anaphors, pf.patterns, table)
for r in res.rows:
    a = r.cover.assignment()
    print("t%d  u->%s v->%s  %2d/%d = %.3f" % (r.index + 1, a["u"], a["v"], r.weight, r.total, float(r.probability)))

print("most likely:", res.best[0])
print("entropy: %.4f bits" % res.entropy)
