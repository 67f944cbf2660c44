"""
Discourse representation structures
===================================

Merging two DRS and equating the anaphors with their antecedents gives
the same section as gluing the two along the induced cover, at least
when the sentences talk about different relations.
"""

from semunify import (
    DRS,
    drs_to_section,
    glue,
    merge,
    parse_literal,
    resolve_by_equations,
    unification_cover,
)


def drs(refs, *conds):
    return DRS(frozenset(refs), frozenset(parse_literal(c) for c in conds))


k1 = drs("xy", "John(x)", "Donkey(y)", "Own(x, y)")
k2 = drs("vw", "Beat(v, w)")
eqs = [("v", "x"), ("w", "y")]

merged = merge(k1, k2)
print("merged:  ", merged)
resolved = resolve_by_equations(merged, eqs)
print("resolved:", resolved)

cover, sections = unification_cover([k1, k2], eqs)
res = glue(cover, sections)
print("glued:   ", res.section)
print("agree:", res.section == drs_to_section(resolved))

# With a relation shared between the sentences the two can part ways.
# The second sentence speaks of R only for v, but once w is b the glued
# theory says R(b) too, which restricts back to an extra R(w).
k1 = drs("ab", "R(a)", "R(b)")
k2 = drs("vw", "R(v)", "S(v, w)")
eqs = [("v", "a"), ("w", "b")]
print("\nresolved:", resolve_by_equations(merge(k1, k2), eqs))
cover, sections = unification_cover([k1, k2], eqs)
print("glue:", glue(cover, sections))
