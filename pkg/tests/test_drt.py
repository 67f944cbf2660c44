from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from semunify import (
    DRS,
    AnaphorSpec,
    Context,
    Glued,
    Inconsistent,
    Literal,
    canonical_glue,
    drs_to_section,
    enumerate_candidate_covers,
    find_clash,
    glue,
    merge,
    parse_literal,
    resolve_by_equations,
    section_of,
    unification_cover,
    validate_cover,
)
from semunify.drt import EMPTY, alpha_equivalent
from semunify.errors import DisjointnessViolated, UnknownVariable

L = parse_literal


def drs(refs, *conds):
    return DRS(frozenset(refs), frozenset(map(L, conds)))


DONKEY1 = drs("xy", "John(x)", "Donkey(y)", "Own(x, y)")
DONKEY2 = drs("vw", "Beat(v, w)")


def test_merge_donkey_sentences():
    k = merge(DONKEY1, DONKEY2)
    assert k == drs("xyvw", "John(x)", "Donkey(y)", "Own(x, y)", "Beat(v, w)")


def test_merge_with_empty():
    assert merge(DONKEY1, EMPTY) == DONKEY1
    assert merge(EMPTY, DONKEY1) == DONKEY1


def test_merge_freshens_clashing_referents():
    k = merge(drs("x", "R(x)"), drs("x", "S(x)"))
    assert k == DRS(frozenset({"x", "x'"}), frozenset({L("R(x)"), L("S(x')")}))
    k3 = merge(k, drs("x", "T(x)"))
    assert k3.referents == {"x", "x'", "x''"}
    assert L("T(x'')") in k3.conditions


def test_drs_to_section():
    s = drs_to_section(drs("x", "John(x)", "sleeps(x)"))
    assert s == section_of("John(x)", "sleeps(x)")
    empty = drs_to_section(drs("y"), vocab=["snores/1"])
    assert len(empty) == 0 and empty.context == Context.of(["snores/1"], ["y"])
    merged = drs_to_section(merge(DONKEY1, DONKEY2))
    assert len(merged) == 4 and merged.context.vars == {"x", "y", "v", "w"}


def test_drs_rejects_inconsistent_conditions():
    with pytest.raises(Inconsistent):
        drs("b", "Man(b)", "¬Man(b)")


def test_resolve_donkey():
    k = merge(DONKEY1, DONKEY2)
    assert resolve_by_equations(k, {("v", "x"), ("w", "y")}) == drs(
        "xy", "John(x)", "Donkey(y)", "Own(x, y)", "Beat(x, y)"
    )
    assert resolve_by_equations(k, set()) == k


def test_resolve_inconsistent_and_unknown():
    with pytest.raises(Inconsistent):
        resolve_by_equations(drs("ab", "Man(a)", "¬Man(b)"), {("b", "a")})
    with pytest.raises(UnknownVariable):
        resolve_by_equations(DONKEY1, {("q", "x")})


def test_resolve_keeps_antecedent_through_chains():
    k = drs("abc", "R(a)", "S(b)", "T(c)")
    r = resolve_by_equations(k, [("c", "b"), ("b", "a")])
    assert r.referents == {"a"}


# candidate covers

BANANAS = section_of("John(x)", "Banana(y)", "Monkey(z)", "Gave(x, y, z)")
RIPE = section_of("Ripe(u)")
CHEEKY = section_of("Cheeky(v)")


def assignments(covers):
    return [{k: v for k, v in c.assignment().items() if k in "uvwz" and k not in c.legs[0].source.vars} for c in covers]


def test_bananas_four_covers():
    specs = [AnaphorSpec({"u"}, allowed={"y", "z"}), AnaphorSpec({"v"}, allowed={"y", "z"})]
    covers = enumerate_candidate_covers(BANANAS, [RIPE, CHEEKY], specs)
    assert assignments(covers) == [
        {"u": "y", "v": "y"},
        {"u": "y", "v": "z"},
        {"u": "z", "v": "y"},
        {"u": "z", "v": "z"},
    ]


def test_bananas_without_number_agreement_lets_john_in():
    assert len(enumerate_candidate_covers(BANANAS, [RIPE, CHEEKY])) == 9


def test_grey_donkey_single_cover():
    ante = section_of("John(x)", "Man(x)", "donkey(y)", "¬Man(y)")
    it = section_of("grey(z)")
    covers = enumerate_candidate_covers(ante, [it], [AnaphorSpec({"z"}, {L("¬Man(z)")})])
    assert len(covers) == 1
    assert covers[0].legs[1].mapping == {"z": "y"}


def test_one_anaphor_one_antecedent():
    covers = enumerate_candidate_covers(section_of("R(a)"), [section_of("S(p)")])
    assert len(covers) == 1


def test_disjointness_enforced():
    with pytest.raises(DisjointnessViolated):
        enumerate_candidate_covers(section_of("R(a)"), [section_of("S(a)")])
    with pytest.raises(DisjointnessViolated):
        enumerate_candidate_covers(section_of("R(a)"), [section_of("S(p)"), section_of("T(p)")])


def _exhaustive_covers(ante, anaphors, specs):
    """Oracle: every assignment of anaphor variables, filtered by a direct consistency check."""
    avars = sorted(set().union(*(s.context.vars for s in anaphors)))
    allowed = {v: sorted(ante.context.vars) for v in avars}
    constraints = []
    for sp in specs:
        for v in sp.anaphor_vars:
            if sp.allowed is not None:
                allowed[v] = [a for a in allowed[v] if a in sp.allowed]
        constraints += list(sp.constraints)
    out = []
    for images in product(*(allowed[v] for v in avars)):
        m = dict(zip(avars, images))
        lits = set(ante.literals)
        for s in list(anaphors) + [None]:
            pool = s.literals if s is not None else constraints
            lits |= {l.rename(lambda a: m.get(a, a)) for l in pool}
        if find_clash(lits) is None:
            out.append(m)
    return out


ante_lits = ["R(a)", "¬R(b)", "S(a, b)", "¬S(b, a)", "T(c)"]


@given(
    st.sets(st.sampled_from(ante_lits), min_size=1),
    st.lists(st.sets(st.sampled_from(["R", "¬R", "T", "¬T", "Q"]), min_size=1, max_size=2), min_size=1, max_size=2),
    st.booleans(),
)
@settings(max_examples=200, deadline=None)
def test_enumeration_is_exhaustive_and_sound(ante_texts, anaphor_preds, with_constraint):
    ante = section_of(*sorted(ante_texts), vars="abc")
    anaphors = []
    for i, preds in enumerate(anaphor_preds):
        var = "p%d" % i
        texts = sorted("%s(%s)" % (p, var) for p in preds)
        if any(t.startswith("¬") and t[1:] in texts for t in texts):
            return
        anaphors.append(section_of(*texts))
    specs = [AnaphorSpec({"p0"}, {L("¬R(p0)")})] if with_constraint else []
    covers = enumerate_candidate_covers(ante, anaphors, specs)
    for c in covers:
        validate_cover(c)
        canonical_glue(c, [ante] + anaphors)
    got = [{k: v for k, v in c.assignment().items() if k.startswith("p")} for c in covers]
    assert got == _exhaustive_covers(ante, anaphors, specs)


# DRS properties

@st.composite
def small_drs(draw, prefix, rels=("R", "S")):
    n = draw(st.integers(1, 2))
    refs = ["%s%d" % (prefix, i) for i in range(n)]
    conds = set()
    for _ in range(draw(st.integers(0, 3))):
        name = draw(st.sampled_from(rels))
        pos = draw(st.booleans())
        arity = 1 if name in ("R", "T") else 2
        args = tuple(draw(st.sampled_from(refs)) for _ in range(arity))
        lit = Literal.of(name, *args, positive=pos)
        if lit.complement() not in conds:
            conds.add(lit)
    return DRS(frozenset(refs), frozenset(conds))


@given(small_drs("x"), small_drs("x"), small_drs("x"))
@settings(max_examples=200, deadline=None)
def test_merge_associative_up_to_renaming(k1, k2, k3):
    assert alpha_equivalent(merge(merge(k1, k2), k3), merge(k1, merge(k2, k3)))


@given(small_drs("a", ("R", "S")), small_drs("p", ("T", "U")), st.data())
@settings(max_examples=300, deadline=None)
def test_drt_and_gluing_agree_on_disjoint_vocabularies(k1, k2, data):
    # one antecedent DRS and one anaphoric DRS with disjoint vocabularies;
    # distinct anaphors go to distinct antecedents
    ante = sorted(k1.referents)
    anas = sorted(k2.referents)
    if len(anas) > len(ante):
        return
    images = data.draw(st.permutations(ante))[: len(anas)]
    eqs = set(zip(anas, images))
    cover, fam = unification_cover([k1, k2], eqs)
    res = glue(cover, fam)
    merged = merge(k1, k2)
    try:
        expected = drs_to_section(resolve_by_equations(merged, eqs))
    except Inconsistent:
        assert not res.ok
        return
    assert isinstance(res, Glued)
    assert res.section == expected


def test_drt_and_gluing_disagree_on_shared_vocabulary():
    # the anaphoric sentence says R of v only, but its referent w is
    # identified with b, about which the antecedent asserts R
    k1 = drs("ab", "R(a)", "R(b)")
    k2 = drs("vw", "R(v)", "S(v, w)")
    eqs = {("v", "a"), ("w", "b")}
    expected = drs_to_section(resolve_by_equations(merge(k1, k2), eqs))
    cover, fam = unification_cover([k1, k2], eqs)
    assert not glue(cover, fam).ok
    assert expected.literals == {L("R(a)"), L("R(b)"), L("S(a, b)")}
