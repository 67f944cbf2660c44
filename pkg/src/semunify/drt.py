"""Basic discourse representation structures and candidate covers for anaphora.

A basic DRS is a pair (referents, literal conditions).  Merge is disjoint
union; resolution equates anaphoric referents with antecedents.  The same
resolution can be phrased as gluing along a cover, which is what
:func:`unification_cover` and :func:`enumerate_candidate_covers` build.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DisjointnessViolated, IllFormed, Inconsistent, UnknownVariable
from .gluing import Cover, canonical_glue
from .logic import Context, Literal, Section, Vocabulary, check_var, find_clash
from .presheaf import Morphism


@dataclass(frozen=True)
class DRS:
    referents: frozenset
    conditions: frozenset = frozenset()

    def __post_init__(self):
        refs = frozenset(check_var(v) for v in self.referents)
        conds = frozenset(self.conditions)
        for lit in conds:
            for a in lit.args:
                if a not in refs:
                    raise IllFormed("condition %s uses %s, not a referent" % (lit, a))
        Vocabulary(frozenset(l.relation for l in conds))
        clash = find_clash(conds)
        if clash is not None:
            raise Inconsistent(clash)
        object.__setattr__(self, "referents", refs)
        object.__setattr__(self, "conditions", conds)

    @property
    def vocab(self) -> Vocabulary:
        return Vocabulary(frozenset(l.relation for l in self.conditions))

    def rename(self, mapping) -> "DRS":
        return DRS(frozenset(mapping.get(v, v) for v in self.referents),
                   frozenset(l.rename(lambda a: mapping.get(a, a)) for l in self.conditions))

    def __str__(self):
        return "({%s}, {%s})" % (", ".join(sorted(self.referents)), ", ".join(str(l) for l in sorted(self.conditions)))


EMPTY = DRS(frozenset(), frozenset())


def merge(k1: DRS, k2: DRS) -> DRS:
    """Disjoint union; referents of ``k2`` that clash with ``k1`` get primes appended."""
    taken = set(k1.referents) | set(k2.referents)
    renaming = {}
    for v in sorted(k2.referents):
        if v in k1.referents:
            fresh = v + "'"
            while fresh in taken:
                fresh += "'"
            taken.add(fresh)
            renaming[v] = fresh
    k2 = k2.rename(renaming)
    return DRS(k1.referents | k2.referents, k1.conditions | k2.conditions)


def drs_to_section(k: DRS, vocab: Iterable = ()) -> Section:
    """The section of ``k`` over (relations of ``k`` plus ``vocab``, referents of ``k``)."""
    v = k.vocab
    if vocab:
        v = v | (vocab if isinstance(vocab, Vocabulary) else Vocabulary.of(*vocab))
    return Section(Context(v, k.referents), k.conditions)


def quotient_map(referents: Iterable[str], eqs: Iterable[Tuple[str, str]]) -> dict:
    """Map each referent to the representative of its class under ``eqs``.

    Classes come from the equivalence closure of the pairs ``(left, right)``.
    The representative is the smallest class member that never occurs on
    a left-hand side, so ``v = x`` keeps ``x``; a class in which every
    member is a left-hand side falls back to its smallest member.
    """
    referents = set(referents)
    parent = {v: v for v in referents}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    lefts = set()
    for a, b in eqs:
        for v in (a, b):
            if v not in referents:
                raise UnknownVariable("%s is not a referent" % v)
        lefts.add(a)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    classes = {}
    for v in referents:
        classes.setdefault(find(v), []).append(v)
    out = {}
    for members in classes.values():
        keep = sorted(m for m in members if m not in lefts) or sorted(members)
        for m in members:
            out[m] = keep[0]
    return out


def resolve_by_equations(k: DRS, eqs: Iterable[Tuple[str, str]]) -> DRS:
    """Collapse referents equated by ``eqs`` (pairs ``(anaphor, antecedent)``)."""
    q = quotient_map(k.referents, eqs)
    conds = frozenset(l.rename(q.__getitem__) for l in k.conditions)
    clash = find_clash(conds)
    if clash is not None:
        raise Inconsistent(clash)
    return DRS(frozenset(q.values()), conds)


def alpha_equivalent(k1: DRS, k2: DRS) -> bool:
    """True iff some bijection of referents carries one DRS onto the other.

    Brute force over permutations; meant for small DRS in tests.
    """
    if len(k1.referents) != len(k2.referents) or len(k1.conditions) != len(k2.conditions):
        return False
    a, b = sorted(k1.referents), sorted(k2.referents)
    for perm in permutations(b):
        m = dict(zip(a, perm))
        if frozenset(l.rename(m.__getitem__) for l in k1.conditions) == k2.conditions:
            return True
    return False


def unification_cover(parts: Sequence[DRS], eqs: Iterable[Tuple[str, str]]):
    """The cover that equating referents of ``parts`` induces, with its family.

    Each part becomes a leg from (its relations, its referents) into the
    quotient context; returns ``(cover, sections)``.  Parts must use
    pairwise disjoint referents.
    """
    seen = set()
    for p in parts:
        if seen & p.referents:
            raise DisjointnessViolated("parts share referents %s" % sorted(seen & p.referents))
        seen |= p.referents
    q = quotient_map(seen, eqs)
    vocab = Vocabulary(frozenset().union(*(p.vocab.symbols for p in parts)))
    target = Context(vocab, frozenset(q.values()))
    legs, sections = [], []
    for p in parts:
        s = drs_to_section(p)
        legs.append(Morphism(s.context, target, {v: q[v] for v in p.referents}))
        sections.append(s)
    return Cover(target, legs), sections


@dataclass(frozen=True)
class AnaphorSpec:
    """Agreement information for anaphoric variables.

    ``constraints`` are literals over ``anaphor_vars`` that must stay
    consistent with the antecedent after resolution (e.g. ``¬Man(u)`` for
    "it").  ``allowed``, when given, limits the antecedents each of the
    variables may resolve to.
    """

    anaphor_vars: frozenset
    constraints: frozenset = frozenset()
    allowed: Optional[frozenset] = None

    def __post_init__(self):
        object.__setattr__(self, "anaphor_vars", frozenset(self.anaphor_vars))
        object.__setattr__(self, "constraints", frozenset(self.constraints))
        if self.allowed is not None:
            object.__setattr__(self, "allowed", frozenset(self.allowed))
        for lit in self.constraints:
            for a in lit.args:
                if a not in self.anaphor_vars:
                    raise IllFormed("constraint %s mentions %s, not an anaphor variable" % (lit, a))


def enumerate_candidate_covers(
    antecedent: Section, anaphors: Sequence[Section], specs: Sequence[AnaphorSpec] = ()
) -> List[Cover]:
    """All covers resolving every anaphor variable to an antecedent variable.

    The first leg is the identity on the antecedent context; leg ``i + 1``
    sends the variables of ``anaphors[i]`` into the antecedent variables.
    Covers whose pushed-forward literals, together with the pushed-forward
    constraint literals of ``specs``, are inconsistent are dropped.  Output
    is ordered lexicographically by the assignment of the sorted anaphor
    variables.
    """
    ante_vars = antecedent.context.vars
    seen = set()
    for s in anaphors:
        vs = s.context.vars
        if vs & ante_vars:
            raise DisjointnessViolated("anaphor variables %s are antecedent variables" % sorted(vs & ante_vars))
        if vs & seen:
            raise DisjointnessViolated("anaphor variables %s occur in two anaphor contexts" % sorted(vs & seen))
        seen |= vs
    for spec in specs:
        if spec.anaphor_vars & ante_vars:
            raise DisjointnessViolated("spec variables %s are antecedent variables" % sorted(spec.anaphor_vars & ante_vars))
        if spec.allowed is not None and not spec.allowed <= ante_vars:
            raise UnknownVariable("allowed antecedents %s not in context" % sorted(spec.allowed - ante_vars))

    choices = {v: sorted(ante_vars) for v in seen}
    constraints = []
    for spec in specs:
        for v in spec.anaphor_vars:
            if v not in choices:
                raise UnknownVariable("spec variable %s belongs to no anaphor" % v)
            if spec.allowed is not None:
                choices[v] = [a for a in choices[v] if a in spec.allowed]
        constraints.extend(spec.constraints)

    vocab = antecedent.context.vocab
    for s in anaphors:
        vocab = vocab | s.context.vocab
    target = Context(vocab, ante_vars)
    first = Morphism(antecedent.context, target, {v: v for v in ante_vars})
    sections = [antecedent] + list(anaphors)

    order = sorted(seen)
    out = []
    for images in product(*(choices[v] for v in order)):
        assign = dict(zip(order, images))
        legs = [first] + [
            Morphism(s.context, target, {v: assign[v] for v in s.context.vars}) for s in anaphors
        ]
        cover = Cover(target, legs)
        try:
            glued = canonical_glue(cover, sections)
        except Inconsistent:
            continue
        extra = [l.rename(assign.__getitem__) for l in constraints]
        if find_clash(glued.literals.union(extra)) is not None:
            continue
        out.append(cover)
    return out
