"""Covers and gluing of families of sections."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    ContextMismatch,
    IllFormed,
    Inconsistent,
    LengthMismatch,
    NotSurjective,
    TooLarge,
    VocabNotCovered,
)
from .logic import Context, Literal, Section, find_clash
from .presheaf import Morphism, restrict

DEFAULT_MAX_SLOTS = 20


@dataclass(frozen=True)
class Cover:
    """A jointly surjective family of morphisms into ``target``.

    The constructor rejects empty families, legs with a different target,
    and families failing :func:`validate_cover`.
    """

    target: Context
    legs: Tuple[Morphism, ...]

    def __post_init__(self):
        legs = tuple(self.legs)
        object.__setattr__(self, "legs", legs)
        if not legs:
            raise IllFormed("a cover needs at least one leg")
        for i, leg in enumerate(legs):
            if leg.target != self.target:
                raise ContextMismatch("leg %d targets %s, cover is on %s" % (i, leg.target, self.target))
        validate_cover(self)

    def __len__(self):
        return len(self.legs)

    def assignment(self) -> Dict[str, str]:
        """Union of the leg variable maps (legs are expected to use distinct source variables)."""
        out = {}
        for leg in self.legs:
            out.update(leg.mapping)
        return out


def validate_cover(c: Cover) -> None:
    """Raise unless the legs jointly hit every variable and every relation of the target."""
    hit = frozenset().union(*(leg.image for leg in c.legs))
    if hit != c.target.vars:
        raise NotSurjective(c.target.vars - hit)
    vocab = frozenset().union(*(leg.source.vocab.symbols for leg in c.legs))
    if vocab != c.target.vocab.symbols:
        raise VocabNotCovered(c.target.vocab.symbols - vocab)


def _check_family(c: Cover, sections: Sequence[Section]) -> None:
    if len(sections) != len(c.legs):
        raise LengthMismatch("%d legs but %d sections" % (len(c.legs), len(sections)))
    for i, (leg, s) in enumerate(zip(c.legs, sections)):
        if s.context != leg.source:
            raise ContextMismatch("section %d lives over %s, leg %d starts at %s" % (i, s.context, i, leg.source))


def pushed_literals(c: Cover, sections: Sequence[Section]) -> frozenset:
    """``{±A(f_i(x)) | ±A(x) in s_i}`` without the consistency check."""
    _check_family(c, sections)
    out = set()
    for leg, s in zip(c.legs, sections):
        m = leg.mapping
        for lit in s.literals:
            out.add(lit.rename(m.__getitem__))
    return frozenset(out)


def canonical_glue(c: Cover, sections: Sequence[Section]) -> Section:
    """Push every local literal forward along its leg and take the union.

    Raises :class:`Inconsistent` with the clashing pair when the union is
    inconsistent.  A consistent result is a candidate only; :func:`glue`
    decides whether it actually restricts back to the family.
    """
    lits = pushed_literals(c, sections)
    clash = find_clash(lits)
    if clash is not None:
        raise Inconsistent(clash)
    return Section(c.target, lits)


@dataclass(frozen=True)
class Glued:
    section: Section
    ok = True


@dataclass(frozen=True)
class Clash:
    pair: Tuple[Literal, Literal]
    ok = False

    def __str__(self):
        return "inconsistent: %s, %s" % tuple(map(str, self.pair))


@dataclass(frozen=True)
class RestrictionMismatch:
    """The canonical candidate fails to restrict back on some leg.

    ``leg`` is the (0-based) index of the first failing leg and ``residue``
    the symmetric difference there; ``residues`` covers all failing legs.
    """

    leg: int
    residue: frozenset
    candidate: Section
    residues: Dict[int, frozenset] = field(default_factory=dict, compare=False)
    ok = False

    def __str__(self):
        return "restriction mismatch on leg %d: {%s}" % (self.leg, ", ".join(str(l) for l in sorted(self.residue)))


GluingResult = (Glued, Clash, RestrictionMismatch)


def glue(c: Cover, sections: Sequence[Section]):
    """Return :class:`Glued`, :class:`Clash` or :class:`RestrictionMismatch`."""
    try:
        s = canonical_glue(c, sections)
    except Inconsistent as exc:
        return Clash(exc.pair)
    residues = {}
    for i, (leg, si) in enumerate(zip(c.legs, sections)):
        back = restrict(leg, s)
        if back != si:
            residues[i] = back.literals ^ si.literals
    if residues:
        first = min(residues)
        return RestrictionMismatch(first, residues[first], s, residues)
    return Glued(s)


def is_gluing(c: Cover, sections: Sequence[Section], s: Section) -> bool:
    _check_family(c, sections)
    if s.context != c.target:
        return False
    return all(restrict(leg, s) == si for leg, si in zip(c.legs, sections))


def atoms(ctx: Context) -> List[Tuple]:
    """All atoms ``(relation, args)`` over a context, in a fixed order."""
    vs = sorted(ctx.vars)
    return [(sym, args) for sym in ctx.vocab for args in product(vs, repeat=sym.arity)]


def reached_atoms(c: Cover) -> frozenset:
    """Atoms of the target that are the image of some atom over some leg source."""
    out = set()
    for leg in c.legs:
        m = leg.mapping
        for sym, args in atoms(leg.source):
            out.add((sym, tuple(m[a] for a in args)))
    return frozenset(out)


def all_gluings_bruteforce(
    c: Cover, sections: Sequence[Section], max_slots: int = DEFAULT_MAX_SLOTS
) -> List[Section]:
    """Every section over ``c.target`` that restricts to each ``sections[i]``.

    Exhaustive search over the three states (absent, positive, negative) of
    each target atom.  A partial assignment is abandoned as soon as an
    assigned atom disagrees with a leg's local section on one of its
    preimage atoms; every surviving candidate is re-checked with
    :func:`restrict`.  Does not use :func:`canonical_glue`.
    """
    _check_family(c, sections)
    slots = atoms(c.target)
    if len(slots) > max_slots:
        raise TooLarge("%d literal slots exceed the bound %d" % (len(slots), max_slots))

    # for each target atom, the states its preimages demand: a list of
    # required states, one per (leg, preimage atom)
    demands: Dict[Tuple, List[Optional[bool]]] = {slot: [] for slot in slots}
    for leg, s in zip(c.legs, sections):
        m = leg.mapping
        for sym, args in atoms(leg.source):
            state = None
            if Literal(sym, args, True) in s.literals:
                state = True
            elif Literal(sym, args, False) in s.literals:
                state = False
            demands[(sym, tuple(m[a] for a in args))].append(state)

    found = []

    def search(i, chosen):
        if i == len(slots):
            cand = Section(c.target, frozenset(chosen))
            if is_gluing(c, sections, cand):
                found.append(cand)
            return
        sym, args = slots[i]
        for state in (None, True, False):
            if any(d != state for d in demands[slots[i]]):
                continue
            if state is None:
                search(i + 1, chosen)
            else:
                chosen.append(Literal(sym, args, state))
                search(i + 1, chosen)
                chosen.pop()

    search(0, [])
    found.sort(key=lambda s: s.serialize())
    return found
