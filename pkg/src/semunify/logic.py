"""Vocabularies, contexts, literals and sections for the relational literal fragment.

The language has relation symbols only: no constants, no function symbols
and no equality.  In that fragment the deductive closure of a consistent
finite set of literals, read back as literals, is the set itself.  A
:class:`Section` is therefore stored as a plain frozen literal set and
entailment of a literal is membership.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .errors import IllFormed, Inconsistent

# Trailing primes are allowed so that freshened DRS referents (x, x', x'')
# stay valid variable names.
VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*'*\Z")
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

NEGATION = "¬"


def check_var(name: str) -> str:
    if not isinstance(name, str) or not VAR_RE.match(name):
        raise IllFormed("bad variable identifier %r" % (name,))
    return name


@dataclass(frozen=True, order=True)
class RelationSymbol:
    name: str
    arity: int

    def __post_init__(self):
        if not isinstance(self.name, str) or not NAME_RE.match(self.name):
            raise IllFormed("bad relation name %r" % (self.name,))
        if not isinstance(self.arity, int) or self.arity < 1:
            raise IllFormed("relation %s needs arity >= 1, got %r" % (self.name, self.arity))

    @classmethod
    def parse(cls, text: str) -> "RelationSymbol":
        """Parse ``"Name/arity"``."""
        name, sep, arity = text.strip().partition("/")
        if not sep or not arity.strip().isdigit():
            raise IllFormed("expected Name/arity, got %r" % (text,))
        return cls(name.strip(), int(arity))

    def __str__(self):
        return "%s/%d" % (self.name, self.arity)


def _as_symbol(item) -> RelationSymbol:
    if isinstance(item, RelationSymbol):
        return item
    if isinstance(item, str):
        return RelationSymbol.parse(item)
    name, arity = item
    return RelationSymbol(name, arity)


@dataclass(frozen=True)
class Vocabulary:
    """A finite set of relation symbols in which a name fixes the arity."""

    symbols: frozenset = frozenset()

    def __post_init__(self):
        symbols = frozenset(_as_symbol(s) for s in self.symbols)
        seen = {}
        for sym in symbols:
            if sym.name in seen:
                raise IllFormed(
                    "relation %s declared with arities %d and %d"
                    % (sym.name, seen[sym.name], sym.arity)
                )
            seen[sym.name] = sym.arity
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def of(cls, *items) -> "Vocabulary":
        return cls(frozenset(_as_symbol(i) for i in items))

    def __iter__(self):
        return iter(sorted(self.symbols))

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, sym):
        return sym in self.symbols

    def __le__(self, other: "Vocabulary"):
        return self.symbols <= other.symbols

    def __or__(self, other: "Vocabulary") -> "Vocabulary":
        return Vocabulary(self.symbols | other.symbols)

    def get(self, name: str) -> Optional[RelationSymbol]:
        for sym in self.symbols:
            if sym.name == name:
                return sym
        return None

    def __str__(self):
        return "{%s}" % ", ".join(str(s) for s in self)


@dataclass(frozen=True)
class Context:
    """An object ``(L, X)``: a vocabulary and a finite set of variables."""

    vocab: Vocabulary
    vars: frozenset

    def __post_init__(self):
        if not isinstance(self.vocab, Vocabulary):
            object.__setattr__(self, "vocab", Vocabulary.of(*self.vocab))
        if isinstance(self.vars, str):
            raise IllFormed("context variables must be a collection, not a string")
        object.__setattr__(self, "vars", frozenset(check_var(v) for v in self.vars))

    @classmethod
    def of(cls, vocab, vars: Iterable[str]) -> "Context":
        return cls(vocab if isinstance(vocab, Vocabulary) else Vocabulary.of(*vocab), frozenset(vars))

    def slot_count(self) -> int:
        """Number of atoms ``A(x...)`` over this context."""
        n = len(self.vars)
        return sum(n ** sym.arity for sym in self.vocab.symbols)

    def __str__(self):
        return "(%s, {%s})" % (self.vocab, ", ".join(sorted(self.vars)))


@dataclass(frozen=True)
class Literal:
    relation: RelationSymbol
    args: Tuple[str, ...]
    positive: bool = True

    def __post_init__(self):
        args = tuple(self.args)
        for a in args:
            check_var(a)
        if len(args) != self.relation.arity:
            raise IllFormed(
                "%s expects %d arguments, got %d" % (self.relation.name, self.relation.arity, len(args))
            )
        object.__setattr__(self, "args", args)

    @classmethod
    def of(cls, name: str, *args: str, positive: bool = True) -> "Literal":
        return cls(RelationSymbol(name, len(args)), args, positive)

    @property
    def atom(self):
        return (self.relation, self.args)

    def complement(self) -> "Literal":
        return Literal(self.relation, self.args, not self.positive)

    def rename(self, mapping) -> "Literal":
        return Literal(self.relation, tuple(mapping(a) for a in self.args), self.positive)

    def sort_key(self):
        return (self.relation.name, self.relation.arity, self.args, not self.positive)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        body = "%s(%s)" % (self.relation.name, ", ".join(self.args))
        return body if self.positive else NEGATION + body


_LIT_RE = re.compile(r"\s*([!¬~]?)\s*([A-Za-z_][A-Za-z0-9_]*)\s*\((.*)\)\s*\Z")


def parse_literal(text: str) -> Literal:
    """Parse ``"Man(y)"``, ``"!Man(y)"`` or ``"¬Man(y)"``; arity is the argument count."""
    m = _LIT_RE.match(text)
    if not m:
        raise IllFormed("cannot parse literal %r" % (text,))
    sign, name, body = m.groups()
    args = tuple(a.strip() for a in body.split(",")) if body.strip() else ()
    if not args:
        raise IllFormed("literal %r has no arguments" % (text,))
    return Literal.of(name, *args, positive=not sign)


def find_clash(lits: Iterable[Literal]) -> Optional[Tuple[Literal, Literal]]:
    """Return one complementary pair (positive first), or None."""
    lits = list(lits)
    signs = {}
    for lit in lits:
        if signs.setdefault(lit.atom, lit.positive) != lit.positive:
            break
    else:
        return None
    # sort only on failure, so the reported pair does not depend on set order
    seen = {}
    for lit in sorted(lits):
        prev = seen.get(lit.atom)
        if prev is None:
            seen[lit.atom] = lit
        elif prev.positive != lit.positive:
            return (prev, lit) if prev.positive else (lit, prev)
    return None


def is_consistent(lits: Iterable[Literal]) -> bool:
    return find_clash(lits) is None


def check_well_formed(ctx: Context, lit: Literal) -> None:
    if lit.relation not in ctx.vocab:
        known = ctx.vocab.get(lit.relation.name)
        if known is None:
            raise IllFormed("relation %s not in vocabulary %s" % (lit.relation.name, ctx.vocab))
        raise IllFormed("%s has arity %d, used with %d arguments" % (known.name, known.arity, lit.relation.arity))
    for a in lit.args:
        if a not in ctx.vars:
            raise IllFormed("variable %s of %s not in context" % (a, lit))


@dataclass(frozen=True)
class Section:
    """A consistent finite literal set over a context.

    Construction validates well-formedness and consistency, so every
    ``Section`` value in existence satisfies both.
    """

    context: Context
    literals: frozenset = frozenset()

    def __post_init__(self):
        lits = frozenset(self.literals)
        for lit in lits:
            if not isinstance(lit, Literal):
                raise IllFormed("not a literal: %r" % (lit,))
            check_well_formed(self.context, lit)
        clash = find_clash(lits)
        if clash is not None:
            raise Inconsistent(clash)
        object.__setattr__(self, "literals", lits)

    def entails(self, lit: Literal) -> bool:
        return entails(self, lit)

    def __iter__(self):
        return iter(sorted(self.literals))

    def __len__(self):
        return len(self.literals)

    def __contains__(self, lit):
        return lit in self.literals

    def serialize(self) -> str:
        return "{%s}" % ", ".join(str(l) for l in self)

    __str__ = serialize


def make_section(ctx: Context, lits: Iterable[Literal]) -> Section:
    return Section(ctx, frozenset(lits))


def entails(s: Section, lit: Literal) -> bool:
    check_well_formed(s.context, lit)
    return lit in s.literals


def context_of(lits: Iterable[Literal], vars: Iterable[str] = (), vocab: Iterable = ()) -> Context:
    """Smallest context holding ``lits``, widened by extra ``vars`` and ``vocab``."""
    lits = list(lits)
    symbols = {l.relation for l in lits} | {_as_symbol(v) for v in vocab}
    names = set(vars)
    for l in lits:
        names.update(l.args)
    return Context(Vocabulary(frozenset(symbols)), frozenset(names))


def section_of(*texts: str, vars: Iterable[str] = (), vocab: Iterable = ()) -> Section:
    """Build a section from literal strings over the context they span."""
    lits = [parse_literal(t) for t in texts]
    return Section(context_of(lits, vars, vocab), frozenset(lits))
