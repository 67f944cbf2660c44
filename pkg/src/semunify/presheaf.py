"""Morphisms between contexts and the restriction maps of the literal presheaf."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Mapping, Tuple

from .errors import ContextMismatch, IllFormed, TypeMismatch
from .logic import Context, Literal, Section


@dataclass(frozen=True)
class Morphism:
    """``f : (L, X) -> (L', X')`` with ``L <= L'`` and a total map ``X -> X'``.

    ``varmap`` may be passed as a dict; it is stored as a sorted tuple of
    pairs so that morphisms hash and compare componentwise.
    """

    source: Context
    target: Context
    varmap: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        pairs = self.varmap.items() if isinstance(self.varmap, Mapping) else self.varmap
        pairs = tuple(sorted((str(a), str(b)) for a, b in pairs))
        object.__setattr__(self, "varmap", pairs)
        keys = [a for a, _ in pairs]
        if len(set(keys)) != len(keys):
            raise IllFormed("variable map assigns a variable twice")
        if not self.source.vocab <= self.target.vocab:
            missing = self.source.vocab.symbols - self.target.vocab.symbols
            raise IllFormed("source vocabulary not included in target: %s" % ", ".join(sorted(map(str, missing))))
        if set(keys) != self.source.vars:
            raise IllFormed(
                "variable map must be total on %s; unmapped %s, extraneous %s"
                % (sorted(self.source.vars), sorted(self.source.vars - set(keys)), sorted(set(keys) - self.source.vars))
            )
        for a, b in pairs:
            if b not in self.target.vars:
                raise IllFormed("%s maps to %s, which is not a target variable" % (a, b))

    @property
    def mapping(self) -> Dict[str, str]:
        return dict(self.varmap)

    @property
    def image(self) -> frozenset:
        return frozenset(b for _, b in self.varmap)

    def is_injective(self) -> bool:
        return len(self.image) == len(self.varmap)

    def __call__(self, var: str) -> str:
        return self.mapping[var]

    def __str__(self):
        body = ", ".join("%s -> %s" % p for p in self.varmap)
        return "%s -> %s {%s}" % (self.source, self.target, body)


def identity(ctx: Context) -> Morphism:
    return Morphism(ctx, ctx, tuple((v, v) for v in ctx.vars))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g . f``: first ``f``, then ``g``."""
    if f.target != g.source:
        raise TypeMismatch("cannot compose: %s is not %s" % (f.target, g.source))
    gm = g.mapping
    return Morphism(f.source, g.target, tuple((x, gm[y]) for x, y in f.varmap))


def restrict(m: Morphism, s: Section) -> Section:
    """Pull ``s`` back along ``m``.

    ``±A(x...)`` over the source belongs to the result iff ``±A(m(x)...)``
    belongs to ``s`` and ``A`` is in the source vocabulary.  Computed from
    the fibres of the variable map instead of enumerating every source atom.
    """
    if s.context != m.target:
        raise ContextMismatch("section lives over %s, morphism targets %s" % (s.context, m.target))
    fibres = defaultdict(list)
    for x, y in m.varmap:
        fibres[y].append(x)
    out = set()
    for lit in s.literals:
        if lit.relation not in m.source.vocab:
            continue
        for pre in product(*(fibres.get(a, ()) for a in lit.args)):
            out.add(Literal(lit.relation, pre, lit.positive))
    return Section(m.source, frozenset(out))


@dataclass
class LawViolation:
    case: int
    law: str
    detail: str


@dataclass
class FunctorLawReport:
    checked: int = 0
    violations: List[LawViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_functor_laws(cases: Iterable[Tuple[Morphism, Morphism, Section]]) -> FunctorLawReport:
    """Check identity and composition laws of restriction for each ``(g, f, s)``.

    Problems are collected in the report; nothing is raised.
    """
    report = FunctorLawReport()
    for i, (g, f, s) in enumerate(cases):
        report.checked += 1
        if f.target != g.source or s.context != g.target:
            report.violations.append(LawViolation(i, "shape", "case does not chain"))
            continue
        if restrict(identity(s.context), s) != s:
            report.violations.append(LawViolation(i, "identity", str(s)))
        lhs = restrict(compose(g, f), s)
        rhs = restrict(f, restrict(g, s))
        if lhs != rhs:
            report.violations.append(LawViolation(i, "composition", "%s != %s" % (lhs, rhs)))
    return report
