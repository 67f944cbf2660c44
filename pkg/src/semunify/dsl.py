"""Parser and printer for discourse problem files.

A problem file is a sequence of declarations; ``#`` starts a comment.

::

    vocab V { John/1, owns/2 }
    context C = (V, {x, y})                 # or an inline vocabulary: ({John/1}, {x})
    section s over C { John(x); ¬Man(y) }   # negation: ! or ¬
    morphism f : C1 -> C2 { x -> z, u -> w }
    cover c on C = [f1, f2]
    drs K { refs {x, y} conds { John(x) } }
    anaphor u constraints { !Man(u) } allowed {y, z}
    pattern u -> y label "ripe banana"

Names share one namespace and must be declared before use.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .drt import DRS, AnaphorSpec
from .errors import DSLError, DSLNameError, DSLSyntaxError, SemUnifyError
from .gluing import Cover
from .logic import Context, Literal, RelationSymbol, Section, Vocabulary
from .presheaf import Morphism
from .ranking import MergingPattern

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<arrow>->)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*'*)
  | (?P<number>[0-9]+)
  | (?P<punct>[{}()\[\],;=:/!¬])
    """,
    re.VERBOSE,
)

KEYWORDS = ("vocab", "context", "section", "morphism", "cover", "drs", "anaphor", "pattern")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int

    def describe(self):
        return "end of input" if self.kind == "eof" else repr(self.value)


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DSLSyntaxError("unexpected character %r" % text[pos], line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token("punct" if kind == "arrow" else kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass
class ProblemFile:
    vocabs: Dict[str, Vocabulary] = field(default_factory=dict)
    contexts: Dict[str, Context] = field(default_factory=dict)
    sections: Dict[str, Section] = field(default_factory=dict)
    morphisms: Dict[str, Morphism] = field(default_factory=dict)
    covers: Dict[str, Cover] = field(default_factory=dict)
    cover_legs: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    drss: Dict[str, DRS] = field(default_factory=dict)
    anaphors: List[AnaphorSpec] = field(default_factory=list)
    patterns: List[MergingPattern] = field(default_factory=list)
    positions: Dict[str, Tuple[int, int]] = field(default_factory=dict, compare=False)

    def kind_of(self, name: str) -> Optional[str]:
        for kind in ("vocabs", "contexts", "sections", "morphisms", "covers", "drss"):
            if name in getattr(self, kind):
                return kind[:-1]
        return None

    def lookup(self, kind: str, name: str):
        table = getattr(self, kind + "s")
        if name not in table:
            found = self.kind_of(name)
            if found is None:
                raise DSLNameError("undeclared %s %r" % (kind, name))
            raise DSLNameError("%r is a %s, not a %s" % (name, found, kind))
        return table[name]

    def spec_for(self, var: str) -> Optional[AnaphorSpec]:
        for spec in self.anaphors:
            if var in spec.anaphor_vars:
                return spec
        return None


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.pf = ProblemFile()

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected):
        t = self.tok
        raise DSLSyntaxError(
            "expected %s, found %s" % (" or ".join(expected), t.describe()), t.line, t.column, expected
        )

    def at(self, value: str) -> bool:
        return self.tok.kind != "string" and self.tok.value == value

    def expect(self, value: str) -> Token:
        if not self.at(value):
            self.fail([repr(value)])
        return self.advance()

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def ident(self, what="identifier") -> Token:
        if self.tok.kind != "ident":
            self.fail([what])
        return self.advance()

    def name_ref(self, kind: str):
        t = self.ident(kind + " name")
        try:
            return self.pf.lookup(kind, t.value)
        except DSLNameError as e:
            raise DSLNameError(e.bare_message, t.line, t.column) from None

    def new_name(self) -> Token:
        t = self.ident("name")
        if self.pf.kind_of(t.value) is not None:
            raise DSLNameError("duplicate declaration of %r" % t.value, t.line, t.column)
        return t

    def sep_list(self, item, close: str, seps=(",",)):
        out = []
        if self.at(close):
            self.advance()
            return out
        while True:
            out.append(item())
            if self.at(close):
                self.advance()
                return out
            if any(self.at(s) for s in seps):
                self.advance()
                continue
            self.fail([repr(s) for s in seps] + [repr(close)])

    def var_set(self) -> List[Token]:
        self.expect("{")
        return self.sep_list(lambda: self.ident("variable"), "}")

    def literal(self, vocab: Optional[Vocabulary]):
        start = self.tok
        positive = True
        if self.at("!") or self.at("¬"):
            self.advance()
            positive = False
        name = self.ident("relation name")
        self.expect("(")
        args = self.sep_list(lambda: self.ident("variable"), ")")
        if not args:
            raise DSLSyntaxError("relation %s needs arguments" % name.value, name.line, name.column, ["variable"])
        if vocab is None:
            rel = RelationSymbol(name.value, len(args))
        else:
            rel = vocab.get(name.value)
            if rel is None:
                raise DSLNameError("relation %r not in vocabulary" % name.value, name.line, name.column)
        return start, (rel, tuple(a.value for a in args), positive)

    def literal_block(self, vocab):
        self.expect("{")
        items = self.sep_list(lambda: self.literal(vocab), "}", seps=(";", ","))
        out = []
        for t, (rel, args, pos) in items:
            with self.at_token(t):
                out.append(Literal(rel, args, pos))
        return out

    def at_token(self, t: Token):
        return _Located(t)

    # declarations

    def parse(self) -> ProblemFile:
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind != "ident" or t.value not in KEYWORDS:
                self.fail(["declaration keyword (%s)" % ", ".join(KEYWORDS)])
            self.advance()
            getattr(self, "decl_" + t.value)(t)
        return self.pf

    def _symbol(self):
        name = self.ident("relation name")
        self.expect("/")
        if self.tok.kind != "number":
            self.fail(["arity"])
        arity = self.advance()
        with self.at_token(name):
            return RelationSymbol(name.value, int(arity.value))

    def vocab_body(self) -> Vocabulary:
        t = self.expect("{")
        syms = self.sep_list(self._symbol, "}")
        with self.at_token(t):
            return Vocabulary(frozenset(syms))

    def decl_vocab(self, kw):
        name = self.new_name()
        self.pf.vocabs[name.value] = self.vocab_body()
        self.pf.positions[name.value] = (kw.line, kw.column)

    def decl_context(self, kw):
        name = self.new_name()
        self.expect("=")
        self.expect("(")
        vocab = self.vocab_body() if self.at("{") else self.name_ref("vocab")
        self.expect(",")
        vs = self.var_set()
        self.expect(")")
        with self.at_token(kw):
            self.pf.contexts[name.value] = Context(vocab, frozenset(v.value for v in vs))
        self.pf.positions[name.value] = (kw.line, kw.column)

    def decl_section(self, kw):
        name = self.new_name()
        self.expect("over")
        ctx = self.name_ref("context")
        lits = self.literal_block(ctx.vocab)
        with self.at_token(kw):
            self.pf.sections[name.value] = Section(ctx, frozenset(lits))
        self.pf.positions[name.value] = (kw.line, kw.column)

    def decl_morphism(self, kw):
        name = self.new_name()
        self.expect(":")
        src = self.name_ref("context")
        self.expect("->")
        tgt = self.name_ref("context")
        self.expect("{")

        def pair():
            a = self.ident("variable")
            self.expect("->")
            return (a.value, self.ident("variable").value)

        pairs = self.sep_list(pair, "}", seps=(",", ";"))
        with self.at_token(kw):
            if len({a for a, _ in pairs}) != len(pairs):
                raise SemUnifyError("variable mapped twice in morphism %s" % name.value)
            self.pf.morphisms[name.value] = Morphism(src, tgt, dict(pairs))
        self.pf.positions[name.value] = (kw.line, kw.column)

    def decl_cover(self, kw):
        name = self.new_name()
        self.expect("on")
        tgt = self.name_ref("context")
        self.expect("=")
        self.expect("[")
        names = self.sep_list(lambda: self.ident("morphism name"), "]")
        legs = []
        for n in names:
            try:
                legs.append(self.pf.lookup("morphism", n.value))
            except DSLNameError as e:
                raise DSLNameError(e.bare_message, n.line, n.column) from None
        with self.at_token(kw):
            self.pf.covers[name.value] = Cover(tgt, tuple(legs))
        self.pf.cover_legs[name.value] = tuple(n.value for n in names)
        self.pf.positions[name.value] = (kw.line, kw.column)

    def decl_drs(self, kw):
        name = self.new_name()
        self.expect("{")
        self.expect("refs")
        refs = self.var_set()
        conds = []
        if self.at("conds"):
            self.advance()
            conds = self.literal_block(None)
        self.expect("}")
        with self.at_token(kw):
            self.pf.drss[name.value] = DRS(frozenset(r.value for r in refs), frozenset(conds))
        self.pf.positions[name.value] = (kw.line, kw.column)

    def decl_anaphor(self, kw):
        vs = [self.ident("variable")]
        while self.at(","):
            self.advance()
            vs.append(self.ident("variable"))
        constraints, allowed = [], None
        if self.at("constraints"):
            self.advance()
            constraints = self.literal_block(None)
        if self.at("allowed"):
            self.advance()
            allowed = frozenset(v.value for v in self.var_set())
        names = frozenset(v.value for v in vs)
        for v in vs:
            if self.pf.spec_for(v.value) is not None:
                raise DSLNameError("anaphor %r declared twice" % v.value, v.line, v.column)
        with self.at_token(kw):
            self.pf.anaphors.append(AnaphorSpec(names, frozenset(constraints), allowed))

    def decl_pattern(self, kw):
        a = self.ident("variable")
        self.expect("->")
        b = self.ident("variable")
        self.expect("label")
        if self.tok.kind != "string":
            self.fail(["quoted label"])
        label = json.loads(self.advance().value)
        self.pf.patterns.append(MergingPattern(a.value, b.value, label))


class _Located:
    """Re-raise library errors inside the block as DSL errors at a token."""

    def __init__(self, tok: Token):
        self.tok = tok

    def __enter__(self):
        return self

    def __exit__(self, etype, exc, tb):
        if exc is None or isinstance(exc, DSLError) or not isinstance(exc, SemUnifyError):
            return False
        raise DSLError(str(exc), self.tok.line, self.tok.column) from exc


def parse_problem(text: str) -> ProblemFile:
    return _Parser(text).parse()


# printing


def _lit(l: Literal) -> str:
    return str(l)


def _vars(vs) -> str:
    return "{%s}" % ", ".join(sorted(vs))


def _name_of(table: dict, value) -> str:
    for k, v in table.items():
        if v == value:
            return k
    raise KeyError(value)


def dump_problem(pf: ProblemFile) -> str:
    """Print a problem file so that ``parse_problem(dump_problem(pf)) == pf``."""
    out = []
    for name, v in pf.vocabs.items():
        out.append("vocab %s %s" % (name, v))
    for name, c in pf.contexts.items():
        try:
            vocab = _name_of(pf.vocabs, c.vocab)
        except KeyError:
            vocab = str(c.vocab)
        out.append("context %s = (%s, %s)" % (name, vocab, _vars(c.vars)))
    for name, s in pf.sections.items():
        body = "; ".join(_lit(l) for l in s)
        out.append("section %s over %s { %s }" % (name, _name_of(pf.contexts, s.context), body))
    for name, m in pf.morphisms.items():
        body = ", ".join("%s -> %s" % p for p in m.varmap)
        out.append(
            "morphism %s : %s -> %s { %s }"
            % (name, _name_of(pf.contexts, m.source), _name_of(pf.contexts, m.target), body)
        )
    for name, c in pf.covers.items():
        legs = pf.cover_legs.get(name) or tuple(_name_of(pf.morphisms, leg) for leg in c.legs)
        out.append("cover %s on %s = [%s]" % (name, _name_of(pf.contexts, c.target), ", ".join(legs)))
    for name, k in pf.drss.items():
        conds = "; ".join(_lit(l) for l in sorted(k.conditions))
        out.append("drs %s { refs %s conds { %s } }" % (name, _vars(k.referents), conds))
    for spec in pf.anaphors:
        line = "anaphor %s" % ", ".join(sorted(spec.anaphor_vars))
        if spec.constraints:
            line += " constraints { %s }" % "; ".join(_lit(l) for l in sorted(spec.constraints))
        if spec.allowed is not None:
            line += " allowed %s" % _vars(spec.allowed)
        out.append(line)
    for p in pf.patterns:
        out.append("pattern %s -> %s label %s" % (p.anaphor_var, p.antecedent_var, json.dumps(p.label, ensure_ascii=False)))
    return "\n".join(out) + ("\n" if out else "")
