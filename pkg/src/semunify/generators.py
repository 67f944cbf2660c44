"""Small-instance generators for the law suites.

Everything here is driven by an explicit :class:`random.Random` so runs are
reproducible from a seed.  Exhaustive enumerators are used where the
instance space is small enough to walk completely.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from .errors import SemUnifyError
from .gluing import Cover, atoms
from .logic import Context, Literal, RelationSymbol, Section, Vocabulary
from .presheaf import Morphism, restrict

SYMBOLS = (RelationSymbol("R", 1), RelationSymbol("S", 2))


def all_functions(src: Sequence[str], tgt: Sequence[str]) -> Iterator[dict]:
    src, tgt = sorted(src), sorted(tgt)
    for images in product(tgt, repeat=len(src)):
        yield dict(zip(src, images))


def random_section(rng: random.Random, ctx: Context, density: float = 0.5) -> Section:
    """Each atom is left out, asserted or denied; asserted/denied with total probability ``density``."""
    lits = []
    for sym, args in atoms(ctx):
        if rng.random() < density:
            lits.append(Literal(sym, args, rng.random() < 0.5))
    return Section(ctx, frozenset(lits))


def vocab_chains(symbols=SYMBOLS) -> Iterator[Tuple[Vocabulary, Vocabulary, Vocabulary]]:
    """Every chain ``L_A <= L_B <= L_C`` of subsets of ``symbols``."""
    for levels in product(range(4), repeat=len(symbols)):
        vs = [Vocabulary(frozenset(s for s, lv in zip(symbols, levels) if lv <= k)) for k in range(3)]
        yield tuple(vs)


def exhaustive_functor_cases(
    rng: random.Random, max_vars: int = 3, symbols=SYMBOLS
) -> Iterator[Tuple[Morphism, Morphism, Section]]:
    """All composable pairs ``A -f-> B -g-> C`` over small contexts, one random section each.

    Contexts have 0..``max_vars`` variables and vocabularies drawn from every
    chain of subsets of ``symbols``; ``f`` and ``g`` range over all functions.
    """
    names = {k: [k.lower() + str(i) for i in range(max_vars)] for k in "ABC"}
    sizes = range(max_vars + 1)
    for la, lb, lc in vocab_chains(symbols):
        for na, nb, nc in product(sizes, repeat=3):
            A = Context(la, frozenset(names["A"][:na]))
            B = Context(lb, frozenset(names["B"][:nb]))
            C = Context(lc, frozenset(names["C"][:nc]))
            for fm in all_functions(A.vars, B.vars):
                f = Morphism(A, B, fm)
                for gm in all_functions(B.vars, C.vars):
                    yield Morphism(B, C, gm), f, random_section(rng, C)


def random_context(rng: random.Random, prefix: str, max_vars: int = 3, symbols=SYMBOLS, min_vars: int = 1) -> Context:
    n = rng.randint(min_vars, max_vars)
    vocab = Vocabulary(frozenset(s for s in symbols if rng.random() < 0.6))
    return Context(vocab, frozenset("%s%d" % (prefix, i) for i in range(n)))


def random_cover(
    rng: random.Random,
    max_target_vars: int = 3,
    max_legs: int = 3,
    max_leg_vars: int = 2,
    symbols=SYMBOLS,
    disjoint_vocab: bool = False,
    injective: bool = False,
) -> Cover:
    """Rejection-sample a valid cover of a random target context.

    ``disjoint_vocab`` partitions the target vocabulary among the legs;
    ``injective`` only draws injective leg maps.
    """
    while True:
        n = rng.randint(1, max_target_vars)
        tvocab = [s for s in symbols if rng.random() < 0.7] or [rng.choice(symbols)]
        target = Context(Vocabulary(frozenset(tvocab)), frozenset("z%d" % i for i in range(n)))
        k = rng.randint(1, max_legs)
        if disjoint_vocab:
            owner = {s: rng.randrange(k) for s in tvocab}
            leg_vocabs = [frozenset(s for s in tvocab if owner[s] == i) for i in range(k)]
        else:
            leg_vocabs = [frozenset(s for s in tvocab if rng.random() < 0.6) for _ in range(k)]
        legs = []
        tvars = sorted(target.vars)
        for i in range(k):
            m = rng.randint(1, max_leg_vars)
            if injective:
                m = min(m, len(tvars))
                images = rng.sample(tvars, m)
            else:
                images = [rng.choice(tvars) for _ in range(m)]
            src = Context(Vocabulary(leg_vocabs[i]), frozenset("x%d_%d" % (i, j) for j in range(m)))
            legs.append(Morphism(src, target, {"x%d_%d" % (i, j): images[j] for j in range(m)}))
        try:
            return Cover(target, legs)
        except SemUnifyError:
            continue


def random_family(rng: random.Random, cover: Cover) -> List[Section]:
    """Half the time independent random sections, otherwise restrictions of one global section."""
    if rng.random() < 0.5:
        return [random_section(rng, leg.source) for leg in cover.legs]
    s = random_section(rng, cover.target)
    return [restrict(leg, s) for leg in cover.legs]
