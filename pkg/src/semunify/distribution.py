"""Commutative semirings and finite-support distributions over them.

Three semirings ship: booleans (or/and), exact nonnegative rationals
(:class:`fractions.Fraction`) and floating-point reals.  A distribution is
a finite map to semiring values summing to one; over the booleans that is
just a nonempty finite subset, over the rationals a probability measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping

from .errors import AllZero, EmptySupport, IllFormed, PartialMap, WrongSemiring


@dataclass(frozen=True)
class Semiring:
    name: str
    add: Callable[[Any, Any], Any]
    zero: Any
    mul: Callable[[Any, Any], Any]
    one: Any
    eq: Callable[[Any, Any], bool]
    ordered: bool = False

    def sum(self, values: Iterable) -> Any:
        return reduce(self.add, values, self.zero)

    def is_zero(self, x) -> bool:
        return self.eq(x, self.zero)

    def __repr__(self):
        return "Semiring(%s)" % self.name


BOOLEAN = Semiring("boolean", lambda a, b: a or b, False, lambda a, b: a and b, True, lambda a, b: a == b)
RATIONAL = Semiring(
    "rational", lambda a, b: a + b, Fraction(0), lambda a, b: a * b, Fraction(1), lambda a, b: a == b, ordered=True
)
REAL = Semiring(
    "real", lambda a, b: a + b, 0.0, lambda a, b: a * b, 1.0, lambda a, b: math.isclose(a, b, rel_tol=0, abs_tol=1e-9),
    ordered=True,
)

SEMIRINGS = {s.name: s for s in (BOOLEAN, RATIONAL, REAL)}


def semiring_axiom_failures(sr: Semiring, values: List) -> List[str]:
    """Check the commutative-semiring equations on all triples drawn from ``values``."""
    bad = []
    eq = sr.eq
    for x in values:
        if not eq(sr.add(x, sr.zero), x):
            bad.append("%r + 0" % (x,))
        if not eq(sr.mul(x, sr.one), x):
            bad.append("%r * 1" % (x,))
        for y in values:
            if not eq(sr.add(x, y), sr.add(y, x)):
                bad.append("%r + %r commutes" % (x, y))
            if not eq(sr.mul(x, y), sr.mul(y, x)):
                bad.append("%r * %r commutes" % (x, y))
            for z in values:
                if not eq(sr.add(sr.add(x, y), z), sr.add(x, sr.add(y, z))):
                    bad.append("+ associative on %r %r %r" % (x, y, z))
                if not eq(sr.mul(sr.mul(x, y), z), sr.mul(x, sr.mul(y, z))):
                    bad.append("* associative on %r %r %r" % (x, y, z))
                if not eq(sr.mul(x, sr.add(y, z)), sr.add(sr.mul(x, y), sr.mul(x, z))):
                    bad.append("distributive on %r %r %r" % (x, y, z))
    return bad


def serial_key(x) -> str:
    """Deterministic ordering key: ``serialize()`` when available, else ``str``."""
    ser = getattr(x, "serialize", None)
    return ser() if callable(ser) else str(x)


@dataclass(frozen=True)
class Distribution:
    semiring: Semiring
    weights: Mapping[Hashable, Any]

    def __post_init__(self):
        w = {k: v for k, v in dict(self.weights).items()}
        for k, v in w.items():
            if self.semiring.is_zero(v):
                raise IllFormed("zero weight stored for %r" % (k,))
        if not self.semiring.eq(self.semiring.sum(w.values()), self.semiring.one):
            raise IllFormed("weights do not sum to one")
        object.__setattr__(self, "weights", w)

    def __eq__(self, other):
        if not isinstance(other, Distribution) or other.semiring.name != self.semiring.name:
            return NotImplemented
        if self.weights.keys() != other.weights.keys():
            return False
        return all(self.semiring.eq(v, other.weights[k]) for k, v in self.weights.items())

    def __hash__(self):
        return hash((self.semiring.name, frozenset(self.weights)))

    def __getitem__(self, x):
        return self.weights.get(x, self.semiring.zero)

    @property
    def support(self) -> frozenset:
        return frozenset(self.weights)

    def items(self):
        """Entries in serialized-key order."""
        return sorted(self.weights.items(), key=lambda kv: serial_key(kv[0]))

    def __len__(self):
        return len(self.weights)


def from_weights(raw: Mapping[Hashable, Any], semiring: Semiring = RATIONAL) -> Distribution:
    """Normalise nonnegative weights; zero entries are dropped."""
    if semiring is BOOLEAN:
        kept = {k: True for k, v in raw.items() if v}
        if not kept:
            raise AllZero("no nonzero weight")
        return Distribution(BOOLEAN, kept)
    conv = Fraction if semiring is RATIONAL else float
    vals = {}
    for k, v in raw.items():
        v = conv(v)
        if v < 0:
            raise IllFormed("negative weight %r for %r" % (v, k))
        if v:
            vals[k] = v
    total = sum(vals.values(), semiring.zero)
    if not vals:
        raise AllZero("all weights are zero")
    return Distribution(semiring, {k: v / total for k, v in vals.items()})


def point_mass(x, semiring: Semiring = RATIONAL) -> Distribution:
    return Distribution(semiring, {x: semiring.one})


def pushforward(f, d: Distribution) -> Distribution:
    """Image distribution: the weight of ``y`` is the sum over its preimages.

    ``f`` is a callable or a mapping; it must be defined on the support.
    """
    sr = d.semiring
    out: Dict[Hashable, Any] = {}
    for x, w in d.weights.items():
        try:
            y = f[x] if isinstance(f, Mapping) else f(x)
        except KeyError:
            raise PartialMap("map undefined on %r" % (x,)) from None
        out[y] = sr.add(out.get(y, sr.zero), w)
    return Distribution(sr, {y: w for y, w in out.items() if not sr.is_zero(w)})


def _need_numeric(d: Distribution):
    if not d.semiring.ordered:
        raise WrongSemiring("needs rational or real weights, got %s" % d.semiring.name)


def entropy(d: Distribution) -> float:
    """Shannon entropy in bits; zero-weight terms contribute nothing."""
    _need_numeric(d)
    h = 0.0
    for w in d.weights.values():
        p = float(w)
        if p > 0:
            h -= p * math.log2(p)
    return h


def argmax(d: Distribution) -> List:
    _need_numeric(d)
    if not d.weights:
        raise EmptySupport("empty distribution")
    top = max(d.weights.values())
    return sorted((x for x, w in d.weights.items() if w == top), key=serial_key)


def compare_entropy(d1: Distribution, d2: Distribution) -> int:
    """1 if ``d1`` has more entropy than ``d2``, -1 if less, 0 if tied (within 1e-12)."""
    h1, h2 = entropy(d1), entropy(d2)
    if math.isclose(h1, h2, rel_tol=0, abs_tol=1e-12):
        return 0
    return 1 if h1 > h2 else -1


def max_entropy(candidates: Iterable[Distribution]) -> List[Distribution]:
    """The candidates of maximal entropy, in input order."""
    cands = list(candidates)
    if not cands:
        raise EmptySupport("no candidate distributions")
    best = [cands[0]]
    for d in cands[1:]:
        c = compare_entropy(d, best[0])
        if c > 0:
            best = [d]
        elif c == 0:
            best.append(d)
    return best
