"""Ranking candidate gluings with corpus frequencies of anaphor-antecedent patterns.

Each candidate cover resolves every anaphor variable to an antecedent.
Every such resolution step is a *merging pattern* with a lemma-pair label
("ripe banana"), and the corpus count of a label measures how plausible the
merging is.  A cover's weight is the sum of the counts of its mergings;
normalising over all covers gives a distribution over the glued sections.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

from .distribution import Distribution, RATIONAL, argmax, entropy, from_weights
from .errors import AllZero, DSLError, IllFormed, InconsistentCover, MissingPattern
from .gluing import Cover, Glued, glue
from .logic import Section, check_var

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MergingPattern:
    anaphor_var: str
    antecedent_var: str
    label: str

    def __post_init__(self):
        check_var(self.anaphor_var)
        check_var(self.antecedent_var)


@dataclass
class FrequencyTable:
    counts: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for label, n in self.counts.items():
            if not isinstance(n, int) or n < 0:
                raise IllFormed("count for %r must be a nonnegative integer" % label)

    def get(self, label):
        return self.counts.get(label)

    @classmethod
    def from_tsv(cls, text: str) -> "FrequencyTable":
        """Parse ``label<TAB>count`` lines; blank lines and ``#`` comments are skipped."""
        counts = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.rstrip("\r\n").split("\t")
            if len(cols) != 2:
                raise DSLError("expected label<TAB>count", lineno, 1)
            label, raw = cols[0].strip(), cols[1].strip()
            if not raw.isdigit():
                raise DSLError("count %r is not a nonnegative integer" % raw, lineno, len(cols[0]) + 2)
            if label in counts:
                raise DSLError("duplicate label %r" % label, lineno, 1)
            counts[label] = int(raw)
        return cls(counts)


def _pattern_index(patterns: Sequence[MergingPattern]):
    index = {}
    for p in patterns:
        key = (p.anaphor_var, p.antecedent_var)
        if key in index and index[key] != p.label:
            raise IllFormed("two patterns for %s -> %s" % key)
        index[key] = p.label
    return index


def event_weight(cover: Cover, patterns: Sequence[MergingPattern], table: FrequencyTable, strict: bool = True) -> int:
    """Sum of the counts of the mergings the cover performs.

    The anaphor variables are those named by ``patterns``; each is looked
    up in the leg that carries it.  With ``strict`` a missing pattern or
    label raises :class:`MissingPattern`, otherwise it counts as zero.
    """
    index = _pattern_index(patterns)
    anaphors = sorted({p.anaphor_var for p in patterns})
    total = 0
    for var in anaphors:
        images = {leg.mapping[var] for leg in cover.legs if var in leg.source.vars}
        if not images:
            continue
        if len(images) > 1:
            raise IllFormed("anaphor %s is mapped to several antecedents" % var)
        ante = images.pop()
        label = index.get((var, ante))
        count = None if label is None else table.get(label)
        if count is None:
            if strict:
                what = "no pattern for %s -> %s" % (var, ante) if label is None else "no count for %r" % label
                raise MissingPattern(what)
            continue
        total += count
    return total


def _warn_unknown_labels(patterns, table):
    known = {p.label for p in patterns}
    for label in sorted(set(table.counts) - known):
        log.warning("frequency table label %r matches no pattern; ignored", label)


@dataclass(frozen=True)
class RankedCover:
    """One row of the ranking table."""

    index: int
    cover: Cover
    gluing: Section
    weight: int
    total: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.weight, self.total) if self.total else Fraction(0)


def rank_covers(
    covers: Sequence[Cover],
    sections: Sequence[Section],
    patterns: Sequence[MergingPattern],
    table: FrequencyTable,
    strict: bool = True,
) -> List[RankedCover]:
    """Glue along each cover and attach its event weight; rows keep cover order."""
    _warn_unknown_labels(patterns, table)
    glued = []
    for i, c in enumerate(covers):
        res = glue(c, sections)
        if not isinstance(res, Glued):
            raise InconsistentCover(i, res)
        glued.append((c, res.section, event_weight(c, patterns, table, strict)))
    total = sum(w for _, _, w in glued)
    return [RankedCover(i, c, s, w, total) for i, (c, s, w) in enumerate(glued)]


def _pool(rows: Sequence[RankedCover]) -> Distribution:
    # covers that glue to the same section share its weight
    raw: Dict[Section, int] = {}
    for r in rows:
        raw[r.gluing] = raw.get(r.gluing, 0) + r.weight
    try:
        return from_weights(raw, RATIONAL)
    except AllZero:
        raise AllZero("no candidate cover has corpus support") from None


def distribution_over_gluings(
    covers: Sequence[Cover],
    sections: Sequence[Section],
    patterns: Sequence[MergingPattern],
    table: FrequencyTable,
    strict: bool = True,
) -> Distribution:
    return _pool(rank_covers(covers, sections, patterns, table, strict))


@dataclass(frozen=True)
class Resolution:
    best: List[Section]
    distribution: Distribution
    entropy: float
    rows: List[RankedCover]


def resolve(covers, sections, patterns, table, strict: bool = True) -> Resolution:
    """Most likely gluing(s), the full distribution and its entropy in bits."""
    rows = rank_covers(covers, sections, patterns, table, strict)
    d = _pool(rows)
    return Resolution(argmax(d), d, entropy(d), rows)
