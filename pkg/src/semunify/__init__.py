"""Sheaf-theoretic semantic unification for discourse.

Local meanings of sentences are consistent sets of literals over a context
(sections of a presheaf).  Resolving anaphora means choosing a cover that
identifies referents and gluing the local sections along it; ambiguous
choices are ranked with a distribution built from corpus frequencies.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .logic import (
    Context,
    Literal,
    RelationSymbol,
    Section,
    Vocabulary,
    context_of,
    entails,
    find_clash,
    is_consistent,
    make_section,
    parse_literal,
    section_of,
)
from .presheaf import Morphism, check_functor_laws, compose, identity, restrict
from .gluing import (
    Clash,
    Cover,
    Glued,
    RestrictionMismatch,
    all_gluings_bruteforce,
    canonical_glue,
    glue,
    is_gluing,
    validate_cover,
)
from .drt import (
    DRS,
    AnaphorSpec,
    drs_to_section,
    enumerate_candidate_covers,
    merge,
    resolve_by_equations,
    unification_cover,
)
from .distribution import (
    BOOLEAN,
    RATIONAL,
    REAL,
    Distribution,
    Semiring,
    argmax,
    entropy,
    from_weights,
    max_entropy,
    pushforward,
)
from .ranking import (
    FrequencyTable,
    MergingPattern,
    distribution_over_gluings,
    event_weight,
    rank_covers,
    resolve,
)
from .dsl import ProblemFile, dump_problem, parse_problem
