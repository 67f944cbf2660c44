"""
Checking the laws
=================

Restriction is a contravariant functor and pushforward of distributions
is a covariant one.  Both are checked here on generated instances.
"""

import random

from semunify import RATIONAL, check_functor_laws, from_weights, pushforward
from semunify.distribution import semiring_axiom_failures
from semunify.generators import exhaustive_functor_cases

rep = check_functor_laws(exhaustive_functor_cases(random.Random(0)))
print("restriction: %d cases, %d violations" % (rep.checked, len(rep.violations)))

rng = random.Random(0)
d = from_weights({"x%d" % i: rng.randint(1, 9) for i in range(5)})
f = {x: "ab"[i % 2] for i, x in enumerate(sorted(d.support))}
g = {"a": "p", "b": "p"}
print("d   =", dict(d.items()))
print("f*d =", dict(pushforward(f, d).items()))
print("(g.f)*d == g*(f*d):", pushforward(lambda x: g[f[x]], d) == pushforward(g, pushforward(f, d)))

print("semiring axioms:", semiring_axiom_failures(RATIONAL, list(d.weights.values())) or "ok")
