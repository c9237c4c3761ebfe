"""Shared generators for randomized tests; everything is seeded."""

import functools
import random

from sigcalc.ordinal import Ordinal, ord_cmp


def random_ordinal(rng: random.Random, depth: int = 3, max_terms: int = 2,
                   max_coeff: int = 2) -> Ordinal:
    """A random CNF ordinal of nesting depth <= depth."""
    if depth == 0 or rng.random() < 0.35:
        return Ordinal.from_int(rng.randint(0, 2))
    nterms = rng.randint(1, max_terms)
    exps = []
    while len(exps) < nterms:
        e = random_ordinal(rng, depth - 1, max_terms, max_coeff)
        if all(ord_cmp(e, x) != 0 for x in exps):
            exps.append(e)
    exps.sort(key=functools.cmp_to_key(ord_cmp), reverse=True)
    return Ordinal((e, rng.randint(1, max_coeff)) for e in exps)
