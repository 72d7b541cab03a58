"""Shared helpers for randomized series tests."""

from __future__ import annotations

import random

from quiverkac import Box, RationalFunction, TruncatedSeries


def random_ratfunc(rng: random.Random) -> RationalFunction:
    """A small exact coefficient: integer polynomial, rational constant
    denominator, or a 1/(q-1) flavored fraction."""
    num = tuple(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
    roll = rng.random()
    if roll < 0.25:
        den = (rng.randint(1, 3),)
    elif roll < 0.45:
        den = (-1, 1)
    else:
        den = (1,)
    return RationalFunction(num, den)


def random_box(rng: random.Random, max_entry: int = 3, max_vars: int = 3) -> Box:
    while True:
        bound = tuple(rng.randint(0, max_entry) for _ in range(rng.randint(1, max_vars)))
        if any(bound):
            return Box(bound)


def random_series(rng: random.Random, box: Box) -> TruncatedSeries:
    """A sparse series with zero constant term."""
    exps = [e for e in box.exponents() if any(e)]
    count = rng.randint(1, min(4, len(exps)))
    terms = {e: random_ratfunc(rng) for e in rng.sample(exps, count)}
    return TruncatedSeries(box, terms)
