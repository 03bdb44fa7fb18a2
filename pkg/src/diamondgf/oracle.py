"""Brute-force enumeration oracles.

These recount, object by object, what the closed formulas claim. They are
deliberately naive (depth-first search with budget pruning, no memoization,
no algebra) so that agreement with the series machinery is a genuine
two-route check rather than a tautology.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .poset import (
    DiamondSpec,
    FOLD_TAG,
    Poset,
    build_diamond_poset,
    validate_assignment,
)
from .series import TruncSeries2

DEFAULT_CORPUS_SEED = 20240601


def enumerate_ppartitions(
    p: Poset, assignment: Sequence[str], truncation: int
) -> TruncSeries2:
    """Directly enumerate order-preserving assignments of nonnegative
    integers with total sum <= truncation.

    Elements are assigned in label order, so every lower cover is already
    fixed; each value ranges from the largest lower-cover value up to the
    remaining budget. One monomial is accumulated per assignment: the fold
    tags feed the first exponent, the link tags the second.
    """
    tags = validate_assignment(assignment, p.size)
    c = p.size
    lowers = [()] + [p.lower_covers(k) for k in range(1, c + 1)]
    is_fold = [False] + [tag == FOLD_TAG for tag in tags]
    values = [0] * (c + 1)
    counts: dict[tuple[int, int], int] = {}

    def assign(k: int, weight_a: int, weight_b: int) -> None:
        if k > c:
            key = (weight_a, weight_b)
            counts[key] = counts.get(key, 0) + 1
            return
        low = max((values[j] for j in lowers[k]), default=0)
        budget = truncation - weight_a - weight_b
        for m in range(low, budget + 1):
            values[k] = m
            if is_fold[k]:
                assign(k + 1, weight_a + m, weight_b)
            else:
                assign(k + 1, weight_a, weight_b + m)

    assign(1, 0, 0)
    return TruncSeries2(truncation, counts)


def enumerate_diamonds(spec: DiamondSpec, truncation: int) -> TruncSeries2:
    """Enumerate diamonds of the given fold sequence by (fold sum, link sum)."""
    poset, tags = build_diamond_poset(spec)
    return enumerate_ppartitions(poset, tags, truncation)


def enumerate_infinite_univariate(d: int, truncation: int) -> list[int]:
    """Count unbounded-length d-fold diamonds by total part sum.

    Uses the orientation in which parts weakly decrease away from the first
    link, so every assignment has finite support: any nonzero part in block
    n forces n earlier links to be positive, hence a length-T prefix
    captures every diamond of sum <= T exactly once.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if truncation == 0:
        return [1]
    poset, _ = build_diamond_poset(DiamondSpec.uniform(d, truncation))
    c = poset.size
    lowers = [()] + [poset.lower_covers(k) for k in range(1, c + 1)]
    values = [0] * (c + 1)
    coeffs = [0] * (truncation + 1)

    def assign(k: int, total: int) -> None:
        # Once the budget is spent the all-zero completion is the only one
        # left, and decreasing constraints always allow it.
        if k > c or total == truncation:
            coeffs[total] += 1
            return
        cap = min((values[j] for j in lowers[k]), default=truncation - total)
        cap = min(cap, truncation - total)
        for m in range(0, cap + 1):
            values[k] = m
            assign(k + 1, total + m)

    assign(1, 0)
    return coeffs


def schmidt_oracle(d: int, length: int, truncation: int) -> list[int]:
    """Count length-M diamonds by link sum alone.

    Links form a weakly increasing chain; every fold sits between its two
    neighbouring links, so folds are enumerated over that finite sandwich
    range with no artificial cap. Fold values do not enter the weight.
    """
    if d < 1 or length < 1:
        raise ValueError("d and length must be at least 1")
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    coeffs = [0] * (truncation + 1)

    def assign(block: int, prev_link: int, link_sum: int) -> None:
        if block > length:
            coeffs[link_sum] += 1
            return
        for link in range(prev_link, truncation - link_sum + 1):
            for _folds in itertools.product(range(prev_link, link + 1), repeat=d):
                assign(block + 1, link, link_sum + link)

    for first_link in range(truncation + 1):
        assign(1, first_link, first_link)
    return coeffs


def random_poset(rng: random.Random, max_size: int = 7) -> tuple[Poset, tuple[str, ...]]:
    """A random naturally labelled poset with a random fold/link assignment.

    Samples an upper-triangular cover matrix at a random density; the Poset
    constructor reduces transitively implied pairs.
    """
    size = rng.randint(1, max_size)
    density = rng.choice((0.15, 0.3, 0.5))
    covers = [
        (j, k)
        for j in range(1, size + 1)
        for k in range(j + 1, size + 1)
        if rng.random() < density
    ]
    tags = tuple(rng.choice("ab") for _ in range(size))
    return Poset(size, covers), tags


def random_poset_corpus(
    count: int, seed: int = DEFAULT_CORPUS_SEED, max_size: int = 7
) -> Iterator[tuple[Poset, tuple[str, ...]]]:
    """A reproducible stream of random posets for equivalence testing."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_poset(rng, max_size)
