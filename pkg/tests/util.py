"""Shared test helpers: enumerations and independent oracles.

Everything here is deliberately written against the problem statement, not
against the library internals, so the tests keep their value as oracles:
the degree fitter uses divided differences, ratio enumeration works from
raw index counting, and exponent bookkeeping is redone with dictionaries.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from fractions import Fraction

from tpratio.combinatorics import IndexSet, RatioExpr, all_index_sets


def st0_pairs_by_profile(rank: int):
    """Unordered index-set pairs grouped by their index-count profile.

    Two pairs in the same group give an ST0 ratio; pairs from different
    groups never do.
    """
    groups: dict[tuple[int, ...], list[tuple[IndexSet, IndexSet]]] = defaultdict(list)
    for pair in itertools.combinations_with_replacement(all_index_sets(rank), 2):
        counts = [0] * (2 * rank)
        for s in pair:
            for e in s:
                counts[e - 1] += 1
        groups[tuple(counts)].append(pair)
    return groups


def st0_ratios(rank: int) -> list[RatioExpr]:
    """Every two-over-two ST0 ratio, up to reordering within each side."""
    out = []
    for group in st0_pairs_by_profile(rank).values():
        for num, den in itertools.product(group, group):
            out.append(RatioExpr.of(rank, num, den))
    return out


def random_st0_ratio(rank: int, rng: random.Random) -> RatioExpr | None:
    """A random two-over-two ST0 ratio, or None when the drawn numerator
    pool admits no denominator split."""
    labels = list(range(1, 2 * rank + 1))
    a1 = IndexSet.of(rank, rng.sample(labels, rank))
    a2 = IndexSet.of(rank, rng.sample(labels, rank))
    pool = sorted((*a1.elements, *a2.elements))
    splits = [
        c
        for c in itertools.combinations(range(2 * rank), rank)
        if len({pool[i] for i in c}) == rank
        and len({pool[i] for i in range(2 * rank) if i not in c}) == rank
    ]
    if not splits:
        return None
    chosen = rng.choice(splits)
    b1 = IndexSet.of(rank, [pool[i] for i in chosen])
    b2 = IndexSet.of(rank, [pool[i] for i in range(2 * rank) if i not in chosen])
    return RatioExpr.of(rank, [a1, a2], [b1, b2])


def poly_degree_from_samples(samples: list[tuple[Fraction, Fraction]]) -> int:
    """Degree of the polynomial interpolating exact samples at distinct
    points, assuming the true degree is below the sample count.  Newton
    divided differences: the j-th column vanishes identically exactly for
    polynomials of degree below j.  The zero polynomial reports -1."""
    points = [t for t, _ in samples]
    column = [v for _, v in samples]
    degree = -1
    for j in range(len(samples)):
        if any(c != 0 for c in column):
            degree = j
        if len(column) > 1:
            column = [
                (column[i + 1] - column[i]) / (points[i + j + 1] - points[i])
                for i in range(len(column) - 1)
            ]
    return degree


def product_of_values(values) -> Fraction:
    total = Fraction(1)
    for v in values:
        total *= v
    return total
