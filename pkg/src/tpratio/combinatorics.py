"""Index-set combinatorics for ratios of Plücker coordinates.

Conventions used throughout the library:

* A rank-``n`` index set is an ``n``-element subset of ``{1, ..., 2n}``; it
  names one Plücker coordinate (maximal minor) of a ``2n x n`` matrix.
* A minor of an ``n x n`` matrix is addressed by equal-size row and column
  sets ``(rows | cols)``.  The empty minor has value 1 by convention.
* The two addressings are linked by the encoding
  ``rows ∪ {2n+1-c : c in complement of cols}``, implemented here in both
  directions (`minor_to_plucker`, `plucker_to_minor`).
* An arc is a run of consecutive labels on the ``2n``-gon.  Arcs are the
  intervals over which the majorization condition quantifies; restricting to
  arcs of length at most ``n`` loses nothing because the condition transfers
  to complements (`check_condition_m`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import SizeMismatch


@dataclass(frozen=True, order=True)
class IndexSet:
    """A size-``rank`` subset of ``{1, ..., 2*rank}``, kept sorted."""

    rank: int
    elements: tuple[int, ...]

    def __post_init__(self):
        n = self.rank
        elems = self.elements
        if n < 1:
            raise ValueError(f"rank must be positive, got {n}")
        if len(elems) != n:
            raise ValueError(f"rank {n} set needs {n} elements, got {elems!r}")
        if any(not 1 <= e <= 2 * n for e in elems):
            raise ValueError(f"elements outside [1, {2 * n}]: {elems!r}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError(f"elements must be strictly increasing: {elems!r}")

    @classmethod
    def of(cls, rank: int, elements: Iterable[int]) -> "IndexSet":
        return cls(rank, tuple(sorted(elements)))

    @cached_property
    def mask(self) -> int:
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    def __contains__(self, item: int) -> bool:
        return item in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.elements) + "]"


def base_set(rank: int) -> IndexSet:
    """The index set {n+1, ..., 2n}, whose Plücker coordinate is always 1."""
    return IndexSet(rank, tuple(range(rank + 1, 2 * rank + 1)))


def all_index_sets(rank: int) -> list[IndexSet]:
    """All rank-``rank`` index sets in lexicographic order."""
    universe = range(1, 2 * rank + 1)
    return [IndexSet(rank, c) for c in itertools.combinations(universe, rank)]


@dataclass(frozen=True, order=True)
class MinorSpec:
    """Row and column sets of one minor of an ``n x n`` matrix.

    Both sets live in ``[1, rank]`` and have equal size; both may be empty
    (the value-1 minor).
    """

    rank: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        n = self.rank
        if len(self.rows) != len(self.cols):
            raise SizeMismatch(
                f"row set {self.rows!r} and column set {self.cols!r} differ in size"
            )
        for label, seq in (("rows", self.rows), ("cols", self.cols)):
            if any(not 1 <= e <= n for e in seq):
                raise ValueError(f"{label} outside [1, {n}]: {seq!r}")
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{label} must be strictly increasing: {seq!r}")

    @classmethod
    def of(cls, rank: int, rows: Iterable[int], cols: Iterable[int]) -> "MinorSpec":
        return cls(rank, tuple(sorted(rows)), tuple(sorted(cols)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return (
            "(" + ",".join(map(str, self.rows)) + "|" + ",".join(map(str, self.cols)) + ")"
        )


def all_minor_specs(rank: int) -> list[MinorSpec]:
    """Every minor address of an ``n x n`` matrix, the empty one included."""
    labels = range(1, rank + 1)
    specs = []
    for size in range(rank + 1):
        for rows in itertools.combinations(labels, size):
            for cols in itertools.combinations(labels, size):
                specs.append(MinorSpec(rank, rows, cols))
    return specs


def minor_to_plucker(spec: MinorSpec) -> IndexSet:
    """Encode a minor address as a single Plücker index set.

    The rows survive unchanged; each column *not* selected contributes the
    mirrored label ``2n+1-c``.  The result always has exactly ``n`` elements.
    """
    n = spec.rank
    cols = set(spec.cols)
    mirrored = (2 * n + 1 - c for c in range(1, n + 1) if c not in cols)
    return IndexSet.of(n, itertools.chain(spec.rows, mirrored))


def plucker_to_minor(alpha: IndexSet) -> MinorSpec:
    """Invert `minor_to_plucker`: recover the (rows | cols) address."""
    n = alpha.rank
    rows = [e for e in alpha if e <= n]
    dropped = {2 * n + 1 - e for e in alpha if e > n}
    cols = [c for c in range(1, n + 1) if c not in dropped]
    return MinorSpec.of(n, rows, cols)


def cyclic_shift(alpha: IndexSet) -> IndexSet:
    """Rotate every element one step around the 2n-gon (2n wraps to 1)."""
    n2 = 2 * alpha.rank
    return IndexSet.of(alpha.rank, ((e % n2) + 1 for e in alpha))


def reversal(alpha: IndexSet) -> IndexSet:
    """Mirror every element: ``e`` becomes ``2n+1-e``.  An involution."""
    n2 = 2 * alpha.rank
    return IndexSet.of(alpha.rank, (n2 + 1 - e for e in alpha))


@dataclass(frozen=True)
class RatioExpr:
    """A ratio of products of Plücker coordinates.

    Numerator and denominator are sequences of index sets of one common
    rank and of equal length; `RatioExpr.of` pads the shorter side with
    the base set {n+1, ..., 2n} (the coordinate that is identically 1).
    """

    rank: int
    numerator: tuple[IndexSet, ...]
    denominator: tuple[IndexSet, ...]

    def __post_init__(self):
        for s in (*self.numerator, *self.denominator):
            if s.rank != self.rank:
                raise ValueError(f"mixed ranks: expected {self.rank}, got {s.rank}")
        if len(self.numerator) != len(self.denominator):
            raise ValueError("numerator and denominator lengths differ; use RatioExpr.of")

    @classmethod
    def of(
        cls,
        rank: int,
        numerator: Iterable[IndexSet],
        denominator: Iterable[IndexSet],
    ) -> "RatioExpr":
        num = list(numerator)
        den = list(denominator)
        pad = base_set(rank)
        while len(num) < len(den):
            num.append(pad)
        while len(den) < len(num):
            den.append(pad)
        if not num:
            num = [pad]
            den = [pad]
        return cls(rank, tuple(num), tuple(den))

    @property
    def p(self) -> int:
        """Number of index sets on each side."""
        return len(self.numerator)

    def canonical(self) -> "RatioExpr":
        """Same ratio with both sides sorted; the form used in reports."""
        return RatioExpr(
            self.rank, tuple(sorted(self.numerator)), tuple(sorted(self.denominator))
        )

    def __str__(self) -> str:
        num = "".join(str(s) for s in self.numerator)
        den = "".join(str(s) for s in self.denominator)
        return f"{num}/{den}"


def cyclic_shift_ratio(ratio: RatioExpr) -> RatioExpr:
    """Apply the rotation to every index set of the ratio."""
    return RatioExpr(
        ratio.rank,
        tuple(cyclic_shift(s) for s in ratio.numerator),
        tuple(cyclic_shift(s) for s in ratio.denominator),
    )


def reversal_ratio(ratio: RatioExpr) -> RatioExpr:
    """Apply the mirror map to every index set of the ratio."""
    return RatioExpr(
        ratio.rank,
        tuple(reversal(s) for s in ratio.numerator),
        tuple(reversal(s) for s in ratio.denominator),
    )


@dataclass(frozen=True)
class ExponentVector:
    """Sparse integer vector over the rank-n index sets.

    A ratio maps to +1 per numerator occurrence and -1 per denominator
    occurrence; products of ratios add componentwise.  Entries with value
    zero are never stored, so the zero vector is the empty tuple.
    """

    rank: int
    entries: tuple[tuple[IndexSet, int], ...]

    def __post_init__(self):
        keys = [k for k, _ in self.entries]
        if keys != sorted(keys):
            raise ValueError("entries must be sorted by index set")
        if any(v == 0 for _, v in self.entries):
            raise ValueError("zero entries must be omitted")

    @classmethod
    def zero(cls, rank: int) -> "ExponentVector":
        return cls(rank, ())

    @classmethod
    def from_counts(cls, rank: int, counts: dict[IndexSet, int]) -> "ExponentVector":
        return cls(rank, tuple(sorted((k, v) for k, v in counts.items() if v != 0)))

    @classmethod
    def of_ratio(cls, ratio: RatioExpr) -> "ExponentVector":
        counts: dict[IndexSet, int] = {}
        for s in ratio.numerator:
            counts[s] = counts.get(s, 0) + 1
        for s in ratio.denominator:
            counts[s] = counts.get(s, 0) - 1
        return cls.from_counts(ratio.rank, counts)

    def as_dict(self) -> dict[IndexSet, int]:
        return dict(self.entries)

    def get(self, key: IndexSet) -> int:
        return self.as_dict().get(key, 0)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if self.rank != other.rank:
            raise ValueError("cannot add vectors of different ranks")
        counts = dict(self.entries)
        for k, v in other.entries:
            counts[k] = counts.get(k, 0) + v
        return ExponentVector.from_counts(self.rank, counts)

    def __neg__(self) -> "ExponentVector":
        return ExponentVector(self.rank, tuple((k, -v) for k, v in self.entries))

    def __sub__(self, other: "ExponentVector") -> "ExponentVector":
        return self + (-other)


@dataclass(frozen=True, order=True)
class Arc:
    """A run of ``length`` consecutive labels on the 2n-gon, starting at ``start``."""

    rank: int
    start: int
    length: int

    def __post_init__(self):
        n2 = 2 * self.rank
        if not 1 <= self.start <= n2:
            raise ValueError(f"start outside [1, {n2}]: {self.start}")
        if not 1 <= self.length <= n2 - 1:
            raise ValueError(f"length outside [1, {n2 - 1}]: {self.length}")

    @cached_property
    def members(self) -> tuple[int, ...]:
        n2 = 2 * self.rank
        return tuple(sorted((self.start - 1 + k) % n2 + 1 for k in range(self.length)))

    @cached_property
    def mask(self) -> int:
        m = 0
        for e in self.members:
            m |= 1 << (e - 1)
        return m

    def complement(self) -> "Arc":
        n2 = 2 * self.rank
        start = (self.start - 1 + self.length) % n2 + 1
        return Arc(self.rank, start, n2 - self.length)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def arcs_up_to_half(rank: int) -> list[Arc]:
    """All arcs of length 1..n in lexicographic (start, length) order.

    Longer arcs are redundant for the majorization condition because it
    transfers from an arc to its complement.
    """
    return [
        Arc(rank, start, length)
        for start in range(1, 2 * rank + 1)
        for length in range(1, rank + 1)
    ]


@dataclass(frozen=True)
class St0Verdict:
    """Outcome of the per-index counting screen."""

    holds: bool
    witness: int | None = None
    numerator_count: int | None = None
    denominator_count: int | None = None


def check_st0(ratio: RatioExpr) -> St0Verdict:
    """Check that every index appears equally often on both sides.

    Returns the first failing index (smallest) with its two counts.
    """
    for i in range(1, 2 * ratio.rank + 1):
        fn = sum(1 for s in ratio.numerator if i in s)
        fd = sum(1 for s in ratio.denominator if i in s)
        if fn != fd:
            return St0Verdict(False, i, fn, fd)
    return St0Verdict(True)


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """Prefix sums of ``x`` dominate those of ``y``, with equal totals.

    Both inputs are non-increasing; the shorter is padded with zeros.
    Unequal totals yield False (see `majorization_defect` for which way
    it failed).
    """
    return majorization_defect(x, y) is None


def majorization_defect(x: Sequence[int], y: Sequence[int]) -> str | None:
    """None if ``x`` majorizes ``y``, else ``"prefix"`` or ``"total"``."""
    n = max(len(x), len(y))
    sx = sy = 0
    for k in range(n):
        sx += x[k] if k < len(x) else 0
        sy += y[k] if k < len(y) else 0
        if sx < sy:
            return "prefix"
    if sx != sy:
        return "total"
    return None


def conjugate(x: Sequence[int]) -> tuple[int, ...]:
    """Conjugate partition: entry j counts how many parts are >= j."""
    if not x or x[0] == 0:
        return ()
    return tuple(sum(1 for xi in x if xi >= j) for j in range(1, x[0] + 1))


def m_vector(sets: Sequence[IndexSet], arc: Arc) -> tuple[int, ...]:
    """Intersection sizes |s ∩ arc| over the sequence, sorted descending."""
    return tuple(sorted(((s.mask & arc.mask).bit_count() for s in sets), reverse=True))


@dataclass(frozen=True)
class ConditionMVerdict:
    """Outcome of the arc-majorization screen, with the first failing arc."""

    holds: bool
    witness: Arc | None = None
    m_numerator: tuple[int, ...] | None = None
    m_denominator: tuple[int, ...] | None = None


def check_condition_m(ratio: RatioExpr) -> ConditionMVerdict:
    """For every arc of length <= n, the numerator intersection profile must
    majorize the denominator profile.

    The witness on failure is the lexicographically first failing arc,
    ordered by (start, length).
    """
    for arc in arcs_up_to_half(ratio.rank):
        mn = m_vector(ratio.numerator, arc)
        md = m_vector(ratio.denominator, arc)
        if not majorizes(mn, md):
            return ConditionMVerdict(False, arc, mn, md)
    return ConditionMVerdict(True)
