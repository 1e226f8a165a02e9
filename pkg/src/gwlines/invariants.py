"""Orchestration: validated queries, dual-engine reports, batch sweeps.

A query names a count of lines: the ambient projective space CP^(N-1),
the hypersurface degree k, and the list of insertion powers a_j (each
insertion constrains the line to meet a codimension-a_j linear
subspace).  `compute` runs the residue engine, optionally the Schubert
engine as an independent cross-check, and for two-point queries also
reports the mirror decomposition

    invariant = w(a, b) - w(a + b, 0)

which rewrites the symmetric invariant in terms of the asymmetric
two-point pairing `w_two_point`.

The count can only be nonzero when the insertion powers exhaust the
dimension of the space of lines: sum(a_j) = 2N + n - 5 - k.  Queries
failing this are still answered (with zeros, which both engines produce
naturally) and flagged via `dimension_ok`.

`sweep` evaluates a batch of queries over a range of ambient dimensions,
either with a fixed insertion list or by enumerating every
dimension-valid multiset of a given length.  A generated query that
violates the query bounds becomes a `QueryError` entry in the result
list rather than aborting the batch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import residue, schubert


class InvalidQueryError(ValueError):
    """A query violates the domain bounds (not a dimension mismatch)."""


@dataclass(frozen=True)
class InvariantQuery:
    """A single line-count request: CP^(ambient-1), degree, insertions.

    Bounds: ambient >= 2, degree >= 1, at least one insertion, and each
    insertion power a_j in 1..ambient-1 (a codimension-a_j condition is
    trivial at 0 and empty beyond ambient - 1).
    """

    ambient: int
    degree: int
    insertions: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "insertions", tuple(self.insertions))
        if not isinstance(self.ambient, int) or self.ambient < 2:
            raise InvalidQueryError(
                f"ambient dimension must be an integer >= 2, got {self.ambient!r}"
            )
        if not isinstance(self.degree, int) or self.degree < 1:
            raise InvalidQueryError(
                f"hypersurface degree must be an integer >= 1, got {self.degree!r}"
            )
        if not self.insertions:
            raise InvalidQueryError("at least one insertion power is required")
        for a in self.insertions:
            if not isinstance(a, int) or not 1 <= a <= self.ambient - 1:
                raise InvalidQueryError(
                    f"insertion powers must be integers in 1..{self.ambient - 1}, got {a!r}"
                )

    @property
    def points(self) -> int:
        return len(self.insertions)


@dataclass(frozen=True)
class MirrorCheck:
    """Two-point mirror decomposition: invariant = w_ab - w_total."""

    w_ab: int
    w_total: int
    difference: int


@dataclass(frozen=True)
class InvariantReport:
    """Everything computed for one query.

    schubert_value and engines_agree are None when the Schubert engine
    did not run; mirror is None unless the query has exactly two
    insertions.
    """

    query: InvariantQuery
    dimension_ok: bool
    residue_value: int
    schubert_value: int | None
    engines_agree: bool | None
    mirror: MirrorCheck | None


@dataclass(frozen=True)
class QueryError:
    """A query a sweep rule generated that failed validation."""

    ambient: int
    degree: int
    insertions: tuple[int, ...]
    message: str


def dimension_check(query: InvariantQuery) -> bool:
    """True iff the insertions match the dimension of the space of lines.

    The space of lines with n markings has dimension 2(ambient - 2) + n,
    the degree-k condition cuts k + 1 dimensions, and each insertion cuts
    a_j - 1 more; the count is zero unless the cuts balance, i.e.
    sum(a_j) = 2*ambient + n - 5 - degree.
    """
    n = query.points
    return sum(query.insertions) == 2 * query.ambient + n - 5 - query.degree


def compute(query: InvariantQuery, run_schubert: bool = True) -> InvariantReport:
    """Evaluate one query with the residue engine and optional cross-check.

    The residue value is always computed.  The Schubert engine runs when
    requested and the ambient dimension is at least 3 (G(2, 2) is a
    point with no box to work in).  Out-of-dimension queries yield zeros
    from both engines without special-casing.
    """
    residue_value = residue.gw_n_point_residue(query.ambient, query.degree, query.insertions)
    schubert_value = None
    engines_agree = None
    if run_schubert and query.ambient >= 3:
        schubert_value = schubert.gw_n_point_schubert(
            query.ambient, query.degree, query.insertions
        )
        engines_agree = schubert_value == residue_value
    mirror = None
    if query.points == 2:
        a, b = query.insertions
        w_ab = residue.w_two_point(query.ambient, query.degree, a, b)
        w_total = residue.w_two_point(query.ambient, query.degree, a + b, 0)
        mirror = MirrorCheck(w_ab=w_ab, w_total=w_total, difference=w_ab - w_total)
    return InvariantReport(
        query=query,
        dimension_ok=dimension_check(query),
        residue_value=residue_value,
        schubert_value=schubert_value,
        engines_agree=engines_agree,
        mirror=mirror,
    )


def bounded_partitions(total: int, parts: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of `parts` integers in [lo, hi] summing to total.

    Yielded in lexicographic order; empty when no tuple qualifies.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if lo > hi:
        return
    for first in range(lo, hi + 1):
        rest = total - first
        # remaining entries are >= first and <= hi
        if rest < first * (parts - 1):
            break
        if rest > hi * (parts - 1):
            continue
        for tail in bounded_partitions(rest, parts - 1, first, hi):
            yield (first,) + tail


def dimension_valid_insertions(ambient: int, degree: int, points: int) -> Iterator[tuple[int, ...]]:
    """All dimension-valid nondecreasing insertion tuples of a given length."""
    total = 2 * ambient + points - 5 - degree
    yield from bounded_partitions(total, points, 1, ambient - 1)


def sweep(
    ambient_values: Iterable[int],
    degree: int | None = None,
    points: int | None = None,
    insertions: Sequence[int] | None = None,
    run_schubert: bool = True,
) -> list[InvariantReport | QueryError]:
    """Evaluate a batch of queries over a range of ambient dimensions.

    For each ambient dimension N the hypersurface degree is `degree`, or
    N itself when `degree` is None (the Calabi-Yau case).  Exactly one of
    `points` and `insertions` must be given: `insertions` runs the same
    fixed insertion list at every N, while `points` enumerates every
    dimension-valid nondecreasing insertion tuple of that length.  A
    fixed insertion list that is out of bounds for some N appears in the
    result as a QueryError entry; enumerated tuples are valid by
    construction.  Order is deterministic: by N, then insertions.
    """
    if (points is None) == (insertions is None):
        raise ValueError("exactly one of points and insertions must be given")
    results: list[InvariantReport | QueryError] = []
    for ambient in ambient_values:
        k = degree if degree is not None else ambient
        if insertions is not None:
            candidates: Iterable[Sequence[int]] = [insertions]
        else:
            candidates = dimension_valid_insertions(ambient, k, points)
        for cand in candidates:
            try:
                query = InvariantQuery(ambient, k, tuple(cand))
            except InvalidQueryError as exc:
                results.append(QueryError(ambient, k, tuple(cand), str(exc)))
                continue
            results.append(compute(query, run_schubert=run_schubert))
    return results
