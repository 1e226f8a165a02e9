"""Built-in consistency suite exercising every identity the engines rely on.

Each check returns a `CheckResult` instead of raising, so a driver can
run the whole list and report; `run_all` is what the CLI `selftest`
command executes.  The random checks draw from `random.Random(seed)`
with a fixed default seed, so a failure is reproducible by rerunning
with the same seed.

The checks, in order:

  * dual-mode normalization: the projective-bundle integral of
    z1^(N-1) z2^(N-2) is 1 in both evaluation modes, N = 2..12;
  * dual-mode agreement: both modes agree on random homogeneous
    polynomials of the critical degree 2N - 3;
  * two-point reduction: the n-point residue formula at n = 2 equals
    the symmetrized two-point invariant, for every dimension-valid pair;
  * mirror identity: the two-point invariant equals
    w(a, b) - w(a + b, 0) over the same sweep;
  * cross-engine agreement: residue and Schubert engines return the
    same value for every query in a dense grid, dimension-valid or not;
  * insertion permutation invariance: the residue formula treats its
    distinguished first insertion no differently from the others;
  * vanishing suite: the projective-bundle integral kills off-degree
    classes and multiples of z1^N and of sum_j z1^j z2^(N-1-j).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator

from .bipoly import BiPoly
from .invariants import dimension_valid_insertions
from .residue import (
    ResidueMode,
    gw_n_point_residue,
    gw_two_point_localized,
    projective_bundle_integral,
    w_poly,
    w_two_point,
)
from .schubert import gw_n_point_schubert

DEFAULT_SEED = 1729

MODES = (ResidueMode.SIMPLIFIED, ResidueMode.TRUNCATED_SERIES)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def random_homogeneous(rng: random.Random, degree: int, bound: int = 9) -> BiPoly:
    """A random homogeneous polynomial with coefficients in [-bound, bound]."""
    return BiPoly({(i, degree - i): rng.randint(-bound, bound) for i in range(degree + 1)})


def check_dual_mode_normalization() -> CheckResult:
    """projective_bundle_integral(z1^(N-1) z2^(N-2)) = 1 in both modes."""
    name = "dual-mode-normalization"
    cases = 0
    for ambient in range(2, 13):
        unit = BiPoly.monomial(ambient - 1, ambient - 2)
        for mode in MODES:
            got = projective_bundle_integral(unit, ambient, mode)
            cases += 1
            if got != 1:
                return CheckResult(name, False, f"N={ambient} {mode.value}: got {got}, want 1")
    return CheckResult(name, True, f"{cases} evaluations, N=2..12, both modes")


def check_dual_mode_agreement(seed: int = DEFAULT_SEED, samples: int = 100) -> CheckResult:
    """Both evaluation modes agree on random degree-(2N-3) polynomials."""
    name = "dual-mode-agreement"
    rng = random.Random(seed)
    cases = 0
    for ambient in range(3, 9):
        for _ in range(samples):
            poly = random_homogeneous(rng, 2 * ambient - 3)
            simplified = projective_bundle_integral(poly, ambient, ResidueMode.SIMPLIFIED)
            series = projective_bundle_integral(poly, ambient, ResidueMode.TRUNCATED_SERIES)
            cases += 1
            if simplified != series:
                return CheckResult(
                    name,
                    False,
                    f"N={ambient}, poly={poly}: simplified {simplified} != series {series}",
                )
    return CheckResult(name, True, f"{cases} random polynomials, N=3..8")


def _two_point_pairs() -> Iterator[tuple[int, int, int, int]]:
    """Every (N, k, a, b) with a, b >= 1 on the dimension shell, N = 3..9."""
    for ambient in range(3, 10):
        for degree in range(1, ambient + 3):
            total = 2 * ambient - 3 - degree
            for a in range(1, total):
                yield ambient, degree, a, total - a


def check_two_point_reduction() -> CheckResult:
    """The n-point formula at n = 2 equals the symmetrized two-point form."""
    name = "two-point-reduction"
    cases = 0
    for ambient, degree, a, b in _two_point_pairs():
        via_n_point = gw_n_point_residue(ambient, degree, [a, b])
        via_two_point = gw_two_point_localized(ambient, degree, a, b)
        cases += 1
        if via_n_point != via_two_point:
            return CheckResult(
                name,
                False,
                f"N={ambient} k={degree} (a,b)=({a},{b}):"
                f" n-point {via_n_point} != two-point {via_two_point}",
            )
    return CheckResult(name, True, f"{cases} dimension-valid pairs, N=3..9, k=1..N+2")


def check_mirror_identity() -> CheckResult:
    """gw(a, b) = w(a, b) - w(a + b, 0) on the same sweep as the reduction."""
    name = "mirror-identity"
    cases = 0
    for ambient, degree, a, b in _two_point_pairs():
        invariant = gw_two_point_localized(ambient, degree, a, b)
        decomposed = w_two_point(ambient, degree, a, b) - w_two_point(ambient, degree, a + b, 0)
        cases += 1
        if invariant != decomposed:
            return CheckResult(
                name,
                False,
                f"N={ambient} k={degree} (a,b)=({a},{b}):"
                f" invariant {invariant} != mirror difference {decomposed}",
            )
    return CheckResult(name, True, f"{cases} dimension-valid pairs, N=3..9, k=1..N+2")


def _grid_queries() -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """Every (N, k, insertions) with N=3..9, k=1..N+2, n<=4, a_j <= N-2."""
    for ambient in range(3, 10):
        for degree in range(1, ambient + 3):
            for n in range(1, 5):
                for insertions in _multisets(n, 1, ambient - 2):
                    yield ambient, degree, insertions


def _multisets(parts: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for tail in _multisets(parts - 1, first, hi):
            yield (first,) + tail


def check_cross_engine_agreement() -> CheckResult:
    """Residue and Schubert engines agree on a dense query grid."""
    name = "cross-engine-agreement"
    cases = 0
    for ambient, degree, insertions in _grid_queries():
        via_residue = gw_n_point_residue(ambient, degree, insertions)
        via_schubert = gw_n_point_schubert(ambient, degree, insertions)
        cases += 1
        if via_residue != via_schubert:
            return CheckResult(
                name,
                False,
                f"N={ambient} k={degree} insertions={list(insertions)}:"
                f" residue {via_residue} != schubert {via_schubert}",
            )
    return CheckResult(name, True, f"{cases} queries, N=3..9, k=1..N+2, n=1..4")


def check_insertion_permutations(seed: int = DEFAULT_SEED, queries: int = 60) -> CheckResult:
    """gw_n_point_residue is blind to the order of its insertions."""
    name = "insertion-permutation-invariance"
    rng = random.Random(seed)
    cases = 0
    for trial in range(queries):
        n = 3 if trial % 2 == 0 else 4
        ambient = rng.randint(3, 9)
        degree = rng.randint(1, ambient + 2)
        valid = list(dimension_valid_insertions(ambient, degree, n))
        if valid:
            base = rng.choice(valid)
        else:
            base = tuple(rng.randint(1, ambient - 1) for _ in range(n))
        reference = gw_n_point_residue(ambient, degree, base)
        for perm in set(permutations(base)):
            cases += 1
            got = gw_n_point_residue(ambient, degree, perm)
            if got != reference:
                return CheckResult(
                    name,
                    False,
                    f"N={ambient} k={degree} {list(perm)} gives {got},"
                    f" but {list(base)} gives {reference}",
                )
    return CheckResult(name, True, f"{queries} random queries, {cases} permutations")


def check_vanishing(seed: int = DEFAULT_SEED, samples: int = 40) -> CheckResult:
    """Off-degree, z1^N-divisible, and ring-relation multiples integrate to 0."""
    name = "vanishing-suite"
    rng = random.Random(seed)
    cases = 0
    for ambient in range(3, 9):
        critical = 2 * ambient - 3
        families: list[tuple[str, Callable[[], BiPoly]]] = [
            (
                "off-degree",
                lambda: random_homogeneous(
                    rng, rng.choice([d for d in range(critical + 3) if d != critical])
                ),
            ),
            (
                "z1^N-multiple",
                lambda: BiPoly.monomial(ambient, 0) * random_homogeneous(rng, ambient - 3),
            ),
            (
                "ring-relation-multiple",
                lambda: w_poly(ambient) * random_homogeneous(rng, ambient - 2),
            ),
        ]
        for label, make in families:
            for _ in range(samples):
                poly = make()
                for mode in MODES:
                    got = projective_bundle_integral(poly, ambient, mode)
                    cases += 1
                    if got != 0:
                        return CheckResult(
                            name,
                            False,
                            f"N={ambient} {label} {mode.value}: poly={poly} gave {got}",
                        )
    return CheckResult(name, True, f"{cases} evaluations across three vanishing families")


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run every check; random ones use the given seed."""
    return [
        check_dual_mode_normalization(),
        check_dual_mode_agreement(seed),
        check_two_point_reduction(),
        check_mirror_identity(),
        check_cross_engine_agreement(),
        check_insertion_permutations(seed),
        check_vanishing(seed),
    ]
