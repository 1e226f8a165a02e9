"""Residue engine: line counts on hypersurfaces by coefficient extraction.

Lines in CP^{N-1} form the Grassmannian G(2, N).  Fixed-point
localization reduces intersection numbers on G(2, N) to a double residue
in two weights z1, z2, and for polynomial integrands that residue is just
a coefficient: the residue pairing used throughout this module is

    <f> = [z1^(N-1) z2^(N-1)] f(z1, z2),

the coefficient of z1^(N-1) z2^(N-1).  Everything is exact integer
arithmetic on sparse polynomials (`BiPoly`).

The two building blocks are

    euler_poly(k) = product_{j=0..k} (j*z1 + (k-j)*z2)

the top Chern class of Sym^k of the tautological rank-2 bundle restricted
to a coordinate line (the count of lines on a degree-k hypersurface is
its pairing against the point class), and

    w_poly(a) = (z1^a - z2^a) / (z1 - z2) = sum_{j<a} z1^j z2^(a-1-j)

the two-variable complete homogeneous symmetric polynomial of degree
a - 1, which encodes a hyperplane-class insertion of power a.

`projective_bundle_integral` evaluates the same pairing on the
projectivization of the rank-2 bundle, where the honest localization
formula divides by z1^N - z2^N.  It supports two modes that must agree:
SIMPLIFIED multiplies by (z2 - z1) and reads one coefficient, while
TRUNCATED_SERIES expands 1 / (z2^N - z1^N) as a geometric series and sums
the finitely many terms that can contribute.
"""

from __future__ import annotations

from enum import Enum
from functools import cache
from typing import Sequence

from .bipoly import BiPoly, Z1, Z2


class ResidueMode(Enum):
    """Evaluation strategy for `projective_bundle_integral`."""

    SIMPLIFIED = "simplified"
    TRUNCATED_SERIES = "truncated_series"


def _check_ambient_degree(ambient: int, degree: int) -> None:
    if not isinstance(ambient, int) or ambient < 2:
        raise ValueError(f"ambient dimension must be an integer >= 2, got {ambient!r}")
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"hypersurface degree must be an integer >= 1, got {degree!r}")


@cache
def euler_poly(degree: int) -> BiPoly:
    """product_{j=0..degree} (j*z1 + (degree-j)*z2), homogeneous of degree+1."""
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"hypersurface degree must be an integer >= 1, got {degree!r}")
    out = BiPoly.one()
    for j in range(degree + 1):
        out = out * BiPoly({(1, 0): j, (0, 1): degree - j})
    return out


@cache
def w_poly(a: int) -> BiPoly:
    """sum_{j=0..a-1} z1^j z2^(a-1-j); zero for a = 0, one for a = 1."""
    if not isinstance(a, int) or a < 0:
        raise ValueError(f"power must be a nonnegative integer, got {a!r}")
    return BiPoly({(j, a - 1 - j): 1 for j in range(a)})


def double_residue(poly: BiPoly, ambient: int) -> int:
    """Coefficient of z1^(ambient-1) z2^(ambient-1) in poly."""
    if not isinstance(ambient, int) or ambient < 1:
        raise ValueError(f"ambient dimension must be an integer >= 1, got {ambient!r}")
    return poly.coeff(ambient - 1, ambient - 1)


def w_two_point(ambient: int, degree: int, a: int, b: int) -> int:
    """Residue pairing <z1^a * e_k * z2^b> for the degree-k Euler class.

    This is the raw two-point correlator before symmetrization; it is not
    symmetric in (a, b) and is the quantity the mirror transformation
    rewrites the symmetric invariant in terms of.
    """
    _check_ambient_degree(ambient, degree)
    if a < 0 or b < 0:
        raise ValueError(f"insertion powers must be nonnegative, got ({a}, {b})")
    poly = Z1 ** a * euler_poly(degree) * Z2 ** b
    return double_residue(poly, ambient)


def gw_two_point_localized(ambient: int, degree: int, a: int, b: int) -> int:
    """Two-point degree-1 invariant -(1/2) <e_k * (z1 - z2)^2 * w_a * w_b>.

    The raw residue is always even (the halved value is an intersection
    number on the Grassmannian); an odd residue would mean corrupted
    arithmetic, so it raises rather than rounding.
    """
    _check_ambient_degree(ambient, degree)
    if a < 0 or b < 0:
        raise ValueError(f"insertion powers must be nonnegative, got ({a}, {b})")
    poly = euler_poly(degree) * (Z1 - Z2) ** 2 * w_poly(a) * w_poly(b)
    raw = double_residue(poly, ambient)
    if raw % 2:
        raise ArithmeticError(
            f"two-point residue {raw} is odd for ambient={ambient}, degree={degree}, "
            f"insertions=({a}, {b}); the localized integrand must halve exactly"
        )
    return -(raw // 2)


def gw_n_point_residue(ambient: int, degree: int, insertions: Sequence[int]) -> int:
    """n-point degree-1 invariant <(z2 - z1) * e_k * z1^(a_1) * prod_{j>=2} w_(a_j)>.

    The first insertion enters as a bare power of z1 and the rest through
    w factors; the value is independent of the ordering of `insertions`.
    """
    _check_ambient_degree(ambient, degree)
    if not insertions:
        raise ValueError("at least one insertion power is required")
    powers = list(insertions)
    for a in powers:
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"insertion powers must be positive integers, got {a!r}")
    poly = (Z2 - Z1) * euler_poly(degree) * Z1 ** powers[0]
    for a in powers[1:]:
        poly = poly * w_poly(a)
    return double_residue(poly, ambient)


def projective_bundle_integral(poly: BiPoly, ambient: int, mode: ResidueMode) -> int:
    """Integral of a class over the projectivized rank-2 bundle of lines.

    The localization formula for the bundle P(S) over G(2, ambient) pairs
    the class `poly` against 1 / (z2^ambient - z1^ambient).  Only
    homogeneous classes of total degree 2*ambient - 3 (the dimension of
    the space) can integrate to something nonzero; anything else gives 0.

    SIMPLIFIED uses the identity: multiplying by (z2 - z1) instead of
    dividing by the full denominator leaves the target coefficient
    unchanged, so the integral is [z1^(ambient-1) z2^(ambient-1)] of
    (z2 - z1) * poly.  TRUNCATED_SERIES expands the denominator as a
    geometric series in z1^ambient / z2^ambient and sums the finitely
    many coefficient extractions that can be nonzero.  The two must agree
    on every input.
    """
    if not isinstance(ambient, int) or ambient < 2:
        raise ValueError(f"ambient dimension must be an integer >= 2, got {ambient!r}")
    if not isinstance(mode, ResidueMode):
        raise TypeError(f"mode must be a ResidueMode, got {mode!r}")
    shifted = (Z2 - Z1) * poly
    if mode is ResidueMode.SIMPLIFIED:
        return shifted.coeff(ambient - 1, ambient - 1)
    # 1/(z2^N - z1^N) = sum_{j>=0} z1^(N*j) * z2^(-N*(j+1)); term j asks for the
    # coefficient of z1^(N-1-N*j) z2^(N-1+N*j) in shifted, which lies outside
    # the support once N*j exceeds deg_z1(shifted), hence the ceiling bound.
    j_max = -(-(shifted.degree_z1()) // ambient) if shifted else 0
    total = 0
    for j in range(j_max + 1):
        total += shifted.coeff(ambient - 1 - ambient * j, ambient - 1 + ambient * j)
    return total
