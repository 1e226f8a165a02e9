"""Schubert engine: line counts via intersection theory on G(2, N).

The Grassmannian G(2, N) of 2-planes in C^N (equivalently, of lines in
CP^(N-1)) has cohomology with a basis of Schubert classes indexed by
partitions (a, b) with a >= b >= 0 fitting in a 2 x (N - 2) box.  The
class of a point is the full-box partition (N - 2, N - 2), and
integration over G(2, N) reads off its coefficient.

A product with a special class sigma_p = sigma_(p, 0) is expanded with
the Pieri rule.  Arbitrary symmetric polynomials in the Chern roots z1,
z2 are converted to the Schubert basis with the bialternant trick: for
symmetric p, the coefficient of the two-row Schur polynomial s_(a, b)
in p is the coefficient of z1^(a+1) z2^b in p * (z1 - z2).  Partitions
that poke out of the box are discarded on the spot; that is exact
because the two-row Schur polynomials with first row > N - 2 span an
ideal of the ring of symmetric polynomials in two variables, so no
later product can bring a discarded term back into the box.

The line count on a degree-k hypersurface pairs the top Chern class of
Sym^k of the dual tautological bundle, whose Chern-root polynomial is
euler_poly(k), against one special Schubert class sigma_(a_j - 1) per
insertion.  This route never mentions residues, so it serves as an
independent oracle for the residue engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .bipoly import BiPoly, Z1, Z2
from .residue import euler_poly, w_poly


@dataclass(frozen=True, order=True)
class Partition2:
    """A two-row partition (a, b) with a >= b >= 0."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError(f"partition rows must be integers, got ({self.a!r}, {self.b!r})")
        if not self.a >= self.b >= 0:
            raise ValueError(f"partition rows must satisfy a >= b >= 0, got ({self.a}, {self.b})")

    def weight(self) -> int:
        return self.a + self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


class SchubertClass:
    """An integer combination of Schubert classes on a fixed G(2, N).

    `box_width` is N - 2.  Coefficients are stored per partition, with
    zero coefficients and out-of-box partitions never stored; dropping
    out-of-box input on construction is how the cohomology quotient is
    enforced.  Instances are immutable; arithmetic returns new ones.
    """

    __slots__ = ("box_width", "_coeffs")

    def __init__(self, box_width: int, coeffs: Mapping[Partition2, int] | None = None):
        if not isinstance(box_width, int) or box_width < 0:
            raise ValueError(f"box width must be a nonnegative integer, got {box_width!r}")
        self.box_width = box_width
        clean: dict[Partition2, int] = {}
        if coeffs:
            for part, c in coeffs.items():
                if not isinstance(part, Partition2):
                    raise TypeError(f"keys must be Partition2, got {part!r}")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient of {part} must be an integer, got {c!r}")
                if c != 0 and part.a <= box_width:
                    clean[part] = c
        self._coeffs = clean

    @classmethod
    def fundamental(cls, box_width: int) -> "SchubertClass":
        """The class of the whole Grassmannian, sigma_(0,0)."""
        return cls(box_width, {Partition2(0, 0): 1})

    @classmethod
    def point(cls, box_width: int) -> "SchubertClass":
        """The class of a point, the full-box partition."""
        return cls(box_width, {Partition2(box_width, box_width): 1})

    def coeff(self, part: Partition2) -> int:
        return self._coeffs.get(part, 0)

    def items(self) -> Iterator[tuple[Partition2, int]]:
        for part in sorted(self._coeffs):
            yield part, self._coeffs[part]

    def as_dict(self) -> dict[Partition2, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        if not isinstance(other, SchubertClass):
            return NotImplemented
        if self.box_width != other.box_width:
            raise ValueError(
                f"cannot combine classes with box widths {self.box_width} and {other.box_width}"
            )
        out = dict(self._coeffs)
        for part, c in other._coeffs.items():
            s = out.get(part, 0) + c
            if s:
                out[part] = s
            else:
                del out[part]
        return SchubertClass(self.box_width, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.box_width == other.box_width and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*s{part}" for part, c in self.items()) or "0"
        return f"<{body} | box {self.box_width}>"


def schur_expand(poly: BiPoly, box_width: int) -> SchubertClass:
    """Expand a symmetric polynomial in the Chern roots in the Schubert basis.

    For symmetric p the expansion p = sum c_(a,b) * s_(a,b) is unique, and
    the bialternant rule reads the coefficients off the antisymmetric
    polynomial q = p * (z1 - z2): the monomial z1^i z2^j of q with i > j
    contributes its coefficient to the partition (i - 1, j).  Monomials
    with i < j mirror the i > j ones with opposite sign and carry no new
    information, and i = j cannot occur in an antisymmetric polynomial.
    Partitions wider than the box are dropped.
    """
    if not isinstance(box_width, int) or box_width < 0:
        raise ValueError(f"box width must be a nonnegative integer, got {box_width!r}")
    if not poly.is_symmetric():
        raise ValueError("only symmetric polynomials have a Schubert expansion")
    q = poly * (Z1 - Z2)
    coeffs: dict[Partition2, int] = {}
    for (i, j), c in q.as_dict().items():
        if i > j:
            coeffs[Partition2(i - 1, j)] = c
    return SchubertClass(box_width, coeffs)


def schur_poly(part: Partition2) -> BiPoly:
    """The two-variable Schur polynomial s_(a,b)(z1, z2).

    s_(a,b) = (z1*z2)^b * h_(a-b), and the complete homogeneous piece
    h_(a-b) is w_poly(a - b + 1).
    """
    return BiPoly.monomial(part.b, part.b) * w_poly(part.a - part.b + 1)


def pieri_multiply(cls: SchubertClass, p: int) -> SchubertClass:
    """Multiply by the special class sigma_p = sigma_(p, 0).

    Pieri rule: sigma_p * sigma_(a,b) = sum of sigma_(c,d) over
    c + d = a + b + p with c >= a >= d >= b, keeping c inside the box.
    p = 0 is the identity.
    """
    if not isinstance(p, int) or p < 0:
        raise ValueError(f"special class index must be a nonnegative integer, got {p!r}")
    box = cls.box_width
    out: dict[Partition2, int] = {}
    for part, coeff in cls._coeffs.items():
        for d in range(part.b, min(part.a, part.b + p) + 1):
            c = part.a + part.b + p - d
            if part.a <= c <= box:
                key = Partition2(c, d)
                s = out.get(key, 0) + coeff
                if s:
                    out[key] = s
                else:
                    del out[key]
    return SchubertClass(box, out)


def integrate_g2n(cls: SchubertClass) -> int:
    """Integral over G(2, N): the coefficient of the point class."""
    return cls.coeff(Partition2(cls.box_width, cls.box_width))


def gw_n_point_schubert(ambient: int, degree: int, insertions: Sequence[int]) -> int:
    """n-point degree-1 invariant as a Schubert intersection number.

    Expands euler_poly(degree) in the Schubert basis of G(2, ambient),
    multiplies in one special class sigma_(a_j - 1) per insertion with
    the Pieri rule, and integrates.  Requires ambient >= 3 (the box of
    G(2, 2) is empty) and 1 <= a_j <= ambient - 1 so that every
    sigma_(a_j - 1) is an honest Schubert class.
    """
    if not isinstance(ambient, int) or ambient < 3:
        raise ValueError(f"ambient dimension must be an integer >= 3, got {ambient!r}")
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"hypersurface degree must be an integer >= 1, got {degree!r}")
    if not insertions:
        raise ValueError("at least one insertion power is required")
    box = ambient - 2
    for a in insertions:
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"insertion powers must be positive integers, got {a!r}")
        if a - 1 > box:
            raise ValueError(
                f"insertion power {a} exceeds the ambient bound {box + 1} for G(2,{ambient})"
            )
    cls = schur_expand(euler_poly(degree), box)
    for a in insertions:
        cls = pieri_multiply(cls, a - 1)
    return integrate_g2n(cls)
