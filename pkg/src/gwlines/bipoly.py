"""Exact sparse arithmetic for bivariate integer polynomials.

A polynomial in the formal variables z1, z2 is a mapping from exponent
pairs to coefficients:

    4*z1^2 + 17*z1*z2 + 4*z2^2   ->   {(2, 0): 4, (1, 1): 17, (0, 2): 4}

Coefficients are plain Python ints, so all arithmetic is exact at any
size; there is no floating point anywhere.  Zero coefficients are never
stored and the zero polynomial is the empty mapping, which makes equality
a plain dictionary comparison.  Instances are treated as immutable: every
operation returns a fresh instance, so values can be shared freely, e.g.
across worker threads.

Iteration (`terms`, `__str__`, `__repr__`) is in graded lexicographic
order: by total degree i + j first, then by the z1 exponent.  Output is
therefore deterministic for a given polynomial.
"""

from __future__ import annotations

from typing import Iterator, Mapping

Monomial = tuple[int, int]


class _ZeroDegree:
    """Sentinel: the zero polynomial is homogeneous of every degree."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO_DEGREE"


ZERO_DEGREE = _ZeroDegree()


def _graded_lex(monomial: Monomial) -> tuple[int, int]:
    i, j = monomial
    return (i + j, i)


class BiPoly:
    """An exact polynomial in z1 and z2 with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for (i, j), c in terms.items():
                if not (isinstance(i, int) and isinstance(j, int)):
                    raise TypeError(f"exponents must be integers, got ({i!r}, {j!r})")
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial ({i}, {j})")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient of ({i}, {j}) must be an integer, got {c!r}")
                if c != 0:
                    clean[(i, j)] = c
        self._terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        """The single term c * z1^i * z2^j."""
        return cls({(i, j): c})

    # ---- inspection ---------------------------------------------------

    def coeff(self, i: int, j: int) -> int:
        """Coefficient of z1^i z2^j (zero when the monomial is absent)."""
        return self._terms.get((i, j), 0)

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Yield ((i, j), coefficient) pairs in graded lexicographic order."""
        for key in sorted(self._terms, key=_graded_lex):
            yield key, self._terms[key]

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def homogeneous_degree(self) -> "int | _ZeroDegree | None":
        """Common total degree of all monomials.

        Returns the degree when every monomial has the same total degree,
        ZERO_DEGREE for the zero polynomial (homogeneous of every degree),
        and None when the polynomial is not homogeneous.
        """
        if not self._terms:
            return ZERO_DEGREE
        degrees = {i + j for i, j in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def degree_z1(self) -> int:
        """Largest z1 exponent appearing (-1 for the zero polynomial)."""
        return max((i for i, _ in self._terms), default=-1)

    def swap_vars(self) -> "BiPoly":
        """The polynomial with z1 and z2 exchanged."""
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self._terms == {(j, i): c for (i, j), c in self._terms.items()}

    # ---- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "BiPoly | None":
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, int):
            return BiPoly({(0, 0): value})
        return None

    def __add__(self, other) -> "BiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "BiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = BiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    # ---- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.terms():
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("z1" if i == 1 else f"z1^{i}")
            if j:
                factors.append("z2" if j == 1 else f"z2^{j}")
            parts.append(("- " if c < 0 else "+ ") + "*".join(factors))
        text = " ".join(parts)
        return "-" + text[2:] if text.startswith("- ") else text[2:]

    def __repr__(self) -> str:
        return f"BiPoly({dict(self.terms())!r})"


Z1 = BiPoly({(1, 0): 1})
Z2 = BiPoly({(0, 1): 1})
