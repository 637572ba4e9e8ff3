"""Toric models of threefolds fibred in (1,2)-surfaces.

A pair of integers ``(d, d0)`` with ``d, d0 >= 0`` and ``e := 3*d - 2*d0 >= 0``
selects a projective toric 4-fold: the P(1,1,2,5)-bundle over the projective
line whose six homogeneous coordinates carry the bidegrees

=====  ====  ====  ======  =======  ===  ===
row    t0    t1    x0      x1       y    z
=====  ====  ====  ======  =======  ===  ===
base    1     1    d-d0    d0-2d    0    0
fibre   0     0    1       1        2    5
=====  ====  ====  ======  =======  ===  ===

The divisor class group has rank two.  We use the generators ``F`` (the fibre,
cut out by t0) and ``H`` (the class of t0^d0 * x0); the tautological sheaf of
the bundle then has class ``H - d*F``.  All intersection numbers follow from

    H^4 = d/2,    H^3.F = 1/10,    F^2 = 0,

by multilinear expansion, and every quantity in this package is an exact
integer or `fractions.Fraction`; no floating point is used anywhere.

The object of interest is a general divisor in ``|10(H - d*F)|``, a threefold
fibred in surfaces with p_g = 2 and K^2 = 1.  This module provides the
divisor-class arithmetic for the ambient bundle: intersection numbers, the
nef and ample criteria, degrees on the distinguished torus-invariant curves,
and section counts of arbitrary classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import ClassVar

__all__ = [
    "COORDINATES",
    "H",
    "F",
    "NormalizationError",
    "BundleParams",
    "DivisorClass",
    "WeightMatrix",
    "SpecialCurve",
    "weight_matrix",
    "coordinate_divisor_class",
    "canonical_class_F",
    "member_class",
    "tautological_class",
    "quartic_intersection",
    "is_nef",
    "is_ample",
    "curve_intersection",
    "h0_class",
]

#: Ordered labels of the six homogeneous coordinates.
COORDINATES = ("t0", "t1", "x0", "x1", "y", "z")

#: Fibre weights of the coordinates (second row of every weight matrix).
FIBRE_ROW = (0, 0, 1, 1, 2, 5)


class NormalizationError(ValueError):
    """Weight data outside the normalized range e = 3d - 2*d0 >= 0."""


@dataclass(frozen=True)
class BundleParams:
    """The integer pair (d, d0) selecting a bundle, with derived e = 3d - 2*d0.

    Both entries must be nonnegative, and so must e.  The sign condition on e
    is a harmless normalization: swapping the two weight-one coordinates
    replaces d0 by 3d - d0 and flips the sign of e, so a caller holding data
    with e < 0 should relabel rather than expect a silent swap here.
    """

    d: int
    d0: int

    def __post_init__(self) -> None:
        if self.d < 0 or self.d0 < 0:
            raise ValueError(
                f"d and d0 must be nonnegative, got ({self.d}, {self.d0})"
            )
        if self.e < 0:
            raise NormalizationError(
                f"e = 3*d - 2*d0 = {self.e} is negative for (d, d0) = "
                f"({self.d}, {self.d0}); swap x0 and x1, i.e. replace d0 by "
                f"3*d - d0 = {3 * self.d - self.d0}"
            )

    @property
    def e(self) -> int:
        return 3 * self.d - 2 * self.d0

    def label(self) -> str:
        return f"X({self.d};{self.d0})"


@dataclass(frozen=True)
class DivisorClass:
    """The class a*H + b*F in the rank-two divisor class lattice."""

    a: int
    b: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * self.a, n * self.b)

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = []
        for coeff, symbol in ((self.a, "H"), (self.b, "F")):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else ("+" if terms else "")
            mag = abs(coeff)
            body = symbol if mag == 1 else f"{mag}{symbol}"
            terms.append(f"{sign}{body}" if not terms else f"{sign} {body}")
        return " ".join(terms) if terms else "0"


H = DivisorClass(1, 0)
F = DivisorClass(0, 1)


@dataclass(frozen=True)
class WeightMatrix:
    """2 x 6 bidegree matrix of the homogeneous coordinates.

    The fibre row is always (0, 0, 1, 1, 2, 5); the base row carries the
    twists and varies with the presentation of the bundle.
    """

    base_row: tuple[int, int, int, int, int, int]

    labels: ClassVar[tuple[str, ...]] = COORDINATES
    fibre_row: ClassVar[tuple[int, ...]] = FIBRE_ROW

    def __post_init__(self) -> None:
        if len(self.base_row) != 6:
            raise ValueError("base row must have six entries")

    @property
    def rows(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.base_row, self.fibre_row)

    def column(self, label: str) -> tuple[int, int]:
        i = self.labels.index(label)
        return (self.base_row[i], self.fibre_row[i])

    def twist(self, t: int) -> "WeightMatrix":
        """Re-present the bundle after twisting its algebra by O(-t) on the base.

        Adds t times the fibre row to the base row; the underlying variety is
        unchanged.
        """
        return WeightMatrix(
            tuple(b + t * w for b, w in zip(self.base_row, self.fibre_row))
        )


def weight_matrix(params: BundleParams) -> WeightMatrix:
    """The normalized weight matrix of the bundle selected by ``params``."""
    d, d0 = params.d, params.d0
    return WeightMatrix((1, 1, d - d0, d0 - 2 * d, 0, 0))


def coordinate_divisor_class(coord: str, params: BundleParams) -> DivisorClass:
    """Class of the torus-invariant divisor cut out by one coordinate.

    t0, t1 -> F; x0 -> H - d0*F; x1 -> H + (d0 - 3d)*F; y -> 2(H - d*F);
    z -> 5(H - d*F).
    """
    d, d0 = params.d, params.d0
    table = {
        "t0": DivisorClass(0, 1),
        "t1": DivisorClass(0, 1),
        "x0": DivisorClass(1, -d0),
        "x1": DivisorClass(1, d0 - 3 * d),
        "y": DivisorClass(2, -2 * d),
        "z": DivisorClass(5, -5 * d),
    }
    try:
        return table[coord]
    except KeyError:
        raise ValueError(f"unknown coordinate label {coord!r}") from None


def canonical_class_F(params: BundleParams) -> DivisorClass:
    """Canonical class of the ambient bundle: -9H + (10d - 2)F.

    Equals minus the sum of the six coordinate divisor classes.
    """
    return DivisorClass(-9, 10 * params.d - 2)


def member_class(params: BundleParams) -> DivisorClass:
    """Class 10(H - d*F) of the degree-ten family of threefolds."""
    return DivisorClass(10, -10 * params.d)


def tautological_class(params: BundleParams) -> DivisorClass:
    """Class H - d*F of the tautological sheaf O(1) of the bundle."""
    return DivisorClass(1, -params.d)


def quartic_intersection(
    c1: DivisorClass,
    c2: DivisorClass,
    c3: DivisorClass,
    c4: DivisorClass,
    params: BundleParams,
) -> Fraction:
    """Intersection number of four divisor classes, as an exact rational.

    Expands the product multilinearly over H^4 = d/2, H^3.F = 1/10 and
    F^2 = 0.  These relations determine the whole quartic form on the
    rank-two lattice; no further relations are imposed.
    """
    a = (c1.a, c2.a, c3.a, c4.a)
    b = (c1.b, c2.b, c3.b, c4.b)
    h4 = a[0] * a[1] * a[2] * a[3]
    h3f = sum(
        b[i] * a[j] * a[k] * a[l]
        for i, j, k, l in ((0, 1, 2, 3), (1, 0, 2, 3), (2, 0, 1, 3), (3, 0, 1, 2))
    )
    return h4 * Fraction(params.d, 2) + Fraction(h3f, 10)


def is_nef(c: DivisorClass, params: BundleParams) -> bool:
    """a*H + b*F is nef iff a >= 0 and b >= -a * min(d, d0).

    Equivalent to nonnegativity on the torus-invariant test curves: a line of
    a fibre gives a, the section S0 gives b + a*d0, and the index-5 curve
    gives (b + a*d)/5.
    """
    return c.a >= 0 and c.b >= -c.a * min(params.d, params.d0)


def is_ample(c: DivisorClass, params: BundleParams) -> bool:
    """Ample iff both nef inequalities are strict."""
    return c.a > 0 and c.b > -c.a * min(params.d, params.d0)


class SpecialCurve(Enum):
    """Distinguished torus-invariant curves, keyed by their defining divisors.

    S0 is the section meeting the singular locus of a general member; S2 and
    S5 are the index-2 and index-5 singular curves of the ambient bundle;
    GAMMA is the base curve of the canonical system, cut on the member by the
    two weight-one coordinate divisors.
    """

    S0 = ("x1", "y", "z")
    S2 = ("x0", "x1", "z")
    S5 = ("x0", "x1", "y")
    GAMMA = ("x0", "x1")

    @property
    def divisors(self) -> tuple[str, ...]:
        return self.value


def curve_intersection(
    c: DivisorClass, curve: SpecialCurve, params: BundleParams
) -> Fraction:
    """Degree of a*H + b*F on one of the special curves.

    Computed as the quartic product of the class with the curve's defining
    divisors (for GAMMA the third factor is the member class 10(H - d*F)).
    Closed forms: S0 -> a*d0 + b and GAMMA -> a*d + b, while the two curves
    in the singular locus pick up their indices as denominators,
    S2 -> (a*d + b)/2 and S5 -> (a*d + b)/5.
    """
    factors = [coordinate_divisor_class(label, params) for label in curve.divisors]
    if curve is SpecialCurve.GAMMA:
        factors.append(member_class(params))
    return quartic_intersection(c, factors[0], factors[1], factors[2], params)


def h0_class(c: DivisorClass, params: BundleParams) -> int:
    """Number of global sections of O(a*H + b*F), by pushforward to the line.

    Sections are monomials t0^c0 t1^c1 x0^a0 x1^a1 y^a2 z^a5 in the class; a
    fibre monomial of x-degree a and base weight w contributes the
    max(0, w + b + 1) choices of binary form in t0, t1.  This counts sections
    of the pushed-forward split bundle exactly; it is not a general toric
    cohomology routine.  Classes with a < 0 have no sections.
    """
    a, b = c.a, c.b
    if a < 0:
        return 0
    d, d0 = params.d, params.d0
    total = 0
    for a5 in range(a // 5 + 1):
        for a2 in range((a - 5 * a5) // 2 + 1):
            rest = a - 5 * a5 - 2 * a2
            for a1 in range(rest + 1):
                a0 = rest - a1
                w = a0 * d0 + a1 * (3 * d - d0) + (2 * a2 + 5 * a5) * d
                if w + b >= 0:
                    total += w + b + 1
    return total
