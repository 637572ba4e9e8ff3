"""Fibre monomials and linear systems of the degree-ten family.

A fibre monomial x0^a0 x1^a1 y^a2 z^a5 has weighted degree
m = a0 + a1 + 2*a2 + 5*a5.  In a member of |m(H - d*F)| it appears with a
coefficient that is a binary form in t0, t1 of degree w - m*d, where w is the
monomial's base weight.  A negative coefficient degree forces the coefficient
to vanish identically, so what a general member can contain is exactly the
set of monomials with nonnegative coefficient degree.

For the degree-ten family the equation is normalized: the coefficients of
z^2 and y^5 are nonzero constants scaled to one, and completing the square in
z removes every monomial divisible by z.  `normal_form_support` returns the
surviving monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .toric import BundleParams, DivisorClass, SpecialCurve, h0_class

__all__ = [
    "FibreMonomial",
    "CoefficientEntry",
    "BaseLocus",
    "Z_SQUARED",
    "Y_FIFTH",
    "enumerate_monomials",
    "coefficient_degree",
    "coefficient_profile",
    "normal_form_support",
    "base_locus",
    "family_dimension",
]


@dataclass(frozen=True, slots=True)
class FibreMonomial:
    """Exponent vector (a0, a1, a2, a5) of x0^a0 x1^a1 y^a2 z^a5."""

    a0: int
    a1: int
    a2: int
    a5: int

    def __post_init__(self) -> None:
        if min(self.a0, self.a1, self.a2, self.a5) < 0:
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self) -> int:
        """Weighted degree a0 + a1 + 2*a2 + 5*a5."""
        return self.a0 + self.a1 + 2 * self.a2 + 5 * self.a5

    def base_weight(self, params: BundleParams) -> int:
        """F-degree of the monomial: a0*d0 + a1*(3d - d0) + (2*a2 + 5*a5)*d."""
        d, d0 = params.d, params.d0
        return self.a0 * d0 + self.a1 * (3 * d - d0) + (2 * self.a2 + 5 * self.a5) * d

    def label(self) -> str:
        parts = []
        for exp, name in ((self.a0, "x0"), (self.a1, "x1"), (self.a2, "y"), (self.a5, "z")):
            if exp == 1:
                parts.append(name)
            elif exp > 1:
                parts.append(f"{name}^{exp}")
        return " ".join(parts) if parts else "1"


Z_SQUARED = FibreMonomial(0, 0, 0, 2)
Y_FIFTH = FibreMonomial(0, 0, 5, 0)


@dataclass(frozen=True)
class CoefficientEntry:
    """A monomial together with the degree of its binary-form coefficient.

    Negative degree means the coefficient vanishes identically, so the
    monomial is absent from every member of the system.
    """

    monomial: FibreMonomial
    degree: int


@lru_cache(maxsize=None)
def enumerate_monomials(m: int) -> tuple[FibreMonomial, ...]:
    """All fibre monomials of weighted degree m, ordered by (a5, a2, a1).

    The ordering is part of the contract: output tables and serialized
    records are byte-stable across runs.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for a5 in range(m // 5 + 1):
        for a2 in range((m - 5 * a5) // 2 + 1):
            rest = m - 5 * a5 - 2 * a2
            for a1 in range(rest + 1):
                out.append(FibreMonomial(rest - a1, a1, a2, a5))
    return tuple(out)


def coefficient_degree(monomial: FibreMonomial, params: BundleParams) -> int:
    """Degree of the coefficient of ``monomial`` in |m(H - d*F)|, m its degree."""
    return monomial.base_weight(params) - monomial.degree * params.d


def coefficient_profile(
    params: BundleParams, m: int = 10
) -> tuple[CoefficientEntry, ...]:
    """Every degree-m monomial paired with its coefficient degree.

    For z-free monomials the degree has two closed forms,
    -a0(d - d0) - a1(d0 - 2d) and ((a0 + a1)d + (a1 - a0)e)/2; both are
    evaluated and must agree.
    """
    d, d0, e = params.d, params.d0, params.e
    entries = []
    for mono in enumerate_monomials(m):
        deg = coefficient_degree(mono, params)
        if mono.a5 == 0:
            dd0_form = -mono.a0 * (d - d0) - mono.a1 * (d0 - 2 * d)
            half, rem = divmod((mono.a0 + mono.a1) * d + (mono.a1 - mono.a0) * e, 2)
            assert rem == 0 and deg == dd0_form == half, (mono, params)
        entries.append(CoefficientEntry(mono, deg))
    return tuple(entries)


def normal_form_support(params: BundleParams) -> tuple[FibreMonomial, ...]:
    """Monomials surviving in the normalized equation of a general member.

    z^2 and y^5 always appear (their coefficients are nonzero constants,
    scaled to one); every other monomial divisible by z is removed by
    completing the square; the remaining z-free monomials appear iff their
    coefficient degree is nonnegative.  Returned in enumeration order.
    """
    support = []
    for mono in enumerate_monomials(10):
        if mono in (Z_SQUARED, Y_FIFTH):
            support.append(mono)
        elif mono.a5 == 0 and mono.a2 != 5 and coefficient_degree(mono, params) >= 0:
            support.append(mono)
    return tuple(support)


@dataclass(frozen=True)
class BaseLocus:
    """Base loci of the member family and of the canonical system.

    ``family_base`` is None when |10(H - d*F)| is base point free (d0 >= d)
    and S0 otherwise.  ``canonical_base`` is GAMMA whenever min(d, d0) >= 3;
    for smaller parameters the canonical system degenerates and no single
    base curve is reported.
    """

    family_base: SpecialCurve | None
    canonical_base: SpecialCurve | None


def base_locus(params: BundleParams) -> BaseLocus:
    family = None if params.d0 >= params.d else SpecialCurve.S0
    canonical = SpecialCurve.GAMMA if min(params.d, params.d0) >= 3 else None
    return BaseLocus(family, canonical)


def family_dimension(params: BundleParams) -> int:
    """Projective dimension of the degree-ten family.

    Sums the coefficient spaces over the profile and cross-checks against the
    independent section count of the class 10(H - d*F).
    """
    total = sum(max(0, entry.degree + 1) for entry in coefficient_profile(params))
    sections = h0_class(DivisorClass(10, -10 * params.d), params)
    assert total == sections, (params, total, sections)
    return total - 1
