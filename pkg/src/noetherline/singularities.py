"""Singularities of the general member along the base section.

Near the section S0, where only t0, t1, x0 are nonzero, the member has local
fibre coordinates x = x1/x0, y = y/x0^2, z = z/x0^5, and its equation has
local monomial support obtained from the global normal-form support (a global
x0^a0 x1^a1 y^a2 contributes x^a1 y^a2).

Whether a surface germ is a rational double point is decided by a weighted
order test: for each of the four weight systems (1,1,0)/2, (1,1,1)/3,
(2,1,1)/4, (3,2,1)/6 and every assignment of the three weights to the local
coordinates, the equation must contain a monomial of weight below one.
Applied along S0 this yields a complete classification of the general member
by elementary inequalities in (d, d0), equivalently in (d, e):

* the family has a member with canonical singularities iff 4*d0 >= d
  (iff 2*e <= 5*d);
* the general member is smooth iff d0 >= d or 8*d0 = 7*d (e <= d or 4e = 5d);
* it has 8*d0 - 7*d = 5*d - 4*e isolated terminal points iff
  7*d/8 < d0 < d (d < e < 5d/4);
* otherwise it is singular along the whole section, a canonical curve with
  4*d0 - d = 5*d - 2*e dissident points.

At a dissident point the local equation is z^2 + y^5 + t*x^3; the weighted
blowup t -> t, x -> t^3 x', y -> t^2 y', z -> t^5 z' divides it exactly by
t^10 and the chart z'^2 + y'^5 + x'^3 is a compound Du Val point, so the
dissident points are canonical.  `crepant_chart_check` verifies that weight
bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations

from .linear_system import Y_FIFTH, Z_SQUARED, normal_form_support
from .toric import BundleParams

__all__ = [
    "EmptyFamilyError",
    "WeightSystem",
    "DU_VAL_SYSTEMS",
    "LocalMonomial",
    "SingularityKind",
    "SingularityClassification",
    "ChartMonomial",
    "CrepantChartResult",
    "DISSIDENT_CHART",
    "local_support_at_s0",
    "weight_below_one_exists",
    "duval_test",
    "classify_general_member",
    "classify_by_e",
    "crepant_chart_check",
]


class EmptyFamilyError(ValueError):
    """No member of the family has canonical singularities (4*d0 < d)."""


@dataclass(frozen=True)
class WeightSystem:
    """Rational weights weights/r on three local coordinates."""

    r: int
    weights: tuple[int, int, int]


DU_VAL_SYSTEMS = (
    WeightSystem(2, (1, 1, 0)),
    WeightSystem(3, (1, 1, 1)),
    WeightSystem(4, (2, 1, 1)),
    WeightSystem(6, (3, 2, 1)),
)

# Assignment carrying the weight 2 of the (2,1,1)/4 system onto z; the order
# test for this single case decides whether the family is nonempty.
_Z_GETS_TWO = (1, 2, 0)


@dataclass(frozen=True, slots=True)
class LocalMonomial:
    """Exponents of x^p y^q z^s in the local coordinates along S0."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z) < 0:
            raise ValueError("exponents must be nonnegative")


def local_support_at_s0(params: BundleParams) -> frozenset[LocalMonomial]:
    """Local monomial support of a general member near the section S0."""
    out = set()
    for mono in normal_form_support(params):
        if mono == Z_SQUARED:
            out.add(LocalMonomial(0, 0, 2))
        elif mono == Y_FIFTH:
            out.add(LocalMonomial(0, 5, 0))
        else:
            out.add(LocalMonomial(mono.a1, mono.a2, 0))
    return frozenset(out)


def weight_below_one_exists(
    support: frozenset[LocalMonomial] | set[LocalMonomial],
    system: WeightSystem,
    assignment: tuple[int, int, int],
) -> bool:
    """Does some support monomial have weight < 1 under the assigned weights?

    ``assignment[k]`` is the index of the weight carried by the k-th local
    coordinate (x, y, z).  The comparison is exact: weight < 1 iff the
    integer weighted order is below the denominator r.
    """
    w = system.weights
    wx, wy, wz = w[assignment[0]], w[assignment[1]], w[assignment[2]]
    return any(m.x * wx + m.y * wy + m.z * wz < system.r for m in support)


def duval_test(support: frozenset[LocalMonomial] | set[LocalMonomial]) -> bool:
    """Monomial-support criterion for a rational double point.

    True iff for each of the four weight systems and each of the six
    assignments of its weights to (x, y, z) some support monomial has weight
    below one.  This is the sufficiency direction of the weighted order test,
    evaluated on the given coordinates only.
    """
    return all(
        weight_below_one_exists(support, system, assignment)
        for system in DU_VAL_SYSTEMS
        for assignment in permutations((0, 1, 2))
    )


class SingularityKind(str, Enum):
    NOT_EXISTENT = "not_existent"
    SMOOTH = "smooth"
    TERMINAL_POINTS = "terminal_points"
    CANONICAL_CURVE = "canonical_curve"


@dataclass(frozen=True)
class SingularityClassification:
    """Outcome of the general-member classification.

    ``count`` is the number of terminal points for TERMINAL_POINTS and the
    number of dissident points for CANONICAL_CURVE; it is None otherwise.
    ``product`` marks the degenerate d = 0 case, where the member is a
    product of a line with a fixed surface.
    """

    kind: SingularityKind
    count: int | None = None
    product: bool = False

    def __post_init__(self) -> None:
        if self.kind is SingularityKind.TERMINAL_POINTS:
            if self.count is None or self.count <= 0:
                raise ValueError("terminal point count must be positive")
        elif self.kind is SingularityKind.CANONICAL_CURVE:
            if self.count is None or self.count < 0:
                raise ValueError("dissident point count must be nonnegative")
        elif self.count is not None:
            raise ValueError(f"{self.kind.value} carries no count")

    @property
    def exists(self) -> bool:
        return self.kind is not SingularityKind.NOT_EXISTENT

    def describe(self) -> str:
        if self.kind is SingularityKind.NOT_EXISTENT:
            return "no member with canonical singularities"
        if self.kind is SingularityKind.SMOOTH:
            return "smooth (product with a fixed surface)" if self.product else "smooth"
        if self.kind is SingularityKind.TERMINAL_POINTS:
            return f"{self.count} isolated terminal points on S0"
        return f"canonical singularities along S0, {self.count} dissident points"


def classify_general_member(params: BundleParams) -> SingularityClassification:
    """Classify the general member by the support analysis along S0.

    The existence boundary is derived twice: from the weighted order test
    (the (2,1,1)/4 system with the weight 2 on z asks for a support monomial
    with x-plus-y order below four) and from the closed form 4*d0 >= d; the
    two must agree.
    """
    d, d0 = params.d, params.d0
    existent = weight_below_one_exists(
        local_support_at_s0(params), DU_VAL_SYSTEMS[2], _Z_GETS_TWO
    )
    assert existent == (4 * d0 >= d), params
    if not existent:
        return SingularityClassification(SingularityKind.NOT_EXISTENT)
    if d == 0:
        return SingularityClassification(SingularityKind.SMOOTH, product=True)
    if d0 >= d or 8 * d0 == 7 * d:
        return SingularityClassification(SingularityKind.SMOOTH)
    if 8 * d0 > 7 * d:
        return SingularityClassification(
            SingularityKind.TERMINAL_POINTS, count=8 * d0 - 7 * d
        )
    return SingularityClassification(
        SingularityKind.CANONICAL_CURVE, count=4 * d0 - d
    )


def classify_by_e(params: BundleParams) -> SingularityClassification:
    """The same trichotomy phrased in (d, e); agrees with the (d, d0) form."""
    d, e = params.d, params.e
    if 2 * e > 5 * d:
        return SingularityClassification(SingularityKind.NOT_EXISTENT)
    if d == 0:
        return SingularityClassification(SingularityKind.SMOOTH, product=True)
    if e <= d or 4 * e == 5 * d:
        return SingularityClassification(SingularityKind.SMOOTH)
    if 4 * e < 5 * d:
        return SingularityClassification(
            SingularityKind.TERMINAL_POINTS, count=5 * d - 4 * e
        )
    return SingularityClassification(
        SingularityKind.CANONICAL_CURVE, count=5 * d - 2 * e
    )


@dataclass(frozen=True, slots=True)
class ChartMonomial:
    """Exponents of t^a x^p y^q z^s in the blowup chart at a dissident point."""

    t: int
    x: int
    y: int
    z: int


#: Weights of (t, x, y, z) under the substitution x -> t^3 x', y -> t^2 y',
#: z -> t^5 z'.
CHART_WEIGHTS = (1, 3, 2, 5)

#: Support of the dissident-point equation z^2 + y^5 + t*x^3.
DISSIDENT_CHART = frozenset(
    {ChartMonomial(0, 0, 0, 2), ChartMonomial(0, 0, 5, 0), ChartMonomial(1, 3, 0, 0)}
)


@dataclass(frozen=True)
class CrepantChartResult:
    """Whether the blowup substitution divides the equation exactly by t^10."""

    exact: bool
    offenders: tuple[ChartMonomial, ...]

    def __bool__(self) -> bool:
        return self.exact


def crepant_chart_check(
    support: frozenset[ChartMonomial] | set[ChartMonomial],
) -> CrepantChartResult:
    """Check that every support monomial has total weight exactly ten.

    Under (t, x, y, z) -> (1, 3, 2, 5) the monomials z^2, y^5 and t*x^3 all
    have weight ten, so the substitution strips t^10 from the equation and
    leaves z'^2 + y'^5 + x'^3.  Any monomial of a different weight is
    reported as an offender and the check fails.
    """
    wt, wx, wy, wz = CHART_WEIGHTS
    offenders = tuple(
        sorted(
            (
                m
                for m in support
                if m.t * wt + m.x * wx + m.y * wy + m.z * wz != 10
            ),
            key=lambda m: (m.t, m.x, m.y, m.z),
        )
    )
    return CrepantChartResult(not offenders, offenders)
