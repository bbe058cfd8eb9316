"""Compose base-ring duality with invariant theory: descended shifts.

For a polynomial base ring acted on by a finite group whose invariants are
again polynomial, the Gorenstein shift of the invariant ring is the base
shift a plus the Solomon supplement b, and the localized invariants are
self-dual with shift a + b + 1.  For integral (non-rational) coefficients
this is a necessary condition and a prediction of the shift, not a theorem,
and reports should be labelled accordingly.  Bases with relations are
outside this regime and are refused.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded_ring import (
    RingPresentation,
    gorenstein_shift_formula,
    gorenstein_shift_stanley,
    krull_dimension,
    polynomial_presentation,
)
from .invariants import (
    GradedGroupRep,
    molien_series,
    solomon_supplement,
    verify_solomon,
)
from .series import HilbertSeries


class NotPolynomialBase(ValueError):
    """The base presentation has relations; descent prediction needs a
    polynomial base ring."""


class NotPolynomialInvariants(ArithmeticError):
    """Invariant degrees could not be extracted: the invariants are not a
    polynomial ring (or the group is not generated by pseudoreflections), so
    no descent prediction is available."""


class BlockMismatch(ValueError):
    """The group's grading blocks do not match the ring's generator degrees."""


@dataclass(frozen=True)
class DescentReport:
    """Shift bookkeeping for the passage to a ring of invariants.

    ``invariant_presentation`` is the relation-free presentation on the
    extracted invariant degrees; its closed-formula shift always equals
    ``descended_gorenstein_shift``, which is how the two routes of the
    prediction are kept consistent.
    """

    base: RingPresentation
    group: GradedGroupRep
    base_shift_a: int
    invariant_degrees: tuple[int, ...]
    solomon_b: int
    descended_gorenstein_shift: int
    descended_anderson_shift: int
    solomon_verified: bool
    invariant_presentation: RingPresentation
    invariant_series: HilbertSeries


def _check_blocks(p: RingPresentation, group: GradedGroupRep) -> None:
    ring_degrees = sorted(p.generator_degrees)
    group_degrees = sorted(group.graded_degrees)
    if ring_degrees != group_degrees:
        raise BlockMismatch(
            f"group grading {group_degrees} does not match generator degrees {ring_degrees}"
        )


def descent_report(p: RingPresentation, group: GradedGroupRep) -> DescentReport:
    """Predict the invariant ring's shifts from the base ring and the action.

    Requires a relation-free base whose generator degrees match the group's
    grading blocks, and an action whose invariants are polynomial (otherwise
    :class:`NotPolynomialInvariants`: the Gorenstein property need not
    descend, and this library makes no prediction).
    """
    if p.relations:
        raise NotPolynomialBase(
            f"{p.name}: base ring has relations; descent prediction needs a polynomial base"
        )
    _check_blocks(p, group)
    a = gorenstein_shift_formula(p)
    trivial = molien_series(group, "trivial")
    if trivial.polynomial_degrees is None:
        raise NotPolynomialInvariants(
            f"{p.name}: invariants of {group.name or 'the group'} are not polynomial"
        )
    degrees = trivial.polynomial_degrees
    b = solomon_supplement(p.generator_degrees, degrees)
    solomon = verify_solomon(group)
    invariant_presentation = polynomial_presentation(
        name=f"{p.name}^{group.name or 'G'}",
        coefficient_label=p.coefficient_label,
        degrees=degrees,
    )
    return DescentReport(
        base=p,
        group=group,
        base_shift_a=a,
        invariant_degrees=degrees,
        solomon_b=b,
        descended_gorenstein_shift=a + b,
        descended_anderson_shift=a + b + 1,
        solomon_verified=solomon.verified,
        invariant_presentation=invariant_presentation,
        invariant_series=trivial.series,
    )


def cross_check_invariant_shift(report: DescentReport) -> bool:
    """True when both independent routes agree with the predicted shift.

    Route one: the closed formula on the extracted invariant presentation.
    Route two: the functional-equation extraction from the Molien series at
    the invariant ring's Krull dimension.
    """
    predicted = report.base_shift_a + report.solomon_b
    by_formula = gorenstein_shift_formula(report.invariant_presentation)
    by_series = gorenstein_shift_stanley(
        report.invariant_series, krull_dimension(report.invariant_presentation)
    )
    return by_formula == predicted and by_series == predicted
