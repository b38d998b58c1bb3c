"""Verification of the functional equation Z(1-s) = beta^(2s-1) Z(s).

check_point and sweep compare both sides numerically with a relative
residual; exact_check_function_field verifies the equivalent integer
statement in positive characteristic (the coefficient symmetry of the
L-polynomial); euler_consistency_check compares the closed form against
the truncated Euler product inside the convergence half-plane.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError
from .fields import (
    FieldDescriptor,
    FunctionFieldDescriptor,
    field_spec_string,
    log_covolume,
    truncated_euler_product,
)
from .kernel import POLE_EXCLUSION_RADIUS, _as_complex
from .zeta import completed_zeta, pole_distance, zeta

STATUS_OK = "ok"
STATUS_SKIPPED = "near_pole_skipped"
STATUS_FAILED = "failed"

#: Floor inside the relative residual, guarding 0/0 at zeros of Z.
RESIDUAL_FLOOR = 1e-300
#: Both sides below this magnitude count as an exact match (residual 0).
_BOTH_TINY = 1e-100


@dataclass(frozen=True)
class FunctionalEquationReport:
    """One verification record.  lhs = Z(1-s), rhs = beta^(2s-1) Z(s);
    all three value fields are None when the node was skipped near a pole."""

    s: complex
    lhs: complex | None
    rhs: complex | None
    relative_residual: float | None
    pole_distance_min: float
    status: str


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    re_steps: int
    im_min: float
    im_max: float
    im_steps: int

    def describe(self) -> str:
        return (
            f"re[{self.re_min:g}:{self.re_max:g}:{self.re_steps}] "
            f"im[{self.im_min:g}:{self.im_max:g}:{self.im_steps}]"
        )


@dataclass(frozen=True)
class SweepSummary:
    field: str
    grid: str
    count_ok: int
    count_skipped: int
    count_failed: int
    max_residual: float


@dataclass(frozen=True)
class ExactCheckResult:
    holds: bool
    witness: int | None


@dataclass(frozen=True)
class EulerConsistencyReport:
    closed_form: complex
    truncated: complex
    gap: float
    tail_bound: float
    passed: bool


def check_point(field: FieldDescriptor, s, tolerance: float) -> FunctionalEquationReport:
    """Compare Z(1-s) against beta^(2s-1) Z(s) at one point.

    Pole proximity (of s or 1-s) yields status near_pole_skipped rather
    than an error; otherwise status is ok or failed by comparing the
    relative residual |lhs - rhs| / max(|lhs|, |rhs|, floor) with the
    tolerance.
    """
    s = _as_complex(s)
    if not tolerance > 0:
        raise DomainError("check_point: tolerance must be positive")
    dist = min(pole_distance(field, s), pole_distance(field, 1.0 - s))
    if dist < POLE_EXCLUSION_RADIUS:
        return FunctionalEquationReport(
            s=s,
            lhs=None,
            rhs=None,
            relative_residual=None,
            pole_distance_min=dist,
            status=STATUS_SKIPPED,
        )
    lhs = completed_zeta(field, 1.0 - s).completed_value
    rhs = cmath.exp((2.0 * s - 1.0) * log_covolume(field)) * completed_zeta(field, s).completed_value
    if abs(lhs) < _BOTH_TINY and abs(rhs) < _BOTH_TINY:
        residual = 0.0
    else:
        residual = abs(lhs - rhs) / max(abs(lhs), abs(rhs), RESIDUAL_FLOOR)
    status = STATUS_OK if residual <= tolerance else STATUS_FAILED
    return FunctionalEquationReport(
        s=s,
        lhs=lhs,
        rhs=rhs,
        relative_residual=residual,
        pole_distance_min=dist,
        status=status,
    )


def _axis(lo: float, hi: float, steps: int, what: str) -> list[float]:
    if steps < 1:
        raise DomainError(f"sweep: {what} steps must be >= 1")
    if hi < lo:
        raise DomainError(f"sweep: inverted {what} range [{lo}, {hi}]")
    if steps == 1:
        return [lo]
    if hi == lo:
        raise DomainError(f"sweep: empty {what} range [{lo}, {hi}] with {steps} steps")
    step = (hi - lo) / (steps - 1)
    return [lo + k * step for k in range(steps)]


def sweep(
    field: FieldDescriptor, grid: GridSpec, tolerance: float
) -> tuple[list[FunctionalEquationReport], SweepSummary]:
    """check_point at every grid node, row-major (ascending re, then im)."""
    res = _axis(grid.re_min, grid.re_max, grid.re_steps, "re")
    ims = _axis(grid.im_min, grid.im_max, grid.im_steps, "im")
    reports = [
        check_point(field, complex(x, y), tolerance) for x in res for y in ims
    ]
    n_ok = sum(1 for r in reports if r.status == STATUS_OK)
    n_skip = sum(1 for r in reports if r.status == STATUS_SKIPPED)
    n_fail = sum(1 for r in reports if r.status == STATUS_FAILED)
    max_residual = max(
        (r.relative_residual for r in reports if r.status == STATUS_OK), default=0.0
    )
    summary = SweepSummary(
        field=field_spec_string(field),
        grid=grid.describe(),
        count_ok=n_ok,
        count_skipped=n_skip,
        count_failed=n_fail,
        max_residual=max_residual,
    )
    return reports, summary


def exact_check_function_field(field: FunctionFieldDescriptor) -> ExactCheckResult:
    """Exact integer form of the functional equation in positive characteristic.

    Verifies a[2g-i] == q^(g-i) * a[i] for all i; genus 0 holds by the
    fixed identity zeta(1-s) = q^(1-2s) zeta(s) of the rational
    function field, so the trivial L-polynomial passes vacuously.
    Returns the first violating index as witness otherwise.
    """
    if not isinstance(field, FunctionFieldDescriptor):
        raise DomainError("exact_check_function_field: not a function field")
    g = field.genus
    a = field.lpoly.coefficients
    q = field.q
    for i in range(g + 1):
        if a[2 * g - i] != q ** (g - i) * a[i]:
            return ExactCheckResult(holds=False, witness=i)
    return ExactCheckResult(holds=True, witness=None)


def euler_consistency_check(
    field: FieldDescriptor, s, norm_bound: int
) -> EulerConsistencyReport:
    """Closed form vs truncated Euler product, Re s > 1.

    The tail envelope is the crude Dirichlet-series bound
    4 * sum_{n > B} n^-sigma, estimated by the integral comparison
    B^(1-sigma)/(sigma-1); passing means the gap sits inside it.
    """
    s = _as_complex(s)
    if s.real <= 1.0:
        raise DomainError("euler_consistency_check: requires Re s > 1")
    sigma = s.real
    closed = zeta(field, s)
    truncated = truncated_euler_product(field, s, norm_bound)
    gap = abs(closed - truncated)
    tail_bound = 4.0 * norm_bound ** (1.0 - sigma) / (sigma - 1.0)
    return EulerConsistencyReport(
        closed_form=closed,
        truncated=truncated,
        gap=gap,
        tail_bound=tail_bound,
        passed=gap <= tail_bound,
    )
