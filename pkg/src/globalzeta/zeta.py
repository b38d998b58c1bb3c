"""Dedekind zeta, archimedean Gamma factor, and the completed product.

For a number field the completed value is

    Z(s) = (pi^(-s/2) Gamma(s/2))^r1 * ((2 pi)^(1-s) Gamma(s))^r2 * zeta_k(s),

with zeta_k evaluated as zeta * L(chi_D) through the kernel; for a
function field the Gamma factor is identically 1 and zeta_k is the
closed rational form P(q^-s) / ((1 - q^-s)(1 - q^(1-s))).

Pole model: the actual poles of Z are s = 0 and s = 1 (number fields)
or the two lattices k*2*pi*i/log q and 1 + k*2*pi*i/log q (function
fields).  The remaining Gamma poles at negative integers are cancelled
by trivial zeros of zeta_k.  Within GAMMA_CANCEL_RADIUS of such a point
the record reports deflated factors -- the Gamma part multiplied by
(s - m)^ord through the recurrence, and the zeta part divided by the
same power, using finite-difference derivatives at the point itself --
and flags precision_cliff; their product is still the completed value
bit for bit.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import PoleError
from .fields import FieldDescriptor, FunctionFieldDescriptor, NumberFieldDescriptor
from .kernel import (
    POLE_EXCLUSION_RADIUS,
    KroneckerCharacter,
    _as_complex,
    _log_gamma_impl,
    dirichlet_l,
    riemann_zeta,
)

_LOG_PI = math.log(math.pi)
_LOG_2PI = math.log(2.0 * math.pi)

#: Inside this radius of a cancelled Gamma pole the completed value is
#: computed by deflation and the record is flagged.
GAMMA_CANCEL_RADIUS = 1e-2
#: Inside this radius the vanishing factor is replaced by its Taylor
#: expansion from finite-difference derivatives.
_DERIVATIVE_ZONE = 1e-5
_STENCIL_H = 0.02


@dataclass(frozen=True)
class EvaluationRecord:
    """One completed-zeta evaluation; completed = gamma_factor * zeta bit for bit."""

    s: complex
    zeta_value: complex
    gamma_factor_value: complex
    completed_value: complex
    pole_distance: float
    precision_cliff: bool = False


@dataclass(frozen=True)
class PoleSet:
    """Poles of the completed zeta: base points, plus an imaginary period
    (2*pi/log q) in positive characteristic."""

    bases: tuple[float, ...]
    period: float | None


def pole_set(field: FieldDescriptor) -> PoleSet:
    """The actual poles of Z: {0, 1}, periodically repeated for function fields."""
    if isinstance(field, FunctionFieldDescriptor):
        return PoleSet(bases=(0.0, 1.0), period=2.0 * math.pi / math.log(field.q))
    return PoleSet(bases=(0.0, 1.0), period=None)


def pole_distance(field: FieldDescriptor, s) -> float:
    """Distance from s to the pole set of the completed zeta."""
    s = _as_complex(s)
    poles = pole_set(field)
    if poles.period is None:
        return min(abs(s - b) for b in poles.bases)
    k = round(s.imag / poles.period)
    dy = s.imag - k * poles.period
    return min(math.hypot(s.real - b, dy) for b in poles.bases)


def _require_off_poles(field: FieldDescriptor, s: complex) -> float:
    dist = pole_distance(field, s)
    if dist < POLE_EXCLUSION_RADIUS:
        raise PoleError(
            f"{s!r} is within {POLE_EXCLUSION_RADIUS} of a pole of the completed zeta"
        )
    return dist


def _function_field_zeta(field: FunctionFieldDescriptor, s: complex) -> complex:
    t = cmath.exp(-s * math.log(field.q))
    return field.lpoly(t) / ((1.0 - t) * (1.0 - field.q * t))


def zeta(field: FieldDescriptor, s) -> complex:
    """The meromorphically continued Dedekind zeta of the field."""
    s = _as_complex(s)
    _require_off_poles(field, s)
    if isinstance(field, FunctionFieldDescriptor):
        return _function_field_zeta(field, s)
    if field.kind == "rationals":
        return riemann_zeta(s)
    return riemann_zeta(s) * dirichlet_l(s, KroneckerCharacter(field.discriminant))


def _nearest_gamma_pole(field: NumberFieldDescriptor, s: complex) -> int:
    # Nearest pole of the Gamma factor: even nonpositive integers for a
    # real signature, all nonpositive integers for an imaginary one.
    if field.r1:
        return min(0, 2 * round(s.real / 2.0))
    return min(0, round(s.real))


def gamma_factor(field: FieldDescriptor, s) -> complex:
    """(pi^(-s/2) Gamma(s/2))^r1 * ((2 pi)^(1-s) Gamma(s))^r2, in log space.

    Identically 1 for function fields.  Raises PoleError within the
    exclusion radius of a Gamma pole (s in {0,-2,-4,...} when r1 > 0,
    s in {0,-1,-2,...} when r2 > 0).
    """
    s = _as_complex(s)
    if isinstance(field, FunctionFieldDescriptor):
        return complex(1.0)
    m = _nearest_gamma_pole(field, s)
    if abs(s - m) < POLE_EXCLUSION_RADIUS:
        raise PoleError(
            f"gamma_factor: {s!r} is within {POLE_EXCLUSION_RADIUS} of the Gamma pole at {m}"
        )
    acc = complex(0.0)
    if field.r1:
        acc += field.r1 * (-(s / 2.0) * _LOG_PI + _log_gamma_impl(s / 2.0))
    if field.r2:
        acc += field.r2 * ((1.0 - s) * _LOG_2PI + _log_gamma_impl(s))
    return cmath.exp(acc)


# ---------------------------------------------------------------------------
# Deflated evaluation near cancelled Gamma poles
# ---------------------------------------------------------------------------

def _gamma_linear_deflated(z: complex, z0: int) -> complex:
    # Gamma(z) * (z - z0) for a nonpositive integer z0, via the
    # recurrence Gamma(z) = Gamma(z + K) / (z (z+1) ... (z+K-1)) with
    # the vanishing factor (z - z0) cancelled symbolically.
    k_up = -z0 + 1
    num = cmath.exp(_log_gamma_impl(z + k_up))
    den = complex(1.0)
    for j in range(k_up):
        if j != -z0:
            den *= z + j
    return num / den


def _derivative_first(f, x0: float, h: float) -> complex:
    # sixth-order central stencil
    f1, fm1 = f(x0 + h), f(x0 - h)
    f2, fm2 = f(x0 + 2 * h), f(x0 - 2 * h)
    f3, fm3 = f(x0 + 3 * h), f(x0 - 3 * h)
    return (45.0 * (f1 - fm1) - 9.0 * (f2 - fm2) + (f3 - fm3)) / (60.0 * h)


def _derivative_second(f, x0: float, h: float) -> complex:
    # fourth-order central stencil
    f0 = f(x0)
    f1, fm1 = f(x0 + h), f(x0 - h)
    f2, fm2 = f(x0 + 2 * h), f(x0 - 2 * h)
    return (-(f2 + fm2) + 16.0 * (f1 + fm1) - 30.0 * f0) / (12.0 * h * h)


def _vanishing_ratio(f, s: complex, m: int) -> complex:
    # f(s) / (s - m) for f with a simple zero at m.  Away from m the
    # direct quotient is accurate; inside _DERIVATIVE_ZONE the computed
    # f(s) is pure cancellation noise, so switch to the Taylor form
    # f'(m) + (s - m) f''(m)/2 with stencil derivatives.
    h = s - m
    if abs(h) >= _DERIVATIVE_ZONE:
        return f(s) / h
    d1 = _derivative_first(f, float(m), _STENCIL_H)
    d2 = _derivative_second(f, float(m), _STENCIL_H)
    return d1 + 0.5 * h * d2


def _cancelled_pole_near(field: NumberFieldDescriptor, s: complex) -> int | None:
    m = _nearest_gamma_pole(field, s)
    if m <= -1 and abs(s - m) < GAMMA_CANCEL_RADIUS:
        return m
    return None


def _deflated_record(
    field: NumberFieldDescriptor, s: complex, m: int, dist: float
) -> EvaluationRecord:
    if field.r1:
        core = 2.0 * _gamma_linear_deflated(s / 2.0, m // 2)
        g_defl = (cmath.exp(-(s / 2.0) * _LOG_PI) * core) ** field.r1
    else:
        g_defl = cmath.exp((1.0 - s) * _LOG_2PI) * _gamma_linear_deflated(s, m)
    if field.kind == "rationals":
        z_defl = _vanishing_ratio(riemann_zeta, s, m)
    else:
        chi = KroneckerCharacter(field.discriminant)

        def lfun(t):
            return dirichlet_l(t, chi)

        zeta_vanishes = m % 2 == 0
        l_vanishes = (m % 2 == 0) if field.discriminant > 0 else (m % 2 != 0)
        z_defl = (
            _vanishing_ratio(riemann_zeta, s, m) if zeta_vanishes else riemann_zeta(s)
        )
        z_defl *= _vanishing_ratio(lfun, s, m) if l_vanishes else lfun(s)
    completed = g_defl * z_defl
    return EvaluationRecord(
        s=s,
        zeta_value=z_defl,
        gamma_factor_value=g_defl,
        completed_value=completed,
        pole_distance=dist,
        precision_cliff=True,
    )


def completed_zeta(field: FieldDescriptor, s) -> EvaluationRecord:
    """Evaluate Z(s) = gamma_factor * zeta with the explicit pole model.

    Near a cancelled Gamma pole (a negative integer where a trivial
    zero of zeta_k absorbs the Gamma pole) the returned record carries
    the deflated factor pair and precision_cliff=True; elsewhere the
    factors are the literal gamma_factor and zeta values.
    """
    s = _as_complex(s)
    dist = _require_off_poles(field, s)
    if isinstance(field, FunctionFieldDescriptor):
        z = _function_field_zeta(field, s)
        return EvaluationRecord(
            s=s,
            zeta_value=z,
            gamma_factor_value=complex(1.0),
            completed_value=complex(1.0) * z,
            pole_distance=dist,
        )
    m = _cancelled_pole_near(field, s)
    if m is not None:
        return _deflated_record(field, s, m, dist)
    g = gamma_factor(field, s)
    z = zeta(field, s)
    return EvaluationRecord(
        s=s,
        zeta_value=z,
        gamma_factor_value=g,
        completed_value=g * z,
        pole_distance=dist,
    )
