"""Reduction of monotone nonlinear-phase integrals to linear phase.

For ``int_a^b f(x) exp(i*omega*g(x)) dx`` with g strictly monotone, the
substitution y = g(x) gives a linear-phase integral of the transformed
amplitude f(g^{-1}(y)) / g'(g^{-1}(y)) over [g(a), g(b)]. Stationary
phase points (g' = 0) are excluded by the monotonicity precondition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "PhaseSpec",
    "NonMonotonePhaseError",
    "InversionError",
    "substitute",
    "numeric_inverse",
]

_MONOTONICITY_PROBES = 64
_MAX_INVERSE_ITERATIONS = 200


class NonMonotonePhaseError(ValueError):
    """Phase derivative changes sign (or vanishes) inside the bracket."""


class InversionError(RuntimeError):
    """Numeric inversion of the phase failed to converge."""


@dataclass(frozen=True)
class PhaseSpec:
    """Monotone phase g with derivative g' on the bracket [a, b].

    ``inverse`` is optional; when absent, :func:`numeric_inverse` is
    used. Monotonicity is probed at Chebyshev points of the bracket,
    not proven.
    """

    g: Callable[[float], float]
    g_prime: Callable[[float], float]
    bracket: tuple[float, float]
    inverse: Callable[[float], float] | None = None


def _probe_points(a: float, b: float, count: int = _MONOTONICITY_PROBES) -> np.ndarray:
    t = np.cos(np.pi * np.arange(count) / (count - 1))
    return (b - a) / 2 * t + (b + a) / 2


def _check_monotone(phase: PhaseSpec) -> float:
    """Return the constant sign of g' on the bracket, or raise."""
    a, b = phase.bracket
    dv = np.array([phase.g_prime(float(x)) for x in _probe_points(a, b)], dtype=float)
    if np.any(dv == 0) or not (np.all(dv > 0) or np.all(dv < 0)):
        raise NonMonotonePhaseError(
            f"phase derivative is not of one sign on [{a}, {b}]"
        )
    return 1.0 if dv[0] > 0 else -1.0


def numeric_inverse(phase: PhaseSpec, y: float) -> float:
    """Solve g(x) = y on the bracket by bisection refined with Newton steps.

    Converges to |g(x) - y| <= 1e-14 * (1 + |y|).
    """
    a, b = phase.bracket
    sign = _check_monotone(phase)
    lo, hi = (a, b) if sign > 0 else (b, a)  # g(lo) <= g(hi)
    glo, ghi = phase.g(lo), phase.g(hi)
    if not min(glo, ghi) - 1e-12 <= y <= max(glo, ghi) + 1e-12:
        raise ValueError(f"target {y} outside the phase range [{glo}, {ghi}]")
    tol = 1e-14 * (1 + abs(y))
    x = 0.5 * (lo + hi)
    for _ in range(_MAX_INVERSE_ITERATIONS):
        gx = phase.g(x)
        if abs(gx - y) <= tol:
            return float(x)
        if gx < y:
            lo = x
        else:
            hi = x
        # Newton step, falling back to bisection if it leaves the bracket
        dg = phase.g_prime(x)
        if dg != 0:
            xn = x - (gx - y) / dg
            if min(lo, hi) < xn < max(lo, hi):
                x = xn
                continue
        x = 0.5 * (lo + hi)
    raise InversionError(
        f"phase inversion did not converge to {y} in "
        f"{_MAX_INVERSE_ITERATIONS} iterations"
    )


def substitute(
    amplitude: Callable,
    phase: PhaseSpec,
    omega: float,
) -> tuple[Callable, tuple[float, float], float]:
    """Transform (f, g, omega) into an equivalent linear-phase problem.

    Returns the transformed amplitude, the new integration limits
    (ascending; the orientation sign is absorbed into the amplitude),
    and the unchanged frequency.
    """
    a, b = phase.bracket
    sign = _check_monotone(phase)
    ga, gb = phase.g(a), phase.g(b)
    lo, hi = (ga, gb) if ga < gb else (gb, ga)

    invert = phase.inverse
    if invert is None:
        def invert(y):
            return numeric_inverse(phase, y)

    def transformed(y):
        y = np.asarray(y, dtype=float)
        scalar = y.ndim == 0
        ys = np.atleast_1d(y)
        x = np.array([invert(float(v)) for v in ys])
        out = sign * np.asarray(amplitude(x), dtype=complex)
        out = out / np.array([phase.g_prime(float(v)) for v in x])
        return out[0] if scalar else out

    return transformed, (float(lo), float(hi)), omega
