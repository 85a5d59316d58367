"""Runge--Kutta integration for autonomous first-order systems.

Two drivers: a classical fixed-step RK4 (`integrate_fixed`) and an embedded
Dormand--Prince 5(4) pair with proportional step control
(`integrate_adaptive`).  Both return a `Trajectory` whose first state is the
initial condition unchanged and whose final grid point lands on t1 exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NumericalError, StiffnessError, ValidationError

# Dormand--Prince 5(4) tableau
_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)

_UNDERFLOW_FRACTION = 1e-14  # dt below this fraction of the span is a stiffness failure


@dataclass(frozen=True)
class AutonomousSystem:
    """A first-order system dy/dt = rhs(y) with no explicit time dependence."""

    dimension: int
    rhs: Callable[[np.ndarray], np.ndarray]

    def __post_init__(self):
        if not (isinstance(self.dimension, int) and self.dimension >= 1):
            raise ValidationError(f"dimension must be a positive integer, got {self.dimension!r}")


@dataclass
class Trajectory:
    """Integration output: strictly increasing times, one state row per time."""

    times: np.ndarray            # shape (n,)
    states: np.ndarray           # shape (n, dimension)
    meta: dict = field(default_factory=dict)


def _check_span(t0, t1):
    if not (math.isfinite(t0) and math.isfinite(t1) and t1 > t0):
        raise ValidationError(f"need finite t1 > t0, got t0={t0}, t1={t1}")


def _initial_state(system, y0):
    y = np.asarray(y0, dtype=float)
    if y.shape != (system.dimension,):
        raise ValidationError(
            f"y0 has shape {y.shape}, expected ({system.dimension},)")
    return y


def _eval_rhs(system, y, t):
    dy = np.asarray(system.rhs(y), dtype=float)
    if dy.shape != y.shape:
        raise ValidationError(
            f"rhs returned shape {dy.shape}, expected {y.shape}")
    if not np.all(np.isfinite(dy)):
        raise NumericalError(
            f"non-finite derivative at t={t!r}, state={y.tolist()!r}")
    return dy


def integrate_fixed(system: AutonomousSystem, y0, t0: float, t1: float, dt: float) -> Trajectory:
    """Classical RK4 with a fixed step.

    The last step is shortened so the final grid point equals t1 exactly.
    Global error is O(dt**4) on smooth systems.
    """
    _check_span(t0, t1)
    span = t1 - t0
    if not (math.isfinite(dt) and 0 < dt <= span * (1 + 1e-12)):
        raise ValidationError(f"need 0 < dt <= t1 - t0, got dt={dt}")
    y = _initial_state(system, y0)
    n_steps = max(1, int(math.ceil(span / dt - 1e-9)))
    times = np.empty(n_steps + 1)
    states = np.empty((n_steps + 1, system.dimension))
    times[0] = t0
    states[0] = y
    for i in range(n_steps):
        t = t0 + i * dt
        h = dt if i < n_steps - 1 else t1 - t
        k1 = _eval_rhs(system, y, t)
        k2 = _eval_rhs(system, y + 0.5 * h * k1, t + 0.5 * h)
        k3 = _eval_rhs(system, y + 0.5 * h * k2, t + 0.5 * h)
        k4 = _eval_rhs(system, y + h * k3, t + h)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        times[i + 1] = t0 + (i + 1) * dt
        states[i + 1] = y
    times[-1] = t1
    return Trajectory(times=times, states=states,
                      meta={"method": "rk4", "dt": dt, "n_steps": n_steps})


def integrate_adaptive(system: AutonomousSystem, y0, t0: float, t1: float,
                       rel_tol: float = 1e-8, abs_tol: float = 1e-10) -> Trajectory:
    """Embedded Dormand--Prince 5(4) pair with proportional step control.

    Each step is accepted when the per-component error estimate stays below
    abs_tol + rel_tol*|state|.  A non-finite derivative at an accepted point
    aborts; non-finite trial stages are treated as a failed step and retried
    smaller, and a step that shrinks below 1e-14*(t1 - t0) raises
    StiffnessError.
    """
    _check_span(t0, t1)
    if not (rel_tol > 0 and abs_tol > 0):
        raise ValidationError(f"tolerances must be positive, got rel={rel_tol}, abs={abs_tol}")
    y = _initial_state(system, y0)
    span = t1 - t0
    times = [t0]
    states = [y.copy()]
    t = t0
    h = span / 100.0
    h_min = _UNDERFLOW_FRACTION * span
    k1 = _eval_rhs(system, y, t)  # FSAL: reused across accepted steps
    n_accept = n_reject = 0
    while t < t1:
        h = min(h, t1 - t)
        if h < h_min:
            raise StiffnessError(
                f"step size underflow at t={t!r} (h={h!r} < {h_min!r}); "
                f"{n_accept} accepted / {n_reject} rejected steps so far")
        ks = [k1]
        err = math.inf
        for row in _DP_A[1:]:
            y_stage = y + h * sum(a_ij * k for a_ij, k in zip(row, ks))
            dy = np.asarray(system.rhs(y_stage), dtype=float)
            if not np.all(np.isfinite(dy)):
                break
            ks.append(dy)
        else:
            y5 = y + h * sum(b_i * k for b_i, k in zip(_DP_B5[:6], ks))
            k7 = np.asarray(system.rhs(y5), dtype=float)
            if np.all(np.isfinite(k7)) and np.all(np.isfinite(y5)):
                ks.append(k7)
                err_vec = h * sum((b5 - b4) * k for b5, b4, k in zip(_DP_B5, _DP_B4, ks))
                scale = abs_tol + rel_tol * np.maximum(np.abs(y), np.abs(y5))
                err = math.sqrt(float(np.mean((err_vec / scale) ** 2)))
        if not math.isfinite(err):
            h *= 0.2
            n_reject += 1
            continue
        if err <= 1.0:
            t = t1 if (t1 - t - h) <= 1e-15 * span else t + h
            y = y5
            k1 = k7  # first-same-as-last
            times.append(t)
            states.append(y.copy())
            n_accept += 1
            grow = 5.0 if err == 0.0 else min(5.0, 0.9 * err ** -0.2)
            h *= grow
        else:
            n_reject += 1
            h *= max(0.2, 0.9 * err ** -0.2)
    times_arr = np.array(times)
    times_arr[-1] = t1
    return Trajectory(times=times_arr, states=np.array(states),
                      meta={"method": "rk45", "rel_tol": rel_tol, "abs_tol": abs_tol,
                            "n_accepted": n_accept, "n_rejected": n_reject})


def interp_states(trajectory: Trajectory, times) -> np.ndarray:
    """Sample a trajectory at arbitrary times by linear interpolation.

    First-order accurate between grid points; exact on the grid itself.
    Requested times must lie within [times[0], times[-1]].
    """
    query = np.atleast_1d(np.asarray(times, dtype=float))
    grid = trajectory.times
    if np.any(query < grid[0]) or np.any(query > grid[-1]):
        raise ValidationError("interpolation times outside the integrated span")
    out = np.empty((query.size, trajectory.states.shape[1]))
    for j in range(trajectory.states.shape[1]):
        out[:, j] = np.interp(query, grid, trajectory.states[:, j])
    return out
