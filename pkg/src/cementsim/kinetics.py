"""Cure and dissolution kinetics of acrylic bone cement.

Two internal variables describe the state of the cement dough:

* ``p`` -- progress of the physical dissolution (swelling) of polymer
  powder in liquid monomer.  It grows without bound until a cap ``p_max``
  and drives the viscosity model (see :mod:`cementsim.rheology`)::

      dp/dt = k_p1 + k_p2 * p**m      while p < p_max, else 0

* ``q`` -- degree of cure of the radical polymerisation, confined to
  [0, 1]::

      dq/dt = (k_q1 + k_q2 * q**alpha) * (1 - q)**beta * f_D(q, q_end)

All rate coefficients follow an Arrhenius law k = A * exp(-E / (R * theta)).
The diffusion gate f_D shuts the reaction down smoothly once q approaches
the temperature-dependent ceiling q_end(theta); below the glass transition
the material therefore never reaches q = 1.

Functions are plain numpy ufunc-style: scalars in, scalar out, arrays in,
arrays out.  This keeps them usable per material point in the FE solver
and per cell in the flow solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

R_GAS = 8.314  # J/(K mol)


@dataclass
class DissolutionParams:
    """Rate constants of the dissolution ODE (commercial PMMA cement fit)."""

    A_p1: float = 3.0e14     # 1/s
    E_p1: float = 8.232e4    # J/mol
    A_p2: float = 0.0023     # 1/s
    E_p2: float = 312.6      # J/mol
    m: float = 1.0
    p_max: float = 2000.0

    def validate(self):
        if self.A_p1 <= 0 or self.A_p2 <= 0:
            raise ValueError("Arrhenius prefactors A_pi must be positive")
        if self.E_p1 < 0 or self.E_p2 < 0:
            raise ValueError("activation energies E_pi must be nonnegative")
        if self.p_max <= 0 or self.m < 0:
            raise ValueError("p_max must be positive and m nonnegative")
        return self


@dataclass
class CureParams:
    """Rate constants and diffusion gate of the cure ODE.

    The Arrhenius constants carry no defaults on purpose: they are not
    published alongside the rest of the material set, so every run has to
    state them explicitly (the shipped example configs mark their values
    as shape-fit placeholders).
    """

    A_q1: float
    E_q1: float
    A_q2: float
    E_q2: float
    alpha_q: float = 1.0
    beta_q: float = 1.0
    gate_steepness: float = 50.0   # B in f_D = 1/(1 + exp(B*(q - q_end)))
    q_end_a: float = 0.9           # q_end(theta) = clip(a + b*(theta - theta_g_ref), 0, 1)
    q_end_b: float = 0.004         # 1/K
    theta_g_ref: float = 378.0     # K

    def validate(self):
        if self.A_q1 <= 0 or self.A_q2 <= 0:
            raise ValueError("Arrhenius prefactors A_qi must be positive")
        if self.E_q1 < 0 or self.E_q2 < 0:
            raise ValueError("activation energies E_qi must be nonnegative")
        if self.alpha_q < 0 or self.beta_q < 0:
            raise ValueError("cure exponents must be nonnegative")
        for theta in (250.0, 400.0):
            if not 0.0 <= self.q_end(theta) <= 1.0:
                raise ValueError("q_end(theta) leaves [0,1] in [250 K, 400 K]")
        return self

    def q_end(self, theta):
        return np.clip(self.q_end_a + self.q_end_b * (np.asarray(theta, float) - self.theta_g_ref),
                       0.0, 1.0)


@dataclass
class KineticsState:
    """Internal process variables at one material point / cell."""

    p: float = 0.0
    q: float = 0.0


def arrhenius(A, E, theta):
    """Rate coefficient k = A * exp(-E / (R * theta)); theta in Kelvin."""
    theta = np.asarray(theta, float)
    if np.any(theta <= 0.0):
        raise ValueError("absolute temperature must be positive")
    out = A * np.exp(-E / (R_GAS * theta))
    return float(out) if out.ndim == 0 else out


def dissolution_rate(p, theta, params: DissolutionParams):
    """dp/dt of the dissolution ODE; zero once p has reached p_max."""
    p = np.asarray(p, float)
    if np.any(p < 0.0):
        raise ValueError("dissolution progress p must be nonnegative")
    k1 = arrhenius(params.A_p1, params.E_p1, theta)
    k2 = arrhenius(params.A_p2, params.E_p2, theta)
    rate = np.where(p < params.p_max, k1 + k2 * p ** params.m, 0.0)
    return float(rate) if rate.ndim == 0 else rate


def diffusion_gate(q, q_end, steepness):
    """Smooth gate suppressing cure beyond the isothermal ceiling q_end."""
    # exp argument clipped: the gate saturates anyway and exp would overflow
    arg = np.clip(steepness * (np.asarray(q, float) - q_end), -60.0, 60.0)
    return 1.0 / (1.0 + np.exp(arg))


def cure_rate(q, theta, params: CureParams):
    """dq/dt of the polymerisation ODE, gated by f_D(q, q_end(theta))."""
    q = np.asarray(q, float)
    if np.any(q < 0.0) or np.any(q > 1.0):
        raise ValueError("degree of cure q must lie in [0, 1]")
    k1 = arrhenius(params.A_q1, params.E_q1, theta)
    k2 = arrhenius(params.A_q2, params.E_q2, theta)
    gate = diffusion_gate(q, params.q_end(theta), params.gate_steepness)
    rate = (k1 + k2 * q ** params.alpha_q) * (1.0 - q) ** params.beta_q * gate
    return float(rate) if rate.ndim == 0 else rate


@dataclass
class TemperatureTrace:
    """Piecewise-linear temperature history theta(t)."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.times = np.asarray(self.times, float)
        self.values = np.asarray(self.values, float)
        if self.times.ndim != 1 or self.times.shape != self.values.shape:
            raise ValueError("trace times and values must be matching 1-D arrays")
        if self.times.size < 1:
            raise ValueError("trace must contain at least one sample")
        if np.any(np.diff(self.times) <= 0.0):
            raise ValueError("trace times must be strictly increasing")

    @classmethod
    def isothermal(cls, theta, t0=0.0, t1=1.0):
        return cls(np.array([t0, max(t1, t0 + 1.0)]), np.array([theta, theta]))

    def __call__(self, t):
        return np.interp(t, self.times, self.values)


def integrate_kinetics(state: KineticsState, theta_of_t, t0, t1, dt,
                       diss: DissolutionParams | None = None,
                       cure: CureParams | None = None) -> KineticsState:
    """Advance (p, q) from t0 to t1 with classic fourth-order Runge-Kutta.

    `theta_of_t` is a TemperatureTrace (or any callable of t).  Either ODE
    may be switched off by passing None for its parameter set.  p is capped
    at p_max and q at 1 after every step; rate evaluations clip their
    arguments into the admissible range, so intermediate RK stages cannot
    step outside it.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    if t1 < t0:
        raise ValueError("t1 must not precede t0")
    if isinstance(theta_of_t, (int, float)):
        theta_of_t = TemperatureTrace.isothermal(float(theta_of_t), t0, t1)

    def rates(t, p, q):
        theta = float(theta_of_t(t))
        dp = dissolution_rate(min(p, diss.p_max), theta, diss) if diss else 0.0
        dq = cure_rate(min(max(q, 0.0), 1.0), theta, cure) if cure else 0.0
        return dp, dq

    p, q = float(state.p), float(state.q)
    t = float(t0)
    while t < t1 - 1e-15 * max(1.0, abs(t1)):
        h = min(dt, t1 - t)
        dp1, dq1 = rates(t, p, q)
        dp2, dq2 = rates(t + h / 2, p + h / 2 * dp1, q + h / 2 * dq1)
        dp3, dq3 = rates(t + h / 2, p + h / 2 * dp2, q + h / 2 * dq2)
        dp4, dq4 = rates(t + h, p + h * dp3, q + h * dq3)
        p += h / 6 * (dp1 + 2 * dp2 + 2 * dp3 + dp4)
        q += h / 6 * (dq1 + 2 * dq2 + 2 * dq3 + dq4)
        if diss:
            p = min(p, diss.p_max)
        q = min(q, 1.0)
        t += h
    return KineticsState(p=p, q=q)


def dissolution_closed_form(t, theta, params: DissolutionParams):
    """Isothermal solution of the dissolution ODE for m = 1 and p(0) = 0.

    p(t) = (k1/k2) * (exp(k2 t) - 1); valid below the p_max cap.
    """
    if params.m != 1.0:
        raise ValueError("closed form requires m = 1")
    k1 = arrhenius(params.A_p1, params.E_p1, theta)
    k2 = arrhenius(params.A_p2, params.E_p2, theta)
    return k1 / k2 * np.expm1(k2 * np.asarray(t, float))
