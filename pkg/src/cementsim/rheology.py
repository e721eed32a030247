"""Non-Newtonian viscosity of the cement dough.

Power-law shear thinning scaled by the dissolution progress p::

    eta = h_eta * p * l * |gamma_dot / gamma0| ** (n - 1)

With n < 1 the raw law diverges at vanishing shear rate, so the solver
path regularizes the shear rate at gamma_min and caps the result at
eta_cap.  The pure-function form (`viscosity`) applies the same
regularization; `viscosity_raw` returns the unclamped textbook value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class ViscosityParams:
    h_eta: float = 1.0        # Pa s, proportionality of eta0(p) = h_eta * p
    l: float = 8.996
    n: float = 0.2601         # power-law exponent
    gamma0: float = 1.0       # 1/s, unit-preserving reference shear rate
    gamma_min: float = 1e-3   # 1/s, regularization floor
    eta_cap: float = 1e5      # Pa s

    def validate(self):
        if self.h_eta <= 0:
            raise ValueError("h_eta must be positive")
        if not 0.0 < self.n <= 1.0:
            raise ValueError("power-law exponent n must lie in (0, 1]")
        if self.gamma_min <= 0 or self.eta_cap <= 0 or self.gamma0 <= 0:
            raise ValueError("gamma0, gamma_min and eta_cap must be positive")
        return self


def viscosity_raw(p, gamma_dot, params: ViscosityParams):
    """Unregularized power law; diverges as gamma_dot -> 0 for n < 1."""
    p = np.asarray(p, float)
    if np.any(p < 0.0):
        raise ValueError("dissolution progress p must be nonnegative")
    return params.h_eta * p * params.l * np.abs(np.asarray(gamma_dot, float) / params.gamma0) ** (params.n - 1.0)


def viscosity(p, gamma_dot, params: ViscosityParams):
    """Dynamic viscosity [Pa s] with shear-rate floor and viscosity cap."""
    p = np.asarray(p, float)
    if np.any(p < 0.0):
        raise ValueError("dissolution progress p must be nonnegative")
    gd = np.maximum(np.abs(np.asarray(gamma_dot, float)), params.gamma_min)
    eta = params.h_eta * p * params.l * (gd / params.gamma0) ** (params.n - 1.0)
    eta = np.minimum(eta, params.eta_cap)
    return float(eta) if eta.ndim == 0 else eta


def shear_rate_from_D(D):
    """Scalar shear rate gamma_dot = sqrt(2 D:D) from the rate-of-deformation
    tensor; reduces to the rheometer shear rate in simple shear."""
    D = np.asarray(D, float)
    return np.sqrt(2.0 * np.einsum("...ij,...ij->...", D, D))
