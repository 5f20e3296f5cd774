"""Eigenstates of a spinless particle confined by a hard wall at r0 in a
screw-dislocation background (units hbar = c = 1).

The dislocation couples the angular quantum number l to the longitudinal
wavenumber k, shifting the effective Bessel order to nu = |l - beta*k| (an
Aharonov-Bohm-type effect: the defect acts without any local interaction).
The radial eigenfunction is R(r) = a0 * J_nu(Theta * r / r0) with Theta the
(n+1)-th positive zero of J_nu, and

    E(n, l, k) = (Theta / r0)^2 / (2m) + k^2 / (2m).

The plane wave along z is normalized on a periodic box of length Lz, so the
full state has unit norm and every entropy downstream is finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import integrate_adaptive
from .specfun import bessel_j, bessel_zero

__all__ = [
    "SystemParams",
    "QuantumNumbers",
    "Eigenstate",
    "effective_order",
    "normalize",
    "solve",
    "position_density",
]


@dataclass(frozen=True)
class SystemParams:
    """Physical configuration: mass, dislocation strength, wall radius, z box."""

    m: float = 1.0
    beta: float = 0.0
    r0: float = 1.0
    lz: float = 1.0

    def __post_init__(self):
        for name in ("m", "beta", "r0", "lz"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise DomainError(f"{name} must be a finite number, got {v!r}")
        if self.m <= 0.0:
            raise DomainError(f"m (mass) must be > 0, got {self.m}")
        if self.r0 <= 0.0:
            raise DomainError(f"r0 (wall radius) must be > 0, got {self.r0}")
        if self.lz <= 0.0:
            raise DomainError(f"lz (z-box length) must be > 0, got {self.lz}")
        if not (0.0 <= self.beta < 1.0):
            raise DomainError(
                f"beta (dislocation parameter) must obey the constraint 0<beta<1 "
                f"(beta=0 is accepted as the defect-free reference), got {self.beta}"
            )


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial index n >= 0, angular momentum integer l, wavenumber k."""

    n: int
    l: int
    k: float = 1.0

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool) or self.n < 0:
            raise DomainError(f"radial index n must be an integer >= 0, got {self.n!r}")
        if not isinstance(self.l, (int, np.integer)) or isinstance(self.l, bool):
            raise DomainError(f"angular momentum l must be an integer, got {self.l!r}")
        if not (isinstance(self.k, (int, float)) and math.isfinite(self.k)):
            raise DomainError(f"wavenumber k must be finite, got {self.k!r}")


def effective_order(l: int, beta: float, k: float) -> float:
    """Effective Bessel order |l - beta*k| produced by the dislocation."""
    return abs(l - beta * k)


def normalize(params: SystemParams, nu: float, theta: float) -> float:
    """Normalization constant a0 from the closed-form radial norm.

    When Theta is a zero of J_nu the Lommel identity gives
    int_0^r0 J_nu(Theta r/r0)^2 r dr = (r0^2/2) J_{nu+1}(Theta)^2, so
    a0 = [2 pi Lz (r0^2/2) J_{nu+1}(Theta)^2]^(-1/2).
    """
    j1 = bessel_j(nu + 1.0, theta)
    # interlacing of zeros guarantees J_{nu+1}(Theta) != 0
    assert j1 != 0.0, "J_{nu+1} cannot vanish at a zero of J_nu"
    radial = 0.5 * params.r0**2 * j1 * j1
    return 1.0 / math.sqrt(2.0 * math.pi * params.lz * radial)


@dataclass(frozen=True)
class Eigenstate:
    """Solved hard-wall state; immutable and cheap to evaluate."""

    params: SystemParams
    qn: QuantumNumbers
    nu: float
    theta: float
    energy: float
    a0: float

    def radial_wavefunction(self, r):
        """R(r) = a0 J_nu(Theta r / r0) inside the wall, 0 at and beyond it."""
        arr = np.asarray(r, dtype=float)
        scalar = arr.ndim == 0
        rr = np.atleast_1d(arr)
        inside = rr < self.params.r0
        out = np.zeros_like(rr)
        if np.any(inside):
            out[inside] = self.a0 * bessel_j(self.nu, self.theta * rr[inside] / self.params.r0)
        return float(out[0]) if scalar else out.reshape(arr.shape)

    def position_density(self, r):
        """Full 3-D probability density |psi|^2; independent of theta and z."""
        w = self.radial_wavefunction(r)
        return w * w

    def radial_norm_adaptive(self, tol: float = 1e-12) -> float:
        """2 pi Lz int_0^r0 |R|^2 r dr, via the adaptive engine (cross-check)."""
        res = integrate_adaptive(
            lambda r: self.position_density(r) * r, 0.0, self.params.r0, tol
        )
        return 2.0 * math.pi * self.params.lz * res.value


def solve(params: SystemParams, qn: QuantumNumbers) -> Eigenstate:
    """Construct the normalized eigenstate for the given quantum numbers.

    The library indexes positive Bessel zeros from 1, so the ground state
    n = 0 maps to the first zero (j = n + 1).
    """
    nu = effective_order(qn.l, params.beta, qn.k)
    theta = bessel_zero(nu, qn.n + 1)
    energy = (theta / params.r0) ** 2 / (2.0 * params.m) + qn.k**2 / (2.0 * params.m)
    a0 = normalize(params, nu, theta)
    return Eigenstate(params=params, qn=qn, nu=nu, theta=theta, energy=energy, a0=a0)


def position_density(state: Eigenstate, r):
    """Module-level alias for Eigenstate.position_density."""
    return state.position_density(r)
