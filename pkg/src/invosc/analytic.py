"""Closed-form solutions for a particle on an inverted parabolic barrier.

The Hamiltonian is H = -d^2/dx^2 - omega^2 x^2 in natural units
(hbar = hbar^2/2m = 1, so 2m = 1).  A gauge factor exp(i*omega*x^2/2 -
omega*t) combined with the rescaling y = x * exp(-2*omega*t) maps the
dynamics onto a free particle, which yields two exact solution families:
sinusoidal modes confined to a box whose wall rides the classical
trajectory L0 * exp(2*omega*t), and uniformly decaying plane waves.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PhaseConvention",
    "OscillatorParams",
    "BoxConfig",
    "ConfinedMode",
    "ScatteringMode",
    "make_confined_mode",
    "scale_factor",
    "box_length",
    "psi1_eval",
    "psi2_eval",
    "energy_level",
    "decay_intensity",
    "decay_rate",
    "tau_of",
]


class PhaseConvention(enum.Enum):
    """Sign of the constant mode phase (epsilon/4*omega) * exp(-4*omega*t).

    CORRECTED (+) makes the confined mode an exact solution of the
    Schrodinger equation.  AS_PRINTED (-) is the opposite sign variant,
    kept so the verifier can demonstrate that it leaves a nonzero
    equation-of-motion residual.
    """

    CORRECTED = "corrected"
    AS_PRINTED = "as-printed"


@dataclass(frozen=True)
class OscillatorParams:
    """Barrier strength omega.

    Any finite real value is legal: omega = 0 degenerates to a free
    particle in a fixed box, and negative omega is the time-reversed
    barrier (a contracting box).
    """

    omega: float

    def __post_init__(self):
        if not math.isfinite(self.omega):
            raise ValueError(f"omega must be finite, got {self.omega!r}")


@dataclass(frozen=True)
class BoxConfig:
    """Initial confinement interval [0, l0] plus the barrier parameters."""

    l0: float
    params: OscillatorParams

    def __post_init__(self):
        if not (math.isfinite(self.l0) and self.l0 > 0.0):
            raise ValueError(f"l0 must be positive and finite, got {self.l0!r}")

    @property
    def omega(self) -> float:
        return self.params.omega


@dataclass(frozen=True)
class ConfinedMode:
    """Box mode with quantum number n >= 1 (there is no n = 0 state).

    epsilon = (n*pi/l0)^2 is the separation constant of the reduced free
    problem; norm = sqrt(2/l0) keeps the mode normalized on the expanding
    interval [0, L(t)] at every time.
    """

    n: int
    box: BoxConfig
    epsilon: float
    norm: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"quantum number must be >= 1, got {self.n}")
        if self.epsilon != (self.n * math.pi / self.box.l0) ** 2:
            raise ValueError("epsilon is not (n*pi/l0)^2 for this box")
        if not (self.epsilon > 0.0 and self.norm > 0.0):
            raise ValueError("epsilon and norm must be positive")


def make_confined_mode(n: int, box: BoxConfig) -> ConfinedMode:
    """Build the n-th confined mode; n must be a positive integer."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"quantum number n must be a positive integer, got {n!r}")
    return ConfinedMode(
        n=int(n),
        box=box,
        epsilon=(int(n) * math.pi / box.l0) ** 2,
        norm=math.sqrt(2.0 / box.l0),
    )


@dataclass(frozen=True)
class ScatteringMode:
    """Plane-wave family member with real wavenumber k.

    Bookkeeping relation to the separation constant: epsilon = -k^2
    (recorded, not enforced).
    """

    k: float
    params: OscillatorParams

    def __post_init__(self):
        if not math.isfinite(self.k):
            raise ValueError(f"k must be finite, got {self.k!r}")


def scale_factor(params: OscillatorParams, t: float) -> float:
    """Classical trajectory q(t) = exp(2*omega*t); equals 1 at t = 0.

    In the quantum problem this is the wall position in units of l0, not a
    particle position.
    """
    return math.exp(2.0 * params.omega * t)


def box_length(box: BoxConfig, t: float) -> float:
    """Instantaneous wall position L(t) = l0 * exp(2*omega*t)."""
    return box.l0 * scale_factor(box.params, t)


def psi1_eval(mode, x, t, conv=PhaseConvention.CORRECTED):
    """Confined sinusoidal solution at lab coordinate(s) x and time t.

    psi1 = N * exp(i*omega*x^2/2 - omega*t +/- i*(eps/4*omega)*e^{-4wt})
             * sin(e^{-2wt} * sqrt(eps) * x)

    with the phase sign set by `conv`.  The evaluator is total on real x;
    restricting support to [0, L(t)] is the caller's mask, so the odd
    parity psi1(-x) = -psi1(x) stays literally testable.  At omega = 0 the
    diverging constant phase is dropped (a removable global-phase
    discontinuity) and the plain box eigenstate N e^{-i*eps*t} sin(...) is
    returned.
    """
    omega = mode.box.omega
    x = np.asarray(x, dtype=np.float64)
    root_eps = math.sqrt(mode.epsilon)
    if omega == 0.0:
        return mode.norm * np.exp(-1j * mode.epsilon * t) * np.sin(root_eps * x)
    sign = 1.0 if conv is PhaseConvention.CORRECTED else -1.0
    const_phase = sign * (mode.epsilon / (4.0 * omega)) * math.exp(-4.0 * omega * t)
    phase = 0.5 * omega * x * x + const_phase
    amp = mode.norm * math.exp(-omega * t)
    return amp * np.exp(1j * phase) * np.sin(math.exp(-2.0 * omega * t) * root_eps * x)


def psi2_eval(mode, x, t):
    """Decaying plane-wave solution; |psi2| = exp(-omega*t) for all x, k.

    Undefined at omega = 0 where the k^2/(4*omega) phase blows up; use a
    plain free plane wave there instead.
    """
    omega = mode.params.omega
    if omega == 0.0:
        raise ValueError(
            "plane-wave phase k^2/(4*omega) is undefined at omega = 0; "
            "use a free plane wave instead"
        )
    x = np.asarray(x, dtype=np.float64)
    phase = (
        0.5 * omega * x * x
        + mode.k * math.exp(-2.0 * omega * t) * x
        + (mode.k * mode.k / (4.0 * omega)) * math.exp(-4.0 * omega * t)
    )
    return math.exp(-omega * t) * np.exp(1j * phase)


def energy_level(mode: ConfinedMode, t: float) -> float:
    """Level energy epsilon * exp(-4*omega*t) = e^{-4wt} n^2 pi^2 / l0^2.

    Strictly positive, decreasing in t for omega > 0, and quadratic in n
    with no zero-point offset.
    """
    return mode.epsilon * math.exp(-4.0 * mode.box.omega * t)


def decay_intensity(params: OscillatorParams, t: float) -> float:
    """|psi2|^2 = exp(-2*omega*t), independent of x and k."""
    return math.exp(-2.0 * params.omega * t)


def decay_rate(params: OscillatorParams) -> float:
    """Gamma in |psi2|^2 = exp(-Gamma*t/2), i.e. Gamma = 4*omega."""
    return 4.0 * params.omega


def tau_of(params: OscillatorParams, t: float) -> float:
    """Reparameterized time tau(t) = (1 - exp(-4*omega*t)) / (4*omega).

    d(tau) = exp(-4*omega*t) dt turns the comoving equation into the free
    Schrodinger equation with constant coefficients.  Strictly increasing
    in t, bounded above by 1/(4*omega) for omega > 0, and tau(t) = t at
    omega = 0 (removable singularity; expm1 keeps it continuous in omega).
    """
    if params.omega == 0.0:
        return t
    return -math.expm1(-4.0 * params.omega * t) / (4.0 * params.omega)
