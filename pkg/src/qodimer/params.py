"""Model parameters and the derived constants of the decoupled (diagonal) frame.

Two identical qubit-oscillator pairs interact through their oscillators.  The
oscillator-oscillator coupling is either the full quadrature-quadrature product
(``variant=1``, the complete model) or its excitation-conserving rotating-wave
form (``variant=2``).  A displacement, a beam-splitter rotation, a two-mode
squeeze and a polaron transformation decouple qubits from modes exactly; what
remains is a pair of shifted qubits with an Ising coupling plus two free normal
modes.  ``derive`` computes every constant of that decoupled frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

from .errors import DomainError, StabilityError

SQRT2 = math.sqrt(2.0)


class Variant(IntEnum):
    """Oscillator-oscillator coupling form: full product or rotating-wave."""

    COMPLETE = 1
    RWA = 2


@dataclass(frozen=True)
class ModelParams:
    """Lab-frame inputs.  All rates/frequencies share one unit system (hbar=1).

    omega0: qubit angular frequency
    omega:  oscillator angular frequency
    g:      qubit-oscillator coupling
    lam:    oscillator-oscillator coupling
    mu:     dimensionless offset of the qubit-oscillator coupling
    gamma:  qubit pure-dephasing rate
    variant: 1 = complete model, 2 = RWA model
    """

    omega0: float
    omega: float
    g: float
    lam: float
    mu: float = 0.0
    gamma: float = 0.0
    variant: Variant = Variant.COMPLETE

    def replace(self, **kw) -> "ModelParams":
        from dataclasses import replace

        return replace(self, **kw)


@dataclass(frozen=True)
class DerivedParams:
    """Constants of the decoupled frame.

    delta:       per-mode displacement removing the mu-offset
    r_plus/r_minus: squeeze parameters of the two normal modes (0 in the RWA)
    Omega_plus/Omega_minus: normal-mode frequencies
    lam_plus/lam_minus: polaron displacement strengths
    omega0_eff:  shifted qubit frequency
    chi:         induced qubit-qubit Ising coupling
    """

    delta: float
    r_plus: float
    r_minus: float
    Omega_plus: float
    Omega_minus: float
    lam_plus: float
    lam_minus: float
    omega0_eff: float
    chi: float


def validate(params: ModelParams) -> ModelParams:
    """Check domain and stability constraints; return the params unchanged.

    The squeeze diagonalizing the complete model exists only for lam < omega/2
    (real normal-mode frequencies); the RWA model only needs lam < omega.
    """
    p = params
    if not (p.omega0 > 0):
        raise DomainError(f"omega0 must be positive, got {p.omega0}")
    if not (p.omega > 0):
        raise DomainError(f"omega must be positive, got {p.omega}")
    if p.g < 0:
        raise DomainError(f"g must be nonnegative, got {p.g}")
    if p.gamma < 0:
        raise DomainError(f"gamma must be nonnegative, got {p.gamma}")
    if p.lam < 0:
        raise DomainError(f"lam must be nonnegative, got {p.lam}")
    for name in ("omega0", "omega", "g", "lam", "mu", "gamma"):
        if not math.isfinite(getattr(p, name)):
            raise DomainError(f"{name} must be finite")
    if p.variant not in (Variant.COMPLETE, Variant.RWA):
        raise DomainError(f"variant must be 1 or 2, got {p.variant}")
    if p.variant == Variant.COMPLETE and p.lam >= p.omega / 2:
        raise StabilityError(
            f"complete model requires lam < omega/2 (got lam={p.lam}, omega={p.omega})"
        )
    if p.variant == Variant.RWA and p.lam >= p.omega:
        raise StabilityError(
            f"RWA model requires lam < omega (got lam={p.lam}, omega={p.omega})"
        )
    return p


def derive(params: ModelParams) -> DerivedParams:
    """Compute the decoupled-frame constants for validated parameters.

    Complete model: r_pm = (1/4) ln(1 +/- 2 lam/omega), which makes the normal
    modes come out at omega*sqrt(1 +/- 2 lam/omega) (confirmed against the
    truncated-space spectrum; see docs/conventions.md for the rejected
    alternative).  RWA model: r_pm = 0 and the modes sit at omega +/- lam.
    """
    p = validate(params)
    j = int(p.variant)
    delta = p.g * p.mu / (p.omega + 2.0 ** (2 - j) * p.lam)
    if p.variant == Variant.COMPLETE:
        r_plus = 0.25 * math.log1p(2 * p.lam / p.omega)
        r_minus = 0.25 * math.log1p(-2 * p.lam / p.omega)
    else:
        r_plus = r_minus = 0.0
    Omega_plus = p.omega * math.cosh(2 * r_plus) + p.lam * math.exp(-2 * r_plus)
    Omega_minus = p.omega * math.cosh(2 * r_minus) - p.lam * math.exp(-2 * r_minus)
    lam_plus = p.g * math.exp(-r_plus) / (SQRT2 * Omega_plus)
    lam_minus = p.g * math.exp(-r_minus) / (SQRT2 * Omega_minus)
    omega0_eff = p.omega0 - 4 * p.g * delta
    chi = 2 * p.g * p.g * (
        math.exp(-2 * r_minus) / Omega_minus - math.exp(-2 * r_plus) / Omega_plus
    )
    return DerivedParams(
        delta=delta,
        r_plus=r_plus,
        r_minus=r_minus,
        Omega_plus=Omega_plus,
        Omega_minus=Omega_minus,
        lam_plus=lam_plus,
        lam_minus=lam_minus,
        omega0_eff=omega0_eff,
        chi=chi,
    )
