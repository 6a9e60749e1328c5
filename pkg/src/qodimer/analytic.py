"""Closed-form reduced dynamics of the two qubits.

For the initial state (|e>+|g>)(|e>+|g>)/2 on the qubits and coherent states
on the two oscillators, the reduced 4x4 density matrix in the ordered basis
{ee, eg, ge, gg} is

    rho_mn(t) = (1/4) * gamma_mn(t) * Theta_mn,+(t) * Theta_mn,-(t)   (m != n)
    rho_mm    = 1/4,

where gamma_mn collects the qubit dephasing and coherent phase factors and
Theta_mn,± are overlaps of squeezed coherent states of the two normal modes.
Every formula below was cross-checked to machine precision against the
truncated-Fock oracle (see tests); the sign and phase conventions are the ones
that survive that comparison and are recorded in docs/conventions.md.

Vectorization: all time arguments accept a float or an ndarray of times.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnknownLabel
from .params import SQRT2, DerivedParams

#: Basis order of the two-qubit space; first letter = qubit A, sigma_z|e> = +|e>.
BASIS = ("ee", "eg", "ge", "gg")
BASIS_INDEX = {q: i for i, q in enumerate(BASIS)}

#: The six independent upper-triangle coherence labels (m+n concatenated).
COHERENCE_LABELS = ("eeeg", "eege", "eegg", "egge", "eggg", "gegg")

_SZ = {"e": 1.0, "g": -1.0}


def _sz(q: str) -> tuple[float, float]:
    return _SZ[q[0]], _SZ[q[1]]


def _c_plus(q: str) -> float:
    # coefficient of the symmetric polaron displacement for config q
    sa, sb = _sz(q)
    return (sa + sb) / 2.0


def _c_minus(q: str) -> float:
    # coefficient of the antisymmetric polaron displacement for config q
    sa, sb = _sz(q)
    return (sb - sa) / 2.0


def _qubit_energy(q: str, d: DerivedParams) -> float:
    sa, sb = _sz(q)
    return d.omega0_eff / 2.0 * (sa + sb) + d.chi / 2.0 * sa * sb


@dataclass(frozen=True)
class ModeAmplitudes:
    """Initial coherent amplitudes of the two oscillators."""

    alpha: complex
    beta: complex


@dataclass(frozen=True)
class TransformedAmplitudes:
    """Normal-mode coherent amplitudes before (z, w) and after (Z, W) squeezing."""

    z: complex
    w: complex
    Z: complex
    W: complex

    @classmethod
    def from_modes(cls, amps: ModeAmplitudes, d: DerivedParams) -> "TransformedAmplitudes":
        z = (amps.alpha + amps.beta + 2 * d.delta) / SQRT2
        w = (amps.beta - amps.alpha) / SQRT2
        Z = z * np.cosh(d.r_plus) + np.conj(z) * np.sinh(d.r_plus)
        W = w * np.cosh(d.r_minus) + np.conj(w) * np.sinh(d.r_minus)
        return cls(z=z, w=w, Z=complex(Z), W=complex(W))


@dataclass(frozen=True)
class CoherencePhaseTerms:
    """Building blocks of the coherent phase corrections at one time.

    A_* belong to the symmetric (+) normal mode, B_* to the antisymmetric (-)
    one.  All four are real at t=0, so every phase correction starts at unity.
    """

    A_plus: complex
    A_minus: complex
    B_plus: complex
    B_minus: complex


@dataclass(frozen=True)
class OverlapSpec:
    """One squeezed-coherent-state overlap <Y_m, xi | Y_n, xi>."""

    Y_m: complex
    Y_n: complex
    xi: complex


def mode_decoherence_exponent(t, branch: str, d: DerivedParams):
    """Envelope exponent f_±(t) >= 0 of the single-flip coherence decay.

    f_±(t) = 16 lam_±^2 [cosh(2 r_±) + sinh(2 r_±) cos(Omega_± t)] sin^2(Omega_± t / 2)

    The sign of the sinh term is fixed by the truncated-Fock oracle (the
    opposite sign fails the element-wise comparison; see docs/conventions.md).
    """
    t = np.asarray(t, dtype=float)
    if branch == "+":
        lamb, r, Om = d.lam_plus, d.r_plus, d.Omega_plus
    elif branch == "-":
        lamb, r, Om = d.lam_minus, d.r_minus, d.Omega_minus
    else:
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    bracket = np.cosh(2 * r) + np.sinh(2 * r) * np.cos(Om * t)
    out = 16 * lamb**2 * bracket * np.sin(Om * t / 2) ** 2
    return out if out.ndim else float(out)


def phase_terms(t, d: DerivedParams, ta: TransformedAmplitudes) -> CoherencePhaseTerms:
    """Phase-correction building blocks A_±(t), B_±(t).

    A_s(t) = 3 lam_+ conj(Z) (1 - e^{i Omega_+ t}) - 2 s lam_+^2 e^{i Omega_+ t},
    and B_s likewise with (lam_-, W, Omega_-).  Only the imaginary parts enter
    the dephasing factors.
    """
    t = np.asarray(t, dtype=float)
    ep = np.exp(1j * d.Omega_plus * t)
    em = np.exp(1j * d.Omega_minus * t)
    azz = 3 * d.lam_plus * np.conj(ta.Z) * (1 - ep)
    bww = 3 * d.lam_minus * np.conj(ta.W) * (1 - em)
    return CoherencePhaseTerms(
        A_plus=azz - 2 * d.lam_plus**2 * ep,
        A_minus=azz + 2 * d.lam_plus**2 * ep,
        B_plus=bww - 2 * d.lam_minus**2 * em,
        B_minus=bww + 2 * d.lam_minus**2 * em,
    )


def _split_label(mn: str) -> tuple[str, str]:
    if len(mn) != 4 or mn[:2] not in BASIS_INDEX or mn[2:] not in BASIS_INDEX:
        raise UnknownLabel(f"not a coherence label: {mn!r}")
    return mn[:2], mn[2:]


def dephasing_factor(mn: str, t, d: DerivedParams, ta: TransformedAmplitudes, gamma: float):
    """Dephasing-and-phase factor gamma_mn(t) of one density-matrix entry.

    Diagonal labels give 1; labels below the diagonal give the conjugate of
    their transpose.  The magnitude is e^{-gamma t} for single-flip coherences
    and e^{-2 gamma t} for the double-flip ones (eegg, egge).
    """
    m, n = _split_label(mn)
    if m == n:
        return np.ones_like(np.asarray(t, dtype=float)) + 0j if np.ndim(t) else 1.0 + 0j
    if mn not in COHERENCE_LABELS:
        if n + m in COHERENCE_LABELS:
            return np.conj(dephasing_factor(n + m, t, d, ta, gamma))
        raise UnknownLabel(f"not a stored coherence label: {mn!r}")

    t = np.asarray(t, dtype=float)
    c = phase_terms(t, d, ta)
    sa_m, sb_m = _sz(m)
    sa_n, sb_n = _sz(n)
    # dephasing exponent: -gamma t per flipped qubit
    damp = gamma / 2.0 * (sa_m * sa_n + sb_m * sb_n - 2.0) * t
    de = _qubit_energy(m, d) - _qubit_energy(n, d)
    corr = {
        "eeeg": np.imag(c.A_plus + c.B_minus),
        "eege": np.imag(c.A_plus - c.B_plus),
        "eegg": np.imag(c.A_plus + c.A_minus),
        "egge": -np.imag(c.B_plus + c.B_minus),
        "eggg": np.imag(c.A_minus - c.B_minus),
        "gegg": np.imag(c.A_minus + c.B_plus),
    }[mn]
    out = np.exp(damp - 1j * de * t + 2j * corr)
    return out if out.ndim else complex(out)


def displaced_amplitudes(mn: str, t, d: DerivedParams, ta: TransformedAmplitudes):
    """Overlap inputs (Y_m, Y_n, xi) of both normal modes for one coherence.

    Y_{q,±}(t) = (X_± + kappa_q±) e^{-i Omega_± t} - kappa_q±, where X_+ = Z,
    X_- = W and kappa_q± is the polaron displacement of qubit config q.  The
    squeeze argument is xi_±(t) = -r_± e^{-2 i Omega_± t}.
    """
    m, n = _split_label(mn)
    t = np.asarray(t, dtype=float)

    def y(q: str, branch: str):
        if branch == "+":
            kappa = 2 * d.lam_plus * _c_plus(q)
            X, Om = ta.Z, d.Omega_plus
        else:
            kappa = 2 * d.lam_minus * _c_minus(q)
            X, Om = ta.W, d.Omega_minus
        return (X + kappa) * np.exp(-1j * Om * t) - kappa

    xi_p = -d.r_plus * np.exp(-2j * d.Omega_plus * t)
    xi_m = -d.r_minus * np.exp(-2j * d.Omega_minus * t)
    return (
        OverlapSpec(Y_m=y(m, "+"), Y_n=y(n, "+"), xi=xi_p),
        OverlapSpec(Y_m=y(m, "-"), Y_n=y(n, "-"), xi=xi_m),
    )


def squeezed_overlap(spec: OverlapSpec):
    """Overlap <Y_m, xi | Y_n, xi> of equally squeezed coherent states.

    With |Y, xi> = D(Y) S(xi)|0>, S(xi) = exp[(conj(xi) a^2 - xi a'^2)/2]:

        Theta = exp(i Im(conj(Y_m) Y_n)) * exp(-|d'|^2 / 2),
        d'    = d cosh|xi| + conj(d) e^{i arg xi} sinh|xi|,   d = Y_n - Y_m.

    At xi=0 this is the plain coherent-state overlap; |Theta| <= 1 always.
    Note S(xi(0)) = S(-r) is exactly the squeeze that decouples the modes;
    the opposite Bogoliubov sign breaks the |Theta|^2 = e^{-f} link.
    """
    dd = spec.Y_n - spec.Y_m
    r = np.abs(spec.xi)
    theta = np.angle(spec.xi)  # arg(0) = 0; the sinh factor vanishes there anyway
    dprime = dd * np.cosh(r) + np.conj(dd) * np.exp(1j * theta) * np.sinh(r)
    out = np.exp(1j * np.imag(np.conj(spec.Y_m) * spec.Y_n) - np.abs(dprime) ** 2 / 2)
    return out if np.ndim(out) else complex(out)


def _coherence_value(mn: str, t, d: DerivedParams, ta: TransformedAmplitudes, gamma: float):
    sp, sm = displaced_amplitudes(mn, t, d, ta)
    return 0.25 * dephasing_factor(mn, t, d, ta, gamma) * squeezed_overlap(sp) * squeezed_overlap(sm)


def qubit_density_matrix(t: float, d: DerivedParams, ta: TransformedAmplitudes, gamma: float) -> np.ndarray:
    """Reduced 4x4 density matrix at time t in the {ee, eg, ge, gg} basis."""
    return density_matrix_series(np.asarray([float(t)]), d, ta, gamma)[0]


def density_matrix_series(ts: np.ndarray, d: DerivedParams, ta: TransformedAmplitudes, gamma: float) -> np.ndarray:
    """Reduced density matrices on a time grid, shape (len(ts), 4, 4)."""
    ts = np.asarray(ts, dtype=float)
    rho = np.zeros((ts.size, 4, 4), dtype=complex)
    for i in range(4):
        rho[:, i, i] = 0.25
    for mn in COHERENCE_LABELS:
        i, k = BASIS_INDEX[mn[:2]], BASIS_INDEX[mn[2:]]
        val = _coherence_value(mn, ts, d, ta, gamma)
        rho[:, i, k] = val
        rho[:, k, i] = np.conj(val)
    return rho


def purity_closed_form(t, d: DerivedParams, gamma: float):
    """Tr[rho^2] of the reduced state, independent of the mode amplitudes.

    P(t) = 1/4 + 2 Gamma(t) with

        Gamma = (1/16) [4 e^{-(f_+ + f_- + 2 gamma t)}
                        + e^{-4 (f_+ + gamma t)} + e^{-4 (f_- + gamma t)}].

    The 1/16 normalization makes P(0) = 1 exactly; the exponents are summed
    before a single exponentiation to avoid underflow at large t.
    """
    t = np.asarray(t, dtype=float)
    fp = mode_decoherence_exponent(t, "+", d)
    fm = mode_decoherence_exponent(t, "-", d)
    gt = gamma * t
    gam = (4 * np.exp(-(fp + fm + 2 * gt)) + np.exp(-4 * (fp + gt)) + np.exp(-4 * (fm + gt))) / 16.0
    out = 0.25 + 2 * gam
    return out if out.ndim else float(out)
