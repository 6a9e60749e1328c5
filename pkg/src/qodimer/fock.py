"""Truncated-Fock building blocks for the brute-force oracle.

The full space is qubitA (x) qubitB (x) modeA (x) modeB with each mode cut at
n_max number states, total dimension 4*n_max^2.  Operators are assembled
sparse and exported dense (the largest spectra run at 4*40^2 = 6400).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
from scipy.special import gammainc, gammaln

from .errors import CutoffTooSmall
from .params import ModelParams, Variant, validate

#: acceptable probability of a coherent state beyond the cutoff
TAIL_MASS_LIMIT = 1e-8

_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_ID2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class TruncatedSpace:
    """Per-mode Fock cutoff; total dimension 4*n_max^2."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 2:
            raise CutoffTooSmall(f"n_max must be at least 2, got {self.n_max}")

    @property
    def mode_dim(self) -> int:
        return self.n_max

    @property
    def modes_dim(self) -> int:
        return self.n_max * self.n_max

    @property
    def dim(self) -> int:
        return 4 * self.n_max * self.n_max


def recommended_cutoff(amplitude: complex) -> int:
    """Sizing rule n_max >= ceil(|a|^2 + 6|a| + 10) for the largest displaced amplitude."""
    a = abs(amplitude)
    return int(np.ceil(a * a + 6 * a + 10))


def annihilation(n_max: int) -> sp.csr_matrix:
    """Single-mode annihilation operator, <n-1|a|n> = sqrt(n)."""
    return sp.diags(np.sqrt(np.arange(1, n_max)), 1, format="csr")


def coherent_state(amplitude: complex, space: TruncatedSpace) -> np.ndarray:
    """Normalized truncated coherent vector, components ~ amplitude^n / sqrt(n!).

    Raises CutoffTooSmall when the discarded tail mass reaches 1e-8.
    """
    mass = coherent_tail_mass(amplitude, space.n_max)
    if mass >= TAIL_MASS_LIMIT:
        raise CutoffTooSmall(
            f"coherent amplitude {amplitude} leaves tail mass {mass:.2e} beyond n_max={space.n_max}"
        )
    n = np.arange(space.n_max)
    a = abs(amplitude)
    logmag = n * np.log(a) - 0.5 * gammaln(n + 1) - a * a / 2 if a > 0 else np.where(n == 0, 0.0, -np.inf)
    vec = np.exp(logmag) * np.exp(1j * n * np.angle(amplitude))
    return vec / np.linalg.norm(vec)


def coherent_tail_mass(amplitude: complex, n_max: int) -> float:
    """Probability of finding more than n_max-1 quanta in a coherent state."""
    mean = abs(amplitude) ** 2
    if mean == 0.0:
        return 0.0
    return float(gammainc(n_max, mean))


def _mode_operators(space: TruncatedSpace):
    a1 = annihilation(space.n_max)
    i1 = sp.identity(space.n_max, format="csr")
    return a1, i1


def _embed_modes(op_a: sp.spmatrix, op_b: sp.spmatrix) -> sp.csr_matrix:
    """modeA (x) modeB operator on the mode sector."""
    return sp.kron(op_a, op_b, format="csr")


def mode_block_hamiltonians(params: ModelParams, space: TruncatedSpace) -> list[sp.csr_matrix]:
    """The four mode-sector Hamiltonians H_q conditioned on the qubit config.

    The lab Hamiltonian contains the qubits only through sigma_z, so it is
    block diagonal over {ee, eg, ge, gg}; block q includes the constant qubit
    energy (omega0/2)(sA+sB).
    """
    p = validate(params)
    a1, i1 = _mode_operators(space)
    x1 = (a1 + a1.T).tocsr()
    num = sp.diags(np.arange(space.n_max), 0, format="csr")
    free = p.omega * (_embed_modes(num, i1) + _embed_modes(i1, num))
    if p.variant == Variant.COMPLETE:
        coupling = p.lam * _embed_modes(x1, x1)
    else:
        coupling = p.lam * (_embed_modes(a1.T, a1) + _embed_modes(a1, a1.T))
    eye = sp.identity(space.modes_dim, format="csr")
    blocks = []
    for sa, sb in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        hq = (
            free
            + coupling
            + p.g * (sa + p.mu) * _embed_modes(x1, i1)
            + p.g * (sb + p.mu) * _embed_modes(i1, x1)
            + p.omega0 / 2 * (sa + sb) * eye
        )
        blocks.append(hq.tocsr())
    return blocks


def build_hamiltonian(params: ModelParams, space: TruncatedSpace) -> np.ndarray:
    """Dense lab-frame Hamiltonian on the full 4*n_max^2 space."""
    blocks = mode_block_hamiltonians(params, space)
    h = sp.block_diag(blocks, format="csr")
    return np.asarray(h.todense(), dtype=complex)


def sigma_z_full(space: TruncatedSpace, qubit: str) -> np.ndarray:
    """sigma_z of qubit 'A' or 'B' embedded in the full space (diagonal)."""
    if qubit == "A":
        q = np.kron(np.array([1.0, -1.0]), np.ones(2))
    elif qubit == "B":
        q = np.kron(np.ones(2), np.array([1.0, -1.0]))
    else:
        raise ValueError(f"qubit must be 'A' or 'B', got {qubit!r}")
    return np.diag(np.kron(q, np.ones(space.modes_dim)).astype(complex))


def plus_plus_qubits() -> np.ndarray:
    """|++> in the ordered {ee, eg, ge, gg} basis."""
    return np.full(4, 0.5, dtype=complex)


def initial_state(alpha: complex, beta: complex, space: TruncatedSpace) -> np.ndarray:
    """|++> (x) |alpha> (x) |beta> as a state vector on the full space."""
    modes = np.kron(coherent_state(alpha, space), coherent_state(beta, space))
    return np.kron(plus_plus_qubits(), modes)


def partial_trace_modes(state: np.ndarray, space: TruncatedSpace) -> np.ndarray:
    """Reduced 4x4 qubit matrix of a full pure state or density matrix."""
    m = space.modes_dim
    state = np.asarray(state)
    if state.ndim == 1:
        psi = state.reshape(4, m)
        return psi @ psi.conj().T
    if state.ndim == 2:
        return np.einsum("aibi->ab", state.reshape(4, m, 4, m))
    raise ValueError(f"state must be a vector or a matrix, got ndim={state.ndim}")


def spectrum_gaps(H: np.ndarray, k: int, space: TruncatedSpace) -> np.ndarray:
    """k smallest eigenvalues of H as gaps from the ground state, ascending.

    Raises CutoffTooSmall when any of the k eigenvectors leaks more than 1e-6
    of its population into the top two Fock layers of either mode.
    """
    H = np.asarray(H)
    vals, vecs = sla.eigh(H, subset_by_index=(0, k - 1))
    n = space.n_max
    idx = np.arange(n * n)
    top = (idx // n >= n - 2) | (idx % n >= n - 2)
    top_full = np.tile(top, 4)
    pops = (np.abs(vecs[top_full, :]) ** 2).sum(axis=0)
    if pops.max() > 1e-6:
        raise CutoffTooSmall(
            f"eigenvector population {pops.max():.2e} in the top two Fock layers; increase n_max"
        )
    return vals - vals[0]
