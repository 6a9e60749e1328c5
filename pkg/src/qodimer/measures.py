"""Scalar diagnostics of two-qubit states: purity, concurrence, entanglement of formation."""

from __future__ import annotations

import numpy as np

from .errors import InvalidState

#: eigenvalues of the concurrence spectrum more negative than this signal a bug upstream
_EIG_CLIP = -1e-12

_SY_SY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)  # sigma_y (x) sigma_y in the {ee, eg, ge, gg} basis


def _check_state(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 matrix, got shape {rho.shape}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > 1e-8:
        raise InvalidState(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
    if np.abs(rho - rho.conj().T).max() > 1e-8:
        raise InvalidState("matrix is not Hermitian")
    return rho


def purity(rho: np.ndarray) -> float:
    """Tr[rho^2]; 1/4 for the maximally mixed two-qubit state, 1 for pure."""
    rho = _check_state(rho)
    return float(np.real(np.einsum("ij,ji->", rho, rho)))


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    C = max(0, sqrt(e1) - sqrt(e2) - sqrt(e3) - sqrt(e4)) with e_i the
    descending eigenvalues of rho (sy x sy) rho* (sy x sy).  The product is
    not Hermitian, so a general eigensolver is used and small imaginary parts
    (and eigenvalues down to -1e-12) are clipped.
    """
    rho = _check_state(rho)
    return float(_concurrence_batch(rho[None, :, :])[0])


def _concurrence_batch(rhos: np.ndarray) -> np.ndarray:
    rt = rhos @ _SY_SY @ rhos.conj() @ _SY_SY
    ev = np.linalg.eigvals(rt)
    if np.abs(ev.imag).max(initial=0.0) > 1e-10:
        raise InvalidState("concurrence spectrum has non-real eigenvalues")
    ev = ev.real
    if ev.min(initial=0.0) < _EIG_CLIP:
        raise InvalidState(f"concurrence spectrum has eigenvalue {ev.min():.3e} < {_EIG_CLIP}")
    ev = np.sort(np.sqrt(np.clip(ev, 0.0, None)), axis=-1)[:, ::-1]
    c = ev[:, 0] - ev[:, 1:].sum(axis=-1)
    return np.clip(c, 0.0, 1.0)


def _binary_entropy(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = (x > 0.0) & (x < 1.0)
    xi = x[inside]
    out[inside] = -xi * np.log2(xi) - (1 - xi) * np.log2(1 - xi)
    return out


def eof(rho: np.ndarray) -> float:
    """Entanglement of formation h((1 + sqrt(1 - C^2))/2), in [0, 1]."""
    return float(eof_from_concurrence(concurrence(rho)))


def eof_from_concurrence(c) -> np.ndarray:
    """Map concurrence value(s) to entanglement of formation."""
    c = np.clip(np.asarray(c, dtype=float), 0.0, 1.0)
    x = (1 + np.sqrt(1 - c**2)) / 2
    out = _binary_entropy(x)
    return out if out.ndim else float(out)


def concurrence_series(rhos: np.ndarray) -> np.ndarray:
    """Concurrence of a stack of 4x4 density matrices, shape (T,)."""
    rhos = np.asarray(rhos, dtype=complex)
    return _concurrence_batch(rhos.reshape(-1, 4, 4))


def eof_series(rhos: np.ndarray) -> np.ndarray:
    """Entanglement of formation of a stack of 4x4 density matrices."""
    return eof_from_concurrence(concurrence_series(rhos))


def purity_series(rhos: np.ndarray) -> np.ndarray:
    """Tr[rho^2] of a stack of 4x4 density matrices."""
    rhos = np.asarray(rhos, dtype=complex)
    return np.real(np.einsum("tij,tji->t", rhos, rhos))
