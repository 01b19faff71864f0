"""Independent reference implementations used to cross-check the library.

Everything here is deliberately built a different way than the package:
the Hamiltonian from raw ladder operators instead of dressed blocks, and
the exponential by scaling and squaring instead of analytic phases.
"""

import numpy as np


def dense_hamiltonian(g: float, omega0: float, n_max: int) -> np.ndarray:
    """Joint Hamiltonian assembled directly from atom and mode operators.

    Basis ordering matches the package: index = atom*(n_max+1) + n with
    the ground level first.
    """
    na = n_max + 1
    lower = np.zeros((na, na), dtype=complex)
    for n in range(1, na):
        lower[n - 1, n] = np.sqrt(n)
    number = lower.conj().T @ lower
    sigma_z = np.diag([-1.0, 1.0]).astype(complex)
    raise_atom = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
    h = 0.5 * omega0 * np.kron(sigma_z, np.eye(na))
    h = h + omega0 * np.kron(np.eye(2), number)
    h = h + g * (
        np.kron(raise_atom, lower)
        + np.kron(raise_atom.conj().T, lower.conj().T)
    )
    return h


def expm_taylor(m: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling and squaring a Taylor series."""
    norm = float(np.abs(m).sum(axis=1).max())
    squarings = max(0, int(np.ceil(np.log2(max(norm, 1.0)))) + 1)
    x = m / (2.0**squarings)
    out = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, 30):
        term = term @ x / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out
