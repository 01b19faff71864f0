"""Entropy functionals and the mutual-entropy degree of entanglement.

All entropies are computed spectrally from Hermitian eigendecompositions.
Natural log is the default; base 2 is selectable everywhere through the
``log_base`` argument ("e" or "2").
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eigensystem, partial_trace
from .model import ClosedFormCoeffs

# Eigenvalues at or below EIG_CLIP contribute nothing to entropy sums;
# below -NEGATIVE_EIG_TOL the state itself is invalid.
EIG_CLIP = 1e-12
NEGATIVE_EIG_TOL = 1e-10
# Probability mass sigma may place outside rho's support before the
# relative entropy is declared infinite.
SUPPORT_TOL = 1e-9
AL_SLACK = 1e-8


def _log_scale(log_base: str) -> float:
    if log_base == "e":
        return 1.0
    if log_base == "2":
        return 1.0 / math.log(2.0)
    raise ValueError(f"log_base must be 'e' or '2', got {log_base!r}")


def _checked_spectrum(rho) -> np.ndarray:
    """Eigenvalues of a state, rejecting genuinely negative ones."""
    eigs = hermitian_eigensystem(rho).eigenvalues
    if eigs[0] < -NEGATIVE_EIG_TOL:
        raise ValueError(f"state has negative eigenvalue {eigs[0]:.3e}")
    return eigs


def _xlogx_sum(p: np.ndarray) -> float:
    """sum p_k ln p_k with the 0 ln 0 = 0 convention."""
    live = p > EIG_CLIP
    return float(np.sum(p[live] * np.log(p[live])))


def von_neumann_entropy(rho, log_base: str = "e") -> float:
    """-tr(rho log rho); zero exactly on pure states."""
    s = -_xlogx_sum(_checked_spectrum(rho))
    return max(s, 0.0) * _log_scale(log_base)


def relative_entropy(sigma, rho, log_base: str = "e") -> float:
    """tr sigma (log sigma - log rho), or +inf outside rho's support.

    Evaluated from both eigensystems as
    sum_i lam_i log lam_i - sum_ij lam_i |<v_i|w_j>|^2 log mu_j,
    where (lam, v) and (mu, w) diagonalize sigma and rho.
    """
    lam, v = hermitian_eigensystem(sigma)
    mu, w = hermitian_eigensystem(rho)
    if lam.shape != mu.shape:
        raise ValueError(
            f"dimension mismatch: {lam.shape[0]} vs {mu.shape[0]}"
        )
    if lam[0] < -NEGATIVE_EIG_TOL or mu[0] < -NEGATIVE_EIG_TOL:
        raise ValueError("negative eigenvalue in relative entropy argument")
    overlaps = np.abs(v.conj().T @ w) ** 2
    lam_live = lam > EIG_CLIP
    mu_dead = mu <= EIG_CLIP
    stray = float(lam[lam_live] @ overlaps[np.ix_(lam_live, mu_dead)].sum(axis=1))
    if stray > SUPPORT_TOL:
        return math.inf
    cross = float(
        lam[lam_live]
        @ overlaps[np.ix_(lam_live, ~mu_dead)]
        @ np.log(mu[~mu_dead])
    )
    return (_xlogx_sum(lam) - cross) * _log_scale(log_base)


@dataclass(frozen=True)
class EntropyReport:
    """Marginal and joint entropies of a bipartite state, with the DEM."""

    s_atom: float
    s_field: float
    s_joint: float
    dem: float
    araki_lieb_ok: bool
    al_margins: tuple[float, float]


def dem_exact(joint, dims: tuple[int, int], log_base: str = "e") -> EntropyReport:
    """Degree of entanglement S(rho_A) + S(rho_F) - S(joint).

    Also evaluates both triangle-inequality bounds: al_margins holds
    (s_joint - |s_atom - s_field|, s_atom + s_field - s_joint), each
    nonnegative up to AL_SLACK on a valid state.
    """
    s_atom = von_neumann_entropy(partial_trace(joint, dims, "atom"), log_base)
    s_field = von_neumann_entropy(partial_trace(joint, dims, "field"), log_base)
    s_joint = von_neumann_entropy(joint, log_base)
    lower = s_joint - abs(s_atom - s_field)
    upper = s_atom + s_field - s_joint
    return EntropyReport(
        s_atom=s_atom,
        s_field=s_field,
        s_joint=s_joint,
        dem=upper,
        araki_lieb_ok=(lower >= -AL_SLACK and upper >= -AL_SLACK),
        al_margins=(lower, upper),
    )


def araki_lieb_check(
    joint, dims: tuple[int, int], log_base: str = "e"
) -> tuple[bool, tuple[float, float]]:
    """Both entropy triangle bounds with AL_SLACK tolerance."""
    report = dem_exact(joint, dims, log_base)
    return report.araki_lieb_ok, report.al_margins


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > EIG_CLIP else 0.0


def dem_closed_form(coeffs: ClosedFormCoeffs, log_base: str = "e") -> float:
    """Analytic degree of entanglement, magnitude reading.

    -e1 log e1 - e4 log e4 + |e2| log |e2| + |e3| log |e3|, with the
    off-diagonal terms entering by magnitude.  Reduces to the binary
    entropy of (e1, e4) whenever the coherences vanish.
    """
    val = (
        -_xlogx(coeffs.e1)
        - _xlogx(coeffs.e4)
        + _xlogx(coeffs.e2_mag)
        + _xlogx(coeffs.e3_mag)
    )
    return val * _log_scale(log_base)


def dem_closed_form_spectral(coeffs: ClosedFormCoeffs, log_base: str = "e") -> float:
    """Analytic degree of entanglement, eigenvalue reading.

    Replaces the off-diagonal magnitude terms by the entropy of the full
    2x2 coefficient matrix [[e1, e2], [e3, e4]], whose eigenvalues are
    ((e1+e4) +- sqrt((e1-e4)^2 + 4|e2|^2))/2.  Diagnostic alternative to
    dem_closed_form; the two agree only where the coherences vanish
    together with one diagonal weight.
    """
    half_gap = 0.5 * math.sqrt(
        (coeffs.e1 - coeffs.e4) ** 2 + 4.0 * coeffs.e2_mag**2
    )
    mid = 0.5 * (coeffs.e1 + coeffs.e4)
    p_hi, p_lo = mid + half_gap, max(mid - half_gap, 0.0)
    val = -_xlogx(coeffs.e1) - _xlogx(coeffs.e4) + _xlogx(p_hi) + _xlogx(p_lo)
    return val * _log_scale(log_base)
