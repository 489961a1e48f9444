"""Dense symmetric eigensolver and spectral bookkeeping.

The solver is a self-contained cyclic Jacobi iteration: deterministic,
dependency-free, and accurate to near machine precision for the dense
desk-scale matrices this package works with (n up to ~1000).  Raw
eigenvalues are then clustered into distinct values with multiplicities,
which is the form the rest of the pipeline consumes.

Pure functions on immutable inputs; the Jacobi sweep mutates only a local
work copy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Sweep convergence: off-diagonal Frobenius norm relative to the full
# Frobenius norm of the input matrix.
_JACOBI_REL_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100

DEFAULT_CLUSTER_TOL = 1e-8


class JacobiConvergenceError(RuntimeError):
    """The Jacobi sweep budget was exhausted before convergence."""


class SpectrumClusterError(ValueError):
    """The clustered spectrum is not a valid connected-graph Laplacian
    spectrum (zero eigenvalue missing or repeated, or a negative value)."""


def eigenvalues_sym(m: np.ndarray, max_sweeps: int = _JACOBI_MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a dense symmetric matrix, sorted ascending.

    Cyclic Jacobi rotations, sweeping until the off-diagonal Frobenius norm
    drops below 1e-12 times the Frobenius norm of the input, with a hard
    sweep cap.  Deterministic: identical input yields bit-identical output.

    Raises :class:`JacobiConvergenceError` if the sweep budget runs out and
    ValueError if the input is not square and symmetric.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if not np.array_equal(a, a.T):
        asym = float(np.abs(a - a.T).max())
        if asym > 1e-12 * max(1.0, float(np.abs(a).max())):
            raise ValueError(f"matrix is not symmetric (max asymmetry {asym:g})")
        a = (a + a.T) / 2.0
    if n == 1:
        return a[0, :1].copy()

    frob = float(np.linalg.norm(a))
    threshold = _JACOBI_REL_TOL * frob

    def off_norm() -> float:
        return float(np.linalg.norm(a - np.diag(np.diagonal(a))))

    sweeps = 0
    off = off_norm()
    while off > threshold:
        if sweeps >= max_sweeps:
            raise JacobiConvergenceError(
                f"no convergence after {sweeps} sweeps "
                f"(off-diagonal norm {off:g}, target {threshold:g})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                # Smaller-magnitude root of t^2 + 2 theta t - 1 = 0.
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = off_norm()
    return np.sort(np.diagonal(a).copy())


@dataclass(frozen=True)
class DistinctSpectrum:
    """Distinct eigenvalues with multiplicities, ascending.

    For a connected graph Laplacian: thetas[0] is exactly 0 with
    multiplicity 1 and all other values are positive.  ``d`` is the number
    of distinct eigenvalues minus one.  ``min_gap`` is the smallest gap
    between consecutive distinct values (inf when d = 0), recorded so the
    clustering tolerance can be audited against the actual spectrum.
    """

    thetas: np.ndarray
    mults: np.ndarray

    @property
    def d(self) -> int:
        return len(self.thetas) - 1

    @property
    def n(self) -> int:
        return int(self.mults.sum())

    @property
    def min_gap(self) -> float:
        if self.d == 0:
            return math.inf
        return float(np.diff(self.thetas).min())


def cluster_spectrum(raw: np.ndarray, tol: float = DEFAULT_CLUSTER_TOL) -> DistinctSpectrum:
    """Group raw ascending eigenvalues into distinct values with multiplicities.

    Greedy left-to-right: a value joins the current cluster when its gap to
    the previous value is at most ``tol * max(1, spectral radius)``.  Each
    cluster's value is the mean of its members.  The smallest cluster is
    then validated as the simple zero eigenvalue of a connected Laplacian
    and snapped to exactly 0.

    Raises :class:`SpectrumClusterError` when the zero eigenvalue is
    missing or repeated (disconnected input, unreachable for graphs built
    by this package) or when a value is negative beyond tolerance.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.ndim != 1 or len(raw) == 0:
        raise ValueError("raw spectrum must be a nonempty 1-d array")
    if tol <= 0:
        raise ValueError(f"clustering tolerance must be positive, got {tol}")
    if np.any(np.diff(raw) < 0):
        raise ValueError("raw spectrum must be sorted ascending")

    radius = float(np.abs(raw).max())
    tol_abs = tol * max(1.0, radius)

    thetas = []
    mults = []
    start = 0
    for i in range(1, len(raw) + 1):
        if i == len(raw) or raw[i] - raw[i - 1] > tol_abs:
            members = raw[start:i]
            thetas.append(float(members.mean()))
            mults.append(len(members))
            start = i

    if abs(thetas[0]) > tol_abs:
        raise SpectrumClusterError(
            f"smallest eigenvalue {thetas[0]:g} is not zero within tolerance "
            f"{tol_abs:g}; not a connected-graph Laplacian spectrum"
        )
    if raw[0] < -tol_abs:
        raise SpectrumClusterError(
            f"negative eigenvalue {raw[0]:g} below -{tol_abs:g}"
        )
    if mults[0] != 1:
        raise SpectrumClusterError(
            f"zero eigenvalue has multiplicity {mults[0]}; the graph is not "
            "connected"
        )
    thetas[0] = 0.0
    return DistinctSpectrum(np.array(thetas), np.array(mults, dtype=int))


def phi_products(s: DistinctSpectrum) -> np.ndarray:
    """For each distinct eigenvalue, the product of its gaps to all others:
    phi_i = prod_{j != i} (theta_i - theta_j).

    Signs alternate as (-1)^(d-i) because the values are strictly
    increasing.  d = 0 gives the empty product [1].
    """
    thetas = s.thetas
    k = len(thetas)
    phis = np.ones(k)
    for i in range(k):
        for j in range(k):
            if j != i:
                phis[i] *= thetas[i] - thetas[j]
    return phis


def idempotent(lap: np.ndarray, s: DistinctSpectrum, i: int) -> np.ndarray:
    """Spectral projector onto the eigenspace of theta_i, computed as the
    matrix polynomial (1/phi_i) * prod_{j != i} (L - theta_j I).

    No eigenvectors are materialized.  The projector for theta_0 = 0 of a
    connected Laplacian is J/n.  Output is symmetrized.
    """
    if not 0 <= i <= s.d:
        raise IndexError(f"eigenvalue index {i} out of range 0..{s.d}")
    n = lap.shape[0]
    phis = phi_products(s)
    f = np.eye(n)
    for j in range(s.d + 1):
        if j != i:
            f = f @ (lap - s.thetas[j] * np.eye(n))
    f /= phis[i]
    return (f + f.T) / 2.0
