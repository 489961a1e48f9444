"""Discrete orthogonal polynomials on the Laplacian spectrum.

Polynomials are dense real coefficient arrays in ascending degree order with
trailing zeros trimmed; the zero polynomial is the empty array.  The measure
places weight m_i/n on each distinct Laplacian eigenvalue theta_i, defining

    <p, q> = sum_i w_i p(theta_i) q(theta_i).

The predistance polynomials r_0..r_d are the orthogonal sequence for this
measure normalized so that <r_i, r_i> = r_i(0); they satisfy the three-term
recurrence

    x r_i = beta_{i-1} r_{i-1} + alpha_i r_i + gamma_{i+1} r_{i+1}

with beta_{-1} = gamma_{d+1} = 0, all betas and gammas negative, and
alpha_i + beta_i + gamma_i = 0.  The degree-d value at zero, r_d(0), is the
spectral excess; the Hoffman polynomial H = sum_i r_i satisfies H(L) = J.

Construction uses the Stieltjes recurrence for the monic sequence (never a
Gram matrix on the monomial basis, which is ill-conditioned) and all inner
products are taken on node values propagated through the same recurrence.
The returned coefficient arrays are exact representations of slightly
perturbed polynomials: at degrees past roughly a dozen, re-evaluating a
polynomial from its monomial coefficients loses accuracy to cancellation,
which is inherent to that basis rather than to the construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import DistinctSpectrum

# Guard for the theoretically impossible q_i(0) = 0 breakdown.
_BREAKDOWN_TOL = 1e-12


class OrthopolyBreakdownError(RuntimeError):
    """A constructed orthogonal polynomial vanished at 0, which cannot
    happen for a valid spectral measure; signals a numerical breakdown or a
    misclustered spectrum."""


# ---------------------------------------------------------------------------
# Polynomial helpers (coefficients ascending, zero polynomial = empty array)
# ---------------------------------------------------------------------------

def trim(coeffs) -> np.ndarray:
    """Drop trailing zero coefficients; the zero polynomial becomes empty."""
    c = np.asarray(coeffs, dtype=float)
    nz = np.nonzero(c)[0]
    if len(nz) == 0:
        return np.zeros(0)
    return c[: nz[-1] + 1].copy()


def poly_add(p, q) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    out = np.zeros(max(len(p), len(q)))
    out[: len(p)] += p
    out[: len(q)] += q
    return trim(out)


def poly_mul(p, q) -> np.ndarray:
    if len(p) == 0 or len(q) == 0:
        return np.zeros(0)
    return trim(np.convolve(p, q))


def eval_scalar(p, x: float) -> float:
    """Horner evaluation of an ascending coefficient array at a scalar."""
    acc = 0.0
    for c in reversed(np.asarray(p, dtype=float)):
        acc = acc * x + c
    return float(acc)


def eval_nodes(p, xs: np.ndarray) -> np.ndarray:
    """Horner evaluation at an array of points."""
    xs = np.asarray(xs, dtype=float)
    acc = np.zeros_like(xs)
    for c in reversed(np.asarray(p, dtype=float)):
        acc = acc * xs + c
    return acc


def eval_matrix(p, m: np.ndarray) -> np.ndarray:
    """Horner evaluation at a square symmetric matrix.

    The exact result is symmetric because it is a polynomial in a symmetric
    matrix; floating-point products stray by rounding only, so the output is
    symmetrized.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    acc = np.zeros((n, n))
    eye = np.eye(n)
    for c in reversed(np.asarray(p, dtype=float)):
        acc = acc @ m + c * eye
    return (acc + acc.T) / 2.0


def compose_affine(p, c0: float, c1: float) -> np.ndarray:
    """Coefficients of p(c0 + c1*x), by Horner in the polynomial ring."""
    acc = np.zeros(0)
    shift = np.array([c0, c1])
    for c in reversed(np.asarray(p, dtype=float)):
        acc = poly_add(poly_mul(acc, shift), np.array([c]))
    return acc


# ---------------------------------------------------------------------------
# The spectral measure and its orthogonal system
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralMeasure:
    """Discrete probability measure on the distinct Laplacian eigenvalues:
    weight m_i/n at node theta_i, with theta_0 = 0."""

    thetas: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if len(self.thetas) != len(self.weights):
            raise ValueError("thetas and weights must have equal length")
        if self.thetas[0] != 0.0:
            raise ValueError(f"first node must be 0, got {self.thetas[0]}")
        if np.any(np.diff(self.thetas) <= 0):
            raise ValueError("nodes must be strictly ascending")
        if np.any(self.weights <= 0):
            raise ValueError("weights must be positive")
        total = float(self.weights.sum())
        if abs(total - 1.0) > 1e-12 * len(self.weights):
            raise ValueError(f"weights must sum to 1, got {total}")

    @classmethod
    def from_spectrum(cls, s: DistinctSpectrum) -> "SpectralMeasure":
        return cls(s.thetas.copy(), s.mults / s.n)

    @property
    def d(self) -> int:
        return len(self.thetas) - 1


def inner_product(p, q, mu: SpectralMeasure) -> float:
    """<p, q> = sum_i w_i p(theta_i) q(theta_i).

    Exact weighted sum over the d+1 nodes.  For arguments of degree beyond
    d the form is degenerate (it only sees values on the nodes), which is
    exactly what the recurrence projections need.
    """
    return float(np.sum(mu.weights * eval_nodes(p, mu.thetas) * eval_nodes(q, mu.thetas)))


@dataclass(frozen=True)
class PredistanceSystem:
    """The polynomials r_0..r_d with their recurrence coefficients.

    polys[i] has degree exactly i.  alpha has d+1 entries (alpha_0..alpha_d);
    beta holds beta_0..beta_{d-1} and gamma holds gamma_1..gamma_d, both
    empty when d = 0.
    """

    polys: list
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray

    @property
    def d(self) -> int:
        return len(self.polys) - 1


def predistance_system(mu: SpectralMeasure) -> PredistanceSystem:
    """Build the predistance polynomials and their recurrence coefficients.

    Stieltjes procedure for the monic orthogonal sequence q_i (tracking
    both coefficient arrays and node values), then the rescaling
    r_i = (q_i(0)/<q_i, q_i>) q_i so that <r_i, r_i> = r_i(0).  The
    recurrence coefficients are read off by projecting x*r_i onto the
    r-basis:

        alpha_i    = <x r_i, r_i>   / <r_i, r_i>
        gamma_{i+1} = <x r_i, r_{i+1}> / <r_{i+1}, r_{i+1}>
        beta_i     = <x r_{i+1}, r_i> / <r_i, r_i>
    """
    thetas = mu.thetas
    w = mu.weights
    d = mu.d

    # Monic sequence: coefficients and node values side by side.
    q_coeffs = [np.array([1.0])]
    q_vals = [np.ones(d + 1)]
    q_norm2 = [float(w.sum())]
    for i in range(d):
        a_i = float(np.sum(w * thetas * q_vals[i] ** 2)) / q_norm2[i]
        nxt = np.concatenate(([0.0], q_coeffs[i]))  # x * q_i
        nxt[: i + 1] -= a_i * q_coeffs[i]
        vals = (thetas - a_i) * q_vals[i]
        if i > 0:
            b_i = q_norm2[i] / q_norm2[i - 1]
            nxt[: i] -= b_i * q_coeffs[i - 1]
            vals = vals - b_i * q_vals[i - 1]
        q_coeffs.append(nxt)
        q_vals.append(vals)
        q_norm2.append(float(np.sum(w * vals**2)))

    polys = []
    r_vals = []
    r_norm2 = []
    for i in range(d + 1):
        at_zero = q_coeffs[i][0]
        if abs(at_zero) <= _BREAKDOWN_TOL * np.sqrt(q_norm2[i]):
            raise OrthopolyBreakdownError(
                f"orthogonal polynomial of degree {i} vanishes at 0 "
                f"(value {at_zero:g}); misclustered spectrum suspected"
            )
        scale = at_zero / q_norm2[i]
        polys.append(scale * q_coeffs[i])
        r_vals.append(scale * q_vals[i])
        r_norm2.append(scale * scale * q_norm2[i])

    alpha = np.zeros(d + 1)
    beta = np.zeros(d)
    gamma = np.zeros(d)
    for i in range(d + 1):
        x_ri = thetas * r_vals[i]
        alpha[i] = float(np.sum(w * x_ri * r_vals[i])) / r_norm2[i]
        if i < d:
            gamma[i] = float(np.sum(w * x_ri * r_vals[i + 1])) / r_norm2[i + 1]
            beta[i] = float(np.sum(w * (thetas * r_vals[i + 1]) * r_vals[i])) / r_norm2[i]
    return PredistanceSystem(polys, alpha, beta, gamma)


def hoffman_polynomial(mu: SpectralMeasure, n: int) -> np.ndarray:
    """The degree-d polynomial (n/phi_0) * prod_{i=1..d} (x - theta_i),
    where phi_0 = prod_{i>=1} (0 - theta_i).

    Satisfies H(0) = n by construction, H(L) = J on the graph's Laplacian,
    and H = r_0 + ... + r_d.
    """
    h = np.array([1.0])
    phi0 = 1.0
    for theta in mu.thetas[1:]:
        h = poly_mul(h, np.array([-theta, 1.0]))
        phi0 *= -theta
    return trim(n / phi0 * h)


def spectral_excess_closed_form(mu: SpectralMeasure, phis: np.ndarray, n: int) -> float:
    """r_d(0) directly from the spectrum:

        n * ( sum_i phi_0^2 / (m_i phi_i^2) )^(-1)

    with m_i the eigenvalue multiplicities (n * weights).
    """
    mults = mu.weights * n
    total = float(np.sum(phis[0] ** 2 / (mults * phis**2)))
    return n / total
