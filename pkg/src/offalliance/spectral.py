"""Largest Laplacian eigenvalue and the indicator-vector Rayleigh certificate."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InvalidParameterError
from .graph import Graph, VertexSet

DEFAULT_TOL = 1e-10
MAX_POWER_ITERS = 100_000
START_SEED = 20240611


@dataclass(frozen=True)
class SpectralReport:
    mu_star: float
    iterations: int
    residual: float
    rayleigh_witness: np.ndarray
    method: str  # "power" or "dense"

    def to_record(self) -> dict:
        return {"mu_star": self.mu_star, "iterations": self.iterations, "residual": self.residual,
                "method": self.method}


def _is_top(lap: np.ndarray, mu: float, margin: float = 1e-9) -> bool:
    """Cholesky succeeds on mu(1+margin) I - L exactly when no eigenvalue exceeds mu(1+margin)."""
    try:
        np.linalg.cholesky(mu * (1 + margin) * np.eye(len(lap)) - lap)
    except np.linalg.LinAlgError:
        return False
    return True


def laplacian_spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_POWER_ITERS) -> SpectralReport:
    """Power iteration on L = D - A from a fixed pseudo-random start vector.

    Stops once ``||L x - mu x|| <= tol * mu`` (unit x), then confirms no larger
    eigenvalue exists with a Cholesky test. If either step fails (no
    convergence after ``max_iter`` steps, or a start vector blind to the top
    eigenvector) the dense symmetric solver takes over.
    """
    if g.n < 2:
        raise InvalidParameterError("spectral radius needs at least two vertices")
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    lap = g.laplacian()
    # (1, 2, ..., n) is orthogonal to the top eigenvector of P_3 and other symmetric graphs
    x = np.random.default_rng(START_SEED).standard_normal(g.n)
    x /= np.linalg.norm(x)
    if g.m == 0:
        return SpectralReport(0.0, 0, 0.0, x, "power")
    mu = 0.0
    residual = np.inf
    it = 0
    for it in range(1, max_iter + 1):
        y = lap @ x
        mu = float(x @ y)
        residual = float(np.linalg.norm(y - mu * x))
        if residual <= tol * mu:
            if _is_top(lap, mu):
                return SpectralReport(mu, it, residual, x, "power")
            break
        norm = np.linalg.norm(y)
        if norm == 0.0:
            break
        x = y / norm
    vals, vecs = np.linalg.eigh(lap)
    top = vecs[:, -1]
    mu = float(vals[-1])
    residual = float(np.linalg.norm(lap @ top - mu * top))
    if residual > tol * max(mu, 1.0):
        raise ConvergenceError("dense fallback did not resolve the top eigenpair", residual)
    return SpectralReport(mu, it, residual, top, "dense")


def indicator_rayleigh(g: Graph, s: VertexSet) -> float:
    """``n * cut(S) / (|S| (n - |S|))``: the variational value of S's indicator vector."""
    k = len(s)
    if k == 0 or k == g.n:
        raise InvalidParameterError("indicator certificate needs a proper nonempty subset")
    cut = sum((g.masks[v] & s.mask).bit_count() for v in s.complement())
    return g.n * cut / (k * (g.n - k))


def fiedler_indicator_check(g: Graph, s: VertexSet, mu_star: float, tol: float = 1e-9) -> bool:
    return indicator_rayleigh(g, s) <= mu_star * (1 + tol)


def adjacency_eigenvalues(g: Graph) -> np.ndarray:
    return np.linalg.eigvalsh(g.adjacency_matrix())
