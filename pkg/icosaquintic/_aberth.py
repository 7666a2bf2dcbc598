"""Simultaneous polynomial root iteration."""

import logging
import typing

import numpy as np

from .errors import NoConvergence

logger = logging.getLogger(__name__)

# Backward error accepted when the sweep limit is reached.
RESIDUAL_TOL = 1e-10


def _initial_circle(coeffs: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = len(coeffs) - 1
    center = -coeffs[1] / (n * coeffs[0])
    nonzero = np.flatnonzero(coeffs[1:]) + 1
    # Largest |c_k/c_0|^(1/k) bounds the root moduli up to a factor 2.
    radius = max(
        (abs(coeffs[k] / coeffs[0]) ** (1.0 / k) for k in nonzero), default=1.0
    )
    radius = max(radius, 1e-3)
    angles = 2 * np.pi * (np.arange(n) + 0.25) / n + rng.uniform(-0.1, 0.1, n)
    return center + radius * np.exp(1j * angles)


def newton_polish(coeffs: np.ndarray, roots: np.ndarray, steps: int = 3) -> np.ndarray:
    """A few Newton steps per root, each kept only if it lowers ``|p|``."""
    deriv = np.polyder(coeffs)
    roots = np.array(roots, dtype=complex)
    for _ in range(steps):
        p = np.polyval(coeffs, roots)
        dp = np.polyval(deriv, roots)
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = roots - p / dp
        ok = np.isfinite(cand)
        ok[ok] &= np.abs(np.polyval(coeffs, cand[ok])) < np.abs(p[ok])
        roots[ok] = cand[ok]
    return roots


def aberth(
    coeffs: typing.Sequence[complex],
    *,
    init: typing.Optional[np.ndarray] = None,
    max_iter: int = 500,
    tol: float = 1e-14,
    seed: int = 0,
) -> np.ndarray:
    """All roots of a polynomial by Aberth-Ehrlich iteration.

    :param coeffs: Coefficients, highest degree first.
    :param init: Initial approximations; a perturbed circle when omitted.
    :param max_iter: Maximal number of sweeps.
    :param tol: Relative correction size at which iteration stops.
    :param seed: Seed of the initial perturbation.
    :return: Roots sorted by real then imaginary part.
    :raises NoConvergence: If an iterate becomes non-finite, or if
        ``max_iter`` sweeps end with a relative residual above
        :data:`RESIDUAL_TOL`.
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "f")
    if len(c) == 0:
        raise ValueError("Zero polynomial has no roots")
    n = len(c) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    c = c / c[0]
    deriv = np.polyder(c)
    rng = np.random.default_rng(seed)
    z = _initial_circle(c, rng) if init is None else np.array(init, dtype=complex)
    converged = False
    for it in range(max_iter):
        p = np.polyval(c, z)
        dp = np.polyval(deriv, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            w = ratio / (1.0 - ratio * inv.sum(axis=1))
        w[p == 0] = 0.0
        bad = ~np.isfinite(w)
        if bad.any():
            w[bad] = 1e-8 * rng.standard_normal(bad.sum())
        z = z - w
        if not np.all(np.isfinite(z)):
            raise NoConvergence(f"Aberth iteration diverged after {it} sweeps")
        if np.max(np.abs(w) / np.maximum(1.0, np.abs(z))) < tol:
            logger.debug("Aberth converged in %d sweeps (degree %d)", it + 1, n)
            converged = True
            break
    z = newton_polish(c, z)
    if not converged:
        worst = float(np.max(relative_residuals(c, z)))
        if worst > RESIDUAL_TOL:
            raise NoConvergence(
                f"Aberth iteration stopped at {max_iter} sweeps with residual {worst:.3g}"
            )
        logger.debug("Aberth stopped at %d sweeps (degree %d), residual %.3g", max_iter, n, worst)
    return sort_roots(z)


def relative_residuals(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """``|p(z)| / Σ|c_k|·|z|^k`` for each root."""
    value = np.abs(np.polyval(coeffs, roots))
    scale = np.polyval(np.abs(coeffs), np.abs(roots))
    return value / np.where(scale > 0, scale, 1.0)


def sort_roots(roots: typing.Iterable[complex]) -> np.ndarray:
    """Sort by real part, then imaginary part."""
    arr = np.asarray(list(roots), dtype=complex)
    order = np.lexsort((arr.imag, arr.real))
    return arr[order]
