"""Largest value of the criterion product on the unit sphere.

The product l1(u) * sup(u) is invariant under permutations and sign
flips, so its maximum lives in the nonnegative orthant with one
designated largest coordinate. There it equals u_0 * (u_0 + ... +
u_{n-1}), whose constrained maximum has the closed form (sqrt(n) + 1)/2
attained at one heavy coordinate with the rest equal and light. The
numerical ascent exists to confirm that algebra independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimension, NonConvergence
from .geometry import UnitVector, norms


@dataclass(frozen=True, eq=False)
class ExtremalResult:
    """Closed-form maximum for one dimension, with its attaining point."""

    n: int
    max_value: float
    maximizer: UnitVector
    achieved_value: float
    threshold_ok: bool


@dataclass(frozen=True, eq=False)
class AscentResult:
    """Outcome of projected gradient ascent from several starts."""

    n: int
    value: float
    point: UnitVector
    grad_norm: float
    iterations: int
    restarts_converged: int


def closed_form_max(n: int) -> float:
    if n < 1:
        raise InvalidDimension(f"need n >= 1, got n={n}")
    return (math.sqrt(n) + 1.0) / 2.0


def maximizer(n: int) -> UnitVector:
    """The point attaining closed_form_max(n).

    One coordinate carries weight a = sqrt((1 + 1/sqrt(n)) / 2); the
    remaining n - 1 share the rest equally with b = 1 / (2 a sqrt(n)).
    Then a^2 + (n-1) b^2 = 1 and a * (a + (n-1) b) = (sqrt(n) + 1)/2.
    """
    if n < 1:
        raise InvalidDimension(f"need n >= 1, got n={n}")
    if n == 1:
        return UnitVector(np.array([1.0]))
    r = math.sqrt(n)
    a = math.sqrt((1.0 + 1.0 / r) / 2.0)
    b = 1.0 / (2.0 * a * r)
    coords = np.full(n, b)
    coords[0] = a
    return UnitVector(coords)


def criterion_product(u: UnitVector) -> float:
    """The quantity being maximized: l1 norm times sup norm."""
    m = norms(u)
    return m.l1 * m.linf


def stationarity_residual(u: UnitVector) -> float:
    """Tangent gradient norm of the smooth surrogate at u.

    Folds u into the nonnegative orthant, designates its largest
    coordinate, and measures the Riemannian gradient of
    w_j * (w_0 + ... + w_{n-1}) on the sphere. Zero at the maximizer.
    """
    w = np.abs(u.coords)
    j = int(np.argmax(w))
    grad = np.full(u.n, w[j])
    grad[j] += math.fsum(w)
    rg = grad - float(grad @ w) * w
    return float(np.linalg.norm(rg))


def numerical_max(
    n: int,
    restarts: int = 8,
    seed: int = 0,
    grad_tol: float = 1e-11,
    max_iters: int = 100_000,
) -> AscentResult:
    """Maximize the criterion product by gradient ascent on the sphere.

    Each restart begins at a random nonnegative direction with the
    designated coordinate boosted, follows the Riemannian gradient of
    the surrogate with a fixed step, and renormalizes after every move.
    Raises NonConvergence (carrying the best point seen) if no restart
    drives the tangent gradient below grad_tol.
    """
    if n < 1:
        raise InvalidDimension(f"need n >= 1, got n={n}")
    step = 0.1 / math.sqrt(n)

    best = None  # best converged restart: (value, point, gn, iters)
    fallback = None  # best seen overall, for the failure payload
    converged = 0
    for r in range(restarts):
        key = np.array([seed, r], dtype=np.uint64)
        rng = np.random.Generator(np.random.Philox(key=key))
        w = np.abs(rng.standard_normal(n))
        w[0] += 1.0
        w /= np.linalg.norm(w)

        gn = np.inf
        it = 0
        for it in range(max_iters):
            grad = np.full(n, w[0])
            grad[0] += float(np.sum(w))
            rg = grad - float(grad @ w) * w
            gn = float(np.linalg.norm(rg))
            if gn <= grad_tol:
                break
            w = w + step * rg
            w /= np.linalg.norm(w)
        point = UnitVector(w)
        value = criterion_product(point)
        if fallback is None or value > fallback[0]:
            fallback = (value, point, gn, it)
        if gn <= grad_tol:
            converged += 1
            if best is None or value > best[0]:
                best = (value, point, gn, it)

    if best is None:
        raise NonConvergence(
            f"no restart reached grad_tol={grad_tol} within "
            f"{max_iters} iterations (n={n})",
            best_value=fallback[0],
            best_point=fallback[1],
        )
    return AscentResult(
        n=n,
        value=best[0],
        point=best[1],
        grad_norm=best[2],
        iterations=best[3],
        restarts_converged=converged,
    )


def threshold_dimension(threshold: float = 2.0) -> int:
    """Largest n whose maximum still fits under the threshold."""
    n = 1
    while closed_form_max(n + 1) <= threshold:
        n += 1
    return n


def summarize(n: int) -> ExtremalResult:
    point = maximizer(n)
    return ExtremalResult(
        n=n,
        max_value=closed_form_max(n),
        maximizer=point,
        achieved_value=criterion_product(point),
        threshold_ok=closed_form_max(n) <= 2.0,
    )
