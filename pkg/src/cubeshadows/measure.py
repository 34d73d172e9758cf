"""How rare satisfying directions become as the dimension grows.

Sampling uses one Philox stream per sample, keyed by (seed, sample
index), so results are bit-identical no matter how the work is chunked
or ordered. The criterion product is scale invariant, so statistics are
computed on raw Gaussian vectors without normalizing each one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DegenerateSample, InvalidDimension
from .geometry import UnitVector

MAX_RETRIES = 100
MIN_GAUSS_NORM = 1e-8


@dataclass(frozen=True)
class MeasureEstimate:
    """Summary statistics of the criterion product for one dimension."""

    n: int
    samples: int
    seed: int
    frac_satisfying: float
    mean_product: float
    median_product: float
    q05: float
    q95: float
    growth_ratio: Optional[float]


def _gaussian(n: int, seed: int, index: int, retry: int) -> np.ndarray:
    key = np.array([seed, index], dtype=np.uint64)
    counter = np.array([retry, 0, 0, 0], dtype=np.uint64)
    gen = np.random.Generator(np.random.Philox(key=key, counter=counter))
    return gen.standard_normal(n)


def _gaussian_nonzero(n: int, seed: int, index: int) -> np.ndarray:
    for retry in range(MAX_RETRIES):
        g = _gaussian(n, seed, index, retry)
        if float(np.linalg.norm(g)) >= MIN_GAUSS_NORM:
            return g
    raise DegenerateSample(
        f"no usable Gaussian vector after {MAX_RETRIES} draws "
        f"(n={n}, seed={seed}, index={index})"
    )


def sample_sphere(n: int, seed: int, index: int = 0) -> UnitVector:
    """Uniform point on the unit sphere in dimension n.

    The (seed, index) pair addresses an independent stream, so
    sample_sphere(n, seed, i) is reproducible in isolation; no generator
    state is shared between samples.
    """
    if n < 1:
        raise InvalidDimension(f"need n >= 1, got n={n}")
    return UnitVector(_gaussian_nonzero(n, seed, index))


def criterion_product_raw(g: np.ndarray) -> float:
    """Criterion product of g / ||g||_2, computed without normalizing."""
    a = np.abs(g)
    return float(np.sum(a) * np.max(a) / (g @ g))


def _product_values(n: int, samples: int, seed: int) -> np.ndarray:
    vals = np.empty(samples, dtype=np.float64)
    for i in range(samples):
        vals[i] = criterion_product_raw(_gaussian_nonzero(n, seed, i))
    return vals


def _nearest_rank(sorted_vals: np.ndarray, p: float) -> float:
    # classic nearest-rank definition: smallest value with cdf >= p
    k = max(1, math.ceil(p * sorted_vals.size))
    return float(sorted_vals[k - 1])


def estimate(n: int, samples: int, seed: int) -> MeasureEstimate:
    """Sample the criterion product and summarize its distribution.

    frac_satisfying counts products <= 2, the threshold's inclusive
    side. growth_ratio is median / sqrt(ln n), reported only for n >= 3
    where the normalization is meaningful.
    """
    if n < 1:
        raise InvalidDimension(f"need n >= 1, got n={n}")
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    vals = _product_values(n, samples, seed)
    ordered = np.sort(vals)
    median = _nearest_rank(ordered, 0.5)
    ratio = median / math.sqrt(math.log(n)) if n >= 3 else None
    return MeasureEstimate(
        n=n,
        samples=samples,
        seed=seed,
        frac_satisfying=float(np.count_nonzero(vals <= 2.0) / samples),
        mean_product=float(np.mean(vals)),
        median_product=median,
        q05=_nearest_rank(ordered, 0.05),
        q95=_nearest_rank(ordered, 0.95),
        growth_ratio=ratio,
    )


def growth_scan(
    dims: Sequence[int], samples: int, seed: int
) -> list[MeasureEstimate]:
    """One estimate per dimension, for watching the median's drift upward."""
    for n in dims:
        if n < 3:
            raise InvalidDimension(
                f"growth statistics need n >= 3, got n={n}"
            )
    return [estimate(n, samples, seed) for n in dims]
