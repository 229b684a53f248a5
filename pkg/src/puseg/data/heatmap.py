"""Ground-truth heatmap construction from centerline annotations."""

from __future__ import annotations

import numpy as np

from .types import HeatmapTarget


def build_heatmap(
    centerline: list[tuple[int, int]] | None,
    shape: tuple[int, int],
    sigma: float = 2.0,
) -> HeatmapTarget:
    """Render centerline points as a max-combined Gaussian heatmap.

    Each annotated point contributes exp(-d^2 / (2 sigma^2)); overlapping
    contributions are combined with a pointwise maximum so every annotated
    point keeps value exactly 1.0 and the range stays within [0, 1].

    An empty centerline yields an all-zero heatmap.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    h, w = int(shape[0]), int(shape[1])
    values = np.zeros((h, w), dtype=np.float64)
    if not centerline:
        return HeatmapTarget(values=values, sigma=sigma)

    rows = np.arange(h, dtype=np.float64)[:, None]
    cols = np.arange(w, dtype=np.float64)[None, :]
    inv = 1.0 / (2.0 * sigma * sigma)
    for r, c in centerline:
        if not (0 <= r < h and 0 <= c < w):
            raise ValueError(f"centerline point ({r}, {c}) outside {h}x{w} grid")
        d2 = (rows - float(r)) ** 2 + (cols - float(c)) ** 2
        np.maximum(values, np.exp(-d2 * inv), out=values)
    return HeatmapTarget(values=values, sigma=sigma)
