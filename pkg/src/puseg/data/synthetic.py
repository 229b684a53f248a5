"""Synthetic curvilinear-structure image generator.

Produces small grayscale images containing bright smooth curves on a dark
background, together with exact ground-truth masks and centerlines. Noise
profiles emulate per-image distribution shift: speckle adds point-like
bright clutter, artifact bands add smooth elongated ridges whose intensity
overlaps the vessel intensity range.
"""

from __future__ import annotations

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.ndimage import gaussian_filter
from scipy.spatial import cKDTree

from .types import ImageSample

NOISE_PROFILES = ("clean", "speckle", "artifact_bands", "mixed")
_BASE_PROFILES = ("clean", "speckle", "artifact_bands")

_FG_MIN, _FG_MAX = 0.01, 0.30
_MAX_ATTEMPTS = 40


def generate_synthetic(
    seed: int,
    n_images: int,
    size: tuple[int, int],
    noise_profile: str = "mixed",
) -> list[ImageSample]:
    """Generate ``n_images`` samples of shape ``size`` with ground truth.

    Deterministic in ``seed``. Foreground fraction of every mask is kept
    inside (0.01, 0.30) by regenerating out-of-bounds draws. With
    ``noise_profile="mixed"`` the three base profiles are assigned in a
    seed-shuffled cycle so consecutive images differ.
    """
    h, w = int(size[0]), int(size[1])
    if h < 32 or w < 32:
        raise ValueError(f"image size must be at least 32x32, got {h}x{w}")
    if noise_profile not in NOISE_PROFILES:
        raise ValueError(f"unknown noise profile {noise_profile!r}")

    rng = np.random.default_rng(seed)
    if noise_profile == "mixed":
        order = [_BASE_PROFILES[j] for j in rng.permutation(len(_BASE_PROFILES))]
        profiles = [order[i % len(order)] for i in range(n_images)]
    else:
        profiles = [noise_profile] * n_images

    samples = []
    for i in range(n_images):
        for attempt in range(_MAX_ATTEMPTS):
            pixels, mask, centerline = _render_image(rng, h, w, profiles[i])
            frac = mask.mean()
            if _FG_MIN < frac < _FG_MAX:
                break
        else:
            raise RuntimeError("could not generate mask within foreground bounds")
        samples.append(
            ImageSample(
                id=f"img{i:03d}",
                pixels=pixels,
                mask=mask,
                centerline=centerline,
                role="labeled",
            )
        )
    return samples


def _render_image(rng, h, w, profile):
    background = rng.uniform(0.08, 0.18)
    canvas = np.full((h, w), background, dtype=np.float64)
    mask = np.zeros((h, w), dtype=np.uint8)
    centerline: list[tuple[int, int]] = []

    n_curves = int(rng.integers(2, 5))
    rows = np.arange(h, dtype=np.float64)
    cols = np.arange(w, dtype=np.float64)
    grid = np.stack(np.meshgrid(rows, cols, indexing="ij"), axis=-1).reshape(-1, 2)

    seen = set()
    for _ in range(n_curves):
        pts = _curve_points(rng, h, w)
        width = float(rng.integers(1, 4))
        amp = rng.uniform(0.65, 0.95)

        dist = cKDTree(pts).query(grid, workers=1)[0].reshape(h, w)
        radius = width / 2.0
        body = dist <= radius
        profile_int = np.where(
            body, amp, amp * np.exp(-(((dist - radius) / 0.6) ** 2))
        )
        np.maximum(canvas, background + profile_int, out=canvas)

        mask |= body.astype(np.uint8)
        for r, c in _rasterize(pts, h, w):
            mask[r, c] = 1
            if (r, c) not in seen:
                seen.add((r, c))
                centerline.append((r, c))

    canvas = gaussian_filter(canvas, sigma=0.5)
    canvas = _apply_noise(rng, canvas, profile)
    return np.clip(canvas, 0.0, 1.0), mask, centerline


def _curve_points(rng, h, w):
    """Sample a smooth open curve as dense float points, clipped to bounds.

    Two endpoints at least 60% of the short side apart, two interior
    control points with bounded perpendicular jitter; cubic-spline
    interpolation keeps curvature gentle enough for ridge tracing.
    """
    margin = 3.0
    short = min(h, w)
    for _ in range(100):
        p0 = rng.uniform([margin, margin], [h - margin, w - margin])
        p1 = rng.uniform([margin, margin], [h - margin, w - margin])
        if np.linalg.norm(p1 - p0) >= 0.6 * short:
            break
    chord = p1 - p0
    length = np.linalg.norm(chord)
    normal = np.array([-chord[1], chord[0]]) / max(length, 1e-9)

    t_knots = np.array([0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0])
    knots = np.stack(
        [
            p0,
            p0 + chord / 3.0 + normal * rng.uniform(-0.16, 0.16) * length,
            p0 + 2.0 * chord / 3.0 + normal * rng.uniform(-0.16, 0.16) * length,
            p1,
        ]
    )
    spline = CubicSpline(t_knots, knots, axis=0)
    t = np.linspace(0.0, 1.0, max(int(3 * length), 16))
    pts = spline(t)
    pts[:, 0] = np.clip(pts[:, 0], 0, h - 1)
    pts[:, 1] = np.clip(pts[:, 1], 0, w - 1)
    return pts


def _rasterize(pts, h, w):
    """Round dense curve samples to unique integer pixels, in path order."""
    seen = set()
    out = []
    for r, c in np.rint(pts).astype(int):
        r = min(max(r, 0), h - 1)
        c = min(max(c, 0), w - 1)
        if (r, c) not in seen:
            seen.add((r, c))
            out.append((r, c))
    return out


def _apply_noise(rng, img, profile):
    h, w = img.shape
    if profile == "clean":
        img = img + rng.normal(0.0, 0.02, img.shape)
    elif profile == "speckle":
        img = img * (1.0 + rng.normal(0.0, 0.20, img.shape))
        n_salt = max(1, int(0.015 * img.size))
        rr = rng.integers(0, h, n_salt)
        cc = rng.integers(0, w, n_salt)
        img[rr, cc] = np.maximum(img[rr, cc], rng.uniform(0.45, 0.85, n_salt))
        img = img + rng.normal(0.0, 0.02, img.shape)
    elif profile == "artifact_bands":
        img = img + _band_field(rng, img.shape)
        img = img + rng.normal(0.0, 0.02, img.shape)
    else:
        raise ValueError(f"unknown noise profile {profile!r}")
    return img


def _band_field(rng, shape):
    """Smooth oriented ridges whose crests overlap vessel intensity."""
    h, w = shape
    rr, cc = np.mgrid[0:h, 0:w].astype(np.float64)
    field = np.zeros(shape, dtype=np.float64)
    for _ in range(int(rng.integers(2, 5))):
        theta = rng.uniform(0.0, np.pi)
        period = rng.uniform(10.0, 28.0)
        phase = rng.uniform(0.0, 2.0 * np.pi)
        amp = rng.uniform(0.28, 0.50)
        u = np.cos(theta) * cc + np.sin(theta) * rr
        crest = np.maximum(0.0, np.sin(2.0 * np.pi * u / period + phase)) ** 3
        np.maximum(field, amp * crest, out=field)
    return field
