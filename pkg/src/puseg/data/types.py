"""Core sample and split containers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import MissingAnnotation, SplitError

ROLES = ("labeled", "unlabeled", "test")


@dataclass
class ImageSample:
    """A grayscale image with optional dense mask / centerline annotation.

    ``pixels`` is (H, W) with values in [0, 1]. ``mask`` when present is a
    binary (H, W) array (1 = foreground). ``centerline`` is a list of
    (row, col) integer coordinates inside the image.
    """

    id: str
    pixels: np.ndarray
    mask: np.ndarray | None = None
    centerline: list[tuple[int, int]] | None = None
    role: str = "labeled"

    def __post_init__(self):
        self.pixels = np.asarray(self.pixels, dtype=np.float64)
        if self.pixels.ndim != 2:
            raise ValueError(f"pixels must be 2-D, got shape {self.pixels.shape}")
        if self.pixels.min() < 0.0 or self.pixels.max() > 1.0:
            raise ValueError(f"pixel values outside [0, 1] for sample {self.id!r}")
        if self.mask is not None:
            self.mask = np.asarray(self.mask)
            if self.mask.shape != self.pixels.shape:
                raise ValueError(
                    f"mask shape {self.mask.shape} != pixels shape {self.pixels.shape}"
                )
            vals = np.unique(self.mask)
            if not np.isin(vals, (0, 1)).all():
                raise ValueError(f"mask values must be in {{0, 1}}, got {vals}")
            self.mask = self.mask.astype(np.uint8)
        if self.centerline is not None:
            h, w = self.pixels.shape
            pts = []
            for r, c in self.centerline:
                r, c = int(r), int(c)
                if not (0 <= r < h and 0 <= c < w):
                    raise ValueError(
                        f"centerline point ({r}, {c}) outside {h}x{w} image {self.id!r}"
                    )
                pts.append((r, c))
            self.centerline = pts
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}, got {self.role!r}")
        if self.role == "labeled" and self.mask is None and self.centerline is None:
            raise MissingAnnotation(
                f"labeled sample {self.id!r} has neither mask nor centerline"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape

    def with_role(self, role: str) -> "ImageSample":
        return ImageSample(
            id=self.id,
            pixels=self.pixels,
            mask=self.mask,
            centerline=self.centerline,
            role=role,
        )


@dataclass
class DatasetSplit:
    """Labeled / unlabeled / test partition of a dataset."""

    labeled: list[ImageSample]
    unlabeled: list[ImageSample]
    test: list[ImageSample]
    fold_index: int = 0

    def __post_init__(self):
        if self.fold_index < 0:
            raise SplitError(f"fold_index must be >= 0, got {self.fold_index}")
        if not self.labeled:
            raise SplitError("labeled set must be non-empty")
        ids = [s.id for s in self.labeled + self.unlabeled + self.test]
        if len(ids) != len(set(ids)):
            raise SplitError("split lists must be disjoint by id")

    def all_samples(self) -> list[ImageSample]:
        return list(self.labeled) + list(self.unlabeled) + list(self.test)


@dataclass
class HeatmapTarget:
    """Dense [0, 1] regression target built from centerline points."""

    values: np.ndarray
    sigma: float = field(default=2.0)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2:
            raise ValueError("heatmap values must be 2-D")
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.values.size and (self.values.min() < 0 or self.values.max() > 1):
            raise ValueError("heatmap values outside [0, 1]")


def split_samples(
    samples: list[ImageSample], fold: int, n_labeled: int, n_unlabeled: int
) -> DatasetSplit:
    """Deterministic split: sort by id, rotate by fold, then partition.

    The first ``n_labeled`` samples (after rotation) become the labeled set,
    the next ``n_unlabeled`` the unlabeled set, and the remainder the test
    set. Roles on the returned samples are overwritten accordingly.
    """
    if fold < 0:
        raise SplitError(f"fold must be >= 0, got {fold}")
    if n_labeled < 1:
        raise SplitError("n_labeled must be >= 1")
    if n_unlabeled < 0:
        raise SplitError("n_unlabeled must be >= 0")
    n = len(samples)
    if n_labeled + n_unlabeled > n:
        raise SplitError(
            f"n_labeled + n_unlabeled = {n_labeled + n_unlabeled} exceeds dataset size {n}"
        )
    ordered = sorted(samples, key=lambda s: s.id)
    k = fold % n
    rotated = ordered[k:] + ordered[:k]
    labeled = [s.with_role("labeled") for s in rotated[:n_labeled]]
    unlabeled = [
        s.with_role("unlabeled") for s in rotated[n_labeled : n_labeled + n_unlabeled]
    ]
    test = [s.with_role("test") for s in rotated[n_labeled + n_unlabeled :]]
    return DatasetSplit(labeled=labeled, unlabeled=unlabeled, test=test, fold_index=fold)
