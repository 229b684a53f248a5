"""Dataset ingestion and on-disk formats.

Images are 8-bit grayscale PNG. Masks are 8-bit PNG with {0, 255} mapped
to {0, 1}. Centerlines are one CSV per image with header ``row,col`` and
integer rows. Two layouts are supported:

* ``fundus_folder``: ``images/``, ``masks/`` and optional ``centerlines/``
  subdirectories, paired by filename stem.
* ``flat_folder``: everything in one directory, ``<stem>.png`` paired with
  ``<stem>_mask.png`` and ``<stem>_centerline.csv``.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np
from PIL import Image

from ..errors import MissingAnnotation, SplitError
from .types import DatasetSplit, ImageSample, split_samples

LAYOUTS = ("fundus_folder", "flat_folder")

_MASK_SUFFIX = "_mask"
_CENTERLINE_SUFFIX = "_centerline"


def read_image(path: str | Path) -> np.ndarray:
    """Load an 8-bit grayscale PNG as a float array in [0, 1]."""
    with Image.open(path) as im:
        arr = np.asarray(im.convert("L"), dtype=np.float64)
    return arr / 255.0


def write_image(path: str | Path, pixels: np.ndarray) -> None:
    arr = np.clip(np.asarray(pixels, dtype=np.float64), 0.0, 1.0)
    Image.fromarray(np.round(arr * 255.0).astype(np.uint8), mode="L").save(path)


def read_mask(path: str | Path) -> np.ndarray:
    with Image.open(path) as im:
        arr = np.asarray(im.convert("L"))
    return (arr >= 128).astype(np.uint8)


def write_mask(path: str | Path, mask: np.ndarray) -> None:
    arr = (np.asarray(mask) > 0).astype(np.uint8) * 255
    Image.fromarray(arr, mode="L").save(path)


def read_centerline(path: str | Path) -> list[tuple[int, int]]:
    points = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is not None and [h.strip() for h in header] != ["row", "col"]:
            raise ValueError(f"bad centerline header in {path}: {header}")
        for row in reader:
            if not row:
                continue
            points.append((int(row[0]), int(row[1])))
    return points


def write_centerline(path: str | Path, points: list[tuple[int, int]]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["row", "col"])
        for r, c in points:
            writer.writerow([int(r), int(c)])


def save_dataset(
    samples: list[ImageSample], root: str | Path, layout: str = "fundus_folder"
) -> Path:
    """Persist samples (with any annotations they carry) under ``root``."""
    root = Path(root)
    if layout not in LAYOUTS:
        raise ValueError(f"unknown layout {layout!r}")
    if layout == "fundus_folder":
        (root / "images").mkdir(parents=True, exist_ok=True)
        (root / "masks").mkdir(exist_ok=True)
        (root / "centerlines").mkdir(exist_ok=True)
        for s in samples:
            write_image(root / "images" / f"{s.id}.png", s.pixels)
            if s.mask is not None:
                write_mask(root / "masks" / f"{s.id}.png", s.mask)
            if s.centerline is not None:
                write_centerline(root / "centerlines" / f"{s.id}.csv", s.centerline)
    else:
        root.mkdir(parents=True, exist_ok=True)
        for s in samples:
            write_image(root / f"{s.id}.png", s.pixels)
            if s.mask is not None:
                write_mask(root / f"{s.id}{_MASK_SUFFIX}.png", s.mask)
            if s.centerline is not None:
                write_centerline(root / f"{s.id}{_CENTERLINE_SUFFIX}.csv", s.centerline)
    return root


def _discover(root: Path, layout: str):
    """Yield (stem, image_path, mask_path|None, centerline_path|None)."""
    if layout == "fundus_folder":
        img_dir = root / "images"
        if not img_dir.is_dir():
            raise FileNotFoundError(f"no images/ directory under {root}")
        for img in sorted(img_dir.glob("*.png")):
            stem = img.stem
            mask = root / "masks" / f"{stem}.png"
            cl = root / "centerlines" / f"{stem}.csv"
            yield stem, img, (mask if mask.exists() else None), (
                cl if cl.exists() else None
            )
    else:
        for img in sorted(root.glob("*.png")):
            stem = img.stem
            if stem.endswith(_MASK_SUFFIX):
                continue
            mask = root / f"{stem}{_MASK_SUFFIX}.png"
            cl = root / f"{stem}{_CENTERLINE_SUFFIX}.csv"
            yield stem, img, (mask if mask.exists() else None), (
                cl if cl.exists() else None
            )


def load_dataset(
    root_path: str | Path,
    layout: str = "fundus_folder",
    fold: int = 0,
    n_labeled: int = 2,
    n_unlabeled: int = 4,
) -> DatasetSplit:
    """Load a dataset directory and split it deterministically.

    Samples are sorted by id, rotated by ``fold``, and partitioned into
    ``n_labeled`` / ``n_unlabeled`` / rest. A labeled sample without a mask
    or centerline raises MissingAnnotation; an oversized request raises
    SplitError.
    """
    root = Path(root_path)
    if not root.exists():
        raise FileNotFoundError(f"dataset root {root} does not exist")
    if layout not in LAYOUTS:
        raise ValueError(f"unknown layout {layout!r}")

    samples = []
    for stem, img_path, mask_path, cl_path in _discover(root, layout):
        pixels = read_image(img_path)
        mask = read_mask(mask_path) if mask_path is not None else None
        centerline = read_centerline(cl_path) if cl_path is not None else None
        # role is provisional; split_samples reassigns it
        samples.append(
            ImageSample(
                id=stem, pixels=pixels, mask=mask, centerline=centerline,
                role="test",
            )
        )
    if not samples:
        raise SplitError(f"no images found under {root} with layout {layout!r}")

    return split_samples(samples, fold=fold, n_labeled=n_labeled,
                         n_unlabeled=n_unlabeled)
