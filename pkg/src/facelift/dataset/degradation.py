"""Synthetic degradation pipeline for building LQ/HQ training pairs.

The pipeline applies, in order: Gaussian blur, integer-factor downsampling
(area average), additive Gaussian noise in 8-bit units, baseline JPEG
compression, and bicubic upsampling back to the input resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

import cv2
import numpy as np

from ..errors import DegenerateInputError, InputError

SIGMA_RANGE = (1.0, 15.0)
SCALE_RANGE = (1, 30)
DELTA_RANGE = (0.0, 20.0)
QUALITY_RANGE = (30, 90)


@dataclass(frozen=True)
class DegradationParams:
    """One draw of the degradation operator.

    ``quality=None`` means the JPEG stage is skipped (lossless); together
    with ``sigma=0, scale=1, delta=0`` this is the test-only identity
    configuration, which lies outside the sampling ranges.
    """

    sigma: float
    scale: int
    delta: float
    quality: int | None

    def __post_init__(self):
        if not (self.sigma == 0.0 or SIGMA_RANGE[0] <= self.sigma <= SIGMA_RANGE[1]):
            raise InputError(f"sigma {self.sigma} outside [1,15] (or 0 for identity)")
        if not (SCALE_RANGE[0] <= int(self.scale) <= SCALE_RANGE[1]):
            raise InputError(f"scale {self.scale} outside [1,30]")
        if not (DELTA_RANGE[0] <= self.delta <= DELTA_RANGE[1]):
            raise InputError(f"delta {self.delta} outside [0,20]")
        if self.quality is not None and not (1 <= int(self.quality) <= 100):
            raise InputError(f"quality {self.quality} outside [1,100]")

    @classmethod
    def identity(cls) -> "DegradationParams":
        return cls(sigma=0.0, scale=1, delta=0.0, quality=None)

    def as_dict(self) -> dict:
        return {
            "sigma": float(self.sigma),
            "scale": int(self.scale),
            "delta": float(self.delta),
            "quality": None if self.quality is None else int(self.quality),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DegradationParams":
        q = d["quality"]
        return cls(
            sigma=float(d["sigma"]),
            scale=int(d["scale"]),
            delta=float(d["delta"]),
            quality=None if q is None else int(q),
        )


def sample_degradation(rng: np.random.Generator) -> DegradationParams:
    """Uniform draw over the degradation ranges; reproducible under a fixed seed."""
    return DegradationParams(
        sigma=float(rng.uniform(*SIGMA_RANGE)),
        scale=int(rng.integers(SCALE_RANGE[0], SCALE_RANGE[1] + 1)),
        delta=float(rng.uniform(*DELTA_RANGE)),
        quality=int(rng.integers(QUALITY_RANGE[0], QUALITY_RANGE[1] + 1)),
    )


def _gaussian_kernel(sigma: float) -> np.ndarray:
    radius = max(1, int(np.ceil(3.0 * sigma)))
    xs = np.arange(-radius, radius + 1, dtype=np.float64)
    k = np.exp(-0.5 * (xs / sigma) ** 2)
    return k / k.sum()


def _blur_axis(img: np.ndarray, kernel: np.ndarray, axis: int) -> np.ndarray:
    # Symmetric pairwise accumulation: out_i = k0*x_i + sum_j kj*(x_{i-j}+x_{i+j}).
    # IEEE addition is commutative, so mirroring the image mirrors the output
    # bit-exactly, which the equivariance property relies on.
    radius = len(kernel) // 2
    moved = np.moveaxis(img, axis, 0)
    padded = np.pad(moved, [(radius, radius)] + [(0, 0)] * (moved.ndim - 1), mode="reflect")
    n = moved.shape[0]
    out = kernel[radius] * padded[radius : radius + n]
    for j in range(1, radius + 1):
        out = out + kernel[radius + j] * (
            padded[radius - j : radius - j + n] + padded[radius + j : radius + j + n]
        )
    return np.moveaxis(out, 0, axis)


def gaussian_blur(img: np.ndarray, sigma: float) -> np.ndarray:
    """Separable Gaussian blur with reflect padding; sigma=0 is the identity."""
    if sigma == 0.0:
        return img.copy()
    k = _gaussian_kernel(sigma)
    return _blur_axis(_blur_axis(img, k, 0), k, 1)


def _area_downsample(img: np.ndarray, scale: int) -> np.ndarray:
    h, w = img.shape[:2]
    h2, w2 = -(-h // scale), -(-w // scale)
    row_edges = np.arange(0, h, scale)
    col_edges = np.arange(0, w, scale)
    acc = np.add.reduceat(np.add.reduceat(img, row_edges, axis=0), col_edges, axis=1)
    row_sizes = np.minimum(row_edges + scale, h) - row_edges
    col_sizes = np.minimum(col_edges + scale, w) - col_edges
    counts = row_sizes[:, None] * col_sizes[None, :]
    return acc / counts[:, :, None]


def _bicubic_upsample(img: np.ndarray, height: int, width: int) -> np.ndarray:
    return cv2.resize(img, (width, height), interpolation=cv2.INTER_CUBIC).astype(
        np.float64
    )


def jpeg_round_trip(img: np.ndarray, quality: int) -> np.ndarray:
    """Baseline JPEG encode/decode (4:2:0). Deterministic for fixed input/quality."""
    if not (1 <= int(quality) <= 100):
        raise InputError(f"quality {quality} outside [1,100]")
    u8 = np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)
    ok, buf = cv2.imencode(".jpg", u8[:, :, ::-1], [cv2.IMWRITE_JPEG_QUALITY, int(quality)])
    if not ok:
        raise InputError("JPEG encode failed")
    dec = cv2.imdecode(buf, cv2.IMREAD_COLOR)[:, :, ::-1]
    return dec.astype(np.float64) / 255.0


def jpeg_encoded_size(img: np.ndarray, quality: int) -> int:
    u8 = np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)
    ok, buf = cv2.imencode(".jpg", u8[:, :, ::-1], [cv2.IMWRITE_JPEG_QUALITY, int(quality)])
    return len(buf)


def degrade(
    x_h: np.ndarray, d: DegradationParams, rng: np.random.Generator
) -> np.ndarray:
    """Apply blur -> downsample -> noise -> JPEG -> upsample at fixed resolution.

    The output has the same height/width as the input; noise is drawn from
    ``rng`` so the whole pipeline is a pure function of (x_h, d, seed).
    """
    h, w = x_h.shape[:2]
    scale = int(d.scale)
    if scale > min(h, w):
        raise DegenerateInputError(f"scale {scale} exceeds min image side {min(h, w)}")

    x = gaussian_blur(x_h, d.sigma) if d.sigma > 0 else x_h.copy()
    if scale > 1:
        x = _area_downsample(x, scale)
    if d.delta > 0:
        x = x + rng.standard_normal(x.shape) * (d.delta / 255.0)
        x = np.clip(x, 0.0, 1.0)
    if d.quality is not None:
        x = jpeg_round_trip(x, d.quality)
    if scale > 1:
        x = _bicubic_upsample(x, h, w)
    return np.clip(x, 0.0, 1.0)
