"""Procedural toy-face renderer.

Faces are parameterized by a small attribute tuple and drawn as
anti-aliased ellipses (head, hair, eyes, mouth, optional glasses) over a
solid background. The same parameters always render to byte-identical
pixels, and each attribute tuple maps to a stable integer identity key.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigurationError, InputError

MIN_RESOLUTION = 32

# Head ellipse semi-axes as fractions of the half-extents. The product is
# fixed so the head covers pi/4 * 0.70 ~ 55% of the canvas for every aspect.
_HEAD_AREA = 0.70


def _identity_id(fields: tuple) -> int:
    quantized = tuple(round(float(v), 6) if isinstance(v, float) else v for v in fields)
    digest = hashlib.blake2b(repr(quantized).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little") & 0x7FFF_FFFF_FFFF_FFFF


@dataclass(frozen=True)
class FaceParams:
    """Attribute tuple describing one toy face identity."""

    skin_hue: float
    hair_hue: float
    head_aspect: float
    eye_distance: float
    eye_size: float
    mouth_curve: float
    has_glasses: bool
    background_hue: float
    identity_id: int = field(init=False)

    def __post_init__(self):
        checks = [
            (0.0 <= self.skin_hue < 1.0, "skin_hue must be in [0,1)"),
            (0.0 <= self.hair_hue < 1.0, "hair_hue must be in [0,1)"),
            (0.7 <= self.head_aspect <= 1.3, "head_aspect must be in [0.7,1.3]"),
            (0.2 <= self.eye_distance <= 0.45, "eye_distance must be in [0.2,0.45]"),
            (0.02 <= self.eye_size <= 0.08, "eye_size must be in [0.02,0.08]"),
            (-1.0 <= self.mouth_curve <= 1.0, "mouth_curve must be in [-1,1]"),
            (0.0 <= self.background_hue < 1.0, "background_hue must be in [0,1)"),
        ]
        for ok, msg in checks:
            if not ok:
                raise InputError(msg)
        object.__setattr__(self, "identity_id", _identity_id(self.as_tuple()))

    def as_tuple(self) -> tuple:
        return (
            float(self.skin_hue),
            float(self.hair_hue),
            float(self.head_aspect),
            float(self.eye_distance),
            float(self.eye_size),
            float(self.mouth_curve),
            bool(self.has_glasses),
            float(self.background_hue),
        )

    def as_dict(self) -> dict:
        return {
            "skin_hue": float(self.skin_hue),
            "hair_hue": float(self.hair_hue),
            "head_aspect": float(self.head_aspect),
            "eye_distance": float(self.eye_distance),
            "eye_size": float(self.eye_size),
            "mouth_curve": float(self.mouth_curve),
            "has_glasses": bool(self.has_glasses),
            "background_hue": float(self.background_hue),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FaceParams":
        return cls(
            skin_hue=float(d["skin_hue"]),
            hair_hue=float(d["hair_hue"]),
            head_aspect=float(d["head_aspect"]),
            eye_distance=float(d["eye_distance"]),
            eye_size=float(d["eye_size"]),
            mouth_curve=float(d["mouth_curve"]),
            has_glasses=bool(d["has_glasses"]),
            background_hue=float(d["background_hue"]),
        )

    def feature_vector(self) -> np.ndarray:
        """11-dim numeric encoding (hues as cos/sin, scalars rescaled to [-1,1])."""
        tw = 2.0 * np.pi
        return np.array(
            [
                np.cos(tw * self.skin_hue),
                np.sin(tw * self.skin_hue),
                np.cos(tw * self.hair_hue),
                np.sin(tw * self.hair_hue),
                np.cos(tw * self.background_hue),
                np.sin(tw * self.background_hue),
                (self.head_aspect - 1.0) / 0.3,
                (self.eye_distance - 0.325) / 0.125,
                (self.eye_size - 0.05) / 0.03,
                self.mouth_curve,
                1.0 if self.has_glasses else -1.0,
            ],
            dtype=np.float64,
        )


def random_face_params(rng: np.random.Generator) -> FaceParams:
    """Draw one attribute tuple uniformly over the valid ranges."""
    return FaceParams(
        skin_hue=float(rng.uniform(0.0, 1.0)),
        hair_hue=float(rng.uniform(0.0, 1.0)),
        head_aspect=float(rng.uniform(0.7, 1.3)),
        eye_distance=float(rng.uniform(0.2, 0.45)),
        eye_size=float(rng.uniform(0.02, 0.08)),
        mouth_curve=float(rng.uniform(-1.0, 1.0)),
        has_glasses=bool(rng.random() < 0.5),
        background_hue=float(rng.uniform(0.0, 1.0)),
    )


def _hsv_to_rgb(h: float, s: float, v: float) -> np.ndarray:
    i = int(h * 6.0) % 6
    f = h * 6.0 - int(h * 6.0)
    p, q, t = v * (1 - s), v * (1 - f * s), v * (1 - (1 - f) * s)
    rgb = [(v, t, p), (q, v, p), (p, v, t), (p, q, v), (t, p, v), (v, p, q)][i]
    return np.array(rgb, dtype=np.float64)


def face_layout(params: FaceParams, resolution: int) -> dict:
    """Geometry of the rendered features in pixel coordinates.

    The eye centers sit symmetrically about the vertical midline,
    offset by eye_distance * width / 2 on each side.
    """
    w = h = float(resolution)
    cx, cy = w / 2.0, h / 2.0
    head_a = np.sqrt(_HEAD_AREA * params.head_aspect) * (w / 2.0)
    head_b = np.sqrt(_HEAD_AREA / params.head_aspect) * (h / 2.0)
    eye_off = params.eye_distance * w / 2.0
    return {
        "center": (cx, cy),
        "head_axes": (head_a, head_b),
        "eye_left": (cx - eye_off, cy - 0.18 * head_b),
        "eye_right": (cx + eye_off, cy - 0.18 * head_b),
        "eye_radius": params.eye_size * w * 0.75,
        "hairline_y": cy - 0.45 * head_b,
        "mouth_center": (cx, cy + 0.45 * head_b),
        "mouth_halfwidth": 0.32 * head_a,
    }


def _ellipse_coverage(xx, yy, cx, cy, a, b):
    # Anti-aliased inside/outside test: coverage ramps over ~1px at the rim.
    d = np.sqrt(((xx - cx) / a) ** 2 + ((yy - cy) / b) ** 2)
    return np.clip(0.5 + (1.0 - d) * min(a, b), 0.0, 1.0)


def _band_coverage(dist, half_width):
    return np.clip(0.5 + (half_width - dist), 0.0, 1.0)


def _paint(img, coverage, color):
    img += coverage[:, :, None] * (color[None, None, :] - img)


def generate_face(params: FaceParams, resolution: int) -> np.ndarray:
    """Render the face as an (R, R, 3) float array in [0, 1].

    Rendering is a pure function of (params, resolution): identical inputs
    produce byte-identical arrays.
    """
    if resolution < MIN_RESOLUTION:
        raise ConfigurationError(
            f"resolution {resolution} below minimum {MIN_RESOLUTION}"
        )
    lay = face_layout(params, resolution)
    r = resolution
    ys, xs = np.mgrid[0:r, 0:r]
    xx = xs.astype(np.float64) + 0.5
    yy = ys.astype(np.float64) + 0.5
    cx, cy = lay["center"]
    head_a, head_b = lay["head_axes"]

    img = np.empty((r, r, 3), dtype=np.float64)
    img[:] = _hsv_to_rgb(params.background_hue, 0.35, 0.85)[None, None, :]

    skin = _hsv_to_rgb(params.skin_hue, 0.45, 0.92)
    head_cov = _ellipse_coverage(xx, yy, cx, cy, head_a, head_b)
    _paint(img, head_cov, skin)

    hair = _hsv_to_rgb(params.hair_hue, 0.75, 0.55)
    hair_cov = head_cov * _band_coverage(yy - lay["hairline_y"], 0.0)
    _paint(img, hair_cov, hair)

    iris = np.array([0.08, 0.07, 0.10])
    er = lay["eye_radius"]
    for ex, ey in (lay["eye_left"], lay["eye_right"]):
        white_cov = _ellipse_coverage(xx, yy, ex, ey, er * 1.45, er * 1.15)
        _paint(img, white_cov, np.array([0.95, 0.95, 0.95]))
        _paint(img, _ellipse_coverage(xx, yy, ex, ey, er, er), iris)

    # Mouth: a parabolic band; positive curvature bends the ends upward.
    mx, my = lay["mouth_center"]
    half_w = lay["mouth_halfwidth"]
    u = np.clip((xx - mx) / half_w, -1.0, 1.0)
    curve_y = my - params.mouth_curve * 0.12 * head_b * (u**2 - 0.5)
    in_span = _band_coverage(np.abs(xx - mx) - half_w, 0.0)
    mouth_cov = _band_coverage(np.abs(yy - curve_y), 0.016 * r) * in_span
    _paint(img, mouth_cov, np.array([0.55, 0.13, 0.16]))

    if params.has_glasses:
        frame = np.array([0.15, 0.15, 0.17])
        ring_w = max(0.7, 0.018 * r)
        for ex, ey in (lay["eye_left"], lay["eye_right"]):
            d = np.sqrt(((xx - ex) / 1.9) ** 2 + ((yy - ey) / 1.55) ** 2)
            _paint(img, _band_coverage(np.abs(d - er), ring_w / 1.9), frame)
        lx, rx = lay["eye_left"][0], lay["eye_right"][0]
        bridge = _band_coverage(np.abs(yy - lay["eye_left"][1]), ring_w * 0.6)
        bridge = bridge * (xx > lx) * (xx < rx)
        _paint(img, bridge, frame)

    return np.clip(img, 0.0, 1.0)


def head_occupancy(params: FaceParams, resolution: int) -> float:
    """Fraction of canvas pixels covered by the head ellipse (>=50% by design)."""
    lay = face_layout(params, resolution)
    r = resolution
    ys, xs = np.mgrid[0:r, 0:r]
    cov = _ellipse_coverage(
        xs + 0.5, ys + 0.5, *lay["center"], *lay["head_axes"]
    )
    return float(np.mean(cov >= 0.5))
