"""Corpus generation and on-disk layout.

Images are persisted as 8-bit PNG; manifests are line-delimited JSON with
one record per image (identity key, attribute tuple, relative path, and
for LQ corpora the degradation draw).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from .degradation import DegradationParams, degrade, sample_degradation
from .faces import FaceParams, generate_face, random_face_params

MANIFEST_NAME = "manifest.jsonl"


def save_image(img: np.ndarray, path: Path | str) -> None:
    u8 = np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)
    PILImage.fromarray(u8, mode="RGB").save(str(path), format="PNG")


def load_image(path: Path | str) -> np.ndarray:
    with PILImage.open(str(path)) as im:
        arr = np.asarray(im.convert("RGB"), dtype=np.float64)
    return arr / 255.0


@dataclass(frozen=True)
class CorpusRecord:
    identity_id: int
    params: FaceParams
    path: str
    degradation: DegradationParams | None = None

    def to_json(self) -> str:
        rec = {
            "identity_id": self.identity_id,
            "params": self.params.as_dict(),
            "path": self.path,
        }
        if self.degradation is not None:
            rec["degradation"] = self.degradation.as_dict()
        return json.dumps(rec, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "CorpusRecord":
        rec = json.loads(line)
        deg = rec.get("degradation")
        return cls(
            identity_id=int(rec["identity_id"]),
            params=FaceParams.from_dict(rec["params"]),
            path=rec["path"],
            degradation=None if deg is None else DegradationParams.from_dict(deg),
        )


def write_manifest(records: list[CorpusRecord], directory: Path | str) -> Path:
    path = Path(directory) / MANIFEST_NAME
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")
    return path


def read_manifest(directory: Path | str) -> list[CorpusRecord]:
    path = Path(directory) / MANIFEST_NAME
    with open(path, "r", encoding="utf-8") as fh:
        return [CorpusRecord.from_json(line) for line in fh if line.strip()]


def build_corpus(
    out_dir: Path | str, n: int, resolution: int, rng: np.random.Generator
) -> list[CorpusRecord]:
    """Render n random faces into out_dir and write the manifest."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    records = []
    for i in range(n):
        params = random_face_params(rng)
        img = generate_face(params, resolution)
        name = f"face_{i:05d}.png"
        save_image(img, out / name)
        records.append(CorpusRecord(params.identity_id, params, name))
    write_manifest(records, out)
    return records


def degrade_corpus(
    hq_dir: Path | str, out_dir: Path | str, rng: np.random.Generator
) -> list[CorpusRecord]:
    """Produce the LQ counterpart of an HQ corpus with freshly sampled draws."""
    hq = Path(hq_dir)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    records = []
    for rec in read_manifest(hq):
        d = sample_degradation(rng)
        x_l = degrade(load_image(hq / rec.path), d, rng)
        save_image(x_l, out / rec.path)
        records.append(CorpusRecord(rec.identity_id, rec.params, rec.path, d))
    write_manifest(records, out)
    return records
