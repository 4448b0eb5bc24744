"""Deterministic fan-out of one master seed into named child streams.

Every stage of the pipeline (dataset, degradation, training, sampling,
analysis) pulls its randomness from a named child of the run's master seed,
so stages can be reproduced independently of each other.
"""

from __future__ import annotations

import hashlib

import numpy as np
import torch


def derive_seed(master: int, name: str) -> int:
    """Stable 63-bit seed for the child stream ``name``."""
    digest = hashlib.sha256(f"{master}:{name}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little") & 0x7FFF_FFFF_FFFF_FFFF


class SeedBank:
    """Hands out independent numpy/torch generators keyed by stream name."""

    def __init__(self, master: int):
        self.master = int(master)

    def seed(self, name: str) -> int:
        return derive_seed(self.master, name)

    def numpy(self, name: str) -> np.random.Generator:
        return np.random.default_rng(self.seed(name))

    def torch(self, name: str) -> torch.Generator:
        gen = torch.Generator()
        gen.manual_seed(self.seed(name))
        return gen

    def child(self, name: str) -> "SeedBank":
        return SeedBank(self.seed(name))
