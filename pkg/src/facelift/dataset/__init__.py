from .faces import FaceParams, face_layout, generate_face, random_face_params
from .degradation import (
    DegradationParams,
    degrade,
    gaussian_blur,
    jpeg_round_trip,
    sample_degradation,
)
from .corpus import (
    CorpusRecord,
    build_corpus,
    degrade_corpus,
    load_image,
    read_manifest,
    save_image,
    write_manifest,
)

__all__ = [
    "FaceParams",
    "face_layout",
    "generate_face",
    "random_face_params",
    "DegradationParams",
    "degrade",
    "gaussian_blur",
    "jpeg_round_trip",
    "sample_degradation",
    "CorpusRecord",
    "build_corpus",
    "degrade_corpus",
    "load_image",
    "read_manifest",
    "save_image",
    "write_manifest",
]
