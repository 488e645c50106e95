from .checkpoint import (
    CheckpointCorruptError,
    CheckpointError,
    CheckpointMismatchError,
    ChunkResult,
    VerifyCheckpoint,
    checkpoint_read,
    checkpoint_write,
)
from .run import VerifyConfig, VerifyReport, exact_orbit, records, verify_range

__all__ = [
    "CheckpointCorruptError", "CheckpointError", "CheckpointMismatchError",
    "ChunkResult", "VerifyCheckpoint", "VerifyConfig", "VerifyReport",
    "checkpoint_read", "checkpoint_write", "exact_orbit", "records", "verify_range",
]
