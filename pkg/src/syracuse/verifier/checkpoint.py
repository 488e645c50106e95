"""Append-only checkpoint files for range verification.

Line 1 is a header object; every following line is one completed chunk.
All integers are written as decimal strings. A truncated final line (from a
killed writer) is dropped on read; anything else malformed is corruption.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


class CheckpointError(Exception):
    pass


class CheckpointCorruptError(CheckpointError):
    pass


class CheckpointMismatchError(CheckpointError):
    """Checkpoint belongs to a different run configuration."""


@dataclass(frozen=True)
class ChunkResult:
    chunk_index: int
    verified_count: int
    local_records: tuple = ()  # (k, collatz_steps, peak) triples, ascending k
    budget_exceeded: tuple = ()
    failures: tuple = ()

    def to_obj(self) -> dict:
        return {
            "chunk_index": str(self.chunk_index),
            "verified_count": str(self.verified_count),
            "local_records": [
                {"k": str(k), "collatz_steps": str(s), "peak": str(p)}
                for k, s, p in self.local_records
            ],
            "budget_exceeded": [str(k) for k in self.budget_exceeded],
            "failures": [str(k) for k in self.failures],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "ChunkResult":
        return cls(
            int(obj["chunk_index"]),
            int(obj["verified_count"]),
            tuple(
                (int(r["k"]), int(r["collatz_steps"]), int(r["peak"]))
                for r in obj["local_records"]
            ),
            tuple(int(k) for k in obj.get("budget_exceeded", ())),
            tuple(int(k) for k in obj.get("failures", ())),
        )


@dataclass
class VerifyCheckpoint:
    lo: int
    hi: int
    chunk_size: int
    config_hash: str
    chunks: dict = field(default_factory=dict)  # chunk_index -> ChunkResult
    schema_version: int = SCHEMA_VERSION

    @property
    def completed_chunks(self) -> set:
        return set(self.chunks)

    def header_obj(self) -> dict:
        return {
            "schema_version": str(self.schema_version),
            "lo": str(self.lo),
            "hi": str(self.hi),
            "chunk_size": str(self.chunk_size),
            "config_hash": self.config_hash,
        }


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def checkpoint_write(state: VerifyCheckpoint, path) -> None:
    """Write a full snapshot atomically (temp file + rename)."""
    tmp = f"{path}.tmp"
    try:
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(_dumps(state.header_obj()) + "\n")
            for idx in sorted(state.chunks):
                fh.write(_dumps(state.chunks[idx].to_obj()) + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except OSError as exc:
        raise CheckpointError(f"cannot write checkpoint {path}: {exc}") from exc


def _parse(path):
    """Return (checkpoint or None, byte length of the valid prefix)."""
    with open(path, "rb") as fh:
        data = fh.read()
    lines = data.split(b"\n")
    # the piece after the last newline is either b"" or a truncated write
    complete, tail = lines[:-1], lines[-1]
    valid_len = len(data) - len(tail)
    if not complete:
        return None, 0
    try:
        header = json.loads(complete[0])
        version = int(header["schema_version"])
    except (ValueError, KeyError, TypeError) as exc:
        raise CheckpointCorruptError(f"{path}: unreadable header: {exc}") from exc
    if version != SCHEMA_VERSION:
        raise CheckpointCorruptError(f"{path}: schema_version {version}, expected {SCHEMA_VERSION}")
    try:
        state = VerifyCheckpoint(
            int(header["lo"]), int(header["hi"]), int(header["chunk_size"]),
            str(header["config_hash"]), schema_version=version,
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise CheckpointCorruptError(f"{path}: bad header field: {exc}") from exc
    body = complete[1:]
    for i, raw in enumerate(body):
        try:
            chunk = ChunkResult.from_obj(json.loads(raw))
        except (ValueError, KeyError, TypeError) as exc:
            raise CheckpointCorruptError(f"{path}: bad chunk line {i + 2}: {exc}") from exc
        state.chunks[chunk.chunk_index] = chunk
    return state, valid_len


def checkpoint_read(path) -> VerifyCheckpoint:
    """Read a checkpoint; FileNotFoundError if absent, CheckpointCorruptError if
    malformed."""
    if not os.path.exists(path):
        raise FileNotFoundError(f"no checkpoint at {path}")
    state, _ = _parse(path)
    if state is None:
        raise CheckpointCorruptError(f"{path}: no complete header line")
    return state


class CheckpointWriter:
    """Single appender for a run. Opens (or resumes) the file at `path`."""

    def __init__(self, path, header: VerifyCheckpoint):
        self.path = path
        self.state = header
        existing = None
        if os.path.exists(path):
            existing, valid_len = _parse(path)
            if existing is not None and existing.config_hash != header.config_hash:
                raise CheckpointMismatchError(
                    f"{path} was written for config {existing.config_hash}, "
                    f"this run is {header.config_hash}"
                )
        try:
            if existing is None:
                self._fh = open(path, "w", encoding="utf-8")
                self._fh.write(_dumps(header.header_obj()) + "\n")
                self._fh.flush()
            else:
                self.state = existing
                with open(path, "r+b") as fh:
                    fh.truncate(valid_len)
                self._fh = open(path, "a", encoding="utf-8")
        except OSError as exc:
            raise CheckpointError(f"cannot open checkpoint {path}: {exc}") from exc

    def append(self, chunk: ChunkResult) -> None:
        try:
            self._fh.write(_dumps(chunk.to_obj()) + "\n")
            self._fh.flush()
            os.fsync(self._fh.fileno())
        except OSError as exc:
            raise CheckpointError(f"cannot append to checkpoint {self.path}: {exc}") from exc
        self.state.chunks[chunk.chunk_index] = chunk

    def close(self) -> None:
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
