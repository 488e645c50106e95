"""Range verification: drive every odd seed in [lo, hi] to 1, in parallel
chunks, with deterministic record reduction and checkpoint/resume."""

from __future__ import annotations

import hashlib
import json
import logging
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..core import require_odd, require_positive
from ..trajectory import DEFAULT_BUDGET
from . import kernel
from .checkpoint import ChunkResult, CheckpointWriter, VerifyCheckpoint

log = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 1 << 16
# seeds at or above this go straight to the exact path
_KERNEL_SEED_LIMIT = 1 << 62


@dataclass(frozen=True)
class VerifyConfig:
    lo: int
    hi: int
    chunk_size: int = DEFAULT_CHUNK_SIZE
    worker_count: int = 1
    budget: int = DEFAULT_BUDGET
    checkpoint_path: Optional[str] = None
    assume_below_lo_verified: bool = False

    def __post_init__(self):
        require_odd(self.lo, "lo")
        require_positive(self.hi, "hi")
        if self.lo > self.hi:
            raise ValueError(f"empty range: lo={self.lo} > hi={self.hi}")
        require_positive(self.chunk_size, "chunk_size")
        require_positive(self.worker_count, "worker_count")
        require_positive(self.budget, "budget")
        if not self.assume_below_lo_verified and self.lo != 3:
            raise ValueError(
                "lo must be 3 unless assume_below_lo_verified is set "
                "(the shortcut threshold must be grounded)"
            )

    @property
    def threshold(self) -> int:
        return self.lo if self.assume_below_lo_verified else 2

    @property
    def seed_count(self) -> int:
        return (self.hi - self.lo) // 2 + 1

    @property
    def chunk_count(self) -> int:
        return -(-self.seed_count // self.chunk_size)

    def echo(self) -> dict:
        """Fields that determine the report. Worker count and checkpoint
        location do not."""
        return {
            "lo": self.lo,
            "hi": self.hi,
            "chunk_size": self.chunk_size,
            "budget": self.budget,
            "assume_below_lo_verified": self.assume_below_lo_verified,
        }

    def config_hash(self) -> str:
        blob = json.dumps({k: str(v) for k, v in self.echo().items()}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class VerifyReport:
    config: dict
    verified_count: int = 0
    failures: list = field(default_factory=list)
    budget_exceeded: list = field(default_factory=list)
    stopping_time_records: list = field(default_factory=list)  # (k, collatz_steps)
    peak_records: list = field(default_factory=list)  # (k, peak)

    def to_obj(self) -> dict:
        s = str
        return {
            "config": {k: (v if isinstance(v, bool) else s(v)) for k, v in self.config.items()},
            "verified_count": s(self.verified_count),
            "failures": [s(k) for k in self.failures],
            "budget_exceeded": [s(k) for k in self.budget_exceeded],
            "stopping_time_records": [[s(k), s(v)] for k, v in self.stopping_time_records],
            "peak_records": [[s(k), s(v)] for k, v in self.peak_records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_obj(cls, obj: dict) -> "VerifyReport":
        cfg = {k: (v if isinstance(v, bool) else int(v)) for k, v in obj["config"].items()}
        return cls(
            cfg,
            int(obj["verified_count"]),
            [int(k) for k in obj["failures"]],
            [int(k) for k in obj["budget_exceeded"]],
            [(int(k), int(v)) for k, v in obj["stopping_time_records"]],
            [(int(k), int(v)) for k, v in obj["peak_records"]],
        )


def exact_orbit(k: int, threshold: int, budget: int):
    """Arbitrary-precision counterpart of the compiled kernel for one seed.

    Returns (status, collatz_steps, peak) with the kernel's status codes.
    """
    x = k
    peak = k
    f_steps = g_steps = 0
    below = k < threshold
    while x != 1:
        if f_steps >= budget:
            return (kernel.STATUS_SHORTCUT if below else kernel.STATUS_BUDGET), g_steps, peak
        t = 3 * x + 1
        if t > peak:
            peak = t
        n = (t & -t).bit_length() - 1
        x = t >> n
        f_steps += 1
        g_steps += 1 + n
        if x < threshold:
            below = True
        if x == k:
            return kernel.STATUS_CYCLE, g_steps, peak
    return kernel.STATUS_OK, g_steps, peak


def _chunk_bounds(lo: int, hi: int, chunk_size: int, index: int):
    first = lo + 2 * chunk_size * index
    count = min(chunk_size, (hi - first) // 2 + 1)
    return first, count


def _exact_chunk(first, count, threshold, budget):
    status = np.empty(count, np.int8)
    steps = [0] * count
    peaks = [0] * count
    for i in range(count):
        status[i], steps[i], peaks[i] = exact_orbit(first + 2 * i, threshold, budget)
    return status, steps, peaks


def process_chunk(lo, hi, chunk_size, threshold, budget, index,
                  hi_limit=kernel.HI_LIMIT) -> ChunkResult:
    first, count = _chunk_bounds(lo, hi, chunk_size, index)
    if first + 2 * count < _KERNEL_SEED_LIMIT:
        status = np.empty(count, np.int8)
        f_steps = np.empty(count, np.int64)
        g_steps = np.empty(count, np.int64)
        peak_hi = np.empty(count, np.uint64)
        peak_lo = np.empty(count, np.uint64)
        kernel.orbit_block(first, count, threshold, budget,
                           status, f_steps, g_steps, peak_hi, peak_lo, hi_limit)
        mask = np.empty(count, np.bool_)
        kernel.candidate_mask(status, g_steps, peak_hi, peak_lo, mask)
        candidates = np.flatnonzero(mask).tolist()

        def exact_stats(i):
            if status[i] == kernel.STATUS_OVERFLOW:
                return exact_orbit(first + 2 * i, threshold, budget)
            return int(status[i]), int(g_steps[i]), (int(peak_hi[i]) << 64) | int(peak_lo[i])

        overflowed = np.flatnonzero(status == kernel.STATUS_OVERFLOW).tolist()
        resolved = {i: exact_stats(i) for i in overflowed}
        final_status = status.copy()
        for i, (st, _, _) in resolved.items():
            final_status[i] = st
    else:
        final_status, steps, peaks = _exact_chunk(first, count, threshold, budget)
        candidates = range(count)

        def exact_stats(i):
            return int(final_status[i]), steps[i], peaks[i]

    verified = int(np.count_nonzero(
        (final_status == kernel.STATUS_OK) | (final_status == kernel.STATUS_SHORTCUT)))
    budget_exceeded = tuple(first + 2 * i for i in np.flatnonzero(final_status == kernel.STATUS_BUDGET).tolist())
    failures = tuple(first + 2 * i for i in np.flatnonzero(final_status == kernel.STATUS_CYCLE).tolist())

    local = []
    best_steps = best_peak = -1
    for i in candidates:
        st, s, p = exact_stats(i)
        if st != kernel.STATUS_OK:
            continue
        if s > best_steps or p > best_peak:
            local.append((first + 2 * i, s, p))
            best_steps = max(best_steps, s)
            best_peak = max(best_peak, p)
    return ChunkResult(index, verified, tuple(local), budget_exceeded, failures)


def reduce_chunks(config_echo: dict, chunks) -> VerifyReport:
    """Sequential reduction in ascending chunk order; independent of how the
    chunks were scheduled."""
    report = VerifyReport(dict(config_echo))
    best_steps = best_peak = -1
    for chunk in sorted(chunks, key=lambda c: c.chunk_index):
        report.verified_count += chunk.verified_count
        report.budget_exceeded.extend(chunk.budget_exceeded)
        report.failures.extend(chunk.failures)
        for k, s, p in chunk.local_records:
            if s > best_steps:
                best_steps = s
                report.stopping_time_records.append((k, s))
            if p > best_peak:
                best_peak = p
                report.peak_records.append((k, p))
    return report


def _run_chunks(lo, hi, chunk_size, threshold, budget, workers, indices,
                on_result: Callable[[ChunkResult], None]):
    if workers == 1:
        for idx in indices:
            on_result(process_chunk(lo, hi, chunk_size, threshold, budget, idx))
        return
    pending = iter(indices)
    with ThreadPoolExecutor(workers) as pool:
        inflight = set()
        try:
            for _ in range(2 * workers):
                idx = next(pending, None)
                if idx is None:
                    break
                inflight.add(pool.submit(process_chunk, lo, hi, chunk_size, threshold, budget, idx))
            while inflight:
                done, inflight = wait(inflight, return_when=FIRST_COMPLETED)
                for fut in done:
                    on_result(fut.result())
                    idx = next(pending, None)
                    if idx is not None:
                        inflight.add(pool.submit(
                            process_chunk, lo, hi, chunk_size, threshold, budget, idx))
        finally:
            for fut in inflight:
                fut.cancel()


def verify_range(config: VerifyConfig, on_chunk: Optional[Callable[[ChunkResult], None]] = None) -> VerifyReport:
    """Verify every odd seed in [config.lo, config.hi].

    A seed counts as verified when its f-orbit reaches 1, or drops below the
    shortcut threshold (config.lo when assume_below_lo_verified, else 2)
    within the budget. Records always come from full orbits.

    `on_chunk` is called after each chunk is stored (and checkpointed), in
    completion order; an exception from it aborts the run, leaving the
    checkpoint resumable.
    """
    results = {}
    writer = None
    if config.checkpoint_path is not None:
        header = VerifyCheckpoint(config.lo, config.hi, config.chunk_size, config.config_hash())
        writer = CheckpointWriter(config.checkpoint_path, header)
        results.update(writer.state.chunks)
        if results:
            log.info("resuming: %d of %d chunks already done", len(results), config.chunk_count)

    def on_result(chunk):
        if writer is not None:
            writer.append(chunk)
        results[chunk.chunk_index] = chunk
        if on_chunk is not None:
            on_chunk(chunk)

    todo = [i for i in range(config.chunk_count) if i not in results]
    try:
        _run_chunks(config.lo, config.hi, config.chunk_size, config.threshold,
                    config.budget, config.worker_count, todo, on_result)
    finally:
        if writer is not None:
            writer.close()
    return reduce_chunks(config.echo(), results.values())


def records(lo: int, hi: int, budget: int = DEFAULT_BUDGET, chunk_size: int = DEFAULT_CHUNK_SIZE,
            workers: int = 1):
    """(stopping_time_records, peak_records) over odd seeds in [lo, hi], from
    full orbits. Ties go to the smallest k."""
    require_positive(lo, "lo")
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    lo |= 1
    if lo > hi:
        return [], []
    seeds = (hi - lo) // 2 + 1
    n_chunks = -(-seeds // chunk_size)
    results = []
    _run_chunks(lo, hi, chunk_size, 2, budget, workers, range(n_chunks), results.append)
    rep = reduce_chunks({}, results)
    return rep.stopping_time_records, rep.peak_records
