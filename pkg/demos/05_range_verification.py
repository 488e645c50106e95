# Verify every odd seed up to 10^7, then extend the verified frontier to
# 2*10^7 by chaining a second run that assumes everything below its lo.

import tempfile
import time
from pathlib import Path

from syracuse.verifier import VerifyConfig, checkpoint_read, verify_range

t0 = time.perf_counter()
first = verify_range(VerifyConfig(3, 10**7))
print(f"[3, 10^7]: {first.verified_count} seeds in {time.perf_counter() - t0:.1f} s")
print("stopping-time records:", first.stopping_time_records[-5:])
print("peak records:", first.peak_records[-3:])

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "chain.ckpt"
    cfg = VerifyConfig(10**7 + 1, 2 * 10**7, assume_below_lo_verified=True,
                       checkpoint_path=str(path))
    second = verify_range(cfg)
    print(f"[10^7+1, 2*10^7]: {second.verified_count} verified,"
          f" {len(checkpoint_read(path).completed_chunks)} chunks in the checkpoint")
