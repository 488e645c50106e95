# Every claim in the registry, scanned over odd k up to 20000.
#
# The r-claims for Cases 3 and 4 fail immediately; the smallest
# counterexamples are 7, 43, 55 and 19.

from syracuse import run_all

for rep in run_all(3, 20_000, limit=5):
    print(f"{rep.claim.value:17s} {rep.verdict.value:15s} checked={rep.checked_count:6d}"
          f" filtered={rep.filtered_count:5d} failed={rep.failed_count:5d}"
          f" first={rep.counterexamples}")
