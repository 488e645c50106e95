"""Command-line front end.

Exit codes: 0 success / claim holds, 1 counterexample found, 2 budget
exceeded, 3 usage or input error, 4 checkpoint corruption.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import re
import sys

from . import claims as claims_mod
from .core import Decomposition, classify, decompose, f_step, g_step, require_odd, require_positive
from .descent import descend, expansion, peak_value, preimages
from .serialize import to_record
from .trajectory import DEFAULT_BUDGET, orbit_stats
from .verifier import (
    CheckpointCorruptError,
    CheckpointError,
    CheckpointMismatchError,
    VerifyConfig,
    records,
    verify_range,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3
EXIT_CHECKPOINT = 4

_INT_RE = re.compile(r"^\s*[0-9][0-9_]*\s*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text: str) -> int:
    if not _INT_RE.match(text):
        raise argparse.ArgumentTypeError(f"not a non-negative decimal integer: {text!r}")
    return int(text)


def _pos(text: str) -> int:
    v = _int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


class Output:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream
        self._csv = None

    def emit(self, rec: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps(rec, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            flat = {k: (json.dumps(v, separators=(",", ":")) if isinstance(v, (list, dict)) else v)
                    for k, v in rec.items()}
            if self._csv is None or list(flat) != self._csv.fieldnames:
                self._csv = csv.DictWriter(self.stream, fieldnames=list(flat), lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow(flat)
        else:
            parts = []
            for k, v in rec.items():
                if isinstance(v, (list, dict)):
                    v = json.dumps(v, separators=(",", ":"))
                elif v is None:
                    v = "-"
                parts.append(f"{k}={v}")
            self.stream.write(" ".join(parts) + "\n")


def _with_command(name: str, rec: dict) -> dict:
    return {"command": name, **rec}


def cmd_step(args, out):
    x = args.k
    count = args.count
    if args.map == "f":
        require_odd(x)
        for i in range(count):
            st = f_step(x)
            out.emit(_with_command("step", {"map": "f", "index": str(i + 1), "k": str(x),
                                            "next": str(st.next), "valuation": str(st.valuation)}))
            x = st.next
    else:
        require_positive(x)
        for i in range(count):
            nxt = g_step(x)
            out.emit(_with_command("step", {"map": "g", "index": str(i + 1), "x": str(x),
                                            "next": str(nxt)}))
            x = nxt
    return EXIT_OK


def cmd_decompose(args, out):
    out.emit(_with_command("decompose", to_record(decompose(args.k))))
    return EXIT_OK


def cmd_classify(args, out):
    out.emit(_with_command("classify", to_record(classify(args.k))))
    return EXIT_OK


def cmd_descend(args, out):
    out.emit(_with_command("descend", to_record(descend(args.k, args.s_max))))
    return EXIT_OK


def cmd_preimages(args, out):
    out.emit(_with_command("preimages", to_record(preimages(args.k, args.s_max))))
    return EXIT_OK


def _decomposition_from(args) -> Decomposition:
    if args.k is not None:
        if args.p is not None or args.h is not None:
            raise UsageError("give either <k> or --p/--h, not both")
        return decompose(args.k)
    if args.p is None or args.h is None:
        raise UsageError("need <k> or both --p and --h")
    return Decomposition.from_ph(args.p, args.h)


def cmd_expand(args, out):
    d = _decomposition_from(args)
    if d.p < 2:
        raise ValueError(f"expansion needs p >= 2, k={d.k} has p={d.p}")
    for n in range(1, d.p):
        out.emit(_with_command("expand", {"k": str(d.k), "p": str(d.p), "h": str(d.h),
                                          "n": str(n), "value": str(expansion(d, n))}))
    return EXIT_OK


def cmd_peak(args, out):
    d = Decomposition.from_ph(args.p, args.h)
    rec = {"k": str(d.k), "p": str(d.p), "h": str(d.h)}
    rec.update(to_record(peak_value(d)))
    out.emit(_with_command("peak", rec))
    return EXIT_OK


def cmd_orbit(args, out):
    stats = orbit_stats(args.k, args.budget)
    out.emit(_with_command("orbit", to_record(stats)))
    return EXIT_BUDGET if stats.budget_exhausted else EXIT_OK


def cmd_verify(args, out):
    cfg = VerifyConfig(
        args.lo, args.hi, chunk_size=args.chunk_size, worker_count=args.workers,
        budget=args.budget, checkpoint_path=args.checkpoint,
        assume_below_lo_verified=args.assume_verified_below,
    )
    report = verify_range(cfg)
    out.emit(_with_command("verify", to_record(report)))
    if report.failures:
        return EXIT_COUNTEREXAMPLE
    return EXIT_BUDGET if report.budget_exceeded else EXIT_OK


def cmd_records(args, out):
    steps, peaks = records(args.lo, args.hi, budget=args.budget, workers=args.workers)
    for k, v in steps:
        out.emit(_with_command("records", {"kind": "stopping_time", "k": str(k), "value": str(v)}))
    for k, v in peaks:
        out.emit(_with_command("records", {"kind": "peak", "k": str(k), "value": str(v)}))
    return EXIT_OK


def cmd_claims(args, out):
    if args.id is not None:
        reports = [claims_mod.check_claim(args.id, args.lo, args.hi, args.limit, args.workers)]
    else:
        reports = claims_mod.run_all(args.lo, args.hi, args.limit, args.workers)
    for rep in reports:
        out.emit(_with_command("claims", to_record(rep)))
    if any(r.verdict is claims_mod.Verdict.FAILS for r in reports):
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)

    parser = _Parser(prog="syracuse", description=__doc__.splitlines()[0], parents=[fmt])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("step", parents=[fmt], help="apply g or f")
    p.add_argument("k", type=_int)
    p.add_argument("--map", choices=["g", "f"], default="f")
    p.add_argument("--count", type=_pos, default=1)
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("decompose", parents=[fmt], help="k = 2^p*h - 1")
    p.add_argument("k", type=_int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", parents=[fmt], help="case 1-6 of k")
    p.add_argument("k", type=_int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("descend", parents=[fmt], help="descent witness for k")
    p.add_argument("k", type=_int)
    p.add_argument("--s-max", type=_pos, default=64)
    p.set_defaults(func=cmd_descend)

    p = sub.add_parser("preimages", parents=[fmt], help="odd m with f(m) = k")
    p.add_argument("k", type=_int)
    p.add_argument("--s-max", type=_pos, required=True)
    p.set_defaults(func=cmd_preimages)

    p = sub.add_parser("expand", parents=[fmt], help="f^n(k) = 3^n 2^(p-n) h - 1 for n < p")
    p.add_argument("k", type=_int, nargs="?")
    p.add_argument("--p", type=_pos)
    p.add_argument("--h", type=_pos)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("peak", parents=[fmt], help="3^p*h - 1 and its odd part")
    p.add_argument("--p", type=_pos, required=True)
    p.add_argument("--h", type=_pos, required=True)
    p.set_defaults(func=cmd_peak)

    p = sub.add_parser("orbit", parents=[fmt], help="trajectory statistics")
    p.add_argument("k", type=_int)
    p.add_argument("--budget", type=_pos, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", parents=[fmt], help="verify an odd range")
    p.add_argument("--from", dest="lo", type=_int, required=True)
    p.add_argument("--to", dest="hi", type=_int, required=True)
    p.add_argument("--chunk-size", type=_pos, default=1 << 16)
    p.add_argument("--workers", type=_pos, default=1)
    p.add_argument("--budget", type=_pos, default=DEFAULT_BUDGET)
    p.add_argument("--checkpoint")
    p.add_argument("--assume-verified-below", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("records", parents=[fmt], help="stopping-time and peak records")
    p.add_argument("--from", dest="lo", type=_int, required=True)
    p.add_argument("--to", dest="hi", type=_int, required=True)
    p.add_argument("--budget", type=_pos, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=_pos, default=1)
    p.set_defaults(func=cmd_records)

    p = sub.add_parser("claims", parents=[fmt], help="counterexample search")
    p.add_argument("--id", choices=[c.value for c in claims_mod.ClaimId])
    p.add_argument("--from", dest="lo", type=_int, required=True)
    p.add_argument("--to", dest="hi", type=_int, required=True)
    p.add_argument("--limit", type=_pos, default=10)
    p.add_argument("--workers", type=_pos, default=1)
    p.set_defaults(func=cmd_claims)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"syracuse: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=stderr)
    out = Output(getattr(args, "format", "text"), stdout)
    try:
        return args.func(args, out)
    except (CheckpointCorruptError, CheckpointMismatchError) as exc:
        stderr.write(f"syracuse: checkpoint error: {exc}\n")
        return EXIT_CHECKPOINT
    except (UsageError, ValueError, TypeError, KeyError, CheckpointError, OSError) as exc:
        msg = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
        stderr.write(f"syracuse: error: {msg}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
