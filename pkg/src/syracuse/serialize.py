"""Flat record encoding for domain objects.

Integers are always rendered as decimal strings so consumers with
fixed-width number types never lose digits. ``from_record`` inverts
``to_record`` for every type it handles.
"""

from __future__ import annotations

from .claims import ClaimId, ClaimReport
from .core import Case, CaseTag, Decomposition, SyracuseStep
from .descent import DescentWitness, PeakValue, PreimageSet
from .trajectory import TrajectoryStats
from .verifier import VerifyReport


def _s(x):
    return None if x is None else str(x)


def _i(x):
    return None if x is None else int(x)


def to_record(obj) -> dict:
    if isinstance(obj, SyracuseStep):
        return {"type": "SyracuseStep", "next": _s(obj.next), "valuation": _s(obj.valuation)}
    if isinstance(obj, Decomposition):
        return {"type": "Decomposition", "k": _s(obj.k), "p": _s(obj.p), "h": _s(obj.h)}
    if isinstance(obj, CaseTag):
        return {
            "type": "CaseTag", "k": _s(obj.k), "case": obj.variant.value,
            "p": _s(obj.p), "h": _s(obj.h), "ell": _s(obj.ell), "hbar": _s(obj.hbar),
        }
    if isinstance(obj, PreimageSet):
        return {
            "type": "PreimageSet", "k": _s(obj.k), "s_max": _s(obj.s_max),
            "members": [{"m": _s(m), "s": _s(s)} for m, s in obj.members],
        }
    if isinstance(obj, PeakValue):
        return {
            "type": "PeakValue", "pre_division": _s(obj.pre_division),
            "odd_part": _s(obj.odd_part), "valuation": _s(obj.valuation),
        }
    if isinstance(obj, TrajectoryStats):
        return {
            "type": "TrajectoryStats", "seed": _s(obj.seed),
            "collatz_steps": _s(obj.collatz_steps), "syracuse_steps": _s(obj.syracuse_steps),
            "peak": _s(obj.peak), "reached_one": obj.reached_one,
            "budget_exhausted": obj.budget_exhausted,
        }
    if isinstance(obj, ClaimReport):
        return {
            "type": "ClaimReport", "claim": obj.claim.value, "lo": _s(obj.lo), "hi": _s(obj.hi),
            "domain": obj.domain, "case_filter": obj.case_filter,
            "checked_count": _s(obj.checked_count), "filtered_count": _s(obj.filtered_count),
            "failed_count": _s(obj.failed_count),
            "counterexamples": [_s(k) for k in obj.counterexamples],
            "smallest": _s(obj.smallest), "verdict": obj.verdict.value,
        }
    if isinstance(obj, VerifyReport):
        return {"type": "VerifyReport", **obj.to_obj()}
    if isinstance(obj, DescentWitness):
        rec = to_record(obj.case)
        rec.update({
            "type": "DescentWitness",
            "witness_chain": [_s(w) for w in obj.witness_chain],
            "relations": [
                {"source": _s(r.source), "target": _s(r.target),
                 "valuation": _s(r.valuation), "holds": r.holds}
                for r in obj.relations
            ],
            "integrality_flags": dict(obj.integrality_flags),
            "comparisons": {_s(w): _s(c) for w, c in obj.comparisons.items()},
            "notes": {k: _note(v) for k, v in obj.notes.items()},
        })
        return rec
    raise TypeError(f"no record encoding for {type(obj).__name__}")


def _note(v):
    if isinstance(v, bool) or v is None:
        return v
    if hasattr(v, "r") and hasattr(v, "order"):  # IdentityCheck
        return {"k": _s(v.k), "r": _s(v.r), "order": _s(v.order)}
    return str(v)


def from_record(rec: dict):
    t = rec["type"]
    if t == "SyracuseStep":
        return SyracuseStep(int(rec["next"]), int(rec["valuation"]))
    if t == "Decomposition":
        return Decomposition.checked(int(rec["k"]), int(rec["p"]), int(rec["h"]))
    if t == "CaseTag":
        d = Decomposition.checked(int(rec["k"]), int(rec["p"]), int(rec["h"]))
        return CaseTag(Case(rec["case"]), d, _i(rec["ell"]), _i(rec["hbar"]))
    if t == "PreimageSet":
        members = tuple((int(m["m"]), int(m["s"])) for m in rec["members"])
        return PreimageSet(int(rec["k"]), int(rec["s_max"]), members)
    if t == "PeakValue":
        return PeakValue(int(rec["pre_division"]), int(rec["odd_part"]), int(rec["valuation"]))
    if t == "TrajectoryStats":
        return TrajectoryStats(
            int(rec["seed"]), int(rec["collatz_steps"]), int(rec["syracuse_steps"]),
            int(rec["peak"]), bool(rec["reached_one"]), bool(rec["budget_exhausted"]),
        )
    if t == "ClaimReport":
        r = ClaimReport(
            ClaimId(rec["claim"]), int(rec["lo"]), int(rec["hi"]), rec["domain"],
            rec["case_filter"], int(rec["checked_count"]), int(rec["filtered_count"]),
            int(rec["failed_count"]), [int(k) for k in rec["counterexamples"]],
        )
        return r
    if t == "VerifyReport":
        return VerifyReport.from_obj(rec)
    raise ValueError(f"unknown record type {t!r}")
