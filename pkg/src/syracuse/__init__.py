"""Syracuse/Collatz dynamics: the maps g and f, the k = 2^p*h - 1 case
analysis, descent witnesses, falsifiable claims and range verification."""

from .core import (
    Case,
    CaseTag,
    Decomposition,
    SyracuseStep,
    classify,
    decompose,
    f_iterate,
    f_step,
    g_step,
    pow2_mod3,
    valuation2,
)
from .descent import (
    DescentWitness,
    PeakValue,
    PreimageSet,
    VerificationError,
    WrongCaseError,
    case1_witness,
    case2_predecessor,
    case34_identity_check,
    case34_m,
    case34_r,
    descend,
    expansion,
    peak_value,
    preimages,
)
from .trajectory import Membership, TrajectoryStats, in_E_bounded, orbit_stats
from .claims import ClaimId, ClaimReport, Verdict, check_claim, run_all
from .verifier import VerifyConfig, VerifyReport, records, verify_range

__version__ = "0.1.0"
