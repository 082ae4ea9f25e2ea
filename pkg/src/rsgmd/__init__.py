"""Reed-Solomon decoding with a Euclidean-algorithm based GMD extension."""

from .channel import ChannelModel, ErasureSchedule, TransmissionRecord, build_schedule, simulate_frame, transmit
from .codec import CodeParams, dft, encode, idft, is_codeword, parse_code_spec, syndrome
from .decoder import bmd_decode, gmd_candidates, gmd_decode
from .eea import EeaState, TransitionInfo, decode_bmd, eea_step, probe_transition, run_to_transition
from .gf import GaloisField, build_field, count_ops, parse_field_spec
from .gmd import (
    Candidate,
    CandidateList,
    CaseTag,
    DeltaState,
    EvalState,
    Origin,
    classify,
    compensate_minus,
    compensate_plus,
    extra_solution,
    gmd_run,
    gmd_run_vectors,
    regular_update,
    special_update_minus,
    special_update_plus,
)
from .poly import NEG_INF, Poly, poly_add, poly_divmod, poly_eval, poly_gcd, poly_mul, poly_scale
from .select import DecodeResult, Status, recover_error, root_support, select_best, weighted_distance

__version__ = "0.1.0"
