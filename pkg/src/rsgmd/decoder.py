"""Word-level decoders built from the EEA, the GMD engine and the selector."""

from __future__ import annotations

import numpy as np

from .channel import build_schedule
from .codec import CodeParams, syndrome
from .eea import decode_bmd, run_to_transition
from .gmd import Candidate, CandidateList, Origin, gmd_run, gmd_run_vectors
from .select import DecodeResult, Status, select_best


def bmd_decode(r, params: CodeParams, w=None) -> DecodeResult:
    """Bounded-distance decoding of a received word."""
    r = np.asarray(r, dtype=np.int64)
    if w is None:
        w = np.ones(params.n)
    S = syndrome(r, params)
    if S.is_zero():
        return DecodeResult(r.copy(), frozenset(), 0, 0.0, Status.SUCCESS, 0)
    lam, _ = decode_bmd(S, params)
    cand = Candidate(lam, (), lam.degree, 0, Origin.BMD)
    return select_best([cand], r, S, w, params)


def gmd_candidates(r, w, params: CodeParams, *, vectors: bool = True, use_qhat: bool = True):
    """Syndrome, transition info and candidate list for one received word.

    Returns ``(S, info, candidates)``; ``info`` and ``candidates`` are
    ``None`` when the syndrome is zero.
    """
    S = syndrome(r, params)
    if S.is_zero():
        return S, None, None
    info = run_to_transition(S, params, use_qhat)
    schedule = build_schedule(w, params)
    run = gmd_run_vectors if vectors else gmd_run
    return S, info, run(info, schedule, params)


def gmd_decode(r, w, params: CodeParams, *, vectors: bool = True, use_qhat: bool = True) -> DecodeResult:
    """Merged EEA/GMD decoding with weighted-Hamming selection."""
    r = np.asarray(r, dtype=np.int64)
    S, _, cands = gmd_candidates(r, w, params, vectors=vectors, use_qhat=use_qhat)
    if cands is None:
        return DecodeResult(r.copy(), frozenset(), 0, 0.0, Status.SUCCESS, 0)
    return select_best(cands, r, S, w, params)


def gmd_decode_verbose(r, w, params: CodeParams, *, vectors: bool = True, use_qhat: bool = True):
    """Like :func:`gmd_decode` but also returns the candidate list (or ``None``)."""
    r = np.asarray(r, dtype=np.int64)
    S, info, cands = gmd_candidates(r, w, params, vectors=vectors, use_qhat=use_qhat)
    if cands is None:
        return DecodeResult(r.copy(), frozenset(), 0, 0.0, Status.SUCCESS, 0), None, None
    return select_best(cands, r, S, w, params), cands, info


__all__ = ["bmd_decode", "gmd_candidates", "gmd_decode", "gmd_decode_verbose", "CandidateList"]
