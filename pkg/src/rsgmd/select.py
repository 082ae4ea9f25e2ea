"""Candidate validation, error-value recovery and weighted-Hamming selection."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .codec import CodeParams
from .gmd import Candidate, EvalBundle, Origin
from .poly import Poly, poly_eval_many


class Status(enum.Enum):
    SUCCESS = "SUCCESS"
    FAILURE = "FAILURE"


@dataclass(frozen=True)
class DecodeResult:
    codeword: np.ndarray | None
    error_support: frozenset
    trial: int
    weighted_distance: float
    status: Status
    index: int = -1  # position of the winning entry in the candidate list

    @property
    def ok(self) -> bool:
        return self.status is Status.SUCCESS

    @classmethod
    def failure(cls) -> DecodeResult:
        return cls(None, frozenset(), -1, float("inf"), Status.FAILURE)


def locator_values(locator, params: CodeParams) -> np.ndarray:
    if isinstance(locator, Poly):
        return poly_eval_many(locator, params.locator_points)
    return np.asarray(locator)


def root_support(candidate, params: CodeParams, degree=None) -> frozenset | None:
    """Positions where the locator vanishes, or ``None`` if it does not split.

    ``candidate`` is a :class:`~rsgmd.gmd.Candidate`, a polynomial or an
    evaluation vector.  The zero count must equal the (tracked) degree.
    """
    if isinstance(candidate, Candidate):
        degree = candidate.degree if degree is None else degree
        candidate = candidate.locator
    if degree is None:
        if not isinstance(candidate, Poly):
            raise TypeError("an evaluation vector needs an explicit degree")
        degree = candidate.degree
    zeros = np.flatnonzero(locator_values(candidate, params) == 0)
    if len(zeros) != degree:
        return None
    return frozenset(int(i) for i in zeros)


def recover_error(r, support, S: Poly, params: CodeParams) -> np.ndarray | None:
    """Error word supported on ``support`` that reproduces the syndrome.

    Solves ``S_j = sum_i e_i alpha^(i*j)``, ``j = 0..d-2``: the first
    ``|support|`` equations through the Lagrange basis of the nodes
    ``alpha^i`` (O(s^2)), the remaining ones as a consistency check.
    Returns ``None`` when the system is inconsistent.  Works from the
    support alone; :func:`select_best` uses :func:`candidate_error`.
    """
    f = params.field
    n, d = params.n, params.d
    positions = np.array(sorted(support), dtype=np.int64)
    s = len(positions)
    syn = np.array([S.coeff(j) for j in range(d - 1)], dtype=np.int64)
    if s > d - 1:
        return None
    if s == 0:
        return np.zeros(n, dtype=np.int64) if not syn.any() else None

    nodes = np.array([f.alpha_pow(int(i)) for i in positions], dtype=np.int64)
    # P(x) = prod (x - X_i), ascending coefficients
    P = np.zeros(s + 1, dtype=np.int64)
    P[0] = 1
    for k, X in enumerate(nodes):
        shifted = np.concatenate([[0], P[:-1]])
        P = shifted ^ f.vmul(int(X), P)
    # Synthetic division by (x - X_i) for all i at once, dotted with S.
    q = np.ones(s, dtype=np.int64)  # coefficient of x^(s-1) in P/(x - X_i)
    num = f.vmul(q, syn[s - 1])
    for k in range(s - 2, -1, -1):
        q = P[k + 1] ^ f.vmul(nodes, q)
        num = num ^ f.vmul(q, syn[k])
    # P'(X_i): odd-power terms only in characteristic 2
    deriv = np.zeros(s, dtype=np.int64)
    for k in range(s, 0, -1):
        c = P[k] if k % 2 == 1 else 0
        deriv = f.vmul(deriv, nodes) ^ c
    if np.any(deriv == 0):
        return None
    values = f.vmul(num, f.vinv(deriv))

    pw = np.array([f.pow(int(X), s) for X in nodes], dtype=np.int64)
    for j in range(s, d - 1):
        if np.bitwise_xor.reduce(f.vmul(values, pw)) != syn[j]:
            return None
        pw = f.vmul(pw, nodes)
    e = np.zeros(n, dtype=np.int64)
    e[positions] = values
    return e


def weighted_distance(r, c, w) -> float:
    r, c = np.asarray(r), np.asarray(c)
    if r.shape != c.shape:
        raise ValueError("words of different length")
    return float(np.sum(np.asarray(w, dtype=float)[r != c]))


def candidate_error(candidate, S: Poly, params: CodeParams) -> np.ndarray | None:
    """Error word implied by a candidate locator, or ``None`` if it is not valid.

    With ``Omega = Lambda*S mod x^(d-1)`` and roots ``beta_i`` of
    ``Lambda``, a consistent error on those roots has
    ``e_i = Omega(beta_i) / (beta_i * Lambda'(beta_i))``, and consistency is
    exactly ``deg Omega < #roots``.  Vector candidates carry the needed
    evaluations, so this is O(n); polynomial candidates are evaluated here.
    """
    f = params.field
    d = params.d
    if not isinstance(candidate, Candidate):
        candidate = Candidate(candidate, (), candidate.degree, 0, Origin.BMD)
    bundle = candidate.aux
    if bundle is None:
        lam = candidate.locator
        bundle = EvalBundle.from_poly(lam, (lam * S).truncate(d - 1), params)
    zeros = np.flatnonzero(bundle.v == 0)
    s = len(zeros)
    if s != candidate.degree or s > d - 1:
        return None
    if np.any(bundle.rc[s:]):
        return None
    e = np.zeros(params.n, dtype=np.int64)
    if s == 0:
        return e
    dv = bundle.dv[zeros]
    if np.any(dv == 0):
        return None
    denom = f.vmul(params.locator_points[zeros], dv)
    e[zeros] = f.vmul(bundle.er[zeros], f.vinv(denom))
    return e


def select_best(candidates: Iterable, r, S: Poly, w, params: CodeParams) -> DecodeResult:
    """Pick the valid candidate codeword with the smallest weighted distance.

    Every candidate costs O(n): root support from its evaluations, error
    values from :func:`candidate_error`.  Candidates with an already seen
    root support are skipped.  Ties go to fewer corrected positions, then
    to the earlier list entry.
    """
    r = np.asarray(r, dtype=np.int64)
    w = np.asarray(w, dtype=float)
    best, best_key = None, None
    seen = set()
    for idx, cand in enumerate(candidates):
        support = root_support(cand, params)
        if support is None or support in seen:
            continue
        seen.add(support)
        e = candidate_error(cand, S, params)
        if e is None:
            continue
        c = r ^ e
        err = frozenset(int(i) for i in np.flatnonzero(e))
        dist = weighted_distance(r, c, w)
        key = (dist, len(err), idx)
        if best_key is None or key < best_key:
            trial = cand.trial if isinstance(cand, Candidate) else 0
            best, best_key = DecodeResult(c, err, trial, dist, Status.SUCCESS, idx), key
    return best if best is not None else DecodeResult.failure()
