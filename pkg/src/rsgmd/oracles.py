"""Slow reference decoders used to certify the fast path.

* :func:`exhaustive_ml` enumerates the whole code (tiny parameters only).
* :func:`trial_decode` / :func:`trial_gmd` perform classical GMD decoding:
  every erasure trial is an independent error-and-erasure EEA decode on the
  modified syndrome, and error values come from Gaussian elimination.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .codec import CodeParams, encode, syndrome
from .gf import GaloisField
from .poly import Poly, poly_divmod, poly_eval_many
from .select import DecodeResult, Status, weighted_distance

ML_LIMIT = 2**20


@lru_cache(maxsize=8)
def codebook(params: CodeParams) -> np.ndarray:
    """All ``q^k`` codewords, information words in lexicographic order."""
    q, k = params.field.q, params.k
    if q**k > ML_LIMIT:
        raise ValueError(f"q^k = {q}^{k} exceeds the exhaustive-search limit {ML_LIMIT}")
    f = params.field
    values = np.arange(q, dtype=np.int64)
    book = np.zeros((1, params.n), dtype=np.int64)
    for pos in range(k):
        unit = np.zeros(k, dtype=np.int64)
        unit[pos] = 1
        g = encode(unit, params)
        scaled = f.vmul(values[:, None], g[None, :])
        book = (book[:, None, :] ^ scaled[None, :, :]).reshape(-1, params.n)
    book.setflags(write=False)
    return book


def exhaustive_ml(r, w, params: CodeParams) -> np.ndarray:
    """Codeword of minimum weighted distance to ``r`` (first in encoding order on ties)."""
    book = codebook(params)
    r = np.asarray(r, dtype=np.int64)
    dist = (book != r[None, :]).astype(float) @ np.asarray(w, dtype=float)
    return book[int(np.argmin(dist))].copy()


def erasure_locator(positions, params: CodeParams) -> Poly:
    pts = params.locator_points
    return Poly.from_roots(params.field, [int(pts[i]) for i in sorted(positions)])


def trial_decode(r, X, params: CodeParams) -> Poly | None:
    """Error-and-erasure decoding of ``r`` with erasures at positions ``X``.

    Returns the joint error-erasure locator, or ``None`` if it does not
    split into distinct locator points.
    """
    f = params.field
    d = params.d
    eps = len(X)
    if eps >= d:
        raise ValueError(f"{eps} erasures leave no redundancy (d={d})")
    S = syndrome(r, params)
    gamma = erasure_locator(X, params)
    T = (gamma * S).truncate(d - 1)
    r_prev, r_cur = Poly.monomial(f, d - 1), T
    u_prev, u_cur = Poly.zero(f), Poly.one(f)
    while not 2 * r_cur.degree < d - 1 + eps:
        q, rem = poly_divmod(r_prev, r_cur)
        r_prev, r_cur = r_cur, rem
        u_prev, u_cur = u_cur, u_prev - q * u_cur
    lam = u_cur * gamma
    zeros = np.count_nonzero(poly_eval_many(lam, params.locator_points) == 0)
    if zeros != lam.degree:
        return None
    return lam


def gf_solve(field: GaloisField, A, b) -> np.ndarray | None:
    """Solve ``A x = b`` over the field by Gaussian elimination.

    ``A`` may be tall; returns ``None`` if the system is inconsistent or
    the columns are dependent.
    """
    M = np.concatenate([np.asarray(A, dtype=np.int64), np.asarray(b, dtype=np.int64)[:, None]], axis=1)
    rows, cols = M.shape[0], M.shape[1] - 1
    for c in range(cols):
        piv = next((r for r in range(c, rows) if M[r, c]), None)
        if piv is None:
            return None
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
        M[c] = field.vmul(field.inv(int(M[c, c])), M[c])
        others = np.flatnonzero(M[:, c])
        others = others[others != c]
        if others.size:
            M[others] ^= field.vmul(M[others, c][:, None], M[c][None, :])
    if np.any(M[cols:, cols]):
        return None
    return M[:cols, cols].copy()


def error_values_gauss(support, S: Poly, params: CodeParams) -> np.ndarray | None:
    """Error word on ``support`` solving all ``d-1`` syndrome equations."""
    f = params.field
    pos = sorted(support)
    e = np.zeros(params.n, dtype=np.int64)
    syn = np.array([S.coeff(j) for j in range(params.d - 1)], dtype=np.int64)
    if not pos:
        return e if not syn.any() else None
    if len(pos) > params.d - 1:
        return None
    step = f.order // f.n
    A = f.exp_table[(step * np.outer(np.arange(params.d - 1), pos)) % f.order]
    x = gf_solve(f, A, syn)
    if x is None:
        return None
    e[pos] = x
    return e


def trial_candidates(r, schedule, params: CodeParams) -> list[Poly | None]:
    """Joint locators of trials ``X_0 .. X_m`` (``None`` for failed trials)."""
    m = len(schedule.pairs)
    return [trial_decode(r, schedule.erased(j), params) for j in range(m + 1)]


def trial_gmd_verbose(r, schedule, w, params: CodeParams):
    """Classical GMD: independent trials, weighted-Hamming selection.

    Returns ``(result, trial_locators)``.
    """
    r = np.asarray(r, dtype=np.int64)
    S = syndrome(r, params)
    cands = trial_candidates(r, schedule, params)
    best, best_key = None, None
    for j, lam in enumerate(cands):
        if lam is None:
            continue
        zeros = np.flatnonzero(poly_eval_many(lam, params.locator_points) == 0)
        e = error_values_gauss(zeros, S, params)
        if e is None:
            continue
        c = r ^ e
        err = frozenset(int(i) for i in np.flatnonzero(e))
        dist = weighted_distance(r, c, w)
        key = (dist, len(err), j)
        if best_key is None or key < best_key:
            best, best_key = DecodeResult(c, err, j, dist, Status.SUCCESS, j), key
    return (best if best is not None else DecodeResult.failure()), cands


def trial_gmd(r, schedule, w, params: CodeParams) -> DecodeResult:
    return trial_gmd_verbose(r, schedule, w, params)[0]
