"""Symbol channel with soft reliabilities, and the GMD erasure schedule."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .codec import CodeParams


@dataclass(frozen=True)
class ChannelModel:
    """q-ary symmetric channel with per-symbol reliability scores.

    Correct symbols draw their reliability from ``rel_correct``, corrupted
    ones from ``rel_error`` (both uniform intervals).  The intervals overlap
    by default so that the reliability ranking is sometimes wrong.
    """

    p: float
    rel_correct: tuple[float, float] = (0.5, 1.0)
    rel_error: tuple[float, float] = (0.0, 0.8)
    seed: int = 42

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"symbol error probability {self.p} outside [0, 1]")
        for lo, hi in (self.rel_correct, self.rel_error):
            if not (0.0 <= lo <= hi and np.isfinite(hi)):
                raise ValueError(f"bad reliability interval ({lo}, {hi})")

    @classmethod
    def from_dict(cls, cfg: dict) -> ChannelModel:
        known = {"p", "rel_correct", "rel_error", "seed"}
        unknown = set(cfg) - known
        if unknown:
            raise ValueError(f"unknown channel field(s): {', '.join(sorted(unknown))}")
        kw = dict(cfg)
        for key in ("rel_correct", "rel_error"):
            if key in kw:
                kw[key] = tuple(float(v) for v in kw[key])
        return cls(**kw)

    def rng(self, frame: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence([int(self.seed) & (2**64 - 1), int(frame)]))


@dataclass(frozen=True)
class TransmissionRecord:
    codeword: np.ndarray
    received: np.ndarray
    reliabilities: np.ndarray
    error_support: frozenset = field(default_factory=frozenset)


def random_codeword(params: CodeParams, rng: np.random.Generator) -> np.ndarray:
    from .codec import encode

    return encode(rng.integers(0, params.field.q, size=params.k), params)


def transmit(c, model: ChannelModel, frame: int, q: int) -> TransmissionRecord:
    """Corrupt each symbol independently with probability ``p``.

    A corrupted symbol becomes a uniformly chosen different one of the
    ``q`` field elements.  The result depends only on ``(model.seed, frame)``.
    """
    c = np.asarray(c, dtype=np.int64)
    rng = model.rng(frame)
    n = len(c)
    hit = rng.random(n) < model.p
    offsets = rng.integers(1, q, size=n)
    r = np.where(hit, c ^ offsets, c)
    w = np.where(
        hit,
        rng.uniform(*model.rel_error, size=n),
        rng.uniform(*model.rel_correct, size=n),
    )
    support = frozenset(int(i) for i in np.flatnonzero(hit))
    return TransmissionRecord(c, r, w, support)


def simulate_frame(params: CodeParams, model: ChannelModel, frame: int) -> TransmissionRecord:
    """Random codeword plus channel, all drawn from the frame's own stream."""
    rng = np.random.default_rng(np.random.SeedSequence([int(model.seed) & (2**64 - 1), int(frame), 1]))
    c = random_codeword(params, rng)
    return transmit(c, model, frame, params.field.q)


@dataclass(frozen=True)
class ErasureSchedule:
    """Positions ordered by ascending reliability, consumed two per iteration."""

    order: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    def erased(self, j: int) -> frozenset:
        """The erasure set ``X_j`` (first ``2j`` positions)."""
        return frozenset(self.order[: 2 * j])

    def __len__(self):
        return len(self.pairs)


def build_schedule(w, params: CodeParams) -> ErasureSchedule:
    w = np.asarray(w, dtype=float)
    if w.shape != (params.n,):
        raise ValueError(f"reliability vector shape {w.shape} != ({params.n},)")
    order = tuple(int(i) for i in np.argsort(w, kind="stable"))
    m = params.t_max
    pairs = tuple((order[2 * j], order[2 * j + 1]) for j in range(m))
    return ErasureSchedule(order, pairs)
