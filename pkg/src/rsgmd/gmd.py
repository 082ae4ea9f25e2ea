"""GMD extension of the Euclidean algorithm.

Starting from two consecutive EEA auxiliaries ``(delta1, delta2)``, each
iteration forces the next two scheduled erasure points to be zeros of
``delta1`` while keeping its degree growing by one.  Degenerate iterations
change the degree by 0 or 2 instead; the signed counter ``dd`` records the
drift and later iterations compensate for it.  The successive ``delta1``
form the list of candidate error-erasure locators.

The engine runs on two interchangeable representations:

* :class:`DeltaState` keeps dense polynomials (reference path);
* :class:`EvalState` keeps evaluation vectors ``v[i] = delta(alpha^-i)``
  (plus the data for error evaluation, see :class:`EvalBundle`) so every
  update is elementwise and an iteration costs O(n).

Degrees are tracked as integers by the same rules in both paths: the degree
of a linear combination is the largest degree among the terms with a
nonzero coefficient.  This is an upper bound on the actual degree and is the
value the candidate validation compares root counts against.  When the
seed came from a long partial quotient, ``deg delta2`` can exceed
``deg delta1 + 1``; the first iteration then lands ``lift`` degrees higher
and the intended degree of iteration ``j >= 1`` is ``base + j + lift``.

All arithmetic is characteristic 2, so ``+`` and ``-`` coincide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .codec import CodeParams
from .eea import TransitionInfo
from .poly import NEG_INF, Poly, poly_eval, poly_eval_many


class ScheduleError(ValueError):
    """An erasure pair repeats a point or re-erases an already erased one."""


class CaseTag(enum.Enum):
    REGULAR = "REGULAR"
    FAIL1 = "FAIL1"  # delta1 already vanishes on both points
    FAIL2 = "FAIL2"  # delta2 vanishes on both points
    MIXED = "MIXED"  # determinant zero without the above


class Origin(enum.Enum):
    BMD = "BMD"
    REGULAR = "REGULAR"
    SPECIAL = "SPECIAL"
    EXTRA = "EXTRA"


@dataclass(frozen=True)
class Classification:
    tag: CaseTag
    d1: tuple[int, int]
    d2: tuple[int, int]
    dbar: int
    d2_single_zero: bool


# -- degree bookkeeping --------------------------------------------------------

def _deg_affine(deg, s: int, t: int):
    """Degree of ``(s*x + t) * p`` for ``deg p = deg``."""
    if deg == NEG_INF:
        return NEG_INF
    if s:
        return deg + 1
    return deg if t else NEG_INF


def _deg_combine(*terms):
    """Degree of ``sum c_k p_k`` given ``(c_k, deg p_k)`` pairs."""
    degs = [d for c, d in terms if c]
    return max(degs) if degs else NEG_INF


def _lift(deg1, deg2) -> int:
    """Extra degree the first iteration inherits from a long seeded quotient."""
    if deg1 == NEG_INF or deg2 == NEG_INF:
        return 0
    return max(0, int(deg2 - deg1) - 1)


# -- states ----------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaState:
    """Polynomial form of the working pair."""

    delta1: Poly
    delta2: Poly
    deg1: object
    deg2: object
    dd: int
    j: int
    erased: tuple[int, ...]
    base_deg: object
    params: CodeParams = field(repr=False, compare=False)
    qhat_used: bool = False
    specials: int = 0
    lift: int = 0

    @classmethod
    def from_transition(cls, init: TransitionInfo, params: CodeParams) -> DeltaState:
        d1, d2 = init.delta1_init, init.delta2_init
        return cls(d1, d2, d1.degree, d2.degree, 0, 0, (), d1.degree, params,
                   init.q_hat is not None, 0, _lift(d1.degree, d2.degree))

    def nominal(self, j: int | None = None):
        """Intended degree of ``delta1`` after ``j`` iterations."""
        j = self.j if j is None else j
        return self.base_deg + j + (self.lift if j >= 1 else 0)

    # representation hooks
    def value(self, p, pos: int) -> int:
        return poly_eval(p, int(self.params.locator_points[pos]))

    def affine(self, p, s: int, t: int):
        return p * Poly(self.params.field, [t, s])

    def combine(self, c1: int, p1, c2: int, p2):
        return p1 * c1 + p2 * c2

    def root_pair(self, p, a1: int, a2: int):
        f = self.params.field
        quad = Poly(f, [f.mul(a1, a2), a1 ^ a2, 1])
        return p * quad

    def is_zero(self, p) -> bool:
        return p.is_zero()

    def proportional(self, p, q) -> bool:
        from .poly import proportional

        return proportional(p, q)

    def evaluations(self, p) -> np.ndarray:
        return poly_eval_many(p, self.params.locator_points)

    def point(self, pos: int) -> int:
        return int(self.params.locator_points[pos])

    def locator(self, p):
        return p

    def aux(self, p):
        return None


@dataclass(frozen=True)
class EvalBundle:
    """Everything the vector path keeps about one polynomial ``p``.

    ``v`` and ``dv`` are the evaluations of ``p`` and ``p'`` at the locator
    points, ``rc`` the coefficients of ``p*S mod x^(d-1)`` and ``er`` its
    evaluations.  Each update costs O(n); together they give error values
    without touching polynomials again.
    """

    v: np.ndarray
    dv: np.ndarray
    rc: np.ndarray
    er: np.ndarray

    @classmethod
    def from_poly(cls, p: Poly, rem: Poly, params: CodeParams) -> EvalBundle:
        """Bundle for ``p`` whose syndrome product ``p*S mod x^(d-1)`` is ``rem``."""
        pts = params.locator_points
        rc = np.zeros(params.d - 1, dtype=np.int64)
        rc[: len(rem.coeffs)] = rem.coeffs
        return cls(poly_eval_many(p, pts), poly_eval_many(p.derivative(), pts), rc, poly_eval_many(rem, pts))


@lru_cache(maxsize=16)
def _top_powers(params: CodeParams) -> tuple[np.ndarray, np.ndarray]:
    """``x^(d-1)`` and ``x^d`` evaluated at the locator points."""
    f, pts = params.field, params.locator_points
    logs = f.log_table[pts]
    return tuple(f.exp_table[(logs * k) % f.order] for k in (params.d - 1, params.d))


def _vec(p):
    return p.v if isinstance(p, EvalBundle) else np.asarray(p)


@dataclass(frozen=True)
class EvalState(DeltaState):
    """Evaluation-vector form: ``delta1.v[i] = Delta1(alpha^-i)``."""

    @classmethod
    def from_transition(cls, init: TransitionInfo, params: CodeParams) -> EvalState:
        d1, d2 = init.delta1_init, init.delta2_init
        st = init.state
        d = params.d
        # the EEA remainders are the syndrome products of its auxiliaries
        rem1 = st.r_cur.truncate(d - 1)
        rem2 = st.r_prev if init.q_hat is None else st.r_prev - init.q_hat * st.r_cur
        b1 = EvalBundle.from_poly(d1, rem1, params)
        b2 = EvalBundle.from_poly(d2, rem2.truncate(d - 1), params)
        return cls(b1, b2, d1.degree, d2.degree, 0, 0, (), d1.degree, params,
                   init.q_hat is not None, 0, _lift(d1.degree, d2.degree))

    @property
    def v1(self) -> np.ndarray:
        return self.delta1.v

    @property
    def v2(self) -> np.ndarray:
        return self.delta2.v

    def value(self, p, pos: int) -> int:
        return int(p.v[pos])

    def affine(self, p, s: int, t: int):
        f = self.params.field
        pts = self.params.locator_points
        if s == 0:
            return EvalBundle(f.vmul(t, p.v), f.vmul(t, p.dv), f.vmul(t, p.rc), f.vmul(t, p.er))
        lin = (pts if s == 1 else f.vmul(s, pts)) ^ t
        sv = p.v if s == 1 else f.vmul(s, p.v)
        # (s*x + t) * rc, then drop the x^(d-1) term
        full = np.zeros(len(p.rc) + 1, dtype=np.int64)
        full[:-1] = f.vmul(t, p.rc)
        full[1:] ^= p.rc if s == 1 else f.vmul(s, p.rc)
        er = f.vmul(lin, p.er)
        if full[-1]:
            er ^= f.vmul(int(full[-1]), _top_powers(self.params)[0])
        return EvalBundle(f.vmul(lin, p.v), f.vmul(lin, p.dv) ^ sv, full[:-1], er)

    def combine(self, c1: int, p1, c2: int, p2):
        f = self.params.field
        parts = [f.vmul(c1, getattr(p1, k)) ^ f.vmul(c2, getattr(p2, k)) for k in ("v", "dv", "rc", "er")]
        return EvalBundle(*parts)

    def root_pair(self, p, a1: int, a2: int):
        f = self.params.field
        pts = self.params.locator_points
        quad = f.vmul(pts ^ a1, pts ^ a2)
        # (x^2 + (a1+a2) x + a1 a2) * rc, dropping the x^(d-1) and x^d terms
        full = np.zeros(len(p.rc) + 2, dtype=np.int64)
        full[:-2] = f.vmul(f.mul(a1, a2), p.rc)
        full[1:-1] ^= f.vmul(a1 ^ a2, p.rc)
        full[2:] ^= p.rc
        er = f.vmul(quad, p.er)
        top1, top2 = _top_powers(self.params)
        if full[-2]:
            er ^= f.vmul(int(full[-2]), top1)
        if full[-1]:
            er ^= f.vmul(int(full[-1]), top2)
        dv = f.vmul(quad, p.dv) ^ f.vmul(a1 ^ a2, p.v)
        return EvalBundle(f.vmul(quad, p.v), dv, full[:-2], er)

    def is_zero(self, p) -> bool:
        return not np.any(p.v)

    def proportional(self, p, q) -> bool:
        p, q = _vec(p), _vec(q)
        nz_p, nz_q = np.flatnonzero(p), np.flatnonzero(q)
        if nz_p.size == 0 or nz_q.size == 0:
            return nz_p.size == nz_q.size
        if not np.array_equal(nz_p, nz_q):
            return False
        f = self.params.field
        s = f.div(int(q[nz_p[0]]), int(p[nz_p[0]]))
        return bool(np.array_equal(f.vmul(s, p), q))

    def evaluations(self, p) -> np.ndarray:
        return p.v

    def locator(self, p):
        return p.v

    def aux(self, p):
        return p


@dataclass(frozen=True)
class Candidate:
    """One list entry: a locator (polynomial or evaluation vector) and its context."""

    locator: object
    erased: tuple[int, ...]
    degree: object
    trial: int
    origin: Origin
    on_schedule: bool = True
    aux: EvalBundle | None = field(default=None, repr=False, compare=False)

    @property
    def is_vector(self) -> bool:
        return isinstance(self.locator, np.ndarray)


@dataclass
class CandidateList:
    entries: list[Candidate]
    trace: list[str] = field(default_factory=list)
    states: list[DeltaState] = field(default_factory=list)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    @property
    def final_state(self) -> DeltaState:
        return self.states[-1]


# -- single-iteration operations -----------------------------------------------

def _points(state: DeltaState, i1: int, i2: int) -> tuple[int, int]:
    if i1 == i2:
        raise ScheduleError(f"erasure pair repeats position {i1}")
    for i in (i1, i2):
        if i in state.erased:
            raise ScheduleError(f"position {i} is already erased")
        if not 0 <= i < state.params.n:
            raise ScheduleError(f"position {i} outside 0..{state.params.n - 1}")
    return state.point(i1), state.point(i2)


def classify(state: DeltaState, i1: int, i2: int) -> Classification:
    """Evaluate the pair at both erasure points and name the update case."""
    _points(state, i1, i2)
    f = state.params.field
    e11, e12 = state.value(state.delta1, i1), state.value(state.delta1, i2)
    e21, e22 = state.value(state.delta2, i1), state.value(state.delta2, i2)
    dbar = f.mul(e11, e22) ^ f.mul(e12, e21)
    single = (e21 == 0) != (e22 == 0)
    if dbar:
        tag = CaseTag.REGULAR
    elif e11 == 0 and e12 == 0:
        tag = CaseTag.FAIL1
    elif e21 == 0 and e22 == 0:
        tag = CaseTag.FAIL2
    else:
        tag = CaseTag.MIXED
    return Classification(tag, (e11, e12), (e21, e22), dbar, single)


def _classification(state, i1, i2, cls):
    return classify(state, i1, i2) if cls is None else cls


def _delta1_regular(state: DeltaState, a1: int, a2: int, cls: Classification):
    # a*delta2 + (x + b)*delta1 vanishing at a1, a2
    f = state.params.field
    (e11, e12), (e21, e22) = cls.d1, cls.d2
    inv = f.inv(cls.dbar)
    a = f.mul(f.mul(f.mul(e11, e12), a1 ^ a2), inv)
    b = f.mul(f.mul(f.mul(e11, e22), a1) ^ f.mul(f.mul(e12, e21), a2), inv)
    poly = state.combine(a, state.delta2, 1, state.affine(state.delta1, 1, b))
    deg = _deg_combine((a, state.deg2), (1, _deg_affine(state.deg1, 1, b)))
    return poly, deg


def _delta2_regular(state: DeltaState, a1: int, a2: int, cls: Classification):
    # delta1 + (a*x + b)*delta2 vanishing at a1, a2; single-zero shortcut
    f = state.params.field
    (e11, e12), (e21, e22) = cls.d1, cls.d2
    if e22 == 0 and e21 != 0:
        return state.affine(state.delta2, 1, a1), _deg_affine(state.deg2, 1, a1)
    if e21 == 0 and e22 != 0:
        return state.affine(state.delta2, 1, a2), _deg_affine(state.deg2, 1, a2)
    if e21 == 0 and e22 == 0:
        return state.delta2, state.deg2
    inv = f.inv(f.mul(f.mul(e21, e22), a1 ^ a2))
    a = f.mul(f.mul(e11, e22) ^ f.mul(e12, e21), inv)
    b = f.mul(f.mul(f.mul(e12, e21), a1) ^ f.mul(f.mul(e11, e22), a2), inv)
    poly = state.combine(1, state.delta1, 1, state.affine(state.delta2, a, b))
    deg = _deg_combine((1, state.deg1), (1, _deg_affine(state.deg2, a, b)))
    return poly, deg


def _advance(state: DeltaState, i1: int, i2: int, **changes) -> DeltaState:
    return replace(state, j=state.j + 1, erased=state.erased + (i1, i2), **changes)


def regular_update(state: DeltaState, i1: int, i2: int, cls: Classification | None = None) -> DeltaState:
    """Force zeros at both points with ``deg delta1`` growing by one."""
    a1, a2 = _points(state, i1, i2)
    cls = _classification(state, i1, i2, cls)
    if cls.dbar == 0:
        raise ValueError("regular update needs a nonzero determinant")
    p1, g1 = _delta1_regular(state, a1, a2, cls)
    p2, g2 = _delta2_regular(state, a1, a2, cls)
    return _advance(state, i1, i2, delta1=p1, delta2=p2, deg1=g1, deg2=g2)


def special_update_plus(state: DeltaState, i1: int, i2: int, cls: Classification | None = None) -> DeltaState:
    """``delta1 <- (x-a1)(x-a2) delta1``; dd + 1.

    ``delta2`` is kept for FAIL2 and updated by the regular rule for MIXED.
    """
    a1, a2 = _points(state, i1, i2)
    cls = _classification(state, i1, i2, cls)
    p1 = state.root_pair(state.delta1, a1, a2)
    g1 = state.deg1 + 2 if state.deg1 != NEG_INF else NEG_INF
    if cls.tag is CaseTag.FAIL2:
        p2, g2 = state.delta2, state.deg2
    else:
        p2, g2 = _delta2_regular(state, a1, a2, cls)
    return _advance(state, i1, i2, delta1=p1, delta2=p2, deg1=g1, deg2=g2,
                    dd=state.dd + 1, specials=state.specials + 1)


def special_update_minus(state: DeltaState, i1: int, i2: int, cls: Classification | None = None) -> DeltaState:
    """``delta1`` already vanishes at both points; ``delta2`` takes the pair; dd - 1."""
    a1, a2 = _points(state, i1, i2)
    p2 = state.root_pair(state.delta2, a1, a2)
    g2 = state.deg2 + 2 if state.deg2 != NEG_INF else NEG_INF
    return _advance(state, i1, i2, delta2=p2, deg2=g2, dd=state.dd - 1, specials=state.specials + 1)


def compensate_plus(state: DeltaState, i1: int, i2: int, cls: Classification | None = None) -> DeltaState:
    """Undo one unit of positive drift.

    ``delta1 <- (x + a) delta2 + b delta1`` and
    ``delta2 <- (x-a1)(x-a2) delta2``.  When ``delta2`` vanishes at either
    point the step would discard ``delta1``; a regular update runs instead.
    """
    a1, a2 = _points(state, i1, i2)
    cls = _classification(state, i1, i2, cls)
    if state.dd <= 0 or cls.dbar == 0:
        raise ValueError("compensate_plus needs dd > 0 and a nonzero determinant")
    (e11, e12), (e21, e22) = cls.d1, cls.d2
    if e21 == 0 or e22 == 0:
        return regular_update(state, i1, i2, cls)
    f = state.params.field
    inv = f.inv(cls.dbar)
    a = f.mul(f.mul(f.mul(e12, e21), a1) ^ f.mul(f.mul(e11, e22), a2), inv)
    b = f.mul(f.mul(f.mul(e21, e22), a1 ^ a2), inv)
    p1 = state.combine(1, state.affine(state.delta2, 1, a), b, state.delta1)
    g1 = _deg_combine((1, _deg_affine(state.deg2, 1, a)), (b, state.deg1))
    p2 = state.root_pair(state.delta2, a1, a2)
    g2 = state.deg2 + 2 if state.deg2 != NEG_INF else NEG_INF
    return _advance(state, i1, i2, delta1=p1, delta2=p2, deg1=g1, deg2=g2, dd=state.dd - 1)


def compensate_minus(state: DeltaState, i1: int, i2: int, cls: Classification | None = None) -> DeltaState:
    """Undo one unit of negative drift.

    ``delta1 <- (x-a1)(x-a2) delta1`` and
    ``delta2 <- a delta2 + (x + b) delta1``.  Blocked (regular update
    instead) when ``delta1`` vanishes at either point.
    """
    a1, a2 = _points(state, i1, i2)
    cls = _classification(state, i1, i2, cls)
    if state.dd >= 0 or cls.dbar == 0:
        raise ValueError("compensate_minus needs dd < 0 and a nonzero determinant")
    (e11, e12), _ = cls.d1, cls.d2
    if e11 == 0 or e12 == 0:
        return regular_update(state, i1, i2, cls)
    p2, g2 = _delta1_regular(state, a1, a2, cls)
    p1 = state.root_pair(state.delta1, a1, a2)
    g1 = state.deg1 + 2 if state.deg1 != NEG_INF else NEG_INF
    return _advance(state, i1, i2, delta1=p1, delta2=p2, deg1=g1, deg2=g2, dd=state.dd + 1)


def extra_solution(state: DeltaState, i1: int, i2: int, cls: Classification | None = None) -> Candidate | None:
    """Additional candidate ``a*delta2 + b*delta1`` in a degenerate iteration.

    Only offered when the pair was seeded with the partial quotient.  With a
    zero determinant the two vanishing conditions are dependent, so a
    constant combination hits both points; it is kept if the coefficient of
    ``delta2`` is nonzero.
    """
    if not state.qhat_used:
        return None
    a1, a2 = _points(state, i1, i2)
    cls = _classification(state, i1, i2, cls)
    if cls.dbar != 0:
        return None
    (e11, e12), (e21, e22) = cls.d1, cls.d2
    a, b = (e11, e21) if (e11 or e21) else (e12, e22)
    if a == 0:
        return None
    loc = state.combine(a, state.delta2, b, state.delta1)
    if state.is_zero(loc):
        return None
    erased = state.erased + (i1, i2)
    if any(state.value(loc, i) for i in erased):
        return None
    deg = _deg_combine((a, state.deg2), (b, state.deg1))
    return Candidate(state.locator(loc), erased, deg, state.j + 1, Origin.EXTRA,
                     deg == state.nominal(state.j + 1), state.aux(loc))


# -- full run ----------------------------------------------------------------------

def _fmt_deg(deg) -> str:
    return "-inf" if deg == NEG_INF else str(int(deg))


def _iterate(state: DeltaState, i1: int, i2: int):
    """One pass of the dispatch; returns ``(new_state, action, origin, extra)``."""
    cls = classify(state, i1, i2)
    extra = None
    if state.dd == 0 and cls.dbar:
        return regular_update(state, i1, i2, cls), "REGULAR", Origin.REGULAR, None
    if cls.dbar == 0:
        extra = extra_solution(state, i1, i2, cls)
        if cls.tag is CaseTag.FAIL1:
            new = special_update_minus(state, i1, i2, cls)
        else:
            new = special_update_plus(state, i1, i2, cls)
        return new, cls.tag.value, Origin.SPECIAL, extra
    (e11, e12), (e21, e22) = cls.d1, cls.d2
    if state.dd > 0:
        new = compensate_plus(state, i1, i2, cls)
        action = "BLOCKED" if e21 == 0 or e22 == 0 else "COMP_PLUS"
    else:
        new = compensate_minus(state, i1, i2, cls)
        action = "BLOCKED" if e11 == 0 or e12 == 0 else "COMP_MINUS"
    return new, action, Origin.REGULAR, None


def _pairs(schedule) -> Sequence[tuple[int, int]]:
    return getattr(schedule, "pairs", schedule)


def run_engine(state: DeltaState, schedule: Iterable[tuple[int, int]], stop_degree=None) -> CandidateList:
    """Drive the iterations from an already built state (either form)."""
    d = state.params.d
    limit = d - 1 if stop_degree is None else stop_degree
    out = CandidateList(
        [Candidate(state.locator(state.delta1), (), state.deg1, 0, Origin.BMD, True, state.aux(state.delta1))],
        [],
        [state],
    )
    for i1, i2 in _pairs(schedule):
        if state.nominal() >= limit:
            break
        j = state.j
        state, action, origin, extra = _iterate(state, int(i1), int(i2))
        out.trace.append(
            f"j={j} case={action} dd={state.dd} deg1={_fmt_deg(state.deg1)} "
            f"deg2={_fmt_deg(state.deg2)} erased={i1},{i2}"
        )
        out.states.append(state)
        on_schedule = state.deg1 == state.nominal()
        out.entries.append(Candidate(state.locator(state.delta1), state.erased, state.deg1, state.j, origin,
                                     on_schedule, state.aux(state.delta1)))
        if extra is not None and not state.proportional(extra.locator, state.delta1):
            out.entries.append(extra)
    return out


def gmd_run(init: TransitionInfo, schedule, params: CodeParams) -> CandidateList:
    """Polynomial-path GMD extension."""
    return run_engine(DeltaState.from_transition(init, params), schedule)


def gmd_run_vectors(init: TransitionInfo, schedule, params: CodeParams) -> CandidateList:
    """Evaluation-vector GMD extension; O(n) field operations per iteration."""
    return run_engine(EvalState.from_transition(init, params), schedule)
