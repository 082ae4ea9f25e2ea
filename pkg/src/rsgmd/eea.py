"""Key-equation solving with the extended Euclidean algorithm.

The remainder sequence starts from ``r^(-1) = x^(d-1)`` and ``r^(0) = S``;
the auxiliaries from ``u^(-1) = 0`` and ``u^(0) = 1``.  Besides classical
bounded-distance decoding this module detects the point where the next
quotient can no longer be determined from the syndrome and hands the two
latest auxiliaries over to the GMD engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import CodeParams
from .poly import Poly, poly_divmod


class TerminalStateError(RuntimeError):
    """Raised when stepping past a zero remainder."""


@dataclass(frozen=True)
class EeaState:
    r_prev: Poly
    r_cur: Poly
    u_prev: Poly
    u_cur: Poly
    step: int = 0

    @classmethod
    def initial(cls, S: Poly, params: CodeParams) -> EeaState:
        f = params.field
        return cls(Poly.monomial(f, params.d - 1), S, Poly.zero(f), Poly.one(f), 0)


@dataclass(frozen=True)
class TransitionInfo:
    """Seed of the GMD extension.

    ``c_next`` is the number of coefficients of the next quotient that the
    syndrome determines; ``q_hat`` holds those coefficients when it is
    positive and the partial-quotient seed is enabled.
    """

    c_next: int
    q_hat: Poly | None
    delta1_init: Poly
    delta2_init: Poly
    state: EeaState

    @property
    def base_deg(self):
        return self.delta1_init.degree


def eea_step(state: EeaState) -> EeaState:
    if state.r_cur.is_zero():
        raise TerminalStateError("EEA already terminated (zero remainder)")
    q, r_new = poly_divmod(state.r_prev, state.r_cur)
    u_new = state.u_prev - q * state.u_cur
    return EeaState(state.r_cur, r_new, state.u_cur, u_new, state.step + 1)


def decode_bmd(S: Poly, params: CodeParams) -> tuple[Poly, Poly]:
    """Solve the key equation up to half the minimum distance.

    Returns ``(Lambda, Omega)`` from the first step where
    ``deg u > deg r``.  The locator is not validated here; a locator that
    fails to split over the locator points signals a decoding failure to
    the caller.
    """
    f = params.field
    if S.is_zero():
        return Poly.one(f), Poly.zero(f)
    state = EeaState.initial(S, params)
    while not state.u_cur.degree > state.r_cur.degree:
        state = eea_step(state)
    # Omega = -r; characteristic 2.
    return state.u_cur, state.r_cur


def leading_quotient(a: Poly, b: Poly, steps: int) -> Poly:
    """Top ``steps`` coefficients of the quotient ``a // b``.

    Runs the long division for exactly ``steps`` coefficient steps, so only
    the leading ``steps`` coefficients of ``a`` take part.
    """
    f = a.field
    if steps <= 0 or a.degree < b.degree:
        return Poly(f)
    rem = [int(c) for c in a.coeffs]
    db = int(b.degree)
    top_deg = len(rem) - 1 - db
    inv_lead = f.inv(b.lead)
    quot = [0] * (top_deg + 1)
    for k in range(top_deg, max(top_deg - steps, -1), -1):
        c = f.mul(rem[k + db], inv_lead)
        quot[k] = c
        if c:
            for i, bc in enumerate(b.coeffs):
                rem[k + i] ^= f.mul(c, int(bc))
    return Poly(f, quot)


def probe_transition(state: EeaState, params: CodeParams, use_qhat: bool = True) -> TransitionInfo | None:
    """Decide whether the next EEA step is still syndrome-determined.

    Returns ``None`` to continue the classical recursion, otherwise the
    initial pair for the GMD extension.
    """
    r_prev, r_cur, u_prev, u_cur = state.r_prev, state.r_cur, state.u_prev, state.u_cur
    if r_cur.is_zero():
        # No further quotient exists; nothing of it is known either.
        return TransitionInfo(0, None, u_cur, u_prev, state)
    c_next = int(r_cur.degree - u_cur.degree + 1)
    deg_q_next = r_prev.degree - r_cur.degree
    if deg_q_next + 1 <= c_next and deg_q_next <= params.t_max:
        return None
    if c_next <= 0:
        return TransitionInfo(c_next, None, u_cur, u_prev, state)
    if not use_qhat:
        return TransitionInfo(c_next, None, u_cur, u_prev, state)
    q_hat = leading_quotient(r_prev, r_cur, c_next)
    return TransitionInfo(c_next, q_hat, u_cur, u_prev - q_hat * u_cur, state)


def run_to_transition(S: Poly, params: CodeParams, use_qhat: bool = True) -> TransitionInfo:
    """EEA steps on ``(x^(d-1), S)`` until :func:`probe_transition` switches."""
    state = EeaState.initial(S, params)
    while True:
        info = probe_transition(state, params, use_qhat)
        if info is not None:
            return info
        state = eea_step(state)
