"""Arithmetic in GF(2^m) backed by log/antilog tables.

Elements are plain integers in ``[0, 2^m)``; bit ``k`` is the coefficient of
``x^k`` in the polynomial basis.  Addition is XOR.  Every multiplication
performed through a :class:`GaloisField` is tallied by the active
:func:`count_ops` context, which is how decoder complexity is measured.
"""

from __future__ import annotations

import contextvars
import re
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

# Primitive polynomials (bitmask including the x^m term).
DEFAULT_PRIMITIVE = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


class FieldError(ValueError):
    """Invalid field construction or an operation outside the field's domain."""


@dataclass
class OpCount:
    mul: int = 0
    inv: int = 0

    @property
    def total(self) -> int:
        return self.mul + self.inv


_active_count: contextvars.ContextVar[OpCount | None] = contextvars.ContextVar(
    "rsgmd_op_count", default=None
)


@contextmanager
def count_ops():
    """Tally field multiplications and inversions made inside the block.

    >>> with count_ops() as ops:
    ...     ...
    >>> ops.mul
    0
    """
    ops = OpCount()
    token = _active_count.set(ops)
    try:
        yield ops
    finally:
        _active_count.reset(token)


def _tally_mul(k: int) -> None:
    ops = _active_count.get()
    if ops is not None:
        ops.mul += k


def _tally_inv(k: int = 1) -> None:
    ops = _active_count.get()
    if ops is not None:
        ops.inv += k


class GaloisField:
    """GF(2^m) with a designated element ``alpha`` of order ``n``.

    ``n`` defaults to ``2^m - 1`` (alpha primitive).  Any divisor of
    ``2^m - 1`` is accepted, in which case alpha is the corresponding power
    of the primitive element.  Instances are immutable after construction.
    """

    def __init__(self, m: int, primitive_polynomial: int | None = None, n: int | None = None):
        if not 2 <= m <= 16:
            raise FieldError(f"extension degree m={m} outside [2, 16]")
        if primitive_polynomial is None:
            primitive_polynomial = DEFAULT_PRIMITIVE[m]
        poly = int(primitive_polynomial)
        if poly.bit_length() - 1 != m:
            raise FieldError(f"polynomial {poly:#x} does not have degree {m}")

        q = 1 << m
        order = q - 1
        exp = [0] * (2 * order)
        log = [-1] * q
        x = 1
        for i in range(order):
            if i > 0 and x == 1:
                raise FieldError(
                    f"polynomial {poly:#x} is not primitive: x has order {i}, not {order}"
                )
            exp[i] = x
            if log[x] != -1:
                raise FieldError(f"polynomial {poly:#x} is not primitive (reducible)")
            log[x] = i
            x <<= 1
            if x & q:
                x ^= poly
        if x != 1:
            raise FieldError(f"polynomial {poly:#x} is reducible")
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]

        if n is None:
            n = order
        if n < 1 or order % n:
            raise FieldError(f"n={n} does not divide q-1={order}")

        self.m = m
        self.q = q
        self.order = order
        self.n = n
        self.primitive_polynomial = poly
        self._exp = exp
        self._log = log
        self.alpha = exp[order // n]
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array([max(v, 0) for v in log], dtype=np.int64)
        self.exp_table.setflags(write=False)
        self.log_table.setflags(write=False)
        # zero maps to a log far past the table; any sum involving it lands in the zero tail
        self._logz = np.where(np.arange(q) == 0, 2 * order, self.log_table)
        self._expz = np.concatenate([self.exp_table, np.zeros(2 * order + 1, dtype=np.int64)])

    # identity ---------------------------------------------------------------
    def _key(self):
        return (self.m, self.primitive_polynomial, self.n)

    def __eq__(self, other):
        return isinstance(other, GaloisField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GaloisField(m={self.m}, poly={self.primitive_polynomial:#x}, n={self.n})"

    @property
    def spec(self) -> str:
        return f"gf(2^{self.m}):{self.primitive_polynomial:#x}"

    # scalar arithmetic ------------------------------------------------------
    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        _tally_mul(1)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        _tally_inv()
        return self._exp[(self.order - self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise FieldError("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self.order]

    def log(self, a: int) -> int:
        """Discrete log of ``a`` to the base of the primitive element."""
        if a == 0:
            raise FieldError("log of zero")
        return self._log[a]

    def alpha_pow(self, e: int) -> int:
        """``alpha ** e`` for any integer ``e`` (negative allowed)."""
        step = self.order // self.n
        return self._exp[(step * e) % self.order]

    # vector arithmetic ------------------------------------------------------
    def vmul(self, a, b) -> np.ndarray:
        """Elementwise product with numpy broadcasting; counts one mul per output."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._expz[self._logz[a] + self._logz[b]]
        _tally_mul(int(out.size))
        return out

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldError("inverse of zero")
        _tally_inv(int(a.size))
        return self.exp_table[(self.order - self.log_table[a]) % self.order]

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)


def build_field(m: int, primitive_polynomial: int | None = None, n: int | None = None) -> GaloisField:
    return GaloisField(m, primitive_polynomial, n)


_FIELD_RE = re.compile(r"^\s*gf\(\s*2\s*\^\s*(\d+)\s*\)\s*(?::\s*(0x[0-9a-fA-F]+|\d+))?\s*$")


def parse_field_spec(text: str) -> GaloisField:
    """Parse ``"gf(2^m):0xPP"``; the polynomial part may be omitted."""
    match = _FIELD_RE.match(text)
    if not match:
        raise FieldError(f"malformed field spec {text!r}; expected 'gf(2^m):0xPP'")
    m = int(match.group(1))
    poly = int(match.group(2), 0) if match.group(2) else None
    return GaloisField(m, poly)
