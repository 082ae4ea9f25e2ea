"""Dense univariate polynomials over a :class:`~rsgmd.gf.GaloisField`."""

from __future__ import annotations

import numpy as np

from .gf import FieldError, GaloisField, _tally_mul

NEG_INF = float("-inf")
"""Degree of the zero polynomial.  Compares below every integer degree."""


class FieldMismatchError(ValueError):
    pass


class Poly:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``x^k``.

    Trailing zero coefficients are stripped on construction, so ``coeffs``
    is empty exactly for the zero polynomial.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GaloisField, coeffs=()):
        c = np.array(coeffs, dtype=np.int64).reshape(-1)
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:0]
        c.setflags(write=False)
        self.field = field
        self.coeffs = c

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def monomial(cls, field, degree: int, coeff: int = 1):
        c = np.zeros(degree + 1, dtype=np.int64)
        c[degree] = coeff
        return cls(field, c)

    @classmethod
    def from_roots(cls, field, roots):
        """``prod (x - r)`` over ``roots``."""
        p = cls.one(field)
        for r in roots:
            p = p * cls(field, [r, 1])
        return p

    @classmethod
    def from_text(cls, field, text: str):
        """Parse ``"c0,c1,...,cd"`` (hex coefficients, ascending powers)."""
        text = text.strip()
        if not text:
            return cls.zero(field)
        return cls(field, [int(tok, 16) for tok in text.split(",")])

    def to_text(self) -> str:
        return ",".join(f"{int(c):x}" for c in self.coeffs)

    # properties -------------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if len(self.coeffs) else NEG_INF

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def lead(self) -> int:
        return int(self.coeffs[-1]) if len(self.coeffs) else 0

    def coeff(self, k: int) -> int:
        return int(self.coeffs[k]) if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs.tobytes()))

    def __repr__(self):
        return f"Poly([{self.to_text()}])"

    # arithmetic -------------------------------------------------------------
    def _check(self, other: Poly):
        if self.field != other.field:
            raise FieldMismatchError(f"operands over {self.field} and {other.field}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        out[: len(b)] ^= b
        return Poly(self.field, out)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return poly_scale(self, int(other))

    __rmul__ = __mul__

    def __divmod__(self, other: Poly):
        return poly_divmod(self, other)

    def __call__(self, x0):
        if np.ndim(x0):
            return poly_eval_many(self, x0)
        return poly_eval(self, int(x0))

    def shift(self, k: int) -> Poly:
        """``x^k * self``."""
        if self.is_zero():
            return self
        return Poly(self.field, np.concatenate([np.zeros(k, dtype=np.int64), self.coeffs]))

    def truncate(self, k: int) -> Poly:
        """``self mod x^k``."""
        return Poly(self.field, self.coeffs[:k])

    def derivative(self) -> Poly:
        """Formal derivative; ``k * c`` vanishes for even ``k`` in characteristic 2."""
        c = np.array(self.coeffs[1:])
        c[1::2] = 0
        return Poly(self.field, c)

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return poly_scale(self, self.field.inv(self.lead))


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_scale(a: Poly, s: int) -> Poly:
    if s == 0 or a.is_zero():
        return Poly(a.field)
    if s == 1:
        return a
    return Poly(a.field, a.field.vmul(s, a.coeffs))


def poly_mul(a: Poly, b: Poly) -> Poly:
    a._check(b)
    if a.is_zero() or b.is_zero():
        return Poly(a.field)
    f = a.field
    x, y = a.coeffs, b.coeffs
    if len(x) > len(y):
        x, y = y, x
    # Outer product through the log tables, then XOR along anti-diagonals.
    lx, ly = f.log_table[x], f.log_table[y]
    prod = f.exp_table[lx[:, None] + ly[None, :]]
    prod[(x == 0)[:, None] | (y == 0)[None, :]] = 0
    _tally_mul(prod.size)
    out = np.zeros(len(x) + len(y) - 1, dtype=np.int64)
    for i in range(len(x)):
        out[i : i + len(y)] ^= prod[i]
    return Poly(f, out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Long division: ``a = q*b + r`` with ``deg r < deg b``."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f = a.field
    if a.degree < b.degree:
        return Poly(f), a
    rem = a.coeffs.copy()
    db = len(b.coeffs) - 1
    inv_lead = f.inv(b.lead)
    quot = np.zeros(len(rem) - db, dtype=np.int64)
    for k in range(len(quot) - 1, -1, -1):
        top = int(rem[k + db])
        if top == 0:
            continue
        c = f.mul(top, inv_lead)
        quot[k] = c
        rem[k : k + db + 1] ^= f.vmul(c, b.coeffs)
    return Poly(f, quot), Poly(f, rem[:db])


def poly_eval(p: Poly, x0: int) -> int:
    """Horner evaluation at a single point."""
    f = p.field
    acc = 0
    for c in p.coeffs[::-1]:
        acc = f.mul(acc, x0) ^ int(c)
    return acc


def poly_eval_many(p: Poly, points) -> np.ndarray:
    """Horner evaluation at every entry of ``points`` (vectorized)."""
    f = p.field
    points = np.asarray(points, dtype=np.int64)
    acc = np.zeros(points.shape, dtype=np.int64)
    for c in p.coeffs[::-1]:
        acc = f.vmul(acc, points) ^ int(c)
    return acc


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise FieldError("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def proportional(a: Poly, b: Poly) -> bool:
    """True if ``a = s*b`` for some nonzero scalar ``s`` (both zero counts)."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a.monic() == b.monic()
