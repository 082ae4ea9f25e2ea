"""Spectral Reed-Solomon codes: DFT encoding and syndromes.

A word ``c`` of length ``n`` is a codeword when its transform
``C_j = c(alpha^j)`` vanishes for ``j = 0..d-2``.  Position ``i`` is tied to
the locator point ``alpha^(-i)``: a locator polynomial marks position ``i``
by vanishing at that point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import GaloisField, _tally_mul, parse_field_spec
from .poly import Poly


class CodeParamError(ValueError):
    pass


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    field: GaloisField

    def __post_init__(self):
        if self.n != self.field.n:
            if (self.field.order % self.n) != 0:
                raise CodeParamError(f"n={self.n} does not divide q-1={self.field.order}")
            object.__setattr__(self, "field", GaloisField(self.field.m, self.field.primitive_polynomial, self.n))
        if not 1 <= self.k < self.n:
            raise CodeParamError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def t_max(self) -> int:
        """Unique-decoding radius ``floor((d-1)/2)``."""
        return (self.d - 1) // 2

    @cached_property
    def locator_points(self) -> np.ndarray:
        """``alpha^(-i)`` for every position ``i``."""
        pts = np.array([self.field.alpha_pow(-i) for i in range(self.n)], dtype=np.int64)
        pts.setflags(write=False)
        return pts

    @cached_property
    def position_of(self) -> dict[int, int]:
        return {int(p): i for i, p in enumerate(self.locator_points)}

    @property
    def spec(self) -> str:
        return f"rs({self.n},{self.k})@{self.field.spec}"

    def __repr__(self):
        return f"CodeParams({self.spec})"


_CODE_RE = re.compile(r"^\s*rs\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*@\s*(.+)$")


def parse_code_spec(text: str) -> CodeParams:
    """Parse ``"rs(n,k)@gf(2^m):0xPP"``."""
    match = _CODE_RE.match(text)
    if not match:
        raise CodeParamError(f"malformed code spec {text!r}; expected 'rs(n,k)@gf(2^m):0xPP'")
    field = parse_field_spec(match.group(3))
    return CodeParams(int(match.group(1)), int(match.group(2)), field)


def _transform(field: GaloisField, vec, sign: int, rows: int) -> np.ndarray:
    # out[j] = sum_i vec[i] * alpha^(sign*i*j), j < rows
    vec = np.asarray(vec, dtype=np.int64)
    n = field.n
    step = field.order // n
    i = np.arange(len(vec))
    j = np.arange(rows)
    expo = (field.log_table[vec][None, :] + step * ((sign * np.outer(j, i)) % n)) % field.order
    terms = np.where(vec[None, :] == 0, 0, field.exp_table[expo])
    _tally_mul(terms.size)
    return np.bitwise_xor.reduce(terms, axis=1) if len(vec) else np.zeros(rows, dtype=np.int64)


def dft(w, params: CodeParams) -> np.ndarray:
    """Time word to spectrum: ``C_j = c(alpha^j)``."""
    return _transform(params.field, w, +1, params.n)


def idft(W, params: CodeParams) -> np.ndarray:
    """Spectrum to time word: ``c_i = n^-1 * C(alpha^-i)``."""
    out = _transform(params.field, W, -1, params.n)
    # n is odd (it divides 2^m - 1), so n^-1 = 1 in characteristic 2.
    return out


def encode(info, params: CodeParams) -> np.ndarray:
    """Place ``k`` information symbols on spectral slots ``d-1..n-1`` and invert."""
    info = np.asarray(info, dtype=np.int64)
    if info.shape != (params.k,):
        raise CodeParamError(f"expected {params.k} information symbols, got shape {info.shape}")
    spectrum = np.concatenate([np.zeros(params.d - 1, dtype=np.int64), info])
    return idft(spectrum, params)


def syndrome(r, params: CodeParams) -> Poly:
    """``S(x) = R(x) mod x^(d-1)``."""
    r = np.asarray(r, dtype=np.int64)
    if r.shape != (params.n,):
        raise CodeParamError(f"word length {r.shape} != n={params.n}")
    return Poly(params.field, _transform(params.field, r, +1, params.d - 1))


def is_codeword(w, params: CodeParams) -> bool:
    return syndrome(w, params).is_zero()
