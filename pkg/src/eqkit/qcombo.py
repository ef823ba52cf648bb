"""q-integers, q-factorials, Gaussian binomials, and the product used on the
right-hand side of the inhomogeneous Serre relations.

All values are exact elements of Q(q); the node data (index, symmetrizer
entry) enters only through q_i = q**d_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidCartanEntry
from .scalars import RF_ONE, RF_ZERO, RationalFunction, rf_qpow


@dataclass(frozen=True)
class QIndex:
    """A node index together with its symmetrizer entry d_i."""

    index: int
    d: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"node index must be >= 1, got {self.index}")
        if self.d < 1:
            raise ValueError(f"symmetrizer entry must be >= 1, got {self.d}")

    def qpow(self, k):
        """q_i**k = q**(d_i * k)."""
        return rf_qpow(self.d * k)


def q_sub(i: QIndex) -> RationalFunction:
    """The deformation parameter q_i attached to node i."""
    return i.qpow(1)


def q_int(m: int, i: QIndex) -> RationalFunction:
    """The bracket (q_i**m - q_i**-m) / (q_i - q_i**-1); odd in m."""
    return _q_int(m, i.d)


@lru_cache(maxsize=None)
def _q_int(m, d):
    if m == 0:
        return RF_ZERO
    if m < 0:
        return -_q_int(-m, d)
    # sum_{k=0..m-1} q_i^(m-1-2k), the expanded form of the defining ratio
    out = RF_ZERO
    for k in range(m):
        out = out + rf_qpow(d * (m - 1 - 2 * k))
    return out


@lru_cache(maxsize=None)
def _q_factorial(m, d):
    out = RF_ONE
    for k in range(1, m + 1):
        out = out * _q_int(k, d)
    return out


def q_binom(m: int, r: int, i: QIndex) -> RationalFunction:
    """Gaussian binomial coefficient for node i.

    Zero outside 0 <= r <= m, which keeps recurrences and summation loops
    total without boundary cases.
    """
    if m < 0:
        raise ValueError(f"upper entry must be >= 0, got {m}")
    if r < 0 or r > m:
        return RF_ZERO
    return _q_binom(m, r, i.d)


@lru_cache(maxsize=None)
def _q_binom(m, r, d):
    return _q_factorial(m, d) / (_q_factorial(r, d) * _q_factorial(m - r, d))


def serre_rhs_product(a: int, i: QIndex) -> RationalFunction:
    """prod_{s=0..-a} (1 - q_i**(a+2s)) for an off-diagonal entry a <= 0.

    Vanishes exactly when a is even (the s = -a/2 factor is 1 - 1).
    """
    if a > 0:
        raise InvalidCartanEntry(f"off-diagonal Cartan entry must be <= 0, got {a}")
    out = RF_ONE
    for s in range(0, -a + 1):
        out = out * (RF_ONE - i.qpow(a + 2 * s))
    return out
