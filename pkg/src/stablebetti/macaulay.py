"""Binomial coefficients, Macaulay representations, shift operators and
cumulative-sum operators.

Everything here is exact integer arithmetic.  The binomial convention is
the one needed by the shift operators: binom(p, q) = 0 whenever p or q is
negative or q > p, and binom(0, 0) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import comb

from .errors import DomainError


def binom(p: int, q: int) -> int:
    """Binomial coefficient under the extended convention.

    Standard value for 0 <= q <= p, and 0 as soon as q > p or either
    argument is negative.  binom(0, 0) = 1.
    """
    if p < 0 or q < 0 or q > p:
        return 0
    return comb(p, q)


@dataclass(frozen=True)
class MacaulayRep:
    """The d-th Macaulay representation of a nonnegative integer.

    a = sum_{i=1}^{d} binom(ks[d-i], i) where ks = (k(d), ..., k(1)) is
    strictly decreasing with k(1) >= 0.  For a = 0 the canonical choice
    is k(i) = i - 1, which makes every term vanish.
    """

    a: int
    d: int
    ks: tuple[int, ...]

    def terms(self):
        """Pairs (k(i), i) from i = d down to 1."""
        return tuple(zip(self.ks, range(self.d, 0, -1)))

    def value(self) -> int:
        return sum(binom(k, i) for k, i in self.terms())


def _greedy_arg(rem, i, cap):
    # Largest k <= cap with binom(k, i) <= rem; k = i - 1 encodes a zero term.
    if i == 1:
        k = rem
    else:
        k = i - 1
        while binom(k + 1, i) <= rem:
            k += 1
    if cap is not None and k > cap:
        k = cap
    return k


@lru_cache(maxsize=65536)
def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """The unique d-th Macaulay representation of a (greedy-maximal)."""
    if d < 1:
        raise DomainError("representation index d must be positive")
    if a < 0:
        raise DomainError("cannot represent a negative integer")
    ks = []
    rem = a
    cap = None
    for i in range(d, 0, -1):
        k = _greedy_arg(rem, i, cap)
        ks.append(k)
        rem -= binom(k, i)
        cap = k - 1
    assert rem == 0
    return MacaulayRep(a, d, tuple(ks))


def macaulay_shift(a: int, d: int, j: int) -> int:
    """Re-evaluate the d-th Macaulay representation of a with both binomial
    arguments shifted by j: sum of binom(k(i) + j, i + j).

    j = 0 returns a, j = 1 is the classical upper shift, and negative j is
    allowed (terms vanish once an argument turns negative).
    """
    rep = macaulay_rep(a, d)
    return sum(binom(k + j, i + j) for k, i in rep.terms())


def min_shift_preimage(k: int, i: int, ell: int) -> int:
    """Minimum a >= 1 with k <= macaulay_shift(a, i - 1, ell - i).

    Requires 2 <= i < ell and k >= 1.  The shift is monotone in a, so a
    binary search on [1, k] suffices (a = k always satisfies the bound
    because ell - i >= 1 shifts upward).
    """
    if not 2 <= i < ell:
        raise DomainError("need 2 <= i < ell")
    if k < 1:
        raise DomainError("k must be positive")
    lo, hi = 1, k
    while lo < hi:
        mid = (lo + hi) // 2
        if k <= macaulay_shift(mid, i - 1, ell - i):
            hi = mid
        else:
            lo = mid + 1
    return lo


def is_o_sequence(m) -> bool:
    """O-sequence test in vector form: m_1 = 1 and m_{i+1} <= m_i^<i-1>
    for every i >= 2.  No constraint ties m_2 to m_1; callers needing the
    degree bound m_2 <= d enforce it themselves.
    """
    m = tuple(m)
    if not m:
        raise DomainError("empty vector")
    if any(x < 0 for x in m):
        raise DomainError("entries must be nonnegative")
    if m[0] != 1:
        return False
    for t in range(2, len(m)):
        # m[t] is m_{t+1}; the bound is m_t shifted at index t - 1
        if m[t] > macaulay_shift(m[t - 1], t - 1, 1):
            return False
    return True


def is_o_sequence_from_zero(h) -> bool:
    """O-sequence test for sequences indexed from 0 (Hilbert-function
    style): h_0 = 1 and h_{d+1} <= h_d^<d> for all d >= 1."""
    h = tuple(h)
    if not h:
        raise DomainError("empty sequence")
    if any(x < 0 for x in h):
        raise DomainError("entries must be nonnegative")
    if h[0] != 1:
        return False
    for d in range(1, len(h) - 1):
        if h[d + 1] > macaulay_shift(h[d], d, 1):
            return False
    return True


def cumsum(v) -> tuple:
    """Prefix sums, same length as the input."""
    v = tuple(v)
    if not v:
        raise DomainError("empty vector")
    return tuple(accumulate(v))


def iterated_cumsum_last(v, q: int) -> int:
    """Last entry after q applications of cumsum; q = 0 reads the last
    entry directly.  For the count vector of a stable ideal generated in
    one degree this equals the count of top-index generators after
    multiplying q times by the maximal ideal.
    """
    if q < 0:
        raise DomainError("q must be nonnegative")
    w = tuple(v)
    if not w:
        raise DomainError("empty vector")
    for _ in range(q):
        w = tuple(accumulate(w))
    return w[-1]
