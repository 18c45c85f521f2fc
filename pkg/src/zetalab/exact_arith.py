"""Exact combinatorial sequences: factorials, binomials, Bernoulli and
Euler numbers.

Integers are Python ints (unbounded); rationals are fractions.Fraction,
which keeps values in lowest terms with positive denominator. Both
number tables are memoized and extended under a lock so concurrent
readers never observe a partially built prefix.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = ["bernoulli", "binomial", "euler_number", "factorial"]

_lock = threading.Lock()
_bernoulli: list[Fraction] = [Fraction(1)]
_euler: list[int] = [1]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for 0 <= k <= n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    if k > n:
        raise ValueError("binomial requires k <= n")
    return math.comb(n, k)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m, with the convention B_1 = -1/2.

    Defined by the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    Odd indices above 1 are zero.
    """
    if m < 0:
        raise ValueError("bernoulli requires m >= 0")
    if m > 1 and m % 2 == 1:
        return Fraction(0)
    with _lock:
        while len(_bernoulli) <= m:
            k = len(_bernoulli)
            acc = sum(
                (Fraction(math.comb(k + 1, j)) * _bernoulli[j] for j in range(k)),
                Fraction(0),
            )
            _bernoulli.append(-acc / (k + 1))
        return _bernoulli[m]


def euler_number(m: int) -> int:
    """Euler (secant) number E_m: E_0 = 1, E_2 = -1, E_4 = 5, E_6 = -61.

    Even indices satisfy sum over even k <= m of C(m, k) E_k = 0 for
    even m >= 2; odd indices are zero.
    """
    if m < 0:
        raise ValueError("euler_number requires m >= 0")
    if m % 2 == 1:
        return 0
    half = m // 2
    with _lock:
        while len(_euler) <= half:
            n = 2 * len(_euler)
            acc = sum(math.comb(n, 2 * j) * _euler[j] for j in range(len(_euler)))
            _euler.append(-acc)
        return _euler[half]
