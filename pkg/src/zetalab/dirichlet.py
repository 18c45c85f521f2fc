"""Real quadratic Dirichlet characters and sums of two squares.

The primary character is the odd character mod 4. General moduli are
served only where a unique fundamental discriminant +-q exists, so a
table can never silently be wrong: modulus 4 (discriminant -4) and odd
squarefree q >= 3. Everything else raises UnsupportedModulusError.

Both representation counts are carried side by side: r_divisor(n) is
the character sum over divisors, r_lattice(n) counts integer points on
the circle of radius sqrt(n). Their 1:4 relation is a theorem checked
by the tests, never assumed by the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Callable, Union

import numpy as np

__all__ = [
    "DirichletCharacter",
    "UnsupportedModulusError",
    "chi4",
    "kronecker",
    "quadratic_character",
    "r_divisor",
    "r_divisor_table",
    "r_lattice",
    "r_lattice_table",
]


class UnsupportedModulusError(ValueError):
    """Raised for moduli without a uniquely determined quadratic character."""


def chi4(n: int) -> int:
    """The odd quadratic character mod 4: (-1)**((n-1)/2) on odd n, else 0."""
    m = n & 3
    if m == 1:
        return 1
    if m == 3:
        return -1
    return 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a | n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        if e % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


@dataclass(frozen=True)
class DirichletCharacter:
    """Periodic completely multiplicative map given by its value table."""

    modulus: int
    values: tuple[int, ...]

    def __call__(self, n: int) -> int:
        return self.values[n % self.modulus]


def quadratic_character(q: int) -> DirichletCharacter:
    """The real primitive character of modulus q, from the Kronecker symbol.

    Supported q: 4, and odd squarefree q >= 3 (discriminant q for
    q = 1 mod 4, -q for q = 3 mod 4).
    """
    if q == 4:
        disc = -4
    elif q >= 3 and q % 2 == 1 and _squarefree(q):
        disc = q if q % 4 == 1 else -q
    else:
        raise UnsupportedModulusError(f"unsupported modulus {q}")
    values = tuple(kronecker(disc, r) for r in range(q))
    return DirichletCharacter(q, values)


def _squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


ChiLike = Union[DirichletCharacter, Callable[[int], int], None]


def _resolve_chi(chi: ChiLike) -> Callable[[int], int]:
    return chi4 if chi is None else chi


def r_divisor(n: int, chi: ChiLike = None) -> int:
    """sum of chi(d) over the divisors d of n, by trial division."""
    if n < 1:
        raise ValueError("r_divisor requires n >= 1")
    ch = _resolve_chi(chi)
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += ch(d)
            e = n // d
            if e != d:
                total += ch(e)
        d += 1
    return total


def r_lattice(n: int) -> int:
    """Number of integer pairs (a, b) with a*a + b*b = n, by enumeration."""
    if n < 1:
        raise ValueError("r_lattice requires n >= 1")
    count = 0
    for a in range(-isqrt(n), isqrt(n) + 1):
        rem = n - a * a
        b = isqrt(rem)
        if b * b == rem:
            count += 1 if b == 0 else 2
    return count


def r_divisor_table(limit: int, chi: ChiLike = None) -> np.ndarray:
    """r_divisor(n) for all n <= limit, by a divisor sieve. Index 0 unused."""
    if limit < 1:
        raise ValueError("r_divisor_table requires limit >= 1")
    ch = _resolve_chi(chi)
    out = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        c = ch(d)
        if c:
            out[d::d] += c
    return out


def r_lattice_table(limit: int) -> np.ndarray:
    """r_lattice(n) for all n <= limit, by one sweep over the quadrant."""
    if limit < 1:
        raise ValueError("r_lattice_table requires limit >= 1")
    out = np.zeros(limit + 1, dtype=np.int64)
    top = isqrt(limit)
    for a in range(1, top + 1):
        out[a * a] += 4  # (+-a, 0) and (0, +-a)
        cap = isqrt(limit - a * a)
        for b in range(1, cap + 1):
            out[a * a + b * b] += 4  # sign choices of (a, b), a,b >= 1
    return out
