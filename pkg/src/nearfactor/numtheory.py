"""Exact modular arithmetic helpers: gcd, totient, inverses, halving, CRT."""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass


@dataclass(frozen=True)
class Residue:
    """An integer stored normalized into [0, modulus)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"residue value {self.value} not in [0, {self.modulus})")

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of |a| and |b|, with gcd(0, 0) = 0."""
    return math.gcd(operator.index(a), operator.index(b))


def totient(n: int) -> int:
    """Count of integers in [1, n] coprime to n, via trial-division factoring."""
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    result = n
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            result -= result // p
            while remaining % p == 0:
                remaining //= p
        p += 1
    if remaining > 1:
        result -= result // remaining
    return result


def mod_inverse(r: int, n: int) -> Residue:
    """The x in [0, n) with (r * x) % n == 1.

    Raises ValueError ("no inverse") when gcd(r, n) != 1.
    """
    n = operator.index(n)
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    r = operator.index(r)
    try:
        x = pow(r, -1, n)
    except ValueError:
        raise ValueError(f"no inverse: gcd({r}, {n}) = {math.gcd(r, n)} != 1") from None
    return Residue(x, n)


def half_mod(k: int, n: int) -> Residue:
    """Half of k modulo odd n: the unique x in [0, n) with (2 * x) % n == k % n."""
    n = operator.index(n)
    if n < 3 or n % 2 == 0:
        raise ValueError(f"half_mod requires odd n >= 3, got {n}")
    inv2 = pow(2, -1, n)
    return Residue(operator.index(k) * inv2 % n, n)


def crt_combine(k: int, l: int, s: int, t: int) -> Residue:
    """The unique p in [0, s*t) with p % s == k % s and p % t == l % t.

    The moduli s and t must be coprime; otherwise ValueError
    ("moduli not coprime") is raised.
    """
    s = operator.index(s)
    t = operator.index(t)
    if s < 1 or t < 1:
        raise ValueError(f"moduli must be >= 1, got ({s}, {t})")
    g = math.gcd(s, t)
    if g != 1:
        raise ValueError(f"moduli not coprime: gcd({s}, {t}) = {g}")
    k = operator.index(k) % s
    l = operator.index(l) % t
    p = (k * t * pow(t, -1, s) + l * s * pow(s, -1, t)) % (s * t)
    return Residue(p, s * t)
