"""Exact rational evaluation of the closed-form bounds.

All values are ``fractions.Fraction``; no floating point is involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .cliques import CliqueProfile
from .errors import DomainError


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def f_s(n: int, k: int, c: int, s: int) -> Fraction:
    """Number of s-cliques in H(n, k, c): ``C(c-k, s) + C(k, s-1) * (n - (c-k))``."""
    if k < 0 or c - k < 0 or n < c - k or s < 1:
        raise DomainError(f"f_s needs n >= c-k >= 0, k >= 0, s >= 1; got n={n} k={k} c={c} s={s}")
    return Fraction(binom(c - k, s) + binom(k, s - 1) * (n - (c - k)))


def eg_cycle_bound(n: int, l: int) -> Fraction:
    """Edge bound ``(l-1)(n-1)/2`` for graphs without cycles of length ``>= l``."""
    if l < 3 or n < 1:
        raise DomainError(f"cycle bound needs l >= 3, n >= 1; got n={n} l={l}")
    return Fraction((l - 1) * (n - 1), 2)


def eg_path_bound(n: int, l: int) -> Fraction:
    """Edge bound ``(l-2)n/2`` for graphs without a path on ``l`` vertices."""
    if l < 2 or n < 1:
        raise DomainError(f"path bound needs l >= 2, n >= 1; got n={n} l={l}")
    return Fraction((l - 2) * n, 2)


def eg_bounds(n: int, l: int) -> tuple[Fraction, Fraction]:
    return eg_cycle_bound(n, l), eg_path_bound(n, l)


def luo_cycle_bound(n: int, s: int, l: int) -> Fraction:
    if s < 2 or l < 3 or n < 1:
        raise DomainError(f"needs s >= 2, l >= 3, n >= 1; got n={n} s={s} l={l}")
    return Fraction(n - 1, l - 2) * binom(l - 1, s)


def luo_path_bound(n: int, s: int, l: int) -> Fraction:
    if s < 2 or l < 2 or n < 1:
        raise DomainError(f"needs s >= 2, l >= 2, n >= 1; got n={n} s={s} l={l}")
    return Fraction(n, l - 1) * binom(l - 1, s)


def luo_bounds(n: int, s: int, l: int) -> tuple[Fraction, Fraction]:
    return luo_cycle_bound(n, s, l), luo_path_bound(n, s, l)


def extended_eg_bound(profile: CliqueProfile, s: int) -> Fraction:
    """Guaranteed path length ``(s+1) N_{s+1} / N_s + s - 1`` for ``1 <= s <= omega``."""
    if not 1 <= s <= profile.omega:
        raise DomainError(f"s={s} outside 1..omega={profile.omega}")
    return Fraction((s + 1) * profile.count(s + 1), profile.count(s)) + s - 1


def kopylov_family_bound(n: int, k: int, c: int, s: int) -> Fraction:
    """``max(f_s(n, k, c), f_s(n, floor((c-1)/2), c))`` for 2-connected graphs of circumference ``< c``."""
    if not (n >= c >= 5 and s >= 2 and k >= 2):
        raise DomainError(f"needs n >= c >= 5, s >= 2, k >= 2; got n={n} k={k} c={c} s={s}")
    return max(f_s(n, k, c, s), f_s(n, (c - 1) // 2, c, s))


def kopylov_path_bound(n: int, k: int, l: int, s: int) -> Fraction:
    """``max(f_s(n, k, l-1), f_s(n, floor(l/2) - 1, l-1))`` for connected ``P_l``-free graphs."""
    if not (n >= l >= 4 and s >= 2 and k >= 1):
        raise DomainError(f"needs n >= l >= 4, s >= 2, k >= 1; got n={n} k={k} l={l} s={s}")
    return max(f_s(n, k, l - 1, s), f_s(n, l // 2 - 1, l - 1, s))
