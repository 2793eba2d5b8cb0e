"""Left normal form in the Garside structure of B_n.

Used only as an independent oracle for :func:`tckit.braid.is_equal`; it shares
no code with the free-group procedure beyond the BraidWord container.

Simple (permutation) braids are stored as tuples ``p`` with ``p[j]`` the final
position of the strand starting at position ``j`` (0-based).  Factors are
multiplied left to right.
"""

from __future__ import annotations

from functools import lru_cache

from .braid import BraidWord

Perm = tuple[int, ...]


def _half_twist(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _transposition(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _then(p: Perm, q: Perm) -> Perm:
    return tuple(q[x] for x in p)


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for j, x in enumerate(p):
        inv[x] = j
    return tuple(inv)


def _tau(p: Perm) -> Perm:
    # conjugation by the half twist
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


@lru_cache(maxsize=None)
def _finishing(p: Perm) -> frozenset[int]:
    # generators i (1-based) such that the simple braid can end with sigma_i
    inv = _inverse(p)
    return frozenset(i for i in range(1, len(p)) if inv[i - 1] > inv[i])


@lru_cache(maxsize=None)
def _starting(p: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


@lru_cache(maxsize=1 << 16)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    n = len(a)
    while True:
        movable = _starting(b) - _finishing(a)
        if not movable:
            return a, b
        s = _transposition(n, min(movable))
        a = _then(a, s)
        b = _then(s, b)


def _append(power: int, factors: list[Perm], s: Perm) -> int:
    """Right-multiply a left normal form by a simple braid, in place; returns new power."""
    n = len(s)
    ident = tuple(range(n))
    if s == ident:
        return power
    factors.append(s)
    k = len(factors) - 2
    while k >= 0:
        a, b = _left_weight(factors[k], factors[k + 1])
        if (a, b) == (factors[k], factors[k + 1]):
            break
        factors[k], factors[k + 1] = a, b
        k -= 1
    delta = _half_twist(n)
    while factors and factors[0] == delta:
        factors.pop(0)
        power += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return power


def normal_form(w: BraidWord) -> tuple[int, tuple[Perm, ...]]:
    """Return ``(p, factors)`` with ``w = Delta^p * factors`` in left normal form."""
    n = w.degree
    delta = _half_twist(n)
    power = 0
    factors: list[Perm] = []
    for x in w.letters:
        s = _transposition(n, abs(x))
        if x > 0:
            power = _append(power, factors, s)
        else:
            # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); slide Delta^-1 to the front
            factors[:] = [_tau(f) for f in factors]
            power = _append(power - 1, factors, _then(delta, s))
    return power, tuple(factors)


def is_equal_garside(u: BraidWord, v: BraidWord) -> bool:
    if u.degree != v.degree:
        raise ValueError("degrees differ")
    return normal_form(u) == normal_form(v)
