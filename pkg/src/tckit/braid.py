"""Braid words, named builders and the word problem.

A braid word of degree ``n`` is stored as a tuple of nonzero signed integers:
``i`` stands for the Artin generator sigma_i and ``-i`` for its inverse, with
``1 <= i <= n - 1``.  Words are never reduced implicitly.

Equality is decided by the Artin action of B_n on the free group F_n, which is
faithful.  A second, unrelated procedure lives in :mod:`tckit.garside` and is
used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeMismatch, IndexOutOfRange, RangeError

__all__ = [
    "BraidWord",
    "Permutation",
    "make_word",
    "identity",
    "compose",
    "invert",
    "free_reduce",
    "permutation",
    "exponent_sum",
    "iota",
    "build_pi",
    "build_delta",
    "build_theta",
    "garside_delta",
    "flip_star",
    "is_equal",
    "commute",
    "power",
    "artin_images",
]


@dataclass(frozen=True)
class BraidWord:
    degree: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.degree < 1:
            raise RangeError(f"degree must be >= 1, got {self.degree}")
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for pos, x in enumerate(letters):
            if x == 0 or abs(x) > self.degree - 1:
                raise IndexOutOfRange(
                    f"letter {x} at position {pos} outside [1, {self.degree - 1}]"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        return compose(self, other)

    def pairs(self) -> list[tuple[int, int]]:
        """The word as (generator index, sign) pairs."""
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def __str__(self):
        if not self.letters:
            return f"e in B{self.degree}"
        return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.letters)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..degree}; ``images[j - 1]`` is the image of j."""

    degree: int
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.degree or sorted(images) != list(range(1, self.degree + 1)):
            raise ValueError(f"not a permutation of 1..{self.degree}: {images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(degree, tuple(range(1, degree + 1)))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        return Permutation(self.degree, tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for j, x in enumerate(self.images, start=1):
            inv[x - 1] = j
        return Permutation(self.degree, tuple(inv))

    def is_identity(self) -> bool:
        return all(x == j for j, x in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out


def make_word(degree: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(degree, tuple(letters))


def identity(degree: int) -> BraidWord:
    return BraidWord(degree, ())


def _check_same_degree(u: BraidWord, v: BraidWord) -> None:
    if u.degree != v.degree:
        raise DegreeMismatch(f"degrees differ: {u.degree} vs {v.degree}")


def compose(u: BraidWord, v: BraidWord, *more: BraidWord) -> BraidWord:
    """Concatenate words of equal degree (no reduction)."""
    letters = list(u.letters)
    for w in (v, *more):
        _check_same_degree(u, w)
        letters.extend(w.letters)
    return BraidWord(u.degree, tuple(letters))


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.degree, tuple(-x for x in reversed(u.letters)))


def power(u: BraidWord, k: int) -> BraidWord:
    base = u if k >= 0 else invert(u)
    return BraidWord(u.degree, base.letters * abs(k))


def _reduce(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def free_reduce(u: BraidWord) -> BraidWord:
    return BraidWord(u.degree, tuple(_reduce(u.letters)))


def permutation(u: BraidWord) -> Permutation:
    """Strand permutation: strand starting at position j ends at ``images[j-1]``."""
    pos_of = list(range(1, u.degree + 1))  # pos_of[strand-1] = current position
    at = list(range(1, u.degree + 1))  # at[position-1] = strand
    for x in u.letters:
        i = abs(x)
        a, b = at[i - 1], at[i]
        at[i - 1], at[i] = b, a
        pos_of[a - 1], pos_of[b - 1] = i + 1, i
    return Permutation(u.degree, tuple(pos_of))


def exponent_sum(u: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in u.letters)


def iota(u: BraidWord, before: int = 0, after: int = 0) -> BraidWord:
    """Add ``before`` trivial strands on the left and ``after`` on the right."""
    if before < 0 or after < 0:
        raise RangeError("iota needs non-negative strand counts")
    shifted = tuple(x + before if x > 0 else x - before for x in u.letters)
    return BraidWord(u.degree + before + after, shifted)


# -- named builders ---------------------------------------------------------


def build_pi(m: int, i: int, primed: bool = False) -> BraidWord:
    """sigma_{m+1} ... sigma_{m+i} (or sigma_{m-1} ... sigma_{m-i} when primed), in B_2m."""
    if m < 1:
        raise RangeError(f"m must be >= 1, got {m}")
    if not 1 <= i <= m - 1:
        raise RangeError(f"i={i} outside [1, {m - 1}]")
    if primed:
        letters = tuple(m - k for k in range(1, i + 1))
    else:
        letters = tuple(m + k for k in range(1, i + 1))
    return BraidWord(2 * m, letters)


def build_delta(m: int, primed: bool = False) -> BraidWord:
    """Half twist on the right block of m strands of B_2m (left block when primed)."""
    if m < 1:
        raise RangeError(f"m must be >= 1, got {m}")
    letters: list[int] = []
    for i in range(m - 1, 0, -1):
        letters.extend(build_pi(m, i, primed).letters)
    return BraidWord(2 * m, tuple(letters))


def build_theta(m: int) -> BraidWord:
    """Block crossing of the two halves of B_2m, with m occurrences of sigma_m."""
    if m < 1:
        raise RangeError(f"m must be >= 1, got {m}")
    letters = [m]
    for i in range(m - 1, 0, -1):
        letters.extend(build_pi(m, i, primed=True).letters)
        letters.extend(build_pi(m, i).letters)
        letters.append(m)
    return BraidWord(2 * m, tuple(letters))


def garside_delta(n: int) -> BraidWord:
    """Garside's half twist of B_n as (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1)."""
    if n < 1:
        raise RangeError(f"degree must be >= 1, got {n}")
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(n, tuple(letters))


def flip_star(b: BraidWord) -> BraidWord:
    """sigma_i^e -> sigma_{n-i}^e, order kept: conjugation by the half twist."""
    n = b.degree
    return BraidWord(n, tuple((n - x) if x > 0 else -(n + x) for x in b.letters))


# -- word problem -----------------------------------------------------------


def _seam(a: np.ndarray, b: np.ndarray) -> int:
    """Length of the cancellation between the tail of ``a`` and the head of ``b``."""
    top = min(len(a), len(b))
    k, step = 0, 16
    while k < top:
        hi = min(top, k + step)
        ok = a[len(a) - hi : len(a) - k][::-1] == -b[k:hi]
        if not ok.all():
            return k + int(np.argmin(ok))
        k, step = hi, step * 4
    return top


def _join(*parts: np.ndarray) -> np.ndarray:
    # parts are freely reduced, so cancellation only happens at the seams
    out = parts[0]
    for b in parts[1:]:
        k = _seam(out, b)
        out = np.concatenate((out[: len(out) - k], b[k:]))
    return out


def artin_images(u: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of the free generators x_1..x_n under the Artin automorphism of ``u``.

    sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.  Letters are
    applied so that ``u -> automorphism`` is a homomorphism.  Image lengths can
    grow exponentially in the word length.
    """
    return tuple(tuple(img.tolist()) for img in _images(u))


def _images(u: BraidWord) -> list[np.ndarray]:
    # generator indices are tiny, so int8 keeps the copies cheap
    dtype = np.int8 if u.degree < 128 else np.int32
    cur = [np.array([j], dtype=dtype) for j in range(1, u.degree + 1)]
    for x in u.letters:
        i = abs(x) - 1
        a, b = cur[i], cur[i + 1]
        if x > 0:
            cur[i], cur[i + 1] = _join(a, b, -a[::-1]), a
        else:
            cur[i], cur[i + 1] = b, _join(-b[::-1], a, b)
    return cur


def is_equal(u: BraidWord, v: BraidWord) -> bool:
    _check_same_degree(u, v)
    if u.letters == v.letters:
        return True
    # necessary conditions first; both are homomorphic images of B_n
    if exponent_sum(u) != exponent_sum(v) or permutation(u) != permutation(v):
        return False
    ru, rv = free_reduce(u), free_reduce(v)
    if ru.letters == rv.letters:
        return True
    return all(np.array_equal(x, y) for x, y in zip(_images(ru), _images(rv)))


def commute(u: BraidWord, v: BraidWord) -> bool:
    _check_same_degree(u, v)
    return is_equal(compose(u, v), compose(v, u))


def as_word(degree: int, letters: Sequence[int] | BraidWord) -> BraidWord:
    if isinstance(letters, BraidWord):
        return letters
    return BraidWord(degree, tuple(letters))
