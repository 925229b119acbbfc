"""Braid words as literal letter sequences over the Artin generators.

A word is stored exactly as written: a strand count ``n`` together with a
sequence of signed generator indices, letter ``+i`` standing for sigma_i and
``-i`` for its inverse.  The only rewriting this module ever performs is free
reduction (cancelling adjacent inverse pairs), and only inside
:func:`compose` and :func:`power`; braid relations are the business of the
ordering module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

_TOKEN = re.compile(r"[+-]?[0-9]+\Z")


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in the generators of the braid group on ``n`` strands.

    ``letters`` holds signed indices with ``1 <= abs(letter) <= n - 1``; the
    empty sequence is the identity word.  Instances are immutable and safe to
    share between threads.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"strand count must be at least 2, got {self.n}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if letters:
            magnitudes = tuple(map(abs, letters))
            if min(magnitudes) < 1 or max(magnitudes) > self.n - 1:
                bad = next(l for l in letters if not 1 <= abs(l) <= self.n - 1)
                raise ValueError(f"letter {bad} out of range for {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return invert(self)

    def __pow__(self, k: int) -> "BraidWord":
        return power(self, k)

    def to_text(self) -> str:
        """Render in the shared word syntax: space-separated signed integers."""
        return " ".join(str(letter) for letter in self.letters)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse the shared word syntax into a braid word on ``n`` strands.

    The syntax is signed decimal integers separated by whitespace or commas;
    the empty string is the identity word.  No other tokens are accepted, no
    reduction is applied, and letters must satisfy ``1 <= abs(letter) < n``.
    """
    letters = []
    for token in text.replace(",", " ").split():
        if not _TOKEN.match(token):
            raise ValueError(f"malformed braid-word token {token!r}")
        value = int(token)
        if value == 0:
            raise ValueError("0 is not a generator index")
        letters.append(value)
    return BraidWord(n, tuple(letters))


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs exhaustively (free-group reduction)."""
    out: list[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenate two words on the same strand count and freely reduce."""
    if a.n != b.n:
        raise ValueError(f"strand count mismatch: {a.n} != {b.n}")
    return BraidWord(a.n, free_reduce(a.letters + b.letters))


def invert(a: BraidWord) -> BraidWord:
    """Reverse the word and flip every sign."""
    return BraidWord(a.n, tuple(-letter for letter in reversed(a.letters)))


def power(a: BraidWord, k: int) -> BraidWord:
    """``k``-fold composition of ``a`` (inverting first when ``k < 0``)."""
    if k < 0:
        return power(invert(a), -k)
    result = BraidWord(a.n)
    for _ in range(k):
        result = compose(result, a)
    return result


def delta(n: int) -> BraidWord:
    """Garside's fundamental half-twist on ``n`` strands.

    The positive word ``(s1 s2 .. s_{n-1})(s1 s2 .. s_{n-2}) .. (s1 s2)(s1)``
    of length ``n(n-1)/2``.  Its square generates the center of the group.
    """
    letters: list[int] = []
    for tail in range(n - 1, 0, -1):
        letters.extend(range(1, tail + 1))
    return BraidWord(n, tuple(letters))


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of ``{1, .., n}``; ``images[i - 1]`` is the image of ``i``."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"images {self.images} are not a bijection of 1..{self.n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other`` (left-to-right convention)."""
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} != {other.n}")
        return Permutation(self.n, tuple(other.images[v - 1] for v in self.images))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycle_count(self) -> int:
        """Number of cycles, fixed points included."""
        seen = [False] * (self.n + 1)
        cycles = 0
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycles += 1
            current = start
            while not seen[current]:
                seen[current] = True
                current = self.images[current - 1]
        return cycles


def permutation_of(a: BraidWord) -> Permutation:
    """Image of the word in the symmetric group.

    sigma_i acts as the transposition ``(i, i+1)``; letters act left to
    right, matching how the closure's strands are followed.
    """
    images = list(range(1, a.n + 1))
    # where[v] = strand currently mapped to v, so each letter swaps in O(1)
    where = list(range(a.n + 1))
    for letter in a.letters:
        i = letter if letter > 0 else -letter
        x, y = where[i], where[i + 1]
        images[x - 1], images[y - 1] = i + 1, i
        where[i], where[i + 1] = y, x
    return Permutation(a.n, tuple(images))


def exponent_sum(a: BraidWord) -> int:
    """Sum of letter signs: the image of the word under abelianization."""
    return sum(1 if letter > 0 else -1 for letter in a.letters)


def closure_component_count(a: BraidWord) -> int:
    """Number of components of the word's closure: cycles of its permutation.

    The closure is a knot exactly when this is 1.
    """
    return permutation_of(a).cycle_count()
