"""Dehornoy floors: where a braid sits among even powers of the half-twist.

The floor of ``b`` on ``n`` strands is the least ``m >= 0`` with
``Delta^(-2m-2) < b < Delta^(2m+2)`` in the Dehornoy order, both
inequalities strict.  The literal sigma_1 letter counts of the word bound
it: the floor is strictly below ``max(positive, negative)`` whenever the
word uses sigma_1 at all, and is 0 when it never does.  That bound caps the
upward search and justifies the zero-occurrence short circuit.

Which group the word lives in matters: the same letters can have different
floors on different strand counts, so the strand count always travels with
the word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ordering import DEFAULT_MAX_STEPS, OrderVerdict, compare
from .words import BraidWord, compose, delta, invert

# Shared Delta-power table.  Lookups and inserts are idempotent, so plain
# dict operations are safe from concurrent threads.
_delta_powers: dict[tuple[int, int], BraidWord] = {}


def delta_power(n: int, k: int) -> BraidWord:
    """``Delta^k`` on ``n`` strands, cached per ``(n, k)``."""
    try:
        return _delta_powers[n, k]
    except KeyError:
        pass
    if k == 0:
        word = BraidWord(n)
    elif k > 0:
        word = compose(delta_power(n, k - 1), delta(n))
    else:
        word = invert(delta_power(n, -k))
    return _delta_powers.setdefault((n, k), word)


@dataclass(frozen=True, slots=True)
class OccurrenceBound:
    """Literal sigma_1 letter counts of a word and the floor bound they give."""

    positive: int
    negative: int

    @property
    def bound(self) -> int:
        """The floor is strictly below this when it is nonzero, else exactly 0."""
        return max(self.positive, self.negative)


def occurrence_bound(a: BraidWord) -> OccurrenceBound:
    """Count the sigma_1 letters of the word as written, with no rewriting."""
    return OccurrenceBound(a.letters.count(1), a.letters.count(-1))


@dataclass(frozen=True, slots=True)
class FloorResult:
    """The Dehornoy floor together with its bracketing evidence.

    ``lower_witness`` and ``upper_witness`` are the comparison verdicts
    placing the braid strictly inside ``(Delta^(-2m-2), Delta^(2m+2))`` at
    the floor value ``m`` (both LESS).  ``failed_below`` names the side
    ("lower" or "upper") whose strict inequality broke at ``m - 1``; it is
    None when ``m`` is 0.
    """

    value: int
    lower_witness: OrderVerdict
    upper_witness: OrderVerdict
    failed_below: str | None = None


def dehornoy_floor(a: BraidWord, max_steps: int = DEFAULT_MAX_STEPS) -> FloorResult:
    """Least ``m >= 0`` with ``Delta^(-2m-2) < a < Delta^(2m+2)``.

    Searches upward from ``m = 0``; the occurrence bound caps the search, so
    at most ``bound + 1`` values are ever tried.  Words without sigma_1
    letters short-circuit to floor 0: they sit strictly inside
    ``(Delta^-2, Delta^2)``.
    """
    bound = occurrence_bound(a).bound
    if bound == 0:
        return FloorResult(0, OrderVerdict.LESS, OrderVerdict.LESS)
    failed: str | None = None
    for m in range(bound + 1):
        width = 2 * m + 2
        upper = compare(a, delta_power(a.n, width), max_steps)
        if upper is not OrderVerdict.LESS:
            failed = "upper"
            continue
        lower = compare(delta_power(a.n, -width), a, max_steps)
        if lower is not OrderVerdict.LESS:
            failed = "lower"
            continue
        return FloorResult(m, lower, upper, failed)
    raise RuntimeError("floor search escaped its occurrence bound")
