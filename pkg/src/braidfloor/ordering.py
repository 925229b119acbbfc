"""Deciding the Dehornoy ordering by handle reduction.

A word is *sigma-positive* when its lowest-index generator occurs only
positively, *sigma-negative* when only negatively.  Every nontrivial braid
admits a representative of one of the two forms, which makes the standard
left-invariant ordering decidable: ``a < b`` exactly when ``a^-1 b`` is
sigma-positive.

A *handle* is a subword ``sigma_i^e v sigma_i^-e`` whose interior ``v``
contains only letters of index greater than ``i``.  Reducing it deletes the
two boundary letters and conjugates the interior: every ``sigma_{i+1}^d``
becomes the three letters ``sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e`` while
higher-index letters pass through unchanged.  We always reduce the handle
whose closing letter is leftmost; that handle cannot contain a nested
handle (a nested one would close earlier), which is the permitted-handle
discipline the termination theory asks for.  The scan keeps an output stack
in which no handle closes, so each reduction rolls back only the rewritten
span, and free cancellation is just the empty-interior case.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .words import BraidWord, compose, exponent_sum, invert, permutation_of

DEFAULT_MAX_STEPS = 10_000_000


class ReductionLimitError(RuntimeError):
    """Handle reduction exceeded its rewrite-step budget."""

    def __init__(self, max_steps: int):
        super().__init__(f"handle reduction exceeded {max_steps} rewrite steps")
        self.max_steps = max_steps


class OrderVerdict(Enum):
    """Outcome of a Dehornoy-order comparison; values are the CLI tags."""

    LESS = "LT"
    EQUAL = "EQ"
    GREATER = "GT"


@dataclass(frozen=True, slots=True)
class SignClass:
    """Sigma-positivity class of a braid.

    ``sign`` is +1 for sigma-positive, -1 for sigma-negative, 0 for the
    identity; ``main_index`` is the witnessing generator index (the lowest
    index occurring in a handle-free representative), or None when trivial.
    """

    sign: int
    main_index: int | None = None

    @property
    def is_trivial(self) -> bool:
        return self.sign == 0

    @property
    def is_positive(self) -> bool:
        return self.sign > 0

    @property
    def is_negative(self) -> bool:
        return self.sign < 0


def handle_reduce(a: BraidWord, max_steps: int = DEFAULT_MAX_STEPS) -> BraidWord:
    """Rewrite ``a`` into an equal handle-free word.

    The result is empty exactly when ``a`` is the identity braid; otherwise
    all occurrences of its lowest generator index share one sign.  Raises
    :class:`ReductionLimitError` after ``max_steps`` rewrite steps, a budget
    far beyond anything non-pathological input reaches.
    """
    out: list[int] = []
    # occ[i]: positions in `out` holding letters of index i, in stack order
    occ: list[list[int]] = [[] for _ in range(a.n)]
    pending = list(a.letters)
    pending.reverse()
    steps = 0
    while pending:
        x = pending.pop()
        i = x if x > 0 else -x
        if out and out[-1] == -x:
            # free cancellation: a handle with empty interior
            steps += 1
            if steps > max_steps:
                raise ReductionLimitError(max_steps)
            out.pop()
            occ[i].pop()
            continue
        opener = -1
        for j in range(1, i + 1):
            stack = occ[j]
            if stack and stack[-1] > opener:
                opener = stack[-1]
        if opener >= 0 and out[opener] == -x:
            # x closes the leftmost handle; conjugate the interior, rescan it
            steps += 1
            if steps > max_steps:
                raise ReductionLimitError(max_steps)
            e = 1 if x < 0 else -1
            interior = out[opener + 1 :]
            del out[opener:]
            occ[i].pop()
            for z in interior:
                occ[z if z > 0 else -z].pop()
            if interior:
                ip1 = i + 1
                low, high = -e * ip1, e * ip1
                repl: list[int] = []
                for z in interior:
                    if z == ip1:
                        repl += (low, i, high)
                    elif z == -ip1:
                        repl += (low, -i, high)
                    else:
                        repl.append(z)
                repl.reverse()
                pending.extend(repl)
        else:
            occ[i].append(len(out))
            out.append(x)
    return BraidWord(a.n, tuple(out))


def sign_class(a: BraidWord, max_steps: int = DEFAULT_MAX_STEPS) -> SignClass:
    """Classify ``a`` as sigma-positive, sigma-negative, or trivial."""
    reduced = handle_reduce(a, max_steps).letters
    if not reduced:
        return SignClass(0)
    main = min(map(abs, reduced))
    signs = {letter > 0 for letter in reduced if abs(letter) == main}
    assert len(signs) == 1, "handle-free word with mixed signs on its main index"
    return SignClass(1 if signs.pop() else -1, main)


def compare(a: BraidWord, b: BraidWord, max_steps: int = DEFAULT_MAX_STEPS) -> OrderVerdict:
    """Dehornoy-order comparison: LESS exactly when ``a^-1 b`` is sigma-positive."""
    if a.n != b.n:
        raise ValueError(f"strand count mismatch: {a.n} != {b.n}")
    cls = sign_class(compose(invert(a), b), max_steps)
    if cls.sign > 0:
        return OrderVerdict.LESS
    if cls.sign < 0:
        return OrderVerdict.GREATER
    return OrderVerdict.EQUAL


def is_trivial(a: BraidWord, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Word problem: does ``a`` represent the identity braid?

    Equivalent to ``sign_class(a).is_trivial``; the exponent-sum and
    permutation prefilters only ever rule out nontrivial words, since both
    are invariants of the braid element.
    """
    if exponent_sum(a) != 0:
        return False
    if not permutation_of(a).is_identity():
        return False
    return not handle_reduce(a, max_steps).letters
