"""Periodicity of braids and the geometry of their closures.

A braid on ``n`` strands is *periodic* exactly when its ``n``-th or
``(n-1)``-st power is a central power ``Delta^(2s)``: the rotation braids
``delta = s1 s2 .. s_{n-1}`` and ``gamma = s1 s2 .. s_{n-1} s1`` satisfy
``delta^n = gamma^(n-1) = Delta^2``, and every periodic braid is conjugate
to a power of one of them.  The candidate exponent ``s`` is forced by
exponent sums, so deciding periodicity costs at most two word-problem
calls.

For a braid whose closure is a knot and whose Dehornoy floor is at least 3,
periodicity corresponds exactly to the closure being a torus knot, and at
prime strand count the only alternative is a hyperbolic knot.  Closures of
periodic braids are torus knots with no floor hypothesis at all.  The
classifier reports exactly what those criteria certify and marks everything
else indeterminate: it performs no reducibility test, so composite strand
counts with large floor stay undecided between satellite and hyperbolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .floors import dehornoy_floor, delta_power
from .ordering import DEFAULT_MAX_STEPS, is_trivial
from .words import BraidWord, closure_component_count, compose, exponent_sum, power


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, slots=True)
class PeriodicityResult:
    """Periodicity verdict; on success ``a**power == Delta^(2*central_power)``
    and ``central_power * n * (n-1) == power * exponent_sum(a)`` exactly."""

    periodic: bool
    power: int | None = None
    central_power: int | None = None


def is_periodic(a: BraidWord, max_steps: int = DEFAULT_MAX_STEPS) -> PeriodicityResult:
    """Decide whether ``a`` is a periodic braid, returning a witness if so."""
    n = a.n
    e = exponent_sum(a)
    full_twist = n * (n - 1)  # exponent sum of Delta^2
    for p in (n, n - 1):
        if (p * e) % full_twist:
            continue
        s = (p * e) // full_twist
        if is_trivial(compose(power(a, p), delta_power(n, -2 * s)), max_steps):
            return PeriodicityResult(True, p, s)
    return PeriodicityResult(False)


class GeometryType(Enum):
    """Geometric type of a braid closure; values are the persisted tags."""

    TORUS_KNOT = "TorusKnot"
    HYPERBOLIC_KNOT = "HyperbolicKnot"
    NOT_A_KNOT = "NotAKnot"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True, slots=True)
class GeometryVerdict:
    """Classification of a braid closure.

    ``floor_used`` is the Dehornoy floor the decision consulted (None on the
    branches that never needed it), ``components`` the closure's component
    count when it is not a knot, and ``reason`` the explanation for an
    indeterminate verdict.
    """

    kind: GeometryType
    floor_used: int | None = None
    components: int | None = None
    reason: str | None = None


def classify_closure(a: BraidWord, max_steps: int = DEFAULT_MAX_STEPS) -> GeometryVerdict:
    """Classify the closure of ``a``.

    In order: a closure with several components is not a knot; a periodic
    braid closes to a torus knot; below floor 3 nothing further is certified;
    at floor >= 3 a non-periodic braid on a prime strand count closes to a
    hyperbolic knot, while composite strand counts would need a reducibility
    test this toolkit does not perform.
    """
    components = closure_component_count(a)
    if components != 1:
        return GeometryVerdict(GeometryType.NOT_A_KNOT, components=components)
    if is_periodic(a, max_steps).periodic:
        return GeometryVerdict(GeometryType.TORUS_KNOT)
    floor = dehornoy_floor(a, max_steps).value
    if floor < 3:
        return GeometryVerdict(
            GeometryType.INDETERMINATE,
            floor_used=floor,
            reason="Dehornoy floor below 3",
        )
    if is_prime(a.n):
        return GeometryVerdict(GeometryType.HYPERBOLIC_KNOT, floor_used=floor)
    return GeometryVerdict(
        GeometryType.INDETERMINATE,
        floor_used=floor,
        reason="composite strand count needs a reducibility test",
    )
