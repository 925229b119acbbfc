"""Certificate generators: central-twist families over a seed braid, and
seeded random sampling at prime strand count.

Family mode sweeps ``Delta^(2k) * seed`` over a range of ``k`` — exactly the
fiber of the seed's mapping class under the projection that kills the
center — and certifies the members whose closure is a knot with Dehornoy
floor at least 3; those are hyperbolic.  Random mode samples fixed-length
words, one :class:`random.Random` substream per candidate index derived
from the master seed, so identical arguments always produce identical
certificate streams, byte for byte.

Neither mode certifies that distinct certificates describe distinct knots;
records carry enough data (strand count, word, floor) for external
distinctness checks.
"""

from __future__ import annotations

import logging
import random

from .certificates import KnotCertificate
from .classify import GeometryType, GeometryVerdict, classify_closure, is_prime
from .floors import dehornoy_floor, delta_power
from .ordering import DEFAULT_MAX_STEPS, ReductionLimitError
from .words import BraidWord, closure_component_count, compose, exponent_sum, free_reduce

logger = logging.getLogger(__name__)


def _filter_reason(verdict: GeometryVerdict) -> str:
    if verdict.kind is GeometryType.NOT_A_KNOT:
        return f"closure has {verdict.components} components"
    if verdict.kind is GeometryType.TORUS_KNOT:
        return "periodic (closure is a torus knot)"
    return verdict.reason or "indeterminate"


def generate_family(
    seed: BraidWord, k_min: int, k_max: int, max_steps: int = DEFAULT_MAX_STEPS
) -> list[KnotCertificate]:
    """Certify the hyperbolic members of ``Delta^(2k) * seed``, ``k_min <= k <= k_max``.

    Values of ``k`` whose braid is filtered (not a knot, periodic, floor
    below 3, or indeterminate) are logged with the reason; a reduction
    budget blown on one ``k`` skips that item without aborting the sweep.
    """
    if k_min > k_max:
        raise ValueError(f"empty range: k_min {k_min} > k_max {k_max}")
    seed_text = seed.to_text()
    certificates = []
    seen: set[tuple[int, ...]] = set()
    for k in range(k_min, k_max + 1):
        braid = compose(delta_power(seed.n, 2 * k), seed)
        try:
            verdict = classify_closure(braid, max_steps)
        except ReductionLimitError as exc:
            logger.warning("family k=%d skipped: %s", k, exc)
            continue
        if verdict.kind is not GeometryType.HYPERBOLIC_KNOT:
            logger.info("family k=%d filtered: %s", k, _filter_reason(verdict))
            continue
        if braid.letters in seen:
            logger.info("family k=%d filtered: duplicate of an earlier word", k)
            continue
        seen.add(braid.letters)
        certificates.append(
            KnotCertificate(
                n=braid.n,
                word=braid.to_text(),
                floor=verdict.floor_used,
                periodic=False,
                verdict=verdict.kind.value,
                exponent_sum=exponent_sum(braid),
                cycle_count=1,
                mode="family",
                k=k,
                seed_word=seed_text,
            )
        )
    return certificates


def generate_random(
    n: int,
    length: int,
    count: int,
    rng_seed: int,
    min_floor: int = 3,
    max_candidates: int | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> list[KnotCertificate]:
    """Sample words of the given length on a prime strand count and certify
    knot closures whose Dehornoy floor reaches ``min_floor``.

    Candidate ``i`` draws its letters from ``random.Random(f"{rng_seed}:{i}")``,
    uniformly over the ``2(n-1)`` signed generators, so the output is a pure
    function of the arguments.  The scan stops once ``count`` certificates
    are emitted or ``max_candidates`` (default ``1000 * count``) samples
    have been examined, whichever comes first.  Torus and hyperbolic
    verdicts are both emitted, tagged; candidates the classifier cannot
    certify are dropped, as is any repeat of an earlier freely-reduced word.
    """
    if not is_prime(n):
        raise ValueError(f"strand count must be prime, got {n}")
    if length < 1:
        raise ValueError(f"length must be at least 1, got {length}")
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    if min_floor < 0:
        raise ValueError(f"min_floor must be non-negative, got {min_floor}")
    if max_candidates is None:
        max_candidates = 1000 * count
    pool = [i for i in range(1 - n, n) if i != 0]
    certificates: list[KnotCertificate] = []
    seen: set[tuple[int, ...]] = set()
    for index in range(max_candidates):
        if len(certificates) >= count:
            break
        rng = random.Random(f"{rng_seed}:{index}")
        braid = BraidWord(n, tuple(rng.choice(pool) for _ in range(length)))
        try:
            if closure_component_count(braid) != 1:
                continue
            floor = dehornoy_floor(braid, max_steps).value
            if floor < min_floor:
                continue
            verdict = classify_closure(braid, max_steps)
        except ReductionLimitError as exc:
            logger.warning("random candidate %d skipped: %s", index, exc)
            continue
        if verdict.kind not in (GeometryType.TORUS_KNOT, GeometryType.HYPERBOLIC_KNOT):
            continue
        key = free_reduce(braid.letters)
        if key in seen:
            continue
        seen.add(key)
        certificates.append(
            KnotCertificate(
                n=n,
                word=braid.to_text(),
                floor=floor,
                periodic=verdict.kind is GeometryType.TORUS_KNOT,
                verdict=verdict.kind.value,
                exponent_sum=exponent_sum(braid),
                cycle_count=1,
                mode="random",
                rng_seed=rng_seed,
            )
        )
    return certificates
