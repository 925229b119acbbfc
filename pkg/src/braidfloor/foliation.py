"""Integer bookkeeping for the singular foliations an essential surface in a
closed-braid complement can carry.

These operations validate stated arithmetic: the Euler-characteristic
balance of a tiling's vertex-valence census, the bound a single vertex
valence puts on the Dehornoy floor, the upper bound on the minimal vertex
valence, and the tiled/mixed/circular admissibility table against a floor.
They never construct tilings or foliations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class FoliationType(Enum):
    TILED = "Tiled"
    MIXED = "Mixed"
    CIRCULAR = "Circular"


@dataclass
class ValenceProfile:
    """Vertex-valence census of a tiled surface.

    ``counts[v]`` vertices meet exactly ``v`` singular leaves, on a closed
    surface of the given genus.  Zero counts are dropped on construction.
    """

    counts: dict[int, int] = field(default_factory=dict)
    genus: int = 0

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        cleaned: dict[int, int] = {}
        for valence, count in self.counts.items():
            if valence < 1:
                raise ValueError(f"valence must be at least 1, got {valence}")
            if count < 0:
                raise ValueError(f"count for valence {valence} is negative")
            if count:
                cleaned[valence] = count
        self.counts = cleaned

    @property
    def total_vertices(self) -> int:
        return sum(self.counts.values())

    @property
    def min_valence(self) -> int | None:
        return min(self.counts) if self.counts else None


def euler_identity_holds(profile: ValenceProfile) -> bool:
    """Exact integer check of the closed-surface balance

    ``sum_{v<=3} (4-v) V(v) + 8g - 8 == sum_{v>=4} (v-4) V(v)``.

    The identity is what the Euler characteristic forces on any cellular
    decomposition whose 2-cells are quadrilaterals, so it applies verbatim
    to tilings and to the tiled part of a normal mixed foliation.
    """
    low = sum((4 - v) * c for v, c in profile.counts.items() if v <= 3)
    high = sum((v - 4) * c for v, c in profile.counts.items() if v >= 4)
    return low + 8 * profile.genus - 8 == high


def floor_bound_from_valence(valence: int) -> int:
    """Largest Dehornoy floor compatible with a vertex of this valence.

    A valence-``v`` vertex forces the floor strictly below ``v/2 + 1``; the
    returned value is the greatest integer below that threshold.
    """
    if valence < 1:
        raise ValueError(f"valence must be at least 1, got {valence}")
    return (valence + 1) // 2


def min_valence_bound(genus: int, surgeries: int | None = None) -> int:
    """Upper bound on the minimal vertex valence of the foliated surface.

    ``surgeries=None`` is the tiled case, bound ``2g + 2``.  An integer
    ``k`` is the mixed case after ``k`` circle-removing surgeries
    (``0 <= k <= g``), bound ``4g - 3k + 1``.  Genus 0 is rejected: a tiled
    sphere forces floor 0 outright and carries no such bound.
    """
    if genus < 1:
        raise ValueError(f"genus must be at least 1, got {genus}")
    if surgeries is None:
        return 2 * genus + 2
    if not 0 <= surgeries <= genus:
        raise ValueError(f"surgeries must lie in [0, {genus}], got {surgeries}")
    return 4 * genus - 3 * surgeries + 1


def admissible_foliations(floor: int, genus: int) -> set[FoliationType]:
    """Foliation types an essential genus-``g`` surface can carry in the
    complement of a closed braid with the given Dehornoy floor.

    Tiled needs ``floor < g + 2``, mixed needs ``floor < 2g + 1``, circular
    is always admissible; so the answer is exactly ``{CIRCULAR}`` once
    ``floor >= 2g + 1``.
    """
    if floor < 0:
        raise ValueError(f"floor must be non-negative, got {floor}")
    if genus < 1:
        raise ValueError(f"genus must be at least 1, got {genus}")
    admissible = {FoliationType.CIRCULAR}
    if floor < genus + 2:
        admissible.add(FoliationType.TILED)
    if floor < 2 * genus + 1:
        admissible.add(FoliationType.MIXED)
    return admissible
