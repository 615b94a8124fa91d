from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from .curve import AtomSpadjor, OrientedJordanCurve


class SpadjorKind(Enum):
    ZERO = "zero"
    ONE = "one"
    CURVES = "curves"


@dataclass(frozen=True)
class HasseDiagram:
    """Covering relation of curves under inclusion of bounded complements"""

    parent: Tuple[Optional[int], ...] = ()

    @property
    def roots(self) -> List[int]:
        return [i for i, p in enumerate(self.parent) if p is None]

    def children(self, i: int) -> List[int]:
        return [k for k, p in enumerate(self.parent) if p == i]


@dataclass(frozen=True)
class BettiNumbers:
    components: int
    holes_per_component: Tuple[int, ...] = ()

    def __str__(self) -> str:
        holes = ",".join(str(h) for h in self.holes_per_component)
        return f"components={self.components} holes=[{holes}]"


@dataclass(frozen=True)
class RealizableSpadjor:
    """
    Boundary representation of a Yin set.

    ZERO is the empty set and ONE the whole plane. CURVES values carry their
    Hasse diagram, atoms and Betti numbers, computed once at construction
    (see topology.build_spadjor).
    """

    kind: SpadjorKind
    curves: Tuple[OrientedJordanCurve, ...] = ()
    hasse: HasseDiagram = field(default_factory=HasseDiagram, compare=False)
    atoms: Tuple[AtomSpadjor, ...] = field(default=(), compare=False)
    betti_numbers: BettiNumbers = field(
        default_factory=lambda: BettiNumbers(0), compare=False
    )

    @property
    def is_zero(self) -> bool:
        return self.kind is SpadjorKind.ZERO

    @property
    def is_one(self) -> bool:
        return self.kind is SpadjorKind.ONE

    @property
    def is_special(self) -> bool:
        return self.kind is not SpadjorKind.CURVES

    @property
    def vertex_count(self) -> int:
        return sum(len(c) for c in self.curves)

    def describe(self) -> str:
        if self.is_special:
            return self.kind.value
        return f"{len(self.curves)} curves, {self.vertex_count} vertices"


ZERO = RealizableSpadjor(SpadjorKind.ZERO)
ONE = RealizableSpadjor(SpadjorKind.ONE, betti_numbers=BettiNumbers(1, (0,)))
