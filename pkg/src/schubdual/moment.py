"""Numeric bookkeeping for moment-map images and pseudoeffective slopes.

Only user-supplied (dimension, complexity, rank) triples are handled; nothing
here derives complexity or rank from group data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources


@dataclass(frozen=True)
class SphericalData:
    dim: int
    complexity: int
    rank: int

    def __post_init__(self):
        if min(self.dim, self.complexity, self.rank) < 0:
            raise ValueError(f"negative entry in {self}")
        if self.complexity + self.rank > self.dim:
            raise ValueError(f"complexity + rank exceeds dimension in {self}")


@dataclass(frozen=True)
class DivisorData:
    ambient: SphericalData
    divisor: SphericalData

    def __post_init__(self):
        a, d = self.ambient, self.divisor
        if d.dim != a.dim - 1:
            raise ValueError(f"divisor dimension {d.dim} is not {a.dim - 1}")
        if d.complexity > a.complexity or d.rank > a.rank:
            raise ValueError("a divisor cannot raise complexity or rank")
        # equality of both holds only for D = X
        if (d.complexity, d.rank) == (a.complexity, a.rank):
            raise ValueError("a proper divisor must lower complexity or rank")


def knop_dimension(s: SphericalData) -> int:
    """dim of the moment-map image: 2 dim - 2 complexity - rank."""
    return 2 * s.dim - 2 * s.complexity - s.rank


def divisor_drop_check(d: DivisorData) -> bool:
    """True iff the divisor's moment image is strictly smaller than the ambient one."""
    drop = knop_dimension(d.divisor) < knop_dimension(d.ambient)
    criterion = (
        d.ambient.complexity == d.divisor.complexity and d.ambient.rank == d.divisor.rank + 1
    )
    if drop != criterion:
        raise AssertionError(f"dimension drop and complexity/rank criterion disagree on {d}")
    return drop


def ec_slope(a: int, fano_index: int) -> Fraction:
    """Slope 2/(a * index) from D_H ~ a*Lambda - 2*pi^*D with -K = index * D."""
    if a < 1 or fano_index < 1:
        raise ValueError("codegree and Fano index must be positive")
    return Fraction(2, a * fano_index)


def bigness_from_vmrt_class(a: int, b: int) -> bool:
    """TX is big iff b < 0 in [total dual VMRT] = a*Lambda + b*pi^*H."""
    if a < 1:
        raise ValueError("a must be positive (VMRT not dual defective)")
    return b < 0


def load_registry() -> dict:
    with resources.files("schubdual.data").joinpath("knop_registry.json").open() as fh:
        return json.load(fh)
