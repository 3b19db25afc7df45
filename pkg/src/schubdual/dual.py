"""Chern classes of complete-intersection sections, the delta sequence of an
embedded smooth variety, and closed-form dual-variety rules.

For a smooth Z of dimension d with hyperplane class H put

    delta_j = sum_{i=0}^{d} C(i+1, j+1) * int_Z c_{d-i}(Omega_Z) H^i.

delta_0 is the Katz-Kleiman codegree sum.  The dual defect is the number of
leading zeros of the sequence and the codegree is the first nonzero entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .cohomology import (
    CohomologyContext,
    EmbeddingSpec,
    ProjectiveSpace,
    RingElement,
    SplitProjectiveBundle,
    binomial_series,
    integrate,
)


class DegenerateEmbeddingError(ValueError):
    """The delta sequence has no positive leading entry."""


@dataclass(frozen=True)
class SectionSpec:
    """Complete intersection of divisors of classes d*H inside an embedding.

    ``section_degrees`` lists d for each divisor; linear sections use 1.
    """

    spec: EmbeddingSpec
    section_degrees: tuple[int, ...] = ()

    def __post_init__(self):
        degs = tuple(int(d) for d in self.section_degrees)
        object.__setattr__(self, "section_degrees", degs)
        if any(d < 1 for d in degs):
            raise ValueError(f"section degrees must be positive, got {degs}")
        if self.dimension < 1:
            raise ValueError(
                f"section of {self.ctx.name} by {len(degs)} divisors has dimension {self.dimension} < 1"
            )

    @classmethod
    def linear(cls, spec: EmbeddingSpec, k: int = 0) -> "SectionSpec":
        return cls(spec, (1,) * k)

    @property
    def ctx(self) -> CohomologyContext:
        return self.spec.ctx

    @property
    def H(self) -> RingElement:
        return self.spec.H

    @property
    def dimension(self) -> int:
        return self.ctx.dimension - len(self.section_degrees)

    def fundamental_class(self) -> RingElement:
        """prod_d (d*H), the ambient class of the section."""
        out = self.ctx.one()
        for d in self.section_degrees:
            out = out * (self.H * d)
        return out


@dataclass
class DualProfile:
    delta: list[int]
    defect: int
    codegree: int
    annotations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "delta": list(self.delta),
            "defect": self.defect,
            "codegree": self.codegree,
            "annotations": list(self.annotations),
        }


def ambient_chern_series(s: SectionSpec) -> list[RingElement]:
    """All graded pieces of c(T_ambient) * prod (1 + d*H)^{-1}, up to the
    ambient dimension."""
    ctx = s.ctx
    total = sum(ctx.tangent_chern(), ctx.zero())
    for d in s.section_degrees:
        total = total * binomial_series(ctx, s.H * d, -1)
    return total.pieces()


def section_chern(s: SectionSpec) -> list[RingElement]:
    """c_0..c_dim of the section, carried as ambient classes."""
    return ambient_chern_series(s)[: s.dimension + 1]


def section_integrate(s: SectionSpec, u: RingElement) -> int:
    if u and u.degrees() != {s.dimension}:
        raise ValueError(f"class of degree {sorted(u.degrees())} cannot be integrated over a {s.dimension}-fold")
    total = u * s.fundamental_class()
    if total and total.degrees() != {s.ctx.dimension}:
        raise AssertionError("integrand does not reach the ambient top degree")
    return integrate(s.ctx, total)


def cotangent_numbers(s: SectionSpec) -> list[int]:
    """[int_Z c_{d-i}(Omega_Z) H^i for i = 0..d]."""
    d = s.dimension
    chern = section_chern(s)
    out = []
    power = s.ctx.one()
    for i in range(d + 1):
        sign = -1 if (d - i) % 2 else 1
        out.append(sign * section_integrate(s, chern[d - i] * power))
        power = power * s.H
    return out


def delta_sequence(s: SectionSpec) -> list[int]:
    nums = cotangent_numbers(s)
    d = s.dimension
    return [sum(comb(i + 1, j + 1) * nums[i] for i in range(d + 1)) for j in range(d + 1)]


def dual_profile(s: SectionSpec) -> DualProfile:
    delta = delta_sequence(s)
    for j, v in enumerate(delta):
        if v:
            if v < 0:
                raise DegenerateEmbeddingError(
                    f"delta_{j} = {v} < 0: H does not look very ample on {s.ctx.name}"
                )
            return DualProfile(delta=delta, defect=j, codegree=v)
    raise DegenerateEmbeddingError(f"every delta vanishes for {s.ctx.name}")


# closed forms ---------------------------------------------------------------

def scroll_codegree_closed(m: int, r: int) -> int:
    """Codegree of the scroll S_m(1^r, 2), valid for m >= r."""
    if m < r:
        raise ValueError(f"closed form needs m >= r, got m={m}, r={r} (dual defective regime)")
    if r < 1:
        raise ValueError("r must be positive")
    return m + r + 1


def scroll_defect_closed(m: int, r: int) -> int:
    return max(0, r - m)


def linear_section_defect_rule(def0: int, k: int) -> int:
    """Dual defect of a general codimension-k linear section."""
    return max(0, def0 - k)


def discriminant_degree(n: int, d: int) -> int:
    """Degree of the discriminant of degree-d forms on P^n: (n+1)(d-1)^n."""
    return (n + 1) * (d - 1) ** n


def veronese_codegree(n: int, d: int) -> int:
    """delta_0 of P^n embedded by |O(d)|."""
    if d < 2:
        raise ValueError("the linear embedding of P^n is dual degenerate (d must be >= 2)")
    ctx = ProjectiveSpace(n, ceiling=max(n, 12))
    return delta_sequence(SectionSpec(EmbeddingSpec.standard(ctx, d)))[0]


def scroll_embedding_dim(m: int, a: Sequence[int]) -> int:
    """N(m, a) = h^0(P^m, sum O(a_i)) - 1."""
    a = list(a)
    if not a or any(x < 0 for x in a):
        raise ValueError(f"twists must be nonnegative, got {a}")
    if any(x > y for x, y in zip(a, a[1:])):
        raise ValueError(f"twists must be weakly increasing, got {a}")
    if a[-1] <= 1:
        raise ValueError("the largest twist must exceed 1")
    return sum(comb(m + x, m) for x in a) - 1


def scroll(m: int, a: Sequence[int], ceiling: int = 12) -> EmbeddingSpec:
    """P(E_m(a)) with its tautological class xi."""
    return EmbeddingSpec.standard(SplitProjectiveBundle(m, a, ceiling=ceiling))


def scroll_profile(m: int, r: int) -> DualProfile:
    """Dual profile of S_m(1^r, 2) from the ring."""
    return dual_profile(SectionSpec(scroll(m, (1,) * r + (2,))))
