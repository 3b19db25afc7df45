"""Exact Schubert calculus, tangent Chern classes and projective dual
invariants for Grassmannians, projective spaces, their products and split
projective bundles."""

from .cohomology import (
    CohomologyContext,
    EmbeddingSpec,
    Grassmannian,
    MultiProjective,
    ProjectiveSpace,
    RingElement,
    SplitProjectiveBundle,
    degree_of_embedding,
    euler_characteristic,
    hyperplane_power,
    integrate,
    multiply,
    tangent_chern,
)
from .dual import DualProfile, SectionSpec, delta_sequence, dual_profile, section_chern, section_integrate
from .partitions import Box, Partition, conjugate, lr_coefficient

__version__ = "0.1.0"
