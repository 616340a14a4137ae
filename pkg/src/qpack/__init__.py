"""Quasiperiodic packings of G-clusters by the strip projection method."""

from .cluster import (
    TAU,
    ClusterError,
    GCluster,
    GroupSpec,
    build_cluster,
    cyclic_orbit,
    icosahedral_group,
    icosahedral_orbit,
)
from .diffract import DiffractionMap, GridSpec, diffraction_map, extract_peaks, intensity
from .embed import Embedding, EmbeddingError, embed, project_perp, project_phys
from .generate import (
    Fragment,
    Pattern,
    ProjectedPoint,
    enumerate_fragment,
    generate_standard,
    occupation,
)
from .modified import ModifiedConfig, default_delta, generate_modified, min_cluster_distance
from .strip import StripConstraint, StripSpec, build_constraints, in_strip, make_strip, slice_oracle

__version__ = "0.1.0"

__all__ = [
    "TAU", "ClusterError", "GCluster", "GroupSpec", "build_cluster", "cyclic_orbit",
    "icosahedral_group", "icosahedral_orbit", "DiffractionMap", "GridSpec",
    "diffraction_map", "extract_peaks", "intensity", "Embedding", "EmbeddingError",
    "embed", "project_perp", "project_phys", "Fragment", "Pattern", "ProjectedPoint",
    "enumerate_fragment", "generate_standard", "occupation", "ModifiedConfig",
    "default_delta", "generate_modified", "min_cluster_distance", "StripConstraint", "StripSpec",
    "build_constraints", "in_strip", "make_strip", "slice_oracle",
]
