"""Fullerene graphs: construction, enumeration and pentagon-cluster analysis."""

from .graph import (
    Face,
    FullereneGraph,
    GraphError,
    InvalidRotationSystemError,
    MAX_VERTICES,
    NotAFullereneError,
    planar_dual,
    trace_faces,
    validate_rotation_system,
)
from .planarcode import (
    AnalysisRecord,
    PlanarCodeError,
    read_fullerenes,
    read_planar_code,
    write_planar_code,
    write_records,
)
from .spiral import (
    SpiralCode,
    SpiralWindingError,
    canonical_spiral,
    spiral_id,
    wind_from_spiral,
)
from .generate import census, generate_isomers, generate_spirals, isomer_count, spiral_rank
from .patches import (
    MergeError,
    Patch,
    PatchError,
    enumerate_patches,
    max_hexagons_in_patch,
    max_hexagons_with_cluster,
    max_vertices_with_big_cluster,
    merge_patches,
    min_boundary_length,
    tube_parameters,
)
from .clusters import (
    CatalogEntry,
    ClusterSignature,
    PartitionClass,
    PentagonCluster,
    classify_partition,
    closed_cluster_faces,
    cluster_distance,
    cluster_signature,
    complement,
    faces_to_patch,
    hog_keyword,
    parse_pip,
    pentagon_clusters,
    pip,
    pip_text,
    ring_cluster_patch,
    separation_number,
    six_cluster_catalog,
    tube_parameters_of_6_cluster,
)
from .symmetry import (
    Automorphism,
    AutomorphismGroup,
    SymmetryError,
    automorphisms,
    point_group,
)
from .inflate import (
    HexagonCycle,
    InflationError,
    InflationMap,
    ReinstatementError,
    SeedTableMissError,
    goldberg_5_0,
    inflate_preserving_clusters,
    lift_hexagon_cycle,
    reinstate_cluster,
    seed_fullerene_for_partition,
    separating_cycle_witnesses,
    tube_fullerene_6_6,
)

__all__ = [
    "AnalysisRecord",
    "Automorphism",
    "AutomorphismGroup",
    "CatalogEntry",
    "ClusterSignature",
    "Face",
    "FullereneGraph",
    "GraphError",
    "HexagonCycle",
    "InflationError",
    "InflationMap",
    "InvalidRotationSystemError",
    "MAX_VERTICES",
    "MergeError",
    "NotAFullereneError",
    "PartitionClass",
    "Patch",
    "PatchError",
    "PentagonCluster",
    "PlanarCodeError",
    "ReinstatementError",
    "SeedTableMissError",
    "SpiralCode",
    "SpiralWindingError",
    "SymmetryError",
    "automorphisms",
    "canonical_spiral",
    "census",
    "classify_partition",
    "closed_cluster_faces",
    "cluster_distance",
    "cluster_signature",
    "complement",
    "enumerate_patches",
    "faces_to_patch",
    "generate_isomers",
    "generate_spirals",
    "goldberg_5_0",
    "hog_keyword",
    "inflate_preserving_clusters",
    "isomer_count",
    "lift_hexagon_cycle",
    "max_hexagons_in_patch",
    "max_hexagons_with_cluster",
    "max_vertices_with_big_cluster",
    "merge_patches",
    "min_boundary_length",
    "parse_pip",
    "pentagon_clusters",
    "pip",
    "pip_text",
    "planar_dual",
    "point_group",
    "read_fullerenes",
    "read_planar_code",
    "reinstate_cluster",
    "ring_cluster_patch",
    "seed_fullerene_for_partition",
    "separating_cycle_witnesses",
    "separation_number",
    "six_cluster_catalog",
    "spiral_id",
    "spiral_rank",
    "trace_faces",
    "tube_fullerene_6_6",
    "tube_parameters",
    "tube_parameters_of_6_cluster",
    "validate_rotation_system",
    "wind_from_spiral",
    "write_planar_code",
    "write_records",
]

__version__ = "0.1.0"
