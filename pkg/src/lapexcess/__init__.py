"""Distance-regularity of connected graphs from the Laplacian spectrum.

The pipeline: build the Laplacian, find its distinct eigenvalues with
multiplicities, construct the predistance polynomials orthogonal for the
spectral measure, and compare the spectral excess r_d(0) with the average
number of vertices at distance d.  The two agree exactly when the graph is
distance-regular, and the average never exceeds the spectral value.

Entry points: :func:`analyze` for the full bundle, :func:`evaluate_theorem`
for just the verdict report, and the ``lapexcess`` command line tool.
"""

__version__ = "0.1.0"

from .eigen import (
    DEFAULT_CLUSTER_TOL,
    DistinctSpectrum,
    JacobiConvergenceError,
    SpectrumClusterError,
    cluster_spectrum,
    eigenvalues_sym,
    idempotent,
    phi_products,
)
from .graphs import (
    FAMILIES,
    DisconnectedGraphError,
    DistanceData,
    EdgeListError,
    GeneratorError,
    Graph,
    GraphInputError,
    adjacency_matrix,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_stats,
    distance_data,
    format_edge_list,
    generate,
    hypercube_graph,
    laplacian_matrix,
    parse_edge_list,
    path_graph,
    petersen_graph,
    star_graph,
)
from .orthopoly import (
    OrthopolyBreakdownError,
    PredistanceSystem,
    SpectralMeasure,
    compose_affine,
    eval_matrix,
    eval_nodes,
    eval_scalar,
    hoffman_polynomial,
    inner_product,
    predistance_system,
    spectral_excess_closed_form,
)
from .theorem import (
    DEFAULT_EQUALITY_TOL,
    Analysis,
    ExcessReport,
    InternalCheckError,
    IntersectionArray,
    MisclusteredSpectrumError,
    OracleRefusal,
    ThreeEigenvalueReport,
    Verdict,
    adjacency_distance_polys,
    analyze,
    average_excess,
    drg_oracle,
    evaluate_theorem,
    three_eigenvalue_diagnostic,
)
from .report import build_document, dumps, format_float, render_text

__all__ = [
    "__version__",
    "Analysis",
    "DEFAULT_CLUSTER_TOL",
    "DEFAULT_EQUALITY_TOL",
    "DisconnectedGraphError",
    "DistanceData",
    "DistinctSpectrum",
    "EdgeListError",
    "ExcessReport",
    "FAMILIES",
    "GeneratorError",
    "Graph",
    "GraphInputError",
    "InternalCheckError",
    "IntersectionArray",
    "JacobiConvergenceError",
    "MisclusteredSpectrumError",
    "OracleRefusal",
    "OrthopolyBreakdownError",
    "PredistanceSystem",
    "SpectralMeasure",
    "SpectrumClusterError",
    "ThreeEigenvalueReport",
    "Verdict",
    "adjacency_distance_polys",
    "adjacency_matrix",
    "analyze",
    "average_excess",
    "build_document",
    "cluster_spectrum",
    "complete_bipartite_graph",
    "complete_graph",
    "compose_affine",
    "cycle_graph",
    "degree_stats",
    "distance_data",
    "drg_oracle",
    "dumps",
    "eigenvalues_sym",
    "eval_matrix",
    "eval_nodes",
    "eval_scalar",
    "evaluate_theorem",
    "format_edge_list",
    "format_float",
    "generate",
    "hoffman_polynomial",
    "hypercube_graph",
    "idempotent",
    "inner_product",
    "laplacian_matrix",
    "parse_edge_list",
    "path_graph",
    "petersen_graph",
    "phi_products",
    "predistance_system",
    "render_text",
    "spectral_excess_closed_form",
    "star_graph",
]
