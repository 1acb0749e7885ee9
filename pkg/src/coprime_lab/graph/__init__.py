"""Construction and structural invariants of the coprime graph TCG_n."""

from .clique import (
    DEFAULT_CLIQUE_CAP,
    CliqueWitness,
    is_maximal_clique,
    max_clique_exact,
    prime_clique,
)
from .connectivity import (
    DEFAULT_KAPPA_CAP,
    CutWitness,
    local_vertex_connectivity,
    minimum_vertex_cut,
    primorial_cut,
    separates,
    vertex_connectivity_exact,
)
from .core import (
    INF,
    BipartiteResult,
    ChordalResult,
    CoprimeGraph,
    TriangleCoverage,
    build,
    diameter,
    every_vertex_on_triangle,
    girth,
    is_bipartite,
    is_chordal,
    is_chordless_cycle,
    is_connected,
    is_cycle,
)
from .dot import to_dot
from .planarity import (
    CrossingWitnesses,
    PlanarityResult,
    find_kuratowski_subgraph,
    planarity_status,
    tcg7_crossing_witnesses,
)

__all__ = [
    "BipartiteResult",
    "ChordalResult",
    "CliqueWitness",
    "CoprimeGraph",
    "CrossingWitnesses",
    "CutWitness",
    "DEFAULT_CLIQUE_CAP",
    "DEFAULT_KAPPA_CAP",
    "INF",
    "PlanarityResult",
    "TriangleCoverage",
    "build",
    "diameter",
    "every_vertex_on_triangle",
    "find_kuratowski_subgraph",
    "girth",
    "is_bipartite",
    "is_chordal",
    "is_chordless_cycle",
    "is_connected",
    "is_cycle",
    "is_maximal_clique",
    "local_vertex_connectivity",
    "max_clique_exact",
    "minimum_vertex_cut",
    "planarity_status",
    "prime_clique",
    "primorial_cut",
    "separates",
    "tcg7_crossing_witnesses",
    "to_dot",
    "vertex_connectivity_exact",
]
