"""Planarity status and the TCG_7 crossing-number witness checks.

Small graphs are certified planar by exhaustive search for a subdivision
of K5 or K3,3 over all edge subsets (Kuratowski). From n = 7 on, the
clique {1, 2, 3, 5, 7} is a K5 subgraph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from ..errors import CapExceededError
from .core import CoprimeGraph

K5_WITNESS = (1, 2, 3, 5, 7)
EXHAUSTIVE_EDGE_CAP = 18


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    kind: str | None = None  # "K5" or "K3,3"
    witness_vertices: tuple[int, ...] = ()
    witness_edges: tuple[tuple[int, int], ...] = ()

    @property
    def status(self) -> str:
        return "planar" if self.planar else "nonplanar"


def _smooth(edges) -> Counter | None:
    """Suppress degree-2 vertices of a multigraph edge list.

    Returns the reduced multigraph as a Counter of sorted pairs, or None
    when smoothing produces a loop (cannot be a Kuratowski graph).
    """
    multi = Counter(tuple(sorted(e)) for e in edges)
    while True:
        deg = Counter()
        for (a, b), c in multi.items():
            deg[a] += c
            deg[b] += c
        v = next((x for x, d in deg.items() if d == 2), None)
        if v is None:
            return multi
        ends = []
        for (a, b), c in list(multi.items()):
            if v in (a, b):
                ends.extend([b if a == v else a] * c)
                del multi[(a, b)]
        x, y = ends
        if x == y:
            return None
        multi[tuple(sorted((x, y)))] += 1


def _kuratowski_kind(multi: Counter) -> str | None:
    if any(c > 1 for c in multi.values()):
        return None
    verts = {v for e in multi for v in e}
    deg = Counter(v for e in multi for v in e)
    if len(verts) == 5 and len(multi) == 10:
        return "K5"
    if len(verts) == 6 and len(multi) == 9 and set(deg.values()) == {3}:
        # 3-regular on 6 vertices is K3,3 or the prism; K3,3 has no triangle
        if not any(
            all(tuple(sorted(p)) in multi for p in combinations(tri, 2))
            for tri in combinations(sorted(verts), 3)
        ):
            return "K3,3"
    return None


def find_kuratowski_subgraph(edges, max_edges: int = EXHAUSTIVE_EDGE_CAP):
    """Search every edge subset for a K5 or K3,3 subdivision.

    Returns ``(kind, edge_subset)`` or None. Exponential; refuses more than
    ``max_edges`` edges.
    """
    edges = [tuple(e) for e in edges]
    if len(edges) > max_edges:
        raise CapExceededError(f"exhaustive Kuratowski search refused for {len(edges)} edges")
    # a subdivision of K3,3 has >= 9 edges, of K5 >= 10
    for size in range(9, len(edges) + 1):
        for subset in combinations(edges, size):
            reduced = _smooth(subset)
            if reduced is None:
                continue
            kind = _kuratowski_kind(reduced)
            if kind:
                return kind, subset
    return None


def planarity_status(g: CoprimeGraph) -> PlanarityResult:
    if g.n >= 7:
        if not g.is_clique(K5_WITNESS):
            raise AssertionError("{1,2,3,5,7} is not a clique")
        return PlanarityResult(False, "K5", K5_WITNESS)
    found = find_kuratowski_subgraph(g.edges())
    if found is None:
        return PlanarityResult(True)
    kind, subset = found
    verts = tuple(sorted({v for e in subset for v in e}))
    return PlanarityResult(False, kind, verts, tuple(subset))


@dataclass(frozen=True)
class CrossingWitnesses:
    """Mechanical checks behind cr(TCG_7) = 3."""

    edge_count: int
    edges_after_one_removal: int
    planar_edge_bound: int
    one_crossing_impossible: bool
    k5_sets: dict[tuple[int, ...], bool] = field(default_factory=dict)
    all_k5: tuple[tuple[int, ...], ...] = ()
    k5_sets_avoid_2_and_4: bool = False
    k33_parts: tuple[tuple[int, ...], tuple[int, ...]] = ((), ())
    k33_cross_edges_present: int = 0
    k33_edges_one_even_end: bool = False

    @property
    def all_hold(self) -> bool:
        return (
            self.edge_count == 17
            and self.one_crossing_impossible
            and all(self.k5_sets.values())
            and self.k5_sets_avoid_2_and_4
            and self.k33_cross_edges_present == 9
            and self.k33_edges_one_even_end
        )


def tcg7_crossing_witnesses(g: CoprimeGraph) -> CrossingWitnesses:
    if g.n != 7:
        raise ValueError(f"crossing witnesses are defined for TCG_7, got TCG_{g.n}")
    e = g.edge_count
    bound = 3 * g.n - 6
    k5_sets = {vs: g.is_clique(vs) for vs in ((1, 2, 3, 5, 7), (1, 3, 4, 5, 7))}
    odd, even = (1, 5, 7), (2, 4, 6)
    all_k5 = tuple(vs for vs in combinations(range(1, 8), 5) if g.is_clique(vs))
    cross = sum(g.adjacent(a, b) for a in odd for b in even)
    return CrossingWitnesses(
        edge_count=e,
        edges_after_one_removal=e - 1,
        planar_edge_bound=bound,
        one_crossing_impossible=e - 1 > bound,
        k5_sets=k5_sets,
        all_k5=all_k5,
        k5_sets_avoid_2_and_4=not any({2, 4} <= set(vs) for vs in all_k5),
        k33_parts=(odd, even),
        k33_cross_edges_present=cross,
        k33_edges_one_even_end=all((a % 2) + (b % 2) == 1 for a in odd for b in even),
    )
