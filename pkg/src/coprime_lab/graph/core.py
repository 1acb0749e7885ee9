"""The coprime graph TCG_n and its BFS-level structural invariants.

Vertices are labelled 1..n. Internally vertex ``v`` is bit ``v - 1`` of a
Python int, so each adjacency row is an arbitrary-width bitset.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator

import numpy as np

INF = math.inf


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x``, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bit(v: int) -> int:
    """Bitmask for the 1-based vertex label ``v``."""
    return 1 << (v - 1)


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def labels_of(mask: int) -> list[int]:
    return [i + 1 for i in iter_bits(mask)]


@dataclass(frozen=True)
class CoprimeGraph:
    n: int
    rows: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def row(self, v: int) -> int:
        return self.rows[v - 1]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> list[int]:
        return labels_of(self.rows[v - 1])

    def degree(self, v: int) -> int:
        return self.rows[v - 1].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(1, self.n + 1):
            out.extend((u, w) for w in labels_of(self.rows[u - 1] >> u << u))
        return out

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.row(v) | bit(v)) & m == m for v in vs)

    def prefix(self, k: int) -> CoprimeGraph:
        """Induced subgraph on 1..k, which is TCG_k."""
        if not 1 <= k <= self.n:
            raise ValueError(f"prefix size {k} outside [1, {self.n}]")
        keep = (1 << k) - 1
        return CoprimeGraph(k, tuple(r & keep for r in self.rows[:k]))

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                a[i, j] = 1
        return a


def build(n: int) -> CoprimeGraph:
    if n < 1:
        raise ValueError(f"TCG_n needs n >= 1, got {n}")
    labels = np.arange(1, n + 1)
    adj = np.gcd.outer(labels, labels) == 1
    np.fill_diagonal(adj, False)
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(r.tobytes(), "little") for r in packed)
    return CoprimeGraph(n, rows)


# -- connectivity and distances ---------------------------------------------


def reachable(g: CoprimeGraph, source: int, allowed: int | None = None) -> int:
    """Bitset of vertices reachable from ``source`` inside ``allowed``."""
    if allowed is None:
        allowed = g.full
    seen = frontier = bit(source) & allowed
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= g.rows[i]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: CoprimeGraph, removed=()) -> bool:
    """Connectivity of the graph left after deleting ``removed``.

    Fewer than two remaining vertices counts as connected.
    """
    allowed = g.full & ~mask_of(removed)
    if allowed.bit_count() < 2:
        return True
    start = (allowed & -allowed).bit_length()
    return reachable(g, start, allowed) == allowed


def eccentricity(g: CoprimeGraph, source: int) -> float:
    full = g.full
    seen = frontier = bit(source)
    depth = 0
    while seen != full:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= g.rows[i]
            if (nxt | seen) == full:
                break
        nxt &= ~seen
        if not nxt:
            return INF
        seen |= nxt
        frontier = nxt
        depth += 1
    return depth


def diameter(g: CoprimeGraph) -> float:
    """Largest BFS distance over all vertex pairs; ``inf`` if disconnected.

    A single vertex has diameter 0.
    """
    return max(eccentricity(g, v) for v in range(1, g.n + 1))


def girth(g: CoprimeGraph) -> float:
    """Shortest cycle length by BFS from every vertex; ``inf`` if acyclic."""
    best = INF
    for s in range(1, g.n + 1):
        dist = {s: 0}
        parent = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in labels_of(g.row(u)):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: CoprimeGraph) -> BipartiteResult:
    """2-colour by BFS; on failure return an odd cycle as a vertex tuple."""
    colour: dict[int, int] = {}
    parent: dict[int, int] = {}
    for root in range(1, g.n + 1):
        if root in colour:
            continue
        colour[root] = 0
        parent[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in labels_of(g.row(u)):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return BipartiteResult(False, _tree_cycle(parent, u, w))
    return BipartiteResult(True)


def _tree_cycle(parent: dict[int, int], u: int, w: int) -> tuple[int, ...]:
    """Cycle closed by the non-tree edge u-w in a BFS tree."""
    up = [u]
    while parent[up[-1]]:
        up.append(parent[up[-1]])
    wp = [w]
    on_u = set(up)
    while wp[-1] not in on_u:
        wp.append(parent[wp[-1]])
    lca = wp[-1]
    return tuple(up[: up.index(lca) + 1] + wp[-2::-1])


def is_cycle(g: CoprimeGraph, cycle) -> bool:
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    return all(g.adjacent(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


# -- triangles ----------------------------------------------------------------


@dataclass(frozen=True)
class TriangleCoverage:
    covered: bool
    witnesses: dict[int, tuple[int, int, int] | None]

    def __bool__(self) -> bool:
        return self.covered


def default_triangle(m: int) -> tuple[int, int, int]:
    return (1, 2, 3) if m < 3 else (1, m - 1, m)


def every_vertex_on_triangle(g: CoprimeGraph) -> TriangleCoverage:
    """Find a triangle through each vertex, trying {1, m-1, m} first."""
    if g.n < 3:
        raise ValueError(f"TCG_{g.n} has fewer than 3 vertices; no triangles exist")
    witnesses: dict[int, tuple[int, int, int] | None] = {}
    for m in range(1, g.n + 1):
        tri = default_triangle(m)
        if not g.is_clique(tri):
            tri = _any_triangle_through(g, m)
        witnesses[m] = tri
    return TriangleCoverage(all(t is not None for t in witnesses.values()), witnesses)


def _any_triangle_through(g: CoprimeGraph, v: int) -> tuple[int, int, int] | None:
    nv = g.row(v)
    for u in labels_of(nv):
        common = g.row(u) & nv
        if common:
            w = (common & -common).bit_length()
            return tuple(sorted((v, u, w)))
    return None


# -- chordality ---------------------------------------------------------------


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    chordless_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def lex_bfs(g: CoprimeGraph) -> list[int]:
    """Lexicographic BFS visit order by partition refinement."""
    parts = [set(range(1, g.n + 1))] if g.n else []
    order = []
    while parts:
        v = min(parts[0])
        parts[0].remove(v)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        nv = g.row(v)
        refined = []
        for part in parts:
            inside = {w for w in part if nv >> (w - 1) & 1}
            if inside:
                refined.append(inside)
            if len(inside) < len(part):
                refined.append(part - inside)
        parts = refined
    return order


def is_chordless_cycle(g: CoprimeGraph, cycle) -> bool:
    cyc = list(cycle)
    if len(cyc) < 4 or not is_cycle(g, cyc):
        return False
    k = len(cyc)
    for i in range(k):
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1) and g.adjacent(cyc[i], cyc[j]):
                return False
    return True


def is_chordal(g: CoprimeGraph) -> ChordalResult:
    """Perfect-elimination test on the reverse Lex-BFS order."""
    order = lex_bfs(g)
    pos = {v: i for i, v in enumerate(order)}
    # reverse Lex-BFS is the candidate elimination order; the later
    # neighbours of v are those visited before it
    for v in order:
        earlier = [w for w in labels_of(g.row(v)) if pos[w] < pos[v]]
        if not earlier:
            continue
        u = max(earlier, key=pos.__getitem__)
        nu = g.row(u) | bit(u)
        for w in earlier:
            if not nu >> (w - 1) & 1:
                cyc = _chordless_through(g, v, u, w) or _search_chordless(g)
                return ChordalResult(False, cyc)
    return ChordalResult(True)


def _chordless_through(g: CoprimeGraph, v: int, u: int, w: int) -> tuple[int, ...] | None:
    """Chordless cycle v, u, ..., w for non-adjacent neighbours u, w of v.

    A shortest u-w path avoiding the rest of N[v] is induced, so closing
    it through v gives a cycle without chords.
    """
    allowed = g.full & ~(g.row(v) | bit(v)) | bit(u) | bit(w)
    parent = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            path = [w]
            while parent[path[-1]]:
                path.append(parent[path[-1]])
            return (v, *reversed(path))
        for y in labels_of(g.row(x) & allowed):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def _search_chordless(g: CoprimeGraph) -> tuple[int, ...] | None:
    for v in range(1, g.n + 1):
        nbrs = g.neighbors(v)
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                if not g.adjacent(u, w):
                    cyc = _chordless_through(g, v, u, w)
                    if cyc:
                        return cyc
    return None
