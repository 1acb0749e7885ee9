"""Separating sets and exact vertex connectivity.

Exact connectivity goes through Menger's theorem: each vertex ``v`` is split
into ``v_in -> v_out`` with capacity 1, edges become ``u_out -> w_in`` arcs of
unbounded capacity, and the local connectivity of a non-adjacent pair is the
max flow from ``s_out`` to ``t_in``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..numtheory import coprime_set, largest_primorial_leq
from ..errors import CapExceededError
from .core import CoprimeGraph, bit, is_connected, labels_of

DEFAULT_KAPPA_CAP = 128


@dataclass(frozen=True)
class CutWitness:
    removed: tuple[int, ...]
    isolated_vertex: int | None = None

    @property
    def size(self) -> int:
        return len(self.removed)


def separates(g: CoprimeGraph, removed) -> bool:
    rest = g.n - len(set(removed))
    return rest >= 2 and not is_connected(g, removed)


def primorial_cut(g: CoprimeGraph) -> CutWitness:
    """Delete everything coprime to the largest primorial m <= n.

    The vertex m keeps no neighbours, so the rest falls apart.
    """
    if g.n < 4:
        raise ValueError(f"primorial cut needs n >= 4, got n={g.n}")
    m = largest_primorial_leq(g.n).value
    removed = tuple(coprime_set(g.n, m))
    if g.row(m) & ~_mask(removed):
        raise AssertionError(f"vertex {m} still has neighbours after the cut")
    if not separates(g, removed):
        raise AssertionError(f"primorial cut of TCG_{g.n} leaves a connected graph")
    return CutWitness(removed, m)


def _mask(vs) -> int:
    out = 0
    for v in vs:
        out |= bit(v)
    return out


class _SplitFlow:
    """Unit vertex-capacity flow from ``s`` to ``t`` on the split digraph.

    Nodes are ``(v, 0)`` for v_in and ``(v, 1)`` for v_out. Arcs
    ``u_out -> w_in`` never saturate, so the forward step from an out-node
    is a single bitset operation; only flow-carrying arcs are stored.
    """

    def __init__(self, g: CoprimeGraph, s: int, t: int):
        self.g = g
        self.s = s
        self.t = t
        self.through: set[int] = set()
        self.flow: dict[tuple[int, int], int] = {}
        self.inflow: dict[int, set[int]] = {}
        self.value = 0

    def _search(self) -> tuple[dict, tuple[int, int] | None]:
        g, t = self.g, self.t
        src = (self.s, 1)
        parent: dict = {src: None}
        seen_in = 0
        queue = deque([src])
        while queue:
            node = queue.popleft()
            v, side = node
            if side == 1:
                fresh = g.row(v) & ~seen_in
                seen_in |= fresh
                for w in labels_of(fresh):
                    parent[(w, 0)] = node
                    if w == t:
                        return parent, (w, 0)
                    queue.append((w, 0))
                back = (v, 0)
                if v in self.through and not seen_in >> (v - 1) & 1:
                    seen_in |= bit(v)
                    parent[back] = node
                    queue.append(back)
            else:
                out = (v, 1)
                if v not in self.through and out not in parent:
                    parent[out] = node
                    queue.append(out)
                for u in self.inflow.get(v, ()):
                    if (u, 1) not in parent:
                        parent[(u, 1)] = node
                        queue.append((u, 1))
        return parent, None

    def _push(self, u: int, w: int, delta: int) -> None:
        f = self.flow.get((u, w), 0) + delta
        if f:
            self.flow[(u, w)] = f
            self.inflow.setdefault(w, set()).add(u)
        else:
            self.flow.pop((u, w), None)
            self.inflow[w].discard(u)

    def augment(self) -> bool:
        parent, node = self._search()
        if node is None:
            return False
        while parent[node] is not None:
            (a, sa), (b, sb) = parent[node], node
            if a == b:
                if sa == 0:
                    self.through.add(a)
                else:
                    self.through.discard(a)
            elif sa == 1:
                # u_out -> w_in; cancel opposite flow first
                if self.flow.get((b, a), 0) > 0:
                    self._push(b, a, -1)
                else:
                    self._push(a, b, 1)
            else:
                self._push(b, a, -1)
            node = parent[node]
        self.value += 1
        return True

    def run(self, limit: int | None = None) -> int:
        while (limit is None or self.value < limit) and self.augment():
            pass
        return self.value

    def min_separator(self) -> tuple[int, ...]:
        """Vertices whose in-node is residual-reachable but out-node is not.

        Only meaningful after ``run()`` without a limit.
        """
        parent, node = self._search()
        if node is not None:
            raise RuntimeError("flow is not maximum")
        return tuple(
            sorted(v for (v, side) in parent if side == 0 and (v, 1) not in parent)
        )


def local_vertex_connectivity(g: CoprimeGraph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    if s == t or g.adjacent(s, t):
        raise ValueError(f"local connectivity needs distinct non-adjacent vertices, got {s}, {t}")
    return _SplitFlow(g, s, t).run(limit)


def minimum_vertex_cut(g: CoprimeGraph, cap: int = DEFAULT_KAPPA_CAP) -> tuple[int, CutWitness | None]:
    """Exact vertex connectivity and a separating set achieving it.

    Only non-adjacent pairs with one endpoint among the first kappa + 1
    vertices need a flow: a minimum separator misses one of them, and
    that vertex is cut off from some other vertex.
    """
    if g.n > cap:
        raise CapExceededError(f"exact connectivity refused: n={g.n} exceeds cap {cap}")
    n = g.n
    if n <= 1:
        return 0, None
    if not is_connected(g):
        return 0, CutWitness(())
    if g.is_complete():
        return n - 1, None
    best = min(g.degree(v) for v in range(1, n + 1))
    best_pair = None
    i = 1
    while i <= min(best + 1, n):
        for j in labels_of(g.full & ~g.row(i) & ~((1 << i) - 1)):
            k = local_vertex_connectivity(g, i, j, limit=best)
            # a limited run that hits the limit is only a lower bound
            if k < best:
                best, best_pair = k, (i, j)
        i += 1
    if best_pair is None:
        # the minimum degree is attained only by neighbourhood cuts
        v = min(range(1, n + 1), key=g.degree)
        return best, CutWitness(tuple(g.neighbors(v)), v)
    flow = _SplitFlow(g, *best_pair)
    flow.run()
    return best, CutWitness(flow.min_separator())


def vertex_connectivity_exact(g: CoprimeGraph, cap: int = DEFAULT_KAPPA_CAP) -> int:
    return minimum_vertex_cut(g, cap)[0]
