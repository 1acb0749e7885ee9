"""Cliques of TCG_n: the prime clique and an exact maximum-clique search."""

from __future__ import annotations

from dataclasses import dataclass

from ..numtheory import PrimeTables
from ..errors import CapExceededError
from .core import CoprimeGraph, labels_of, mask_of

DEFAULT_CLIQUE_CAP = 64


@dataclass(frozen=True)
class CliqueWitness:
    vertices: tuple[int, ...]
    is_maximal: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


def extension_blockers(g: CoprimeGraph, vertices) -> dict[int, int | None]:
    """For every vertex outside the clique, a member it is not adjacent to.

    ``None`` marks an outside vertex adjacent to the whole clique, i.e. the
    clique is not maximal.
    """
    inside = mask_of(vertices)
    out = {}
    for w in labels_of(g.full & ~inside):
        missing = inside & ~g.row(w)
        out[w] = (missing & -missing).bit_length() if missing else None
    return out


def is_maximal_clique(g: CoprimeGraph, vertices) -> bool:
    return g.is_clique(vertices) and None not in extension_blockers(g, vertices).values()


def prime_clique(g: CoprimeGraph, tables: PrimeTables) -> CliqueWitness:
    """{1} together with every prime <= n."""
    if g.n < 2:
        raise ValueError("prime clique needs n >= 2")
    if tables.limit < g.n:
        raise ValueError(f"prime tables cover 1..{tables.limit}, graph needs 1..{g.n}")
    vs = (1, *(p for p in tables.primes if p <= g.n))
    if not g.is_clique(vs):
        raise AssertionError(f"prime set of TCG_{g.n} is not a clique")
    return CliqueWitness(vs, is_maximal_clique(g, vs))


def max_clique_exact(g: CoprimeGraph, cap: int = DEFAULT_CLIQUE_CAP) -> CliqueWitness:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    if g.n > cap:
        raise CapExceededError(f"exact clique search refused: n={g.n} exceeds cap {cap}")
    rows = g.rows
    best: list[int] = []

    def colour_order(cand: int) -> tuple[list[int], list[int]]:
        order, bounds = [], []
        colour, left = 0, cand
        while left:
            colour += 1
            q = left
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~rows[v] & ~(1 << v)
                left &= ~(1 << v)
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order, bounds = colour_order(cand)
        for v, b in zip(reversed(order), reversed(bounds)):
            if len(clique) + b <= len(best):
                return
            clique.append(v)
            sub = cand & rows[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = clique.copy()
            clique.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], g.full)
    vs = tuple(sorted(v + 1 for v in best))
    return CliqueWitness(vs, is_maximal_clique(g, vs))


