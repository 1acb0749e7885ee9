"""Walk through the structure of small coprime graphs.

Run: python demos/01_structure.py
"""

from __future__ import annotations

from coprime_lab.graph import (
    build,
    diameter,
    girth,
    is_chordal,
    max_clique_exact,
    minimum_vertex_cut,
    planarity_status,
    primorial_cut,
)
from coprime_lab.numtheory import build_prime_tables, prime_pi


def main() -> None:
    tables = build_prime_tables(40)

    # Vertex 1 is coprime to everything, so every pair is within distance 2.
    for n in (3, 4, 10, 40):
        g = build(n)
        print(f"TCG_{n}: {g.edge_count} edges, diameter {diameter(g)}, girth {girth(g)}")

    # The primes plus 1 form a clique, and nothing larger exists.
    for n in (7, 20, 40):
        w = max_clique_exact(build(n))
        print(f"omega(TCG_{n}) = {w.size}, pi({n}) + 1 = {prime_pi(tables, n) + 1}, clique {w.vertices}")

    # Deleting the units modulo the largest primorial isolates that primorial.
    g = build(36)
    cut = primorial_cut(g)
    kappa, witness = minimum_vertex_cut(g)
    print(f"TCG_36: removing {cut.removed} isolates {cut.isolated_vertex}; exact kappa = {kappa}")
    print(f"  a minimum separator: {witness.removed}")

    for n in (6, 7):
        print(f"TCG_{n} is {planarity_status(build(n)).status}")

    # Every vertex sits on a triangle, but long induced cycles still appear.
    res = is_chordal(build(15))
    print(f"TCG_15 chordal: {res.chordal}; chordless cycle {res.chordless_cycle}")


if __name__ == "__main__":
    main()
