"""Graphviz DOT export."""

from __future__ import annotations

from .core import CoprimeGraph


def to_dot(g: CoprimeGraph, name: str | None = None) -> str:
    name = name or f"TCG_{g.n}"
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(1, g.n + 1)]
    lines += [f"  {u} -- {w};" for u, w in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
