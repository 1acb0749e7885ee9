"""Dense symmetric integer matrices (adjacency A and shifts A - lambda*I)."""

from __future__ import annotations

import numpy as np

from ..errors import CapExceededError
from ..graph import CoprimeGraph

MAX_ORDER = 4096


class SymmetricIntMatrix:
    """Immutable dense symmetric matrix with small integer entries."""

    __slots__ = ("_entries",)

    def __init__(self, entries, max_order: int = MAX_ORDER):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] > max_order:
            raise CapExceededError(f"matrix order {a.shape[0]} exceeds cap {max_order}")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")
        a.setflags(write=False)
        self._entries = a

    @classmethod
    def adjacency(cls, g: CoprimeGraph, max_order: int = MAX_ORDER) -> SymmetricIntMatrix:
        if g.n > max_order:
            raise CapExceededError(f"matrix order {g.n} exceeds cap {max_order}")
        return cls(g.to_array(), max_order=max(max_order, g.n))

    @property
    def order(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only view; copy before mutating."""
        return self._entries

    def shifted(self, lam: int) -> SymmetricIntMatrix:
        """M - lam * I."""
        return SymmetricIntMatrix(self._entries - lam * np.eye(self.order, dtype=np.int64))

    def is_adjacency(self) -> bool:
        a = self._entries
        return bool(np.all(np.diag(a) == 0) and np.isin(a, (0, 1)).all())

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricIntMatrix) and np.array_equal(self._entries, other._entries)

    def __repr__(self) -> str:
        return f"SymmetricIntMatrix(order={self.order})"
