"""Spectra: sorted eigenvalues, multiplicity clusters, serialisation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .jacobi import jacobi_eigenvalues
from .matrix import SymmetricIntMatrix

CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    clusters: tuple[tuple[float, int], ...]
    tol: float = CLUSTER_TOL
    residual: float = 0.0
    sweeps: int = 0

    @property
    def n(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def to_dict(self) -> dict:
        return {
            "values": list(self.values),
            "clusters": [{"value": v, "multiplicity": k} for v, k in self.clusters],
            "tol": self.tol,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def cluster(values, tol: float = CLUSTER_TOL) -> tuple[tuple[float, int], ...]:
    """Group sorted values wherever consecutive gaps are <= ``tol``."""
    out: list[list[float]] = []
    for v in sorted(values):
        if out and v - out[-1][-1] <= tol:
            out[-1].append(v)
        else:
            out.append([v])
    return tuple((float(np.mean(g)), len(g)) for g in out)


def eigenvalues(m: SymmetricIntMatrix, tol: float = CLUSTER_TOL, *, rel_tol: float = 1e-12, max_sweeps: int = 100) -> Spectrum:
    if tol <= 0:
        raise ValueError(f"cluster tolerance must be positive, got {tol}")
    vals, residual, sweeps = jacobi_eigenvalues(m.entries, rel_tol=rel_tol, max_sweeps=max_sweeps)
    vals = tuple(float(v) for v in vals)
    return Spectrum(vals, cluster(vals, tol), tol, residual, sweeps)


def multiplicity_near(s: Spectrum, lam: float, tol: float = CLUSTER_TOL) -> int:
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return sum(1 for v in s.values if abs(v - lam) <= tol)


def spectral_radius(s: Spectrum) -> float:
    if not s.values:
        raise ValueError("empty spectrum")
    return s.values[-1]


def spectra_to_csv(rows: dict[int, Spectrum]) -> str:
    """One row per n: ``n`` followed by the sorted eigenvalues to 4 decimals."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for n in sorted(rows):
        # +0.0 folds -0.0 into 0.0 so output is stable
        w.writerow([n, *(f"{round(v, 4) + 0.0:.4f}" for v in rows[n].values)])
    return buf.getvalue()
