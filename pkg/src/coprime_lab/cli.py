"""Command-line front end: ``tcg {analyze,spectrum,verify,export}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import graph as gr
from .errors import CapExceededError
from .numtheory import (
    build_prime_tables,
    dominating_primes,
    largest_primorial_leq,
    nullity_lower_bound,
    prime_pi,
)
from .spectral import (
    CLUSTER_TOL,
    SymmetricIntMatrix,
    eigenvalues,
    exact_eigen_multiplicity,
    spectra_to_csv,
)
from .verify import REFERENCE_TABLE1, Caps, range_verify, reproduce_table1, summarize

FORMATS = ("text", "json", "csv", "dot")


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    lo: int | None = None
    hi: int | None = None
    fmt: str = "text"
    out: str | None = None
    tol: float = CLUSTER_TOL
    seed: int = 0
    caps: Caps = Caps()
    workers: int = 1

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if not 0 < self.tol <= 1e-3:
            raise ValueError(f"tolerance must lie in (0, 1e-3], got {self.tol}")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return default if raw is None else int(raw)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--tol", type=float, default=float(os.environ.get("TCG_TOL", CLUSTER_TOL)))
    common.add_argument("--seed", type=int, default=_env_int("TCG_SEED", 0))
    common.add_argument("--max-exact-clique", type=int, default=_env_int("TCG_MAX_EXACT_CLIQUE", Caps.max_exact_clique))
    common.add_argument("--max-exact-kappa", type=int, default=_env_int("TCG_MAX_EXACT_KAPPA", Caps.max_exact_kappa))
    common.add_argument("--max-matrix", type=int, default=_env_int("TCG_MAX_MATRIX", Caps.max_matrix))

    p = argparse.ArgumentParser(prog="tcg", description="Coprime graph TCG_n laboratory.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("analyze", "structural invariants of TCG_n"),
        ("spectrum", "adjacency spectrum and exact multiplicities of 0 and -1"),
        ("export", "write TCG_n as DOT or its spectrum as CSV"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("verify", parents=[common], help="check every theorem over a range of n")
    sp.add_argument("--from", dest="lo", type=int, required=True)
    sp.add_argument("--to", dest="hi", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    return p


def parse_config(argv: list[str] | None = None) -> RunConfig:
    parser = _parser()
    a = parser.parse_args(argv)
    try:
        caps = Caps(a.max_exact_clique, a.max_exact_kappa, a.max_matrix)
        return RunConfig(
            command=a.command,
            n=getattr(a, "n", None),
            lo=getattr(a, "lo", None),
            hi=getattr(a, "hi", None),
            fmt=a.fmt,
            out=a.out,
            tol=a.tol,
            seed=a.seed,
            caps=caps,
            workers=getattr(a, "workers", 1),
        )
    except ValueError as exc:
        parser.error(str(exc))


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _plain(v):
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    if isinstance(v, tuple):
        return list(v)
    return v


def _as_text(d: dict, indent: int = 0) -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            lines.append(" " * indent + f"{k}:")
            lines.append(_as_text(v, indent + 2).rstrip("\n"))
        else:
            lines.append(" " * indent + f"{k}: {v}")
    return "\n".join(lines) + "\n"


def analyze_record(n: int, caps: Caps = Caps()) -> dict:
    g = gr.build(n)
    rec: dict = {"n": n, "vertices": n, "edges": g.edge_count}
    rec["diameter"] = _plain(gr.diameter(g))
    if n <= 3:
        rec["diameter_note"] = "complete graph; diameter 2 holds only from n = 4" if n > 1 else "single vertex"
    rec["girth"] = _plain(gr.girth(g))
    bip = gr.is_bipartite(g)
    rec["bipartite"] = bip.bipartite
    rec["odd_cycle"] = _plain(bip.odd_cycle)
    if n >= 3:
        rec["every_vertex_on_triangle"] = gr.every_vertex_on_triangle(g).covered
        ch = gr.is_chordal(g)
        rec["chordal"] = ch.chordal
        rec["chordless_cycle"] = _plain(ch.chordless_cycle)
    if n >= 2:
        tables = build_prime_tables(n)
        pc = gr.prime_clique(g, tables)
        rec["prime_clique"] = {"vertices": list(pc.vertices), "size": pc.size, "maximal": pc.is_maximal}
        rec["pi_n_plus_1"] = prime_pi(tables, n) + 1
        try:
            rec["clique_number"] = gr.max_clique_exact(g, caps.max_exact_clique).size
        except CapExceededError:
            rec["clique_number"] = None
    try:
        rec["planarity"] = gr.planarity_status(g).status
    except CapExceededError:
        rec["planarity"] = None
    if n >= 4:
        cut = gr.primorial_cut(g)
        rec["primorial"] = largest_primorial_leq(n).value
        rec["kappa_upper_bound"] = cut.size
        rec["cut_witness"] = {"removed": list(cut.removed), "isolated_vertex": cut.isolated_vertex}
        try:
            rec["kappa_exact"] = gr.vertex_connectivity_exact(g, caps.max_exact_kappa)
        except CapExceededError:
            rec["kappa_exact"] = None
    if n == 7:
        w = gr.tcg7_crossing_witnesses(g)
        rec["crossing_witnesses"] = {
            "edge_count": w.edge_count,
            "edges_after_one_removal": w.edges_after_one_removal,
            "planar_edge_bound": w.planar_edge_bound,
            "one_crossing_impossible": w.one_crossing_impossible,
            "k5_sets": {",".join(map(str, k)): v for k, v in w.k5_sets.items()},
            "k33_parts": [list(p) for p in w.k33_parts],
            "k33_cross_edges_present": w.k33_cross_edges_present,
            "all_hold": w.all_hold,
        }
    return rec


def spectrum_record(n: int, tol: float = CLUSTER_TOL, seed: int = 0, caps: Caps = Caps()) -> dict:
    a = SymmetricIntMatrix.adjacency(gr.build(n), caps.max_matrix)
    s = eigenvalues(a, tol)
    tables = build_prime_tables(max(n, 2))
    rec = {
        "n": n,
        "seed": seed,
        "eigenvalues": [round(v, 12) + 0.0 for v in s.values],
        "clusters": [{"value": round(v, 12) + 0.0, "multiplicity": k} for v, k in s.clusters],
        "multiplicity": {
            "0": exact_eigen_multiplicity(a, 0, seed),
            "-1": exact_eigen_multiplicity(a, -1, seed),
        },
        "bounds": {"-1": len(dominating_primes(tables, n))},
    }
    if n >= 2:
        rec["bounds"]["0"] = nullity_lower_bound(tables, n)
    return rec


def cmd_analyze(cfg: RunConfig) -> int:
    rec = analyze_record(cfg.n, cfg.caps)
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(rec, indent=2) + "\n")
    elif cfg.fmt == "text":
        _emit(cfg, _as_text(rec))
    else:
        raise ValueError(f"analyze supports text or json, not {cfg.fmt}")
    return 0


def cmd_spectrum(cfg: RunConfig) -> int:
    rec = spectrum_record(cfg.n, cfg.tol, cfg.seed, cfg.caps)
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(rec, indent=2) + "\n")
    elif cfg.fmt == "csv":
        a = SymmetricIntMatrix.adjacency(gr.build(cfg.n), cfg.caps.max_matrix)
        _emit(cfg, spectra_to_csv({cfg.n: eigenvalues(a, cfg.tol)}))
    elif cfg.fmt == "text":
        lines = [f"TCG_{cfg.n} adjacency spectrum:"]
        lines += [f"  {v:+.6f}" for v in rec["eigenvalues"]]
        m, b = rec["multiplicity"], rec["bounds"]
        lines.append(f"eigenvalue -1: exact multiplicity {m['-1']} (bound |D| = {b['-1']})")
        if "0" in b:
            lines.append(f"eigenvalue 0: exact multiplicity {m['0']} (bound sum k_i - m = {b['0']})")
        else:
            lines.append(f"eigenvalue 0: exact multiplicity {m['0']}")
        _emit(cfg, "\n".join(lines) + "\n")
    else:
        raise ValueError(f"spectrum supports text, json or csv, not {cfg.fmt}")
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    lo, hi = cfg.lo, cfg.hi
    if lo < 1:
        print(f"note: n starts at 1; skipping {lo}..0", file=sys.stderr)
        lo = 1
    if hi < lo:
        raise ValueError(f"empty range {cfg.lo}..{cfg.hi}")
    reports = range_verify(lo, hi, cfg.caps, cfg.seed, cfg.tol, cfg.workers)
    summary = summarize(reports)
    table = None
    if lo <= min(REFERENCE_TABLE1) and hi >= max(REFERENCE_TABLE1):
        table = reproduce_table1()
    failed = summary["failures"] > 0 or (table is not None and not table.ok)
    if cfg.fmt == "json":
        doc = {"summary": summary, "reports": [r.to_dict() for r in reports]}
        if table is not None:
            doc["table1"] = {
                "ok": table.ok,
                "max_deviation": {str(k): v for k, v in table.max_deviation.items()},
                "failures": [list(f) for f in table.failures],
            }
        _emit(cfg, json.dumps(doc, indent=2) + "\n")
    else:
        lines = []
        for r in reports:
            counts = {s: sum(c.status == s for c in r.checks) for s in ("pass", "fail", "not-applicable")}
            lines.append(f"n={r.n}: {counts['pass']} pass, {counts['fail']} fail, {counts['not-applicable']} n/a")
            lines += [f"  FAIL {c.name}: computed {c.computed} vs {c.bound_or_expected}" for c in r.failures]
        if table is not None:
            worst = max(table.max_deviation.values())
            lines.append(f"table 1: {'ok' if table.ok else 'FAIL'} (max deviation {worst:.4f}, tol {table.tol})")
            lines += [f"  FAIL n={n} index {i}: computed {c:.4f} expected {e}" for n, i, c, e in table.failures]
        lines.append(f"{summary['reports']} reports, {summary['failures']} failed checks")
        _emit(cfg, "\n".join(lines) + "\n")
    return 1 if failed else 0


def cmd_export(cfg: RunConfig) -> int:
    g = gr.build(cfg.n)
    if cfg.fmt == "dot":
        _emit(cfg, gr.to_dot(g))
    elif cfg.fmt == "csv":
        a = SymmetricIntMatrix.adjacency(g, cfg.caps.max_matrix)
        _emit(cfg, spectra_to_csv({cfg.n: eigenvalues(a, cfg.tol)}))
    else:
        raise ValueError(f"export supports dot or csv, not {cfg.fmt}")
    return 0


COMMANDS = {"analyze": cmd_analyze, "spectrum": cmd_spectrum, "verify": cmd_verify, "export": cmd_export}


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    if cfg.command != "verify" and cfg.n < 1:
        print(f"tcg {cfg.command}: --n must be >= 1, got {cfg.n}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[cfg.command](cfg)
    except CapExceededError as exc:
        print(f"tcg {cfg.command}: refused: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"tcg {cfg.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tcg {cfg.command}: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
