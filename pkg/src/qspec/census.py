"""Isomorphism-free census of connected bicyclic graphs.

Every connected bicyclic graph is a spanning tree plus two chords, so the
census walks all free trees on n vertices, adds every unordered pair of
distinct non-edges and keeps one canonical form per class.  Trees are
independent work units; with several workers each one canonicalises its
share of trees and the parent merges the sets.
"""

from __future__ import annotations

import csv
import json
import logging
import os
from dataclasses import dataclass
from itertools import combinations
from multiprocessing import get_context
from typing import Iterable, Iterator

from .canon import canonical_form, canonical_form_masks, is_isomorphic
from .families import FamilyParams, build_family
from .formats import from_graph6
from .graph import (BaseKind, Graph, GraphError, classify_base, complement,
                    is_bipartite, is_connected, star_plus_2e)
from .spectra import complement_q, least_eigenpairs
from .trees import free_trees

log = logging.getLogger(__name__)

CENSUS_RANGE = (5, 14)
CHECKPOINT_EVERY = 100_000
UNIQUENESS_GAP = 1e-7


@dataclass(frozen=True)
class CensusRecord:
    canonical: str          # graph6 of the canonical relabelling
    n: int
    base: BaseKind
    lambda_c: float | None  # least Q-eigenvalue of the complement, if connected
    complement_connected: bool
    complement_bipartite: bool
    residual: float | None = None
    degenerate: bool = False

    @property
    def graph(self) -> Graph:
        return from_graph6(self.canonical)


def _check_order(n):
    lo, hi = CENSUS_RANGE
    if not lo <= n <= hi:
        raise GraphError(f"census supports {lo} <= n <= {hi}, got {n}")


def tree_chord_candidates(tree: Graph) -> Iterator[list[int]]:
    """Neighbour masks of tree + {e, f} for every pair of distinct non-edges."""
    n = tree.n
    masks = list(tree.masks)
    non_edges = [(u, v) for u, v in combinations(range(n), 2) if not masks[u] >> v & 1]
    for (a, b), (c, d) in combinations(non_edges, 2):
        m = list(masks)
        m[a] |= 1 << b
        m[b] |= 1 << a
        m[c] |= 1 << d
        m[d] |= 1 << c
        yield m


def _canon_trees(trees_masks):
    found = set()
    count = 0
    for tm in trees_masks:
        for m in tree_chord_candidates(Graph.from_masks(tm)):
            found.add(canonical_form_masks(m))
            count += 1
    return found, count


def _write_checkpoint(path, n, next_tree, candidates, found):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump({"n": n, "next_tree": next_tree, "candidates": candidates,
                   "classes": sorted(c.decode() for c in found)}, fh)
    os.replace(tmp, path)


def bicyclic_classes(n: int, workers: int = 1, checkpoint: str | None = None,
                     resume: bool = False, chunk: int = 8) -> list[bytes]:
    """Sorted canonical forms of all connected bicyclic graphs on ``n`` vertices."""
    _check_order(n)
    trees = [t.masks for t in free_trees(n)]
    found: set[bytes] = set()
    start, candidates, since = 0, 0, 0
    if resume and checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            state = json.load(fh)
        if state["n"] != n:
            raise ValueError(f"checkpoint is for n={state['n']}, not {n}")
        start, candidates = state["next_tree"], state["candidates"]
        found = {c.encode() for c in state["classes"]}
        log.info("resuming n=%d at tree %d with %d classes", n, start, len(found))
    chunks = [(i, trees[i:i + chunk]) for i in range(start, len(trees), chunk)]

    def merge(results):
        nonlocal candidates, since
        for (i, block), (part, count) in results:
            found.update(part)
            candidates += count
            since += count
            if checkpoint and since >= CHECKPOINT_EVERY:
                _write_checkpoint(checkpoint, n, i + len(block), candidates, found)
                since = 0

    if workers > 1:
        with get_context("fork").Pool(workers) as pool:
            merge(zip(chunks, pool.imap(_canon_trees, [c[1] for c in chunks])))
    else:
        merge((c, _canon_trees(c[1])) for c in chunks)
    if checkpoint:
        _write_checkpoint(checkpoint, n, len(trees), candidates, found)
    log.info("n=%d: %d trees, %d candidates, %d classes", n, len(trees), candidates, len(found))
    return sorted(found)


def records_for(classes: Iterable[bytes | str], eig_batch: int = 4096) -> list[CensusRecord]:
    """Attach base kind, complement connectivity and lambda(G^c) to each class."""
    graphs = []
    for c in classes:
        g6 = c.decode() if isinstance(c, bytes) else c
        graphs.append((g6, from_graph6(g6)))
    info = []
    todo = []
    for g6, g in graphs:
        gc = complement(g)
        conn = is_connected(gc)
        info.append((g6, g, classify_base(g), conn, is_bipartite(gc)))
        if conn:
            todo.append(len(info) - 1)
    eig = {}
    for k in range(0, len(todo), eig_batch):
        idx = todo[k:k + eig_batch]
        res = least_eigenpairs([complement_q(info[i][1]) for i in idx])
        eig.update(zip(idx, res))
    out = []
    for i, (g6, g, base, conn, bip) in enumerate(info):
        r = eig.get(i)
        out.append(CensusRecord(g6, g.n, base, r.lam if r else None, conn, bip,
                                r.residual if r else None, r.degenerate if r else False))
    return out


def bicyclic_census(n: int, workers: int = 1, **kw) -> Iterator[CensusRecord]:
    """One record per isomorphism class, in canonical order."""
    yield from records_for(bicyclic_classes(n, workers=workers, **kw))


def sort_by_lambda(records: Iterable[CensusRecord]) -> list[CensusRecord]:
    return sorted(records, key=lambda r: (r.lambda_c is None, r.lambda_c or 0.0, r.canonical))


def write_csv(records: Iterable[CensusRecord], path_or_file) -> None:
    rows = sort_by_lambda(records)
    own = isinstance(path_or_file, (str, os.PathLike))
    fh = open(path_or_file, "w", newline="") if own else path_or_file
    try:
        w = csv.writer(fh)
        w.writerow(["canonical", "n", "base_kind", "lambda_c", "complement_connected"])
        for r in rows:
            w.writerow([r.canonical, r.n, str(r.base),
                        "" if r.lambda_c is None else f"{r.lambda_c:.15g}",
                        int(r.complement_connected)])
    finally:
        if own:
            fh.close()


def read_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


@dataclass
class ExtremalResult:
    graph: Graph
    lam: float
    unique: bool
    gap: float
    runner_up: str | None
    matches_g1: bool
    disconnected: list


def extremal_search(n: int, records: list[CensusRecord] | None = None,
                    workers: int = 1, gap: float = UNIQUENESS_GAP) -> ExtremalResult:
    """Minimise lambda(G^c) over the census and compare the winner with G1(n-5,0)."""
    if records is None:
        if not 12 <= n <= 13:
            raise GraphError(f"extremal_search runs the census for 12 <= n <= 13, got {n}")
        records = list(bicyclic_census(n, workers=workers))
    connected = sort_by_lambda(r for r in records if r.complement_connected)
    if not connected:
        raise GraphError("no class with connected complement")
    best = connected[0]
    second = connected[1] if len(connected) > 1 else None
    delta = (second.lambda_c - best.lambda_c) if second else float("inf")
    winner = best.graph
    expected = build_family(FamilyParams.extreme("G1", n)) if n >= 7 else None
    return ExtremalResult(
        graph=winner, lam=best.lambda_c, unique=delta > gap, gap=delta,
        runner_up=second.canonical if second else None,
        matches_g1=expected is not None and is_isomorphic(winner, expected),
        disconnected=[r.canonical for r in records if not r.complement_connected],
    )


def disconnected_classes(records: list[CensusRecord]) -> list[str]:
    return sorted(r.canonical for r in records if not r.complement_connected)


def star2e_forms(n: int) -> dict[str, str]:
    """Canonical forms of both ways to add two leaf-leaf edges to K_{1,n-1}."""
    return {"disjoint": canonical_form(star_plus_2e(n)).decode(),
            "shared": canonical_form(star_plus_2e(n, shared=True)).decode()}


def star2e_is_only_disconnected(records: list[CensusRecord]) -> bool:
    """True iff K_{1,n-1}+2e (disjoint pairs) is the single class with disconnected complement."""
    bad = disconnected_classes(records)
    return len(bad) == 1 and bad[0] == star2e_forms(records[0].n)["disjoint"]
