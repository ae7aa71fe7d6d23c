"""Canonical labelling by colour refinement and individualisation.

The search tree is the usual one: refine an ordered colouring to a stable one,
pick the first non-singleton cell, individualise each of its vertices in turn
and recurse.  Every leaf is a discrete colouring, i.e. a relabelling, and the
canonical form is the graph6 encoding of the smallest upper-triangle bit
string over all leaves.  Because refinement and cell choice depend only on
colours, the set of leaf certificates is a graph invariant.

Twins (vertices with equal open or closed neighbourhoods) are swapped by an
automorphism that fixes the current node, so only one twin per class is
expanded.  This is what keeps pendant-heavy graphs cheap.
"""

from __future__ import annotations

from .formats import pack_bits
from .graph import Graph, GraphError

DEFAULT_MAX_N = 20


def _rank(sigs):
    table = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [table[s] for s in sigs], len(table)


def refine(adj, colors):
    """Stable refinement of ``colors`` (a list of ranks ``0..k-1``)."""
    k = len(set(colors))
    n = len(colors)
    while k < n:
        sigs = [(colors[v], tuple(sorted([colors[w] for w in adj[v]]))) for v in range(n)]
        new, k2 = _rank(sigs)
        if k2 == k:
            break
        colors, k = new, k2
    return colors


def _certificate(masks, colors):
    n = len(colors)
    order = [0] * n
    for v, c in enumerate(colors):
        order[c] = v
    bits = 0
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            bits = (bits << 1) | (mj >> order[i] & 1)
    return bits


def _search(adj, masks, colors, best):
    n = len(colors)
    counts = [0] * n
    for c in colors:
        counts[c] += 1
    target = next((c for c in range(n) if counts[c] > 1), None)
    if target is None:
        cert = _certificate(masks, colors)
        if best[0] is None or cert < best[0]:
            best[0] = cert
            best[1] = list(colors)
        return
    reps = []
    for v in range(n):
        if colors[v] != target:
            continue
        mv, cv = masks[v], masks[v] | (1 << v)
        if any(masks[r] == mv or (masks[r] | (1 << r)) == cv for r in reps):
            continue
        reps.append(v)
    for v in reps:
        child, _ = _rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)])
        _search(adj, masks, refine(adj, child), best)


def _labeling(masks) -> list[int]:
    n = len(masks)
    adj = [tuple(w for w in range(n) if m >> w & 1) for m in masks]
    start, _ = _rank([len(a) for a in adj])
    best = [None, None]
    _search(adj, masks, refine(adj, start), best)
    return best[1]


def canonical_labeling(g: Graph, max_n: int = DEFAULT_MAX_N) -> list[int]:
    """Permutation ``perm`` with ``g.relabel(perm)`` the canonical representative."""
    if g.n > max_n:
        raise GraphError(f"canonical labelling limited to n <= {max_n}, got {g.n}")
    return _labeling(g.masks)


def canonical_form_masks(masks) -> bytes:
    """:func:`canonical_form` for a graph given only by neighbour bitmasks."""
    perm = _labeling(masks)
    n = len(masks)
    order = [0] * n
    for v, c in enumerate(perm):
        order[c] = v
    bits = [masks[order[j]] >> order[i] & 1 for j in range(1, n) for i in range(j)]
    return pack_bits(n, bits)


def canonical_form(g: Graph, max_n: int = DEFAULT_MAX_N) -> bytes:
    """graph6 bytes of the canonical relabelling; equal iff isomorphic."""
    if g.n > max_n:
        raise GraphError(f"canonical labelling limited to n <= {max_n}, got {g.n}")
    return canonical_form_masks(g.masks)


def canonical_graph(g: Graph, max_n: int = DEFAULT_MAX_N) -> Graph:
    return g.relabel(canonical_labeling(g, max_n))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
