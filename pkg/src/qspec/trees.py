"""Free trees, one per isomorphism class, from canonical level sequences.

A rooted tree is written as the depth of each vertex in preorder (root at
depth 0).  Rooted trees are visited in reverse lexicographic order of these
sequences by the classic successor rule; free trees are the rooted trees whose
root is a centre and whose first subtree is "no bigger" than the rest, and the
generator skips whole blocks of non-canonical sequences instead of testing
them one by one (Wright, Richmond, Odlyzko and McKay).
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, GraphError

MAX_TREE_ORDER = 20


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a rooted level sequence, or None after the last one."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]):
    """First subtree of the root (depths shifted up by one) and the remainder."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _canonical_or_jump(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    hl, hr = max(left), max(rest)
    ok = hr >= hl
    if ok and hr == hl:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of the free trees on ``n >= 3`` vertices."""
    levels = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _canonical_or_jump(levels)
        if levels is None:
            return
        yield levels
        levels = _next_rooted(levels)


def tree_from_levels(levels: list[int]) -> Graph:
    edges = []
    last_at = {}
    for v, d in enumerate(levels):
        if d > 0:
            edges.append((last_at[d - 1], v))
        last_at[d] = v
    return Graph(len(levels), edges)


def free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices (1 <= n <= 20)."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise GraphError(f"free_trees supports 1 <= n <= {MAX_TREE_ORDER}, got {n}")
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for levels in level_sequences(n):
        yield tree_from_levels(levels)
