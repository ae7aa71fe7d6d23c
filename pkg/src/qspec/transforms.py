"""Edge-moving graft steps that never decrease sum_{ij in E} (x_i + x_j)^2.

Both steps look at the two extreme vertices of a fixed vector x: ``top``
(largest entry) and ``bottom`` (smallest entry), lowest index on ties.

* T1: on a shortest path top, l1, l2, ..., bottom delete l1-l2 and add
  top-l2 if (x_top + x_l2)^2 >= (x_bottom + x_l1)^2, else bottom-l1.
* T2: pick a pendant s whose neighbour t is neither extreme vertex; delete
  t-s and add top-s if (x_top + x_s)^2 >= (x_bottom + x_s)^2, else bottom-s.

Comparisons are done in exact rational arithmetic on the float entries, so
the branch taken is always the larger of the two candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, NoPathError, distance, shortest_path
from .spectra import SpectralVector, rayleigh


class TransformError(GraphError):
    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


@dataclass(frozen=True)
class TransformStep:
    deleted_edge: tuple
    added_edge: tuple
    lhs: Fraction
    rhs: Fraction

    def log_line(self, k: int, rayleigh_value) -> str:
        (a, b), (c, d) = self.deleted_edge, self.added_edge
        return (f"step {k}: del ({a},{b}) add ({c},{d}) lhs={float(self.lhs):.12g} "
                f"rhs={float(self.rhs):.12g} rayleigh={float(rayleigh_value):.12g}")


def lemma21_max_bound(xi: float, xj: float, x1: float, xn: float) -> bool:
    """(xi + xj)^2 <= max((xi + x1)^2, (xi + xn)^2)."""
    return (xi + xj) ** 2 <= max((xi + x1) ** 2, (xi + xn) ** 2)


def _as_vector(x) -> SpectralVector:
    return x if isinstance(x, SpectralVector) else SpectralVector(x)


def _extremes(g: Graph, x: SpectralVector):
    if len(x) != g.n:
        raise TransformError(f"vector has length {len(x)}, graph has {g.n} vertices")
    top, bottom = x.top, x.bottom
    if not (x[top] > 0 > x[bottom]):
        raise TransformError("vector needs a strictly positive and a strictly negative entry")
    return top, bottom


def _sq(a, b):
    return (Fraction(float(a)) + Fraction(float(b))) ** 2


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def t1_step(g: Graph, x) -> tuple[Graph, TransformStep]:
    x = _as_vector(x)
    top, bottom = _extremes(g, x)
    try:
        path = shortest_path(g, top, bottom)
    except NoPathError as exc:
        raise TransformError(str(exc)) from exc
    if len(path) - 1 < 3:
        raise TransformError(f"T1 needs d(top, bottom) >= 3, have {len(path) - 1}")
    l1, l2 = path[1], path[2]
    lhs = _sq(x[top], x[l2])
    rhs = _sq(x[bottom], x[l1])
    added = _edge(top, l2) if lhs >= rhs else _edge(bottom, l1)
    if g.has_edge(*added):
        raise TransformError(f"T1 would add existing edge {added}")
    step = TransformStep(_edge(l1, l2), added, lhs, rhs)
    return g.with_edges(remove=[step.deleted_edge], add=[added]), step


def t2_candidates(g: Graph, x) -> list[int]:
    """Pendant vertices eligible for T2 (neither they nor their neighbour extreme)."""
    x = _as_vector(x)
    top, bottom = _extremes(g, x)
    out = []
    for s in range(g.n):
        if len(g.adj[s]) == 1 and s not in (top, bottom):
            (t,) = g.adj[s]
            if t not in (top, bottom):
                out.append(s)
    return out


def t2_step(g: Graph, x, pendant: int | None = None) -> tuple[Graph, TransformStep]:
    """Move a pendant to top or bottom; defaults to the lowest eligible pendant."""
    x = _as_vector(x)
    top, bottom = _extremes(g, x)
    cands = t2_candidates(g, x)
    if not cands:
        raise TransformError("no pendant vertex eligible for T2")
    s = cands[0] if pendant is None else pendant
    if s not in cands:
        raise TransformError(f"vertex {s} is not an eligible pendant")
    (t,) = g.adj[s]
    lhs = _sq(x[top], x[s])
    rhs = _sq(x[bottom], x[s])
    added = _edge(top, s) if lhs >= rhs else _edge(bottom, s)
    if g.has_edge(*added):
        raise TransformError(f"T2 would add existing edge {added}")
    step = TransformStep(_edge(t, s), added, lhs, rhs)
    return g.with_edges(remove=[step.deleted_edge], add=[added]), step


def t1_closure(g: Graph, x, max_steps: int | None = None):
    """Apply T1 until d(top, bottom) <= 2 or the extremes disconnect.

    Returns ``(graph, steps)``.  Every step shortens the top-bottom distance,
    so the default cap of 10|E| steps is never reached on valid input;
    hitting it raises with the trace so far.
    """
    x = _as_vector(x)
    top, bottom = _extremes(g, x)
    cap = 10 * g.m if max_steps is None else max_steps
    steps: list[TransformStep] = []
    cur = g
    while True:
        try:
            d = distance(cur, top, bottom)
        except NoPathError:
            break
        if d <= 2:
            break
        if len(steps) >= cap:
            raise TransformError(f"T1 closure exceeded {cap} steps", steps)
        cur, step = t1_step(cur, x)
        steps.append(step)
    return cur, steps


def trace_lines(g: Graph, x, steps) -> list[str]:
    """Audit log, one line per step, with the quadratic form after the step."""
    x = _as_vector(x)
    lines = []
    cur = g
    for k, st in enumerate(steps, 1):
        cur = cur.with_edges(remove=[st.deleted_edge], add=[st.added_edge])
        lines.append(st.log_line(k, rayleigh(cur, x, exact=True)))
    return lines
