"""The bicyclic families G1(p,q), G2(p,q), G4(p,q) and their quotient matrices.

Each family is described by the eigen-equation system of its complement: the
vertices split into seven classes, and a vertex of class i has a fixed degree
and a fixed number of neighbours in every class j.  That table determines the
complement completely (between two classes the count is either 0 or the full
class size, inside a class either 0 or size-1), so the bicyclic graph itself is
recovered by complementing.

Resulting shapes (vertex 0 is the first class):

* G1(p,q): hubs v1, v6 joined by three paths of length 2 through v3, v4, v5;
  p pendants on v1, q pendants on v6.  n = p + q + 5.
* G2(p,q): theta with paths v1-v5, v1-v4-v5, v1-v3-v6-v5; p pendants on v1,
  q pendants on v6.  n = p + q + 5.
* G4(p,q): triangles through v1 and through v6 joined by the path v1-v4-v6;
  p pendants on v1, q on v6.  n = p + q + 7.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, GraphError, complement
from .polynomials import CHARPOLYS

FAMILIES = ("G1", "G2", "G4")


@dataclass(frozen=True)
class FamilyParams:
    family: str
    p: int
    q: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.p < 0 or self.q < 0:
            raise ValueError(f"p and q must be non-negative, got p={self.p}, q={self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q + (7 if self.family == "G4" else 5)

    @classmethod
    def extreme(cls, family: str, n: int) -> "FamilyParams":
        """The (n-5, 0) member of G1/G2 or the (n-7, 0) member of G4."""
        return cls(family, n - (7 if family == "G4" else 5), 0)

    def __str__(self):
        return f"{self.family}({self.p},{self.q})"


def class_sizes(params: FamilyParams) -> list[int]:
    p, q = params.p, params.q
    if params.family == "G4":
        return [1, p, 2, 1, 2, 1, q]
    return [1, p, 1, 1, 1, 1, q]


def vertex_classes(params: FamilyParams) -> list[list[int]]:
    out, start = [], 0
    for size in class_sizes(params):
        out.append(list(range(start, start + size)))
        start += size
    return out


def eigen_system(params: FamilyParams):
    """(degrees, neighbour counts) of the complement, class by class.

    ``counts[i][j]`` is the number of neighbours a class-i vertex has in class j.
    """
    p, q = params.p, params.q
    if params.family == "G1":
        deg = [q + 1, p + q + 3, p + q + 2, p + q + 2, p + q + 2, p + 1, p + q + 3]
        counts = [
            [0, 0, 0, 0, 0, 1, q],
            [0, p - 1, 1, 1, 1, 1, q],
            [0, p, 0, 1, 1, 0, q],
            [0, p, 1, 0, 1, 0, q],
            [0, p, 1, 1, 0, 0, q],
            [1, p, 0, 0, 0, 0, 0],
            [1, p, 1, 1, 1, 0, q - 1],
        ]
    elif params.family == "G2":
        deg = [q + 1, p + q + 3, p + q + 2, p + q + 2, p + q + 1, p + 2, p + q + 3]
        counts = [
            [0, 0, 0, 0, 0, 1, q],
            [0, p - 1, 1, 1, 1, 1, q],
            [0, p, 0, 1, 1, 0, q],
            [0, p, 1, 0, 0, 1, q],
            [0, p, 1, 0, 0, 0, q],
            [1, p, 0, 1, 0, 0, 0],
            [1, p, 1, 1, 1, 0, q - 1],
        ]
    else:
        deg = [q + 3, p + q + 5, p + q + 4, p + q + 4, p + q + 4, p + 3, p + q + 5]
        counts = [
            [0, 0, 0, 0, 2, 1, q],
            [0, p - 1, 2, 1, 2, 1, q],
            [0, p, 0, 1, 2, 1, q],
            [0, p, 2, 0, 2, 0, q],
            [1, p, 2, 1, 0, 0, q],
            [1, p, 2, 0, 0, 0, 0],
            [1, p, 2, 1, 2, 0, q - 1],
        ]
    return deg, counts


def build_complement(params: FamilyParams) -> Graph:
    """G_k^c(p,q), read off the eigen-equation system."""
    deg, counts = eigen_system(params)
    sizes = class_sizes(params)
    classes = vertex_classes(params)
    live = [i for i in range(7) if sizes[i] > 0]
    for i in live:
        row = [counts[i][j] for j in live]
        if sum(row) != deg[i]:
            raise GraphError(f"{params}: class {i + 1} counts {row} do not sum to degree {deg[i]}")
    edges = []
    for i in live:
        for j in live:
            c = counts[i][j]
            if i == j:
                if c not in (0, sizes[i] - 1):
                    raise GraphError(f"{params}: class {i + 1} sees {c} of its own {sizes[i]}")
                if c:
                    cls = classes[i]
                    edges += [(u, v) for a, u in enumerate(cls) for v in cls[a + 1:]]
            else:
                if c not in (0, sizes[j]):
                    raise GraphError(f"{params}: class {i + 1} sees {c} of class {j + 1} (size {sizes[j]})")
                if counts[j][i] * sizes[j] != c * sizes[i]:
                    raise GraphError(f"{params}: classes {i + 1} and {j + 1} disagree on their edges")
                if c and i < j:
                    edges += [(u, v) for u in classes[i] for v in classes[j]]
    return Graph(params.n, edges)


def build_family(params: FamilyParams) -> Graph:
    """The bicyclic graph G_k(p,q)."""
    if params.n < 7:
        raise ValueError(f"{params} has n={params.n}; need n >= 7")
    return complement(build_complement(params))


def quotient_matrix(params: FamilyParams) -> np.ndarray:
    """The 7x7 quotient matrix Q_k(p,q) as displayed for each family."""
    p, q = params.p, params.q
    if params.family == "G1":
        rows = [
            [q + 1, 0, 0, 0, 0, 1, q],
            [0, 2 * p + q + 2, 1, 1, 1, 1, q],
            [0, p, p + q + 2, 1, 1, 0, q],
            [0, p, 1, p + q + 2, 1, 0, q],
            [0, p, 1, 1, p + q + 2, 0, q],
            [1, p, 0, 0, 0, p + 1, 0],
            [1, p, 1, 1, 1, 0, p + 2 * q + 2],
        ]
    elif params.family == "G2":
        rows = [
            [q + 1, 0, 0, 0, 0, 1, q],
            [0, 2 * p + q + 2, 1, 1, 1, 1, q],
            [0, p, p + q + 2, 1, 1, 0, q],
            [0, p, 1, p + q + 2, 0, 1, q],
            [0, p, 1, 0, p + q + 1, 0, q],
            [1, p, 0, 1, 0, p + 2, 0],
            [1, p, 1, 1, 1, 0, p + 2 * q + 2],
        ]
    else:
        rows = [
            [q + 3, 0, 0, 0, 2, 1, q],
            [0, 2 * p + q + 4, 2, 1, 2, 1, q],
            [0, p, p + q + 4, 1, 2, 1, q],
            [0, p, 2, p + q + 4, 2, 0, q],
            [1, p, 2, 1, p + q + 4, 0, q],
            [1, p, 2, 0, 0, p + 3, 0],
            [1, p, 2, 1, 2, 0, p + 2 * q + 4],
        ]
    return np.array(rows, dtype=np.int64)


def system_quotient(params: FamilyParams) -> np.ndarray:
    """Quotient matrix assembled from :func:`eigen_system` (degree on the diagonal
    plus same-class neighbours, neighbour counts elsewhere)."""
    deg, counts = eigen_system(params)
    m = np.array(counts, dtype=np.int64)
    m[np.diag_indices(7)] += np.array(deg, dtype=np.int64)
    return m


def live_quotient(params: FamilyParams) -> np.ndarray:
    """Quotient matrix restricted to non-empty classes.

    With p = 0 or q = 0 the 7x7 matrix keeps a row for an empty class.  That
    row only contributes its diagonal entry as an extra root, which is not a
    lifted eigenvalue (it happens to coincide with the pendant-clique one).
    """
    live = [i for i, s in enumerate(class_sizes(params)) if s > 0]
    return quotient_matrix(params)[np.ix_(live, live)]


def f_eval(family: str, x, p: int, q: int):
    """Printed characteristic polynomial f_k(x; p, q)."""
    return CHARPOLYS[family](x, p=p, q=q)


def charpoly_det(m, x) -> Fraction:
    """det(xI - M) by exact fraction elimination, for cross-checking tables."""
    n = len(m)
    a = [[Fraction(x if i == j else 0) - Fraction(int(m[i][j])) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


# --- the other named graphs -------------------------------------------------

def named_graph(kind: str, **kw) -> Graph:
    """Constructors behind ``qspec family``."""
    from . import graph as gr
    kind = kind.lower()
    if kind in ("g1", "g2", "g4"):
        return build_family(FamilyParams(kind.upper(), kw["p"], kw["q"]))
    if kind == "star2e":
        return gr.star_plus_2e(kw["n"], shared=kw.get("shared", False))
    if kind == "theta":
        return gr.theta_graph(kw["a"], kw["b"], kw["c"])
    if kind == "infinity":
        return gr.infinity_graph(kw["a"], kw["b"])
    if kind == "bgraph":
        return gr.bgraph(kw["a"], kw["b"], kw["ell"])
    raise ValueError(f"unknown family kind {kind!r}")
