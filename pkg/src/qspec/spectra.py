"""Signless Laplacian matrices and their least eigenpairs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, complement
from .jacobi import JacobiError, jacobi_eigh

EIG_TOL = 1e-10
RESIDUAL_TOL = 1e-8
DEGENERACY_GAP = 1e-8


class EigenSolverError(RuntimeError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SpectralVector:
    """Real vector indexed by vertices.

    ``sort_order`` lists vertices so that their values are non-increasing,
    ties broken by lower index first; ``top`` and ``bottom`` are the vertices
    holding the largest and smallest entry (lowest index on ties).
    """

    def __init__(self, values, normalized: bool = False):
        self.values = np.asarray(values, dtype=float).copy()
        self.values.setflags(write=False)
        if normalized and abs(np.linalg.norm(self.values) - 1.0) > 1e-12:
            raise ValueError("vector flagged normalized but its norm is not 1")
        self.normalized = normalized

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    @property
    def sort_order(self) -> list[int]:
        return sorted(range(len(self.values)), key=lambda i: (-self.values[i], i))

    @property
    def top(self) -> int:
        return self.sort_order[0]

    @property
    def bottom(self) -> int:
        vals = self.values
        lo = vals.min()
        return int(np.nonzero(vals == lo)[0][0])

    def __neg__(self):
        return SpectralVector(-self.values, self.normalized)

    def __repr__(self):
        return f"SpectralVector({np.array2string(self.values, precision=6)})"


@dataclass(frozen=True)
class EigenResult:
    lam: float
    vector: SpectralVector
    residual: float
    degenerate: bool
    gap: float


# --- matrices ---------------------------------------------------------------

def signless_laplacian(g: Graph) -> np.ndarray:
    """Q(G) = D(G) + A(G) as an integer matrix."""
    q = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        q[u, v] = q[v, u] = 1
        q[u, u] += 1
        q[v, v] += 1
    return q


def complement_q(g: Graph) -> np.ndarray:
    """(n-2) I + J - Q(G), which is Q of the complement."""
    n = g.n
    return (n - 2) * np.eye(n, dtype=np.int64) + np.ones((n, n), dtype=np.int64) - signless_laplacian(g)


def is_symmetric(m) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.array_equal(m, m.T)


# --- eigenpairs -------------------------------------------------------------

def _orient(x):
    k = int(np.argmax(np.abs(x)))
    return -x if x[k] < 0 else x


def _result(m, w, v, residual_tol):
    x = _orient(v[:, 0])
    x = x / np.linalg.norm(x)
    lam = float(w[0])
    residual = float(np.linalg.norm(m @ x - lam * x))
    if residual > residual_tol:
        raise EigenSolverError(f"residual {residual:.3e} above {residual_tol:.1e}", residual)
    gap = float(w[1] - w[0]) if len(w) > 1 else float("inf")
    return EigenResult(lam, SpectralVector(x, normalized=True), residual,
                       gap < DEGENERACY_GAP, gap)


def least_eigenpair(m, tol: float = EIG_TOL, residual_tol: float = RESIDUAL_TOL) -> EigenResult:
    """Smallest eigenvalue of a symmetric matrix with a unit eigenvector.

    The vector is oriented so its largest-magnitude entry is positive.  When
    the two smallest eigenvalues are closer than 1e-8 the result is flagged
    ``degenerate`` and the vector is just one member of the eigenspace.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m, dtype=float)
    try:
        w, v, _ = jacobi_eigh(m, tol=tol)
    except JacobiError as exc:
        raise EigenSolverError(str(exc), exc.off_norm) from exc
    return _result(m, w, v, residual_tol)


def least_eigenpairs(matrices: Sequence, tol: float = EIG_TOL,
                     residual_tol: float = RESIDUAL_TOL) -> list[EigenResult]:
    """Batched :func:`least_eigenpair` for equally sized matrices."""
    if len(matrices) == 0:
        return []
    ms = np.asarray(matrices, dtype=float)
    try:
        w, v, _ = jacobi_eigh(ms, tol=tol)
    except JacobiError as exc:
        raise EigenSolverError(str(exc), exc.off_norm) from exc
    return [_result(ms[i], w[i], v[i], residual_tol) for i in range(len(ms))]


def least_q_eigenpair(g: Graph, **kw) -> EigenResult:
    return least_eigenpair(signless_laplacian(g), **kw)


def least_q_eigenvalue(g: Graph, **kw) -> float:
    return least_q_eigenpair(g, **kw).lam


def complement_eigenpair(g: Graph, **kw) -> EigenResult:
    """Least eigenpair of Q(G^c)."""
    return least_eigenpair(complement_q(g), **kw)


# --- quadratic form and eigen-equations -------------------------------------

def _values(x):
    return x.values if isinstance(x, SpectralVector) else np.asarray(x, dtype=float)


def rayleigh(g: Graph, x, exact: bool = False):
    """Sum over edges of (x_i + x_j)^2.

    With ``exact=True`` the float entries are converted to fractions and the
    sum is computed without rounding.
    """
    vals = _values(x)
    if len(vals) != g.n:
        raise ValueError(f"vector has length {len(vals)}, graph has {g.n} vertices")
    if exact:
        fx = [Fraction(float(t)) for t in vals]
        return sum(((fx[u] + fx[v]) ** 2 for u, v in g.edges), Fraction(0))
    return float(sum((vals[u] + vals[v]) ** 2 for u, v in g.edges))


def quadratic_form(m, x) -> float:
    vals = _values(x)
    return float(vals @ np.asarray(m, dtype=float) @ vals)


def eigen_residual(g: Graph, lam: float, x) -> float:
    """max_i |(lam - d(v_i)) x_i - sum_{j ~ i} x_j|."""
    vals = _values(x)
    if len(vals) != g.n:
        raise ValueError(f"vector has length {len(vals)}, graph has {g.n} vertices")
    worst = 0.0
    for i in range(g.n):
        lhs = (lam - len(g.adj[i])) * vals[i]
        rhs = sum(vals[j] for j in g.adj[i])
        worst = max(worst, abs(lhs - rhs))
    return float(worst)


def min_degree_bound_holds(g: Graph, tol: float = 1e-8) -> bool:
    """lambda(G) <= delta(G), checked numerically."""
    return least_q_eigenvalue(g) <= g.min_degree() + tol


def spectrum(m, tol: float = EIG_TOL) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending."""
    w, _, _ = jacobi_eigh(np.asarray(m, dtype=float), tol=tol)
    return w


def spectrum_row(g6: str, g: Graph, res: EigenResult) -> str:
    return f"{g6},{g.n},{res.lam:.12g},{res.residual:.3e},{int(res.degenerate)}"


__all__ = [
    "EigenResult", "EigenSolverError", "SpectralVector", "complement",
    "complement_eigenpair", "complement_q", "eigen_residual", "is_symmetric",
    "least_eigenpair", "least_eigenpairs", "least_q_eigenpair", "least_q_eigenvalue",
    "min_degree_bound_holds", "quadratic_form", "rayleigh", "signless_laplacian",
    "spectrum", "spectrum_row",
]
