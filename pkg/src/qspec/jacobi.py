"""Cyclic Jacobi eigensolver for small dense symmetric matrices.

The solver works on a stack of matrices at once: every rotation is applied
to all matrices of the batch with numpy, so the cost per matrix drops with
batch size.  A matrix stops being rotated after the sweep in which it
converged, which makes its result independent of what else is in the batch.
"""

from __future__ import annotations

import numpy as np


class JacobiError(RuntimeError):
    def __init__(self, message, off_norm=None):
        super().__init__(message)
        self.off_norm = off_norm


def _off_norm(a):
    n = a.shape[-1]
    iu = np.triu_indices(n, 1)
    return np.sqrt(2.0 * np.sum(a[:, iu[0], iu[1]] ** 2, axis=1))


def jacobi_eigh(matrices, tol: float = 1e-10, max_sweeps: int = 60):
    """Eigen-decompose one ``(n, n)`` or a batch ``(b, n, n)`` of symmetric matrices.

    Returns ``(w, v, sweeps)``: eigenvalues in ascending order, eigenvectors
    as columns of ``v`` in the same order, and the number of sweeps used.
    Convergence is declared when the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||A||_F)``.
    """
    a = np.array(matrices, dtype=float)
    single = a.ndim == 2
    if single:
        a = a[None]
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    if not np.allclose(a, np.swapaxes(a, 1, 2), rtol=0, atol=1e-12 * max(1.0, np.abs(a).max(initial=0))):
        raise ValueError("matrix is not symmetric")
    b, n, _ = a.shape
    v = np.broadcast_to(np.eye(n), (b, n, n)).copy()
    scale = np.maximum(1.0, np.sqrt(np.sum(a * a, axis=(1, 2))))
    active = _off_norm(a) > tol * scale
    sweeps = 0
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    while active.any():
        if sweeps >= max_sweeps:
            off = _off_norm(a)
            raise JacobiError(f"no convergence after {max_sweeps} sweeps "
                              f"(worst off-diagonal norm {off.max():.3e})", off.max())
        sweeps += 1
        idx = np.nonzero(active)[0]
        sub, vs = a[idx], v[idx]
        for p, q in pairs:
            apq = sub[:, p, q]
            rot = apq != 0.0
            if not rot.any():
                continue
            safe = np.where(rot, apq, 1.0)
            theta = (sub[:, q, q] - sub[:, p, p]) / (2.0 * safe)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(theta == 0.0, 1.0, t)
            c = 1.0 / np.hypot(t, 1.0)
            s = t * c
            c = np.where(rot, c, 1.0)[:, None]
            s = np.where(rot, s, 0.0)[:, None]
            colp, colq = sub[:, :, p].copy(), sub[:, :, q]
            sub[:, :, p] = c * colp - s * colq
            sub[:, :, q] = s * colp + c * colq
            rowp, rowq = sub[:, p, :].copy(), sub[:, q, :]
            sub[:, p, :] = c * rowp - s * rowq
            sub[:, q, :] = s * rowp + c * rowq
            sub[rot, p, q] = 0.0
            sub[rot, q, p] = 0.0
            vp, vq = vs[:, :, p].copy(), vs[:, :, q]
            vs[:, :, p] = c * vp - s * vq
            vs[:, :, q] = s * vp + c * vq
        a[idx], v[idx] = sub, vs
        active[idx] = _off_norm(sub) > tol * scale[idx]
    w = np.diagonal(a, axis1=1, axis2=2).copy()
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    v = np.take_along_axis(v, order[:, None, :], axis=2)
    if single:
        return w[0], v[0], sweeps
    return w, v, sweeps
