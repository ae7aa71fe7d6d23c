"""Polynomial identity checks and replays of the positivity claims for g1, g2, g4."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .polynomials import (F1, F2, F4, G1, G2, G4, claim_a_printed, claim_b_printed,
                          claim_c_printed, g12_direct, g12_printed, g14_direct,
                          g14_printed, identity_27_rhs, identity_28_rhs, identity_29_rhs)

REL_TOL = 1e-8


def sample_points(count: int, lo: float, hi: float, seed: int = 0) -> list[Fraction]:
    """``count`` distinct rationals in [lo, hi] with denominators up to 997."""
    rng = random.Random(seed)
    pts: set[Fraction] = set()
    while len(pts) < count:
        den = rng.randint(1, 997)
        num = rng.randint(int(lo * den), int(hi * den))
        pts.add(Fraction(num, den))
    return sorted(pts)


def _mismatches(lhs, rhs, points, exact: bool, scale=None):
    bad = []
    for x in points:
        if exact:
            a, b = lhs(x), rhs(x)
            if a != b:
                bad.append((x, a, b))
        else:
            xf = float(x)
            a, b = lhs(xf), rhs(xf)
            mag = max(abs(a), abs(b), scale(xf) if scale else 0.0, 1.0)
            if abs(a - b) > REL_TOL * mag:
                bad.append((x, a, b))
    return bad


def identity_27_mismatches(p, q, samples=50, exact=True, points=None, seed=0):
    if q < 1:
        raise ValueError("identity (p,q) -> (p+1,q-1) needs q >= 1")
    pts = points if points is not None else sample_points(samples, -5, p + q + 10, seed)
    return _mismatches(lambda x: F1(x, p=p, q=q) - F1(x, p=p + 1, q=q - 1),
                       lambda x: identity_27_rhs(x, p, q), pts, exact,
                       scale=lambda x: F1.magnitude(x, p=p, q=q) + F1.magnitude(x, p=p + 1, q=q - 1))


def identity_28_mismatches(n, q, samples=50, exact=True, points=None, seed=0):
    if n < 12 or not 0 <= q <= n - 5:
        raise ValueError(f"need n >= 12 and 0 <= q <= n-5, got n={n}, q={q}")
    pts = points if points is not None else sample_points(samples, -5, n + 5, seed)
    return _mismatches(lambda x: F2(x, p=n - 5 - q, q=q) - F2(x, p=n - 5, q=0),
                       lambda x: identity_28_rhs(x, n, q), pts, exact,
                       scale=lambda x: F2.magnitude(x, p=n - 5 - q, q=q) + F2.magnitude(x, p=n - 5, q=0))


def identity_29_mismatches(p, q, samples=50, exact=True, points=None, seed=0):
    if q < 1:
        raise ValueError("identity (p,q) -> (p+1,q-1) needs q >= 1")
    pts = points if points is not None else sample_points(samples, -5, p + q + 12, seed)
    return _mismatches(lambda x: F4(x, p=p, q=q) - F4(x, p=p + 1, q=q - 1),
                       lambda x: identity_29_rhs(x, p, q), pts, exact,
                       scale=lambda x: F4.magnitude(x, p=p, q=q) + F4.magnitude(x, p=p + 1, q=q - 1))


def check_identity_27(p: int, q: int, samples: int = 50, **kw) -> bool:
    return not identity_27_mismatches(p, q, samples, **kw)


def check_identity_28(n: int, q: int, samples: int = 50, **kw) -> bool:
    return not identity_28_mismatches(n, q, samples, **kw)


def check_identity_29(p: int, q: int, samples: int = 50, **kw) -> bool:
    return not identity_29_mismatches(p, q, samples, **kw)


def g_eval(which: str, x, **params):
    """Evaluate g1 (n, q), g2 (p, q), g4 / g12 / g14 (n) as printed."""
    if which == "g1":
        return G1(x, n=params["n"], q=params["q"])
    if which == "g2":
        return G2(x, p=params["p"], q=params["q"])
    if which == "g4":
        return G4(x, n=params["n"])
    if which == "g12":
        return g12_printed(x, params["n"])
    if which == "g14":
        return g14_printed(x, params["n"])
    raise ValueError(f"unknown polynomial {which!r}")


def g_direct(which: str, x, n: int):
    """g12 / g14 recomputed as differences of the characteristic polynomials."""
    if which == "g12":
        return g12_direct(x, n)
    if which == "g14":
        return g14_direct(x, n)
    raise ValueError(f"no direct form for {which!r}")


# --- positivity claims --------------------------------------------------------

@dataclass
class ClaimReport:
    claim: str
    params: dict
    interval: tuple
    grid_points: int
    grid_min: float
    grid_argmin: float
    chain: list = field(default_factory=list)      # (order, x, value, claimed sign, ok)
    printed: list = field(default_factory=list)    # (order, printed, computed, ok)
    witnesses: list = field(default_factory=list)

    @property
    def grid_ok(self) -> bool:
        return self.grid_min > 0

    @property
    def chain_ok(self) -> bool:
        return all(link[-1] for link in self.chain)

    @property
    def printed_ok(self) -> bool:
        return all(item[-1] for item in self.printed)

    @property
    def status(self) -> str:
        return "pass" if not self.witnesses else "finding"

    def to_json(self) -> dict:
        return {"check_id": f"claim{self.claim}", "params": self.params,
                "status": self.status, "witnesses": self.witnesses,
                "grid_min": self.grid_min, "interval": [float(t) for t in self.interval]}


def _replay(claim, poly, binding, end, orders, printed, grid, premise):
    xs = np.linspace(0.0, float(end), grid + 1)[1:]
    vals = poly.grid(xs, **binding)
    k = int(np.argmin(vals))
    rep = ClaimReport(claim, dict(binding), (0, end), grid, float(vals[k]), float(xs[k]))
    for x, v in zip(xs, vals):
        if v <= 0:
            rep.witnesses.append({"kind": "grid", "x": float(x), "value": float(v)})
    ok, coeff = premise
    if not ok:
        rep.witnesses.append({"kind": "premise", "leading": coeff})
    for order, sign in orders:
        value = poly.derivative(order)(end, **binding)
        good = value * sign > 0
        rep.chain.append((order, end, value, sign, good))
        if not good:
            rep.witnesses.append({"kind": "chain", "order": order, "x": str(end),
                                  "value": str(value), "claimed_sign": sign})
    for order, (value, _sign) in sorted(printed.items(), reverse=True):
        computed = poly.derivative(order)(end, **binding)
        same = computed == value
        rep.printed.append((order, value, computed, same))
        if not same:
            rep.witnesses.append({"kind": "printed", "order": order, "x": str(end),
                                  "printed": str(value), "computed": str(computed)})
    return rep


def check_claim(which: str, grid: int = 10_000, **params) -> ClaimReport:
    """Sample the claimed positivity interval and replay the derivative sign chain.

    Claim A: g1 > 0 on (0, min(q+1, p+2)] with n = p + q + 5.
    Claim B: g2 > 0 on (0, q+3].
    Claim C: g4 > 0 on (0, 1] for n >= 12.

    The chain evaluates each derivative at the right end of the interval and
    compares its sign with the one asserted.  Printed endpoint values, where
    given, are compared with the computed ones.  Any disagreement lands in
    ``witnesses``; nothing is raised.
    """
    which = which.upper()
    if which == "A":
        p, q = params["p"], params["q"]
        n = p + q + 5
        if n < 12:
            raise ValueError(f"claim A needs n = p+q+5 >= 12, got {n}")
        end = min(q + 1, p + 2)
        printed = claim_a_printed(n, p, q) if end == p + 2 else {}
        lead = 24 * (n - q - 4)
        return _replay("A", G1, {"n": n, "q": q}, end,
                       [(3, -1), (2, 1), (1, -1), (0, 1)], printed, grid, (lead > 0, lead))
    if which == "B":
        p, q = params["p"], params["q"]
        if p < 0 or q < 0:
            raise ValueError("claim B needs p, q >= 0")
        rep = _replay("B", G2, {"p": p, "q": q}, q + 3,
                      [(2, 1), (1, -1), (0, 1)], claim_b_printed(p, q), grid, (True, -6))
        return rep
    if which == "C":
        n = params["n"]
        if n < 12:
            raise ValueError("claim C needs n >= 12")
        lead = 24 * (2 * n - 9)
        return _replay("C", G4, {"n": n}, 1, [(3, -1), (2, 1), (1, -1), (0, 1)],
                       claim_c_printed(n), grid, (lead > 0, lead))
    raise ValueError(f"unknown claim {which!r}")
