"""Integer polynomial tables for the characteristic polynomials and their
difference polynomials.

Each table maps a power of ``x`` to a dictionary ``{exponents: coefficient}``
over the named integer parameters, so ``F1`` stores f1(x; p, q) with keys
``(i, j)`` standing for ``p**i * q**j``.  Coefficients are expanded from the
printed formulas once and never edited by hand; ``tests/test_polynomials.py``
compares every table against det(xI - Q) of the corresponding quotient matrix.

Evaluation is exact: the parameter coefficients are Python integers, and
Horner's rule keeps ``int`` / ``Fraction`` arguments exact.  Float arguments
go through the same loop in double precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np


@dataclass(frozen=True)
class ParamPoly:
    """Polynomial in ``x`` whose coefficients are integer polynomials in ``params``."""

    params: tuple
    terms: dict  # x power -> {exponent tuple: int}

    @property
    def degree(self) -> int:
        return max(self.terms)

    def _bind(self, values):
        missing = set(self.params) - set(values)
        if missing:
            raise TypeError(f"missing parameter(s) {sorted(missing)}")
        return [values[name] for name in self.params]

    def coefficients(self, **values) -> list[int]:
        """Coefficients of x**degree down to x**0 at the given parameters."""
        args = self._bind(values)
        out = []
        for power in range(self.degree, -1, -1):
            mono = self.terms.get(power, {})
            out.append(sum(c * prod(a ** e for a, e in zip(args, exps))
                           for exps, c in mono.items()))
        return out

    def __call__(self, x, **values):
        acc = 0
        for c in self.coefficients(**values):
            acc = acc * x + c
        return acc

    def magnitude(self, x, **values) -> float:
        """sum |c_k| |x|^k, the scale of rounding error in a float evaluation."""
        ax = abs(float(x))
        acc = 0.0
        for c in self.coefficients(**values):
            acc = acc * ax + abs(float(c))
        return acc

    def grid(self, xs, **values) -> np.ndarray:
        """Vectorised float evaluation at many points."""
        coeffs = [float(c) for c in self.coefficients(**values)]
        return np.polyval(coeffs, np.asarray(xs, dtype=float))

    def derivative(self, k: int = 1) -> "ParamPoly":
        terms = self.terms
        for _ in range(k):
            terms = {power - 1: {e: c * power for e, c in mono.items()}
                     for power, mono in terms.items() if power > 0}
        return ParamPoly(self.params, terms or {0: {}})


def _table(params, terms) -> ParamPoly:
    return ParamPoly(tuple(params), terms)


def exact(x) -> Fraction:
    """Exact rational value of an int, float or Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


# characteristic polynomials f_k(x; p, q) = det(xI_7 - Q_k)

F1 = _table(('p', 'q'), {
    7: {(0, 0): 1},
    6: {(1, 0): -7, (0, 1): -7, (0, 0): -12},
    5: {(2, 0): 20, (1, 1): 41, (1, 0): 67, (0, 2): 20, (0, 1): 67, (0, 0): 57},
    4: {
        (3, 0): -30, (2, 1): -96, (2, 0): -150, (1, 2): -96, (1, 1): -306,
        (1, 0): -248, (0, 3): -30, (0, 2): -150, (0, 1): -248, (0, 0): -138
    },
    3: {
        (4, 0): 25, (3, 1): 114, (3, 0): 170, (2, 2): 178, (2, 1): 540, (2, 0): 416,
        (1, 3): 114, (1, 2): 540, (1, 1): 844, (1, 0): 447, (0, 4): 25, (0, 3): 170,
        (0, 2): 416, (0, 1): 447, (0, 0): 180
    },
    2: {
        (5, 0): -11, (4, 1): -71, (4, 0): -100, (3, 2): -158, (3, 1): -454,
        (3, 0): -330, (2, 3): -158, (2, 2): -708, (2, 1): -1038, (2, 0): -518,
        (1, 4): -71, (1, 3): -454, (1, 2): -1038, (1, 1): -1046, (1, 0): -397,
        (0, 5): -11, (0, 4): -100, (0, 3): -330, (0, 2): -518, (0, 1): -397,
        (0, 0): -120
    },
    1: {
        (6, 0): 2, (5, 1): 21, (5, 0): 27, (4, 2): 66, (4, 1): 177, (4, 0): 119,
        (3, 3): 94, (3, 2): 396, (3, 1): 536, (3, 0): 247, (2, 4): 66, (2, 3): 396,
        (2, 2): 834, (2, 1): 771, (2, 0): 267, (1, 5): 21, (1, 4): 177, (1, 3): 536,
        (1, 2): 771, (1, 1): 537, (1, 0): 146, (0, 6): 2, (0, 5): 27, (0, 4): 119,
        (0, 3): 247, (0, 2): 267, (0, 1): 146, (0, 0): 32
    },
    0: {
        (6, 1): -2, (6, 0): -2, (5, 2): -10, (5, 1): -24, (5, 0): -14, (4, 3): -20,
        (4, 2): -78, (4, 1): -94, (4, 0): -38, (3, 4): -20, (3, 3): -112, (3, 2): -212,
        (3, 1): -172, (3, 0): -50, (2, 5): -10, (2, 4): -78, (2, 3): -212,
        (2, 2): -268, (2, 1): -156, (2, 0): -32, (1, 6): -2, (1, 5): -24, (1, 4): -94,
        (1, 3): -172, (1, 2): -156, (1, 1): -64, (1, 0): -8, (0, 6): -2, (0, 5): -14,
        (0, 4): -38, (0, 3): -50, (0, 2): -32, (0, 1): -8
    },
})

F2 = _table(('p', 'q'), {
    7: {(0, 0): 1},
    6: {(1, 0): -7, (0, 1): -7, (0, 0): -12},
    5: {(2, 0): 20, (1, 1): 41, (1, 0): 67, (0, 2): 20, (0, 1): 68, (0, 0): 57},
    4: {
        (3, 0): -30, (2, 1): -96, (2, 0): -150, (1, 2): -96, (1, 1): -311,
        (1, 0): -248, (0, 3): -30, (0, 2): -156, (0, 1): -253, (0, 0): -136
    },
    3: {
        (4, 0): 25, (3, 1): 114, (3, 0): 170, (2, 2): 178, (2, 1): 549, (2, 0): 416,
        (1, 3): 114, (1, 2): 563, (1, 1): 867, (1, 0): 444, (0, 4): 25, (0, 3): 184,
        (0, 2): 441, (0, 1): 449, (0, 0): 169
    },
    2: {
        (5, 0): -11, (4, 1): -71, (4, 0): -100, (3, 2): -158, (3, 1): -461,
        (3, 0): -330, (2, 3): -158, (2, 2): -738, (2, 1): -1071, (2, 0): -520,
        (1, 4): -71, (1, 3): -493, (1, 2): -1116, (1, 1): -1079, (1, 0): -389,
        (0, 5): -11, (0, 4): -116, (0, 3): -375, (0, 2): -544, (0, 1): -380,
        (0, 0): -100
    },
    1: {
        (6, 0): 2, (5, 1): 21, (5, 0): 27, (4, 2): 66, (4, 1): 179, (4, 0): 119,
        (3, 3): 94, (3, 2): 411, (3, 1): 553, (3, 0): 252, (2, 4): 66, (2, 3): 429,
        (2, 2): 903, (2, 1): 818, (2, 0): 280, (1, 5): 21, (1, 4): 206, (1, 3): 623,
        (1, 2): 851, (1, 1): 566, (1, 0): 146, (0, 6): 2, (0, 5): 36, (0, 4): 154,
        (0, 3): 285, (0, 2): 269, (0, 1): 128, (0, 0): 20
    },
    0: {
        (6, 1): -2, (6, 0): -2, (5, 2): -10, (5, 1): -24, (5, 0): -14, (4, 3): -20,
        (4, 2): -80, (4, 1): -96, (4, 0): -40, (3, 4): -20, (3, 3): -120, (3, 2): -228,
        (3, 1): -188, (3, 0): -60, (2, 5): -10, (2, 4): -90, (2, 3): -248,
        (2, 2): -310, (2, 1): -192, (2, 0): -48, (1, 6): -2, (1, 5): -32, (1, 4): -126,
        (1, 3): -216, (1, 2): -190, (1, 1): -88, (1, 0): -16, (0, 6): -4, (0, 5): -24,
        (0, 4): -54, (0, 3): -58, (0, 2): -32, (0, 1): -8
    },
})

F4 = _table(('p', 'q'), {
    7: {(0, 0): 1},
    6: {(1, 0): -7, (0, 1): -7, (0, 0): -26},
    5: {(2, 0): 20, (1, 1): 41, (1, 0): 149, (0, 2): 20, (0, 1): 149, (0, 0): 276},
    4: {
        (3, 0): -30, (2, 1): -96, (2, 0): -342, (1, 2): -96, (1, 1): -700,
        (1, 0): -1269, (0, 3): -30, (0, 2): -342, (0, 1): -1269, (0, 0): -1548
    },
    3: {
        (4, 0): 25, (3, 1): 114, (3, 0): 398, (2, 2): 178, (2, 1): 1270, (2, 0): 2253,
        (1, 3): 114, (1, 2): 1270, (1, 1): 4613, (1, 0): 5506, (0, 4): 25, (0, 3): 398,
        (0, 2): 2253, (0, 1): 5506, (0, 0): 4916
    },
    2: {
        (5, 0): -11, (4, 1): -71, (4, 0): -242, (3, 2): -158, (3, 1): -1100,
        (3, 0): -1905, (2, 3): -158, (2, 2): -1716, (2, 1): -6087, (2, 0): -7092,
        (1, 4): -71, (1, 3): -1100, (1, 2): -6087, (1, 1): -14552, (1, 0): -12696,
        (0, 5): -11, (0, 4): -242, (0, 3): -1905, (0, 2): -7092, (0, 1): -12696,
        (0, 0): -8688
    },
    1: {
        (6, 0): 2, (5, 1): 21, (5, 0): 69, (4, 2): 66, (4, 1): 445, (4, 0): 747,
        (3, 3): 94, (3, 2): 990, (3, 1): 3411, (3, 0): 3858, (2, 4): 66, (2, 3): 990,
        (2, 2): 5328, (2, 1): 12402, (2, 0): 10516, (1, 5): 21, (1, 4): 445,
        (1, 3): 3411, (1, 2): 12402, (1, 1): 21668, (1, 0): 14432, (0, 6): 2,
        (0, 5): 69, (0, 4): 747, (0, 3): 3858, (0, 2): 10516, (0, 1): 14432,
        (0, 0): 7616
    },
    0: {
        (6, 1): -2, (6, 0): -6, (5, 2): -10, (5, 1): -64, (5, 0): -102, (4, 3): -20,
        (4, 2): -202, (4, 1): -668, (4, 0): -724, (3, 4): -20, (3, 3): -288,
        (3, 2): -1494, (3, 1): -3356, (3, 0): -2736, (2, 5): -10, (2, 4): -202,
        (2, 3): -1494, (2, 2): -5264, (2, 1): -8904, (2, 0): -5712, (1, 6): -2,
        (1, 5): -64, (1, 4): -668, (1, 3): -3356, (1, 2): -8904, (1, 1): -11856,
        (1, 0): -6016, (0, 6): -6, (0, 5): -102, (0, 4): -724, (0, 3): -2736,
        (0, 2): -5712, (0, 1): -6016, (0, 0): -2304
    },
})

G1 = _table(('n', 'q'), {
    4: {(1, 0): 1, (0, 1): -1, (0, 0): -4},
    3: {(2, 0): -5, (1, 1): 5, (1, 0): 41, (0, 1): -21, (0, 0): -84},
    2: {
        (3, 0): 9, (2, 1): -9, (2, 0): -110, (1, 1): 74, (1, 0): 447, (0, 1): -151,
        (0, 0): -609
    },
    1: {
        (4, 0): -7, (3, 1): 7, (3, 0): 113, (2, 1): -85, (2, 0): -679, (1, 1): 339,
        (1, 0): 1799, (0, 1): -436, (0, 0): -1760
    },
    0: {
        (5, 0): 2, (4, 1): -2, (4, 0): -40, (3, 1): 32, (3, 0): 316, (2, 1): -188,
        (2, 0): -1228, (1, 1): 474, (1, 0): 2330, (0, 1): -428, (0, 0): -1708
    },
})

G2 = _table(('p', 'q'), {
    3: {(0, 0): -1},
    2: {(1, 0): 4, (0, 1): 4, (0, 0): 11},
    1: {(2, 0): -5, (1, 1): -10, (1, 0): -29, (0, 2): -5, (0, 1): -29, (0, 0): -46},
    0: {
        (3, 0): 2, (2, 1): 6, (2, 0): 18, (1, 2): 6, (1, 1): 36, (1, 0): 56, (0, 3): 2,
        (0, 2): 18, (0, 1): 56, (0, 0): 72
    },
})

G4 = _table(('n',), {
    4: {(1,): 2, (0,): -9},
    3: {(2,): -10, (1,): 92, (0,): -208},
    2: {(3,): 18, (2,): -249, (1,): 1149, (0,): -1814},
    1: {(4,): -14, (3,): 258, (2,): -1791, (1,): 5607, (0,): -6672},
    0: {(5,): 4, (4,): -92, (3,): 850, (2,): -3956, (1,): 9242, (0,): -8592},
})


CHARPOLYS = {"G1": F1, "G2": F2, "G4": F4}


# --- closed forms printed alongside the tables --------------------------------

def identity_27_rhs(x, p, q):
    """Factored form of f1(x;p,q) - f1(x;p+1,q-1)."""
    return (p - q + 1) * (-q - 3 - p + x) * (-2 * q - 2 * p + x) * (x - p - q - 1) ** 3


def identity_28_rhs(x, n, q):
    """Factored form of f2(x;n-5-q,q) - f2(x;n-5,0)."""
    return -q * (n - 4 - x) * G1(x, n=n, q=q)


def identity_29_rhs(x, p, q):
    """Factored form of f4(x;p,q) - f4(x;p+1,q-1)."""
    return -(p - q + 1) * (-x + 3 + q + p) * (-x + 2 + q + p) * G2(x, p=p, q=q)


def g12_printed(x, n):
    """f1(x;n-5,0) - f2(x;n-5,0) as printed (its -2n^2 term has the wrong sign)."""
    return (n - x - 3) ** 2 * (-2 * n ** 2 + (-x - 18) * n - 2 * x ** 2 + 8 * x + 40)


def g12_direct(x, n):
    """f1(x;n-5,0) - f2(x;n-5,0) evaluated from the tables."""
    return F1(x, p=n - 5, q=0) - F2(x, p=n - 5, q=0)


def g14_printed(x, n):
    return (n - 3 - x) * G4(x, n=n)


def g14_direct(x, n):
    return F1(x, p=n - 5, q=0) - F4(x, p=n - 7, q=0)


# Endpoint values quoted in the sign chains that bound g1, g2 and g4.
# Keys are the derivative order; each entry is (printed value, claimed sign).

def claim_a_printed(n, p, q):
    """Chain at x = p + 2 (the branch min{q+1, p+2} = p+2)."""
    return {
        3: (-6 * (n - q - 4) * (5 * n - 4 * p - 29), -1),
        2: (18 * n ** 3 + (-30 * p - 18 * q - 280) * n ** 2
            + (12 * p ** 2 + 30 * p * q + 294 * p + 208 * q + 1434) * n
            - 12 * p ** 2 * q - 48 * p ** 2 - 174 * p * q - 696 * p - 602 * q - 2418, 1),
        1: (-7 * n ** 4 + (18 * p + 7 * q + 149) * n ** 3
            + (-15 * p ** 2 - 18 * p * q - 280 * p - 121 * q - 1179) * n ** 2
            + (4 * p ** 3 + 15 * p ** 2 * q + 147 * p ** 2 + 208 * p * q + 1434 * p
               + 695 * q + 4111) * n
            - 4 * p ** 3 * q - 16 * p ** 3 - 87 * p ** 2 * q - 348 * p ** 2 - 602 * p * q
            - 2418 * p - 1324 * q - 5332, -1),
        0: (2 * n ** 5 + (-7 * p - 2 * q - 54) * n ** 4
            + (9 * p ** 2 + 7 * p * q + 149 * p + 46 * q + 578) * n ** 3
            + (-5 * p ** 3 - 9 * p ** 2 * q - 140 * p ** 2 - 121 * p * q - 1179 * p
               - 394 * q - 3066) * n ** 2
            + (p ** 4 + 5 * p ** 3 * q + 49 * p ** 3 + 104 * p ** 2 * q + 717 * p ** 2
               + 695 * p * q + 4111 * p + 1488 * q + 8060) * n
            - p ** 4 * q - 4 * p ** 4 - 29 * p ** 3 * q - 116 * p ** 3 - 301 * p ** 2 * q
            - 1209 * p ** 2 - 1324 * p * q - 5332 * p - 2088 * q - 8400, 1),
    }


def claim_b_printed(p, q):
    """Chain at x = q + 3."""
    return {
        2: (2 * q + 4 + 8 * p, 1),
        1: ((-2 * p - 1) * q - 5 * p ** 2 - 5 * p - 7, -1),
        0: ((p ** 2 + p - 2) * q + 2 * p ** 3 + 3 * p ** 2 + 5 * p + 6, 1),
    }


def claim_c_printed(n):
    """Chain at x = 1."""
    return {
        3: (-60 * n ** 2 + 600 * n - 1464, -1),
        2: (36 * n ** 3 - 558 * n ** 2 + 2874 * n - 4984, 1),
        1: (-14 * n ** 4 + 294 * n ** 3 - 2319 * n ** 2 + 8189 * n - 10960, -1),
        0: (4 * n ** 5 - 106 * n ** 4 + 1126 * n ** 3 - 6006 * n ** 2 - 17295, 1),
    }
