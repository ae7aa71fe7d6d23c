"""Every polynomial table is checked against det(xI - Q) of its quotient matrix."""

import random
from fractions import Fraction

import pytest

from qspec.families import FamilyParams, charpoly_det, quotient_matrix
from qspec.polynomials import (CHARPOLYS, F1, F2, F4, G1, G4, g12_direct, g12_printed,
                               g14_direct, g14_printed)


def _points(k, seed):
    rng = random.Random(seed)
    return [Fraction(rng.randint(-4000, 4000), rng.randint(1, 97)) for _ in range(k)]


@pytest.mark.parametrize("family", ["G1", "G2", "G4"])
@pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (0, 3), (3, 3), (7, 0), (5, 4), (9, 2), (2, 11)])
def test_table_equals_determinant(family, p, q):
    m = quotient_matrix(FamilyParams(family, p, q))
    for x in _points(20, seed=p * 31 + q):
        assert CHARPOLYS[family](x, p=p, q=q) == charpoly_det(m, x)


def test_degrees_and_leading():
    for f in (F1, F2, F4):
        assert f.degree == 7
        assert f.coefficients(p=3, q=2)[0] == 1


def test_trace_coefficient():
    # the x^6 coefficient is minus the trace of the quotient matrix
    for fam, f in CHARPOLYS.items():
        m = quotient_matrix(FamilyParams(fam, 4, 2))
        assert f.coefficients(p=4, q=2)[1] == -int(m.trace())


def test_derivative():
    x = Fraction(3, 7)
    h = Fraction(1, 10**12)
    d = F1.derivative(1)(x, p=3, q=2)
    num = (F1(x + h, p=3, q=2) - F1(x - h, p=3, q=2)) / (2 * h)
    assert abs(d - num) < Fraction(1, 10**6)
    assert F1.derivative(8)(x, p=1, q=1) == 0


def test_grid_matches_exact():
    xs = [0.25, 0.5, 1.75]
    vals = G4.grid(xs, n=14)
    for x, v in zip(xs, vals):
        assert v == pytest.approx(float(G4(Fraction(x), n=14)), rel=1e-12)


def test_missing_parameter():
    with pytest.raises(TypeError):
        G1(1, n=12)


def test_g14_printed_agrees():
    for n in (12, 15, 20):
        for x in _points(10, n):
            assert g14_printed(x, n) == g14_direct(x, n)


def test_g12_printed_has_sign_error():
    """The printed factorisation of f1 - f2 at (n-5, 0) disagrees with the tables;
    flipping the sign of its -2n^2 term restores agreement."""
    x, n = Fraction(1, 2), 12
    assert g12_printed(x, n) != g12_direct(x, n)
    fixed = lambda x, n: (n - x - 3) ** 2 * (2 * n ** 2 + (-x - 18) * n - 2 * x ** 2 + 8 * x + 40)
    for n in (12, 13, 20):
        for x in _points(10, n):
            assert fixed(x, n) == g12_direct(x, n)
