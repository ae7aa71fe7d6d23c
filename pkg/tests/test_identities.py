from fractions import Fraction

import pytest

from qspec.identities import (check_claim, check_identity_27, check_identity_28,
                              check_identity_29, g_direct, g_eval, identity_27_mismatches,
                              sample_points)
from qspec.polynomials import F1


def test_sample_points_deterministic():
    a = sample_points(50, -5, 20, seed=3)
    assert a == sample_points(50, -5, 20, seed=3)
    assert len(set(a)) == 50
    assert all(isinstance(x, Fraction) and -5 <= x <= 20 for x in a)


def test_identity_examples():
    assert check_identity_27(4, 3)
    assert check_identity_28(12, 3)
    assert check_identity_29(3, 2)


def test_float_mode_agrees():
    assert check_identity_27(6, 2, exact=False)
    assert check_identity_29(6, 2, exact=False)


def test_mismatch_is_detected():
    # feed the identity a wrong rhs by perturbing one point's lhs through p
    bad = identity_27_mismatches(4, 3, points=[Fraction(1, 3)])
    assert bad == []
    from qspec import identities
    orig = identities.identity_27_rhs
    identities.identity_27_rhs = lambda x, p, q: orig(x, p, q) + 1
    try:
        assert not check_identity_27(4, 3, samples=5)
    finally:
        identities.identity_27_rhs = orig


@pytest.mark.parametrize("call", [lambda: check_identity_27(3, 0),
                                  lambda: check_identity_28(11, 2),
                                  lambda: check_identity_28(12, 8),
                                  lambda: check_identity_29(3, 0)])
def test_domain_errors(call):
    with pytest.raises(ValueError):
        call()


def test_g_eval():
    assert g_eval("g1", 0, n=12, q=3) == g_eval("g1", Fraction(0), n=12, q=3)
    with pytest.raises(ValueError):
        g_eval("g9", 1, n=12)
    with pytest.raises(ValueError):
        g_direct("g1", 1, 12)


def test_claim_b_printed_examples():
    rep = check_claim("B", p=2, q=3)
    chain = {order: value for order, _x, value, _sign, _ok in rep.chain}
    assert chain[2] == 2 * 3 + 4 + 8 * 2 == 26
    assert rep.status == "pass"


def test_claim_c_third_derivative():
    rep = check_claim("C", n=12)
    chain = {order: value for order, _x, value, _sign, _ok in rep.chain}
    assert chain[3] == -60 * 144 + 600 * 12 - 1464 == -2904
    assert rep.grid_ok and rep.chain_ok
    # the printed g4(1) line disagrees with the printed g4 coefficients
    assert not rep.printed_ok
    assert rep.status == "finding"
    assert [w["order"] for w in rep.witnesses] == [0]


def test_claim_a_q_branch():
    rep = check_claim("A", p=3, q=4, grid=10_000)
    assert rep.interval == (0, 5)
    assert rep.grid_min > 0 and rep.status == "pass"


def test_claim_b_fails_outside_lemma_domain():
    # p = 0 is outside p >= q >= 1; there g2(q+3) = 6 - 2q
    rep = check_claim("B", p=0, q=4)
    assert rep.status == "finding" and not rep.grid_ok


def test_claim_json():
    out = check_claim("A", p=5, q=2, grid=100).to_json()
    assert out["check_id"] == "claimA"
    assert set(out) >= {"check_id", "params", "status", "witnesses"}


def test_claim_errors():
    with pytest.raises(ValueError):
        check_claim("A", p=2, q=2)
    with pytest.raises(ValueError):
        check_claim("C", n=11)
    with pytest.raises(ValueError):
        check_claim("D")


def test_f1_at_zero_is_determinant_sign():
    # f(0) = -det(Q) for a 7x7 matrix; Q(G^c) is positive definite here
    assert F1(0, p=7, q=0) < 0
