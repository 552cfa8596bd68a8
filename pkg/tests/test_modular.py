import math

import pytest
from hypothesis import given, strategies as st

import oracles
from framedvoa.characters import ising_triple, solve_baby_characters
from framedvoa.exact import INV_SQRT2, SQRT2, QSqrt2
from framedvoa.modular import SMatrix3, parse_tau, verify_s_transform, verlinde, verlinde_integers

TAUS = (0.8j, 1j, 1.3j)


def test_s_matrix_exact_properties():
    s = SMatrix3()
    assert s.is_symmetric() and s.is_involution()
    for row, ref in zip(s.numeric(), oracles.s_float()):
        assert row == pytest.approx(ref, abs=1e-15)


def test_verlinde_matches_float_and_table():
    exact = verlinde()
    ref = oracles.verlinde_float()
    ints = verlinde_integers()
    for i in range(3):
        for j in range(3):
            for k in range(3):
                assert float(exact[i][j][k]) == pytest.approx(ref[i][j][k], abs=1e-12)
                assert ints[i][j][k] == oracles.ising_mult(i, j, k)


def test_verlinde_rejects_non_integral():
    # halving S scales every multiplicity by 1/4
    half = SMatrix3(tuple(tuple(x * QSqrt2(0.5) for x in r) for r in SMatrix3().rows))
    with pytest.raises(ArithmeticError):
        verlinde_integers(half)


fracs = st.fractions(min_value=-20, max_value=20, max_denominator=30)


@given(fracs, fracs)
def test_qsqrt2_field_inverse(a, b):
    x = QSqrt2(a, b)
    if x:
        assert x * x.inverse() == 1
        assert float(x / x) == pytest.approx(1.0)
    assert float(x) == pytest.approx(float(a) + float(b) * math.sqrt(2))


def test_sqrt2_constants():
    assert SQRT2 * INV_SQRT2 == 1
    assert INV_SQRT2 * INV_SQRT2 == QSqrt2(0.5)


@pytest.mark.parametrize(
    "text,value",
    [("0.8i", 0.8j), ("i", 1j), ("1.3i", 1.3j), ("0.3+1.1i", 0.3 + 1.1j), ("-0.5+i", -0.5 + 1j)],
)
def test_parse_tau(text, value):
    assert parse_tau(text) == pytest.approx(value)


@pytest.mark.parametrize("text", ["-i", "0.5", "1-2i"])
def test_parse_tau_rejects_lower_half_plane(text):
    with pytest.raises(ValueError):
        parse_tau(text)


def test_ising_triple_transforms(triple200):
    rep = verify_s_transform(ising_triple(200), TAUS + (0.3 + 1.1j,), 1e-6)
    assert rep.status == "pass"
    assert rep.max_residual < 1e-10


def test_baby_triple_transforms(triple200):
    rep = verify_s_transform(list(triple200), TAUS + (0.3 + 1.1j,), 1e-6)
    assert rep.status == "pass"
    assert rep.max_residual < 1e-9
    assert rep.max_tail < 1e-7


def test_wrong_prefactor_breaks_transformation():
    rep = verify_s_transform(ising_triple(200, negative_prefactor=True), TAUS, 1e-6)
    assert rep.status == "fail"
    alt = solve_baby_characters(200, negative_prefactor=True)
    assert verify_s_transform(list(alt), TAUS, 1e-6).status == "fail"


def test_short_truncation_is_inconclusive():
    rep = verify_s_transform(ising_triple(3), [0.3j], 1e-6)
    assert rep.status == "inconclusive"
    assert rep.to_json()["status"] == "inconclusive"


def test_lower_half_plane_sample_rejected():
    with pytest.raises(ValueError):
        verify_s_transform(ising_triple(5), [-1j], 1e-6)
