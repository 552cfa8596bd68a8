from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from framedvoa.fock import (
    ModeError,
    Sector,
    StateVector,
    apply_mode,
    apply_word,
    basis_states,
    check_virasoro,
    commutator_residual,
    graded_dimensions,
    ramond_split,
    ramond_vacua,
    states_up_to,
    virasoro_mode,
)

HALF = Fraction(1, 2)


def _mode(sector, k):
    return Fraction(k) + (HALF if sector is Sector.NS else 0)


@st.composite
def car_case(draw):
    sector = draw(st.sampled_from(list(Sector)))
    m = _mode(sector, draw(st.integers(-4, 3)))
    n = _mode(sector, draw(st.integers(-4, 3)))
    states = [StateVector.basis(sector, b) for b in basis_states(sector, draw(st.integers(0, 4)) + (0 if sector is Sector.NS else Fraction(1, 16)))]
    v = draw(st.sampled_from(states)) if states else StateVector.vacuum(sector)
    return sector, m, n, v


@given(car_case())
def test_anticommutation(case):
    sector, m, n, v = case
    anti = apply_word([m, n], v) + apply_word([n, m], v)
    expected = v if m + n == 0 else StateVector(sector)
    assert anti == expected


def test_annihilation_and_creation_signs():
    v = StateVector.basis(Sector.NS, [Fraction(3, 2), HALF])
    assert apply_mode(HALF, v) == StateVector(Sector.NS, {(Fraction(3, 2),): -1})
    assert apply_mode(Fraction(-3, 2), v).is_zero()
    assert apply_mode(Fraction(-5, 2), v) == StateVector.basis(Sector.NS, [Fraction(5, 2), Fraction(3, 2), HALF])
    with pytest.raises(ModeError):
        StateVector.basis(Sector.NS, [HALF, Fraction(3, 2)])


def test_wrong_sector_index():
    with pytest.raises(ModeError):
        apply_mode(1, StateVector.vacuum(Sector.NS))
    with pytest.raises(ModeError):
        apply_mode(HALF, StateVector.vacuum(Sector.R))


def test_graded_dimensions_match_partition_counts():
    for w, d in graded_dimensions(Sector.NS, 8):
        assert d == oracles.ns_dimension(int(2 * w))
    for w, d in graded_dimensions(Sector.R, 8):
        assert d == 2 * oracles.distinct_partitions(int(w - Fraction(1, 16)))
    assert [d for _, d in graded_dimensions(Sector.NS, 4)] == [1, 1, 0, 1, 1, 1, 1, 1, 2]


def test_l0_is_the_grading():
    for sector in Sector:
        for v in states_up_to(sector, 4):
            (modes,) = list(v)
            w = sum(modes, Fraction(0)) + (Fraction(1, 16) if sector is Sector.R else 0)
            assert virasoro_mode(0, v) == v.scale(w)


def test_l0_on_ramond_vacua():
    plus, minus = ramond_vacua()
    assert virasoro_mode(0, plus) == plus.scale(Fraction(1, 16))
    assert virasoro_mode(0, minus) == minus.scale(Fraction(1, 16))
    for n in (1, 2, 3):
        assert virasoro_mode(n, plus).is_zero() and virasoro_mode(n, minus).is_zero()


def test_virasoro_vacuum_annihilators():
    vac = StateVector.vacuum(Sector.NS)
    for n in (-1, 0, 1, 2):
        assert virasoro_mode(n, vac).is_zero()
    # L(-2)|0> is the conformal vector psi_{-3/2} psi_{-1/2} / 2
    assert virasoro_mode(-2, vac) == StateVector(Sector.NS, {(Fraction(3, 2), HALF): HALF})


@pytest.mark.parametrize("m,n", [(2, -2), (1, -1), (3, -1), (-2, 1), (4, -4)])
def test_commutators_low_weight(m, n):
    for sector in Sector:
        chk = check_virasoro(m, n, states_up_to(sector, 3))
        assert chk.exact_zero, (sector, m, n)


def test_commutator_detects_wrong_central_term():
    v = StateVector.vacuum(Sector.NS)
    r = commutator_residual(2, -2, v)
    assert r.is_zero()
    # the central term alone: <0|[L2, L-2]|0> = c/2 = 1/4
    lhs = virasoro_mode(2, virasoro_mode(-2, v))
    assert lhs == v.scale(Fraction(1, 4))


def test_ramond_split():
    split = ramond_split(8)
    assert split.plus == split.minus == (1, 1, 1, 2, 2, 3, 4, 5, 6)
    assert split.total == (2, 2, 2, 4, 4, 6, 8, 10, 12)
    assert split.balanced and split.exhaustive
