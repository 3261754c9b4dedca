"""Smoke tests for the python bindings: every exposed surface is exercised
once with exact expected values."""

from fractions import Fraction

import pytest

import whg


def test_dimension_formula():
    assert whg.fock_dimension(2, 2) == 6
    assert whg.fock_dimension(3, 4) == 35
    basis = whg.fock_basis(2, 2)
    assert basis[0] == [0, 0]
    assert basis == sorted(basis, key=lambda state: (sum(state), state))


def test_radical_arithmetic():
    root2 = whg.Radical.sqrt(2)
    assert str(root2 * root2) == "2"
    assert str(whg.Radical.sqrt(8)) == "2*sqrt(2)"
    assert (root2 - root2).is_zero()
    assert whg.Radical(1, 2) + whg.Radical(1, 2) == whg.Radical(1)
    assert str(whg.Radical.sqrt_fraction(1, 2)) == "1/2*sqrt(2)"
    with pytest.raises(Exception):
        whg.Radical.sqrt(-1)


def test_ladder_entries():
    entries = whg.annihilation_entries(1, 1, 2)
    assert (0, 1, "sqrt(2)") in entries
    assert (1, 2, "sqrt(2)") in entries
    raising = whg.creation_entries(1, 1, 1)
    assert raising == [(1, 0, "1")]
    assert Fraction(whg.structure_function(1, [1], 2)) == 2


def test_check_reports():
    reports = whg.verify_algebra(2, 2)
    assert all(r.passed() for r in reports)
    assert {r.check for r in reports} == {
        "basis",
        "wh_relations",
        "su_generators",
        "serre_relations",
        "commuting_ladders",
        "large_k_contraction",
    }
    report = whg.verify_qukit(3)
    assert report.passed()
    assert report.max_deviation() == "0"
    assert all(d.witness is None for d in report.details)
    assert whg.verify_bargmann(2, 2).passed()
    assert whg.serre_check(3, 2).passed()
    text = whg.reports_text([report])
    assert "qukit" in text and "PASS" in text


def test_cartan_matrix():
    assert whg.cartan_matrix(3) == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


def test_dicke_state():
    amplitudes = whg.dicke_state(2, 1)
    assert set(amplitudes) == {"-+", "+-"}
    assert amplitudes["-+"] == "1/2*sqrt(2)"


def test_grassmann_calculus():
    eta = whg.Grassmann.eta(3)
    assert (eta**4).is_zero()
    assert not (eta**3).is_zero()
    assert eta**2 == whg.Grassmann.sym_poly(3, 2).scaled(whg.Radical(2))
    top = (eta**3).berezin("theta")
    assert str(top.constant_term()) == "6"
    derived = whg.Grassmann.dicke_poly(3, 2).derivative()
    assert derived == whg.Grassmann.dicke_poly(3, 1).scaled(whg.Radical.sqrt(4))


def test_coherent_states():
    coeffs = whg.bg_coefficients(1, 1)
    assert coeffs[(0,)] == "1" and coeffs[(1,)] == "1"
    entries = whg.coherent_state_entries(1, 2)
    assert entries[2] == {
        "index": [2],
        "coefficient": "1/2",
        "eta_power": 2,
        "z_monomial": [2],
    }
    assert whg.gaussian_moment(3, 3) == "6"
    assert whg.gaussian_moment(2, 1) == "0"
    assert whg.eigen_check(2, 2).passed()
    assert whg.resolution_check(1, 3).passed()
    assert whg.recurrence_check(2, 3).passed()


def test_spin_operators():
    ops = whg.spin_operators(1)
    assert ops["plus"] == [(1, 0, "1")]
    assert ops["z"] == [(0, 0, "-1/2"), (1, 1, "1/2")]


def test_large_k():
    assert Fraction(whg.large_k_deviation(1, 100, 3)) == Fraction(6, 100)
    assert whg.large_k_check(2, 50, 2).passed()
