import random

import pytest
import sympy
from hypothesis import given

from forbidden_detour.diagram import GaussDiagram, Role, parse_gauss_code, random_diagram
from forbidden_detour.invariants import (
    affine_index_poly,
    all_indices,
    endpoint_sign,
    index,
    n_writhes,
    quotient_coefficients,
)
from forbidden_detour.laurent import LaurentPoly

from conftest import TREFOIL, diagrams


def brute_index(d, chord):
    """Rotate so the tail sits first, then sum the slice up to the head."""
    tail, _ = d.positions(chord)
    r = d.rotate(tail)
    _, head = r.positions(chord)
    total = 0
    for c, role in r.endpoints[1:head]:
        total += r.signs[c] if role is Role.HEAD else -r.signs[c]
    return total


def brute_aip(d):
    t = sympy.Symbol("t")
    expr = sum((d.signs[c] * (t ** (-brute_index(d, c)) - 1) for c in d.chords), sympy.Integer(0))
    return sympy.expand(expr), t


def test_endpoint_signs():
    d = parse_gauss_code("O1+U1+O2-U2-")
    assert [endpoint_sign(d, i) for i in range(4)] == [-1, 1, 1, -1]
    with pytest.raises(IndexError):
        endpoint_sign(d, 4)


@given(diagrams())
def test_endpoint_signs_sum_to_zero(d):
    assert sum(endpoint_sign(d, i) for i in range(len(d))) == 0


def test_trefoil_indices():
    d = parse_gauss_code(TREFOIL)
    assert index(d, 1) == -1 and index(d, 2) == 1
    assert n_writhes(d) == {-1: 1, 1: 1}
    assert affine_index_poly(d) == LaurentPoly({1: 1, 0: -2, -1: 1})
    assert quotient_coefficients(d) == LaurentPoly({0: 1, -1: -1})


def test_isolated_chord():
    d = parse_gauss_code("O1+U1+")
    assert index(d, 1) == 0
    assert n_writhes(d) == {}
    assert affine_index_poly(d).is_zero()
    assert affine_index_poly(GaussDiagram()).is_zero()
    with pytest.raises(KeyError):
        index(d, 2)


@given(diagrams())
def test_index_implementations_agree(d):
    fast = all_indices(d)
    for c in d.chords:
        assert index(d, c) == fast[c] == brute_index(d, c)


@given(diagrams(min_chords=1))
def test_complementary_arc_antisymmetry(d):
    for c in d.chords:
        tail, head = d.positions(c)
        n = len(d)
        comp = 0
        j = (head + 1) % n
        while j != tail:
            comp += endpoint_sign(d, j)
            j = (j + 1) % n
        assert index(d, c) == -comp


@given(diagrams())
def test_aip_vanishes_at_one(d):
    assert affine_index_poly(d).evaluate_at_one() == 0


def test_aip_matches_sympy_oracle():
    for seed in range(200):
        d = random_diagram(seed % 9, seed)
        expr, t = brute_aip(d)
        ours = sum((c * t**e for e, c in affine_index_poly(d).coeffs.items()), sympy.Integer(0))
        assert sympy.expand(ours - expr) == 0
        q = sympy.cancel(expr / (t - 1))
        mine = sum((c * t**e for e, c in quotient_coefficients(d).coeffs.items()), sympy.Integer(0))
        assert sympy.simplify(q - mine) == 0


def test_aip_basepoint_independent():
    rng = random.Random(5)
    for seed in range(100):
        d = random_diagram(6, seed)
        assert affine_index_poly(d.rotate(rng.randrange(12))) == affine_index_poly(d)
