from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confhodge.algebra import XYUT, XYZ, TruncatedSeries
from confhodge.genfun import (
    I_EQ_N,
    I_EQ_N_MINUS_1,
    PHI,
    PSI,
    PositivityError,
    ShiftError,
    apply_shift,
    base_coefficient,
    base_polynomial,
    expand_strand,
    expand_surface,
    hodge_table,
    hodge_table_from_series,
    specialize,
    strand_gf,
    theorem_a_gf,
)

X, Y, Z = (XYZ.gen(v) for v in "xyz")
one3 = XYZ.one()
x, y, u, t = (XYUT.gen(v) for v in "xyut")
one = XYUT.one()


def m(**e):
    return XYUT.monomial(**e)


# -- base polynomial and shifts ---------------------------------------------


def test_base_polynomial_small():
    assert base_polynomial(0) == one3 - X * Y * Z * Z
    assert base_polynomial(1) == one3 - (X + Y) * Z + X * Y * (X + Y) * Z**3 - X * X * Y * Y * Z**4


def test_base_polynomial_is_the_product():
    for g in range(6):
        want = (one3 - X * Y * Z * Z) * (one3 - X * Z) ** g * (one3 - Y * Z) ** g
        assert base_polynomial(g) == want


@pytest.mark.parametrize("g", range(13))
def test_degree_g_plus_one_vanishes(g):
    assert all(e[2] != g + 1 for e, _ in base_polynomial(g).items())


@given(st.integers(0, 10), st.integers(0, 12), st.integers(0, 12))
def test_base_coefficient_formula(g, p, q):
    want = (-1) ** (p + q) * (comb(g, p) * comb(g, q) - (comb(g, p - 1) * comb(g, q - 1) if p and q else 0))
    assert base_coefficient(g, p, q) == want
    assert base_polynomial(g).coeff((p, q, p + q)) == want


def test_phi_genus_zero():
    assert apply_shift(PHI, 0, base_polynomial(0)) == one - m(x=1, y=1, u=1, t=2)


def test_phi_genus_one():
    want = one - (x + y) * u * t + x * y * (x + y) * m(u=2, t=3) - m(x=2, y=2, u=3, t=4)
    assert apply_shift(PHI, 1, base_polynomial(1)) == want


def test_psi_genus_one():
    want = one3 - (X + Y) * Z + X * Y * (X + Y) * Z**2 - X * X * Y * Y * Z**3
    assert apply_shift(PSI, 1, base_polynomial(1)) == want


def test_shift_rejects_degree_g_plus_one():
    with pytest.raises(ShiftError, match="j=g\\+1"):
        apply_shift(PHI, 1, base_polynomial(1) + Z * Z)
    with pytest.raises(ShiftError):
        apply_shift(PSI, 2, Z**3)


@given(st.integers(0, 6), st.integers(0, 14))
def test_shifts_on_single_powers(g, j):
    p = Z**j
    if j == g + 1 or j > 2 * g + 2:
        with pytest.raises(ShiftError):
            apply_shift(PHI, g, p)
        return
    k = j if j <= g else j - 1
    assert apply_shift(PHI, g, p) == m(u=k, t=j)
    assert apply_shift(PSI, g, p) == Z**k


# -- the four-variable generating function ------------------------------------


def test_gf_genus_zero():
    f = theorem_a_gf(0, 1)
    assert f.numerator == one - m(x=1, y=1, u=1, t=2)
    assert f.denominator_poly() == one - t
    f2 = theorem_a_gf(0, 2)
    assert f2.denominator_poly() == (one + m(x=1, y=1, u=1, t=1)) * (one - t)


def test_gf_genus_one():
    f = theorem_a_gf(1, 1)
    assert f.numerator == apply_shift(PHI, 1, base_polynomial(1))
    assert f.denominator_poly() == (one - t) * (one - m(x=2, y=1, u=2, t=2)) * (one - m(x=1, y=2, u=2, t=2))


def test_closed_surface_refused():
    with pytest.raises(ValueError, match="closed-surface case out of scope"):
        theorem_a_gf(0, 0)
    with pytest.raises(ValueError, match="closed-surface"):
        hodge_table(2, 0, 3)
    with pytest.raises(ValueError, match="closed-surface"):
        strand_gf(I_EQ_N, 1, 0)


def test_against_sympy_series():
    sympy = pytest.importorskip("sympy")
    a, b, c, s = sympy.symbols("x y u t")
    # shift for g = 2 applied by hand: z^j -> u^j t^j (j <= 2), u^(j-1) t^j (j >= 4)
    zs = sympy.symbols("z")
    base = sympy.Poly(sympy.expand((1 - a * b * zs**2) * (1 - a * zs) ** 2 * (1 - b * zs) ** 2), zs)
    shifted = 0
    for (j,), coef in zip(base.monoms(), base.coeffs()):
        assert j != 3
        shifted += coef * (c**j if j <= 2 else c ** (j - 1)) * s**j
    den = (1 - s) * (1 + a * b * c * s) * (1 - a**2 * b * c**2 * s**2) ** 2 * (1 - a * b**2 * c**2 * s**2) ** 2
    ref = sympy.Poly(sympy.series(shifted / den, s, 0, 6).removeO(), a, b, c, s)
    want = {e: int(k) for e, k in zip(ref.monoms(), ref.coeffs())}
    assert dict(expand_surface(2, 2, 5).terms) == want


# -- Hodge tables --------------------------------------------------------------


def test_table_genus_zero():
    tab = hodge_table(0, 1, 6)
    assert tab.at(2) == {(0, 0, 0): 1, (1, 1, 1): 1}
    for n in range(2, 7):
        assert tab.at(n) == {(0, 0, 0): 1, (1, 1, 1): 1}


def test_table_genus_one():
    tab = hodge_table(1, 1, 2)
    assert tab.at(2) == {(0, 0, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1, (2, 1, 2): 1, (1, 2, 2): 1}
    assert tab.at(1) == {(0, 0, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}


@pytest.mark.parametrize("g,r", [(0, 1), (1, 3), (4, 2), (7, 1)])
def test_table_level_zero(g, r):
    assert hodge_table(g, r, 0).at(0) == {(0, 0, 0): 1}


def test_level_one_is_the_surface():
    # Conf_1 = Sigma_{g,r}: b0 = 1, b1 = 2g + r - 1, with H^1 of types (1,0), (0,1), (1,1)
    for g in range(4):
        for r in range(1, 4):
            tab = hodge_table(g, r, 1)
            assert tab.at(1) == {k: v for k, v in {(0, 0, 0): 1, (1, 0, 1): g, (0, 1, 1): g,
                                                    (1, 1, 1): r - 1}.items() if v}


def test_negative_coefficient_rejected():
    bad = TruncatedSeries(one - t, 1)
    with pytest.raises(PositivityError):
        hodge_table_from_series(bad, 0, 1)


def test_betti_sum():
    tab = hodge_table(2, 2, 5)
    for n in range(6):
        for i in range(n + 1):
            assert tab.betti(i, n) == sum(h for (w1, w2, j, k), h in tab.entries.items() if (j, k) == (i, n))


# -- puncture recursion and sign coherence -----------------------------------


@given(st.integers(0, 3), st.integers(1, 3), st.integers(0, 8))
@settings(max_examples=30, deadline=None)
def test_puncture_recursion(g, r, tmax):
    lhs = expand_surface(g, r + 1, tmax) * (one + m(x=1, y=1, u=1, t=1))
    assert lhs == expand_surface(g, r, tmax)


@pytest.mark.parametrize("g,r", [(g, r) for g in range(4) for r in range(1, 4)])
def test_sign_coherence(g, r):
    # (-1)^i c >= 0 everywhere; hodge_table raises otherwise
    tab = hodge_table(g, r, 8)
    assert all(h > 0 for h in tab.entries.values())


@pytest.mark.parametrize("g", range(11))
def test_numerator_positive_after_u_flip(g):
    num = apply_shift(PHI, g, base_polynomial(g))
    assert all((-1) ** e[2] * c >= 0 for e, c in num.items())


# -- strands -------------------------------------------------------------------


def test_strand_examples():
    assert expand_strand(I_EQ_N, 0, 1, 6).poly == one3
    f = strand_gf(I_EQ_N, 1, 1)
    assert f.numerator == one3 - (X + Y) * Z
    assert f.denominator_poly() == (one3 - X * X * Y * Z * Z) * (one3 - X * Y * Y * Z * Z)
    f = strand_gf(I_EQ_N_MINUS_1, 1, 1)
    assert f.numerator == one3 - (X + Y) * Z + X * Y * (X + Y) * Z**2 - X * X * Y * Y * Z**3
    assert f.denominator_poly() == (one3 - X * X * Y * Z * Z) * (one3 - X * Y * Y * Z * Z)


def test_strand_has_puncture_factor():
    assert strand_gf(I_EQ_N, 0, 3).denominator_poly() == (one3 + X * Y * Z) ** 2


def test_superdiagonal_degree_one():
    zs = expand_strand(I_EQ_N_MINUS_1, 1, 1, 3)
    assert zs.coeff((1, 0, 1)) == -1 and zs.coeff((0, 1, 1)) == -1
    full = expand_surface(1, 1, 3)
    assert full.coeff((1, 0, 1, 2)) == -1 and full.coeff((0, 1, 1, 2)) == -1


@pytest.mark.parametrize("which,shift", [(I_EQ_N, 0), (I_EQ_N_MINUS_1, 1)])
@pytest.mark.parametrize("g,r", [(g, r) for g in range(4) for r in (1, 2)])
def test_strand_matches_extraction(which, shift, g, r):
    imax = 8
    full = expand_surface(g, r, imax + 1)
    zs = expand_strand(which, g, r, imax)
    want = {(a, b, i): c for (a, b, i, n), c in full.terms.items() if i <= imax and n == i + shift}
    assert dict(zs.terms) == want


def test_unknown_strand():
    with pytest.raises(ValueError):
        strand_gf("diagonalish", 1, 1)


# -- specializations -----------------------------------------------------------


def test_euler_genus_zero():
    assert specialize(expand_surface(0, 1, 6), "euler").poly == one + t


def test_euler_genus_one():
    assert specialize(expand_surface(1, 1, 4), "euler").poly == one - t + t**2 - t**3 + t**4


def test_euler_genus_two_two_punctures():
    s = specialize(expand_surface(2, 2, 4), "euler")
    assert [s.coeff((0, 0, 0, n)) for n in range(5)] == [1, -4, 10, -20, 35]


def test_betti_torus_level_one():
    s = specialize(expand_surface(1, 1, 1), "betti")
    assert {e: c for e, c in s.terms.items() if e[3] == 1} == {(0, 0, 0, 1): 1, (0, 0, 1, 1): -2}


def test_epoly_keeps_weights():
    s = specialize(expand_surface(1, 1, 2), "epoly")
    assert all(e[2] == 0 for e in s.terms)
    assert s.coeff((2, 1, 0, 2)) == 1  # only H^2 contributes at weight (2,1), with sign +


def test_specialize_rejects_unknown():
    with pytest.raises(ValueError):
        specialize(expand_surface(0, 1, 2), "hodge")
