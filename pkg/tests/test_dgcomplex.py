from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confhodge import dgcomplex as dg
from confhodge.dgcomplex import (
    GammaTuple,
    IntMatrix,
    bareiss_rank,
    block_cohomology_dims,
    closed_form_block_dims,
    cohomology_hilbert,
    cohomology_hilbert_bruteforce,
    differential,
    differential_block,
    enumerate_gamma,
    iota_block,
    iota_matrix,
    sign_conjugacy,
)


def gt(rho, S=(), T=(), u=None, v=None, g=0):
    return GammaTuple(rho, tuple(S), tuple(T), tuple(u or (0,) * g), tuple(v or (0,) * g))


# -- matrices ----------------------------------------------------------------


def test_bareiss_small():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 1], [1, 0]]) == 2
    assert bareiss_rank([[2, 4, 6], [1, 3, 5], [0, 1, 2]]) == 2


small_mats = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(small_mats)
@settings(max_examples=150)
def test_bareiss_matches_sympy(rows):
    sympy = pytest.importorskip("sympy")
    assert bareiss_rank([list(r) for r in rows]) == sympy.Matrix(rows).rank()


@given(small_mats)
def test_rank_transpose(rows):
    m = IntMatrix(len(rows), len(rows[0]), [list(r) for r in rows])
    assert m.rank() == m.transpose().rank()
    assert m.rank() + m.nullity() == m.cols


def test_bareiss_big_entries():
    k = 10**30
    assert bareiss_rank([[k, k + 1], [k - 1, k]]) == 2
    assert bareiss_rank([[k, 2 * k], [3, 6]]) == 1


def test_sign_conjugacy():
    a = IntMatrix(2, 2, [[1, 1], [1, -1]])
    b = IntMatrix(2, 2, [[1, -1], [-1, -1]])
    rs, cs = sign_conjugacy(a, b)
    assert all(a[i, j] == rs[i] * b[i, j] * cs[j] for i in range(2) for j in range(2))
    # flipping a single entry of a full 2x2 pattern is never a conjugation
    assert sign_conjugacy(a, IntMatrix(2, 2, [[1, 1], [1, 1]])) is None
    assert sign_conjugacy(a, IntMatrix(2, 2, [[2, 1], [1, -1]])) is None


# -- tuples ------------------------------------------------------------------


def test_enumerate_small():
    assert set(enumerate_gamma(0, 2)) == {gt(0), gt(1)}
    assert set(enumerate_gamma(1, 1)) == {gt(0, g=1), gt(0, (1,), g=1), gt(0, (), (1,), g=1)}
    got = set(enumerate_gamma(1, 2))
    assert len(got) == 7
    assert {gt(0, (1,), (1,), g=1), gt(1, g=1), gt(0, u=(1,), v=(0,)), gt(0, u=(0,), v=(1,))} <= got


def test_enumerate_level_zero():
    for g in range(5):
        assert enumerate_gamma(g, 0) == [gt(0, g=g)]


def brute_gamma(g, n):
    """Every tuple with entries bounded by n, filtered by length."""
    out = set()
    subs = [c for k in range(g + 1) for c in combinations(range(1, g + 1), k)]
    for rho, S, T in product((0, 1), subs, subs):
        for u in product(range(n + 1), repeat=g):
            for v in product(range(n + 1), repeat=g):
                t = GammaTuple(rho, S, T, u, v)
                if t.length <= n:
                    out.add(t)
    return out


@pytest.mark.parametrize("g,n", [(0, 5), (1, 4), (2, 4), (3, 3)])
def test_enumerate_against_brute_force(g, n):
    got = enumerate_gamma(g, n)
    assert len(got) == len(set(got))
    assert set(got) == brute_gamma(g, n)


def test_gradings():
    t = GammaTuple(1, (1, 2), (2,), (1, 0), (0, 2))
    assert t.length == 2 + 2 + 1 + 2 + 4
    p, q, w1, w2 = t.grading
    assert (p, q, w1, w2) == (2 + 1 + 1 + 2, 1 + 1 + 2, 1 + 2 + 2 + 2, 1 + 1 + 1 + 4)
    assert p + q <= t.length  # cohomological degree never exceeds n


# -- exterior algebra ----------------------------------------------------------


def test_iota_small():
    m = iota_matrix(1, 0)
    assert m.shape == (1, 1) and m[0, 0] == 1
    assert iota_matrix(1, 1).is_zero()
    m = iota_matrix(2, 1)
    assert m.shape == (4, 4) and m.rank() == 4


@pytest.mark.parametrize("g", range(6))
def test_hard_lefschetz(g):
    for i in range(2 * g + 1):
        assert iota_matrix(g, i).rank() == min(comb(2 * g, i), comb(2 * g, i + 2))


def test_wedge_sign():
    assert dg.wedge_sign([0, 1]) == 1
    assert dg.wedge_sign([1, 0]) == -1
    assert dg.wedge_sign([2, 0, 1]) == 1
    assert dg.wedge_sign([1, 1]) == 0


# -- differential ----------------------------------------------------------------


def test_differential_block_small():
    m = differential_block(1, 0, 0)
    assert m.shape == (1, 1) and m[0, 0] == 1
    m = differential_block(2, 0, 0)
    assert m.shape == (4, 1)
    rows = dg._block_basis(2, 1, 1)
    assert {rows[i]: c for i, _, c in m.nonzeros()} == {((1,), (1,)): 1, ((2,), (2,)): 1}


def test_differential_sign_example():
    # S = {1}, T = {}: adding a = 2 lands on ({1,2},{2})
    rows = dg._block_basis(2, 2, 1)
    cols = dg._block_basis(2, 1, 0)
    j, i = cols.index(((1,), ())), rows.index(((1, 2), (2,)))
    assert differential_block(2, 1, 0)[i, j] == 1
    assert differential_block(2, 1, 0, "literal")[i, j] == -1
    assert iota_block(2, 1, 0)[i, j] == 1


def test_differential_scalar():
    d = differential(gt(1, g=1))
    assert d == {gt(0, (1,), (1,), g=1): -2}
    assert differential(gt(0, (1,), g=1)) == {}


@pytest.mark.parametrize("g", range(6))
def test_differential_is_omega_wedge(g):
    for s in range(g + 1):
        for t in range(g + 1):
            assert differential_block(g, s, t) == iota_block(g, s, t)


@given(st.integers(1, 4).flatmap(lambda g: st.tuples(
    st.just(g), st.sets(st.integers(1, g)), st.sets(st.integers(1, g)),
    st.lists(st.integers(0, 2), min_size=g, max_size=g), st.lists(st.integers(0, 2), min_size=g, max_size=g))))
def test_square_zero_and_grading_shift(data):
    g, S, T, u, v = data
    t = GammaTuple(1, tuple(sorted(S)), tuple(sorted(T)), tuple(u), tuple(v))
    for tgt in differential(t):
        assert differential(tgt) == {}
        assert tuple(b - a for a, b in zip(t.grading, tgt.grading)) == (2, -1, 0, 0)
        assert tgt.length == t.length
        # bidegree (sigma, tau) -> (sigma + 1, tau + 1)
        assert (len(tgt.S), len(tgt.T)) == (len(t.S) + 1, len(t.T) + 1)


# -- block dimensions --------------------------------------------------------------


def test_block_dims_examples():
    assert block_cohomology_dims(1, 0, 0) == (0, 1)
    assert block_cohomology_dims(2, 1, 1)[0] == 3
    assert block_cohomology_dims(1, 1, 1)[1] == 0
    assert closed_form_block_dims(2, 1, 0)[0] == 0
    assert closed_form_block_dims(2, 1, 1) == (3, 3)
    for g in range(7):
        assert closed_form_block_dims(g, 0, 0)[1] == 1


@pytest.mark.parametrize("g", range(6))
def test_block_dims_closed_form(g):
    for s in range(g + 1):
        for t in range(g + 1):
            assert block_cohomology_dims(g, s, t) == closed_form_block_dims(g, s, t)


def test_literal_sign_loses_rank():
    # the |S| exponent is rank-deficient from g = 3 on; the default is not
    assert block_cohomology_dims(3, 1, 1, "literal") != closed_form_block_dims(3, 1, 1)
    assert block_cohomology_dims(3, 1, 1) == closed_form_block_dims(3, 1, 1)
    for g in range(3):
        for s in range(g + 1):
            for t in range(g + 1):
                assert block_cohomology_dims(g, s, t, "literal") == closed_form_block_dims(g, s, t)


def test_unknown_sign_convention():
    with pytest.raises(ValueError):
        differential_block(2, 0, 0, "other")


# -- Hilbert tables ------------------------------------------------------------


def test_hilbert_genus_zero():
    for n in range(2, 7):
        assert cohomology_hilbert(0, n).at(n) == {(0, 0, 0, 0): 1, (0, 1, 1, 1): 1}


def test_hilbert_genus_one():
    assert cohomology_hilbert(1, 2).at(2) == {(0, 0, 0, 0): 1, (1, 0, 1, 0): 1, (1, 0, 0, 1): 1,
                                             (1, 1, 2, 1): 1, (1, 1, 1, 2): 1}


def test_hilbert_level_zero():
    for g in range(6):
        assert cohomology_hilbert(g, 0).at(0) == {(0, 0, 0, 0): 1}


@pytest.mark.parametrize("g,n", [(g, n) for g in range(3) for n in range(7)] + [(3, n) for n in range(6)])
def test_blocks_against_brute_force(g, n):
    assert cohomology_hilbert(g, n).entries == cohomology_hilbert_bruteforce(g, n).entries


def test_hodge_view_collapses_pq():
    view = cohomology_hilbert(1, 2).hodge_view()
    assert view == {(0, 0, 0, 2): 1, (1, 0, 1, 2): 1, (0, 1, 1, 2): 1, (2, 1, 2, 2): 1, (1, 2, 2, 2): 1}


def test_range_merges_levels():
    tab = dg.cohomology_hilbert_range(1, 3)
    for n in range(4):
        assert tab.at(n) == cohomology_hilbert(1, n).at(n)
