import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from seifert_semigroup import (
    SeifertData,
    StarGraph,
    build_graph,
    canonical_cycle,
    chi,
    class_rep,
    cycle,
    dual_cycle,
    group_order,
    invariants,
    is_antinef,
    is_negative_definite,
    pairing,
    r_of_class,
    unit_cycle,
    zero_cycle,
)
from seifert_semigroup.lattice import (
    cf_value,
    hirzebruch_cf,
    orbifold_euler_number,
    pairing_with_vertex,
    smith_invariants,
)
from seifert_semigroup.verification import random_seifert

from conftest import seeded_rng


def test_continued_fraction_examples():
    assert hirzebruch_cf(7, 2) == (4, 2)
    assert hirzebruch_cf(5, 3) == (2, 3)
    assert hirzebruch_cf(5, 1) == (5,)
    assert cf_value((4, 2)) == F(7, 2)
    assert cf_value((2, 3)) == F(5, 3)


@given(st.integers(2, 200), st.data())
def test_continued_fraction_roundtrip(alpha, data):
    units = [w for w in range(1, alpha) if math.gcd(w, alpha) == 1]
    omega = data.draw(st.sampled_from(units))
    chain = hirzebruch_cf(alpha, omega)
    assert all(b >= 2 for b in chain)
    assert cf_value(chain) == F(alpha, omega)


def test_build_graph_golden(sf_star70):
    g = build_graph(sf_star70)
    assert g.n == 6
    assert g.euler == (-1, -5, -5, -7, -10, -70)
    assert g.legs == ((1,), (2,), (3,), (4,), (5,))


def test_build_graph_chains():
    g = build_graph(SeifertData(2, ((7, 2), (5, 3), (2, 1))))
    assert g.euler == (-2, -4, -2, -2, -3, -2)
    assert g.legs == ((1, 2), (3, 4), (5,))


def test_pairing_basics(golden_graphs):
    for g in golden_graphs.values():
        for v in range(g.n):
            ev = unit_cycle(g.n, v)
            assert pairing(g, ev, ev) == g.euler[v]
            for u in range(g.n):
                expected = g.euler[v] if u == v else (1 if u in g.neighbors(v) else 0)
                assert pairing(g, unit_cycle(g.n, u), ev) == expected


def test_central_dual_self_pairing(golden_graphs, sf_star70, sf_base4, sf_asym5, sf_gor7, sf_237):
    for g, sf in zip(
        [golden_graphs[k] for k in ("star70", "base4", "asym5", "gor7", "s237")],
        [sf_star70, sf_base4, sf_asym5, sf_gor7, sf_237],
    ):
        e0 = dual_cycle(g, 0)
        assert pairing(g, e0, e0) == 1 / invariants(sf).e  # -(E0*, E0*) = 1/|e|


def test_dual_cycle_golden(sf_base4, sf_asym5):
    g = build_graph(sf_base4)
    assert dual_cycle(g, 0) == cycle([F(14, 5), F(14, 25), F(14, 25), F(2, 5), F(7, 25)])
    g1 = build_graph(sf_asym5)
    assert dual_cycle(g1, 0) == cycle([8, 2, 2, 2, F(4, 5), F(1, 5)])


def test_end_vertex_dual_central_coefficient(sf_base4, sf_gor7):
    for sf in (sf_base4, sf_gor7):
        g = build_graph(sf)
        inv = invariants(sf)
        for leg, (alpha, _) in zip(g.legs, sf.legs):
            assert dual_cycle(g, leg[-1])[0] == 1 / (-inv.e * alpha)


def test_dual_pairings_are_kronecker(golden_graphs):
    for g in golden_graphs.values():
        for v in range(g.n):
            ev = dual_cycle(g, v)
            assert all(x > 0 for x in ev.coeffs)
            for w in range(g.n):
                assert pairing_with_vertex(g, ev, w) == (-1 if v == w else 0)


def test_canonical_cycle_golden(sf_star70, sf_asym5, sf_e8):
    assert canonical_cycle(build_graph(sf_star70)) == cycle(
        [F(47, 6), F(13, 6), F(13, 6), F(11, 6), F(19, 12), F(13, 12)]
    )
    assert canonical_cycle(build_graph(sf_asym5)) == cycle([18, 5, 5, 5, F(13, 5), F(7, 5)])
    g8 = build_graph(sf_e8)
    assert canonical_cycle(g8) == zero_cycle(g8.n)


def test_adjunction_residual_zero(golden_graphs):
    for g in golden_graphs.values():
        zk = canonical_cycle(g)
        for v in range(g.n):
            assert pairing_with_vertex(g, zk, v) == g.euler[v] + 2


def test_chi_basics(golden_graphs):
    for g in golden_graphs.values():
        assert chi(g, zero_cycle(g.n)) == 0
        assert chi(g, canonical_cycle(g)) == 0


def test_chi_bilinear_identity(golden_graphs):
    rng = seeded_rng(1)
    for g in golden_graphs.values():
        for _ in range(20):
            a = cycle([rng.randint(-3, 3) for _ in range(g.n)])
            b = cycle([rng.randint(-3, 3) for _ in range(g.n)])
            assert chi(g, a + b) == chi(g, a) + chi(g, b) - pairing(g, a, b)


def test_class_rep_golden(sf_star70, sf_base4):
    g = build_graph(sf_star70)
    r = class_rep(canonical_cycle(g))
    assert r_of_class(r) == cycle([F(5, 6), F(1, 6), F(1, 6), F(5, 6), F(7, 12), F(1, 12)])
    g5 = build_graph(sf_base4)
    r5 = class_rep(canonical_cycle(g5) + dual_cycle(g5, 0))
    assert r_of_class(r5) == cycle([F(3, 5), F(3, 25), F(3, 25), F(4, 5), F(14, 25)])


def test_class_rep_roundtrip(golden_graphs):
    rng = seeded_rng(2)
    for g in golden_graphs.values():
        assert r_of_class(class_rep(cycle([rng.randint(-5, 5) for _ in range(g.n)]))) == zero_cycle(g.n)
        l = canonical_cycle(g) + cycle([rng.randint(-3, 3) for _ in range(g.n)])
        assert (l - r_of_class(class_rep(l))).is_integral()


def test_antinef_predicate(golden_graphs):
    for g in golden_graphs.values():
        assert is_antinef(g, zero_cycle(g.n))
        for v in range(g.n):
            assert is_antinef(g, dual_cycle(g, v))
            assert not is_antinef(g, -1 * unit_cycle(g.n, v))
        # restricted form ignores the excluded central vertex
        assert not is_antinef(g, -1 * unit_cycle(g.n, 0))
        assert is_antinef(g, -1 * unit_cycle(g.n, 0), vertices=range(1, g.n))


def test_smith_invariants_fixed():
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariants([[1, 0], [0, 0]]) == [1, 0]
    diag = smith_invariants([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert len(diag) == 3
    assert math.prod(diag) == abs(2 * (6 * 16 - 12 * 4) - 4 * (-6 * 16 - 12 * 10) + 4 * (-6 * 4 - 6 * 10))
    for a, b in zip(diag, diag[1:]):
        if b:
            assert b % a == 0


def test_group_order_matches_seifert_formula():
    rng = seeded_rng(3)
    for _ in range(25):
        sf = random_seifert(rng, max_alpha=12, alpha_cap=10**6, window_cap=10**9)
        assert group_order(build_graph(sf)) == invariants(sf).order_h


def test_negative_definiteness_tracks_euler_number_sign():
    rng = seeded_rng(4)
    for _ in range(30):
        d = rng.randint(3, 5)
        euler = [-rng.randint(1, 3)] + [-rng.randint(2, 9) for _ in range(d)]
        g = StarGraph(euler=tuple(euler), legs=tuple((i + 1,) for i in range(d)))
        assert is_negative_definite(g) == (orbifold_euler_number(g) < 0)


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        StarGraph(euler=(1, -2, -2, -2), legs=((1,), (2,), (3,)))
    with pytest.raises(ValueError):
        StarGraph(euler=(-1, -1, -2, -2), legs=((1,), (2,), (3,)))
    with pytest.raises(ValueError):
        SeifertData(1, ((2, 1), (2, 1)))
    with pytest.raises(ValueError):
        SeifertData(1, ((2, 1), (4, 2), (3, 1)))
    with pytest.raises(ValueError):
        SeifertData(1, ((2, 1), (2, 1), (2, 1)))  # e = 1/2 >= 0
