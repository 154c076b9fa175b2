"""Minimal resolutions, Ext charts, the Hom-complex oracle, Yoneda pairing."""

import pytest

from stmod import fixtures, module as md, resolve as rv, steenrod as st
from stmod.f2linalg import rref
from stmod.module import (dual, hopf_quotient, regular_module, suspend,
                          tensor, trivial_module)
from stmod.resolve import (ext_chart, ext_groups, minimal_resolution,
                           render_chart, yoneda_action)


# ---------------------------------------------------------------------------
# resolutions


def test_free_module_resolves_in_length_zero(a1_regular):
    res = minimal_resolution(a1_regular, 4, 12)
    assert res.generator_degrees(0) == [0]
    for s in range(1, 5):
        assert res.generator_degrees(s) == []


def test_p11_quotient_has_periodic_resolution(A1):
    m = hopf_quotient(A1, fixtures.algebra_P11())
    res = minimal_resolution(m, 6, 20)
    for s in range(7):
        assert res.generator_degrees(s) == [3 * s]


def test_f2_resolution_bott_generator(f2_resolution):
    assert 12 in f2_resolution.generator_degrees(4)


def test_resolution_is_minimal_and_exact(f2_resolution):
    assert f2_resolution.is_minimal()
    assert f2_resolution.check_exactness()


def test_resolution_handles_negative_degrees():
    di1 = fixtures.load_fixture("DI1")
    res = minimal_resolution(di1, 3, 6)
    assert res.generator_degrees(0) == [-6]
    assert res.check_exactness()


# ---------------------------------------------------------------------------
# charts


def test_chart_a0_h0_tower():
    ch = ext_chart(trivial_module(st.A(0)), 5, 8)
    assert dict(ch.items()) == {(s, s): 1 for s in range(6)}


def test_chart_p11_polynomial_on_w():
    ch = ext_chart(trivial_module(fixtures.algebra_P11()), 6, 20)
    assert dict(ch.items()) == {(s, 3 * s): 1 for s in range(7)}


def test_chart_a1_mod_p11(A1):
    ch = ext_chart(hopf_quotient(A1, fixtures.algebra_P11()), 8, 24)
    assert dict(ch.items()) == {(s, 3 * s): 1 for s in range(9)}


def test_chart_f2_over_a1_values(f2_resolution):
    ch = f2_resolution.chart()
    for s in range(13):
        assert ch.get(s, s) == 1
    assert ch.get(4, 12) == 1
    assert ch.get(3, 7) == 1
    assert ch.get(1, 2) == 1 and ch.get(2, 4) == 1
    assert ch.get(1, 3) == 0 and ch.get(2, 3) == 0


def test_chart_against_hom_complex_oracle(f2_a1, f2_resolution):
    """The minimal chart must agree with honest rank arithmetic."""
    ch = f2_resolution.chart()
    oracle = ext_groups(f2_a1, f2_a1, 8, 20, resolution=f2_resolution)
    assert oracle.window_equal(ch, 8, 16) and ch.window_equal(oracle, 8, 16)


def test_ext_groups_consistency_with_chart(joker, f2_a1):
    jj = tensor(joker, joker)
    ch = ext_chart(jj, 5, 12)
    oracle = ext_groups(jj, f2_a1, 5, 12)
    assert ch.window_equal(oracle, 5, 8) and oracle.window_equal(ch, 5, 8)


def test_joker_square_chart_is_f2_chart_plus_free_lines(joker, f2_a1):
    jj = tensor(joker, joker)
    ch = ext_chart(jj, 6, 14)
    chf = ext_chart(f2_a1, 6, 14)
    extra = {}
    for (s, t), v in ch.entries.items():
        if v != chf.get(s, t):
            extra[(s, t)] = v - chf.get(s, t)
    assert extra == {(0, -4): 1, (0, -3): 1, (0, -2): 1}


def test_ext_i1_shift_identity(f2_resolution):
    i1 = fixtures.load_fixture("I1")
    ch_i = ext_chart(i1, 9, 26)
    ch_f = f2_resolution.chart()
    for s in range(9):
        for t in range(0, 22):
            assert ch_i.get(s, t) == ch_f.get(s + 1, t), (s, t)


def test_ext_di1_shift_identity(f2_resolution):
    di1 = fixtures.load_fixture("DI1")
    ch_d = ext_chart(di1, 9, 20)
    ch_f = f2_resolution.chart()
    s0 = [(t, v) for (s, t), v in ch_d.entries.items() if s == 0]
    assert s0 == [(-6, 1)]
    for s in range(1, 9):
        for t in range(-6, 16):
            assert ch_d.get(s, t) == ch_f.get(s - 1, t), (s, t)


def test_change_of_rings_with_duality_twist(A1, f2_a1):
    """Ext over the big algebra with coinduced coefficients equals the Ext
    of the subalgebra; the honest graded coefficients are the dual of the
    quotient, i.e. the quotient shifted by (top(H) - top(K))."""
    for k in (st.A(0, 1), st.E(1), fixtures.algebra_P11()):
        q = hopf_quotient(A1, k)
        shift = A1.top_degree - k.top_degree
        lhs = ext_groups(f2_a1, suspend(q, -shift), 6, 14)
        rhs = ext_chart(trivial_module(k), 6, 14)
        assert lhs.window_equal(rhs, 6, 12) and rhs.window_equal(lhs, 6, 12), k.name


def test_change_of_rings_literal_form_fails_at_origin(A1, f2_a1):
    """The untwisted comparison differs at (0,0): a degree-preserving map
    from the trivial module into the quotient would have to hit the socle."""
    q = hopf_quotient(A1, st.A(0, 1))
    lhs = ext_groups(f2_a1, q, 2, 8)
    assert lhs.get(0, 0) == 0
    assert ext_chart(trivial_module(st.A(0, 1)), 2, 8).get(0, 0) == 1


def test_ext_of_free_module_concentrated_at_origin(a1_regular, f2_a1):
    ch = ext_groups(a1_regular, f2_a1, 4, 10)
    assert dict(ch.items()) == {(0, 0): 1}


def test_ext_into_free_module_is_socle_dual(hz, a1_regular):
    ch = ext_groups(hz, a1_regular, 4, 12)
    assert all(s == 0 for (s, t) in ch.entries)
    # the class in the extreme degree is the dual map onto the top cell
    assert ch.get(0, -6) == 1
    assert sum(ch.entries.values()) == hz.total_dim


# ---------------------------------------------------------------------------
# Yoneda


def test_yoneda_h0_tower_injective(f2_resolution):
    act = yoneda_action(f2_resolution, 1, 1)
    for s in range(0, 12):
        mat = act[(s, s)]
        assert rref(mat)[1] == mat.cols == 1


def test_yoneda_bott_periodicity(f2_resolution):
    act = yoneda_action(f2_resolution, 4, 12)
    ch = f2_resolution.chart()
    for (s, t), mat in act.items():
        if s <= 4 and t - s <= 8 and t + 12 <= f2_resolution.t_max:
            assert mat.rows == mat.cols == ch.get(s, t)
            assert rref(mat)[1] == mat.rows, (s, t)


def test_yoneda_on_zero_entries(f2_resolution):
    act = yoneda_action(f2_resolution, 1, 1)
    # (1,3) is an empty bidegree; anything mapped there is zero-dimensional
    assert (1, 3) not in act or act[(1, 3)].cols == 0


def test_yoneda_rejects_non_trivial_target(joker):
    res = minimal_resolution(joker, 3, 10)
    with pytest.raises(ValueError):
        yoneda_action(res, 1, 1)


# ---------------------------------------------------------------------------
# rendering


def test_render_csv_deterministic():
    ch = ext_chart(trivial_module(st.A(0)), 3, 5)
    assert render_chart(ch, "csv") == "s,t,dim\n0,0,1\n1,1,1\n2,2,1\n3,3,1\n"


def test_render_empty_chart():
    ch = rv.ExtChart({}, 3, 5, 0)
    assert render_chart(ch, "csv") == "s,t,dim\n"
    assert render_chart(ch, "ascii").strip() != ""


def test_render_ascii_tower():
    ch = ext_chart(trivial_module(st.A(0)), 3, 5)
    text = render_chart(ch, "ascii")
    lines = text.splitlines()
    assert lines[0].startswith("  3 | 1")
    assert lines[3].startswith("  0 | 1")


def test_render_svg_has_dots():
    ch = ext_chart(trivial_module(st.A(0)), 3, 5)
    svg = render_chart(ch, "svg")
    assert svg.count("<circle") == 4
    assert svg.startswith("<svg xmlns=")


def test_render_rejects_unknown_format():
    ch = rv.ExtChart({}, 1, 1, 0)
    with pytest.raises(ValueError):
        render_chart(ch, "png")


def test_chart_bounds_and_certification(f2_resolution):
    ch = f2_resolution.chart()
    assert ch.certified_t == f2_resolution.t_max - 6
    assert all(t <= ch.t_max for (_, t) in ch.entries)


def test_resolution_of_zero_module(A1):
    z = md.zero_module(A1)
    res = minimal_resolution(z, 3, 6)
    assert all(res.generator_degrees(s) == [] for s in range(4))
    assert res.chart().items() == []
    ch = ext_groups(z, trivial_module(A1), 3, 6)
    assert ch.items() == []
