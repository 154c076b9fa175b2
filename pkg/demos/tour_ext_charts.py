#!/usr/bin/env python3
"""Minimal resolutions and Ext charts: the tower, the periodicity class,
shift identities and change of rings.

Run:  python demos/tour_ext_charts.py
"""

from stmod import fixtures, steenrod as st
from stmod.f2linalg import rref
from stmod.module import hopf_quotient, suspend, trivial_module
from stmod.resolve import (ext_chart, ext_groups, minimal_resolution,
                           render_chart, yoneda_action)

A1 = st.A(1)
f2 = trivial_module(A1)

print("=== the chart of the trivial module over A(1) ===")
res = minimal_resolution(f2, 12, 32)
print("stage generator degrees:")
for s in range(7):
    print(f"  s={s}: {res.generator_degrees(s)}")
print()
print(render_chart(res.chart(), "ascii"))

print("the vertical line is the h0 tower; the isolated class four rows up")
print("in internal degree 12 is the periodicity generator.")

print()
print("=== the periodicity class acts invertibly ===")
act = yoneda_action(res, 4, 12)
square = [(s, t) for (s, t) in sorted(act) if s <= 4 and t - s <= 8]
ok = all(act[k].rows == act[k].cols and rref(act[k])[1] == act[k].rows
         for k in square if act[k].cols)
print(f"pairing (s,t) -> (s+4,t+12) bijective on {len(square)} bidegrees: {ok}")

print()
print("=== a periodic resolution: the quotient by the central primitive ===")
m = hopf_quotient(A1, fixtures.algebra_P11())
chart = ext_chart(m, 8, 24)
print(render_chart(chart, "ascii"))
print("csv form:")
print(render_chart(chart, "csv"))

print("=== change of rings ===")
print("Ext over A(1) with coinduced coefficients recovers Ext over the")
print("subalgebra (coefficients are the dual of the quotient):")
for k in (st.A(0, 1), st.E(1)):
    q = hopf_quotient(A1, k)
    shift = A1.top_degree - k.top_degree
    lhs = ext_groups(f2, suspend(q, -shift), 5, 12)
    rhs = ext_chart(trivial_module(k), 5, 12)
    same = lhs.window_equal(rhs, 5, 10) and rhs.window_equal(lhs, 5, 10)
    print(f"  K = {k.name:8s}: entrywise match for s <= 5: {same}")

print()
print("=== shift identities for the augmentation ideal and its dual ===")
ch_f = res.chart()
ch_i = ext_chart(fixtures.load_fixture("I1"), 8, 26)
moved = all(ch_i.get(s, t) == ch_f.get(s + 1, t)
            for s in range(8) for t in range(0, 20))
print("chart(I(1))(s,t) == chart(F2)(s+1,t):", moved)
