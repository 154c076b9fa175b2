#!/usr/bin/env python3
"""The functor calculus on the module zoo: quotients, tensor squares,
free-summand stripping, loops, duality.

Run:  python demos/tour_module_calculus.py
"""

from stmod import fixtures, steenrod as st
from stmod.module import (double, dual, hopf_quotient, margolis_homology,
                          quotient_by_left_ideal, regular_module, suspend,
                          tensor, validate)
from stmod.stable import loop, oloop, reduce_module, selfdual_shift
from stmod.steenrod import sq

A1 = st.A(1)

print("=== cyclic quotients of A(1) ===")
joker = suspend(quotient_by_left_ideal(A1, [sq(3, 1)]), -2)
hz = hopf_quotient(A1, st.A(0, 1))
ku = hopf_quotient(A1, st.E(1))
for name, m in (("Joker", joker), ("HZ", hz), ("kU", ku)):
    print(f"{name:6s} dims {m.dims()}  valid={not validate(m)}  "
          f"self-dual shift {selfdual_shift(m)}")

print()
print("=== the Joker generates the 2-torsion of the Picard group ===")
dec = reduce_module(tensor(joker, joker))
print("J (x) J  =  reduced", dec.reduced_part.dims(),
      " +  free summands at suspensions", dec.free_part)
print("witnesses reassemble to an isomorphism:", dec.verify())

print()
print("=== loop functors (syzygies) ===")
print("Omega J      supported on", loop(joker).degrees())
print("Omega^-1 J   supported on", oloop(joker).degrees())
print("Omega^2 J    supported on", loop(loop(joker)).degrees())
print("Omega^-2 J   supported on", oloop(oloop(joker)).degrees())

print()
print("=== Margolis homology detects freeness ===")
reg = regular_module(A1)
for name, m in (("A(1)", reg), ("Joker", joker), ("HZ", hz)):
    h0 = margolis_homology(m, 0)
    h1 = margolis_homology(m, 1)
    print(f"{name:6s} H(-, Q0) = {h0 or 0}   H(-, Q1) = {h1 or 0}")
print("(both vanish exactly for free modules)")

print()
print("=== duality ===")
print("D(A(1)) is A(1)[-6]; shifts of the Hopf quotients are top-degree")
print("differences:")
for k in (st.A(0, 1), st.E(1), fixtures.algebra_P11()):
    q = hopf_quotient(A1, k)
    print(f"  A(1)//{k.name:12s} shift {selfdual_shift(q)} "
          f"= {A1.top_degree} - {k.top_degree}")

print()
print("=== doubling: regrade over the next algebra ===")
d0 = double(regular_module(st.A(0)))
print("double(A(0)) dims", d0.dims(), "over", d0.algebra.name,
      " (the kU module)")
d1 = double(reg)
print("double(A(1)) dims", d1.dims(), "over", d1.algebra.name,
      " (the quotient A(2)//E(2))")

print()
print("=== the 18-dimensional homogeneous-space fixture ===")
so8 = fixtures.load_fixture("SO8modSp2")
print("SO8modSp2 dims:", so8.dims())
print("self-dual shift:", selfdual_shift(so8))
