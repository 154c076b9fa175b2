#!/usr/bin/env python3
"""A walk through the Milnor-basis arithmetic layer.

Run:  python demos/tour_steenrod_arithmetic.py
"""

from stmod import steenrod as st
from stmod.steenrod import Sq, antipode, coproduct, milnor_primitive, sq

print("=== products in the Milnor basis ===")
s1, s2, s3 = sq(1, 2), sq(2, 2), sq(3, 2)
print("Sq^1 Sq^1           =", s1 * s1)
print("Sq^2 Sq^2           =", s2 * s2)
print("Sq^1 Sq^2 Sq^1      =", s1 * s2 * s1, "   (the A(1) relation)")
print("Sq^2 Sq^3           =", s2 * s3)
print("Sq^4 Sq^1 + Sq^1 Sq^4 =", sq(4, 2) * s1 + s1 * sq(4, 2),
      "  (same element: the Adem form Sq^5 is meaningless in A(1))")

print()
print("=== coproduct and antipode ===")
for a, b in coproduct(sq(2, 2)):
    print("  psi(Sq^2) term:", a, "(x)", b)
print("chi(Sq^3) =", antipode(s3))
q1 = milnor_primitive(1, 1)
print("Q_1 = Sq^1Sq^2 + Sq^2Sq^1 =", q1, "   Q_1^2 =", q1 * q1)

print()
print("=== the finite subalgebras ===")
for n in (0, 1, 2):
    alg = st.A(n)
    print(f"A({n}): dim {alg.dim}, top degree {alg.top_degree}, "
          f"integral {alg.integral()}")
e1 = st.E(1)
print(f"E(1): dim {e1.dim}, exterior on Q_0, Q_1; integral {e1.integral()}")
b = st.subalgebra_closure([sq(2, 1), q1], 1, names=("Sq^2", "P(1,1)"),
                          name="F2(Sq^2,P(1,1))")
print(f"F2(Sq^2, Q_1): dim {b.dim}, commutative={b.is_commutative}, "
      f"coproduct-closed={b.is_sub_hopf}")
print("  (commutative but not a subHopf algebra: psi(Sq^2) needs Sq^1)")

print()
print("=== Wall relations: the defining relations of each A(n) ===")
for n in (0, 1, 2):
    print(f"A({n}):")
    for rel in st.wall_relations(n):
        print(f"   {rel.label}  =  {rel.element()}")

print()
print("=== generator-word expressions from the closure ===")
a1 = st.A(1)
for i, basis_elt in enumerate(a1.basis):
    words = " + ".join(sorted(a1.word_string(w) for w in a1.expressions[i]))
    print(f"  {str(basis_elt):18s} = {words}")
