#!/usr/bin/env python3
"""Spin-orientability of adjoint representations, group by group.

Run:  python demos/tour_spin_checks.py
"""

from stmod.rootspin import (GroupForm, adjoint_spin, cartan_determinant,
                            generate_positive_roots, half_sum, u_n_adjoint_spin)


def show(family, rank):
    rs = generate_positive_roots(family, rank)
    rho = half_sum(rs)
    det = cartan_determinant(rs)
    rep = adjoint_spin(GroupForm.adjoint(rs))
    rho_str = " + ".join(f"{c}*a{i+1}" for i, c in enumerate(rho) if c)
    verdict = "SPIN" if rep.in_lattice else "no Spin"
    print(f"{rs.name:3s} det {det}  |roots+| {len(rs.positive_roots):3d}  "
          f"adjoint: {verdict:8s} rho = {rho_str}")


print("=== exceptional groups ===")
for fam, n in (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)):
    show(fam, n)
print()
print("the E7 obstruction is the fractional coefficient 49/2.")

print()
print("=== classical families (adjoint forms) ===")
for n in range(1, 9):
    show("A", n)
print("(parity: the adjoint form of the special unitary family lifts to")
print(" Spin exactly for even rank)")
print()
for n in range(2, 6):
    show("B", n)
print("(odd orthogonal adjoint forms never lift)")

print()
print("=== unitary groups via the closed form ===")
for n in range(1, 10):
    rep = u_n_adjoint_spin(n)
    print(f"U({n}): {'SPIN' if rep.in_lattice else 'no Spin'}")

print()
print("=== simply connected forms always lift ===")
for fam, n in (("B", 4), ("E", 7)):
    rs = generate_positive_roots(fam, n)
    rep = adjoint_spin(GroupForm.simply_connected(rs))
    print(f"{rs.name} simply connected: {rep.in_lattice} "
          f"(rho has weight coordinates {tuple(map(int, rep.certificate))})")
