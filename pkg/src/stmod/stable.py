"""Stable-category tools for modules over a finite subalgebra.

The key engine is ``reduce_module``: over a connected Frobenius algebra a
vector x with Lambda*x != 0 (Lambda the one-dimensional top class, the
integral) generates a free summand, and the complement is cut out by the
explicit functional m |-> gamma(a*m).  Stripping all free summands yields
the stable representative of a module, from which loop functors, stable
isomorphism tests and self-duality shifts all follow.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .f2linalg import F2Matrix, kernel_basis, rref, solve_matrix, vec_support
from . import steenrod
from .module import (GradedModule, ModuleMap, dual, margolis_homology,
                     regular_module, aug_ideal_module, suspend, tensor)


class InconclusiveIsomorphism(RuntimeError):
    """The isomorphism search ran out of budget without a certificate
    either way.  Distinct from a certified negative (None)."""


@dataclass
class Decomposition:
    """module ~ (+) algebra[d] for d in free_part, plus reduced_part.

    ``witnesses[k]`` embeds the k-th free summand into the original module;
    ``reduced_inclusion`` embeds the reduced part.  Together the images span
    the module (checked by ``verify``).
    """

    module: GradedModule
    free_part: tuple[int, ...]
    reduced_part: GradedModule
    witnesses: tuple[ModuleMap, ...]
    reduced_inclusion: ModuleMap

    def verify(self) -> bool:
        """The witness columns assemble to an isomorphism onto the module."""
        for d in self.module.degrees():
            cols = []
            for w in self.witnesses:
                cols.extend(w.mat(d).columns())
            cols.extend(self.reduced_inclusion.mat(d).columns())
            if len(cols) != self.module.dim(d):
                return False
            mat = F2Matrix.from_cols(cols, self.module.dim(d))
            if rref(mat)[1] != self.module.dim(d):
                return False
        return True


def _submodule_on_kernel(m: GradedModule, constraint_rows) -> tuple[GradedModule, ModuleMap]:
    """The submodule cut out per degree by the given functionals.

    constraint_rows: dict degree -> list of packed row functionals on m_d.
    Returns (C, inclusion).  The kernel must be action-invariant; action
    matrices for C are solved through the inclusion columns.
    """
    basis: dict[int, list[int]] = {}
    for d in m.degrees():
        rows = constraint_rows.get(d, [])
        if not rows:
            basis[d] = [1 << i for i in range(m.dim(d))]
            continue
        mat = F2Matrix.from_rows(rows, m.dim(d))
        basis[d] = kernel_basis(mat)
    labels = {d: tuple(f"c{d}_{k}" for k in range(len(vs)))
              for d, vs in basis.items() if vs}
    incl = {d: F2Matrix.from_cols(vs, m.dim(d)) for d, vs in basis.items() if vs}
    actions: dict[int, dict[int, F2Matrix]] = {}
    for gi in range(len(m.algebra.generators)):
        g = m.algebra.gen_degrees[gi]
        per = {}
        for d, vs in basis.items():
            if not vs or not basis.get(d + g):
                continue
            big = m.action(gi, d) @ incl[d]
            small = solve_matrix(incl[d + g], big)
            if small is None:
                raise ArithmeticError("kernel subspace is not action-invariant")
            per[d] = small
        actions[gi] = per
    sub = GradedModule(m.algebra, labels, actions,
                       meta={"name": f"{m.meta.get('name', '?')}~"})
    inclusion = ModuleMap(sub, m, {d: incl[d] for d in labels})
    return sub, inclusion


def reduce_module(m: GradedModule) -> Decomposition:
    """Split off free summands until the integral acts as zero.

    Deterministic choices: the generator x is the first basis vector (lowest
    degree first) not killed by the integral; the splitting functional gamma
    is the first coordinate of Lambda*x.
    """
    alg = m.algebra
    lam = alg.integral()
    e = lam.degree()
    current = m
    embed = ModuleMap.identity(m)  # current -> m
    free_degrees: list[int] = []
    witnesses: list[ModuleMap] = []
    reg = regular_module(alg)

    while True:
        lam_op = current.element_op(lam)
        found = None
        for d in current.degrees():
            mat = lam_op.mat(d)
            for j in range(mat.cols):
                if mat.col(j):
                    found = (d, j, mat.col(j))
                    break
            if found:
                break
        if found is None:
            break
        d, j, top = found
        gamma_row = 1 << vec_support(top)[0]  # functional on current_(d+e)

        # witness: algebra[d] -> m, b |-> embed(b * x)
        x = 1 << j
        wit_mats = {}
        for bd in reg.degrees():
            cols = []
            for bi in alg.basis_by_degree(bd):
                bx = current.basis_op(bi).apply(d, x)
                cols.append(embed.apply(bd + d, bx))
            wit_mats[bd + d] = F2Matrix.from_cols(cols, m.dim(bd + d))
        witnesses.append(ModuleMap(suspend(reg, d), m, wit_mats))
        free_degrees.append(d)

        # complement: gamma(a * v) = 0 for every a with deg(a) = d + e - deg(v)
        constraints: dict[int, list[int]] = {}
        for vd in current.degrees():
            need = d + e - vd
            rows = []
            for bi in (alg.basis_by_degree(need) if 0 <= need <= alg.top_degree else []):
                op_mat = current.basis_op(bi).mat(vd)
                # row: v |-> gamma(b * v)
                row = 0
                for col in range(op_mat.cols):
                    if op_mat.col(col) & gamma_row:
                        row |= 1 << col
                rows.append(row)
            constraints[vd] = rows
        sub, incl = _submodule_on_kernel(current, constraints)
        embed = embed.compose(incl)
        current = sub

    reduced = current
    dec = Decomposition(module=m, free_part=tuple(sorted(free_degrees)),
                        reduced_part=reduced, witnesses=tuple(witnesses),
                        reduced_inclusion=embed)
    return dec


def loop(m: GradedModule) -> GradedModule:
    """The syzygy functor: reduced part of (augmentation ideal) (x) m."""
    ideal = aug_ideal_module(m.algebra)
    return reduce_module(tensor(ideal, m)).reduced_part


def oloop(m: GradedModule) -> GradedModule:
    """The cosyzygy functor: reduced part of (dual augmentation ideal) (x) m."""
    ideal = aug_ideal_module(m.algebra)
    return reduce_module(tensor(dual(ideal), m)).reduced_part


# ---------------------------------------------------------------------------
# Isomorphism testing


def _available_primitives(alg) -> list[int]:
    out = []
    for s in range(alg.ambient + 1):
        q = steenrod.milnor_primitive(s, alg.ambient)
        if alg.contains_element(q):
            out.append(s)
    return out


def hom_space(m: GradedModule, n: GradedModule) -> list[dict[int, F2Matrix]]:
    """A basis of the space of degree-0 module maps m -> n."""
    if m.algebra != n.algebra:
        raise ValueError("modules live over different algebras")
    degs = sorted(set(m.degrees()) | set(n.degrees()))
    offsets = {}
    total = 0
    for d in degs:
        offsets[d] = total
        total += m.dim(d) * n.dim(d)
    if total == 0:
        return []

    def unknown(d, row, col):  # entry (row, col) of phi_d
        return offsets[d] + row * m.dim(d) + col

    rows = []
    for gi in range(len(m.algebra.generators)):
        g = m.algebra.gen_degrees[gi]
        for d in degs:
            am = m.action(gi, d)          # m_d -> m_{d+g}
            an = n.action(gi, d)          # n_d -> n_{d+g}
            # constraint: an @ phi_d = phi_{d+g} @ am   entrywise
            for r in range(n.dim(d + g)):
                for c in range(m.dim(d)):
                    row = 0
                    for k in range(n.dim(d)):
                        if an.entry(r, k):
                            row ^= 1 << unknown(d, k, c)
                    for k in range(m.dim(d + g)):
                        if am.entry(k, c):
                            row ^= 1 << unknown(d + g, r, k)
                    if row:
                        rows.append(row)
    mat = F2Matrix.from_rows(rows, total)
    sols = kernel_basis(mat)
    out = []
    for v in sols:
        mats = {}
        for d in degs:
            if m.dim(d) and n.dim(d):
                data = []
                for r in range(n.dim(d)):
                    rowbits = 0
                    for c in range(m.dim(d)):
                        if (v >> unknown(d, r, c)) & 1:
                            rowbits |= 1 << c
                    data.append(rowbits)
                mats[d] = F2Matrix(n.dim(d), m.dim(d), tuple(data))
        out.append(mats)
    return out


def _combine(basis_mats, mask):
    mats: dict[int, F2Matrix] = {}
    i = 0
    mm = mask
    while mm:
        if mm & 1:
            for d, mat in basis_mats[i].items():
                mats[d] = mats[d] + mat if d in mats else mat
        mm >>= 1
        i += 1
    return mats


def _is_invertible(mats, m: GradedModule, n: GradedModule) -> bool:
    for d in m.degrees():
        mat = mats.get(d)
        if mat is None:
            if m.dim(d):
                return False
            continue
        if rref(mat)[1] != mat.rows:
            return False
    return True


def iso_test(m: GradedModule, n: GradedModule, *,
             budget: int = 40000, seed: int = 2024) -> ModuleMap | None:
    """Search for an isomorphism m -> n.

    Cheap invariants (graded dimensions, Margolis homology, free ranks)
    rule out quickly; otherwise the intertwining linear system is solved
    and its solution space searched for an invertible element.  A returned
    map is verified; None is a certified negative.  When the solution space
    is too large to sweep and random probing fails, the search raises
    InconclusiveIsomorphism rather than guessing.
    """
    if m.algebra != n.algebra:
        raise ValueError("modules live over different algebras")
    if m.dims() != n.dims():
        return None
    if m.is_zero():
        return ModuleMap.zero(m, n)
    for s in _available_primitives(m.algebra):
        if margolis_homology(m, s) != margolis_homology(n, s):
            return None
    try:
        if m.algebra.basis_dim(m.algebra.top_degree) == 1:
            dm, dn = reduce_module(m), reduce_module(n)
            if dm.free_part != dn.free_part or \
               dm.reduced_part.dims() != dn.reduced_part.dims():
                return None
    except steenrod.NotFrobeniusError:
        pass
    basis_mats = hom_space(m, n)
    h = len(basis_mats)
    if h == 0:
        return None
    # single solutions first, then the full sweep or random probing
    for i in range(h):
        mats = basis_mats[i]
        if _is_invertible(mats, m, n):
            return ModuleMap(m, n, mats)
    if (1 << h) - 1 <= budget:
        for mask in range(1, 1 << h):
            if mask.bit_count() == 1:
                continue
            mats = _combine(basis_mats, mask)
            if _is_invertible(mats, m, n):
                return ModuleMap(m, n, mats)
        return None
    rng = Random(seed)
    for _ in range(budget):
        mask = rng.getrandbits(h)
        if mask == 0:
            continue
        mats = _combine(basis_mats, mask)
        if _is_invertible(mats, m, n):
            return ModuleMap(m, n, mats)
    raise InconclusiveIsomorphism(
        f"no isomorphism found within budget (hom space dimension {h})")


def selfdual_shift(m: GradedModule, stable: bool = False) -> int | None:
    """The d with dual(m) ~ m[-d], if any; stable compares reduced parts."""
    work = reduce_module(m).reduced_part if stable else m
    if work.is_zero():
        return 0
    dm = dual(work)
    ddims = dm.dims()
    candidates = []
    span = (min(dm.degrees()) - max(work.degrees()),
            max(dm.degrees()) - min(work.degrees()))
    for k in range(span[0], span[1] + 1):
        if {d + k: v for d, v in work.dims().items()} == ddims:
            candidates.append(k)
    for k in candidates:
        if iso_test(dm, suspend(work, k)) is not None:
            return -k
    return None


# ---------------------------------------------------------------------------
# Exactness


def check_exact(maps: list[ModuleMap]) -> tuple[int, int, str] | None:
    """Check image = kernel at each interior module of a composable chain.

    maps[i] goes from M_{i+1} to M_i.  Returns None when exact, otherwise
    (interior index, degree, reason) for the first failure.
    """
    for i in range(len(maps) - 1):
        outgoing = maps[i]          # M_{i+1} -> M_i
        incoming = maps[i + 1]      # M_{i+2} -> M_{i+1}
        if incoming.target != outgoing.source:
            raise ValueError(f"maps {i} and {i + 1} are not composable")
        if not outgoing.compose(incoming).is_zero():
            return (i, 0, "composite is nonzero")
        mid = outgoing.source
        for d in mid.degrees():
            rk_out = rref(outgoing.mat(d))[1]
            rk_in = rref(incoming.mat(d - incoming.shift))[1]
            if rk_out + rk_in != mid.dim(d):
                return (i, d, f"im+ker mismatch: rank in {rk_in} + rank out "
                              f"{rk_out} != dim {mid.dim(d)}")
    return None
