"""Minimal free resolutions over a finite subalgebra, and bigraded Ext charts.

A resolution stage is a free module recorded by its generator degrees; the
differential is stored as the list of generator images in the previous
stage.  Stage 0 covers the module by the free module on a basis of
m / (augmentation ideal)m, and each subsequent stage covers the kernel of
the previous differential minimally, degree by degree.  Generator counts by
(stage, internal degree) are the Ext dimensions; ``ext_groups`` recomputes
them (for any coefficient module) by honest rank arithmetic on the Hom
complex, which doubles as an independent check of the minimal chart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2linalg import F2Matrix, kernel_basis, rref, solve, vec_support
from .module import GradedModule
from .steenrod import SubHopfAlgebra


class FreeStage:
    """A free module recorded by generator degrees, with basis (gen, alg)."""

    def __init__(self, algebra: SubHopfAlgebra, gen_degrees: list[int]):
        self.algebra = algebra
        self.gen_degrees = list(gen_degrees)
        self._basis: dict[int, list[tuple[int, int]]] = {}
        self._pos: dict[int, dict[tuple[int, int], int]] = {}

    def add_generator(self, degree: int):
        self.gen_degrees.append(degree)
        self._basis.clear()
        self._pos.clear()

    @property
    def rank(self) -> int:
        return len(self.gen_degrees)

    def basis(self, t: int) -> list[tuple[int, int]]:
        """Basis slots (generator index, algebra basis index) in degree t."""
        if t not in self._basis:
            lst = []
            for gi, gd in enumerate(self.gen_degrees):
                for bi in self.algebra.basis_by_degree(t - gd):
                    lst.append((gi, bi))
            self._basis[t] = lst
            self._pos[t] = {key: k for k, key in enumerate(lst)}
        return self._basis[t]

    def dim(self, t: int) -> int:
        return len(self.basis(t))

    def pos(self, t: int, gi: int, bi: int) -> int:
        self.basis(t)
        return self._pos[t][(gi, bi)]

    def act(self, t: int, alg_idx: int, vec: int) -> int:
        """Left action of algebra basis element alg_idx on a degree-t vector."""
        alg = self.algebra
        da = alg.basis[alg_idx].degree()
        out = 0
        for slot in vec_support(vec):
            gi, bi = self.basis(t)[slot]
            for k in alg.mult(alg_idx, bi):
                out ^= 1 << self.pos(t + da, gi, k)
        return out


@dataclass
class MinimalResolution:
    """A truncated minimal free resolution ... -> P_1 -> P_0 -> m -> 0."""

    module: GradedModule
    s_max: int
    t_max: int
    stages: list[FreeStage]
    images: list[list[int]]  # images[s][g]: packed vector; s=0 into the module

    @property
    def algebra(self) -> SubHopfAlgebra:
        return self.module.algebra

    def generator_degrees(self, s: int) -> list[int]:
        return list(self.stages[s].gen_degrees)

    def diff_matrix(self, s: int, t: int) -> F2Matrix:
        """Matrix of the s-th differential in internal degree t.

        Columns run over the stage-s basis; rows over the stage-(s-1) basis
        (s=0: over the module's degree-t basis).
        """
        stage = self.stages[s]
        if s == 0:
            rows = self.module.dim(t)
            cols = []
            for gi, bi in stage.basis(t):
                img = self.images[0][gi]  # vector in module degree gen_degrees[gi]
                op = self.module.basis_op(bi)
                cols.append(op.apply(stage.gen_degrees[gi], img))
            return F2Matrix.from_cols(cols, rows)
        prev = self.stages[s - 1]
        cols = []
        for gi, bi in stage.basis(t):
            img = self.images[s][gi]
            cols.append(prev.act(stage.gen_degrees[gi], bi, img))
        return F2Matrix.from_cols(cols, prev.dim(t))

    def chart(self) -> "ExtChart":
        entries: dict[tuple[int, int], int] = {}
        for s, stage in enumerate(self.stages):
            for t in stage.gen_degrees:
                if t <= self.t_max:
                    entries[(s, t)] = entries.get((s, t), 0) + 1
        return ExtChart(entries=entries, s_max=self.s_max, t_max=self.t_max,
                        certified_t=self.t_max - self.algebra.top_degree)

    def is_minimal(self) -> bool:
        """Differentials land in (augmentation ideal) * (previous stage)."""
        unit = self.algebra.unit_index
        for s in range(1, len(self.stages)):
            prev = self.stages[s - 1]
            for gi, img in enumerate(self.images[s]):
                t = self.stages[s].gen_degrees[gi]
                for slot in vec_support(img):
                    _, bi = prev.basis(t)[slot]
                    if bi == unit:
                        return False
        return True

    def check_exactness(self) -> bool:
        """d o d = 0 and homology vanishes at interior stages (trust region)."""
        for s in range(1, len(self.stages)):
            for t in range(self._t_min(), self.t_max + 1):
                m1 = self.diff_matrix(s - 1, t)
                m2 = self.diff_matrix(s, t)
                prod = m1 @ m2
                if not prod.is_zero():
                    return False
                if rref(m2)[1] != m1.cols - rref(m1)[1]:
                    return False
        return True

    def _t_min(self) -> int:
        return min(self.module.degrees(), default=0)


def minimal_resolution(m: GradedModule, s_max: int, t_max: int) -> MinimalResolution:
    """Resolve m minimally up to homological degree s_max and internal
    degree t_max; kernels are covered by new generators in ascending degree."""
    alg = m.algebra
    t_min = min(m.degrees(), default=0)
    stages: list[FreeStage] = []
    images: list[list[int]] = []

    # stage 0: cover m / (positive part)m
    stage0 = FreeStage(alg, [])
    imgs0: list[int] = []
    for t in range(t_min, t_max + 1):
        if not m.dim(t):
            continue
        span_rows: list[int] = []
        for da in range(1, t - t_min + 1):
            for bi in (alg.basis_by_degree(da) if da <= alg.top_degree else []):
                mat = m.basis_op(bi).mat(t - da)
                span_rows.extend(c for c in mat.columns() if c)
        red, _, pivots = rref(F2Matrix.from_rows(span_rows, m.dim(t)))
        reduced = [((r & -r).bit_length() - 1, r) for r in red.data if r]

        def project(vec):
            for piv, row in reduced:
                if (vec >> piv) & 1:
                    vec ^= row
            return vec

        chosen: list[tuple[int, int]] = []  # (pivot, reduced vector)
        for i in range(m.dim(t)):
            v = project(1 << i)
            for piv, row in chosen:
                if (v >> piv) & 1:
                    v ^= row
            if v:
                stage0.add_generator(t)
                imgs0.append(1 << i)
                chosen.append(((v & -v).bit_length() - 1, v))
    stages.append(stage0)
    images.append(imgs0)

    for s in range(1, s_max + 1):
        prev = stages[s - 1]
        stage = FreeStage(alg, [])
        imgs: list[int] = []
        kernels: dict[int, list[int]] = {}
        lo = min(prev.gen_degrees, default=t_max + 1)
        for t in range(lo, t_max + 1):
            ker = kernel_basis(diff_with(stages, images, m, s - 1, t))
            kernels[t] = ker
            # span of (positive part) * (lower kernels)
            rows: list[int] = []
            for da in range(1, t - lo + 1):
                if da > alg.top_degree:
                    continue
                for bi in alg.basis_by_degree(da):
                    for w in kernels.get(t - da, []):
                        v = prev.act(t - da, bi, w)
                        if v:
                            rows.append(v)
            red, _, _ = rref(F2Matrix.from_rows(rows, prev.dim(t)))
            reduced = [((r & -r).bit_length() - 1, r) for r in red.data if r]
            chosen: list[tuple[int, int]] = []
            for w in ker:
                v = w
                for piv, row in reduced:
                    if (v >> piv) & 1:
                        v ^= row
                for piv, row in chosen:
                    if (v >> piv) & 1:
                        v ^= row
                if v:
                    stage.add_generator(t)
                    imgs.append(v)
                    chosen.append(((v & -v).bit_length() - 1, v))
        stages.append(stage)
        images.append(imgs)

    return MinimalResolution(module=m, s_max=s_max, t_max=t_max,
                             stages=stages, images=images)


def diff_with(stages, images, m, s, t):
    """diff_matrix while the resolution record is still under construction."""
    res = MinimalResolution.__new__(MinimalResolution)
    res.module = m
    res.stages = stages
    res.images = images
    return MinimalResolution.diff_matrix(res, s, t)


# ---------------------------------------------------------------------------
# Charts


@dataclass
class ExtChart:
    """Bigraded dimensions (s, t) -> dim, with the computed window recorded.

    Entries with t <= certified_t are complete; entries beyond are still
    exact for these algorithms but kept flagged as provisional at the
    truncation boundary.
    """

    entries: dict[tuple[int, int], int]
    s_max: int
    t_max: int
    certified_t: int

    def get(self, s: int, t: int) -> int:
        return self.entries.get((s, t), 0)

    def items(self):
        return sorted((k, v) for k, v in self.entries.items() if v)

    def window_equal(self, other: "ExtChart", s_max: int, t_max: int,
                     shift: tuple[int, int] = (0, 0)) -> bool:
        """Entrywise equality self(s, t) == other(s + ds, t + dt) on a window."""
        ds, dt = shift
        lows = [t for (_, t) in self.entries] + [t - dt for (_, t) in other.entries]
        t_lo = min(lows + [0]) - 1
        for s in range(0, s_max + 1):
            for t in range(t_lo, t_max + 1):
                if self.get(s, t) != other.get(s + ds, t + dt):
                    return False
        return True


def ext_chart(m: GradedModule, s_max: int, t_max: int) -> ExtChart:
    """Ext^{s,t}(m, F2) dimensions, read off a minimal resolution."""
    return minimal_resolution(m, s_max, t_max).chart()


def ext_groups(m: GradedModule, n: GradedModule, s_max: int,
               t_max: int, resolution: MinimalResolution | None = None) -> ExtChart:
    """Ext^{s,t}(m, n) via rank arithmetic on the Hom complex Hom(P_*, n).

    Independent of minimality bookkeeping: with phi lowering internal degree
    by t, C^{s,t} = (+)_g n_{deg(g) - t} over stage-s generators, and the
    differential is composition with d_{s+1}.  Ext = ker/im dimensionwise.
    """
    if m.algebra != n.algebra:
        raise ValueError("modules live over different algebras")
    n_degs = n.degrees()
    if not n_degs:
        return ExtChart({}, s_max, t_max, t_max)
    res_t = t_max + max(0, max(n_degs))
    res = resolution
    if res is None or len(res.stages) <= s_max + 1 or res.t_max < res_t:
        res = minimal_resolution(m, s_max + 1, res_t)

    def hom_basis(s: int, t: int) -> list[tuple[int, int, int]]:
        out = []
        for gi, gd in enumerate(res.stages[s].gen_degrees):
            for i in range(n.dim(gd - t)):
                out.append((gi, gd - t, i))
        return out

    def delta(s: int, t: int) -> F2Matrix:
        """C^{s,t} -> C^{s+1,t}: phi |-> phi o d_{s+1}."""
        src = hom_basis(s, t)
        dst = hom_basis(s + 1, t)
        pos = {key: k for k, key in enumerate(src)}
        stage = res.stages[s + 1]
        prev = res.stages[s]
        mat_rows = len(dst)
        data = [0] * mat_rows
        for r, (gj, nd, i) in enumerate(dst):
            img = res.images[s + 1][gj]  # in prev at degree gd_j
            gd_j = stage.gen_degrees[gj]
            for slot in vec_support(img):
                gi, bi = prev.basis(gd_j)[slot]
                # contribution: phi(gen_i) hit by algebra element bi, row-level
                op = n.basis_op(bi)
                src_deg = prev.gen_degrees[gi] - t
                mat = op.mat(src_deg)
                # (delta phi)(gen_j) component i of n_{gd_j - t}
                for c in range(mat.cols):
                    if mat.entry(i, c):
                        key = (gi, src_deg, c)
                        data[r] ^= 1 << pos[key]
        return F2Matrix(mat_rows, len(src), tuple(data))

    entries: dict[tuple[int, int], int] = {}
    gen_degrees_all = [gd for st_ in res.stages for gd in st_.gen_degrees]
    if not gen_degrees_all:
        return ExtChart({}, s_max, t_max, t_max - m.algebra.top_degree)
    t_lo = min(gd for gd in gen_degrees_all) - max(n_degs)
    t_hi = min(t_max, max(gen_degrees_all) - min(n_degs))
    for t in range(t_lo, t_hi + 1):
        prev_rank = 0
        for s in range(0, s_max + 1):
            dim_c = len(hom_basis(s, t))
            rk = rref(delta(s, t))[1]
            val = (dim_c - rk) - prev_rank
            if val < 0:
                raise ArithmeticError(
                    f"negative Ext dimension at (s,t)=({s},{t}); "
                    "the Hom complex is inconsistent")
            if val:
                entries[(s, t)] = val
            prev_rank = rk
    return ExtChart(entries, s_max, t_max,
                    t_max - m.algebra.top_degree)


# ---------------------------------------------------------------------------
# Yoneda pairing


def yoneda_action(res: MinimalResolution, s0: int, t0: int,
                  cocycle: dict[int, int] | int = 0) -> dict[tuple[int, int], F2Matrix]:
    """Chain-map lift of a stage-s0 cocycle of a resolution of the trivial
    module, and the induced pairing Ext^{s,t} -> Ext^{s+s0,t+t0}.

    ``cocycle`` selects stage-s0 generators in degree t0 (an index, or a
    packed vector over those generators).  Returns matrices between the
    chart bases (generators in the given bidegrees).
    """
    mod = res.module
    if mod.dims() != {0: 1}:
        raise ValueError("Yoneda lifts are implemented against a resolution "
                         "of the trivial module")
    gens_s0 = [gi for gi, gd in enumerate(res.stages[s0].gen_degrees) if gd == t0]
    if not gens_s0:
        raise ValueError(f"no stage-{s0} generators in degree {t0}")
    if isinstance(cocycle, int):
        select = {gens_s0[cocycle]: 1}
    else:
        select = cocycle

    # Phi_0 : P_{s0} -> P_0 lifting phi through the augmentation
    lifts: list[dict[int, int]] = []  # lifts[k][gi] = vector in stage k at deg(gi)-t0
    phi0: dict[int, int] = {}
    stage0 = res.stages[0]
    for gi, gd in enumerate(res.stages[s0].gen_degrees):
        value = select.get(gi, 0) & 1
        target = (1 << 0) if value and mod.dim(0) else 0
        if gd - t0 < 0 and target:
            raise ArithmeticError("cocycle lift escapes the resolution window")
        mat = res.diff_matrix(0, gd - t0)
        x = solve(mat, target if mod.dim(gd - t0) else 0)
        if x is None:
            raise ArithmeticError("augmentation lift failed")
        phi0[gi] = x
    lifts.append(phi0)

    for k in range(1, len(res.stages) - s0):
        prev_lift = lifts[k - 1]
        cur: dict[int, int] = {}
        stage_src = res.stages[k + s0]
        for gj, gd in enumerate(stage_src.gen_degrees):
            img = res.images[k + s0][gj]  # in stage k+s0-1 at degree gd
            rhs = 0
            prev_stage = res.stages[k + s0 - 1]
            for slot in vec_support(img):
                gi, bi = prev_stage.basis(gd)[slot]
                v = prev_lift.get(gi, 0)
                if v:
                    rhs ^= res.stages[k - 1].act(prev_stage.gen_degrees[gi] - t0,
                                                 bi, v)
            mat = res.diff_matrix(k, gd - t0)
            x = solve(mat, rhs)
            if x is None:
                raise ArithmeticError("chain-map lift failed; resolution is "
                                      "not exact in the needed range")
            cur[gj] = x
        lifts.append(cur)

    unit = res.algebra.unit_index
    out: dict[tuple[int, int], F2Matrix] = {}
    chart = res.chart()
    for (s, t), _ in chart.items():
        s2, t2 = s + s0, t + t0
        if s >= len(lifts) or s2 >= len(res.stages) or t2 > res.t_max:
            continue
        src_gens = [gi for gi, gd in enumerate(res.stages[s].gen_degrees) if gd == t]
        dst_gens = [gi for gi, gd in enumerate(res.stages[s2].gen_degrees) if gd == t2]
        src_col = {gi: j for j, gi in enumerate(src_gens)}
        lift = lifts[s]
        data = []
        for gu in dst_gens:
            v = lift.get(gu, 0)
            rowbits = 0
            stage_s = res.stages[s]
            for slot in vec_support(v):
                gi, bi = stage_s.basis(t)[slot]
                if bi == unit and gi in src_col:
                    rowbits |= 1 << src_col[gi]
            data.append(rowbits)
        out[(s, t)] = F2Matrix(len(dst_gens), len(src_gens), tuple(data))
    return out


# ---------------------------------------------------------------------------
# Rendering


def render_chart(c: ExtChart, format: str = "ascii") -> str:
    """Deterministic chart renderings: ascii dots, csv rows, or bare svg."""
    if format == "csv":
        lines = ["s,t,dim"]
        for (s, t), v in c.items():
            lines.append(f"{s},{t},{v}")
        return "\n".join(lines) + "\n"
    xs = [t - s for (s, t), v in c.items()]
    ys = [s for (s, t), v in c.items()]
    x_lo, x_hi = (min(xs), max(xs)) if xs else (0, 0)
    x_lo = min(x_lo, 0)
    y_hi = max(ys) if ys else 0
    if format == "ascii":
        lines = []
        for s in range(y_hi, -1, -1):
            cells = []
            for x in range(x_lo, x_hi + 1):
                v = c.get(s, x + s)
                cells.append("  " if v == 0 else (f" {v}" if v < 10 else " +"))
            lines.append(f"{s:3d} |" + "".join(cells))
        lines.append("    +" + "--" * (x_hi - x_lo + 1))
        marks = []
        for x in range(x_lo, x_hi + 1):
            marks.append(f"{x:2d}" if x % 5 == 0 else "  ")
        lines.append("     " + "".join(marks))
        return "\n".join(lines) + "\n"
    if format == "svg":
        unit = 20
        w = (x_hi - x_lo + 2) * unit
        h = (y_hi + 2) * unit
        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" '
                 f'height="{h}" viewBox="0 0 {w} {h}">']
        for x in range(x_lo, x_hi + 2):
            px = (x - x_lo) * unit + unit // 2
            parts.append(f'<line x1="{px}" y1="0" x2="{px}" y2="{h}" '
                         'stroke="#ccc" stroke-width="1"/>')
        for y in range(0, y_hi + 2):
            py = h - (y * unit + unit // 2)
            parts.append(f'<line x1="0" y1="{py}" x2="{w}" y2="{py}" '
                         'stroke="#ccc" stroke-width="1"/>')
        for (s, t), v in c.items():
            px = (t - s - x_lo) * unit + unit // 2
            py = h - (s * unit + unit // 2)
            parts.append(f'<circle cx="{px}" cy="{py}" r="3"/>')
            if v > 1:
                parts.append(f'<text x="{px + 4}" y="{py - 4}" '
                             f'font-size="8">{v}</text>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"
    raise ValueError(f"unknown chart format {format!r}")
