"""Milnor-basis arithmetic in finite subalgebras of the mod-2 Steenrod algebra.

Elements live in an ambient algebra ``A(n)`` whose basis consists of the
symbols ``Sq(r1,...,rl)`` dual to the monomials ``xi_1^r1 ... xi_l^rl`` in
the truncated polynomial dual; the profile constraint is ``r_i < 2^(n+2-i)``
with ``r_i = 0`` for ``i > n+1``.  On top of the raw arithmetic (product,
coproduct, antipode) this module builds finite subalgebras by closing a
generator set multiplicatively, recording how each basis element is spelled
as a sum of generator words.  Those word expressions are what lets modules
be specified by generator actions alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .f2linalg import F2Span

#: Largest n for which the A(n) presets are enabled.  The instances here are
#: exponentially sized (dim A(n) = 2^((n+1)(n+2)/2)); raise this knob
#: explicitly if you really want A(4) and beyond.
MAX_AMBIENT = 3


class AmbientMismatchError(ValueError):
    """Raised when elements of different ambient algebras are combined."""


class OutOfAmbientError(ValueError):
    """Raised when an element does not fit the requested ambient profile."""


class NotFrobeniusError(ValueError):
    """Raised when an algebra has no one-dimensional top degree."""


# ---------------------------------------------------------------------------
# Milnor basis bookkeeping


def milnor_degree(r: tuple[int, ...]) -> int:
    return sum(ri * (2 ** (i + 1) - 1) for i, ri in enumerate(r))


def fits_profile(r: tuple[int, ...], n: int) -> bool:
    if len(r) > n + 1:
        return False
    return all(ri < 2 ** (n + 1 - i) for i, ri in enumerate(r))


def _normalize(r: tuple[int, ...]) -> tuple[int, ...]:
    lst = list(r)
    while lst and lst[-1] == 0:
        lst.pop()
    if any(x < 0 for x in lst):
        raise ValueError("Milnor exponents must be nonnegative")
    return tuple(lst)


@lru_cache(maxsize=None)
def milnor_basis(n: int) -> tuple[tuple[int, ...], ...]:
    """All Milnor basis exponent tuples of A(n), sorted by (degree, tuple)."""
    if n < 0:
        raise ValueError("ambient index must be nonnegative")
    ranges = [range(2 ** (n + 1 - i)) for i in range(n + 1)]
    out = []

    def rec(i, acc):
        if i == len(ranges):
            out.append(_normalize(tuple(acc)))
            return
        for v in ranges[i]:
            acc.append(v)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    uniq = sorted(set(out), key=lambda t: (milnor_degree(t), t))
    return tuple(uniq)


@lru_cache(maxsize=None)
def _basis_index(n: int) -> dict[tuple[int, ...], int]:
    return {t: i for i, t in enumerate(milnor_basis(n))}


def multinomial_odd(parts: tuple[int, ...]) -> bool:
    """Parity of a multinomial coefficient: odd iff the binary digits of
    the parts are pairwise disjoint (no carries in the sum)."""
    total = 0
    folded = 0
    for p in parts:
        total += p
        folded ^= p
    return total == folded


def _term_product(r: tuple[int, ...], s: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Product of two Milnor basis elements, as a set of basis terms (mod 2).

    Enumerates the allowable matrices X = (x_ij) with row sums
    sum_j x_ij 2^j = r_i and column sums sum_i x_ij = s_j; each matrix
    contributes Sq(t_1, t_2, ...) with t_k the k-th antidiagonal sum,
    weighted by the product of the antidiagonal multinomials mod 2.
    """
    m, n = len(r), len(s)
    if m == 0:
        return frozenset({s})
    if n == 0:
        return frozenset({r})
    out: set[tuple[int, ...]] = set()
    inner = [[0] * (n + 1) for _ in range(m + 1)]  # inner[i][j] for i,j >= 1
    col_used = [0] * (n + 1)

    def finish():
        # boundary entries: x_i0 = row residue, x_0j = column residue
        x0 = [0] + [s[j - 1] - col_used[j] for j in range(1, n + 1)]
        diag_t = []
        for k in range(1, m + n + 1):
            parts = []
            for i in range(max(0, k - n), min(k, m) + 1):
                j = k - i
                if i == 0:
                    parts.append(x0[j])
                elif j == 0:
                    parts.append(row_residue[i])
                else:
                    parts.append(inner[i][j])
            if not multinomial_odd(tuple(parts)):
                return
            diag_t.append(sum(parts))
        t = _normalize(tuple(diag_t))
        if t in out:
            out.remove(t)
        else:
            out.add(t)

    row_residue = [0] * (m + 1)

    def place(i, j, rem):
        if j > n:
            row_residue[i] = rem
            if i == m:
                finish()
            else:
                place(i + 1, 1, r[i])
            return
        w = 1 << j
        x = 0
        while x * w <= rem and col_used[j] + x <= s[j - 1]:
            inner[i][j] = x
            col_used[j] += x
            place(i, j + 1, rem - x * w)
            col_used[j] -= x
            x += 1
        inner[i][j] = 0

    place(1, 1, r[0])
    return frozenset(out)


@lru_cache(maxsize=None)
def _term_product_cached(r, s):
    return _term_product(r, s)


def _term_coproduct(r: tuple[int, ...]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All splittings Sq(a) (x) Sq(b) with a + b = r componentwise."""
    pairs = [((), ())]
    for ri in r:
        pairs = [(a + (x,), b + (ri - x,)) for a, b in pairs for x in range(ri + 1)]
    return [(_normalize(a), _normalize(b)) for a, b in pairs]


# ---------------------------------------------------------------------------
# Elements


@dataclass(frozen=True)
class SteenrodElt:
    """An F_2-linear combination of Milnor basis elements of a fixed A(n)."""

    ambient: int
    terms: frozenset[tuple[int, ...]]

    def __post_init__(self):
        for t in self.terms:
            if t != _normalize(t):
                raise ValueError(f"non-normalized exponent tuple {t}")
            if not fits_profile(t, self.ambient):
                raise OutOfAmbientError(f"Sq{t} does not lie in A({self.ambient})")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({milnor_degree(t) for t in self.terms}) <= 1

    def degree(self) -> int:
        degs = {milnor_degree(t) for t in self.terms}
        if len(degs) != 1:
            raise ValueError("degree of a zero or inhomogeneous element")
        return degs.pop()

    def sorted_terms(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=lambda t: (milnor_degree(t), t))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "SteenrodElt"):
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"A({self.ambient}) element combined with A({other.ambient}) element")

    def __add__(self, other: "SteenrodElt") -> "SteenrodElt":
        self._check(other)
        return SteenrodElt(self.ambient, self.terms ^ other.terms)

    def __mul__(self, other: "SteenrodElt") -> "SteenrodElt":
        self._check(other)
        acc: set[tuple[int, ...]] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= _term_product_cached(a, b)
        for t in acc:
            # A(n) is closed under the product; a profile escape would mean
            # the ambient tags were wrong in the first place
            if not fits_profile(t, self.ambient):
                raise OutOfAmbientError(
                    f"product escaped A({self.ambient}) at Sq{t}")
        return SteenrodElt(self.ambient, frozenset(acc))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for t in self.sorted_terms():
            bits.append("1" if not t else "Sq(" + ",".join(str(x) for x in t) + ")")
        return " + ".join(bits)

    __repr__ = __str__


def zero(ambient: int) -> SteenrodElt:
    return SteenrodElt(ambient, frozenset())


def unit(ambient: int) -> SteenrodElt:
    return SteenrodElt(ambient, frozenset({()}))


def Sq(*r: int, ambient: int) -> SteenrodElt:
    """The Milnor basis element Sq(r1,...,rl); Sq(k) is the classical Sq^k."""
    return SteenrodElt(ambient, frozenset({_normalize(tuple(r))}))


def sq(k: int, ambient: int) -> SteenrodElt:
    return unit(ambient) if k == 0 else Sq(k, ambient=ambient)


def milnor_primitive(s: int, ambient: int) -> SteenrodElt:
    """The s-th Milnor primitive Q_s, dual to xi_{s+1}.

    Q_0 = Sq(1) and Q_s = Sq^{2^s} Q_{s-1} + Q_{s-1} Sq^{2^s}; in the Milnor
    basis this is the length-(s+1) tuple (0,...,0,1).  Q_s squares to zero.
    """
    if s < 0:
        raise ValueError("primitive index must be nonnegative")
    if s > ambient:
        raise OutOfAmbientError(f"Q_{s} does not lie in A({ambient})")
    return SteenrodElt(ambient, frozenset({(0,) * s + (1,)}))


def milnor_product(a: SteenrodElt, b: SteenrodElt) -> SteenrodElt:
    """Product in the Milnor basis (the matrix-enumeration rule)."""
    return a * b


def coproduct(e: SteenrodElt) -> list[tuple[SteenrodElt, SteenrodElt]]:
    """The full coproduct as a list of tensor pairs (mod-2 collapsed)."""
    acc: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    for t in e.terms:
        for pair in _term_coproduct(t):
            acc ^= {pair}
    n = e.ambient
    pairs = sorted(acc, key=lambda p: (milnor_degree(p[0]), p[0], p[1]))
    return [(SteenrodElt(n, frozenset({a})), SteenrodElt(n, frozenset({b})))
            for a, b in pairs]


@lru_cache(maxsize=None)
def _term_antipode(t: tuple[int, ...], ambient: int) -> frozenset[tuple[int, ...]]:
    if not t:
        return frozenset({()})
    acc: set[tuple[int, ...]] = set()
    acc ^= {t}
    for a, b in _term_coproduct(t):
        if not a or not b:
            continue  # proper part only
        chi_a = _term_antipode(a, ambient)
        for ca in chi_a:
            acc ^= _term_product_cached(ca, b)
    return frozenset(acc)


def antipode(e: SteenrodElt) -> SteenrodElt:
    """The antipode, via the recursion chi(x) = x + sum chi(x') x''."""
    acc: set[tuple[int, ...]] = set()
    for t in e.terms:
        acc ^= _term_antipode(t, e.ambient)
    return SteenrodElt(e.ambient, frozenset(acc))


# ---------------------------------------------------------------------------
# Subalgebras


def _elt_to_vec(e: SteenrodElt) -> int:
    idx = _basis_index(e.ambient)
    v = 0
    for t in e.terms:
        v |= 1 << idx[t]
    return v


def _vec_to_elt(v: int, ambient: int) -> SteenrodElt:
    basis = milnor_basis(ambient)
    terms = {basis[j] for j in range(v.bit_length()) if (v >> j) & 1}
    return SteenrodElt(ambient, frozenset(terms))


Word = tuple[int, ...]  # indices into the generator list


class SubHopfAlgebra:
    """A finite subalgebra of an ambient A(n), with generator-word data.

    ``basis`` is a linearly independent, multiplicatively closed spanning
    set containing the unit; ``expressions[i]`` is a set of generator words
    (tuples of generator indices, the empty word meaning 1) whose sum
    multiplies out to ``basis[i]``.
    """

    def __init__(self, ambient: int, name: str,
                 generators: tuple[SteenrodElt, ...], gen_names: tuple[str, ...],
                 basis: tuple[SteenrodElt, ...],
                 expressions: tuple[frozenset[Word], ...],
                 kind: str = "custom", kind_param: int = -1):
        self.ambient = ambient
        self.name = name
        self.generators = tuple(generators)
        self.gen_names = tuple(gen_names)
        self.basis = tuple(basis)
        self.expressions = tuple(expressions)
        self.kind = kind  # "A", "E" or "custom"; presets tag themselves
        self.kind_param = kind_param
        self._span: F2Span | None = None
        self._mult_table: dict = {}
        self._flags: dict = {}

    # -- basic shape ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def gen_degrees(self) -> tuple[int, ...]:
        return tuple(g.degree() for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({b.degree() for b in self.basis}))

    @property
    def top_degree(self) -> int:
        return max(b.degree() for b in self.basis)

    def basis_by_degree(self, d: int) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.degree() == d]

    def basis_dim(self, d: int) -> int:
        return len(self.basis_by_degree(d))

    @property
    def unit_index(self) -> int:
        return next(i for i, b in enumerate(self.basis) if b.terms == frozenset({()}))

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubHopfAlgebra)
                and self.ambient == other.ambient
                and self.basis == other.basis
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ambient, self.generators, self.basis))

    def __str__(self):
        return self.name

    # -- membership and decomposition ---------------------------------------

    def decompose(self, e: SteenrodElt) -> list[int]:
        """Coefficients of e over the subalgebra basis (indices with 1)."""
        if e.ambient != self.ambient:
            raise AmbientMismatchError("element from a different ambient algebra")
        vec = _elt_to_vec(e)
        residual, combo = self._span.reduce(vec, frozenset())
        if residual:
            raise ValueError(f"{e} does not lie in {self.name}")
        return sorted(combo)

    def contains_element(self, e: SteenrodElt) -> bool:
        if e.ambient != self.ambient:
            return False
        return self._span.reduce(_elt_to_vec(e))[0] == 0

    def is_subalgebra_of(self, other: "SubHopfAlgebra") -> bool:
        if self.ambient != other.ambient:
            return False
        return all(other.contains_element(b) for b in self.basis)

    # -- multiplicative structure --------------------------------------------

    def mult(self, i: int, j: int) -> tuple[int, ...]:
        """basis[i] * basis[j] decomposed over the basis (sorted indices)."""
        key = (i, j)
        hit = self._mult_table.get(key)
        if hit is None:
            hit = tuple(self.decompose(self.basis[i] * self.basis[j]))
            self._mult_table[key] = hit
        return hit

    # -- Hopf-theoretic flags --------------------------------------------------

    @property
    def is_commutative(self) -> bool:
        if "commutative" not in self._flags:
            self._flags["commutative"] = all(
                (g * h).terms == (h * g).terms
                for g in self.generators for h in self.generators)
        return self._flags["commutative"]

    @property
    def is_sub_hopf(self) -> bool:
        """True when the span is closed under the coproduct."""
        if "sub_hopf" not in self._flags:
            ok = True
            for b in self.basis:
                left: dict[tuple[int, ...], int] = {}
                right: dict[tuple[int, ...], int] = {}
                idx = _basis_index(self.ambient)
                for t in b.terms:
                    for a, c in _term_coproduct(t):
                        left[a] = left.get(a, 0) ^ (1 << idx[c])
                        right[c] = right.get(c, 0) ^ (1 << idx[a])
                for vec in list(left.values()) + list(right.values()):
                    if vec and self._span.reduce(vec)[0] != 0:
                        ok = False
                        break
                if not ok:
                    break
            self._flags["sub_hopf"] = ok
        return self._flags["sub_hopf"]

    @property
    def antipode_closed(self) -> bool:
        if "antipode" not in self._flags:
            self._flags["antipode"] = all(
                self._span.reduce(_elt_to_vec(antipode(b)))[0] == 0
                for b in self.basis)
        return self._flags["antipode"]

    def integral(self) -> SteenrodElt:
        """The top-degree basis element; requires a one-dimensional top."""
        top = self.basis_by_degree(self.top_degree)
        if len(top) != 1:
            raise NotFrobeniusError(
                f"{self.name} has a {len(top)}-dimensional top degree")
        return self.basis[top[0]]

    def evaluate_word(self, word: Word) -> SteenrodElt:
        e = unit(self.ambient)
        for gi in word:
            e = e * self.generators[gi]
        return e

    def word_string(self, word: Word) -> str:
        return "1" if not word else "".join(self.gen_names[g] for g in word)


def subalgebra_closure(gens, ambient: int, *, names=None, name=None,
                       kind="custom", kind_param=-1) -> SubHopfAlgebra:
    """Close a generator set multiplicatively inside A(ambient).

    Breadth-first over right multiplication by the generators; each new
    echelon vector remembers the word combination that produced it, with
    words evaluating to zero pruned from the recorded expressions.
    """
    gens = tuple(gens)
    for g in gens:
        if g.ambient != ambient:
            raise AmbientMismatchError("generator from a different ambient algebra")
        if g.is_zero() or not g.is_homogeneous() or g.degree() <= 0:
            raise ValueError("generators must be homogeneous of positive degree")
    if names is None:
        names = tuple(str(g) for g in gens)
    span = F2Span()
    raw_words: list[frozenset[Word]] = []   # expression of the i-th inserted vector
    residual_vecs: list[int] = []
    resid_exprs: list[frozenset[Word]] = []
    queue: list[tuple[SteenrodElt, frozenset[Word]]] = []

    def push(e: SteenrodElt, words: frozenset[Word]):
        vec = _elt_to_vec(e)
        residual, combo = span.reduce(vec, frozenset())
        if residual == 0:
            return
        # reduce() reports which raw inserted vectors were folded in, so the
        # residual's expression is the new words plus those vectors' words
        expr = words
        for i in sorted(combo):
            expr = expr ^ raw_words[i]
        span.add(vec, frozenset({len(raw_words)}))
        raw_words.append(words)
        residual_vecs.append(residual)
        resid_exprs.append(expr)
        queue.append((e, words))

    push(unit(ambient), frozenset({()}))
    qi = 0
    while qi < len(queue):
        e, words = queue[qi]
        qi += 1
        for gi, g in enumerate(gens):
            child = e * g
            if child.is_zero():
                continue
            push(child, frozenset(w + (gi,) for w in words))

    # canonical order: by degree, then by echelon vector
    order = sorted(range(len(residual_vecs)),
                   key=lambda i: (_vec_to_elt(residual_vecs[i], ambient).degree(),
                                  residual_vecs[i]))
    basis = []
    exprs = []
    for i in order:
        elt = _vec_to_elt(residual_vecs[i], ambient)
        live = frozenset(w for w in resid_exprs[i]
                         if not _word_value(gens, ambient, w).is_zero())
        basis.append(elt)
        exprs.append(live)
    alg = SubHopfAlgebra(ambient=ambient,
                         name=name or ("F_2(" + ", ".join(names) + ")"),
                         generators=gens, gen_names=tuple(names),
                         basis=tuple(basis), expressions=tuple(exprs),
                         kind=kind, kind_param=kind_param)
    # rebuild the span so that payloads refer to sorted basis positions
    fresh = F2Span()
    for i, b in enumerate(alg.basis):
        fresh.add(_elt_to_vec(b), frozenset({i}))
    alg._span = fresh
    return alg


def _word_value(gens, ambient, word: Word) -> SteenrodElt:
    e = unit(ambient)
    for gi in word:
        e = e * gens[gi]
    return e


@lru_cache(maxsize=None)
def A(n: int, ambient: int | None = None) -> SubHopfAlgebra:
    """The subalgebra A(n) generated by Sq^1, ..., Sq^{2^n}.

    With ambient left at its default the basis is the full Milnor basis of
    A(n); passing a larger ambient embeds A(n) in A(ambient).
    """
    if ambient is None:
        ambient = n
    if not 0 <= n <= ambient:
        raise ValueError("need 0 <= n <= ambient")
    if ambient > MAX_AMBIENT:
        raise ValueError(
            f"A({ambient}) is disabled by default (dim 2^((n+1)(n+2)/2)); "
            "raise stmod.steenrod.MAX_AMBIENT to construct it anyway")
    gens = tuple(sq(2 ** i, ambient) for i in range(n + 1))
    names = tuple(f"Sq^{2**i}" for i in range(n + 1))
    label = f"A({n})" if ambient == n else f"A({n})<A({ambient})"
    return subalgebra_closure(gens, ambient, names=names, name=label,
                              kind="A", kind_param=n)


@lru_cache(maxsize=None)
def E(n: int, ambient: int | None = None) -> SubHopfAlgebra:
    """The exterior subalgebra E(n) on the Milnor primitives Q_0, ..., Q_n."""
    if ambient is None:
        ambient = n
    if not 0 <= n <= ambient:
        raise ValueError("need 0 <= n <= ambient")
    if ambient > MAX_AMBIENT:
        raise ValueError(
            f"E({n}) inside A({ambient}) is disabled by default; "
            "raise stmod.steenrod.MAX_AMBIENT to construct it anyway")
    gens = tuple(milnor_primitive(s, ambient) for s in range(n + 1))
    names = tuple(f"P(1,{s})" for s in range(n + 1))
    label = f"E({n})" if ambient == n else f"E({n})<A({ambient})"
    return subalgebra_closure(gens, ambient, names=names, name=label,
                              kind="E", kind_param=n)


# ---------------------------------------------------------------------------
# Wall relations


@dataclass(frozen=True)
class WallRelation:
    """A defining relation of A(n) as a sum of generator words.

    Words are tuples of exponents i, standing for Sq^{2^i}.  The sum of the
    word values is zero in A(n); evaluated on candidate action matrices it
    must be the zero operator.
    """

    n: int
    words: frozenset[Word]
    label: str

    def element(self) -> SteenrodElt:
        acc = zero(self.n)
        for w in self.words:
            acc = acc + _word_value_sq(self.n, w)
        return acc

    def __str__(self):
        return self.label


def _word_value_sq(ambient: int, word: Word) -> SteenrodElt:
    e = unit(ambient)
    for i in word:
        e = e * sq(2 ** i, ambient)
    return e


def _word_label(word: Word) -> str:
    return "".join(f"Sq^{2**i}" for i in word)


def _relation_label(words) -> str:
    ws = sorted(words, key=lambda w: (len(w), w))
    return " + ".join(_word_label(w) for w in ws)


def _express_in_lower(e: SteenrodElt, bound: int, ambient: int) -> frozenset[Word]:
    """Express e, an element of A(bound), as words in Sq^1..Sq^{2^bound}."""
    if e.is_zero():
        return frozenset()
    alg = A(bound, ambient)
    combo = alg.decompose(e)
    expr: frozenset[Word] = frozenset()
    for i in combo:
        expr = expr ^ alg.expressions[i]
    return expr


@lru_cache(maxsize=None)
def wall_relations(n: int) -> tuple[WallRelation, ...]:
    """The minimal relation set among the generators Sq^{2^i} of A(n).

    One relation Sq^1 Sq^1; for each 1 <= t <= n a relation with leading
    words Sq^{2^t}Sq^{2^t} + Sq^{2^{t-1}}Sq^{2^t}Sq^{2^{t-1}} +
    Sq^{2^{t-1}}Sq^{2^{t-1}}Sq^{2^t}, closed up by words in A(t-1); and for
    each 0 <= s <= r-2 <= n-2 a commutator-style relation
    Sq^{2^r}Sq^{2^s} + Sq^{2^s}Sq^{2^r} plus words in A(r-1).  Leading words
    already killed by the Sq^1 Sq^1 relation are omitted, as in the
    classical displays.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rels = [WallRelation(n, frozenset({(0, 0)}), "Sq^1Sq^1")]
    for t in range(1, n + 1):
        lead = [(t, t), (t - 1, t, t - 1), (t - 1, t - 1, t)]
        value = zero(n)
        for w in lead:
            value = value + _word_value_sq(n, w)
        kept = [w for w in lead
                if not any(w[i] == w[i + 1] == 0 for i in range(len(w) - 1))]
        words = frozenset(kept) ^ _express_in_lower(value, t - 1, n)
        rels.append(WallRelation(n, words, _relation_label(words)))
    for r in range(2, n + 1):
        for s in range(0, r - 1):
            lead = [(r, s), (s, r)]
            value = _word_value_sq(n, (r, s)) + _word_value_sq(n, (s, r))
            words = frozenset(lead) ^ _express_in_lower(value, r - 1, n)
            rels.append(WallRelation(n, words, _relation_label(words)))
    return tuple(rels)


def double_pushforward(k: int) -> int | None:
    """The grade-halving rule on generators: Sq^k -> Sq^{k/2} for even k,
    and 0 (encoded as None) for odd k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k // 2 if k % 2 == 0 else None


def integral(alg: SubHopfAlgebra) -> SteenrodElt:
    """Top-degree basis element of a subalgebra with one-dimensional top."""
    return alg.integral()


# ---------------------------------------------------------------------------
# Element grammar:  Sq^k | Sq(r1,...,rl) | P(1,s) | 1, products by
# juxtaposition (whitespace or '*'), sums with '+'.

_TOKEN = re.compile(r"Sq\^(\d+)|Sq\(([\d,\s]*)\)|P\(\s*1\s*,\s*(\d+)\s*\)|1|\S")


def parse_element(text: str, ambient: int) -> SteenrodElt:
    """Parse the element grammar into a SteenrodElt of A(ambient)."""
    total = zero(ambient)
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk or chunk == "0":
            continue
        factor = unit(ambient)
        seen = False
        for m in _TOKEN.finditer(chunk):
            tok = m.group(0)
            if tok == "*":
                continue
            seen = True
            if m.group(1) is not None:
                factor = factor * sq(int(m.group(1)), ambient)
            elif m.group(2) is not None:
                parts = [p for p in m.group(2).replace(" ", "").split(",") if p]
                factor = factor * Sq(*[int(p) for p in parts], ambient=ambient)
            elif m.group(3) is not None:
                factor = factor * milnor_primitive(int(m.group(3)), ambient)
            elif tok == "1":
                pass
            else:
                raise ValueError(f"cannot parse element syntax near {tok!r}")
        if not seen:
            raise ValueError(f"cannot parse element chunk {chunk!r}")
        total = total + factor
    return total
