"""Presentations of graded modules, minimal free resolutions, Ext, depth,
dimension, and the E-depth invariant.

A module is held as M = F/U (GradedPresentation).  Hilbert series come from
the monomial lead module of a Groebner basis; dimension is the pole order of
the series at z=1; depth is n - pd via Auslander-Buchsbaum on the minimal
resolution; Ext^i(M, S) is the cohomology of the dualized resolution,
presented exactly.  E-depth(M) = min(n, sup{t : depth Ext^i >= min(t, n-i)
for all i}), with depth(0) = +infinity imposing no constraint.
"""

from __future__ import annotations

import functools
import math

from .groebner import (Submodule, default_order, lead_term,
                       minimal_generators, syzygies_of_list)
from .ring import FreeModule, PolyVector, mono_deg
from .series import Series, lp_add, lp_scale, lp_shift

NEG_INF = float("-inf")
POS_INF = float("inf")


# ---------------------------------------------------------------------------
# Hilbert series of monomial quotients

def _minimalize_monos(gens):
    out = []
    for m in sorted(set(gens), key=lambda m: (mono_deg(m), m)):
        if not any(all(x <= y for x, y in zip(g, m)) for g in out):
            out.append(m)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _monomial_numerator(gens):
    """Numerator K with HS(S/I) = K / (1-z)^n for the monomial ideal I."""
    gens = _minimalize_monos(gens)
    if not gens:
        return ((0, 1),)
    if any(mono_deg(g) == 0 for g in gens):
        return ()
    mixed = [g for g in gens if sum(1 for e in g if e) >= 2]
    if not mixed:
        # pure powers of distinct variables: complete intersection
        out = {0: 1}
        for g in gens:
            out = lp_add(out, lp_shift(lp_scale(out, -1), mono_deg(g)))
        return tuple(sorted(out.items()))
    # pivot on the most frequent variable of the first mixed generator
    counts = [(sum(1 for g in gens if g[i]), i) for i in range(len(gens[0])) if mixed[0][i]]
    v = max(counts)[1]
    plus = tuple(g for g in gens if g[v] == 0)
    xv = tuple(1 if k == v else 0 for k in range(len(gens[0])))
    plus = plus + (xv,)
    colon = tuple(g[:v] + (max(g[v] - 1, 0),) + g[v + 1:] for g in gens)
    a = dict(_monomial_numerator(_minimalize_monos(plus)))
    b = dict(_monomial_numerator(_minimalize_monos(colon)))
    return tuple(sorted(lp_add(a, lp_shift(b, 1)).items()))


def quotient_hilbert_series(module, sub):
    """HS(F/U) from the lead monomials of a Groebner basis of U."""
    n = module.ring.n
    by_comp = sub.lead_monomials() if sub.gens else {}
    num = {}
    for c, shift in enumerate(module.shifts):
        K = dict(_monomial_numerator(tuple(sorted(by_comp.get(c, ())))))
        num = lp_add(num, lp_shift(K, shift))
    return Series(num, n, direction=1)


# ---------------------------------------------------------------------------
# resolutions

class Resolution:
    """Minimal graded free resolution: modules[0] <- modules[1] <- ...

    diffs[k] lists the columns of d_{k+1}: modules[k+1] -> modules[k].
    All differential entries lie in the maximal ideal.
    """

    __slots__ = ("modules", "diffs")

    def __init__(self, modules, diffs):
        self.modules = modules
        self.diffs = diffs

    @property
    def length(self):
        return len(self.diffs)

    def betti(self):
        table = {}
        for i, mod in enumerate(self.modules):
            for s in mod.shifts:
                table[(i, s)] = table.get((i, s), 0) + 1
        return table


def _has_unit_entry(vec):
    zero = vec.module.ring.zero_mono
    return any(m == zero for (m, _c) in vec.terms)


def _prune_units(module, gens):
    """Cancel constant entries of the presentation (Gaussian elimination on
    basis elements hit by degree-zero coefficients)."""
    ring_ = module.ring
    zero = ring_.zero_mono
    shifts = list(module.shifts)
    gens = list(gens)
    while True:
        pivot = None
        for gi, g in enumerate(gens):
            for (m, c), a in g.terms.items():
                if m == zero:
                    pivot = (gi, c, a)
                    break
            if pivot:
                break
        if pivot is None:
            break
        gi, c, a = pivot
        g = gens[gi]
        inv = ring_.field.inv(a)
        reduced = []
        for hi, h in enumerate(gens):
            if hi == gi:
                continue
            hc = h.component_poly(c)
            if hc:
                h = h - g.poly_mul(hc).scale(inv)
            reduced.append(h)
        # drop component c and the pivot generator
        del shifts[c]
        new_module = FreeModule(ring_, tuple(shifts))
        remap = []
        for h in reduced:
            terms = {}
            for (m, cc), v in h.terms.items():
                assert cc != c
                terms[(m, cc if cc < c else cc - 1)] = v
            remap.append(PolyVector(new_module, terms, normalize=False))
        module = new_module
        gens = [h for h in remap if not h.is_zero()]
    return module, gens


def minimal_resolution(module, relation_gens):
    gens = minimal_generators(module, relation_gens)
    while any(_has_unit_entry(g) for g in gens):
        module, gens = _prune_units(module, gens)
        gens = minimal_generators(module, gens)
    modules = [module]
    diffs = []
    cur_module, cur_gens = module, gens
    while cur_gens:
        assert not any(_has_unit_entry(g) for g in cur_gens)
        tag_module, syz = syzygies_of_list(cur_module, cur_gens)
        diffs.append(tuple(cur_gens))
        modules.append(tag_module)
        cur_module, cur_gens = tag_module, minimal_generators(tag_module, syz)
        assert len(diffs) <= module.ring.n + 1
    # the last module added has no relations only if its generators were
    # empty already; when cur_gens ran empty the trailing module is correct
    return Resolution(modules, diffs)


def _transpose_columns(cols, f_rank, dual_g):
    """d: G -> F given by columns (vectors in F, F of rank f_rank).  Return
    the columns of d^*: F^* -> G^*, as vectors in dual_g, indexed by F's
    basis (zero columns included to keep the indexing aligned)."""
    rows = [dict() for _ in range(f_rank)]
    for c, col in enumerate(cols):
        for (m, r), a in col.terms.items():
            rows[r][(m, c)] = a
    return [PolyVector(dual_g, t, normalize=False) for t in rows]


# ---------------------------------------------------------------------------

class GradedPresentation:
    """M = F/U with caches for series, resolution, Ext and invariants."""

    def __init__(self, module, relations=None):
        self.module = module
        if relations is None:
            relations = Submodule(module, ())
        if relations.module != module:
            raise ValueError("relations live in a different ambient module")
        self.relations = relations
        self._cache = {}

    @classmethod
    def quotient_ring(cls, ring_, ideal_gens):
        F = ring_.free_module((0,))
        return cls(F, Submodule(F, tuple(ideal_gens)))

    @property
    def ring(self):
        return self.module.ring

    def __repr__(self):
        return f"Presentation({self.module!r} / {len(self.relations.gens)} relations)"

    def hilbert_series(self):
        hs = self._cache.get("hs")
        if hs is None:
            hs = quotient_hilbert_series(self.module, self.relations)
            self._cache["hs"] = hs
        return hs

    def is_zero(self):
        return self.hilbert_series().is_zero()

    def krull_dim(self):
        """Pole order of the Hilbert series at z=1; -inf for the zero module."""
        if self.is_zero():
            return NEG_INF
        return self.hilbert_series().pole_order

    def resolution(self):
        res = self._cache.get("res")
        if res is None:
            res = minimal_resolution(self.module, list(self.relations.gens))
            self._cache["res"] = res
        return res

    def betti(self):
        return self.resolution().betti()

    def projective_dimension(self):
        if self.is_zero():
            return NEG_INF
        return self.resolution().length

    def depth(self):
        """n - pd (Auslander-Buchsbaum); +infinity for the zero module."""
        if self.is_zero():
            return POS_INF
        return self.ring.n - self.resolution().length

    # -- Ext^i(M, S) ------------------------------------------------------

    def _ext_data(self, i):
        """(kernel Submodule, image Submodule) in F_i^*; None past pd."""
        key = ("extdata", i)
        if key in self._cache:
            return self._cache[key]
        res = self.resolution()
        if i > res.length or i < 0:
            self._cache[key] = None
            return None
        Fi = res.modules[i]
        dual_i = Fi.dual()
        if i < res.length:
            dual_next = res.modules[i + 1].dual()
            cols = _transpose_columns(res.diffs[i], Fi.rank, dual_next)
            _, ker = syzygies_of_list(dual_next, cols, tag_shifts=dual_i.shifts)
            ker_sub = Submodule(dual_i, ker, check=False,
                                gb_seed=(default_order(self.ring).tag, ker))
        else:
            ker_sub = Submodule(dual_i, [dual_i.basis_vector(c)
                                         for c in range(dual_i.rank)], check=False)
        if i >= 1:
            prev_rank = res.modules[i - 1].rank
            im_cols = _transpose_columns(res.diffs[i - 1], prev_rank, dual_i)
            im_sub = Submodule(dual_i, [v for v in im_cols if not v.is_zero()],
                               check=False)
        else:
            im_sub = Submodule(dual_i, (), check=False)
        self._cache[key] = (ker_sub, im_sub)
        return self._cache[key]

    def ext_hilbert_series(self, i):
        """HS(Ext^i(M, S)) without building a presentation."""
        key = ("exths", i)
        if key in self._cache:
            return self._cache[key]
        data = self._ext_data(i)
        if data is None:
            hs = Series.zero()
        else:
            ker_sub, im_sub = data
            dual_i = ker_sub.module
            hs = (quotient_hilbert_series(dual_i, im_sub)
                  - quotient_hilbert_series(dual_i, ker_sub))
        self._cache[key] = hs
        return hs

    def ext(self, i):
        """Ext^i(M, S) as a GradedPresentation (rank 0 when zero)."""
        key = ("ext", i)
        if key in self._cache:
            return self._cache[key]
        data = self._ext_data(i)
        if data is None:
            out = GradedPresentation(FreeModule(self.ring, ()))
        else:
            ker_sub, im_sub = data
            dual_i = ker_sub.module
            kmin = minimal_generators(dual_i, list(ker_sub.gens))
            if not kmin:
                out = GradedPresentation(FreeModule(self.ring, ()))
            else:
                combined = list(kmin) + list(im_sub.gens)
                _, syz = syzygies_of_list(dual_i, combined)
                kcount = len(kmin)
                P = FreeModule(self.ring, tuple(v.degree() for v in kmin))
                rels = []
                for s in syz:
                    v = PolyVector(P, {(m, c): a for (m, c), a in s.terms.items()
                                       if c < kcount})
                    if not v.is_zero():
                        rels.append(v)
                out = GradedPresentation(P, Submodule(P, rels, check=False))
        self._cache[key] = out
        return out

    # -- E-depth ----------------------------------------------------------

    def ext_depths(self):
        """depth(Ext^i(M,S)) for i = 0..n (+inf where Ext^i = 0)."""
        key = "extdepths"
        if key in self._cache:
            return self._cache[key]
        n = self.ring.n
        out = []
        for i in range(n + 1):
            if self.ext_hilbert_series(i).is_zero():
                out.append(POS_INF)
            else:
                out.append(self.ext(i).depth())
        self._cache[key] = out
        return out

    def edepth(self):
        """min(n, sup{t : depth Ext^i >= min(t, n-i) for all i}), in [0, n]."""
        n = self.ring.n
        if self.is_zero():
            return n
        bound = n
        for i, d in enumerate(self.ext_depths()):
            if d < n - i:
                bound = min(bound, d)
        return max(0, min(n, bound))

    def is_sequentially_cm(self):
        """E-depth = n; cross-checked against the Ext-wise criterion
        (each Ext^i zero or Cohen-Macaulay of dimension n-i)."""
        n = self.ring.n
        by_edepth = self.edepth() == n
        direct = True
        for i in range(n + 1):
            hs = self.ext_hilbert_series(i)
            if hs.is_zero():
                continue
            e = self.ext(i)
            if not (e.depth() == e.krull_dim() == n - i):
                direct = False
                break
        assert by_edepth == direct, "E-depth and Ext-wise criteria disagree"
        return by_edepth

    # -- filter regularity --------------------------------------------------

    def colon_annihilator_series(self, poly):
        """HS(0 :_M f) = HS(F/U) - HS(F/(U:f))."""
        Q = self.relations.colon(poly)
        return self.hilbert_series() - quotient_hilbert_series(self.module, Q)

    def is_filter_regular(self, poly):
        """(0 :_M f) has finite length."""
        if self.is_zero():
            return True
        return self.colon_annihilator_series(poly).is_polynomial()

    def is_strictly_filter_regular(self, poly):
        """(0 :_{Ext^i} f) has finite length for every i."""
        for i in range(self.ring.n + 1):
            e = self.ext(i)
            if e.module.rank == 0:
                continue
            if not e.is_filter_regular(poly):
                return False
        return True

    # -- constructions ------------------------------------------------------

    def shifted(self, d):
        """M(-d): all degrees raised by d."""
        mod = FreeModule(self.ring, tuple(s + d for s in self.module.shifts))
        gens = [PolyVector(mod, g.terms, normalize=False) for g in self.relations.gens]
        return GradedPresentation(mod, Submodule(mod, gens, check=False))

    def extend_ring(self, extra):
        """M tensored with a polynomial ring in `extra` new (last) variables."""
        gens = [g.extend_ring(extra) for g in self.relations.gens]
        big = self.ring.extension(extra)
        mod = FreeModule(big, self.module.shifts)
        return GradedPresentation(mod, Submodule(mod, gens, check=False))

    def quotient_by_element(self, poly):
        """M / f M as a presentation over the same ring."""
        F = self.module
        extra = [F.basis_vector(c).poly_mul(poly) for c in range(F.rank)]
        return GradedPresentation(F, self.relations.plus(extra))

    def m_saturation(self):
        """U : m^inf = intersection of the U : x_i^inf."""
        key = "msat"
        if key in self._cache:
            return self._cache[key]
        ring_ = self.ring
        cur = None
        for i in range(1, ring_.n + 1):
            sat_i = self.relations.saturation(ring_.variable_poly(i))
            cur = sat_i if cur is None else cur.intersection(sat_i)
        if cur is None:  # n = 0: everything is m-torsion
            F = self.module
            cur = Submodule(F, [F.basis_vector(c) for c in range(F.rank)],
                            check=False)
        self._cache[key] = cur
        return cur

    def h0_series(self):
        """HF(H^0_m(M)) computed directly as HF((U : m^inf) / U)."""
        sat = self.m_saturation()
        return self.hilbert_series() - quotient_hilbert_series(self.module, sat)


def direct_sum(presentations):
    """Block direct sum of presentations over a common ring."""
    ring_ = presentations[0].ring
    shifts = []
    for p in presentations:
        if p.ring != ring_:
            raise ValueError("direct sum over mixed rings")
        shifts.extend(p.module.shifts)
    mod = FreeModule(ring_, tuple(shifts))
    gens = []
    offset = 0
    for p in presentations:
        for g in p.relations.gens:
            gens.append(PolyVector(mod, {(m, c + offset): a
                                         for (m, c), a in g.terms.items()},
                                   normalize=False))
        offset += p.module.rank
    return GradedPresentation(mod, Submodule(mod, gens, check=False))


def subquotient_presentation(top_gens, bottom):
    """C/A for submodules A subseteq C = <top_gens> of a common free module.

    Returns the presentation on the given generators of C; relations are the
    coefficient vectors c with sum c_i top_i in A.
    """
    module = bottom.module
    combined = list(top_gens) + list(bottom.gens)
    _, syz = syzygies_of_list(module, combined)
    k = len(top_gens)
    P = FreeModule(module.ring, tuple(v.degree() for v in top_gens))
    rels = []
    for s in syz:
        v = PolyVector(P, {(m, c): a for (m, c), a in s.terms.items() if c < k})
        if not v.is_zero():
            rels.append(v)
    return GradedPresentation(P, Submodule(P, rels, check=False))
