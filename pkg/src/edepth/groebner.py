"""Groebner bases for submodules of graded free modules over F_p[x1..xn].

Plain Buchberger with normal pair selection; no product criterion (it is not
valid for module inputs).  Non-global orders (rev_t) require Z-homogeneous
generators, which makes every reduction stay inside one finite graded piece
and hence terminate; global orders accept anything.

Syzygies are computed by the graph trick: a Groebner basis of
{(g_j, eps_j)} under an order eliminating the ambient block; basis elements
with zero ambient part are a Groebner basis of the syzygy module, with tag
shifts equal to deg(g_j).  Kernels, colons and intersections are projections
of such syzygy computations.
"""

from __future__ import annotations

import heapq

from .orders import GraphOrder, RevTOrder
from .ring import (FreeModule, PolyVector, mono_deg, mono_div, mono_divides,
                   mono_lcm, mono_mul)


def default_order(ring_):
    return RevTOrder(ring_, ring_.n)


def lead_term(vec, order):
    """((mono, comp), coeff) of the largest term."""
    key = max(vec.terms, key=order.key)
    return key, vec.terms[key]


def normal_form(vec, reducers, order):
    """Unique remainder of vec modulo reducers (full tail reduction).

    reducers: list of (lead_key, inv_lead_coeff, terms) with monic not
    required; see _prep.  For a reduced Groebner basis the remainder is
    canonical.
    """
    module = vec.module
    p = module.ring.p
    keyf = order.key
    work = dict(vec.terms)
    rem = {}
    by_comp = {}
    for lk, inv, terms in reducers:
        by_comp.setdefault(lk[1], []).append((lk[0], inv, terms))
    while work:
        lead = max(work, key=keyf)
        lm, lc = lead
        coeff = work.pop(lead)
        hit = None
        for gm, ginv, gterms in by_comp.get(lc, ()):
            if mono_divides(gm, lm):
                hit = (gm, ginv, gterms)
                break
        if hit is None:
            rem[lead] = coeff
            continue
        gm, ginv, gterms = hit
        q = mono_div(lm, gm)
        factor = (coeff * ginv) % p
        for (m, c), a in gterms.items():
            k = (mono_mul(q, m), c)
            if k == lead:
                continue
            v = (work.get(k, 0) - factor * a) % p
            if v:
                work[k] = v
            else:
                work.pop(k, None)
    return PolyVector(module, rem, normalize=False)


def _prep(basis, order):
    """Precompute reducer records for normal_form."""
    p = basis[0].module.ring.p if basis else 0
    out = []
    for g in basis:
        lk, lc = lead_term(g, order)
        out.append((lk, pow(lc, p - 2, p), g.terms))
    return out


class GBWorker:
    """Incremental Buchberger state: add generators, complete pairs."""

    def __init__(self, module, order):
        self.module = module
        self.order = order
        self.p = module.ring.p
        self.basis = []      # PolyVector, monic
        self.leads = []      # (mono, comp)
        self.pairs = []      # heap of (lcm degree, i, j)
        self._serial = 0
        if not order.is_global:
            self._homogeneous_only = True

    def _reducers(self):
        return _prep(self.basis, self.order)

    def normal_form(self, vec):
        if vec.is_zero():
            return vec
        if not self.order.is_global and vec.degree() is None:
            raise ValueError("non-global order needs homogeneous input")
        return normal_form(vec, self._reducers(), self.order)

    def _push(self, vec):
        lk, lc = lead_term(vec, self.order)
        monic = vec.scale(pow(lc, self.p - 2, self.p))
        idx = len(self.basis)
        shifts = self.module.shifts
        for i, (m, c) in enumerate(self.leads):
            if c == lk[1]:
                L = mono_lcm(m, lk[0])
                heapq.heappush(self.pairs, (mono_deg(L) + shifts[c], i, idx))
        self.basis.append(monic)
        self.leads.append(lk)

    def add(self, vec):
        r = self.normal_form(vec)
        if not r.is_zero():
            self._push(r)
        return r

    def complete(self):
        while self.pairs:
            _, i, j = heapq.heappop(self.pairs)
            gi, gj = self.basis[i], self.basis[j]
            (mi, c), _ = lead_term(gi, self.order)
            (mj, _c2), _ = lead_term(gj, self.order)
            L = mono_lcm(mi, mj)
            s = gi.term_mul(mono_div(L, mi)) - gj.term_mul(mono_div(L, mj))
            if s.is_zero():
                continue
            r = normal_form(s, self._reducers(), self.order)
            if not r.is_zero():
                self._push(r)

    def reduced_basis(self):
        """Minimal, auto-reduced, monic basis sorted by descending lead."""
        self.complete()
        order = self.order
        keep = []
        for i, g in enumerate(self.basis):
            mi, ci = self.leads[i]
            redundant = False
            for j, _ in enumerate(self.basis):
                if j == i:
                    continue
                mj, cj = self.leads[j]
                if cj == ci and mono_divides(mj, mi):
                    if (mj, cj) != (mi, ci) or j < i:
                        redundant = True
                        break
            if not redundant:
                keep.append(g)
        # tail interreduction to the unique reduced basis
        changed = True
        while changed:
            changed = False
            for i in range(len(keep)):
                others = keep[:i] + keep[i + 1:]
                r = normal_form(keep[i], _prep(others, order), order) if others else keep[i]
                if r.terms != keep[i].terms:
                    lk, lc = lead_term(r, order)
                    keep[i] = r.scale(pow(lc, self.p - 2, self.p))
                    changed = True
        keep.sort(key=lambda g: self.order.key(lead_term(g, order)[0]), reverse=True)
        return tuple(keep)


def buchberger(module, gens, order):
    """Reduced Groebner basis of the submodule generated by gens."""
    worker = GBWorker(module, order)
    for g in gens:
        if not g.is_zero():
            worker.add(g)
    return worker.reduced_basis()


def partial_initial_form(vec, t):
    """Terms whose Omega weight vector (partial part only) is maximal."""
    if vec.is_zero():
        raise ValueError("initial form of zero")
    n = vec.module.ring.n
    order = RevTOrder(vec.module.ring, t)
    best = max(order.weight(m) for (m, c) in vec.terms)
    kept = {(m, c): a for (m, c), a in vec.terms.items() if order.weight(m) == best}
    return PolyVector(vec.module, kept, normalize=False)


class Submodule:
    """Graded submodule of a free module, with per-order Groebner caches.

    gb caches behave as write-once-per-order maps (compute then store); all
    other state is immutable.
    """

    def __init__(self, module, gens, check=True, gb_seed=None):
        self.module = module
        clean = []
        for g in gens:
            if g.is_zero():
                continue
            if check and not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator {g!r}")
            clean.append(g)
        self.gens = tuple(clean)
        self._gb = {}
        if gb_seed is not None:
            tag, basis = gb_seed
            self._gb[tag] = tuple(basis)
        self._sat_last = None

    def __repr__(self):
        return f"Submodule({self.module!r}, {len(self.gens)} gens)"

    @property
    def ring(self):
        return self.module.ring

    def is_zero_module(self):
        return not self.gens

    def gb(self, order=None):
        order = order or default_order(self.ring)
        cached = self._gb.get(order.tag)
        if cached is None:
            cached = buchberger(self.module, self.gens, order)
            self._gb[order.tag] = cached
        return cached

    def lead_monomials(self, order=None):
        """Per-component monomial generators of the lead module."""
        order = order or default_order(self.ring)
        by_comp = {}
        for g in self.gb(order):
            (m, c), _ = lead_term(g, order)
            by_comp.setdefault(c, []).append(m)
        return by_comp

    def normal_form(self, vec, order=None):
        order = order or default_order(self.ring)
        return normal_form(vec, _prep(list(self.gb(order)), order), order)

    def contains(self, vec):
        return self.normal_form(vec).is_zero()

    def is_subset(self, other):
        return all(other.contains(g) for g in self.gens)

    def equals(self, other):
        return self.is_subset(other) and other.is_subset(self)

    def plus(self, other):
        gens = self.gens + (other.gens if isinstance(other, Submodule) else tuple(other))
        return Submodule(self.module, gens, check=False)

    def plus_variable_multiples(self, i):
        """U + x_i * F."""
        xi = self.ring.variable_mono(i)
        extra = [self.module.basis_vector(c, mono=xi) for c in range(self.module.rank)]
        return Submodule(self.module, self.gens + tuple(extra), check=False)

    def colon(self, poly):
        """U : f for a homogeneous ring polynomial f (dict or PolyVector rank 1)."""
        if isinstance(poly, PolyVector):
            poly = poly.component_poly(0)
        if not poly:
            raise ValueError("colon by zero")
        F = self.module
        vectors = [F.basis_vector(c).poly_mul(poly) for c in range(F.rank)]
        vectors += list(self.gens)
        _, syz = syzygies_of_list(F, vectors)
        r = F.rank
        out = []
        for s in syz:
            v = PolyVector(F, {(m, c): a for (m, c), a in s.terms.items() if c < r})
            if not v.is_zero():
                out.append(v)
        return Submodule(F, minimal_generators(F, out), check=False)

    def colon_power(self, poly, k):
        """U : f^k by iterated colon ((U : f) : f = U : f^2 and so on)."""
        cur = self
        for _ in range(k):
            cur = cur.colon(poly)
        return cur

    def saturation(self, poly):
        """U : f^infinity by iterating colons to stabilization."""
        cur = self
        while True:
            nxt = cur.colon(poly)
            if nxt.is_subset(cur):
                return cur
            cur = nxt

    def saturation_last_variable(self):
        """U : x_n^infinity, via the rev-type basis: strip x_n powers from a
        Groebner basis whose first weight row is -exp(x_n)."""
        if self._sat_last is not None:
            return self._sat_last
        n = self.ring.n
        if n == 0:
            raise ValueError("no variables to saturate by")
        G = self.gb(RevTOrder(self.ring, n))
        out = []
        for g in G:
            a = min(m[n - 1] for (m, c) in g.terms)
            if a == 0:
                out.append(g)
            else:
                out.append(PolyVector(
                    self.module,
                    {(m[:n - 1] + (m[n - 1] - a,), c): v for (m, c), v in g.terms.items()},
                    normalize=False))
        sat = Submodule(self.module, out, check=False)
        self._sat_last = sat
        return sat

    def intersection(self, other):
        combined = list(self.gens) + list(other.gens)
        _, syz = syzygies_of_list(self.module, combined)
        k = len(self.gens)
        out = []
        for s in syz:
            w = self.module.zero()
            for (m, c), a in s.terms.items():
                if c < k:
                    w = w + self.gens[c].term_mul(m, a)
            if not w.is_zero():
                out.append(w)
        return Submodule(self.module, minimal_generators(self.module, out), check=False)

    def change_coordinates(self, matrix):
        """Apply the ring map x_i -> sum_k matrix[i-1][k-1] x_k to all generators."""
        ring_ = self.ring
        images = []
        for row in matrix:
            images.append({ring_.variable_mono(k + 1): a % ring_.p
                           for k, a in enumerate(row) if a % ring_.p})
        gens = [g.substitute_variables(images) for g in self.gens]
        return Submodule(self.module, gens, check=False)

    def quotient_by_last_variable(self):
        """Image of U + x_n F in the free module over S_{n-1} (same shifts)."""
        gens = [g.set_last_variable_zero() for g in self.gens]
        gens = [g for g in gens if not g.is_zero()]
        small = self.ring.subring(self.ring.n - 1)
        target = FreeModule(small, self.module.shifts)
        return Submodule(target, gens, check=False)

    def initial_submodule(self, t):
        """in_rev_t(U): partial initial forms of a rev_t Groebner basis."""
        G = self.gb(RevTOrder(self.ring, t))
        return Submodule(self.module, [partial_initial_form(g, t) for g in G],
                         check=False)

    def syzygies(self, order=None):
        """(tag_module, generators) of the first syzygies of the reduced
        Groebner basis; tag shifts are the basis element degrees."""
        return syzygies_of_list(self.module, list(self.gb(order)))

    def canonical_key(self, order=None):
        """Hashable form of the reduced basis; equal submodules agree."""
        gb = self.gb(order)
        return tuple(tuple(sorted(g.terms.items())) for g in gb)


def syzygies_of_list(module, vectors, tag_shifts=None):
    """First syzygies of an arbitrary list of homogeneous vectors.

    Returns (tag_module, generators): tag_module is free with shifts equal to
    the degrees of the input vectors (overridable for zero columns via
    tag_shifts) and the generators are a reduced Groebner basis of
    {c : sum c_j vectors[j] = 0} under the default order of the tag module.
    """
    ring_ = module.ring
    if tag_shifts is None:
        tag_shifts = []
        for v in vectors:
            d = v.degree()
            if d is None:
                if not v.is_zero():
                    raise ValueError("syzygies need homogeneous vectors")
                d = 0
            tag_shifts.append(d)
    else:
        for v, s in zip(vectors, tag_shifts):
            if not v.is_zero() and v.degree() != s:
                raise ValueError("tag shift disagrees with vector degree")
    tag_shifts = tuple(tag_shifts)
    split = module.rank
    graph_module = FreeModule(ring_, module.shifts + tag_shifts)
    ggens = []
    for j, v in enumerate(vectors):
        terms = dict(v.terms)
        terms[(ring_.zero_mono, split + j)] = 1
        ggens.append(PolyVector(graph_module, terms, normalize=False))
    order = GraphOrder(default_order(ring_), split)
    gb = buchberger(graph_module, ggens, order)
    tag_module = FreeModule(ring_, tag_shifts)
    syz = []
    for g in gb:
        if all(c >= split for (_m, c) in g.terms):
            syz.append(PolyVector(tag_module,
                                  {(m, c - split): a for (m, c), a in g.terms.items()},
                                  normalize=False))
    return tag_module, syz


def minimal_generators(module, vectors, order=None):
    """Minimal generating set drawn from vectors (homogeneous; Nakayama by
    increasing degree with incremental membership)."""
    order = order or default_order(module.ring)
    items = [v for v in vectors if not v.is_zero()]
    items.sort(key=lambda v: (v.degree(), sorted(v.terms.items())))
    worker = GBWorker(module, order)
    kept = []
    for v in items:
        r = worker.normal_form(v)
        if not r.is_zero():
            kept.append(v)
            worker._push(r)
            worker.complete()
    return kept
