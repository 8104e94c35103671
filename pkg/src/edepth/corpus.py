"""Random instance generators and batch harnesses: monomial, binomial, toric
(kernels of monomial maps, by elimination) and determinantal ideals, plus the
seeded corpora used by the verification harnesses and the CLI.

Everything is deterministic in the seed.
"""

from __future__ import annotations

import random

from .groebner import Submodule, buchberger
from .orders import BlockElimOrder
from .resolutions import GradedPresentation
from .ring import FreeModule, PolyVector, ring


def module_fixture(sub, name="U"):
    """Render a submodule in the CLI input grammar (round-trips by parsing)."""
    from .ring import format_vector
    ring_ = sub.ring
    shifts = ",".join(str(s) for s in sub.module.shifts)
    lines = [f"ring p={ring_.p} n={ring_.n}",
             f"submodule {name} shifts={shifts}"]
    for g in sub.gens:
        lines.append("  " + format_vector(g))
    lines.append("end")
    return "\n".join(lines) + "\n"


def toric_kernel(ring_, exponents):
    """Kernel of x_i -> s^{a_i} t^{b_i} as an ideal of ring_, by elimination.

    exponents: list of (a_i, b_i), one per variable of ring_.  The kernel is
    homogeneous for the standard grading iff all a_i + b_i agree.
    """
    n = ring_.n
    if len(exponents) != n:
        raise ValueError("need one exponent pair per variable")
    big = ring_.extension(2)
    F = big.free_module((0,))
    gens = []
    for i, (a, b) in enumerate(exponents):
        mono_x = big.variable_mono(i + 1)
        mono_st = tuple([0] * n + [a, b])
        gens.append(PolyVector(F, {(mono_x, 0): 1, (mono_st, 0): big.p - 1}))
    order = BlockElimOrder(big, (n, n + 1))
    gb = buchberger(F, gens, order)
    small = ring_.free_module((0,))
    out = []
    for g in gb:
        if all(m[n] == 0 and m[n + 1] == 0 for (m, _c) in g.terms):
            out.append(PolyVector(small, {(m[:n], 0): a for (m, _c), a in g.terms.items()}))
    return Submodule(small, out)


def paper_toric_example(p=32003):
    """S/ker for x->s^4, y->s^3 t, z->s t^3, w->t^4 over GF(p)[x1..x4]."""
    R = ring(p, 4)
    I = toric_kernel(R, [(4, 0), (3, 1), (1, 3), (0, 4)])
    return GradedPresentation(R.free_module((0,)), I)


# ---------------------------------------------------------------------------
# random generators

def _random_mono(ring_, rng, max_deg):
    d = rng.randint(1, max_deg)
    expo = [0] * ring_.n
    for _ in range(d):
        expo[rng.randrange(ring_.n)] += 1
    return tuple(expo)


def random_monomial_ideal(ring_, rng, max_deg=4, max_gens=5):
    F = ring_.free_module((0,))
    k = rng.randint(2, max_gens)
    gens = [PolyVector(F, {(_random_mono(ring_, rng, max_deg), 0): 1})
            for _ in range(k)]
    return Submodule(F, gens)


def random_binomial_ideal(ring_, rng, max_deg=4, max_gens=4):
    """Homogeneous differences of equal-degree monomials (plus an occasional
    monomial)."""
    F = ring_.free_module((0,))
    gens = []
    for _ in range(rng.randint(2, max_gens)):
        d = rng.randint(1, max_deg)
        m1 = _random_mono_of_degree(ring_, rng, d)
        if rng.random() < 0.25:
            gens.append(PolyVector(F, {(m1, 0): 1}))
        else:
            m2 = _random_mono_of_degree(ring_, rng, d)
            c = ring_.field.random_nonzero(rng)
            terms = {(m1, 0): 1}
            terms[(m2, 0)] = (terms.get((m2, 0), 0) - c) % ring_.p
            v = PolyVector(F, terms)
            if not v.is_zero():
                gens.append(v)
    if not gens:
        gens = [PolyVector(F, {(_random_mono(ring_, rng, max_deg), 0): 1})]
    return Submodule(F, gens)


def _random_mono_of_degree(ring_, rng, d):
    expo = [0] * ring_.n
    for _ in range(d):
        expo[rng.randrange(ring_.n)] += 1
    return tuple(expo)


def _random_linear(ring_, rng):
    while True:
        coeffs = [ring_.field.random(rng) for _ in range(ring_.n)]
        if any(coeffs):
            return {ring_.variable_mono(i + 1): c
                    for i, c in enumerate(coeffs) if c}


def random_determinantal_ideal(ring_, rng):
    """2x2 minors of a 2x3 matrix of random linear forms."""
    from .ring import poly_add, poly_mul, poly_scale
    field = ring_.field
    F = ring_.free_module((0,))
    mat = [[_random_linear(ring_, rng) for _ in range(3)] for _ in range(2)]
    gens = []
    for c1 in range(3):
        for c2 in range(c1 + 1, 3):
            minor = poly_add(poly_mul(mat[0][c1], mat[1][c2], field),
                             poly_scale(poly_mul(mat[0][c2], mat[1][c1], field),
                                        -1, field), field)
            if minor:
                gens.append(PolyVector(F, {(m, 0): a for m, a in minor.items()}))
    if not gens:
        gens = [PolyVector(F, {(ring_.variable_mono(1), 0): 1})]
    return Submodule(F, gens)


def random_toric_ideal(ring_, rng, max_deg=3):
    """Kernel of a random monomial map into GF(p)[s, t] with images of one
    common degree (so the kernel is standard-graded homogeneous)."""
    d = rng.randint(2, max_deg)
    expo = []
    seen = set()
    for _ in range(ring_.n):
        a = rng.randint(0, d)
        expo.append((a, d - a))
    return toric_kernel(ring_, expo)


def random_submodule(ring_, rng, max_deg=3):
    """Random homogeneous submodule of a small free module."""
    shifts = tuple(rng.choice([0, 0, 1]) for _ in range(rng.randint(1, 2)))
    F = ring_.free_module(shifts)
    gens = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(max(shifts), max(shifts) + max_deg - 1)
        terms = {}
        for c in range(F.rank):
            md = d - shifts[c]
            if md < 0 or rng.random() < 0.3:
                continue
            m = _random_mono_of_degree(ring_, rng, md)
            coeff = ring_.field.random(rng)
            if coeff:
                terms[(m, c)] = (terms.get((m, c), 0) + coeff) % ring_.p
        v = PolyVector(F, terms)
        if not v.is_zero():
            gens.append(v)
    if not gens:
        gens = [F.basis_vector(0, mono=ring_.variable_mono(1))]
    return Submodule(F, gens)


def random_artinian_strict_pair(ring_, rng, max_power=3):
    """A strictly inside B with F/A (hence F/B) Artinian: B contains pure
    powers of every variable, A multiplies B's generators deeper while
    keeping pure powers."""
    F = ring_.free_module((0,))
    powers = [rng.randint(1, max_power) for _ in range(ring_.n)]
    gens_b = [PolyVector(F, {(tuple(p if k == i else 0 for k in range(ring_.n)), 0): 1})
              for i, p in enumerate(powers)]
    for _ in range(rng.randint(0, 2)):
        gens_b.append(PolyVector(F, {(_random_mono(ring_, rng, max_power + 1), 0): 1}))
    B = Submodule(F, gens_b)
    gens_a = [g.term_mul(ring_.variable_mono(rng.randint(1, ring_.n))) for g in B.gens]
    gens_a += [PolyVector(F, {(tuple((p + 1) if k == i else 0 for k in range(ring_.n)), 0): 1})
               for i, p in enumerate(powers)]
    A = Submodule(F, gens_a)
    if B.is_subset(A):
        return None
    return A, B


def random_strict_pair(ring_, rng, kind="monomial"):
    """A strictly inside B, B random, A built from deeper multiples of B's
    generators (so A <= B holds by construction)."""
    if kind == "monomial":
        B = random_monomial_ideal(ring_, rng)
    else:
        B = random_binomial_ideal(ring_, rng)
    gens_a = []
    for g in B.gens:
        if rng.random() < 0.4:
            gens_a.append(g)
        else:
            gens_a.append(g.term_mul(ring_.variable_mono(rng.randint(1, ring_.n))))
    A = Submodule(B.module, gens_a)
    if B.is_subset(A):
        return None
    return A, B


KINDS = ("monomial", "binomial", "toric", "determinantal", "submodule")


def generate_instance(kind, ring_, rng):
    if kind == "monomial":
        return random_monomial_ideal(ring_, rng)
    if kind == "binomial":
        return random_binomial_ideal(ring_, rng)
    if kind == "toric":
        return random_toric_ideal(ring_, rng)
    if kind == "determinantal":
        return random_determinantal_ideal(ring_, rng)
    if kind == "submodule":
        return random_submodule(ring_, rng)
    raise ValueError(f"unknown corpus kind {kind!r}")


def generate_corpus(kind, count, seed, p=32003, ns=(2, 3)):
    """Deterministic list of (name, Submodule)."""
    rng = random.Random(f"corpus:{kind}:{seed}")
    out = []
    for idx in range(count):
        n = ns[idx % len(ns)]
        R = ring(p, n)
        sub = generate_instance(kind, R, rng)
        out.append((f"{kind}-{idx}", sub))
    return out


def ideal_as_module(ring_, monos):
    """Present the ideal generated by the given monomials as an abstract
    module (generators become a free basis, relations are their syzygies).
    Ideals like (x_1, x_2)^m give modules with E-depth exactly n-2 that are
    not sequentially Cohen-Macaulay, exercising the mixed-ray decomposition.
    """
    from .groebner import syzygies_of_list
    F = ring_.free_module((0,))
    gens = [PolyVector(F, {(m, 0): 1}) for m in monos]
    tag_module, syz = syzygies_of_list(F, gens)
    return Submodule(tag_module, syz, check=False)


def _module_instance(ring_, rng):
    n = ring_.n
    if rng.random() < 0.6 and n >= 2:
        m = rng.randint(1, 2)
        monos = []
        for a in range(m + 1):
            mono = [0] * n
            mono[0], mono[1] = a, m - a
            monos.append(tuple(mono))
        return ideal_as_module(ring_, monos)
    return random_submodule(ring_, rng)


def mixed_theorem_corpus(seed, p=32003, monomial=50, binomial=30, toric=12,
                         determinantal=8, modules=10):
    """The standing corpus for the equivalence/decomposition harnesses:
    monomial and binomial ideals in n = 2..4, toric curves, determinantal
    ideals, and non-cyclic module instances.  >= 20 toric/determinantal and
    >= 100 instances total at the defaults."""
    rng = random.Random(f"mixed:{seed}")
    out = []
    specs = ([("monomial", (2, 3, 3, 4))] * monomial
             + [("binomial", (2, 3, 3, 4))] * binomial
             + [("toric", (3, 3, 4))] * toric
             + [("determinantal", (3, 4))] * determinantal
             + [("module", (2, 3, 3, 4))] * modules)
    counters = {}
    for kind, ns in specs:
        i = counters.get(kind, 0)
        counters[kind] = i + 1
        n = ns[i % len(ns)]
        R = ring(p, n)
        if kind == "module":
            sub = _module_instance(R, rng)
        else:
            sub = generate_instance(kind, R, rng)
        out.append((f"{kind}-{i}-n{n}", sub))
    return out
