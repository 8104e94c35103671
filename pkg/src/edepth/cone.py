"""The difference-table cone: supporting functionals, membership tests,
extremal ray tables, and the constructive decomposition of a module's
difference table into rays.

Ray vocabulary (for the cone of tables of modules with E-depth >= n-2):
  * S-rays: the table of S_i(-j) has the single difference entry 1 at
    (i, j-i);
  * J-rays: J = (x_1, x_2)S, and the table of J^m(-j) is the two-variable
    table of (x_1, x_2)^m lifted n-2 rows up with a column shift, computed by
    the engine itself from a presentation of the ideal power.

decompose() realizes the existence theorem: filtration data covers rows up
to n-3 with integer multiplicities, and an exact rational feasibility solve
covers the last three rows; reconstruction equality is verified before
returning.  Sequentially Cohen-Macaulay inputs take the all-integer S-ray
path with no J-rays.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .cohomology import DeltaTable, lc_table, peeling_chain
from .groebner import Submodule, syzygies_of_list
from .resolutions import GradedPresentation
from .ring import DEFAULT_PRIME, PolyVector, ring
from .gin import gin_rev_t


class DecompositionError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# functionals

def mu(A, i, j):
    return A.get(i, j)


def tau(A, j):
    n = A.n
    total = A.get(n - 1, j)
    for (i, s), v in A.entries.items():
        if i == n and s <= j - 1:
            total += v
    return total


def pi(A, m, j):
    n = A.n
    total = (m + 1) * A.get(n - 1, j + m)
    for (i, s), v in A.entries.items():
        if i == n - 1 and s > j + m:
            total += v
    for s in range(m):
        total += (s + 1) * A.get(n, j + s)
    return total


def hyperplane_functionals(n, window):
    """The finite list of (name, evaluator) cutting out the cone on tables
    supported in the window."""
    a, b = window
    out = []
    for i in list(range(0, n - 1)) + [n]:
        for j in range(a, b + 1):
            out.append((f"mu[{i},{j}]", lambda A, i=i, j=j: mu(A, i, j)))
    for j in range(a, b):
        out.append((f"tau[{j}]", lambda A, j=j: tau(A, j)))
    for j in range(a + 1, b + 1):
        out.append((f"pi[0,{j}]", lambda A, j=j: pi(A, 0, j)))
    for m in range(max(1, a + 1), b - 1):
        for j in range(a + 1, b - m):
            out.append((f"pi[{m},{j}]", lambda A, m=m, j=j: pi(A, m, j)))
    return out


def cone_membership(A, window=None, mode="edepth"):
    """Evaluate cone membership; returns (ok, violated functional list).

    seq mode: all entries nonnegative (tables of sequentially CM modules).
    edepth mode: the supporting-hyperplane functionals for E-depth >= n-2.
    """
    if window is None:
        a, b = A.window()
        window = (a, max(b, a + 1))  # the hyperplane list needs a < b
    a, b = window
    if any(j < a or j > b for (_i, j) in A.entries):
        raise ValueError("table support exceeds the window")
    violated = []
    if mode == "seq":
        for (i, j), v in sorted(A.entries.items()):
            if v < 0:
                violated.append((f"entry[{i},{j}]", v))
        return not violated, violated
    if mode != "edepth":
        raise ValueError(f"unknown mode {mode!r}")
    for name, f in hyperplane_functionals(A.n, window):
        v = f(A)
        if v < 0:
            violated.append((name, v))
    return not violated, violated


# ---------------------------------------------------------------------------
# ray tables

def ray_table_S(n, i, j):
    """Difference table of S_i(-j): single entry 1 at (i, j-i)."""
    if not 0 <= i <= n:
        raise ValueError("ray index out of range")
    return DeltaTable(n, {(i, j - i): 1})


@functools.lru_cache(maxsize=None)
def _m2_power_delta(p, m):
    """Difference table of (x_1, x_2)^m over GF(p)[x_1, x_2], by the engine."""
    if m < 1:
        raise ValueError("ideal power must be >= 1")
    R2 = ring(p, 2)
    F = R2.free_module((0,))
    gens = [PolyVector(F, {((a, m - a), 0): 1}) for a in range(m, -1, -1)]
    tag_module, syz = syzygies_of_list(F, gens)
    pres = GradedPresentation(tag_module, Submodule(tag_module, syz, check=False))
    return lc_table(pres).delta()


def ray_table_J(n, m, j, p=DEFAULT_PRIME):
    """Difference table of J^m(-j), J = (x_1,x_2)S, in n >= 2 variables."""
    if n < 2:
        raise ValueError("J-rays need n >= 2")
    base = _m2_power_delta(p, m)
    shift = j - (n - 2)
    return DeltaTable(n, {(i + n - 2, c + shift): v
                          for (i, c), v in base.entries.items()})


@dataclass
class RayCoefficients:
    """Finitely supported nonnegative multiplicities of the ray tables."""
    n: int
    s_rays: dict = field(default_factory=dict)   # (i, j) -> coefficient
    j_rays: dict = field(default_factory=dict)   # (m, j) -> coefficient
    p: int = DEFAULT_PRIME

    def is_integral(self):
        return all(Fraction(v).denominator == 1
                   for v in list(self.s_rays.values()) + list(self.j_rays.values()))

    def to_json(self):
        def enc(v):
            f = Fraction(v)
            return [f.numerator, f.denominator]
        return {"S_rays": [[i, j] + enc(v) for (i, j), v in sorted(self.s_rays.items())],
                "J_rays": [[m, j] + enc(v) for (m, j), v in sorted(self.j_rays.items())]}


def reconstruct(coeffs):
    """Exact linear combination of ray tables."""
    total = DeltaTable(coeffs.n, {})
    for (i, j), v in coeffs.s_rays.items():
        if v:
            total = total + ray_table_S(coeffs.n, i, j).scale(v)
    for (m, j), v in coeffs.j_rays.items():
        if v:
            total = total + ray_table_J(coeffs.n, m, j, coeffs.p).scale(v)
    return total


# ---------------------------------------------------------------------------
# decomposition

def _last_rows_candidates(n, p, window):
    """Candidate rays touching only rows n-2..n with support in the window."""
    a, b = window
    cands = []
    for i in (n - 2, n - 1, n):
        for c in range(a, b + 1):
            cands.append((("S", i, c + i), ray_table_S(n, i, c + i)))
    width = b - a + 1
    for m in range(1, max(1, width) + 1):
        for jprime in range(a + 2, b - m + 2):
            jj = jprime + (n - 2)
            tab = ray_table_J(n, m, jj, p)
            lo, hi = tab.window()
            if lo >= a and hi <= b:
                cands.append((("J", m, jj), tab))
    return cands


def _solve_last_rows(n, p, residual, window):
    from .simplex import solve_nonnegative
    a, b = window
    cands = _last_rows_candidates(n, p, window)
    cells = [(i, c) for i in (n - 2, n - 1, n) for c in range(a, b + 1)]
    A = [[Fraction(tab.get(i, c)) for (_key, tab) in cands] for (i, c) in cells]
    bvec = [Fraction(residual.get((i, c), 0)) for (i, c) in cells]
    x = solve_nonnegative(A, bvec)
    if x is None:
        return None
    out = {}
    for (key, _tab), v in zip(cands, x):
        if v:
            out[key] = out.get(key, 0) + v
    return out


def decompose(pres, seed=0):
    """Nonnegative ray multiplicities whose reconstruction equals the
    difference table of M exactly.

    Requires E-depth(M) >= n-2, or dim(M) < n with E-depth >= dim(M)-1 (the
    module is then sequentially Cohen-Macaulay and the integer S-ray path
    applies).  Raises DecompositionError when the hypothesis fails, and
    RuntimeError if the guaranteed solve is infeasible (an engine bug).
    """
    n = pres.ring.n
    p = pres.ring.p
    target = lc_table(pres).delta()
    if pres.is_zero():
        return RayCoefficients(n=n, p=p)
    e = pres.edepth()
    d = pres.krull_dim()
    if not (e >= n - 2 or (d < n and e >= d - 1)):
        raise DecompositionError(
            f"E-depth {e} is below n-2 = {n - 2} (dim {d}); no decomposition "
            "is guaranteed for this module")
    seq = pres.is_sequentially_cm()
    coeffs = RayCoefficients(n=n, p=p)
    if seq:
        # chain step s holds N_{n-s}; its H^0 is the filtration quotient M_s
        V, _cert = gin_rev_t(pres.relations, n, seed=seed)
        chain = peeling_chain(GradedPresentation(V.module, V), n)
        for step, (_npres, h0) in enumerate(chain):
            for deg, v in h0.items():
                if v:
                    coeffs.s_rays[(step, deg)] = coeffs.s_rays.get((step, deg), 0) + v
    else:
        t = n - 2
        V, _cert = gin_rev_t(pres.relations, t, seed=seed)
        chain = peeling_chain(GradedPresentation(V.module, V), t)
        for step, (_npres, h0) in enumerate(chain[:max(0, n - 2)]):
            for deg, v in h0.items():
                if v:
                    coeffs.s_rays[(step, deg)] = coeffs.s_rays.get((step, deg), 0) + v
        residual = {}
        for (i, c), v in target.entries.items():
            if i >= n - 2:
                residual[(i, c)] = v
        a, b = target.window() if target.entries else (0, 0)
        solved = None
        for grow in range(4):
            solved = _solve_last_rows(n, p, residual, (a - grow, b + grow))
            if solved is not None:
                break
        if solved is None:
            raise RuntimeError("ray decomposition solve infeasible; the "
                               "existence theorem guarantees a solution, so "
                               "this is an engine bug")
        for key, v in solved.items():
            kind, x, y = key
            if kind == "S":
                coeffs.s_rays[(x, y)] = coeffs.s_rays.get((x, y), 0) + v
            else:
                coeffs.j_rays[(x, y)] = coeffs.j_rays.get((x, y), 0) + v
    rebuilt = reconstruct(coeffs)
    if rebuilt != target:
        raise RuntimeError("reconstruction mismatch after decomposition; "
                           "engine bug")
    return coeffs
