"""Local cohomology tables through graded duality, socle tables, and the
filtration / peeling constructions that split a multigraded module's
cohomology into tensor factors.

Row i of the table of M over S = F_p[x1..xn] is the Hilbert series of
H^i_m(M), held exactly as a descending rational series with
h^i_j = dim Ext^{n-i}(M, S) in degree -j-n.  Rows are never truncated;
windows appear only at export time.
"""

from __future__ import annotations

import json

from .groebner import Submodule
from .resolutions import GradedPresentation, quotient_hilbert_series
from .series import Series, all_coefficients_nonnegative, series_leq


def lc_row(pres, i):
    """HS(H^i_m(M)) as a descending series: h^i_j = dim Ext^{n-i}(M,S)_{-j-n}."""
    n = pres.ring.n
    if not 0 <= i <= n:
        raise ValueError(f"cohomological index {i} out of range 0..{n}")
    ext_hs = pres.ext_hilbert_series(n - i)
    num = {-k - n: v for k, v in ext_hs.num.items()}
    return Series(num, ext_hs.den, direction=-1)


class CohomologyTable:
    """Rows 0..n of exact local cohomology Hilbert series."""

    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        self.n = n
        self.rows = tuple(rows)

    def __eq__(self, other):
        return (isinstance(other, CohomologyTable)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def leq(self, other):
        """Entrywise <= in every row and degree, decided exactly."""
        return all(series_leq(a, b) for a, b in zip(self.rows, other.rows))

    def __add__(self, other):
        return CohomologyTable(self.n, [a + b for a, b in zip(self.rows, other.rows)])

    def nonzero_rows(self):
        return [i for i, r in enumerate(self.rows) if not r.is_zero()]

    def delta(self):
        """Row i differenced i times: finitely supported exact table."""
        entries = {}
        for i, row in enumerate(self.rows):
            for j, v in row.times_one_minus_inverse_pow(i).items():
                if v:
                    entries[(i, j)] = v
        return DeltaTable(self.n, entries)

    def default_window(self, guard=2):
        d = self.delta()
        if not d.entries:
            return (0, 0)
        a, b = d.window()
        return (a - guard, b + guard)

    def to_json(self, window=None):
        if window is None:
            window = self.default_window()
        a, b = window
        rows = []
        for i, row in enumerate(self.rows):
            rows.append({"i": i,
                         "entries": [[j, row.coeff(j)] for j in range(a, b + 1)
                                     if row.coeff(j)]})
        return {"rows": rows, "window": [a, b]}

    def to_csv(self, window=None):
        if window is None:
            window = self.default_window()
        a, b = window
        lines = ["i\\j," + ",".join(str(j) for j in range(a, b + 1))]
        for i, row in enumerate(self.rows):
            lines.append(f"{i}," + ",".join(str(row.coeff(j)) for j in range(a, b + 1)))
        return "\n".join(lines) + "\n"


class DeltaTable:
    """Finitely supported (n+1) x Z table; row i is the i-th difference of
    HF(H^i_m(M)).  Entries are exact (int or Fraction)."""

    __slots__ = ("n", "entries")

    def __init__(self, n, entries):
        self.n = n
        self.entries = {k: v for k, v in entries.items() if v}

    def __eq__(self, other):
        return (isinstance(other, DeltaTable)
                and self.n == other.n and self.entries == other.entries)

    def __repr__(self):
        return f"DeltaTable(n={self.n}, {dict(sorted(self.entries.items()))})"

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def window(self):
        if not self.entries:
            return (0, 0)
        cols = [j for (_i, j) in self.entries]
        return (min(cols), max(cols))

    def row(self, i):
        return {j: v for (ii, j), v in self.entries.items() if ii == i}

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return DeltaTable(self.n, out)

    def scale(self, c):
        return DeltaTable(self.n, {k: v * c for k, v in self.entries.items()})

    def shift_columns(self, d):
        return DeltaTable(self.n, {(i, j + d): v for (i, j), v in self.entries.items()})

    def lift_rows(self, d, new_n):
        return DeltaTable(new_n, {(i + d, j): v for (i, j), v in self.entries.items()})

    def to_json(self):
        rows = {}
        for (i, j), v in sorted(self.entries.items()):
            rows.setdefault(i, []).append([j, v if isinstance(v, int) else [v.numerator, v.denominator]])
        a, b = self.window()
        return {"rows": [{"i": i, "entries": e} for i, e in sorted(rows.items())],
                "window": [a, b]}


def lc_table(pres):
    key = "lctable"
    if key in pres._cache:
        return pres._cache[key]
    n = pres.ring.n
    table = CohomologyTable(n, [lc_row(pres, i) for i in range(n + 1)])
    pres._cache[key] = table
    return table


def socle_table(pres):
    """Row i = HF(soc(H^i_m(M))): minimal generator degrees of Ext^{n-i},
    reflected by j -> -j-n.  Finitely supported rows."""
    n = pres.ring.n
    rows = []
    for i in range(n + 1):
        e = pres.ext(n - i)
        row = {}
        if e.module.rank:
            for (h, d), cnt in e.betti().items():
                if h == 0:
                    row[-d - n] = row.get(-d - n, 0) + cnt
        rows.append(row)
    return rows


def h0_series_direct(pres):
    """HF(H^0_m(M)) as the saturation quotient (no duality); ascending."""
    return pres.h0_series()


def lc_row_vs_direct_h0_agree(pres):
    """Duality cross-check: row 0 of the table equals HF((U:m^inf)/U)."""
    direct = pres.h0_series()
    if not direct.is_polynomial():
        return False
    row0 = lc_row(pres, 0)
    if not row0.is_polynomial():
        return False
    return dict(row0.num) == dict(direct.num)


# ---------------------------------------------------------------------------
# filtration and peeling

def dimension_filtration_hfs(pres, t):
    """Hilbert functions of the filtration quotients M_0..M_t.

    Q_0 = 0 :_M x_n^inf, Q_i = (x_{n-i+1},..,x_n)M :_M x_{n-i}^inf,
    M_0 = Q_0, M_i = Q_i / (Q_{i-1} + x_{n-i+1} M), and for t = n the last
    quotient is M_n = M / (Q_{n-1} + x_1 M).  Requires x_n,..,x_{n-t+1} to be
    a filter regular sequence on M; each M_i is then finite dimensional.
    """
    ring_ = pres.ring
    n = ring_.n
    if not 0 <= t <= n:
        raise ValueError(f"t={t} out of range 0..{n}")
    F = pres.module
    U = pres.relations

    def preimage_colon(i):
        """(x_{n-i+1},..,x_n)M :_M x_{n-i}^inf pulled back to F."""
        sub = U
        for v in range(n - i + 1, n + 1):
            sub = sub.plus_variable_multiples(v)
        return sub.saturation(ring_.variable_poly(n - i))

    q_prev = None
    out = []
    for i in range(t + 1):
        if i < n:
            Q_i = preimage_colon(i)
        else:
            Q_i = Submodule(F, [F.basis_vector(c) for c in range(F.rank)],
                            check=False)
        if i == 0:
            hf = pres.hilbert_series() - quotient_hilbert_series(F, Q_i)
        else:
            denom = q_prev.plus_variable_multiples(n - i + 1)
            hf = (quotient_hilbert_series(F, denom)
                  - quotient_hilbert_series(F, Q_i))
        if not hf.is_polynomial():
            raise ValueError(f"filtration quotient {i} has infinite length; "
                             "sequence is not filter regular")
        out.append(dict(hf.num))
        q_prev = Q_i
    return out


def peeling_chain(pres, t):
    """The modules N_n .. N_{n-t} over shrinking rings, with their H^0 data.

    N_n = M; each step saturates by the last variable and cuts it:
    N_{j-1} = (V^sat + x_j F)/x_j F over S_{j-1}.  Requires M multihomogeneous
    for the Z x Z^t grading with x_n..x_{n-t+1} filter regular.  Returns a
    list of (presentation, h0_hf_dict) from j = n down to n-t; h0 is
    HF(H^0_{m_j}(N_j)) = HF(V^sat/V), finite by filter regularity.
    """
    ring_ = pres.ring
    n = ring_.n
    if not 0 <= t <= n:
        raise ValueError(f"t={t} out of range 0..{n}")
    for g in pres.relations.gens:
        if not g.is_multihomogeneous(t):
            raise ValueError("relations are not multihomogeneous for this t")
    out = []
    cur = pres
    for j in range(n, n - t - 1, -1):
        if j == n - t:
            # bottom of the chain: no variable is guaranteed filter regular
            # here, so take the honest m-saturation for its H^0
            h0 = cur.h0_series()
            out.append((cur, dict(h0.num)))
            break
        sat = cur.relations.saturation_last_variable()
        h0 = cur.hilbert_series() - quotient_hilbert_series(cur.module, sat)
        if not h0.is_polynomial():
            raise ValueError(f"x_{j} is not filter regular at peeling step {n - j}")
        out.append((cur, dict(h0.num)))
        reduced = sat.quotient_by_last_variable()
        cur = GradedPresentation(reduced.module, reduced)
    return out


def kunneth_lift(table, extra):
    """Table of N (x)_k k[new vars] from the table of N: row i+extra is
    row i divided by (z-1)^extra; rows below `extra` vanish."""
    new_n = table.n + extra
    rows = [Series.zero(direction=-1) for _ in range(new_n + 1)]
    for i, row in enumerate(table.rows):
        # 1/(z-1) = z^{-1} / (1 - z^{-1}) in the descending expansion
        rows[i + extra] = row.shift(-extra).deepen(extra)
    return CohomologyTable(new_n, rows)


def table_rows_equal_hf(table, other):
    return table == other
