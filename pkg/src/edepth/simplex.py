"""Phase-I simplex over exact rationals: feasibility of Ax = b, x >= 0.

Bland's rule on both the entering and leaving choices, so no cycling; all
arithmetic is Fraction, so feasibility answers are exact.  Artificial
variables are kept implicit (one per row); original columns are the only
candidates for entering.
"""

from __future__ import annotations

from fractions import Fraction


def solve_nonnegative(A, b):
    """Return x (list of Fractions) with Ax = b, x >= 0, or None."""
    m = len(A)
    k = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * k
    T = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        v = Fraction(b[i])
        if v < 0:
            row = [-x for x in row]
            v = -v
        T.append(row + [v])
    basis = [k + i for i in range(m)]  # start on the artificial basis

    def reduced_cost(j):
        return -sum(T[i][j] for i in range(m) if basis[i] >= k)

    while True:
        enter = None
        for j in range(k):
            if reduced_cost(j) < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][k] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded Phase-I cannot happen (objective bounded below by 0)
            raise RuntimeError("phase-I ratio test failed")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        basis[leave] = enter

    if sum(T[i][k] for i in range(m) if basis[i] >= k) != 0:
        return None
    x = [Fraction(0)] * k
    for i in range(m):
        if basis[i] < k:
            x[basis[i]] = T[i][k]
    return x
