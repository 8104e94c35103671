"""Term orders on graded free modules, given as key functions.

Every order exposes key(term) where term = (monomial, component); keys are
integer tuples compared lexicographically, larger key = larger term.  Orders
are multiplicative (key differences are translation invariant in the
monomial), so leading terms behave under multiplication as required by
Buchberger theory.

The weight order rev_t compares, in this sequence:
  1. the t weight rows (-exp x_n, -exp x_{n-1}, ..., -exp x_{n-t+1}),
  2. the total degree of the monomial,
  3. the basis index (lower index = larger term),
  4. reverse lexicographic on the remaining block x_1..x_{n-t}.
Only global orders (is_global=True) may divide inhomogeneous input; the rev_t
orders require Z-graded homogeneous vectors for termination.
"""

from __future__ import annotations


class RevTOrder:
    """Partial reverse-lexicographic weight order rev_t, fully refined.

    For t = n the induced order on monomials is the pure reverse-lexicographic
    order; on monomials of equal total degree this agrees with graded revlex.
    For t = 0 the weight part is empty and the order is the pure tie-break
    (degree, then basis index, then revlex).
    """

    __slots__ = ("ring", "t", "tag", "is_global")

    def __init__(self, ring_, t):
        if not 0 <= t <= ring_.n:
            raise ValueError(f"t={t} out of range 0..{ring_.n}")
        self.ring = ring_
        self.t = t
        self.tag = ("rev", ring_.p, ring_.n, t)
        # the -1 weight rows make this a non-global order for t >= 1
        self.is_global = t == 0

    def key(self, term):
        m, c = term
        n = self.ring.n
        t = self.t
        w = tuple(-m[n - r] for r in range(1, t + 1))
        rest = tuple(-m[k] for k in range(n - t - 1, -1, -1))
        return (w, sum(m), -c, rest)

    def weight(self, mono):
        """The partial Omega weight vector alone (no tie-break)."""
        n = self.ring.n
        return tuple(-mono[n - r] for r in range(1, self.t + 1))


class GraphOrder:
    """Block order on F (+) tags eliminating F: every F-term beats every tag
    term; inside each block the base rev order applies.  Used to read off
    syzygies from a Groebner basis of the graph module {(g_j, eps_j)}."""

    __slots__ = ("base", "split", "tag", "is_global")

    def __init__(self, base, split):
        self.base = base
        self.split = split
        self.tag = ("graph", base.tag, split)
        self.is_global = False

    def key(self, term):
        m, c = term
        if c < self.split:
            return (1, self.base.key((m, c)))
        return (0, self.base.key((m, c - self.split)))


class BlockElimOrder:
    """Global elimination order: monomials are compared by degree in the
    elimination block first, then total degree, basis index, and reverse
    lexicographic.  Safe on inhomogeneous input (well-order)."""

    __slots__ = ("ring", "elim", "tag", "is_global")

    def __init__(self, ring_, elim_indices):
        self.ring = ring_
        self.elim = tuple(sorted(elim_indices))
        self.tag = ("elim", ring_.p, ring_.n, self.elim)
        self.is_global = True

    def key(self, term):
        m, c = term
        n = self.ring.n
        block = sum(m[i] for i in self.elim)
        rest = tuple(-m[k] for k in range(n - 1, -1, -1))
        return (block, sum(m), -c, rest)


def grevlex_key(mono):
    """Classical graded reverse lexicographic key on ring monomials (oracle
    for order tests; degree first, then last differing exponent smaller)."""
    n = len(mono)
    return (sum(mono),) + tuple(-mono[k] for k in range(n - 1, -1, -1))
