"""Exact Hilbert series: Laurent numerators over powers of (1 - z^{+-1}).

A Series represents sum_j c_j z^j = num(z) / (1 - z^dir)^den expanded in
powers of z^dir.  Modules use dir=+1 (support bounded below); local
cohomology rows use dir=-1 (support bounded above).  All coefficient
extraction is exact; equality is equality of normalized rational data, which
for a fixed direction is equality of the series.
"""

from __future__ import annotations

import math
from fractions import Fraction

# ---------------------------------------------------------------------------
# Laurent polynomials as dicts {exponent: coefficient}

def lp_add(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out

def lp_neg(a):
    return {k: -v for k, v in a.items()}

def lp_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}

def lp_mul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = k1 + k2
            w = out.get(k, 0) + v1 * v2
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out

def lp_shift(a, d):
    return {k + d: v for k, v in a.items()}

def lp_eval_one(a):
    return sum(a.values())

def lp_divide_one_minus_z(a):
    """Exact quotient by (1 - z); None if not divisible.

    (1 - z) * sum b_k z^k has coefficients b_k - b_{k-1}.
    """
    if not a:
        return {}
    if lp_eval_one(a) != 0:
        return None
    lo, hi = min(a), max(a)
    out = {}
    run = 0
    for k in range(lo, hi + 1):
        run += a.get(k, 0)
        if run:
            out[k] = run
    # divisibility means the running sum closes at zero
    return out


class Series:
    """num / (1 - z^direction)^den, normalized so num is not divisible by
    (1 - z^direction) unless den = 0."""

    __slots__ = ("num", "den", "direction")

    def __init__(self, num, den=0, direction=1):
        if direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        num = {k: v for k, v in num.items() if v}
        while den > 0 and num:
            flipped = {direction * k: v for k, v in num.items()}
            q = lp_divide_one_minus_z(flipped)
            if q is None:
                break
            num = {direction * k: v for k, v in q.items()}
            den -= 1
        if not num:
            den = 0
        self.num = num
        self.den = den
        self.direction = direction

    @classmethod
    def zero(cls, direction=1):
        return cls({}, 0, direction)

    @classmethod
    def from_dict(cls, coeffs, direction=1):
        return cls(dict(coeffs), 0, direction)

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return self.den == 0

    @property
    def pole_order(self):
        return self.den

    def __eq__(self, other):
        return (isinstance(other, Series)
                and self.direction == other.direction
                and self.den == other.den and self.num == other.num)

    def __hash__(self):
        return hash((self.direction, self.den, frozenset(self.num.items())))

    def __repr__(self):
        var = "z" if self.direction == 1 else "z^-1"
        return f"Series({self.num!r} / (1-{var})^{self.den})"

    def coeff(self, j):
        """Exact coefficient of z^j."""
        d = self.den
        if d == 0:
            return self.num.get(j, 0)
        total = 0
        for k, v in self.num.items():
            step = (j - k) * self.direction
            if step >= 0:
                total += v * math.comb(step + d - 1, d - 1)
        return total

    def coeffs(self, lo, hi):
        return [self.coeff(j) for j in range(lo, hi + 1)]

    def _common(self, other):
        if self.direction != other.direction:
            raise ValueError("direction mismatch")
        d = max(self.den, other.den)
        a = self.num
        if self.den < d:
            a = lp_mul(a, one_minus_pow(self.direction, d - self.den))
        b = other.num
        if other.den < d:
            b = lp_mul(b, one_minus_pow(other.direction, d - other.den))
        return a, b, d

    def __add__(self, other):
        a, b, d = self._common(other)
        return Series(lp_add(a, b), d, self.direction)

    def __sub__(self, other):
        a, b, d = self._common(other)
        return Series(lp_add(a, lp_neg(b)), d, self.direction)

    def scale(self, c):
        return Series(lp_scale(self.num, c), self.den, self.direction)

    def mul_laurent(self, poly):
        return Series(lp_mul(self.num, poly), self.den, self.direction)

    def shift(self, d):
        """Multiply by z^d (degree shift: module twist M(-d) shifts by +d)."""
        return Series(lp_shift(self.num, d), self.den, self.direction)

    def deepen(self, k):
        """Divide by (1 - z^direction)^k."""
        return Series(self.num, self.den + k, self.direction)

    def numerator_support(self):
        if not self.num:
            return None
        return (min(self.num), max(self.num))

    def finite_support(self):
        """{j: coeff} for a polynomial series; error otherwise."""
        if self.den != 0:
            raise ValueError("series has a pole; support is infinite")
        return dict(self.num)

    def times_one_minus_inverse_pow(self, i):
        """Multiply a descending series by (1 - z^{-1})^i; must come out a
        Laurent polynomial (i at least the pole order) and its dict is
        returned."""
        if self.direction != -1:
            raise ValueError("only for descending series")
        if i < self.den:
            raise ValueError(f"pole order {self.den} exceeds difference power {i}")
        out = self.num
        if i > self.den:
            out = lp_mul(out, one_minus_pow(-1, i - self.den))
        return dict(out)


def one_minus_pow(direction, k):
    """(1 - z^direction)^k as a Laurent dict."""
    out = {0: 1}
    for _ in range(k):
        out = lp_add(out, lp_shift(lp_neg(out), direction))
    return out


def geometric_all_degrees_below(j0, d):
    """Series of H^d-type shape: not used directly; kept for tests."""
    return Series({j0: 1}, d, -1)


def polynomial_from_values(xs, ys):
    """Exact interpolation: Fractions coefficients, ascending powers."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # Lagrange basis polynomial for xs[i]
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            # multiply basis by (x - xs[j])
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] += c * (-xs[j])
                nxt[k + 1] += c
            basis = nxt
            denom *= xs[i] - xs[j]
        w = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            coeffs[k] += w * c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def all_coefficients_nonnegative(series):
    """Rigorous check that every coefficient of a descending series is >= 0.

    The finitely many coefficients in the numerator window are checked
    directly.  Below the window the coefficient function is a polynomial of
    degree < pole order; it is recovered by exact interpolation and checked on
    all integers up to a Cauchy bound on its real roots, beyond which the sign
    equals the sign of the leading coefficient.
    """
    if series.is_zero():
        return True
    if series.direction != -1:
        raise ValueError("nonnegativity check is for descending series")
    lo, hi = series.numerator_support()
    for j in range(lo, hi + 1):
        if series.coeff(j) < 0:
            return False
    d = series.den
    if d == 0:
        return True
    # tail polynomial psi(x) = coeff(lo - 1 - x) for x >= 0, degree <= d - 1
    xs = list(range(d))
    ys = [series.coeff(lo - 1 - x) for x in xs]
    coeffs = polynomial_from_values(xs, ys)
    if not coeffs:
        return True
    lead = coeffs[-1]
    if lead < 0:
        return False
    bound = 1 + max(abs(c / lead) for c in coeffs)
    for x in range(0, math.ceil(bound) + 2):
        if poly_eval(coeffs, x) < 0:
            return False
    return True


def series_leq(a, b):
    """Entrywise a_j <= b_j for all j, exactly (descending series)."""
    return all_coefficients_nonnegative(b - a)
