"""Exact arithmetic and grading for standard-graded polynomial rings over F_p.

The ring S = F_p[x1..xn] carries the standard grading deg(x_i) = 1 and, for
each t in [0, n], the refined grading whose multidegree of a monomial is
(degree in x1..x_{n-t}, exponent of x_{n-t+1}, ..., exponent of x_n).

Representations:
  * monomials: tuples of n nonnegative exponents,
  * ring polynomials: dicts {monomial: coefficient}, coefficients in [1, p),
  * module elements: PolyVector, dicts {(monomial, component): coefficient}
    over a FreeModule that records one integer shift per basis element
    (deg e_c = shifts[c], so F = (+) S(-shifts[c])).

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import functools
import re

DEFAULT_PRIME = 32003


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic in F_p; elements are plain ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def normalize(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def __repr__(self):
        return f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def ring(p=DEFAULT_PRIME, n=2):
    return PolyRing(p, n)


class PolyRing:
    """S = F_p[x1..xn], standard graded.  Use ring(p, n) to get interned copies."""

    __slots__ = ("p", "n", "field", "zero_mono")

    def __init__(self, p, n):
        if n < 0:
            raise ValueError("need n >= 0 variables")
        self.p = p
        self.n = n
        self.field = PrimeField(p)
        self.zero_mono = (0,) * n

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return f"GF({self.p})[x1..x{self.n}]"

    def variable_mono(self, i):
        """Monomial x_i, 1-indexed."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        return tuple(1 if k == i - 1 else 0 for k in range(self.n))

    def variable_poly(self, i):
        return {self.variable_mono(i): 1}

    def subring(self, m):
        """F_p[x1..xm], m <= n."""
        if not 0 <= m <= self.n:
            raise ValueError("subring size out of range")
        return ring(self.p, m)

    def extension(self, extra):
        """F_p[x1..x_{n+extra}]; new variables come last."""
        return ring(self.p, self.n + extra)

    def free_module(self, shifts=(0,)):
        return FreeModule(self, tuple(shifts))


# ---------------------------------------------------------------------------
# monomial helpers (tuples of exponents)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def multidegree(mono, t):
    """Refined multidegree in Z x Z^t: (deg in x1..x_{n-t}, last t exponents)."""
    n = len(mono)
    if not 0 <= t <= n:
        raise ValueError(f"t={t} out of range 0..{n}")
    cut = n - t
    return (sum(mono[:cut]),) + tuple(mono[cut:])


# ---------------------------------------------------------------------------
# ring polynomials as dicts {mono: coeff}

def poly_add(f, g, field):
    out = dict(f)
    for m, c in g.items():
        v = (out.get(m, 0) + c) % field.p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out

def poly_scale(f, c, field):
    c %= field.p
    if c == 0:
        return {}
    return {m: (a * c) % field.p for m, a in f.items()}

def poly_mul(f, g, field):
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = mono_mul(m1, m2)
            v = (out.get(m, 0) + c1 * c2) % field.p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out

def poly_pow(f, k, field, n):
    out = {(0,) * n: 1}
    for _ in range(k):
        out = poly_mul(out, f, field)
    return out

def poly_is_homogeneous(f):
    degs = {mono_deg(m) for m in f}
    return len(degs) <= 1

def poly_degree(f):
    """Total degree; None for the zero polynomial."""
    if not f:
        return None
    return max(mono_deg(m) for m in f)


class FreeModule:
    """Graded free module (+) S(-shifts[c]); deg e_c = shifts[c].

    Two free modules with equal rank but different shifts are distinct
    ambient spaces.
    """

    __slots__ = ("ring", "shifts")

    def __init__(self, ring_, shifts):
        self.ring = ring_
        self.shifts = tuple(shifts)

    @property
    def rank(self):
        return len(self.shifts)

    def __eq__(self, other):
        return (isinstance(other, FreeModule)
                and self.ring == other.ring and self.shifts == other.shifts)

    def __hash__(self):
        return hash((self.ring, self.shifts))

    def __repr__(self):
        return f"Free({self.ring}, shifts={list(self.shifts)})"

    def zero(self):
        return PolyVector(self, {})

    def basis_vector(self, c, coeff=1, mono=None):
        if mono is None:
            mono = self.ring.zero_mono
        return PolyVector(self, {(mono, c): coeff})

    def dual(self):
        return FreeModule(self.ring, tuple(-s for s in self.shifts))


class PolyVector:
    """Element of a graded free module, canonical form (no zero coefficients)."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms, normalize=True):
        self.module = module
        if normalize:
            p = module.ring.p
            clean = {}
            for key, c in terms.items():
                c %= p
                if c:
                    clean[key] = c
            self.terms = clean
        else:
            self.terms = terms

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, PolyVector)
                and self.module == other.module and self.terms == other.terms)

    def __hash__(self):
        return hash((self.module, frozenset(self.terms.items())))

    def __repr__(self):
        return format_vector(self)

    def __add__(self, other):
        p = self.module.ring.p
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = (out.get(key, 0) + c) % p
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return PolyVector(self.module, out, normalize=False)

    def __neg__(self):
        p = self.module.ring.p
        return PolyVector(self.module, {k: p - c for k, c in self.terms.items()},
                          normalize=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        p = self.module.ring.p
        c %= p
        if c == 0:
            return self.module.zero()
        return PolyVector(self.module, {k: (a * c) % p for k, a in self.terms.items()},
                          normalize=False)

    def term_mul(self, mono, coeff=1):
        """Multiply by coeff * mono."""
        p = self.module.ring.p
        coeff %= p
        if coeff == 0:
            return self.module.zero()
        return PolyVector(
            self.module,
            {(mono_mul(mono, m), c): (a * coeff) % p for (m, c), a in self.terms.items()},
            normalize=False)

    def poly_mul(self, poly):
        """Multiply by a ring polynomial (dict {mono: coeff})."""
        out = self.module.zero()
        for m, c in poly.items():
            out = out + self.term_mul(m, c)
        return out

    def degree(self):
        """Common Z-degree (monomial degree + component shift); None if
        inhomogeneous, and None for zero."""
        shifts = self.module.shifts
        degs = {mono_deg(m) + shifts[c] for (m, c) in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def is_homogeneous(self):
        return self.is_zero() or self.degree() is not None

    def multidegree(self, t):
        """Common Z x Z^t multidegree (shift folded into the first entry);
        None if not multihomogeneous."""
        n = self.module.ring.n
        cut = n - t
        shifts = self.module.shifts
        mds = set()
        for (m, c) in self.terms:
            mds.add((sum(m[:cut]) + shifts[c],) + tuple(m[cut:]))
            if len(mds) > 1:
                return None
        return mds.pop() if mds else None

    def is_multihomogeneous(self, t):
        return self.is_zero() or self.multidegree(t) is not None

    def component_poly(self, c):
        return {m: a for (m, cc), a in self.terms.items() if cc == c}

    def substitute_variables(self, images):
        """Apply the ring map x_i -> images[i-1] (list of ring polynomials)."""
        ring_ = self.module.ring
        field = ring_.field
        n = ring_.n
        out = self.module.zero()
        for (m, c), a in self.terms.items():
            acc = {ring_.zero_mono: a}
            for i in range(n):
                if m[i]:
                    acc = poly_mul(acc, poly_pow(images[i], m[i], field, n), field)
            out = out + PolyVector(self.module, {(mm, c): cc for mm, cc in acc.items()})
        return out

    def set_last_variable_zero(self):
        """Image in the free module over S_{n-1} (same shifts), x_n := 0."""
        ring_ = self.module.ring
        small = ring_.subring(ring_.n - 1)
        target = FreeModule(small, self.module.shifts)
        out = {}
        for (m, c), a in self.terms.items():
            if m[-1] == 0:
                out[(m[:-1], c)] = a
        return PolyVector(target, out, normalize=False)

    def extend_ring(self, extra):
        """Same element viewed over F_p[x1..x_{n+extra}]."""
        big = self.module.ring.extension(extra)
        target = FreeModule(big, self.module.shifts)
        pad = (0,) * extra
        return PolyVector(target, {(m + pad, c): a for (m, c), a in self.terms.items()},
                          normalize=False)


# ---------------------------------------------------------------------------
# text grammar: variables x1..xn, ^ powers, * products (juxtaposition ok),
# vectors as [f1, f2, ...]; ring header "ring p=32003 n=4"

_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<int>\d+)|(?P<op>[\^\*\+\-]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("var"):
            out.append(("var", int(m.group("var")[1:])))
        elif m.group("int"):
            out.append(("int", int(m.group("int"))))
        else:
            out.append(("op", m.group("op")))
    return out


def parse_poly(ring_, text):
    """Parse a ring polynomial: sum of terms like 3*x1^2*x3 (or 3x1^2x3)."""
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty polynomial")
    field = ring_.field
    result = {}
    sign, coeff, expo = 1, None, [0] * ring_.n
    started = False

    def flush():
        nonlocal sign, coeff, expo, started
        if not started:
            raise ValueError("empty term")
        c = field.normalize(sign * (1 if coeff is None else coeff))
        m = tuple(expo)
        v = (result.get(m, 0) + c) % field.p
        if v:
            result[m] = v
        else:
            result.pop(m, None)
        sign, coeff, expo, started = 1, None, [0] * ring_.n, False

    i = 0
    while i < len(toks):
        kind, val = toks[i]
        if kind == "op" and val in "+-":
            if started:
                flush()
            if val == "-":
                sign = -sign
            i += 1
            continue
        if kind == "int":
            coeff = val if coeff is None else coeff * val
            started = True
            i += 1
            continue
        if kind == "var":
            if not 1 <= val <= ring_.n:
                raise ValueError(f"variable x{val} out of range for n={ring_.n}")
            e = 1
            if i + 2 < len(toks) and toks[i + 1] == ("op", "^"):
                if toks[i + 2][0] != "int":
                    raise ValueError("expected integer exponent after ^")
                e = toks[i + 2][1]
                i += 2
            expo[val - 1] += e
            started = True
            i += 1
            continue
        if kind == "op" and val == "*":
            i += 1
            continue
        raise ValueError(f"unexpected token {val!r}")
    flush()
    return result


def parse_vector(module, text):
    """Parse a module element; [f1, .., fr] or a bare polynomial when rank 1."""
    text = text.strip()
    ring_ = module.ring
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError("unterminated vector")
        parts = text[1:-1].split(",")
        if len(parts) != module.rank:
            raise ValueError(f"expected rank {module.rank}, got {len(parts)} entries")
        terms = {}
        for c, chunk in enumerate(parts):
            chunk = chunk.strip()
            if chunk in ("", "0"):
                continue
            for m, a in parse_poly(ring_, chunk).items():
                terms[(m, c)] = a
        return PolyVector(module, terms)
    if module.rank != 1:
        raise ValueError("bare polynomial only allowed in rank-1 modules")
    return PolyVector(module, {(m, 0): a for m, a in parse_poly(ring_, text).items()})


def format_mono(mono, coeff=1):
    factors = []
    if coeff != 1:
        factors.append(str(coeff))
    for i, e in enumerate(mono):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    if not factors:
        return str(coeff)
    return "*".join(factors)


def format_poly(poly, order_key=None):
    if not poly:
        return "0"
    keys = sorted(poly, key=order_key, reverse=True) if order_key else sorted(poly, reverse=True)
    return " + ".join(format_mono(m, poly[m]) for m in keys)


def format_vector(vec, order_key=None):
    if vec.module.rank == 1:
        return format_poly(vec.component_poly(0), order_key)
    parts = [format_poly(vec.component_poly(c), order_key) for c in range(vec.module.rank)]
    return "[" + ", ".join(parts) + "]"


def parse_ring_header(line):
    """Parse 'ring p=32003 n=4'."""
    m = re.fullmatch(r"\s*ring\s+p\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s*", line)
    if not m:
        raise ValueError(f"bad ring header: {line!r}")
    return ring(int(m.group(1)), int(m.group(2)))
