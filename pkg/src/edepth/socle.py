"""Executable socle lemmas: the Artinian inequality lemma, its non-Artinian
extension, and the sequentially Cohen-Macaulay corollary.

Each checker verifies every hypothesis before looking at the conclusion; a
report whose hypotheses all hold but whose modules differ would be a
counterexample to a theorem, and is flagged as such (the harnesses treat it
as an engine bug and serialize the instance).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import socle_table
from .groebner import Submodule
from .resolutions import GradedPresentation, quotient_hilbert_series
from .ring import format_vector, poly_degree


@dataclass
class SocleLemmaReport:
    lemma: str
    hypotheses: list = field(default_factory=list)  # (name, holds, witness)
    conclusion_checked: bool = False
    modules_equal: bool = None
    verdict: str = "hypothesis-failed"

    def all_hypotheses_hold(self):
        return all(ok for (_n, ok, _w) in self.hypotheses)

    def finish(self, equal):
        self.conclusion_checked = True
        self.modules_equal = equal
        self.verdict = "confirmed" if equal else "COUNTEREXAMPLE"
        return self

    def to_json(self):
        return {"lemma": self.lemma,
                "hypotheses": [{"name": n, "holds": ok, "witness": w}
                               for (n, ok, w) in self.hypotheses],
                "conclusion_checked": self.conclusion_checked,
                "modules_equal": self.modules_equal,
                "verdict": self.verdict}


def _socle_preimage(sub):
    """(U : m) = intersection of the U : x_i (elements m-annihilated mod U)."""
    ring_ = sub.ring
    cur = None
    for i in range(1, ring_.n + 1):
        c = sub.colon(ring_.variable_poly(i))
        cur = c if cur is None else cur.intersection(c)
    if cur is None:
        F = sub.module
        cur = Submodule(F, [F.basis_vector(c) for c in range(F.rank)], check=False)
    return cur


def socle_hf_of_quotient(A, C=None):
    """HF(soc(C/A)) for A <= C <= F, as a dict (C defaults to all of F).

    soc(C/A) = ((A : m) cap C) / A; finite when C/A is Artinian.
    """
    F = A.module
    S_A = _socle_preimage(A)
    if C is not None:
        S_A = S_A.intersection(C)
    diff = quotient_hilbert_series(F, A) - quotient_hilbert_series(F, S_A)
    if not diff.is_polynomial():
        raise ValueError("socle is not finite dimensional")
    return dict(diff.num)


def _entrywise_leq(hf_a, hf_b):
    """hf_a <= hf_b as finitely supported integer vectors; witness degree on
    failure."""
    for j in sorted(set(hf_a) | set(hf_b)):
        if hf_a.get(j, 0) > hf_b.get(j, 0):
            return False, j
    return True, None


def _quotient_is_artinian(A, C=None):
    F = A.module
    hs = quotient_hilbert_series(F, A)
    if C is not None:
        hs = hs - quotient_hilbert_series(F, C)
    return hs.is_polynomial()


def artinian_socle_check(A, B, C=None):
    """A <= B <= C with C/A Artinian: if HF(soc(C/A)) <= HF(soc(C/B)) then
    A = B.  C defaults to the ambient free module (then F/A is Artinian)."""
    rep = SocleLemmaReport(lemma="artinian-socle")
    ok = A.is_subset(B)
    rep.hypotheses.append(("A_subset_B", ok, None))
    if C is not None:
        okc = B.is_subset(C)
        rep.hypotheses.append(("B_subset_C", okc, None))
        ok = ok and okc
    art = _quotient_is_artinian(A, C)
    rep.hypotheses.append(("C_mod_A_artinian", art, None))
    if not (ok and art):
        return rep
    hf_a = socle_hf_of_quotient(A, C)
    hf_b = socle_hf_of_quotient(B, C)
    leq, bad = _entrywise_leq(hf_a, hf_b)
    rep.hypotheses.append(("socle_hf_leq", leq, bad))
    if not leq:
        return rep
    return rep.finish(A.equals(B))


def socle_map_injective_degreewise(A, B, C=None):
    """When soc(C/A) -> soc(C/B) respects the inequality, the map is
    injective: the kernel ((A:m) cap C cap B)/A must vanish."""
    S_A = _socle_preimage(A)
    if C is not None:
        S_A = S_A.intersection(C)
    ker = S_A.intersection(B)
    F = A.module
    diff = quotient_hilbert_series(F, A) - quotient_hilbert_series(F, ker)
    return diff.is_zero()


def socle_lemma_check(A, B, t, linear_forms):
    """The non-Artinian lemma: A <= B in F, l_1..l_t a linear filter regular
    sequence for both quotients with equal Hilbert functions of the saturated
    sums, socle inequalities in cohomological degrees 0..t, and both E-depths
    at least t-1 imply A = B."""
    rep = SocleLemmaReport(lemma="socle-lemma")
    F = A.module
    rep.hypotheses.append(("A_subset_B", A.is_subset(B), None))
    lin = all(poly_degree(l) == 1 for l in linear_forms) and len(linear_forms) == t
    rep.hypotheses.append(("linear_forms", lin, None))
    if not rep.all_hypotheses_hold():
        return rep

    def filter_regular_sequence(sub):
        pres = GradedPresentation(F, sub)
        for idx, l in enumerate(linear_forms):
            if not pres.is_filter_regular(l):
                return False, idx
            pres = pres.quotient_by_element(l)
        return True, None

    fra, wa = filter_regular_sequence(A)
    frb, wb = filter_regular_sequence(B)
    rep.hypotheses.append(("filter_regular_for_A", fra, wa))
    rep.hypotheses.append(("filter_regular_for_B", frb, wb))

    def saturated_sum_series(sub):
        cur = sub
        for l in linear_forms:
            extra = [F.basis_vector(c).poly_mul(l) for c in range(F.rank)]
            cur = cur.plus(extra)
        pres = GradedPresentation(F, cur)
        return quotient_hilbert_series(F, pres.m_saturation())

    sat_eq = saturated_sum_series(A) == saturated_sum_series(B)
    rep.hypotheses.append(("saturated_sums_equal_hf", sat_eq, None))

    soc_a = socle_table(GradedPresentation(F, A))
    soc_b = socle_table(GradedPresentation(F, B))
    soc_ok, witness = True, None
    for i in range(min(t, F.ring.n) + 1):
        leq, bad = _entrywise_leq(soc_a[i], soc_b[i])
        if not leq:
            soc_ok, witness = False, (i, bad)
            break
    rep.hypotheses.append(("socle_hf_leq_up_to_t", soc_ok, witness))

    ea = GradedPresentation(F, A).edepth()
    eb = GradedPresentation(F, B).edepth()
    rep.hypotheses.append(("edepth_at_least_t_minus_1", min(ea, eb) >= t - 1,
                           (ea, eb)))
    if not rep.all_hypotheses_hold():
        return rep
    return rep.finish(A.equals(B))


def seq_cm_socle_check(A, B):
    """Both quotients sequentially Cohen-Macaulay and socle inequalities in
    every cohomological degree imply A = B."""
    rep = SocleLemmaReport(lemma="seq-cm-socle")
    F = A.module
    rep.hypotheses.append(("A_subset_B", A.is_subset(B), None))
    if not rep.all_hypotheses_hold():
        return rep
    pa = GradedPresentation(F, A)
    pb = GradedPresentation(F, B)
    rep.hypotheses.append(("F_mod_A_seq_cm", pa.is_sequentially_cm(), None))
    rep.hypotheses.append(("F_mod_B_seq_cm", pb.is_sequentially_cm(), None))
    if not rep.all_hypotheses_hold():
        return rep
    soc_a = socle_table(pa)
    soc_b = socle_table(pb)
    soc_ok, witness = True, None
    for i in range(F.ring.n + 1):
        leq, bad = _entrywise_leq(soc_a[i], soc_b[i])
        if not leq:
            soc_ok, witness = False, (i, bad)
            break
    rep.hypotheses.append(("socle_hf_leq_all_i", soc_ok, witness))
    if not soc_ok:
        return rep
    return rep.finish(A.equals(B))


def serialize_pair_fixture(A, B):
    """Text fixture for a pair of submodules, in the input grammar."""
    ring_ = A.ring
    lines = [f"ring p={ring_.p} n={ring_.n}"]
    for name, sub in (("A", A), ("B", B)):
        shifts = ",".join(str(s) for s in sub.module.shifts)
        lines.append(f"submodule {name} shifts={shifts}")
        for g in sub.gens:
            lines.append("  " + format_vector(g))
        lines.append("end")
    return "\n".join(lines) + "\n"
