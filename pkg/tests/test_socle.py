"""Socle lemma checkers: hypotheses verified, conclusions only read when the
hypotheses hold, and the contrapositive harnesses on strict pairs."""

import random

import pytest

from edepth.corpus import random_monomial_ideal
from edepth.groebner import Submodule
from edepth.resolutions import GradedPresentation
from edepth.ring import parse_vector, ring
from edepth.socle import (artinian_socle_check, seq_cm_socle_check,
                          serialize_pair_fixture, socle_hf_of_quotient,
                          socle_lemma_check, socle_map_injective_degreewise)
from edepth.cli import parse_module_file


def ideal(R, *texts):
    F = R.free_module((0,))
    return Submodule(F, [parse_vector(F, t) for t in texts])


def test_socle_hf_examples(R2):
    m = ideal(R2, "x1", "x2")
    m2 = ideal(R2, "x1^2", "x1*x2", "x2^2")
    assert socle_hf_of_quotient(m) == {0: 1}
    assert socle_hf_of_quotient(m2) == {1: 2}


def test_artinian_equal_pair(R2):
    m = ideal(R2, "x1", "x2")
    rep = artinian_socle_check(m, m)
    assert rep.verdict == "confirmed" and rep.modules_equal


def test_artinian_m2_vs_m_inequality_fails(R2):
    m = ideal(R2, "x1", "x2")
    m2 = ideal(R2, "x1^2", "x1*x2", "x2^2")
    rep = artinian_socle_check(m2, m)
    assert rep.verdict == "hypothesis-failed"
    failed = {n for n, ok, _w in rep.hypotheses if not ok}
    assert failed == {"socle_hf_leq"}


def test_artinian_with_smaller_ambient(R2):
    # C = m, A = m^3 + (x1 x2), B = m^2: socles inside C
    m = ideal(R2, "x1", "x2")
    m2 = ideal(R2, "x1^2", "x1*x2", "x2^2")
    A = ideal(R2, "x1^3", "x1^2*x2", "x1*x2^2", "x2^3")
    rep = artinian_socle_check(A, m2, C=m)
    assert rep.conclusion_checked is False or rep.verdict != "COUNTEREXAMPLE"


def test_artinian_strict_pairs_random():
    # contrapositive: over strict Artinian pairs the inequality always fails
    R = ring(32003, 2)
    rng = random.Random(7)
    seen = 0
    while seen < 25:
        B = random_monomial_ideal(R, rng, max_deg=3)
        if not GradedPresentation(B.module, B).hilbert_series().is_polynomial():
            continue
        extra = {(_mono(R, rng), 0): 1}
        from edepth.ring import PolyVector
        A = Submodule(B.module, [g.term_mul(_mono(R, rng)) for g in B.gens])
        if not GradedPresentation(A.module, A).hilbert_series().is_polynomial():
            continue
        if A.equals(B):
            continue
        rep = artinian_socle_check(A, B)
        assert rep.verdict != "COUNTEREXAMPLE", serialize_pair_fixture(A, B)
        seen += 1


def _mono(R, rng):
    e = [0] * R.n
    e[rng.randrange(R.n)] = rng.randint(0, 1)
    return tuple(e)


def test_injectivity_when_inequality_holds(R2):
    m = ideal(R2, "x1", "x2")
    assert socle_map_injective_degreewise(m, m)


def test_noninjective_forces_inequality_failure():
    # contrapositive of the proof structure: whenever the socle map has a
    # kernel somewhere, the Hilbert function inequality must fail
    R = ring(32003, 2)
    rng = random.Random(13)
    seen = 0
    while seen < 15:
        B = random_monomial_ideal(R, rng, max_deg=3)
        if not GradedPresentation(B.module, B).hilbert_series().is_polynomial():
            continue
        A = Submodule(B.module, [g.term_mul(_mono(R, rng)) for g in B.gens])
        if not GradedPresentation(A.module, A).hilbert_series().is_polynomial():
            continue
        if A.equals(B):
            continue
        if not socle_map_injective_degreewise(A, B):
            rep = artinian_socle_check(A, B)
            failed = {n for n, ok, _w in rep.hypotheses if not ok}
            assert "socle_hf_leq" in failed
        seen += 1


def test_seq_cm_socle_example(R2):
    A = ideal(R2, "x1^2", "x1*x2")
    rep = seq_cm_socle_check(A, A)
    assert rep.verdict == "confirmed"
    B = ideal(R2, "x1", "x2")
    rep2 = seq_cm_socle_check(A, B)
    assert rep2.verdict == "hypothesis-failed"
    failed = {n for n, ok, _w in rep2.hypotheses if not ok}
    assert failed == {"socle_hf_leq_all_i"}


def test_seq_cm_dimension_mismatch_fails_inequality(R2):
    # quotients of different Krull dimension: the inequality must fail
    A = ideal(R2, "x1")          # dim 1
    B = ideal(R2, "x1", "x2^2")  # dim 0
    pa, pb = (GradedPresentation(s.module, s) for s in (A, B))
    assert pa.is_sequentially_cm() and pb.is_sequentially_cm()
    assert pa.krull_dim() != pb.krull_dim()
    rep = seq_cm_socle_check(A, B)
    assert rep.verdict == "hypothesis-failed"


def test_socle_lemma_t0_reduces_to_artinian(R2):
    # t = 0: the saturation equality plays the role of the fixed ambient
    A = ideal(R2, "x1^2", "x1*x2", "x2^3")
    B = ideal(R2, "x1^2", "x1*x2", "x2^2")
    rep = socle_lemma_check(A, B, 0, [])
    # saturations are both (x1) + torsion: hypotheses computed, no crash
    assert rep.lemma == "socle-lemma"
    assert rep.verdict in ("confirmed", "hypothesis-failed")


def test_socle_lemma_equal_pair_with_forms(R2):
    A = ideal(R2, "x1^2", "x1*x2")
    ell = {R2.variable_mono(1): 3, R2.variable_mono(2): 1}
    rep = socle_lemma_check(A, A, 1, [ell])
    assert rep.verdict == "confirmed"


def test_socle_lemma_rejects_nonlinear_forms(R2):
    A = ideal(R2, "x1^2")
    quad = {(2, 0): 1}
    rep = socle_lemma_check(A, A, 1, [quad])
    assert not rep.all_hypotheses_hold()


def test_fixture_round_trip(R2):
    A = ideal(R2, "x1^2", "x1*x2")
    B = ideal(R2, "x1", "x2")
    text = serialize_pair_fixture(A, B)
    ring_, subs = parse_module_file(text)
    assert ring_.n == 2 and set(subs) == {"A", "B"}
    assert subs["A"].equals(A) and subs["B"].equals(B)
