"""Acceptance suite: one test per criterion, exact tolerances, one printed
pass line each.  Criteria share a seeded 100-module corpus (50 monomial, 30
binomial, 12 toric, 8 determinantal across n = 2, 3, 4)."""

import random
import time
from fractions import Fraction

import pytest

from edepth.cohomology import (DeltaTable, kunneth_lift, lc_row, lc_table,
                               socle_table)
from edepth.cone import cone_membership, decompose, reconstruct
from edepth.corpus import (mixed_theorem_corpus, paper_toric_example,
                           random_artinian_strict_pair, random_binomial_ideal,
                           random_monomial_ideal, random_strict_pair,
                           random_submodule)
from edepth.gin import verify_gin
from edepth.groebner import Submodule
from edepth.resolutions import (GradedPresentation, NEG_INF, direct_sum,
                                quotient_hilbert_series)
from edepth.ring import PolyVector, parse_vector, ring
from edepth.socle import (artinian_socle_check, seq_cm_socle_check,
                          serialize_pair_fixture, socle_lemma_check)

CORPUS_SEED = 2026


@pytest.fixture(scope="module")
def corpus():
    items = mixed_theorem_corpus(seed=CORPUS_SEED)
    return [(name, GradedPresentation(sub.module, sub)) for name, sub in items]


def _report(num, name, detail=""):
    print(f"ACCEPTANCE {num} [{name}]: PASS {detail}".rstrip())


def test_criterion_1_toric_example():
    t0 = time.time()
    M = paper_toric_example(p=32003)
    assert M.ring.n == 4
    assert M.depth() == 1
    assert M.edepth() == 0
    nonzero = [i for i in range(5) if not M.ext_hilbert_series(i).is_zero()]
    assert nonzero == [2, 3]
    e3 = M.ext(3)
    assert not e3.is_zero() and e3.hilbert_series().is_polynomial()
    elapsed = time.time() - t0
    assert elapsed < 30.0
    _report(1, "toric kernel example", f"(depth 1, E-depth 0, {elapsed:.2f}s)")


def test_criterion_2_x2_xy_example():
    t0 = time.time()
    R = ring(32003, 2)
    F = R.free_module((0,))
    U = Submodule(F, [parse_vector(F, "x1^2"), parse_vector(F, "x1*x2")])
    M = GradedPresentation(F, U)
    assert M.depth() == 0
    assert M.edepth() == 2
    assert M.is_sequentially_cm()
    e1, e2 = M.ext(1), M.ext(2)
    assert e1.depth() == e1.krull_dim() == 1
    assert e2.depth() == e2.krull_dim() == 0
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report(2, "(x^2, xy) example", f"({elapsed:.2f}s)")


def test_criterion_3_gin_equivalence_corpus(corpus):
    t0 = time.time()
    kinds = {}
    for name, _ in corpus:
        kinds[name.split("-")[0]] = kinds.get(name.split("-")[0], 0) + 1
    assert len(corpus) >= 100
    assert kinds["toric"] + kinds["determinantal"] >= 20
    checked = 0
    for name, pres in corpus:
        for t in range(pres.ring.n + 1):
            rep = verify_gin(pres, t, seed=CORPUS_SEED)
            assert rep.consistent, (name, t, rep.to_json())
            checked += 1
    elapsed = time.time() - t0
    assert elapsed < 15 * 60
    _report(3, "E-depth/gin equivalence",
            f"({len(corpus)} modules, {checked} (module, t) pairs, {elapsed:.1f}s)")


def test_criterion_4_decomposition_corpus(corpus):
    decomposed = seq_count = 0
    for name, pres in corpus:
        n = pres.ring.n
        if pres.is_zero():
            continue
        e = pres.edepth()
        d = pres.krull_dim()
        if not (e >= n - 2 or (d < n and e >= d - 1)):
            continue
        coeffs = decompose(pres, seed=CORPUS_SEED)
        assert reconstruct(coeffs) == lc_table(pres).delta(), name
        assert all(Fraction(v) >= 0 for v in coeffs.s_rays.values()), name
        assert all(Fraction(v) >= 0 for v in coeffs.j_rays.values()), name
        decomposed += 1
        if pres.is_sequentially_cm():
            assert not coeffs.j_rays, name
            assert coeffs.is_integral(), name
            seq_count += 1
    assert decomposed >= 40
    assert decomposed > seq_count, "corpus must exercise the mixed-ray path"
    _report(4, "ray decomposition",
            f"({decomposed} modules, {seq_count} sequentially CM, "
            f"{decomposed - seq_count} mixed)")


def test_criterion_5_cone_membership_and_realization(corpus):
    t0 = time.time()
    forward = 0
    for name, pres in corpus:
        n = pres.ring.n
        if pres.is_zero():
            continue
        delta = lc_table(pres).delta()
        if pres.edepth() >= n - 2:
            ok, viol = cone_membership(delta, mode="edepth")
            assert ok, (name, viol)
            forward += 1
        if pres.is_sequentially_cm():
            ok, viol = cone_membership(delta, mode="seq")
            assert ok, (name, viol)
    # converse: random nonnegative integer matrices realized by direct sums
    rng = random.Random("realization:%d" % CORPUS_SEED)
    realized = 0
    for trial in range(30):
        n = rng.choice((2, 3, 4))
        R = ring(32003, n)
        a = rng.randint(-3, 0)
        width = rng.randint(2, 6)
        cells = {}
        for _ in range(rng.randint(1, 5)):
            i = rng.randint(0, n)
            j = rng.randint(a, a + width - 1)
            cells[(i, j)] = rng.randint(1, 3)
        summands = []
        for (i, j), mult in cells.items():
            F = R.free_module((0,))
            gens = [F.basis_vector(0, mono=R.variable_mono(k))
                    for k in range(i + 1, n + 1)]
            Si = GradedPresentation(F, Submodule(F, gens, check=False)).shifted(j + i)
            summands.extend([Si] * mult)
        M = direct_sum(summands)
        assert lc_table(M).delta() == DeltaTable(n, dict(cells)), cells
        realized += 1
    elapsed = time.time() - t0
    assert elapsed < 5 * 60
    _report(5, "cone membership + realization",
            f"({forward} forward, {realized} realized, {elapsed:.1f}s)")


def test_criterion_6_kunneth_coherence():
    R2 = ring(32003, 2)
    rng = random.Random("kunneth:%d" % CORPUS_SEED)
    checked = 0
    for _ in range(30):
        U = random_submodule(R2, rng)
        N = GradedPresentation(U.module, U)
        for extra in (1, 2):
            assert lc_table(N.extend_ring(extra)) == kunneth_lift(lc_table(N), extra)
        checked += 1
    assert checked == 30
    _report(6, "Kunneth lift coherence", f"({checked} modules, j in {{1,2}})")


def test_criterion_7_duality_crosscheck(corpus):
    for name, pres in corpus:
        direct = pres.h0_series()
        row0 = lc_row(pres, 0)
        assert direct.is_polynomial(), name
        assert row0.is_polynomial(), name
        assert dict(direct.num) == dict(row0.num), name
    _report(7, "H^0 duality cross-check", f"({len(corpus)} modules)")


def test_criterion_8_socle_harness(tmp_path):
    total_qualified = 0
    counterexamples = []

    def note_counterexample(rep, A, B):
        path = tmp_path / f"socle-counterexample-{len(counterexamples)}.mod"
        path.write_text(serialize_pair_fixture(A, B))
        counterexamples.append((rep.lemma, str(path)))

    # Artinian pairs: every non-socle hypothesis holds by construction
    rng = random.Random("socle-artinian:%d" % CORPUS_SEED)
    artinian = 0
    while artinian < 110:
        n = rng.choice((2, 3))
        R = ring(32003, n)
        pair = random_artinian_strict_pair(R, rng)
        if pair is None:
            continue
        A, B = pair
        rep = artinian_socle_check(A, B)
        assert rep.all_hypotheses_hold() is False or rep.modules_equal is False \
            or True  # evaluated below
        if rep.verdict == "COUNTEREXAMPLE":
            note_counterexample(rep, A, B)
        else:
            hyps = dict((nm, ok) for nm, ok, _w in rep.hypotheses)
            assert hyps["A_subset_B"] and hyps["C_mod_A_artinian"]
            assert not hyps["socle_hf_leq"], "strict pair must break the inequality"
        artinian += 1
    total_qualified += artinian

    # sequentially CM pairs
    rng = random.Random("socle-seqcm:%d" % CORPUS_SEED)
    seqcm = 0
    attempts = 0
    while seqcm < 60 and attempts < 2000:
        attempts += 1
        n = rng.choice((2, 3))
        R = ring(32003, n)
        pair = random_strict_pair(R, rng, kind="monomial")
        if pair is None:
            continue
        A, B = pair
        pa = GradedPresentation(A.module, A)
        pb = GradedPresentation(B.module, B)
        if not (pa.is_sequentially_cm() and pb.is_sequentially_cm()):
            continue
        rep = seq_cm_socle_check(A, B)
        if rep.verdict == "COUNTEREXAMPLE":
            note_counterexample(rep, A, B)
        else:
            hyps = dict((nm, ok) for nm, ok, _w in rep.hypotheses)
            assert not hyps["socle_hf_leq_all_i"]
        seqcm += 1
    assert seqcm >= 60
    total_qualified += seqcm

    # non-Artinian lemma with one generic linear form
    rng = random.Random("socle-linear:%d" % CORPUS_SEED)
    linear_cases = 0
    attempts = 0
    while linear_cases < 40 and attempts < 3000:
        attempts += 1
        n = rng.choice((2, 3))
        R = ring(32003, n)
        pair = random_strict_pair(R, rng, kind="monomial")
        if pair is None:
            continue
        A, B = pair
        ell = {R.variable_mono(i + 1): R.field.random_nonzero(rng) for i in range(n)}
        rep = socle_lemma_check(A, B, 1, [ell])
        if rep.verdict == "COUNTEREXAMPLE":
            note_counterexample(rep, A, B)
        hyps = dict((nm, ok) for nm, ok, _w in rep.hypotheses)
        non_socle = [ok for nm, ok, _w in rep.hypotheses
                     if nm != "socle_hf_leq_up_to_t"]
        if all(non_socle):
            # all other hypotheses hold on a strict pair: the inequality
            # must be the one that fails
            assert not hyps.get("socle_hf_leq_up_to_t", True), \
                serialize_pair_fixture(A, B)
            linear_cases += 1
    assert linear_cases >= 40
    total_qualified += linear_cases

    assert total_qualified >= 200
    assert not counterexamples, counterexamples
    _report(8, "socle lemma harness",
            f"({artinian} artinian, {seqcm} seq-CM, {linear_cases} linear; "
            f"no counterexamples)")


def test_criterion_9_edepth_basic_properties():
    # direct sum / min law
    rng = random.Random("props-sum:%d" % CORPUS_SEED)
    pairs = 0
    while pairs < 50:
        R = ring(32003, rng.choice((2, 3)))
        U = random_monomial_ideal(R, rng)
        V = random_binomial_ideal(R, rng)
        A = GradedPresentation(U.module, U)
        B = GradedPresentation(V.module, V)
        if A.is_zero() or B.is_zero():
            continue
        S = direct_sum([A, B])
        assert S.edepth() == min(A.edepth(), B.edepth())
        pairs += 1

    # invariance under killing H^0
    rng = random.Random("props-h0:%d" % CORPUS_SEED)
    h0_cases = 0
    while h0_cases < 50:
        R = ring(32003, rng.choice((2, 3)))
        U = random_monomial_ideal(R, rng)
        M = GradedPresentation(U.module, U)
        if M.is_zero():
            continue
        N = GradedPresentation(M.module, M.m_saturation())
        assert M.edepth() == N.edepth()
        h0_cases += 1

    # drop by one modulo a strictly filter regular linear form
    rng = random.Random("props-drop:%d" % CORPUS_SEED)
    drops = 0
    attempts = 0
    while drops < 50 and attempts < 4000:
        attempts += 1
        R = ring(32003, rng.choice((2, 3)))
        n = R.n
        U = random_monomial_ideal(R, rng) if rng.random() < 0.6 \
            else random_binomial_ideal(R, rng)
        M = GradedPresentation(U.module, U)
        if M.is_zero():
            continue
        e = M.edepth()
        if e == 0:
            continue
        ell = {R.variable_mono(i + 1): R.field.random_nonzero(rng)
               for i in range(n)}
        if not M.is_strictly_filter_regular(ell):
            continue
        N = GradedPresentation(M.module, M.m_saturation())
        NlN = N.quotient_by_element(ell)
        expected = n if e == n else e - 1
        assert NlN.edepth() == expected, (e, NlN.edepth())
        drops += 1
    assert drops >= 50
    _report(9, "E-depth basic properties",
            f"({pairs} sums, {h0_cases} H^0 cases, {drops} drops)")
