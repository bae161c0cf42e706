"""Ladder witnesses and spectrum soundness on the countable fragment."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ordercuts.cardinals import CardSet, CofPair, ONE, aleph
from ordercuts.errors import DomainError
from ordercuts.oracle import (
    CutWitness,
    LexChain,
    NatChain,
    RatChain,
    RevChain,
    SumChain,
    WitnessSide,
    concretize,
    derive_cf,
    derive_ci,
    sample_cuts,
    spectrum_soundness,
    verify_witness,
)
from ordercuts.order_terms import (
    Atom,
    cf,
    chain,
    ci,
    rev,
    sum_of,
    well,
)

A0 = aleph(0)
OMEGA = well(A0)
OMEGA_STAR = rev(OMEGA)

RAT_ATOM = Atom("rat", A0, A0, CardSet.of(A0), CardSet.of(A0), A0,
                (CofPair(ONE, A0), CofPair(A0, ONE), CofPair(A0, A0)))


class TestVerifyWitness:
    def test_integer_step_cut(self):
        z = concretize(sum_of(OMEGA_STAR, OMEGA))
        w = CutWitness("step", WitnessSide.at((0, 0)), WitnessSide.at((1, 0)),
                       CofPair(ONE, ONE))
        assert verify_witness(z, w, 100).ok

    def test_sqrt2_gap_any_depth(self):
        rat = RatChain()

        def lower():
            lo, hi = Fraction(1), Fraction(2)
            while True:
                mid = (lo + hi) / 2
                if mid * mid < 2:
                    lo = mid
                    yield lo
                else:
                    hi = mid

        def upper():
            lo, hi = Fraction(1), Fraction(2)
            yield hi
            while True:
                mid = (lo + hi) / 2
                if mid * mid < 2:
                    lo = mid
                else:
                    hi = mid
                    yield hi

        w = CutWitness("sqrt2", WitnessSide.via(lower), WitnessSide.via(upper),
                       CofPair(A0, A0))
        for depth in (5, 25, 100):
            assert verify_witness(rat, w, depth).ok

    def test_nat_symmetric_claims_fail(self):
        nat = NatChain()
        wide = CutWitness("wide", WitnessSide.via(lambda: itertools.count(0)),
                          WitnessSide.via(lambda: (10 ** 6 - n
                                                   for n in itertools.count(0))),
                          CofPair(A0, A0))
        tight = CutWitness("tight", WitnessSide.via(lambda: itertools.count(0)),
                           WitnessSide.via(lambda: (200 - n
                                                    for n in itertools.count(0))),
                           CofPair(A0, A0))
        for depth in (10, 50, 100):
            assert not verify_witness(nat, wide, depth).ok
            assert not verify_witness(nat, tight, depth).ok

    def test_malformed_ladder_reports_index(self):
        nat = NatChain()
        w = CutWitness("bad", WitnessSide.via(lambda: iter([0, 2, 1])),
                       WitnessSide.via(lambda: (100 - n for n in itertools.count(0))),
                       CofPair(A0, A0))
        result = verify_witness(nat, w, 10)
        assert not result.ok
        assert "index 2" in result.reason

    def test_unseparated_rejected(self):
        nat = NatChain()
        w = CutWitness("crossed", WitnessSide.at(10), WitnessSide.at(5),
                       CofPair(ONE, ONE))
        assert not verify_witness(nat, w, 10).ok

    def test_acceptance_monotone_in_depth(self):
        z = concretize(sum_of(OMEGA, OMEGA_STAR))
        w = CutWitness("middle",
                       WitnessSide.via(lambda: ((0, n) for n in itertools.count(0))),
                       WitnessSide.via(lambda: ((1, n) for n in itertools.count(0))),
                       CofPair(A0, A0))
        verdicts = [verify_witness(z, w, d).ok for d in (5, 20, 50, 100)]
        assert verdicts == [True, True, True, True]


class TestSoundness:
    def test_omega_plus_omega_star(self):
        report = spectrum_soundness(sum_of(OMEGA, OMEGA_STAR))
        assert report.ok
        witnessed = {r.pair for r in report.rows if r.ok}
        assert CofPair(A0, A0) in witnessed
        assert CofPair(ONE, ONE) in witnessed

    def test_omega_has_no_symmetric_witness(self):
        report = spectrum_soundness(OMEGA)
        assert report.ok
        assert {r.pair for r in report.rows} == {CofPair(ONE, ONE)}
        assert sample_cuts(concretize(OMEGA)) == frozenset({CofPair(ONE, ONE)})

    def test_rationals_atom(self):
        report = spectrum_soundness(RAT_ATOM)
        assert report.ok
        assert len(report.rows) == 3

    def test_unclaimed_pair_detected(self):
        # claim omits the middle cut: the sampler must flag it
        bad_atom = Atom("rat", A0, A0, CardSet.of(A0), CardSet.of(A0), A0,
                        (CofPair(ONE, A0), CofPair(A0, ONE)))
        report = spectrum_soundness(bad_atom)
        assert not report.ok
        assert CofPair(A0, A0) in report.unclaimed

    def test_non_concretizable_rejected(self):
        with pytest.raises(DomainError):
            spectrum_soundness(well(aleph(1)))


class TestLexSampling:
    def test_zxz_principal_pattern(self):
        zz = LexChain((SumChain(RevChain(NatChain()), NatChain()),) * 2)
        sampled = sample_cuts(zz, depth=100, samples=40)
        principal = {p for p in sampled if p.is_principal}
        assert principal == {CofPair(ONE, ONE)}

    def test_zxz_between(self):
        zz = LexChain((SumChain(RevChain(NatChain()), NatChain()),) * 2)
        a = ((1, 0), (1, 0))
        b = ((1, 1), (1, 0))
        mid = zz.between(a, b)
        assert mid is not None
        assert zz.cmp(a, mid) < 0 < zz.cmp(b, mid)


class TestDerivedCfCi:
    def test_against_symbolic(self):
        terms = [OMEGA, OMEGA_STAR, chain(1), chain(4),
                 sum_of(OMEGA_STAR, OMEGA), sum_of(OMEGA, OMEGA),
                 sum_of(chain(2), OMEGA_STAR), RAT_ATOM]
        for t in terms:
            c = concretize(t)
            assert derive_cf(c) == cf(t)
            assert derive_ci(c) == ci(t)


countable_terms = st.recursive(
    st.sampled_from([OMEGA, OMEGA_STAR, chain(1), chain(3)]),
    lambda inner: st.one_of(
        inner.map(rev),
        st.tuples(inner, inner).map(lambda ab: sum_of(*ab)),
    ),
    max_leaves=5,
)


@settings(max_examples=40, deadline=None)
@given(countable_terms)
def test_soundness_on_random_terms(t):
    report = spectrum_soundness(t, depth=60)
    assert report.ok, "\n".join(report.render_lines())


@settings(max_examples=25, deadline=None)
@given(countable_terms)
def test_witness_acceptance_monotone_in_depth(t):
    # every structural witness accepted at depth 90 is accepted below it
    from ordercuts.oracle import term_witnesses
    chain_ = concretize(t)
    for _, witness in term_witnesses(t):
        if verify_witness(chain_, witness, 90).ok:
            for depth in (60, 30, 10):
                assert verify_witness(chain_, witness, depth).ok
