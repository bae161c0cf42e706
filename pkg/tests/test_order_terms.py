"""Order-term attributes: cf/ci, Coin/Cofin, cut spectra, side conditions,
completeness predicates, and the extension recipe."""

import pytest
from hypothesis import given, settings, strategies as st

from ordercuts.cardinals import (
    CardSet,
    CofPair,
    ONE,
    ZERO,
    aleph,
    reg_below,
)
from ordercuts.errors import DomainError, NotDerivableError, SideConditionError
from ordercuts.order_terms import (
    Atom,
    CardinalSchedule,
    ChainPairs,
    ChainSegLeft,
    ChainSegRight,
    Completion,
    CutSpectrum,
    DOM_DEFAULT,
    DOM_ONE,
    DOM_SINGLE,
    EMPTY,
    ExplicitPairs,
    LexRefined,
    LexSchedule,
    PHI_SUCC,
    PhiMap,
    PhiPiece,
    RowSegLeft,
    RowSegRight,
    RULE_DSUCC,
    RULE_ID,
    cf,
    chain,
    check_side_conditions,
    ci,
    coin_cofin,
    completeness_predicates,
    cut_spectrum,
    extend_order,
    rev,
    nonprincipal_cuts_all_asymmetric,
    sum_of,
    well,
)


def pairs(*items):
    return frozenset(CofPair(a, b) for a, b in items)


A0, A1, A2, A3, A4, A5 = (aleph(n) for n in range(6))
OMEGA = well(A0)
OMEGA_STAR = rev(OMEGA)
Z_ORDER = sum_of(OMEGA_STAR, OMEGA)

SWAP_PHI = PhiMap((
    PhiPiece(DOM_ONE, None, A0),
    PhiPiece(DOM_SINGLE, A0, A1),
    PhiPiece(DOM_SINGLE, A1, A0),
))

RAT_ATOM = Atom("rat", A0, A0, CardSet.of(A0), CardSet.of(A0), A0,
                (CofPair(ONE, A0), CofPair(A0, ONE), CofPair(A0, A0)))

REAL_ATOM = Atom("realline", A0, A0, CardSet.of(A0), CardSet.of(A0), None,
                 (CofPair(ONE, A0), CofPair(A0, ONE)))

Z_ATOM = Atom("intline", A0, A0, CardSet.of(A0), CardSet.of(A0), A0,
              (CofPair(ONE, ONE),))


def recipe(mu, k0, l0, inner=EMPTY):
    sched = CardinalSchedule(mu, aleph(mu.index.succ()), RULE_DSUCC, RULE_DSUCC)
    return LexSchedule(mu, k0, l0, sched, inner)


class TestCfCi:
    def test_well_order(self):
        assert cf(well(A1)) == A1
        assert ci(well(A1)) == ONE

    def test_empty_sentinel(self):
        assert cf(EMPTY) == ZERO and ci(EMPTY) == ZERO

    def test_z_order(self):
        # leftmost piece is omega*, so there is no least element
        assert ci(Z_ORDER) == A0
        assert cf(Z_ORDER) == A0

    def test_rev_swaps(self):
        t = sum_of(OMEGA, chain(2))
        assert cf(rev(t)) == ci(t)
        assert ci(rev(t)) == cf(t)

    def test_completion_preserves(self):
        t = Completion(RAT_ATOM)
        assert cf(t) == A0 and ci(t) == A0

    def test_lexref_cf_is_k0(self):
        t = LexRefined(A2, A1, A1, SWAP_PHI, SWAP_PHI, EMPTY)
        assert cf(t) == A1
        assert ci(t) == A1

    def test_lexsched_cf_is_k0(self):
        assert cf(recipe(A2, A1, A1)) == A1


class TestCoinCofin:
    def test_well_omega(self):
        coin, cofin = coin_cofin(OMEGA)
        assert coin.is_empty
        assert cofin == CardSet.of(A0)

    def test_completion_identity(self):
        atom = Atom("i", A0, A0, CardSet.of(A0), CardSet.of(A0))
        assert coin_cofin(Completion(atom)) == coin_cofin(atom)

    def test_rev_w1(self):
        coin, cofin = coin_cofin(rev(well(A1)))
        assert coin == CardSet.of(A0, A1)
        assert cofin.is_empty

    def test_sum_unions(self):
        coin, cofin = coin_cofin(sum_of(OMEGA, rev(well(A1))))
        assert coin == CardSet.of(A0, A1)
        assert cofin == CardSet.of(A0)


class TestCutSpectrumBasics:
    def test_well_omega(self):
        assert cut_spectrum(OMEGA).pairs_below(A2) == pairs((ONE, ONE))

    def test_well_uncountable(self):
        spec = cut_spectrum(well(A2))
        assert spec.pairs_below(A3) == pairs((ONE, ONE), (A0, ONE), (A1, ONE))

    def test_omega_plus_omega_star(self):
        spec = cut_spectrum(sum_of(OMEGA, OMEGA_STAR))
        assert spec.pairs_below(A1) == pairs((ONE, ONE), (A0, A0))

    def test_free_completion_rejected(self):
        with pytest.raises(NotDerivableError):
            cut_spectrum(Completion(RAT_ATOM))

    def test_atom_without_cuts_rejected(self):
        bare = Atom("i", A0, A0, CardSet.of(A0), CardSet.of(A0))
        with pytest.raises(NotDerivableError):
            cut_spectrum(bare)

    def test_finite_chains(self):
        assert cut_spectrum(chain(1)).is_empty
        assert cut_spectrum(chain(4)).pairs_below(A1) == pairs((ONE, ONE))


class TestRefinedSpectrum:
    def test_worked_aleph2_example(self):
        t = LexRefined(A2, A2, A2, SWAP_PHI, SWAP_PHI, EMPTY)
        spec = cut_spectrum(t)
        assert spec.pairs_below(A3) == pairs(
            (ONE, A2), (A2, ONE), (A0, A1), (A1, A0))
        comp = completeness_predicates(t)
        assert comp.symmetric and comp.strong and comp.extreme

    def test_phi_gate(self):
        bad = PhiMap((PhiPiece(DOM_DEFAULT, None, A3),))  # lands outside Rl
        t = LexRefined(A2, A2, A2, bad, bad, EMPTY)
        with pytest.raises(SideConditionError) as err:
            cut_spectrum(t)
        assert "range" in err.value.condition

    def test_fixed_point_detected(self):
        fixed = PhiMap((PhiPiece(DOM_ONE, None, A0),
                        PhiPiece(DOM_DEFAULT, None, A0)))
        t = LexRefined(A1, A1, A2, fixed,
                       PhiMap((PhiPiece(DOM_ONE, None, A1),
                               PhiPiece(DOM_SINGLE, A0, A1))), EMPTY)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["phi-no-fixed-point"] is False
        spec = cut_spectrum(t)  # (phi) holds, so the spectrum is still exact
        assert spec.pairs_below(A2) == pairs((ONE, A1), (A1, ONE),
                                             (A0, A1), (A0, A0))
        assert not completeness_predicates(t).symmetric

    def test_succ_rule_piece(self):
        phi = PhiMap((PhiPiece(DOM_ONE, None, A0),
                      PhiPiece(DOM_SINGLE, A0, PHI_SUCC),
                      PhiPiece(DOM_SINGLE, A1, A0)))
        t = LexRefined(A2, A2, A2, phi, phi, EMPTY)
        spec = cut_spectrum(t)
        assert spec.pairs_below(A3) == pairs(
            (ONE, A2), (A2, ONE), (A0, A1), (A1, A0))


class TestScheduleSpectrum:
    def test_recipe_normal_form(self):
        t = recipe(A2, A1, A1)
        expected = CutSpectrum.of((
            ExplicitPairs((CofPair(ONE, A2), CofPair(A2, ONE)), True),
            RowSegRight(A2, reg_below(A2)),
            RowSegLeft(reg_below(A2), A3),
            ChainPairs(A2.index, 2, A3.index, 2),
            ChainSegRight(A4.index, 2, A3.index, 2),
            ChainSegLeft(A2.index, 2, A5.index, 2),
        ))
        assert cut_spectrum(t) == expected

    def test_recipe_enumeration(self):
        t = recipe(A2, A1, A1)
        assert cut_spectrum(t).pairs_below(aleph(6)) == pairs(
            (ONE, A2), (A2, ONE),
            (A2, A0), (A2, A1),
            (A0, A3), (A1, A3),
            (A2, A3), (A4, A5),
            (A4, A0), (A4, A1), (A4, A2),
            (A0, A5), (A1, A5),
        )

    def test_countable_mu_identity_schedule(self):
        sched = CardinalSchedule(A1, A2, RULE_ID, RULE_ID)
        t = LexSchedule(A0, A0, A0, sched, EMPTY)
        spec = cut_spectrum(t)
        assert spec.pairs_below(A4) == pairs(
            (ONE, A0), (A0, ONE), (A1, A2), (A1, A0), (A1, A1), (A0, A2))
        assert not completeness_predicates(t).symmetric

    def test_atom_inner_distinct_limits(self):
        atom = Atom("i", A0, A1, CardSet.of(A0, A1), CardSet.of(A0), A2)
        sched = CardinalSchedule(A4, A5, RULE_DSUCC, RULE_DSUCC, A3, A4)
        t = LexSchedule(A3, A1, A1, sched, atom)
        expected = CutSpectrum.of((
            ExplicitPairs((CofPair(ONE, A3), CofPair(A3, ONE)), True),
            RowSegRight(A4, reg_below(A2)),
            RowSegRight(A3, reg_below(A3)),
            RowSegLeft(reg_below(A1), A5),
            RowSegLeft(reg_below(A3), A4),
            ChainPairs(A4.index, 2, A5.index, 2),
            ChainPairs(A5.index, 2, aleph(6).index, 2),
            ChainSegRight(aleph(6).index, 2, A5.index, 2),
            ChainSegRight(A5.index, 2, A4.index, 2),
            ChainSegLeft(A4.index, 2, aleph(7).index, 2),
            ChainSegLeft(A3.index, 2, aleph(6).index, 2),
        ))
        assert cut_spectrum(t) == expected

    def test_singular_parameter_rejected(self):
        from ordercuts.cardinals import OrdinalIndex
        singular = aleph(OrdinalIndex.omega())
        sched = CardinalSchedule(A1, A2, RULE_DSUCC, RULE_DSUCC)
        t = LexSchedule(singular, A1, A1, sched, EMPTY)
        with pytest.raises(SideConditionError):
            cut_spectrum(t)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["regular-params"] is False


class TestSideConditions:
    def test_recipe_all_pass(self):
        checks = check_side_conditions(recipe(A2, A1, A1))
        assert all(c.passed for c in checks)

    def test_equal_tracks_fail_c(self):
        sched = CardinalSchedule(A2, A2, RULE_DSUCC, RULE_DSUCC)
        t = LexSchedule(A1, A1, A1, sched, EMPTY)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["cond-c"] is False

    def test_collision_at_nu_2_fails_c(self):
        # kappa_1 != lambda_1 but kappa_2 = lambda_2 = aleph(3)
        from ordercuts.order_terms import RULE_SUCC
        sched = CardinalSchedule(A1, A2, RULE_DSUCC, RULE_SUCC)
        assert sched.kappa_at(1) == sched.lambda_at(1) == A3
        t = LexSchedule(A1, A1, A1, sched, EMPTY)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["cond-c"] is False
        assert not completeness_predicates(t).symmetric

    def test_crossing_ranks_fail_b(self):
        # lambda grows faster: kappa_{nu+1} >= lambda_nu eventually fails
        sched = CardinalSchedule(A3, A1, RULE_ID, RULE_DSUCC)
        t = LexSchedule(A1, A1, A1, sched, EMPTY)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["cond-b"] is False

    def test_low_limit_fails_d(self):
        sched = CardinalSchedule(A2, A3, RULE_DSUCC, RULE_DSUCC, A1, A3)
        t = LexSchedule(A2, A1, A1, sched, EMPTY)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["cond-d"] is False

    def test_k1_in_coin_fails_a(self):
        atom = Atom("i", A0, A2, CardSet.of(A0, A1, A2), CardSet.of(A0), A2)
        sched = CardinalSchedule(A2, A3, RULE_DSUCC, RULE_DSUCC)
        t = LexSchedule(A3, A1, A1, sched, atom)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["cond-a"] is False

    def test_phi_violation_named(self):
        bad = PhiMap((PhiPiece(DOM_ONE, None, A0),
                      PhiPiece(DOM_SINGLE, A0, A0),
                      PhiPiece(DOM_SINGLE, A1, A0)))
        t = LexRefined(A2, A2, A2, SWAP_PHI, bad, EMPTY)
        checks = {c.name: c.passed for c in check_side_conditions(t)}
        assert checks["phi-no-fixed-point"] is False

    def test_wrong_kind_rejected(self):
        with pytest.raises(DomainError):
            check_side_conditions(OMEGA)


class TestCompleteness:
    def test_real_line_atom(self):
        comp = completeness_predicates(REAL_ATOM)
        assert comp.symmetric and not comp.strong
        assert comp.spherical_balls

    def test_z_like_atom(self):
        comp = completeness_predicates(Z_ATOM)
        assert not comp.symmetric
        assert comp.spherical_balls

    def test_z_order_term(self):
        comp = completeness_predicates(Z_ORDER)
        assert not comp.symmetric and comp.spherical_balls

    def test_omega_not_spherical_free(self):
        comp = completeness_predicates(sum_of(OMEGA, OMEGA_STAR))
        assert not comp.spherical_balls  # the middle cut is (aleph0, aleph0)


class TestExtendOrder:
    def test_empty_with_aleph1(self):
        ext = extend_order(EMPTY, A1, A1)
        assert (ext.mu, ext.k1, ext.l1) == (A2, A2, A3)
        assert completeness_predicates(ext.term).extreme

    def test_minimal_mu_above_declared_bound(self):
        atom = Atom("i", A0, A0, CardSet.of(A0), CardSet.of(A0), A2)
        ext = extend_order(atom, A1, A1)
        assert ext.mu == A3

    def test_missing_bound_rejected(self):
        atom = Atom("i", A0, A0, CardSet.of(A0), CardSet.of(A0))
        with pytest.raises(NotDerivableError):
            extend_order(atom)

    def test_always_extreme(self):
        for k0, l0 in ((A1, A1), (A1, A2), (A2, A2)):
            for inner in (EMPTY, chain(3), Z_ORDER, RAT_ATOM):
                ext = extend_order(inner, k0, l0)
                assert all(c.passed for c in check_side_conditions(ext.term))
                assert completeness_predicates(ext.term).extreme

    def test_downgrade_k0(self):
        comp = completeness_predicates(extend_order(EMPTY, A0, A1).term)
        assert comp.strong and not comp.extreme

    def test_extend_result_embeds_inner(self):
        ext = extend_order(Z_ORDER, A1, A1)
        assert ext.term.inner == Z_ORDER


# ---------------------------------------------------------------------------
# Property tests over random countable terms
# ---------------------------------------------------------------------------

countable_terms = st.recursive(
    st.sampled_from([OMEGA, OMEGA_STAR, chain(1), chain(2), chain(5)]),
    lambda inner: st.one_of(
        inner.map(rev),
        st.tuples(inner, inner).map(lambda ab: sum_of(*ab)),
        st.tuples(inner, inner, inner).map(lambda abc: sum_of(*abc)),
    ),
    max_leaves=6,
)


@given(countable_terms)
def test_mirror_symmetry(t):
    assert cut_spectrum(rev(t)) == cut_spectrum(t).mirrored()
    assert cf(rev(t)) == ci(t) and ci(rev(t)) == cf(t)


@given(countable_terms, countable_terms, countable_terms)
def test_sum_associativity_of_spectra(a, b, c):
    assert cut_spectrum(sum_of(sum_of(a, b), c)) == cut_spectrum(sum_of(a, sum_of(b, c)))


@given(countable_terms)
def test_nonprincipal_pairs_exclude_one(t):
    spec = cut_spectrum(t)
    for part in spec.parts:
        if isinstance(part, ExplicitPairs):
            for p in part.pairs:
                assert p.is_principal == part.principal
                assert p.is_principal == (p.left.is_one or p.right.is_one)


@given(countable_terms)
def test_order_ball_two_routes_agree(t):
    spec = cut_spectrum(t)
    assert (not spec.has_nonprincipal_symmetric()) == \
        nonprincipal_cuts_all_asymmetric(spec)


small_regulars = st.sampled_from([A0, A1, A2, A3])
uncountable_regulars = st.sampled_from([A1, A2, A3])
rules = st.sampled_from([0, 1, 2])


@settings(max_examples=200)
@given(uncountable_regulars, uncountable_regulars, uncountable_regulars,
       small_regulars, small_regulars, rules, rules,
       small_regulars, small_regulars)
def test_corollary_conditions_imply_strong(mu, k0, l0, k1, l1, ks, ls, klim, llim):
    sched = CardinalSchedule(k1, l1, ks, ls, klim, llim)
    t = LexSchedule(mu, k0, l0, sched, EMPTY)
    checks = check_side_conditions(t)
    if all(c.passed for c in checks):
        comp = completeness_predicates(t)
        assert comp.strong
        assert comp.extreme == (k0.is_uncountable and l0.is_uncountable)


@settings(max_examples=200)
@given(uncountable_regulars, small_regulars, small_regulars)
def test_refined_passing_conditions_strongly_asymmetric(mu, k0, l0):
    t = LexRefined(mu, k0, l0, SWAP_PHI, SWAP_PHI, EMPTY)
    checks = check_side_conditions(t)
    if all(c.passed for c in checks):
        assert completeness_predicates(t).strong


_IFF_INNERS = [
    EMPTY,
    Atom("p", A0, A0, CardSet.of(A0), CardSet.of(A0), A0),
    Atom("q", A1, A2, CardSet.of(A0, A1, A2), CardSet.of(A0, A1), A2),
]


@settings(max_examples=400)
@given(st.sampled_from([A0, A1, A2, A3]), small_regulars, small_regulars,
       small_regulars, small_regulars, rules, rules,
       small_regulars, small_regulars, st.sampled_from(_IFF_INNERS))
def test_lettered_conditions_iff_symmetric(mu, k0, l0, k1, l1, ks, ls,
                                           klim, llim, inner):
    # each lettered failure manufactures a symmetric pair, and conversely
    sched = CardinalSchedule(k1, l1, ks, ls, klim, llim)
    t = LexSchedule(mu, k0, l0, sched, inner)
    verdicts = {c.name: c.passed for c in check_side_conditions(t)}
    lettered = all(verdicts[n] for n in ("cond-a", "cond-b", "cond-c", "cond-d"))
    assert lettered == completeness_predicates(t).symmetric
