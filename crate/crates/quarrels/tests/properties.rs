//! Structural invariants checked exhaustively at small player counts and by
//! randomized sampling at the next size up.
//!
//! The k-monotonicity and Shapley-Shubik implementations are cross-checked
//! against independent brute-force oracles that evaluate the defining
//! quantifiers literally.

use itertools::Itertools;
use num::{BigRational, Zero};
use proptest::prelude::*;
use quarrels::{
    apply, check_postulate, enumerate_monotonic_games, fm_direct, lv_direct, penrose_banzhaf,
    shapley_shubik, yes_no_power, Degree, Direction, Measure, MinK, PlayerSet, Postulate,
    QuarrelRule, RuleShape, Scope, VotingGame,
};

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// All `2^(2^n)` games on `n` players, arbitrary winning families.
fn all_games(n: usize) -> impl Iterator<Item = VotingGame> {
    let size = 1u32 << n;
    (0u64..1 << size).map(move |family| {
        let table: Vec<bool> = (0..size).map(|m| family >> m & 1 == 1).collect();
        game_from_table(n, &table)
    })
}

fn game_from_table(n: usize, table: &[bool]) -> VotingGame {
    VotingGame::from_winning_sets(
        n,
        table
            .iter()
            .enumerate()
            .filter(|(_, w)| **w)
            .map(|(m, _)| PlayerSet::from_bits(m as u32)),
    )
    .unwrap()
}

/// Literal evaluation of the k-monotonicity quantifier: for every losing `S`
/// and every strict subset `T`, some `K ⊆ T` with `|K| <= k` makes `T \ K`
/// lose.
fn is_k_monotonic_oracle(g: &VotingGame, k: usize) -> bool {
    g.divisions().filter(|&s| !g.is_winning(s)).all(|s| {
        s.subsets().filter(|&t| t != s).all(|t| {
            t.subsets().any(|r| t.difference(r).len() <= k && !g.is_winning(r))
        })
    })
}

fn min_k_oracle(g: &VotingGame) -> MinK {
    (0..=g.n())
        .find(|&k| is_k_monotonic_oracle(g, k))
        .map_or(MinK::NoneWithinN, MinK::Bounded)
}

/// Shapley-Shubik by direct enumeration of all `n!` orderings: a player is
/// pivotal when its arrival makes the growing coalition win.
fn ss_by_orderings(g: &VotingGame, i: usize) -> BigRational {
    let n = g.n();
    let mut pivotal = 0u64;
    let mut total = 0u64;
    for ordering in (1..=n).permutations(n) {
        total += 1;
        let mut coalition = PlayerSet::EMPTY;
        for &p in &ordering {
            let was_winning = g.is_winning(coalition);
            coalition = coalition.with(p);
            if g.is_winning(coalition) && !was_winning {
                if p == i {
                    pivotal += 1;
                }
                break;
            }
        }
    }
    BigRational::new(pivotal.into(), total.into())
}

fn arb_game(max_n: usize) -> impl Strategy<Value = VotingGame> {
    (1..=max_n).prop_flat_map(|n| {
        let size = 1u32 << n;
        (0u64..1 << size).prop_map(move |family| {
            let table: Vec<bool> = (0..size).map(|m| family >> m & 1 == 1).collect();
            game_from_table(n, &table)
        })
    })
}

// ---------------------------------------------------------------------------
// Game structure
// ---------------------------------------------------------------------------

#[test]
fn complement_is_an_involution_exhaustive() {
    for n in 1..=4 {
        if n == 4 {
            // Sampling the full 2^16 space is done below; here stride it.
            for g in all_games(4).step_by(97) {
                assert_eq!(g.complement().complement(), g);
            }
        } else {
            for g in all_games(n) {
                assert_eq!(g.complement().complement(), g);
            }
        }
    }
}

#[test]
fn complement_preserves_monotonicity_exhaustive() {
    for n in 1..=3 {
        for g in all_games(n) {
            assert_eq!(g.is_monotonic(), g.complement().is_monotonic(), "{g:?}");
        }
    }
}

#[test]
fn min_k_matches_oracle_exhaustive_up_to_three_players() {
    for n in 1..=3 {
        for g in all_games(n) {
            let report = g.monotonicity_report();
            assert_eq!(report.min_k, min_k_oracle(&g), "{g:?}");
            assert_eq!(report.is_monotonic, g.is_monotonic(), "{g:?}");
            assert_eq!(report.min_k == MinK::Bounded(0), g.is_monotonic(), "{g:?}");
            assert_eq!(report.violating_pairs.is_empty(), g.is_monotonic(), "{g:?}");
        }
    }
}

#[test]
fn k_monotonicity_is_upward_closed_in_k() {
    for g in all_games(3) {
        match g.min_k() {
            MinK::Bounded(k) => {
                assert!(is_k_monotonic_oracle(&g, k));
                assert!(is_k_monotonic_oracle(&g, k + 1));
                if k > 0 {
                    assert!(!is_k_monotonic_oracle(&g, k - 1));
                }
            }
            MinK::NoneWithinN => {
                for k in 0..=g.n() {
                    assert!(!is_k_monotonic_oracle(&g, k));
                }
            }
        }
    }
}

#[test]
fn decisiveness_mirror_exhaustive() {
    for n in 1..=3 {
        for g in all_games(n) {
            for s in g.divisions() {
                for i in 1..=n {
                    if s.contains(i) {
                        assert_eq!(
                            g.is_yes_decisive(s, i).unwrap(),
                            g.is_no_decisive(s.without(i), i).unwrap(),
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn min_k_matches_oracle_sampled_four_players(g in arb_game(4)) {
        prop_assert_eq!(g.min_k(), min_k_oracle(&g));
    }

    #[test]
    fn complement_involution_sampled(g in arb_game(4)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.is_monotonic(), g.complement().is_monotonic());
    }

    #[test]
    fn pb_mirror_and_decomposition_sampled(g in arb_game(4)) {
        for i in 1..=g.n() {
            let (yes, no) = yes_no_power(&g, i).unwrap();
            prop_assert_eq!(&yes, &no);
            prop_assert_eq!(yes + no, penrose_banzhaf(&g, i).unwrap());
        }
    }
}

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

#[test]
fn lv_alias_agrees_with_direct_formulation() {
    for n in 2..=4 {
        for g in enumerate_monotonic_games(n, false).unwrap() {
            for (i, j) in ordered_pairs(n) {
                let by_rule = apply(&QuarrelRule::lv(i, j).unwrap(), &g).unwrap();
                assert_eq!(by_rule, lv_direct(&g, i, j).unwrap(), "{g:?} pair ({i},{j})");
            }
        }
    }
}

#[test]
fn fm_alias_agrees_with_direct_formulation_when_empty_set_loses() {
    for n in 2..=4 {
        for g in enumerate_monotonic_games(n, false).unwrap() {
            if g.is_winning(PlayerSet::EMPTY) {
                continue;
            }
            for (i, j) in ordered_pairs(n) {
                let by_rule = apply(&QuarrelRule::fm(i, j).unwrap(), &g).unwrap();
                let direct = fm_direct(&g, i, j).unwrap();
                assert_eq!(by_rule, direct, "{g:?} pair ({i},{j})");
                let pair = PlayerSet::from_players([i, j]);
                let expected = VotingGame::from_winning_sets(
                    n,
                    g.winning().iter().copied().filter(|s| !pair.is_subset_of(*s)),
                )
                .unwrap();
                assert_eq!(direct, expected);
            }
        }
    }
}

#[test]
fn no_only_rules_are_complement_conjugates_of_yes_only() {
    for degree in [Degree::Weak, Degree::Strong, Degree::Cataclysmic] {
        for direction in [Direction::Reciprocal, Direction::NonReciprocal] {
            let yes = RuleShape { degree, scope: Scope::YesOnly, direction };
            let no = RuleShape { degree, scope: Scope::NoOnly, direction };
            for n in 2..=3 {
                for g in enumerate_monotonic_games(n, false).unwrap() {
                    for (i, j) in ordered_pairs(n) {
                        let conjugated = apply(&yes.with_pair(i, j).unwrap(), &g.complement())
                            .unwrap()
                            .complement();
                        let direct = apply(&no.with_pair(i, j).unwrap(), &g).unwrap();
                        assert_eq!(direct, conjugated, "{degree:?} {direction:?} {g:?} ({i},{j})");
                    }
                }
            }
        }
    }
}

#[test]
fn symmetric_rules_commute_with_complement() {
    for degree in [Degree::Weak, Degree::Strong, Degree::Cataclysmic] {
        for direction in [Direction::Reciprocal, Direction::NonReciprocal] {
            let shape = RuleShape { degree, scope: Scope::Symmetric, direction };
            for g in enumerate_monotonic_games(3, false).unwrap() {
                for (i, j) in ordered_pairs(3) {
                    let rule = shape.with_pair(i, j).unwrap();
                    let lhs = apply(&rule, &g).unwrap().complement();
                    let rhs = apply(&rule, &g.complement()).unwrap();
                    assert_eq!(lhs, rhs, "{shape:?} {g:?} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn no_only_rules_satisfy_the_reduction_conditions() {
    // The conjugate one-sided rules mirror the yes-only soundness pattern:
    // universal conditions always, reduction required on the no side only.
    use quarrels::{verify_csr, verify_no_ambush_betrayal, verify_strong_csr};
    for degree in [Degree::Weak, Degree::Strong, Degree::Cataclysmic] {
        for direction in [Direction::Reciprocal, Direction::NonReciprocal] {
            let shape = RuleShape { degree, scope: Scope::NoOnly, direction };
            for n in 2..=3 {
                for g in enumerate_monotonic_games(n, false).unwrap() {
                    for (i, j) in ordered_pairs(n) {
                        let g_hat = apply(&shape.with_pair(i, j).unwrap(), &g).unwrap();
                        let csr = verify_csr(&g, &g_hat, i, j).unwrap();
                        assert!(csr.yq1_holds && csr.nq1_holds);
                        assert!(csr.nq2_holds);
                        assert_eq!(csr.nq2_witness.is_some(), !csr.nq2_vacuous);
                        assert!(csr.yq2_witness.is_none());
                        assert!(verify_strong_csr(&g, &g_hat, i, j).unwrap().nq2_prime_holds);
                        assert!(verify_no_ambush_betrayal(&g, &g_hat, i, j).unwrap().holds);
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

#[test]
fn shapley_shubik_matches_ordering_enumeration() {
    for n in 1..=4 {
        for g in enumerate_monotonic_games(n, false).unwrap() {
            for i in 1..=n {
                assert_eq!(shapley_shubik(&g, i).unwrap(), ss_by_orderings(&g, i), "{g:?} {i}");
            }
        }
    }
}

#[test]
fn pb_agrees_with_yes_side_count_on_monotonic_games() {
    // On monotonic games the measure equals the yes-decisive count over
    // 2^(n-1), the usual one-sided form.
    for g in enumerate_monotonic_games(3, false).unwrap() {
        for i in 1..=3 {
            let yes_count = g
                .divisions()
                .filter(|&s| s.contains(i) && g.is_yes_decisive(s, i).unwrap())
                .count();
            let one_sided = BigRational::new(yes_count.into(), (1i64 << (3 - 1)).into());
            assert_eq!(penrose_banzhaf(&g, i).unwrap(), one_sided);
        }
    }
}

#[test]
fn dummies_have_zero_power_and_vice_versa() {
    for g in enumerate_monotonic_games(3, false).unwrap() {
        for i in 1..=3 {
            let dummy = g.is_dummy(i).unwrap();
            assert_eq!(penrose_banzhaf(&g, i).unwrap().is_zero(), dummy);
            assert_eq!(shapley_shubik(&g, i).unwrap().is_zero(), dummy);
        }
    }
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

#[test]
fn verdicts_invariant_under_player_relabelling() {
    let rules = ["weak:sym:recip", "strong:yes:recip", "fm", "lv"];
    for g in enumerate_monotonic_games(3, true).unwrap() {
        for perm in (1..=3).permutations(3) {
            let relabelled = g.permute_players(&perm).unwrap();
            for shape in rules {
                let shape = RuleShape::parse(shape).unwrap();
                for (i, j) in ordered_pairs(3) {
                    let base = check_postulate(
                        Postulate::Standard,
                        Measure::PenroseBanzhaf,
                        &shape.with_pair(i, j).unwrap(),
                        &g,
                    )
                    .unwrap();
                    let mapped = check_postulate(
                        Postulate::Standard,
                        Measure::PenroseBanzhaf,
                        &shape.with_pair(perm[i - 1], perm[j - 1]).unwrap(),
                        &relabelled,
                    )
                    .unwrap();
                    assert_eq!(base.holds(), mapped.holds(), "{g:?} {shape} ({i},{j}) {perm:?}");
                    assert_eq!(base.psi_before_i, mapped.psi_before_i);
                    assert_eq!(base.psi_after_i, mapped.psi_after_i);
                }
            }
        }
    }
}
