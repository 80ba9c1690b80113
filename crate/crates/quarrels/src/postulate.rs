//! Quarrel-postulate verdicts, exhaustive paradox scans, and an executable
//! suite packaging the typology's classification claims as checks.
//!
//! The quarrel postulate for a measure and a rule: neither quarreller's
//! a priori voting power may rise from the source game to the derived game.
//! A scan quantifies that over every non-trivial monotonic game at a given
//! player count and every ordered pair, returning all violations.

use std::fmt;

use num::BigRational;
use serde_json::json;

use crate::game::{enumerate_monotonic_games, MinK, PlayerSet, VotingGame};
use crate::power::{banzhaf_index, format_decimal, penrose_banzhaf, shapley_shubik, yes_no_power, Measure};
use crate::transform::{apply, detect_nmq, verify_csr, Degree, Direction, QuarrelRule, RuleShape, Scope};
use crate::Error;

/// Which power component the postulate compares.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Postulate {
    Standard,
    YesPower,
    NoPower,
}

impl Postulate {
    pub fn parse(text: &str) -> Option<Postulate> {
        match text {
            "standard" => Some(Postulate::Standard),
            "yes-power" => Some(Postulate::YesPower),
            "no-power" => Some(Postulate::NoPower),
            _ => None,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Postulate::Standard => "standard",
            Postulate::YesPower => "yes-power",
            Postulate::NoPower => "no-power",
        }
    }
}

impl fmt::Display for Postulate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Outcome of a single postulate check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerdictStatus {
    Holds,
    /// At least one quarreller gained power; `witness` is the first gainer.
    Violated { witness: usize },
    /// The requested measure is not defined for this game pair.
    CapabilityLimited { reason: String },
}

/// Result of checking one postulate for a (measure, rule, game) triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PostulateVerdict {
    pub postulate: Postulate,
    pub measure: Measure,
    pub rule: QuarrelRule,
    pub game: VotingGame,
    pub status: VerdictStatus,
    pub psi_before_i: Option<BigRational>,
    pub psi_after_i: Option<BigRational>,
    pub psi_before_j: Option<BigRational>,
    pub psi_after_j: Option<BigRational>,
}

impl PostulateVerdict {
    pub fn game_id(&self) -> String {
        self.game.id_string()
    }

    pub fn holds(&self) -> Option<bool> {
        match self.status {
            VerdictStatus::Holds => Some(true),
            VerdictStatus::Violated { .. } => Some(false),
            VerdictStatus::CapabilityLimited { .. } => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rational = |r: &Option<BigRational>| match r {
            Some(r) => json!({ "value": r.to_string(), "decimal": format_decimal(r) }),
            None => serde_json::Value::Null,
        };
        let (status, witness, reason) = match &self.status {
            VerdictStatus::Holds => ("holds", serde_json::Value::Null, serde_json::Value::Null),
            VerdictStatus::Violated { witness } => {
                ("violated", json!(witness), serde_json::Value::Null)
            }
            VerdictStatus::CapabilityLimited { reason } => {
                ("capability-limited", serde_json::Value::Null, json!(reason))
            }
        };
        json!({
            "postulate": self.postulate.token(),
            "measure": self.measure.token(),
            "rule": self.rule.to_string(),
            "game": self.game_id(),
            "status": status,
            "witness": witness,
            "reason": reason,
            "psi_before_i": rational(&self.psi_before_i),
            "psi_after_i": rational(&self.psi_after_i),
            "psi_before_j": rational(&self.psi_before_j),
            "psi_after_j": rational(&self.psi_after_j),
        })
    }
}

enum PairPower {
    Values(BigRational, BigRational),
    Capability(String),
}

fn pair_power(
    g: &VotingGame,
    postulate: Postulate,
    measure: Measure,
    i: usize,
    j: usize,
) -> Result<PairPower, Error> {
    match (postulate, measure) {
        (Postulate::Standard, Measure::PenroseBanzhaf) => {
            Ok(PairPower::Values(penrose_banzhaf(g, i)?, penrose_banzhaf(g, j)?))
        }
        (Postulate::Standard, Measure::BanzhafIndex) => match banzhaf_index(g) {
            Ok(report) => {
                Ok(PairPower::Values(report.values[i - 1].clone(), report.values[j - 1].clone()))
            }
            Err(Error::AllDummies) => {
                Ok(PairPower::Capability("Banzhaf index undefined: every player is a dummy".into()))
            }
            Err(e) => Err(e),
        },
        (Postulate::Standard, Measure::ShapleyShubik) => {
            if g.is_monotonic() {
                Ok(PairPower::Values(shapley_shubik(g, i)?, shapley_shubik(g, j)?))
            } else {
                Ok(PairPower::Capability(
                    "Shapley-Shubik index requires a monotonic game".into(),
                ))
            }
        }
        (Postulate::YesPower | Postulate::NoPower, Measure::PenroseBanzhaf) => {
            let (yes_i, no_i) = yes_no_power(g, i)?;
            let (yes_j, no_j) = yes_no_power(g, j)?;
            Ok(match postulate {
                Postulate::YesPower => PairPower::Values(yes_i, yes_j),
                _ => PairPower::Values(no_i, no_j),
            })
        }
        (Postulate::YesPower | Postulate::NoPower, _) => Ok(PairPower::Capability(format!(
            "yes/no power decomposition is defined for pb only, not {measure}",
        ))),
    }
}

/// Checks one postulate for a (measure, rule, game) triple. The source game
/// must be monotonic; measure/game incompatibilities are recorded in the
/// verdict rather than failing the call.
pub fn check_postulate(
    postulate: Postulate,
    measure: Measure,
    rule: &QuarrelRule,
    g: &VotingGame,
) -> Result<PostulateVerdict, Error> {
    let g_hat = apply(rule, g)?;
    let before = pair_power(g, postulate, measure, rule.i, rule.j)?;
    let after = pair_power(&g_hat, postulate, measure, rule.i, rule.j)?;
    let verdict = |status, values: Option<(&BigRational, &BigRational, &BigRational, &BigRational)>| {
        PostulateVerdict {
            postulate,
            measure,
            rule: *rule,
            game: g.clone(),
            status,
            psi_before_i: values.map(|v| v.0.clone()),
            psi_after_i: values.map(|v| v.1.clone()),
            psi_before_j: values.map(|v| v.2.clone()),
            psi_after_j: values.map(|v| v.3.clone()),
        }
    };
    Ok(match (before, after) {
        (PairPower::Values(bi, bj), PairPower::Values(ai, aj)) => {
            let status = if ai > bi {
                VerdictStatus::Violated { witness: rule.i }
            } else if aj > bj {
                VerdictStatus::Violated { witness: rule.j }
            } else {
                VerdictStatus::Holds
            };
            verdict(status, Some((&bi, &ai, &bj, &aj)))
        }
        (PairPower::Capability(reason), _) | (_, PairPower::Capability(reason)) => {
            verdict(VerdictStatus::CapabilityLimited { reason }, None)
        }
    })
}

/// Maximum player count for exhaustive scans.
pub const MAX_SCAN_PLAYERS: usize = 4;

/// Outcome of an exhaustive paradox scan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanResult {
    /// All violating verdicts, sorted by (game id, i, j).
    pub violations: Vec<PostulateVerdict>,
    pub games_scanned: usize,
    pub pairs_scanned: usize,
    /// Checks skipped because the measure was undefined for the derived game.
    pub capability_skips: usize,
}

/// Scans every non-trivial monotonic game on `n` players and every ordered
/// pair under the given rule shape, collecting postulate violations.
pub fn scan_paradox(
    postulate: Postulate,
    measure: Measure,
    shape: RuleShape,
    n: usize,
) -> Result<ScanResult, Error> {
    if n > MAX_SCAN_PLAYERS {
        return Err(Error::ScaleLimit { what: "paradox scan", n, max: MAX_SCAN_PLAYERS });
    }
    let mut violations = Vec::new();
    let mut games_scanned = 0;
    let mut pairs_scanned = 0;
    let mut capability_skips = 0;
    for g in enumerate_monotonic_games(n, true)? {
        games_scanned += 1;
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                pairs_scanned += 1;
                let verdict = check_postulate(postulate, measure, &shape.with_pair(i, j)?, &g)?;
                match verdict.status {
                    VerdictStatus::Holds => {}
                    VerdictStatus::Violated { .. } => violations.push(verdict),
                    VerdictStatus::CapabilityLimited { .. } => capability_skips += 1,
                }
            }
        }
    }
    violations.sort_by(|a, b| {
        (a.game_id(), a.rule.i, a.rule.j).cmp(&(b.game_id(), b.rule.i, b.rule.j))
    });
    Ok(ScanResult { violations, games_scanned, pairs_scanned, capability_skips })
}

// ---------------------------------------------------------------------------
// Theorem suite
// ---------------------------------------------------------------------------

/// Expected departure from monotonicity for a typology cell.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CellClass {
    Monotone,
    QuasiMonotone,
    SupremelyNonMonotone,
}

impl CellClass {
    pub fn of(shape: RuleShape) -> CellClass {
        match (shape.degree, shape.scope, shape.direction) {
            (Degree::Weak, _, _) => CellClass::Monotone,
            (Degree::Strong, Scope::Symmetric, _) => CellClass::SupremelyNonMonotone,
            (Degree::Strong, _, _) => CellClass::QuasiMonotone,
            (Degree::Cataclysmic, _, _) => CellClass::SupremelyNonMonotone,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CellClass::Monotone => "monotonic",
            CellClass::QuasiMonotone => "quasi-monotonic",
            CellClass::SupremelyNonMonotone => "supremely non-monotonic",
        }
    }
}

/// One verified (or refuted) claim of the suite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremResult {
    pub id: String,
    pub claim: String,
    pub scope: String,
    pub verified: bool,
    /// Number of instances examined in support of the claim.
    pub evidence: usize,
    pub counterexample: Option<String>,
    /// Typology cell this result belongs to, when it is a cell result.
    pub cell: Option<RuleShape>,
}

impl TheoremResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "claim": self.claim,
            "scope": self.scope,
            "verified": self.verified,
            "evidence": self.evidence,
            "counterexample": self.counterexample,
            "cell": self.cell.map(|c| c.to_string()),
        })
    }
}

/// The proof-family source game for a supremely non-monotonic cell, with the
/// quarrelling pair fixed at (1, 2).
pub fn proof_family_game(shape: RuleShape, n: usize) -> Result<VotingGame, Error> {
    let full = PlayerSet::full(n);
    let winning: Vec<PlayerSet> = match (shape.degree, shape.scope, shape.direction) {
        // Everyone a no-blocker.
        (Degree::Cataclysmic, Scope::YesOnly, Direction::Reciprocal)
        | (Degree::Cataclysmic, Scope::Symmetric, Direction::Reciprocal) => {
            full.subsets().filter(|s| !s.is_empty()).collect()
        }
        // The pair jointly blocks no.
        (Degree::Strong, Scope::Symmetric, Direction::Reciprocal) => full
            .subsets()
            .filter(|s| s.contains(1) || s.contains(2))
            .collect(),
        // Quarreller 1 is a dictator.
        (Degree::Strong, Scope::Symmetric, Direction::NonReciprocal) => {
            full.subsets().filter(|s| s.contains(1)).collect()
        }
        // Everyone except the target a no-blocker.
        (Degree::Cataclysmic, Scope::YesOnly, Direction::NonReciprocal) => full
            .subsets()
            .filter(|s| !s.is_subset_of(PlayerSet::singleton(2)))
            .collect(),
        // Any n-1 players suffice.
        (Degree::Cataclysmic, Scope::Symmetric, Direction::NonReciprocal) => {
            full.subsets().filter(|s| s.len() >= n - 1).collect()
        }
        _ => {
            return Err(Error::RuleParse {
                input: shape.to_string(),
                message: "no proof family: cell is not supremely non-monotonic".into(),
            })
        }
    };
    VotingGame::from_winning_sets(n, winning)
}

/// Maximum player count accepted by [`run_theorem_suite`].
pub const MAX_SUITE_PLAYERS: usize = 4;

/// Runs the whole claim suite: one result per typology cell, plus the
/// disposition/paradox claim, the non-monotonicity re-derivation claim, the
/// directionality counterexample, the weak-direction equivalence, and the
/// two postulate-satisfaction scans.
///
/// Exhaustive cell checks cover every non-trivial monotonic game for
/// `2 <= n <= n_max` and every ordered pair; proof families are instantiated
/// at `n = 3, 4, 5` regardless of `n_max`.
pub fn run_theorem_suite(n_max: usize) -> Result<Vec<TheoremResult>, Error> {
    if !(2..=MAX_SUITE_PLAYERS).contains(&n_max) {
        return Err(Error::ScaleLimit { what: "theorem suite", n: n_max, max: MAX_SUITE_PLAYERS });
    }
    let mut results = Vec::new();
    for shape in RuleShape::typology() {
        results.push(check_cell(shape, n_max)?);
    }
    results.push(check_dummy_paradox(n_max)?);
    results.push(check_rederivation(n_max)?);
    results.push(check_lv_directionality()?);
    results.push(check_weak_direction_equivalence(n_max)?);
    results.push(check_postulate_scan(Measure::ShapleyShubik, n_max)?);
    results.push(check_postulate_scan(Measure::PenroseBanzhaf, n_max)?);
    Ok(results)
}

fn cell_id(shape: RuleShape) -> String {
    format!("typology:{shape}")
}

fn exhaustive_scope(n_max: usize) -> String {
    format!("all non-trivial monotonic games, 2 <= n <= {n_max}, all ordered pairs")
}

fn check_cell(shape: RuleShape, n_max: usize) -> Result<TheoremResult, Error> {
    match CellClass::of(shape) {
        CellClass::Monotone => check_monotone_cell(shape, n_max),
        CellClass::QuasiMonotone => check_quasi_cell(shape, n_max),
        CellClass::SupremelyNonMonotone => check_supreme_cell(shape),
    }
}

fn for_each_derived(
    shape: RuleShape,
    n_max: usize,
    mut f: impl FnMut(&VotingGame, &QuarrelRule, &VotingGame) -> Result<bool, Error>,
) -> Result<(usize, Option<String>), Error> {
    let mut evidence = 0;
    for n in 2..=n_max {
        for g in enumerate_monotonic_games(n, true)? {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let rule = shape.with_pair(i, j)?;
                    let g_hat = apply(&rule, &g)?;
                    evidence += 1;
                    if !f(&g, &rule, &g_hat)? {
                        return Ok((evidence, Some(format!("{} under {}", g.id_string(), rule))));
                    }
                }
            }
        }
    }
    Ok((evidence, None))
}

fn check_monotone_cell(shape: RuleShape, n_max: usize) -> Result<TheoremResult, Error> {
    let (evidence, counterexample) =
        for_each_derived(shape, n_max, |_, _, g_hat| Ok(g_hat.is_monotonic()))?;
    Ok(TheoremResult {
        id: cell_id(shape),
        claim: format!("every game derived by {shape} is monotonic"),
        scope: exhaustive_scope(n_max),
        verified: counterexample.is_none(),
        evidence,
        counterexample,
        cell: Some(shape),
    })
}

fn check_quasi_cell(shape: RuleShape, n_max: usize) -> Result<TheoremResult, Error> {
    let mut saw_min_k_one = false;
    let (evidence, counterexample) = for_each_derived(shape, n_max, |_, _, g_hat| {
        match g_hat.min_k() {
            MinK::Bounded(0) => Ok(true),
            MinK::Bounded(1) => {
                saw_min_k_one = true;
                Ok(true)
            }
            _ => Ok(false),
        }
    })?;
    let verified = counterexample.is_none() && saw_min_k_one;
    let counterexample = counterexample.or_else(|| {
        (!saw_min_k_one).then(|| "no derived game attained min_k = 1".to_string())
    });
    Ok(TheoremResult {
        id: cell_id(shape),
        claim: format!(
            "every game derived by {shape} is quasi-monotonic (min_k <= 1), with min_k = 1 attained"
        ),
        scope: exhaustive_scope(n_max),
        verified,
        evidence,
        counterexample,
        cell: Some(shape),
    })
}

/// Player counts at which the unbounded-departure families are instantiated.
pub const FAMILY_SIZES: [usize; 3] = [3, 4, 5];

fn check_supreme_cell(shape: RuleShape) -> Result<TheoremResult, Error> {
    let rule = shape.with_pair(1, 2)?;
    let mut ranks = Vec::new();
    let mut displays = Vec::new();
    for n in FAMILY_SIZES {
        let g = proof_family_game(shape, n)?;
        let g_hat = apply(&rule, &g)?;
        let min_k = g_hat.min_k();
        ranks.push(min_k.rank(n));
        displays.push(format!("n={n}: min_k={min_k}"));
    }
    let strictly_increasing = ranks.windows(2).all(|w| w[0] < w[1]);
    // The families whose bound stays finite peg it at exactly n - 1.
    let finite_expectation = shape.degree == Degree::Cataclysmic && shape.scope == Scope::YesOnly;
    let finite_ok = !finite_expectation
        || ranks.iter().zip(FAMILY_SIZES).all(|(&r, n)| r == n - 1);
    let verified = strictly_increasing && finite_ok;
    Ok(TheoremResult {
        id: cell_id(shape),
        claim: format!(
            "the {shape} proof family departs from monotonicity without bound ({})",
            displays.join(", ")
        ),
        scope: format!("proof-family games at n = {FAMILY_SIZES:?}, pair (1,2)"),
        verified,
        evidence: FAMILY_SIZES.len(),
        counterexample: (!verified).then(|| displays.join(", ")),
        cell: Some(shape),
    })
}

/// A rule disposed to induce non-monotonicity over its pair admits, for any
/// measure honouring the dummy postulate, a source game in which a dummy's
/// power strictly rises. Checked at the Penrose-Banzhaf instance for every
/// non-monotone typology cell.
fn check_dummy_paradox(n_max: usize) -> Result<TheoremResult, Error> {
    let n = n_max.min(3);
    let shapes: Vec<RuleShape> = RuleShape::typology()
        .into_iter()
        .filter(|s| CellClass::of(*s) != CellClass::Monotone)
        .collect();
    let mut evidence = 0;
    let mut counterexample = None;
    for shape in &shapes {
        let scan = scan_paradox(Postulate::Standard, Measure::PenroseBanzhaf, *shape, n)?;
        let dummy_rise = scan.violations.iter().find(|v| {
            let w = match v.status {
                VerdictStatus::Violated { witness } => witness,
                _ => return false,
            };
            let before =
                if w == v.rule.i { v.psi_before_i.as_ref() } else { v.psi_before_j.as_ref() };
            v.game.is_dummy(w).unwrap_or(false)
                && before.map(|b| b == &BigRational::from_integer(0.into())).unwrap_or(false)
        });
        match dummy_rise {
            Some(_) => evidence += 1,
            None => {
                counterexample =
                    Some(format!("no dummy power rise found for {shape} at n = {n}"));
                break;
            }
        }
    }
    Ok(TheoremResult {
        id: "dummy-paradox-under-non-monotone-rules".into(),
        claim: "every non-monotone rule lets some dummy's power rise from zero, \
                violating the standard postulate for any measure honouring the dummy postulate"
            .into(),
        scope: format!("{} non-monotone cells, scans at n = {n}", shapes.len()),
        verified: counterexample.is_none(),
        evidence,
        counterexample,
        cell: None,
    })
}

/// Rebuilds, for a non-monotonic derived game, a monotonic source and pair
/// over which the derived game is non-monotonic, mirroring the two-case
/// construction used in the proofs.
pub fn rederive_quarrel_source(g_hat: &VotingGame) -> Option<(VotingGame, usize, usize)> {
    let n = g_hat.n();
    let pairs = g_hat.monotonicity_report().violating_pairs;
    let (x, sup) = *pairs.first()?;
    if let Some(&(x, sup)) = pairs.iter().find(|(t, _)| !t.is_empty()) {
        let i = x.players().next().unwrap();
        let j = sup.difference(x).players().next().unwrap();
        let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
        let mut table = vec![false; 1 << n];
        for t in g_hat.divisions() {
            table[t.bits() as usize] = if !t.intersection(pair).is_empty() {
                t.subsets().any(|x| g_hat.is_winning(x))
            } else {
                // No losing superset of t anywhere.
                PlayerSet::full(n)
                    .difference(t)
                    .subsets()
                    .all(|extra| g_hat.is_winning(t.union(extra)))
            };
        }
        Some((VotingGame::from_table(n, &table), i, j))
    } else {
        // Every violation is rooted at the winning empty set: dropping it
        // restores monotonicity.
        let i = sup.players().next().unwrap();
        let j = (1..=n).find(|&p| p != i)?;
        debug_assert!(x.is_empty());
        let source = VotingGame::from_winning_sets(
            n,
            g_hat.winning().iter().copied().filter(|s| !s.is_empty()),
        )
        .ok()?;
        Some((source, i, j))
    }
}

/// Every non-monotonic derived game admits a monotonic source game and a
/// quarrelling pair over which it is non-monotonic, with the reduction
/// conditions intact.
fn check_rederivation(n_max: usize) -> Result<TheoremResult, Error> {
    let mut evidence = 0;
    let mut counterexample = None;
    'outer: for shape in RuleShape::typology() {
        let (_, failure) = for_each_derived(shape, n_max, |_, _, g_hat| {
            if g_hat.is_monotonic() {
                return Ok(true);
            }
            evidence += 1;
            let Some((source, i, j)) = rederive_quarrel_source(g_hat) else {
                return Ok(false);
            };
            let csr = verify_csr(&source, g_hat, i, j)?;
            Ok(source.is_monotonic()
                && csr.yq1_holds
                && csr.nq1_holds
                && !detect_nmq(&source, g_hat, i, j)?.is_empty())
        })?;
        if let Some(failure) = failure {
            counterexample = Some(failure);
            break 'outer;
        }
    }
    Ok(TheoremResult {
        id: "non-monotone-derivations-rederive-over-pair".into(),
        claim: "every non-monotonic derived game also arises from a monotonic source \
                with non-monotonicity over the quarrelling pair itself"
            .into(),
        scope: format!("all typology rules, {}", exhaustive_scope(n_max)),
        verified: counterexample.is_none(),
        evidence,
        counterexample,
        cell: None,
    })
}

/// The strong symmetric non-reciprocal rule is genuinely directed: on the
/// two-player chain game the two orientations derive different games.
fn check_lv_directionality() -> Result<TheoremResult, Error> {
    let g = VotingGame::from_winning_sets(
        2,
        [PlayerSet::from_players([1]), PlayerSet::from_players([1, 2])],
    )?;
    let forward = apply(&QuarrelRule::lv(1, 2)?, &g)?;
    let backward = apply(&QuarrelRule::lv(2, 1)?, &g)?;
    let expected_forward =
        VotingGame::from_winning_sets(2, [PlayerSet::EMPTY, PlayerSet::from_players([1])])?;
    let verified = forward == expected_forward && backward == g && forward != backward;
    Ok(TheoremResult {
        id: "lv-rule-non-reciprocality".into(),
        claim: "the lv rule is non-reciprocal: the two orientations differ on the \
                two-player chain game"
            .into(),
        scope: "n = 2, W = {{1},{1,2}}".into(),
        verified,
        evidence: 1,
        counterexample: (!verified)
            .then(|| format!("forward {} backward {}", forward.id_string(), backward.id_string())),
        cell: None,
    })
}

/// Weak quarrels ignore direction: both orientations and both declared
/// directions derive the same game, so testing one covers the other.
fn check_weak_direction_equivalence(n_max: usize) -> Result<TheoremResult, Error> {
    let mut evidence = 0;
    let mut counterexample = None;
    'outer: for scope in [Scope::Symmetric, Scope::YesOnly, Scope::NoOnly] {
        let recip = RuleShape { degree: Degree::Weak, scope, direction: Direction::Reciprocal };
        let nonrecip =
            RuleShape { degree: Degree::Weak, scope, direction: Direction::NonReciprocal };
        let (count, failure) = for_each_derived(recip, n_max, |g, rule, g_hat| {
            let other = apply(&nonrecip.with_pair(rule.i, rule.j)?, g)?;
            let swapped = apply(&rule.swapped(), g)?;
            Ok(*g_hat == other && *g_hat == swapped)
        })?;
        evidence += count;
        if let Some(failure) = failure {
            counterexample = Some(failure);
            break 'outer;
        }
    }
    Ok(TheoremResult {
        id: "weak-direction-equivalence".into(),
        claim: "weak quarrels are direction-free: reciprocal and non-reciprocal forms \
                and both orientations coincide"
            .into(),
        scope: format!("all weak scopes, {}", exhaustive_scope(n_max)),
        verified: counterexample.is_none(),
        evidence,
        counterexample,
        cell: None,
    })
}

/// The symmetric weak quarrel supports the postulate: exhaustive scans find
/// no violation for the given measure.
fn check_postulate_scan(measure: Measure, n_max: usize) -> Result<TheoremResult, Error> {
    let shape =
        RuleShape { degree: Degree::Weak, scope: Scope::Symmetric, direction: Direction::Reciprocal };
    let mut evidence = 0;
    let mut counterexample = None;
    for n in 2..=n_max {
        let scan = scan_paradox(Postulate::Standard, measure, shape, n)?;
        evidence += scan.pairs_scanned;
        if let Some(v) = scan.violations.first() {
            counterexample = Some(format!("{} pair ({}, {})", v.game_id(), v.rule.i, v.rule.j));
            break;
        }
    }
    Ok(TheoremResult {
        id: format!("{}-standard-postulate-weak-symmetric", measure.token()),
        claim: format!(
            "measure {measure} satisfies the standard quarrel postulate under the \
             symmetric weak quarrel"
        ),
        scope: exhaustive_scope(n_max),
        verified: counterexample.is_none(),
        evidence,
        counterexample,
        cell: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn game(n: usize, sets: &[&[usize]]) -> VotingGame {
        VotingGame::from_winning_sets(
            n,
            sets.iter().map(|s| PlayerSet::from_players(s.iter().copied())),
        )
        .unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn lv_violation_on_chain_game() {
        let g = game(3, &[&[1, 2], &[1, 3], &[1, 2, 3]]);
        let verdict = check_postulate(
            Postulate::Standard,
            Measure::PenroseBanzhaf,
            &QuarrelRule::lv(1, 2).unwrap(),
            &g,
        )
        .unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated { witness: 2 });
        assert_eq!(verdict.psi_before_j, Some(rat(1, 4)));
        assert_eq!(verdict.psi_after_j, Some(rat(1, 2)));
    }

    #[test]
    fn weak_symmetric_holds_on_majority() {
        let g = game(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]);
        let rule = QuarrelRule::parse("weak:sym:recip:i=1,j=2").unwrap();
        let verdict =
            check_postulate(Postulate::Standard, Measure::PenroseBanzhaf, &rule, &g).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Holds);
        assert_eq!(verdict.psi_before_i, Some(rat(1, 2)));
        assert_eq!(verdict.psi_after_i, Some(rat(0, 1)));
    }

    #[test]
    fn fm_on_dictator_raises_the_dummy() {
        let g = game(3, &[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]);
        let verdict = check_postulate(
            Postulate::Standard,
            Measure::PenroseBanzhaf,
            &QuarrelRule::fm(1, 2).unwrap(),
            &g,
        )
        .unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated { witness: 2 });
        assert_eq!(verdict.psi_before_j, Some(rat(0, 1)));
        assert_eq!(verdict.psi_after_j, Some(rat(1, 2)));
    }

    #[test]
    fn ss_capability_limited_on_non_monotone_derivation() {
        let g = game(3, &[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]);
        let verdict = check_postulate(
            Postulate::Standard,
            Measure::ShapleyShubik,
            &QuarrelRule::fm(1, 2).unwrap(),
            &g,
        )
        .unwrap();
        assert!(matches!(verdict.status, VerdictStatus::CapabilityLimited { .. }));
        assert_eq!(verdict.holds(), None);
    }

    #[test]
    fn scan_weak_symmetric_is_clean() {
        let shape = RuleShape::parse("weak:sym:recip").unwrap();
        for measure in [Measure::PenroseBanzhaf, Measure::ShapleyShubik] {
            let scan = scan_paradox(Postulate::Standard, measure, shape, 3).unwrap();
            assert!(scan.violations.is_empty());
            assert_eq!(scan.games_scanned, 18);
            assert_eq!(scan.pairs_scanned, 18 * 6);
            assert_eq!(scan.capability_skips, 0);
        }
    }

    #[test]
    fn scan_fm_finds_violations() {
        let scan =
            scan_paradox(Postulate::Standard, Measure::PenroseBanzhaf, RuleShape::FM, 3).unwrap();
        assert!(!scan.violations.is_empty());
        assert!(scan_paradox(Postulate::Standard, Measure::PenroseBanzhaf, RuleShape::FM, 5)
            .is_err());
    }

    #[test]
    fn rederivation_recovers_dictator_source() {
        let g = game(3, &[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]);
        let g_hat = apply(&QuarrelRule::fm(1, 2).unwrap(), &g).unwrap();
        let (source, i, j) = rederive_quarrel_source(&g_hat).unwrap();
        assert!(source.is_monotonic());
        assert_eq!((i, j), (1, 2));
        assert_eq!(source, g);
        assert!(!detect_nmq(&source, &g_hat, i, j).unwrap().is_empty());
    }

    #[test]
    fn rederivation_handles_empty_set_roots() {
        // Non-monotonic only through the winning empty set.
        let g_hat = game(2, &[&[], &[1], &[1, 2]]);
        let (source, i, j) = rederive_quarrel_source(&g_hat).unwrap();
        assert!(source.is_monotonic());
        assert_eq!(source, game(2, &[&[1], &[1, 2]]));
        assert_eq!((i, j), (2, 1));
        assert!(!detect_nmq(&source, &g_hat, i, j).unwrap().is_empty());
    }

    #[test]
    fn suite_passes_at_n3() {
        let results = run_theorem_suite(3).unwrap();
        assert_eq!(results.len(), 18);
        for r in &results {
            assert!(r.verified, "{} failed: {:?}", r.id, r.counterexample);
        }
        assert!(run_theorem_suite(5).is_err());
    }

    #[test]
    fn proof_family_games_are_simple_games() {
        for shape in RuleShape::typology() {
            if CellClass::of(shape) != CellClass::SupremelyNonMonotone {
                continue;
            }
            for n in FAMILY_SIZES {
                let g = proof_family_game(shape, n).unwrap();
                assert!(g.is_monotonic() && g.is_non_trivial(), "{shape} at {n}");
            }
        }
    }
}
