//! Quarrel transformations between two players and their property verifiers.
//!
//! A quarrel rule rewrites the outcome of every division in which the
//! quarrellers' votes agree; divisions where they disagree are always copied
//! unchanged (no ambush, no betrayal). The rewrite is graded along three
//! axes:
//!
//! * **degree** — how destructive the quarrel is when the pair votes
//!   together. Writing `S` for the other yes-voters, the derived outcome of
//!   `S ∪ {i,j}` equals the original outcome of `S ∪ {i}` or `S ∪ {j}`
//!   (weak), of `S` alone (strong, reciprocal), or of the empty set
//!   (cataclysmic, reciprocal).
//! * **scope** — whether the quarrel operates on the yes side, the no side,
//!   or both. One-sided rules copy the untouched side unchanged; no-only
//!   rules are the complement conjugates of the yes-only ones.
//! * **direction** — reciprocal rules treat `i` and `j` alike; non-reciprocal
//!   rules model `i` quarrelling against an unaffected `j` (for weak degree
//!   the two coincide).
//!
//! Two named rules from the literature are aliases into this grid: the
//! FM rule is the cataclysmic yes-only reciprocal quarrel, and the LV rule is
//! the strong symmetric non-reciprocal one.

use std::fmt;

use crate::game::{enumerate_monotonic_games, PlayerSet, Side, VotingGame};
use crate::Error;

/// How destructive the quarrel is on a side where the pair votes together.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Degree {
    Weak,
    Strong,
    Cataclysmic,
}

/// Which voting sides the quarrel operates on.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scope {
    Symmetric,
    YesOnly,
    NoOnly,
}

/// Whether both players quarrel or only `i` quarrels against `j`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    Reciprocal,
    NonReciprocal,
}

/// A point in the degree x scope x direction grid, without the player pair.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct RuleShape {
    pub degree: Degree,
    pub scope: Scope,
    pub direction: Direction,
}

impl RuleShape {
    pub const FM: RuleShape =
        RuleShape { degree: Degree::Cataclysmic, scope: Scope::YesOnly, direction: Direction::Reciprocal };
    pub const LV: RuleShape =
        RuleShape { degree: Degree::Strong, scope: Scope::Symmetric, direction: Direction::NonReciprocal };

    /// The twelve conceptions of the typology: every degree x direction
    /// combination with symmetric or yes-only scope.
    pub fn typology() -> Vec<RuleShape> {
        let mut shapes = Vec::new();
        for degree in [Degree::Weak, Degree::Strong, Degree::Cataclysmic] {
            for scope in [Scope::YesOnly, Scope::Symmetric] {
                for direction in [Direction::Reciprocal, Direction::NonReciprocal] {
                    shapes.push(RuleShape { degree, scope, direction });
                }
            }
        }
        shapes
    }

    pub fn with_pair(self, i: usize, j: usize) -> Result<QuarrelRule, Error> {
        QuarrelRule::new(self.degree, self.scope, self.direction, i, j)
    }

    /// Parses `"<degree>:<scope>:<direction>"` or the aliases `"fm"` / `"lv"`.
    pub fn parse(text: &str) -> Result<RuleShape, Error> {
        let bad = |message: &str| Error::RuleParse { input: text.into(), message: message.into() };
        match text {
            "fm" => return Ok(RuleShape::FM),
            "lv" => return Ok(RuleShape::LV),
            _ => {}
        }
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(bad("expected <degree>:<scope>:<direction>, or fm, or lv"));
        }
        let degree = match parts[0] {
            "weak" => Degree::Weak,
            "strong" => Degree::Strong,
            "cataclysmic" => Degree::Cataclysmic,
            _ => return Err(bad("degree must be weak, strong or cataclysmic")),
        };
        let scope = match parts[1] {
            "sym" => Scope::Symmetric,
            "yes" => Scope::YesOnly,
            "no" => Scope::NoOnly,
            _ => return Err(bad("scope must be sym, yes or no")),
        };
        let direction = match parts[2] {
            "recip" => Direction::Reciprocal,
            "nonrecip" => Direction::NonReciprocal,
            _ => return Err(bad("direction must be recip or nonrecip")),
        };
        Ok(RuleShape { degree, scope, direction })
    }

    /// True when the rule rewrites divisions where both players vote yes.
    pub fn quarrels_on_yes(self) -> bool {
        self.scope != Scope::NoOnly
    }

    /// True when the rule rewrites divisions where both players vote no.
    pub fn quarrels_on_no(self) -> bool {
        self.scope != Scope::YesOnly
    }
}

impl fmt::Display for RuleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degree = match self.degree {
            Degree::Weak => "weak",
            Degree::Strong => "strong",
            Degree::Cataclysmic => "cataclysmic",
        };
        let scope = match self.scope {
            Scope::Symmetric => "sym",
            Scope::YesOnly => "yes",
            Scope::NoOnly => "no",
        };
        let direction = match self.direction {
            Direction::Reciprocal => "recip",
            Direction::NonReciprocal => "nonrecip",
        };
        write!(f, "{degree}:{scope}:{direction}")
    }
}

/// A quarrel rule: a shape plus the ordered pair (quarreller `i`, target `j`).
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuarrelRule {
    pub degree: Degree,
    pub scope: Scope,
    pub direction: Direction,
    pub i: usize,
    pub j: usize,
}

impl QuarrelRule {
    pub fn new(degree: Degree, scope: Scope, direction: Direction, i: usize, j: usize) -> Result<QuarrelRule, Error> {
        if i == j {
            return Err(Error::IdenticalPlayers { player: i });
        }
        Ok(QuarrelRule { degree, scope, direction, i, j })
    }

    pub fn fm(i: usize, j: usize) -> Result<QuarrelRule, Error> {
        RuleShape::FM.with_pair(i, j)
    }

    pub fn lv(i: usize, j: usize) -> Result<QuarrelRule, Error> {
        RuleShape::LV.with_pair(i, j)
    }

    pub fn shape(&self) -> RuleShape {
        RuleShape { degree: self.degree, scope: self.scope, direction: self.direction }
    }

    /// Same rule with the pair reversed.
    pub fn swapped(&self) -> QuarrelRule {
        QuarrelRule { i: self.j, j: self.i, ..*self }
    }

    /// Parses `"<shape>:i=<int>,j=<int>"`, e.g. `weak:sym:recip:i=1,j=2` or
    /// `fm:i=1,j=2`.
    pub fn parse(text: &str) -> Result<QuarrelRule, Error> {
        let bad = |message: String| Error::RuleParse { input: text.into(), message };
        let (shape_part, pair_part) = match text.rfind(":i=") {
            Some(pos) => (&text[..pos], &text[pos + 1..]),
            None => return Err(bad("missing pair, expected ...:i=<int>,j=<int>".into())),
        };
        let shape = RuleShape::parse(shape_part)?;
        let mut i = None;
        let mut j = None;
        for item in pair_part.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad(format!("cannot parse pair component {item:?}")))?;
            let value: usize =
                value.parse().map_err(|_| bad(format!("cannot parse player index {value:?}")))?;
            match key {
                "i" => i = Some(value),
                "j" => j = Some(value),
                _ => return Err(bad(format!("unknown pair component {key:?}"))),
            }
        }
        match (i, j) {
            (Some(i), Some(j)) => shape.with_pair(i, j),
            _ => Err(bad("both i= and j= are required".into())),
        }
    }

    pub fn quarrels_on_yes(&self) -> bool {
        self.shape().quarrels_on_yes()
    }

    pub fn quarrels_on_no(&self) -> bool {
        self.shape().quarrels_on_no()
    }
}

impl fmt::Display for QuarrelRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:i={},j={}", self.shape(), self.i, self.j)
    }
}

// ---------------------------------------------------------------------------
// Applying a rule
// ---------------------------------------------------------------------------

/// Derives the quarrelled game from a monotonic source game.
pub fn apply(rule: &QuarrelRule, g: &VotingGame) -> Result<VotingGame, Error> {
    apply_with_options(rule, g, false)
}

/// [`apply`], optionally forcing unanimity back onto the derived game
/// (`[n]` wins, the empty set loses), the usual repair for cataclysmic rules.
pub fn apply_with_options(
    rule: &QuarrelRule,
    g: &VotingGame,
    unanimity_patch: bool,
) -> Result<VotingGame, Error> {
    let (i, j) = (rule.i, rule.j);
    let n = g.n();
    if i < 1 || i > n {
        return Err(Error::PlayerOutOfRange { player: i, n });
    }
    if j < 1 || j > n {
        return Err(Error::PlayerOutOfRange { player: j, n });
    }
    if !g.is_monotonic() {
        return Err(Error::NonMonotonicSource);
    }

    let full = g.full_set();
    let mut table = vec![false; 1 << n];
    for m in g.divisions() {
        let has_i = m.contains(i);
        let has_j = m.contains(j);
        table[m.bits() as usize] = if has_i != has_j {
            // Votes disagree: copied unchanged.
            g.is_winning(m)
        } else if has_i {
            if !rule.quarrels_on_yes() {
                g.is_winning(m)
            } else {
                let s = m.without(i).without(j);
                match (rule.degree, rule.direction) {
                    (Degree::Weak, _) => g.is_winning(s.with(i)) || g.is_winning(s.with(j)),
                    (Degree::Strong, Direction::Reciprocal) => g.is_winning(s),
                    (Degree::Strong, Direction::NonReciprocal) => g.is_winning(s.with(j)),
                    (Degree::Cataclysmic, Direction::Reciprocal) => g.is_winning(PlayerSet::EMPTY),
                    (Degree::Cataclysmic, Direction::NonReciprocal) => {
                        g.is_winning(PlayerSet::singleton(j))
                    }
                }
            }
        } else if !rule.quarrels_on_no() {
            g.is_winning(m)
        } else {
            match (rule.degree, rule.direction) {
                (Degree::Weak, _) => g.is_winning(m.with(i)) && g.is_winning(m.with(j)),
                (Degree::Strong, Direction::Reciprocal) => g.is_winning(m.with(i).with(j)),
                (Degree::Strong, Direction::NonReciprocal) => g.is_winning(m.with(i)),
                (Degree::Cataclysmic, Direction::Reciprocal) => g.is_winning(full),
                (Degree::Cataclysmic, Direction::NonReciprocal) => g.is_winning(full.without(j)),
            }
        };
    }
    if unanimity_patch {
        table[full.bits() as usize] = true;
        table[0] = false;
    }
    Ok(VotingGame::from_table(n, &table))
}

/// The literature's cataclysmic yes-quarrel, stated directly: every coalition
/// containing both players loses, everything else keeps its outcome.
///
/// Agrees with `apply` of the cataclysmic yes-only reciprocal rule on every
/// game whose empty coalition loses (in particular on every non-trivial
/// monotonic game).
pub fn fm_direct(g: &VotingGame, i: usize, j: usize) -> Result<VotingGame, Error> {
    check_pair(g, i, j)?;
    if !g.is_monotonic() {
        return Err(Error::NonMonotonicSource);
    }
    let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
    VotingGame::from_winning_sets(
        g.n(),
        g.winning().iter().copied().filter(|s| !pair.is_subset_of(*s)),
    )
}

/// The literature's strong symmetric non-reciprocal quarrel of `i` against
/// `j`, stated directly by its two-case definition: when `j` votes yes the
/// outcome is read with `i` removed from the yes-set, otherwise with `i`
/// added. Kept separate from `apply` as a cross-check.
pub fn lv_direct(g: &VotingGame, i: usize, j: usize) -> Result<VotingGame, Error> {
    check_pair(g, i, j)?;
    if !g.is_monotonic() {
        return Err(Error::NonMonotonicSource);
    }
    let mut table = vec![false; 1 << g.n()];
    for m in g.divisions() {
        table[m.bits() as usize] = if m.contains(j) {
            g.is_winning(m.without(i))
        } else {
            g.is_winning(m.with(i))
        };
    }
    Ok(VotingGame::from_table(g.n(), &table))
}

fn check_pair(g: &VotingGame, i: usize, j: usize) -> Result<(), Error> {
    let n = g.n();
    for p in [i, j] {
        if p < 1 || p > n {
            return Err(Error::PlayerOutOfRange { player: p, n });
        }
    }
    if i == j {
        return Err(Error::IdenticalPlayers { player: i });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

/// Verdict on the four cooperative-success-reduction conditions for a
/// transformation `g -> g_hat` and pair `(i, j)`.
///
/// The universal conditions YQ-1 and NQ-1 carry the violating divisions on
/// failure. The existential conditions YQ-2 and NQ-2 are only required of
/// games where the pair effectively cooperates on that side; on games
/// outside that class they are reported as vacuously satisfied, never
/// silently true.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CsrReport {
    pub yq1_holds: bool,
    pub yq2_holds: bool,
    pub nq1_holds: bool,
    pub nq2_holds: bool,
    pub yq2_vacuous: bool,
    pub nq2_vacuous: bool,
    /// Divisions `S ∪ {i,j}` that win in the derived game but lost originally.
    pub yq1_violations: Vec<PlayerSet>,
    /// Divisions `S` (pair voting no) that won originally but lose derived.
    pub nq1_violations: Vec<PlayerSet>,
    /// A division witnessing the required yes-side reduction, when substantive.
    pub yq2_witness: Option<PlayerSet>,
    pub nq2_witness: Option<PlayerSet>,
}

impl CsrReport {
    pub fn to_json(&self) -> serde_json::Value {
        let sets = |v: &[PlayerSet]| {
            v.iter().map(|s| s.players().collect::<Vec<_>>()).collect::<Vec<_>>()
        };
        let witness = |w: &Option<PlayerSet>| match w {
            Some(s) => serde_json::json!(s.players().collect::<Vec<_>>()),
            None => serde_json::Value::Null,
        };
        serde_json::json!({
            "yq1_holds": self.yq1_holds,
            "yq2_holds": self.yq2_holds,
            "nq1_holds": self.nq1_holds,
            "nq2_holds": self.nq2_holds,
            "yq2_vacuous": self.yq2_vacuous,
            "nq2_vacuous": self.nq2_vacuous,
            "yq1_violations": sets(&self.yq1_violations),
            "nq1_violations": sets(&self.nq1_violations),
            "yq2_witness": witness(&self.yq2_witness),
            "nq2_witness": witness(&self.nq2_witness),
        })
    }
}

/// Evaluates cooperative-success-reduction over all divisions in which both
/// players vote on the same side.
pub fn verify_csr(
    g: &VotingGame,
    g_hat: &VotingGame,
    i: usize,
    j: usize,
) -> Result<CsrReport, Error> {
    check_pair(g, i, j)?;
    let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
    let rest = g.full_set().difference(pair);

    let mut yq1_violations = Vec::new();
    let mut nq1_violations = Vec::new();
    let mut yq2_witness = None;
    let mut nq2_witness = None;
    for s in rest.subsets() {
        let both_yes = s.union(pair);
        if g_hat.is_winning(both_yes) && !g.is_winning(both_yes) {
            yq1_violations.push(both_yes);
        }
        if yq2_witness.is_none() && !g_hat.is_winning(both_yes) && g.is_winning(both_yes) {
            yq2_witness = Some(both_yes);
        }
        if g.is_winning(s) && !g_hat.is_winning(s) {
            nq1_violations.push(s);
        }
        if nq2_witness.is_none() && g_hat.is_winning(s) && !g.is_winning(s) {
            nq2_witness = Some(s);
        }
    }

    let yq2_vacuous = !g.has_effective_cooperation(i, j, Side::Yes)?;
    let nq2_vacuous = !g.has_effective_cooperation(i, j, Side::No)?;
    Ok(CsrReport {
        yq1_holds: yq1_violations.is_empty(),
        yq2_holds: yq2_vacuous || yq2_witness.is_some(),
        nq1_holds: nq1_violations.is_empty(),
        nq2_holds: nq2_vacuous || nq2_witness.is_some(),
        yq2_vacuous,
        nq2_vacuous,
        yq1_violations,
        nq1_violations,
        yq2_witness: if yq2_vacuous { None } else { yq2_witness },
        nq2_witness: if nq2_vacuous { None } else { nq2_witness },
    })
}

/// Verdict on the elimination-strength variants of the reduction conditions:
/// wherever both players were decisive together, the derived game makes the
/// pair jointly unsuccessful.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrongCsrReport {
    pub yq2_prime_holds: bool,
    pub nq2_prime_holds: bool,
    pub yq2_prime_violations: Vec<PlayerSet>,
    pub nq2_prime_violations: Vec<PlayerSet>,
}

pub fn verify_strong_csr(
    g: &VotingGame,
    g_hat: &VotingGame,
    i: usize,
    j: usize,
) -> Result<StrongCsrReport, Error> {
    check_pair(g, i, j)?;
    let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
    let rest = g.full_set().difference(pair);
    let mut yq2_prime_violations = Vec::new();
    let mut nq2_prime_violations = Vec::new();
    for s in rest.subsets() {
        let both_yes = s.union(pair);
        if g.is_winning(both_yes)
            && !g.is_winning(s.with(i))
            && !g.is_winning(s.with(j))
            && g_hat.is_winning(both_yes)
        {
            yq2_prime_violations.push(both_yes);
        }
        if !g.is_winning(s)
            && g.is_winning(s.with(i))
            && g.is_winning(s.with(j))
            && !g_hat.is_winning(s)
        {
            nq2_prime_violations.push(s);
        }
    }
    Ok(StrongCsrReport {
        yq2_prime_holds: yq2_prime_violations.is_empty(),
        nq2_prime_holds: nq2_prime_violations.is_empty(),
        yq2_prime_violations,
        nq2_prime_violations,
    })
}

/// Verdict on the no-ambush/no-betrayal condition: divisions in which the
/// pair's votes disagree keep their original outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NoAmbushReport {
    pub holds: bool,
    /// Divisions with exactly one of the pair voting yes whose outcome changed.
    pub violations: Vec<PlayerSet>,
}

pub fn verify_no_ambush_betrayal(
    g: &VotingGame,
    g_hat: &VotingGame,
    i: usize,
    j: usize,
) -> Result<NoAmbushReport, Error> {
    check_pair(g, i, j)?;
    let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
    let rest = g.full_set().difference(pair);
    let mut violations = Vec::new();
    for s in rest.subsets() {
        for lone in [s.with(i), s.with(j)] {
            if g.is_winning(lone) != g_hat.is_winning(lone) {
                violations.push(lone);
            }
        }
    }
    violations.sort_unstable();
    Ok(NoAmbushReport { holds: violations.is_empty(), violations })
}

/// Whether the rule commutes with game complementation on this game:
/// `complement(apply(rule, g)) = apply(rule, complement(g))`.
///
/// A symmetric conception satisfies this for every game; an asymmetric one
/// fails it for some game, though it may coincide on particular games.
pub fn verify_symmetry(rule: &QuarrelRule, g: &VotingGame) -> Result<bool, Error> {
    let lhs = apply(rule, g)?.complement();
    let rhs = apply(rule, &g.complement())?;
    Ok(lhs == rhs)
}

/// Whether the rule gives the same derived game with the pair reversed.
pub fn verify_reciprocality(rule: &QuarrelRule, g: &VotingGame) -> Result<bool, Error> {
    Ok(apply(rule, g)? == apply(&rule.swapped(), g)?)
}

// ---------------------------------------------------------------------------
// Non-monotonicity over the quarrelling pair
// ---------------------------------------------------------------------------

/// A division over which the transformation induced non-monotonicity over
/// the quarrelling pair, together with the member of the pair whose vote
/// flip exhibits it.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct NmqWitness {
    pub division: PlayerSet,
    pub pivot: usize,
}

/// Finds every division witnessing non-monotonicity over the pair `{i, j}`:
/// either both voted yes and won originally with `pivot` redundant, yet the
/// derived game makes them lose while the pivot's defection wins; or the
/// mirror image on the no side. Both members of the pair are tried as pivot.
pub fn detect_nmq(
    g: &VotingGame,
    g_hat: &VotingGame,
    i: usize,
    j: usize,
) -> Result<Vec<NmqWitness>, Error> {
    check_pair(g, i, j)?;
    let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
    let rest = g.full_set().difference(pair);
    let mut witnesses = Vec::new();
    for s in rest.subsets() {
        let both_yes = s.union(pair);
        for pivot in [i, j] {
            if g.is_winning(both_yes)
                && g.is_winning(both_yes.without(pivot))
                && !g_hat.is_winning(both_yes)
                && g_hat.is_winning(both_yes.without(pivot))
            {
                witnesses.push(NmqWitness { division: both_yes, pivot });
            }
            if !g.is_winning(s)
                && !g.is_winning(s.with(pivot))
                && g_hat.is_winning(s)
                && !g_hat.is_winning(s.with(pivot))
            {
                witnesses.push(NmqWitness { division: s, pivot });
            }
        }
    }
    witnesses.sort_unstable_by_key(|w| (w.division, w.pivot));
    Ok(witnesses)
}

/// Result of the disposition scan: either every applicable game induced
/// non-monotonicity over the pair, or a counterexample game that did not.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DnqResult {
    pub holds: bool,
    pub counterexample: Option<VotingGame>,
    /// Number of games in scope (containing a vulnerable division).
    pub games_examined: usize,
}

/// Maximum player count for the exhaustive disposition scan.
pub const MAX_DNQ_PLAYERS: usize = 4;

/// Tests whether the rule is disposed to induce non-monotonicity over its
/// quarrelling pair, exhaustively over all non-trivial monotonic games on
/// `n` players.
///
/// A game is in scope when, on a side the rule quarrels on, some division
/// has the pair voting together and successful, one of them redundant, but
/// the pair jointly needed (dropping both would flip the outcome). The rule
/// has the disposition iff every in-scope game yields a non-monotonicity
/// witness over the pair.
pub fn check_dnq(rule: &QuarrelRule, n: usize) -> Result<DnqResult, Error> {
    if n > MAX_DNQ_PLAYERS {
        return Err(Error::ScaleLimit { what: "disposition scan", n, max: MAX_DNQ_PLAYERS });
    }
    let (i, j) = (rule.i, rule.j);
    for p in [i, j] {
        if p < 1 || p > n {
            return Err(Error::PlayerOutOfRange { player: p, n });
        }
    }
    let mut games_examined = 0;
    for g in enumerate_monotonic_games(n, true)? {
        if !has_vulnerable_division(&g, rule) {
            continue;
        }
        games_examined += 1;
        let g_hat = apply(rule, &g)?;
        if detect_nmq(&g, &g_hat, i, j)?.is_empty() {
            return Ok(DnqResult { holds: false, counterexample: Some(g), games_examined });
        }
    }
    Ok(DnqResult { holds: true, counterexample: None, games_examined })
}

fn has_vulnerable_division(g: &VotingGame, rule: &QuarrelRule) -> bool {
    let (i, j) = (rule.i, rule.j);
    let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
    let rest = g.full_set().difference(pair);
    rest.subsets().any(|s| {
        let both_yes = s.union(pair);
        let yes_vulnerable = rule.quarrels_on_yes()
            && g.is_winning(both_yes)
            && (g.is_winning(s.with(i)) || g.is_winning(s.with(j)))
            && !g.is_winning(s);
        let no_vulnerable = rule.quarrels_on_no()
            && !g.is_winning(s)
            && (!g.is_winning(s.with(i)) || !g.is_winning(s.with(j)))
            && g.is_winning(both_yes);
        yes_vulnerable || no_vulnerable
    })
}
