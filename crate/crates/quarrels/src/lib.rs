//! Quarrels in binary voting games.
//!
//! This crate models binary voting games by their winning coalitions and
//! implements a family of *quarrel* transformations between two players,
//! graded by degree (weak, strong, cataclysmic), scope (symmetric, yes-only,
//! no-only) and direction (reciprocal or not). On top of that sit exact
//! voting-power measures (Penrose-Banzhaf, the normalized Banzhaf index and
//! Shapley-Shubik), a graded k-monotonicity analysis, and checkers for the
//! quarrel postulate: no quarrelling player's a priori voting power may rise
//! because of the quarrel.
//!
//! Everything is exact: power values are rationals, and the analysis suites
//! quantify exhaustively over all monotonic games at small player counts.
//!
//! Player indices are 1-based throughout the public API and all file formats.

pub mod game;
pub mod postulate;
pub mod power;
pub mod transform;

pub use game::{
    enumerate_monotonic_games, game_from_json, game_to_json, MinK, MonotonicityReport, Outcome,
    PlayerSet, Side, VotingGame,
};
pub use postulate::{
    check_postulate, proof_family_game, rederive_quarrel_source, run_theorem_suite, scan_paradox,
    CellClass, Postulate, PostulateVerdict, ScanResult, TheoremResult, VerdictStatus,
};
pub use power::{
    banzhaf_index, penrose_banzhaf, power_report, shapley_shubik, yes_no_power, Measure,
    PowerReport,
};
pub use transform::{
    apply, apply_with_options, check_dnq, detect_nmq, fm_direct, lv_direct,
    verify_csr, verify_no_ambush_betrayal, verify_reciprocality, verify_strong_csr,
    verify_symmetry, CsrReport, Degree, Direction, DnqResult, NmqWitness, NoAmbushReport,
    QuarrelRule, RuleShape, Scope, StrongCsrReport,
};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("player {player} out of range 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("player count {n} outside supported range 1..={max}")]
    UnsupportedPlayerCount { n: usize, max: usize },
    #[error("weights must be non-empty")]
    EmptyWeights,
    #[error("quota must be positive")]
    NonPositiveQuota,
    #[error("weight of player {player} is negative")]
    NegativeWeight { player: usize },
    #[error("player {player} is not a yes-voter in division {yes_set}")]
    NotAYesVoter { player: usize, yes_set: String },
    #[error("player {player} is not a no-voter in division {yes_set}")]
    NotANoVoter { player: usize, yes_set: String },
    #[error("quarrelling players must differ (got {player} twice)")]
    IdenticalPlayers { player: usize },
    #[error("quarrels are defined only over monotonic source games")]
    NonMonotonicSource,
    #[error("map is not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("{what} supports at most n = {max} players (requested n = {n})")]
    ScaleLimit { what: &'static str, n: usize, max: usize },
    #[error("Banzhaf index undefined: every player is a dummy")]
    AllDummies,
    #[error("Shapley-Shubik index requires a monotonic game")]
    ShapleyRequiresMonotonic,
    #[error("{measure} does not provide a yes/no power decomposition")]
    NoYesNoDecomposition { measure: &'static str },
    #[error("bad rule string {input:?}: {message}")]
    RuleParse { input: String, message: String },
    #[error("bad game file: {message}")]
    GameFile { message: String },
}

impl Error {
    /// Capability errors mark requests beyond what exact analysis supports,
    /// as opposed to malformed input.
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::ScaleLimit { .. }
                | Error::ShapleyRequiresMonotonic
                | Error::AllDummies
                | Error::NoYesNoDecomposition { .. }
        )
    }
}
