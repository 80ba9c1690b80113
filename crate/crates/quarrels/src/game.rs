//! Binary voting games represented by their yes-successful coalitions.
//!
//! A game on players `1..=n` maps each division (identified by its yes-set)
//! to a yes/no outcome. Decisiveness is defined by membership difference, so
//! it stays meaningful on non-monotonic games: a player's vote is decisive
//! whenever flipping it flips the outcome, whether or not the vote agrees
//! with the outcome.

use std::fmt;

use num::{BigRational, Zero};
use serde::Deserialize;

use crate::Error;

/// Hard cap on player count; exact enumeration over divisions is `O(2^n)`.
pub const MAX_PLAYERS: usize = 20;

/// Exhaustive enumeration of monotone games is limited to this many players.
pub const MAX_ENUMERATION_PLAYERS: usize = 5;

/// A subset of the players `1..=n`, stored as a bitmask (bit `p-1` = player `p`).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlayerSet(u32);

impl PlayerSet {
    pub const EMPTY: PlayerSet = PlayerSet(0);

    pub fn full(n: usize) -> PlayerSet {
        PlayerSet(((1u64 << n) - 1) as u32)
    }

    /// Set containing the single 1-based player `p`.
    pub fn singleton(p: usize) -> PlayerSet {
        debug_assert!(p >= 1);
        PlayerSet(1 << (p - 1))
    }

    /// Builds a set from 1-based player indices.
    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> PlayerSet {
        players.into_iter().map(PlayerSet::singleton).fold(PlayerSet::EMPTY, PlayerSet::union)
    }

    pub fn from_bits(bits: u32) -> PlayerSet {
        PlayerSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, p: usize) -> bool {
        p >= 1 && self.0 >> (p - 1) & 1 == 1
    }

    pub fn with(self, p: usize) -> PlayerSet {
        PlayerSet(self.0 | PlayerSet::singleton(p).0)
    }

    pub fn without(self, p: usize) -> PlayerSet {
        PlayerSet(self.0 & !PlayerSet::singleton(p).0)
    }

    pub fn union(self, other: PlayerSet) -> PlayerSet {
        PlayerSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PlayerSet) -> PlayerSet {
        PlayerSet(self.0 & other.0)
    }

    pub fn difference(self, other: PlayerSet) -> PlayerSet {
        PlayerSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: PlayerSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 1-based members in ascending order.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..u32::BITS as usize).filter(move |b| bits >> b & 1 == 1).map(|b| b + 1)
    }

    /// All subsets of this set, in ascending bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = PlayerSet> {
        // Subset-walk trick: (s - mask) & mask is the next submask upward.
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some(cur.wrapping_sub(mask) & mask) };
            Some(PlayerSet(cur))
        })
    }
}

impl fmt::Display for PlayerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.players().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PlayerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of a division.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Yes,
    No,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
        })
    }
}

/// Which side of a division a player votes on.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Side {
    Yes,
    No,
}

/// Least `k` for which a game is k-monotonic, if any `k <= n` works.
///
/// `NoneWithinN` arises exactly when the empty set is yes-successful while
/// some other set is not: discarding every member of a yes-successful subset
/// still leaves a yes-successful set, so no amount of discarding helps.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MinK {
    Bounded(usize),
    NoneWithinN,
}

impl MinK {
    /// Numeric rank used to compare departure from monotonicity across games
    /// on the same or growing player counts: `NoneWithinN` on `n` players
    /// ranks as `n + 1`, strictly above every attainable bound.
    pub fn rank(self, n: usize) -> usize {
        match self {
            MinK::Bounded(k) => k,
            MinK::NoneWithinN => n + 1,
        }
    }
}

impl fmt::Display for MinK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinK::Bounded(k) => write!(f, "{k}"),
            MinK::NoneWithinN => f.write_str("none-within-n"),
        }
    }
}

/// How far a game departs from monotonicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotonicityReport {
    pub is_monotonic: bool,
    pub min_k: MinK,
    /// Single-flip violating pairs `(T, S)` with `T ⊂ S`, `T` winning, `S` losing.
    /// Empty exactly when the game is monotonic.
    pub violating_pairs: Vec<(PlayerSet, PlayerSet)>,
}

impl MonotonicityReport {
    pub fn to_json(&self) -> serde_json::Value {
        let min_k = match self.min_k {
            MinK::Bounded(k) => serde_json::json!(k),
            MinK::NoneWithinN => serde_json::json!("none-within-n"),
        };
        serde_json::json!({
            "is_monotonic": self.is_monotonic,
            "min_k": min_k,
            "violating_pairs": self
                .violating_pairs
                .iter()
                .map(|(t, s)| {
                    serde_json::json!({
                        "winning_subset": t.players().collect::<Vec<_>>(),
                        "losing_superset": s.players().collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// A binary voting game, stored extensionally as its winning coalitions.
///
/// Derived (quarrelled) games generally have no weighted form, so the set
/// representation is primary; [`VotingGame::weighted`] is a convenience
/// constructor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VotingGame {
    n: usize,
    /// Sorted ascending by bitmask, no duplicates.
    winning: Vec<PlayerSet>,
}

impl fmt::Debug for VotingGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VotingGame(n={}, W={{", self.n)?;
        for (k, s) in self.winning.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}})")
    }
}

impl VotingGame {
    /// Game with exactly the listed yes-successful coalitions; duplicates collapse.
    pub fn from_winning_sets<I>(n: usize, winning: I) -> Result<VotingGame, Error>
    where
        I: IntoIterator<Item = PlayerSet>,
    {
        if n == 0 || n > MAX_PLAYERS {
            return Err(Error::UnsupportedPlayerCount { n, max: MAX_PLAYERS });
        }
        let full = PlayerSet::full(n);
        let mut sets: Vec<PlayerSet> = Vec::new();
        for s in winning {
            if !s.is_subset_of(full) {
                let p = s.difference(full).players().next().unwrap_or(0);
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
            sets.push(s);
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(VotingGame { n, winning: sets })
    }

    /// Weighted game: `S` wins iff the weights over `S` sum to at least `quota`.
    pub fn weighted(weights: &[BigRational], quota: &BigRational) -> Result<VotingGame, Error> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        let n = weights.len();
        if n > MAX_PLAYERS {
            return Err(Error::UnsupportedPlayerCount { n, max: MAX_PLAYERS });
        }
        if quota <= &BigRational::zero() {
            return Err(Error::NonPositiveQuota);
        }
        if let Some(p) = weights.iter().position(|w| w < &BigRational::zero()) {
            return Err(Error::NegativeWeight { player: p + 1 });
        }
        let mut winning = Vec::new();
        for s in PlayerSet::full(n).subsets() {
            let total: BigRational = s.players().map(|p| weights[p - 1].clone()).sum();
            if &total >= quota {
                winning.push(s);
            }
        }
        Ok(VotingGame { n, winning })
    }

    /// Internal constructor from a membership table over all `2^n` masks.
    pub(crate) fn from_table(n: usize, table: &[bool]) -> VotingGame {
        debug_assert_eq!(table.len(), 1 << n);
        let winning =
            table.iter().enumerate().filter(|(_, w)| **w).map(|(m, _)| PlayerSet(m as u32)).collect();
        VotingGame { n, winning }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn winning(&self) -> &[PlayerSet] {
        &self.winning
    }

    pub fn full_set(&self) -> PlayerSet {
        PlayerSet::full(self.n)
    }

    /// All `2^n` divisions, identified by their yes-sets, ascending by bitmask.
    pub fn divisions(&self) -> impl Iterator<Item = PlayerSet> {
        (0..1u64 << self.n).map(|m| PlayerSet(m as u32))
    }

    /// Membership of `s` in the winning family. `s` must lie within `[n]`.
    pub fn is_winning(&self, s: PlayerSet) -> bool {
        debug_assert!(s.is_subset_of(self.full_set()));
        self.winning.binary_search(&s).is_ok()
    }

    fn check_player(&self, p: usize) -> Result<(), Error> {
        if p < 1 || p > self.n {
            return Err(Error::PlayerOutOfRange { player: p, n: self.n });
        }
        Ok(())
    }

    fn check_set(&self, s: PlayerSet) -> Result<(), Error> {
        if !s.is_subset_of(self.full_set()) {
            let p = s.difference(self.full_set()).players().next().unwrap_or(0);
            return Err(Error::PlayerOutOfRange { player: p, n: self.n });
        }
        Ok(())
    }

    pub fn outcome(&self, yes_set: PlayerSet) -> Result<Outcome, Error> {
        self.check_set(yes_set)?;
        Ok(if self.is_winning(yes_set) { Outcome::Yes } else { Outcome::No })
    }

    /// The complement game: `T` wins in `g^C` iff `[n]\T` loses in `g`.
    ///
    /// Complementation is an involution and preserves monotonicity.
    pub fn complement(&self) -> VotingGame {
        let full = self.full_set();
        let mut winning: Vec<PlayerSet> =
            self.divisions().filter(|t| !self.is_winning(full.difference(*t))).collect();
        winning.sort_unstable();
        VotingGame { n: self.n, winning }
    }

    pub fn is_monotonic(&self) -> bool {
        // A violation exists iff a single-flip violation exists.
        !self.winning.iter().any(|&t| {
            self.full_set().difference(t).players().any(|p| !self.is_winning(t.with(p)))
        })
    }

    /// Not all divisions share one outcome.
    pub fn is_non_trivial(&self) -> bool {
        !self.winning.is_empty() && self.winning.len() != 1 << self.n
    }

    /// `[n]` wins and the empty set loses.
    pub fn satisfies_unanimity(&self) -> bool {
        self.is_winning(self.full_set()) && !self.is_winning(PlayerSet::EMPTY)
    }

    /// Player `i` votes yes in the division and flipping its vote flips the outcome.
    ///
    /// Covers both the monotonic clause (`S` wins, `S\{i}` loses) and its
    /// non-monotonic mirror image (`S` loses, `S\{i}` wins).
    pub fn is_yes_decisive(&self, yes_set: PlayerSet, i: usize) -> Result<bool, Error> {
        self.check_set(yes_set)?;
        self.check_player(i)?;
        if !yes_set.contains(i) {
            return Err(Error::NotAYesVoter { player: i, yes_set: yes_set.to_string() });
        }
        Ok(self.is_winning(yes_set) != self.is_winning(yes_set.without(i)))
    }

    /// Player `i` votes no in the division and flipping its vote flips the outcome.
    pub fn is_no_decisive(&self, yes_set: PlayerSet, i: usize) -> Result<bool, Error> {
        self.check_set(yes_set)?;
        self.check_player(i)?;
        if yes_set.contains(i) {
            return Err(Error::NotANoVoter { player: i, yes_set: yes_set.to_string() });
        }
        Ok(self.is_winning(yes_set) != self.is_winning(yes_set.with(i)))
    }

    /// Decisive on whichever side `i` votes in this division. No range checks.
    pub(crate) fn is_decisive_unchecked(&self, yes_set: PlayerSet, i: usize) -> bool {
        if yes_set.contains(i) {
            self.is_winning(yes_set) != self.is_winning(yes_set.without(i))
        } else {
            self.is_winning(yes_set) != self.is_winning(yes_set.with(i))
        }
    }

    /// A dummy is decisive in no division.
    pub fn is_dummy(&self, i: usize) -> Result<bool, Error> {
        self.check_player(i)?;
        let rest = self.full_set().without(i);
        Ok(rest.subsets().all(|s| self.is_winning(s) == self.is_winning(s.with(i))))
    }

    /// `{i}` wins and no coalition excluding `i` wins.
    pub fn is_dictator(&self, i: usize) -> Result<bool, Error> {
        self.check_player(i)?;
        Ok(self.is_winning(PlayerSet::singleton(i))
            && self.full_set().without(i).subsets().all(|s| !self.is_winning(s)))
    }

    /// Whether `i` and `j` effectively cooperate on the given side: some
    /// division has them voting that side with both decisive on it.
    pub fn has_effective_cooperation(&self, i: usize, j: usize, side: Side) -> Result<bool, Error> {
        self.check_player(i)?;
        self.check_player(j)?;
        if i == j {
            return Err(Error::IdenticalPlayers { player: i });
        }
        let pair = PlayerSet::singleton(i).union(PlayerSet::singleton(j));
        let rest = self.full_set().difference(pair);
        Ok(match side {
            Side::Yes => rest.subsets().any(|s| {
                let div = s.union(pair);
                self.is_decisive_unchecked(div, i) && self.is_decisive_unchecked(div, j)
            }),
            Side::No => rest.subsets().any(|s| {
                self.is_decisive_unchecked(s, i) && self.is_decisive_unchecked(s, j)
            }),
        })
    }

    /// Full monotonicity analysis: flag, least `k` for k-monotonicity, and
    /// the single-flip violating pairs.
    ///
    /// The least `k` is the largest number of members that must be discarded
    /// from some winning subset `T` of a losing superset before it loses,
    /// with the discarded set `K` ranging over subsets of `T`.
    pub fn monotonicity_report(&self) -> MonotonicityReport {
        let n = self.n;
        let size = 1usize << n;
        let win: Vec<bool> = (0..size).map(|m| self.is_winning(PlayerSet(m as u32))).collect();

        let mut violating_pairs = Vec::new();
        for t in 0..size {
            if !win[t] {
                continue;
            }
            for b in 0..n {
                let s = t | 1 << b;
                if s != t && !win[s] {
                    violating_pairs.push((PlayerSet(t as u32), PlayerSet(s as u32)));
                }
            }
        }
        violating_pairs.sort_unstable();

        // has_losing_superset[m]: some strict superset of m loses.
        let mut has_losing_superset = vec![false; size];
        for m in (0..size).rev() {
            for b in 0..n {
                let s = m | 1 << b;
                if s != m && (!win[s] || has_losing_superset[s]) {
                    has_losing_superset[m] = true;
                    break;
                }
            }
        }
        // largest_losing_subset[m]: max cardinality of a losing subset of m, if any.
        let mut largest_losing_subset: Vec<Option<usize>> = vec![None; size];
        for m in 0..size {
            let mut best = if win[m] { None } else { Some((m as u32).count_ones() as usize) };
            for b in 0..n {
                if m >> b & 1 == 1 {
                    best = best.max(largest_losing_subset[m & !(1 << b)]);
                }
            }
            largest_losing_subset[m] = best;
        }

        let mut min_k = 0usize;
        for t in 0..size {
            if !(win[t] && has_losing_superset[t]) {
                continue;
            }
            match largest_losing_subset[t] {
                None => {
                    return MonotonicityReport {
                        is_monotonic: false,
                        min_k: MinK::NoneWithinN,
                        violating_pairs,
                    }
                }
                Some(sz) => min_k = min_k.max((t as u32).count_ones() as usize - sz),
            }
        }
        MonotonicityReport {
            is_monotonic: violating_pairs.is_empty(),
            min_k: MinK::Bounded(min_k),
            violating_pairs,
        }
    }

    pub fn min_k(&self) -> MinK {
        self.monotonicity_report().min_k
    }

    /// Relabels players: `perm[p-1]` is the new name of player `p`.
    pub fn permute_players(&self, perm: &[usize]) -> Result<VotingGame, Error> {
        let n = self.n;
        if perm.len() != n {
            return Err(Error::NotAPermutation { n });
        }
        let mut seen = vec![false; n];
        for &q in perm {
            if q < 1 || q > n || seen[q - 1] {
                return Err(Error::NotAPermutation { n });
            }
            seen[q - 1] = true;
        }
        let mut winning: Vec<PlayerSet> = self
            .winning
            .iter()
            .map(|s| PlayerSet::from_players(s.players().map(|p| perm[p - 1])))
            .collect();
        winning.sort_unstable();
        Ok(VotingGame { n, winning })
    }

    /// Compact canonical identifier, e.g. `n=3;W=[[1,2],[1,3],[1,2,3]]`.
    pub fn id_string(&self) -> String {
        let mut out = format!("n={};W=[", self.n);
        for (k, s) in self.winning.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push('[');
            for (m, p) in s.players().enumerate() {
                if m > 0 {
                    out.push(',');
                }
                out.push_str(&p.to_string());
            }
            out.push(']');
        }
        out.push(']');
        out
    }
}

/// Every monotonic game on `n` players, each exactly once, in a fixed order.
///
/// Counts match the Dedekind numbers of upward-closed families: 3, 6, 20,
/// 168, 7581 for `n = 1..=5`. With `require_non_trivial` the all-no and
/// all-yes games are dropped.
pub fn enumerate_monotonic_games(
    n: usize,
    require_non_trivial: bool,
) -> Result<MonotonicGames, Error> {
    if n == 0 {
        return Err(Error::UnsupportedPlayerCount { n, max: MAX_ENUMERATION_PLAYERS });
    }
    if n > MAX_ENUMERATION_PLAYERS {
        return Err(Error::ScaleLimit { what: "monotonic-game enumeration", n, max: MAX_ENUMERATION_PLAYERS });
    }
    let size = 1usize << n;
    let mut games = Vec::new();
    // Masks are decided in ascending numeric order, which refines the subset
    // order, so upward closure only needs the single-bit-removed predecessors.
    let mut table = vec![false; size];
    fn extend(m: usize, size: usize, n: usize, table: &mut Vec<bool>, games: &mut Vec<VotingGame>, non_trivial: bool) {
        if m == size {
            let count = table.iter().filter(|w| **w).count();
            if !non_trivial || (count != 0 && count != size) {
                games.push(VotingGame::from_table(n, table));
            }
            return;
        }
        let forced = (0..n).any(|b| m >> b & 1 == 1 && table[m & !(1 << b)]);
        if !forced {
            table[m] = false;
            extend(m + 1, size, n, table, games, non_trivial);
        }
        table[m] = true;
        extend(m + 1, size, n, table, games, non_trivial);
        table[m] = false;
    }
    extend(0, size, n, &mut table, &mut games, require_non_trivial);
    Ok(MonotonicGames { games: games.into_iter() })
}

/// Iterator over the games produced by [`enumerate_monotonic_games`].
pub struct MonotonicGames {
    games: std::vec::IntoIter<VotingGame>,
}

impl Iterator for MonotonicGames {
    type Item = VotingGame;

    fn next(&mut self) -> Option<VotingGame> {
        self.games.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.games.size_hint()
    }
}

impl ExactSizeIterator for MonotonicGames {}

// ---------------------------------------------------------------------------
// Game file format
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GameFile {
    n: usize,
    #[serde(default)]
    winning: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    weights: Option<Vec<NumberOrRatio>>,
    #[serde(default)]
    quota: Option<NumberOrRatio>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NumberOrRatio {
    Number(f64),
    Ratio(String),
}

impl NumberOrRatio {
    fn to_rational(&self) -> Result<BigRational, Error> {
        match self {
            NumberOrRatio::Number(x) => BigRational::from_float(*x)
                .ok_or_else(|| Error::GameFile { message: format!("number {x} is not finite") }),
            NumberOrRatio::Ratio(s) => parse_rational(s),
        }
    }
}

/// Parses `"p/q"` or a plain integer string into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::GameFile { message: format!("cannot parse rational {s:?}") };
    let mut parts = s.splitn(2, '/');
    let p: num::BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let q: num::BigInt = match parts.next() {
        None => num::BigInt::from(1),
        Some(q) => q.trim().parse().map_err(|_| bad())?,
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Parses the JSON game format: either `{"n":, "winning": [[..],..]}` or
/// `{"n":, "weights": [..], "quota": ..}`, player indices 1-based.
pub fn game_from_json(text: &str) -> Result<VotingGame, Error> {
    let file: GameFile = serde_json::from_str(text)
        .map_err(|e| Error::GameFile { message: e.to_string() })?;
    match (file.winning, file.weights, file.quota) {
        (Some(winning), None, None) => {
            let mut sets = Vec::with_capacity(winning.len());
            for players in winning {
                for &p in &players {
                    if p < 1 || p > file.n {
                        return Err(Error::PlayerOutOfRange { player: p, n: file.n });
                    }
                }
                sets.push(PlayerSet::from_players(players));
            }
            VotingGame::from_winning_sets(file.n, sets)
        }
        (None, Some(weights), Some(quota)) => {
            if weights.len() != file.n {
                return Err(Error::GameFile {
                    message: format!("n = {} but {} weights given", file.n, weights.len()),
                });
            }
            let ws = weights.iter().map(|w| w.to_rational()).collect::<Result<Vec<_>, _>>()?;
            VotingGame::weighted(&ws, &quota.to_rational()?)
        }
        _ => Err(Error::GameFile {
            message: "expected either \"winning\" or both \"weights\" and \"quota\"".into(),
        }),
    }
}

/// Emits a game in the `winning` form, sets sorted ascending by bitmask.
pub fn game_to_json(g: &VotingGame) -> serde_json::Value {
    serde_json::json!({
        "n": g.n(),
        "winning": g.winning().iter().map(|s| s.players().collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn game(n: usize, sets: &[&[usize]]) -> VotingGame {
        VotingGame::from_winning_sets(
            n,
            sets.iter().map(|s| PlayerSet::from_players(s.iter().copied())),
        )
        .unwrap()
    }

    fn dictator3() -> VotingGame {
        game(3, &[&[1], &[1, 2], &[1, 3], &[1, 2, 3]])
    }

    fn majority3() -> VotingGame {
        game(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])
    }

    #[test]
    fn construction_collapses_duplicates_and_checks_range() {
        let g = VotingGame::from_winning_sets(
            2,
            vec![PlayerSet::from_players([1]), PlayerSet::from_players([1])],
        )
        .unwrap();
        assert_eq!(g.winning().len(), 1);
        let err = VotingGame::from_winning_sets(2, vec![PlayerSet::from_players([3])]);
        assert_eq!(err.unwrap_err(), Error::PlayerOutOfRange { player: 3, n: 2 });
        // The all-no game is constructible even though it is trivial.
        let empty = game(2, &[]);
        assert!(!empty.is_non_trivial());
    }

    #[test]
    fn weighted_matches_quota_threshold() {
        let one = BigRational::from_integer(1.into());
        let dict = VotingGame::weighted(
            &[one.clone(), BigRational::zero(), BigRational::zero()],
            &one,
        )
        .unwrap();
        assert_eq!(dict, dictator3());

        let two = BigRational::from_integer(2.into());
        let maj = VotingGame::weighted(&[one.clone(), one.clone(), one.clone()], &two).unwrap();
        assert_eq!(maj, majority3());
        assert!(maj.is_monotonic());

        let four = BigRational::from_integer(4.into());
        let allno = VotingGame::weighted(&[one.clone(), one.clone(), one.clone()], &four).unwrap();
        assert!(allno.winning().is_empty());
        assert!(!allno.is_non_trivial());

        assert_eq!(VotingGame::weighted(&[], &one), Err(Error::EmptyWeights));
        assert_eq!(
            VotingGame::weighted(std::slice::from_ref(&one), &BigRational::zero()),
            Err(Error::NonPositiveQuota)
        );
    }

    #[test]
    fn outcome_follows_membership() {
        let d = dictator3();
        assert_eq!(d.outcome(PlayerSet::from_players([2, 3])).unwrap(), Outcome::No);
        assert_eq!(d.outcome(PlayerSet::from_players([1])).unwrap(), Outcome::Yes);
        assert_eq!(majority3().outcome(PlayerSet::from_players([1, 3])).unwrap(), Outcome::Yes);
        assert!(d.outcome(PlayerSet::from_players([4])).is_err());
    }

    #[test]
    fn complement_examples() {
        let d2 = game(2, &[&[1], &[1, 2]]);
        assert_eq!(d2.complement(), d2);
        let single = game(1, &[&[1]]);
        assert_eq!(single.complement(), single);
        assert_eq!(majority3().complement(), majority3());
    }

    #[test]
    fn monotonicity_examples() {
        assert!(dictator3().is_monotonic());
        let ghat = game(2, &[&[], &[1]]);
        assert!(!ghat.is_monotonic());
        let split = game(2, &[&[1], &[2]]);
        assert!(!split.is_monotonic());
    }

    #[test]
    fn non_triviality_and_unanimity() {
        let allno = game(2, &[]);
        assert!(!allno.is_non_trivial());
        let d = dictator3();
        assert!(d.is_non_trivial() && d.satisfies_unanimity());
        // Cataclysmic derivations can break unanimity: [n] need not win.
        let fm_derived = game(3, &[&[1], &[1, 3]]);
        assert!(!fm_derived.satisfies_unanimity());
    }

    #[test]
    fn decisiveness_examples() {
        let d = dictator3();
        let s = PlayerSet::from_players([1, 2]);
        assert!(d.is_yes_decisive(s, 1).unwrap());
        assert!(!d.is_yes_decisive(s, 2).unwrap());
        assert!(d.is_yes_decisive(s, 3).is_err());

        // Anti-dictator derived game: the former dummy is decisive everywhere.
        let lv_derived = game(3, &[&[], &[1], &[3], &[1, 3]]);
        assert!(lv_derived.is_yes_decisive(PlayerSet::from_players([1, 2, 3]), 2).unwrap());
    }

    #[test]
    fn dummy_and_dictator() {
        let d = dictator3();
        assert!(d.is_dummy(2).unwrap());
        assert!(!d.is_dummy(1).unwrap());
        assert!(d.is_dictator(1).unwrap());
        assert!(!d.is_dictator(2).unwrap());
        let m = majority3();
        assert!(!m.is_dummy(1).unwrap());
        assert!(!m.is_dictator(1).unwrap());
    }

    #[test]
    fn effective_cooperation_examples() {
        let d = dictator3();
        assert!(!d.has_effective_cooperation(1, 2, Side::Yes).unwrap());
        let m = majority3();
        assert!(m.has_effective_cooperation(1, 2, Side::Yes).unwrap());
        let unanimity2 = game(2, &[&[1, 2]]);
        assert!(!unanimity2.has_effective_cooperation(1, 2, Side::No).unwrap());
        assert!(m.has_effective_cooperation(1, 2, Side::No).unwrap());
        assert!(m.has_effective_cooperation(1, 1, Side::No).is_err());
    }

    #[test]
    fn min_k_examples() {
        let m = majority3().monotonicity_report();
        assert!(m.is_monotonic);
        assert_eq!(m.min_k, MinK::Bounded(0));
        assert!(m.violating_pairs.is_empty());

        let split = game(2, &[&[1], &[2]]);
        let r = split.monotonicity_report();
        assert!(!r.is_monotonic);
        assert_eq!(r.min_k, MinK::Bounded(1));
        assert_eq!(
            r.violating_pairs,
            vec![
                (PlayerSet::from_players([1]), PlayerSet::from_players([1, 2])),
                (PlayerSet::from_players([2]), PlayerSet::from_players([1, 2])),
            ]
        );

        // Anti-dictator: the empty set wins, so no discarding bound works.
        let anti = game(3, &[&[], &[1], &[3], &[1, 3]]);
        assert_eq!(anti.min_k(), MinK::NoneWithinN);
    }

    #[test]
    fn permute_players_examples() {
        let d = dictator3();
        assert_eq!(d.permute_players(&[1, 2, 3]).unwrap(), d);
        let d2 = d.permute_players(&[2, 1, 3]).unwrap();
        assert_eq!(d2, game(3, &[&[2], &[1, 2], &[2, 3], &[1, 2, 3]]));
        assert_eq!(majority3().permute_players(&[3, 1, 2]).unwrap(), majority3());
        assert!(d.permute_players(&[1, 1, 3]).is_err());
        assert!(d.permute_players(&[1, 2]).is_err());
    }

    #[test]
    fn enumeration_counts_match_dedekind_numbers() {
        assert_eq!(enumerate_monotonic_games(1, false).unwrap().count(), 3);
        assert_eq!(enumerate_monotonic_games(2, false).unwrap().count(), 6);
        assert_eq!(enumerate_monotonic_games(3, false).unwrap().count(), 20);
        assert_eq!(enumerate_monotonic_games(4, false).unwrap().count(), 168);
        assert_eq!(enumerate_monotonic_games(5, false).unwrap().count(), 7581);
        assert_eq!(enumerate_monotonic_games(3, true).unwrap().count(), 18);
        assert!(enumerate_monotonic_games(6, false).is_err());
    }

    #[test]
    fn enumeration_yields_distinct_monotonic_games() {
        let games: Vec<_> = enumerate_monotonic_games(4, false).unwrap().collect();
        assert!(games.iter().all(VotingGame::is_monotonic));
        let mut ids: Vec<_> = games.iter().map(VotingGame::id_string).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 168);
    }

    #[test]
    fn game_json_round_trip() {
        let g = game_from_json(r#"{"n":3,"winning":[[1,2],[1,3],[2,3],[1,2,3]]}"#).unwrap();
        assert_eq!(g, majority3());
        let text = game_to_json(&g).to_string();
        assert_eq!(game_from_json(&text).unwrap(), g);

        let w = game_from_json(r#"{"n":3,"weights":[1,1,1],"quota":2}"#).unwrap();
        assert_eq!(w, majority3());
        let frac = game_from_json(r#"{"n":2,"weights":["1/2","1/2"],"quota":"1/2"}"#).unwrap();
        assert_eq!(frac, game(2, &[&[1], &[2], &[1, 2]]));

        assert!(game_from_json(r#"{"n":2,"winning":[[5]]}"#).is_err());
        assert!(game_from_json(r#"{"n":2}"#).is_err());
        assert!(game_from_json(r#"{"n":2,"weights":[1],"quota":1}"#).is_err());
    }
}
