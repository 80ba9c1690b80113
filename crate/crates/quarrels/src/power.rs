//! Exact voting-power measures.
//!
//! The Penrose-Banzhaf measure of a player is the fraction of all `2^n`
//! divisions in which its vote is decisive, evaluated with the generalized
//! membership-difference notion of decisiveness so that it stays valid on
//! non-monotonic games. Every yes-decisive division is mirrored by exactly
//! one no-decisive division (the one with the player's vote flipped), so on
//! monotonic games this agrees with the usual count over yes-decisive
//! divisions with denominator `2^(n-1)`.
//!
//! The Shapley-Shubik index counts the fraction of player orderings in which
//! a player is pivotal. Pivot uniqueness needs monotonicity, so the index is
//! only offered for monotonic games.
//!
//! All values are exact rationals.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use serde_json::json;

use crate::game::VotingGame;
use crate::Error;

/// Selection of a voting-power measure.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Measure {
    PenroseBanzhaf,
    BanzhafIndex,
    ShapleyShubik,
}

impl Measure {
    pub fn parse(text: &str) -> Option<Measure> {
        match text {
            "pb" => Some(Measure::PenroseBanzhaf),
            "bz" => Some(Measure::BanzhafIndex),
            "ss" => Some(Measure::ShapleyShubik),
            _ => None,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Measure::PenroseBanzhaf => "pb",
            Measure::BanzhafIndex => "bz",
            Measure::ShapleyShubik => "ss",
        }
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Per-player power values under one measure; the yes/no split is populated
/// for the Penrose-Banzhaf measure only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerReport {
    pub measure: Measure,
    pub values: Vec<BigRational>,
    pub yes_values: Option<Vec<BigRational>>,
    pub no_values: Option<Vec<BigRational>>,
}

impl PowerReport {
    pub fn to_json(&self) -> serde_json::Value {
        let players: Vec<serde_json::Value> = (0..self.values.len())
            .map(|k| {
                let mut row = json!({
                    "player": k + 1,
                    "value": self.values[k].to_string(),
                    "decimal": format_decimal(&self.values[k]),
                });
                if let (Some(yes), Some(no)) = (&self.yes_values, &self.no_values) {
                    row["yes_value"] = json!(yes[k].to_string());
                    row["yes_decimal"] = json!(format_decimal(&yes[k]));
                    row["no_value"] = json!(no[k].to_string());
                    row["no_decimal"] = json!(format_decimal(&no[k]));
                }
                row
            })
            .collect();
        json!({ "measure": self.measure.token(), "players": players })
    }
}

fn check_player(g: &VotingGame, i: usize) -> Result<(), Error> {
    if i < 1 || i > g.n() {
        return Err(Error::PlayerOutOfRange { player: i, n: g.n() });
    }
    Ok(())
}

/// Fraction of all divisions in which `i` is decisive (either side).
pub fn penrose_banzhaf(g: &VotingGame, i: usize) -> Result<BigRational, Error> {
    check_player(g, i)?;
    let decisive = g.divisions().filter(|&s| g.is_decisive_unchecked(s, i)).count();
    Ok(ratio(decisive, 1u64 << g.n()))
}

/// The yes/no decomposition of Penrose-Banzhaf power: fractions of divisions
/// in which `i` is yes-decisive and no-decisive respectively. They always
/// sum to the full measure, and mirror each other exactly.
pub fn yes_no_power(g: &VotingGame, i: usize) -> Result<(BigRational, BigRational), Error> {
    check_player(g, i)?;
    let denom = 1u64 << g.n();
    let mut yes = 0usize;
    let mut no = 0usize;
    for s in g.divisions() {
        if s.contains(i) {
            yes += g.is_yes_decisive(s, i)? as usize;
        } else {
            no += g.is_no_decisive(s, i)? as usize;
        }
    }
    Ok((ratio(yes, denom), ratio(no, denom)))
}

/// Penrose-Banzhaf values rescaled to sum to one.
pub fn banzhaf_index(g: &VotingGame) -> Result<PowerReport, Error> {
    let raw: Vec<BigRational> =
        (1..=g.n()).map(|i| penrose_banzhaf(g, i)).collect::<Result<_, _>>()?;
    let total: BigRational = raw.iter().sum();
    if total.is_zero() {
        return Err(Error::AllDummies);
    }
    Ok(PowerReport {
        measure: Measure::BanzhafIndex,
        values: raw.into_iter().map(|v| v / &total).collect(),
        yes_values: None,
        no_values: None,
    })
}

/// Fraction of the `n!` player orderings in which `i` is pivotal, evaluated
/// by coalition counting: each coalition `S` containing `i` with `i`
/// yes-decisive contributes `(|S|-1)! (n-|S|)!` orderings.
pub fn shapley_shubik(g: &VotingGame, i: usize) -> Result<BigRational, Error> {
    check_player(g, i)?;
    if !g.is_monotonic() {
        return Err(Error::ShapleyRequiresMonotonic);
    }
    let n = g.n();
    let fact: Vec<u128> = {
        let mut f = vec![1u128; n + 1];
        for k in 1..=n {
            f[k] = f[k - 1] * k as u128;
        }
        f
    };
    let mut orderings: u128 = 0;
    for s in g.full_set().without(i).subsets() {
        let coalition = s.with(i);
        if g.is_winning(coalition) && !g.is_winning(s) {
            let size = coalition.len();
            orderings += fact[size - 1] * fact[n - size];
        }
    }
    Ok(BigRational::new(u128_to_bigint(orderings), u128_to_bigint(fact[n])))
}

/// Computes a full per-player report under the chosen measure.
pub fn power_report(g: &VotingGame, measure: Measure) -> Result<PowerReport, Error> {
    match measure {
        Measure::PenroseBanzhaf => {
            let mut values = Vec::with_capacity(g.n());
            let mut yes_values = Vec::with_capacity(g.n());
            let mut no_values = Vec::with_capacity(g.n());
            for i in 1..=g.n() {
                values.push(penrose_banzhaf(g, i)?);
                let (yes, no) = yes_no_power(g, i)?;
                yes_values.push(yes);
                no_values.push(no);
            }
            Ok(PowerReport {
                measure,
                values,
                yes_values: Some(yes_values),
                no_values: Some(no_values),
            })
        }
        Measure::BanzhafIndex => banzhaf_index(g),
        Measure::ShapleyShubik => Ok(PowerReport {
            measure,
            values: (1..=g.n()).map(|i| shapley_shubik(g, i)).collect::<Result<_, _>>()?,
            yes_values: None,
            no_values: None,
        }),
    }
}

fn ratio(num: usize, denom: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(denom))
}

fn u128_to_bigint(x: u128) -> BigInt {
    BigInt::from(x)
}

/// Decimal approximation to 12 significant digits, without scientific
/// notation. Exact rational rounding (half away from zero).
pub fn format_decimal(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    let ten = BigRational::from_integer(10.into());

    // Decimal exponent: 10^e <= a < 10^(e+1).
    let mut e: i64 = 0;
    let mut scaled = a.clone();
    while scaled >= ten {
        scaled /= &ten;
        e += 1;
    }
    while scaled < BigRational::one() {
        scaled *= &ten;
        e -= 1;
    }

    const DIGITS: i64 = 12;
    let shift = DIGITS - 1 - e;
    let pow10 = |k: i64| -> BigInt { BigInt::from(10u32).pow(k as u32) };
    let (num, den) = if shift >= 0 {
        (a.numer() * pow10(shift), a.denom().clone())
    } else {
        (a.numer().clone(), a.denom() * pow10(-shift))
    };
    let mut mantissa: BigInt = (num * 2 + &den) / (den * 2);
    if mantissa == pow10(DIGITS) {
        mantissa /= BigInt::from(10u32);
        e += 1;
    }
    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len() as i64, DIGITS);

    if e < 0 {
        format!("{sign}0.{}{digits}", "0".repeat((-e - 1) as usize))
    } else {
        let point = (e + 1) as usize;
        format!("{sign}{}.{}", &digits[..point], &digits[point..])
    }
}
