//! Closed-form rainbow numbers `rb(W_d(s), θ)` and the domains they hold on.
//!
//! All arithmetic is exact: `⌊a·d/b⌋` is integer division of `a·d` by `b`.
//! Queries outside every known domain return `None` instead of extrapolating.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::patterns::ThetaPattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueKind {
    Exact,
    UpperBound,
    LowerBound,
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValueKind::Exact => "exact",
            ValueKind::UpperBound => "upper_bound",
            ValueKind::LowerBound => "lower_bound",
        })
    }
}

/// Where a value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaSource {
    /// `F_t` in `W_d`, `t >= 4`: `⌊(2t-5)d/(t-2)⌋ + 1`.
    FanOneHub,
    /// `F_t` in `W_d(2)`, `t >= 6`: `⌊(3t-10)d/(t-3)⌋ + 1`.
    FanTwoHubs,
    /// `F_t` in `W_d(s)`, `s >= 3`, `t >= 7`: `⌊((s+1)t-(3s+4))d/(t-3)⌋ + 1`.
    FanManyHubs,
    /// Any `θ_{t,ℓ}` in `W_d` with `t >= max(5, ℓ+4)`: `⌊(2t-7)d/(t-3)⌋ + 1`.
    ThetaOneHub,
    /// `F_5` in `W_d(2)`, `d >= 5`: at most `⌊33d/14⌋ + 1`.
    FanTwoHubsT5Ceiling,
    /// `F_6` in `W_d(3)`, `d >= 5`: at most `⌊55d/16⌋ + 1`.
    FanThreeHubsT6Ceiling,
    /// Literature values for short cycles in `W_d`, used only as cross-checks.
    KnownCycle,
}

impl FormulaSource {
    /// Values taken from earlier literature rather than derived here.
    pub fn is_external(self) -> bool {
        self == FormulaSource::KnownCycle
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValue {
    pub value: u64,
    pub kind: ValueKind,
    pub source: FormulaSource,
}

/// `⌊num·d/den⌋`.
pub fn floor_ratio(num: u64, den: u64, d: u64) -> u64 {
    num * d / den
}

fn exact(value: u64, source: FormulaSource) -> Option<FormulaValue> {
    Some(FormulaValue { value, kind: ValueKind::Exact, source })
}

/// Rainbow number of `p` in `W_d(s)` where a closed form is known.
///
/// The three fan cases and the single-hub theta case need `d >= 3t-5`; the
/// two ceilings for `(s,t) = (2,5)` and `(3,6)` need `d >= 5`; the short-cycle
/// literature values apply to `W_d` for `d >= t`.
pub fn rb_formula(d: usize, s: usize, p: &ThetaPattern) -> Option<FormulaValue> {
    let (d, s, t, ell) = (d as u64, s as u64, p.t() as u64, p.ell() as u64);
    if d < 3 || s < 1 {
        return None;
    }
    let large = d + 5 >= 3 * t;
    if p.is_fan() && large {
        if s == 1 && t >= 4 {
            return exact(floor_ratio(2 * t - 5, t - 2, d) + 1, FormulaSource::FanOneHub);
        }
        if s == 2 && t >= 6 {
            return exact(floor_ratio(3 * t - 10, t - 3, d) + 1, FormulaSource::FanTwoHubs);
        }
        if s >= 3 && t >= 7 {
            return exact(floor_ratio((s + 1) * t - (3 * s + 4), t - 3, d) + 1, FormulaSource::FanManyHubs);
        }
    }
    if s == 1 && large && t >= 5 && t >= ell + 4 {
        return exact(floor_ratio(2 * t - 7, t - 3, d) + 1, FormulaSource::ThetaOneHub);
    }
    if p.is_fan() && d >= 5 {
        let ceiling = |num, den, source| {
            Some(FormulaValue { value: floor_ratio(num, den, d) + 1, kind: ValueKind::UpperBound, source })
        };
        if s == 2 && t == 5 {
            return ceiling(33, 14, FormulaSource::FanTwoHubsT5Ceiling);
        }
        if s == 3 && t == 6 {
            return ceiling(55, 16, FormulaSource::FanThreeHubsT6Ceiling);
        }
    }
    if s == 1 && p.is_cycle() && d >= t {
        let value = match t {
            3 => d + 2,
            4 => floor_ratio(4, 3, d) + 1,
            5 => floor_ratio(3, 2, d) + 1,
            6 => floor_ratio(5, 3, d) + 1,
            _ => return None,
        };
        return exact(value, FormulaSource::KnownCycle);
    }
    None
}

/// Earlier general bounds for `rb(W_d, C_k)`, `d >= k-1`, `k >= 5`:
/// `(⌊(2k-7)d/(k-3)⌋ + 1, ⌊(2k-5)d/(k-2)⌋ + 1)`. Kept as metadata.
pub fn literature_cycle_bounds(d: usize, k: usize) -> Option<(u64, u64)> {
    let (d, k) = (d as u64, k as u64);
    if k < 5 || d + 1 < k {
        return None;
    }
    Some((floor_ratio(2 * k - 7, k - 3, d) + 1, floor_ratio(2 * k - 5, k - 2, d) + 1))
}
