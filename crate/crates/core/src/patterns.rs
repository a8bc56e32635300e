//! Chorded cycles `θ_{t,ℓ}`: a `t`-cycle `w_1 … w_t` plus `ℓ` chords all leaving
//! `w_1`. A pattern is pinned by its chord vector `(2, i_1, …, i_ℓ, t)`, where
//! `w_1 w_{i_j}` is a chord and `2 < i_1 < … < i_ℓ < t`.
//!
//! The fan `F_t` has every chord `(3, …, t-1)`; the cycle `C_t` has none.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThetaPattern {
    t: usize,
    chords: Vec<usize>,
}

impl ThetaPattern {
    /// Validates `t >= 3` and `2 < i_1 < … < i_ℓ < t`.
    pub fn new(t: usize, chords: Vec<usize>) -> Result<Self> {
        if t < 3 {
            return Err(Error::Domain(format!("cycle length t = {t} must be at least 3")));
        }
        if let Some(&bad) = chords.iter().find(|&&i| i <= 2 || i >= t) {
            return Err(Error::Domain(format!("chord endpoint {bad} must lie strictly between 2 and {t}")));
        }
        if chords.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!("chord endpoints {chords:?} must be strictly increasing")));
        }
        Ok(ThetaPattern { t, chords })
    }

    pub fn fan(t: usize) -> Result<Self> {
        Self::new(t, (3..t).collect())
    }

    pub fn cycle(t: usize) -> Result<Self> {
        Self::new(t, Vec::new())
    }

    /// Every pattern with cycle length `t` and exactly `ell` chords, in
    /// lexicographic chord order.
    pub fn all_with(t: usize, ell: usize) -> Vec<ThetaPattern> {
        fn rec(next: usize, t: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<ThetaPattern>) {
            if left == 0 {
                out.push(ThetaPattern { t, chords: cur.clone() });
                return;
            }
            for i in next..t {
                if t - i < left {
                    break;
                }
                cur.push(i);
                rec(i + 1, t, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if t >= 3 && ell + 3 <= t {
            rec(3, t, ell, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn ell(&self) -> usize {
        self.chords.len()
    }

    pub fn chords(&self) -> &[usize] {
        &self.chords
    }

    /// `(2, i_1, …, i_ℓ, t)`: the cycle positions joined to `w_1`.
    pub fn chord_vector(&self) -> Vec<usize> {
        let mut x = Vec::with_capacity(self.chords.len() + 2);
        x.push(2);
        x.extend_from_slice(&self.chords);
        x.push(self.t);
        x
    }

    pub fn edge_count(&self) -> usize {
        self.t + self.chords.len()
    }

    pub fn is_fan(&self) -> bool {
        self.chords.len() + 3 == self.t
    }

    pub fn is_cycle(&self) -> bool {
        self.chords.is_empty()
    }

    /// `ℓ = 0`, or `i_j + i_{ℓ+1-j} = t + 2` for every `j`.
    pub fn is_symmetric(&self) -> bool {
        let l = self.chords.len();
        (0..l.div_ceil(2)).all(|j| self.chords[j] + self.chords[l - 1 - j] == self.t + 2)
    }

    /// Copies per (hub, arc) placement: 1 for symmetric patterns, 2 otherwise.
    pub fn multiplicity(&self) -> usize {
        if self.is_symmetric() {
            1
        } else {
            2
        }
    }

    /// Cycle position reached by walking the boundary cycle the other way:
    /// `i -> t + 2 - i`, reduced into `1..=t`.
    pub fn reflect_index(&self, i: usize) -> usize {
        let t = self.t as i64;
        ((t + 2 - i as i64 - 1).rem_euclid(t) + 1) as usize
    }

    /// The same graph read with the boundary cycle reversed.
    pub fn reversed(&self) -> ThetaPattern {
        let mut chords: Vec<usize> = self.chords.iter().map(|&i| self.reflect_index(i)).collect();
        chords.sort_unstable();
        ThetaPattern { t: self.t, chords }
    }

    /// Pattern edges as 1-based vertex pairs `(w_a, w_b)`: the cycle first, then chords.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (1..self.t).map(|k| (k, k + 1)).collect();
        out.push((self.t, 1));
        out.extend(self.chords.iter().map(|&i| (1, i)));
        out
    }
}

impl fmt::Display for ThetaPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_fan() && self.t >= 4 {
            write!(f, "F_{}", self.t)
        } else if self.is_cycle() {
            write!(f, "C_{}", self.t)
        } else {
            let chords: Vec<String> = self.chords.iter().map(|i| i.to_string()).collect();
            write!(f, "theta_{},{}[{}]", self.t, self.chords.len(), chords.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn theta(t: usize, chords: &[usize]) -> ThetaPattern {
        ThetaPattern::new(t, chords.to_vec()).unwrap()
    }

    #[test]
    fn symmetry_examples() {
        assert!(theta(6, &[3, 5]).is_symmetric());
        assert!(!theta(6, &[3, 4]).is_symmetric());
        assert!(ThetaPattern::cycle(9).unwrap().is_symmetric());
        assert!(theta(7, &[3, 6]).is_symmetric());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(ThetaPattern::fan(7).unwrap().multiplicity(), 1);
        assert_eq!(theta(5, &[3]).multiplicity(), 2);
        assert_eq!(theta(7, &[3, 6]).multiplicity(), 1);
    }

    #[test]
    fn rejects_bad_chords() {
        assert!(ThetaPattern::new(6, vec![2]).is_err());
        assert!(ThetaPattern::new(6, vec![6]).is_err());
        assert!(ThetaPattern::new(6, vec![4, 3]).is_err());
        assert!(ThetaPattern::new(6, vec![4, 4]).is_err());
        assert!(ThetaPattern::new(2, vec![]).is_err());
    }

    #[test]
    fn fan_and_cycle_flags() {
        let f = ThetaPattern::fan(6).unwrap();
        assert_eq!(f.chords(), &[3, 4, 5]);
        assert!(f.is_fan() && !f.is_cycle());
        assert_eq!(f.edge_count(), 9);
        assert_eq!(f.chord_vector(), vec![2, 3, 4, 5, 6]);
        // F_3 and C_3 coincide.
        assert_eq!(ThetaPattern::fan(3).unwrap(), ThetaPattern::cycle(3).unwrap());
    }

    #[test]
    fn reversal() {
        assert_eq!(theta(6, &[3, 4]).reversed(), theta(6, &[4, 5]));
        assert_eq!(theta(5, &[3]).reversed(), theta(5, &[4]));
        assert_eq!(theta(6, &[3, 5]).reversed(), theta(6, &[3, 5]));
    }

    #[test]
    fn all_with_counts() {
        assert_eq!(ThetaPattern::all_with(7, 2).len(), 6); // C(4,2)
        assert_eq!(ThetaPattern::all_with(7, 4), vec![ThetaPattern::fan(7).unwrap()]);
        assert!(ThetaPattern::all_with(5, 3).is_empty());
    }

    fn any_pattern() -> impl Strategy<Value = ThetaPattern> {
        (3usize..12).prop_flat_map(|t| {
            proptest::sample::subsequence((3..t).collect::<Vec<_>>(), 0..=t - 3)
                .prop_map(move |chords| ThetaPattern::new(t, chords).unwrap())
        })
    }

    proptest! {
        #[test]
        fn fans_are_symmetric(t in 4usize..40) {
            prop_assert!(ThetaPattern::fan(t).unwrap().is_symmetric());
        }

        #[test]
        fn multiplicity_tracks_symmetry(p in any_pattern()) {
            prop_assert_eq!(p.multiplicity(), 2 - p.is_symmetric() as usize);
            prop_assert_eq!(p.is_symmetric(), p.reversed() == p);
            prop_assert_eq!(p.reversed().reversed(), p.clone());
            prop_assert_eq!(p.is_fan(), p.chords() == (3..p.t()).collect::<Vec<_>>().as_slice());
        }
    }
}
