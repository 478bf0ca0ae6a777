//! The rank function of a configuration: the map sending each subset of
//! columns to the dimension of its span.
//!
//! Subsets of the column index set `{1, ..., m}` are encoded as bitmasks
//! `0 .. 2^m`, bit `i-1` standing for column `i`.

use std::fmt;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::linalg::rank_in_place;

/// A map from subsets of `[m]` to naturals, stored as a table indexed by
/// bitmask. For rank functions of configurations this is a matroid rank
/// function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankFunction {
    m: usize,
    values: Vec<u8>,
}

impl RankFunction {
    /// Wraps a value table; `values.len()` must be `2^m`.
    pub fn from_values(m: usize, values: Vec<u8>) -> Result<RankFunction> {
        if m > 16 {
            return Err(Error::UnsupportedShape(format!("m = {m} exceeds 16")));
        }
        if values.len() != 1 << m {
            return Err(Error::SizeMismatch(values.len(), 1 << m));
        }
        Ok(RankFunction { m, values })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The value on the subset encoded by `mask`.
    pub fn value(&self, mask: u32) -> u8 {
        self.values[mask as usize]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Pointwise comparison: `self(I) <= other(I)` for every subset `I`.
    /// This is the closure (degeneration) order on fibers.
    pub fn leq(&self, other: &RankFunction) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::SizeMismatch(self.m, other.m));
        }
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    /// Checks the matroid rank axioms: normalization on the empty set and
    /// singletons (nonzero columns), monotonicity, unit increase, and
    /// submodularity.
    pub fn is_matroid_rank(&self) -> bool {
        let n_masks = 1u32 << self.m;
        if self.values[0] != 0 {
            return false;
        }
        for i in 0..self.m {
            if self.value(1 << i) != 1 {
                return false;
            }
        }
        for mask in 0..n_masks {
            let v = self.value(mask);
            for i in 0..self.m {
                if mask & (1 << i) != 0 {
                    continue;
                }
                let bigger = self.value(mask | (1 << i));
                // Monotone and unit increase along single-element extensions.
                if bigger < v || bigger > v + 1 {
                    return false;
                }
            }
        }
        for a in 0..n_masks {
            for b in 0..n_masks {
                if self.value(a | b) + self.value(a & b) > self.value(a) + self.value(b) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for RankFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..1u32 << self.m)
            .map(|mask| format!("{} -> {}", format_mask(mask, self.m), self.value(mask)))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Renders a subset bitmask as `{1,3}` (1-based elements).
pub fn format_mask(mask: u32, m: usize) -> String {
    let elems: Vec<String> = (0..m)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

/// Computes the rank function of a configuration: for every subset `I` of
/// columns, the exact rank of the submatrix with those columns.
pub fn compute_pi(cfg: &Configuration) -> RankFunction {
    let n = cfg.n();
    let m = cfg.m();
    let n_masks = 1u32 << m;
    let mut values = vec![0u8; n_masks as usize];
    let mut scratch = Vec::with_capacity(n * m);
    for mask in 1..n_masks {
        let k = mask.count_ones() as usize;
        values[mask as usize] = match k {
            // Columns are nonzero.
            1 => 1,
            // Canonical form makes projective equality a coordinate
            // comparison, so two columns span one line iff they are equal.
            2 => {
                let mut it = (0..m).filter(|i| mask & (1 << i) != 0);
                let (a, b) = (it.next().unwrap(), it.next().unwrap());
                if cfg.column(a) == cfg.column(b) {
                    1
                } else {
                    2
                }
            }
            _ => {
                scratch.clear();
                for r in 0..n {
                    for (i, col) in cfg.columns().iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            scratch.push(col.coords()[r].clone());
                        }
                    }
                }
                rank_in_place(&mut scratch, n, k) as u8
            }
        };
    }
    RankFunction { m, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn q() -> FieldCtx {
        FieldCtx::Rational
    }

    fn cfg(cols: &[&[i64]]) -> Configuration {
        Configuration::from_int_columns(q(), 3, cols).unwrap()
    }

    #[test]
    fn repeated_point_has_constant_rank_one() {
        let phi = compute_pi(&cfg(&[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]));
        assert_eq!(phi.value(0), 0);
        for mask in 1..16 {
            assert_eq!(phi.value(mask), 1);
        }
    }

    #[test]
    fn general_position_rank_is_capped_cardinality() {
        let phi = compute_pi(&cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]));
        for mask in 0u32..16 {
            assert_eq!(phi.value(mask), (mask.count_ones() as u8).min(3));
        }
    }

    #[test]
    fn empty_set_has_rank_zero() {
        let phi = compute_pi(&cfg(&[&[1, 2, 3], &[0, 1, 1], &[1, 0, 0], &[2, 1, 1]]));
        assert_eq!(phi.value(0), 0);
    }

    #[test]
    fn matroid_axioms_hold_on_a_sample() {
        let samples: Vec<Configuration> = vec![
            cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
            cfg(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            cfg(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 0], &[0, 1, 0]]),
            Configuration::from_int_columns(q(), 2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]).unwrap(),
        ];
        for c in &samples {
            assert!(compute_pi(c).is_matroid_rank(), "axioms fail for {c}");
        }
    }

    #[test]
    fn leq_examples() {
        // phi of [e1,e1,e1,e1] (constant 1) vs general position (min(#I,3)).
        let low = compute_pi(&cfg(&[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0], &[1, 0, 0]]));
        let high = compute_pi(&cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]));
        assert!(low.leq(&high).unwrap());
        assert!(!high.leq(&low).unwrap());
    }

    #[test]
    fn leq_size_mismatch() {
        let a = RankFunction::from_values(2, vec![0, 1, 1, 2]).unwrap();
        let b = RankFunction::from_values(1, vec![0, 1]).unwrap();
        assert!(matches!(a.leq(&b), Err(Error::SizeMismatch(2, 1))));
    }

    #[test]
    fn mask_formatting() {
        assert_eq!(format_mask(0, 4), "{}");
        assert_eq!(format_mask(0b0101, 4), "{1,3}");
        assert_eq!(format_mask(0b1111, 4), "{1,2,3,4}");
    }
}
