//! Indecomposable splittings: the partition of the column index set into
//! blocks whose spans form a direct sum, with the rank of each block.
//!
//! The splitting is recovered from the rank function alone: starting from
//! singleton blocks, merge any two blocks `A`, `B` with
//! `phi(A u B) < phi(A) + phi(B)` until no merge applies. The fixpoint is
//! independent of merge order, so the result is canonical.

use std::fmt;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::rankfn::{compute_pi, format_mask, RankFunction};

/// A set partition of `[m]` into nonempty blocks, each with a rank.
/// Blocks are kept sorted by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Splitting {
    m: usize,
    blocks: Vec<(u32, u8)>,
}

impl Splitting {
    /// Builds a splitting from `(mask, rank)` blocks, validating that the
    /// masks partition `[m]` and normalizing the block order.
    pub fn new(m: usize, mut blocks: Vec<(u32, u8)>) -> Result<Splitting> {
        if m == 0 || m > 16 {
            return Err(Error::UnsupportedShape(format!("m = {m} out of range")));
        }
        let full = (1u32 << m) - 1;
        let mut seen = 0u32;
        for &(mask, _) in &blocks {
            if mask == 0 || mask & !full != 0 {
                return Err(Error::UnsupportedShape("block mask out of range".into()));
            }
            if mask & seen != 0 {
                return Err(Error::UnsupportedShape("blocks overlap".into()));
            }
            seen |= mask;
        }
        if seen != full {
            return Err(Error::UnsupportedShape("blocks do not cover [m]".into()));
        }
        blocks.sort_by_key(|&(mask, _)| mask.trailing_zeros());
        Ok(Splitting { m, blocks })
    }

    /// Convenience constructor from 1-based element lists.
    pub fn from_blocks(m: usize, blocks: &[(&[usize], u8)]) -> Result<Splitting> {
        let masked = blocks
            .iter()
            .map(|(elems, r)| {
                let mut mask = 0u32;
                for &e in *elems {
                    if e == 0 || e > m {
                        return Err(Error::BadIndex { index: e, limit: m });
                    }
                    mask |= 1 << (e - 1);
                }
                Ok((mask, *r))
            })
            .collect::<Result<Vec<_>>>()?;
        Splitting::new(m, masked)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The `(mask, rank)` blocks, sorted by minimum element.
    pub fn blocks(&self) -> &[(u32, u8)] {
        &self.blocks
    }

    pub fn total_rank(&self) -> usize {
        self.blocks.iter().map(|&(_, r)| r as usize).sum()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Whether some configuration in projective `(n-1)`-space realizes this
    /// splitting: every block has rank 1 or rank between 2 and its size
    /// minus 1, and the ranks sum to at most `n`.
    pub fn in_image_varpi(&self, n: usize) -> bool {
        let shape_ok = self.blocks.iter().all(|&(mask, r)| {
            let size = mask.count_ones() as u8;
            r == 1 || (2 <= r && r <= size.saturating_sub(1))
        });
        shape_ok && self.total_rank() <= n
    }

    /// Whether the whole fiber of this splitting is a single orbit: every
    /// block has rank 1, or rank equal to its size minus 1 (and at least 2).
    pub fn is_single_orbit_class(&self) -> bool {
        self.blocks.iter().all(|&(mask, r)| {
            let size = mask.count_ones() as u8;
            r == 1 || (r >= 2 && r == size - 1)
        })
    }

    /// The canonical configuration realizing this splitting in projective
    /// `(n-1)`-space: block `k` occupies a fresh band of `r_k` basis vectors,
    /// its first `r_k` columns being those vectors and any remaining columns
    /// their sum.
    pub fn canonical_representative(&self, n: usize, field: FieldCtx) -> Result<Configuration> {
        if !self.in_image_varpi(n) {
            return Err(Error::NotInImage(n));
        }
        let mut cols: Vec<Vec<i64>> = vec![vec![0; n]; self.m];
        let mut offset = 0usize;
        for &(mask, r) in &self.blocks {
            let members: Vec<usize> = (0..self.m).filter(|i| mask & (1 << i) != 0).collect();
            for (j, &i) in members.iter().enumerate() {
                if j < r as usize {
                    cols[i][offset + j] = 1;
                } else {
                    for jj in 0..r as usize {
                        cols[i][offset + jj] = 1;
                    }
                }
            }
            offset += r as usize;
        }
        let col_refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
        Configuration::from_int_columns(field, n, &col_refs)
    }

    /// The rank function shared by every configuration over this splitting,
    /// `I -> sum_k min(#(I_k n I), r_k)`. Only defined for single-orbit
    /// classes; other classes contain several rank functions.
    pub fn rank_function(&self) -> Result<RankFunction> {
        if !self.is_single_orbit_class() {
            return Err(Error::NotSingleOrbit);
        }
        let n_masks = 1u32 << self.m;
        let values = (0..n_masks)
            .map(|mask| {
                self.blocks
                    .iter()
                    .map(|&(block, r)| ((block & mask).count_ones() as u8).min(r))
                    .sum()
            })
            .collect();
        RankFunction::from_values(self.m, values)
    }

    /// Transports the splitting along a permutation given by 0-based images
    /// (`i -> images[i]`).
    pub fn permuted_by(&self, images: &[usize]) -> Result<Splitting> {
        if images.len() != self.m {
            return Err(Error::SizeMismatch(images.len(), self.m));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|&(mask, r)| {
                let mut out = 0u32;
                for (i, &image) in images.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        out |= 1 << image;
                    }
                }
                (out, r)
            })
            .collect();
        Splitting::new(self.m, blocks)
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&(mask, r)| format!("({},{})", format_mask(mask, self.m), r))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Recovers the indecomposable splitting from a rank function: starting
/// from singleton blocks, merge the blocks of `i` and `j` whenever some
/// circuit contains both, i.e. there is a subset `S` avoiding both with
/// `phi(S+i) = phi(S+j) = phi(S+i+j) = phi(S) + 1`. The blocks of the
/// fixpoint are the connected components, and rank is additive across them
/// on every subset.
pub fn rho(phi: &RankFunction) -> Splitting {
    let m = phi.m();
    let mut parent: Vec<usize> = (0..m).collect();
    for i in 0..m {
        for j in i + 1..m {
            if share_circuit(phi, i, j) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut masks: Vec<u32> = vec![0; m];
    for i in 0..m {
        let r = find(&mut parent, i);
        masks[r] |= 1 << i;
    }
    let blocks = masks
        .into_iter()
        .filter(|&mask| mask != 0)
        .map(|mask| (mask, phi.value(mask)))
        .collect();
    Splitting::new(m, blocks).expect("components partition [m]")
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut x = x;
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn share_circuit(phi: &RankFunction, i: usize, j: usize) -> bool {
    let (bi, bj) = (1u32 << i, 1u32 << j);
    let rest = ((1u32 << phi.m()) - 1) & !bi & !bj;
    let mut s = rest;
    loop {
        let base = phi.value(s) + 1;
        if phi.value(s | bi) == base && phi.value(s | bj) == base && phi.value(s | bi | bj) == base
        {
            return true;
        }
        if s == 0 {
            return false;
        }
        s = (s - 1) & rest;
    }
}

/// The indecomposable splitting of a configuration, computed through its
/// rank function.
pub fn compute_varpi(cfg: &Configuration) -> Splitting {
    rho(&compute_pi(cfg))
}
