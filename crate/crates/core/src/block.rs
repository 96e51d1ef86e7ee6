//! Constructing and counting the irreducible Specht module labels of a
//! block.
//!
//! For odd p, the labels of a block with core `ν`, weight `w` and residual
//! `(t, b)` are in bijection with pairs `(α, γ)` of p-regular
//! p-irreducible partitions with `|α| + |γ| = w`, `ℓ(α) <= t` and
//! `ℓ(γ) <= b`; when `t + b` attains its upper bound the two strip stacks
//! compete for the corner `(t, b)`, so additionally
//! `ℓ(α) + ℓ(γ) <= t + b - 1`. The label is built from `ν` by adding
//! `α_i` horizontal p-strips to row `i` and `γ_j` vertical p-strips to
//! column `j`.
//!
//! For p = 2 only one of the two stacks may be used, with at most
//! `ℓ(ν) + 1` rows or columns.

use rayon::prelude::*;
use serde::Serialize;

use crate::cores::{p_core, residual_bound, BlockId, PResidual};
use crate::error::{Error, Result};
use crate::irreducible::{is_p_irreducible, is_specht_irreducible};
use crate::partition::{Partition, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabelPair {
    pub alpha: Partition,
    pub gamma: Partition,
}

impl LabelPair {
    pub fn new(alpha: Partition, gamma: Partition) -> Self {
        LabelPair { alpha, gamma }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledPartition {
    pub pair: LabelPair,
    pub lambda: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockEnumeration {
    pub block: BlockId,
    pub items: Vec<LabeledPartition>,
    pub count: usize,
}

/// Partitions of `w` with at most `max_len` parts that are p-regular and
/// p-irreducible, lexicographically decreasing.
pub fn regular_irreducibles(w: usize, max_len: usize, p: Prime) -> Vec<Partition> {
    Partition::partitions_with_max_len(w, max_len)
        .filter(|a| a.is_p_regular(p) && is_p_irreducible(a, p))
        .collect()
}

fn length_cap(block: &BlockId) -> Option<usize> {
    let bound = residual_bound(block.core(), block.p());
    bound.is_maximal.then(|| bound.t_plus_b - 1)
}

/// All label pairs of a block for odd p, ordered by `|α|` descending, then
/// by `α` and `γ` lexicographically decreasing.
pub fn enumerate_label_pairs(block: &BlockId) -> Result<Vec<LabelPair>> {
    let p = block.p();
    if p.get() == 2 {
        return Err(Error::PrimeTwo);
    }
    let PResidual { t, b } = block.residual();
    let cap = length_cap(block);
    let w = block.weight();
    let mut pairs = Vec::new();
    for k in (0..=w).rev() {
        let alphas = regular_irreducibles(k, t, p);
        let gammas = regular_irreducibles(w - k, b, p);
        for alpha in &alphas {
            for gamma in &gammas {
                if cap.is_some_and(|c| alpha.len() + gamma.len() > c) {
                    continue;
                }
                pairs.push(LabelPair::new(alpha.clone(), gamma.clone()));
            }
        }
    }
    Ok(pairs)
}

fn check_pair(block: &BlockId, pair: &LabelPair) -> Result<()> {
    let p = block.p();
    let invalid = |why: &str| Err(Error::InvalidPair(format!("({}; {}): {why}", pair.alpha, pair.gamma)));
    if pair.alpha.size() + pair.gamma.size() != block.weight() {
        return invalid("sizes do not add up to the weight");
    }
    for part in [&pair.alpha, &pair.gamma] {
        if !part.is_p_regular(p) || !is_p_irreducible(part, p) {
            return invalid("components must be p-regular and p-irreducible");
        }
    }
    let PResidual { t, b } = block.residual();
    if pair.alpha.len() > t || pair.gamma.len() > b {
        return invalid("too many strip rows or columns for the residual");
    }
    if p.get() == 2 {
        if !pair.alpha.is_empty() && !pair.gamma.is_empty() {
            return invalid("for p = 2 only one strip direction may be used");
        }
    } else if length_cap(block).is_some_and(|c| pair.alpha.len() + pair.gamma.len() > c) {
        return invalid("both stacks reach the corner of a maximal residual");
    }
    Ok(())
}

fn add_to_columns(lambda: &Partition, counts: &Partition, p: usize) -> Partition {
    add_to_rows(&lambda.conjugate(), counts, p).conjugate()
}

fn add_to_rows(lambda: &Partition, counts: &Partition, p: usize) -> Partition {
    let len = lambda.len().max(counts.len());
    let parts = (1..=len).map(|i| lambda.part(i) + p * counts.part(i)).collect();
    Partition::from_trimmed(parts)
}

fn strip_sum(lambda: &Partition, row_counts: &Partition, col_counts: &Partition, p: usize) -> Partition {
    add_to_rows(&add_to_columns(lambda, col_counts, p), row_counts, p)
}

/// Builds the label for `pair`: `γ_j` vertical p-strips on column `j`,
/// then `α_i` horizontal p-strips on row `i`.
pub fn construct_from_pair(block: &BlockId, pair: &LabelPair) -> Result<Partition> {
    check_pair(block, pair)?;
    build(block, pair)
}

fn build(block: &BlockId, pair: &LabelPair) -> Result<Partition> {
    let p = block.p();
    let lambda = strip_sum(block.core(), &pair.alpha, &pair.gamma, p.get());
    debug_assert_eq!(
        lambda,
        add_to_columns(&add_to_rows(block.core(), &pair.alpha, p.get()), &pair.gamma, p.get()),
        "strip additions must commute"
    );
    let irreducible = if p.get() == 2 {
        is_specht_irreducible(&lambda, p)
    } else {
        is_p_irreducible(&lambda, p)
    };
    if lambda.size() != block.n() || !irreducible || &p_core(&lambda, p) != block.core() {
        return Err(Error::ConstructionDefect(format!(
            "pair ({}; {}) in block (p={}, core={}, w={}) gave {lambda}",
            pair.alpha,
            pair.gamma,
            p,
            block.core(),
            block.weight()
        )));
    }
    Ok(lambda)
}

fn two_block_alphas(block: &BlockId) -> Result<Vec<Partition>> {
    if block.n() == 4 {
        return Err(Error::SpecialCase);
    }
    Ok(regular_irreducibles(block.weight(), block.core().len() + 1, block.p()))
}

fn label_pairs(block: &BlockId) -> Result<Vec<LabelPair>> {
    if block.p().get() > 2 {
        return enumerate_label_pairs(block);
    }
    if block.weight() == 0 {
        return Ok(vec![LabelPair::new(Partition::empty(), Partition::empty())]);
    }
    let alphas = two_block_alphas(block)?;
    let horizontal = alphas.iter().map(|a| LabelPair::new(a.clone(), Partition::empty()));
    let vertical = alphas.iter().map(|a| LabelPair::new(Partition::empty(), a.clone()));
    Ok(horizontal.chain(vertical).collect())
}

/// Every irreducible Specht label of the block, paired with its strip data.
///
/// For p = 2 the horizontal label `(α, ∅)` and the vertical label `(∅, α)`
/// are both emitted for each admissible `α`; in weight 0 these are the same
/// pair and the block consists of its core alone.
pub fn enumerate_block(block: &BlockId) -> Result<BlockEnumeration> {
    let pairs = label_pairs(block)?;
    let items = pairs
        .into_iter()
        .map(|pair| {
            let lambda = build(block, &pair)?;
            Ok(LabeledPartition { pair, lambda })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockEnumeration {
        block: block.clone(),
        count: items.len(),
        items,
    })
}

/// As [`enumerate_block`], with the label constructions spread over the
/// current rayon pool. Output order is the same.
pub fn enumerate_block_par(block: &BlockId) -> Result<BlockEnumeration> {
    let pairs = label_pairs(block)?;
    let items = pairs
        .into_par_iter()
        .map(|pair| {
            let lambda = build(block, &pair)?;
            Ok(LabeledPartition { pair, lambda })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockEnumeration {
        block: block.clone(),
        count: items.len(),
        items,
    })
}

/// Number of regular irreducibles of each size `0..=w`, split by length.
fn counts_by_length(w: usize, max_len: usize, p: Prime) -> Vec<Vec<usize>> {
    (0..=w)
        .map(|k| {
            let mut by_len = vec![0; max_len + 1];
            for a in regular_irreducibles(k, max_len, p) {
                by_len[a.len()] += 1;
            }
            by_len
        })
        .collect()
}

/// The number of labels in the block, without building them.
pub fn count_block(block: &BlockId) -> Result<usize> {
    let p = block.p();
    let w = block.weight();
    if p.get() == 2 {
        if w == 0 {
            return Ok(1);
        }
        return Ok(2 * two_block_alphas(block)?.len());
    }
    let PResidual { t, b } = block.residual();
    let general = || -> usize {
        let alpha = counts_by_length(w, t, p);
        let gamma = counts_by_length(w, b, p);
        match length_cap(block) {
            None => (0..=w)
                .map(|k| alpha[k].iter().sum::<usize>() * gamma[w - k].iter().sum::<usize>())
                .sum(),
            Some(cap) => (0..=w)
                .map(|k| {
                    let mut total = 0;
                    for (la, &ca) in alpha[k].iter().enumerate() {
                        for (lg, &cg) in gamma[w - k].iter().enumerate() {
                            if la + lg <= cap {
                                total += ca * cg;
                            }
                        }
                    }
                    total
                })
                .sum(),
        }
    };
    if (t, b) == (1, 1) {
        let closed = match (block.core().is_empty(), w) {
            (true, 0) => 1,
            (true, _) => 2,
            (false, _) => w + 1,
        };
        debug_assert_eq!(closed, general());
        return Ok(closed);
    }
    Ok(general())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularRestricted {
    pub regular: usize,
    pub restricted: usize,
}

/// Labels in the block that are p-regular, respectively p-restricted.
pub fn count_regular_and_restricted(block: &BlockId) -> RegularRestricted {
    let PResidual { t, b } = block.residual();
    let p = block.p();
    RegularRestricted {
        regular: regular_irreducibles(block.weight(), t, p).len(),
        restricted: regular_irreducibles(block.weight(), b, p).len(),
    }
}
