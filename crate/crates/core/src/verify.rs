//! Oracle-equivalence sweep: every block with a small core and bounded `n`
//! is enumerated by construction and by exhaustive search, and the two
//! label sets are compared.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::block::{count_block, enumerate_block};
use crate::cores::{hook_free_partitions, BlockId};
use crate::error::{Error, Result};
use crate::oracle;
use crate::partition::{Partition, Prime};

/// Blocks with `|core| <= max_core` and `n <= max_n`, ordered by `n` and
/// then by core.
pub fn sweep_blocks(p: Prime, max_core: usize, max_n: usize) -> Vec<BlockId> {
    let mut blocks: Vec<BlockId> = hook_free_partitions(max_core, p)
        .into_iter()
        .flat_map(|core| {
            let size = core.size();
            (0..)
                .map(move |w| (w, size + p.get() * w))
                .take_while(move |&(_, n)| n <= max_n)
                .map(move |(w, _)| BlockId::new(p, core.clone(), w).expect("core is hook free"))
        })
        .collect();
    blocks.sort_by(|a, b| (a.n(), a.core()).cmp(&(b.n(), b.core())));
    blocks
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub block: BlockId,
    /// Found by the oracle but not constructed.
    pub missing: Vec<Partition>,
    /// Constructed but rejected by the oracle.
    pub extra: Vec<Partition>,
    /// Constructed more than once.
    pub duplicated: Vec<Partition>,
    /// `count_block` disagrees with the number of constructed labels.
    pub count: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BlockCheck {
    Agree { count: usize },
    /// p = 2, n = 4: outside the counting theorem; only the oracle is run.
    OracleOnly { count: usize },
    Disagree(Mismatch),
}

pub fn check_block(block: &BlockId, limit: usize) -> Result<BlockCheck> {
    let expected: BTreeSet<Partition> =
        oracle::brute_force_block_with_limit(block.p(), block.core(), block.weight(), limit)?
            .into_iter()
            .collect();
    let enumeration = match enumerate_block(block) {
        Ok(e) => e,
        Err(Error::SpecialCase) => return Ok(BlockCheck::OracleOnly { count: expected.len() }),
        Err(e) => return Err(e),
    };
    let mut seen = BTreeSet::new();
    let mut duplicated = Vec::new();
    for item in &enumeration.items {
        if !seen.insert(item.lambda.clone()) {
            duplicated.push(item.lambda.clone());
        }
    }
    let counted = count_block(block)?;
    let mismatch = Mismatch {
        block: block.clone(),
        missing: expected.difference(&seen).cloned().collect(),
        extra: seen.difference(&expected).cloned().collect(),
        duplicated,
        count: (counted != enumeration.count).then_some((counted, enumeration.count)),
    };
    if mismatch.missing.is_empty()
        && mismatch.extra.is_empty()
        && mismatch.duplicated.is_empty()
        && mismatch.count.is_none()
    {
        Ok(BlockCheck::Agree {
            count: enumeration.count,
        })
    } else {
        Ok(BlockCheck::Disagree(mismatch))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub p: Prime,
    pub blocks: usize,
    pub labels: usize,
    pub oracle_only: usize,
    /// Sorted by `n`, then core; the first entry is the smallest
    /// counterexample.
    pub mismatches: Vec<Mismatch>,
}

/// Runs [`check_block`] on every block of [`sweep_blocks`]. With
/// `jobs > 1` the blocks are checked on a dedicated thread pool.
pub fn sweep(p: Prime, max_core: usize, max_n: usize, jobs: usize, limit: usize) -> Result<SweepReport> {
    if max_n > limit {
        return Err(Error::LimitExceeded { n: max_n, limit });
    }
    let blocks = sweep_blocks(p, max_core, max_n);
    let results: Vec<BlockCheck> = if jobs <= 1 {
        blocks.iter().map(|b| check_block(b, limit)).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            blocks
                .par_iter()
                .map(|b| check_block(b, limit))
                .collect::<Result<_>>()
        })?
    };
    let mut report = SweepReport {
        p,
        blocks: blocks.len(),
        labels: 0,
        oracle_only: 0,
        mismatches: Vec::new(),
    };
    for r in results {
        match r {
            BlockCheck::Agree { count } => report.labels += count,
            BlockCheck::OracleOnly { count } => {
                report.oracle_only += 1;
                report.labels += count;
            }
            BlockCheck::Disagree(m) => report.mismatches.push(m),
        }
    }
    Ok(report)
}
