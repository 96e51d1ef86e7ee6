//! p-cores, block weights and the p-residual of a core.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, Prime};

/// The p-core, computed on beta-numbers: every bead slides down its
/// runner of the p-abacus until it rests on the bead below.
pub fn p_core(lambda: &Partition, p: Prime) -> Partition {
    let p = p.get();
    let len = lambda.len();
    let mut beads = vec![0usize; p];
    for i in 1..=len {
        beads[(lambda.part(i) + len - i) % p] += 1;
    }
    let mut beta: Vec<usize> = beads
        .iter()
        .enumerate()
        .flat_map(|(runner, &count)| (0..count).map(move |k| runner + k * p))
        .collect();
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let parts = beta
        .iter()
        .enumerate()
        .map(|(idx, &b)| b - (len - 1 - idx))
        .collect();
    Partition::from_trimmed(parts)
}

pub fn p_weight(lambda: &Partition, p: Prime) -> usize {
    let removed = lambda.size() - p_core(lambda, p).size();
    debug_assert_eq!(removed % p.get(), 0);
    removed / p.get()
}

/// The pair `(t, b)`: the lengths of the initial runs of consecutive
/// differences equal to `p - 1` in the core and its conjugate, plus one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PResidual {
    pub t: usize,
    pub b: usize,
}

fn run_end(nu: &Partition, step: usize) -> usize {
    let mut i = 1;
    while nu.part(i) - nu.part(i + 1) == step {
        i += 1;
    }
    i
}

pub fn p_residual(nu: &Partition, p: Prime) -> PResidual {
    let step = p.get() - 1;
    PResidual {
        t: run_end(nu, step),
        b: run_end(&nu.conjugate(), step),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidualBound {
    pub residual: PResidual,
    pub t_plus_b: usize,
    /// `(l(nu) + l(nu')) / p + 2`
    #[serde(serialize_with = "ratio_as_string")]
    pub bound: Ratio<usize>,
    pub is_maximal: bool,
}

fn ratio_as_string<S: serde::Serializer>(r: &Ratio<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn residual_bound(nu: &Partition, p: Prime) -> ResidualBound {
    let residual = p_residual(nu, p);
    let t_plus_b = residual.t + residual.b;
    let lengths = nu.len() + nu.part(1);
    let bound = Ratio::new(lengths, p.get()) + Ratio::from_integer(2);
    let is_maximal = Ratio::from_integer(t_plus_b) == bound;
    if p.get() > 2 {
        debug_assert_eq!(is_maximal, bound_attained_by_shape(nu, residual));
    }
    ResidualBound {
        residual,
        t_plus_b,
        bound,
        is_maximal,
    }
}

/// Shape characterization of the case `t + b = bound` (valid for odd p):
/// `(t, b) = (1, l(nu') + 1)`, or `(l(nu) + 1, 1)`, or both exceed one
/// and `(t-1, b-1)` is a node while `(t, b)` is not.
pub fn bound_attained_by_shape(nu: &Partition, residual: PResidual) -> bool {
    let PResidual { t, b } = residual;
    if t == 1 && b == nu.part(1) + 1 {
        return true;
    }
    if b == 1 && t == nu.len() + 1 {
        return true;
    }
    t > 1 && b > 1 && nu.part(t - 1) >= b - 1 && nu.part(t) < b
}

/// A p-block of a symmetric group: its p-core and weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BlockId {
    p: Prime,
    core: Partition,
    weight: usize,
}

impl BlockId {
    pub fn new(p: Prime, core: Partition, weight: usize) -> Result<Self> {
        if !core.is_p_hook_free(p) {
            return Err(Error::NotHookFree {
                partition: core.to_string(),
                p: p.get(),
            });
        }
        weight
            .checked_mul(p.get())
            .and_then(|x| x.checked_add(core.size()))
            .ok_or(Error::Overflow)?;
        Ok(BlockId { p, core, weight })
    }

    /// The block containing `lambda`.
    pub fn of(lambda: &Partition, p: Prime) -> Self {
        let core = p_core(lambda, p);
        let weight = (lambda.size() - core.size()) / p.get();
        BlockId { p, core, weight }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `|core| + p * weight`
    pub fn n(&self) -> usize {
        self.core.size() + self.p.get() * self.weight
    }

    pub fn residual(&self) -> PResidual {
        p_residual(&self.core, self.p)
    }
}

/// All p-hook free partitions of size at most `max_size`, by size and
/// then lexicographically decreasing.
pub fn hook_free_partitions(max_size: usize, p: Prime) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(Partition::partitions_of)
        .filter(|nu| nu.is_p_hook_free(p))
        .collect()
}
