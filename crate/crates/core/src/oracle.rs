//! Brute-force reference implementations used to cross-check the fast
//! paths. Nothing in here calls into the other modules except for the
//! `Partition` value type itself.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::partition::{Partition, Prime};

pub const DEFAULT_MAX_N: usize = 60;

/// Safety limit on `n`, taken from `SPECHT_MAX_N` when set.
pub fn max_n() -> usize {
    std::env::var("SPECHT_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// Every partition of `n`, in lexicographically decreasing order.
pub fn all_partitions(n: usize) -> Result<Vec<Partition>> {
    all_partitions_with_limit(n, max_n())
}

pub fn all_partitions_with_limit(n: usize, limit: usize) -> Result<Vec<Partition>> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn extend(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::new(prefix.clone()).expect("generator emits partitions"));
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        prefix.push(part);
        extend(rest - part, part, prefix, out);
        prefix.pop();
    }
}

/// Hook length by counting the boxes to the right and below.
fn hook_by_counting(rows: &[usize], i: usize, j: usize) -> usize {
    let arm = rows[i] - (j + 1);
    let leg = rows[i + 1..].iter().take_while(|&&len| len > j).count();
    arm + leg + 1
}

fn vp(mut m: usize, p: usize) -> u32 {
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

/// Removes rim p-hooks one at a time, choosing among the available hooks
/// with a generator seeded by `order_seed`, until none is left.
pub fn p_core_by_rim_removal(lambda: &Partition, p: Prime, order_seed: u64) -> Partition {
    let p = p.get();
    let mut rng = StdRng::seed_from_u64(order_seed);
    let mut rows = lambda.parts().to_vec();
    loop {
        let mut candidates = Vec::new();
        for i in 0..rows.len() {
            for j in 0..rows[i] {
                if hook_by_counting(&rows, i, j) == p {
                    candidates.push((i, j));
                }
            }
        }
        let Some(&(i, j)) = candidates.choose(&mut rng) else {
            break;
        };
        // walk the rim from the end of row i down to the foot of column j
        let foot = i + rows[i + 1..].iter().take_while(|&&len| len > j).count();
        for r in i..foot {
            rows[r] = rows[r + 1] - 1;
        }
        rows[foot] = j;
        while rows.last() == Some(&0) {
            rows.pop();
        }
    }
    Partition::new(rows).expect("rim removal keeps a partition")
}

/// The criterion exactly as stated, by searching over all node triples.
pub fn satisfies_criterion_naive(lambda: &Partition, p: Prime) -> bool {
    let p = p.get();
    let rows = lambda.parts();
    let v: Vec<Vec<u32>> = (0..rows.len())
        .map(|i| (0..rows[i]).map(|j| vp(hook_by_counting(rows, i, j), p)).collect())
        .collect();
    for i in 0..rows.len() {
        for j in 0..rows[i] {
            let here = v[i][j];
            if here == 0 {
                continue;
            }
            let row_differs = (0..rows[i]).any(|y| v[i][y] != here);
            let col_differs = (0..rows.len()).filter(|&x| rows[x] > j).any(|x| v[x][j] != here);
            if row_differs && col_differs {
                return false;
            }
        }
    }
    true
}

fn specht_irreducible_naive(lambda: &Partition, p: Prime) -> bool {
    if p.get() > 2 {
        return satisfies_criterion_naive(lambda, p);
    }
    let rows = lambda.parts();
    if rows == [2, 2] {
        return true;
    }
    let regular = rows.windows(2).all(|w| w[0] != w[1]);
    let restricted = (0..rows.len()).all(|i| rows[i] - rows.get(i + 1).copied().unwrap_or(0) < 2);
    (regular || restricted) && satisfies_criterion_naive(lambda, p)
}

/// All partitions of `|core| + p w` with the given p-core whose Specht
/// module stays irreducible mod p.
pub fn brute_force_block(p: Prime, core: &Partition, weight: usize) -> Result<Vec<Partition>> {
    brute_force_block_with_limit(p, core, weight, max_n())
}

pub fn brute_force_block_with_limit(
    p: Prime,
    core: &Partition,
    weight: usize,
    limit: usize,
) -> Result<Vec<Partition>> {
    let rows = core.parts();
    let hook_free = (0..rows.len()).all(|i| (0..rows[i]).all(|j| !hook_by_counting(rows, i, j).is_multiple_of(p.get())));
    if !hook_free {
        return Err(Error::NotHookFree {
            partition: core.to_string(),
            p: p.get(),
        });
    }
    let n = core.size() + p.get() * weight;
    Ok(all_partitions_with_limit(n, limit)?
        .into_iter()
        .filter(|lambda| &p_core_by_rim_removal(lambda, p, 0) == core)
        .filter(|lambda| specht_irreducible_naive(lambda, p))
        .collect())
}
