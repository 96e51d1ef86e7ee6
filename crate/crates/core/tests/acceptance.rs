//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line.
//!
//! Run with `cargo test -p specht --test acceptance -- --nocapture
//! --test-threads 1` to see the lines in order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use specht::cores::hook_free_partitions;
use specht::irreducible::top_core;
use specht::oracle::{brute_force_block, p_core_by_rim_removal, satisfies_criterion_naive};
use specht::verify::sweep_blocks;
use specht::*;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn prime(n: usize) -> Prime {
    Prime::new(n).unwrap()
}

fn report(id: u32, title: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {verdict}: {title} ({detail})");
    assert!(ok, "criterion {id} failed: {title}: {detail}");
}

const NU: &str = "17,13,9,5^2,3^3,2^4,1^4";

fn all_up_to(max: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(Partition::partitions_of)
}

#[test]
fn criterion_01_worked_example_count() {
    let block = BlockId::new(prime(5), part(NU), 8).unwrap();
    let start = Instant::now();
    let count = count_block(&block).unwrap();
    let elapsed = start.elapsed();
    report(
        1,
        "count of the p=5, weight 8 block of S_110",
        count == 83 && elapsed < Duration::from_secs(1),
        &format!("count {count}, expected 83, {elapsed:?}"),
    );
}

#[test]
fn criterion_02_worked_example_sequences() {
    let p = prime(5);
    let alpha: Vec<usize> = (0..=8).map(|k| regular_irreducibles(k, 4, p).len()).collect();
    let gamma: Vec<usize> = (0..=8).map(|k| regular_irreducibles(k, 3, p).len()).collect();
    let ok = alpha == [1, 1, 2, 3, 5, 3, 6, 6, 8] && gamma == [1, 1, 2, 3, 4, 3, 5, 4, 5];
    report(
        2,
        "regular irreducible counts with at most 4 and 3 rows",
        ok,
        &format!("alpha {alpha:?}, gamma {gamma:?}"),
    );
}

#[test]
fn criterion_03_worked_example_residual() {
    let r = p_residual(&part(NU), prime(5));
    report(
        3,
        "5-residual of the worked-example core",
        r == PResidual { t: 4, b: 3 },
        &format!("(t,b) = ({},{})", r.t, r.b),
    );
}

#[test]
fn criterion_04_worked_example_construction() {
    let p = prime(5);
    let core = part(NU);
    let block = BlockId::new(p, core.clone(), 8).unwrap();
    let lambda = construct_from_pair(&block, &LabelPair::new(part("2^2,1"), part("2,1"))).unwrap();
    // checked with the oracle's own core and criterion routines
    let size_ok = lambda.size() == 110;
    let core_ok = (0..4).all(|seed| p_core_by_rim_removal(&lambda, p, seed) == core);
    let criterion_ok = satisfies_criterion_naive(&lambda, p);
    let expected = part("27,23,14,5^2,3^3,2^9,1^9");
    // the printed (27,23,14,5^2,3^2,2^9,1^9) has only 107 boxes
    let printed = part("27,23,14,5^2,3^2,2^9,1^9");
    report(
        4,
        "label built from alpha=(2^2,1), gamma=(2,1)",
        size_ok && core_ok && criterion_ok && lambda == expected && printed.size() == 107,
        &format!("lambda {lambda}, size {}, core ok {core_ok}, criterion ok {criterion_ok}", lambda.size()),
    );
}

#[test]
fn criterion_05_hook_table_and_conjugate() {
    let lambda = part("7,3,2^2,1");
    let expected: Vec<Vec<usize>> = vec![
        vec![11, 9, 6, 4, 3, 2, 1],
        vec![6, 4, 1],
        vec![4, 2],
        vec![3, 1],
        vec![1],
    ];
    let table_ok = lambda.hook_table().rows() == expected.as_slice();
    let conj = lambda.conjugate();
    let stated = part("5,4,2,1^3");
    let conj_ok = conj == stated;
    report(
        5,
        "hook table of (7,3,2^2,1) and its conjugate equal to (5,4,2,1^3)",
        table_ok && conj_ok,
        &format!(
            "hook table matches: {table_ok}; conjugate is {conj} (size {}), stated {stated} has size {}",
            conj.size(),
            stated.size()
        ),
    );
}

#[test]
fn criterion_06_oracle_equivalence() {
    let start = Instant::now();
    let mut blocks = 0;
    let mut labels = 0;
    let mut mismatches = Vec::new();
    for p in [2, 3, 5].map(prime) {
        for block in sweep_blocks(p, 6, 26) {
            if p.get() == 2 && block.n() == 4 {
                continue;
            }
            blocks += 1;
            let built: BTreeSet<Partition> = enumerate_block(&block)
                .unwrap()
                .items
                .into_iter()
                .map(|item| item.lambda)
                .collect();
            let found: BTreeSet<Partition> = brute_force_block(p, block.core(), block.weight())
                .unwrap()
                .into_iter()
                .collect();
            labels += found.len();
            if built != found {
                mismatches.push(format!("p={} core={} w={}", p, block.core(), block.weight()));
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        6,
        "construction equals exhaustive search, |core| <= 6, n <= 26, p in {2,3,5}",
        mismatches.is_empty() && elapsed < Duration::from_secs(120),
        &format!(
            "{blocks} blocks, {labels} labels, {} mismatches {:?}, {elapsed:?}",
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>()
        ),
    );
}

/// p-irreducible tops of size at most `max`, built from regular
/// irreducible partitions with exactly `k` parts.
fn generated_tops(p: Prime, max: usize) -> Vec<Partition> {
    let mut tops = Vec::new();
    for k in 1.. {
        if top_core(k, p).size() + p.get() * k > max {
            break;
        }
        for s in k..=max {
            for sigma in regular_irreducibles(s, k, p) {
                if sigma.len() != k {
                    continue;
                }
                let tau = expand_top(&sigma, k, p).unwrap();
                if tau.size() <= max {
                    tops.push(tau);
                }
            }
        }
    }
    tops
}

#[test]
fn criterion_07_round_trips() {
    const MAX: usize = 14;
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for p in [2, 3, 5].map(prime) {
        // glue after decompose, on every p-irreducible partition
        for lambda in all_up_to(MAX).filter(|l| is_p_irreducible(l, p)) {
            checked += 1;
            let d = decompose(&lambda, p).unwrap();
            if d.glue().unwrap() != lambda {
                failures.push(format!("glue(decompose({lambda})) p={p}"));
            }
        }

        // decompose after glue, on every admissible triple with a small result
        let tops = generated_tops(p, MAX);
        let direct: BTreeSet<Partition> = all_up_to(MAX)
            .filter(|l| is_p_top(l, p) && is_p_irreducible(l, p))
            .collect();
        if tops.iter().cloned().collect::<BTreeSet<_>>() != direct {
            failures.push(format!("generated tops differ from direct search p={p}"));
        }
        let bottoms: Vec<Partition> = tops.iter().map(Partition::conjugate).collect();
        let mids = hook_free_partitions(6, p);
        let with_empty = |v: &[Partition]| {
            std::iter::once(Partition::empty())
                .chain(v.iter().cloned())
                .collect::<Vec<_>>()
        };
        for tau in with_empty(&tops) {
            for beta in with_empty(&bottoms) {
                for mu in &mids {
                    let Ok(lambda) = glue_oplus(&tau, mu, &beta) else {
                        continue;
                    };
                    if lambda.size() > MAX {
                        continue;
                    }
                    checked += 1;
                    match decompose(&lambda, p) {
                        Ok(d) if d.top == tau && &d.mid == mu && d.bottom == beta => {}
                        other => failures.push(format!(
                            "decompose(glue({tau}; {mu}; {beta})) = {other:?} p={p}"
                        )),
                    }
                }
            }
        }

        // shrink after expand
        for size in 0..=8 {
            for sigma in Partition::partitions_of(size) {
                for k in sigma.len().max(1)..=5 {
                    checked += 1;
                    let tau = expand_top(&sigma, k, p).unwrap();
                    if shrink_top(&tau, k, p).as_ref() != Ok(&sigma) {
                        failures.push(format!("shrink(expand({sigma}, {k})) p={p}"));
                    }
                }
            }
        }
    }
    report(
        7,
        "decompose/glue and expand/shrink round trips",
        failures.is_empty(),
        &format!("{checked} cases, {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    );
}

#[test]
fn criterion_08_structural_corollaries() {
    const MAX: usize = 14;
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for p in [2, 3, 5].map(prime) {
        for lambda in all_up_to(MAX) {
            if is_p_top(&lambda, p) {
                let expected = top_core(lambda.len(), p);
                if p_core(&lambda, p) != expected {
                    failures.push(format!("core of top {lambda} p={p}"));
                }
            }
            if !is_p_irreducible(&lambda, p) {
                continue;
            }
            checked += 1;
            let d = decompose(&lambda, p).unwrap();
            if lambda.is_p_regular(p) != d.bottom.is_empty() {
                failures.push(format!("regular vs empty bottom {lambda} p={p}"));
            }
            if lambda.is_p_restricted(p) != d.top.is_empty() {
                failures.push(format!("restricted vs empty top {lambda} p={p}"));
            }
            let glued = glue_oplus_hat(&p_core(&d.top, p), &d.mid, &p_core(&d.bottom, p)).unwrap();
            if p_core(&lambda, p) != glued {
                failures.push(format!("core via corner gluing {lambda} p={p}"));
            }
        }
    }
    report(
        8,
        "regular iff no bottom, restricted iff no top, core by corner gluing, cores of tops",
        failures.is_empty(),
        &format!("{checked} irreducible partitions, {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    );
}

#[test]
fn criterion_09_closed_forms() {
    let mut failures = Vec::new();
    let mut small_residual = 0;
    let mut two_blocks = 0;
    for p in [2, 3, 5].map(prime) {
        for block in sweep_blocks(p, 6, 26) {
            if p.get() == 2 && block.n() == 4 {
                continue;
            }
            let count = count_block(&block).unwrap();
            if block.residual() == (PResidual { t: 1, b: 1 }) {
                small_residual += 1;
                let w = block.weight();
                let closed = if block.core().is_empty() { 2 } else { w + 1 };
                if (w >= 1 || !block.core().is_empty()) && count != closed {
                    failures.push(format!("residual (1,1): p={p} core={} w={w} count {count}", block.core()));
                }
            }
            if p.get() == 2 {
                two_blocks += 1;
                let alphas = regular_irreducibles(block.weight(), block.core().len() + 1, p).len();
                if count != 2 * alphas {
                    failures.push(format!(
                        "p=2 core={} w={}: count {count} != 2 x {alphas}",
                        block.core(),
                        block.weight()
                    ));
                }
            }
        }
    }
    let special = brute_force_block(prime(2), &Partition::empty(), 2).unwrap();
    let has_22 = special.contains(&part("2,2"));
    report(
        9,
        "residual (1,1) counts, p=2 doubled counts, (2,2) in the S_4 block",
        failures.is_empty() && has_22,
        &format!(
            "{small_residual} residual-(1,1) blocks, {two_blocks} p=2 blocks, (2,2) found: {has_22}, {} failures {:?}",
            failures.len(),
            failures
        ),
    );
}

#[test]
fn criterion_10_residual_bound() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for p in [3, 5, 7].map(prime) {
        for nu in all_up_to(15) {
            checked += 1;
            let r = residual_bound(&nu, p);
            let lengths = nu.len() + nu.conjugate().len();
            // t + b <= lengths / p + 2, cleared of the denominator
            let within = p.get() * r.t_plus_b <= lengths + 2 * p.get();
            let equal = p.get() * r.t_plus_b == lengths + 2 * p.get();
            let (t, b) = (r.residual.t, r.residual.b);
            let shape = (t, b) == (1, nu.conjugate().len() + 1)
                || (t, b) == (nu.len() + 1, 1)
                || (t > 1 && b > 1 && nu.contains(Node::new(t - 1, b - 1)) && !nu.contains(Node::new(t, b)));
            if !within || equal != shape || equal != r.is_maximal {
                failures.push(format!("{nu} p={p}"));
            }
        }
    }
    report(
        10,
        "t + b bound and its equality cases, size <= 15, p in {3,5,7}",
        failures.is_empty(),
        &format!("{checked} cases, {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    );
}
