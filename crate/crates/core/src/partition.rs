//! Integer partitions, Young diagram nodes and hook lengths.
//!
//! Rows and columns are 1-based throughout, matching the usual `(i, j)`
//! node convention for Young diagrams. Parts beyond the length read as 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime, validated once at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(usize);

impl Prime {
    pub fn new(p: usize) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest `e` with `p^e | m`.
pub fn valuation(m: usize, p: Prime) -> Result<u32> {
    if m == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(valuation_unchecked(m, p.get()))
}

#[inline]
pub(crate) fn valuation_unchecked(mut m: usize, p: usize) -> u32 {
    debug_assert!(m > 0 && p >= 2);
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence, dropping
    /// trailing zeros.
    pub(crate) fn from_trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// The `i`-th part (1-based); 0 beyond the length, and for `i = 0`.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    /// All nodes, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Node::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let mut conj = vec![0; width];
        for &part in &self.parts {
            for c in conj.iter_mut().take(part) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    pub fn hook_length(&self, node: Node) -> Result<usize> {
        if !self.contains(node) {
            return Err(Error::InvalidNode {
                row: node.row,
                col: node.col,
                partition: self.to_string(),
            });
        }
        let conj = self.conjugate();
        Ok(hook(self, &conj, node))
    }

    pub fn hook_table(&self) -> HookTable {
        let conj = self.conjugate();
        let rows = (1..=self.len())
            .map(|i| {
                (1..=self.part(i))
                    .map(|j| hook(self, &conj, Node::new(i, j)))
                    .collect()
            })
            .collect();
        HookTable {
            owner: self.clone(),
            rows,
        }
    }

    /// Multiplicity of part value `value` (for `value >= 1`).
    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&x| x == value).count()
    }

    /// No nonzero part occurs `p` or more times.
    pub fn is_p_regular(&self, p: Prime) -> bool {
        self.parts
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() < p.get())
    }

    /// The conjugate is `p`-regular.
    pub fn is_p_restricted(&self, p: Prime) -> bool {
        // lambda' has a part occurring p times iff some difference
        // lambda_i - lambda_{i+1} is at least p.
        let p = p.get();
        (1..=self.len()).all(|i| self.part(i) - self.part(i + 1) < p)
    }

    /// No hook length is divisible by `p`.
    pub fn is_p_hook_free(&self, p: Prime) -> bool {
        self.hook_table().values().all(|h| h % p.get() != 0)
    }

    /// Iterates over the partitions of `n` in lexicographically decreasing
    /// order, starting at `(n)`.
    pub fn partitions_of(n: usize) -> Partitions {
        Partitions::new(n, usize::MAX)
    }

    /// As [`Partition::partitions_of`], restricted to at most `max_len`
    /// parts.
    pub fn partitions_with_max_len(n: usize, max_len: usize) -> Partitions {
        Partitions::new(n, max_len)
    }
}

#[inline]
fn hook(lambda: &Partition, conj: &Partition, node: Node) -> usize {
    let (i, j) = (node.row, node.col);
    lambda.part(i) + conj.part(j) + 1 - i - j
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Canonical form: `-` for the empty partition, otherwise comma-separated
/// parts with `x^k` for runs of length at least two.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (idx, run) in self.parts.chunk_by(|a, b| a == b).enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            if run.len() > 1 {
                write!(f, "{}^{}", run[0], run.len())?;
            } else {
                write!(f, "{}", run[0])?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let syntax = || Error::Syntax {
                token: token.to_string(),
            };
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, Some(e)),
                None => (token, None),
            };
            let base = parse_int(base).ok_or_else(syntax)?;
            let exp = match exp {
                Some(e) => parse_int(e).ok_or_else(syntax)?,
                None => 1,
            };
            if base == 0 || exp == 0 {
                return Err(Error::ZeroPart);
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

fn parse_int(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Hook lengths of every node of a partition, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTable {
    owner: Partition,
    rows: Vec<Vec<usize>>,
}

impl HookTable {
    pub fn owner(&self) -> &Partition {
        &self.owner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, node: Node) -> Option<usize> {
        self.rows
            .get(node.row.checked_sub(1)?)?
            .get(node.col.checked_sub(1)?)
            .copied()
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// `v_p` of every entry, same shape as [`HookTable::rows`].
    pub fn valuations(&self, p: Prime) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&h| valuation_unchecked(h, p.get()))
                    .collect()
            })
            .collect()
    }
}

/// Partitions of `n` with at most `max_len` parts, lexicographically
/// decreasing.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    max_len: usize,
}

impl Partitions {
    fn new(n: usize, max_len: usize) -> Self {
        let current = if n == 0 {
            Some(Vec::new())
        } else if max_len == 0 {
            None
        } else {
            Some(vec![n])
        };
        Partitions { current, max_len }
    }

    fn advance(parts: &mut Vec<usize>) -> bool {
        let mut rem = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            rem += 1;
        }
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let k = *last;
        rem += 1;
        while rem >= k {
            parts.push(k);
            rem -= k;
        }
        if rem > 0 {
            parts.push(rem);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let out = self.current.take()?;
            let mut next = out.clone();
            if Partitions::advance(&mut next) {
                self.current = Some(next);
            }
            if out.len() <= self.max_len {
                return Some(Partition { parts: out });
            }
        }
    }
}
