//! The irreducibility criterion on partitions and the decomposition of an
//! irreducible partition into a top, a hook-free middle, and a bottom.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, Prime};

/// Fayers' criterion: there are no nodes `(i,j)`, `(i,y)`, `(x,j)` with
/// `v_p(h(i,j)) > 0` and both `v_p(h(i,y))` and `v_p(h(x,j))` different
/// from `v_p(h(i,j))`.
///
/// A node with a p-divisible hook is harmless as soon as its row or its
/// column carries a single valuation, so one pass marks the constant rows
/// and columns and a second pass looks for an offending node.
pub fn is_p_irreducible(lambda: &Partition, p: Prime) -> bool {
    let vals = lambda.hook_table().valuations(p);
    let row_const: Vec<bool> = vals
        .iter()
        .map(|row| row.iter().all(|&v| v == row[0]))
        .collect();
    let width = lambda.part(1);
    let mut col_const = vec![true; width];
    for row in vals.iter().skip(1) {
        for (j, &v) in row.iter().enumerate() {
            if v != vals[0][j] {
                col_const[j] = false;
            }
        }
    }
    vals.iter().enumerate().all(|(i, row)| {
        row_const[i]
            || row
                .iter()
                .enumerate()
                .all(|(j, &v)| v == 0 || col_const[j])
    })
}

/// Whether the Specht module labelled by `lambda` stays irreducible mod p.
///
/// For odd p this is [`is_p_irreducible`]. For p = 2 the partition must
/// also be 2-regular or 2-restricted, with `(2,2)` as the one exception.
pub fn is_specht_irreducible(lambda: &Partition, p: Prime) -> bool {
    if p.get() > 2 {
        return is_p_irreducible(lambda, p);
    }
    if lambda.parts() == [2, 2] {
        return true;
    }
    (lambda.is_p_regular(p) || lambda.is_p_restricted(p)) && is_p_irreducible(lambda, p)
}

/// Every first-column hook is divisible by p. The empty partition is not a
/// top.
pub fn is_p_top(lambda: &Partition, p: Prime) -> bool {
    if lambda.is_empty() {
        return false;
    }
    let table = lambda.hook_table();
    table.rows().iter().all(|row| row[0] % p.get() == 0)
}

/// Every first-row hook is divisible by p.
pub fn is_p_bottom(lambda: &Partition, p: Prime) -> bool {
    is_p_top(&lambda.conjugate(), p)
}

fn check_middle(top: &Partition, mid: &Partition, bottom: &Partition) -> Result<()> {
    if mid.is_empty() && !top.is_empty() && !bottom.is_empty() {
        return Err(Error::EmptyMiddle);
    }
    Ok(())
}

/// The gluing `⊕(top, mid, bottom)`: the last row of `top` continues the
/// first row of `mid`, and the first column of `mid` sits on the last
/// column of `bottom`.
///
/// Parts are `top_i + mid_1 + bottom_1 - 1`, then `mid_j + bottom_1 - 1`
/// for `j >= 2`, then the parts of `bottom`. When one side is missing
/// there is no overlap on that side: an empty bottom counts as
/// `bottom_1 = 1`, and an empty top lets the rows of `mid` start at
/// `j = 1`.
pub fn glue_oplus(top: &Partition, mid: &Partition, bottom: &Partition) -> Result<Partition> {
    check_middle(top, mid, bottom)?;
    if mid.is_empty() {
        return Ok(if top.is_empty() { bottom.clone() } else { top.clone() });
    }
    let shift = bottom.part(1).max(1) - 1;
    let mut parts = Vec::with_capacity(top.len() + mid.len() + bottom.len());
    parts.extend(top.parts().iter().map(|&x| x + mid.part(1) + shift));
    let skip = usize::from(!top.is_empty());
    parts.extend(mid.parts().iter().skip(skip).map(|&x| x + shift));
    parts.extend_from_slice(bottom.parts());
    Ok(Partition::from_trimmed(parts))
}

/// The corner gluing `⊕̂(top, mid, bottom)` used for cores: parts
/// `top_i + mid_1 + bottom_1`, then `mid_j + bottom_1` for all `j`, then
/// `bottom`.
pub fn glue_oplus_hat(top: &Partition, mid: &Partition, bottom: &Partition) -> Result<Partition> {
    check_middle(top, mid, bottom)?;
    let b1 = bottom.part(1);
    let mut parts = Vec::with_capacity(top.len() + mid.len() + bottom.len());
    parts.extend(top.parts().iter().map(|&x| x + mid.part(1) + b1));
    parts.extend(mid.parts().iter().map(|&x| x + b1));
    parts.extend_from_slice(bottom.parts());
    Ok(Partition::from_trimmed(parts))
}

/// The unique `(top, mid, bottom)` with `λ = ⊕(top, mid, bottom)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub top: Partition,
    pub mid: Partition,
    pub bottom: Partition,
    /// First row made entirely of p-hooks.
    pub split_row: Option<usize>,
    /// First column made entirely of p-hooks.
    pub split_col: Option<usize>,
}

impl Decomposition {
    pub fn glue(&self) -> Result<Partition> {
        glue_oplus(&self.top, &self.mid, &self.bottom)
    }
}

pub fn decompose(lambda: &Partition, p: Prime) -> Result<Decomposition> {
    if !is_p_irreducible(lambda, p) {
        return Err(Error::NotIrreducible {
            partition: lambda.to_string(),
            p: p.get(),
        });
    }
    let table = lambda.hook_table();
    let rows = table.rows();
    let divisible = |h: usize| h.is_multiple_of(p.get());

    let split_row = rows
        .iter()
        .position(|row| row.iter().all(|&h| divisible(h)))
        .map(|i| i + 1);
    let split_col = (1..=lambda.part(1))
        .find(|&j| rows.iter().take_while(|row| row.len() >= j).all(|row| divisible(row[j - 1])));

    let conj = lambda.conjugate();
    let bottom = match split_row {
        Some(a) => Partition::from_trimmed(lambda.parts()[a - 1..].to_vec()),
        None => Partition::empty(),
    };
    let top = match split_col {
        Some(b) => Partition::from_trimmed(conj.parts()[b - 1..].to_vec()).conjugate(),
        None => Partition::empty(),
    };

    // mid occupies rows [first_row, last_row] and columns [first_col, last_col]
    let first_row = split_col.map_or(1, |b| conj.part(b));
    let last_row = split_row.map_or(lambda.len(), |a| a - 1);
    let first_col = split_row.map_or(1, |a| lambda.part(a));
    let last_col = split_col.map_or(usize::MAX, |b| b - 1);
    let mid_parts = (first_row..=last_row)
        .map(|x| {
            let right = lambda.part(x).min(last_col);
            (right + 1).saturating_sub(first_col)
        })
        .collect();
    let mid = Partition::from_trimmed(mid_parts);

    let d = Decomposition {
        top,
        mid,
        bottom,
        split_row,
        split_col,
    };
    debug_assert_eq!(d.glue().as_ref(), Ok(lambda));
    Ok(d)
}

/// The staircase `((k-1)(p-1), ..., p-1)`: the p-core of any p-top with
/// `k` rows.
pub fn top_core(k: usize, p: Prime) -> Partition {
    let step = p.get() - 1;
    Partition::from_trimmed((1..k).map(|i| (k - i) * step).collect())
}

/// `τ_i = (k-i)(p-1) + p σ_i` for `i <= k`.
pub fn expand_top(sigma: &Partition, k: usize, p: Prime) -> Result<Partition> {
    if sigma.len() > k {
        return Err(Error::TooLong {
            partition: sigma.to_string(),
            k,
        });
    }
    let p = p.get();
    let parts = (1..=k)
        .map(|i| {
            p.checked_mul(sigma.part(i))
                .and_then(|x| x.checked_add((k - i) * (p - 1)))
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_trimmed(parts))
}

/// Inverse of [`expand_top`] for the same `k`.
pub fn shrink_top(tau: &Partition, k: usize, p: Prime) -> Result<Partition> {
    let not_in_image = || Error::NotInImage {
        partition: tau.to_string(),
        k,
        p: p.get(),
    };
    if tau.len() > k {
        return Err(not_in_image());
    }
    let p = p.get();
    let parts = (1..=k)
        .map(|i| {
            let excess = tau
                .part(i)
                .checked_sub((k - i) * (p - 1))
                .ok_or_else(not_in_image)?;
            if excess % p != 0 {
                return Err(not_in_image());
            }
            Ok(excess / p)
        })
        .collect::<Result<Vec<_>>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(not_in_image());
    }
    Ok(Partition::from_trimmed(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(n: usize) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn criterion_examples() {
        assert!(!is_p_irreducible(&part("4,1"), p(5)));
        assert!(is_p_irreducible(&part("3,1"), p(3)));
        assert!(is_p_irreducible(&part("27,23,14,5^2,3^3,2^9,1^9"), p(5)));
        assert!(is_p_irreducible(&Partition::empty(), p(2)));
    }

    #[test]
    fn specht_examples() {
        assert!(is_specht_irreducible(&part("2,2"), p(2)));
        assert!(!is_specht_irreducible(&part("3,1"), p(2)));
        assert!(is_specht_irreducible(&part("4"), p(2)));
        assert!(!is_specht_irreducible(&part("4,1"), p(5)));
        assert!(!is_p_irreducible(&part("2,2"), p(2)));
    }

    #[test]
    fn tops() {
        assert!(is_p_top(&part("10,5,3"), p(3)));
        assert!(is_p_top(&part("5"), p(5)));
        assert!(!is_p_top(&part("4,1"), p(5)));
        assert!(!is_p_top(&Partition::empty(), p(5)));
        assert!(is_p_bottom(&part("1^5"), p(5)));
    }

    #[test]
    fn oplus() {
        let g = glue_oplus(&part("3"), &part("1"), &part("1,1,1")).unwrap();
        assert_eq!(g, part("4,1,1,1"));
        let mu = part("3,1");
        assert_eq!(glue_oplus(&Partition::empty(), &mu, &Partition::empty()).unwrap(), mu);
        assert_eq!(
            glue_oplus(&part("5"), &Partition::empty(), &Partition::empty()).unwrap(),
            part("5")
        );
        assert_eq!(
            glue_oplus(&part("3"), &Partition::empty(), &part("1^3")),
            Err(Error::EmptyMiddle)
        );
    }

    #[test]
    fn oplus_hat() {
        let g = glue_oplus_hat(&part("12,8,4"), &part("3,3,1,1,1"), &part("2^4,1^4")).unwrap();
        assert_eq!(g, part("17,13,9,5^2,3^3,2^4,1^4"));
        let mu = part("2,2");
        assert_eq!(glue_oplus_hat(&Partition::empty(), &mu, &Partition::empty()).unwrap(), mu);
        assert_eq!(
            glue_oplus_hat(&part("3"), &Partition::empty(), &Partition::empty()).unwrap(),
            part("3")
        );
        assert_eq!(
            glue_oplus_hat(&part("3"), &Partition::empty(), &part("1")),
            Err(Error::EmptyMiddle)
        );
    }

    #[test]
    fn decompositions() {
        let d = decompose(&part("4,1,1,1"), p(3)).unwrap();
        assert_eq!(
            d,
            Decomposition {
                top: part("3"),
                mid: part("1"),
                bottom: part("1,1,1"),
                split_row: Some(2),
                split_col: Some(2),
            }
        );
        let mu = part("3,1");
        let d = decompose(&mu, p(3)).unwrap();
        assert_eq!((d.top.is_empty(), &d.mid, d.bottom.is_empty()), (true, &mu, true));
        assert!(matches!(
            decompose(&part("4,1"), p(5)),
            Err(Error::NotIrreducible { .. })
        ));
    }

    #[test]
    fn decompose_single_sided() {
        let d = decompose(&part("5"), p(5)).unwrap();
        assert_eq!((d.top, d.mid, d.split_col), (part("5"), Partition::empty(), Some(1)));
        let d = decompose(&part("1^5"), p(5)).unwrap();
        assert_eq!((d.bottom, d.mid, d.split_row), (part("1^5"), Partition::empty(), Some(1)));
    }

    #[test]
    fn expand_and_shrink() {
        assert_eq!(expand_top(&part("2,1,1"), 3, p(3)).unwrap(), part("10,5,3"));
        assert_eq!(expand_top(&Partition::empty(), 4, p(5)).unwrap(), part("12,8,4"));
        assert_eq!(expand_top(&part("1"), 1, p(5)).unwrap(), part("5"));
        assert!(matches!(
            expand_top(&part("1,1"), 1, p(5)),
            Err(Error::TooLong { .. })
        ));
        assert_eq!(shrink_top(&part("10,5,3"), 3, p(3)).unwrap(), part("2,1,1"));
        assert_eq!(shrink_top(&part("12,8,4"), 4, p(5)).unwrap(), Partition::empty());
        // 6 - 2 = 4 is not a multiple of 3
        assert!(matches!(
            shrink_top(&part("6,3"), 2, p(3)),
            Err(Error::NotInImage { .. })
        ));
        // tau_2 = 1 < p - 1 would need a negative sigma_1 contribution
        assert!(shrink_top(&part("1"), 2, p(3)).is_err());
        assert!(shrink_top(&part("5,5,5"), 2, p(5)).is_err());
    }

    #[test]
    fn top_cores() {
        assert_eq!(top_core(4, p(5)), part("12,8,4"));
        assert_eq!(top_core(1, p(3)), Partition::empty());
    }
}
