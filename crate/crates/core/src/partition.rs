//! Integer partitions: the index set for every basis of symmetric functions.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.  The empty partition is the
/// valid index of the unit.
///
/// Ordering is by size first, then reverse-lexicographic on the parts, which
/// fixes a deterministic serialization order (so `(2)` sorts before `(1,1)`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::BadPartition(parts.clone()));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros, so any exponent multiset becomes a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(r: u32) -> Self {
        if r == 0 {
            Partition::empty()
        } else {
            Partition(vec![r])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Multiplicative concatenation: the index of `h_mu * h_nu`.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        let mut col = 1;
        loop {
            let n = self.0.iter().filter(|&&p| p >= col).count() as u32;
            if n == 0 {
                break;
            }
            out.push(n);
            col += 1;
        }
        Partition(out)
    }

    /// Part at `i`, zero-padded past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// True when `other/self` is a horizontal strip (at most one box per
    /// column): `other_i >= self_i >= other_{i+1}` for all rows.
    pub fn horizontal_strip_to(&self, other: &Partition) -> bool {
        let rows = other.len().max(self.len());
        for i in 0..rows {
            if other.part(i) < self.part(i) {
                return false;
            }
            if i + 1 < rows + 1 && self.part(i) < other.part(i + 1) {
                return false;
            }
        }
        true
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All partitions of `n` with parts at most `max_part` and at most `max_len`
/// parts, in the crate's canonical order.
pub fn partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(rem: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        let hi = rem.min(max_part);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(rem - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, max_part, max_len, &mut stack, &mut out);
    out.sort();
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n.max(1), n as usize)
}

/// All partitions fitting in a `rows x cols` box (any size up to rows*cols).
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=(rows as u32 * cols) {
        out.extend(partitions_bounded(n, cols, rows));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn canonical_order_is_size_then_revlex() {
        let two = Partition::new(vec![2]).unwrap();
        let one_one = Partition::new(vec![1, 1]).unwrap();
        let one = Partition::new(vec![1]).unwrap();
        assert!(one < two);
        assert!(two < one_one);
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=8 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), p.size());
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_bounded(5, 5, 2).len(), 3); // (5),(4,1),(3,2)
        // partitions in a 2x2 box: empty,(1),(2),(1,1),(2,1),(2,2)
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }
}
