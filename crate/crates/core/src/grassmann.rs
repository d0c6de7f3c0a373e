//! The graded cohomology ring H*(Gr(k,n)) as a truncated Schur ring, its
//! Gaussian-binomial graded dimension, and the Chern character comparison
//! with the split Grothendieck group.
//!
//! The ring is realized additively with Schur-class basis indexed by
//! partitions inside the k×(n-k) box; products are computed in the full
//! symmetric function ring and truncated.  The presented ideal
//! `sum_j c_j cbar_{alpha-j}` (with `c_j = e_j`, `cbar_j = (-1)^j h_j`, the
//! signs forced by `cbar_0 = 1`) is then a verified consequence.

use std::collections::BTreeMap;
use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_in_box, Partition};
use crate::ratio::{coeff_prefix, rat, sign_pow, Rat};
use crate::symfunc::{e_in_h, sym_from_basis, to_basis, Basis, Expansion, LaurentPolyQ, SymFn};

/// A partition constrained to the k×(n-k) box.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BoxPartition {
    k: usize,
    n: usize,
    partition: Partition,
}

impl BoxPartition {
    pub fn new(k: usize, n: usize, partition: Partition) -> Result<Self> {
        let cols = (n - k) as u32;
        if partition.len() > k || partition.first_part() > cols {
            return Err(Error::OutsideBox {
                k,
                cols: cols as usize,
                parts: partition.parts().to_vec(),
            });
        }
        Ok(BoxPartition { k, n, partition })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The complementary partition inside the box.
    pub fn complement(&self) -> BoxPartition {
        let cols = (self.n - self.k) as u32;
        let mut parts: Vec<u32> = (0..self.k)
            .map(|i| cols - self.partition.part(self.k - 1 - i))
            .collect();
        parts.retain(|&p| p > 0);
        BoxPartition {
            k: self.k,
            n: self.n,
            partition: Partition::from_unsorted(parts),
        }
    }
}

/// An element of H*(Gr(k,n)) in the Schur-class basis.
#[derive(Clone, PartialEq, Eq)]
pub struct GrCohElement {
    k: usize,
    n: usize,
    terms: BTreeMap<Partition, Rat>,
}

impl GrCohElement {
    pub fn zero(k: usize, n: usize) -> Self {
        GrCohElement {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, n: usize) -> Self {
        let mut e = GrCohElement::zero(k, n);
        e.add_term(Partition::empty(), rat(1)).unwrap();
        e
    }

    pub fn schur_class(k: usize, n: usize, lam: Partition) -> Result<Self> {
        let mut e = GrCohElement::zero(k, n);
        e.add_term(lam, rat(1))?;
        Ok(e)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lam: Partition, c: Rat) -> Result<()> {
        BoxPartition::new(self.k, self.n, lam.clone())?;
        if c.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lam) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &GrCohElement) -> Result<GrCohElement> {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::BoxMismatch(self.k, self.n, other.k, other.n));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> GrCohElement {
        if c.is_zero() {
            return GrCohElement::zero(self.k, self.n);
        }
        GrCohElement {
            k: self.k,
            n: self.n,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Coefficient of the top class (the full box).
    pub fn top_coefficient(&self) -> Rat {
        let cols = (self.n - self.k) as u32;
        let top = Partition::from_unsorted(vec![cols; self.k]);
        self.terms.get(&top).cloned().unwrap_or_else(Rat::zero)
    }
}

impl fmt::Debug for GrCohElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if p.is_empty() {
                write!(f, "{}", crate::ratio::format_rat(&mag))?;
            } else {
                write!(f, "{}s{:?}", coeff_prefix(&mag), p)?;
            }
        }
        Ok(())
    }
}

/// Truncates a Schur expansion to the box.
fn truncate_to_box(k: usize, n: usize, schur: &Expansion) -> GrCohElement {
    let cols = (n - k) as u32;
    let mut out = GrCohElement::zero(k, n);
    for (lam, c) in schur {
        if lam.len() <= k && lam.first_part() <= cols {
            out.add_term(lam.clone(), c.clone()).unwrap();
        }
    }
    out
}

/// Product in H*(Gr(k,n)): multiply the Schur functions in Sym and kill
/// every partition leaving the box.
pub fn gr_mul(a: &GrCohElement, b: &GrCohElement) -> Result<GrCohElement> {
    if (a.k, a.n) != (b.k, b.n) {
        return Err(Error::BoxMismatch(a.k, a.n, b.k, b.n));
    }
    let fa = sym_from_basis(Basis::Schur, &a.terms.clone().into_iter().collect());
    let fb = sym_from_basis(Basis::Schur, &b.terms.clone().into_iter().collect());
    let schur = to_basis(&fa.mul(&fb), Basis::Schur);
    Ok(truncate_to_box(a.k, a.n, &schur))
}

/// The Chern class `c_j = e_j` as a box element (zero past `j = k`).
pub fn chern_c(k: usize, n: usize, j: usize) -> GrCohElement {
    if j > k {
        return GrCohElement::zero(k, n);
    }
    truncate_to_box(k, n, &to_basis(&e_in_h(j as u32), Basis::Schur))
}

/// The dual class `cbar_j = (-1)^j h_j` (zero past `j = n-k`).
pub fn chern_cbar(k: usize, n: usize, j: usize) -> GrCohElement {
    if j > n - k {
        return GrCohElement::zero(k, n);
    }
    truncate_to_box(
        k,
        n,
        &to_basis(&SymFn::h(j as u32).scale(&sign_pow(j as u32)), Basis::Schur),
    )
}

/// Verifies `sum_j c_j cbar_{alpha-j} = 0` in the ring for `1 <= alpha <=
/// alpha_max`, with all products taken in the truncated ring.
pub fn ideal_relation_check(k: usize, n: usize, alpha_max: usize) -> Result<bool> {
    if k > n {
        return Err(Error::BoxMismatch(k, n, k, n));
    }
    for alpha in 1..=alpha_max {
        let mut acc = GrCohElement::zero(k, n);
        for j in 0..=alpha {
            let term = gr_mul(&chern_c(k, n, j), &chern_cbar(k, n, alpha - j))?;
            acc = acc.add(&term)?;
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Graded dimension: `sum_{lambda in box} q^{2|lambda|}`, which equals the
/// Gaussian binomial in q².
pub fn graded_dimension(k: usize, n: usize) -> Result<LaurentPolyQ> {
    if k > n {
        return Err(Error::BinomialRange {
            n: n as u32,
            k: k as u32,
        });
    }
    let mut out = LaurentPolyQ::zero();
    for lam in partitions_in_box(k, (n - k) as u32) {
        out.add_term(2 * lam.size() as i64, rat(1));
    }
    Ok(out)
}

/// The Chern character comparison for the cyclotomic quotient: the map lands
/// on the span of the unit class, so the cokernel has rank `C(n,k) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernReport {
    pub k: usize,
    pub n: usize,
    /// total rank of H*(Gr(k,n))
    pub dimension: u64,
    pub image_rank: u64,
    pub cokernel_rank: u64,
    pub surjective: bool,
}

pub fn chern_character_report(k: usize, n: usize) -> Result<ChernReport> {
    if k > n {
        return Err(Error::BinomialRange {
            n: n as u32,
            k: k as u32,
        });
    }
    let dimension = partitions_in_box(k, (n - k) as u32).len() as u64;
    let image_rank = 1;
    Ok(ChernReport {
        k,
        n,
        dimension,
        image_rank,
        cokernel_rank: dimension - image_rank,
        surjective: dimension == image_rank,
    })
}
