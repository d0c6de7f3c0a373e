//! The ring `Sym_n` of symmetric polynomials in `n` variables, as the
//! quotient of `Sym` by `e_s = 0` for `s > n`.
//!
//! In the h-basis the quotient has basis `{h_mu : mu_1 <= n}`: products of
//! reduced representatives never leave it, so only projection needs rewriting.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::Zero;

use crate::partition::Partition;
use crate::poly::{elementary_poly, PolyN};
use crate::ratio::{sign_pow, Rat};
use crate::symfunc::{e_in_h, render_expansion, Expansion, SymFn};

/// An element of `Sym_n`, stored as its canonical h-basis representative with
/// all parts at most `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymN {
    n: usize,
    value: SymFn,
}

thread_local! {
    static REDUCED_H: RefCell<HashMap<(usize, u32), SymFn>> = RefCell::new(HashMap::new());
}

/// `h_m` reduced into `Sym_n` (all parts <= n), via
/// `h_m = sum_{a=1}^{min(m,n)} (-1)^{a+1} e_a h_{m-a}`.
fn reduced_h(n: usize, m: u32) -> SymFn {
    if m as usize <= n {
        return SymFn::h(m);
    }
    if let Some(v) = REDUCED_H.with(|c| c.borrow().get(&(n, m)).cloned()) {
        return v;
    }
    let mut acc = SymFn::zero();
    for a in 1..=(n as u32) {
        // e_a lives in partitions of a with parts <= a <= n, so the products
        // stay inside the reduced basis
        let t = e_in_h(a).mul(&reduced_h(n, m - a)).scale(&sign_pow(a + 1));
        acc = acc.add(&t);
    }
    REDUCED_H.with(|c| c.borrow_mut().insert((n, m), acc.clone()));
    acc
}

fn project_symfn(n: usize, f: &SymFn) -> SymFn {
    let mut acc = SymFn::zero();
    for (mu, c) in f.terms() {
        let mut t = SymFn::constant(c.clone());
        for &r in mu.parts() {
            t = t.mul(&reduced_h(n, r));
        }
        acc = acc.add(&t);
    }
    acc
}

impl SymN {
    pub fn zero(n: usize) -> Self {
        SymN {
            n,
            value: SymFn::zero(),
        }
    }

    pub fn one(n: usize) -> Self {
        SymN {
            n,
            value: SymFn::one(),
        }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        SymN {
            n,
            value: SymFn::constant(c),
        }
    }

    /// Projects a symmetric function to `Sym_n`.
    pub fn project(n: usize, f: &SymFn) -> Self {
        SymN {
            n,
            value: project_symfn(n, f),
        }
    }

    /// A full-degree `h_r` inside `Sym_n`.
    pub fn h(n: usize, r: u32) -> Self {
        SymN {
            n,
            value: reduced_h(n, r),
        }
    }

    /// `e_s` inside `Sym_n`; zero exactly when `s > n`.
    pub fn e(n: usize, s: u32) -> Self {
        SymN::project(n, &e_in_h(s))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> &SymFn {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &SymN) -> SymN {
        assert_eq!(self.n, other.n);
        SymN {
            n: self.n,
            value: self.value.add(&other.value),
        }
    }

    pub fn sub(&self, other: &SymN) -> SymN {
        assert_eq!(self.n, other.n);
        SymN {
            n: self.n,
            value: self.value.sub(&other.value),
        }
    }

    pub fn neg(&self) -> SymN {
        SymN {
            n: self.n,
            value: self.value.neg(),
        }
    }

    pub fn scale(&self, c: &Rat) -> SymN {
        SymN {
            n: self.n,
            value: self.value.scale(c),
        }
    }

    pub fn mul(&self, other: &SymN) -> SymN {
        assert_eq!(self.n, other.n);
        // parts <= n is closed under concatenation
        SymN {
            n: self.n,
            value: self.value.mul(&other.value),
        }
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.value.homogeneous_degree()
    }

    pub fn terms(&self) -> &Expansion {
        self.value.terms()
    }

    /// Expands the representative into an honest polynomial in `n` variables.
    pub fn to_poly(&self) -> PolyN {
        let mut acc = PolyN::zero(self.n);
        for (mu, c) in self.value.terms() {
            let mut t = PolyN::one(self.n);
            for &r in mu.parts() {
                t = t.mul(&crate::poly::complete_poly(self.n, r));
            }
            acc = acc.add(&t.scale(c));
        }
        acc
    }

    /// Reconstructs an element of `Sym_n` from a symmetric polynomial in `n`
    /// variables by leading-term elimination against elementary products.
    /// Panics when the input is not symmetric.
    pub fn from_poly(poly: &PolyN) -> SymN {
        let n = poly.nvars();
        assert!(poly.is_symmetric(), "from_poly requires symmetric input");
        let e_polys: Vec<PolyN> = (0..=n).map(|r| elementary_poly(n, r)).collect();
        let mut rem = poly.clone();
        let mut acc_e: BTreeMap<Partition, Rat> = BTreeMap::new();
        while let Some((exps, c)) = rem.lex_leading().map(|(e, c)| (e.clone(), c.clone())) {
            // leading exponent of a symmetric polynomial is a partition
            let lam = Partition::from_unsorted(exps.clone());
            let mut trimmed = exps.clone();
            trimmed.retain(|&x| x > 0);
            debug_assert_eq!(lam.parts(), trimmed.as_slice());
            // e_1^{lam_1-lam_2} e_2^{lam_2-lam_3} ... has the same leading term
            let mut prod = PolyN::one(n);
            let mut index = Vec::new();
            for j in 0..lam.len() {
                let mult = lam.part(j) - lam.part(j + 1);
                for _ in 0..mult {
                    prod = prod.mul(&e_polys[j + 1]);
                    index.push((j + 1) as u32);
                }
            }
            rem = rem.sub(&prod.scale(&c));
            use std::collections::btree_map::Entry;
            match acc_e.entry(Partition::from_unsorted(index)) {
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
        }
        // convert the e-monomial answer into the h-basis representative
        let mut value = SymFn::zero();
        for (mu, c) in acc_e {
            let mut t = SymFn::constant(c);
            for &r in mu.parts() {
                t = t.mul(&e_in_h(r));
            }
            value = value.add(&t);
        }
        SymN::project(poly.nvars(), &value)
    }
}

impl fmt::Debug for SymN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_expansion(self.value.terms(), "h"))
    }
}

impl fmt::Display for SymN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_expansion(self.value.terms(), "h"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;
    use crate::symfunc::{sym_from_basis, Basis};

    #[test]
    fn projection_kills_exactly_large_elementaries() {
        for n in 1..=4usize {
            for s in 0..=6u32 {
                let proj = SymN::e(n, s);
                assert_eq!(proj.is_zero(), s as usize > n, "e_{s} in Sym_{n}");
            }
        }
    }

    #[test]
    fn projection_is_idempotent_and_multiplicative() {
        let n = 2;
        let f = SymFn::h(4).mul(&SymFn::h(3)).add(&SymFn::h(1).scale(&rat(5)));
        let g = SymFn::h(3).sub(&SymFn::h(2).mul(&SymFn::h(2)));
        let pf = SymN::project(n, &f);
        let pf2 = SymN::project(n, pf.value());
        assert_eq!(pf, pf2);
        let lhs = SymN::project(n, &f.mul(&g));
        let rhs = SymN::project(n, &f).mul(&SymN::project(n, &g));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduced_parts_stay_small() {
        for n in 1..=3usize {
            for m in 0..=9u32 {
                let r = SymN::h(n, m);
                for p in r.terms().keys() {
                    assert!(p.first_part() as usize <= n);
                }
                // faithfulness: expansion in n variables agrees
                assert_eq!(r.to_poly(), crate::poly::complete_poly(n, m));
            }
        }
    }

    #[test]
    fn from_poly_round_trips() {
        let n = 3;
        let f = SymN::h(n, 2).mul(&SymN::e(n, 2)).sub(&SymN::h(n, 4));
        assert_eq!(SymN::from_poly(&f.to_poly()), f);
        // schur projections round trip through polynomials too
        let s = sym_from_basis(
            Basis::Schur,
            &[(crate::partition::Partition::new(vec![2, 1]).unwrap(), rat(1))]
                .into_iter()
                .collect(),
        );
        let sn = SymN::project(n, &s);
        assert_eq!(SymN::from_poly(&sn.to_poly()), sn);
    }
}
