//! Sparse multivariate polynomials over the rationals with a fixed variable
//! count.  This is the carrier of the divided-difference representation and
//! of every brute-force monomial oracle in the test suites.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::ratio::Rat;

/// A polynomial in `x_1, ..., x_n`, keyed by exponent vectors of length
/// exactly `n`.  No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyN {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PolyN {
    pub fn zero(n: usize) -> Self {
        PolyN {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        PolyN::constant(n, Rat::one())
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = PolyN::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexRange { idx: i, n });
        }
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = PolyN::zero(n);
        p.add_term(e, Rat::one());
        Ok(p)
    }

    pub fn monomial(n: usize, exps: &[u32], c: Rat) -> Self {
        assert_eq!(exps.len(), n, "exponent vector length must equal n");
        let mut p = PolyN::zero(n);
        p.add_term(exps.to_vec(), c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total exponent degree of the highest term (polynomial degree, not the
    /// doubled grading used elsewhere).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Some(degree) when every monomial has the same total exponent.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &PolyN) -> PolyN {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyN) -> PolyN {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyN {
        let mut out = PolyN::zero(self.n);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> PolyN {
        if c.is_zero() {
            return PolyN::zero(self.n);
        }
        let mut out = PolyN::zero(self.n);
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &PolyN) -> PolyN {
        assert_eq!(self.n, other.n);
        let mut out = PolyN::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplication by `x_i`, 1-based.
    pub fn mul_var(&self, i: usize) -> PolyN {
        let mut out = PolyN::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i - 1] += 1;
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// Swaps the variables `x_i` and `x_{i+1}` (the simple transposition s_i).
    pub fn swap_adjacent(&self, i: usize) -> PolyN {
        let mut out = PolyN::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, i);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})`.  The division is
    /// always exact; a nonzero remainder would indicate corrupted input and
    /// panics.
    pub fn divided_difference(&self, i: usize) -> PolyN {
        let num = self.sub(&self.swap_adjacent(i));
        num.div_exact_diff(i)
            .expect("f - s_i f must be divisible by x_i - x_{i+1}")
    }

    /// Exact division by the binomial `x_i - x_{i+1}`; `None` when a nonzero
    /// remainder is left over.
    pub fn div_exact_diff(&self, i: usize) -> Option<PolyN> {
        let vi = i - 1;
        let mut rem = self.clone();
        let mut quot = PolyN::zero(self.n);
        while !rem.is_zero() {
            // leading monomial in x_i (break ties by full lex)
            let (e, c) = rem
                .terms
                .iter()
                .max_by(|(ea, _), (eb, _)| ea[vi].cmp(&eb[vi]).then_with(|| ea.cmp(eb)))
                .map(|(e, c)| (e.clone(), c.clone()))?;
            if e[vi] == 0 {
                return None; // nonzero remainder
            }
            let mut q = e.clone();
            q[vi] -= 1;
            quot.add_term(q.clone(), c.clone());
            // rem -= (x_i - x_{i+1}) * c x^q
            rem.add_term(e, -c.clone());
            let mut shifted = q;
            shifted[vi + 1] += 1;
            rem.add_term(shifted, c);
        }
        Some(quot)
    }

    /// Substitutes numeric values for all variables.
    pub fn eval(&self, vals: &[Rat]) -> Rat {
        assert_eq!(vals.len(), self.n);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t *= vals[k].clone();
                }
            }
            acc += t;
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_adjacent(i) == *self)
    }

    /// Lexicographically greatest monomial (largest exponent vector).
    pub fn lex_leading(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }
}

/// The elementary symmetric polynomial `e_r(x_1..x_n)` by direct enumeration.
pub fn elementary_poly(n: usize, r: usize) -> PolyN {
    if r > n {
        return PolyN::zero(n);
    }
    let mut out = PolyN::zero(n);
    // iterate over r-subsets of {0..n}
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mut e = vec![0u32; n];
        for &i in &idx {
            e[i] = 1;
        }
        out.add_term(e, Rat::one());
        // next subset
        let mut k = r;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] != k + n - r {
                idx[k] += 1;
                for j in k + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The complete homogeneous symmetric polynomial `h_r(x_1..x_n)`.
pub fn complete_poly(n: usize, r: u32) -> PolyN {
    let mut out = PolyN::zero(n);
    fn rec(n: usize, pos: usize, rem: u32, cur: &mut Vec<u32>, out: &mut PolyN) {
        if pos == n - 1 {
            cur.push(rem);
            out.add_term(cur.clone(), Rat::one());
            cur.pop();
            return;
        }
        for v in 0..=rem {
            cur.push(v);
            rec(n, pos + 1, rem - v, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        if r == 0 {
            return PolyN::one(0);
        }
        return out;
    }
    rec(n, 0, r, &mut Vec::new(), &mut out);
    out
}

/// The power sum `p_r(x_1..x_n)`.
pub fn power_poly(n: usize, r: u32) -> PolyN {
    if r == 0 {
        return PolyN::constant(n, crate::ratio::rat(n as i64));
    }
    let mut out = PolyN::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = r;
        out.add_term(e, Rat::one());
    }
    out
}

/// The monomial symmetric polynomial `m_lambda(x_1..x_n)`.
pub fn monomial_poly(n: usize, parts: &[u32]) -> PolyN {
    if parts.len() > n {
        return PolyN::zero(n);
    }
    let mut exps = vec![0u32; n];
    exps[..parts.len()].copy_from_slice(parts);
    // sum of distinct permutations of the exponent vector
    let mut sorted = exps.clone();
    sorted.sort_unstable();
    let mut out = PolyN::zero(n);
    let mut perm = sorted;
    loop {
        out.add_term(perm.clone(), Rat::one());
        // next_permutation
        let mut i = n.wrapping_sub(1);
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

impl fmt::Debug for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*x^{:?}", crate::ratio::format_rat(c), e)?;
        }
        Ok(())
    }
}
