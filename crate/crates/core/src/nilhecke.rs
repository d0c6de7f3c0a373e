//! The nilHecke ring NH_n through its faithful action on polynomials.
//!
//! Generators are the dots `x_i` (degree 2) and the crossings `d_i` (degree
//! -2); `x_i` acts by multiplication and `d_i` by the divided difference
//! `f |-> (f - s_i f)/(x_i - x_{i+1})`.  Elements are never rewritten as
//! words: the canonical form is the action itself, or equivalently the
//! n!×n! matrix over `Sym_n` in the staircase basis.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::PolyN;
use crate::ratio::{coeff_prefix, Rat};
use crate::symn::SymN;

/// A single generator letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    /// The dot `x_i`, `1 <= i <= n`.
    X(usize),
    /// The crossing `d_i`, `1 <= i <= n-1`.
    D(usize),
}

/// A word in the generators of NH_n, applied right-to-left like operator
/// composition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NHWord {
    n: usize,
    letters: Vec<Letter>,
}

impl NHWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            match *l {
                Letter::X(i) => {
                    if i == 0 || i > n {
                        return Err(Error::IndexRange { idx: i, n });
                    }
                }
                Letter::D(i) => {
                    if i == 0 || i + 1 > n {
                        return Err(Error::IndexRange { idx: i, n });
                    }
                }
            }
        }
        Ok(NHWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        NHWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Degree with `deg x = 2`, `deg d = -2`.
    pub fn degree(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::X(_) => 2i64,
                Letter::D(_) => -2i64,
            })
            .sum()
    }

    pub fn concat(&self, other: &NHWord) -> NHWord {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        NHWord {
            n: self.n,
            letters,
        }
    }

    /// Applies the word to a polynomial, rightmost letter first.
    pub fn act(&self, p: &PolyN) -> PolyN {
        let mut cur = p.clone();
        for l in self.letters.iter().rev() {
            cur = match *l {
                Letter::X(i) => cur.mul_var(i),
                Letter::D(i) => cur.divided_difference(i),
            };
        }
        cur
    }
}

impl fmt::Debug for NHWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l {
                Letter::X(i) => format!("x{i}"),
                Letter::D(i) => format!("d{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A rational linear combination of words, all on the same strand count.
#[derive(Clone, PartialEq, Eq)]
pub struct NHElement {
    n: usize,
    combo: BTreeMap<NHWord, Rat>,
}

impl NHElement {
    pub fn zero(n: usize) -> Self {
        NHElement {
            n,
            combo: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        NHElement::from_word(NHWord::identity(n))
    }

    pub fn from_word(w: NHWord) -> Self {
        let n = w.n;
        let mut combo = BTreeMap::new();
        combo.insert(w, Rat::one());
        NHElement { n, combo }
    }

    pub fn from_letters(n: usize, letters: Vec<Letter>) -> Result<Self> {
        Ok(NHElement::from_word(NHWord::new(n, letters)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn combo(&self) -> &BTreeMap<NHWord, Rat> {
        &self.combo
    }

    pub fn add_term(&mut self, w: NHWord, c: Rat) {
        assert_eq!(w.n, self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.combo.entry(w) {
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

    pub fn add(&self, other: &NHElement) -> NHElement {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.combo {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NHElement) -> NHElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NHElement {
        NHElement {
            n: self.n,
            combo: self
                .combo
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> NHElement {
        if c.is_zero() {
            return NHElement::zero(self.n);
        }
        NHElement {
            n: self.n,
            combo: self
                .combo
                .iter()
                .map(|(w, v)| (w.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &NHElement) -> NHElement {
        assert_eq!(self.n, other.n);
        let mut out = NHElement::zero(self.n);
        for (wa, ca) in &self.combo {
            for (wb, cb) in &other.combo {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// Some(degree) when all words share one degree; zero counts as any.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.combo.keys().map(|w| w.degree());
        let Some(d) = it.next() else { return Some(0) };
        it.all(|x| x == d).then_some(d)
    }
}

impl fmt::Debug for NHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.combo.is_empty() {
            return write!(f, "0");
        }
        use num::Signed;
        for (i, (w, c)) in self.combo.iter().enumerate() {
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
            if w.is_empty() {
                write!(f, "{}", crate::ratio::format_rat(&mag))?;
            } else {
                write!(f, "{}{:?}", coeff_prefix(&mag), w)?;
            }
        }
        Ok(())
    }
}

/// The defining action on `Z[x_1..x_n]`; errors on strand-count mismatch.
pub fn act(e: &NHElement, p: &PolyN) -> Result<PolyN> {
    if e.n != p.nvars() {
        return Err(Error::StrandMismatch(e.n, p.nvars()));
    }
    let mut acc = PolyN::zero(e.n);
    for (w, c) in &e.combo {
        acc = acc.add(&w.act(p).scale(c));
    }
    Ok(acc)
}

/// Staircase exponent vectors `a` with `a_k <= n - k`, sorted lexicographically.
pub fn staircase_exponents(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for k in 1..=n {
        let cap = (n - k) as u32;
        let mut next = Vec::new();
        for prefix in &out {
            for v in 0..=cap {
                let mut e = prefix.clone();
                e.push(v);
                next.push(e);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Equality through the faithful polynomial representation: `e = f` iff they
/// act identically on every staircase monomial.
pub fn equals(e: &NHElement, f: &NHElement) -> Result<bool> {
    if e.n != f.n {
        return Err(Error::StrandMismatch(e.n, f.n));
    }
    let n = e.n;
    for a in staircase_exponents(n) {
        let xa = PolyN::monomial(n, &a, Rat::one());
        if act(e, &xa)? != act(f, &xa)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimal idempotent `e_n = x^delta d_{w_0}` with the staircase exponent
/// `delta = (n-1, ..., 1, 0)` and the fixed reduced word (1)(21)(321)... for
/// the longest permutation.
pub fn idempotent_e(n: usize) -> NHElement {
    let mut letters = Vec::new();
    for k in 1..n {
        for _ in 0..(n - k) {
            letters.push(Letter::X(k));
        }
    }
    for block in 1..n {
        for i in (1..=block).rev() {
            letters.push(Letter::D(i));
        }
    }
    NHElement::from_letters(n, letters).expect("idempotent word is always in range")
}

// ---------------------------------------------------------------------------
// Relation verification
// ---------------------------------------------------------------------------

/// Pass/fail record for one relation instance.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verifies every defining relation instance of NH_n by equality of actions
/// on the staircase basis.
pub fn verify_relations(n: usize) -> RelationReport {
    let mut checks = Vec::new();
    let word = |letters: &[Letter]| NHElement::from_letters(n, letters.to_vec()).unwrap();
    let mut push = |name: String, lhs: NHElement, rhs: NHElement| {
        let pass = equals(&lhs, &rhs).unwrap();
        checks.push(RelationCheck { name, pass });
    };
    for i in 1..n {
        push(
            format!("d{i}^2 = 0"),
            word(&[Letter::D(i), Letter::D(i)]),
            NHElement::zero(n),
        );
        // both dot-slide forms
        push(
            format!("x{i} d{i} - d{i} x{} = 1", i + 1),
            word(&[Letter::X(i), Letter::D(i)]).sub(&word(&[Letter::D(i), Letter::X(i + 1)])),
            NHElement::identity(n),
        );
        push(
            format!("d{i} x{i} - x{} d{i} = 1", i + 1),
            word(&[Letter::D(i), Letter::X(i)]).sub(&word(&[Letter::X(i + 1), Letter::D(i)])),
            NHElement::identity(n),
        );
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        push(
            format!("d{i} d{j} d{i} = d{j} d{i} d{j}"),
            word(&[Letter::D(i), Letter::D(j), Letter::D(i)]),
            word(&[Letter::D(j), Letter::D(i), Letter::D(j)]),
        );
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            push(
                format!("x{i} x{j} = x{j} x{i}"),
                word(&[Letter::X(i), Letter::X(j)]),
                word(&[Letter::X(j), Letter::X(i)]),
            );
        }
    }
    for i in 1..n {
        for j in 1..n {
            if (i as i64 - j as i64).abs() > 1 {
                push(
                    format!("d{i} d{j} = d{j} d{i}"),
                    word(&[Letter::D(i), Letter::D(j)]),
                    word(&[Letter::D(j), Letter::D(i)]),
                );
            }
        }
    }
    for i in 1..=n {
        for j in 1..n {
            if (i as i64 - j as i64).abs() > 1 {
                push(
                    format!("x{i} d{j} = d{j} x{i}"),
                    word(&[Letter::X(i), Letter::D(j)]),
                    word(&[Letter::D(j), Letter::X(i)]),
                );
            }
        }
    }
    RelationReport { n, checks }
}

// ---------------------------------------------------------------------------
// Staircase expansion and the matrix model
// ---------------------------------------------------------------------------

/// Expands polynomials in the free `Sym_n`-module basis of staircase
/// monomials.
///
/// Coefficients are extracted one degree layer at a time: a composite divided
/// difference of length m kills every staircase monomial of size < m for
/// degree reasons and evaluates to a rational constant on size-m monomials,
/// so each layer reduces to a small exact linear system whose matrix is
/// inverted once at construction.  Every expansion is certified by
/// multiplying back out.
pub struct StaircaseExpander {
    n: usize,
    basis: Vec<Vec<u32>>,
    /// layer m -> (operator words, basis indices with |b| = m, inverse of D)
    layers: Vec<(Vec<Vec<usize>>, Vec<usize>, Vec<Vec<Rat>>)>,
}

impl StaircaseExpander {
    pub fn new(n: usize) -> Self {
        let basis = staircase_exponents(n);
        let max_layer = n * (n - 1) / 2;
        let mut words_by_len: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_layer + 1];
        for perm in all_permutations(n) {
            let w = descent_word(&perm);
            words_by_len[w.len()].push(w);
        }
        let mut layers = Vec::with_capacity(max_layer + 1);
        for (m, words) in words_by_len.iter().enumerate() {
            let cols: Vec<usize> = basis
                .iter()
                .enumerate()
                .filter(|(_, b)| b.iter().sum::<u32>() as usize == m)
                .map(|(i, _)| i)
                .collect();
            assert_eq!(words.len(), cols.len(), "layer {m} must be square");
            let mut d = vec![vec![Rat::zero(); cols.len()]; words.len()];
            for (wi, w) in words.iter().enumerate() {
                for (ci, &bi) in cols.iter().enumerate() {
                    let xb = PolyN::monomial(n, &basis[bi], Rat::one());
                    d[wi][ci] = constant_value(&apply_diff_word(w, &xb));
                }
            }
            let inv = crate::symfunc::invert_matrix(d)
                .expect("layer matrix of divided differences is invertible");
            layers.push((words.clone(), cols, inv));
        }
        StaircaseExpander { n, basis, layers }
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Expands `f = sum_b c_b x^b` with `c_b` in `Sym_n`; the result is
    /// indexed like [`Self::basis`].  Panics if the residual is nonzero,
    /// which freeness over `Sym_n` rules out.
    pub fn expand(&self, f: &PolyN) -> Vec<SymN> {
        assert_eq!(f.nvars(), self.n);
        let mut coeffs = vec![SymN::zero(self.n); self.basis.len()];
        let mut residual = f.clone();
        for (words, cols, inv) in self.layers.iter().rev() {
            if residual.is_zero() {
                break;
            }
            let images: Vec<PolyN> = words
                .iter()
                .map(|w| apply_diff_word(w, &residual))
                .collect();
            for (ci, &bi) in cols.iter().enumerate() {
                let mut cb_poly = PolyN::zero(self.n);
                for (wi, img) in images.iter().enumerate() {
                    if !inv[ci][wi].is_zero() {
                        cb_poly = cb_poly.add(&img.scale(&inv[ci][wi]));
                    }
                }
                if cb_poly.is_zero() {
                    continue;
                }
                let xb = PolyN::monomial(self.n, &self.basis[bi], Rat::one());
                residual = residual.sub(&cb_poly.mul(&xb));
                coeffs[bi] = SymN::from_poly(&cb_poly);
            }
        }
        assert!(
            residual.is_zero(),
            "staircase expansion must be exact (freeness over Sym_n)"
        );
        coeffs
    }
}

fn apply_diff_word(word: &[usize], p: &PolyN) -> PolyN {
    let mut cur = p.clone();
    for &i in word {
        cur = cur.divided_difference(i);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

fn constant_value(p: &PolyN) -> Rat {
    if p.is_zero() {
        return Rat::zero();
    }
    assert_eq!(p.homogeneous_degree(), Some(0), "expected a constant");
    p.coeff(&vec![0; p.nvars()])
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// A reduced word (1-based adjacent transposition indices) obtained by
/// resolving the first descent until sorted.
fn descent_word(perm: &[usize]) -> Vec<usize> {
    let mut w = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            break;
        };
        w.swap(i, i + 1);
        word.push(i + 1);
    }
    word
}

/// The n!×n! matrix of an element over `Sym_n` in the staircase basis.
#[derive(Clone, PartialEq, Eq)]
pub struct NHMatrix {
    n: usize,
    basis: Vec<Vec<u32>>,
    entries: Vec<Vec<SymN>>,
}

impl NHMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn entry(&self, row: usize, col: usize) -> &SymN {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<SymN>] {
        &self.entries
    }

    pub fn identity(n: usize) -> Self {
        let basis = staircase_exponents(n);
        let size = basis.len();
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { SymN::one(n) } else { SymN::zero(n) })
                    .collect()
            })
            .collect();
        NHMatrix { n, basis, entries }
    }

    pub fn mul(&self, other: &NHMatrix) -> NHMatrix {
        assert_eq!(self.n, other.n);
        let size = self.size();
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let mut acc = SymN::zero(self.n);
                        for k in 0..size {
                            if !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero() {
                                acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        NHMatrix {
            n: self.n,
            basis: self.basis.clone(),
            entries,
        }
    }

    /// Matrix trace, landing in `Sym_n`.
    pub fn trace(&self) -> SymN {
        let mut acc = SymN::zero(self.n);
        for i in 0..self.size() {
            acc = acc.add(&self.entries[i][i]);
        }
        acc
    }
}

impl fmt::Debug for NHMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "NHMatrix(n={}) [", self.n)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| format!("{e:?}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The image of an element under the isomorphism with `Mat(n!, Sym_n)`.
pub fn to_matrix(e: &NHElement) -> NHMatrix {
    let expander = StaircaseExpander::new(e.n());
    to_matrix_with(&expander, e)
}

/// Matrix via a reusable expander (the layer tables only depend on `n`).
pub fn to_matrix_with(expander: &StaircaseExpander, e: &NHElement) -> NHMatrix {
    let n = e.n();
    let basis = expander.basis().to_vec();
    let size = basis.len();
    let mut entries: Vec<Vec<SymN>> = vec![vec![SymN::zero(n); size]; size];
    for (col, a) in basis.iter().enumerate() {
        let xa = PolyN::monomial(n, a, Rat::one());
        let image = act(e, &xa).expect("strand counts agree by construction");
        for (row, c) in expander.expand(&image).into_iter().enumerate() {
            entries[row][col] = c;
        }
    }
    NHMatrix { n, basis, entries }
}

/// A trace class in `Tr(NH_n) = Sym_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceClassNH {
    value: SymN,
}

impl TraceClassNH {
    pub fn value(&self) -> &SymN {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// The trace decategorification map: matrix trace of the image in
/// `Mat(n!, Sym_n)`.
pub fn trace_class(e: &NHElement) -> TraceClassNH {
    TraceClassNH {
        value: to_matrix(e).trace(),
    }
}

pub fn trace_class_with(expander: &StaircaseExpander, e: &NHElement) -> TraceClassNH {
    TraceClassNH {
        value: to_matrix_with(expander, e).trace(),
    }
}

/// The standard basis class: trace of `x^lambda e_n` for a partition with at
/// most `n` parts.
pub fn standard_basis_class(n: usize, lam: &Partition) -> Result<TraceClassNH> {
    if lam.len() > n {
        return Err(Error::TooManyParts {
            got: lam.len(),
            max: n,
        });
    }
    let mut letters = Vec::new();
    for (k, &part) in lam.parts().iter().enumerate() {
        for _ in 0..part {
            letters.push(Letter::X(k + 1));
        }
    }
    let x_lam = NHElement::from_letters(n, letters)?;
    Ok(trace_class(&x_lam.mul(&idempotent_e(n))))
}

// ---------------------------------------------------------------------------
// Expression parser (CLI text grammar)
// ---------------------------------------------------------------------------

/// Parses `term (('+'|'-') term)*` with `term := coeff? factor+ | coeff` and
/// `factor := "x"INT | "d"INT`, e.g. `3 x1 d1 - d1 x2`.
pub fn parse_nh_expr(n: usize, input: &str) -> Result<NHElement> {
    let mut out = NHElement::zero(n);
    let mut rest = input.trim();
    if rest.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = Rat::one();
        if !first {
            let c = rest.chars().next().unwrap();
            sign = match c {
                '+' => Rat::one(),
                '-' => -Rat::one(),
                _ => return Err(Error::Parse(format!("expected '+' or '-' before `{rest}`"))),
            };
            rest = rest[1..].trim_start();
        } else if let Some(stripped) = rest.strip_prefix('-') {
            sign = -Rat::one();
            rest = stripped.trim_start();
        }
        first = false;
        let (term, remaining) = parse_nh_term(n, rest)?;
        out = out.add(&term.scale(&sign));
        rest = remaining.trim_start();
    }
    Ok(out)
}

fn parse_nh_term(n: usize, input: &str) -> Result<(NHElement, &str)> {
    let mut rest = input;
    let mut coeff = Rat::one();
    let mut saw_any = false;
    if rest.starts_with(|c: char| c.is_ascii_digit()) {
        let end = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '/'))
            .unwrap_or(rest.len());
        coeff = crate::ratio::parse_rat(&rest[..end])?;
        rest = rest[end..].trim_start();
        saw_any = true;
    }
    let mut letters = Vec::new();
    loop {
        let mut chars = rest.chars();
        match chars.next() {
            Some(c @ ('x' | 'd')) => {
                let digits: String = chars.take_while(|c| c.is_ascii_digit()).collect();
                if digits.is_empty() {
                    return Err(Error::Parse(format!("generator needs an index in `{rest}`")));
                }
                let idx: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index in `{rest}`")))?;
                letters.push(if c == 'x' {
                    Letter::X(idx)
                } else {
                    Letter::D(idx)
                });
                rest = rest[1 + digits.len()..].trim_start();
                saw_any = true;
            }
            _ => break,
        }
    }
    if !saw_any {
        return Err(Error::Parse(format!("expected a term at `{input}`")));
    }
    let word = NHWord::new(n, letters)?;
    let mut e = NHElement::zero(n);
    e.add_term(word, coeff);
    Ok((e, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;
    use crate::symfunc::SymFn;

    fn x(i: usize) -> Letter {
        Letter::X(i)
    }
    fn d(i: usize) -> Letter {
        Letter::D(i)
    }
    fn el(n: usize, letters: &[Letter]) -> NHElement {
        NHElement::from_letters(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn action_examples() {
        let n = 2;
        let x1 = PolyN::var(n, 1).unwrap();
        assert_eq!(act(&el(n, &[d(1)]), &x1).unwrap(), PolyN::one(n));
        assert!(act(&el(n, &[d(1)]), &PolyN::one(n)).unwrap().is_zero());
        // x1 d1 fixes x_1
        assert_eq!(act(&el(n, &[x(1), d(1)]), &x1).unwrap(), x1);
        // strand mismatch is an error
        assert!(act(&el(3, &[d(1)]), &x1).is_err());
    }

    #[test]
    fn equals_examples() {
        let n = 2;
        let lhs = el(n, &[x(1), d(1)]).sub(&el(n, &[d(1), x(2)]));
        assert!(equals(&lhs, &NHElement::identity(n)).unwrap());
        assert!(equals(&el(n, &[d(1), d(1)]), &NHElement::zero(n)).unwrap());
        assert!(equals(&el(n, &[x(1), x(2)]), &el(n, &[x(2), x(1)])).unwrap());
    }

    #[test]
    fn relation_report() {
        for n in 1..=4 {
            let report = verify_relations(n);
            assert!(report.all_pass(), "relations fail for n={n}");
        }
        // n=1 is a vacuous pass: no crossing generators at all
        assert!(verify_relations(1).checks.is_empty());
        assert!(verify_relations(1).all_pass());
    }

    #[test]
    fn idempotents() {
        assert_eq!(idempotent_e(1), NHElement::identity(1));
        assert_eq!(idempotent_e(2), el(2, &[x(1), d(1)]));
        assert_eq!(
            idempotent_e(3),
            el(3, &[x(1), x(1), x(2), d(1), d(2), d(1)])
        );
        for n in 1..=4 {
            let e = idempotent_e(n);
            assert!(equals(&e.mul(&e), &e).unwrap(), "e_{n} must be idempotent");
            assert_eq!(e.homogeneous_degree(), Some(0));
        }
    }

    #[test]
    fn staircase_basis_order() {
        assert_eq!(staircase_exponents(2), vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(staircase_exponents(3).len(), 6);
        assert_eq!(staircase_exponents(4).len(), 24);
    }

    #[test]
    fn matrix_examples() {
        let n = 2;
        // d1 -> [[0,1],[0,0]] in basis (1, x_1)
        let m = to_matrix(&el(n, &[d(1)]));
        assert!(m.entry(0, 0).is_zero());
        assert_eq!(*m.entry(0, 1), SymN::one(n));
        assert!(m.entry(1, 0).is_zero());
        assert!(m.entry(1, 1).is_zero());
        // x1 -> [[0, -e_2],[1, e_1]]
        let m = to_matrix(&el(n, &[x(1)]));
        assert!(m.entry(0, 0).is_zero());
        assert_eq!(*m.entry(0, 1), SymN::e(n, 2).neg());
        assert_eq!(*m.entry(1, 0), SymN::one(n));
        assert_eq!(*m.entry(1, 1), SymN::e(n, 1));
        // identity word -> identity matrix, any n
        for n in 1..=3 {
            assert_eq!(to_matrix(&NHElement::identity(n)), NHMatrix::identity(n));
        }
    }

    #[test]
    fn trace_examples() {
        let n = 2;
        assert!(trace_class(&el(n, &[d(1)])).is_zero());
        assert_eq!(
            *trace_class(&NHElement::identity(n)).value(),
            SymN::constant(n, rat(2))
        );
        assert_eq!(*trace_class(&el(n, &[x(1), d(1)])).value(), SymN::one(n));
        // dotted-crossing antisymmetry: [x1 d1] = -[x2 d1]
        assert_eq!(
            trace_class(&el(n, &[x(1), d(1)])).value().clone(),
            trace_class(&el(n, &[x(2), d(1)])).value().neg()
        );
    }

    #[test]
    fn standard_basis_examples() {
        // n=2, empty partition: trace of e_2 is 1
        assert_eq!(
            *standard_basis_class(2, &Partition::empty()).unwrap().value(),
            SymN::one(2)
        );
        // n=1: NH_1 = Z[x1], class of (k) is h_k
        for k in 1..=4 {
            assert_eq!(
                *standard_basis_class(1, &Partition::single(k))
                    .unwrap()
                    .value(),
                SymN::project(1, &SymFn::h(k))
            );
        }
        // n=2, (1): nonzero of degree 2
        let c = standard_basis_class(2, &Partition::single(1)).unwrap();
        assert!(!c.is_zero());
        assert_eq!(c.value().homogeneous_degree(), Some(2));
        // too many parts
        assert!(standard_basis_class(2, &Partition::new(vec![1, 1, 1]).unwrap()).is_err());
    }

    #[test]
    fn parser() {
        let e = parse_nh_expr(2, "3 x1 d1 - d1 x2").unwrap();
        let expected = el(2, &[x(1), d(1)])
            .scale(&rat(3))
            .sub(&el(2, &[d(1), x(2)]));
        assert_eq!(e, expected);
        assert_eq!(parse_nh_expr(2, "1").unwrap(), NHElement::identity(2));
        assert_eq!(parse_nh_expr(3, "x2d2").unwrap(), el(3, &[x(2), d(2)]));
        assert!(parse_nh_expr(2, "x3").is_err());
        assert!(parse_nh_expr(2, "d2").is_err());
        assert!(parse_nh_expr(2, "").is_err());
        assert!(parse_nh_expr(2, "x1 +").is_err());
        assert!(parse_nh_expr(2, "y1").is_err());
    }
}
