//! The center Z(λ) of categorified quantum sl_n as a polynomial ring in
//! spade-normalized clockwise bubbles, with fake bubbles, power sums, and
//! the four bubble-slide families.
//!
//! A clockwise bubble on node `i` with spade offset `alpha >= 1` is a free
//! polynomial generator `b_{i,alpha}` of degree `2 alpha`, for every weight
//! alike; counterclockwise and absolute-dot bubbles are derived views.  The
//! spade offset of an absolute bubble with `m` dots is `m - (lambda_i - 1)`
//! clockwise and `m - (-lambda_i - 1)` counterclockwise; offsets below zero
//! vanish and offset zero is the identity.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::cartan::{CartanData, Weight};
use crate::error::Result;
use crate::ratio::{coeff_prefix, rat, rat_pow, Rat};

/// A multiset of bubble generators `(node, alpha)`, kept sorted.
pub type BubbleMonomial = Vec<(usize, u32)>;

/// An element of Z(λ): a polynomial in the clockwise spade generators with
/// exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CenterElement {
    weight: Weight,
    poly: BTreeMap<BubbleMonomial, Rat>,
}

impl CenterElement {
    pub fn zero(weight: Weight) -> Self {
        CenterElement {
            weight,
            poly: BTreeMap::new(),
        }
    }

    pub fn unit(weight: Weight) -> Self {
        CenterElement::scalar(weight, Rat::one())
    }

    pub fn scalar(weight: Weight, c: Rat) -> Self {
        let mut e = CenterElement::zero(weight);
        e.add_monomial(Vec::new(), c);
        e
    }

    /// The generator `b_{i,alpha}`, `alpha >= 1`.
    pub fn generator(cd: &CartanData, weight: Weight, i: usize, alpha: u32) -> Result<Self> {
        cd.check_node(i)?;
        assert!(alpha >= 1, "spade generators have positive offset");
        let mut e = CenterElement::zero(weight);
        e.add_monomial(vec![(i, alpha)], Rat::one());
        Ok(e)
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn poly(&self) -> &BTreeMap<BubbleMonomial, Rat> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn add_monomial(&mut self, mut mono: BubbleMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        mono.sort_unstable();
        use std::collections::btree_map::Entry;
        match self.poly.entry(mono) {
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

    pub fn add(&self, other: &CenterElement) -> CenterElement {
        assert_eq!(
            self.weight, other.weight,
            "center elements live at a fixed weight"
        );
        let mut out = self.clone();
        for (m, c) in &other.poly {
            out.add_monomial(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CenterElement) -> CenterElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CenterElement {
        CenterElement {
            weight: self.weight.clone(),
            poly: self
                .poly
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> CenterElement {
        if c.is_zero() {
            return CenterElement::zero(self.weight.clone());
        }
        CenterElement {
            weight: self.weight.clone(),
            poly: self.poly.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &CenterElement) -> CenterElement {
        assert_eq!(self.weight, other.weight);
        let mut out = CenterElement::zero(self.weight.clone());
        for (ma, ca) in &self.poly {
            for (mb, cb) in &other.poly {
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                out.add_monomial(m, ca * cb);
            }
        }
        out
    }

    /// Re-roots the element at another weight.  Spade-normalized generators
    /// mean the same polynomial data makes sense at every weight.
    pub fn at_weight(&self, weight: Weight) -> CenterElement {
        CenterElement {
            weight,
            poly: self.poly.clone(),
        }
    }

    /// Some(degree) when homogeneous (generator `b_{i,alpha}` has degree
    /// `2 alpha`); the zero element reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.poly.keys().map(|m| monomial_degree(m));
        let Some(d) = it.next() else { return Some(0) };
        it.all(|x| x == d).then_some(d)
    }
}

pub fn monomial_degree(m: &BubbleMonomial) -> u32 {
    2 * m.iter().map(|&(_, a)| a).sum::<u32>()
}

impl fmt::Debug for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_empty() {
                write!(f, "{}", crate::ratio::format_rat(&mag))?;
            } else {
                let gens: Vec<String> =
                    m.iter().map(|&(i, a)| format!("b[{i},{a}]")).collect();
                write!(f, "{}{}", coeff_prefix(&mag), gens.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Clockwise spade bubble as a center element: `1` for offset 0, the
/// generator for positive offsets, zero below.
fn cw_spade(cd: &CartanData, i: usize, offset: i64, weight: &Weight) -> Result<CenterElement> {
    if offset < 0 {
        return Ok(CenterElement::zero(weight.clone()));
    }
    if offset == 0 {
        return Ok(CenterElement::unit(weight.clone()));
    }
    CenterElement::generator(cd, weight.clone(), i, offset as u32)
}

thread_local! {
    /// Node-independent cc expansions: row `alpha` holds the polynomial as
    /// (offset multiset, coefficient) pairs.
    static CC_TABLE: std::cell::RefCell<Vec<Vec<(Vec<u32>, Rat)>>> =
        const { std::cell::RefCell::new(Vec::new()) };
}

fn cc_row(alpha: u32) -> Vec<(Vec<u32>, Rat)> {
    CC_TABLE.with(|t| {
        let mut table = t.borrow_mut();
        if table.is_empty() {
            table.push(vec![(Vec::new(), Rat::one())]);
        }
        while table.len() <= alpha as usize {
            // cc_a = -sum_{s<a} cc_s b_{a-s}
            let a = table.len() as u32;
            let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
            for s in 0..a {
                for (mono, c) in &table[s as usize] {
                    let mut m = mono.clone();
                    m.push(a - s);
                    m.sort_unstable();
                    let e = acc.entry(m).or_insert_with(Rat::zero);
                    *e -= c;
                }
            }
            acc.retain(|_, c| !c.is_zero());
            table.push(acc.into_iter().collect());
        }
        table[alpha as usize].clone()
    })
}

/// Counterclockwise spade bubble expressed in clockwise generators through
/// the convolution recursion `sum_{a+b=alpha} cc_a c_b = delta_{alpha,0}`.
/// Negative offsets return zero.
pub fn cc_bubble(cd: &CartanData, i: usize, alpha: i64, weight: &Weight) -> Result<CenterElement> {
    cd.check_node(i)?;
    if alpha < 0 {
        return Ok(CenterElement::zero(weight.clone()));
    }
    let mut out = CenterElement::zero(weight.clone());
    for (offsets, c) in cc_row(alpha as u32) {
        out.add_monomial(offsets.into_iter().map(|a| (i, a)).collect(), c);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

/// Converts an absolute-dot bubble (real `m >= 0` dots) to spade form.
pub fn from_absolute(
    cd: &CartanData,
    i: usize,
    orientation: Orientation,
    dots: u32,
    weight: &Weight,
) -> Result<CenterElement> {
    cd.check_node(i)?;
    let li = weight.pairing(i);
    match orientation {
        Orientation::Clockwise => {
            let offset = dots as i64 - (li - 1);
            cw_spade(cd, i, offset, weight)
        }
        Orientation::CounterClockwise => {
            let offset = dots as i64 - (-li - 1);
            cc_bubble(cd, i, offset, weight)
        }
    }
}

/// The same conversion allowing fake (negative) dot counts.
pub fn from_spade(
    cd: &CartanData,
    i: usize,
    orientation: Orientation,
    offset: i64,
    weight: &Weight,
) -> Result<CenterElement> {
    match orientation {
        Orientation::Clockwise => cw_spade(cd, i, offset, weight),
        Orientation::CounterClockwise => cc_bubble(cd, i, offset, weight),
    }
}

thread_local! {
    static P_TABLE: std::cell::RefCell<Vec<Vec<(Vec<u32>, Rat)>>> =
        const { std::cell::RefCell::new(Vec::new()) };
}

fn power_row(r: u32) -> Vec<(Vec<u32>, Rat)> {
    assert!(r >= 1);
    P_TABLE.with(|t| {
        let mut table = t.borrow_mut();
        while table.len() < r as usize {
            let r = table.len() as u32 + 1;
            let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
            for a in 0..=r {
                let b = r - a;
                for (mono, c) in cc_row(b) {
                    let mut m = mono.clone();
                    if a > 0 {
                        m.push(a);
                        m.sort_unstable();
                    }
                    let e = acc.entry(m).or_insert_with(Rat::zero);
                    *e += c * rat(a as i64 + 1);
                }
            }
            acc.retain(|_, c| !c.is_zero());
            table.push(acc.into_iter().collect());
        }
        table[r as usize - 1].clone()
    })
}

/// The power sum `p_{i,r}(lambda)`:
/// `sum_{a+b=r} (a+1) c_{s+a} cc_{s+b}` for `r >= 1`, and `lambda_i` at r=0.
pub fn power_sum(cd: &CartanData, i: usize, r: u32, weight: &Weight) -> Result<CenterElement> {
    cd.check_node(i)?;
    if r == 0 {
        return Ok(CenterElement::scalar(
            weight.clone(),
            rat(weight.pairing(i)),
        ));
    }
    let mut out = CenterElement::zero(weight.clone());
    for (offsets, c) in power_row(r) {
        out.add_monomial(offsets.into_iter().map(|a| (i, a)).collect(), c);
    }
    Ok(out)
}

/// The three displayed expressions for `p_{i,r}`; they agree for `r >= 1`.
pub fn power_sum_formulas(
    cd: &CartanData,
    i: usize,
    r: u32,
    weight: &Weight,
) -> Result<[CenterElement; 3]> {
    cd.check_node(i)?;
    let mut f1 = CenterElement::zero(weight.clone());
    let mut f2 = CenterElement::zero(weight.clone());
    let mut f3 = CenterElement::zero(weight.clone());
    for a in 0..=r {
        let b = r - a;
        let cw_a = cw_spade(cd, i, a as i64, weight)?;
        let cc_b = cc_bubble(cd, i, b as i64, weight)?;
        f1 = f1.add(&cw_a.mul(&cc_b).scale(&rat(a as i64 + 1)));
        f2 = f2.sub(&cw_a.mul(&cc_b).scale(&rat(b as i64 + 1)));
        // third form: -sum a * c_{s+b} cc_{s+a}
        let cw_b = cw_spade(cd, i, b as i64, weight)?;
        let cc_a = cc_bubble(cd, i, a as i64, weight)?;
        f3 = f3.sub(&cw_b.mul(&cc_a).scale(&rat(a as i64)));
    }
    Ok([f1, f2, f3])
}

// ---------------------------------------------------------------------------
// Bubble slides
// ---------------------------------------------------------------------------

/// Strand orientation seen from the bubble being slid: crossing an `Up`
/// strand takes the ambient weight to `lambda + alpha_j`, a `Down` strand to
/// `lambda - alpha_j`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StrandDir {
    Up,
    Down,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Strand {
    pub node: usize,
    pub dir: StrandDir,
}

impl Strand {
    pub fn up(node: usize) -> Self {
        Strand {
            node,
            dir: StrandDir::Up,
        }
    }

    pub fn down(node: usize) -> Self {
        Strand {
            node,
            dir: StrandDir::Down,
        }
    }

    pub fn shifted_weight(&self, cd: &CartanData, weight: &Weight) -> Weight {
        match self.dir {
            StrandDir::Up => weight.add_alpha(cd, self.node),
            StrandDir::Down => weight.sub_alpha(cd, self.node),
        }
    }
}

/// One output term of a slide: a bubble polynomial at the shifted weight
/// times `dots` extra dots left on the strand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DottedStrandTerm {
    pub strand: Strand,
    pub dots: u32,
    pub coefficient: CenterElement,
}

/// Slide table rows: `(spade offset, extra strand dots, scalar)`.
fn slide_rows(cd: &CartanData, i: usize, alpha: u32, orientation: Orientation, strand: &Strand) -> Vec<(i64, u32, Rat)> {
    let j = strand.node;
    let a = alpha as i64;
    if cd.a(i, j) == 0 && i != j {
        return vec![(a, 0, Rat::one())];
    }
    let v = cd.v(i, j);
    use Orientation::*;
    use StrandDir::*;
    match (strand.dir, orientation, i == j) {
        // toward lambda + alpha_j
        (Up, Clockwise, true) => vec![
            (a - 2, 2, Rat::one()),
            (a - 1, 1, rat(-2)),
            (a, 0, Rat::one()),
        ],
        (Up, CounterClockwise, true) => (0..=alpha)
            .map(|f| (f as i64, alpha - f, rat((alpha + 1 - f) as i64)))
            .collect(),
        (Up, Clockwise, false) => (0..=alpha)
            .map(|f| (a - f as i64, f, rat_pow(&-v.clone(), f)))
            .collect(),
        (Up, CounterClockwise, false) => vec![(a, 0, Rat::one()), (a - 1, 1, v)],
        // toward lambda - alpha_j
        (Down, Clockwise, true) => (0..=alpha)
            .map(|f| (f as i64, alpha - f, rat((alpha + 1 - f) as i64)))
            .collect(),
        (Down, CounterClockwise, true) => vec![
            (a - 2, 2, Rat::one()),
            (a - 1, 1, rat(-2)),
            (a, 0, Rat::one()),
        ],
        (Down, Clockwise, false) => vec![(a, 0, Rat::one()), (a - 1, 1, v)],
        (Down, CounterClockwise, false) => (0..=alpha)
            .map(|f| (a - f as i64, f, rat_pow(&-v.clone(), f)))
            .collect(),
    }
}

/// Slides a single spade bubble past a strand.  Total degree (bubble degree
/// plus twice the dots) is conserved term by term; negative offsets drop out.
pub fn slide_bubble_past_strand(
    cd: &CartanData,
    gen: (usize, u32, Orientation),
    strand: Strand,
    weight: &Weight,
) -> Result<Vec<DottedStrandTerm>> {
    let (i, alpha, orientation) = gen;
    cd.check_node(i)?;
    cd.check_node(strand.node)?;
    let shifted = strand.shifted_weight(cd, weight);
    let mut out = Vec::new();
    for (offset, dots, scalar) in slide_rows(cd, i, alpha, orientation, &strand) {
        let bubble = from_spade(cd, i, orientation, offset, &shifted)?.scale(&scalar);
        if bubble.is_zero() {
            continue;
        }
        out.push(DottedStrandTerm {
            strand,
            dots,
            coefficient: bubble,
        });
    }
    Ok(merge_terms(strand, out, &shifted))
}

fn merge_terms(
    strand: Strand,
    terms: Vec<DottedStrandTerm>,
    shifted: &Weight,
) -> Vec<DottedStrandTerm> {
    let mut by_dots: BTreeMap<u32, CenterElement> = BTreeMap::new();
    for t in terms {
        let entry = by_dots
            .entry(t.dots)
            .or_insert_with(|| CenterElement::zero(shifted.clone()));
        *entry = entry.add(&t.coefficient);
    }
    by_dots
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(dots, coefficient)| DottedStrandTerm {
            strand,
            dots,
            coefficient,
        })
        .collect()
}

/// A dots -> coefficient table, the working form of a slid element.
type DotTable = BTreeMap<u32, CenterElement>;

fn dot_convolve(a: &DotTable, b: &DotTable, weight: &Weight) -> DotTable {
    let mut out = DotTable::new();
    for (da, ca) in a {
        for (db, cb) in b {
            let prod = ca.mul(cb);
            if prod.is_zero() {
                continue;
            }
            let entry = out
                .entry(da + db)
                .or_insert_with(|| CenterElement::zero(weight.clone()));
            *entry = entry.add(&prod);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Slides a whole center element past a strand, accumulating strand dots
/// additively across the factors of each monomial.  Repeated generators are
/// handled through shared power tables so that large elements with repeated
/// factors stay cheap.
pub fn slide_center_past_strand(
    cd: &CartanData,
    e: &CenterElement,
    strand: Strand,
) -> Result<Vec<DottedStrandTerm>> {
    let shifted = strand.shifted_weight(cd, e.weight());
    // power tables: (gen) -> [slide(gen)^0, slide(gen)^1, ...]
    let mut pows: BTreeMap<(usize, u32), Vec<DotTable>> = BTreeMap::new();
    let mut unit_table = DotTable::new();
    unit_table.insert(0, CenterElement::unit(shifted.clone()));
    let mut total = DotTable::new();
    for (mono, coeff) in e.poly() {
        // run-length encode the sorted generator multiset
        let mut acc = unit_table.clone();
        let mut idx = 0;
        while idx < mono.len() {
            let gen = mono[idx];
            let mut count = 0usize;
            while idx < mono.len() && mono[idx] == gen {
                count += 1;
                idx += 1;
            }
            let table = pows.entry(gen).or_insert_with(|| vec![unit_table.clone()]);
            if table.len() <= count {
                let base: DotTable = slide_bubble_past_strand(
                    cd,
                    (gen.0, gen.1, Orientation::Clockwise),
                    strand,
                    e.weight(),
                )?
                .into_iter()
                .map(|t| (t.dots, t.coefficient))
                .collect();
                while table.len() <= count {
                    let next = dot_convolve(table.last().unwrap(), &base, &shifted);
                    table.push(next);
                }
            }
            acc = dot_convolve(&acc, &table[count], &shifted);
        }
        for (d, c) in acc {
            let entry = total
                .entry(d)
                .or_insert_with(|| CenterElement::zero(shifted.clone()));
            *entry = entry.add(&c.scale(coeff));
        }
    }
    Ok(total
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(dots, coefficient)| DottedStrandTerm {
            strand,
            dots,
            coefficient,
        })
        .collect())
}

/// Folds a term list into a dots -> coefficient map for comparisons.
pub fn terms_as_map(terms: &[DottedStrandTerm]) -> BTreeMap<u32, CenterElement> {
    terms
        .iter()
        .map(|t| (t.dots, t.coefficient.clone()))
        .collect()
}

/// Verifies the closed-form power sum slide against the elementary slides.
///
/// Sliding `p_{i,r}(lambda)` toward `lambda + alpha_j` gives
/// `p_{i,r}(lambda + alpha_j)` plus a dot correction `-2 (r dots)` for
/// `i = j` and `(-v_ij)^r (r dots)` for adjacent colors; the opposite
/// direction negates the corrections.  (At r = 0 both sides collapse to the
/// weight pairing, which the shifted pairing plus correction reproduces.)
pub fn power_slide_check(
    cd: &CartanData,
    i: usize,
    j: usize,
    r: u32,
    weight: &Weight,
) -> Result<bool> {
    cd.check_node(i)?;
    cd.check_node(j)?;
    let p = power_sum(cd, i, r, weight)?;
    for dir in [StrandDir::Up, StrandDir::Down] {
        let strand = Strand { node: j, dir };
        let shifted = strand.shifted_weight(cd, weight);
        let lhs = terms_as_map(&slide_center_past_strand(cd, &p, strand)?);
        let mut rhs: BTreeMap<u32, CenterElement> = BTreeMap::new();
        rhs.insert(0, power_sum(cd, i, r, &shifted)?);
        let correction = if i == j {
            Some(rat(-2))
        } else if cd.a(i, j) == -1 {
            Some(rat_pow(&-cd.v(i, j), r))
        } else {
            None
        };
        if let Some(c) = correction {
            let c = match dir {
                StrandDir::Up => c,
                StrandDir::Down => -c,
            };
            let entry = rhs
                .entry(r)
                .or_insert_with(|| CenterElement::zero(shifted.clone()));
            *entry = entry.add(&CenterElement::scalar(shifted.clone(), c));
        }
        rhs.retain(|_, c| !c.is_zero());
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
