//! The current algebra U(sl_n[t]) acting on `Z = ⊕_λ Z(λ)`.
//!
//! `ξ_{i,r}` acts on the λ-component by multiplication with
//! `(-1)^{(i+1)r} p_{i,r}(λ)`; `x^±_{i,r}` act by dotted encircling: slide
//! every bubble of the component past an i-colored loop strand, close the
//! loop with `r` plus the accumulated dots as a single bubble on the far
//! side, and apply the same sign twist.
//!
//! The orientation convention for closing a loop is not hardcoded: it is
//! calibrated once, at run time, as the unique choice among the four
//! candidates {clockwise/counterclockwise} × {outer/inner conversion weight}
//! for which `[x⁺_{i,0}, x⁻_{i,0}] = ξ_{i,0}` holds on the unit of Z(λ) for
//! all `λ_i` in `[-4,4]` in sl_2.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bubblecalc::{
    from_absolute, power_sum, slide_center_past_strand, CenterElement, Orientation, Strand,
};
use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};
use crate::ratio::{rat, Rat};

/// A finitely supported vector in `⊕_λ Z(λ)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CenterVector {
    components: BTreeMap<Weight, CenterElement>,
}

impl CenterVector {
    pub fn zero() -> Self {
        CenterVector::default()
    }

    pub fn unit_at(weight: Weight) -> Self {
        CenterVector::from_element(CenterElement::unit(weight))
    }

    pub fn from_element(e: CenterElement) -> Self {
        let mut v = CenterVector::zero();
        v.add_element(e);
        v
    }

    pub fn components(&self) -> &BTreeMap<Weight, CenterElement> {
        &self.components
    }

    pub fn component(&self, weight: &Weight) -> Option<&CenterElement> {
        self.components.get(weight)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add_element(&mut self, e: CenterElement) {
        if e.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.components.entry(e.weight().clone()) {
            Entry::Vacant(v) => {
                v.insert(e);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&e);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &CenterVector) -> CenterVector {
        let mut out = self.clone();
        for e in other.components.values() {
            out.add_element(e.clone());
        }
        out
    }

    pub fn sub(&self, other: &CenterVector) -> CenterVector {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> CenterVector {
        if c.is_zero() {
            return CenterVector::zero();
        }
        CenterVector {
            components: self
                .components
                .iter()
                .map(|(w, e)| (w.clone(), e.scale(c)))
                .collect(),
        }
    }
}

impl fmt::Debug for CenterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, e) in &self.components {
            if !first {
                write!(f, " (+) ")?;
            }
            first = false;
            write!(f, "{w:?}: {e:?}")?;
        }
        Ok(())
    }
}

/// Generators of the idempotented current algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CurrentGen {
    XPlus { node: usize, degree: u32 },
    XMinus { node: usize, degree: u32 },
    Xi { node: usize, degree: u32 },
    Idem { weight: Weight },
}

// ---------------------------------------------------------------------------
// Closure calibration
// ---------------------------------------------------------------------------

/// How a dotted loop is evaluated as a bubble once everything inside has been
/// slid out: the orientation used for `x⁺` (with `x⁻` taking the opposite),
/// and whether the absolute-to-spade conversion reads the outer or the inner
/// region weight.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClosureRule {
    pub plus_orientation: Orientation,
    pub use_outer_weight: bool,
}

const CLOSURE_CANDIDATES: [ClosureRule; 4] = [
    ClosureRule {
        plus_orientation: Orientation::Clockwise,
        use_outer_weight: true,
    },
    ClosureRule {
        plus_orientation: Orientation::Clockwise,
        use_outer_weight: false,
    },
    ClosureRule {
        plus_orientation: Orientation::CounterClockwise,
        use_outer_weight: true,
    },
    ClosureRule {
        plus_orientation: Orientation::CounterClockwise,
        use_outer_weight: false,
    },
];

static CALIBRATED: OnceLock<ClosureRule> = OnceLock::new();

/// The calibrated closure convention; computed once and cached.
pub fn closure_rule() -> ClosureRule {
    *CALIBRATED.get_or_init(|| {
        let passing: Vec<ClosureRule> = CLOSURE_CANDIDATES
            .into_iter()
            .filter(|rule| calibration_passes(*rule))
            .collect();
        assert_eq!(
            passing.len(),
            1,
            "exactly one closure convention satisfies [x+_0, x-_0] = xi_0; got {passing:?}"
        );
        passing[0]
    })
}

/// `[x⁺_0, x⁻_0] = ξ_0` on the unit of Z(λ) for sl_2, λ in [-4,4].
fn calibration_passes(rule: ClosureRule) -> bool {
    let cd = CartanData::sl(2);
    for l in -4..=4i64 {
        let v = CenterVector::unit_at(Weight::from_values(vec![l]));
        let minus = act_x_with_rule(&cd, rule, false, 1, 0, &v).unwrap();
        let plus_minus = act_x_with_rule(&cd, rule, true, 1, 0, &minus).unwrap();
        let plus = act_x_with_rule(&cd, rule, true, 1, 0, &v).unwrap();
        let minus_plus = act_x_with_rule(&cd, rule, false, 1, 0, &plus).unwrap();
        let xi = act_xi(&cd, 1, 0, &v).unwrap();
        if plus_minus.sub(&minus_plus) != xi {
            return false;
        }
    }
    true
}

/// Closes an i-colored loop carrying `dots` dots around a region of weight
/// `inner`, landing in weight `outer`.
fn close_loop(
    cd: &CartanData,
    rule: ClosureRule,
    node: usize,
    plus: bool,
    dots: u32,
    inner: &Weight,
    outer: &Weight,
) -> Result<CenterElement> {
    let orientation = match (plus, rule.plus_orientation) {
        (true, o) => o,
        (false, Orientation::Clockwise) => Orientation::CounterClockwise,
        (false, Orientation::CounterClockwise) => Orientation::Clockwise,
    };
    let conversion_weight = if rule.use_outer_weight { outer } else { inner };
    Ok(from_absolute(cd, node, orientation, dots, conversion_weight)?.at_weight(outer.clone()))
}

// ---------------------------------------------------------------------------
// The four actions
// ---------------------------------------------------------------------------

fn sign_twist(node: usize, degree: u32) -> Rat {
    if ((node as u32 + 1) * degree) % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn act_x_with_rule(
    cd: &CartanData,
    rule: ClosureRule,
    plus: bool,
    node: usize,
    degree: u32,
    v: &CenterVector,
) -> Result<CenterVector> {
    cd.require_current_gate()?;
    cd.check_node(node)?;
    let strand = if plus {
        Strand::up(node)
    } else {
        Strand::down(node)
    };
    let mut out = CenterVector::zero();
    for (weight, z) in v.components() {
        let outer = strand.shifted_weight(cd, weight);
        for term in slide_center_past_strand(cd, z, strand)? {
            let bubble = close_loop(cd, rule, node, plus, degree + term.dots, weight, &outer)?;
            out.add_element(term.coefficient.mul(&bubble));
        }
    }
    Ok(out.scale(&sign_twist(node, degree)))
}

/// `x⁺_{i,r}`: encircling with `r` dots, shifting `Z(λ)` into `Z(λ+α_i)`.
pub fn act_xplus(cd: &CartanData, node: usize, degree: u32, v: &CenterVector) -> Result<CenterVector> {
    act_x_with_rule(cd, closure_rule(), true, node, degree, v)
}

/// `x⁻_{i,s}`: encircling with the opposite loop, into `Z(λ-α_i)`.
pub fn act_xminus(cd: &CartanData, node: usize, degree: u32, v: &CenterVector) -> Result<CenterVector> {
    act_x_with_rule(cd, closure_rule(), false, node, degree, v)
}

/// `ξ_{i,r}`: multiplication by `(-1)^{(i+1)r} p_{i,r}(λ)` on each component.
pub fn act_xi(cd: &CartanData, node: usize, degree: u32, v: &CenterVector) -> Result<CenterVector> {
    cd.require_current_gate()?;
    cd.check_node(node)?;
    let mut out = CenterVector::zero();
    for (weight, z) in v.components() {
        let p = power_sum(cd, node, degree, weight)?;
        out.add_element(z.mul(&p).scale(&sign_twist(node, degree)));
    }
    Ok(out)
}

/// `1_λ`: projection onto the λ-component.
pub fn act_idem(weight: &Weight, v: &CenterVector) -> CenterVector {
    match v.component(weight) {
        Some(e) => CenterVector::from_element(e.clone()),
        None => CenterVector::zero(),
    }
}

/// Dispatch over the generator kinds.
pub fn act(cd: &CartanData, g: &CurrentGen, v: &CenterVector) -> Result<CenterVector> {
    match g {
        CurrentGen::XPlus { node, degree } => act_xplus(cd, *node, *degree, v),
        CurrentGen::XMinus { node, degree } => act_xminus(cd, *node, *degree, v),
        CurrentGen::Xi { node, degree } => act_xi(cd, *node, *degree, v),
        CurrentGen::Idem { weight } => {
            cd.require_current_gate()?;
            if weight.values().len() != cd.num_nodes() {
                return Err(Error::WeightLength {
                    got: weight.values().len(),
                    rank: cd.rank(),
                });
            }
            Ok(act_idem(weight, v))
        }
    }
}

// ---------------------------------------------------------------------------
// Operator expressions
// ---------------------------------------------------------------------------

/// A word of generators, applied rightmost first.
pub type OpWord = Vec<CurrentGen>;

/// A rational combination of operator words.
#[derive(Clone, Debug, Default)]
pub struct OpExpr(pub Vec<(Rat, OpWord)>);

impl OpExpr {
    pub fn word(w: OpWord) -> Self {
        OpExpr(vec![(Rat::one(), w)])
    }

    pub fn scaled(c: Rat, w: OpWord) -> Self {
        OpExpr(vec![(c, w)])
    }

    pub fn plus(mut self, other: OpExpr) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn minus(self, other: OpExpr) -> Self {
        let negated = OpExpr(
            other
                .0
                .into_iter()
                .map(|(c, w)| (-c, w))
                .collect(),
        );
        self.plus(negated)
    }

    /// Commutator `[a, b] = ab - ba` of two single words.
    pub fn commutator(a: &OpWord, b: &OpWord) -> Self {
        let mut ab = a.clone();
        ab.extend(b.iter().cloned());
        let mut ba = b.clone();
        ba.extend(a.iter().cloned());
        OpExpr::word(ab).minus(OpExpr::word(ba))
    }

    /// Applies the combination, sharing the work of common word suffixes:
    /// words are grouped by the generator applied first, which is evaluated
    /// once per group before recursing on the shortened words.
    pub fn apply(&self, cd: &CartanData, v: &CenterVector) -> Result<CenterVector> {
        let words: Vec<(Rat, &[CurrentGen])> =
            self.0.iter().map(|(c, w)| (c.clone(), w.as_slice())).collect();
        apply_shared(cd, words, v)
    }
}

fn apply_shared(
    cd: &CartanData,
    words: Vec<(Rat, &[CurrentGen])>,
    v: &CenterVector,
) -> Result<CenterVector> {
    let mut out = CenterVector::zero();
    let mut groups: Vec<(&CurrentGen, Vec<(Rat, &[CurrentGen])>)> = Vec::new();
    for (c, w) in words {
        match w.split_last() {
            None => out = out.add(&v.scale(&c)),
            Some((last, rest)) => match groups.iter_mut().find(|(g, _)| *g == last) {
                Some((_, list)) => list.push((c, rest)),
                None => groups.push((last, vec![(c, rest)])),
            },
        }
    }
    for (g, list) in groups {
        let vg = act(cd, g, v)?;
        if vg.is_zero() {
            continue;
        }
        out = out.add(&apply_shared(cd, list, &vg)?);
    }
    Ok(out)
}

fn xp(node: usize, degree: u32) -> CurrentGen {
    CurrentGen::XPlus { node, degree }
}

fn xm(node: usize, degree: u32) -> CurrentGen {
    CurrentGen::XMinus { node, degree }
}

fn xi(node: usize, degree: u32) -> CurrentGen {
    CurrentGen::Xi { node, degree }
}

fn xsign(plus: bool, node: usize, degree: u32) -> CurrentGen {
    if plus {
        xp(node, degree)
    } else {
        xm(node, degree)
    }
}

// ---------------------------------------------------------------------------
// Relation harness
// ---------------------------------------------------------------------------

/// One verified (axiom, instance, trial) line.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub axiom: &'static str,
    pub params: String,
    pub trial: usize,
    pub weight_label: String,
    pub pass: bool,
}

impl CheckLine {
    pub fn render(&self) -> String {
        format!(
            "AXIOM {} {} trial={} λ={} {}",
            self.axiom,
            self.params,
            self.trial,
            self.weight_label,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug)]
pub struct CurrentReport {
    pub rank: usize,
    pub seed: u64,
    pub lines: Vec<CheckLine>,
}

impl CurrentReport {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    /// axiom -> (instances, failures)
    pub fn summary(&self) -> BTreeMap<&'static str, (usize, Vec<String>)> {
        let mut out: BTreeMap<&'static str, (usize, Vec<String>)> = BTreeMap::new();
        for l in &self.lines {
            let e = out.entry(l.axiom).or_default();
            e.0 += 1;
            if !l.pass {
                e.1.push(format!("{} trial={}", l.params, l.trial));
            }
        }
        out
    }
}

/// A pseudorandom center vector supported on the weight box: one or two
/// weights, up to three terms each, up to four generators of offset <= 3 per
/// term, coefficients in {-3..3} \ {0}.
pub fn random_center_vector(
    rng: &mut ChaCha8Rng,
    cd: &CartanData,
    lo: i64,
    hi: i64,
) -> CenterVector {
    let nodes = cd.num_nodes();
    let mut v = CenterVector::zero();
    let weights = rng.random_range(1..=2usize);
    for _ in 0..weights {
        let values: Vec<i64> = (0..nodes).map(|_| rng.random_range(lo..=hi)).collect();
        let w = Weight::from_values(values);
        let mut e = CenterElement::zero(w.clone());
        for _ in 0..rng.random_range(1..=3usize) {
            let mut mono = Vec::new();
            for _ in 0..rng.random_range(0..=4usize) {
                let node = rng.random_range(1..=nodes);
                let alpha = rng.random_range(1..=3u32);
                mono.push((node, alpha));
            }
            let mut c = 0i64;
            while c == 0 {
                c = rng.random_range(-3..=3i64);
            }
            e.add_monomial(mono, rat(c));
        }
        v.add_element(e);
    }
    v
}

struct Instance {
    axiom: &'static str,
    params: String,
    expr: OpExpr,
}

fn instances(cd: &CartanData, max_degree: u32) -> Vec<Instance> {
    let nodes = 1..=cd.num_nodes();
    let degs = 0..=max_degree;
    let mut out = Vec::new();
    // C1: [xi_{i,r}, xi_{j,s}] = 0
    for i in nodes.clone() {
        for j in nodes.clone() {
            for r in degs.clone() {
                for s in degs.clone() {
                    out.push(Instance {
                        axiom: "C1",
                        params: format!("i={i} j={j} r={r} s={s}"),
                        expr: OpExpr::commutator(&vec![xi(i, r)], &vec![xi(j, s)]),
                    });
                }
            }
        }
    }
    // C2: [xi_{i,0}, x±_{j,k}] = ± a_ij x±_{j,k}
    for i in nodes.clone() {
        for j in nodes.clone() {
            for k in degs.clone() {
                for plus in [true, false] {
                    let sign = if plus { 1 } else { -1 };
                    let expr = OpExpr::commutator(&vec![xi(i, 0)], &vec![xsign(plus, j, k)]).minus(
                        OpExpr::scaled(rat(sign * cd.a(i, j)), vec![xsign(plus, j, k)]),
                    );
                    out.push(Instance {
                        axiom: "C2",
                        params: format!("sign={} i={i} j={j} k={k}", if plus { "+" } else { "-" }),
                        expr,
                    });
                }
            }
        }
    }
    // C3: [xi_{i,r}, x±_{j,k}] = ± a_ij x±_{j,r+k}
    for i in nodes.clone() {
        for j in nodes.clone() {
            for r in degs.clone() {
                for k in degs.clone() {
                    for plus in [true, false] {
                        let sign = if plus { 1 } else { -1 };
                        let expr = OpExpr::commutator(&vec![xi(i, r)], &vec![xsign(plus, j, k)])
                            .minus(OpExpr::scaled(
                                rat(sign * cd.a(i, j)),
                                vec![xsign(plus, j, r + k)],
                            ));
                        out.push(Instance {
                            axiom: "C3",
                            params: format!(
                                "sign={} i={i} j={j} r={r} k={k}",
                                if plus { "+" } else { "-" }
                            ),
                            expr,
                        });
                    }
                }
            }
        }
    }
    // C4: [x±_{i,k+1}, x±_{j,l}] = [x±_{i,k}, x±_{j,l+1}]
    for i in nodes.clone() {
        for j in nodes.clone() {
            for k in 0..max_degree {
                for l in 0..max_degree {
                    for plus in [true, false] {
                        let expr = OpExpr::commutator(
                            &vec![xsign(plus, i, k + 1)],
                            &vec![xsign(plus, j, l)],
                        )
                        .minus(OpExpr::commutator(
                            &vec![xsign(plus, i, k)],
                            &vec![xsign(plus, j, l + 1)],
                        ));
                        out.push(Instance {
                            axiom: "C4",
                            params: format!(
                                "sign={} i={i} j={j} k={k} l={l}",
                                if plus { "+" } else { "-" }
                            ),
                            expr,
                        });
                    }
                }
            }
        }
    }
    // C5: [x+_{i,k}, x-_{j,l}] = delta_ij xi_{i,k+l}
    for i in nodes.clone() {
        for j in nodes.clone() {
            for k in degs.clone() {
                for l in degs.clone() {
                    let mut expr = OpExpr::commutator(&vec![xp(i, k)], &vec![xm(j, l)]);
                    if i == j {
                        expr = expr.minus(OpExpr::word(vec![xi(i, k + l)]));
                    }
                    out.push(Instance {
                        axiom: "C5",
                        params: format!("i={i} j={j} k={k} l={l}"),
                        expr,
                    });
                }
            }
        }
    }
    // C6 (Serre): i != j, m = 1 - a_ij symmetrizations
    for i in nodes.clone() {
        for j in nodes.clone() {
            if i == j {
                continue;
            }
            for plus in [true, false] {
                match cd.a(i, j) {
                    -1 => {
                        // m = 2: sum over orderings of (k1,k2) and splits s with
                        // signs (+1, -2, +1)
                        for k1 in degs.clone() {
                            for k2 in degs.clone() {
                                for l in degs.clone() {
                                    let mut expr = OpExpr::default();
                                    for (a, b) in [(k1, k2), (k2, k1)] {
                                        expr = expr
                                            .plus(OpExpr::word(vec![
                                                xsign(plus, j, l),
                                                xsign(plus, i, a),
                                                xsign(plus, i, b),
                                            ]))
                                            .plus(OpExpr::scaled(
                                                rat(-2),
                                                vec![
                                                    xsign(plus, i, a),
                                                    xsign(plus, j, l),
                                                    xsign(plus, i, b),
                                                ],
                                            ))
                                            .plus(OpExpr::word(vec![
                                                xsign(plus, i, a),
                                                xsign(plus, i, b),
                                                xsign(plus, j, l),
                                            ]));
                                    }
                                    out.push(Instance {
                                        axiom: "C6",
                                        params: format!(
                                            "sign={} i={i} j={j} k1={k1} k2={k2} l={l}",
                                            if plus { "+" } else { "-" }
                                        ),
                                        expr,
                                    });
                                }
                            }
                        }
                    }
                    0 => {
                        // m = 1 reduces to plain commutation
                        for k in degs.clone() {
                            for l in degs.clone() {
                                out.push(Instance {
                                    axiom: "C6",
                                    params: format!(
                                        "sign={} i={i} j={j} k={k} l={l}",
                                        if plus { "+" } else { "-" }
                                    ),
                                    expr: OpExpr::commutator(
                                        &vec![xsign(plus, i, k)],
                                        &vec![xsign(plus, j, l)],
                                    ),
                                });
                            }
                        }
                    }
                    _ => unreachable!("type A off-diagonal entries are 0 or -1"),
                }
            }
        }
    }
    out
}

/// Evaluates every axiom instance on seeded pseudorandom vectors and reports
/// one pass/fail line per (axiom, instance, trial).  Deterministic given the
/// seed: each instance draws from its own stream.
pub fn verify_current_relations(
    cd: &CartanData,
    weight_lo: i64,
    weight_hi: i64,
    max_degree: u32,
    trials: usize,
    seed: u64,
) -> Result<CurrentReport> {
    cd.require_current_gate()?;
    let mut lines = Vec::new();
    for (idx, inst) in instances(cd, max_degree).into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(idx as u64);
        for trial in 0..trials {
            let v = random_center_vector(&mut rng, cd, weight_lo, weight_hi);
            let weight_label = v
                .components()
                .keys()
                .next()
                .map(|w| format!("{w}"))
                .unwrap_or_else(|| "[]".to_string());
            let result = inst.expr.apply(cd, &v)?;
            lines.push(CheckLine {
                axiom: inst.axiom,
                params: inst.params.clone(),
                trial,
                weight_label,
                pass: result.is_zero(),
            });
        }
    }
    Ok(CurrentReport {
        rank: cd.rank(),
        seed,
        lines,
    })
}

/// sl_2 specialization: `[x⁺_r, x⁻_s] = ξ_{r+s}` checked exactly on the unit
/// and on a fixed battery of center elements for every weight in the range.
pub fn sl2_commutator_check(r: u32, s: u32, weight_lo: i64, weight_hi: i64) -> Result<bool> {
    let cd = CartanData::sl(2);
    let expr = OpExpr::commutator(&vec![xp(1, r)], &vec![xm(1, s)])
        .minus(OpExpr::word(vec![xi(1, r + s)]));
    for l in weight_lo..=weight_hi {
        let w = Weight::from_values(vec![l]);
        let b1 = CenterElement::generator(&cd, w.clone(), 1, 1)?;
        let b2 = CenterElement::generator(&cd, w.clone(), 1, 2)?;
        let b3 = CenterElement::generator(&cd, w.clone(), 1, 3)?;
        let mut battery = vec![
            CenterElement::unit(w.clone()),
            b1.clone(),
            b2.clone(),
            b1.mul(&b1).sub(&b2.scale(&rat(3))),
            b3.add(&b1.mul(&b2).scale(&rat(2))),
        ];
        battery.push(battery[3].mul(&b1));
        for e in battery {
            if !expr.apply(&cd, &CenterVector::from_element(e))?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
