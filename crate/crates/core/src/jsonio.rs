//! JSON interchange for every value the CLI emits or accepts.
//!
//! All numbers travel as exact strings (`"p/q"` or `"p"`); partitions are
//! weakly decreasing arrays; bubble generator multisets are sorted by
//! `(node, alpha)`.

use serde::{Deserialize, Serialize};

use crate::bubblecalc::CenterElement;
use crate::cartan::Weight;
use crate::current::CenterVector;
use crate::error::{Error, Result};
use crate::grassmann::GrCohElement;
use crate::nilhecke::NHMatrix;
use crate::partition::Partition;
use crate::ratio::{format_rat, parse_rat};
use crate::symfunc::{Expansion, SymFn};
use crate::symn::SymN;

#[derive(Serialize, Deserialize)]
pub struct SymFnJson {
    pub basis: String,
    pub terms: Vec<SymTermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct SymTermJson {
    pub partition: Vec<u32>,
    pub coeff: String,
}

/// An expansion in a named basis (the canonical form uses `"h"`).
pub fn expansion_to_json(basis: &str, terms: &Expansion) -> SymFnJson {
    SymFnJson {
        basis: basis.to_string(),
        terms: terms
            .iter()
            .map(|(p, c)| SymTermJson {
                partition: p.parts().to_vec(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}

pub fn expansion_from_json(json: &SymFnJson) -> Result<(String, Expansion)> {
    let mut terms = Expansion::new();
    for t in &json.terms {
        let p = Partition::new(t.partition.clone())?;
        let c = parse_rat(&t.coeff)?;
        if terms.insert(p, c).is_some() {
            return Err(Error::Parse("duplicate partition in terms".into()));
        }
    }
    Ok((json.basis.clone(), terms))
}

pub fn symfn_to_json(f: &SymFn) -> SymFnJson {
    expansion_to_json("h", f.terms())
}

pub fn symfn_from_json(json: &SymFnJson) -> Result<SymFn> {
    if json.basis != "h" {
        return Err(Error::UnknownBasis(json.basis.clone()));
    }
    let (_, terms) = expansion_from_json(json)?;
    Ok(SymFn::from_expansion(terms))
}

pub fn symn_to_json(f: &SymN) -> SymFnJson {
    expansion_to_json("h", f.terms())
}

/// Row-major matrix of `Sym_n` values.
pub fn matrix_to_json(m: &NHMatrix) -> Vec<Vec<SymFnJson>> {
    m.rows()
        .iter()
        .map(|row| row.iter().map(symn_to_json).collect())
        .collect()
}

#[derive(Serialize, Deserialize)]
pub struct BubbleGenJson {
    pub node: usize,
    pub alpha: u32,
}

#[derive(Serialize, Deserialize)]
pub struct CenterTermJson {
    pub gens: Vec<BubbleGenJson>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize)]
pub struct CenterElementJson {
    pub weight: Vec<i64>,
    pub terms: Vec<CenterTermJson>,
}

pub fn center_to_json(e: &CenterElement) -> CenterElementJson {
    CenterElementJson {
        weight: e.weight().values().to_vec(),
        terms: e
            .poly()
            .iter()
            .map(|(m, c)| CenterTermJson {
                gens: m
                    .iter()
                    .map(|&(node, alpha)| BubbleGenJson { node, alpha })
                    .collect(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}

pub fn center_from_json(json: &CenterElementJson) -> Result<CenterElement> {
    let weight = Weight::from_values(json.weight.clone());
    let mut e = CenterElement::zero(weight);
    for t in &json.terms {
        for g in &t.gens {
            if g.alpha == 0 {
                return Err(Error::Parse("bubble generators need alpha >= 1".into()));
            }
        }
        let mono: Vec<(usize, u32)> = t.gens.iter().map(|g| (g.node, g.alpha)).collect();
        e.add_monomial(mono, parse_rat(&t.coeff)?);
    }
    Ok(e)
}

#[derive(Serialize, Deserialize)]
pub struct CenterVectorJson {
    pub components: Vec<CenterElementJson>,
}

pub fn vector_to_json(v: &CenterVector) -> CenterVectorJson {
    CenterVectorJson {
        components: v.components().values().map(center_to_json).collect(),
    }
}

pub fn vector_from_json(json: &CenterVectorJson) -> Result<CenterVector> {
    let mut v = CenterVector::zero();
    for c in &json.components {
        v.add_element(center_from_json(c)?);
    }
    Ok(v)
}

#[derive(Serialize, Deserialize)]
pub struct GrCohJson {
    pub k: usize,
    pub n: usize,
    pub terms: Vec<SymTermJson>,
}

pub fn grcoh_to_json(e: &GrCohElement) -> GrCohJson {
    GrCohJson {
        k: e.k(),
        n: e.n(),
        terms: e
            .terms()
            .iter()
            .map(|(p, c)| SymTermJson {
                partition: p.parts().to_vec(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}

pub fn grcoh_from_json(json: &GrCohJson) -> Result<GrCohElement> {
    let mut e = GrCohElement::zero(json.k, json.n);
    for t in &json.terms {
        e.add_term(Partition::new(t.partition.clone())?, parse_rat(&t.coeff)?)?;
    }
    Ok(e)
}
