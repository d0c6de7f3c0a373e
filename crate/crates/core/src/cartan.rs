//! Cartan datum for type A and integer weights for sl_n.

use std::fmt;

use num::One;

use crate::error::{Error, Result};
use crate::ratio::Rat;

/// The Cartan datum of sl_n together with a choice of scalars `t_ij`.
///
/// The node set is `I = {1, ..., n-1}`.  The Cartan matrix is the standard
/// type-A one and is computed rather than stored; the scalars default to 1.
#[derive(Clone, PartialEq, Eq)]
pub struct CartanData {
    rank: usize,
    scalars: Vec<Vec<Rat>>,
}

impl CartanData {
    /// Datum for sl_n with all scalars `t_ij = 1`.
    pub fn sl(rank: usize) -> Self {
        assert!(rank >= 2, "sl_n needs n >= 2");
        let m = rank - 1;
        CartanData {
            rank,
            scalars: vec![vec![Rat::one(); m]; m],
        }
    }

    /// Datum with explicit scalars; requires `t_ii = 1` and all `t_ij` nonzero.
    pub fn with_scalars(rank: usize, scalars: Vec<Vec<Rat>>) -> Result<Self> {
        let m = rank - 1;
        if scalars.len() != m || scalars.iter().any(|r| r.len() != m) {
            return Err(Error::BadScalars);
        }
        for (i, row) in scalars.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                if *t == Rat::from_integer(0.into()) {
                    return Err(Error::BadScalars);
                }
                if i == j && !t.is_one() {
                    return Err(Error::BadScalars);
                }
            }
        }
        Ok(CartanData { rank, scalars })
    }

    /// The sl_n subscript; nodes run over `1..=self.num_nodes()`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_nodes(&self) -> usize {
        self.rank - 1
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.num_nodes() {
            return Err(Error::NodeRange {
                node: i,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// Cartan matrix entry `a_ij` for type A.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    pub fn t(&self, i: usize, j: usize) -> &Rat {
        &self.scalars[i - 1][j - 1]
    }

    /// `v_ij = t_ij^{-1} t_ji`.
    pub fn v(&self, i: usize, j: usize) -> Rat {
        self.t(j, i) / self.t(i, j)
    }

    /// Gate for the current-algebra module: `t_ij^2 = t_ji^2 = v_ij = 1`
    /// for all `i != j`.
    pub fn current_gate(&self) -> bool {
        let one = Rat::one();
        for i in 1..=self.num_nodes() {
            for j in 1..=self.num_nodes() {
                if i == j {
                    continue;
                }
                let tij = self.t(i, j);
                let tji = self.t(j, i);
                if tij * tij != one || tji * tji != one || self.v(i, j) != one {
                    return false;
                }
            }
        }
        true
    }

    pub fn require_current_gate(&self) -> Result<()> {
        if self.current_gate() {
            Ok(())
        } else {
            Err(Error::ScalarGate)
        }
    }
}

impl fmt::Debug for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanData(sl_{})", self.rank)
    }
}

/// An integral sl_n weight `(lambda_1, ..., lambda_{n-1})` with
/// `lambda_i = <h_i, lambda>`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(cd: &CartanData, values: Vec<i64>) -> Result<Self> {
        if values.len() != cd.num_nodes() {
            return Err(Error::WeightLength {
                got: values.len(),
                rank: cd.rank,
            });
        }
        Ok(Weight(values))
    }

    pub fn from_values(values: Vec<i64>) -> Self {
        Weight(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// `lambda_i` for a node `i` in `I`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// `lambda + alpha_i`: adds the `i`-th row of the Cartan matrix.
    pub fn add_alpha(&self, cd: &CartanData, i: usize) -> Weight {
        let mut v = self.0.clone();
        for j in 1..=cd.num_nodes() {
            v[j - 1] += cd.a(i, j);
        }
        Weight(v)
    }

    /// `lambda - alpha_i`.
    pub fn sub_alpha(&self, cd: &CartanData, i: usize) -> Weight {
        let mut v = self.0.clone();
        for j in 1..=cd.num_nodes() {
            v[j - 1] -= cd.a(i, j);
        }
        Weight(v)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
