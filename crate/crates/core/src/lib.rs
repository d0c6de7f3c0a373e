//! Exact symbolic algebra for the graded trace of the nilHecke ring and the
//! current-algebra action on centers of categorified quantum sl_n.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! floating point numbers anywhere in this crate.  The main pieces:
//!
//! * [`symfunc`] — the ring of symmetric functions with exact base change
//!   between the e, h, p, monomial and Schur bases, plus quantum integers.
//! * [`nilhecke`] — the nilHecke ring acting on polynomials by divided
//!   differences, its n!×n! matrix model over `Sym_n`, and the trace map.
//! * [`bubblecalc`] — centers Z(λ) as polynomial rings in spade-normalized
//!   clockwise bubbles, fake bubbles, power sums, and bubble slides.
//! * [`current`] — the U(sl_n[t]) action on ⊕_λ Z(λ) by ξ-multiplication and
//!   dotted encircling operators, with a full axiom-verification harness.
//! * [`grassmann`] — H*(Gr(k,n)) as a truncated Schur ring, its Gaussian
//!   binomial Hilbert series, and the Chern character comparison.

pub mod bubblecalc;
pub mod cartan;
pub mod current;
pub mod error;
pub mod grassmann;
pub mod jsonio;
pub mod nilhecke;
pub mod partition;
pub mod poly;
pub mod ratio;
pub mod symfunc;
pub mod symn;

pub use error::Error;
pub use partition::Partition;
pub use ratio::Rat;
