//! Quadratic fields ℚ(√d) and how rational places decompose in them.

use std::fmt;

use crate::arith::{legendre, OddPrime, SquarefreeInt};
use crate::error::{Error, Result};
use crate::localsym::Place;

/// ℚ(√d) for squarefree `d ∉ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadraticField {
    d: SquarefreeInt,
    discriminant: i64,
}

impl QuadraticField {
    /// Rejects non-squarefree `d`; see [`QuadraticField::from_kernel`] to
    /// normalize first.
    pub fn new(d: i64) -> Result<Self> {
        let d = SquarefreeInt::new(d)?;
        let discriminant = if d.get().rem_euclid(4) == 1 {
            d.get()
        } else {
            d.get()
                .checked_mul(4)
                .ok_or(Error::Overflow("quadratic discriminant"))?
        };
        Ok(QuadraticField { d, discriminant })
    }

    /// ℚ(√n) written with the squarefree kernel of `n`.
    pub fn from_kernel(n: i64) -> Result<Self> {
        QuadraticField::new(crate::arith::squarefree_kernel(n)?)
    }

    /// The field ℚ(√-3) = ℚ(ζ₃).
    pub fn eisenstein() -> Self {
        QuadraticField {
            d: SquarefreeInt::new(-3).expect("-3 is squarefree"),
            discriminant: -3,
        }
    }

    #[inline]
    pub fn d(&self) -> i64 {
        self.d.get()
    }

    #[inline]
    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn is_real(&self) -> bool {
        self.d() > 0
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d())
    }
}

pub fn make_field(d: i64) -> Result<QuadraticField> {
    QuadraticField::new(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionType {
    Split,
    Inert,
    Ramified,
}

/// Decomposition of `v` in `F`.
///
/// The real place counts as split when `F` is real and as ramified when `F`
/// is imaginary (its archimedean completion is then ℂ).
pub fn decompose(field: &QuadraticField, v: Place) -> DecompositionType {
    use DecompositionType::*;
    let d = field.d();
    match v.prime() {
        None => {
            if d > 0 {
                Split
            } else {
                Ramified
            }
        }
        Some(2) => match d.rem_euclid(8) {
            1 => Split,
            5 => Inert,
            _ => Ramified,
        },
        Some(p) => {
            let p = OddPrime::new(p).expect("finite places carry primes");
            match legendre(field.discriminant(), p) {
                0 => Ramified,
                1 => Split,
                _ => Inert,
            }
        }
    }
}

pub fn splits_completely(field: &QuadraticField, v: Place) -> bool {
    decompose(field, v) == DecompositionType::Split
}

/// `+1` split, `-1` inert, `0` ramified. At odd `p` this is the Legendre
/// symbol `(Δ_F / p)`; at 2 it is the Kronecker symbol.
pub fn splitting_symbol(field: &QuadraticField, v: Place) -> i8 {
    match decompose(field, v) {
        DecompositionType::Split => 1,
        DecompositionType::Inert => -1,
        DecompositionType::Ramified => 0,
    }
}
