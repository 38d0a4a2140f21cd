//! Hilbert symbols over the completions of ℚ.
//!
//! Two independent routes are provided. [`hilbert`] evaluates the classical
//! closed formulas; [`conic_oracle`] decides whether `ax² + by² = z²` has a
//! nontrivial solution over `ℚ_p` by exhaustive search modulo `p^n` combined
//! with Hensel's lemma, and never looks at a Legendre symbol.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::arith::{self, legendre, strip_square_power, vp, OddPrime, Prime};
use crate::error::{invalid, Error, Result};

/// A place of ℚ. Finite places sort before the real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(Prime),
    Real,
}

impl Place {
    pub fn finite(p: u64) -> Result<Place> {
        Ok(Place::Finite(Prime::new(p)?))
    }

    /// The underlying prime of a finite place.
    pub fn prime(self) -> Option<u64> {
        match self {
            Place::Finite(p) => Some(p.get()),
            Place::Real => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Real => f.write_str("real"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Place> {
        match s.trim() {
            "real" | "inf" | "infinity" => Ok(Place::Real),
            t => match t.parse::<u64>() {
                Ok(p) => Place::finite(p),
                Err(_) => invalid(format!("unrecognised place {s:?}")),
            },
        }
    }
}

/// Value of a Hilbert symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HilbertValue {
    Plus,
    Minus,
}

impl HilbertValue {
    pub fn value(self) -> i8 {
        match self {
            HilbertValue::Plus => 1,
            HilbertValue::Minus => -1,
        }
    }

    fn from_parity(odd: bool) -> Self {
        if odd {
            HilbertValue::Minus
        } else {
            HilbertValue::Plus
        }
    }
}

impl Mul for HilbertValue {
    type Output = HilbertValue;

    fn mul(self, rhs: HilbertValue) -> HilbertValue {
        HilbertValue::from_parity(self != rhs)
    }
}

fn require_nonzero(a: i64, b: i64) -> Result<()> {
    if a == 0 || b == 0 {
        invalid("Hilbert symbol arguments must be nonzero")
    } else {
        Ok(())
    }
}

/// Splits `n = p^e · u` with `p ∤ u`.
fn split_off(n: i64, p: u64) -> (u32, i64) {
    let pi = p as i128;
    let mut u = n as i128;
    let mut e = 0;
    while u % pi == 0 {
        u /= pi;
        e += 1;
    }
    (e, u as i64)
}

/// `(a, b)_v` by the closed formulas.
pub fn hilbert(a: i64, b: i64, v: Place) -> Result<HilbertValue> {
    require_nonzero(a, b)?;
    let p = match v {
        Place::Real => return Ok(HilbertValue::from_parity(a < 0 && b < 0)),
        Place::Finite(p) => p.get(),
    };
    // unit-unit symbols at odd places are trivial
    if p != 2 && (a as i128) % (p as i128) != 0 && (b as i128) % (p as i128) != 0 {
        return Ok(HilbertValue::Plus);
    }
    let (alpha, u) = split_off(a, p);
    let (beta, w) = split_off(b, p);

    if p == 2 {
        let eps = |x: i64| x.rem_euclid(4) == 3;
        let omega = |x: i64| matches!(x.rem_euclid(8), 3 | 5);
        let odd = (eps(u) && eps(w)) ^ (alpha % 2 == 1 && omega(w)) ^ (beta % 2 == 1 && omega(u));
        return Ok(HilbertValue::from_parity(odd));
    }

    let op = OddPrime::new(p)?;
    let mut s: i8 = if (alpha as u64 * beta as u64) % 2 == 1 && p % 4 == 3 {
        -1
    } else {
        1
    };
    if beta % 2 == 1 {
        s *= legendre(u, op);
    }
    if alpha % 2 == 1 {
        s *= legendre(w, op);
    }
    Ok(HilbertValue::from_parity(s < 0))
}

/// A solution of `ax² + by² ≡ z² (mod p^n)` that lifts to `ℤ_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    /// Exponent `n` of the modulus.
    pub exponent: u32,
    pub modulus: u64,
    /// `min(vp(2ax), vp(2by), vp(2z))`; lifting needs `2k + 1 ≤ n`.
    pub depth: u32,
}

/// Outcome of [`conic_oracle`] at one place.
///
/// When `solvable` is false, `search_bound` is the exponent `N` at which no
/// primitive triple exists. The scan stops at the first exponent `m ≤ N`
/// where that happens; absence modulo `p^m` implies absence modulo `p^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCertificate {
    pub place: Place,
    pub solvable: bool,
    /// Coefficients after removing square factors of `p`.
    pub normalized: (i64, i64),
    pub witness: Option<Witness>,
    pub search_bound: Option<u32>,
    /// Exponent at which the scan first found no primitive triple.
    pub exhausted_at: Option<u32>,
}

/// Largest table the oracle is willing to build.
const MAX_ORACLE_MODULUS: u64 = 1 << 24;

/// Saturating valuation: residues equal to 0 count as `cap`.
fn val_capped(n: u64, p: u64, cap: u32) -> u32 {
    if n == 0 {
        return cap;
    }
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) && e < cap {
        n /= p;
        e += 1;
    }
    e
}

/// For each residue `c` mod `p^n`: `Some(z)` where `z² ≡ c` and `vp(z)` is
/// minimal among all square roots, or `None` if `c` is not a square.
fn square_roots(p: u64, n: u32, modulus: u64) -> Vec<Option<u64>> {
    let mut table: Vec<Option<u64>> = vec![None; modulus as usize];
    for z in 0..modulus {
        let c = ((z as u128 * z as u128) % modulus as u128) as usize;
        match table[c] {
            Some(old) if val_capped(old, p, n) <= val_capped(z, p, n) => {}
            _ => table[c] = Some(z),
        }
    }
    table
}

enum Level {
    Witness(Witness),
    NoPrimitive,
    Inconclusive,
}

/// Scans one level `p^n`.
///
/// Every primitive triple is a unit multiple of one with `x = 1`, or with
/// `p | x` and `y = 1`, or with `p | x`, `p | y` and `z = 1`. The last shape
/// is impossible because `ax² + by²` is then divisible by `p` while `z² = 1`.
/// Unit scaling preserves both the congruence and the Hensel depth.
fn scan_level(a: i64, b: i64, p: u64, n: u32) -> Result<Level> {
    let modulus = p
        .checked_pow(n)
        .filter(|&m| m <= MAX_ORACLE_MODULUS)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("modulus {p}^{n} too large for local search"))
        })?;
    let roots = square_roots(p, n, modulus);
    let m = modulus as i128;
    let ar = (a as i128).rem_euclid(m);
    let br = (b as i128).rem_euclid(m);
    let v2 = if p == 2 { 1 } else { 0 };
    let va = vp(a, p)?;
    let vb = vp(b, p)?;

    let mut any_primitive = false;
    let mut check = |x: u64, y: u64| -> Option<Witness> {
        let c = (ar * (x as i128) * (x as i128) + br * (y as i128) * (y as i128)).rem_euclid(m);
        let z = roots[c as usize]?;
        any_primitive = true;
        let dx = if x == 0 {
            n
        } else {
            v2 + va + val_capped(x, p, n)
        };
        let dy = if y == 0 {
            n
        } else {
            v2 + vb + val_capped(y, p, n)
        };
        let dz = v2 + val_capped(z, p, n);
        let depth = dx.min(dy).min(dz);
        (2 * depth < n).then_some(Witness {
            x,
            y,
            z,
            exponent: n,
            modulus,
            depth,
        })
    };

    for y in 0..modulus {
        if let Some(w) = check(1, y) {
            return Ok(Level::Witness(w));
        }
    }
    for x in (0..modulus).step_by(p as usize) {
        if let Some(w) = check(x, 1) {
            return Ok(Level::Witness(w));
        }
    }
    Ok(if any_primitive {
        Level::Inconclusive
    } else {
        Level::NoPrimitive
    })
}

/// Decides local solvability of `ax² + by² = z²` at `v` by search.
///
/// At a finite place the coefficients are first stripped of square factors
/// of `p`, then levels `p^1, p^2, …, p^N` with `N = 2(1 + vp(2ab)) + 1` are
/// scanned until a liftable triple appears or no primitive triple exists.
pub fn conic_oracle(a: i64, b: i64, v: Place) -> Result<LocalCertificate> {
    require_nonzero(a, b)?;
    let p = match v {
        Place::Real => {
            return Ok(LocalCertificate {
                place: v,
                solvable: a > 0 || b > 0,
                normalized: (a.signum(), b.signum()),
                witness: None,
                search_bound: None,
                exhausted_at: None,
            })
        }
        Place::Finite(p) => p.get(),
    };
    let a = strip_square_power(a, p);
    let b = strip_square_power(b, p);
    let (va, vb) = (vp(a, p)?, vp(b, p)?);
    if va > 1 || vb > 1 {
        return invalid(format!("coefficients ({a}, {b}) not normalized at {p}"));
    }
    let bound = 2 * (1 + va + vb + u32::from(p == 2)) + 1;

    for n in 1..=bound {
        match scan_level(a, b, p, n)? {
            Level::Witness(w) => {
                return Ok(LocalCertificate {
                    place: v,
                    solvable: true,
                    normalized: (a, b),
                    witness: Some(w),
                    search_bound: None,
                    exhausted_at: None,
                })
            }
            Level::NoPrimitive => {
                return Ok(LocalCertificate {
                    place: v,
                    solvable: false,
                    normalized: (a, b),
                    witness: None,
                    search_bound: Some(bound),
                    exhausted_at: Some(n),
                })
            }
            Level::Inconclusive => {}
        }
    }
    Err(Error::OracleUndecided {
        place: v.to_string(),
        bound,
    })
}

/// Primes dividing `2ab`, in increasing order.
pub(crate) fn candidate_primes(a: i64, b: i64) -> Result<BTreeSet<u64>> {
    let mut primes: BTreeSet<u64> = arith::factorize(a)?.primes().collect();
    primes.extend(arith::factorize(b)?.primes());
    primes.insert(2);
    Ok(primes)
}

/// Places where `(a, b)_v = -1`. Only the real place and primes dividing
/// `2ab` can appear.
pub fn ramified_places(a: i64, b: i64) -> Result<BTreeSet<Place>> {
    require_nonzero(a, b)?;
    let mut out = BTreeSet::new();
    if hilbert(a, b, Place::Real)? == HilbertValue::Minus {
        out.insert(Place::Real);
    }
    for p in candidate_primes(a, b)? {
        let v = Place::finite(p)?;
        if hilbert(a, b, v)? == HilbertValue::Minus {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Product of `(a, b)_v` over the real place and the primes dividing `2ab`
/// equals `+1`.
pub fn product_formula_check(a: i64, b: i64) -> Result<bool> {
    require_nonzero(a, b)?;
    let mut acc = hilbert(a, b, Place::Real)?;
    for p in candidate_primes(a, b)? {
        acc = acc * hilbert(a, b, Place::finite(p)?)?;
    }
    Ok(acc == HilbertValue::Plus)
}
