//! Exact integer number theory on 64-bit inputs.
//!
//! Everything here works on `i64`/`u64` arguments and widens to 128 bits for
//! intermediate products, so no routine can silently wrap.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// Bases that make Miller-Rabin deterministic for every `u64`.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Default trial-division bound: covers every factor of a 64-bit integer.
pub const DEFAULT_TRIAL_BOUND: u64 = 1 << 32;

/// A positive rational prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            invalid(format!("{p} is not prime"))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An odd positive prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<Self> {
        if p != 2 && is_prime_u64(p) {
            Ok(OddPrime(p))
        } else {
            invalid(format!("{p} is not an odd prime"))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl From<OddPrime> for Prime {
    fn from(p: OddPrime) -> Prime {
        Prime(p.0)
    }
}

impl TryFrom<Prime> for OddPrime {
    type Error = Error;

    fn try_from(p: Prime) -> Result<OddPrime> {
        OddPrime::new(p.0)
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A squarefree integer other than 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquarefreeInt(i64);

impl SquarefreeInt {
    pub fn new(value: i64) -> Result<Self> {
        if value == 0 || value == 1 {
            return invalid(format!("{value} is excluded (must not be 0 or 1)"));
        }
        if squarefree_kernel(value)? != value {
            return invalid(format!("{value} is not squarefree"));
        }
        Ok(SquarefreeInt(value))
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }
}

impl fmt::Display for SquarefreeInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `base^exp mod modulus`, result in `[0, modulus)`. Negative bases are
/// reduced first.
pub fn mod_pow(base: i64, exp: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return invalid("modulus must be positive");
    }
    let b = (base as i128).rem_euclid(modulus as i128) as u64;
    Ok(pow_mod_u64(b, exp, modulus))
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality test; false for every `n < 2`.
pub fn is_prime(n: i64) -> bool {
    n >= 2 && is_prime_u64(n as u64)
}

/// Sign and prime-power factors of a nonzero integer, primes increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> i128 {
        let mut acc: i128 = self.sign as i128;
        for &(p, e) in &self.factors {
            acc *= (p as i128).pow(e);
        }
        acc
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

pub fn factorize(n: i64) -> Result<Factorization> {
    factorize_with_bound(n, DEFAULT_TRIAL_BOUND)
}

/// Trial division by candidates up to `bound` (2, 3, 5 then a mod-30 wheel).
///
/// A leftover cofactor is accepted when it is prime; otherwise the call fails
/// with [`Error::FactorizationIncomplete`].
pub fn factorize_with_bound(n: i64, bound: u64) -> Result<Factorization> {
    if n == 0 {
        return invalid("cannot factor 0");
    }
    let sign = if n < 0 { -1 } else { 1 };
    let mut m = n.unsigned_abs();
    let mut factors = Vec::new();

    let take = |m: &mut u64, p: u64, factors: &mut Vec<(u64, u32)>| {
        let mut e = 0;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        e > 0
    };

    for p in [2u64, 3, 5] {
        if p > bound {
            break;
        }
        take(&mut m, p, &mut factors);
    }

    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut d: u64 = 7;
    let mut i = 0;
    // a prime cofactor ends the search early
    let mut cofactor_prime = is_prime_u64(m);
    while m > 1 && !cofactor_prime && d <= bound && d.saturating_mul(d) <= m {
        if take(&mut m, d, &mut factors) {
            cofactor_prime = is_prime_u64(m);
        }
        d += WHEEL[i];
        i = (i + 1) % WHEEL.len();
    }

    if m > 1 {
        if is_prime_u64(m) {
            factors.push((m, 1));
        } else {
            return Err(Error::FactorizationIncomplete { cofactor: m, bound });
        }
    }
    factors.sort_unstable();
    Ok(Factorization { sign, factors })
}

/// `sign(n)` times the primes dividing `n` to odd multiplicity.
pub fn squarefree_kernel(n: i64) -> Result<i64> {
    let f = factorize(n)?;
    let mut k: i64 = f.sign as i64;
    for &(p, e) in &f.factors {
        if e % 2 == 1 {
            // |k| never exceeds |n|
            k = k
                .checked_mul(p as i64)
                .ok_or(Error::Overflow("squarefree_kernel"))?;
        }
    }
    Ok(k)
}

/// True when no prime cube divides `n`.
pub fn is_cubefree(n: i64) -> Result<bool> {
    Ok(factorize(n)?.factors.iter().all(|&(_, e)| e < 3))
}

/// Legendre symbol via Euler's criterion. Negative `a` is reduced mod `p`.
pub fn legendre(a: i64, p: OddPrime) -> i8 {
    let p = p.get();
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod_u64(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Jacobi symbol by the binary reciprocity algorithm; `n` odd and positive.
pub fn jacobi(a: i64, n: i64) -> Result<i8> {
    if n <= 0 || n % 2 == 0 {
        return invalid(format!("jacobi modulus {n} must be odd and positive"));
    }
    let mut n = n as u64;
    let mut a = (a as i128).rem_euclid(n as i128) as u64;
    let mut t: i8 = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}

/// `p`-adic valuation of a nonzero integer.
pub fn vp(n: i64, p: u64) -> Result<u32> {
    if n == 0 {
        return invalid("valuation of 0 is undefined");
    }
    if !is_prime_u64(p) {
        return invalid(format!("{p} is not prime"));
    }
    let mut m = n.unsigned_abs();
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    Ok(e)
}

/// Divides out `p^2` as often as possible, leaving `vp(result) ∈ {0, 1}`.
pub(crate) fn strip_square_power(n: i64, p: u64) -> i64 {
    let sq = (p as i128) * (p as i128);
    let mut n = n as i128;
    while n % sq == 0 {
        n /= sq;
    }
    n as i64
}
