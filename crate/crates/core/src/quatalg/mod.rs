//! Split/division classification of quaternion algebras `H(a, b)`.
//!
//! Over ℚ an algebra is division exactly when some place ramifies. Over a
//! quadratic field `F` a ramified place `v` of ℚ survives precisely when `v`
//! splits in `F` (a local degree-2 extension kills a local division
//! algebra); this is what [`classify_quadratic_engine`] computes. The
//! closed-form criteria in [`classify_quadratic_closed_form`] replace that
//! computation by Legendre-symbol and congruence conditions on `p`, `q` and
//! `d`, for algebras `H(p, q)` with two primes.
//!
//! Passing to an extension `K/F` of odd degree changes nothing: `H_K` splits
//! iff `H_F` splits. [`classify_extension`] uses that descent for the
//! dihedral, unramified-abelian and Kummer-cubic descriptors.

use std::collections::BTreeSet;
use std::fmt;

mod sweep;

pub use sweep::{cross_validate, primes_below, Mismatch, MismatchReport};

use crate::arith::{is_cubefree, is_prime_u64, legendre, OddPrime};
use crate::error::{invalid, Result};
use crate::localsym::{ramified_places, Place};
use crate::quadfield::{splits_completely, QuadraticField};

/// `H(a, b)`: `i² = a`, `j² = b`, `ij = -ji`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionAlgebraQ {
    a: i64,
    b: i64,
}

impl QuaternionAlgebraQ {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a == 0 || b == 0 {
            return invalid("quaternion algebra parameters must be nonzero");
        }
        Ok(QuaternionAlgebraQ { a, b })
    }

    /// `H(p, q)` for two primes.
    pub fn from_primes(p: u64, q: u64) -> Result<Self> {
        let (p, q) = (prime_i64(p)?, prime_i64(q)?);
        QuaternionAlgebraQ::new(p, q)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }
}

fn prime_i64(p: u64) -> Result<i64> {
    if !is_prime_u64(p) || p > i64::MAX as u64 {
        return invalid(format!("{p} is not a prime in range"));
    }
    Ok(p as i64)
}

fn odd(p: u64) -> OddPrime {
    OddPrime::new(p).expect("caller checked the prime is odd")
}

/// Ramified places and the reduced discriminant of an algebra over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub places: BTreeSet<Place>,
    /// Product of the finite ramified primes.
    pub reduced_discriminant: u128,
}

impl RamificationReport {
    pub fn is_split(&self) -> bool {
        self.places.is_empty()
    }
}

pub fn ramification_report(h: &QuaternionAlgebraQ) -> Result<RamificationReport> {
    let places = ramified_places(h.a, h.b)?;
    let reduced_discriminant = places
        .iter()
        .filter_map(|v| v.prime())
        .map(u128::from)
        .product();
    Ok(RamificationReport {
        places,
        reduced_discriminant,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaCase {
    /// `p ≡ q ≡ 3 (mod 4)` and `(q/p) ≠ 1`: `D = 2p`.
    CaseI,
    /// `q = 2`, `p ≡ 3 (mod 8)`: `D = 2p`.
    CaseII,
    /// `p ≠ q` odd, one of them `≡ 1 (mod 4)`, `(p/q) = -1`: `D = pq`.
    CaseIII,
}

impl LemmaCase {
    pub fn label(self) -> &'static str {
        match self {
            LemmaCase::CaseI => "lemma-disc/case-i",
            LemmaCase::CaseII => "lemma-disc/case-ii",
            LemmaCase::CaseIII => "lemma-disc/case-iii",
        }
    }
}

/// Predicted reduced discriminant of `H(p, q)` for two primes, taking the
/// first matching case in order i, ii, iii.
pub fn lemma_discriminant_case(p: u64, q: u64) -> Result<Option<(LemmaCase, u128)>> {
    prime_i64(p)?;
    prime_i64(q)?;
    let both_odd = p != 2 && q != 2;
    if both_odd && p % 4 == 3 && q % 4 == 3 && legendre(q as i64, odd(p)) != 1 {
        return Ok(Some((LemmaCase::CaseI, 2 * p as u128)));
    }
    if q == 2 && p % 8 == 3 {
        return Ok(Some((LemmaCase::CaseII, 2 * p as u128)));
    }
    if both_odd && p != q && (p % 4 == 1 || q % 4 == 1) && legendre(p as i64, odd(q)) == -1 {
        return Ok(Some((LemmaCase::CaseIII, p as u128 * q as u128)));
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Split,
    Division,
}

impl Outcome {
    pub fn from_division(division: bool) -> Outcome {
        if division {
            Outcome::Division
        } else {
            Outcome::Split
        }
    }

    pub fn is_division(self) -> bool {
        self == Outcome::Division
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Split => "split",
            Outcome::Division => "division",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named closed-form criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    /// Quadratic field, `p ≠ q` odd, one `≡ 1 (mod 4)`, `(p/q) = -1`.
    QuadraticOddPair,
    /// Quadratic field, `q = 2`, `p ≡ 3 (mod 8)`.
    QuadraticTwo,
    /// Quadratic field, `p ≡ q ≡ 3 (mod 4)`, `(q/p) ≠ 1`.
    QuadraticThreeMod4,
    /// Dihedral / unramified-abelian extension, same three hypotheses.
    MainCase1,
    MainCase2,
    MainCase3,
    /// `ℚ(ζ₃)(∛α)`, same three hypotheses with `F = ℚ(√-3)`.
    KummerCase1,
    KummerCase2,
    KummerCase3,
    /// No closed form applies; the place-based engine decided.
    Engine,
}

impl CaseId {
    pub fn label(self) -> &'static str {
        match self {
            CaseId::QuadraticOddPair => "quadratic/odd-pair",
            CaseId::QuadraticTwo => "quadratic/two",
            CaseId::QuadraticThreeMod4 => "quadratic/three-mod-4",
            CaseId::MainCase1 => "theorem-main/case1",
            CaseId::MainCase2 => "theorem-main/case2",
            CaseId::MainCase3 => "theorem-main/case3",
            CaseId::KummerCase1 => "kummer-cubic/case1",
            CaseId::KummerCase2 => "kummer-cubic/case2",
            CaseId::KummerCase3 => "kummer-cubic/case3",
            CaseId::Engine => "engine",
        }
    }

    fn lifted(self, kummer: bool) -> CaseId {
        use CaseId::*;
        match (self, kummer) {
            (QuadraticOddPair, false) => MainCase1,
            (QuadraticTwo, false) => MainCase2,
            (QuadraticThreeMod4, false) => MainCase3,
            (QuadraticOddPair, true) => KummerCase1,
            (QuadraticTwo, true) => KummerCase2,
            (QuadraticThreeMod4, true) => KummerCase3,
            (other, _) => other,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    TheoremCase(CaseId),
    /// A place of the base that ramifies and survives in the field.
    WitnessPlace(Place),
    /// No ramified place survives.
    NoWitness,
    /// Decided over the quadratic subfield, then carried up an odd-degree
    /// extension.
    Descent {
        case: CaseId,
        degree: OddDegree,
        inner: Box<Verdict>,
    },
}

/// Degree `[K:F]` of an odd-degree extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddDegree {
    Prime(u64),
    PrimePower { ell: u64, n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub result: Outcome,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn is_division(&self) -> bool {
        self.result.is_division()
    }

    /// Short identifier of the evidence, as printed by the CLI.
    pub fn case_label(&self) -> String {
        match &self.evidence {
            Evidence::TheoremCase(c) | Evidence::Descent { case: c, .. } => c.label().to_string(),
            Evidence::WitnessPlace(v) => format!("engine/witness-{v}"),
            Evidence::NoWitness => "engine/no-witness".to_string(),
        }
    }
}

pub fn classify_over_q(h: &QuaternionAlgebraQ) -> Result<Verdict> {
    let report = ramification_report(h)?;
    Ok(match report.places.iter().next() {
        Some(&v) => Verdict {
            result: Outcome::Division,
            evidence: Evidence::WitnessPlace(v),
        },
        None => Verdict {
            result: Outcome::Split,
            evidence: Evidence::NoWitness,
        },
    })
}

/// Place-based classification of `H ⊗ F`: division iff a ramified place of
/// `H` splits in `F`.
pub fn classify_quadratic_engine(
    field: &QuadraticField,
    h: &QuaternionAlgebraQ,
) -> Result<Verdict> {
    let report = ramification_report(h)?;
    Ok(
        match report.places.iter().find(|&&v| splits_completely(field, v)) {
            Some(&v) => Verdict {
                result: Outcome::Division,
                evidence: Evidence::WitnessPlace(v),
            },
            None => Verdict {
                result: Outcome::Split,
                evidence: Evidence::NoWitness,
            },
        },
    )
}

fn legendre_delta(field: &QuadraticField, p: u64) -> i8 {
    legendre(field.discriminant(), odd(p))
}

fn d_is_one_mod_8(field: &QuadraticField) -> bool {
    field.d().rem_euclid(8) == 1
}

/// Every closed-form criterion whose hypotheses `(p, q)` satisfy, in the
/// listed order, each with the division result it predicts over `F`.
pub fn matching_propositions(
    field: &QuadraticField,
    p: u64,
    q: u64,
) -> Result<Vec<(CaseId, Outcome)>> {
    prime_i64(p)?;
    prime_i64(q)?;
    if p == q {
        return invalid(format!(
            "closed-form criteria need distinct primes, got p = q = {p}"
        ));
    }
    let mut out = Vec::new();
    let both_odd = p != 2 && q != 2;

    if both_odd && (p % 4 == 1 || q % 4 == 1) && legendre(p as i64, odd(q)) == -1 {
        let division = legendre_delta(field, p) == 1 || legendre_delta(field, q) == 1;
        out.push((CaseId::QuadraticOddPair, Outcome::from_division(division)));
    }
    if q == 2 && p % 8 == 3 {
        let division = legendre_delta(field, p) == 1 || d_is_one_mod_8(field);
        out.push((CaseId::QuadraticTwo, Outcome::from_division(division)));
    }
    if both_odd && p % 4 == 3 && q % 4 == 3 && legendre(q as i64, odd(p)) != 1 {
        let division = legendre_delta(field, p) == 1 || d_is_one_mod_8(field);
        out.push((CaseId::QuadraticThreeMod4, Outcome::from_division(division)));
    }
    Ok(out)
}

/// Closed-form verdict for `H(p, q) ⊗ ℚ(√d)`, or `None` when `(p, q)` lies
/// outside every criterion.
pub fn classify_quadratic_closed_form(
    field: &QuadraticField,
    p: u64,
    q: u64,
) -> Result<Option<Verdict>> {
    Ok(matching_propositions(field, p, q)?
        .into_iter()
        .next()
        .map(|(case, result)| Verdict {
            result,
            evidence: Evidence::TheoremCase(case),
        }))
}

/// Closed form when one applies, engine otherwise.
pub fn classify_quadratic(field: &QuadraticField, p: u64, q: u64) -> Result<Verdict> {
    if p != q {
        if let Some(v) = classify_quadratic_closed_form(field, p, q)? {
            return Ok(v);
        }
    }
    classify_quadratic_engine(field, &QuaternionAlgebraQ::from_primes(p, q)?)
}

/// Symbolic description of the field `K` an algebra is extended to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionDescriptor {
    BaseQ,
    Quadratic(QuadraticField),
    /// `K/ℚ` dihedral of degree `2ℓ` with `[K:F] = ℓ`.
    Dihedral {
        field: QuadraticField,
        ell: OddPrime,
    },
    /// Unramified abelian extension of `F` of degree `ℓⁿ`; the caller
    /// asserts `ℓ` divides the class number of `F`.
    UnramifiedAbelian {
        field: QuadraticField,
        ell: OddPrime,
        n: u32,
    },
    /// `ℚ(ζ₃)(∛α)` for cubefree `α ∉ {0, 1}`.
    KummerCubic {
        alpha: i64,
    },
}

impl ExtensionDescriptor {
    pub fn kummer_cubic(alpha: i64) -> Result<Self> {
        let e = ExtensionDescriptor::KummerCubic { alpha };
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ExtensionDescriptor::KummerCubic { alpha } => {
                if alpha == 0 || alpha == 1 {
                    return invalid(format!("Kummer parameter {alpha} must not be 0 or 1"));
                }
                if !is_cubefree(alpha)? {
                    return invalid(format!("Kummer parameter {alpha} is not cubefree"));
                }
            }
            ExtensionDescriptor::UnramifiedAbelian { n: 0, .. } => {
                return invalid("unramified extension exponent must be positive");
            }
            _ => {}
        }
        Ok(())
    }

    /// Quadratic subfield the verdict descends to.
    pub fn quadratic_subfield(&self) -> Option<QuadraticField> {
        match *self {
            ExtensionDescriptor::BaseQ => None,
            ExtensionDescriptor::Quadratic(f)
            | ExtensionDescriptor::Dihedral { field: f, .. }
            | ExtensionDescriptor::UnramifiedAbelian { field: f, .. } => Some(f),
            ExtensionDescriptor::KummerCubic { .. } => Some(QuadraticField::eisenstein()),
        }
    }
}

/// Verdict for `H(p, q) ⊗ K` where `K` is described by `ext`.
pub fn classify_extension(ext: &ExtensionDescriptor, p: u64, q: u64) -> Result<Verdict> {
    ext.validate()?;
    let (field, degree, kummer) = match *ext {
        ExtensionDescriptor::BaseQ => {
            return classify_over_q(&QuaternionAlgebraQ::from_primes(p, q)?)
        }
        ExtensionDescriptor::Quadratic(f) => return classify_quadratic(&f, p, q),
        ExtensionDescriptor::Dihedral { field, ell } => (field, OddDegree::Prime(ell.get()), false),
        ExtensionDescriptor::UnramifiedAbelian { field, ell, n } => {
            (field, OddDegree::PrimePower { ell: ell.get(), n }, false)
        }
        ExtensionDescriptor::KummerCubic { .. } => {
            (QuadraticField::eisenstein(), OddDegree::Prime(3), true)
        }
    };
    let inner = classify_quadratic(&field, p, q)?;
    let case = match &inner.evidence {
        Evidence::TheoremCase(c) => c.lifted(kummer),
        _ => CaseId::Engine,
    };
    Ok(Verdict {
        result: inner.result,
        evidence: Evidence::Descent {
            case,
            degree,
            inner: Box::new(inner),
        },
    })
}

/// The main classification over dihedral and unramified-abelian `K`, as a
/// standalone predicate: `Some((case, division))` when `(p, q)` satisfies
/// the hypotheses of a case, `None` otherwise.
///
/// Case 2 is read with `q = 2`. Read literally (both primes odd, only
/// `p ≡ 3 mod 8`) it disagrees with case 1 on inputs such as `d = 17`,
/// `(p, q) = (3, 5)`; see [`literal_case2_prediction`].
pub fn main_theorem_prediction(
    field: &QuadraticField,
    p: u64,
    q: u64,
) -> Result<Option<(CaseId, bool)>> {
    prime_i64(p)?;
    prime_i64(q)?;
    let delta_p = |field: &QuadraticField| p != 2 && legendre(field.discriminant(), odd(p)) == 1;
    let delta_q = |field: &QuadraticField| q != 2 && legendre(field.discriminant(), odd(q)) == 1;
    let d8 = field.d().rem_euclid(8) == 1;

    if p != q && p != 2 && q != 2 && (p % 4 == 1 || q % 4 == 1) && legendre(p as i64, odd(q)) == -1
    {
        return Ok(Some((CaseId::MainCase1, delta_p(field) || delta_q(field))));
    }
    if q == 2 && p % 8 == 3 {
        return Ok(Some((CaseId::MainCase2, delta_p(field) || d8)));
    }
    if p != q && p % 4 == 3 && q % 4 == 3 && legendre(q as i64, odd(p)) != 1 {
        return Ok(Some((CaseId::MainCase3, delta_p(field) || d8)));
    }
    Ok(None)
}

/// Case 2 of the main classification taken literally: any odd `q`,
/// `p ≡ 3 (mod 8)`. Kept to document the disagreement, not used for
/// classification.
pub fn literal_case2_prediction(field: &QuadraticField, p: u64, q: u64) -> Option<bool> {
    if p % 8 != 3 || q == 2 || !is_prime_u64(p) || !is_prime_u64(q) {
        return None;
    }
    Some(legendre(field.discriminant(), odd(p)) == 1 || field.d().rem_euclid(8) == 1)
}

/// Division prediction over `ℚ(ζ₃)(∛α)` stated purely through `(−3/p)` and
/// `(−3/q)`.
pub fn kummer_prediction(p: u64, q: u64) -> Result<Option<(CaseId, bool)>> {
    prime_i64(p)?;
    prime_i64(q)?;
    let minus3 = |r: u64| r != 2 && legendre(-3, odd(r)) == 1;
    if p != q && p != 2 && q != 2 && (p % 4 == 1 || q % 4 == 1) && legendre(p as i64, odd(q)) == -1
    {
        return Ok(Some((CaseId::KummerCase1, minus3(p) || minus3(q))));
    }
    if q == 2 && p % 8 == 3 {
        return Ok(Some((CaseId::KummerCase2, minus3(p))));
    }
    if p != q && p % 4 == 3 && q % 4 == 3 && legendre(q as i64, odd(p)) != 1 {
        return Ok(Some((CaseId::KummerCase3, minus3(p))));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(d: i64) -> QuadraticField {
        QuadraticField::new(d).unwrap()
    }

    fn fin(p: u64) -> Place {
        Place::finite(p).unwrap()
    }

    fn h(a: i64, b: i64) -> QuaternionAlgebraQ {
        QuaternionAlgebraQ::new(a, b).unwrap()
    }

    #[test]
    fn report_examples() {
        let r = ramification_report(&h(3, 2)).unwrap();
        assert_eq!(r.places, [fin(2), fin(3)].into_iter().collect());
        assert_eq!(r.reduced_discriminant, 6);
        let r = ramification_report(&h(5, 3)).unwrap();
        assert_eq!(r.reduced_discriminant, 15);
        let r = ramification_report(&h(1, 7)).unwrap();
        assert!(r.is_split());
        assert_eq!(r.reduced_discriminant, 1);
        // the real place does not enter the discriminant
        let r = ramification_report(&h(-1, -3)).unwrap();
        assert_eq!(r.places, [fin(3), Place::Real].into_iter().collect());
        assert_eq!(r.reduced_discriminant, 3);
        assert!(QuaternionAlgebraQ::new(0, 2).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(
            lemma_discriminant_case(7, 3),
            Ok(Some((LemmaCase::CaseI, 14)))
        );
        assert_eq!(
            lemma_discriminant_case(3, 2),
            Ok(Some((LemmaCase::CaseII, 6)))
        );
        assert_eq!(lemma_discriminant_case(5, 2), Ok(None));
        assert_eq!(
            lemma_discriminant_case(5, 3),
            Ok(Some((LemmaCase::CaseIII, 15)))
        );
        assert_eq!(
            lemma_discriminant_case(3, 3),
            Ok(Some((LemmaCase::CaseI, 6)))
        );
        assert!(lemma_discriminant_case(4, 3).is_err());
    }

    #[test]
    fn over_q_examples() {
        let v = classify_over_q(&h(3, 2)).unwrap();
        assert_eq!(v.result, Outcome::Division);
        assert_eq!(v.evidence, Evidence::WitnessPlace(fin(2)));
        assert_eq!(classify_over_q(&h(1, 1)).unwrap().result, Outcome::Split);
        let v = classify_over_q(&h(7, 47)).unwrap();
        assert!(v.is_division());
        assert_eq!(
            ramification_report(&h(7, 47)).unwrap().reduced_discriminant,
            14
        );
    }

    #[test]
    fn engine_examples() {
        let v = classify_quadratic_engine(&field(3), &h(13, 7)).unwrap();
        assert_eq!(v.evidence, Evidence::WitnessPlace(fin(13)));
        let v = classify_quadratic_engine(&field(-3), &h(5, 3)).unwrap();
        assert_eq!(v.result, Outcome::Split);
        let v = classify_quadratic_engine(&field(17), &h(3, 2)).unwrap();
        assert_eq!(v.evidence, Evidence::WitnessPlace(fin(2)));
    }

    #[test]
    fn closed_form_examples() {
        let v = classify_quadratic_closed_form(&field(3), 13, 7)
            .unwrap()
            .unwrap();
        assert_eq!(
            (v.result, v.case_label()),
            (Outcome::Division, "quadratic/odd-pair".into())
        );
        let v = classify_quadratic_closed_form(&field(-3), 5, 3)
            .unwrap()
            .unwrap();
        assert_eq!(v.result, Outcome::Split);
        let v = classify_quadratic_closed_form(&field(17), 11, 2)
            .unwrap()
            .unwrap();
        assert_eq!(
            (v.result, v.case_label()),
            (Outcome::Division, "quadratic/two".into())
        );
        assert!(classify_quadratic_closed_form(&field(3), 7, 7).is_err());
        assert!(classify_quadratic_closed_form(&field(3), 4, 7).is_err());
        // (13/17) = +1, both ≡ 1 mod 4: no criterion applies
        assert_eq!(classify_quadratic_closed_form(&field(3), 13, 17), Ok(None));
    }

    #[test]
    fn extension_examples() {
        let e = ExtensionDescriptor::Dihedral {
            field: field(3),
            ell: OddPrime::new(5).unwrap(),
        };
        let v = classify_extension(&e, 13, 7).unwrap();
        assert_eq!(
            (v.result, v.case_label()),
            (Outcome::Division, "theorem-main/case1".into())
        );

        let e = ExtensionDescriptor::kummer_cubic(2).unwrap();
        let v = classify_extension(&e, 13, 7).unwrap();
        assert_eq!(
            (v.result, v.case_label()),
            (Outcome::Division, "kummer-cubic/case1".into())
        );

        let e = ExtensionDescriptor::Dihedral {
            field: field(17),
            ell: OddPrime::new(3).unwrap(),
        };
        let v = classify_extension(&e, 7, 3).unwrap();
        assert_eq!(
            (v.result, v.case_label()),
            (Outcome::Division, "theorem-main/case3".into())
        );
    }

    #[test]
    fn extension_rejects_bad_descriptors() {
        assert!(ExtensionDescriptor::kummer_cubic(0).is_err());
        assert!(ExtensionDescriptor::kummer_cubic(1).is_err());
        assert!(ExtensionDescriptor::kummer_cubic(16).is_err());
        assert!(ExtensionDescriptor::kummer_cubic(-12).is_ok());
        let bad = ExtensionDescriptor::KummerCubic { alpha: 27 };
        assert!(classify_extension(&bad, 13, 7).is_err());
        let bad = ExtensionDescriptor::UnramifiedAbelian {
            field: field(-23),
            ell: OddPrime::new(3).unwrap(),
            n: 0,
        };
        assert!(classify_extension(&bad, 13, 7).is_err());
    }

    #[test]
    fn pairs_outside_every_case_fall_back_to_the_engine() {
        // 5 ≡ 5 mod 8 with q = 2
        let v = classify_quadratic(&field(-1), 5, 2).unwrap();
        assert!(v.case_label().starts_with("engine/"));
        let direct = classify_quadratic_engine(&field(-1), &h(5, 2)).unwrap();
        assert_eq!(v.result, direct.result);
        // p = q is still classified
        let v = classify_extension(&ExtensionDescriptor::Quadratic(field(2)), 3, 3).unwrap();
        assert!(v.case_label().starts_with("engine/"));
        let e = ExtensionDescriptor::Dihedral {
            field: field(-1),
            ell: OddPrime::new(7).unwrap(),
        };
        assert_eq!(classify_extension(&e, 5, 2).unwrap().case_label(), "engine");
    }

    #[test]
    fn literal_case2_reading_conflicts_with_case1() {
        let f = field(17);
        let (case, division) = main_theorem_prediction(&f, 3, 5).unwrap().unwrap();
        assert_eq!(case, CaseId::MainCase1);
        assert!(!division);
        assert_eq!(literal_case2_prediction(&f, 3, 5), Some(true));
        let engine = classify_quadratic_engine(&f, &h(3, 5)).unwrap();
        assert_eq!(engine.result, Outcome::Split);
    }

    #[test]
    fn kummer_prediction_examples() {
        assert_eq!(
            kummer_prediction(13, 7),
            Ok(Some((CaseId::KummerCase1, true)))
        );
        // (−3/11) = −1
        assert_eq!(
            kummer_prediction(11, 2),
            Ok(Some((CaseId::KummerCase2, false)))
        );
        // 19 ≡ 3 mod 8, (−3/19) = +1
        assert_eq!(
            kummer_prediction(19, 2),
            Ok(Some((CaseId::KummerCase2, true)))
        );
    }
}
