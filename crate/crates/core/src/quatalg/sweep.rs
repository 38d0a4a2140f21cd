use rayon::prelude::*;
use serde::Serialize;

use super::{
    classify_extension, classify_over_q, classify_quadratic_closed_form, classify_quadratic_engine,
    lemma_discriminant_case, main_theorem_prediction, matching_propositions, ramification_report,
    ExtensionDescriptor, Outcome, QuaternionAlgebraQ,
};
use crate::arith::{is_prime_u64, OddPrime};
use crate::error::Result;
use crate::localsym::Place;
use crate::quadfield::QuadraticField;

const ELLS: [u64; 3] = [3, 5, 7];
const EXPONENTS: [u32; 2] = [1, 2];

/// One disagreement found by [`cross_validate`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mismatch {
    /// `None` for checks that do not involve a field.
    pub d: Option<i64>,
    pub p: u64,
    pub q: u64,
    pub ell: Option<u64>,
    pub n: Option<u32>,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MismatchReport {
    /// Grid points examined: `(d, p, q)` triples plus discriminant pairs.
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl MismatchReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&n| is_prime_u64(n)).collect()
}

struct Recorder {
    d: Option<i64>,
    p: u64,
    q: u64,
    out: Vec<Mismatch>,
}

impl Recorder {
    fn expect<T: PartialEq + std::fmt::Debug>(
        &mut self,
        check: &str,
        ell: Option<u64>,
        n: Option<u32>,
        expected: T,
        actual: T,
    ) {
        if expected != actual {
            self.out.push(Mismatch {
                d: self.d,
                p: self.p,
                q: self.q,
                ell,
                n,
                check: check.to_string(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }
}

fn check_point(field: &QuadraticField, p: u64, q: u64) -> Result<Option<Vec<Mismatch>>> {
    let props = matching_propositions(field, p, q)?;
    let Some(&(_, first)) = props.first() else {
        return Ok(None);
    };
    let mut rec = Recorder {
        d: Some(field.d()),
        p,
        q,
        out: Vec::new(),
    };
    for &(case, outcome) in &props[1..] {
        rec.expect(
            &format!("proposition-order/{}", case.label()),
            None,
            None,
            first,
            outcome,
        );
    }

    let h = QuaternionAlgebraQ::from_primes(p, q)?;
    let engine = classify_quadratic_engine(field, &h)?.result;
    let closed = classify_quadratic_closed_form(field, p, q)?
        .expect("a proposition matched")
        .result;
    rec.expect("closed-form-vs-engine", None, None, engine, closed);

    if classify_over_q(&h)?.result == Outcome::Split {
        rec.expect("monotone-split", None, None, Outcome::Split, closed);
    }

    let theorem = main_theorem_prediction(field, p, q)?;
    if let Some((_, division)) = theorem {
        rec.expect(
            "theorem-vs-engine",
            None,
            None,
            engine,
            Outcome::from_division(division),
        );
    }

    for ell in ELLS {
        let ell_p = OddPrime::new(ell)?;
        let dihedral = classify_extension(
            &ExtensionDescriptor::Dihedral {
                field: *field,
                ell: ell_p,
            },
            p,
            q,
        )?;
        rec.expect("dihedral-descent", Some(ell), None, closed, dihedral.result);
        if let Some((case, _)) = theorem {
            rec.expect(
                "dihedral-case",
                Some(ell),
                None,
                case.label().to_string(),
                dihedral.case_label(),
            );
        }
        for n in EXPONENTS {
            let unramified = classify_extension(
                &ExtensionDescriptor::UnramifiedAbelian {
                    field: *field,
                    ell: ell_p,
                    n,
                },
                p,
                q,
            )?;
            rec.expect(
                "unramified-descent",
                Some(ell),
                Some(n),
                closed,
                unramified.result,
            );
        }
    }
    Ok(Some(rec.out))
}

fn check_lemma(p: u64, q: u64) -> Result<Option<Vec<Mismatch>>> {
    let Some((case, predicted)) = lemma_discriminant_case(p, q)? else {
        return Ok(None);
    };
    let report = ramification_report(&QuaternionAlgebraQ::from_primes(p, q)?)?;
    let mut rec = Recorder {
        d: None,
        p,
        q,
        out: Vec::new(),
    };
    rec.expect(
        case.label(),
        None,
        None,
        predicted,
        report.reduced_discriminant,
    );
    rec.expect(
        "lemma-real-place",
        None,
        None,
        false,
        report.places.contains(&Place::Real),
    );
    Ok(Some(rec.out))
}

fn merge(parts: Vec<Result<(u64, Vec<Mismatch>)>>) -> Result<(u64, Vec<Mismatch>)> {
    let mut checked = 0;
    let mut all = Vec::new();
    for part in parts {
        let (c, m) = part?;
        checked += c;
        all.extend(m);
    }
    Ok((checked, all))
}

/// Compares closed forms, the place-based engine, the descent through odd
/// degree extensions and the discriminant predictions on a grid.
///
/// For every valid `d` in `d_range` and every ordered pair of distinct
/// primes below `prime_bound` that some closed-form criterion covers, the
/// closed-form, engine and extension verdicts (for `ℓ ∈ {3, 5, 7}`, and
/// `n ∈ {1, 2}` for unramified extensions) must agree. Every prime pair
/// covered by a discriminant case is checked against the ramification
/// report. Invalid entries of `d_range` are skipped. Grid points may be
/// evaluated in parallel; the report is sorted.
pub fn cross_validate(d_range: &[i64], prime_bound: u64) -> Result<MismatchReport> {
    let primes = primes_below(prime_bound);
    let mut ds: Vec<i64> = d_range.to_vec();
    ds.sort_unstable();
    ds.dedup();
    let fields: Vec<QuadraticField> = ds
        .iter()
        .filter_map(|&d| QuadraticField::new(d).ok())
        .collect();

    let grid = merge(
        fields
            .par_iter()
            .map(|field| {
                let mut checked = 0;
                let mut out = Vec::new();
                for &p in &primes {
                    for &q in &primes {
                        if p == q {
                            continue;
                        }
                        if let Some(m) = check_point(field, p, q)? {
                            checked += 1;
                            out.extend(m);
                        }
                    }
                }
                Ok((checked, out))
            })
            .collect(),
    )?;

    let lemma = merge(
        primes
            .par_iter()
            .map(|&p| {
                let mut checked = 0;
                let mut out = Vec::new();
                for &q in &primes {
                    if let Some(m) = check_lemma(p, q)? {
                        checked += 1;
                        out.extend(m);
                    }
                }
                Ok((checked, out))
            })
            .collect(),
    )?;

    let mut mismatches = grid.1;
    mismatches.extend(lemma.1);
    mismatches.sort();
    Ok(MismatchReport {
        checked: grid.0 + lemma.0,
        mismatches,
    })
}
