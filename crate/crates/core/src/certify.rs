//! Primeness certificates.
//!
//! A knot whose Alexander polynomial cannot be split into two non-unit
//! factors that could each be an Alexander polynomial, and whose genus equals
//! the top degree of the symmetrized polynomial, is prime. This module
//! decides the first condition for symmetric trinomials `a t^n + b + a t^-n`
//! by exhibiting the complete factorization over the integers, with an
//! irreducibility witness for every factor, and assembles the certificate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Unit};
use crate::seifert::{alexander, build_family, FamilySpec, SeifertError, SeifertMatrix};

/// Trial division stops here; larger cofactors are only used when they are
/// provably prime.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial {0} has content other than 1")]
    NonPrimitive(String),
    #[error("polynomial {0} is constant")]
    ConstantPolynomial(String),
    #[error("polynomial {0} has negative powers of t")]
    NotOrdinary(String),
    #[error("no irreducibility witness found for {0}")]
    NoWitnessFound(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("{0} is not an admissible Alexander polynomial")]
    NotAdmissible(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime divisors of `n` found by bounded trial division. A cofactor left
/// over when the bound is hit is dropped unless it is certainly prime, so
/// the list may be incomplete for huge inputs but never contains a
/// non-prime.
fn prime_divisors(n: &BigInt) -> Vec<u64> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT && BigInt::from(d) * BigInt::from(d) <= m {
        let bd = BigInt::from(d);
        if (&m % &bd).is_zero() {
            out.push(d);
            while (&m % &bd).is_zero() {
                m /= &bd;
            }
        }
        d += 1;
    }
    if m > BigInt::one() && BigInt::from(d) * BigInt::from(d) > m {
        if let Some(q) = m.to_u64() {
            out.push(q);
        }
    }
    out
}

/// All positive divisors of `n`, or `None` if `n` is zero or too large to
/// factor completely.
fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut divs = vec![BigInt::one()];
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= m {
        if d > TRIAL_DIVISION_LIMIT {
            return None;
        }
        let bd = BigInt::from(d);
        let mut power = 0;
        while (&m % &bd).is_zero() {
            m /= &bd;
            power += 1;
        }
        if power > 0 {
            let base = divs.clone();
            let mut pk = BigInt::one();
            for _ in 0..power {
                pk *= &bd;
                divs.extend(base.iter().map(|x| x * &pk));
            }
        }
        d += 1;
    }
    if m > BigInt::one() {
        let base = divs.clone();
        divs.extend(base.iter().map(|x| x * &m));
    }
    divs.sort();
    Some(divs)
}

/// Checks the preconditions shared by the irreducibility tests and returns
/// the coefficients `a_0..a_deg`.
fn ordinary_coeffs(p: &LaurentPoly) -> Result<Vec<BigInt>, CertifyError> {
    if !p.is_ordinary() {
        return Err(CertifyError::NotOrdinary(p.to_string()));
    }
    let deg = p.max_exp().unwrap_or(0);
    if deg < 1 {
        return Err(CertifyError::ConstantPolynomial(p.to_string()));
    }
    if !p.content().is_one() {
        return Err(CertifyError::NonPrimitive(p.to_string()));
    }
    Ok((0..=deg).map(|e| p.coeff(e)).collect())
}

fn reversed(p: &LaurentPoly) -> LaurentPoly {
    let deg = p.max_exp().unwrap_or(0);
    LaurentPoly::new(0, (0..=deg).rev().map(|e| p.coeff(e)).collect())
}

/// Eisenstein's criterion for the ordinary polynomial `p` at the prime `q`:
/// `q` divides every coefficient but the leading one, and `q^2` does not
/// divide the constant term.
pub fn eisenstein_check(p: &LaurentPoly, q: u64) -> Result<bool, CertifyError> {
    let coeffs = ordinary_coeffs(p)?;
    if !is_prime(q) {
        return Err(CertifyError::NotPrime(q));
    }
    let q = BigInt::from(q);
    let (lead, rest) = coeffs.split_last().expect("nonconstant");
    if lead.is_multiple_of(&q) {
        return Ok(false);
    }
    if !rest.iter().all(|c| c.is_multiple_of(&q)) {
        return Ok(false);
    }
    Ok(!coeffs[0].is_multiple_of(&(&q * &q)))
}

/// Whether `p` has a root `r/s` in the rationals. Returns `None` when the
/// end coefficients are too large to enumerate their divisors.
fn has_rational_root(coeffs: &[BigInt]) -> Option<bool> {
    if coeffs[0].is_zero() {
        return Some(true);
    }
    let numerators = positive_divisors(&coeffs[0])?;
    let denominators = positive_divisors(coeffs.last().unwrap())?;
    let deg = coeffs.len() - 1;
    for s in &denominators {
        for r in &numerators {
            if !r.gcd(s).is_one() {
                continue;
            }
            for r in [r.clone(), -r] {
                // s^deg * p(r / s)
                let value: BigInt = coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * r.pow(i as u32) * s.pow((deg - i) as u32))
                    .sum();
                if value.is_zero() {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}

/// Why a factor is irreducible over the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibilityWitness {
    /// Eisenstein's criterion holds at `prime`, for the coefficient-reversed
    /// polynomial when `on_reciprocal` is set.
    Eisenstein { prime: u64, on_reciprocal: bool },
    /// Primitive of degree one.
    Linear,
    /// Primitive of degree two or three without a rational root.
    NoRationalRoot,
}

impl IrreducibilityWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            IrreducibilityWitness::Eisenstein { .. } => "eisenstein",
            IrreducibilityWitness::Linear => "linear",
            IrreducibilityWitness::NoRationalRoot => "no_rational_root",
        }
    }

    pub fn eisenstein_prime(&self) -> Option<u64> {
        match self {
            IrreducibilityWitness::Eisenstein { prime, .. } => Some(*prime),
            _ => None,
        }
    }

    pub fn on_reciprocal(&self) -> bool {
        matches!(
            self,
            IrreducibilityWitness::Eisenstein {
                on_reciprocal: true,
                ..
            }
        )
    }

    /// Rechecks the witness against `p` from scratch.
    pub fn verify(&self, p: &LaurentPoly) -> bool {
        let Ok(coeffs) = ordinary_coeffs(p) else {
            return false;
        };
        match *self {
            IrreducibilityWitness::Eisenstein {
                prime,
                on_reciprocal,
            } => {
                if on_reciprocal {
                    // reversal preserves irreducibility only when t does not divide p
                    !coeffs[0].is_zero() && eisenstein_check(&reversed(p), prime).unwrap_or(false)
                } else {
                    eisenstein_check(p, prime).unwrap_or(false)
                }
            }
            IrreducibilityWitness::Linear => coeffs.len() == 2,
            IrreducibilityWitness::NoRationalRoot => {
                (3..=4).contains(&coeffs.len()) && has_rational_root(&coeffs) == Some(false)
            }
        }
    }
}

impl fmt::Display for IrreducibilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibilityWitness::Eisenstein {
                prime,
                on_reciprocal: false,
            } => write!(f, "Eisenstein at {prime}"),
            IrreducibilityWitness::Eisenstein {
                prime,
                on_reciprocal: true,
            } => write!(f, "Eisenstein at {prime} on the reversed polynomial"),
            IrreducibilityWitness::Linear => f.write_str("primitive linear"),
            IrreducibilityWitness::NoRationalRoot => {
                f.write_str("primitive of degree <= 3 with no rational root")
            }
        }
    }
}

/// Finds a witness that the primitive ordinary polynomial `p` is
/// irreducible over the integers.
///
/// Tries Eisenstein at the primes dividing the constant term, then at the
/// primes dividing the leading coefficient on the reversed polynomial, then
/// the degree-based tests.
pub fn irreducibility_witness(p: &LaurentPoly) -> Result<IrreducibilityWitness, CertifyError> {
    let coeffs = ordinary_coeffs(p)?;
    let constant = &coeffs[0];
    if !constant.is_zero() {
        for q in prime_divisors(constant) {
            if eisenstein_check(p, q)? {
                return Ok(IrreducibilityWitness::Eisenstein {
                    prime: q,
                    on_reciprocal: false,
                });
            }
        }
        let rev = reversed(p);
        for q in prime_divisors(coeffs.last().unwrap()) {
            if eisenstein_check(&rev, q)? {
                return Ok(IrreducibilityWitness::Eisenstein {
                    prime: q,
                    on_reciprocal: true,
                });
            }
        }
    }
    match coeffs.len() - 1 {
        1 => Ok(IrreducibilityWitness::Linear),
        2 | 3 if has_rational_root(&coeffs) == Some(false) => {
            Ok(IrreducibilityWitness::NoRationalRoot)
        }
        _ => Err(CertifyError::NoWitnessFound(p.to_string())),
    }
}

/// A factor together with its irreducibility witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedFactor {
    pub poly: LaurentPoly,
    pub witness: IrreducibilityWitness,
}

impl CertifiedFactor {
    pub fn to_json(&self) -> Value {
        json!({
            "poly": self.poly.to_string(),
            "witness": self.witness.kind(),
            "eisenstein_prime": self.witness.eisenstein_prime(),
            "on_reciprocal": self.witness.on_reciprocal(),
        })
    }
}

/// `input = unit * product(factors)` with every factor certified
/// irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationCertificate {
    pub input: LaurentPoly,
    pub factors: Vec<CertifiedFactor>,
    pub unit: Unit,
}

impl FactorizationCertificate {
    pub fn product(&self) -> LaurentPoly {
        self.unit.apply(
            &self
                .factors
                .iter()
                .map(|f| &f.poly)
                .product::<LaurentPoly>(),
        )
    }

    pub fn verify(&self) -> Result<(), String> {
        if self.product() != self.input {
            return Err(format!(
                "unit * product of factors = {}, expected {}",
                self.product(),
                self.input
            ));
        }
        for f in &self.factors {
            if !f.witness.verify(&f.poly) {
                return Err(format!("witness `{}` fails for {}", f.witness, f.poly));
            }
        }
        Ok(())
    }
}

/// Factors a symmetric trinomial `a t^n + b + a t^-n` (content 1) over the
/// integers.
///
/// With `u = t^n`, `t^n p = a u^2 + b u + a`; its integer factorizations
/// into linear factors in `u` are enumerated through the divisors of `a`.
/// If none exists and `n = 1` the quadratic itself is certified
/// irreducible; for larger `n` an irreducible quadratic in `u` may still
/// split in `t`, so certification fails with `NoWitnessFound`.
pub fn factor_trinomial(p: &LaurentPoly) -> Result<FactorizationCertificate, CertifyError> {
    let shape_err = || {
        CertifyError::UnsupportedShape(format!(
            "{p} is not of the form a*t^n + b + a*t^-n with a, b nonzero"
        ))
    };
    let n = p.max_exp().ok_or_else(shape_err)?;
    if n < 1 || p.min_exp() != -n || p.term_count() != 3 || p.coeff(0).is_zero() {
        return Err(shape_err());
    }
    let a = p.coeff(n);
    if p.coeff(-n) != a {
        return Err(shape_err());
    }
    if !p.content().is_one() {
        return Err(CertifyError::NonPrimitive(p.to_string()));
    }
    let b = p.coeff(0);
    let divisors = positive_divisors(&a).ok_or_else(|| {
        CertifyError::UnsupportedShape(format!("outer coefficient of {p} is too large to factor"))
    })?;

    // lead * t^n + constant
    let in_u = |lead: &BigInt, constant: &BigInt| {
        LaurentPoly::monomial(lead.clone(), n) + LaurentPoly::constant(constant.clone())
    };

    for p1 in &divisors {
        let p2 = &a / p1;
        for d in &divisors {
            for q1 in [d.clone(), -d] {
                let q2 = &a / &q1;
                if p1 * &q2 + &p2 * &q1 != b {
                    continue;
                }
                // Keep both leading coefficients positive; the sign moves
                // into the unit.
                let (p2, q2, sign) = if p2.is_negative() {
                    (-&p2, -q2, -1)
                } else {
                    (p2.clone(), q2, 1)
                };
                let mut factors = Vec::with_capacity(2);
                for (lead, constant) in [(p1.clone(), q1), (p2, q2)] {
                    let poly = in_u(&lead, &constant);
                    let witness = irreducibility_witness(&poly)?;
                    factors.push(CertifiedFactor { poly, witness });
                }
                factors.sort_by(|x, y| x.poly.cmp(&y.poly));
                let cert = FactorizationCertificate {
                    input: p.clone(),
                    factors,
                    unit: Unit::new(sign, -n),
                };
                debug_assert!(cert.verify().is_ok());
                return Ok(cert);
            }
        }
    }

    let whole = p.shift(n);
    let witness = irreducibility_witness(&whole)?;
    Ok(FactorizationCertificate {
        input: p.clone(),
        factors: vec![CertifiedFactor {
            poly: whole,
            witness,
        }],
        unit: Unit::new(1, -n),
    })
}

/// Big integers as plain JSON numbers (exact under `arbitrary_precision`).
mod integer {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Number::from_str(&v.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map_err(D::Error::custom)
    }
}

/// Whether `p` satisfies the two necessary conditions for being a knot's
/// Alexander polynomial: symmetric up to a unit, and `p(1) = ±1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityVerdict {
    pub symmetric_ok: bool,
    #[serde(with = "integer")]
    pub eval_one: BigInt,
    pub admissible: bool,
}

pub fn is_admissible_alexander(p: &LaurentPoly) -> AdmissibilityVerdict {
    let symmetric_ok = p.symmetrize().is_ok();
    let eval_one = p.eval_at_one();
    let admissible = symmetric_ok && eval_one.abs().is_one();
    AdmissibilityVerdict {
        symmetric_ok,
        eval_one,
        admissible,
    }
}

/// One way of grouping the irreducible factors into two non-unit sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    /// Indices into the factor list; the right side holds the rest.
    pub left_factors: Vec<usize>,
    pub left: LaurentPoly,
    pub right: LaurentPoly,
    pub left_verdict: AdmissibilityVerdict,
    pub right_verdict: AdmissibilityVerdict,
}

impl Split {
    /// A split is rejected when at least one side cannot be an Alexander
    /// polynomial.
    pub fn rejected(&self) -> bool {
        !(self.left_verdict.admissible && self.right_verdict.admissible)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "left_factors": self.left_factors,
            "left": self.left.to_string(),
            "right": self.right.to_string(),
            "left_verdict": self.left_verdict,
            "right_verdict": self.right_verdict,
            "rejected": self.rejected(),
        })
    }
}

fn splits_of(factors: &[CertifiedFactor]) -> Vec<Split> {
    let k = factors.len();
    if k < 2 {
        return Vec::new();
    }
    // each unordered split once: factor 0 always sits on the left
    let full = (1u64 << k) - 1;
    (1..full)
        .filter(|mask| mask & 1 == 1)
        .map(|mask| {
            let left_factors: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            let side = |on_left: bool| -> LaurentPoly {
                (0..k)
                    .filter(|i| (mask >> i & 1 == 1) == on_left)
                    .map(|i| &factors[i].poly)
                    .product()
            };
            let left = side(true);
            let right = side(false);
            Split {
                left_factors,
                left_verdict: is_admissible_alexander(&left),
                right_verdict: is_admissible_alexander(&right),
                left,
                right,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AIrreducibility {
    pub irreducible: bool,
    pub factorization: FactorizationCertificate,
    pub splits: Vec<Split>,
}

/// Decides whether the admissible polynomial `p` has no factorization into
/// two non-unit admissible factors.
///
/// The complete factorization into certified irreducibles is computed and
/// every grouping of its factors into two sides is checked, so a `true`
/// answer rests on unique factorization in `Z[t, t^-1]`.
pub fn a_irreducible(p: &LaurentPoly) -> Result<AIrreducibility, CertifyError> {
    if !is_admissible_alexander(p).admissible {
        return Err(CertifyError::NotAdmissible(p.to_string()));
    }
    let (sym, _) = p.symmetrize()?;
    let factorization = factor_trinomial(&sym)?;
    let splits = splits_of(&factorization.factors);
    Ok(AIrreducibility {
        irreducible: splits.iter().all(Split::rejected),
        factorization,
        splits,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Prime,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Prime => "Prime",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimenessCertificate {
    /// Symmetrized Alexander polynomial.
    pub delta: LaurentPoly,
    pub d: i64,
    /// Genus of the Seifert surface the matrix came from.
    pub surface_genus: u32,
    /// Knot genus when the squeeze `d <= g <= surface_genus` pins it.
    pub genus: Option<u32>,
    pub genus_argument: String,
    pub factorization: Option<FactorizationCertificate>,
    pub splits: Vec<Split>,
    pub verdict: Verdict,
    /// Failing steps when the verdict is inconclusive.
    pub reasons: Vec<String>,
}

/// Certifies primeness from an Alexander polynomial (any representative up
/// to units) and the genus of a Seifert surface realizing it.
pub fn certify_delta(
    delta: &LaurentPoly,
    surface_genus: u32,
) -> Result<PrimenessCertificate, CertifyError> {
    let (delta, _) = delta.symmetrize()?;
    let d = delta.top_degree()?;
    let mut reasons = Vec::new();

    let (genus, genus_argument) = if d == surface_genus as i64 {
        (
            Some(surface_genus),
            format!("d(K) = {d} <= g(K) <= {surface_genus} = surface genus, so g(K) = {d}"),
        )
    } else {
        reasons.push(format!(
            "genus not determined: d(K) = {d} < {surface_genus} = surface genus"
        ));
        (
            None,
            format!("d(K) = {d} <= g(K) <= {surface_genus} = surface genus; bounds differ"),
        )
    };

    let (factorization, splits) = match a_irreducible(&delta) {
        Ok(res) => {
            if !res.irreducible {
                reasons.push("admissible split exists: not A-irreducible".to_string());
            }
            (Some(res.factorization), res.splits)
        }
        Err(e) => {
            reasons.push(format!("A-irreducibility not certified: {e}"));
            (None, Vec::new())
        }
    };

    let verdict = if reasons.is_empty() {
        Verdict::Prime
    } else {
        Verdict::Inconclusive
    };
    Ok(PrimenessCertificate {
        delta,
        d,
        surface_genus,
        genus,
        genus_argument,
        factorization,
        splits,
        verdict,
        reasons,
    })
}

pub fn primeness_certificate(s: &SeifertMatrix) -> Result<PrimenessCertificate, CertifyError> {
    let result = alexander(s)?;
    certify_delta(&result.raw, s.genus())
}

pub fn certify_family(spec: FamilySpec) -> Result<PrimenessCertificate, CertifyError> {
    primeness_certificate(&build_family(spec))
}

impl PrimenessCertificate {
    /// Re-derives every claim in the certificate from its own data.
    pub fn verify(&self) -> Result<(), String> {
        if !self.delta.is_symmetric()
            || !self.delta.leading_coeff().is_some_and(|c| c.is_positive())
        {
            return Err(format!(
                "delta {} is not in symmetric normal form",
                self.delta
            ));
        }
        if self.delta.top_degree().ok() != Some(self.d) {
            return Err("d is not the top degree of delta".into());
        }
        if let Some(g) = self.genus {
            if g as i64 != self.d || g != self.surface_genus {
                return Err("genus claimed without a closed squeeze".into());
            }
        }
        if let Some(fact) = &self.factorization {
            if fact.input != self.delta {
                return Err("factorization is of a different polynomial".into());
            }
            fact.verify()?;
            let recomputed = splits_of(&fact.factors);
            if recomputed != self.splits {
                return Err("recorded splits differ from recomputed ones".into());
            }
        } else if !self.splits.is_empty() {
            return Err("splits recorded without a factorization".into());
        }
        if self.verdict == Verdict::Prime {
            if self.genus.is_none() {
                return Err("Prime verdict without determined genus".into());
            }
            if self.factorization.is_none() {
                return Err("Prime verdict without a factorization".into());
            }
            if !self.splits.iter().all(Split::rejected) {
                return Err("Prime verdict with an admissible split".into());
            }
            if !self.reasons.is_empty() {
                return Err("Prime verdict with recorded failures".into());
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "delta": self.delta.to_string(),
            "d": self.d,
            "genus": self.genus,
            "surface_genus": self.surface_genus,
            "genus_argument": self.genus_argument,
            "unit": self.factorization.as_ref().map(|f| f.unit.to_string()),
            "factors": self.factorization.as_ref().map_or_else(Vec::new, |f| {
                f.factors.iter().map(CertifiedFactor::to_json).collect()
            }),
            "rejected_splits": self.splits.iter().map(Split::to_json).collect::<Vec<_>>(),
            "verdict": self.verdict.to_string(),
            "reasons": self.reasons,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::FamilyKind;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_divisors(&BigInt::from(-360)), vec![2, 3, 5]);
        assert_eq!(prime_divisors(&BigInt::from(1)), Vec::<u64>::new());
        assert_eq!(prime_divisors(&BigInt::from(97)), vec![97]);
        let divs: Vec<i64> = positive_divisors(&BigInt::from(12))
            .unwrap()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect();
        assert_eq!(divs, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn eisenstein_examples() {
        for n in 1..6 {
            let f = LaurentPoly::monomial(1, n) - LaurentPoly::constant(2);
            assert!(eisenstein_check(&f, 2).unwrap());
            let g = LaurentPoly::monomial(2, n) - LaurentPoly::constant(3);
            assert!(eisenstein_check(&g, 3).unwrap());
        }
        assert!(!eisenstein_check(&p("t^2 - 1"), 2).unwrap());
        // q^2 divides the constant term
        assert!(!eisenstein_check(&p("t^2 - 4"), 2).unwrap());
        // q divides the leading coefficient
        assert!(!eisenstein_check(&p("2*t^2 - 2*t + 1"), 2).unwrap_or(true));
    }

    #[test]
    fn eisenstein_errors() {
        assert!(matches!(
            eisenstein_check(&p("t - 2"), 4),
            Err(CertifyError::NotPrime(4))
        ));
        assert!(matches!(
            eisenstein_check(&p("2*t - 4"), 3),
            Err(CertifyError::NonPrimitive(_))
        ));
        assert!(matches!(
            eisenstein_check(&p("5"), 5),
            Err(CertifyError::ConstantPolynomial(_))
        ));
        assert!(matches!(
            eisenstein_check(&p("t - 2*t^-1"), 2),
            Err(CertifyError::NotOrdinary(_))
        ));
    }

    #[test]
    fn witness_examples() {
        for n in 1..6 {
            let f = LaurentPoly::monomial(2, n) - LaurentPoly::one();
            assert_eq!(
                irreducibility_witness(&f).unwrap(),
                IrreducibilityWitness::Eisenstein {
                    prime: 2,
                    on_reciprocal: true
                }
            );
            let g = LaurentPoly::monomial(3, n) - LaurentPoly::constant(2);
            assert_eq!(
                irreducibility_witness(&g).unwrap(),
                IrreducibilityWitness::Eisenstein {
                    prime: 2,
                    on_reciprocal: false
                }
            );
        }
        assert!(matches!(
            irreducibility_witness(&p("t^4 + t^2 + 1")),
            Err(CertifyError::NoWitnessFound(_))
        ));
        assert_eq!(
            irreducibility_witness(&p("t + 1")).unwrap(),
            IrreducibilityWitness::Linear
        );
        assert_eq!(
            irreducibility_witness(&p("t^2 + t + 1")).unwrap(),
            IrreducibilityWitness::NoRationalRoot
        );
        // reducible cubic with a rational root: no witness
        assert!(irreducibility_witness(&p("2*t^3 - t^2 + 2*t - 1")).is_err());
    }

    #[test]
    fn witness_verification_rejects_forgeries() {
        let f = p("t^2 - 2");
        let fake = IrreducibilityWitness::Eisenstein {
            prime: 3,
            on_reciprocal: false,
        };
        assert!(!fake.verify(&f));
        assert!(!IrreducibilityWitness::Linear.verify(&f));
        assert!(!IrreducibilityWitness::NoRationalRoot.verify(&p("t^2 - 1")));
        // reversal is not valid when t divides the polynomial
        let g = p("t^3 - 2*t");
        assert!(!IrreducibilityWitness::Eisenstein {
            prime: 2,
            on_reciprocal: true
        }
        .verify(&g));
    }

    fn factor_polys(cert: &FactorizationCertificate) -> Vec<LaurentPoly> {
        cert.factors.iter().map(|f| f.poly.clone()).collect()
    }

    #[test]
    fn factor_trinomial_examples() {
        let cert = factor_trinomial(&p("2*t^3 - 5 + 2*t^-3")).unwrap();
        let mut expected = vec![p("2*t^3 - 1"), p("t^3 - 2")];
        expected.sort();
        assert_eq!(factor_polys(&cert), expected);
        assert_eq!(cert.unit, Unit::new(1, -3));
        cert.verify().unwrap();

        let cert = factor_trinomial(&p("6*t^2 - 13 + 6*t^-2")).unwrap();
        let mut expected = vec![p("2*t^2 - 3"), p("3*t^2 - 2")];
        expected.sort();
        assert_eq!(factor_polys(&cert), expected);
        assert_eq!(cert.unit, Unit::new(1, -2));
        cert.verify().unwrap();

        let cert = factor_trinomial(&p("t + 1 + t^-1")).unwrap();
        assert_eq!(factor_polys(&cert), vec![p("t^2 + t + 1")]);
        assert_eq!(
            cert.factors[0].witness,
            IrreducibilityWitness::NoRationalRoot
        );
        cert.verify().unwrap();
    }

    #[test]
    fn factor_trinomial_shape_guard() {
        for bad in [
            "t^2 - 4*t + 8 - 4*t^-1 + t^-2",
            "2*t^2 - 5 + 3*t^-2",
            "t + t^-1",
            "2*t - 5",
            "1",
            "t^2 - 5 + t^-1",
        ] {
            assert!(
                matches!(
                    factor_trinomial(&p(bad)),
                    Err(CertifyError::UnsupportedShape(_))
                ),
                "{bad}"
            );
        }
        assert!(matches!(
            factor_trinomial(&p("2*t - 4 + 2*t^-1")),
            Err(CertifyError::NonPrimitive(_))
        ));
    }

    #[test]
    fn negative_outer_coefficient() {
        // -2u^2 + 5u - 2 = -(2u - 1)(u - 2)
        let q = p("-2*t^2 + 5 - 2*t^-2");
        let cert = factor_trinomial(&q).unwrap();
        cert.verify().unwrap();
        assert_eq!(cert.unit.sign(), -1);
    }

    #[test]
    fn irreducible_in_u_but_not_in_t_is_not_certified() {
        // u^2 + u + 1 is irreducible, but t^4 + t^2 + 1 splits
        assert!(matches!(
            factor_trinomial(&p("t^2 + 1 + t^-2")),
            Err(CertifyError::NoWitnessFound(_))
        ));
    }

    #[test]
    fn admissibility_examples() {
        for n in 1..5 {
            let delta = FamilyKind::C.template().substitute_power(n);
            let v = is_admissible_alexander(&delta);
            assert!(v.symmetric_ok && v.admissible);
            assert_eq!(v.eval_one, BigInt::from(-1));
            let f = LaurentPoly::monomial(2, n as i64) - LaurentPoly::one();
            let v = is_admissible_alexander(&f);
            assert!(!v.symmetric_ok && !v.admissible);
            assert_eq!(v.eval_one, BigInt::from(1));
        }
        assert!(is_admissible_alexander(&LaurentPoly::one()).admissible);
        // symmetric but Δ(1) = 3
        assert!(!is_admissible_alexander(&p("t + 1 + t^-1")).admissible);
    }

    #[test]
    fn a_irreducible_examples() {
        for n in 1..5 {
            for kind in [FamilyKind::C, FamilyKind::E] {
                let res = a_irreducible(&kind.template().substitute_power(n)).unwrap();
                assert!(res.irreducible);
                assert_eq!(res.splits.len(), 1);
                let split = &res.splits[0];
                assert!(!split.left_verdict.symmetric_ok);
                assert!(!split.right_verdict.symmetric_ok);
            }
        }
        // both factors are admissible; the product leaves the trinomial shape
        let product = p("t - 1 + t^-1") * p("t - 3 + t^-1");
        assert_eq!(product, p("t^2 - 4*t + 5 - 4*t^-1 + t^-2"));
        assert!(matches!(
            a_irreducible(&product),
            Err(CertifyError::UnsupportedShape(_))
        ));
        assert!(matches!(
            a_irreducible(&p("2*t^3 - 1")),
            Err(CertifyError::NotAdmissible(_))
        ));
    }

    #[test]
    fn certificate_examples() {
        let cert = certify_family(FamilySpec::new(FamilyKind::C, 4).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::Prime);
        assert_eq!(cert.genus, Some(4));
        assert_eq!(cert.d, 4);
        let mut expected = vec![p("2*t^4 - 1"), p("t^4 - 2")];
        expected.sort();
        assert_eq!(factor_polys(cert.factorization.as_ref().unwrap()), expected);
        cert.verify().unwrap();

        let cert = certify_family(FamilySpec::new(FamilyKind::E, 2).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::Prime);
        assert_eq!(cert.genus, Some(2));
        cert.verify().unwrap();

        let unknotish = SeifertMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        let cert = primeness_certificate(&unknotish).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert_eq!(cert.genus, None);
        assert_eq!(cert.d, 0);
        assert!(cert.reasons[0].contains("genus not determined"));
        cert.verify().unwrap();
    }

    #[test]
    fn tampered_certificates_fail_verification() {
        let good = certify_family(FamilySpec::new(FamilyKind::C, 2).unwrap()).unwrap();

        let mut bad = good.clone();
        bad.factorization.as_mut().unwrap().factors[0].poly = p("t^2 - 3");
        assert!(bad.verify().is_err());

        let mut bad = good.clone();
        bad.genus = Some(3);
        assert!(bad.verify().is_err());

        let mut bad = good.clone();
        bad.splits[0].left_verdict.admissible = true;
        assert!(bad.verify().is_err());

        let mut bad = good;
        bad.factorization.as_mut().unwrap().factors[1].witness = IrreducibilityWitness::Linear;
        assert!(bad.verify().is_err());
    }

    #[test]
    fn certificate_json_fields() {
        let cert = certify_family(FamilySpec::new(FamilyKind::C, 3).unwrap()).unwrap();
        let doc = cert.to_json();
        assert_eq!(doc["delta"], "2*t^3 - 5 + 2*t^-3");
        assert_eq!(doc["d"], 3);
        assert_eq!(doc["genus"], 3);
        assert_eq!(doc["verdict"], "Prime");
        let factors = doc["factors"].as_array().unwrap();
        assert_eq!(factors.len(), 2);
        for f in factors {
            assert!(f["poly"].is_string());
            assert_eq!(f["eisenstein_prime"], 2);
            assert!(f["on_reciprocal"].is_boolean());
        }
        assert_eq!(doc["rejected_splits"].as_array().unwrap().len(), 1);
    }
}
