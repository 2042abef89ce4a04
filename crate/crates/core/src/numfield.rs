//! Number fields `K = Q(θ)` presented by a monic integer polynomial, their
//! elements in the power basis, primes `λ` above a rational prime `ℓ`, and
//! the reduction map into the residue field `k_λ`.
//!
//! The order used is the equation order `Z[θ]`, not the maximal order. When
//! `ℓ` divides the discriminant of the defining polynomial, the factorization
//! of `g mod ℓ` need not reflect the true splitting, so every prime above
//! such `ℓ` is flagged and reductions at it refuse to produce a value:
//! callers must treat the affected checks as inconclusive, never as false.

use crate::arith::{inv_mod, is_prime};
use crate::ffkernel::{factor_mod_p, FfError, FpPoly, FqElement, ResidueField};
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Rational-root scanning gives up beyond this bound on the root magnitude.
const ROOT_SCAN_BOUND: i64 = 100_000;
/// Constant terms beyond this bound are not factored for the quartic search.
const DIVISOR_SEARCH_BOUND: u64 = 1_000_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumFieldError {
    #[error("defining polynomial must be monic with degree >= 1")]
    NotMonic,
    #[error("defining polynomial is reducible over Q: {0}")]
    ReducibleDefiningPolynomial(String),
    #[error("element has {got} coordinates but the field has degree {expected}")]
    CoordinateLength { expected: usize, got: usize },
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("denominator is divisible by {ell}, reduction undefined")]
    DenominatorNotInvertible { ell: u64 },
    #[error(
        "prime above {ell} carries a ramified-or-index warning; reduction is indeterminate"
    )]
    IndeterminateReduction { ell: u64 },
    #[error(transparent)]
    Kernel(#[from] FfError),
}

/// A number field `Q[x]/(g)` with `g` monic and integral.
#[derive(Clone)]
pub struct NumberField(Arc<NfInner>);

struct NfInner {
    /// Monic defining polynomial, constant term first.
    g: Vec<BigInt>,
    degree: usize,
    /// False when irreducibility rests on the user's assertion rather than
    /// the bounded verification.
    irreducibility_verified: bool,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.0.g == other.0.g
    }
}
impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(degree {}, g = {:?})", self.0.degree, self.0.g)
    }
}

impl NumberField {
    /// Build the field, rejecting defining polynomials that the bounded
    /// search shows to be reducible.
    pub fn new(g: Vec<BigInt>) -> Result<Self, NumFieldError> {
        let degree = g.len().checked_sub(1).ok_or(NumFieldError::NotMonic)?;
        if degree == 0 || !g.last().map_or(false, |c| c.is_one()) {
            return Err(NumFieldError::NotMonic);
        }
        let irreducibility_verified = match irreducibility_check(&g) {
            Irreducibility::Reducible(why) => {
                return Err(NumFieldError::ReducibleDefiningPolynomial(why))
            }
            Irreducibility::Verified => true,
            Irreducibility::Unverified => false,
        };
        Ok(NumberField(Arc::new(NfInner { g, degree, irreducibility_verified })))
    }

    /// The rational field presented as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()]).expect("x is irreducible")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Defining polynomial coefficients, constant term first.
    pub fn defining(&self) -> &[BigInt] {
        &self.0.g
    }

    /// True when irreducibility was established by the bounded check rather
    /// than asserted by the record's author.
    pub fn irreducibility_verified(&self) -> bool {
        self.0.irreducibility_verified
    }

    pub fn zero(&self) -> AlgebraicNumber {
        self.from_integer(0)
    }

    pub fn one(&self) -> AlgebraicNumber {
        self.from_integer(1)
    }

    pub fn from_integer(&self, v: i64) -> AlgebraicNumber {
        let mut num = vec![BigInt::zero(); self.0.degree];
        num[0] = BigInt::from(v);
        AlgebraicNumber::new(self.clone(), num, BigInt::one()).expect("integer embeds")
    }

    /// The power-basis generator `θ`.
    pub fn generator(&self) -> AlgebraicNumber {
        let mut num = vec![BigInt::zero(); self.0.degree];
        if self.0.degree == 1 {
            // Q[x]/(x): θ = 0
        } else {
            num[1] = BigInt::one();
        }
        AlgebraicNumber::new(self.clone(), num, BigInt::one()).expect("generator embeds")
    }

    /// Reduce a product-length coefficient vector modulo `g` in place.
    fn reduce_vec(&self, coeffs: &mut Vec<BigInt>) {
        let d = self.0.degree;
        let g = &self.0.g;
        for i in (d..coeffs.len()).rev() {
            if coeffs[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[i], BigInt::zero());
            for k in 0..d {
                let sub = &c * &g[k];
                coeffs[i - d + k] -= sub;
            }
        }
        coeffs.truncate(d);
        coeffs.resize(d, BigInt::zero());
    }
}

enum Irreducibility {
    Verified,
    Reducible(String),
    Unverified,
}

/// Bounded irreducibility check: rational-root scan always, plus the
/// quadratic-times-quadratic search for quartics. Degrees above four stay
/// user-asserted.
fn irreducibility_check(g: &[BigInt]) -> Irreducibility {
    let degree = g.len() - 1;
    if degree == 1 {
        return Irreducibility::Verified;
    }
    if g[0].is_zero() {
        return Irreducibility::Reducible("x divides the defining polynomial".into());
    }
    let max_coeff = g.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let cauchy = max_coeff + 1; // all complex roots have |z| <= 1 + max|coeff| for monic g
    let mut scan_complete = true;
    let bound = if cauchy <= BigInt::from(ROOT_SCAN_BOUND) {
        i64::try_from(&cauchy).expect("bounded")
    } else {
        scan_complete = false;
        ROOT_SCAN_BOUND
    };
    for m in -bound..=bound {
        if eval_int(g, &BigInt::from(m)).is_zero() {
            return Irreducibility::Reducible(format!("rational root x = {m}"));
        }
    }
    if degree <= 3 {
        // any factorization of a cubic or quadratic contains a linear factor
        return if scan_complete { Irreducibility::Verified } else { Irreducibility::Unverified };
    }
    if degree == 4 {
        match quartic_quadratic_split(g) {
            Some(Some(desc)) => return Irreducibility::Reducible(desc),
            Some(None) if scan_complete => return Irreducibility::Verified,
            _ => return Irreducibility::Unverified,
        }
    }
    Irreducibility::Unverified
}

/// Search for g = (x^2+ax+b)(x^2+cx+d) with integer coefficients.
/// `None` means the search could not be completed; `Some(None)` means no
/// split exists; `Some(Some(_))` describes a split.
fn quartic_quadratic_split(g: &[BigInt]) -> Option<Option<String>> {
    let g0 = &g[0];
    let g1 = &g[1];
    let g2 = &g[2];
    let g3 = &g[3];
    let abs0 = g0.abs();
    let small: u64 = match (&abs0).try_into() {
        Ok(v) if v <= DIVISOR_SEARCH_BOUND => v,
        _ => return None,
    };
    let mut divisors = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            divisors.push(d);
            divisors.push(small / d);
        }
        d += 1;
    }
    for &bd in &divisors {
        for b_sign in [1i64, -1] {
            let b = BigInt::from(bd) * b_sign;
            if b.is_zero() {
                continue;
            }
            let d = g0 / &b;
            // a + c = g3, ac = g2 - b - d => roots of t^2 - g3 t + (g2-b-d)
            let prod = g2 - &b - &d;
            let disc = g3 * g3 - BigInt::from(4) * &prod;
            if disc.is_negative() {
                continue;
            }
            let root = disc.sqrt();
            if &root * &root != disc {
                continue;
            }
            for sgn in [1, -1] {
                let two_a = g3 + BigInt::from(sgn) * &root;
                if (&two_a % 2) != BigInt::zero() {
                    continue;
                }
                let a = two_a / 2;
                let c = g3 - &a;
                if &a * &d + &b * &c == *g1 {
                    return Some(Some(format!(
                        "(x^2 + {a}x + {b})(x^2 + {c}x + {d})"
                    )));
                }
            }
        }
    }
    Some(None)
}

fn eval_int(g: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in g.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// An element of a number field: power-basis coordinates over a common
/// positive denominator, with `gcd(content, den) = 1`.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: NumberField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.num == other.num && self.den == other.den
    }
}
impl Eq for AlgebraicNumber {}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/{}", self.num, self.den)
    }
}

impl AlgebraicNumber {
    pub fn new(
        field: NumberField,
        num: Vec<BigInt>,
        den: BigInt,
    ) -> Result<Self, NumFieldError> {
        if num.len() != field.degree() {
            return Err(NumFieldError::CoordinateLength {
                expected: field.degree(),
                got: num.len(),
            });
        }
        if den.is_zero() {
            return Err(NumFieldError::ZeroDenominator);
        }
        let mut v = AlgebraicNumber { field, num, den };
        v.normalize();
        Ok(v)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            g = g.gcd(c);
        }
        if g > BigInt::one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num.iter().skip(1).all(|c| c.is_zero())
    }

    /// The rational integer value, when the element is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.num[0].clone())
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(self.field == other.field, "elements of different number fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let num: Vec<BigInt> = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        AlgebraicNumber::new(self.field.clone(), num, &self.den * &other.den)
            .expect("normalized sum")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let num = self.num.iter().map(|c| -c.clone()).collect();
        AlgebraicNumber { field: self.field.clone(), num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let d = self.field.degree();
        let mut coeffs = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        self.field.reduce_vec(&mut coeffs);
        AlgebraicNumber::new(self.field.clone(), coeffs, &self.den * &other.den)
            .expect("normalized product")
    }

    pub fn mul_integer(&self, v: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * v).collect();
        AlgebraicNumber::new(self.field.clone(), num, self.den.clone()).expect("scaled")
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = self.field.one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A prime `λ` of `K` over `ℓ`, realized by a monic irreducible factor of
/// the defining polynomial mod `ℓ`.
#[derive(Clone)]
pub struct PrimeAbove {
    ell: u64,
    field: NumberField,
    local_factor: FpPoly,
    residue: ResidueField,
    multiplicity: u32,
    index_warning: bool,
    index: usize,
}

impl PrimeAbove {
    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn local_factor(&self) -> &FpPoly {
        &self.local_factor
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    pub fn residue_degree(&self) -> usize {
        self.residue.degree()
    }

    /// True when this factor occurs with multiplicity above one in
    /// `g mod ℓ`.
    pub fn is_ramified(&self) -> bool {
        self.multiplicity > 1
    }

    /// True when `ℓ` divides `disc(g)`, i.e. some factor of `g mod ℓ` is
    /// repeated. Reductions at such primes are indeterminate.
    pub fn has_index_warning(&self) -> bool {
        self.index_warning
    }

    /// Position of this prime in the deterministic ordering of the primes
    /// above `ℓ`.
    pub fn index(&self) -> usize {
        self.index
    }
}

impl fmt::Debug for PrimeAbove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "λ_{}|{} (deg {}{})",
            self.index,
            self.ell,
            self.residue_degree(),
            if self.index_warning { ", warned" } else { "" }
        )
    }
}

/// The primes of `K` above `ℓ`: one per distinct irreducible factor of
/// `g mod ℓ`, ordered by degree then coefficients.
pub fn primes_above(
    field: &NumberField,
    ell: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<PrimeAbove>, NumFieldError> {
    if !is_prime(ell) {
        return Err(FfError::NonPrimeModulus(ell).into());
    }
    let factors = factor_mod_p(field.defining(), ell, rng)?;
    let index_warning = factors.iter().any(|(_, m)| *m > 1);
    Ok(factors
        .into_iter()
        .enumerate()
        .map(|(index, (local_factor, multiplicity))| {
            let residue = ResidueField::new_unchecked(ell, local_factor.clone());
            PrimeAbove {
                ell,
                field: field.clone(),
                local_factor,
                residue,
                multiplicity,
                index_warning,
                index,
            }
        })
        .collect())
}

fn bigint_mod(v: &BigInt, m: u64) -> u64 {
    let m_big = BigInt::from(m);
    let r = ((v % &m_big) + &m_big) % &m_big;
    u64::try_from(&r).expect("reduced residue fits u64")
}

/// Reduce an element of `K` modulo `λ`: a ring homomorphism onto `k_λ`
/// sending the power-basis generator to the class of `x`.
pub fn reduce(a: &AlgebraicNumber, lambda: &PrimeAbove) -> Result<FqElement, NumFieldError> {
    assert!(a.field() == lambda.field(), "element and prime from different fields");
    if lambda.index_warning {
        return Err(NumFieldError::IndeterminateReduction { ell: lambda.ell });
    }
    let ell = lambda.ell;
    let den = bigint_mod(a.denominator(), ell);
    if den == 0 {
        return Err(NumFieldError::DenominatorNotInvertible { ell });
    }
    let coeffs: Vec<u64> = a.numerator().iter().map(|c| bigint_mod(c, ell)).collect();
    let rep = FpPoly::new(ell, &coeffs).rem(lambda.local_factor());
    Ok(lambda.residue.element(rep.mul_scalar(inv_mod(den, ell))))
}

/// True iff `a` does not vanish modulo `λ`.
pub fn is_unit_mod(a: &AlgebraicNumber, lambda: &PrimeAbove) -> Result<bool, NumFieldError> {
    Ok(!reduce(a, lambda)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(1)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn gaussian() -> NumberField {
        NumberField::new(big(&[1, 0, 1])).unwrap()
    }

    fn quartic() -> NumberField {
        NumberField::new(big(&[5, 15, 15, 5, 1])).unwrap()
    }

    #[test]
    fn rationals_have_single_prime_above_11() {
        let q = NumberField::rationals();
        let ps = primes_above(&q, 11, &mut rng()).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].residue_degree(), 1);
        assert!(!ps[0].has_index_warning());
    }

    #[test]
    fn gaussian_field_splits_at_5() {
        let ps = primes_above(&gaussian(), 5, &mut rng()).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|p| p.residue_degree() == 1 && !p.is_ramified()));
    }

    #[test]
    fn quartic_is_ramified_at_5() {
        // x^4+5x^3+15x^2+15x+5 ≡ x^4 (mod 5)
        let ps = primes_above(&quartic(), 5, &mut rng()).unwrap();
        assert_eq!(ps.len(), 1);
        assert!(ps[0].is_ramified());
        assert!(ps[0].has_index_warning());
        assert_eq!(ps[0].residue_degree(), 1);
    }

    #[test]
    fn reduce_integers_and_fractions() {
        let q = NumberField::rationals();
        let l11 = primes_above(&q, 11, &mut rng()).unwrap().remove(0);
        let seven = q.from_integer(7);
        assert_eq!(reduce(&seven, &l11).unwrap().coeff_vec(), vec![7]);

        let l5 = primes_above(&q, 5, &mut rng()).unwrap().remove(0);
        let half = AlgebraicNumber::new(q.clone(), big(&[1]), BigInt::from(2)).unwrap();
        // 2 * 3 ≡ 1 (mod 5)
        assert_eq!(reduce(&half, &l5).unwrap().coeff_vec(), vec![3]);

        let fifth = AlgebraicNumber::new(q.clone(), big(&[1]), BigInt::from(5)).unwrap();
        assert_eq!(
            reduce(&fifth, &l5),
            Err(NumFieldError::DenominatorNotInvertible { ell: 5 })
        );
    }

    #[test]
    fn reduction_at_warned_prime_is_indeterminate() {
        let k = quartic();
        let lam = primes_above(&k, 5, &mut rng()).unwrap().remove(0);
        assert_eq!(
            reduce(&k.one(), &lam),
            Err(NumFieldError::IndeterminateReduction { ell: 5 })
        );
    }

    #[test]
    fn generator_reduces_to_root_of_defining_polynomial() {
        let k = gaussian();
        for lam in primes_above(&k, 13, &mut rng()).unwrap() {
            let theta_bar = reduce(&k.generator(), &lam).unwrap();
            // evaluate g at the image: must vanish
            let g_bar = FpPoly::from_signed(13, &[1, 0, 1]);
            let mut acc = lam.residue_field().zero();
            for &c in g_bar.coeffs().iter().rev() {
                acc = acc.mul(&theta_bar).add(&lam.residue_field().from_u64(c));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn reduce_is_a_ring_homomorphism() {
        let k = gaussian();
        let lam = primes_above(&k, 13, &mut rng()).unwrap().remove(0);
        let a = AlgebraicNumber::new(k.clone(), big(&[3, 4]), BigInt::from(2)).unwrap();
        let b = AlgebraicNumber::new(k.clone(), big(&[-1, 7]), BigInt::from(3)).unwrap();
        let ra = reduce(&a, &lam).unwrap();
        let rb = reduce(&b, &lam).unwrap();
        assert_eq!(reduce(&a.add(&b), &lam).unwrap(), ra.add(&rb));
        assert_eq!(reduce(&a.mul(&b), &lam).unwrap(), ra.mul(&rb));
    }

    #[test]
    fn is_unit_mod_examples() {
        let q = NumberField::rationals();
        let l11 = primes_above(&q, 11, &mut rng()).unwrap().remove(0);
        assert!(is_unit_mod(&q.one(), &l11).unwrap());
        assert!(!is_unit_mod(&q.from_integer(22), &l11).unwrap());
    }

    #[test]
    fn reducible_polynomials_rejected() {
        // x^2 - 1 = (x-1)(x+1)
        assert!(matches!(
            NumberField::new(big(&[-1, 0, 1])),
            Err(NumFieldError::ReducibleDefiningPolynomial(_))
        ));
        // x^4 + 2x^2 + 1 = (x^2+1)^2
        assert!(matches!(
            NumberField::new(big(&[1, 0, 2, 0, 1])),
            Err(NumFieldError::ReducibleDefiningPolynomial(_))
        ));
    }

    #[test]
    fn irreducibility_verification_flags() {
        assert!(gaussian().irreducibility_verified());
        assert!(quartic().irreducibility_verified());
        // degree five stays user-asserted
        let quintic = NumberField::new(big(&[3, 0, 0, 0, 0, 1])).unwrap();
        assert!(!quintic.irreducibility_verified());
    }

    #[test]
    fn algebraic_number_normalization() {
        let k = gaussian();
        let a = AlgebraicNumber::new(k.clone(), big(&[2, 4]), BigInt::from(-6)).unwrap();
        assert_eq!(a.denominator(), &BigInt::from(3));
        assert_eq!(a.numerator(), &big(&[-1, -2])[..]);
    }

    #[test]
    fn field_arithmetic_respects_defining_relation() {
        let k = gaussian();
        let i = k.generator();
        assert_eq!(i.mul(&i), k.from_integer(-1));
        assert_eq!(i.pow(4), k.one());
    }
}
