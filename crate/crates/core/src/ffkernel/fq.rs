//! Finite extension fields `F_{ℓ^d} = F_ℓ[y]/(h)` and their elements.
//!
//! A [`ResidueField`] is shared by handle, so elements stay cheap to clone;
//! fields compare equal exactly when they have the same characteristic and
//! defining polynomial.

use super::factor::is_irreducible;
use super::fp::FpPoly;
use super::FfError;
use crate::arith::is_prime;
use num_bigint::BigUint;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct ResidueField(Arc<Inner>);

struct Inner {
    ell: u64,
    defining: FpPoly,
    degree: usize,
}

impl PartialEq for ResidueField {
    fn eq(&self, other: &Self) -> bool {
        self.0.ell == other.0.ell && self.0.defining == other.0.defining
    }
}
impl Eq for ResidueField {}

impl ResidueField {
    /// Construct `F_ℓ[y]/(h)` after checking that `h` is monic irreducible.
    pub fn new(ell: u64, defining: FpPoly) -> Result<Self, FfError> {
        if !is_prime(ell) {
            return Err(FfError::NonPrimeModulus(ell));
        }
        assert_eq!(defining.modulus(), ell, "defining polynomial has foreign modulus");
        assert!(defining.is_monic(), "defining polynomial must be monic");
        if !is_irreducible(&defining) {
            return Err(FfError::Reducible(ell));
        }
        Ok(Self::new_unchecked(ell, defining))
    }

    /// Internal constructor for factors already known to be irreducible.
    pub(crate) fn new_unchecked(ell: u64, defining: FpPoly) -> Self {
        let degree = defining.degree().expect("nonconstant defining polynomial");
        ResidueField(Arc::new(Inner { ell, defining, degree }))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.ell
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn defining(&self) -> &FpPoly {
        &self.0.defining
    }

    /// `ℓ^d` as a big integer.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.0.ell).pow(self.0.degree as u32)
    }

    pub fn zero(&self) -> FqElement {
        FqElement { field: self.clone(), rep: FpPoly::zero(self.0.ell) }
    }

    pub fn one(&self) -> FqElement {
        FqElement { field: self.clone(), rep: FpPoly::one(self.0.ell) }
    }

    /// Image of the integer `c`.
    pub fn from_u64(&self, c: u64) -> FqElement {
        FqElement { field: self.clone(), rep: FpPoly::constant(self.0.ell, c) }
    }

    /// The class of `y`, a root of the defining polynomial.
    pub fn generator(&self) -> FqElement {
        self.element(FpPoly::x(self.0.ell))
    }

    /// Element with the given representative, reduced mod the defining
    /// polynomial.
    pub fn element(&self, rep: FpPoly) -> FqElement {
        assert_eq!(rep.modulus(), self.0.ell);
        FqElement { field: self.clone(), rep: rep.rem(&self.0.defining) }
    }

    /// Iterate every element of the field in lexicographic representative
    /// order. Only sensible for small fields; callers bound the order first.
    pub fn iter_elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        let ell = self.0.ell;
        let d = self.0.degree;
        let total = (0..d).fold(1u64, |acc, _| acc.saturating_mul(ell));
        (0..total).map(move |mut idx| {
            let mut coeffs = vec![0u64; d];
            for c in coeffs.iter_mut() {
                *c = idx % ell;
                idx /= ell;
            }
            self.element(FpPoly::new(ell, &coeffs))
        })
    }
}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{{{}^{}}}[y]/({})", self.0.ell, self.0.degree, self.0.defining)
    }
}

/// Build the residue field `F_ℓ[y]/(h)`.
pub fn fq_make(ell: u64, h: FpPoly) -> Result<ResidueField, FfError> {
    ResidueField::new(ell, h)
}

#[derive(Clone, PartialEq, Eq)]
pub struct FqElement {
    field: ResidueField,
    rep: FpPoly,
}

impl FqElement {
    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    /// Representative polynomial, fully reduced (degree < d).
    pub fn rep(&self) -> &FpPoly {
        &self.rep
    }

    /// Coefficient vector of length `d`, lowest power first.
    pub fn coeff_vec(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.field.degree()];
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = self.rep.coeff(i);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// True when the element lies in the prime field.
    pub fn is_scalar(&self) -> bool {
        self.rep.degree().map_or(true, |d| d == 0)
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(self.field == other.field, "elements of different residue fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        FqElement { field: self.field.clone(), rep: self.rep.add(&other.rep) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        FqElement { field: self.field.clone(), rep: self.rep.sub(&other.rep) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        self.field.element(self.rep.mul(&other.rep))
    }

    pub fn mul_scalar(&self, s: u64) -> Self {
        FqElement { field: self.field.clone(), rep: self.rep.mul_scalar(s) }
    }

    pub fn neg(&self) -> Self {
        FqElement { field: self.field.clone(), rep: self.rep.neg() }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// representatives.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let modulus = self.field.defining().clone();
        let (mut r0, mut r1) = (modulus.clone(), self.rep.clone());
        let ell = self.field.characteristic();
        let (mut t0, mut t1) = (FpPoly::zero(ell), FpPoly::one(ell));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        // r0 is a unit constant
        debug_assert_eq!(r0.degree(), Some(0));
        let scale = crate::arith::inv_mod(r0.coeff(0), ell);
        self.field.element(t0.mul_scalar(scale))
    }

    /// Whether `self` is fixed by the `e`-fold Frobenius, i.e. lies in the
    /// subfield of degree `e`.
    pub fn in_subfield_of_degree(&self, e: usize) -> bool {
        let mut w = self.clone();
        for _ in 0..e {
            w = frobenius(&w);
        }
        w == *self
    }

    /// Degree of the subfield generated by this element: the least `e | d`
    /// with `x^(ℓ^e) = x`.
    pub fn generated_subfield_degree(&self) -> usize {
        let d = self.field.degree();
        (1..=d)
            .filter(|e| d % e == 0)
            .find(|&e| self.in_subfield_of_degree(e))
            .expect("every element is fixed by the d-fold Frobenius")
    }
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// The Frobenius map `x ↦ x^ℓ`, a field automorphism generating the Galois
/// group of `F_{ℓ^d}` over `F_ℓ`.
pub fn frobenius(x: &FqElement) -> FqElement {
    x.pow(x.field().characteristic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f25() -> ResidueField {
        fq_make(5, FpPoly::new(5, &[1, 1, 1])).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        let f5 = fq_make(5, FpPoly::new(5, &[0, 1])).unwrap();
        assert_eq!(f5.degree(), 1);
        assert_eq!(f5.order(), BigUint::from(5u32));
    }

    #[test]
    fn quadratic_extension_verified_irreducible() {
        // y^2 + y + 1 has no root in F_5
        assert!((0..5).all(|r| FpPoly::new(5, &[1, 1, 1]).eval(r) != 0));
        assert_eq!(f25().order(), BigUint::from(25u32));
    }

    #[test]
    fn reducible_defining_rejected() {
        // y^2 + 1 = (y+1)^2 mod 2
        assert_eq!(
            fq_make(2, FpPoly::new(2, &[1, 0, 1])),
            Err(FfError::Reducible(2))
        );
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f5 = fq_make(5, FpPoly::new(5, &[0, 1])).unwrap();
        for c in 0..5 {
            let x = f5.from_u64(c);
            assert_eq!(frobenius(&x), x);
        }
    }

    #[test]
    fn frobenius_of_generator_is_conjugate_root() {
        // y^5 in F_25 = F_5[y]/(y^2+y+1): repeated squaring gives 4y + 4
        let k = f25();
        let y = k.generator();
        let fy = frobenius(&y);
        assert_eq!(fy.coeff_vec(), vec![4, 4]);
        // iterating d times returns the element
        assert_eq!(frobenius(&fy), y);
        assert_eq!(frobenius(&k.zero()), k.zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let k = f25();
        for x in k.iter_elements() {
            if x.is_zero() {
                continue;
            }
            assert_eq!(x.mul(&x.inverse()), k.one());
        }
    }

    #[test]
    fn subfield_detection() {
        let k = f25();
        assert_eq!(k.from_u64(3).generated_subfield_degree(), 1);
        assert_eq!(k.generator().generated_subfield_degree(), 2);
    }
}
