//! Dense polynomials with coefficients in an extension field, and root
//! finding inside that field.
//!
//! Root finding first isolates the product of distinct linear factors with
//! roots in the field via `gcd(p, x^q - x)`, then splits it: exhaustively for
//! small fields, by randomized quadratic-character (or trace, in
//! characteristic 2) splitting otherwise.

use super::fp::FpPoly;
use super::fq::{frobenius, FqElement, ResidueField};
use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Field orders up to this bound are searched exhaustively.
const EXHAUSTIVE_LIMIT: u64 = 4096;

#[derive(Clone, PartialEq, Eq)]
pub struct FqPoly {
    field: ResidueField,
    coeffs: Vec<FqElement>,
}

impl FqPoly {
    pub fn new(field: &ResidueField, coeffs: Vec<FqElement>) -> Self {
        let mut coeffs = coeffs;
        for c in &coeffs {
            assert!(c.field() == field, "coefficient from foreign field");
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &ResidueField) -> Self {
        FqPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &ResidueField) -> Self {
        Self::new(field, vec![field.one()])
    }

    pub fn x(field: &ResidueField) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// Lift a polynomial with prime-field coefficients into this field.
    pub fn lift(field: &ResidueField, p: &FpPoly) -> Self {
        assert_eq!(p.modulus(), field.characteristic());
        let coeffs = p.coeffs().iter().map(|&c| field.from_u64(c)).collect();
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> FqElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Self::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Self::new(&self.field, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.field, coeffs)
    }

    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Self::zero(&self.field), self.clone());
        }
        let lead_inv = div.coeffs.last().unwrap().inverse();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quo[i - dd] = c.clone();
            for (k, dv) in div.coeffs.iter().enumerate() {
                let idx = i - dd + k;
                rem[idx] = rem[idx].sub(&c.mul(dv));
            }
        }
        (Self::new(&self.field, quo), Self::new(&self.field, rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.divrem(div);
        debug_assert!(r.is_zero(), "inexact division over extension field");
        q
    }

    pub fn make_monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) if *lead == self.field.one() => self.clone(),
            Some(lead) => {
                let inv = lead.inverse();
                let coeffs = self.coeffs.iter().map(|c| c.mul(&inv)).collect();
                Self::new(&self.field, coeffs)
            }
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn eval(&self, x: &FqElement) -> FqElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self^exp mod m` with a machine-word exponent.
    pub fn pow_mod(&self, mut exp: u64, m: &Self) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.rem(m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            exp >>= 1;
        }
        acc
    }

    fn pow_mod_big(&self, exp: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.rem(m);
        for i in 0..exp.bits() {
            if exp.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        acc
    }
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            write!(f, "({})x^{i}{}", c, if i > 0 { " + " } else { "" })?;
        }
        Ok(())
    }
}

/// The roots of `p` inside the field of its coefficients, each listed once,
/// sorted by representative for deterministic output.
pub fn fq_roots(p: &FqPoly, rng: &mut ChaCha8Rng) -> Vec<FqElement> {
    assert!(!p.is_zero(), "root finding on the zero polynomial");
    let field = p.field().clone();
    if p.degree() == Some(0) {
        return Vec::new();
    }

    // Product of the distinct (x - r) with r in the field: gcd(p, x^q - x).
    let x = FqPoly::x(&field);
    let mut w = x.rem(p);
    for _ in 0..field.degree() {
        w = w.pow_mod(field.characteristic(), p);
    }
    let linear_part = w.sub(&x).gcd(p);

    let mut roots = Vec::new();
    collect_roots(&linear_part, rng, &mut roots);
    roots.sort_by(|a, b| a.coeff_vec().cmp(&b.coeff_vec()));
    roots
}

fn collect_roots(g: &FqPoly, rng: &mut ChaCha8Rng, out: &mut Vec<FqElement>) {
    let field = g.field().clone();
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            // monic (x - r) after make_monic; root is -c0
            let m = g.make_monic();
            out.push(m.coeffs()[0].neg());
            return;
        }
        _ => {}
    }

    let order = field.order();
    if order <= BigUint::from(EXHAUSTIVE_LIMIT) {
        for candidate in field.iter_elements() {
            if g.eval(&candidate).is_zero() {
                out.push(candidate);
            }
        }
        return;
    }

    // randomized split of a squarefree product of linear factors
    let ell = field.characteristic();
    loop {
        let candidate = if ell > 2 {
            // (x + δ)^((q-1)/2) - 1 separates roots by quadratic character
            let shift = random_element(&field, rng);
            let shifted = FqPoly::new(&field, vec![shift, field.one()]);
            let exp = (order.clone() - BigUint::one()) >> 1;
            shifted.pow_mod_big(&exp, g).sub(&FqPoly::one(&field))
        } else {
            // characteristic 2: trace of a random element of F_q[x]/(g)
            let deg = g.degree().unwrap();
            let coeffs: Vec<FqElement> = (0..deg).map(|_| random_element(&field, rng)).collect();
            let a = FqPoly::new(&field, coeffs);
            let mut t = a.rem(g);
            let mut cur = t.clone();
            for _ in 1..field.degree() {
                cur = cur.mul(&cur).rem(g);
                t = t.add(&cur);
            }
            t
        };
        let h = candidate.gcd(g);
        if let Some(dh) = h.degree() {
            if dh >= 1 && dh < g.degree().unwrap() {
                collect_roots(&h, rng, out);
                collect_roots(&g.div_exact(&h), rng, out);
                return;
            }
        }
    }
}

fn random_element(field: &ResidueField, rng: &mut ChaCha8Rng) -> FqElement {
    let ell = field.characteristic();
    let coeffs: Vec<u64> = (0..field.degree()).map(|_| rng.gen_range(0..ell)).collect();
    field.element(FpPoly::new(ell, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffkernel::fq_make;
    use rand::SeedableRng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    fn f5() -> ResidueField {
        fq_make(5, FpPoly::new(5, &[0, 1])).unwrap()
    }

    #[test]
    fn square_roots_of_minus_one_mod_5() {
        // 2^2 = 4 ≡ -1 and 3^2 = 9 ≡ -1 (mod 5)
        let k = f5();
        let p = FqPoly::new(&k, vec![k.one(), k.zero(), k.one()]); // y^2 + 1
        let roots = fq_roots(&p, &mut rng());
        let vals: Vec<u64> = roots.iter().map(|r| r.coeff_vec()[0]).collect();
        assert_eq!(vals, vec![2, 3]);
    }

    #[test]
    fn linear_has_its_single_root() {
        let k = fq_make(5, FpPoly::new(5, &[1, 1, 1])).unwrap();
        let p = FqPoly::new(&k, vec![k.one().neg(), k.one()]); // y - 1
        let roots = fq_roots(&p, &mut rng());
        assert_eq!(roots, vec![k.one()]);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        // exhaustive evaluation over the 5 elements of F_5 finds none
        let k = f5();
        let p = FqPoly::new(&k, vec![k.one(), k.one(), k.one()]); // y^2 + y + 1
        for c in 0..5 {
            assert!(!p.eval(&k.from_u64(c)).is_zero());
        }
        assert!(fq_roots(&p, &mut rng()).is_empty());
    }

    #[test]
    fn roots_in_extension_field() {
        // y^2 + y + 1 splits over F_25 (its own splitting field)
        let k = fq_make(5, FpPoly::new(5, &[1, 1, 1])).unwrap();
        let p = FqPoly::new(&k, vec![k.one(), k.one(), k.one()]);
        let roots = fq_roots(&p, &mut rng());
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(p.eval(r).is_zero());
        }
        // the generator itself is one of the two roots
        assert!(roots.contains(&k.generator()));
    }

    #[test]
    fn repeated_roots_listed_once() {
        let k = f5();
        let two = k.from_u64(2);
        // (y - 2)^2
        let lin = FqPoly::new(&k, vec![two.neg(), k.one()]);
        let p = lin.mul(&lin);
        assert_eq!(fq_roots(&p, &mut rng()), vec![two]);
    }
}
