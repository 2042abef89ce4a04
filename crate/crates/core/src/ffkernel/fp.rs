//! Dense univariate polynomials over a prime field `F_ℓ`.
//!
//! Coefficients are stored lowest degree first and always fully reduced mod
//! `ℓ`; the zero polynomial is the empty coefficient vector. Degrees at desk
//! scale are bounded by the Hecke field degree, so a dense representation is
//! the right tool.

use crate::arith::{inv_mod, mul_mod};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FpPoly {
    ell: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Build a polynomial from (possibly unreduced) coefficients, lowest
    /// degree first.
    pub fn new(ell: u64, coeffs: &[u64]) -> Self {
        let mut c: Vec<u64> = coeffs.iter().map(|&v| v % ell).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { ell, coeffs: c }
    }

    /// Build from signed coefficients, reducing into `[0, ℓ)`.
    pub fn from_signed(ell: u64, coeffs: &[i64]) -> Self {
        let c: Vec<u64> = coeffs.iter().map(|&v| v.rem_euclid(ell as i64) as u64).collect();
        Self::new(ell, &c)
    }

    pub fn zero(ell: u64) -> Self {
        FpPoly { ell, coeffs: Vec::new() }
    }

    pub fn constant(ell: u64, c: u64) -> Self {
        Self::new(ell, &[c])
    }

    pub fn one(ell: u64) -> Self {
        Self::constant(ell, 1)
    }

    /// The monomial `x`.
    pub fn x(ell: u64) -> Self {
        Self::new(ell, &[0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.ell
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(self.ell, other.ell, "mixed moduli {} vs {}", self.ell, other.ell);
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u64; n];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = (self.coeff(i) + other.coeff(i)) % self.ell;
        }
        Self::new(self.ell, &c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u64; n];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = (self.coeff(i) + self.ell - other.coeff(i)) % self.ell;
        }
        Self::new(self.ell, &c)
    }

    pub fn neg(&self) -> Self {
        let c: Vec<u64> = self.coeffs.iter().map(|&v| (self.ell - v) % self.ell).collect();
        Self::new(self.ell, &c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ell);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(a, b, self.ell)) % self.ell;
            }
        }
        Self::new(self.ell, &c)
    }

    pub fn mul_scalar(&self, s: u64) -> Self {
        let s = s % self.ell;
        let c: Vec<u64> = self.coeffs.iter().map(|&v| mul_mod(v, s, self.ell)).collect();
        Self::new(self.ell, &c)
    }

    /// Euclidean division: `self = q·div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        self.assert_same_field(div);
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Self::zero(self.ell), self.clone());
        }
        let lead_inv = inv_mod(div.leading(), self.ell);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mul_mod(rem[i], lead_inv, self.ell);
            if c == 0 {
                continue;
            }
            quo[i - dd] = c;
            for (k, &dv) in div.coeffs.iter().enumerate() {
                let idx = i - dd + k;
                rem[idx] = (rem[idx] + self.ell - mul_mod(c, dv, self.ell)) % self.ell;
            }
        }
        (Self::new(self.ell, &quo), Self::new(self.ell, &rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.divrem(div);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(inv_mod(self.leading(), self.ell))
    }

    /// Monic gcd.
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

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.ell);
        }
        let c: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &v)| mul_mod(v, (i as u64) % self.ell, self.ell))
            .collect();
        Self::new(self.ell, &c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.ell;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.ell) + c) % self.ell;
        }
        acc
    }

    /// `self^exp mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u64, m: &Self) -> Self {
        let mut acc = Self::one(self.ell);
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

    /// When the derivative vanishes identically, `self = h(x^ℓ)`; recover `h`.
    ///
    /// Over the prime field the coefficients are Frobenius-fixed, so `h`
    /// simply takes every `ℓ`-th coefficient.
    pub(crate) fn ell_th_root_of_perfect_power(&self) -> Self {
        let ell = self.ell as usize;
        let c: Vec<u64> = self.coeffs.iter().step_by(ell).copied().collect();
        Self::new(self.ell, &c)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly(mod {}: {})", self.ell, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_strips_leading_zeros() {
        let p = FpPoly::new(5, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs(), &[1, 2]);
        assert!(FpPoly::new(5, &[5, 10]).is_zero());
    }

    #[test]
    fn divrem_roundtrip() {
        let ell = 7;
        let a = FpPoly::new(ell, &[3, 0, 1, 6, 2]);
        let b = FpPoly::new(ell, &[4, 1, 5]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_is_monic_common_divisor() {
        let ell = 11;
        let f = FpPoly::new(ell, &[1, 1]); // x + 1
        let g = FpPoly::new(ell, &[2, 1]); // x + 2
        let a = f.mul(&g);
        let b = f.mul(&FpPoly::new(ell, &[5, 1]));
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn eval_matches_horner() {
        let p = FpPoly::new(5, &[1, 0, 1]); // x^2 + 1
        assert_eq!(p.eval(2), 0);
        assert_eq!(p.eval(3), 0);
        assert_eq!(p.eval(1), 2);
    }
}
