//! Quadratic extensions `a + b√δ` over the cyclotomic base field.

use super::approx::{self, DyInterval};
use super::{AlgScalar, Field, Real, Ring, ScalarError};
use std::fmt;

/// The real number `a + b·√radicand` with `radicand ≥ 0`.
///
/// Values with `b = 0` are compatible with every radicand; two values with
/// nonzero `b` must share the radicand to be combined.
#[derive(Clone)]
pub struct QuadExt {
    a: AlgScalar,
    b: AlgScalar,
    radicand: AlgScalar,
}

impl QuadExt {
    pub fn new(a: AlgScalar, b: AlgScalar, radicand: AlgScalar) -> Result<Self, ScalarError> {
        if radicand.sign() < 0 {
            return Err(ScalarError::NegativeRadicand);
        }
        Ok(Self::normalized(a, b, radicand))
    }

    fn normalized(a: AlgScalar, b: AlgScalar, radicand: AlgScalar) -> Self {
        if b.is_zero() || radicand.is_zero() {
            QuadExt { a, b: AlgScalar::zero(), radicand: AlgScalar::zero() }
        } else {
            QuadExt { a, b, radicand }
        }
    }

    pub fn from_base(a: AlgScalar) -> Self {
        QuadExt { a, b: AlgScalar::zero(), radicand: AlgScalar::zero() }
    }

    /// `√δ` itself.
    pub fn sqrt_of(radicand: AlgScalar) -> Result<Self, ScalarError> {
        Self::new(AlgScalar::zero(), AlgScalar::one(), radicand)
    }

    pub fn a(&self) -> &AlgScalar {
        &self.a
    }

    pub fn b(&self) -> &AlgScalar {
        &self.b
    }

    pub fn radicand(&self) -> &AlgScalar {
        &self.radicand
    }

    fn shared_radicand(&self, o: &Self) -> AlgScalar {
        if self.b.is_zero() {
            return o.radicand.clone();
        }
        if o.b.is_zero() {
            return self.radicand.clone();
        }
        assert!(self.radicand == o.radicand, "{}", ScalarError::RadicandMismatch);
        self.radicand.clone()
    }

    pub fn add(&self, o: &Self) -> Self {
        let r = self.shared_radicand(o);
        Self::normalized(self.a.add(&o.a), self.b.add(&o.b), r)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let r = self.shared_radicand(o);
        Self::normalized(self.a.sub(&o.a), self.b.sub(&o.b), r)
    }

    pub fn neg(&self) -> Self {
        QuadExt { a: self.a.neg(), b: self.b.neg(), radicand: self.radicand.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.b.is_zero() && o.b.is_zero() {
            return Self::from_base(self.a.mul(&o.a));
        }
        let r = self.shared_radicand(o);
        if self.b.is_zero() {
            return Self::normalized(self.a.mul(&o.a), self.a.mul(&o.b), r);
        }
        if o.b.is_zero() {
            return Self::normalized(self.a.mul(&o.a), self.b.mul(&o.a), r);
        }
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(&r));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        Self::normalized(a, b, r)
    }

    /// `a² − b²δ`, the product with the conjugate.
    pub fn norm(&self) -> AlgScalar {
        self.a.square().sub(&self.b.square().mul(&self.radicand))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivideByZero);
        }
        if self.b.is_zero() {
            return Ok(Self::from_base(self.a.inv()?));
        }
        let n = self.norm();
        if n.is_zero() {
            // a = b√δ, so √δ = a/b lies in the base field
            let root = self.a.div(&self.b)?;
            let root = if root.sign() < 0 { root.neg() } else { root };
            let v = self.a.add(&self.b.mul(&root));
            return Ok(Self::from_base(v.inv()?));
        }
        let ni = n.inv()?;
        Ok(Self::normalized(self.a.mul(&ni), self.b.neg().mul(&ni), self.radicand.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        if o.b.is_zero() {
            if o.a.is_zero() {
                return Err(ScalarError::DivideByZero);
            }
            let r = self.radicand.clone();
            return Ok(Self::normalized(self.a.div(&o.a)?, self.b.div(&o.a)?, r));
        }
        Ok(self.mul(&o.inv()?))
    }

    pub fn is_zero(&self) -> bool {
        if self.b.is_zero() {
            return self.a.is_zero();
        }
        self.a.sign() * self.b.sign() <= 0 && self.norm().is_zero()
    }

    pub fn sign(&self) -> i32 {
        let sa = self.a.sign();
        let sb = self.b.sign();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        self.norm().sign() * sa
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * self.radicand.to_f64().max(0.0).sqrt()
    }

    pub fn enclose(&self, bits: u32) -> DyInterval {
        let a = self.a.enclose(bits);
        if self.b.is_zero() {
            return a;
        }
        let root = self.radicand.enclose(bits).sqrt();
        a.add(&self.b.enclose(bits).mul(&root))
    }

    pub fn to_float(&self, digits: u32) -> String {
        let r = approx::round_decimal(
            digits,
            |b| self.enclose(b),
            |num, den| {
                let h = AlgScalar::from_bigratio(num, den).expect("nonzero denominator");
                self.sub(&Self::from_base(h)).is_zero()
            },
        );
        super::format_fixed(&r, digits)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        if self.b.is_zero() && o.b.is_zero() {
            return self.a == o.a;
        }
        if !self.b.is_zero() && !o.b.is_zero() && self.radicand != o.radicand {
            // b√δ = b'√δ' iff the squares agree and the signs match
            let lhs = self.b.square().mul(&self.radicand);
            let rhs = o.b.square().mul(&o.radicand);
            return self.a == o.a && lhs == rhs && self.b.sign() == o.b.sign();
        }
        self.sub(o).is_zero()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a.exact_string());
        }
        write!(f, "{} + ({})*sqrt({})", self.a.exact_string(), self.b.exact_string(), self.radicand.exact_string())
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [~{}]", self.to_f64())
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        Self::from_base(AlgScalar::zero())
    }
    fn one() -> Self {
        Self::from_base(AlgScalar::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::from_base(AlgScalar::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }
}

impl Real for QuadExt {
    fn sign(&self) -> i32 {
        QuadExt::sign(self)
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
    fn decimal(&self, digits: u32) -> String {
        self.to_float(digits)
    }
    fn exact(&self) -> String {
        self.to_string()
    }
}

impl Field for QuadExt {
    fn try_div(&self, o: &Self) -> Result<Self, ScalarError> {
        self.div(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> AlgScalar {
        AlgScalar::from_i64(v)
    }

    #[test]
    fn sqrt_two_squared() {
        let r = QuadExt::sqrt_of(int(2)).unwrap();
        assert_eq!(r.mul(&r), QuadExt::from_i64(2));
        assert_eq!(r.sign(), 1);
        assert_eq!(r.to_float(6), "1.414214");
    }

    #[test]
    fn sign_rule_on_mixed_signs() {
        // 3 - 2√2 > 0, 2 - 3√2/2... use 1 - √2 < 0
        let x = QuadExt::new(int(3), int(-2), int(2)).unwrap();
        assert_eq!(x.sign(), 1);
        let y = QuadExt::new(int(1), int(-1), int(2)).unwrap();
        assert_eq!(y.sign(), -1);
    }

    #[test]
    fn zero_test_when_radicand_is_a_square() {
        // 2 - √4 = 0
        let z = QuadExt::new(int(2), int(-1), int(4)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.sign(), 0);
        // 2 + √4 = 4, inverse 1/4 found by collapsing the radicand
        let w = QuadExt::new(int(2), int(1), int(4)).unwrap();
        let inv = w.inv().unwrap();
        assert_eq!(inv, QuadExt::from_base(AlgScalar::from_ratio(1, 4).unwrap()));
    }

    #[test]
    fn inverse_roundtrip() {
        let phi = AlgScalar::two_cos_pi_over(5).unwrap();
        let x = QuadExt::new(phi.clone(), int(3), phi.add(&int(7))).unwrap();
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), QuadExt::one());
    }

    #[test]
    fn division_by_zero_rejected() {
        let z = QuadExt::new(int(2), int(-1), int(4)).unwrap();
        assert!(QuadExt::one().div(&z).is_err());
        assert!(QuadExt::new(int(1), int(1), int(-3)).is_err());
    }
}
