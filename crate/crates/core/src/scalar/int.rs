//! Integer coefficients with an inline `i64` fast path and a `BigInt` fallback.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Arbitrary-precision integer that stays inline while it fits in an `i64`.
///
/// The `Big` variant never holds a value representable as `i64`, so derived
/// equality and hashing agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub fn zero() -> Self {
        Int::Small(0)
    }

    pub fn one() -> Self {
        Int::Small(1)
    }

    pub fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn from_i128(v: i128) -> Self {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(BigInt::from(v)),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(s) => Int::Small(s),
                None => Int::from_i128(*a as i128 + *b as i128),
            },
            _ => Int::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn sub(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(s) => Int::Small(s),
                None => Int::from_i128(*a as i128 - *b as i128),
            },
            _ => Int::from_big(self.to_big() - o.to_big()),
        }
    }

    pub fn mul(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(s) => Int::Small(s),
                None => Int::from_i128(*a as i128 * *b as i128),
            },
            (Int::Small(0), _) | (_, Int::Small(0)) => Int::zero(),
            (Int::Small(a), Int::Big(b)) | (Int::Big(b), Int::Small(a)) => Int::from_big(b * BigInt::from(*a)),
            (Int::Big(a), Int::Big(b)) => Int::from_big(a * b),
        }
    }

    /// `self += a * b` without materialising the product as a separate `Int`
    /// when everything fits in machine words.
    pub fn add_mul(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(x), Int::Small(y)) = (&*self, a, b) {
            let v = *s as i128 + (*x as i128) * (*y as i128);
            *self = Int::from_i128(v);
            return;
        }
        *self = self.add(&a.mul(b));
    }

    pub fn add_assign(&mut self, o: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, o) {
            if let Some(s) = a.checked_add(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = self.add(o);
    }

    pub fn sub_assign(&mut self, o: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, o) {
            if let Some(s) = a.checked_sub(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = self.sub(o);
    }

    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => {
                let g = (*a as i128).unsigned_abs().gcd(&(*b as i128).unsigned_abs());
                Int::from_i128(g as i128)
            }
            _ => Int::from_big(self.to_big().gcd(&o.to_big())),
        }
    }

    /// Exact quotient; the caller guarantees `o` divides `self`.
    pub fn div_exact(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) if *b != 0 => match a.checked_div(*b) {
                Some(q) => Int::Small(q),
                None => Int::from_i128(*a as i128 / *b as i128),
            },
            _ => Int::from_big(self.to_big() / o.to_big()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Int::Small(v) => *v as f64,
            Int::Big(b) => b.to_f64().unwrap_or(if b.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY }),
        }
    }

    pub fn is_one_abs(&self) -> bool {
        matches!(self, Int::Small(1) | Int::Small(-1))
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_big(v)
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::Small(0)
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, o: Int) -> Int {
        Int::add(&self, &o)
    }
}

impl std::ops::Mul for Int {
    type Output = Int;
    fn mul(self, o: Int) -> Int {
        Int::mul(&self, &o)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::Small(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_to_big() {
        let a = Int::from(i64::MAX);
        let b = a.add(&Int::one());
        assert!(matches!(b, Int::Big(_)));
        assert_eq!(b.sub(&Int::one()), a);
        assert!(matches!(b.sub(&Int::one()), Int::Small(_)));
    }

    #[test]
    fn min_negation_does_not_panic() {
        let m = Int::from(i64::MIN);
        assert_eq!(m.neg().neg(), m);
        assert_eq!(m.abs().signum(), 1);
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = Int::from(84);
        let b = Int::from(-36);
        assert_eq!(a.gcd(&b), Int::from(12));
        assert_eq!(a.div_exact(&Int::from(12)), Int::from(7));
        let big = Int::from(1i64 << 40).mul(&Int::from(1i64 << 40));
        assert_eq!(big.div_exact(&Int::from(1i64 << 40)), Int::from(1i64 << 40));
    }

    #[test]
    fn add_mul_matches_naive() {
        let mut acc = Int::from(5);
        acc.add_mul(&Int::from(i64::MAX), &Int::from(3));
        let naive = Int::from(5).add(&Int::from(i64::MAX).mul(&Int::from(3)));
        assert_eq!(acc, naive);
    }
}
