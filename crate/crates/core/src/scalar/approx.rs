//! Rigorous dyadic interval enclosures used by the exact sign oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cell::RefCell;
use std::collections::HashMap;

/// Closed interval `[lo, hi] / 2^bits` with integer endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u32,
}

impl DyInterval {
    pub fn exact_int(v: &BigInt, bits: u32) -> Self {
        let s = v << bits;
        DyInterval { lo: s.clone(), hi: s, bits }
    }

    /// Certified sign: `Some(s)` when zero lies outside the interval.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn add(&self, o: &DyInterval) -> DyInterval {
        debug_assert_eq!(self.bits, o.bits);
        DyInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, bits: self.bits }
    }

    pub fn neg(&self) -> DyInterval {
        DyInterval { lo: -&self.hi, hi: -&self.lo, bits: self.bits }
    }

    pub fn sub(&self, o: &DyInterval) -> DyInterval {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &DyInterval) -> DyInterval {
        debug_assert_eq!(self.bits, o.bits);
        let cands = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mn = cands.iter().min().unwrap().clone();
        let mx = cands.iter().max().unwrap().clone();
        DyInterval { lo: floor_shr(&mn, self.bits), hi: ceil_shr(&mx, self.bits), bits: self.bits }
    }

    /// Divides by a positive integer with outward rounding.
    pub fn div_int(&self, d: &BigInt) -> DyInterval {
        debug_assert!(d.is_positive());
        DyInterval { lo: self.lo.div_floor(d), hi: ceil_div(&self.hi, d), bits: self.bits }
    }

    /// Enclosure of the square root; negative parts of the input are clamped to zero.
    pub fn sqrt(&self) -> DyInterval {
        let zero = BigInt::zero();
        let lo = if self.lo.is_positive() { self.lo.clone() } else { zero.clone() };
        let hi = if self.hi.is_positive() { self.hi.clone() } else { zero };
        let lo_s = (&lo << self.bits).sqrt();
        let hi_sc = &hi << self.bits;
        let mut hi_s = hi_sc.sqrt();
        if &hi_s * &hi_s < hi_sc {
            hi_s += 1;
        }
        DyInterval { lo: lo_s, hi: hi_s, bits: self.bits }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid: BigInt = (&self.lo + &self.hi) >> 1u32;
        to_f64_scaled(&mid, self.bits)
    }
}

/// `v / 2^bits` as `f64`, tolerant of very large magnitudes.
pub fn to_f64_scaled(v: &BigInt, bits: u32) -> f64 {
    let len = v.bits();
    if len > 1000 {
        let shift = len - 60;
        let top = (v >> shift).to_f64().unwrap_or(0.0);
        return top * 2f64.powi(shift as i32 - bits as i32);
    }
    let shift = len.saturating_sub(60);
    let top = (v >> shift).to_f64().unwrap_or(0.0);
    top * 2f64.powi(shift as i32 - bits as i32)
}

pub fn floor_shr(v: &BigInt, bits: u32) -> BigInt {
    v >> bits
}

pub fn ceil_shr(v: &BigInt, bits: u32) -> BigInt {
    -((-v) >> bits)
}

fn ceil_div(a: &BigInt, d: &BigInt) -> BigInt {
    -((-a).div_floor(d))
}

thread_local! {
    static PI_CACHE: RefCell<HashMap<u32, BigInt>> = RefCell::new(HashMap::new());
}

fn atan_inv(x: u64, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term = &one / &x;
    let mut sum = term.clone();
    let mut k = 1u64;
    loop {
        term = &term / &x2;
        if term.is_zero() {
            break;
        }
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        k += 1;
    }
    sum
}

/// `π · 2^bits` with absolute error below `2^6` units (Machin's formula).
pub fn pi_fixed(bits: u32) -> BigInt {
    if let Some(v) = PI_CACHE.with(|c| c.borrow().get(&bits).cloned()) {
        return v;
    }
    let w = bits + 16;
    let v: BigInt = (atan_inv(5, w) * 16 - atan_inv(239, w) * 4) >> 16u32;
    PI_CACHE.with(|c| c.borrow_mut().insert(bits, v.clone()));
    v
}

thread_local! {
    static COS_CACHE: RefCell<HashMap<(u64, u64, u32), BigInt>> = RefCell::new(HashMap::new());
}

/// Error bound, in units of `2^-bits`, for values returned by [`cos_2pi_frac`].
pub const COS_ERR_ULPS: u32 = 4;

/// `cos(2πk/n) · 2^bits` with absolute error at most [`COS_ERR_ULPS`] units.
pub fn cos_2pi_frac(k: u64, n: u64, bits: u32) -> BigInt {
    let k = k % n;
    let g = k.gcd(&n);
    let (k, n) = (k / g, n / g);
    if let Some(v) = COS_CACHE.with(|c| c.borrow().get(&(k, n, bits)).cloned()) {
        return v;
    }
    let guard = 24;
    let w = bits + guard;
    let v = cos_reduced(k, n, w) >> guard;
    COS_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() > 200_000 {
            c.clear();
        }
        c.insert((k, n, bits), v.clone());
    });
    v
}

/// Works with angles `2πk/n`, reducing into `[0, π/4]` before the Taylor series.
fn cos_reduced(k: u64, n: u64, w: u32) -> BigInt {
    let k = k % n;
    let k = if 2 * k > n { n - k } else { k };
    // angle now in [0, π]
    if 4 * k > n {
        // cos θ = -cos(π - θ), π - θ = 2π (n - 2k) / (2n)
        return -cos_reduced(n - 2 * k, 2 * n, w);
    }
    // angle in [0, π/2]
    if 8 * k > n {
        // cos θ = sin(π/2 - θ), π/2 - θ = 2π (n - 4k) / (4n)
        let theta = angle_fixed(n - 4 * k, 4 * n, w);
        return sin_taylor(&theta, w);
    }
    let theta = angle_fixed(k, n, w);
    cos_taylor(&theta, w)
}

fn angle_fixed(k: u64, n: u64, w: u32) -> BigInt {
    let pi = pi_fixed(w);
    (pi * BigInt::from(2 * k)) / BigInt::from(n)
}

fn cos_taylor(theta: &BigInt, w: u32) -> BigInt {
    let one = BigInt::one() << w;
    let t2 = (theta * theta) >> w;
    let mut term = one.clone();
    let mut sum = one;
    let mut j: u64 = 1;
    loop {
        term = ((&term * &t2) >> w) / BigInt::from((2 * j - 1) * (2 * j));
        if term.is_zero() {
            break;
        }
        if j % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        j += 1;
    }
    sum
}

fn sin_taylor(theta: &BigInt, w: u32) -> BigInt {
    let t2 = (theta * theta) >> w;
    let mut term = theta.clone();
    let mut sum = theta.clone();
    let mut j: u64 = 1;
    loop {
        term = ((&term * &t2) >> w) / BigInt::from((2 * j) * (2 * j + 1));
        if term.is_zero() {
            break;
        }
        if j % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        j += 1;
    }
    sum
}

/// Rounds `x` (given by a refinable enclosure) to `digits` decimals, ties to even.
///
/// `enclose(bits)` must return an enclosure of `x`; `is_half(num, den)` must
/// decide exactly whether `x == num/den`. Returns the integer `round(x·10^digits)`.
pub fn round_decimal<E, H>(digits: u32, mut enclose: E, mut is_half: H) -> BigInt
where
    E: FnMut(u32) -> DyInterval,
    H: FnMut(&BigInt, &BigInt) -> bool,
{
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let mut bits = 64 + 4 * digits;
    loop {
        let iv = enclose(bits);
        let b = iv.bits;
        let l = &iv.lo * &scale;
        let h = &iv.hi * &scale;
        let half = BigInt::one() << (b - 1);
        let unit = BigInt::one() << b;
        // m(X) = floor((X - half)/unit): X lies at or above m + 1/2
        let ml = (&l - &half).div_floor(&unit);
        let mh = (&h - &half).div_floor(&unit);
        let l_on_half = (&l - &half).mod_floor(&unit).is_zero();
        let first = if l_on_half { ml.clone() } else { &ml + 1 };
        if first > mh {
            // no half-integer inside: every point rounds the same way
            return ml + 1;
        }
        if first == mh {
            let m = mh;
            let num = &m * 2 + 1;
            let den = &scale * 2;
            if is_half(&num, &den) {
                return if m.is_even() { m } else { m + 1 };
            }
        }
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &BigInt, bits: u32) -> f64 {
        to_f64_scaled(v, bits)
    }

    #[test]
    fn pi_matches_f64() {
        let p = pi_fixed(200);
        assert!((f(&p, 200) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn cosines_match_f64() {
        for n in 1..60u64 {
            for k in 0..n {
                let c = cos_2pi_frac(k, n, 120);
                let want = (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
                assert!((f(&c, 120) - want).abs() < 1e-14, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn cosine_error_is_within_bound_at_high_precision() {
        // cos(2π/5) = (√5 - 1)/4, checked at 300 bits through the exact square
        let bits = 300;
        let c = cos_2pi_frac(1, 5, bits);
        // (4c + 1)^2 = 5
        let one = BigInt::one() << bits;
        let t: BigInt = &c * BigInt::from(4) + &one;
        let sq: BigInt = (&t * &t) >> bits;
        let five: BigInt = &one * BigInt::from(5);
        let err: BigInt = (sq - five).abs();
        assert!(err < BigInt::from(1_000));
    }

    #[test]
    fn interval_sqrt_encloses() {
        let two = DyInterval::exact_int(&BigInt::from(2), 64);
        let r = two.sqrt();
        let lo = f(&r.lo, 64);
        let hi = f(&r.hi, 64);
        assert!(lo <= std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 <= hi);
    }
}
