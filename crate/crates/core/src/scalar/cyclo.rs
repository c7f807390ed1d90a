//! Exact elements of cyclotomic fields in the Zumbroich basis.
//!
//! An element of `Q(ζ_N)` is stored as `Σ c_k ζ_N^k / den`, where the exponents
//! `k` range over the Zumbroich basis of level `N` and `N` is the smallest level
//! containing the value. Both choices are canonical, so structural equality is
//! value equality and the zero test is exact.

use super::approx::{self, DyInterval, COS_ERR_ULPS};
use super::int::Int;
use super::ScalarError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

/// One prime-power factor `p^e` of a level `N`.
#[derive(Debug, Clone)]
struct PrimePart {
    p: u32,
    e: u32,
    pe: u32,
    /// inverse of `N / p^e` modulo `p^e`
    cof_inv: u32,
}

impl PrimePart {
    /// CRT component of exponent `k` in the tensor decomposition of `ζ_N`.
    #[inline]
    fn component(&self, k: u32) -> u32 {
        (((k % self.pe) as u64 * self.cof_inv as u64) % self.pe as u64) as u32
    }

    #[inline]
    fn in_basis(&self, k: u32) -> bool {
        let c = self.component(k);
        if self.p == 2 {
            c < self.pe / 2
        } else {
            c >= self.pe / self.p
        }
    }
}

#[derive(Debug)]
struct LevelCtx {
    n: u32,
    parts: Vec<PrimePart>,
}

thread_local! {
    static LEVELS: RefCell<HashMap<u32, Rc<LevelCtx>>> = RefCell::new(HashMap::new());
}

fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (g, x, _) = ext_gcd(a as i64, m as i64);
    debug_assert_eq!(g, 1);
    x.rem_euclid(m as i64) as u64
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn level_ctx(n: u32) -> Rc<LevelCtx> {
    if let Some(c) = LEVELS.with(|l| l.borrow().get(&n).cloned()) {
        return c;
    }
    debug_assert!(n % 4 != 2, "levels are normalised away from 2 mod 4");
    let parts = factorize(n)
        .into_iter()
        .map(|(p, e)| {
            let pe = p.pow(e);
            let cof = n / pe;
            PrimePart { p, e, pe, cof_inv: mod_inverse((cof % pe) as u64, pe as u64) as u32 }
        })
        .collect();
    let ctx = Rc::new(LevelCtx { n, parts });
    LEVELS.with(|l| l.borrow_mut().insert(n, ctx.clone()));
    ctx
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

/// Rewrites a dense coefficient vector of length `N` into the Zumbroich basis.
fn reduce_dense(ctx: &LevelCtx, coeffs: &mut [Int]) {
    let n = ctx.n;
    for part in &ctx.parts {
        let step = n / part.p;
        for k in 0..n {
            if coeffs[k as usize].is_zero() || part.in_basis(k) {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[k as usize], Int::zero());
            for i in 1..part.p {
                let t = ((k as u64 + i as u64 * step as u64) % n as u64) as usize;
                coeffs[t].sub_assign(&c);
            }
        }
    }
}

/// Exact element of a cyclotomic field, canonical in level and coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgScalar {
    level: u32,
    terms: Vec<(u32, Int)>,
    den: Int,
}

impl AlgScalar {
    pub fn zero() -> Self {
        AlgScalar { level: 1, terms: Vec::new(), den: Int::one() }
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_int(Int::from(v))
    }

    fn from_int(v: Int) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        AlgScalar { level: 1, terms: vec![(0, v)], den: Int::one() }
    }

    /// The rational number `num / den`; errors when `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self, ScalarError> {
        Self::from_bigratio(&BigInt::from(num), &BigInt::from(den))
    }

    pub fn from_bigratio(num: &BigInt, den: &BigInt) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivideByZero);
        }
        let mut x =
            AlgScalar { level: 1, terms: vec![(0, Int::from_big(num.clone()))], den: Int::from_big(den.clone()) };
        if num.is_zero() {
            return Ok(Self::zero());
        }
        x.normalize_den();
        Ok(x)
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_bigratio(q.numer(), q.denom()).expect("rational with nonzero denominator")
    }

    /// `2cos(π/m)` for an integer `m ≥ 2`.
    pub fn two_cos_pi_over(m: u32) -> Result<Self, ScalarError> {
        if m < 2 {
            return Err(ScalarError::InvalidLabel(m as i64));
        }
        // 2cos(π/m) = ζ_{2m} + ζ_{2m}^{-1}
        if m.is_multiple_of(2) {
            let n = 2 * m;
            Ok(Self::from_raw(n, vec![(1, Int::one()), (n - 1, Int::one())], Int::one()))
        } else {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            let h = m.div_ceil(2);
            let terms = vec![(h % m, Int::from(-1)), ((m - h) % m, Int::from(-1))];
            Ok(Self::from_raw(m, terms, Int::one()))
        }
    }

    /// `2cos(2πk/n)`, used for closed-form cross-checks.
    pub fn two_cos_2pi(k: u32, n: u32) -> Self {
        let k = k % n;
        if n % 4 == 2 {
            // ζ_n^k = (-1)^k ζ_m^{hk} with m = n/2 odd and h = (m+1)/2
            let m = (n / 2) as u64;
            let e = (m.div_ceil(2) * k as u64) % m;
            let s = Int::from(if k % 2 == 1 { -1 } else { 1 });
            let terms = vec![(e as u32, s.clone()), (((m - e) % m) as u32, s)];
            return Self::from_raw(m as u32, terms, Int::one());
        }
        Self::from_raw(n, vec![(k, Int::one()), ((n - k) % n, Int::one())], Int::one())
    }

    /// Builds a value from arbitrary exponents at level `n`.
    pub(crate) fn from_raw(n: u32, terms: Vec<(u32, Int)>, den: Int) -> Self {
        debug_assert!(n % 4 != 2, "callers pass normalised levels");
        let n = n.max(1);
        let ctx = level_ctx(n);
        let mut dense = vec![Int::zero(); n as usize];
        for (k, c) in terms {
            dense[(k % n) as usize].add_assign(&c);
        }
        Self::from_dense(&ctx, dense, den)
    }

    fn from_dense(ctx: &LevelCtx, mut dense: Vec<Int>, den: Int) -> Self {
        reduce_dense(ctx, &mut dense);
        let terms: Vec<(u32, Int)> =
            dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k as u32, c)).collect();
        let mut x = AlgScalar { level: ctx.n, terms, den };
        x.normalize_den();
        x.shrink();
        x
    }

    fn normalize_den(&mut self) {
        if self.terms.is_empty() {
            *self = Self::zero();
            return;
        }
        if self.den.signum() < 0 {
            self.den = self.den.neg();
            for t in &mut self.terms {
                t.1 = t.1.neg();
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for (_, c) in &self.terms {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den = self.den.div_exact(&g);
            for t in &mut self.terms {
                t.1 = t.1.div_exact(&g);
            }
        }
    }

    /// Moves the value to the smallest level that contains it.
    fn shrink(&mut self) {
        loop {
            if self.terms.is_empty() {
                self.level = 1;
                return;
            }
            if self.level == 1 {
                return;
            }
            let ctx = level_ctx(self.level);
            let mut moved = false;
            for part in &ctx.parts {
                if self.try_descend(part) {
                    moved = true;
                    break;
                }
            }
            if !moved {
                return;
            }
        }
    }

    fn try_descend(&mut self, part: &PrimePart) -> bool {
        let n = self.level;
        let p = part.p;
        if (p == 2 && part.e >= 3) || (p != 2 && part.e >= 2) {
            if self.terms.iter().all(|(k, _)| k % p == 0) {
                self.level = n / p;
                for t in &mut self.terms {
                    t.0 /= p;
                }
                return true;
            }
            return false;
        }
        if p == 2 {
            // e == 2: the subfield of level n/4
            if self.terms.iter().all(|(k, _)| k % 4 == 0) {
                let m = n / 4;
                for t in &mut self.terms {
                    t.0 = (t.0 / 4) % m.max(1);
                }
                self.level = m.max(1);
                self.terms.sort_by_key(|t| t.0);
                return true;
            }
            return false;
        }
        // p odd with e == 1: coefficients must be constant along each fibre
        let m = n / p;
        if !self.terms.len().is_multiple_of(p as usize - 1) {
            return false;
        }
        let mut groups: HashMap<u32, (u32, &Int)> = HashMap::new();
        for (k, c) in &self.terms {
            let r = k % m;
            match groups.get_mut(&r) {
                None => {
                    groups.insert(r, (1, c));
                }
                Some(g) => {
                    if g.1 != c {
                        return false;
                    }
                    g.0 += 1;
                }
            }
        }
        if groups.values().any(|g| g.0 != p - 1) {
            return false;
        }
        let pinv = mod_inverse((p % m.max(1)) as u64, m.max(1) as u64);
        let mut terms: Vec<(u32, Int)> = groups
            .into_iter()
            .map(|(r, (_, c))| {
                let j = if m <= 1 { 0 } else { ((r as u64 * pinv) % m as u64) as u32 };
                (j, c.neg())
            })
            .collect();
        terms.sort_by_key(|t| t.0);
        self.terms = terms;
        self.level = m.max(1);
        true
    }

    /// Conductor of the smallest cyclotomic field holding the value.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.level == 1 && self.den.is_one() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.level == 1
    }

    /// Numerator and denominator when the value is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_rational() {
            return None;
        }
        let num = self.terms.first().map(|t| t.1.to_big()).unwrap_or_default();
        Some(BigRational::new(num, self.den.to_big()))
    }

    fn rational_parts(&self) -> Option<(Int, Int)> {
        if self.level != 1 {
            return None;
        }
        let num = self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Int::zero);
        Some((num, self.den.clone()))
    }

    fn scale(&self, num: &Int, den: &Int) -> Self {
        if num.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let mut x = AlgScalar {
            level: self.level,
            terms: self.terms.iter().map(|(k, c)| (*k, c.mul(num))).collect(),
            den: self.den.mul(den),
        };
        x.normalize_den();
        x
    }

    pub fn neg(&self) -> Self {
        AlgScalar {
            level: self.level,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, subtract: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { o.neg() } else { o.clone() };
        }
        let g = self.den.gcd(&o.den);
        let fa = o.den.div_exact(&g);
        let fb = self.den.div_exact(&g);
        let fb = if subtract { fb.neg() } else { fb };
        let den = self.den.mul(&fa);
        if self.level == o.level {
            let mut terms = Vec::with_capacity(self.terms.len() + o.terms.len());
            let (mut i, mut j) = (0, 0);
            while i < self.terms.len() || j < o.terms.len() {
                let ka = self.terms.get(i).map(|t| t.0).unwrap_or(u32::MAX);
                let kb = o.terms.get(j).map(|t| t.0).unwrap_or(u32::MAX);
                if ka < kb {
                    terms.push((ka, self.terms[i].1.mul(&fa)));
                    i += 1;
                } else if kb < ka {
                    terms.push((kb, o.terms[j].1.mul(&fb)));
                    j += 1;
                } else {
                    let mut c = self.terms[i].1.mul(&fa);
                    c.add_mul(&o.terms[j].1, &fb);
                    if !c.is_zero() {
                        terms.push((ka, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
            let mut x = AlgScalar { level: self.level, terms, den };
            x.normalize_den();
            x.shrink();
            return x;
        }
        let n = lcm(self.level, o.level);
        let ctx = level_ctx(n);
        let mut dense = vec![Int::zero(); n as usize];
        let ma = n / self.level;
        let mb = n / o.level;
        for (k, c) in &self.terms {
            dense[((k * ma) % n) as usize].add_mul(c, &fa);
        }
        for (k, c) in &o.terms {
            dense[((k * mb) % n) as usize].add_mul(c, &fb);
        }
        Self::from_dense(&ctx, dense, den)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some((num, den)) = self.rational_parts() {
            return o.scale(&num, &den);
        }
        if let Some((num, den)) = o.rational_parts() {
            return self.scale(&num, &den);
        }
        let n = lcm(self.level, o.level);
        let ctx = level_ctx(n);
        let ma = (n / self.level) as u64;
        let mb = (n / o.level) as u64;
        let n64 = n as u64;
        let mut dense = vec![Int::zero(); n as usize];
        for (i, a) in &self.terms {
            let ei = *i as u64 * ma;
            for (j, b) in &o.terms {
                let k = ((ei + *j as u64 * mb) % n64) as usize;
                dense[k].add_mul(a, b);
            }
        }
        Self::from_dense(&ctx, dense, self.den.mul(&o.den))
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Galois automorphism `ζ_N ↦ ζ_N^a` for `a` coprime to the level.
    fn galois(&self, a: u64) -> Self {
        if self.level == 1 {
            return self.clone();
        }
        let n = self.level as u64;
        let a = a % n;
        let terms = self.terms.iter().map(|(k, c)| (((*k as u64 * a) % n) as u32, c.clone())).collect();
        Self::from_raw(self.level, terms, self.den.clone())
    }

    /// Multiplicative inverse via a norm computed along cyclic Galois factors.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivideByZero);
        }
        if let Some((num, den)) = self.rational_parts() {
            let mut x = AlgScalar { level: 1, terms: vec![(0, den)], den: num };
            x.normalize_den();
            return Ok(x);
        }
        let n = self.level;
        let mut cofactor = Self::one();
        let mut cur = self.clone();
        for (gen, order) in unit_group_generators(n) {
            if cur.is_rational() {
                break;
            }
            // R = ∏_{j=1}^{order-1} σ^j(cur), built as σ(T(order-1)) with T(m) = ∏_{j<m} σ^j(cur)
            let t = galois_orbit_product(&cur, gen, order - 1);
            let r = t.galois(gen);
            cofactor = cofactor.mul(&r);
            cur = cur.mul(&r);
        }
        let (num, den) = cur.rational_parts().expect("full Galois norm is rational");
        Ok(cofactor.scale(&den, &num))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivideByZero);
        }
        if let Some((num, den)) = o.rational_parts() {
            return Ok(self.scale(&den, &num));
        }
        Ok(self.mul(&o.inv()?))
    }

    /// Floating approximation of the (real) value.
    pub fn to_f64(&self) -> f64 {
        let (s, _) = self.f64_with_bound();
        s / self.den.to_f64()
    }

    /// Sum `Σ c_k cos(2πk/N)` and a bound on its rounding error.
    fn f64_with_bound(&self) -> (f64, f64) {
        let n = self.level as u64;
        let mut sum = 0.0f64;
        let mut mag = 0.0f64;
        for (k, c) in &self.terms {
            let k = *k as u64 % n;
            let k = if 2 * k > n { n - k } else { k };
            let cf = c.to_f64();
            let cs = (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
            sum += cf * cs;
            mag += cf.abs();
        }
        let t = self.terms.len() as f64;
        (sum, mag * (t + 16.0) * f64::EPSILON)
    }

    /// Exact sign: `-1`, `0` or `1`.
    pub fn sign(&self) -> i32 {
        if self.terms.is_empty() {
            return 0;
        }
        if self.level == 1 {
            return self.terms[0].1.signum();
        }
        let (s, bound) = self.f64_with_bound();
        if s.abs() > 2.0 * bound && s.is_finite() {
            return if s > 0.0 { 1 } else { -1 };
        }
        let mut bits = 128;
        loop {
            if let Some(sg) = self.enclose_numerator(bits).sign() {
                return sg;
            }
            bits *= 2;
        }
    }

    /// Enclosure of `Σ c_k cos(2πk/N)` (the value times `den`).
    fn enclose_numerator(&self, bits: u32) -> DyInterval {
        let n = self.level as u64;
        let mut s = BigInt::zero();
        let mut err = BigInt::zero();
        for (k, c) in &self.terms {
            let cb = c.to_big();
            s += &cb * approx::cos_2pi_frac(*k as u64, n, bits);
            err += cb.abs();
        }
        err *= BigInt::from(COS_ERR_ULPS);
        DyInterval { lo: &s - &err, hi: s + err, bits }
    }

    /// Rigorous enclosure of the value at `bits` fractional bits.
    pub fn enclose(&self, bits: u32) -> DyInterval {
        if self.is_zero() {
            return DyInterval { lo: BigInt::zero(), hi: BigInt::zero(), bits };
        }
        self.enclose_numerator(bits).div_int(&self.den.to_big())
    }

    /// Correctly rounded fixed-point decimal string with `digits` fractional digits.
    pub fn to_float(&self, digits: u32) -> String {
        let r = approx::round_decimal(
            digits,
            |b| self.enclose(b),
            |num, den| {
                let h = AlgScalar::from_bigratio(num, den).expect("nonzero denominator");
                *self == h
            },
        );
        format_fixed(&r, digits)
    }

    /// Sparse coordinates `(exponent, numerator)` over the common denominator.
    pub fn coords(&self) -> (&[(u32, Int)], &Int) {
        (&self.terms, &self.den)
    }

    /// Human-readable exact form; quadratic fields print with square roots.
    pub fn exact_string(&self) -> String {
        if let Some(q) = self.as_rational() {
            return q.to_string();
        }
        if let Some(s) = self.quadratic_string() {
            return s;
        }
        format!("{self}")
    }

    fn quadratic_string(&self) -> Option<String> {
        let d: i64 = match self.level {
            5 => 5,
            8 => 2,
            12 => 3,
            _ => return None,
        };
        let root = match d {
            5 => Self::two_cos_pi_over(5).ok()?.scale(&Int::from(2), &Int::one()).sub(&Self::one()),
            2 => Self::two_cos_pi_over(4).ok()?,
            _ => Self::two_cos_pi_over(6).ok()?,
        };
        // the automorphism negating the root fixes the rational part
        let n = self.level as u64;
        let conj_gen = (2..n).find(|a| a.gcd(&n) == 1 && root.galois(*a) == root.neg())?;
        let a = self.add(&self.galois(conj_gen)).scale(&Int::one(), &Int::from(2));
        let b = self.sub(&a).mul(&root).scale(&Int::one(), &Int::from(d));
        let qa = a.as_rational()?;
        let qb = b.as_rational()?;
        Some(surd_string(&qa, &qb, d))
    }
}

fn surd_string(a: &BigRational, b: &BigRational, d: i64) -> String {
    let den = a.denom().lcm(b.denom());
    let an = a.numer() * (&den / a.denom());
    let bn = b.numer() * (&den / b.denom());
    let mut s = String::new();
    if !an.is_zero() {
        s.push_str(&an.to_string());
    }
    let babs = bn.abs();
    let coef = if babs.is_one() { String::new() } else { format!("{babs}*") };
    if s.is_empty() {
        if bn.is_negative() {
            s.push('-');
        }
    } else {
        s.push_str(if bn.is_negative() { " - " } else { " + " });
    }
    s.push_str(&format!("{coef}sqrt({d})"));
    if den.is_one() {
        s
    } else {
        format!("({s})/{den}")
    }
}

/// Formats `r / 10^digits` as a fixed-point decimal; zero prints unsigned.
pub fn format_fixed(r: &BigInt, digits: u32) -> String {
    let neg = r.is_negative();
    let mut s = r.abs().to_string();
    let d = digits as usize;
    if s.len() <= d {
        s = format!("{}{}", "0".repeat(d + 1 - s.len()), s);
    }
    let (ip, fp) = s.split_at(s.len() - d);
    let body = if d == 0 { ip.to_string() } else { format!("{ip}.{fp}") };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// `∏_{j<m} σ_a^j(x)` by binary doubling.
fn galois_orbit_product(x: &AlgScalar, a: u64, m: u64) -> AlgScalar {
    if m == 0 {
        return AlgScalar::one();
    }
    let mut acc = x.clone();
    let mut len: u64 = 1;
    let top = 63 - m.leading_zeros();
    for bit in (0..top).rev() {
        // T(2 len) = T(len) · σ^len(T(len))
        let shifted = acc.galois(pow_mod(a, len, x.level as u64));
        acc = acc.mul(&shifted);
        len *= 2;
        if (m >> bit) & 1 == 1 {
            let nxt = x.galois(pow_mod(a, len, x.level as u64));
            acc = acc.mul(&nxt);
            len += 1;
        }
    }
    debug_assert_eq!(len, m);
    acc
}

fn pow_mod(a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = a % m;
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    r
}

/// Generators and orders of a cyclic decomposition of `(Z/N)^*`.
fn unit_group_generators(n: u32) -> Vec<(u64, u64)> {
    let n64 = n as u64;
    let mut gens = Vec::new();
    for (p, e) in factorize(n) {
        let pe = (p as u64).pow(e);
        let rest = n64 / pe;
        let lift = |g: u64| -> u64 {
            // g mod p^e, 1 mod rest
            if rest == 1 {
                return g % pe;
            }
            let inv = mod_inverse(rest % pe, pe);
            let inv2 = mod_inverse(pe % rest, rest);
            ((g % pe) * rest % n64 * inv % n64 + pe * inv2 % n64) % n64
        };
        if p == 2 {
            if e >= 2 {
                gens.push((lift(pe - 1), 2));
            }
            if e >= 3 {
                gens.push((lift(5), pe / 4));
            }
        } else {
            let g = primitive_root_prime_power(p as u64, e);
            gens.push((lift(g), pe / p as u64 * (p as u64 - 1)));
        }
    }
    gens
}

fn primitive_root_prime_power(p: u64, e: u32) -> u64 {
    let phi = p - 1;
    let factors: Vec<u64> = factorize(phi as u32).into_iter().map(|(q, _)| q as u64).collect();
    let mut g = 2;
    loop {
        if factors.iter().all(|q| pow_mod(g, phi / q, p) != 1) {
            break;
        }
        g += 1;
    }
    if e >= 2 && pow_mod(g, p - 1, p * p) == 1 {
        g += p;
    }
    g
}

impl fmt::Display for AlgScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                s.push_str(&format!("{a}*"));
            }
            s.push_str(&format!("E({})^{}", self.level, k));
        }
        if self.den.is_one() {
            write!(f, "{s}")
        } else {
            write!(f, "({s})/{}", self.den)
        }
    }
}

impl fmt::Debug for AlgScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [~{}]", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: u32) -> AlgScalar {
        AlgScalar::two_cos_pi_over(m).unwrap()
    }

    fn int(v: i64) -> AlgScalar {
        AlgScalar::from_i64(v)
    }

    #[test]
    fn small_labels_are_rational() {
        assert!(c(2).is_zero());
        assert_eq!(c(3), int(1));
        assert_eq!(c(4).square(), int(2));
        assert_eq!(c(6).square(), int(3));
        assert_eq!(c(4).level(), 8);
    }

    #[test]
    fn golden_ratio_minimal_polynomial() {
        let phi = c(5);
        assert!(phi.square().sub(&phi).sub(&int(1)).is_zero());
        assert!((phi.to_f64() - 1.618033988749895).abs() < 1e-14);
    }

    #[test]
    fn heptagonal_minimal_polynomial() {
        let x = c(7);
        let x2 = x.square();
        let x3 = x2.mul(&x);
        let v = x3.sub(&x2).sub(&x.add(&x)).add(&int(1));
        assert!(v.is_zero());
    }

    #[test]
    fn cosine_values_match_floats() {
        for m in 2..60 {
            let v = c(m).to_f64();
            let want = 2.0 * (std::f64::consts::PI / m as f64).cos();
            assert!((v - want).abs() < 1e-12, "m={m}");
        }
        for n in 1..40 {
            for k in 0..n {
                let v = AlgScalar::two_cos_2pi(k, n).to_f64();
                let want = 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
                assert!((v - want).abs() < 1e-12, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn mixed_levels_embed_into_lcm() {
        let s = c(5).add(&c(3));
        assert!((s.to_f64() - 2.618033988749895).abs() < 1e-14);
        // φ + 1 = φ²: the sum drops back to level 5
        assert_eq!(s.level(), 5);
        assert_eq!(s, c(5).square());
        let t = c(5).mul(&c(7));
        assert_eq!(t.level(), 35);
    }

    #[test]
    fn canonical_zero() {
        let x = c(11).sub(&c(11));
        assert!(x.is_zero());
        assert_eq!(x.sign(), 0);
        assert_eq!(x.level(), 1);
    }

    #[test]
    fn paper_determinant_value() {
        let sqrt5 = c(5).add(&c(5)).sub(&int(1));
        let v = int(25).sub(&int(11).mul(&sqrt5)).div(&int(2)).unwrap();
        assert_eq!(v.sign(), 1);
        assert_eq!(v.to_float(6), "0.201626");
        assert_eq!(v.exact_string(), "(25 - 11*sqrt(5))/2");
    }

    #[test]
    fn inverse_roundtrip() {
        for m in [5u32, 7, 8, 9, 11, 12, 15, 16, 20, 24] {
            let x = c(m).add(&int(3)).mul(&c(m).sub(&int(1)));
            let y = x.inv().unwrap();
            assert_eq!(x.mul(&y), int(1), "m={m}");
        }
        let x = c(5).mul(&c(7)).add(&c(4));
        assert_eq!(x.mul(&x.inv().unwrap()), int(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(int(1).div(&AlgScalar::zero()).is_err());
        assert!(AlgScalar::zero().inv().is_err());
    }

    #[test]
    fn sign_near_cancellation() {
        // 1 - φ < 0 and a tiny positive difference resolved exactly
        assert_eq!(int(1).sub(&c(5)).sign(), -1);
        let phi = c(5);
        let p20 = (0..20).fold(int(1), |a, _| a.mul(&phi));
        // φ^20 = L20 - ψ^20 with L20 = 15127 and 0 < ψ^20 < 1e-4
        let v = p20.sub(&int(15127));
        assert_eq!(v.sign(), -1);
        assert!(v.to_f64() < 0.0 && v.to_f64() > -1e-4);
        assert_eq!(v.neg().sign(), 1);
    }

    #[test]
    fn rounding_is_half_even_on_exact_ties() {
        assert_eq!(AlgScalar::from_ratio(1, 8).unwrap().to_float(2), "0.12");
        assert_eq!(AlgScalar::from_ratio(3, 8).unwrap().to_float(2), "0.38");
        assert_eq!(AlgScalar::from_ratio(-5, 2).unwrap().to_float(0), "-2");
        assert_eq!(AlgScalar::zero().to_float(6), "0.000000");
        assert_eq!(AlgScalar::from_ratio(-1, 10_000_000).unwrap().to_float(6), "0.000000");
    }

    #[test]
    fn esselmann_value_at_eleven() {
        // -4(3+√5) + 8(1+√5)cos(2π/11)
        let sqrt5 = c(5).add(&c(5)).sub(&int(1));
        let cos = AlgScalar::two_cos_2pi(1, 11).div(&int(2)).unwrap();
        let v = int(-4).mul(&int(3).add(&sqrt5)).add(&int(8).mul(&int(1).add(&sqrt5)).mul(&cos));
        assert_eq!(v.to_float(6), "0.834557");
    }

    #[test]
    fn unit_group_orders_multiply_to_phi() {
        for n in [3u32, 4, 5, 8, 9, 12, 15, 16, 20, 27, 40, 44, 88, 91, 180, 440] {
            let phi: u64 = (1..n as u64).filter(|k| k.gcd(&(n as u64)) == 1).count() as u64;
            let prod: u64 = unit_group_generators(n).iter().map(|g| g.1).product();
            assert_eq!(prod, phi, "n={n}");
            for (g, o) in unit_group_generators(n) {
                assert_eq!(pow_mod(g, o, n as u64), 1 % n as u64);
            }
        }
    }
}
