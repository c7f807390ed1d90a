//! Sparse multivariate polynomials with cyclotomic coefficients.
//!
//! Parameter families put a symbol `u_i = 2cos(π/p_i)` in place of each
//! parameterized label, compute determinants once in this ring, and evaluate
//! the result exactly at each member. Keeping the monomials factored until
//! evaluation avoids dense products in large compositum fields.

use super::{AlgScalar, Ring};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector with trailing zeros trimmed.
type Monomial = Vec<u16>;

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<Monomial, AlgScalar>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u16], b: &[u16]) -> Monomial {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0));
    }
    trim(out)
}

impl MPoly {
    pub fn constant(c: AlgScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0u16; i + 1];
        m[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, AlgScalar::one());
        MPoly { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.get(i).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<AlgScalar> {
        match self.terms.len() {
            0 => Some(AlgScalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, AlgScalar>, m: Monomial, c: AlgScalar) {
        match terms.get_mut(&m) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(m, c);
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        MPoly { terms }
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                Self::insert_add(&mut terms, mono_mul(ma, mb), ca.mul(cb));
            }
        }
        MPoly { terms }
    }

    /// Exact value at `vals[i]` for each variable `i`.
    pub fn eval(&self, vals: &[AlgScalar]) -> AlgScalar {
        let mut powers: Vec<Vec<AlgScalar>> = vals.iter().map(|_| vec![AlgScalar::one()]).collect();
        let mut acc = AlgScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul(&vals[i]);
                    pw.push(next);
                }
                t = t.mul(&pw[e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes variable `i` by the polynomial `p`.
    pub fn substitute(&self, i: usize, p: &MPoly) -> MPoly {
        let mut out = MPoly::constant(AlgScalar::zero());
        let mut powers = vec![MPoly::constant(AlgScalar::one())];
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(p);
                powers.push(next);
            }
            let mut rest = m.clone();
            if i < rest.len() {
                rest[i] = 0;
            }
            let mut base = BTreeMap::new();
            base.insert(trim(rest), c.clone());
            out = out.add(&MPoly { terms: base }.mul(&powers[e]));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &AlgScalar)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| if *e == 1 { format!("u{i}") } else { format!("u{i}^{e}") })
                    .collect();
                if vars.is_empty() {
                    format!("({})", c.exact_string())
                } else {
                    format!("({})*{}", c.exact_string(), vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        MPoly::constant(AlgScalar::one())
    }
    fn from_i64(v: i64) -> Self {
        MPoly::constant(AlgScalar::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }
}
