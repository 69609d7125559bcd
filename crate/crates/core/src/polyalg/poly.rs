use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Variable names with per-variable weights (default 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Ring> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        Arc::new(Ring { names, weights })
    }

    pub fn with_weights(names: Vec<String>, weights: Vec<u32>) -> Result<Arc<Ring>> {
        if names.len() != weights.len() {
            return Err(Error::Arity {
                expected: names.len(),
                got: weights.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable '{n}'")));
            }
        }
        Ok(Arc::new(Ring { names, weights }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// This ring followed by the variables of `other` that are not already
    /// present, plus the index map from `other` into the result.
    pub fn merged(&self, other: &Ring) -> (Arc<Ring>, Vec<usize>) {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        let mut map = Vec::with_capacity(other.nvars());
        for (n, &w) in other.names.iter().zip(&other.weights) {
            match names.iter().position(|m| m == n) {
                Some(i) => map.push(i),
                None => {
                    map.push(names.len());
                    names.push(n.clone());
                    weights.push(w);
                }
            }
        }
        (Arc::new(Ring { names, weights }), map)
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// An exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) SmallVec<[u16; 32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i % 64` is set when variable `i` occurs.
    pub(crate) fn mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Graded reverse lexicographic comparison.
pub(crate) fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Exact multivariate polynomial over the rationals.
///
/// Terms are kept sorted descending in grevlex with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn integer(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), Rational::one())],
        }
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Option<Self> {
        ring.index_of(name).map(|i| Self::var(ring, i))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.iter().all(|(m, _)| m.0.len() == ring.nvars()));
        terms.sort_by(|a, b| grevlex(&b.0 .0, &a.0 .0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusts that `terms` are already grevlex-descending, distinct and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, Rational)>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Set of weighted degrees of the terms, using the ring's weights.
    pub fn weighted_degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.iter().map(|(m, _)| m.weighted_degree(self.ring.weights())).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_weighted_homogeneous_of(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.weighted_degree(self.ring.weights()) == d)
    }

    /// Indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves grevlex order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading (grevlex) coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Replaces variable `i` by `images[i]`; all images share one ring.
    pub fn substitute(&self, images: &[Polynomial], target: &Arc<Ring>) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(target));
                }
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Relabels into `target`, sending variable `i` to `map[i]`.
    pub fn embed(&self, target: &Arc<Ring>, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = SmallVec::from_elem(0u16, n);
                for (i, &x) in m.0.iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Moves into `target` by variable name. Fails if a variable that occurs
    /// is missing there.
    pub fn rename_into(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let mut map = vec![usize::MAX; self.ring.nvars()];
        for i in self.variables() {
            let name = &self.ring.names()[i];
            map[i] = target.index_of(name).ok_or_else(|| Error::UnknownVariable {
                name: name.clone(),
                position: 0,
            })?;
        }
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = 0;
            }
        }
        Ok(self.embed(target, &map))
    }

    /// Groups terms by their exponents in `vars`: returns, for each distinct
    /// monomial in those variables, the coefficient polynomial in the rest
    /// (still in this ring, with `vars` absent).
    pub fn coefficients_in(&self, vars: &[usize]) -> BTreeMap<Monomial, Polynomial> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = Monomial(vars.iter().map(|&i| m.0[i]).collect());
            let mut rest = m.clone();
            for &i in vars {
                rest.0[i] = 0;
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, ts)| (k, Polynomial::from_terms(&self.ring, ts)))
            .collect()
    }

    /// Content-free integer multiple with positive leading coefficient, for
    /// display of ideal generators.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let n = (c * Rational::from_integer(lcm.clone())).to_integer();
            g = num_integer::Integer::gcd(&g, &n);
        }
        let mut factor = Rational::new(lcm, g);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

fn merge_add(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match grevlex(&a[i].0 .0, &b[j].0 .0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0.clone(), c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0.clone(), c));
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in addition");
        Polynomial::from_sorted(&self.ring, merge_add(&self.terms, &rhs.terms, false))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in subtraction");
        Polynomial::from_sorted(&self.ring, merge_add(&self.terms, &rhs.terms, true))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_sorted(&self.ring, self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch in multiplication");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_monomial(m, c);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let e = acc.entry(m1.mul(m2)).or_insert_with(Rational::zero);
                *e += c1 * c2;
            }
        }
        Polynomial::from_terms(&self.ring, acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = format_monomial(m, self.ring.names());
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{e}", names[i])),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_and_display() {
        let r = Ring::new(["f", "g", "h"]);
        let f = Polynomial::var(&r, 0);
        let g = Polynomial::var(&r, 1);
        let h = Polynomial::var(&r, 2);
        let p = &(&f * &g) - &h.pow(2);
        assert_eq!(p.to_string(), "f*g - h^2");
        assert!((&p - &p).is_zero());
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        let c = Polynomial::constant(&r, q(-1, 2));
        assert_eq!((&c * &f).to_string(), "-1/2*f");
        assert_eq!((&f + &g).pow(2).to_string(), "f^2 + 2*f*g + g^2");
    }

    #[test]
    fn substitution() {
        let r = Ring::new(["f", "g", "h"]);
        let s = Ring::new(["x", "y"]);
        let p = &(&Polynomial::var(&r, 0) * &Polynomial::var(&r, 1)) - &Polynomial::var(&r, 2).pow(2);
        let x = Polynomial::var(&s, 0);
        let y = Polynomial::var(&s, 1);
        let imgs = vec![&y * &y, &x * &x, &x * &y];
        assert!(p.substitute(&imgs, &s).is_zero());
    }

    #[test]
    fn eval_and_coefficients() {
        let r = Ring::new(["a", "x"]);
        let a = Polynomial::var(&r, 0);
        let x = Polynomial::var(&r, 1);
        let p = &(&a * &x.pow(2)) + &(&x.pow(2) + &a);
        assert_eq!(p.eval(&[q(2, 1), q(3, 1)]), q(2 * 9 + 9 + 2, 1));
        let co = p.coefficients_in(&[1]);
        assert_eq!(co.len(), 2);
        let key = Monomial::from_exponents(&[2]);
        assert_eq!(co[&key].to_string(), "a + 1");
    }

    #[test]
    fn primitive_form() {
        let r = Ring::new(["x", "y"]);
        let p = &Polynomial::var(&r, 0).scale(&q(-2, 3)) + &Polynomial::var(&r, 1).scale(&q(4, 9));
        assert_eq!(p.primitive().to_string(), "3*x - 2*y");
    }
}
