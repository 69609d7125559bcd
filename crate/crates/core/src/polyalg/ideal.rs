use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::groebner::{self, leading_monomial, Budget, MonomialOrder};
use super::parse::parse_poly;
use super::poly::{same_ring, Polynomial, Ring};
use crate::error::{Error, Result};

/// A finitely generated ideal in a polynomial ring over the rationals.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
}

/// A reduced Groebner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), gens })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
        }
    }

    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| parse_poly(s, ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn groebner(&self, order: &MonomialOrder, budget: Budget) -> Result<GroebnerBasis> {
        let polys = groebner::buchberger(&self.ring, &self.gens, order, budget)?;
        Ok(GroebnerBasis {
            ring: self.ring.clone(),
            order: order.clone(),
            polys,
        })
    }

    /// `I ∩ K[remaining variables]`, generated by the elements of a block-order
    /// Groebner basis free of the dropped variables. Stays in the same ring.
    pub fn eliminate(&self, drop: &[usize], budget: Budget) -> Result<Ideal> {
        let gb = self.groebner(&MonomialOrder::Block(drop.to_vec()), budget)?;
        let gens = gb
            .polys
            .into_iter()
            .filter(|p| p.variables().iter().all(|v| !drop.contains(v)))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Eliminates the named variables.
    pub fn eliminate_named(&self, drop: &[&str], budget: Budget) -> Result<Ideal> {
        let idx = drop
            .iter()
            .map(|n| {
                self.ring.index_of(n).ok_or_else(|| Error::UnknownVariable {
                    name: n.to_string(),
                    position: 0,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx, budget)
    }

    /// Moves the generators into `target` by variable name.
    pub fn rename_into(&self, target: &Arc<Ring>) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.rename_into(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// `(I : h^∞)` via `I + (1 - t·h)` with `t` eliminated.
    pub fn saturate(&self, h: &Polynomial, budget: Budget) -> Result<Ideal> {
        if !same_ring(h.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if h.is_zero() {
            return Err(Error::ZeroSaturator);
        }
        let mut name = "_sat".to_string();
        while self.ring.index_of(&name).is_some() {
            name.push('_');
        }
        let mut names = self.ring.names().to_vec();
        let mut weights = self.ring.weights().to_vec();
        names.push(name);
        weights.push(0);
        let big = Ring::with_weights(names, weights)?;
        let n = self.ring.nvars();
        let map: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.embed(&big, &map)).collect();
        let t = Polynomial::var(&big, n);
        let hb = h.embed(&big, &map);
        gens.push(&Polynomial::one(&big) - &(&t * &hb));
        let elim = Ideal::new(&big, gens)?.eliminate(&[n], budget)?;
        let back: Vec<Polynomial> = elim.gens.iter().map(|g| g.rename_into(&self.ring)).collect::<Result<_>>()?;
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: back,
        })
    }

    /// True iff the reduced Groebner basis is `{1}`: no common zero over the
    /// algebraic closure.
    pub fn is_inconsistent(&self, budget: Budget) -> Result<bool> {
        Ok(self.groebner(&MonomialOrder::Grevlex, budget)?.is_unit())
    }

    /// Krull dimension of `K[x]/I`; `-1` for the unit ideal.
    pub fn dimension(&self, budget: Budget) -> Result<i64> {
        self.groebner(&MonomialOrder::Grevlex, budget)?.dimension()
    }

    /// Equality of ideals via reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let a = self.groebner(&MonomialOrder::Grevlex, budget)?;
        let b = other.groebner(&MonomialOrder::Grevlex, budget)?;
        Ok(a.polys == b.polys)
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        let gb = other.groebner(&MonomialOrder::Grevlex, budget)?;
        for g in &self.gens {
            if !gb.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_file(&self) -> IdealFile {
        IdealFile {
            vars: self.ring.names().to_vec(),
            weights: Some(self.ring.weights().to_vec()),
            gens: self.gens.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_file(file: &IdealFile) -> Result<Ideal> {
        let ring = match &file.weights {
            Some(w) => Ring::with_weights(file.vars.clone(), w.clone())?,
            None => Ring::with_weights(file.vars.clone(), vec![1; file.vars.len()])?,
        };
        let refs: Vec<&str> = file.gens.iter().map(String::as_str).collect();
        Ideal::parse(&ring, &refs)
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// JSON form `{"vars": [...], "weights": [...], "gens": ["poly", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub gens: Vec<String>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<Polynomial> {
        self.polys
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.polys.clone(),
        }
    }

    pub fn normal_form(&self, p: &Polynomial, budget: Budget) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        groebner::reduce_by(p, &self.polys, &self.order, budget)
    }

    pub fn contains(&self, p: &Polynomial, budget: Budget) -> Result<bool> {
        Ok(self.normal_form(p, budget)?.is_zero())
    }

    /// Adds generators, reusing this basis as a head start.
    pub fn extend(&self, extra: &[Polynomial], budget: Budget) -> Result<GroebnerBasis> {
        if extra.iter().any(|p| !same_ring(p.ring(), &self.ring)) {
            return Err(Error::RingMismatch);
        }
        let polys = groebner::extend_basis(&self.ring, &self.polys, extra, &self.order, budget)?;
        Ok(GroebnerBasis {
            ring: self.ring.clone(),
            order: self.order.clone(),
            polys,
        })
    }

    /// Krull dimension from the leading-term ideal: the size of a largest set
    /// of variables containing the support of no leading monomial.
    pub fn dimension(&self) -> Result<i64> {
        if self.is_unit() {
            return Ok(-1);
        }
        let n = self.ring.nvars();
        let supports: Vec<Vec<usize>> = self
            .polys
            .iter()
            .filter_map(|p| leading_monomial(p, &self.order))
            .map(|m| m.support().collect())
            .collect();
        let mut chosen = vec![false; n];
        let mut best = 0usize;
        max_independent(&supports, 0, 0, &mut chosen, &mut best);
        Ok(best as i64)
    }
}

fn max_independent(supports: &[Vec<usize>], i: usize, size: usize, chosen: &mut [bool], best: &mut usize) {
    let n = chosen.len();
    if size + (n - i) <= *best {
        return;
    }
    if i == n {
        *best = size;
        return;
    }
    chosen[i] = true;
    let ok = supports.iter().all(|s| !s.contains(&i) || !s.iter().all(|&v| chosen[v]));
    if ok {
        max_independent(supports, i + 1, size + 1, chosen, best);
    }
    chosen[i] = false;
    max_independent(supports, i + 1, size, chosen, best);
}

/// Reduced Groebner basis with the default budget.
pub fn groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    Ok(ideal.groebner(order, Budget::default())?.into_polys())
}

/// Remainder of `p` modulo the Groebner basis `basis` (computed for `order`).
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    if basis.iter().any(|g| !same_ring(g.ring(), p.ring())) {
        return Err(Error::RingMismatch);
    }
    groebner::reduce_by(p, basis, order, Budget::default())
}

pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    ideal.eliminate(drop, Budget::default())
}

pub fn saturate(ideal: &Ideal, h: &Polynomial) -> Result<Ideal> {
    ideal.saturate(h, Budget::default())
}

pub fn ideal_dimension(ideal: &Ideal) -> Result<i64> {
    ideal.dimension(Budget::default())
}

pub fn is_inconsistent(ideal: &Ideal) -> Result<bool> {
    ideal.is_inconsistent(Budget::default())
}

/// Zero test for an ideal's generators at a rational point.
pub fn vanishes_at(ideal: &Ideal, point: &[super::poly::Rational]) -> bool {
    ideal.gens.iter().all(|g| g.eval(point).is_zero())
}
