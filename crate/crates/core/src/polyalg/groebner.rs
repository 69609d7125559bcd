//! Buchberger's algorithm with the sugar selection strategy and the
//! Gebauer–Möller pair criteria.
//!
//! Working polynomials are term vectors sorted ascending in the active
//! order, so the leading term is the last element.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{grevlex, Monomial, Polynomial, Rational, Ring};
use crate::error::{Error, Result};

/// A term order on exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Grevlex on the listed variables, then grevlex on the rest; any
    /// monomial involving the listed variables beats every monomial that
    /// does not.
    Block(Vec<usize>),
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(format!("unknown monomial order '{other}' (expected grevlex or lex)")),
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Block(vars) => write!(f, "block{vars:?}"),
        }
    }
}

/// Monomial order specialised to a ring size.
#[derive(Clone, Debug)]
pub(crate) struct TermOrder {
    kind: OrderKind,
}

#[derive(Clone, Debug)]
enum OrderKind {
    Grevlex,
    Lex,
    Block(Vec<bool>),
}

impl TermOrder {
    pub(crate) fn new(order: &MonomialOrder, nvars: usize) -> Self {
        let kind = match order {
            MonomialOrder::Grevlex => OrderKind::Grevlex,
            MonomialOrder::Lex => OrderKind::Lex,
            MonomialOrder::Block(first) => {
                let mut mask = vec![false; nvars];
                for &i in first {
                    mask[i] = true;
                }
                OrderKind::Block(mask)
            }
        };
        TermOrder { kind }
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.0[..], &b.0[..]);
        match &self.kind {
            OrderKind::Grevlex => grevlex(a, b),
            OrderKind::Lex => a.cmp(b),
            OrderKind::Block(first) => block_grevlex(a, b, first, true).then_with(|| block_grevlex(a, b, first, false)),
        }
    }
}

fn block_grevlex(a: &[u16], b: &[u16], mask: &[bool], side: bool) -> Ordering {
    let mut da = 0u32;
    let mut db = 0u32;
    for i in 0..a.len() {
        if mask[i] == side {
            da += a[i] as u32;
            db += b[i] as u32;
        }
    }
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if mask[i] == side && a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

/// Upper bound on elementary reduction steps for one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 200_000_000;

    pub fn new(max_steps: u64) -> Self {
        Budget { max_steps }
    }

    pub fn unlimited() -> Self {
        Budget { max_steps: u64::MAX }
    }

    /// `GLVAR_BUDGET` if set and numeric, otherwise the default.
    pub fn from_env() -> Self {
        let steps = std::env::var("GLVAR_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(Self::DEFAULT_STEPS);
        Budget { max_steps: steps }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::from_env()
    }
}

type Terms = Vec<(Monomial, Rational)>;

struct Element {
    /// ascending; leading term last
    terms: Terms,
    lm: Monomial,
    mask: u64,
    sugar: u32,
    alive: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

pub(crate) struct Engine<'a> {
    order: &'a TermOrder,
    basis: Vec<Element>,
    pairs: Vec<Pair>,
    steps: u64,
    budget: Budget,
    pub(crate) unit: bool,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(order: &'a TermOrder, budget: Budget) -> Self {
        Engine {
            order,
            basis: Vec::new(),
            pairs: Vec::new(),
            steps: 0,
            budget,
            unit: false,
        }
    }

    pub(crate) fn to_terms(&self, p: &Polynomial) -> Terms {
        let mut t: Terms = p.terms().to_vec();
        t.sort_by(|a, b| self.order.cmp(&a.0, &b.0));
        t
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            return Err(Error::BudgetExhausted(self.budget.max_steps));
        }
        Ok(())
    }

    fn find_divisor(&self, m: &Monomial, mask: u64) -> Option<usize> {
        self.basis.iter().position(|g| g.alive && g.mask & !mask == 0 && g.lm.divides(m))
    }

    /// `p - c·t·tail(g)` where `p` already had its leading term removed.
    fn sub_multiple(&self, p: Terms, g: &Terms, t: &Monomial, c: &Rational) -> Terms {
        let tail = &g[..g.len() - 1];
        let mut out = Vec::with_capacity(p.len() + tail.len());
        let mut pi = p.into_iter().peekable();
        let mut gi = tail.iter().peekable();
        loop {
            match (pi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.extend(pi);
                    break;
                }
                (None, Some(_)) => {
                    for (m, d) in gi {
                        out.push((m.mul(t), -(d * c)));
                    }
                    break;
                }
                (Some((pm, _)), Some((gm, _))) => {
                    let prod = gm.mul(t);
                    match self.order.cmp(pm, &prod) {
                        Ordering::Less => {
                            out.push(pi.next().expect("peeked"));
                        }
                        Ordering::Greater => {
                            let (_, d) = gi.next().expect("peeked");
                            out.push((prod, -(d * c)));
                        }
                        Ordering::Equal => {
                            let (pm, pc) = pi.next().expect("peeked");
                            let (_, d) = gi.next().expect("peeked");
                            let nc = pc - d * c;
                            if !nc.is_zero() {
                                out.push((pm, nc));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Full reduction by the live basis elements.
    pub(crate) fn reduce(&mut self, mut p: Terms) -> Result<Terms> {
        let mut rem: Terms = Vec::new();
        while let Some((m, c)) = p.pop() {
            match self.find_divisor(&m, m.mask()) {
                Some(k) => {
                    self.tick()?;
                    let g = &self.basis[k];
                    let t = m.div(&g.lm);
                    p = self.sub_multiple(p, &g.terms, &t, &c);
                }
                None => rem.push((m, c)),
            }
        }
        rem.reverse();
        Ok(rem)
    }

    fn make_monic(t: &mut Terms) {
        if let Some((_, lc)) = t.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in t.iter_mut() {
                    *c *= &inv;
                }
            }
        }
    }

    /// Inserts a polynomial already known to be part of a Groebner basis
    /// together with the other seeded elements; no pairs among seeds.
    pub(crate) fn seed(&mut self, mut terms: Terms) {
        Self::make_monic(&mut terms);
        let lm = terms.last().expect("nonzero").0.clone();
        if lm.is_one() {
            self.unit = true;
        }
        let sugar = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        self.basis.push(Element {
            mask: lm.mask(),
            lm,
            terms,
            sugar,
            alive: true,
        });
    }

    pub(crate) fn add(&mut self, terms: Terms, sugar: u32) -> Result<()> {
        let mut h = self.reduce(terms)?;
        if h.is_empty() {
            return Ok(());
        }
        Self::make_monic(&mut h);
        let lm = h.last().expect("nonzero").0.clone();
        if lm.is_one() {
            self.unit = true;
        }
        let sugar = sugar.max(lm.degree());
        self.update(Element {
            mask: lm.mask(),
            lm,
            terms: h,
            sugar,
            alive: true,
        });
        Ok(())
    }

    /// Gebauer–Möller update with a new element.
    fn update(&mut self, h: Element) {
        let hi = self.basis.len();
        let mut cands: Vec<Pair> = Vec::new();
        for (i, g) in self.basis.iter().enumerate() {
            if !g.alive {
                continue;
            }
            let lcm = g.lm.lcm(&h.lm);
            let sugar = (g.sugar + lcm.degree() - g.lm.degree()).max(h.sugar + lcm.degree() - h.lm.degree());
            cands.push(Pair { i, j: hi, lcm, sugar });
        }
        // criterion M / F on new pairs
        let mut keep: Vec<Pair> = Vec::new();
        let coprime: Vec<bool> = cands.iter().map(|p| self.basis[p.i].lm.coprime(&h.lm)).collect();
        let mut taken = vec![false; cands.len()];
        for k in 0..cands.len() {
            taken[k] = true;
            let p = &cands[k];
            let dominated_rest = cands.iter().enumerate().any(|(l, q)| !taken[l] && q.lcm.divides(&p.lcm));
            let dominated_kept = keep.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime[k] || (!dominated_rest && !dominated_kept) {
                keep.push(Pair {
                    i: p.i,
                    j: p.j,
                    lcm: p.lcm.clone(),
                    sugar: p.sugar,
                });
            }
        }
        // criterion B (product criterion) drops coprime pairs
        keep.retain(|p| !self.basis[p.i].lm.coprime(&h.lm));
        // chain criterion on old pairs
        let basis = &self.basis;
        let hlm = &h.lm;
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let l1 = basis[p.i].lm.lcm(hlm);
            let l2 = basis[p.j].lm.lcm(hlm);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(keep);
        for g in self.basis.iter_mut() {
            if g.alive && h.lm.divides(&g.lm) {
                g.alive = false;
            }
        }
        self.basis.push(h);
    }

    fn spoly(&self, p: &Pair) -> Terms {
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let ta = p.lcm.div(&a.lm);
        let tb = p.lcm.div(&b.lm);
        let a_tail: Terms = a.terms[..a.terms.len() - 1].iter().map(|(m, c)| (m.mul(&ta), c.clone())).collect();
        // a_tail - 1·tb·tail(b)
        self.sub_multiple(a_tail, &b.terms, &tb, &Rational::one())
    }

    pub(crate) fn run(&mut self) -> Result<()> {
        while !self.unit && !self.pairs.is_empty() {
            let order = self.order;
            let best = (0..self.pairs.len())
                .min_by(|&x, &y| {
                    let (p, q) = (&self.pairs[x], &self.pairs[y]);
                    p.sugar.cmp(&q.sugar).then_with(|| order.cmp(&p.lcm, &q.lcm))
                })
                .expect("nonempty");
            let pair = self.pairs.swap_remove(best);
            let s = self.spoly(&pair);
            self.tick()?;
            if s.is_empty() {
                continue;
            }
            self.add(s, pair.sugar)?;
        }
        Ok(())
    }

    /// Reduced basis, ascending by leading monomial.
    pub(crate) fn finish(mut self) -> Result<Vec<Terms>> {
        if self.unit {
            let one = Monomial::one(self.basis[0].lm.0.len());
            return Ok(vec![vec![(one, Rational::one())]]);
        }
        let live: Vec<usize> = (0..self.basis.len()).filter(|&i| self.basis[i].alive).collect();
        let mut out = Vec::with_capacity(live.len());
        for &i in &live {
            let mut tail = self.basis[i].terms.clone();
            let lead = tail.pop().expect("nonzero");
            let mut reduced = self.reduce(tail)?;
            reduced.push(lead);
            out.push(reduced);
        }
        out.sort_by(|a, b| self.order.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
        Ok(out)
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub(crate) fn buchberger(ring: &Arc<Ring>, gens: &[Polynomial], order: &MonomialOrder, budget: Budget) -> Result<Vec<Polynomial>> {
    extend_basis(ring, &[], gens, order, budget)
}

/// Reduced Groebner basis of `known + gens`, where `known` is already a
/// Groebner basis for `order`.
pub(crate) fn extend_basis(
    ring: &Arc<Ring>,
    known: &[Polynomial],
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: Budget,
) -> Result<Vec<Polynomial>> {
    let ord = TermOrder::new(order, ring.nvars());
    let mut eng = Engine::new(&ord, budget);
    for p in known.iter().filter(|p| !p.is_zero()) {
        let t = eng.to_terms(p);
        eng.seed(t);
    }
    let mut inputs: Vec<Vec<(Monomial, Rational)>> = gens.iter().filter(|p| !p.is_zero()).map(|p| eng.to_terms(p)).collect();
    // smaller leading terms first
    inputs.sort_by(|a, b| ord.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    for t in inputs {
        if eng.unit {
            break;
        }
        let sugar = t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        eng.add(t, sugar)?;
    }
    if eng.basis.is_empty() {
        return Ok(Vec::new());
    }
    eng.run()?;
    let basis = eng.finish()?;
    Ok(basis.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect())
}

/// Remainder of `p` on division by `basis` in `order`.
pub(crate) fn reduce_by(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder, budget: Budget) -> Result<Polynomial> {
    let ring = p.ring();
    let ord = TermOrder::new(order, ring.nvars());
    let mut eng = Engine::new(&ord, budget);
    for g in basis.iter().filter(|g| !g.is_zero()) {
        let t = eng.to_terms(g);
        eng.seed(t);
    }
    let t = eng.to_terms(p);
    let r = eng.reduce(t)?;
    Ok(Polynomial::from_terms(ring, r))
}

/// Leading monomial of `p` in `order`.
pub fn leading_monomial(p: &Polynomial, order: &MonomialOrder) -> Option<Monomial> {
    let ord = TermOrder::new(order, p.ring().nvars());
    p.terms().iter().map(|(m, _)| m).max_by(|a, b| ord.cmp(a, b)).cloned()
}
