//! Equivariant morphisms between products of symmetric-power spaces.
//!
//! A map `A^[(d_1),...,(d_r)] → A^[(e_1),...,(e_s)]` is a list of `s`
//! polynomials in `r` form-symbols (symbol `i` has weight `d_i`), where body
//! `j` is weighted-homogeneous of weight `e_j`. Coefficients are rationals or
//! abstract coefficient symbols ("params"); params have weight 0.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionTuple};
use crate::polyalg::{parse_poly, Budget, GroebnerBasis, Ideal, Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// A source variable: a symmetric form of the given degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormSymbol {
    pub name: String,
    pub weight: u32,
}

impl FormSymbol {
    pub fn new(name: impl Into<String>, weight: u32) -> Self {
        FormSymbol { name: name.into(), weight }
    }
}

const LINEAR_NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
const FORM_NAMES: [&str; 7] = ["f", "g", "h", "p", "q", "r", "s"];
const SCALAR_NAMES: [&str; 4] = ["alpha", "beta", "gamma", "delta"];

/// Default symbol names: `x, y, z, ...` for linear forms, `f, g, h, ...` for
/// higher degrees, `alpha, beta, ...` for scalars; numbered once a pool runs out.
pub fn auto_names(weights: &[u32]) -> Vec<String> {
    let class = |w: u32| w.min(2) as usize;
    let pools: [&[&str]; 3] = [&SCALAR_NAMES, &LINEAR_NAMES, &FORM_NAMES];
    let mut totals = [0usize; 3];
    for &w in weights {
        totals[class(w)] += 1;
    }
    let mut seen = [0usize; 3];
    weights
        .iter()
        .map(|&w| {
            let c = class(w);
            let k = seen[c];
            seen[c] += 1;
            if totals[c] <= pools[c].len() {
                pools[c][k].to_string()
            } else {
                format!("{}{}", pools[c][0], k + 1)
            }
        })
        .collect()
}

/// Symbols for a tuple of one-row partitions, ordered by ascending degree.
pub fn symbols_for_tuple(t: &PartitionTuple) -> Result<Vec<FormSymbol>> {
    let weights = row_weights(t)?;
    Ok(auto_names(&weights)
        .into_iter()
        .zip(weights)
        .map(|(name, weight)| FormSymbol { name, weight })
        .collect())
}

/// Degrees of a single-row tuple, ascending.
pub fn row_weights(t: &PartitionTuple) -> Result<Vec<u32>> {
    if !t.is_single_row() {
        return Err(Error::InvalidTuple(format!(
            "{t} has a multi-row entry; equivariant maps are modelled between single-row tuples only"
        )));
    }
    let mut w: Vec<u32> = t.entries().iter().map(Partition::size).collect();
    w.sort_unstable();
    Ok(w)
}

fn require_pure_single_row(t: &PartitionTuple) -> Result<Vec<u32>> {
    if !t.is_pure() {
        return Err(Error::InvalidTuple(format!("{t} is not pure")));
    }
    row_weights(t)
}

/// Exponent vectors over `weights` with weighted degree exactly `e`,
/// lexicographically descending.
pub fn weighted_monomials(weights: &[u32], e: u32) -> Vec<Vec<u16>> {
    fn go(weights: &[u32], i: usize, rem: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == weights.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        if w == 0 {
            // degree-0 symbols would give infinitely many monomials
            cur.push(0);
            go(weights, i + 1, rem, cur, out);
            cur.pop();
            return;
        }
        for k in (0..=rem / w).rev() {
            cur.push(k as u16);
            go(weights, i + 1, rem - k * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, 0, e, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct WeightedMap {
    source: Vec<FormSymbol>,
    target: Vec<u32>,
    params: Vec<String>,
    ring: Arc<Ring>,
    bodies: Vec<Polynomial>,
}

impl PartialEq for WeightedMap {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.params == other.params && self.bodies == other.bodies
    }
}

impl WeightedMap {
    /// Builds the ring `params ++ source` used for the bodies.
    pub fn body_ring(source: &[FormSymbol], params: &[String]) -> Result<Arc<Ring>> {
        let mut names: Vec<String> = params.to_vec();
        let mut weights = vec![0; params.len()];
        for s in source {
            names.push(s.name.clone());
            weights.push(s.weight);
        }
        Ring::with_weights(names, weights)
    }

    /// Validates weighted homogeneity of every body.
    pub fn from_polys(
        source: Vec<FormSymbol>,
        target: Vec<u32>,
        params: Vec<String>,
        ring: Arc<Ring>,
        bodies: Vec<Polynomial>,
    ) -> Result<Self> {
        if bodies.len() != target.len() {
            return Err(Error::Arity {
                expected: target.len(),
                got: bodies.len(),
            });
        }
        let expected = Self::body_ring(&source, &params)?;
        if *ring != *expected {
            return Err(Error::RingMismatch);
        }
        for (j, (b, &e)) in bodies.iter().zip(&target).enumerate() {
            if !b.is_weighted_homogeneous_of(e) {
                return Err(Error::ShapeMismatch(format!(
                    "body {} = {b} is not weighted-homogeneous of weight {e}",
                    j + 1
                )));
            }
        }
        Ok(WeightedMap {
            source,
            target,
            params,
            ring,
            bodies,
        })
    }

    /// Parses bodies written in the source symbols and params.
    pub fn parse(source: Vec<FormSymbol>, target: Vec<u32>, params: Vec<String>, bodies: &[&str]) -> Result<Self> {
        let ring = Self::body_ring(&source, &params)?;
        let polys = bodies.iter().map(|b| parse_poly(b, &ring)).collect::<Result<Vec<_>>>()?;
        Self::from_polys(source, target, params, ring, polys)
    }

    /// Parses a map whose source symbols get default names in order.
    pub fn parse_auto(source_weights: &[u32], target: &[u32], bodies: &[&str]) -> Result<Self> {
        let source = auto_names(source_weights)
            .into_iter()
            .zip(source_weights)
            .map(|(n, &w)| FormSymbol::new(n, w))
            .collect();
        Self::parse(source, target.to_vec(), Vec::new(), bodies)
    }

    pub fn identity(source: Vec<FormSymbol>) -> Result<Self> {
        let ring = Self::body_ring(&source, &[])?;
        let bodies = (0..source.len()).map(|i| Polynomial::var(&ring, i)).collect();
        let target = source.iter().map(|s| s.weight).collect();
        Self::from_polys(source, target, Vec::new(), ring, bodies)
    }

    pub fn zero(source: Vec<FormSymbol>, target: Vec<u32>) -> Result<Self> {
        let ring = Self::body_ring(&source, &[])?;
        let bodies = target.iter().map(|_| Polynomial::zero(&ring)).collect();
        Self::from_polys(source, target, Vec::new(), ring, bodies)
    }

    pub fn source(&self) -> &[FormSymbol] {
        &self.source
    }

    pub fn source_weights(&self) -> Vec<u32> {
        self.source.iter().map(|s| s.weight).collect()
    }

    pub fn source_tuple(&self) -> PartitionTuple {
        PartitionTuple::rows(&self.source_weights())
    }

    pub fn target(&self) -> &[u32] {
        &self.target
    }

    pub fn target_tuple(&self) -> PartitionTuple {
        PartitionTuple::rows(&self.target)
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn bodies(&self) -> &[Polynomial] {
        &self.bodies
    }

    pub fn is_zero(&self) -> bool {
        self.bodies.iter().all(Polynomial::is_zero)
    }

    /// Params that actually occur in some body.
    pub fn used_params(&self) -> Vec<String> {
        let mut used = vec![false; self.params.len()];
        for b in &self.bodies {
            for v in b.variables() {
                if v < self.params.len() {
                    used[v] = true;
                }
            }
        }
        self.params.iter().zip(used).filter(|(_, u)| *u).map(|(p, _)| p.clone()).collect()
    }

    pub fn has_abstract_coefficients(&self) -> bool {
        !self.used_params().is_empty()
    }

    /// Substitutes rational values for some params; the rest stay abstract.
    pub fn specialize(&self, values: &BTreeMap<String, Rational>) -> Result<WeightedMap> {
        for k in values.keys() {
            if !self.params.contains(k) {
                return Err(Error::UnknownVariable {
                    name: k.clone(),
                    position: 0,
                });
            }
        }
        let params: Vec<String> = self.params.iter().filter(|p| !values.contains_key(*p)).cloned().collect();
        let ring = Self::body_ring(&self.source, &params)?;
        let images: Vec<Polynomial> = self
            .ring
            .names()
            .iter()
            .map(|n| match values.get(n) {
                Some(v) => Polynomial::constant(&ring, v.clone()),
                None => Polynomial::var_named(&ring, n).expect("kept variable"),
            })
            .collect();
        let bodies = self.bodies.iter().map(|b| b.substitute(&images, &ring)).collect();
        Self::from_polys(self.source.clone(), self.target.clone(), params, ring, bodies)
    }

    /// Divides every body by the param `name`, which must divide it exactly.
    pub fn divide_by_param(&self, name: &str) -> Result<WeightedMap> {
        let idx = self
            .ring
            .index_of(name)
            .filter(|&i| i < self.params.len())
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
                position: 0,
            })?;
        let mut bodies = Vec::new();
        for b in &self.bodies {
            let mut terms = Vec::with_capacity(b.len());
            for (m, c) in b.terms() {
                let mut e = m.exponents().to_vec();
                if e[idx] == 0 {
                    return Err(Error::Invalid(format!("{name} does not divide {b}")));
                }
                e[idx] -= 1;
                terms.push((Monomial::from_exponents(&e), c.clone()));
            }
            bodies.push(Polynomial::from_terms(&self.ring, terms));
        }
        Self::from_polys(
            self.source.clone(),
            self.target.clone(),
            self.params.clone(),
            self.ring.clone(),
            bodies,
        )
    }

    /// Renames source symbols positionally.
    pub fn with_source_names(&self, names: &[String]) -> Result<WeightedMap> {
        if names.len() != self.source.len() {
            return Err(Error::Arity {
                expected: self.source.len(),
                got: names.len(),
            });
        }
        let source: Vec<FormSymbol> = self
            .source
            .iter()
            .zip(names)
            .map(|(s, n)| FormSymbol::new(n.clone(), s.weight))
            .collect();
        let ring = Self::body_ring(&source, &self.params)?;
        let map: Vec<usize> = (0..ring.nvars()).collect();
        let bodies = self.bodies.iter().map(|b| b.embed(&ring, &map)).collect();
        Self::from_polys(source, self.target.clone(), self.params.clone(), ring, bodies)
    }

    pub fn to_file(&self) -> MapFile {
        MapFile {
            source: self.source.iter().map(|s| vec![s.weight]).collect(),
            target: self.target.iter().map(|&e| vec![e]).collect(),
            bodies: self.bodies.iter().map(ToString::to_string).collect(),
            names: Some(self.source.iter().map(|s| s.name.clone()).collect()),
            params: if self.params.is_empty() { None } else { Some(self.params.clone()) },
        }
    }

    pub fn from_file(file: &MapFile) -> Result<WeightedMap> {
        let weights = file.source.iter().map(|p| one_row(p)).collect::<Result<Vec<_>>>()?;
        let target = file.target.iter().map(|p| one_row(p)).collect::<Result<Vec<_>>>()?;
        let names = match &file.names {
            Some(n) => n.clone(),
            None => auto_names(&weights),
        };
        if names.len() != weights.len() {
            return Err(Error::Arity {
                expected: weights.len(),
                got: names.len(),
            });
        }
        let source = names.into_iter().zip(weights).map(|(n, w)| FormSymbol::new(n, w)).collect();
        let bodies: Vec<&str> = file.bodies.iter().map(String::as_str).collect();
        Self::parse(source, target, file.params.clone().unwrap_or_default(), &bodies)
    }
}

fn one_row(parts: &[u32]) -> Result<u32> {
    let p = Partition::new(parts.to_vec()).map_err(Error::InvalidTuple)?;
    if !p.is_single_row() {
        return Err(Error::InvalidTuple(format!(
            "{p} has more than one row; maps are supported between single-row tuples only"
        )));
    }
    Ok(p.size())
}

impl fmt::Display for WeightedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.source.iter().map(|s| s.name.as_str()).collect();
        write!(f, "{} -> {}: ({}) |-> (", self.source_tuple(), self.target_tuple(), names.join(","))?;
        for (i, b) in self.bodies.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// JSON map description; `names` and `params` are optional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub source: Vec<Vec<u32>>,
    pub target: Vec<Vec<u32>>,
    pub bodies: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<String>>,
}

/// The most general map `source → target`: body `j` is a combination of all
/// weight-`e_j` monomials with fresh coefficient symbols `{prefix}{j}_{k}`.
pub fn generic_map_from(source: &[FormSymbol], target: &[u32], prefix: &str) -> Result<(WeightedMap, Vec<String>)> {
    if source.iter().any(|s| s.weight == 0) {
        return Err(Error::InvalidTuple("generic maps need a pure source".into()));
    }
    let weights: Vec<u32> = source.iter().map(|s| s.weight).collect();
    let mut params = Vec::new();
    let mut per_body = Vec::new();
    for (j, &e) in target.iter().enumerate() {
        let monos = weighted_monomials(&weights, e);
        let names: Vec<String> = (0..monos.len()).map(|k| format!("{prefix}{}_{}", j + 1, k + 1)).collect();
        params.extend(names.iter().cloned());
        per_body.push((names, monos));
    }
    let ring = WeightedMap::body_ring(source, &params)?;
    let np = params.len();
    let mut bodies = Vec::new();
    for (names, monos) in per_body {
        let mut terms = Vec::new();
        for (name, mono) in names.iter().zip(monos) {
            let mut e = vec![0u16; ring.nvars()];
            e[ring.index_of(name).expect("param")] = 1;
            e[np..].copy_from_slice(&mono);
            terms.push((Monomial::from_exponents(&e), Rational::one()));
        }
        bodies.push(Polynomial::from_terms(&ring, terms));
    }
    let map = WeightedMap::from_polys(source.to_vec(), target.to_vec(), params.clone(), ring, bodies)?;
    Ok((map, params))
}

/// Generic map between pure single-row tuples, with default symbol names and
/// coefficient prefix `c`.
pub fn generic_map(src: &PartitionTuple, tgt: &PartitionTuple) -> Result<(WeightedMap, Vec<String>)> {
    require_pure_single_row(src)?;
    let tw = require_pure_single_row(tgt)?;
    generic_map_from(&symbols_for_tuple(src)?, &tw, "c")
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    let mut k = 2;
    while taken.contains(&name) {
        name = format!("{base}_{k}");
        k += 1;
    }
    name
}

/// `outer ∘ inner`. Inner params that clash with outer params are renamed.
pub fn compose(outer: &WeightedMap, inner: &WeightedMap) -> Result<WeightedMap> {
    if outer.source_weights() != inner.target {
        return Err(Error::ShapeMismatch(format!(
            "outer source {} does not match inner target {}",
            outer.source_tuple(),
            inner.target_tuple()
        )));
    }
    let mut params = outer.params.clone();
    let mut inner_names = Vec::new();
    for p in &inner.params {
        let n = fresh_name(p, &params);
        params.push(n.clone());
        inner_names.push(n);
    }
    // inner source names must not collide with params either
    if inner.source.iter().any(|s| params.contains(&s.name)) {
        return Err(Error::ShapeMismatch("source symbol name collides with a coefficient symbol".into()));
    }
    let ring = WeightedMap::body_ring(&inner.source, &params)?;
    // inner bodies into the new ring
    let mut inner_map: Vec<usize> = inner_names.iter().map(|n| ring.index_of(n).expect("param")).collect();
    inner_map.extend(params.len()..ring.nvars());
    let inner_bodies: Vec<Polynomial> = inner.bodies.iter().map(|b| b.embed(&ring, &inner_map)).collect();
    let mut images: Vec<Polynomial> = (0..outer.params.len()).map(|i| Polynomial::var(&ring, i)).collect();
    images.extend(inner_bodies);
    let bodies = outer.bodies.iter().map(|b| b.substitute(&images, &ring)).collect();
    WeightedMap::from_polys(inner.source.clone(), outer.target.clone(), params, ring, bodies)
}

/// Coefficient-matching equations for `a = b`, as an ideal in the union of
/// both maps' params. Source symbols are matched by position.
pub fn equate_maps(a: &WeightedMap, b: &WeightedMap) -> Result<Ideal> {
    if a.source_weights() != b.source_weights() || a.target != b.target {
        return Err(Error::ShapeMismatch(format!(
            "{} -> {} vs {} -> {}",
            a.source_tuple(),
            a.target_tuple(),
            b.source_tuple(),
            b.target_tuple()
        )));
    }
    let mut params = a.params.clone();
    for p in &b.params {
        if !params.contains(p) {
            params.push(p.clone());
        }
    }
    let joint = WeightedMap::body_ring(&a.source, &params)?;
    let a_map: Vec<usize> = (0..a.ring.nvars())
        .map(|i| joint.index_of(&a.ring.names()[i]).expect("present"))
        .collect();
    let mut b_map: Vec<usize> = b.params.iter().map(|p| joint.index_of(p).expect("present")).collect();
    b_map.extend(params.len()..joint.nvars());
    let param_ring = Ring::new(params.clone());
    let src_vars: Vec<usize> = (params.len()..joint.nvars()).collect();
    let keep: Vec<usize> = (0..params.len()).collect();
    let mut gens = Vec::new();
    for (ba, bb) in a.bodies.iter().zip(&b.bodies) {
        let diff = &ba.embed(&joint, &a_map) - &bb.embed(&joint, &b_map);
        for (_, coeff) in diff.coefficients_in(&src_vars) {
            if !coeff.is_zero() {
                gens.push(restrict(&coeff, &param_ring, &keep));
            }
        }
    }
    Ideal::new(&param_ring, gens)
}

/// Moves a polynomial supported on `keep` (positions in its ring) into `target`.
fn restrict(p: &Polynomial, target: &Arc<Ring>, keep: &[usize]) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let e: Vec<u16> = keep.iter().map(|&i| m.exponents()[i]).collect();
            (Monomial::from_exponents(&e), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// A concrete factorization `f = outer ∘ inner`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub inner: WeightedMap,
    pub outer: WeightedMap,
}

#[derive(Clone, Debug)]
pub enum FactorResult {
    /// The coefficient system is consistent; a rational witness when found.
    Yes(Option<Factorization>),
    /// The coefficient system has no solution over the algebraic closure.
    No,
    /// The step budget ran out.
    Unknown(u64),
}

impl FactorResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, FactorResult::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, FactorResult::No)
    }
}

impl fmt::Display for FactorResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorResult::Yes(Some(w)) => write!(f, "yes (witness: inner {}, outer {})", w.inner, w.outer),
            FactorResult::Yes(None) => f.write_str("yes (nonconstructive)"),
            FactorResult::No => f.write_str("no"),
            FactorResult::Unknown(b) => write!(f, "unknown (budget {b} exhausted)"),
        }
    }
}

/// The coefficient system for `f = δ ∘ γ` with generic `γ: source → mid` and
/// `δ: mid → target`, together with both generic maps.
pub fn factorization_system(f: &WeightedMap, mid: &PartitionTuple) -> Result<(Ideal, WeightedMap, WeightedMap)> {
    if f.has_abstract_coefficients() {
        return Err(Error::AbstractCoefficients(f.used_params()));
    }
    let mid_weights = require_pure_single_row(mid)?;
    if f.source.iter().any(|s| s.weight == 0) {
        return Err(Error::InvalidTuple("factorization needs a pure source".into()));
    }
    let mid_symbols: Vec<FormSymbol> = symbols_for_tuple(mid)?
        .into_iter()
        .map(|s| FormSymbol::new(format!("m_{}", s.name), s.weight))
        .collect();
    let (gamma, _) = generic_map_from(&f.source, &mid_weights, "c")?;
    let (delta, _) = generic_map_from(&mid_symbols, &f.target, "d")?;
    let comp = compose(&delta, &gamma)?;
    let ideal = equate_maps(&comp, f)?;
    Ok((ideal, gamma, delta))
}

/// Normal forms for `γ` under the linear automorphisms of `A^mid`.
///
/// Mid entries of equal weight `e` may be mixed by any invertible matrix, which
/// acts by row operations on the coefficients of `γ` at the weight-`e` source
/// symbols. Every such coefficient matrix is row-equivalent to exactly one
/// reduced echelon form, so it suffices to solve over each echelon pattern.
/// Each slice fixes some coefficients of `γ` to `0` or `1`.
fn gamma_slices(source: &[FormSymbol], mid_weights: &[u32], prefix: &str) -> Vec<BTreeMap<String, Rational>> {
    let weights: Vec<u32> = source.iter().map(|s| s.weight).collect();
    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (j, &e) in mid_weights.iter().enumerate() {
        classes.entry(e).or_default().push(j);
    }
    let mut slices = vec![BTreeMap::new()];
    for (&e, rows) in &classes {
        let monos = weighted_monomials(&weights, e);
        // (column symbol, monomial position) for each linear monomial
        let cols: Vec<usize> = source
            .iter()
            .enumerate()
            .filter(|(_, s)| s.weight == e)
            .map(|(i, _)| {
                monos
                    .iter()
                    .position(|m| m.iter().enumerate().all(|(v, &x)| x == u16::from(v == i)))
                    .expect("linear monomial present")
            })
            .collect();
        let name = |r: usize, c: usize| format!("{prefix}{}_{}", rows[r] + 1, cols[c] + 1);
        let mut patterns = Vec::new();
        for rank in 0..=rows.len().min(cols.len()) {
            for pivots in combinations(cols.len(), rank) {
                let mut fix = BTreeMap::new();
                for r in 0..rows.len() {
                    for c in 0..cols.len() {
                        let value = if r >= rank {
                            Some(0)
                        } else if c == pivots[r] {
                            Some(1)
                        } else if c < pivots[r] || pivots.contains(&c) {
                            Some(0)
                        } else {
                            None
                        };
                        if let Some(v) = value {
                            fix.insert(name(r, c), Rational::from_integer(v.into()));
                        }
                    }
                }
                patterns.push(fix);
            }
        }
        slices = slices
            .iter()
            .flat_map(|s| {
                patterns.iter().map(move |p| {
                    let mut m = s.clone();
                    m.extend(p.iter().map(|(k, v)| (k.clone(), v.clone())));
                    m
                })
            })
            .collect();
    }
    slices
}

/// All increasing `k`-element sequences drawn from `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Decides whether `f` factors through `A^mid`.
pub fn factors_through(f: &WeightedMap, mid: &PartitionTuple, budget: Budget) -> Result<FactorResult> {
    let (ideal, gamma, delta) = factorization_system(f, mid)?;
    let ring = ideal.ring().clone();
    let mut exhausted = None;
    for slice in gamma_slices(&f.source, gamma.target(), "c") {
        let images: Vec<Polynomial> = ring
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| match slice.get(n) {
                Some(v) => Polynomial::constant(&ring, v.clone()),
                None => Polynomial::var(&ring, i),
            })
            .collect();
        let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.substitute(&images, &ring)).collect();
        let mut gens: Vec<Polynomial> = gens;
        gens.extend(
            slice
                .iter()
                .map(|(n, v)| &Polynomial::var_named(&ring, n).expect("param") - &Polynomial::constant(&ring, v.clone())),
        );
        let sliced = Ideal::new(&ring, gens)?;
        let gb = match sliced.groebner(&MonomialOrder::Grevlex, budget) {
            Ok(gb) => gb,
            Err(Error::BudgetExhausted(b)) => {
                exhausted = Some(b);
                continue;
            }
            Err(e) => return Err(e),
        };
        if gb.is_unit() {
            continue;
        }
        return Ok(FactorResult::Yes(witness_from(f, &gb, &gamma, &delta, budget)?));
    }
    Ok(match exhausted {
        Some(b) => FactorResult::Unknown(b),
        None => FactorResult::No,
    })
}

fn witness_from(
    f: &WeightedMap,
    gb: &GroebnerBasis,
    gamma: &WeightedMap,
    delta: &WeightedMap,
    budget: Budget,
) -> Result<Option<Factorization>> {
    let Some(point) = find_rational_point(gb, budget)? else {
        return Ok(None);
    };
    let values: BTreeMap<String, Rational> = gb.ring().names().iter().cloned().zip(point).collect();
    let pick = |m: &WeightedMap| -> Result<WeightedMap> {
        let sub: BTreeMap<String, Rational> = m
            .params
            .iter()
            .map(|p| (p.clone(), values.get(p).cloned().unwrap_or_else(Rational::zero)))
            .collect();
        m.specialize(&sub)
    };
    let inner = pick(gamma)?;
    let outer = pick(delta)?;
    let check = compose(&outer, &inner)?;
    Ok(equate_maps(&check, f)?.is_zero_ideal().then_some(Factorization { inner, outer }))
}

/// Best-effort rational point on a consistent ideal given by a Groebner
/// basis: fixes variables in order to small values, keeping a choice while
/// the extended system stays consistent and backtracking otherwise. Gives up
/// after a bounded number of consistency checks.
pub fn find_rational_point(gb: &GroebnerBasis, budget: Budget) -> Result<Option<Vec<Rational>>> {
    const MAX_CHECKS: usize = 400;
    if gb.is_unit() {
        return Ok(None);
    }
    let mut search = PointSearch {
        ring: gb.ring().clone(),
        budget,
        checks: 0,
        limit: MAX_CHECKS,
        values: Vec::new(),
    };
    match search.descend(gb) {
        Ok(true) => Ok(Some(search.values)),
        Ok(false) | Err(Error::BudgetExhausted(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

struct PointSearch {
    ring: Arc<Ring>,
    budget: Budget,
    checks: usize,
    limit: usize,
    values: Vec<Rational>,
}

impl PointSearch {
    /// Extends `values` (one per already fixed variable) to a full point.
    fn descend(&mut self, current: &GroebnerBasis) -> Result<bool> {
        let v = self.values.len();
        if v == self.ring.nvars() {
            return Ok(true);
        }
        // a remaining variable with no rational value left
        if (v..self.ring.nvars()).any(|w| univariate_roots(current, w).is_some_and(|r| r.is_empty())) {
            return Ok(false);
        }
        let candidates: Vec<Rational> = match univariate_roots(current, v) {
            Some(roots) => roots,
            None => [0i64, 1, -1, 2, -2, 3].iter().map(|&x| Rational::from_integer(x.into())).collect(),
        };
        for val in candidates {
            if self.checks >= self.limit {
                return Ok(false);
            }
            self.checks += 1;
            let lin = &Polynomial::var(&self.ring, v) - &Polynomial::constant(&self.ring, val.clone());
            let next = current.extend(&[lin], self.budget)?;
            if next.is_unit() {
                continue;
            }
            self.values.push(val);
            if self.descend(&next)? {
                return Ok(true);
            }
            self.values.pop();
        }
        Ok(false)
    }
}

/// Rational roots of the basis elements involving only variable `v`, when
/// such an element exists and its roots can be enumerated.
fn univariate_roots(gb: &GroebnerBasis, v: usize) -> Option<Vec<Rational>> {
    let p = gb.polys().iter().find(|p| p.variables() == [v])?;
    rational_roots(&p.primitive(), v)
}

/// Rational roots of an integer polynomial in the single variable `v`, by
/// the rational root test; `None` when the end coefficients are too large
/// to factor by trial division.
fn rational_roots(p: &Polynomial, v: usize) -> Option<Vec<Rational>> {
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive};
    const LIMIT: u64 = 1_000_000;
    let mut coeffs: BTreeMap<u16, BigInt> = BTreeMap::new();
    for (m, c) in p.terms() {
        coeffs.insert(m.exponents()[v], c.to_integer());
    }
    let low = *coeffs.keys().next()?;
    let high = *coeffs.keys().next_back()?;
    let a0 = coeffs[&low].abs().to_u64().filter(|&x| x <= LIMIT)?;
    let an = coeffs[&high].abs().to_u64().filter(|&x| x <= LIMIT)?;
    let divisors = |x: u64| -> Vec<u64> {
        (1..)
            .take_while(|d| d * d <= x)
            .filter(|&d| x.is_multiple_of(d))
            .flat_map(|d| [d, x / d])
            .collect()
    };
    let mut roots: Vec<Rational> = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let mut point = vec![Rational::zero(); p.ring().nvars()];
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let r = Rational::new(BigInt::from(num) * sign, BigInt::from(den));
                if roots.contains(&r) {
                    continue;
                }
                point[v] = r.clone();
                if p.eval(&point).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort_by_key(|r| (r.numer().abs() + r.denom(), r.is_negative()));
    Some(roots)
}

#[derive(Clone, Debug)]
pub enum Typicality {
    Typical,
    /// Factors through the given proper subtuple (minimal among those tried).
    NotTypical {
        through: PartitionTuple,
        witness: Option<Factorization>,
    },
    Unknown {
        undecided: Vec<PartitionTuple>,
    },
}

impl fmt::Display for Typicality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Typicality::Typical => f.write_str("typical"),
            Typicality::NotTypical { through, .. } => write!(f, "not typical (factors through {through})"),
            Typicality::Unknown { undecided } => {
                let list: Vec<String> = undecided.iter().map(ToString::to_string).collect();
                write!(f, "unknown (undecided: {})", list.join(", "))
            }
        }
    }
}

/// Per-subtuple outcomes gathered while deciding typicality.
#[derive(Clone, Debug)]
pub struct TypicalityReport {
    pub verdict: Typicality,
    pub checked: Vec<(PartitionTuple, FactorResult)>,
}

/// A map from `A^λ` is typical onto its image closure iff it factors through
/// no proper subtuple of `λ`. Factoring through `μ' ⊂ μ` implies factoring
/// through `μ`, so only subtuples with one entry removed need deciding; when
/// one of them factors, the search descends to report a minimal witness.
pub fn is_typical(f: &WeightedMap, budget: Budget) -> Result<TypicalityReport> {
    let src = f.source_tuple();
    if !src.is_pure() {
        return Err(Error::InvalidTuple(format!("{src} is not pure")));
    }
    let mut checked: Vec<(PartitionTuple, FactorResult)> = Vec::new();
    let mut current = src.clone();
    let mut found: Option<(PartitionTuple, Option<Factorization>)> = None;
    let mut undecided = Vec::new();
    loop {
        let mut descended = false;
        let mids = current.maximal_proper_subtuples();
        // independent systems; decided concurrently, consumed in order
        let results: Vec<Result<FactorResult>> = std::thread::scope(|scope| {
            let handles: Vec<_> = mids
                .iter()
                .map(|mid| scope.spawn(move || factors_through(f, mid, budget)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("factorization thread panicked"))
                .collect()
        });
        for (mid, res) in mids.into_iter().zip(results) {
            let res = res?;
            checked.push((mid.clone(), res.clone()));
            match res {
                FactorResult::Yes(w) => {
                    found = Some((mid.clone(), w));
                    current = mid;
                    descended = true;
                    break;
                }
                FactorResult::No => {}
                FactorResult::Unknown(_) => undecided.push(mid),
            }
        }
        if !descended {
            break;
        }
    }
    let verdict = match found {
        Some((through, witness)) => Typicality::NotTypical { through, witness },
        None if undecided.is_empty() => Typicality::Typical,
        None => Typicality::Unknown { undecided },
    };
    Ok(TypicalityReport { verdict, checked })
}

/// The map `φ(f,g,h) = fg - h²` from `A^[(2),(2),(2)]` to `A^(4)`.
pub fn quadric_discriminant() -> WeightedMap {
    WeightedMap::parse_auto(&[2, 2, 2], &[4], &["f*g - h^2"]).expect("valid")
}

/// `ψ(x,y,f,g,h) = x²f + y²g + xyh`.
pub fn psi_map() -> WeightedMap {
    WeightedMap::parse_auto(&[1, 1, 2, 2, 2], &[4], &["x^2*f + y^2*g + x*y*h"]).expect("valid")
}

/// The family `φ_t = t⁻¹((x²+tf)(y²+tg) - (xy+th)²)`, computed symbolically
/// with `t` as a coefficient symbol, divided by `t`, then specialised. At
/// `t = 0` this is the limit `x²g + y²f - 2xyh`.
pub fn phi_family(t: Rational) -> WeightedMap {
    let source = vec![
        FormSymbol::new("x", 1),
        FormSymbol::new("y", 1),
        FormSymbol::new("f", 2),
        FormSymbol::new("g", 2),
        FormSymbol::new("h", 2),
    ];
    let gamma = WeightedMap::parse(source, vec![2, 2, 2], vec!["t".into()], &["x^2 + t*f", "y^2 + t*g", "x*y + t*h"]).expect("valid");
    let composed = compose(&quadric_discriminant(), &gamma).expect("shapes match");
    let mut values = BTreeMap::new();
    values.insert("t".to_string(), t);
    composed
        .divide_by_param("t")
        .expect("t divides")
        .specialize(&values)
        .expect("t is a param")
}

/// An explicit polynomial map between coefficient spaces at a fixed level.
#[derive(Clone, Debug)]
pub struct ExplicitMap {
    /// Input coordinates (plus leading params when kept).
    pub ring: Arc<Ring>,
    /// Output coordinate names, aligned with `outputs`.
    pub output_names: Vec<String>,
    pub outputs: Vec<Polynomial>,
}

/// Coordinates of a degree-`d` form named `name` in `n` variables: one per
/// monomial, lexicographically descending, named `name_i_j...` by the sorted
/// variable indices. Scalars keep their bare name.
pub fn form_coordinates(name: &str, d: u32, n: u32) -> Vec<(String, Vec<u16>)> {
    if d == 0 {
        return vec![(name.to_string(), vec![0; n as usize])];
    }
    let ones = vec![1u32; n as usize];
    weighted_monomials(&ones, d)
        .into_iter()
        .map(|e| (coordinate_name(name, &e, |i| (i + 1).to_string()), e))
        .collect()
}

/// `name_i_j...` with index labels produced by `label`.
pub fn coordinate_name(name: &str, exps: &[u16], label: impl Fn(usize) -> String) -> String {
    let mut s = name.to_string();
    for (i, &k) in exps.iter().enumerate() {
        for _ in 0..k {
            s.push('_');
            s.push_str(&label(i));
        }
    }
    s
}

/// Evaluates on `K^n`, keeping params as leading ring variables.
pub(crate) fn instantiate_with_params(f: &WeightedMap, n: u32, target_names: &[String]) -> Result<ExplicitMap> {
    let np = f.params.len();
    let mut names: Vec<String> = f.params.clone();
    let mut forms = Vec::new();
    for s in &f.source {
        let coords = form_coordinates(&s.name, s.weight, n);
        let start = names.len();
        names.extend(coords.iter().map(|(c, _)| c.clone()));
        forms.push((start, coords));
    }
    let ncoords = names.len();
    let level_vars: Vec<String> = (1..=n).map(|i| format!("_z{i}")).collect();
    names.extend(level_vars);
    let big = Ring::with_weights(names.clone(), vec![1; names.len()])?;
    let mut images: Vec<Polynomial> = (0..np).map(|i| Polynomial::var(&big, i)).collect();
    for (start, coords) in &forms {
        let mut terms = Vec::new();
        for (k, (_, e)) in coords.iter().enumerate() {
            let mut ex = vec![0u16; big.nvars()];
            ex[start + k] = 1;
            ex[ncoords..].copy_from_slice(e);
            terms.push((Monomial::from_exponents(&ex), Rational::one()));
        }
        images.push(Polynomial::from_terms(&big, terms));
    }
    let level_idx: Vec<usize> = (ncoords..big.nvars()).collect();
    let keep: Vec<usize> = (0..ncoords).collect();
    let small = Ring::new(names[..ncoords].to_vec());
    let mut outputs = Vec::new();
    let mut output_names = Vec::new();
    for (j, (body, &e)) in f.bodies.iter().zip(&f.target).enumerate() {
        let expanded = body.substitute(&images, &big);
        let coeffs = expanded.coefficients_in(&level_idx);
        for (cname, exps) in form_coordinates(&target_names[j], e, n) {
            let key = Monomial::from_exponents(&exps);
            let out = match coeffs.get(&key) {
                Some(c) => restrict(c, &small, &keep),
                None => Polynomial::zero(&small),
            };
            outputs.push(out);
            output_names.push(cname);
        }
    }
    Ok(ExplicitMap {
        ring: small,
        output_names,
        outputs,
    })
}

/// Default names for target forms: `w1, w2, ...`.
pub fn default_target_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("w{i}")).collect()
}

/// Evaluates a rational-coefficient map on `K^n`: each source form becomes
/// a generic form with fresh coefficient coordinates, and the outputs are the
/// coefficients of the expanded target forms.
pub fn instantiate(f: &WeightedMap, n: u32) -> Result<ExplicitMap> {
    if n == 0 {
        return Err(Error::Invalid("level must be positive".into()));
    }
    if f.has_abstract_coefficients() {
        return Err(Error::AbstractCoefficients(f.used_params()));
    }
    let stripped = f.specialize(&BTreeMap::new())?;
    let stripped = if stripped.params.is_empty() {
        stripped
    } else {
        let zeros = f.params.iter().map(|p| (p.clone(), Rational::zero())).collect();
        f.specialize(&zeros)?
    };
    instantiate_with_params(&stripped, n, &default_target_names(f.target.len()))
}
