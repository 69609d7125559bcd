//! Finite-level geometry of GL-varieties inside products of symmetric-power
//! spaces: the level-`n` evaluation `X{K^n}`, dimension functions, image
//! closures, membership, mapping spaces, shifts and rank strata.
//!
//! A degree-`e` form named `x` has one coordinate per degree-`e` monomial in
//! `n` variables, named `x_i_j...` by its sorted variable indices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::equimap::{
    auto_names, coordinate_name, find_rational_point, form_coordinates, generic_map_from, instantiate, instantiate_with_params, FormSymbol,
    MapFile, WeightedMap,
};
use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionTuple};
use crate::polyalg::{parse_poly, Budget, Ideal, Monomial, MonomialOrder, Polynomial, Rational, Ring};
use crate::schur::schur_dim;

/// `X{K^n}` as an ideal in the coordinates of `A^tuple{K^n}`.
#[derive(Clone, Debug)]
pub struct FiniteLevelVariety {
    pub weights: Vec<u32>,
    pub level: u32,
    pub ideal: Ideal,
}

impl FiniteLevelVariety {
    pub fn tuple(&self) -> PartitionTuple {
        PartitionTuple::rows(&self.weights)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn dimension(&self, budget: Budget) -> Result<i64> {
        self.ideal.dimension(budget)
    }
}

/// How the level-`n` ideal of a family is produced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    /// The whole space.
    Affine,
    /// The origin.
    Point,
    /// Every index instance of the templates, e.g. `x_i*y_j - x_j*y_i`.
    Orbit { templates: Vec<String> },
    /// Rank at most `rank` for the single quadric of an `A^[(2)]` family.
    Minors { rank: u32 },
    /// Closure of the image of a map.
    MapImage { map: MapFile },
    /// `Sh_n` of another family: level `d` is level `n + d` of `inner`.
    Shifted { n: u32, inner: Box<LevelFamily> },
}

/// A GL-variety presented by its evaluations on every `K^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FamilyFile", into = "FamilyFile")]
pub struct LevelFamily {
    weights: Vec<u32>,
    names: Vec<String>,
    recipe: Recipe,
}

/// JSON form: `{"tuple": [[1],[1]], "names": ["x","y"], "recipe": {"kind": ...}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct FamilyFile {
    tuple: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    recipe: Recipe,
}

impl TryFrom<FamilyFile> for LevelFamily {
    type Error = Error;
    fn try_from(file: FamilyFile) -> Result<Self> {
        let mut weights = Vec::new();
        for parts in &file.tuple {
            let p = Partition::new(parts.clone()).map_err(Error::InvalidTuple)?;
            if p.len() != 1 {
                return Err(Error::InvalidTuple(format!(
                    "{p}: families live in products of symmetric powers (one nonempty row per entry)"
                )));
            }
            weights.push(p.size());
        }
        let names = file.names.unwrap_or_else(|| auto_names(&weights));
        LevelFamily::new(weights, names, file.recipe)
    }
}

impl From<LevelFamily> for FamilyFile {
    fn from(f: LevelFamily) -> Self {
        FamilyFile {
            tuple: f.weights.iter().map(|&w| vec![w]).collect(),
            names: Some(f.names),
            recipe: f.recipe,
        }
    }
}

impl LevelFamily {
    pub fn new(weights: Vec<u32>, names: Vec<String>, recipe: Recipe) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidTuple("family tuples must be pure".into()));
        }
        if names.len() != weights.len() {
            return Err(Error::Arity {
                expected: weights.len(),
                got: names.len(),
            });
        }
        if names.iter().any(|n| n.is_empty() || n.contains('_')) {
            return Err(Error::Invalid("form names must be nonempty and free of '_'".into()));
        }
        match &recipe {
            Recipe::Minors { .. } if weights != [2] => {
                return Err(Error::ShapeMismatch("minors need the tuple [[2]]".into()));
            }
            Recipe::MapImage { map } => {
                let m = WeightedMap::from_file(map)?;
                if m.target() != weights.as_slice() {
                    return Err(Error::ShapeMismatch(format!(
                        "map target {} differs from the family tuple",
                        m.target_tuple()
                    )));
                }
            }
            Recipe::Shifted { inner, .. } if inner.weights != weights || inner.names != names => {
                return Err(Error::ShapeMismatch("a shift keeps the tuple and names".into()));
            }
            _ => {}
        }
        Ok(LevelFamily { weights, names, recipe })
    }

    /// A family with default form names.
    pub fn with_default_names(weights: &[u32], recipe: Recipe) -> Result<Self> {
        Self::new(weights.to_vec(), auto_names(weights), recipe)
    }

    pub fn affine(weights: &[u32]) -> Result<Self> {
        Self::with_default_names(weights, Recipe::Affine)
    }

    pub fn point(weights: &[u32]) -> Result<Self> {
        Self::with_default_names(weights, Recipe::Point)
    }

    /// Matrices of rank at most one: `x_i y_j - x_j y_i` in `A^[(1),(1)]`.
    pub fn rank_one_pairs() -> Self {
        Self::with_default_names(
            &[1, 1],
            Recipe::Orbit {
                templates: vec!["x_i*y_j - x_j*y_i".into()],
            },
        )
        .expect("valid")
    }

    pub fn symmetric_rank(rank: u32) -> Self {
        Self::with_default_names(&[2], Recipe::Minors { rank }).expect("valid")
    }

    pub fn image_of(map: &WeightedMap) -> Result<Self> {
        Self::with_default_names(map.target(), Recipe::MapImage { map: map.to_file() })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn tuple(&self) -> PartitionTuple {
        PartitionTuple::rows(&self.weights)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn recipe(&self) -> &Recipe {
        &self.recipe
    }

    /// Coordinate ring of `A^tuple{K^n}`.
    pub fn ambient_ring(&self, n: u32) -> Arc<Ring> {
        level_ring(&self.names, &self.weights, n, &|i| (i + 1).to_string())
    }

    /// `X{K^n}`.
    pub fn at_level(&self, n: u32, budget: Budget) -> Result<FiniteLevelVariety> {
        if n == 0 {
            return Err(Error::Invalid("level must be positive".into()));
        }
        let ideal = match &self.recipe {
            Recipe::Affine => Ideal::zero(&self.ambient_ring(n)),
            Recipe::Point => {
                let ring = self.ambient_ring(n);
                let gens = (0..ring.nvars()).map(|i| Polynomial::var(&ring, i)).collect();
                Ideal::new(&ring, gens)?
            }
            Recipe::Orbit { templates } => orbit_ideal(&self.ambient_ring(n), templates, n)?,
            Recipe::Minors { rank } => minors_stratum_named(&self.names[0], *rank, n)?.ideal,
            Recipe::MapImage { map } => {
                let m = WeightedMap::from_file(map)?;
                image_closure_named(&m, n, &self.names, budget)?.ideal
            }
            Recipe::Shifted { n: shift, inner } => {
                let big = inner.at_level(shift + n, budget)?;
                let s = *shift as usize;
                let label = move |i: usize| {
                    if i < s {
                        format!("s{}", i + 1)
                    } else {
                        (i - s + 1).to_string()
                    }
                };
                let ring = level_ring(&self.names, &self.weights, shift + n, &label);
                let map: Vec<usize> = (0..ring.nvars()).collect();
                let gens = big.ideal.generators().iter().map(|g| g.embed(&ring, &map)).collect();
                Ideal::new(&ring, gens)?
            }
        };
        Ok(FiniteLevelVariety {
            weights: self.weights.clone(),
            level: n,
            ideal,
        })
    }
}

impl fmt::Display for LevelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<String> = self.names.iter().zip(&self.weights).map(|(n, w)| format!("{n}:{w}")).collect();
        write!(f, "[{}] ", forms.join(", "))?;
        match &self.recipe {
            Recipe::Affine => f.write_str("affine space"),
            Recipe::Point => f.write_str("origin"),
            Recipe::Orbit { templates } => write!(f, "orbit of {}", templates.join(", ")),
            Recipe::Minors { rank } => write!(f, "quadrics of rank <= {rank}"),
            Recipe::MapImage { map } => write!(f, "image closure of {}", map.bodies.join(", ")),
            Recipe::Shifted { n, inner } => write!(f, "Sh_{n} of ({inner})"),
        }
    }
}

fn level_ring(names: &[String], weights: &[u32], n: u32, label: &dyn Fn(usize) -> String) -> Arc<Ring> {
    let mut coords = Vec::new();
    for (name, &w) in names.iter().zip(weights) {
        for (_, e) in form_coordinates(name, w, n) {
            coords.push(coordinate_name(name, &e, label));
        }
    }
    Ring::new(coords)
}

/// Instantiates index templates: every single-letter index after `_` ranges
/// over `1..=n`; indices of each coordinate are then sorted.
fn orbit_ideal(ring: &Arc<Ring>, templates: &[String], n: u32) -> Result<Ideal> {
    let mut gens: Vec<Polynomial> = Vec::new();
    for t in templates {
        let letters: BTreeSet<char> = template_tokens(t)
            .iter()
            .filter_map(|tok| match tok {
                Token::Ident(parts) => Some(parts[1..].iter().filter_map(|p| index_letter(p)).collect::<Vec<_>>()),
                Token::Other(_) => None,
            })
            .flatten()
            .collect();
        let letters: Vec<char> = letters.into_iter().collect();
        let count = (n as usize).pow(letters.len() as u32);
        for mut code in 0..count {
            let mut assign = BTreeMap::new();
            for &c in letters.iter().rev() {
                assign.insert(c, (code % n as usize) as u32 + 1);
                code /= n as usize;
            }
            let p = parse_poly(&instantiate_template(t, &assign), ring)?;
            if !p.is_zero() && !gens.iter().any(|g| *g == p || *g == -&p) {
                gens.push(p);
            }
        }
    }
    Ideal::new(ring, gens)
}

enum Token {
    Ident(Vec<String>),
    Other(String),
}

fn template_tokens(t: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut chars = t.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token::Ident(ident.split('_').map(str::to_string).collect()));
        } else {
            out.push(Token::Other(c.to_string()));
            chars.next();
        }
    }
    out
}

fn index_letter(s: &str) -> Option<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) if c.is_ascii_alphabetic() => Some(c),
        _ => None,
    }
}

fn instantiate_template(t: &str, assign: &BTreeMap<char, u32>) -> String {
    let mut out = String::new();
    for tok in template_tokens(t) {
        match tok {
            Token::Other(s) => out.push_str(&s),
            Token::Ident(parts) if parts.len() == 1 => out.push_str(&parts[0]),
            Token::Ident(parts) => {
                let mut idx: Vec<u32> = parts[1..]
                    .iter()
                    .map(|p| match index_letter(p) {
                        Some(c) => assign[&c],
                        None => p.parse().unwrap_or(0),
                    })
                    .collect();
                idx.sort_unstable();
                out.push_str(&parts[0]);
                for i in idx {
                    out.push('_');
                    out.push_str(&i.to_string());
                }
            }
        }
    }
    out
}

/// `δ_X(d) = dim X{K^d}`.
pub fn delta(family: &LevelFamily, d: u32, budget: Budget) -> Result<i64> {
    family.at_level(d, budget)?.dimension(budget)
}

/// `δ_X` on each `d` of `range`, computed concurrently, in order.
pub fn delta_range(family: &LevelFamily, range: std::ops::RangeInclusive<u32>, budget: Budget) -> Vec<(u32, Result<i64>)> {
    let levels: Vec<u32> = range.collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = levels.iter().map(|&d| scope.spawn(move || delta(family, d, budget))).collect();
        levels
            .iter()
            .copied()
            .zip(handles.into_iter().map(|h| h.join().expect("delta worker panicked")))
            .collect()
    })
}

/// An interpolated dimension polynomial and how it fares on held-out levels.
#[derive(Clone, Debug)]
pub struct DeltaFit {
    /// In the single variable `d`.
    pub polynomial: Polynomial,
    pub degree: u32,
    pub degree_bound: u32,
    pub fitted: Vec<(u32, i64)>,
    /// `(d, predicted, actual)`.
    pub tested: Vec<(u32, Rational, i64)>,
}

impl DeltaFit {
    pub fn agrees(&self) -> bool {
        self.tested.iter().all(|(_, p, a)| *p == Rational::from_integer((*a).into()))
    }

    pub fn within_degree_bound(&self) -> bool {
        self.degree <= self.degree_bound
    }
}

/// Lagrange interpolation of `δ_X` through `fit`, checked on `test`.
pub fn fit_delta(family: &LevelFamily, fit: &[u32], test: &[u32], budget: Budget) -> Result<DeltaFit> {
    if fit.is_empty() || test.is_empty() {
        return Err(Error::Invalid("fit and test ranges must be nonempty".into()));
    }
    if fit.iter().any(|d| test.contains(d)) {
        return Err(Error::Invalid("fit and test ranges must be disjoint".into()));
    }
    if test.iter().min() <= fit.iter().max() {
        return Err(Error::Invalid("test levels must lie above the fit levels".into()));
    }
    let mut all: Vec<u32> = fit.to_vec();
    all.extend(test);
    let values = std::thread::scope(|scope| {
        let handles: Vec<_> = all.iter().map(|&d| scope.spawn(move || delta(family, d, budget))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("delta worker panicked"))
            .collect::<Result<Vec<i64>>>()
    })?;
    let fitted: Vec<(u32, i64)> = fit.iter().copied().zip(values.iter().copied()).collect();
    let ring = Ring::new(["d"]);
    let polynomial = lagrange(&ring, &fitted);
    let tested = test
        .iter()
        .copied()
        .zip(values[fit.len()..].iter().copied())
        .map(|(d, actual)| (d, polynomial.eval(&[Rational::from_integer(d.into())]), actual))
        .collect();
    Ok(DeltaFit {
        degree: polynomial.total_degree().unwrap_or(0),
        degree_bound: family.weights.iter().copied().max().unwrap_or(0),
        polynomial,
        fitted,
        tested,
    })
}

fn lagrange(ring: &Arc<Ring>, points: &[(u32, i64)]) -> Polynomial {
    let d = Polynomial::var(ring, 0);
    let mut acc = Polynomial::zero(ring);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        let mut basis = Polynomial::constant(ring, Rational::from_integer(yi.into()));
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i != j {
                let num = &d - &Polynomial::integer(ring, xj.into());
                let den = Rational::from_integer((i64::from(xi) - i64::from(xj)).into());
                basis = (&basis * &num).scale(&den.recip());
            }
        }
        acc = &acc + &basis;
    }
    acc
}

/// Closure of `f(A^source{K^n})`, with target forms named by `auto_names`.
pub fn image_closure_level(f: &WeightedMap, n: u32, budget: Budget) -> Result<FiniteLevelVariety> {
    image_closure_named(f, n, &auto_names(f.target()), budget)
}

/// Graph ideal `w - f(v)` with the inputs `v` eliminated.
pub fn image_closure_named(f: &WeightedMap, n: u32, names: &[String], budget: Budget) -> Result<FiniteLevelVariety> {
    let explicit = instantiate(f, n)?;
    let target = level_ring(names, f.target(), n, &|i| (i + 1).to_string());
    let ni = explicit.ring.nvars();
    let mut all: Vec<String> = (0..ni).map(|i| format!("_in{i}")).collect();
    all.extend(target.names().iter().cloned());
    let graph_ring = Ring::new(all);
    let inputs: Vec<usize> = (0..ni).collect();
    let gens: Vec<Polynomial> = explicit
        .outputs
        .iter()
        .enumerate()
        .map(|(k, p)| &Polynomial::var(&graph_ring, ni + k) - &p.embed(&graph_ring, &inputs))
        .collect();
    let elim = Ideal::new(&graph_ring, gens)?.eliminate(&inputs, budget)?;
    Ok(FiniteLevelVariety {
        weights: f.target().to_vec(),
        level: n,
        ideal: elim.rename_into(&target)?,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// The fiber is nonempty over the algebraic closure; a rational
    /// preimage when one was found.
    Member(Option<Vec<Rational>>),
    /// In the closure of the image but not in the image.
    ClosureOnly,
    NonMember,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Member(Some(_)) => f.write_str("member (rational preimage found)"),
            Membership::Member(None) => f.write_str("member"),
            Membership::ClosureOnly => f.write_str("closure only"),
            Membership::NonMember => f.write_str("non-member"),
        }
    }
}

/// Is `point` (target coordinates at level `n`) in the image of `f` on `K^n`?
pub fn image_membership(f: &WeightedMap, n: u32, point: &[Rational], budget: Budget) -> Result<Membership> {
    let explicit = instantiate(f, n)?;
    if point.len() != explicit.outputs.len() {
        return Err(Error::Arity {
            expected: explicit.outputs.len(),
            got: point.len(),
        });
    }
    let ring = explicit.ring.clone();
    let fiber: Vec<Polynomial> = explicit
        .outputs
        .iter()
        .zip(point)
        .map(|(p, v)| p - &Polynomial::constant(&ring, v.clone()))
        .collect();
    let gb = Ideal::new(&ring, fiber)?.groebner(&MonomialOrder::Grevlex, budget)?;
    if !gb.is_unit() {
        let witness = find_rational_point(&gb, budget)?;
        return Ok(Membership::Member(witness));
    }
    let closure = image_closure_level(f, n, budget)?;
    let on_closure = closure.ideal.generators().iter().all(|g| g.eval(point).is_zero());
    Ok(if on_closure {
        Membership::ClosureOnly
    } else {
        Membership::NonMember
    })
}

/// `Map(A^λ, X)` cut out in the coefficients of a generic map.
#[derive(Clone, Debug)]
pub struct MappingSpace {
    pub symbols: Vec<String>,
    pub level: u32,
    /// Reduced Groebner basis of the equations from level `level`.
    pub ideal: Ideal,
    /// Whether level `level + 1` gives the same ideal.
    pub stabilized: bool,
}

/// Equations on the coefficients of `γ: A^λ → A^X.tuple` for `γ` to land in
/// `X`, pulled back at level `level` and compared with `level + 1`.
pub fn mapping_space(lam: &PartitionTuple, family: &LevelFamily, level: u32, budget: Budget) -> Result<MappingSpace> {
    if !lam.is_pure() {
        return Err(Error::InvalidTuple(format!("{lam} is not pure")));
    }
    let source: Vec<FormSymbol> = crate::equimap::symbols_for_tuple(lam)?
        .into_iter()
        .map(|s| FormSymbol::new(format!("src{}", s.name), s.weight))
        .collect();
    let (gamma, symbols) = generic_map_from(&source, &family.weights, "c")?;
    let param_ring = Ring::new(symbols.clone());
    let at = |n: u32| -> Result<Ideal> {
        let x = family.at_level(n, budget)?;
        let pulled = instantiate_with_params(&gamma, n, &family.names)?;
        let np = symbols.len();
        let src_vars: Vec<usize> = (np..pulled.ring.nvars()).collect();
        let mut gens = Vec::new();
        for g in x.ideal.generators() {
            let p = g.substitute(&pulled.outputs, &pulled.ring);
            for c in p.coefficients_in(&src_vars).into_values() {
                if !c.is_zero() {
                    gens.push(c.rename_into(&param_ring)?);
                }
            }
        }
        let gb = Ideal::new(&param_ring, gens)?.groebner(&MonomialOrder::Grevlex, budget)?;
        Ok(gb.to_ideal())
    };
    let ideal = at(level)?;
    let next = at(level + 1)?;
    let stabilized = ideal.same_ideal(&next, budget)?;
    Ok(MappingSpace {
        symbols,
        level,
        ideal,
        stabilized,
    })
}

/// `Sh_n(X)`: level `d` is `X{K^(n+d)}`, with the first `n` index slots of
/// every coordinate relabelled `s1, ..., sn`.
pub fn shift_level(family: &LevelFamily, n: u32) -> LevelFamily {
    LevelFamily {
        weights: family.weights.clone(),
        names: family.names.clone(),
        recipe: Recipe::Shifted {
            n,
            inner: Box::new(family.clone()),
        },
    }
}

/// Rank `≤ r` quadrics in `n` variables: `(r+1)`-minors of the symmetric
/// matrix `2M` of the form, whose entries are integral in the coordinates.
pub fn minors_stratum(r: u32, n: u32) -> Result<FiniteLevelVariety> {
    minors_stratum_named("f", r, n)
}

fn minors_stratum_named(name: &str, r: u32, n: u32) -> Result<FiniteLevelVariety> {
    if n == 0 {
        return Err(Error::Invalid("level must be positive".into()));
    }
    let names = [name.to_string()];
    let ring = level_ring(&names, &[2], n, &|i| (i + 1).to_string());
    let nn = n as usize;
    let entry = |i: usize, j: usize| -> Polynomial {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        let v = Polynomial::var_named(&ring, &format!("{name}_{}_{}", a + 1, b + 1)).expect("coordinate");
        if a == b {
            v.scale(&Rational::from_integer(2.into()))
        } else {
            v
        }
    };
    let t = r as usize + 1;
    let mut gens = Vec::new();
    if t <= nn {
        let subsets = index_subsets(nn, t);
        for rows in &subsets {
            for cols in &subsets {
                let m: Vec<Vec<Polynomial>> = rows.iter().map(|&i| cols.iter().map(|&j| entry(i, j)).collect()).collect();
                let d = determinant(&m).primitive();
                if !d.is_zero() && !gens.iter().any(|g: &Polynomial| *g == d || *g == -&d) {
                    gens.push(d);
                }
            }
        }
    }
    Ok(FiniteLevelVariety {
        weights: vec![2],
        level: n,
        ideal: Ideal::new(&ring, gens)?,
    })
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = index_subsets(n - 1, k);
    for mut s in index_subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Laplace expansion along the first row.
fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let ring = m[0][0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for c in 0..m.len() {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][c] * &determinant(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `dim A^tuple{K^n} = Σ dim Sym^e(K^n)`.
pub fn ambient_dimension(weights: &[u32], n: u32) -> u64 {
    weights.iter().map(|&e| schur_dim(&Partition::row(e), n)).sum()
}

/// Coordinates of a form given as a polynomial in `z_1..z_n` (ring of the
/// level variables), in the coordinate order of `form_coordinates`.
pub fn form_point(poly: &Polynomial, d: u32, n: u32) -> Result<Vec<Rational>> {
    if poly.ring().nvars() != n as usize {
        return Err(Error::Arity {
            expected: n as usize,
            got: poly.ring().nvars(),
        });
    }
    let coeffs: BTreeMap<Monomial, Rational> = poly.terms().iter().cloned().collect();
    Ok(form_coordinates("z", d, n)
        .into_iter()
        .map(|(_, e)| coeffs.get(&Monomial::from_exponents(&e)).cloned().unwrap_or_else(Rational::zero))
        .collect())
}

#[cfg(test)]
mod tests;
