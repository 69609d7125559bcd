//! Schur-functor numerics: Littlewood–Richardson coefficients, dimensions of
//! `S_λ(K^n)`, and the Schur decomposition of `Sym(V_λ1 ⊕ ... ⊕ V_λr)` up to a
//! degree bound.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionTuple};

/// A finitely supported non-negative combination of irreducibles `V_λ`,
/// complete in degrees `≤ degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, u64>,
    degree_bound: u32,
}

impl SchurExpansion {
    pub fn new(degree_bound: u32) -> Self {
        SchurExpansion {
            terms: BTreeMap::new(),
            degree_bound,
        }
    }

    /// Adds `mult` copies of `V_λ`. Terms above the degree bound are dropped.
    pub fn add(&mut self, lam: Partition, mult: u64) {
        if mult == 0 || lam.size() > self.degree_bound {
            return;
        }
        *self.terms.entry(lam).or_insert(0) += mult;
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    /// Multiplicity of `V_μ`; `None` if `|μ|` exceeds the degree bound.
    pub fn multiplicity(&self, mu: &Partition) -> Option<u64> {
        (mu.size() <= self.degree_bound).then(|| self.terms.get(mu).copied().unwrap_or(0))
    }

    /// The terms of total degree `d`.
    pub fn graded_piece(&self, d: u32) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().filter(move |(p, _)| p.size() == d).map(|(p, &m)| (p, m))
    }

    /// `Σ mult(λ) · dim S_λ(K^n)` over the recorded terms.
    pub fn dimension(&self, n: u32) -> u64 {
        self.terms.iter().map(|(p, &m)| m * schur_dim(p, n)).sum()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        // ascending degree reads more naturally for graded pieces
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.parts().cmp(a.0.parts())));
        for (p, m) in terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "V{p}")?;
            } else {
                write!(f, "{m}*V{p}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, "  (complete through degree {})", self.degree_bound)
    }
}

/// `dim S_λ(K^n)` by the hook-content formula.
pub fn schur_dim(lam: &Partition, n: u32) -> u64 {
    if lam.len() > n as usize {
        return 0;
    }
    let conj = lam.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = n as i64 + j as i64 - i as i64;
            num *= content as u64;
            let hook = (row as usize - j) + (conj.part(j) as usize - i) - 1;
            den *= hook as u64;
        }
    }
    (num / den).to_u64().expect("dimension fits in u64")
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`, the multiplicity of
/// `S_λ` in `S_μ ⊗ S_ν`.
///
/// Counts fillings of the skew shape `λ/μ` with content `ν` that are
/// semistandard and whose right-to-left, top-to-bottom reading word is a
/// lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lam.size() || !lam.contains_diagram(mu) || !lam.contains_diagram(nu) {
        return 0;
    }
    // cells in reading order: rows top to bottom, each row right to left
    let rows = lam.len();
    let mut cells = Vec::with_capacity((lam.size() - mu.size()) as usize);
    for r in 0..rows {
        for c in (mu.part(r)..lam.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = lam.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let content: Vec<u32> = nu.parts().to_vec();
    let mut used = vec![0u32; content.len() + 1];
    let mut count = 0u64;
    lr_fill(lam, mu, &cells, 0, &mut grid, &content, &mut used, &mut count);
    count
}

#[allow(clippy::too_many_arguments)]
fn lr_fill(
    lam: &Partition,
    mu: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut [Vec<u32>],
    content: &[u32],
    used: &mut [u32],
    count: &mut u64,
) {
    if k == cells.len() {
        *count += 1;
        return;
    }
    let (r, c) = cells[k];
    // row weakly increases left to right, so moving left the entry cannot grow
    let hi = if c + 1 < lam.part(r) as usize {
        grid[r][c + 1]
    } else {
        content.len() as u32
    };
    // strictly larger than the entry above when that cell is in the skew shape
    let lo = if r > 0 && c >= mu.part(r - 1) as usize {
        grid[r - 1][c] + 1
    } else {
        1
    };
    for v in lo..=hi {
        let vi = v as usize;
        if used[vi - 1] >= content[vi - 1] {
            continue;
        }
        if vi > 1 && used[vi - 1] + 1 > used[vi - 2] {
            continue;
        }
        used[vi - 1] += 1;
        grid[r][c] = v;
        lr_fill(lam, mu, cells, k + 1, grid, content, used, count);
        used[vi - 1] -= 1;
    }
    grid[r][c] = 0;
}

/// Decomposes the degree `≤ bound` part of `Sym(V_t)` into irreducibles.
///
/// Uses the power-sum expansion `h_k[F] = Σ_{ρ ⊢ k} p_ρ[F] / z_ρ` and reads
/// off Schur multiplicities with Murnaghan–Nakayama characters.
pub fn sym_decompose(t: &PartitionTuple, bound: u32) -> Result<SchurExpansion> {
    if !t.is_pure() {
        return Err(Error::InvalidTuple(format!(
            "{t} contains the empty partition; Sym of a degree-0 generator has infinite graded pieces"
        )));
    }
    let mut chars = CharacterTable::default();
    let mut total = PowerSum::one();
    for lam in t.entries() {
        let s_lam = chars.schur_in_power_sums(lam);
        let mut series = PowerSum::one();
        let d = lam.size();
        for k in 1..=bound / d {
            series.add_assign(&h_plethysm(k, &s_lam, bound));
        }
        total = total.mul(&series, bound);
    }
    let mut out = SchurExpansion::new(bound);
    for deg in 0..=bound {
        for mu in Partition::all_of_size(deg) {
            let mut mult = BigRational::zero();
            for (rho, c) in total.0.iter().filter(|(r, _)| r.size() == deg) {
                let chi = chars.get(&mu, rho);
                if chi != 0 {
                    mult += c * BigRational::from_integer(BigInt::from(chi));
                }
            }
            assert!(mult.is_integer() && !mult.is_negative(), "non-integral multiplicity {mult}");
            out.add(mu, mult.to_integer().to_u64().expect("multiplicity fits in u64"));
        }
    }
    Ok(out)
}

/// A symmetric function in the power-sum basis.
#[derive(Clone, Debug, Default)]
struct PowerSum(HashMap<Partition, BigRational>);

impl PowerSum {
    fn one() -> Self {
        let mut m = HashMap::new();
        m.insert(Partition::empty(), BigRational::one());
        PowerSum(m)
    }

    fn add_term(&mut self, rho: Partition, c: BigRational) {
        let e = self.0.entry(rho).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            // keep support minimal; cheap to recompute the key
            self.0.retain(|_, v| !v.is_zero());
        }
    }

    fn add_assign(&mut self, other: &PowerSum) {
        for (r, c) in &other.0 {
            self.add_term(r.clone(), c.clone());
        }
    }

    fn mul(&self, other: &PowerSum, bound: u32) -> PowerSum {
        let mut out = PowerSum::default();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                if a.size() + b.size() > bound {
                    continue;
                }
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), ca * cb);
            }
        }
        out
    }

    /// `p_k[F]`: every `p_i` becomes `p_{ki}`.
    fn adams(&self, k: u32) -> PowerSum {
        let mut out = PowerSum::default();
        for (r, c) in &self.0 {
            let parts = r.parts().iter().map(|&p| p * k).collect();
            out.add_term(Partition::from_unsorted(parts), c.clone());
        }
        out
    }
}

/// `h_k[G]` truncated to degree `≤ bound`.
fn h_plethysm(k: u32, g: &PowerSum, bound: u32) -> PowerSum {
    let mut out = PowerSum::default();
    for rho in Partition::all_of_size(k) {
        let mut term = PowerSum::one();
        for &part in rho.parts() {
            term = term.mul(&g.adams(part), bound);
        }
        let inv_z = BigRational::new(BigInt::one(), BigInt::from(z_rho(&rho)));
        for (r, c) in term.0 {
            out.add_term(r, c * &inv_z);
        }
    }
    out
}

/// `z_ρ = Π i^{m_i} m_i!`.
fn z_rho(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    for (i, m) in counts {
        for j in 1..=m {
            z *= i as u64 * j as u64;
        }
    }
    z
}

/// Memoized irreducible characters `χ^λ(ρ)` of the symmetric group.
#[derive(Default)]
struct CharacterTable {
    memo: HashMap<(Partition, Partition), i64>,
}

impl CharacterTable {
    fn get(&mut self, lam: &Partition, rho: &Partition) -> i64 {
        if lam.size() != rho.size() {
            return 0;
        }
        if rho.is_empty() {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(lam.clone(), rho.clone())) {
            return v;
        }
        // strip a rim hook of length rho_1 via the beta-set: move a bead down by k
        let k = rho.parts()[0];
        let rest = Partition::from_unsorted(rho.parts()[1..].to_vec());
        let len = lam.len();
        let beta: Vec<i64> = (0..len).map(|i| lam.part(i) as i64 + (len - 1 - i) as i64).collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - k as i64;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut nb = beta.clone();
            nb[idx] = target;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let m = nb.len();
            let parts: Vec<u32> = nb.iter().enumerate().map(|(i, &x)| (x - (m - 1 - i) as i64) as u32).collect();
            let smaller = Partition::from_unsorted(parts);
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.get(&smaller, &rest);
        }
        self.memo.insert((lam.clone(), rho.clone()), total);
        total
    }

    /// `s_λ = Σ_ρ χ^λ(ρ) p_ρ / z_ρ`.
    fn schur_in_power_sums(&mut self, lam: &Partition) -> PowerSum {
        let mut out = PowerSum::default();
        for rho in Partition::all_of_size(lam.size()) {
            let chi = self.get(lam, &rho);
            if chi != 0 {
                out.add_term(rho.clone(), BigRational::new(BigInt::from(chi), BigInt::from(z_rho(&rho))));
            }
        }
        out
    }
}
