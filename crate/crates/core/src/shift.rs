//! The shift operation on tuples.
//!
//! Restricting `S_λ(K^n ⊕ V)` to the copy of `GL` fixing the first `n` basis
//! vectors gives `⊕_{μ,ν} c^λ_{μν} S_μ(K^n) ⊗ S_ν(V)`, so each entry `λ`
//! contributes `ν` with multiplicity `Σ_μ c^λ_{μν} · dim S_μ(K^n)`.

use crate::partitions::{Partition, PartitionTuple};
use crate::schur::{lr_coefficient, schur_dim};

/// Branching of a single partition: `(ν, multiplicity)` pairs, `ν` descending.
pub fn shift_partition(n: u32, lam: &Partition) -> Vec<(Partition, u64)> {
    let mut out = Vec::new();
    for nu in lam.subdiagrams() {
        let rest = lam.size() - nu.size();
        let mult: u64 = Partition::all_of_size(rest)
            .iter()
            .map(|mu| lr_coefficient(lam, mu, &nu) * schur_dim(mu, n))
            .sum();
        if mult > 0 {
            out.push((nu, mult));
        }
    }
    out.sort();
    out
}

/// `sh_n(t)`.
pub fn shift_tuple(n: u32, t: &PartitionTuple) -> PartitionTuple {
    let mut entries = Vec::new();
    for lam in t.entries() {
        for (nu, mult) in shift_partition(n, lam) {
            entries.extend(std::iter::repeat_n(nu, mult as usize));
        }
    }
    PartitionTuple::new(entries)
}

/// `sh_{n,0}(t)`: `sh_n(t)` with one copy of `t` removed.
pub fn shift_complement(n: u32, t: &PartitionTuple) -> PartitionTuple {
    shift_tuple(n, t).difference(t).expect("sh_n(t) always contains t")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PartitionTuple {
        s.parse().unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_tuple(1, &t("[[2]]")), t("[[2],[1],[]]"));
        let any = t("[[3,1],[2],[]]");
        assert_eq!(shift_tuple(0, &any), any);
        assert_eq!(shift_tuple(1, &t("[[1],[1]]")), t("[[1],[],[1],[]]"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(shift_complement(1, &t("[[2]]")), t("[[1],[]]"));
        assert_eq!(shift_complement(1, &t("[[1,1]]")), t("[[1]]"));
        for n in 0..4 {
            assert_eq!(shift_complement(n, &t("[[]]")), t("[]"));
        }
        // S^2(K^2 ⊕ V) = S^2 K^2 ⊕ K^2⊗V ⊕ S^2 V
        assert_eq!(shift_complement(2, &t("[[2]]")), t("[[1],[1],[],[],[]]"));
    }

    #[test]
    fn complement_entries_are_smaller() {
        for size in 1..=4 {
            for lam in Partition::all_of_size(size) {
                for n in 0..=3 {
                    let c = shift_complement(n, &PartitionTuple::new(vec![lam.clone()]));
                    assert!(c.entries().iter().all(|nu| nu.size() < size));
                }
            }
        }
    }
}
