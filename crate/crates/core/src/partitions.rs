//! Partitions, tuples of partitions and their magnitudes.
//!
//! A [`PartitionTuple`] is a finite multiset of partitions. It is stored as a
//! sorted list (descending by size, then by parts) so that derived equality
//! and hashing coincide with multiset equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping zero parts. Fails if the input is not
    /// weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self, String> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.contains(&0) {
            return Err("zero part followed by a positive part".into());
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(d)`; empty for `d = 0`.
    pub fn row(d: u32) -> Self {
        if d == 0 {
            Self::empty()
        } else {
            Partition(vec![d])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// True for the empty partition and for one-row partitions.
    pub fn is_single_row(&self) -> bool {
        self.0.len() <= 1
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains_diagram(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Conjugate partition (transpose of the diagram).
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions whose diagram is contained in `self`.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn go(outer: &[u32], i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i >= outer.len() {
                return;
            }
            for p in 1..=outer[i].min(max) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = String;
    fn try_from(v: Vec<u32>) -> Result<Self, String> {
        Partition::new(v)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Descending by size, then lexicographically by parts (larger first), so
/// that sorting puts `(2)` before `(1,1)` before `(1)` before `∅`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = BracketParser::new(s);
        let part = p.partition()?;
        p.finish()?;
        Ok(part)
    }
}

/// A finite multiset of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct PartitionTuple(Vec<Partition>);

impl PartitionTuple {
    pub fn new(mut entries: Vec<Partition>) -> Self {
        entries.sort();
        PartitionTuple(entries)
    }

    pub fn empty() -> Self {
        PartitionTuple(Vec::new())
    }

    /// Tuple of one-row partitions `[(d_1), ..., (d_r)]`.
    pub fn rows(degrees: &[u32]) -> Self {
        Self::new(degrees.iter().map(|&d| Partition::row(d)).collect())
    }

    pub fn entries(&self) -> &[Partition] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No entry is the empty partition.
    pub fn is_pure(&self) -> bool {
        self.0.iter().all(|p| !p.is_empty())
    }

    pub fn is_single_row(&self) -> bool {
        self.0.iter().all(Partition::is_single_row)
    }

    /// Largest size of an entry; 0 for the empty tuple.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(Partition::size).max().unwrap_or(0)
    }

    pub fn magnitude(&self) -> Magnitude {
        let mut counts = vec![0usize; self.degree() as usize + 1];
        for p in &self.0 {
            counts[p.size() as usize] += 1;
        }
        Magnitude::new(counts)
    }

    /// Multiplicity of each distinct entry.
    pub fn multiplicities(&self) -> BTreeMap<Partition, usize> {
        let mut m = BTreeMap::new();
        for p in &self.0 {
            *m.entry(p.clone()).or_insert(0) += 1;
        }
        m
    }

    /// `small ⊂ self` with multiplicity.
    pub fn contains(&self, small: &PartitionTuple) -> bool {
        let mine = self.multiplicities();
        small.multiplicities().iter().all(|(p, k)| mine.get(p).is_some_and(|m| m >= k))
    }

    pub fn union(&self, other: &PartitionTuple) -> PartitionTuple {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        PartitionTuple::new(v)
    }

    /// Multiset difference; `None` unless `small ⊂ self`.
    pub fn difference(&self, small: &PartitionTuple) -> Option<PartitionTuple> {
        let mut rest = self.0.clone();
        for p in &small.0 {
            let pos = rest.iter().position(|q| q == p)?;
            rest.remove(pos);
        }
        Some(PartitionTuple(rest))
    }

    /// Distinct sub-multisets obtained by removing exactly one entry.
    pub fn maximal_proper_subtuples(&self) -> Vec<PartitionTuple> {
        self.multiplicities()
            .keys()
            .map(|p| {
                let mut rest = self.0.clone();
                let pos = rest.iter().position(|q| q == p).expect("present");
                rest.remove(pos);
                PartitionTuple(rest)
            })
            .collect()
    }

    /// Every distinct sub-multiset, including `∅` and `self`.
    pub fn subtuples(&self) -> Vec<PartitionTuple> {
        let mult: Vec<(Partition, usize)> = self.multiplicities().into_iter().collect();
        let mut out = vec![Vec::new()];
        for (p, k) in &mult {
            let mut next = Vec::new();
            for base in &out {
                for c in 0..=*k {
                    let mut v: Vec<Partition> = base.clone();
                    v.extend(std::iter::repeat_n(p.clone(), c));
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(PartitionTuple::new).collect()
    }
}

impl From<Vec<Partition>> for PartitionTuple {
    fn from(v: Vec<Partition>) -> Self {
        PartitionTuple::new(v)
    }
}

impl From<PartitionTuple> for Vec<Partition> {
    fn from(t: PartitionTuple) -> Self {
        t.0
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for PartitionTuple {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = BracketParser::new(s);
        let t = p.tuple()?;
        p.finish()?;
        Ok(t)
    }
}

/// Per-size entry counts `(n_0, n_1, ..., n_D)` of a tuple.
///
/// Ordered by the first difference from the top: `a < b` iff `a_i < b_i` at
/// the largest index `i` where they disagree (shorter sequences are padded
/// with zeros). This is a well-order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Magnitude(Vec<usize>);

impl Magnitude {
    /// Trailing zeros are trimmed.
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Magnitude(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl Ord for Magnitude {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in (0..n).rev() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Magnitude {
    type Output = Magnitude;
    fn add(self, rhs: &Magnitude) -> Magnitude {
        let n = self.0.len().max(rhs.0.len());
        Magnitude::new((0..n).map(|i| self.0.get(i).unwrap_or(&0) + rhs.0.get(i).unwrap_or(&0)).collect())
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub fn magnitude(t: &PartitionTuple) -> Magnitude {
    t.magnitude()
}

pub fn compare_magnitude(a: &Magnitude, b: &Magnitude) -> Ordering {
    a.cmp(b)
}

struct BracketParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> BracketParser<'a> {
    fn new(src: &'a str) -> Self {
        BracketParser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.err(format!("expected '{c}', found '{d}'"))),
            None => Err(self.err(format!("expected '{c}', found end of input"))),
        }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a non-negative integer"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "integer out of range"))
    }

    fn partition(&mut self) -> Result<Partition, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        self.expect('[')?;
        let mut parts = Vec::new();
        if self.peek() != Some(']') {
            loop {
                parts.push(self.number()?);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(']')?;
        Partition::new(parts).map_err(|m| ParseError::new(start, m))
    }

    fn tuple(&mut self) -> Result<PartitionTuple, ParseError> {
        self.expect('[')?;
        let mut entries = Vec::new();
        if self.peek() != Some(']') {
            loop {
                entries.push(self.partition()?);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(']')?;
        Ok(PartitionTuple::new(entries))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected trailing '{c}'"))),
        }
    }
}
