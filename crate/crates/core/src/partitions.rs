//! Integer partitions, stored as weakly decreasing vectors without trailing zeros.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. `Ord` is lexicographic and only meant for
/// sorting; the dominance order is [`Partition::leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing list; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the given parts before building the partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The part `λ_j` (1-indexed), zero beyond the length.
    pub fn get(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.get(1)
    }

    /// Sum of the first `k` parts.
    pub fn partial_sum(&self, k: usize) -> u32 {
        self.parts.iter().take(k).sum()
    }

    /// Number of parts equal to `i`; `i = 0` is rejected.
    pub fn mult(&self, i: u32) -> Result<usize> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(self.parts.iter().filter(|&&p| p == i).count())
    }

    /// Number of parts greater than or equal to `i` (for `i >= 1`).
    pub fn mult_geq(&self, i: u32) -> Result<usize> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(self.parts.iter().filter(|&&p| p >= i).count())
    }

    /// Multiplicity of a positive value; callers guarantee `i >= 1`.
    pub(crate) fn m(&self, i: u32) -> usize {
        debug_assert!(i >= 1);
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Distinct nonzero values in decreasing order.
    pub fn values(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.dedup();
        v
    }

    pub fn transpose(&self) -> Partition {
        let width = self.largest() as usize;
        let mut out = Vec::with_capacity(width);
        for c in 1..=width as u32 {
            out.push(self.parts.iter().take_while(|&&p| p >= c).count() as u32);
        }
        Partition { parts: out }
    }

    /// Merge of the two multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.parts.clone();
        v.extend_from_slice(&other.parts);
        Self::from_unsorted(v)
    }

    /// Componentwise sum `λ_j + μ_j`.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let v = (1..=n).map(|j| self.get(j) + other.get(j)).collect();
        Partition { parts: v }
    }

    /// Componentwise sum with an integer sequence, checking that the result is a partition.
    pub fn add_seq(&self, seq: &IntSequence) -> Result<Partition> {
        let n = self.len().max(seq.len());
        let v: Vec<i64> = (1..=n).map(|j| self.get(j) as i64 + seq.get(j)).collect();
        partition_from_i64(v)
    }

    /// Dominance order: every partial sum of `self` is at most that of `other`.
    pub fn leq(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for j in 1..=n {
            a += self.get(j);
            b += other.get(j);
            if a > b {
                return false;
            }
        }
        true
    }

    pub fn lt(&self, other: &Partition) -> bool {
        self != other && self.leq(other)
    }

    /// Partial comparison in the dominance order.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        match (self.leq(other), other.leq(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// Doubles every part: `λ + λ` componentwise.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    /// Takes every part twice: `λ ∪ λ`.
    pub fn repeated(&self) -> Partition {
        self.union(self)
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Pads with zeros to exactly `n` entries.
    pub(crate) fn padded(&self, n: usize) -> Vec<u32> {
        debug_assert!(n >= self.len());
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }
}

pub(crate) fn partition_from_i64(v: Vec<i64>) -> Result<Partition> {
    if v.iter().any(|&x| x < 0) || v.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotPartition(v));
    }
    Ok(Partition::from_sorted(v.into_iter().map(|x| x as u32).collect()))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "0" || t == "()" {
            return Ok(Partition::empty());
        }
        let t = t.trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse {
                what: "partition",
                input: s.to_string(),
            })?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finitely supported integer sequence, 1-indexed, zero beyond its stored length.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct IntSequence {
    vals: Vec<i64>,
}

impl IntSequence {
    pub fn zeros(n: usize) -> Self {
        IntSequence { vals: vec![0; n] }
    }

    pub fn from_vec(vals: Vec<i64>) -> Self {
        let mut s = IntSequence { vals };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.vals.last() == Some(&0) {
            self.vals.pop();
        }
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn get(&self, j: usize) -> i64 {
        if j == 0 {
            return 0;
        }
        self.vals.get(j - 1).copied().unwrap_or(0)
    }

    pub fn set(&mut self, j: usize, v: i64) {
        assert!(j >= 1, "IntSequence is 1-indexed");
        if self.vals.len() < j {
            self.vals.resize(j, 0);
        }
        self.vals[j - 1] = v;
        self.trim();
    }

    pub fn add(&self, other: &IntSequence) -> IntSequence {
        let n = self.len().max(other.len());
        IntSequence::from_vec((1..=n).map(|j| self.get(j) + other.get(j)).collect())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.vals
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every tuple `(λ_1, …, λ_k)` with `λ_j` a partition of `sizes[j]`.
pub fn partition_tuples(sizes: &[u32]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for &s in sizes {
        let ps = partitions_of(s);
        out = out
            .into_iter()
            .flat_map(|t| {
                ps.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Every `k`-tuple of partitions whose sizes add up to `total`.
pub fn tuples_of_total(total: u32, k: usize) -> Vec<Vec<Partition>> {
    fn sizes(total: u32, k: usize) -> Vec<Vec<u32>> {
        if k == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in (0..=total).rev() {
            for mut rest in sizes(total - first, k - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    sizes(total, k)
        .iter()
        .flat_map(|s| partition_tuples(s))
        .collect()
}

/// The unique maximum of a finite set in the dominance order, if there is one.
pub fn dominance_maximum<'a, I>(items: I) -> Option<Partition>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let v: Vec<&Partition> = items.into_iter().collect();
    v.iter()
        .find(|m| v.iter().all(|x| x.leq(m)))
        .map(|m| (*m).clone())
}

/// The unique minimum of a finite set in the dominance order, if there is one.
pub fn dominance_minimum<'a, I>(items: I) -> Option<Partition>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let v: Vec<&Partition> = items.into_iter().collect();
    v.iter()
        .find(|m| v.iter().all(|x| m.leq(x)))
        .map(|m| (*m).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_and_indexing() {
        let a = Partition::new(vec![3, 1, 1, 0, 0]).unwrap();
        assert_eq!(a.parts(), &[3, 1, 1]);
        assert_eq!(a.get(1), 3);
        assert_eq!(a.get(3), 1);
        assert_eq!(a.get(7), 0);
        assert_eq!(a.size(), 5);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn multiplicities() {
        let a = p("4,2,2,1");
        assert_eq!(a.mult(2).unwrap(), 2);
        assert_eq!(a.mult(3).unwrap(), 0);
        assert_eq!(a.mult_geq(2).unwrap(), 3);
        assert_eq!(a.mult(0), Err(Error::ZeroIndex));
        assert_eq!(a.mult_geq(0), Err(Error::ZeroIndex));
    }

    #[test]
    fn transpose_small_cases() {
        assert_eq!(p("3,1,1").transpose(), p("3,1,1"));
        assert_eq!(p("2,2").transpose(), p("2,2"));
        assert_eq!(p("3").transpose(), p("1,1,1"));
        assert_eq!(p("4,2,1").transpose(), p("3,2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn union_and_sum() {
        assert_eq!(p("3,1").union(&p("2,1")), p("3,2,1,1"));
        assert_eq!(p("3,1").sum(&p("2,1,1")), p("5,2,1"));
        assert_eq!(p("2,1").doubled(), p("4,2"));
        assert_eq!(p("2,1").repeated(), p("2,2,1,1"));
    }

    #[test]
    fn add_sequence_checks_result() {
        let z = IntSequence::from_vec(vec![-1, 1, -1]);
        assert_eq!(p("3,1,1").add_seq(&z).unwrap(), p("2,2"));
        let bad = IntSequence::from_vec(vec![0, 2]);
        assert!(p("1,1").add_seq(&bad).is_err());
        let neg = IntSequence::from_vec(vec![0, -2]);
        assert!(p("1,1").add_seq(&neg).is_err());
    }

    #[test]
    fn dominance() {
        assert!(p("2,2").leq(&p("3,1")));
        assert!(!p("3,1,1,1").leq(&p("2,2,2")));
        assert_eq!(p("3,1,1,1").dominance_cmp(&p("2,2,2")), None);
        assert!(p("1,1,1").lt(&p("3")));
        assert!(!p("3").lt(&p("3")));
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let four: Vec<String> = partitions_of(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(four, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn tuples() {
        assert_eq!(partition_tuples(&[2, 1]).len(), 2);
        // pairs of total 2: (2,0),(1,1),(0,2) give 2 + 1 + 2
        assert_eq!(tuples_of_total(2, 2).len(), 5);
    }

    #[test]
    fn text_round_trip() {
        for n in 0..8 {
            for a in partitions_of(n) {
                assert_eq!(a.to_string().parse::<Partition>().unwrap(), a);
            }
        }
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("(3,1)"), p("3,1"));
        assert!("3,x".parse::<Partition>().is_err());
        let j = serde_json::to_string(&p("3,1,1")).unwrap();
        assert_eq!(j, "\"3,1,1\"");
        assert_eq!(serde_json::from_str::<Partition>(&j).unwrap(), p("3,1,1"));
    }

    #[test]
    fn extrema() {
        let set = vec![p("2,2"), p("3,1"), p("2,1,1")];
        assert_eq!(dominance_maximum(&set), Some(p("3,1")));
        assert_eq!(dominance_minimum(&set), Some(p("2,1,1")));
        let anti = vec![p("3,1,1,1"), p("2,2,2")];
        assert_eq!(dominance_maximum(&anti), None);
    }
}
