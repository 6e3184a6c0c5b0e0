//! Lusztig symbols: unordered pairs of finite sets of nonnegative integers, up to shift.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A pair of rows, each stored strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    x: Vec<u32>,
    y: Vec<u32>,
}

/// Invariant of a family: the multiset of entries and the set of doubled entries
/// of a representative that cannot be unshifted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyKey {
    pub entries: Vec<u32>,
    pub doubled: Vec<u32>,
}

fn row(mut v: Vec<u32>) -> Result<Vec<u32>> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedEntry(v));
    }
    Ok(v)
}

fn staircase_add(p: &Partition, r: usize) -> Vec<u32> {
    (1..=r).map(|j| p.get(j) + (r - j) as u32).collect()
}

fn staircase_sub(row: &[u32]) -> Result<Partition> {
    let r = row.len();
    let v: Vec<i64> = row
        .iter()
        .enumerate()
        .map(|(j, &x)| x as i64 - (r - 1 - j) as i64)
        .collect();
    crate::partitions::partition_from_i64(v)
}

fn interleaves(first: &[u32], second: &[u32]) -> bool {
    let mut merged = Vec::with_capacity(first.len() + second.len());
    for k in 0..first.len().max(second.len()) {
        if let Some(&a) = first.get(k) {
            merged.push(a);
        }
        if let Some(&b) = second.get(k) {
            merged.push(b);
        }
    }
    merged.windows(2).all(|w| w[0] >= w[1])
}

impl Symbol {
    pub fn new(x: Vec<u32>, y: Vec<u32>) -> Result<Self> {
        Ok(Symbol {
            x: row(x)?,
            y: row(y)?,
        })
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn y(&self) -> &[u32] {
        &self.y
    }

    pub fn rank(&self) -> u32 {
        let s: u32 = self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>();
        let m = (self.x.len() + self.y.len()) as u32;
        let correction = if m == 0 { 0 } else { (m - 1) * (m - 1) / 4 };
        s - correction
    }

    pub fn defect(&self) -> u32 {
        self.x.len().abs_diff(self.y.len()) as u32
    }

    /// Adds one to every entry and a zero to both rows.
    pub fn shift(&self) -> Symbol {
        let up = |r: &[u32]| {
            let mut v: Vec<u32> = r.iter().map(|e| e + 1).collect();
            v.push(0);
            v
        };
        Symbol {
            x: up(&self.x),
            y: up(&self.y),
        }
    }

    pub fn shifted(&self, times: usize) -> Symbol {
        (0..times).fold(self.clone(), |s, _| s.shift())
    }

    /// Representative with no zero common to both rows, longer row first,
    /// and for equal lengths the lexicographically larger row first.
    pub fn normalize(&self) -> Symbol {
        let mut x = self.x.clone();
        let mut y = self.y.clone();
        while x.last() == Some(&0) && y.last() == Some(&0) {
            x.pop();
            y.pop();
            x.iter_mut().for_each(|e| *e -= 1);
            y.iter_mut().for_each(|e| *e -= 1);
        }
        if y.len() > x.len() || (y.len() == x.len() && y > x) {
            std::mem::swap(&mut x, &mut y);
        }
        Symbol { x, y }
    }

    pub fn equivalent(&self, other: &Symbol) -> bool {
        self.normalize() == other.normalize()
    }

    /// The pair of partitions obtained by removing the staircases.
    pub fn bipartition(&self) -> Result<(Partition, Partition)> {
        let n = self.normalize();
        match n.defect() {
            0 | 1 => Ok((staircase_sub(&n.x)?, staircase_sub(&n.y)?)),
            d => Err(Error::UnsupportedDefect(d)),
        }
    }

    /// Interleaving `x1 >= y1 >= x2 >= ...` on the normalized form.
    pub fn is_special(&self) -> bool {
        let n = self.normalize();
        match n.defect() {
            1 => interleaves(&n.x, &n.y),
            0 => interleaves(&n.x, &n.y) || interleaves(&n.y, &n.x),
            _ => false,
        }
    }

    pub fn family_key(&self) -> FamilyKey {
        let n = self.normalize();
        let mut entries: Vec<u32> = n.x.iter().chain(n.y.iter()).copied().collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let xs: BTreeSet<u32> = n.x.iter().copied().collect();
        let doubled: Vec<u32> = n.y.iter().copied().filter(|e| xs.contains(e)).collect();
        FamilyKey { entries, doubled }
    }

    fn singles_and_doubles(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.normalize();
        let mut count: BTreeMap<u32, u32> = BTreeMap::new();
        for &e in n.x.iter().chain(n.y.iter()) {
            *count.entry(e).or_default() += 1;
        }
        let singles = count.iter().rev().filter(|(_, &c)| c == 1).map(|(&e, _)| e).collect();
        let doubles = count.iter().rev().filter(|(_, &c)| c == 2).map(|(&e, _)| e).collect();
        (singles, doubles)
    }

    /// Members of the family with the same defect parity and defect at most one,
    /// in normalized form and sorted.
    pub fn family_members(&self) -> Result<Vec<Symbol>> {
        let d = self.defect();
        if d > 1 {
            return Err(Error::UnsupportedDefect(d));
        }
        let (singles, doubles) = self.singles_and_doubles();
        let k = singles.len().div_ceil(2);
        let mut out = BTreeSet::new();
        for mask in 0u64..(1u64 << singles.len()) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut x = doubles.clone();
            let mut y = doubles.clone();
            for (b, &s) in singles.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    x.push(s);
                } else {
                    y.push(s);
                }
            }
            out.insert(Symbol::new(x, y)?.normalize());
        }
        Ok(out.into_iter().collect())
    }

    /// The unique special symbol in the family.
    pub fn special_member(&self) -> Symbol {
        let (singles, doubles) = self.singles_and_doubles();
        let mut x = doubles.clone();
        let mut y = doubles;
        for (k, &s) in singles.iter().enumerate() {
            if k % 2 == 0 {
                x.push(s);
            } else {
                y.push(s);
            }
        }
        Symbol::new(x, y).expect("disjoint rows").normalize()
    }

    /// Complement duality: `X' = [0,d] - (d - Y)`, `Y' = [0,d] - (d - X)`.
    pub fn dual(&self) -> Symbol {
        let d = self.x.iter().chain(self.y.iter()).copied().max().unwrap_or(0);
        let comp = |r: &[u32]| -> Vec<u32> {
            let gone: BTreeSet<u32> = r.iter().map(|e| d - e).collect();
            (0..=d).rev().filter(|e| !gone.contains(e)).collect()
        };
        Symbol {
            x: comp(&self.y),
            y: comp(&self.x),
        }
        .normalize()
    }
}

/// Symbol of a bipartition in the odd-defect setting: rows `α + [r..0]` and `β + [r-1..0]`.
pub fn symb_b(alpha: &Partition, beta: &Partition) -> Symbol {
    let r = alpha.len().saturating_sub(1).max(beta.len());
    Symbol {
        x: staircase_add(alpha, r + 1),
        y: staircase_add(beta, r),
    }
    .normalize()
}

/// Symbol of a bipartition in the even-defect setting: both rows `+ [r-1..0]`.
pub fn symb_d(alpha: &Partition, beta: &Partition) -> Symbol {
    let r = alpha.len().max(beta.len());
    Symbol {
        x: staircase_add(alpha, r),
        y: staircase_add(beta, r),
    }
    .normalize()
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |r: &[u32]| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({{{}}},{{{}}})", j(&self.x), j(&self.y))
    }
}

/// Parses `X;Y`, for instance `2,0;0`. Either row may be empty.
impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let perr = || Error::Parse {
            what: "symbol",
            input: s.to_string(),
        };
        let (a, b) = s.split_once(';').ok_or_else(perr)?;
        let parse_row = |t: &str| -> Result<Vec<u32>> {
            let t = t.trim().trim_start_matches('{').trim_end_matches('}');
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|e| e.trim().parse::<u32>().map_err(|_| perr()))
                .collect()
        };
        Symbol::new(parse_row(a)?, parse_row(b)?)
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Symbol", 4)?;
        st.serialize_field("X", &self.x)?;
        st.serialize_field("Y", &self.y)?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("defect", &self.defect())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(x: &[u32], y: &[u32]) -> Symbol {
        Symbol::new(x.to_vec(), y.to_vec()).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rank_and_defect() {
        let s = sym(&[5, 2, 0], &[3, 0]);
        assert_eq!(s.rank(), 6);
        assert_eq!(s.defect(), 1);
        assert_eq!(sym(&[2, 0], &[0]).rank(), 1);
        assert_eq!(sym(&[], &[]).rank(), 0);
    }

    #[test]
    fn shift_preserves_rank_and_normal_form() {
        let s = sym(&[3, 1], &[2]);
        let t = s.shifted(3);
        assert_eq!(t.rank(), s.rank());
        assert_eq!(t.normalize(), s.normalize());
        assert!(t.equivalent(&s));
    }

    #[test]
    fn normalize_orients_rows() {
        assert_eq!(sym(&[1], &[2, 0]).normalize(), sym(&[2, 0], &[1]));
        assert_eq!(sym(&[1], &[2]).normalize(), sym(&[2], &[1]));
        assert_eq!(sym(&[1, 0], &[1, 0]).normalize(), sym(&[], &[]));
    }

    #[test]
    fn repeated_entries_rejected() {
        assert!(Symbol::new(vec![1, 1], vec![]).is_err());
    }

    #[test]
    fn bipartition_round_trip() {
        let s = sym(&[5, 2, 0], &[3, 0]);
        assert_eq!(s.bipartition().unwrap(), (p("3,1"), p("2")));
        assert_eq!(symb_b(&p("3,1"), &p("2")), s.normalize());
        assert_eq!(symb_b(&p("1,1"), &Partition::empty()), sym(&[2, 1], &[0]).normalize());
        assert_eq!(symb_d(&p("1"), &p("1")), sym(&[1], &[1]));
        assert_eq!(symb_b(&Partition::empty(), &Partition::empty()), sym(&[0], &[]));
        assert!(sym(&[3, 2, 1], &[]).bipartition().is_err());
    }

    #[test]
    fn special_symbols() {
        assert!(sym(&[2, 0], &[0]).is_special());
        assert!(sym(&[1, 0], &[1]).is_special());
        assert!(sym(&[2, 0], &[1]).is_special());
        assert!(!sym(&[2, 1], &[0]).is_special());
        assert!(!symb_b(&p("1,1"), &Partition::empty()).is_special());
        assert!(!symb_b(&Partition::empty(), &p("2")).is_special());
    }

    #[test]
    fn family_of_rank_two() {
        let a = symb_b(&p("1,1"), &Partition::empty());
        let b = symb_b(&p("1"), &p("1"));
        let c = symb_b(&Partition::empty(), &p("2"));
        let key = a.family_key();
        assert_eq!(key, b.family_key());
        assert_eq!(key, c.family_key());
        assert_eq!(key.entries, vec![2, 1, 0]);
        assert!(key.doubled.is_empty());
        assert_eq!(a.shift().family_key(), key);
        let mut expect = vec![a.clone(), b.clone(), c.clone()];
        expect.sort();
        assert_eq!(a.family_members().unwrap(), expect);
        assert_eq!(a.special_member(), b);
        assert!(b.is_special());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(sym(&[2, 0], &[0]).dual(), sym(&[1, 0], &[1]));
        assert_eq!(sym(&[1, 0], &[1]).dual(), sym(&[2, 0], &[0]).normalize());
        let s = sym(&[3, 1, 0], &[2, 0]);
        assert_eq!(s.dual(), s.normalize());
    }

    #[test]
    fn parse_and_display() {
        let s: Symbol = "2,0;0".parse().unwrap();
        assert_eq!(s, sym(&[2, 0], &[0]));
        assert_eq!(s.to_string(), "({2,0},{0})");
        let e: Symbol = "0;".parse().unwrap();
        assert_eq!(e, sym(&[0], &[]));
        assert!("2,0".parse::<Symbol>().is_err());
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j["rank"], 1);
        assert_eq!(j["X"], serde_json::json!([2, 0]));
    }
}
