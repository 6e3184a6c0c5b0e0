//! Symplectic and orthogonal partitions, their special elements, intervals and the
//! sequence `ζ` attached to an interval decomposition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, IntSequence, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// Partitions of `2n` whose odd parts have even multiplicity.
    Symp,
    /// Partitions of `2n+1` whose even parts have even multiplicity.
    OrthOdd,
    /// Partitions of `2n` whose even parts have even multiplicity.
    OrthEven,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Symp, Kind::OrthOdd, Kind::OrthEven];

    /// Parity of the values carrying signs (`Jord_bp`).
    pub fn jord_parity(self) -> u32 {
        match self {
            Kind::Symp => 0,
            Kind::OrthOdd | Kind::OrthEven => 1,
        }
    }

    /// Size `2n` or `2n+1` of the partitions of rank `n`.
    pub fn size_for_rank(self, n: u32) -> u32 {
        match self {
            Kind::OrthOdd => 2 * n + 1,
            _ => 2 * n,
        }
    }

    /// The kind on the dual side.
    pub fn dual(self) -> Kind {
        match self {
            Kind::Symp => Kind::OrthOdd,
            Kind::OrthOdd => Kind::Symp,
            Kind::OrthEven => Kind::OrthEven,
        }
    }

    /// Sign vectors are taken modulo the diagonal for orthogonal kinds.
    pub fn modulo_diagonal(self) -> bool {
        self != Kind::Symp
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Symp => "symp",
            Kind::OrthOdd => "orth-odd",
            Kind::OrthEven => "orth-even",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "symp" | "c" | "sp" | "symplectic" => Ok(Kind::Symp),
            "orth-odd" | "b" | "so-odd" => Ok(Kind::OrthOdd),
            "orth-even" | "d" | "so-even" => Ok(Kind::OrthEven),
            _ => Err(Error::Parse {
                what: "kind",
                input: s.to_string(),
            }),
        }
    }
}

pub fn in_class(lambda: &Partition, kind: Kind) -> bool {
    let size_ok = match kind {
        Kind::OrthOdd => lambda.size() % 2 == 1,
        _ => lambda.size().is_multiple_of(2),
    };
    let bad_parity = 1 - kind.jord_parity();
    size_ok
        && lambda
            .values()
            .into_iter()
            .all(|i| i % 2 != bad_parity || lambda.m(i).is_multiple_of(2))
}

pub fn check_class(lambda: &Partition, kind: Kind) -> Result<()> {
    if in_class(lambda, kind) {
        Ok(())
    } else {
        Err(Error::WrongClass {
            partition: lambda.to_string(),
            kind,
        })
    }
}

/// Parity conditions on consecutive parts; assumes `lambda` lies in the class.
pub fn is_special(lambda: &Partition, kind: Kind) -> bool {
    let same = |a: usize, b: usize| lambda.get(a) % 2 == lambda.get(b) % 2;
    let l = lambda.len() + 2;
    match kind {
        Kind::Symp | Kind::OrthEven => (1..=l).step_by(2).all(|j| same(j, j + 1)),
        Kind::OrthOdd => lambda.get(1) % 2 == 1 && (2..=l).step_by(2).all(|j| same(j, j + 1)),
    }
}

pub fn check_special(lambda: &Partition, kind: Kind) -> Result<()> {
    check_class(lambda, kind)?;
    if is_special(lambda, kind) {
        Ok(())
    } else {
        Err(Error::NotSpecial {
            partition: lambda.to_string(),
            kind,
        })
    }
}

/// Values carrying a sign, in increasing order.
pub fn jord_bp(lambda: &Partition, kind: Kind) -> Vec<u32> {
    let p = kind.jord_parity();
    let mut v: Vec<u32> = lambda
        .values()
        .into_iter()
        .filter(|&i| i % 2 == p && i >= 1)
        .collect();
    v.reverse();
    v
}

/// Elements of `Jord_bp` with odd multiplicity, decreasing.
pub fn odd_mult_jord(lambda: &Partition, kind: Kind) -> Vec<u32> {
    let mut v: Vec<u32> = jord_bp(lambda, kind)
        .into_iter()
        .filter(|&i| lambda.m(i) % 2 == 1)
        .collect();
    v.reverse();
    v
}

pub fn class_partitions(kind: Kind, size: u32) -> Vec<Partition> {
    partitions_of(size)
        .into_iter()
        .filter(|p| in_class(p, kind))
        .collect()
}

pub fn special_partitions(kind: Kind, size: u32) -> Vec<Partition> {
    class_partitions(kind, size)
        .into_iter()
        .filter(|p| is_special(p, kind))
        .collect()
}

/// Upper end of an index range, with a sentinel above every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum JMax {
    Fin(usize),
    Inf,
}

impl JMax {
    pub fn finite(self) -> Option<usize> {
        match self {
            JMax::Fin(j) => Some(j),
            JMax::Inf => None,
        }
    }
}

impl fmt::Display for JMax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JMax::Fin(j) => write!(f, "{j}"),
            JMax::Inf => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    /// Values in decreasing order; a symplectic `Δ_min` ends with `0`.
    pub values: Vec<u32>,
    pub j_min: Option<usize>,
    pub j_max: JMax,
}

impl Interval {
    pub fn contains(&self, i: u32) -> bool {
        self.values.contains(&i)
    }

    pub fn max(&self) -> u32 {
        self.values[0]
    }

    /// Whether index `j` lies in `J(Δ)`.
    pub fn covers_index(&self, lambda: &Partition, j: usize) -> bool {
        let v = lambda.get(j);
        self.values.contains(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalStructure {
    pub kind: Kind,
    pub partition: Partition,
    /// Intervals in decreasing order, so `intervals[0]` is `Δ_max`.
    pub intervals: Vec<Interval>,
}

impl IntervalStructure {
    pub fn new(lambda: &Partition, kind: Kind) -> Result<Self> {
        check_special(lambda, kind)?;
        let ii = odd_mult_jord(lambda, kind);
        let mut ranges: Vec<(u32, Option<u32>)> = Vec::new();
        match kind {
            Kind::Symp => {
                let mut ii = ii.clone();
                if ii.len() % 2 == 1 {
                    ii.push(0);
                }
                for c in ii.chunks(2) {
                    ranges.push((c[1], Some(c[0])));
                }
            }
            Kind::OrthOdd => {
                if ii.len().is_multiple_of(2) {
                    return Err(Error::Internal(format!(
                        "odd orthogonal {lambda} has an even count of odd-multiplicity parts"
                    )));
                }
                ranges.push((ii[0], None));
                for c in ii[1..].chunks(2) {
                    ranges.push((c[1], Some(c[0])));
                }
            }
            Kind::OrthEven => {
                if ii.len() % 2 == 1 {
                    return Err(Error::Internal(format!(
                        "even orthogonal {lambda} has an odd count of odd-multiplicity parts"
                    )));
                }
                for c in ii.chunks(2) {
                    ranges.push((c[1], Some(c[0])));
                }
            }
        }
        let in_range = |i: u32| ranges.iter().any(|&(lo, hi)| lo <= i && hi.is_none_or(|h| i <= h));

        let present = lambda.values();
        let mut sets: Vec<Vec<u32>> = Vec::new();
        for &(lo, hi) in &ranges {
            let mut vals: Vec<u32> = present
                .iter()
                .copied()
                .filter(|&i| lo <= i && hi.is_none_or(|h| i <= h))
                .collect();
            if lo == 0 {
                vals.push(0);
            }
            sets.push(vals);
        }
        let mut singles: Vec<u32> = jord_bp(lambda, kind);
        if kind == Kind::Symp {
            singles.push(0);
        }
        for i in singles {
            let covered = if i == 0 {
                ranges.iter().any(|&(lo, _)| lo == 0)
            } else {
                in_range(i)
            };
            if !covered {
                sets.push(vec![i]);
            }
        }
        sets.sort_by(|a, b| b[0].cmp(&a[0]));

        let l = lambda.len();
        let intervals = sets
            .into_iter()
            .enumerate()
            .map(|(pos, values)| {
                let idx: Vec<usize> = (1..=l).filter(|&j| values.contains(&lambda.get(j))).collect();
                let has_zero = values.last() == Some(&0);
                let j_min = if kind == Kind::OrthOdd && pos == 0 {
                    None
                } else if let Some(&j) = idx.first() {
                    Some(j)
                } else {
                    Some(l + 1)
                };
                let j_max = if has_zero {
                    JMax::Inf
                } else {
                    JMax::Fin(*idx.last().expect("interval values occur in the partition"))
                };
                Interval {
                    values,
                    j_min,
                    j_max,
                }
            })
            .collect();
        Ok(IntervalStructure {
            kind,
            partition: lambda.clone(),
            intervals,
        })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn position_of(&self, i: u32) -> Option<usize> {
        self.intervals.iter().position(|d| d.contains(i))
    }

    pub fn delta_max(&self) -> Option<&Interval> {
        self.intervals.first()
    }

    pub fn delta_min(&self) -> Option<&Interval> {
        self.intervals.last()
    }

    /// Position of the interval whose index set contains `j`, for `j >= 1`.
    pub fn interval_of_index(&self, j: usize) -> Option<usize> {
        let v = self.partition.get(j);
        self.intervals.iter().position(|d| d.contains(v))
    }

    /// All defined `j_min` values.
    pub fn j_mins(&self) -> Vec<usize> {
        self.intervals.iter().filter_map(|d| d.j_min).collect()
    }

    pub fn j_maxs(&self) -> Vec<JMax> {
        self.intervals.iter().map(|d| d.j_max).collect()
    }

    /// `ζ_j = +1` at each `j_min(Δ)` and `-1` at each finite `j_max(Δ)`.
    pub fn zeta(&self) -> IntSequence {
        let mut z = IntSequence::default();
        for d in &self.intervals {
            if let Some(j) = d.j_min {
                z.set(j, z.get(j) + 1);
            }
            if let JMax::Fin(j) = d.j_max {
                z.set(j, z.get(j) - 1);
            }
        }
        z
    }
}

/// A map from `Jord_bp` values to signs. For orthogonal kinds the vector is
/// only meaningful up to a global sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignVector {
    pub values: BTreeMap<u32, i8>,
    pub modulo_diagonal: bool,
}

impl SignVector {
    pub fn trivial(keys: &[u32], modulo_diagonal: bool) -> Self {
        SignVector {
            values: keys.iter().map(|&k| (k, 1)).collect(),
            modulo_diagonal,
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, i8)>>(pairs: I, modulo_diagonal: bool) -> Self {
        SignVector {
            values: pairs.into_iter().collect(),
            modulo_diagonal,
        }
    }

    /// Every sign vector on `keys`; for quotients only the canonical lifts.
    pub fn all(keys: &[u32], modulo_diagonal: bool) -> Vec<SignVector> {
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << keys.len()) {
            let sv = SignVector {
                values: keys
                    .iter()
                    .enumerate()
                    .map(|(b, &k)| (k, if mask >> b & 1 == 1 { -1 } else { 1 }))
                    .collect(),
                modulo_diagonal,
            };
            if !modulo_diagonal || sv.is_canonical() {
                out.push(sv);
            }
        }
        out
    }

    pub fn keys(&self) -> Vec<u32> {
        self.values.keys().copied().collect()
    }

    /// The sign at `i`; values outside the support count as `+1`.
    pub fn get(&self, i: u32) -> i8 {
        self.values.get(&i).copied().unwrap_or(1)
    }

    pub fn flipped(&self) -> SignVector {
        SignVector {
            values: self.values.iter().map(|(&k, &v)| (k, -v)).collect(),
            modulo_diagonal: self.modulo_diagonal,
        }
    }

    fn is_canonical(&self) -> bool {
        self.values.values().next_back().is_none_or(|&v| v == 1)
    }

    /// For quotients, the lift with `+1` on the largest key.
    pub fn canonical(&self) -> SignVector {
        if self.modulo_diagonal && !self.is_canonical() {
            self.flipped()
        } else {
            self.clone()
        }
    }

    pub fn same_class(&self, other: &SignVector) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn check_keys(&self, expected: &[u32]) -> Result<()> {
        let got = self.keys();
        if got != expected {
            return Err(Error::KeyMismatch {
                expected: expected.to_vec(),
                got,
            });
        }
        Ok(())
    }

    /// The vector on exactly `keys`, with `+1` wherever no sign was given.
    pub fn extended_to(&self, keys: &[u32]) -> Result<SignVector> {
        if self.values.keys().any(|k| !keys.contains(k)) {
            return Err(Error::KeyMismatch {
                expected: keys.to_vec(),
                got: self.keys(),
            });
        }
        Ok(SignVector::from_pairs(keys.iter().map(|&k| (k, self.get(k))), self.modulo_diagonal))
    }

    /// Parses `2:+,4:-` (also `2=1,4=-1`); the empty string is the empty vector.
    pub fn parse(s: &str, modulo_diagonal: bool) -> Result<Self> {
        let perr = || Error::Parse {
            what: "sign vector",
            input: s.to_string(),
        };
        let mut values = BTreeMap::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = item.split_once([':', '=']).ok_or_else(perr)?;
            let k: u32 = k.trim().parse().map_err(|_| perr())?;
            let v = match v.trim() {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                _ => return Err(perr()),
            };
            values.insert(k, v);
        }
        Ok(SignVector {
            values,
            modulo_diagonal,
        })
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .values
            .iter()
            .map(|(k, v)| format!("{k}:{}", if *v > 0 { "+" } else { "-" }))
            .collect();
        write!(f, "{}", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn class_membership() {
        assert!(in_class(&p("2,1,1"), Kind::Symp));
        assert!(!in_class(&p("3,1"), Kind::Symp));
        assert!(in_class(&p("3,1,1"), Kind::OrthOdd));
        assert!(!in_class(&p("3,2"), Kind::OrthOdd));
        assert!(in_class(&p("2,2"), Kind::OrthEven));
        assert!(in_class(&p("2,2"), Kind::Symp));
        assert!(!in_class(&p("2,2"), Kind::OrthOdd));
        assert!(in_class(&Partition::empty(), Kind::Symp));
    }

    #[test]
    fn special_examples() {
        assert!(is_special(&p("2,2"), Kind::Symp));
        assert!(!is_special(&p("2,1,1"), Kind::Symp));
        assert!(is_special(&p("3,1,1"), Kind::OrthOdd));
        assert!(!is_special(&p("2,2,1"), Kind::OrthOdd));
        assert!(is_special(&p("3,1"), Kind::OrthEven));
        assert!(is_special(&p("2,2,1,1"), Kind::OrthEven));
        assert!(!is_special(&p("3,2,2,1"), Kind::OrthEven));
    }

    #[test]
    fn jord_values() {
        assert_eq!(jord_bp(&p("4,2,2,1,1"), Kind::Symp), vec![2, 4]);
        assert_eq!(jord_bp(&p("3,1,1"), Kind::OrthOdd), vec![1, 3]);
        assert_eq!(odd_mult_jord(&p("3,1,1"), Kind::OrthOdd), vec![3]);
    }

    #[test]
    fn intervals_three_one_one() {
        let s = IntervalStructure::new(&p("3,1,1"), Kind::OrthOdd).unwrap();
        assert_eq!(s.intervals.len(), 2);
        assert_eq!(s.intervals[0].values, vec![3]);
        assert_eq!(s.intervals[0].j_min, None);
        assert_eq!(s.intervals[0].j_max, JMax::Fin(1));
        assert_eq!(s.intervals[1].values, vec![1]);
        assert_eq!(s.intervals[1].j_min, Some(2));
        assert_eq!(s.intervals[1].j_max, JMax::Fin(3));
        assert_eq!(s.zeta(), IntSequence::from_vec(vec![-1, 1, -1]));
    }

    #[test]
    fn intervals_symplectic() {
        let s = IntervalStructure::new(&p("1,1"), Kind::Symp).unwrap();
        assert_eq!(s.intervals.len(), 1);
        assert_eq!(s.intervals[0].values, vec![0]);
        assert_eq!(s.intervals[0].j_min, Some(3));
        assert_eq!(s.intervals[0].j_max, JMax::Inf);
        assert_eq!(s.zeta(), IntSequence::from_vec(vec![0, 0, 1]));

        let t = IntervalStructure::new(&p("2"), Kind::Symp).unwrap();
        assert_eq!(t.intervals[0].values, vec![2, 0]);
        assert_eq!(t.intervals[0].j_min, Some(1));

        let u = IntervalStructure::new(&p("2,2"), Kind::Symp).unwrap();
        let vals: Vec<Vec<u32>> = u.intervals.iter().map(|d| d.values.clone()).collect();
        assert_eq!(vals, vec![vec![2], vec![0]]);

        let e = IntervalStructure::new(&Partition::empty(), Kind::Symp).unwrap();
        assert_eq!(e.intervals[0].j_min, Some(1));
        assert!(IntervalStructure::new(&p("2,1,1"), Kind::Symp).is_err());
    }

    #[test]
    fn intervals_even_orthogonal() {
        let s = IntervalStructure::new(&p("3,1"), Kind::OrthEven).unwrap();
        assert_eq!(s.intervals.len(), 1);
        assert_eq!(s.intervals[0].values, vec![3, 1]);
        assert_eq!(s.intervals[0].j_min, Some(1));
        assert_eq!(s.intervals[0].j_max, JMax::Fin(2));
        assert!(IntervalStructure::new(&p("2,2"), Kind::OrthEven).unwrap().is_empty());
    }

    #[test]
    fn sign_vectors() {
        let all = SignVector::all(&[1, 3], true);
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|s| s.get(3) == 1));
        let v = SignVector::parse("1:+,3:-", true).unwrap();
        assert_eq!(v.canonical().get(1), -1);
        assert!(v.same_class(&v.flipped()));
        assert_eq!(SignVector::all(&[2, 4], false).len(), 4);
        assert_eq!(v.to_string(), "1:+,3:-");
        assert!(SignVector::parse("1:x", false).is_err());
    }
}
