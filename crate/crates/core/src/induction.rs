//! Levi induction, endoscopic induction of a special pair, relative intervals and the
//! decomposition of an all-even symplectic partition into a regularly inducing pair.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classical::{check_class, jord_bp, IntervalStructure, JMax, Kind};
use crate::duality::{collapse_below, dual_general, dual_special};
use crate::error::{Error, Result};
use crate::partitions::{IntSequence, Partition};

/// Sizes `(n_1, ..., n_t; n_0)` of a Levi factor `GL(n_1) x ... x GL(n_t) x G(n_0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviShape {
    pub gl_sizes: Vec<u32>,
    pub core_size: u32,
}

impl LeviShape {
    pub fn new(gl_sizes: Vec<u32>, core_size: u32) -> Result<Self> {
        if gl_sizes.contains(&0) {
            return Err(Error::Precondition("GL block sizes must be positive".into()));
        }
        Ok(LeviShape { gl_sizes, core_size })
    }

    pub fn total(&self) -> u32 {
        self.gl_sizes.iter().sum::<u32>() + self.core_size
    }

    /// Every shape of total `n`, GL blocks in every order.
    pub fn all_of_total(n: u32) -> Vec<LeviShape> {
        fn compositions(m: u32) -> Vec<Vec<u32>> {
            if m == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=m {
                for mut rest in compositions(m - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        (0..=n)
            .flat_map(|n0| {
                compositions(n - n0)
                    .into_iter()
                    .map(move |gl| LeviShape { gl_sizes: gl, core_size: n0 })
            })
            .collect()
    }

    fn check(&self, parts: &[Partition], core: Kind) -> Result<()> {
        if parts.len() != self.gl_sizes.len() + 1 {
            return Err(Error::Precondition(format!(
                "{} partitions given for {} GL blocks and a core",
                parts.len(),
                self.gl_sizes.len()
            )));
        }
        for (p, &n) in parts.iter().zip(&self.gl_sizes) {
            if p.size() != n {
                return Err(Error::Precondition(format!("{p} is not a partition of {n}")));
            }
        }
        let lam0 = &parts[self.gl_sizes.len()];
        let want = core.size_for_rank(self.core_size);
        if lam0.size() != want {
            return Err(Error::Precondition(format!("core {lam0} is not a partition of {want}")));
        }
        check_class(lam0, core)
    }
}

/// Largest partition of the class dominated by `mu`.
pub fn orth_collapse_below(mu: &Partition, kind: Kind) -> Partition {
    collapse_below(mu, kind)
}

/// Induction from `P(n_1) x ... x P^orth(2n_0+1)` to `P^orth(2n+1)`.
pub fn levi_induce(shape: &LeviShape, parts: &[Partition]) -> Result<Partition> {
    shape.check(parts, Kind::OrthOdd)?;
    let mut target = parts[shape.gl_sizes.len()].clone();
    for p in &parts[..shape.gl_sizes.len()] {
        target = target.sum(&p.sum(p));
    }
    Ok(orth_collapse_below(&target, Kind::OrthOdd))
}

/// `(λ_1 ∪ λ_1) ∪ ... ∪ λ_0` on `P(n_1) x ... x P^symp(2n_0)`.
pub fn cup(shape: &LeviShape, parts: &[Partition]) -> Result<Partition> {
    shape.check(parts, Kind::Symp)?;
    let mut out = parts[shape.gl_sizes.len()].clone();
    for p in &parts[..shape.gl_sizes.len()] {
        out = out.union(&p.union(p));
    }
    Ok(out)
}

/// Transpose on the GL factors and `d` on the symplectic core.
pub fn dual_tuple(shape: &LeviShape, parts: &[Partition]) -> Result<Vec<Partition>> {
    shape.check(parts, Kind::Symp)?;
    let t = shape.gl_sizes.len();
    let mut out: Vec<Partition> = parts[..t].iter().map(Partition::transpose).collect();
    out.push(dual_general(&parts[t], Kind::Symp)?);
    Ok(out)
}

/// A relative interval `D` with its index range `J(D)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelativeInterval {
    /// Values in decreasing order.
    pub values: Vec<u32>,
    pub j_min: usize,
    pub j_max: JMax,
    /// For a range of the second type, the factor `d ∈ {1, 2}` and the position of the
    /// interval of `λ_d` containing it.
    pub owner: Option<(u8, usize)>,
}

/// Endoscopic induction data of a special pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndoData {
    pub lambda1: Partition,
    pub lambda2: Partition,
    #[serde(skip)]
    pub int1: IntervalStructure,
    #[serde(skip)]
    pub int2: IntervalStructure,
    pub j_plus: Vec<usize>,
    pub j_minus: Vec<usize>,
    pub xi: IntSequence,
    pub induced: Partition,
    pub relative_intervals: Vec<RelativeInterval>,
    pub regular: bool,
    /// Present only for a regular induction.
    pub tau_rel: Option<BTreeMap<u32, u8>>,
}

/// `ind(λ_1, λ_2) = λ_1 + λ_2 + ξ` together with its relative intervals.
pub fn endo_induce(lambda1: &Partition, lambda2: &Partition) -> Result<EndoData> {
    let int1 = IntervalStructure::new(lambda1, Kind::Symp)?;
    let int2 = IntervalStructure::new(lambda2, Kind::OrthEven)?;
    let mins: Vec<usize> = int1.j_mins().into_iter().chain(int2.j_mins()).collect();
    let maxs: Vec<usize> = int1
        .j_maxs()
        .into_iter()
        .chain(int2.j_maxs())
        .filter_map(JMax::finite)
        .collect();
    let mixed = |j: usize| lambda1.get(j).is_multiple_of(2) && lambda2.get(j) % 2 == 1;
    let l2 = lambda2.len();
    let j_plus: Vec<usize> = (1..=l2).filter(|&j| mixed(j) && mins.contains(&j)).collect();
    let j_minus: Vec<usize> = (1..=l2).filter(|&j| mixed(j) && maxs.contains(&j)).collect();
    let mut xi = IntSequence::default();
    for &j in &j_plus {
        xi.set(j, 1);
    }
    for &j in &j_minus {
        xi.set(j, -1);
    }
    let induced = lambda1.sum(lambda2).add_seq(&xi)?;
    check_class(&induced, Kind::Symp)
        .map_err(|_| Error::Internal(format!("ind({lambda1}; {lambda2}) = {induced} is not symplectic")))?;

    let relative_intervals = relative_intervals(&induced, &int1, &int2);
    let regular = relative_intervals.iter().all(|d| d.values.len() == 1);
    let mut data = EndoData {
        lambda1: lambda1.clone(),
        lambda2: lambda2.clone(),
        int1,
        int2,
        j_plus,
        j_minus,
        xi,
        induced,
        relative_intervals,
        regular,
        tau_rel: None,
    };
    if regular {
        data.tau_rel = Some(data.compute_tau_rel()?);
    }
    Ok(data)
}

fn relative_intervals(lambda: &Partition, int1: &IntervalStructure, int2: &IntervalStructure) -> Vec<RelativeInterval> {
    let ends = |st: &IntervalStructure| -> Vec<(JMax, JMax)> {
        st.intervals
            .iter()
            .map(|d| (JMax::Fin(d.j_min.expect("symplectic and even orthogonal intervals have j_min")), d.j_max))
            .collect()
    };
    let e1 = ends(int1);
    let e2 = ends(int2);
    let mut all: Vec<JMax> = e1.iter().chain(&e2).flat_map(|&(a, b)| [a, b]).collect();
    all.sort();
    all.dedup();
    let mins1: Vec<JMax> = e1.iter().map(|e| e.0).collect();
    let mins2: Vec<JMax> = e2.iter().map(|e| e.0).collect();
    let maxs1: Vec<JMax> = e1.iter().map(|e| e.1).collect();
    let maxs2: Vec<JMax> = e2.iter().map(|e| e.1).collect();

    let values_of = |lo: usize, hi: JMax| -> Vec<u32> {
        let top = match hi {
            JMax::Fin(h) => h,
            JMax::Inf => lambda.len().max(lo),
        };
        let mut v: Vec<u32> = (lo..=top).map(|j| lambda.get(j)).collect();
        if hi == JMax::Inf {
            v.push(0);
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.dedup();
        v
    };

    let mut out = Vec::new();
    for &j in &all {
        let (single_plus, single_minus) = (
            mins1.contains(&j) && mins2.contains(&j),
            maxs1.contains(&j) && maxs2.contains(&j),
        );
        if let JMax::Fin(jj) = j {
            if single_plus || single_minus {
                out.push(RelativeInterval {
                    values: values_of(jj, j),
                    j_min: jj,
                    j_max: j,
                    owner: None,
                });
            }
        }
    }
    for w in all.windows(2) {
        let (JMax::Fin(j), j2) = (w[0], w[1]) else { continue };
        let hits: Vec<(u8, usize)> = e1
            .iter()
            .enumerate()
            .map(|(p, e)| (1u8, p, e))
            .chain(e2.iter().enumerate().map(|(p, e)| (2u8, p, e)))
            .filter(|(_, _, &(a, b))| a <= JMax::Fin(j) && j2 <= b)
            .map(|(d, p, _)| (d, p))
            .collect();
        if let [owner] = hits[..] {
            out.push(RelativeInterval {
                values: values_of(j, j2),
                j_min: j,
                j_max: j2,
                owner: Some(owner),
            });
        }
    }
    out.sort_by_key(|a| (a.j_min, a.j_max));
    out
}

impl EndoData {
    /// The relative interval containing the value `i`.
    pub fn relative_of(&self, i: u32) -> Option<&RelativeInterval> {
        self.relative_intervals.iter().find(|d| d.values.contains(&i))
    }

    fn compute_tau_rel(&self) -> Result<BTreeMap<u32, u8>> {
        let mut out = BTreeMap::new();
        for i in jord_bp(&self.induced, Kind::Symp) {
            let m = self.induced.m(i);
            let t = if m == 1 {
                0
            } else {
                let d = self
                    .relative_of(i)
                    .and_then(|r| r.owner)
                    .ok_or_else(|| Error::Internal(format!("value {i} of multiplicity {m} has no owning interval")))?
                    .0;
                (d + 1) % 2
            };
            out.insert(i, t);
        }
        Ok(out)
    }

    /// Structural facts every endoscopic induction satisfies; returns the first violated one.
    pub fn structural_violation(&self) -> Option<String> {
        let (p, m) = (&self.j_plus, &self.j_minus);
        if p.len() != m.len() {
            return Some(format!("|J+| = {} but |J-| = {}", p.len(), m.len()));
        }
        let mut merged = Vec::new();
        for (a, b) in p.iter().zip(m) {
            merged.push(*a);
            merged.push(*b);
        }
        if merged.windows(2).any(|w| w[0] >= w[1]) {
            return Some(format!("J+ {p:?} and J- {m:?} do not interleave"));
        }
        if p.iter().any(|j| j % 2 == 0) || m.iter().any(|j| j % 2 == 1) {
            return Some(format!("J+ {p:?} or J- {m:?} has the wrong parity"));
        }
        let mut covered: Vec<u32> = self.relative_intervals.iter().flat_map(|d| d.values.clone()).collect();
        let total = covered.len();
        covered.sort_unstable();
        covered.dedup();
        let mut expected = jord_bp(&self.induced, Kind::Symp);
        expected.push(0);
        expected.sort_unstable();
        if covered.len() != total || covered != expected {
            return Some(format!(
                "relative intervals {:?} do not partition {expected:?}",
                self.relative_intervals.iter().map(|d| &d.values).collect::<Vec<_>>()
            ));
        }
        if let Some(t) = &self.tau_rel {
            if t.iter().any(|(&i, &v)| v != 0 && self.induced.m(i) == 1) {
                return Some("tau_rel is nonzero on a multiplicity one value".into());
            }
        }
        None
    }
}

/// Checks reported with a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecomposeChecks {
    pub regular: bool,
    pub dual_union: bool,
    pub tau_match: bool,
}

impl DecomposeChecks {
    pub fn all(&self) -> bool {
        self.regular && self.dual_union && self.tau_match
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n1: u32,
    pub n2: u32,
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub checks: DecomposeChecks,
}

/// Validates `τ` on `Jord_bp(λ)`; absent values default to `0`.
pub fn complete_tau(lambda: &Partition, tau: &BTreeMap<u32, u8>) -> Result<BTreeMap<u32, u8>> {
    let keys = jord_bp(lambda, Kind::Symp);
    if let Some(&bad) = tau.keys().find(|k| !keys.contains(k)) {
        return Err(Error::Precondition(format!("{bad} is not a part of {lambda}")));
    }
    let mut out = BTreeMap::new();
    for i in keys {
        let t = tau.get(&i).copied().unwrap_or(0) % 2;
        if t == 1 && lambda.m(i) == 1 {
            return Err(Error::Precondition(format!("tau({i}) must be 0 since {i} has multiplicity 1")));
        }
        out.insert(i, t);
    }
    Ok(out)
}

/// Every admissible `τ` for an all-even symplectic `λ`.
pub fn admissible_taus(lambda: &Partition) -> Vec<BTreeMap<u32, u8>> {
    let free: Vec<u32> = jord_bp(lambda, Kind::Symp).into_iter().filter(|&i| lambda.m(i) >= 2).collect();
    (0..1u32 << free.len())
        .map(|mask| {
            jord_bp(lambda, Kind::Symp)
                .into_iter()
                .map(|i| {
                    let t = free.iter().position(|&f| f == i).map_or(0, |b| ((mask >> b) & 1) as u8);
                    (i, t)
                })
                .collect()
        })
        .collect()
}

/// Linkage classes with at least two elements for one factor: `(first, last)` with
/// `last = None` for the infinite class.
fn classes(lambda: &Partition, tau: &BTreeMap<u32, u8>, d: u8) -> Vec<(usize, Option<usize>)> {
    let l = lambda.len();
    let tau_at = |v: u32| if v == 0 { 0 } else { tau[&v] };
    let linked = |j: usize| {
        let (a, b) = (lambda.get(j), lambda.get(j + 1));
        (a == b && tau_at(a) % 2 == (d + 1) % 2) || (j % 2 == 1 && a > b)
    };
    let mut out = Vec::new();
    let mut j = 1;
    while j <= l + 1 {
        if linked(j) {
            let start = j;
            while j <= l + 1 && linked(j) {
                j += 1;
            }
            // j > l+1 means the d = 1 class runs to infinity.
            out.push((start, if j > l + 1 { None } else { Some(j) }));
        }
        j += 1;
    }
    out
}

/// Splits an all-even symplectic `λ` with admissible `τ` into a special pair that
/// induces it regularly, with matching duals and `τ_{λ_1,λ_2} = τ`.
pub fn decompose(lambda: &Partition, tau: &BTreeMap<u32, u8>) -> Result<Decomposition> {
    check_class(lambda, Kind::Symp)?;
    if !lambda.all_even() {
        return Err(Error::Precondition(format!("{lambda} has an odd part")));
    }
    let tau = complete_tau(lambda, tau)?;
    let l = lambda.len();
    let cls = [classes(lambda, &tau, 1), classes(lambda, &tau, 2)];
    let p = |d: usize, j: usize| -> u32 {
        cls[d].iter().any(|&(a, b)| a <= j && b.is_none_or(|b| j <= b)) as u32
    };
    let is_last = |d: usize, j: usize| cls[d].iter().any(|&(_, b)| b == Some(j));
    let x = |j: usize| -> i64 {
        if j == 0 {
            0
        } else if j % 2 == 1 && lambda.get(j) > lambda.get(j + 1) {
            1
        } else if j.is_multiple_of(2) && lambda.get(j - 1) > lambda.get(j) {
            -1
        } else {
            0
        }
    };

    let mut rows = [vec![0i64; l + 3], vec![0i64; l + 3]];
    for j in (1..=l + 1).rev() {
        let total = lambda.get(j) as i64 - lambda.get(j + 1) as i64 + x(j + 1) - x(j);
        let parity = |d: usize| (p(d, j) + p(d, j + 1)) % 2;
        let case_a = |d: usize| (j % 2 == 0 && p(d, j) == 1 && !is_last(d, j)) || (j % 2 == 1 && p(d, j) == 0);
        let case_b = |d: usize| j % 2 == 0 && is_last(d, j);
        let smallest_positive = |d: usize| if parity(d) == 1 { 1 } else { 2 };
        let e: [i64; 2] = if case_a(0) {
            [0, total]
        } else if case_a(1) {
            [total, 0]
        } else if case_b(0) {
            let e1 = smallest_positive(0);
            [e1, total - e1]
        } else if case_b(1) {
            let e2 = smallest_positive(1);
            [total - e2, e2]
        } else {
            [0, total]
        };
        for d in 0..2 {
            let ok = e[d] >= 0
                && (e[d] as u32) % 2 == parity(d)
                && (!case_a(d) || e[d] == 0)
                && (!case_b(d) || e[d] > 0);
            if !ok {
                return Err(Error::Internal(format!(
                    "decomposition of {lambda}: increment {} for factor {} at index {j} violates its constraints",
                    e[d],
                    d + 1
                )));
            }
            rows[d][j] = rows[d][j + 1] + e[d];
        }
    }
    let to_partition = |r: &[i64]| Partition::from_unsorted(r[1..].iter().map(|&v| v as u32).collect());
    let lambda1 = to_partition(&rows[0]);
    let lambda2 = to_partition(&rows[1]);

    let endo = endo_induce(&lambda1, &lambda2)?;
    if endo.induced != *lambda {
        return Err(Error::Internal(format!(
            "decomposition ({lambda1}; {lambda2}) induces {} instead of {lambda}",
            endo.induced
        )));
    }
    let d = dual_special(lambda, Kind::Symp)?;
    let du = dual_special(&lambda1, Kind::Symp)?.union(&dual_special(&lambda2, Kind::OrthEven)?);
    let checks = DecomposeChecks {
        regular: endo.regular,
        dual_union: du == d,
        tau_match: endo.tau_rel.as_ref() == Some(&tau),
    };
    Ok(Decomposition {
        n1: lambda1.size() / 2,
        n2: lambda2.size() / 2,
        lambda1,
        lambda2,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tau(pairs: &[(u32, u8)]) -> BTreeMap<u32, u8> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn levi_and_cup_examples() {
        let shape = LeviShape::new(vec![1], 1).unwrap();
        assert_eq!(levi_induce(&shape, &[p("1"), p("1,1,1")]).unwrap(), p("3,1,1"));
        assert_eq!(levi_induce(&shape, &[p("1"), p("3")]).unwrap(), p("5"));
        assert_eq!(cup(&shape, &[p("1"), p("1,1")]).unwrap(), p("1,1,1,1"));
        let core = LeviShape::new(vec![], 2).unwrap();
        assert_eq!(levi_induce(&core, &[p("3,1,1")]).unwrap(), p("3,1,1"));
        assert_eq!(cup(&LeviShape::new(vec![2], 0).unwrap(), &[p("2"), Partition::empty()]).unwrap(), p("2,2"));
    }

    #[test]
    fn shapes_are_counted() {
        // compositions of m number 2^(m-1), plus the empty one for m = 0
        assert_eq!(LeviShape::all_of_total(3).len(), 1 + 1 + 2 + 4);
    }

    #[test]
    fn endo_examples() {
        let e = endo_induce(&p("2"), &p("1,1")).unwrap();
        assert_eq!((e.j_plus.clone(), e.j_minus.clone()), (vec![1], vec![2]));
        assert_eq!(e.xi, IntSequence::from_vec(vec![1, -1]));
        assert_eq!(e.induced, p("4"));
        assert!(e.regular);
        assert_eq!(e.tau_rel, Some(tau(&[(4, 0)])));

        let e = endo_induce(&p("1,1"), &p("1,1")).unwrap();
        assert!(e.j_plus.is_empty() && e.j_minus.is_empty());
        assert_eq!(e.induced, p("2,2"));
        assert_eq!(e.tau_rel, Some(tau(&[(2, 1)])));

        let e = endo_induce(&p("2,2"), &Partition::empty()).unwrap();
        assert_eq!(e.induced, p("2,2"));
        assert_eq!(e.tau_rel, Some(tau(&[(2, 0)])));
        assert_eq!(e.structural_violation(), None);
    }

    #[test]
    fn irregular_pair() {
        let e = endo_induce(&p("2"), &Partition::empty()).unwrap();
        assert_eq!(e.induced, p("2"));
        assert!(!e.regular);
        assert_eq!(e.tau_rel, None);
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&p("2,2"), &tau(&[(2, 0)])).unwrap();
        assert_eq!((d.lambda1.clone(), d.lambda2.clone()), (p("2,2"), Partition::empty()));
        assert!(d.checks.all());
        let d = decompose(&p("2,2"), &tau(&[(2, 1)])).unwrap();
        assert_eq!((d.lambda1.clone(), d.lambda2.clone(), d.n1, d.n2), (p("1,1"), p("1,1"), 1, 1));
        assert!(d.checks.all());
        // (2) with the empty second factor does not induce regularly, so the
        // construction moves everything into the orthogonal factor.
        let d = decompose(&p("2"), &BTreeMap::new()).unwrap();
        assert_eq!((d.lambda1.clone(), d.lambda2.clone()), (Partition::empty(), p("1,1")));
        assert!(d.checks.all());
    }

    #[test]
    fn decompose_rejects_bad_input() {
        assert!(decompose(&p("2,1,1"), &BTreeMap::new()).is_err());
        assert!(decompose(&p("4,2"), &tau(&[(4, 1)])).is_err());
        assert!(decompose(&p("4,2"), &tau(&[(6, 0)])).is_err());
    }

    #[test]
    fn admissible_tau_count() {
        assert_eq!(admissible_taus(&p("4,4,2")).len(), 2);
        assert_eq!(admissible_taus(&p("4,2")).len(), 1);
    }
}
