//! Exhaustive verification sweeps over every small instance of each identity.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::classical::{class_partitions, jord_bp, special_partitions, IntervalStructure, Kind, SignVector};
use crate::duality::{collapse_below, collapse_below_brute, dual_general, dual_special, dual_via_collapse, dual_via_zeta};
use crate::error::{Error, Result};
use crate::induction::{admissible_taus, cup, decompose, dual_tuple, endo_induce, levi_induce, LeviShape};
use crate::multiplicity::{
    build_context, certify, enumerate_support, enumerate_support_brute, wavefront_certificate, Form, QuadInput, Zeta,
};
use crate::partitions::{partition_tuples, partitions_of, Partition};
use crate::springer::{k_value, required_k, sp_collapse, sp_collapse_brute, sp_of_pair, springer_symbol, trivial_eps};
use crate::symbols::{symb_b, symb_d, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Duality,
    Springer,
    Collapse,
    Induction,
    Decompose,
    Multiplicity,
    Wavefront,
    Worked,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Duality,
        Suite::Springer,
        Suite::Collapse,
        Suite::Induction,
        Suite::Decompose,
        Suite::Multiplicity,
        Suite::Wavefront,
        Suite::Worked,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Springer => "springer",
            Suite::Collapse => "collapse",
            Suite::Induction => "induction",
            Suite::Decompose => "decompose",
            Suite::Multiplicity => "multiplicity",
            Suite::Wavefront => "wavefront",
            Suite::Worked => "worked",
        }
    }

    /// Parses a suite name or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse {
            what: "suite",
            input: s.to_string(),
        })
    }
}

/// Rank bounds for each sweep. Ranks are `n` with symplectic size `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub duality: u32,
    pub springer: u32,
    /// Bound on `S(λ)`.
    pub collapse_size: u32,
    pub levi: u32,
    pub monotone: u32,
    pub endo_pairs: u32,
    pub decompose: u32,
    pub remarks: u32,
    pub support: u32,
    pub wavefront: u32,
}

impl Bounds {
    pub fn uniform(n: u32) -> Self {
        Bounds {
            duality: n,
            springer: n,
            collapse_size: 2 * n,
            levi: n,
            monotone: n.min(4),
            endo_pairs: n,
            decompose: n,
            remarks: n,
            support: n,
            wavefront: n,
        }
    }

    /// The ranges named by the acceptance criteria.
    pub fn acceptance() -> Self {
        Bounds {
            duality: 7,
            springer: 6,
            collapse_size: 12,
            levi: 5,
            monotone: 4,
            endo_pairs: 6,
            decompose: 6,
            remarks: 6,
            support: 5,
            wavefront: 5,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub failed: usize,
    /// The first few counterexamples.
    pub failures: Vec<String>,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1000.0).round() / 1000.0)
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    fn merge(suite: Suite, start: Instant, parts: Vec<(usize, Vec<String>)>) -> SuiteReport {
        let checked = parts.iter().map(|p| p.0).sum();
        let all: Vec<String> = parts.into_iter().flat_map(|p| p.1).collect();
        SuiteReport {
            suite,
            checked,
            failed: all.len(),
            failures: all.into_iter().take(MAX_SHOWN).collect(),
            elapsed: start.elapsed(),
        }
    }
}

const MAX_SHOWN: usize = 8;

/// Runs `check` on every case in parallel; a case fails with a message.
fn sweep<T, F>(cases: Vec<T>, check: F) -> (usize, Vec<String>)
where
    T: Send + Sync,
    F: Fn(&T) -> std::result::Result<(), String> + Sync,
{
    let n = cases.len();
    let fails: Vec<String> = cases.par_iter().filter_map(|c| check(c).err()).collect();
    (n, fails)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>, ctx: impl fmt::Display) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e}"))
}

pub fn run_suite(suite: Suite, b: &Bounds) -> SuiteReport {
    let start = Instant::now();
    let parts = match suite {
        Suite::Duality => duality(b.duality),
        Suite::Springer => springer(b.springer),
        Suite::Collapse => collapse(b.collapse_size),
        Suite::Induction => induction(b.levi, b.monotone, b.endo_pairs),
        Suite::Decompose => decompose_suite(b.decompose),
        Suite::Multiplicity => multiplicity(b.remarks, b.support),
        Suite::Wavefront => wavefront(b.wavefront),
        Suite::Worked => vec![worked()],
    };
    SuiteReport::merge(suite, start, parts)
}

/// Runs the suites on a pool of `jobs` threads (`0` picks the default).
pub fn run_suites(suites: &[Suite], b: &Bounds, jobs: usize) -> Result<Vec<SuiteReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(pool.install(|| suites.iter().map(|&s| run_suite(s, b)).collect()))
}

fn special_sources(n_max: u32) -> Vec<(Partition, Kind)> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for kind in Kind::ALL {
            for p in special_partitions(kind, kind.size_for_rank(n)) {
                out.push((p, kind));
            }
        }
    }
    out
}

fn duality(n_max: u32) -> Vec<(usize, Vec<String>)> {
    let specials = special_sources(n_max);
    let triple = sweep(specials.clone(), |(lam, kind)| {
        let a = lift(dual_special(lam, *kind), lam)?;
        let z = lift(dual_via_zeta(lam, *kind), lam)?;
        let c = lift(dual_via_collapse(lam, *kind), lam)?;
        ensure(a == z && a == c, || format!("{kind} {lam}: symbol {a}, zeta {z}, collapse {c}"))?;
        let back = lift(dual_special(&a, kind.dual()), &a)?;
        ensure(back == *lam, || format!("{kind} {lam}: d(d) = {back}"))?;
        let r = lift(IntervalStructure::new(lam, *kind), lam)?.len();
        let r2 = lift(IntervalStructure::new(&a, kind.dual()), &a)?.len();
        ensure(r == r2, || format!("{kind} {lam}: {r} intervals, dual has {r2}"))
    });
    // Order reversal of the extended duality on class pairs.
    let mut pairs = Vec::new();
    for kind in Kind::ALL {
        for n in 0..=n_max.min(5) {
            let cls = class_partitions(kind, kind.size_for_rank(n));
            for a in &cls {
                for b in &cls {
                    if a != b && a.leq(b) {
                        pairs.push((a.clone(), b.clone(), kind));
                    }
                }
            }
        }
    }
    let reversal = sweep(pairs, |(a, b, kind)| {
        let (da, db) = (lift(dual_general(a, *kind), a)?, lift(dual_general(b, *kind), b)?);
        ensure(db.leq(&da), || format!("{kind}: {a} <= {b} but d gives {da}, {db}"))?;
        ensure(lift(sp_collapse(&da, kind.dual()), &da)? == da, || format!("{kind}: d({a}) = {da} not special"))
    });
    // The collapse characterization also computes d on non-special partitions.
    let mut members = Vec::new();
    for kind in Kind::ALL {
        for n in 0..=n_max {
            members.extend(class_partitions(kind, kind.size_for_rank(n)).into_iter().map(|p| (p, kind)));
        }
    }
    let general = sweep(members, |(lam, kind)| {
        let a = lift(dual_general(lam, *kind), lam)?;
        let c = lift(dual_via_collapse(lam, *kind), lam)?;
        ensure(a == c, || format!("{kind} {lam}: d(sp) = {a}, collapse {c}"))
    });
    vec![triple, reversal, general]
}

/// Normalized symbols of rank `n`: defect 1 from bipartitions, defect 0 from unordered ones.
fn all_symbols(n: u32, defect: u32) -> BTreeSet<Symbol> {
    let mut out = BTreeSet::new();
    for a in 0..=n {
        for alpha in partitions_of(a) {
            for beta in partitions_of(n - a) {
                let s = if defect == 1 { symb_b(&alpha, &beta) } else { symb_d(&alpha, &beta) };
                out.insert(s.normalize());
            }
        }
    }
    out
}

fn springer(n_max: u32) -> Vec<(usize, Vec<String>)> {
    let cases: Vec<(u32, Kind)> = (0..=n_max).flat_map(|n| Kind::ALL.map(|k| (n, k))).collect();
    let specials = sweep(cases.clone(), |&(n, kind)| {
        let defect = if kind == Kind::OrthEven { 0 } else { 1 };
        let sp = special_partitions(kind, kind.size_for_rank(n));
        let mut image = BTreeSet::new();
        for lam in &sp {
            let s = lift(springer_symbol(lam, &trivial_eps(lam, kind), kind), lam)?.symbol;
            ensure(image.insert(s.clone()), || format!("{kind} rank {n}: symbol {s} hit twice"))?;
        }
        let expected: BTreeSet<Symbol> = all_symbols(n, defect).into_iter().filter(Symbol::is_special).collect();
        ensure(image == expected, || {
            format!("{kind} rank {n}: {} special partitions, {} special symbols", image.len(), expected.len())
        })
    });
    let full = sweep(cases.clone(), |&(n, kind)| {
        let defect = if kind == Kind::OrthEven { 0 } else { 1 };
        let mut image = BTreeSet::new();
        for lam in class_partitions(kind, kind.size_for_rank(n)) {
            for eps in SignVector::all(&jord_bp(&lam, kind), kind.modulo_diagonal()) {
                if k_value(&lam, &eps, kind) != required_k(kind) {
                    continue;
                }
                let s = lift(springer_symbol(&lam, &eps, kind), &lam)?.symbol;
                ensure(image.insert(s.clone()), || format!("{kind} rank {n}: symbol {s} hit twice"))?;
            }
        }
        let expected = all_symbols(n, defect);
        ensure(image == expected, || {
            format!("{kind} rank {n}: image has {} symbols, expected {}", image.len(), expected.len())
        })
    });
    let counts = sweep((0..=n_max).collect(), |&n| {
        let a = special_partitions(Kind::Symp, 2 * n).len();
        let b = special_partitions(Kind::OrthOdd, 2 * n + 1).len();
        ensure(a == b, || format!("rank {n}: {a} special symplectic, {b} special odd orthogonal"))
    });
    vec![specials, full, counts]
}

fn collapse(size_max: u32) -> Vec<(usize, Vec<String>)> {
    let mut cases = Vec::new();
    for kind in Kind::ALL {
        for size in 0..=size_max {
            if kind.size_for_rank(size / 2) != size {
                continue;
            }
            cases.extend(class_partitions(kind, size).into_iter().map(|p| (p, kind)));
        }
    }
    let lemma = sweep(cases.clone(), |(lam, kind)| {
        for eps in SignVector::all(&jord_bp(lam, *kind), kind.modulo_diagonal()) {
            if k_value(lam, &eps, *kind) != required_k(*kind) {
                continue;
            }
            let s = lift(sp_of_pair(lam, &eps, *kind), lam)?;
            ensure(lam.leq(&s), || format!("{kind} {lam} [{eps}]: sp = {s} does not dominate"))?;
        }
        let a = lift(sp_collapse(lam, *kind), lam)?;
        let b = lift(sp_collapse_brute(lam, *kind), lam)?;
        ensure(a == b, || format!("{kind} {lam}: sp by family {a}, by enumeration {b}"))
    });
    // Greedy parity repair against enumeration, on arbitrary targets in each class size.
    let mut targets = Vec::new();
    for kind in Kind::ALL {
        for size in 0..=size_max {
            if kind.size_for_rank(size / 2) != size {
                continue;
            }
            targets.extend(partitions_of(size).into_iter().map(|p| (p, kind)));
        }
    }
    let greedy = sweep(targets, |(mu, kind)| {
        let a = collapse_below(mu, *kind);
        let b = lift(collapse_below_brute(mu, *kind), mu)?;
        ensure(a == b, || format!("{kind} below {mu}: greedy {a}, enumeration {b}"))
    });
    vec![lemma, greedy]
}

fn symp_tuples(shape: &LeviShape) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for gl in partition_tuples(&shape.gl_sizes) {
        for core in class_partitions(Kind::Symp, 2 * shape.core_size) {
            let mut t = gl.clone();
            t.push(core);
            out.push(t);
        }
    }
    out
}

fn orth_tuples(shape: &LeviShape) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for gl in partition_tuples(&shape.gl_sizes) {
        for core in class_partitions(Kind::OrthOdd, 2 * shape.core_size + 1) {
            let mut t = gl.clone();
            t.push(core);
            out.push(t);
        }
    }
    out
}

fn show(t: &[Partition]) -> String {
    t.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join("")
}

fn induction(levi_max: u32, mono_max: u32, pair_max: u32) -> Vec<(usize, Vec<String>)> {
    let mut cases = Vec::new();
    for n in 0..=levi_max {
        for shape in LeviShape::all_of_total(n) {
            for t in symp_tuples(&shape) {
                cases.push((shape.clone(), t));
            }
        }
    }
    let lemma = sweep(cases, |(shape, t)| {
        let c = lift(cup(shape, t), show(t))?;
        let left = lift(dual_general(&c, Kind::Symp), &c)?;
        let dt = lift(dual_tuple(shape, t), show(t))?;
        let right = lift(levi_induce(shape, &dt), show(&dt))?;
        ensure(left == right, || format!("{:?} {}: d(cup) = {left}, ind(d) = {right}", shape.gl_sizes, show(t)))
    });

    let mut mono = Vec::new();
    for n in 0..=mono_max {
        for shape in LeviShape::all_of_total(n) {
            mono.push(shape);
        }
    }
    let monotone = sweep(mono, |shape| {
        let ts = orth_tuples(shape);
        let ind: Vec<Partition> = ts
            .iter()
            .map(|t| lift(levi_induce(shape, t), show(t)))
            .collect::<std::result::Result<_, _>>()?;
        for (a, ta) in ts.iter().enumerate() {
            for (b, tb) in ts.iter().enumerate() {
                let below = a != b && ta.iter().zip(tb).all(|(x, y)| x.leq(y));
                if below {
                    ensure(ind[a].lt(&ind[b]), || {
                        format!("{:?}: {} < {} but ind gives {} and {}", shape.gl_sizes, show(ta), show(tb), ind[a], ind[b])
                    })?;
                }
            }
        }
        Ok(())
    });

    let mut pairs = Vec::new();
    for n in 0..=pair_max {
        for n1 in 0..=n {
            for l1 in special_partitions(Kind::Symp, 2 * n1) {
                for l2 in special_partitions(Kind::OrthEven, 2 * (n - n1)) {
                    pairs.push((l1.clone(), l2));
                }
            }
        }
    }
    let prop = sweep(pairs, |(l1, l2)| {
        let e = lift(endo_induce(l1, l2), format!("({l1}; {l2})"))?;
        if let Some(v) = e.structural_violation() {
            return Err(format!("({l1}; {l2}): {v}"));
        }
        let u = lift(dual_special(l1, Kind::Symp), l1)?.union(&lift(dual_special(l2, Kind::OrthEven), l2)?);
        let d = lift(dual_general(&e.induced, Kind::Symp), &e.induced)?;
        ensure(u.leq(&d), || format!("({l1}; {l2}): d-union {u} is not below d(ind) = {d}"))
    });
    vec![lemma, monotone, prop]
}

fn all_even_symplectic(n: u32) -> Vec<Partition> {
    partitions_of(n).into_iter().map(|h| h.sum(&h)).collect()
}

fn decompose_suite(n_max: u32) -> Vec<(usize, Vec<String>)> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for lam in all_even_symplectic(n) {
            for tau in admissible_taus(&lam) {
                cases.push((lam.clone(), tau));
            }
        }
    }
    vec![sweep(cases, |(lam, tau)| {
        let d = lift(decompose(lam, tau), lam)?;
        ensure(d.checks.all(), || {
            format!("{lam} tau {tau:?}: ({}; {}) gives {:?}", d.lambda1, d.lambda2, d.checks)
        })
    })]
}

/// Special pairs of total rank `n` inducing an all-even partition regularly, with
/// every coordinate choice allowed on each factor.
fn contexts(n: u32) -> Vec<(Partition, Partition, Vec<u8>, Vec<u8>)> {
    let bits = |r: usize, kind: Kind| -> Vec<Vec<u8>> {
        (0..1u32 << r)
            .map(|m| (0..r).map(|h| (m >> h & 1) as u8).collect::<Vec<u8>>())
            .filter(|t| {
                crate::springer::FamilyCoords {
                    tau: t.clone(),
                    delta: vec![0; r],
                }
                .satisfies_constraints(kind)
            })
            .collect()
    };
    let mut out = Vec::new();
    for n1 in 0..=n {
        for l1 in special_partitions(Kind::Symp, 2 * n1) {
            for l2 in special_partitions(Kind::OrthEven, 2 * (n - n1)) {
                let Ok(e) = endo_induce(&l1, &l2) else { continue };
                if !e.regular || !e.induced.all_even() {
                    continue;
                }
                for t1 in bits(e.int1.len(), Kind::Symp) {
                    for t2 in bits(e.int2.len(), Kind::OrthEven) {
                        out.push((l1.clone(), l2.clone(), t1.clone(), t2));
                    }
                }
            }
        }
    }
    out
}

fn multiplicity(remark_max: u32, support_max: u32) -> Vec<(usize, Vec<String>)> {
    let all: Vec<_> = (1..=remark_max).flat_map(contexts).collect();
    let remarks = sweep(all, |(l1, l2, t1, t2)| {
        let ctx = lift(build_context(l1, l2, t1, t2), format!("({l1}; {l2})"))?;
        let bad = [
            ("tau+ + tau- = tau_rel", ctx.remark_tau_failures()),
            ("delta+ + delta- = mult(>= i)", ctx.remark_delta_failures()),
            ("c+ + c- = mult(i)", ctx.c_parity_failures()),
        ];
        for (what, f) in bad {
            ensure(f.is_empty(), || format!("({l1}; {l2}) {t1:?} {t2:?}: {what} fails at {f:?}"))?;
        }
        Ok(())
    });
    let small: Vec<_> = (1..=support_max).flat_map(contexts).collect();
    let support = sweep(small, |(l1, l2, t1, t2)| {
        let ctx = lift(build_context(l1, l2, t1, t2), format!("({l1}; {l2})"))?;
        for z in Zeta::BOTH {
            let a = enumerate_support(&ctx, z, None);
            let b = enumerate_support_brute(&ctx, z);
            ensure(a == b, || format!("({l1}; {l2}) {t1:?} {t2:?} zeta {z}: {} vs {} points", a.len(), b.len()))?;
        }
        Ok(())
    });
    vec![remarks, support]
}

fn wavefront(n_max: u32) -> Vec<(usize, Vec<String>)> {
    let cases: Vec<QuadInput> = (1..=n_max).flat_map(|n| QuadInput::all_even_of_size(2 * n)).collect();
    vec![sweep(cases, |q| {
        let c = lift(certify(q), q)?;
        if let Some(v) = c.verdicts.first_failure() {
            return Err(format!("{q}: verdict {v} fails"));
        }
        ensure(c.closed_forms_agree, || format!("{q}: closed forms disagree with the direct sums"))
    })]
}

fn worked() -> (usize, Vec<String>) {
    let run = || -> std::result::Result<(), String> {
        let p = |s: &str| s.parse::<Partition>().map_err(|e| e.to_string());
        let sv = |s: &str| SignVector::parse(s, false).map_err(|e| e.to_string());
        let q = QuadInput::new(p("2")?, sv("2:+")?, p("2")?, sv("2:-")?).map_err(|e| e.to_string())?;
        let c = lift(wavefront_certificate(&q), &q)?;
        let got = (
            c.form,
            c.dual.clone(),
            c.decomposition.lambda1.clone(),
            c.decomposition.lambda2.clone(),
            c.mu1.clone(),
            c.mu2.clone(),
        );
        let want = (Form::An, p("3,1,1")?, p("1,1")?, p("1,1")?, p("3")?, p("1,1")?);
        ensure(got == want, || format!("worked vector gives {got:?}"))
    };
    (1, run().err().into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let b = Bounds::uniform(3);
        for s in Suite::ALL {
            let r = run_suite(s, &b);
            assert!(r.passed(), "{s}: {:?}", r.failures);
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!(Suite::parse_list("all").unwrap().len(), 8);
        assert_eq!(Suite::parse_list("duality,worked").unwrap(), vec![Suite::Duality, Suite::Worked]);
        assert!(Suite::parse_list("nope").is_err());
    }
}
