//! Multiplicity data of a regular endoscopic induction (`δ±`, `τ±`, the combinatorial
//! support condition) and the sign calculus that certifies the wavefront of an
//! all-even quadratic unipotent parameter.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::classical::{check_class, jord_bp, IntervalStructure, Kind, SignVector};
use crate::duality::{dual_special, transport_coords};
use crate::error::{Error, Result};
use crate::induction::{decompose, endo_induce, Decomposition, EndoData};
use crate::partitions::Partition;
use crate::springer::{eps_from_coords, FamilyCoords};

/// The sign `ζ` selecting one of the two extensions `ρ_2^±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Zeta {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Zeta {
    pub const BOTH: [Zeta; 2] = [Zeta::Plus, Zeta::Minus];

    pub fn opposite(self) -> Zeta {
        match self {
            Zeta::Plus => Zeta::Minus,
            Zeta::Minus => Zeta::Plus,
        }
    }
}

impl fmt::Display for Zeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Zeta::Plus => "+",
            Zeta::Minus => "-",
        })
    }
}

fn sign_pow(base: i64, exp: i64) -> i64 {
    if exp.rem_euclid(2) == 1 {
        base
    } else {
        1
    }
}

fn minus_one_pow(exp: i64) -> i64 {
    sign_pow(-1, exp)
}

/// A regular induction `(λ_1, λ_2) ↦ λ` with `δ_1 = δ_2 = 0` and the functions
/// `δ±, τ±` on `Jord_bp(λ)`.
#[derive(Debug, Clone, Serialize)]
pub struct EndoContext {
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub tau1: Vec<u8>,
    pub tau2: Vec<u8>,
    #[serde(skip)]
    pub endo: EndoData,
    pub lambda: Partition,
    pub delta_plus: BTreeMap<u32, u8>,
    pub delta_minus: BTreeMap<u32, u8>,
    pub tau_plus: BTreeMap<u32, u8>,
    pub tau_minus: BTreeMap<u32, u8>,
    /// How many values took the `j_max({i}) ∈ J+` branch for `δ±`.
    pub delta_branch_hits: usize,
}

pub fn build_context(lambda1: &Partition, lambda2: &Partition, tau1: &[u8], tau2: &[u8]) -> Result<EndoContext> {
    let endo = endo_induce(lambda1, lambda2)?;
    if !endo.regular {
        return Err(Error::Precondition(format!("({lambda1}; {lambda2}) does not induce regularly")));
    }
    let lambda = endo.induced.clone();
    if !lambda.all_even() {
        return Err(Error::Precondition(format!("induced partition {lambda} has an odd part")));
    }
    for (t, st) in [(tau1, &endo.int1), (tau2, &endo.int2)] {
        let c = FamilyCoords {
            tau: t.to_vec(),
            delta: vec![0; t.len()],
        };
        if t.len() != st.len() || !c.satisfies_constraints(st.kind) {
            return Err(Error::Precondition(format!(
                "coordinates {t:?} do not fit the {} intervals of {}",
                st.len(),
                st.partition
            )));
        }
    }
    let locate = |st: &IntervalStructure, j: usize| {
        st.interval_of_index(j)
            .ok_or_else(|| Error::Internal(format!("index {j} lies in no interval of {}", st.partition)))
    };

    let mut ctx = EndoContext {
        lambda1: lambda1.clone(),
        lambda2: lambda2.clone(),
        tau1: tau1.to_vec(),
        tau2: tau2.to_vec(),
        lambda: lambda.clone(),
        delta_plus: BTreeMap::new(),
        delta_minus: BTreeMap::new(),
        tau_plus: BTreeMap::new(),
        tau_minus: BTreeMap::new(),
        delta_branch_hits: 0,
        endo: endo.clone(),
    };
    for i in jord_bp(&lambda, Kind::Symp) {
        let rel = endo
            .relative_of(i)
            .ok_or_else(|| Error::Internal(format!("{i} lies in no relative interval")))?;
        let jmax = rel
            .j_max
            .finite()
            .ok_or_else(|| Error::Internal(format!("relative interval of {i} is unbounded")))?;
        let (mut dp, mut dm) = (0, 0);
        if endo.j_plus.contains(&jmax) {
            let s = tau1[locate(&endo.int1, jmax)?] + tau2[locate(&endo.int2, jmax)?];
            dp = (s + 1) % 2;
            dm = s % 2;
            ctx.delta_branch_hits += 1;
        }
        let (tp, tm) = if lambda.m(i) == 1 {
            let t = tau1[locate(&endo.int1, jmax)?];
            (t, t)
        } else {
            match rel.owner {
                Some((1, pos)) => (tau1[pos], tau1[pos]),
                Some((_, pos)) => (tau2[pos], (tau2[pos] + 1) % 2),
                None => return Err(Error::Internal(format!("{i} has multiplicity > 1 but no owning interval"))),
            }
        };
        ctx.delta_plus.insert(i, dp);
        ctx.delta_minus.insert(i, dm);
        ctx.tau_plus.insert(i, tp);
        ctx.tau_minus.insert(i, tm);
    }
    Ok(ctx)
}

impl EndoContext {
    pub fn keys(&self) -> Vec<u32> {
        jord_bp(&self.lambda, Kind::Symp)
    }

    pub fn delta(&self, z: Zeta, i: u32) -> u8 {
        match z {
            Zeta::Plus => self.delta_plus[&i],
            Zeta::Minus => self.delta_minus[&i],
        }
    }

    pub fn tau(&self, z: Zeta, i: u32) -> u8 {
        match z {
            Zeta::Plus => self.tau_plus[&i],
            Zeta::Minus => self.tau_minus[&i],
        }
    }

    /// `δ^z(i⁺)`, which is `1` above the largest value.
    fn delta_next(&self, z: Zeta, i: u32) -> u8 {
        match self.keys().into_iter().find(|&k| k > i) {
            Some(k) => self.delta(z, k),
            None => 1,
        }
    }

    /// `c^ζ(i) = δ^{-ζ}(i) - δ^{-ζ}(i⁺) mod 2`.
    pub fn c(&self, z: Zeta, i: u32) -> u8 {
        (self.delta(z.opposite(), i) + self.delta_next(z.opposite(), i)) % 2
    }

    /// Values where `τ+ + τ- ≠ τ_{λ1,λ2}`.
    pub fn remark_tau_failures(&self) -> Vec<u32> {
        let rel = self.endo.tau_rel.as_ref().expect("regular induction has tau_rel");
        self.keys()
            .into_iter()
            .filter(|&i| (self.tau_plus[&i] + self.tau_minus[&i]) % 2 != rel[&i])
            .collect()
    }

    /// Values where `δ+ + δ- ≢ mult(≥ i)`.
    pub fn remark_delta_failures(&self) -> Vec<u32> {
        self.keys()
            .into_iter()
            .filter(|&i| {
                let geq = self.lambda.parts().iter().filter(|&&p| p >= i).count();
                ((self.delta_plus[&i] + self.delta_minus[&i]) as usize) % 2 != geq % 2
            })
            .collect()
    }

    /// Values where `c+ + c- ≢ mult(i)`.
    pub fn c_parity_failures(&self) -> Vec<u32> {
        self.keys()
            .into_iter()
            .filter(|&i| ((self.c(Zeta::Plus, i) + self.c(Zeta::Minus, i)) as usize) % 2 != self.lambda.m(i) % 2)
            .collect()
    }

    fn forced_signs(&self, z: Zeta, part: &Partition) -> SignVector {
        SignVector::from_pairs(
            jord_bp(part, Kind::Symp)
                .into_iter()
                .map(|i| (i, if self.tau(z, i) == 1 { -1 } else { 1 })),
            false,
        )
    }
}

/// A pair of symplectic parameters `((λ', ε'), (λ'', ε''))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SupportPoint {
    pub primed: Partition,
    pub eps_primed: SignVector,
    pub doubled: Partition,
    pub eps_doubled: SignVector,
}

/// The combinatorial condition that replaces nonvanishing of the multiplicity.
pub fn cond_a(ctx: &EndoContext, z: Zeta, pt: &SupportPoint) -> bool {
    if pt.primed.union(&pt.doubled) != ctx.lambda {
        return false;
    }
    let counts = ctx
        .keys()
        .into_iter()
        .all(|i| (pt.doubled.m(i) % 2) as u8 == ctx.c(z, i));
    counts && pt.eps_primed == ctx.forced_signs(z, &pt.primed) && pt.eps_doubled == ctx.forced_signs(z.opposite(), &pt.doubled)
}

/// Bounds `mult_{ν-}(i) <= 2` on common values and `<= 1` elsewhere, from a quadratic input.
fn bound(q: Option<&QuadInput>, lambda: &Partition, i: u32) -> usize {
    match q {
        None => lambda.m(i),
        Some(q) if q.lambda_plus.m(i) > 0 && q.lambda_minus.m(i) > 0 => 2,
        Some(_) => 1,
    }
}

fn sub_multisets(lambda: &Partition, choices: &[Vec<usize>]) -> Vec<(Partition, Partition)> {
    let keys = lambda.values();
    let mut out = Vec::new();
    let mut idx = vec![0usize; keys.len()];
    if choices.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let mut doubled = Vec::new();
        let mut primed = Vec::new();
        for (k, &i) in keys.iter().enumerate() {
            let m = choices[k][idx[k]];
            doubled.extend(std::iter::repeat_n(i, m));
            primed.extend(std::iter::repeat_n(i, lambda.m(i) - m));
        }
        out.push((Partition::from_unsorted(primed), Partition::from_unsorted(doubled)));
        let mut k = 0;
        loop {
            if k == keys.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// All points satisfying the support condition, optionally restricted by the
/// multiplicity bounds attached to a quadratic input.
pub fn enumerate_support(ctx: &EndoContext, z: Zeta, bounds: Option<&QuadInput>) -> Vec<SupportPoint> {
    let choices: Vec<Vec<usize>> = ctx
        .lambda
        .values()
        .into_iter()
        .map(|i| {
            (0..=bound(bounds, &ctx.lambda, i).min(ctx.lambda.m(i)))
                .filter(|m| (m % 2) as u8 == ctx.c(z, i))
                .collect()
        })
        .collect();
    let mut out: Vec<SupportPoint> = sub_multisets(&ctx.lambda, &choices)
        .into_iter()
        .map(|(primed, doubled)| SupportPoint {
            eps_primed: ctx.forced_signs(z, &primed),
            eps_doubled: ctx.forced_signs(z.opposite(), &doubled),
            primed,
            doubled,
        })
        .collect();
    out.sort();
    out
}

/// The same set by scanning every splitting of `λ` and every pair of sign vectors.
pub fn enumerate_support_brute(ctx: &EndoContext, z: Zeta) -> Vec<SupportPoint> {
    let choices: Vec<Vec<usize>> = ctx.lambda.values().into_iter().map(|i| (0..=ctx.lambda.m(i)).collect()).collect();
    let mut out = Vec::new();
    for (primed, doubled) in sub_multisets(&ctx.lambda, &choices) {
        for e1 in SignVector::all(&jord_bp(&primed, Kind::Symp), false) {
            for e2 in SignVector::all(&jord_bp(&doubled, Kind::Symp), false) {
                let pt = SupportPoint {
                    primed: primed.clone(),
                    eps_primed: e1.clone(),
                    doubled: doubled.clone(),
                    eps_doubled: e2,
                };
                if cond_a(ctx, z, &pt) {
                    out.push(pt);
                }
            }
        }
    }
    out.sort();
    out
}

/// A quadratic unipotent parameter `(λ+, ε+, λ-, ε-)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadInput {
    pub lambda_plus: Partition,
    pub eps_plus: SignVector,
    pub lambda_minus: Partition,
    pub eps_minus: SignVector,
}

impl QuadInput {
    pub fn new(lambda_plus: Partition, eps_plus: SignVector, lambda_minus: Partition, eps_minus: SignVector) -> Result<Self> {
        for (l, e) in [(&lambda_plus, &eps_plus), (&lambda_minus, &eps_minus)] {
            check_class(l, Kind::Symp)?;
            e.check_keys(&jord_bp(l, Kind::Symp))?;
        }
        Ok(QuadInput {
            lambda_plus,
            eps_plus,
            lambda_minus,
            eps_minus,
        })
    }

    /// Builds the input with `+1` for every sign not listed.
    pub fn with_defaults(lambda_plus: Partition, eps_plus: &SignVector, lambda_minus: Partition, eps_minus: &SignVector) -> Result<Self> {
        let ep = eps_plus.extended_to(&jord_bp(&lambda_plus, Kind::Symp))?;
        let em = eps_minus.extended_to(&jord_bp(&lambda_minus, Kind::Symp))?;
        QuadInput::new(lambda_plus, ep, lambda_minus, em)
    }

    pub fn lambda(&self) -> Partition {
        self.lambda_plus.union(&self.lambda_minus)
    }

    fn ep(&self, i: u32) -> i64 {
        self.eps_plus.get(i) as i64
    }

    fn em(&self, i: u32) -> i64 {
        self.eps_minus.get(i) as i64
    }

    /// Every input whose union is an all-even partition of `2n`.
    pub fn all_even_of_size(two_n: u32) -> Vec<QuadInput> {
        let mut out = Vec::new();
        if two_n % 2 == 1 {
            return out;
        }
        for half in crate::partitions::partitions_of(two_n / 2) {
            let lambda = half.sum(&half);
            let choices: Vec<Vec<usize>> = lambda.values().into_iter().map(|i| (0..=lambda.m(i)).collect()).collect();
            for (lp, lm) in sub_multisets(&lambda, &choices) {
                for ep in SignVector::all(&jord_bp(&lp, Kind::Symp), false) {
                    for em in SignVector::all(&jord_bp(&lm, Kind::Symp), false) {
                        out.push(QuadInput {
                            lambda_plus: lp.clone(),
                            eps_plus: ep.clone(),
                            lambda_minus: lm.clone(),
                            eps_minus: em,
                        });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for QuadInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(+: {} [{}]; -: {} [{}])",
            self.lambda_plus, self.eps_plus, self.lambda_minus, self.eps_minus
        )
    }
}

/// Which inner form of the odd orthogonal group the parameter lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Iso,
    An,
}

impl Form {
    pub fn sign(self) -> i64 {
        match self {
            Form::Iso => 1,
            Form::An => -1,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Iso => "iso",
            Form::An => "an",
        })
    }
}

/// The product `c` of `ε±(i)^{mult_{λ±}(i)}`, read as a form.
pub fn group_indicator(q: &QuadInput) -> Form {
    let c: i64 = q
        .lambda_plus
        .values()
        .into_iter()
        .map(|i| sign_pow(q.ep(i), q.lambda_plus.m(i) as i64))
        .chain(q.lambda_minus.values().into_iter().map(|i| sign_pow(q.em(i), q.lambda_minus.m(i) as i64)))
        .product();
    if c == 1 {
        Form::Iso
    } else {
        Form::An
    }
}

/// `τ(i) = 0` on multiplicity one values, `(-1)^τ(i) = ε+(i)ε-(i)` on common values,
/// and `0` elsewhere.
pub fn build_tau(q: &QuadInput) -> BTreeMap<u32, u8> {
    let lambda = q.lambda();
    jord_bp(&lambda, Kind::Symp)
        .into_iter()
        .map(|i| {
            let common = q.lambda_plus.m(i) > 0 && q.lambda_minus.m(i) > 0;
            let t = u8::from(lambda.m(i) > 1 && common && q.ep(i) * q.em(i) == -1);
            (i, t)
        })
        .collect()
}

/// Closed form of `S^ζ(i)`.
pub fn s_zeta(q: &QuadInput, ctx: &EndoContext, z: Zeta, i: u32) -> i64 {
    let (mp, mm) = (q.lambda_plus.m(i) as i64, q.lambda_minus.m(i) as i64);
    let t = ctx.tau(z, i) as i64;
    let t_other = ctx.tau(z.opposite(), i) as i64;
    let base = minus_one_pow(mm * t);
    match (ctx.c(z, i), mp == 0, mm == 0) {
        (1, _, true) => q.ep(i),
        (1, true, _) => q.em(i) * minus_one_pow(t_other + t * (mm - 1)),
        (1, false, false) => 2 * q.ep(i) * base,
        (_, false, false) => 2 * base,
        _ => base,
    }
}

/// `S^ζ(i)` as the sum of `e^ζ(i, m)` over the allowed values of `mult_{ν-}(i)`, before
/// any simplification.
pub fn s_zeta_raw(q: &QuadInput, ctx: &EndoContext, z: Zeta, i: u32) -> i64 {
    let (mp, mm) = (q.lambda_plus.m(i) as i64, q.lambda_minus.m(i) as i64);
    let t = ctx.tau(z, i) as i64;
    let t_other = ctx.tau(z.opposite(), i) as i64;
    let both = mp > 0 && mm > 0;
    let ms: &[i64] = match (ctx.c(z, i), both) {
        (1, _) => &[1],
        (_, false) => &[0],
        (_, true) => &[0, 2],
    };
    let e = |m: i64| -> i64 {
        match m {
            0 => minus_one_pow(t * mm),
            1 if both => q.ep(i) * minus_one_pow(t * mm) + q.em(i) * minus_one_pow(t_other + t * (mm - 1)),
            1 if mp == 0 => q.em(i) * minus_one_pow(t_other + t * (mm - 1)),
            1 => q.ep(i),
            _ => q.ep(i) * q.em(i) * minus_one_pow(t_other + t * (mm - 1)),
        }
    };
    ms.iter().map(|&m| e(m)).sum()
}

/// `Π_i S^ζ(i)`: the multiplicity times `2^{|Jord(λ+)| + |Jord(λ-)|}`.
pub fn m_delta(q: &QuadInput, ctx: &EndoContext, z: Zeta) -> i64 {
    ctx.keys().into_iter().map(|i| s_zeta(q, ctx, z, i)).product()
}

/// The same scaled multiplicity summed term by term over every pair `(ν+, ν-)` with
/// the support bounds and parities, with the per-value weights of the character
/// expansion.
pub fn m_delta_brute(q: &QuadInput, ctx: &EndoContext, z: Zeta) -> i64 {
    let lambda = &ctx.lambda;
    let choices: Vec<Vec<usize>> = lambda.values().into_iter().map(|i| (0..=lambda.m(i)).collect()).collect();
    let mut total = 0;
    for (nu_p, nu_m) in sub_multisets(lambda, &choices) {
        let admissible = lambda.values().into_iter().all(|i| {
            let m = nu_m.m(i);
            m <= bound(Some(q), lambda, i) && (m % 2) as u8 == ctx.c(z, i)
        });
        if !admissible {
            continue;
        }
        let xi_p = |i: u32| if nu_p.m(i) > 0 { minus_one_pow(ctx.tau(z, i) as i64) } else { 1 };
        let xi_m = |i: u32| if nu_m.m(i) > 0 { minus_one_pow(ctx.tau(z.opposite(), i) as i64) } else { 1 };
        let term: i64 = lambda
            .values()
            .into_iter()
            .map(|i| {
                let (mp, mm) = (q.lambda_plus.m(i), q.lambda_minus.m(i) as i64);
                match nu_m.m(i) {
                    0 => sign_pow(xi_p(i), mm),
                    2 => q.ep(i) * q.em(i) * xi_m(i) * sign_pow(xi_p(i), mm - 1),
                    _ if mm == 0 => q.ep(i),
                    _ if mp == 0 => q.em(i) * xi_m(i) * sign_pow(xi_p(i), mm - 1),
                    _ => q.em(i) * xi_m(i) * sign_pow(xi_p(i), mm - 1) + q.ep(i) * sign_pow(xi_p(i), mm),
                }
            })
            .product();
        total += term;
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    /// The constructed pair induces `λ` regularly.
    pub v1_regular: bool,
    /// `μ_1 ∪ μ_2 = d(λ)`.
    pub v2_dual_union: bool,
    /// `τ_{λ1,λ2} = τ`.
    pub v3_tau_match: bool,
    /// `S^ζ(i) ≠ 0` for every `i` and both signs.
    pub v4_nonzero: bool,
    /// `S^-(i) = ε+(i)^{mult_{λ+}(i)} ε-(i)^{mult_{λ-}(i)} S^+(i)`.
    pub v5_ratio: bool,
    /// `m(ρ_1, ρ_2^+) + sgn m(ρ_1, ρ_2^-) ≠ 0`.
    pub v6_combination: bool,
    /// `♯ = an` forces `n_2 >= 1`.
    pub v7_an_needs_n2: bool,
}

impl Verdicts {
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.v1_regular, "v1"),
            (self.v2_dual_union, "v2"),
            (self.v3_tau_match, "v3"),
            (self.v4_nonzero, "v4"),
            (self.v5_ratio, "v5"),
            (self.v6_combination, "v6"),
            (self.v7_an_needs_n2, "v7"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub input: QuadInput,
    pub lambda: Partition,
    pub form: Form,
    pub dual: Partition,
    pub tau: BTreeMap<u32, u8>,
    pub decomposition: Decomposition,
    pub mu1: Partition,
    pub mu2: Partition,
    pub eta1: SignVector,
    pub eta2: SignVector,
    pub delta_plus: BTreeMap<u32, u8>,
    pub delta_minus: BTreeMap<u32, u8>,
    pub tau_plus: BTreeMap<u32, u8>,
    pub tau_minus: BTreeMap<u32, u8>,
    pub s_plus: BTreeMap<u32, i64>,
    pub s_minus: BTreeMap<u32, i64>,
    /// Scaled multiplicities for `ζ = +` and `ζ = -`.
    pub m_plus: i64,
    pub m_minus: i64,
    pub combination: i64,
    /// Closed forms agree with the unsimplified sums and with the term by term sum.
    pub closed_forms_agree: bool,
    pub delta_branch_hits: usize,
    pub verdicts: Verdicts,
}

/// Runs the whole construction and records every verdict.
pub fn certify(q: &QuadInput) -> Result<Certificate> {
    let lambda = q.lambda();
    if lambda.is_empty() {
        return Err(Error::Precondition("the parameter must have positive size".into()));
    }
    if !lambda.all_even() {
        return Err(Error::Precondition(format!("{lambda} has an odd part")));
    }
    let form = group_indicator(q);
    let dual = dual_special(&lambda, Kind::Symp)?;
    let tau = build_tau(q);
    let dec = decompose(&lambda, &tau)?;
    let mu1 = dual_special(&dec.lambda1, Kind::Symp)?;
    let mu2 = dual_special(&dec.lambda2, Kind::OrthEven)?;

    let r1 = IntervalStructure::new(&dec.lambda1, Kind::Symp)?.len();
    let r2 = IntervalStructure::new(&dec.lambda2, Kind::OrthEven)?.len();
    let c1 = transport_coords(&dec.lambda1, Kind::Symp, &FamilyCoords::zero(r1), 1)?;
    let c2 = transport_coords(&dec.lambda2, Kind::OrthEven, &FamilyCoords::zero(r2), 0)?;
    let eta1 = eps_from_coords(&mu1, Kind::OrthOdd, &c1)?;
    let eta2 = eps_from_coords(&mu2, Kind::OrthEven, &c2)?;

    let ctx = build_context(&dec.lambda1, &dec.lambda2, &vec![0; r1], &vec![0; r2])?;
    let keys = ctx.keys();
    let s = |z: Zeta| -> BTreeMap<u32, i64> { keys.iter().map(|&i| (i, s_zeta(q, &ctx, z, i))).collect() };
    let (s_plus, s_minus) = (s(Zeta::Plus), s(Zeta::Minus));
    let m_plus: i64 = s_plus.values().product();
    let m_minus: i64 = s_minus.values().product();
    let combination = m_plus + form.sign() * m_minus;
    let closed_forms_agree = Zeta::BOTH.iter().all(|&z| {
        keys.iter().all(|&i| s_zeta_raw(q, &ctx, z, i) == s_zeta(q, &ctx, z, i)) && m_delta_brute(q, &ctx, z) == m_delta(q, &ctx, z)
    });
    let ratio_ok = keys.iter().all(|&i| {
        let f = sign_pow(q.ep(i), q.lambda_plus.m(i) as i64) * sign_pow(q.em(i), q.lambda_minus.m(i) as i64);
        s_minus[&i] == f * s_plus[&i]
    });
    let verdicts = Verdicts {
        v1_regular: dec.checks.regular,
        v2_dual_union: mu1.union(&mu2) == dual,
        v3_tau_match: dec.checks.tau_match,
        v4_nonzero: s_plus.values().chain(s_minus.values()).all(|&v| v != 0),
        v5_ratio: ratio_ok,
        v6_combination: combination != 0,
        v7_an_needs_n2: form == Form::Iso || dec.n2 >= 1,
    };
    Ok(Certificate {
        input: q.clone(),
        lambda,
        form,
        dual,
        tau,
        decomposition: dec,
        mu1,
        mu2,
        eta1,
        eta2,
        delta_plus: ctx.delta_plus.clone(),
        delta_minus: ctx.delta_minus.clone(),
        tau_plus: ctx.tau_plus.clone(),
        tau_minus: ctx.tau_minus.clone(),
        s_plus,
        s_minus,
        m_plus,
        m_minus,
        combination,
        closed_forms_agree,
        delta_branch_hits: ctx.delta_branch_hits,
        verdicts,
    })
}

/// [`certify`], failing with the first false verdict.
pub fn wavefront_certificate(q: &QuadInput) -> Result<Certificate> {
    let cert = certify(q)?;
    if let Some(v) = cert.verdicts.first_failure() {
        return Err(Error::Internal(format!("wavefront verdict {v} fails for {q}")));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sv(s: &str) -> SignVector {
        SignVector::parse(s, false).unwrap()
    }

    #[test]
    fn context_examples() {
        let ctx = build_context(&p("1,1"), &p("1,1"), &[0], &[0]).unwrap();
        assert_eq!(ctx.delta_plus[&2] + ctx.delta_minus[&2], 0);
        assert_eq!((ctx.tau_plus[&2], ctx.tau_minus[&2]), (0, 1));
        assert_eq!(ctx.c(Zeta::Plus, 2), 1);
        let ctx = build_context(&p("2,2"), &Partition::empty(), &[0, 0], &[]).unwrap();
        assert_eq!((ctx.tau_plus[&2], ctx.tau_minus[&2]), (0, 0));
        assert!(build_context(&p("2"), &Partition::empty(), &[0], &[]).is_err());
    }

    #[test]
    fn cond_a_examples() {
        let ctx = build_context(&p("1,1"), &p("1,1"), &[0], &[0]).unwrap();
        let pt = |e1: &str, e2: &str| SupportPoint {
            primed: p("2"),
            eps_primed: sv(e1),
            doubled: p("2"),
            eps_doubled: sv(e2),
        };
        assert!(cond_a(&ctx, Zeta::Plus, &pt("2:+", "2:-")));
        assert!(!cond_a(&ctx, Zeta::Plus, &pt("2:+", "2:+")));
        let whole = SupportPoint {
            primed: p("2,2"),
            eps_primed: sv("2:+"),
            doubled: Partition::empty(),
            eps_doubled: sv(""),
        };
        assert!(!cond_a(&ctx, Zeta::Plus, &whole));
    }

    #[test]
    fn support_matches_scan() {
        let ctx = build_context(&p("1,1"), &p("1,1"), &[0], &[0]).unwrap();
        for z in Zeta::BOTH {
            assert_eq!(enumerate_support(&ctx, z, None), enumerate_support_brute(&ctx, z));
        }
        let q = QuadInput::new(p("2"), sv("2:+"), p("2"), sv("2:-")).unwrap();
        let s = enumerate_support(&ctx, Zeta::Plus, Some(&q));
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].eps_primed.get(2), s[0].eps_doubled.get(2)), (1, -1));
    }

    #[test]
    fn tau_and_form() {
        let q = QuadInput::new(p("2"), sv("2:+"), p("2"), sv("2:-")).unwrap();
        assert_eq!(build_tau(&q)[&2], 1);
        assert_eq!(group_indicator(&q), Form::An);
        let q = QuadInput::new(p("2,2"), sv("2:-"), Partition::empty(), sv("")).unwrap();
        assert_eq!(build_tau(&q)[&2], 0);
        assert_eq!(group_indicator(&q), Form::Iso);
        let q = QuadInput::new(p("4"), sv("4:-"), p("2"), sv("2:-")).unwrap();
        assert!(build_tau(&q).values().all(|&t| t == 0));
    }

    #[test]
    fn worked_vector() {
        let q = QuadInput::new(p("2"), sv("2:+"), p("2"), sv("2:-")).unwrap();
        let c = wavefront_certificate(&q).unwrap();
        assert_eq!(c.form, Form::An);
        assert_eq!(c.dual, p("3,1,1"));
        assert_eq!((c.decomposition.lambda1.clone(), c.decomposition.lambda2.clone()), (p("1,1"), p("1,1")));
        assert_eq!((c.mu1.clone(), c.mu2.clone()), (p("3"), p("1,1")));
        assert_eq!((c.s_plus[&2], c.s_minus[&2]), (2, -2));
        assert!(c.closed_forms_agree);
    }

    #[test]
    fn iso_example() {
        let q = QuadInput::new(p("2,2"), sv("2:+"), Partition::empty(), sv("")).unwrap();
        let c = wavefront_certificate(&q).unwrap();
        assert_eq!(c.form, Form::Iso);
        assert_eq!((c.mu1.clone(), c.mu2.clone()), (p("3,1,1"), Partition::empty()));
    }

    #[test]
    fn empty_input_is_rejected() {
        let q = QuadInput::new(Partition::empty(), sv(""), Partition::empty(), sv("")).unwrap();
        assert!(certify(&q).is_err());
    }
}
