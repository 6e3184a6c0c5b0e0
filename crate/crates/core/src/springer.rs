//! Generalized Springer parameters: the integer `k`, the explicit symbol of a pair
//! `(λ, ε)`, the collapses `sp(λ)` and `sp(λ, ε)`, and family coordinates.

use serde::Serialize;

use crate::classical::{
    check_class, check_special, in_class, jord_bp, odd_mult_jord, special_partitions, IntervalStructure, Kind,
    SignVector,
};
use crate::error::{Error, Result};
use crate::partitions::{dominance_minimum, partition_from_i64, Partition};
use crate::symbols::Symbol;

/// `h = Σ_j (-1)^j (1 - ε(i_j))` over the odd-multiplicity values `i_1 > i_2 > …`.
pub fn h_value(lambda: &Partition, eps: &SignVector, kind: Kind) -> i64 {
    odd_mult_jord(lambda, kind)
        .iter()
        .enumerate()
        .map(|(j, &i)| {
            let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
            sign * (1 - eps.get(i) as i64)
        })
        .sum()
}

pub fn k_value(lambda: &Partition, eps: &SignVector, kind: Kind) -> u32 {
    let h = h_value(lambda, eps, kind);
    match kind {
        Kind::Symp => h.max(-h - 1) as u32,
        Kind::OrthOdd => (h + 1).unsigned_abs() as u32,
        Kind::OrthEven => h.unsigned_abs() as u32,
    }
}

/// The value of `k` under which the symbol construction applies.
pub fn required_k(kind: Kind) -> u32 {
    match kind {
        Kind::OrthOdd => 1,
        _ => 0,
    }
}

/// Every intermediate object of the symbol construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpringerDatum {
    pub partition: Partition,
    pub kind: Kind,
    /// The lift of `ε` actually used.
    pub eps: SignVector,
    /// True when the given lift was replaced by its opposite to get `|A| >= |B|`.
    pub lift_flipped: bool,
    pub k: u32,
    pub a_sharp: Vec<u32>,
    pub b_sharp: Vec<u32>,
    pub blocks: Vec<Vec<u32>>,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    /// Normalized symbol.
    pub symbol: Symbol,
}

fn rank_of(lambda: &Partition) -> usize {
    (lambda.size() / 2) as usize
}

/// Splits `λ + [N-1, …, 0]` by parity and adds the staircases giving `A♯` (first row)
/// and `B♯` (second row), together with the offsets to remove afterwards.
fn sharp_rows(lambda: &Partition, kind: Kind) -> (Vec<u32>, Vec<u32>, u32, u32) {
    let n = rank_of(lambda);
    let positions = match kind {
        Kind::OrthEven => 2 * n,
        _ => 2 * n + 1,
    };
    let v: Vec<u32> = lambda
        .padded(positions)
        .iter()
        .enumerate()
        .map(|(k, &p)| p + (positions - 1 - k) as u32)
        .collect();
    let evens: Vec<u32> = v.iter().copied().filter(|x| x % 2 == 0).collect();
    let odds: Vec<u32> = v.iter().copied().filter(|x| x % 2 == 1).collect();
    let stair = |row: &[u32], extra: u32| -> Vec<u32> {
        row.iter()
            .enumerate()
            .map(|(t, &x)| x / 2 + (row.len() - 1 - t) as u32 + extra)
            .collect()
    };
    match kind {
        Kind::Symp => (stair(&evens, 0), stair(&odds, 1), 0, 1),
        Kind::OrthOdd | Kind::OrthEven => (stair(&odds, 0), stair(&evens, 0), 0, 0),
    }
}

/// Maximal runs of consecutive integers in the symmetric difference, increasing.
fn blocks(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let mut diff: Vec<u32> = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .copied()
        .collect();
    diff.sort_unstable();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for x in diff {
        match out.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == x => run.push(x),
            _ => out.push(vec![x]),
        }
    }
    out
}

fn unstair(row: &[u32], extra: u32) -> Result<Vec<u32>> {
    let len = row.len();
    let v: Vec<i64> = row
        .iter()
        .enumerate()
        .map(|(t, &x)| x as i64 - (len - 1 - t) as i64 - extra as i64)
        .collect();
    if v.iter().any(|&x| x < 0) || v.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Internal(format!("row {row:?} does not give a set")));
    }
    Ok(v.into_iter().map(|x| x as u32).collect())
}

fn construct_with(lambda: &Partition, eps: &SignVector, kind: Kind) -> Result<SpringerDatum> {
    let (a_sharp, b_sharp, off_a, off_b) = sharp_rows(lambda, kind);
    let bl = blocks(&a_sharp, &b_sharp);
    // In the symplectic case the smallest block belongs to the value 0, whose sign is +1.
    let mut keys = jord_bp(lambda, kind);
    if kind == Kind::Symp {
        keys.insert(0, 0);
    }
    if keys.len() != bl.len() {
        return Err(Error::Internal(format!(
            "{lambda}: {} blocks for {} signed values",
            bl.len(),
            keys.len()
        )));
    }
    let mut a = a_sharp.clone();
    let mut b = b_sharp.clone();
    for (&key, block) in keys.iter().zip(&bl) {
        if key != 0 && eps.get(key) == -1 {
            for x in block {
                if let Some(p) = a.iter().position(|y| y == x) {
                    a.remove(p);
                    b.push(*x);
                } else if let Some(p) = b.iter().position(|y| y == x) {
                    b.remove(p);
                    a.push(*x);
                }
            }
        }
    }
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let x = unstair(&a, off_a)?;
    let y = unstair(&b, off_b)?;
    Ok(SpringerDatum {
        partition: lambda.clone(),
        kind,
        eps: eps.clone(),
        lift_flipped: false,
        k: k_value(lambda, eps, kind),
        a_sharp,
        b_sharp,
        blocks: bl,
        a,
        b,
        symbol: Symbol::new(x, y)?.normalize(),
    })
}

/// Runs the construction for any sign vector, without the hypothesis on `k`.
/// For orthogonal kinds the lift giving `|A| >= |B|` is used.
pub fn springer_construct(lambda: &Partition, eps: &SignVector, kind: Kind) -> Result<SpringerDatum> {
    check_class(lambda, kind)?;
    eps.check_keys(&jord_bp(lambda, kind))?;
    let d = construct_with(lambda, eps, kind)?;
    if kind.modulo_diagonal() && d.a.len() < d.b.len() {
        let mut f = construct_with(lambda, &eps.flipped(), kind)?;
        f.lift_flipped = true;
        return Ok(f);
    }
    Ok(d)
}

/// Expected row sizes `(|A|, |B|)` under the hypothesis on `k`.
pub fn expected_row_sizes(lambda: &Partition, kind: Kind) -> (usize, usize) {
    let n = rank_of(lambda);
    match kind {
        Kind::OrthEven => (n, n),
        _ => (n + 1, n),
    }
}

/// The symbol of `ρ_{λ,ε}`; requires `k` to take its generic value.
pub fn springer_symbol(lambda: &Partition, eps: &SignVector, kind: Kind) -> Result<SpringerDatum> {
    check_class(lambda, kind)?;
    eps.check_keys(&jord_bp(lambda, kind))?;
    let k = k_value(lambda, eps, kind);
    let req = required_k(kind);
    if k != req {
        return Err(Error::KHypothesis { k, required: req });
    }
    let d = springer_construct(lambda, eps, kind)?;
    if (d.a.len(), d.b.len()) != expected_row_sizes(lambda, kind) {
        return Err(Error::Internal(format!(
            "{lambda}, {}: rows of sizes {} and {}",
            d.eps,
            d.a.len(),
            d.b.len()
        )));
    }
    Ok(d)
}

pub fn trivial_eps(lambda: &Partition, kind: Kind) -> SignVector {
    SignVector::trivial(&jord_bp(lambda, kind), kind.modulo_diagonal())
}

/// Inverse of `λ ↦ symbol(λ, 1)`: rebuilds the partition from a symbol.
pub fn partition_from_symbol(sym: &Symbol, kind: Kind) -> Result<Partition> {
    let s = sym.normalize();
    let n = s.rank() as usize;
    let attempt = |first: &[u32], second: &[u32], first_odd: bool, positions: usize| -> Option<Partition> {
        let mut v: Vec<i64> = Vec::with_capacity(positions);
        for &x in first {
            v.push(2 * x as i64 + first_odd as i64);
        }
        for &y in second {
            v.push(2 * y as i64 + (!first_odd) as i64);
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        let lam: Vec<i64> = v.iter().enumerate().map(|(k, &x)| x - (positions - 1 - k) as i64).collect();
        partition_from_i64(lam).ok().filter(|p| in_class(p, kind))
    };
    let found = match kind {
        Kind::Symp | Kind::OrthOdd => {
            if s.defect() != 1 {
                return Err(Error::UnsupportedDefect(s.defect()));
            }
            let m = s.y().len().max(n);
            let t = s.shifted(m - s.y().len());
            attempt(t.x(), t.y(), kind == Kind::OrthOdd, 2 * m + 1)
        }
        Kind::OrthEven => {
            if s.defect() != 0 {
                return Err(Error::UnsupportedDefect(s.defect()));
            }
            let m = s.x().len().max(n);
            let t = s.shifted(m - s.x().len());
            let one = attempt(t.x(), t.y(), true, 2 * m);
            let two = attempt(t.y(), t.x(), true, 2 * m);
            match (one, two) {
                (Some(p), Some(q)) if p != q => {
                    return Err(Error::Internal(format!("{sym}: two partitions {p} and {q}")));
                }
                (Some(p), _) | (None, Some(p)) => Some(p),
                (None, None) => None,
            }
        }
    };
    found.ok_or_else(|| Error::Precondition(format!("{sym} is not the symbol of a {kind} partition")))
}

/// `sp(λ)` through the special member of the family of `symbol(λ, 1)`.
pub fn sp_collapse(lambda: &Partition, kind: Kind) -> Result<Partition> {
    let d = springer_symbol(lambda, &trivial_eps(lambda, kind), kind)?;
    partition_from_symbol(&d.symbol.special_member(), kind)
}

/// `sp(λ)` as the smallest special partition dominating `λ`.
pub fn sp_collapse_brute(lambda: &Partition, kind: Kind) -> Result<Partition> {
    check_class(lambda, kind)?;
    let above: Vec<Partition> = special_partitions(kind, lambda.size())
        .into_iter()
        .filter(|m| lambda.leq(m))
        .collect();
    dominance_minimum(&above).ok_or_else(|| Error::NoMaximum(lambda.to_string()))
}

/// The special partition whose trivial-sign symbol lies in the family of `symbol(λ, ε)`.
pub fn sp_of_pair(lambda: &Partition, eps: &SignVector, kind: Kind) -> Result<Partition> {
    let d = springer_symbol(lambda, eps, kind)?;
    partition_from_symbol(&d.symbol.special_member(), kind)
}

/// Sign vectors constant on every interval, equal to `+1` on the nonzero part of
/// a symplectic `Δ_min`. Orthogonal results are canonical lifts.
pub fn admissible_eps(lambda: &Partition, kind: Kind) -> Result<Vec<SignVector>> {
    let st = IntervalStructure::new(lambda, kind)?;
    let r = st.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << r) {
        let tau: Vec<u8> = (0..r).map(|h| (mask >> h & 1) as u8).collect();
        let coords = FamilyCoords {
            tau,
            delta: vec![0; r],
        };
        if coords.satisfies_constraints(kind) {
            out.push(eps_from_coords_in(&st, &coords)?);
        }
    }
    Ok(out)
}

/// Pairs of bits on the intervals of a special partition, listed from `Δ_max` down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyCoords {
    pub tau: Vec<u8>,
    pub delta: Vec<u8>,
}

impl FamilyCoords {
    pub fn zero(r: usize) -> Self {
        FamilyCoords {
            tau: vec![0; r],
            delta: vec![0; r],
        }
    }

    /// Symplectic: `τ(Δ_min) = δ(Δ_min) = 0`. Orthogonal: `τ(Δ_max) = δ(Δ_min) = 0`.
    pub fn satisfies_constraints(&self, kind: Kind) -> bool {
        let r = self.tau.len();
        if r == 0 {
            return true;
        }
        match kind {
            Kind::Symp => self.tau[r - 1] == 0 && self.delta[r - 1] == 0,
            Kind::OrthOdd => self.tau[0] == 0 && self.delta[r - 1] == 0,
            Kind::OrthEven => self.tau[0] == 0,
        }
    }
}

/// Coordinates `(τ, 0)` of an admissible sign vector: `τ(Δ) = 1` exactly when `ε = -1` on `Δ`.
pub fn fam_coords(lambda: &Partition, eps: &SignVector, kind: Kind) -> Result<FamilyCoords> {
    let st = IntervalStructure::new(lambda, kind)?;
    eps.check_keys(&jord_bp(lambda, kind))?;
    let e = eps.canonical();
    let mut tau = Vec::with_capacity(st.len());
    for d in &st.intervals {
        let signs: Vec<i8> = d.values.iter().filter(|&&i| i != 0).map(|&i| e.get(i)).collect();
        if signs.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Precondition(format!("{eps} is not constant on the intervals of {lambda}")));
        }
        tau.push(u8::from(signs.first() == Some(&-1)));
    }
    let c = FamilyCoords {
        delta: vec![0; tau.len()],
        tau,
    };
    if !c.satisfies_constraints(kind) {
        return Err(Error::Precondition(format!("{eps} is not admissible for {lambda}")));
    }
    Ok(c)
}

fn eps_from_coords_in(st: &IntervalStructure, coords: &FamilyCoords) -> Result<SignVector> {
    if coords.tau.len() != st.len() {
        return Err(Error::Precondition("coordinates do not match the intervals".into()));
    }
    let mut pairs = Vec::new();
    for (d, &t) in st.intervals.iter().zip(&coords.tau) {
        for &i in d.values.iter().filter(|&&i| i != 0) {
            pairs.push((i, if t == 1 { -1 } else { 1 }));
        }
    }
    Ok(SignVector::from_pairs(pairs, st.kind.modulo_diagonal()))
}

pub fn eps_from_coords(lambda: &Partition, kind: Kind, coords: &FamilyCoords) -> Result<SignVector> {
    let st = IntervalStructure::new(lambda, kind)?;
    if !coords.satisfies_constraints(kind) || coords.delta.iter().any(|&d| d != 0) {
        return Err(Error::Precondition("coordinates outside the admissible range".into()));
    }
    eps_from_coords_in(&st, coords)
}

/// Checks that the special partition is special before computing its coordinates.
pub fn check_special_pair(lambda: &Partition, eps: &SignVector, kind: Kind) -> Result<()> {
    check_special(lambda, kind)?;
    eps.check_keys(&jord_bp(lambda, kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::symb_b;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sym(x: &[u32], y: &[u32]) -> Symbol {
        Symbol::new(x.to_vec(), y.to_vec()).unwrap()
    }

    fn sv(s: &str, q: bool) -> SignVector {
        SignVector::parse(s, q).unwrap()
    }

    #[test]
    fn k_values() {
        assert_eq!(k_value(&p("2"), &sv("2:+", false), Kind::Symp), 0);
        assert_eq!(k_value(&p("2"), &sv("2:-", false), Kind::Symp), 1);
        assert_eq!(k_value(&p("2,2"), &sv("2:-", false), Kind::Symp), 0);
        assert_eq!(k_value(&p("3,1,1"), &sv("1:+,3:+", true), Kind::OrthOdd), 1);
        assert_eq!(k_value(&p("3,1,1"), &sv("1:-,3:+", true), Kind::OrthOdd), 1);
        assert_eq!(k_value(&p("3"), &sv("3:-", true), Kind::OrthOdd), 1);
        assert_eq!(k_value(&p("3,1"), &sv("1:-,3:+", true), Kind::OrthEven), 2);
    }

    #[test]
    fn odd_orthogonal_construction() {
        let d = springer_symbol(&p("3,1,1"), &sv("1:+,3:+", true), Kind::OrthOdd).unwrap();
        assert_eq!(d.a_sharp, vec![5, 2, 0]);
        assert_eq!(d.b_sharp, vec![3, 0]);
        assert_eq!(d.symbol, sym(&[3, 1, 0], &[2, 0]).normalize());
        let e = springer_symbol(&p("3,1,1"), &sv("1:-,3:+", true), Kind::OrthOdd).unwrap();
        assert_eq!(e.symbol, sym(&[3, 2, 0], &[1, 0]).normalize());
        let f = springer_symbol(&p("3,1,1"), &sv("1:+,3:-", true), Kind::OrthOdd).unwrap();
        assert!(f.lift_flipped);
        assert_eq!(f.symbol, e.symbol);
    }

    #[test]
    fn symplectic_construction() {
        let d = springer_symbol(&p("2"), &sv("2:+", false), Kind::Symp).unwrap();
        assert_eq!(d.symbol, sym(&[2, 0], &[0]).normalize());
        let s = springer_symbol(&p("1,1"), &sv("", false), Kind::Symp).unwrap();
        assert_eq!(s.symbol, symb_b(&Partition::empty(), &p("1")));
        assert!(matches!(
            springer_symbol(&p("2"), &sv("2:-", false), Kind::Symp),
            Err(Error::KHypothesis { k: 1, required: 0 })
        ));
        let t = springer_symbol(&p("2,2"), &sv("2:-", false), Kind::Symp).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1, 2], vec![4, 5]]);
        assert_eq!(t.symbol, sym(&[1, 0], &[2]));
    }

    #[test]
    fn even_orthogonal_construction() {
        let d = springer_symbol(&p("1,1"), &sv("1:+", true), Kind::OrthEven).unwrap();
        assert_eq!(d.a_sharp, vec![0]);
        assert_eq!(d.b_sharp, vec![1]);
        let e = springer_symbol(&p("3,1"), &sv("1:+,3:+", true), Kind::OrthEven).unwrap();
        assert_eq!(e.blocks, vec![vec![2], vec![4]]);
        let g = springer_symbol(&p("2,2"), &sv("", true), Kind::OrthEven).unwrap();
        assert_eq!(g.symbol.x(), g.symbol.y());
        assert!(springer_symbol(&Partition::empty(), &sv("", true), Kind::OrthEven).is_ok());
    }

    #[test]
    fn inverse_on_examples() {
        assert_eq!(partition_from_symbol(&sym(&[2, 0], &[0]), Kind::Symp).unwrap(), p("2"));
        assert_eq!(partition_from_symbol(&sym(&[1, 0], &[1]), Kind::OrthOdd).unwrap(), p("1,1,1"));
        assert_eq!(partition_from_symbol(&sym(&[2, 0], &[1]), Kind::OrthOdd).unwrap(), p("3,1,1"));
        assert_eq!(partition_from_symbol(&sym(&[2, 0], &[1]), Kind::Symp).unwrap(), p("2,2"));
    }

    #[test]
    fn collapse_examples() {
        assert!(sp_collapse(&p("3,2"), Kind::OrthOdd).is_err());
        assert_eq!(sp_collapse(&p("2,1,1"), Kind::Symp).unwrap(), p("2,2"));
        assert_eq!(sp_collapse_brute(&p("2,1,1"), Kind::Symp).unwrap(), p("2,2"));
        assert_eq!(sp_collapse(&p("2,2,1"), Kind::OrthOdd).unwrap(), p("3,1,1"));
        assert_eq!(sp_of_pair(&p("2,2"), &sv("2:-", false), Kind::Symp).unwrap(), p("2,2"));
    }

    #[test]
    fn admissible_and_coordinates() {
        let a = admissible_eps(&p("2,2"), Kind::Symp).unwrap();
        assert_eq!(a.len(), 2);
        let b = admissible_eps(&p("2"), Kind::Symp).unwrap();
        assert_eq!(b, vec![sv("2:+", false)]);
        let c = admissible_eps(&p("3,1,1"), Kind::OrthOdd).unwrap();
        assert_eq!(c.len(), 2);
        for e in &c {
            let co = fam_coords(&p("3,1,1"), e, Kind::OrthOdd).unwrap();
            assert_eq!(&eps_from_coords(&p("3,1,1"), Kind::OrthOdd, &co).unwrap(), e);
        }
        assert!(fam_coords(&p("4,2"), &sv("2:+,4:-", false), Kind::Symp).is_err());
    }
}
