//! The duality `d` between special partitions, computed three ways, its extension to
//! all partitions through `sp`, and the transport of family coordinates.

use crate::classical::{check_class, check_special, class_partitions, IntervalStructure, Kind};
use crate::error::{Error, Result};
use crate::partitions::{dominance_maximum, Partition};
use crate::springer::{partition_from_symbol, sp_collapse, springer_symbol, trivial_eps, FamilyCoords};

/// `d` through the symbol involution.
pub fn dual_special(lambda: &Partition, kind: Kind) -> Result<Partition> {
    check_special(lambda, kind)?;
    let sym = springer_symbol(lambda, &trivial_eps(lambda, kind), kind)?.symbol;
    partition_from_symbol(&sym.dual(), kind.dual())
}

/// `d` through the transpose of `λ + ζ(λ)`.
pub fn dual_via_zeta(lambda: &Partition, kind: Kind) -> Result<Partition> {
    let st = IntervalStructure::new(lambda, kind)?;
    Ok(lambda.add_seq(&st.zeta())?.transpose())
}

/// The largest partition of the class dominated by `target`, by enumeration.
pub fn collapse_below_brute(target: &Partition, kind: Kind) -> Result<Partition> {
    let below: Vec<Partition> = class_partitions(kind, target.size())
        .into_iter()
        .filter(|m| m.leq(target))
        .collect();
    dominance_maximum(&below).ok_or_else(|| Error::NoMaximum(target.to_string()))
}

/// Greedy collapse: while some value of the wrong parity has odd multiplicity, take the
/// largest one `q`, lower its last occurrence to `q-1` and raise the first later part
/// smaller than `q-1` by one.
pub fn collapse_below(target: &Partition, kind: Kind) -> Partition {
    let bad = 1 - kind.jord_parity();
    let mut v = target.parts().to_vec();
    loop {
        let p = Partition::from_unsorted(v.clone());
        let q = p.values().into_iter().find(|&i| i % 2 == bad && p.m(i) % 2 == 1);
        let Some(q) = q else { return p };
        let last = v.iter().rposition(|&x| x == q).expect("value present");
        v[last] = q - 1;
        match v.iter().skip(last + 1).position(|&x| x + 1 < q) {
            Some(off) => v[last + 1 + off] += 1,
            None => v.push(1),
        }
    }
}

/// `d` through the largest element of the dual class below a transpose.
pub fn dual_via_collapse(lambda: &Partition, kind: Kind) -> Result<Partition> {
    check_class(lambda, kind)?;
    match kind {
        Kind::Symp => collapse_below_brute(&lambda.union(&Partition::new(vec![1])?).transpose(), Kind::OrthOdd),
        Kind::OrthOdd => {
            let mut v = lambda.parts().to_vec();
            let top = v[0];
            let s = v.iter().take_while(|&&x| x == top).count();
            v[s - 1] -= 1;
            collapse_below_brute(&Partition::new(v)?.transpose(), Kind::Symp)
        }
        Kind::OrthEven => collapse_below_brute(&lambda.transpose(), Kind::OrthEven),
    }
}

/// `d(λ) = d(sp(λ))` on the whole class.
pub fn dual_general(lambda: &Partition, kind: Kind) -> Result<Partition> {
    dual_special(&sp_collapse(lambda, kind)?, kind)
}

/// Coordinates on the intervals of `d(λ)` attached to coordinates on those of `λ`.
pub fn transport_coords(lambda: &Partition, kind: Kind, coords: &FamilyCoords, defect: u32) -> Result<FamilyCoords> {
    let st = IntervalStructure::new(lambda, kind)?;
    let mu = dual_special(lambda, kind)?;
    let st2 = IntervalStructure::new(&mu, kind.dual())?;
    let r = st.len();
    if st2.len() != r || coords.tau.len() != r || coords.delta.len() != r {
        return Err(Error::Internal(format!(
            "{lambda} has {r} intervals, its dual {mu} has {}",
            st2.len()
        )));
    }
    // Positions are 0-based here: Δ_h is index h-1.
    let tau1 = coords.tau.first().copied().unwrap_or(0);
    let tau = (1..=r)
        .map(|h| {
            let t = coords.tau[r - h];
            if kind == Kind::OrthEven && defect == 0 {
                (t + tau1) % 2
            } else {
                t
            }
        })
        .collect();
    let delta = (1..=r)
        .map(|h| if h == r { 0 } else { coords.delta[r - h - 1] })
        .collect();
    Ok(FamilyCoords { tau, delta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(dual_special(&p("2,2"), Kind::Symp).unwrap(), p("3,1,1"));
        assert_eq!(dual_special(&p("1,1"), Kind::Symp).unwrap(), p("3"));
        assert_eq!(dual_special(&p("3"), Kind::OrthOdd).unwrap(), p("1,1"));
        assert_eq!(dual_special(&p("2"), Kind::Symp).unwrap(), p("1,1,1"));
        assert_eq!(dual_special(&p("3,1,1"), Kind::OrthOdd).unwrap(), p("2,2"));
        assert_eq!(dual_special(&Partition::empty(), Kind::Symp).unwrap(), p("1"));
        assert_eq!(dual_special(&Partition::empty(), Kind::OrthEven).unwrap(), Partition::empty());
    }

    #[test]
    fn three_routes_agree_on_small_cases() {
        for (s, k) in [("2,2", Kind::Symp), ("3,1,1", Kind::OrthOdd), ("3,1", Kind::OrthEven)] {
            let a = dual_special(&p(s), k).unwrap();
            assert_eq!(dual_via_zeta(&p(s), k).unwrap(), a);
            assert_eq!(dual_via_collapse(&p(s), k).unwrap(), a);
        }
    }

    #[test]
    fn greedy_collapse_examples() {
        assert_eq!(collapse_below(&p("3,2"), Kind::OrthOdd), p("3,1,1"));
        assert_eq!(collapse_below(&p("3,1"), Kind::Symp), p("2,2"));
        assert_eq!(collapse_below(&p("4"), Kind::OrthEven), p("3,1"));
        assert_eq!(collapse_below_brute(&p("4"), Kind::OrthEven).unwrap(), p("3,1"));
    }

    #[test]
    fn general_dual_goes_through_sp() {
        assert_eq!(dual_general(&p("2,1,1"), Kind::Symp).unwrap(), dual_special(&p("2,2"), Kind::Symp).unwrap());
    }
}
