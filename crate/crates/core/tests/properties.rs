use wfcomb::classical::{class_partitions, is_special, special_partitions};
use wfcomb::duality::{dual_general, dual_special, transport_coords};
use wfcomb::partitions::partitions_of;
use wfcomb::springer::{admissible_eps, eps_from_coords, fam_coords, springer_symbol};
use wfcomb::{Kind, Partition};

fn partial_sums(p: &Partition, len: usize) -> Vec<u32> {
    (1..=len).map(|j| (1..=j).map(|i| p.get(i)).sum()).collect()
}

#[test]
fn dominance_matches_partial_sums() {
    for n in 0..=7 {
        let all = partitions_of(n);
        for a in &all {
            for b in &all {
                let len = a.len().max(b.len());
                let oracle = partial_sums(a, len)
                    .iter()
                    .zip(partial_sums(b, len))
                    .all(|(x, y)| *x <= y);
                assert_eq!(a.leq(b), oracle, "{a} vs {b}");
            }
        }
    }
}

#[test]
fn transpose_counts_columns() {
    for n in 0..=8 {
        for p in partitions_of(n) {
            let t = p.transpose();
            for j in 1..=p.get(1) as usize {
                let col = (1..=p.len()).filter(|&i| p.get(i) as usize >= j).count();
                assert_eq!(t.get(j) as usize, col);
            }
            assert_eq!(t.transpose(), p);
        }
    }
}

#[test]
fn partition_counts() {
    let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (n, &c) in expected.iter().enumerate() {
        assert_eq!(partitions_of(n as u32).len(), c);
    }
}

#[test]
fn dual_is_order_reversing_on_specials() {
    for kind in [Kind::Symp, Kind::OrthOdd] {
        for n in 1..=5 {
            let sp = special_partitions(kind, kind.size_for_rank(n));
            for a in &sp {
                for b in &sp {
                    if a.leq(b) {
                        let (da, db) = (dual_special(a, kind).unwrap(), dual_special(b, kind).unwrap());
                        assert!(db.leq(&da), "{a} <= {b} but d({b}) = {db} not <= d({a}) = {da}");
                    }
                }
            }
        }
    }
}

#[test]
fn dual_lands_in_specials() {
    for kind in [Kind::Symp, Kind::OrthOdd] {
        for n in 1..=5 {
            for p in class_partitions(kind, kind.size_for_rank(n)) {
                let d = dual_general(&p, kind).unwrap();
                assert!(is_special(&d, kind.dual()), "{kind} {p} -> {d}");
            }
        }
    }
}

#[test]
fn transported_coordinates_match_symbol_dual() {
    let mut checked = 0;
    for kind in [Kind::Symp, Kind::OrthOdd] {
        for n in 1..=5 {
            for lam in special_partitions(kind, kind.size_for_rank(n)) {
                let mu = dual_special(&lam, kind).unwrap();
                for eps in admissible_eps(&lam, kind).unwrap() {
                    let Ok(c) = fam_coords(&lam, &eps, kind) else { continue };
                    let sym = springer_symbol(&lam, &eps, kind).unwrap().symbol;
                    let t = transport_coords(&lam, kind, &c, 1).unwrap();
                    let eps2 = eps_from_coords(&mu, kind.dual(), &t).unwrap();
                    let sym2 = springer_symbol(&mu, &eps2, kind.dual()).unwrap().symbol;
                    assert_eq!(sym.dual().normalize(), sym2.normalize(), "{kind} {lam} {eps}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 50, "only {checked} cases");
}
