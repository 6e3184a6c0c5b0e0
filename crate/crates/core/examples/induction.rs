//! Levi induction, the cup construction and endoscopic induction.

use wfcomb::duality::dual_general;
use wfcomb::induction::{cup, dual_tuple, endo_induce, levi_induce, LeviShape};
use wfcomb::{Kind, Partition};

fn main() -> wfcomb::Result<()> {
    let p = |s: &str| s.parse::<Partition>();

    let shape = LeviShape::new(vec![2], 1)?;
    let parts = vec![p("1,1")?, p("2")?];
    let c = cup(&shape, &parts)?;
    let lhs = dual_general(&c, Kind::Symp)?;
    let rhs = levi_induce(&shape, &dual_tuple(&shape, &parts)?)?;
    println!("cup = {c}, d(cup) = {lhs}, ind(d) = {rhs}");

    for (a, b) in [("2", "1,1"), ("1,1", "1,1"), ("2,2", ""), ("2", "")] {
        let e = endo_induce(&p(a)?, &p(b)?)?;
        println!(
            "endo({a}; {b}) = {}  regular {}  J+ {:?}  J- {:?}",
            e.induced, e.regular, e.j_plus, e.j_minus
        );
    }
    Ok(())
}
