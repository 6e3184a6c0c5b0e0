//! The duality between symplectic and odd orthogonal partitions by three routes.

use wfcomb::classical::class_partitions;
use wfcomb::duality::{dual_general, dual_via_collapse, dual_via_zeta};
use wfcomb::springer::sp_collapse;
use wfcomb::Kind;

fn main() -> wfcomb::Result<()> {
    let kind = Kind::Symp;
    for lam in class_partitions(kind, 8) {
        let sp = sp_collapse(&lam, kind)?;
        let d = dual_general(&lam, kind)?;
        let agree = dual_via_zeta(&sp, kind)? == d && dual_via_collapse(&lam, kind)? == d;
        println!("{:>16} -> {:<16} sp {:<12} routes agree: {agree}", lam.to_string(), d.to_string(), sp.to_string());
    }
    Ok(())
}
