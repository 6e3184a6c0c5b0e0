//! Symbols attached to a partition with every admissible sign vector.

use wfcomb::springer::{admissible_eps, sp_of_pair, springer_symbol};
use wfcomb::{Kind, Partition};

fn main() -> wfcomb::Result<()> {
    for (kind, lam) in [(Kind::Symp, "2,2"), (Kind::Symp, "4,2"), (Kind::OrthOdd, "3,1,1")] {
        let lam: Partition = lam.parse()?;
        println!("{kind} {lam}");
        for eps in admissible_eps(&lam, kind)? {
            let d = springer_symbol(&lam, &eps, kind)?;
            println!(
                "  eps {:<10} symbol {:<16} sp {}",
                eps.to_string(),
                d.symbol.to_string(),
                sp_of_pair(&lam, &eps, kind)?
            );
        }
    }
    Ok(())
}
