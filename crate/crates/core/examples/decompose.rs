//! Splitting all-even symplectic partitions into regularly inducing pairs.

use wfcomb::classical::class_partitions;
use wfcomb::induction::{admissible_taus, decompose};
use wfcomb::Kind;

fn main() -> wfcomb::Result<()> {
    for lam in class_partitions(Kind::Symp, 8).into_iter().filter(|l| l.all_even()) {
        for tau in admissible_taus(&lam) {
            let d = decompose(&lam, &tau)?;
            println!(
                "{lam:<10} tau {tau:?}  ->  ({}) + ({})  ok {}",
                d.lambda1,
                d.lambda2,
                d.checks.all()
            );
        }
    }
    Ok(())
}
