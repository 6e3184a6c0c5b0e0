//! Wavefront certificates for a few quadratic unipotent inputs.

use wfcomb::multiplicity::{certify, QuadInput};
use wfcomb::{Partition, SignVector};

fn main() -> wfcomb::Result<()> {
    let cases = [("2", "", "2", "2:-"), ("2,2", "", "", ""), ("4", "4:-", "2", "")];
    for (lp, ep, lm, em) in cases {
        let q = QuadInput::with_defaults(
            lp.parse::<Partition>()?,
            &SignVector::parse(ep, false)?,
            lm.parse::<Partition>()?,
            &SignVector::parse(em, false)?,
        )?;
        let c = certify(&q)?;
        println!(
            "{q}: d = {}, mu = ({}, {}), form {:?}, first failure {:?}",
            c.dual,
            c.mu1,
            c.mu2,
            c.form,
            c.verdicts.first_failure()
        );
    }
    Ok(())
}
