//! Runs every verification sweep up to rank 4 and prints a summary.

use wfcomb::verify::{run_suites, Bounds, Suite};

fn main() -> wfcomb::Result<()> {
    let suites = Suite::parse_list("all")?;
    for r in run_suites(&suites, &Bounds::uniform(4), 0)? {
        println!("{:<14} {:>6} checked  {} failed", r.suite.name(), r.checked, r.failed);
        for f in &r.failures {
            println!("    {f}");
        }
    }
    Ok(())
}
