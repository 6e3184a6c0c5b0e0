//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;

use wfcomb::verify::{run_suites, Bounds, Suite};

fn main() -> ExitCode {
    let criteria = [
        (1, "duality: three routes agree and d is an involution", Suite::Duality),
        (2, "springer: special partitions biject onto special symbols", Suite::Springer),
        (3, "collapse: lambda <= sp(lambda, eps) and both sp routes agree", Suite::Collapse),
        (4, "induction: d(cup) = ind(d) and the pair inequality", Suite::Induction),
        (5, "decompose: regular, dual union and tau all hold", Suite::Decompose),
        (6, "multiplicity: delta and tau identities, support equals scan", Suite::Multiplicity),
        (7, "wavefront: all seven verdicts on every all-even input", Suite::Wavefront),
        (8, "worked vector", Suite::Worked),
    ];
    let suites: Vec<Suite> = criteria.iter().map(|c| c.2).collect();
    let reports = match run_suites(&suites, &Bounds::acceptance(), 0) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL could not start the sweeps: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut ok = true;
    for ((num, what, _), r) in criteria.iter().zip(&reports) {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {num}: {what} ({} cases, {} failed, {:.2}s)",
            r.checked,
            r.failed,
            r.elapsed.as_secs_f64()
        );
        for f in &r.failures {
            println!("    {f}");
        }
        ok &= r.passed();
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
