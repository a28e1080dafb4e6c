//! Runs a slice of the identity catalog and prints each side with its route.

use stieltjes::catalog::{run_catalog, Catalog, Filter};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let selector = std::env::args().nth(1).unwrap_or_else(|| "tag:limit".into());
    let catalog = Catalog::builtin();
    let report = run_catalog(&catalog, &Filter::parse(&selector)?, &PrecisionContext::default())?;
    for o in &report.entries {
        println!("{} {:<16} {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.paper_anchor);
        println!("    lhs = {}\n    rhs = {}\n    |lhs−rhs| = {} (tol {})", o.lhs, o.rhs, o.abs_error, o.tolerance);
        if let Some(n) = &o.note {
            println!("    note: {n}");
        }
    }
    let s = &report.summary;
    println!("{} run, {} passed, {} failed, {} skipped", s.total, s.passed, s.failed, s.skipped);
    Ok(())
}
