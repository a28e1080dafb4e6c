//! log Γ(u) by its five routes against MPFR.

use rug::Float;
use stieltjes::precision::{agreed_digits, sci};
use stieltjes::special::{log_gamma, LogGammaRoute};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let ctx = PrecisionContext::default();
    let routes = [
        LogGammaRoute::Binet2,
        LogGammaRoute::Binet1,
        LogGammaRoute::Bourguet,
        LogGammaRoute::BinomialSeries,
        LogGammaRoute::Stirling,
    ];
    for u in ["0.25", "1.5", "7", "40"] {
        let u = ctx.parse(u)?;
        let reference = Float::with_val(ctx.prec(), u.ln_gamma_ref());
        for r in routes {
            let v = log_gamma(&u, r, &ctx)?;
            println!(
                "log Γ({}) {:>10}: {}  {} digits vs MPFR",
                u.to_f64(),
                r.label(),
                sci(&v.value, 30),
                agreed_digits(&v.value, &reference, ctx.working_digits())
            );
        }
    }
    Ok(())
}
