//! log G(1+t) by the integral, Weierstrass product and Gosper–Vardi routes.

use stieltjes::precision::{agreed_digits, sci};
use stieltjes::special::{barnes_g_log, BarnesRoute};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let ctx = PrecisionContext::default();
    for t in ["0.5", "1", "2", "4.25"] {
        let t = ctx.parse(t)?;
        let vals: Vec<_> = [BarnesRoute::Integral, BarnesRoute::Weierstrass, BarnesRoute::GosperVardi]
            .into_iter()
            .map(|r| barnes_g_log(&t, r, &ctx))
            .collect::<Result<_, _>>()?;
        for v in &vals {
            println!("log G(1+{}) {:>12}: {}", t.to_f64(), v.route, sci(&v.value, 30));
        }
        let d = agreed_digits(&vals[0].value, &vals[2].value, ctx.working_digits());
        println!("  integral vs gosper_vardi: {d} digits");
    }
    Ok(())
}
