//! ψ and ψ′ by Bose, Laplace and asymptotic routes, plus Nörlund's integral for ψ.

use stieltjes::precision::sci;
use stieltjes::special::{digamma_route, norlund_digamma, trigamma_route, DigammaRoute, TrigammaRoute};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let ctx = PrecisionContext::default();
    for u in ["0.5", "1", "2.5", "20"] {
        let u = ctx.parse(u)?;
        for r in [DigammaRoute::Bose, DigammaRoute::Laplace, DigammaRoute::Asymptotic] {
            let v = digamma_route(&u, r, &ctx)?;
            println!("ψ({})  {:>10}: {}", u.to_f64(), v.route, sci(&v.value, 30));
        }
        for r in [TrigammaRoute::Bose, TrigammaRoute::Asymptotic] {
            let v = trigamma_route(&u, r, &ctx)?;
            println!("ψ′({}) {:>10}: {}", u.to_f64(), v.route, sci(&v.value, 30));
        }
    }
    let a = ctx.parse("0.3")?;
    println!("ψ(0.3) nörlund: {}", sci(&norlund_digamma(&a, &ctx)?.value, 30));
    Ok(())
}
