//! ζ(s,u) and its s-derivatives: Abel–Plana against the Euler–Maclaurin oracle.

use stieltjes::precision::{agreed_digits, sci};
use stieltjes::special::{hurwitz_zeta_sderiv_route, zeta_second_deriv_at_zero, ZetaRoute};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let ctx = PrecisionContext::default();
    for (s, u) in [("2", "1"), ("0.5", "0.25"), ("-1.5", "2"), ("0", "0.5"), ("-1", "1")] {
        let (s, u) = (ctx.parse(s)?, ctx.parse(u)?);
        for order in 0..=2 {
            let a = hurwitz_zeta_sderiv_route(order, &s, &u, ZetaRoute::AbelPlana, &ctx)?.value;
            let b = hurwitz_zeta_sderiv_route(order, &s, &u, ZetaRoute::Oracle, &ctx)?.value;
            println!(
                "∂^{order} ζ({}, {}) = {}  ({} digits shared)",
                s.to_f64(),
                u.to_f64(),
                sci(&a, 30),
                agreed_digits(&a, &b, ctx.working_digits())
            );
        }
    }
    // ζ''(0,u) has a closed real form through log Γ and γ₁.
    let u = ctx.parse("0.75")?;
    println!("ζ''(0, 0.75) = {}", sci(&zeta_second_deriv_at_zero(&u, &ctx)?.value, 30));
    Ok(())
}
