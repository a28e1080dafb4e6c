//! γₙ(u) by every route, with the digits each pair shares.

use stieltjes::precision::{agreed_digits, sci};
use stieltjes::special::{stieltjes, StieltjesMethod};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let ctx = PrecisionContext::for_target(40);
    for u in ["1", "0.5", "3"] {
        let u = ctx.parse(u)?;
        for n in 0..=4 {
            let mut vals = Vec::new();
            for m in StieltjesMethod::ALL {
                // The alternating-zeta recursion exists only at u = 1.
                if m == StieltjesMethod::AltZetaRecursion && u != 1 {
                    continue;
                }
                let v = stieltjes(n, &u, m, &ctx)?;
                println!("γ_{n}({}) {:>8}: {}  [{}]", u.to_f64(), m.label(), sci(&v.value, 40), v.diagnostics);
                vals.push(v.value);
            }
            let worst = vals.iter().skip(1).map(|v| agreed_digits(&vals[0], v, ctx.working_digits())).min().unwrap_or(0);
            println!("  routes agree to {worst} digits");
        }
    }
    Ok(())
}
