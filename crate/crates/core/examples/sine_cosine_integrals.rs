//! Si, si, Ci and the auxiliary f, g, which switch from series to asymptotics at x = 8.

use stieltjes::precision::sci;
use stieltjes::special::{aux_fg, aux_fg_asymptotic, sin_cos_integrals};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let ctx = PrecisionContext::default();
    for x in ["0.1", "1", "7.9", "8.1", "30", "200"] {
        let x = ctx.parse(x)?;
        let sc = sin_cos_integrals(&x, &ctx)?;
        let (f, g) = aux_fg(&x, &ctx)?;
        println!("x = {}", x.to_f64());
        println!("  Si = {}  si = {}  Ci = {}", sci(&sc.si_big, 25), sci(&sc.si, 25), sci(&sc.ci, 25));
        println!("  f = {}  g = {}", sci(&f, 25), sci(&g, 25));
        match aux_fg_asymptotic(&x, &ctx) {
            Some((fa, _)) => println!("  asymptotic f = {}", sci(&fa, 25)),
            None => println!("  asymptotic series too short at this x"),
        }
    }
    Ok(())
}
