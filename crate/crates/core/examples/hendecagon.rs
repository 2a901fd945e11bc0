//! The regular hendecagon quintic t^5 + t^4 - 4t^3 - 3t^2 + 3t + 1, folded
//! root by root.
//!
//! cargo run --example hendecagon

use quintic_fold::{build_config, solve_all, Branch, Quintic, SolveOptions};

fn main() -> quintic_fold::Result<()> {
    let q = Quintic::new([1.0, 1.0, -4.0, -3.0, 3.0, 1.0])?;
    let cfg = build_config(&q, None, Branch::Plus)?;
    println!("q(t) = {q}");
    println!(
        "h = {}, n: x + {}y = {}, P = ({}, {}), l: x = {}, D = {}",
        cfg.h, cfg.b, cfg.c, cfg.p, cfg.q, cfg.k, cfg.discriminant
    );

    let out = solve_all(&cfg, &q, &SolveOptions::default())?;
    println!("{:>3} {:>14} {:>14} {:>22} {:>10}", "", "t", "2cos(2pi i/11)", "P'", "residual");
    for (i, sol) in out.solutions.iter().enumerate() {
        // ascending t runs over i = 5, 4, ..., 1
        let i = 5 - i;
        let expect = 2.0 * (2.0 * std::f64::consts::PI * i as f64 / 11.0).cos();
        println!(
            "{i:>3} {:>14.10} {:>14.10} ({:>9.5}, {:>9.5}) {:>10.1e}",
            sol.t,
            expect,
            sol.p_image.x,
            sol.p_image.y,
            sol.residuals.max()
        );
    }
    Ok(())
}
