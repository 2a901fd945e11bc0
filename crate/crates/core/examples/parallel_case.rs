//! A configuration where one root gives a fold xi parallel to n. The
//! reflection construction still produces chi, equidistant from xi.
//!
//! cargo run --example parallel_case

use quintic_fold::foldsolve::{parallel_case_check, parallel_condition};
use quintic_fold::{solve_all, Branch, FoldConfig, FoldParams, SolveOptions};

fn main() -> quintic_fold::Result<()> {
    let (b, c, k, p, h) = (1.0, 0.5, -2.0, 2.0, 1.0);
    // pick q so that t = -h/b is a root
    let q = -(4.0 * h + b * (k + p) + 2.0 * b * c + b * b * b * (k - p)) / (2.0 * b * b);
    let cfg = FoldConfig::from_params(FoldParams { b, c, k, p, q, h }, Branch::Plus);
    let quintic = cfg.quintic();
    println!("q(t) = {quintic}");
    println!("parallel condition = {:e}", parallel_condition(&cfg));
    println!("t = -h/b = {} is parallel: {}", -h / b, parallel_case_check(&cfg, -h / b)?);

    let out = solve_all(&cfg, &quintic, &SolveOptions::default())?;
    for sol in &out.solutions {
        println!(
            "t = {:>10.6}  parallel = {:<5}  equidistant = {:.1e}  accepted = {}",
            sol.t, sol.parallel_case, sol.residuals.equidistant, sol.accepted
        );
    }
    Ok(())
}
