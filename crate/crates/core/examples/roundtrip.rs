//! From a hand-picked fold configuration to its quintic and back, on both
//! branches.
//!
//! cargo run --example roundtrip

use quintic_fold::foldconfig::relative_coefficient_error;
use quintic_fold::{build_config, Branch, FoldParams};

fn main() -> quintic_fold::Result<()> {
    let params = FoldParams {
        b: 0.75,
        c: -1.25,
        k: 2.0,
        p: -0.5,
        q: 1.5,
        h: 0.8,
    };
    let q = params.quintic();
    println!("{params:?}\n  -> {q}");
    for branch in [Branch::Plus, Branch::Minus] {
        let cfg = build_config(&q, Some(params.h), branch)?;
        let err = relative_coefficient_error(&cfg.forward_coefficients(), &q.lower());
        println!(
            "{branch:>5}: b={:.6} c={:.6} k={:.6} p={:.6} q={:.6}  error {err:.1e}",
            cfg.b, cfg.c, cfg.k, cfg.p, cfg.q
        );
    }
    Ok(())
}
