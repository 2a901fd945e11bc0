//! Direct configuration against the depress-and-scale route on the same
//! quintic. Both find the same roots; the second needs far larger numbers.
//!
//! cargo run --example nishimura_compare [scale]

use quintic_fold::foldconfig::nishimura_pipeline_with;
use quintic_fold::{build_config, solve_all, Branch, Quintic, SolveOptions};

fn main() -> quintic_fold::Result<()> {
    let scale = std::env::args()
        .nth(1)
        .map(|s| quintic_fold::cli::parse_number(&s).expect("scale"))
        .or(Some(0.2));
    let q = Quintic::new([1.0, 1.0, -4.0, -3.0, 3.0, 1.0])?;
    let opts = SolveOptions::default();

    let direct = build_config(&q, None, Branch::Plus)?;
    let report = nishimura_pipeline_with(&q, scale, Branch::Plus)?;
    let cfg = &report.config;
    println!("depressed: {}  (shift {})", report.depressed, report.shift);
    println!("scaled by {}: {}", report.scale, report.scaled);
    println!();
    println!("{:<10} {:>14} {:>14}", "", "direct", "depress+scale");
    for (name, a, b) in [
        ("h", direct.h, cfg.h),
        ("b", direct.b, cfg.b),
        ("c", direct.c, cfg.c),
        ("k", direct.k, cfg.k),
        ("p", direct.p, cfg.p),
        ("q", direct.q, cfg.q),
        ("D", direct.discriminant, cfg.discriminant),
        ("max |x|", direct.max_magnitude(), cfg.max_magnitude()),
    ] {
        println!("{name:<10} {a:>14.6} {b:>14.6}");
    }

    let ours = solve_all(&direct, &q, &opts)?;
    let theirs = solve_all(cfg, &report.scaled, &opts)?;
    let mut mapped: Vec<f64> = theirs.solutions.iter().map(|s| report.map_root(s.t)).collect();
    mapped.sort_by(f64::total_cmp);
    println!();
    for (a, b) in ours.solutions.iter().zip(&mapped) {
        println!("t = {:>15.12}  mapped back {:>15.12}  diff {:.1e}", a.t, b, (a.t - b).abs());
    }
    Ok(())
}
