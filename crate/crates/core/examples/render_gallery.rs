//! Writes one SVG per solution and a gallery of all of them.
//!
//! cargo run --example render_gallery [out_dir]

use std::path::PathBuf;

use quintic_fold::render::{panel_name, render_gallery, render_solution};
use quintic_fold::{build_config, solve_all, Branch, Quintic, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("quintic-fold"));
    std::fs::create_dir_all(&dir)?;

    let q = Quintic::new([1.0, 1.0, -4.0, -3.0, 3.0, 1.0])?;
    let cfg = build_config(&q, None, Branch::Plus)?;
    let sols = solve_all(&cfg, &q, &SolveOptions::default())?.solutions;
    for (i, sol) in sols.iter().enumerate() {
        let path = dir.join(format!("panel-{}.svg", panel_name(i)));
        std::fs::write(&path, render_solution(&cfg, sol, None))?;
        println!("{}", path.display());
    }
    let path = dir.join("gallery.svg");
    std::fs::write(&path, render_gallery(&cfg, &sols)?)?;
    println!("{}", path.display());
    Ok(())
}
