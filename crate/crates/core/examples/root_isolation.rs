//! Real roots with multiplicities, plus the depress and scale transforms.
//!
//! cargo run --example root_isolation

use quintic_fold::polynomial::{depress, find_scale_for_precondition, nishimura_precondition, real_roots, scale};
use quintic_fold::Quintic;

fn show(label: &str, q: &Quintic) {
    let roots: Vec<String> = real_roots(q, 1e-12)
        .iter()
        .map(|r| match r.multiplicity {
            1 => format!("{:.10}", r.value),
            m => format!("{:.10} (x{m})", r.value),
        })
        .collect();
    println!("{label:<28} {q}\n{:<28} {}", "", roots.join(", "));
}

fn main() -> quintic_fold::Result<()> {
    show("hendecagon", &Quintic::new([1.0, 1.0, -4.0, -3.0, 3.0, 1.0])?);
    show("(t-1)^2 (t+2)^3", &Quintic::new([1.0, 4.0, 1.0, -10.0, -4.0, 8.0])?);
    show("t^5", &Quintic::new([1.0, 0.0, 0.0, 0.0, 0.0, 0.0])?);
    show("t^5 - 1", &Quintic::new([1.0, 0.0, 0.0, 0.0, 0.0, -1.0])?);
    // leading coefficient other than 1 is normalized away
    show("2t^5 - 10t + 2", &Quintic::new([2.0, 0.0, 0.0, 0.0, -10.0, 2.0])?);

    let q = Quintic::new([1.0, 1.0, -4.0, -3.0, 3.0, 1.0])?;
    let (d, shift) = depress(&q);
    println!();
    show(&format!("depressed (t = t' - {shift})"), &d);
    println!("{:<28} precondition holds: {}", "", nishimura_precondition(&d)?);
    let c = find_scale_for_precondition(&d)?;
    let s = scale(&d, c)?;
    show(&format!("scaled by {c:.6}"), &s);
    println!("{:<28} precondition holds: {}", "", nishimura_precondition(&s)?);
    Ok(())
}
