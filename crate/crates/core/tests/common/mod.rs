//! Shared generators and brute-force oracles for the integration tests. None
//! of this goes through the library's root finder.
#![allow(dead_code)]

use std::f64::consts::PI;

use quintic_fold::{FoldParams, Quintic};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const HENDECAGON: [f64; 6] = [1.0, 1.0, -4.0, -3.0, 3.0, 1.0];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn hendecagon() -> Quintic {
    Quintic::new(HENDECAGON).unwrap()
}

/// `2 cos(2πi/11)` for `i = 1..5`, ascending.
pub fn hendecagon_roots() -> Vec<f64> {
    let mut r: Vec<f64> = (1..=5)
        .map(|i| 2.0 * (2.0 * PI * f64::from(i) / 11.0).cos())
        .collect();
    r.sort_by(f64::total_cmp);
    r
}

/// `h ∈ [0.25, 4]`, `|b| <= 3`, `|c|, |k|, |p|, |q| <= 5`, `|p - k| >= 0.1`.
pub fn random_params(rng: &mut impl Rng) -> FoldParams {
    loop {
        let params = FoldParams {
            h: rng.gen_range(0.25..=4.0),
            b: rng.gen_range(-3.0..=3.0),
            c: rng.gen_range(-5.0..=5.0),
            k: rng.gen_range(-5.0..=5.0),
            p: rng.gen_range(-5.0..=5.0),
            q: rng.gen_range(-5.0..=5.0),
        };
        if (params.p - params.k).abs() >= 0.1 {
            return params;
        }
    }
}

/// Monic quintic with lower coefficients uniform in `[-5, 5]`.
pub fn random_monic(rng: &mut impl Rng) -> Quintic {
    let mut c = [0.0; 5];
    for v in &mut c {
        *v = rng.gen_range(-5.0..=5.0);
    }
    Quintic::monic(c[0], c[1], c[2], c[3], c[4])
}

/// Straight Horner evaluation of descending coefficients.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, a| acc * x + a)
}

/// Fujiwara bound `2 max |a_i / a_n|^(1/(n-i))`.
pub fn fujiwara_bound(coeffs: &[f64; 6]) -> f64 {
    let lead = coeffs[0];
    2.0 * coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, a)| (a / lead).abs().powf(1.0 / (i as f64 + 1.0)))
        .fold(0.0, f64::max)
}

/// Sign changes of `f` on a uniform grid over `[lo, hi]` with `steps`
/// intervals, each refined by bisection.
pub fn scan_zeros(f: impl Fn(f64) -> f64, lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let dx = (hi - lo) / steps as f64;
    let mut out = Vec::new();
    let mut x0 = lo;
    let mut f0 = f(x0);
    for i in 1..=steps {
        let x1 = lo + dx * i as f64;
        let f1 = f(x1);
        if f0 == 0.0 {
            out.push(x0);
        } else if f0.signum() != f1.signum() && f1 != 0.0 {
            let (mut a, mut b, mut fa) = (x0, x1, f0);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if m <= a || m >= b {
                    break;
                }
                let fm = f(m);
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            out.push(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    out
}

/// Largest pairwise gap between two equally long sorted lists.
pub fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
