mod common;

use common::{horner, random_monic, rng, scan_zeros};
use proptest::prelude::*;
use quintic_fold::polynomial::{self, real_roots, Quintic};

const TOL: f64 = 1e-9;

fn distinct_odd(roots: &[quintic_fold::Root]) -> Vec<f64> {
    roots
        .iter()
        .filter(|r| r.multiplicity % 2 == 1)
        .map(|r| r.value)
        .collect()
}

#[test]
fn agrees_with_sign_scan_on_random_quintics() {
    let mut rng = rng(7);
    for _ in 0..1000 {
        let q = random_monic(&mut rng);
        let c = q.coeffs();
        let bound = 1.0 + c[1..].iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let steps = (2.0 * bound / 1e-4).ceil() as usize;
        let scanned = scan_zeros(|x| horner(&c, x), -bound, bound, steps);
        let found = distinct_odd(&real_roots(&q, 1e-12));
        // a pair closer than one grid step hides from the scan
        let hidden = found.windows(2).any(|w| w[1] - w[0] < 2e-4);
        if hidden {
            assert!(scanned.len() <= found.len(), "{q}");
            continue;
        }
        assert_eq!(scanned.len(), found.len(), "{q}: {scanned:?} vs {found:?}");
        for (s, f) in scanned.iter().zip(&found) {
            assert!((s - f).abs() <= TOL, "{q}: {s} vs {f}");
        }
    }
}

#[test]
fn residuals_and_parity_on_random_quintics() {
    let mut rng = rng(8);
    for _ in 0..1000 {
        let q = random_monic(&mut rng);
        let roots = real_roots(&q, TOL);
        let total: u32 = roots.iter().map(|r| r.multiplicity).sum();
        assert_eq!(total % 2, 1, "{q}: {roots:?}");
        for r in &roots {
            assert!(q.evaluate(r.value).abs() <= 10.0 * TOL, "{q} at {}", r.value);
        }
    }
}

#[test]
fn depress_shifts_roots_by_a_fifth_of_alpha() {
    let mut rng = rng(9);
    for _ in 0..300 {
        let q = random_monic(&mut rng);
        let (d, shift) = polynomial::depress(&q);
        assert_eq!(d.alpha(), 0.0);
        assert!((shift - q.alpha() / 5.0).abs() < 1e-15);
        let orig = real_roots(&q, 1e-12);
        let dep = real_roots(&d, 1e-12);
        if orig.len() != dep.len() {
            // only tolerable when a near-double root splits differently
            continue;
        }
        for (o, t) in orig.iter().zip(&dep) {
            assert!((o.value - (t.value - shift)).abs() < 1e-7, "{q}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scale_divides_roots(
        lower in prop::array::uniform5(-5.0f64..5.0),
        c in prop_oneof![0.1f64..4.0, -4.0f64..-0.1],
    ) {
        let q = Quintic::monic(lower[0], lower[1], lower[2], lower[3], lower[4]);
        let s = polynomial::scale(&q, c).unwrap();
        let orig = real_roots(&q, 1e-12);
        let scaled = real_roots(&s, 1e-12);
        prop_assume!(orig.len() == scaled.len());
        let mut expected: Vec<f64> = orig.iter().map(|r| r.value / c).collect();
        expected.sort_by(f64::total_cmp);
        for (e, r) in expected.iter().zip(&scaled) {
            prop_assert!((e - r.value).abs() <= 1e-7 * (1.0 + e.abs()), "{} vs {}", e, r.value);
        }
    }

    #[test]
    fn normalize_divides_by_leading(
        lead in prop_oneof![0.5f64..10.0, -10.0f64..-0.5],
        lower in prop::array::uniform5(-5.0f64..5.0),
    ) {
        let raw = [lead, lower[0], lower[1], lower[2], lower[3], lower[4]];
        let q = polynomial::normalize_monic(raw).unwrap();
        prop_assert!(q.is_monic());
        for t in [-2.0, -0.3, 0.0, 1.1, 3.0] {
            let direct = horner(&raw, t) / lead;
            prop_assert!((q.evaluate(t) - direct).abs() <= 1e-9 * (1.0 + direct.abs()));
        }
    }

    #[test]
    fn roots_with_known_factors(
        mut r in prop::array::uniform5(-3.0f64..3.0),
    ) {
        r.sort_by(f64::total_cmp);
        prop_assume!(r.windows(2).all(|w| w[1] - w[0] > 0.05));
        // expand (t - r0)...(t - r4)
        let mut c = vec![1.0];
        for root in r {
            let mut next = vec![0.0; c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i] += a;
                next[i + 1] -= a * root;
            }
            c = next;
        }
        let q = Quintic::new([c[0], c[1], c[2], c[3], c[4], c[5]]).unwrap();
        let found = real_roots(&q, 1e-12);
        prop_assert_eq!(found.len(), 5);
        for (f, e) in found.iter().zip(r) {
            prop_assert!((f.value - e).abs() < 1e-7);
            prop_assert_eq!(f.multiplicity, 1);
        }
    }
}

#[test]
fn repeated_roots_are_flagged() {
    // (t-1)^2 (t+2)^3
    let q = Quintic::new([1.0, 4.0, 1.0, -10.0, -4.0, 8.0]).unwrap();
    let roots = real_roots(&q, 1e-12);
    assert_eq!(roots.len(), 2);
    assert!((roots[0].value + 2.0).abs() < 1e-4);
    assert_eq!(roots[0].multiplicity, 3);
    assert!((roots[1].value - 1.0).abs() < 1e-6);
    assert_eq!(roots[1].multiplicity, 2);
}

#[test]
fn cauchy_bound_contains_roots() {
    let mut rng = rng(10);
    for _ in 0..200 {
        let q = random_monic(&mut rng);
        let b = q.cauchy_bound();
        for r in real_roots(&q, 1e-12) {
            assert!(r.value.abs() <= b);
        }
    }
}
