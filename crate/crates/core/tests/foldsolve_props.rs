mod common;

use common::{fujiwara_bound, hendecagon, hendecagon_roots, max_gap, random_params, rng, scan_zeros};
use quintic_fold::foldconfig::{build_config, nishimura_pipeline_with, Branch, FoldConfig, FoldParams};
use quintic_fold::foldsolve::{
    parallel_case_check, parallel_condition, residual_g, solve_all, solve_at, verify, Diagnostic, SolveOptions,
};
use quintic_fold::geometry::{bisects, reflect_line, reflect_point};
use quintic_fold::polynomial::real_roots;
use quintic_fold::{Error, Point, Quintic};
use rand::Rng;

#[test]
fn sign_scan_of_fold_residual_finds_quintic_roots() {
    let mut rng = rng(21);
    for _ in 0..60 {
        let cfg = FoldConfig::from_params(random_params(&mut rng), Branch::Plus);
        let q = cfg.quintic();
        let bound = fujiwara_bound(&q.coeffs());
        let scanned = scan_zeros(|t| residual_g(&cfg, t), -bound, bound, 40_000);
        let roots: Vec<f64> = real_roots(&q, 1e-12)
            .iter()
            .filter(|r| r.multiplicity % 2 == 1)
            .map(|r| r.value)
            .collect();
        assert_eq!(scanned.len(), roots.len(), "{cfg:?}");
        assert!(max_gap(&scanned, &roots) <= 1e-6, "{cfg:?}");
    }
}

#[test]
fn accepted_solutions_satisfy_every_incidence() {
    let mut rng = rng(22);
    let opts = SolveOptions::default();
    for _ in 0..200 {
        let params = random_params(&mut rng);
        let q = params.quintic();
        let branch = if rng.gen_bool(0.5) { Branch::Plus } else { Branch::Minus };
        let cfg = build_config(&q, Some(params.h), branch).unwrap();
        let out = solve_all(&cfg, &q, &opts).unwrap();
        let n = cfg.n_line();
        assert!(out.all_accepted(), "{params:?} {branch}");
        for sol in &out.solutions {
            let qi = reflect_point(cfg.q_point(), &sol.xi);
            assert!((qi.y + cfg.h).abs() <= 1e-9);
            let pi = reflect_point(cfg.p_point(), &sol.chi);
            assert!((pi.x - cfg.k).abs() <= 1e-9);
            assert!(reflect_line(&n, &sol.xi).canonical_distance(&sol.chi) <= 1e-9);
            assert!(bisects(&sol.xi, &n, &sol.chi, 1e-9));
            assert!((sol.xi.x_intercept().unwrap() - sol.t).abs() <= 1e-12 * (1.0 + sol.t.abs()));
        }
    }
}

#[test]
fn recovered_s_keeps_the_distance_relation() {
    let mut rng = rng(23);
    for _ in 0..200 {
        let params = random_params(&mut rng);
        let cfg = FoldConfig::from_params(params, Branch::Plus);
        let out = solve_all(&cfg, &cfg.quintic(), &SolveOptions::default()).unwrap();
        let (b, k, p, q, h) = (cfg.b, cfg.k, cfg.p, cfg.q, cfg.h);
        for sol in &out.solutions {
            let t = sol.t;
            let lhs = (t * (k - p) - h * (sol.s - q)).abs() / ((k - p).powi(2) + (sol.s - q).powi(2)).sqrt();
            let rhs = (t - b * h).abs() / (1.0 + b * b).sqrt();
            assert!((lhs - rhs).abs() <= 1e-8 * (1.0 + rhs), "{params:?} t={t}: {lhs} vs {rhs}");
        }
    }
}

/// `q` chosen so that `t = -h/b` is a root.
fn parallel_params(rng: &mut impl Rng) -> FoldParams {
    loop {
        let h: f64 = rng.gen_range(0.5..=2.0);
        let b: f64 = rng.gen_range(0.5..=2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let c = rng.gen_range(-3.0..=3.0);
        let k: f64 = rng.gen_range(-3.0..=3.0);
        let p = rng.gen_range(-3.0..=3.0);
        let q = -(4.0 * h + b * (k + p) + 2.0 * b * c + b.powi(3) * (k - p)) / (2.0 * b * b);
        if (p - k).abs() >= 0.1 && q.abs() <= 20.0 {
            return FoldParams { b, c, k, p, q, h };
        }
    }
}

#[test]
fn parallel_case_is_subsumed() {
    let mut rng = rng(24);
    for _ in 0..100 {
        let cfg = FoldConfig::from_params(parallel_params(&mut rng), Branch::Plus);
        assert!(parallel_condition(&cfg).abs() < 1e-9);
        let t0 = -cfg.h / cfg.b;
        assert!(cfg.quintic().evaluate(t0).abs() < 1e-9, "{cfg:?}");
        assert!(parallel_case_check(&cfg, t0).unwrap());
        let out = solve_all(&cfg, &cfg.quintic(), &SolveOptions::default()).unwrap();
        let sol = out
            .solutions
            .iter()
            .min_by(|a, b| (a.t - t0).abs().total_cmp(&(b.t - t0).abs()))
            .unwrap();
        assert!((sol.t - t0).abs() < 1e-8, "{cfg:?}");
        assert!(sol.parallel_case && sol.accepted, "{sol:?}");
        assert!(sol.residuals.equidistant <= 1e-9);
    }
}

#[test]
fn parallel_check_needs_nonzero_b() {
    let cfg = build_config(&hendecagon(), None, Branch::Plus).unwrap();
    assert!(matches!(parallel_case_check(&cfg, 0.0), Err(Error::ZeroB)));
}

#[test]
fn hendecagon_solutions_match_cosines() {
    let q = hendecagon();
    let cfg = build_config(&q, None, Branch::Plus).unwrap();
    let out = solve_all(&cfg, &q, &SolveOptions::default()).unwrap();
    let ts: Vec<f64> = out.solutions.iter().map(|s| s.t).collect();
    assert!(max_gap(&ts, &hendecagon_roots()) < 1e-10);
    assert!(out.all_accepted() && out.rejected.is_empty());
    // P' ordinates of the five hendecagon folds, to drawing precision
    let read = [-1.57, 0.662, -3.62, 2.365, -4.84];
    for (sol, s) in out.solutions.iter().zip(read) {
        assert!((sol.s - s).abs() < 5e-3, "{} vs {s}", sol.s);
        assert!(sol.q_image.distance(Point::new(2.0 * sol.t, -1.0)) < 1e-12);
    }
}

#[test]
fn tampered_t_fails_verification() {
    let cfg = build_config(&hendecagon(), None, Branch::Plus).unwrap();
    let t = hendecagon_roots()[4];
    assert!(verify(&cfg, t, 1e-9).passes(1e-9));
    assert!(!verify(&cfg, t + 0.01, 1e-9).passes(1e-9));
}

#[test]
fn nishimura_roots_map_back_to_direct_roots() {
    let q = hendecagon();
    for scale in [None, Some(0.2)] {
        let report = nishimura_pipeline_with(&q, scale, Branch::Plus).unwrap();
        let out = solve_all(&report.config, &report.scaled, &SolveOptions::default()).unwrap();
        assert!(out.all_accepted());
        let mut mapped: Vec<f64> = out.solutions.iter().map(|s| report.map_root(s.t)).collect();
        mapped.sort_by(f64::total_cmp);
        assert!(max_gap(&mapped, &hendecagon_roots()) <= 1e-8);
    }
}

#[test]
fn mismatched_source_is_refused() {
    let cfg = build_config(&hendecagon(), None, Branch::Plus).unwrap();
    let other = Quintic::monic(1.0, -4.0, -3.0, 3.0, 2.0);
    assert!(matches!(solve_all(&cfg, &other, &SolveOptions::default()), Err(Error::ConfigMismatch(_))));
}

#[test]
fn xi_perpendicular_to_n_is_rejected() {
    let mut rng = rng(25);
    for _ in 0..100 {
        let cfg = FoldConfig::from_params(random_params(&mut rng), Branch::Plus);
        let t = cfg.b * cfg.h;
        let rej = solve_at(&cfg, &cfg.quintic(), t, 1, 1e-9).unwrap_err();
        assert_eq!(rej.diagnostic, Diagnostic::ChiEqualsN);
        assert!(solve_at(&cfg, &cfg.quintic(), t + 0.5, 1, 1e-9).is_ok());
    }
}
