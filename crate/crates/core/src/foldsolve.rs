//! Reconstructs and checks the two folds for every real root of a quintic.
//!
//! For a root `t`, the fold `xi` is fixed by `t` alone. The second fold `chi`
//! is the image of `n` under `xi`; reflecting `P` across it must land on `l`.
//! [`residual_g`] measures how far it lands from `l`, and vanishes exactly at
//! the roots of the configuration's quintic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foldconfig::{FoldConfig, ROUNDTRIP_TOL};
use crate::geometry::{self, Line, Point};
use crate::polynomial::{self, Quintic, RootOptions};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Every incidence residual must be at or below this.
    pub tol: f64,
    /// Bracket width for root isolation.
    pub root_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            root_tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Diagnostic {
    /// The image of `n` under `xi` is `n` itself.
    ChiEqualsN,
    /// `P'` is (nearly) `P`, so the normal of `chi` is unreliable.
    LowConfidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct IncidenceResiduals {
    /// `|Q'.y + h|`
    pub q_on_m: f64,
    /// `|P'.x - k|`
    pub p_on_l: f64,
    /// Canonical distance between the image of `n` under `xi` and `chi`.
    pub align: f64,
    /// Difference of the two half-angle cosines at `xi`.
    pub bisect: f64,
    /// `|q(t)|` over `max(1, sum |a_i| |t|^i)`.
    pub quintic_value: f64,
    /// `|d(xi, n) - d(xi, chi)|` in the parallel case, else 0.
    pub equidistant: f64,
    /// Distance from `xi ∩ n` to `chi`, relative to the point's size; 0 in the
    /// parallel case.
    pub pivot_on_chi: f64,
}

impl IncidenceResiduals {
    pub fn max(&self) -> f64 {
        [
            self.q_on_m,
            self.p_on_l,
            self.align,
            self.bisect,
            self.quintic_value,
            self.equidistant,
            self.pivot_on_chi,
        ]
        .into_iter()
        .fold(0.0, |m, v| if v.is_nan() { f64::NAN } else { m.max(v) })
    }

    pub fn passes(&self, tol: f64) -> bool {
        let m = self.max();
        !m.is_nan() && m <= tol
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldSolution {
    pub t: f64,
    pub multiplicity: u32,
    /// Ordinate of `P'` on `l`.
    pub s: f64,
    pub xi: Line,
    pub chi: Line,
    pub q_image: Point,
    pub p_image: Point,
    pub residuals: IncidenceResiduals,
    pub parallel_case: bool,
    pub accepted: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Diagnostic>,
}

/// A root of the quintic that does not yield a usable fold pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rejected {
    pub t: f64,
    pub diagnostic: Diagnostic,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SolveOutcome {
    pub solutions: Vec<FoldSolution>,
    pub rejected: Vec<Rejected>,
}

impl SolveOutcome {
    pub fn all_accepted(&self) -> bool {
        self.solutions.iter().all(|s| s.accepted)
    }
}

/// The image of `n` under the fold `xi(t)`.
pub fn chi_from_xi(cfg: &FoldConfig, t: f64) -> Line {
    geometry::reflect_line(&cfg.n_line(), &geometry::fold_xi(t, cfg.h))
}

/// `x`-offset from `l` of `P` reflected across [`chi_from_xi`].
pub fn residual_g(cfg: &FoldConfig, t: f64) -> f64 {
    geometry::reflect_point(cfg.p_point(), &chi_from_xi(cfg, t)).x - cfg.k
}

/// `4h + b(k+p) + 2b(bq+c) + b³(k-p)`, which vanishes exactly when `t = -h/b`
/// is a root.
pub fn parallel_condition(cfg: &FoldConfig) -> f64 {
    let (b, c, k, p, q, h) = (cfg.b, cfg.c, cfg.k, cfg.p, cfg.q, cfg.h);
    4.0 * h + b * (k + p) + 2.0 * b * (b * q + c) + b.powi(3) * (k - p)
}

fn parallel_condition_scale(cfg: &FoldConfig) -> f64 {
    let (b, c, k, p, q, h) = (cfg.b, cfg.c, cfg.k, cfg.p, cfg.q, cfg.h);
    4.0 * h + (b * (k + p)).abs() + (2.0 * b * (b * q + c)).abs() + (b.powi(3) * (k - p)).abs()
}

/// True when `xi(t)` is parallel to `n` and the configuration admits parallel
/// folds, i.e. `b t + h = 0` and [`parallel_condition`] vanishes.
pub fn parallel_case_check(cfg: &FoldConfig, t: f64) -> Result<bool> {
    if cfg.b == 0.0 {
        return Err(Error::ZeroB);
    }
    const REL: f64 = 1e-9;
    let on_direction = (cfg.b * t + cfg.h).abs() <= REL * ((cfg.b * t).abs() + cfg.h);
    let admits = parallel_condition(cfg).abs() <= REL * parallel_condition_scale(cfg);
    Ok(on_direction && admits)
}

fn xi_parallel_to_n(cfg: &FoldConfig, t: f64, tol: f64) -> bool {
    let det = cfg.b * t + cfg.h;
    det.abs() <= tol * t.hypot(cfg.h) * cfg.b.hypot(1.0)
}

struct Construction {
    xi: Line,
    chi_image: Line,
    chi: Line,
    q_image: Point,
    p_image: Point,
    low_confidence: bool,
}

fn construct(cfg: &FoldConfig, t: f64) -> Construction {
    let xi = geometry::fold_xi(t, cfg.h);
    let chi_image = geometry::reflect_line(&cfg.n_line(), &xi);
    let p_image = geometry::reflect_point(cfg.p_point(), &chi_image);
    let q_image = geometry::reflect_point(cfg.q_point(), &xi);
    let scale = cfg.p_point().norm().max(cfg.k.abs()).max(1.0);
    let (chi, low_confidence) = match geometry::fold_chi(cfg.p, cfg.q, cfg.k, p_image.y) {
        Ok(chi) if chi.normal().norm() > 1e-9 * scale => (chi, false),
        _ => (chi_image, true),
    };
    Construction {
        xi,
        chi_image,
        chi,
        q_image,
        p_image,
        low_confidence,
    }
}

/// All residuals for parameter `t`, checking `|q(t)|` against the
/// configuration's own quintic.
pub fn verify(cfg: &FoldConfig, t: f64, tol: f64) -> IncidenceResiduals {
    verify_against(cfg, &cfg.quintic(), t, tol)
}

/// As [`verify`], with `|q(t)|` measured on `source`. `tol` also decides
/// whether `xi` counts as parallel to `n`.
pub fn verify_against(cfg: &FoldConfig, source: &Quintic, t: f64, tol: f64) -> IncidenceResiduals {
    let cons = construct(cfg, t);
    residuals_for(cfg, source, t, tol, &cons)
}

fn residuals_for(cfg: &FoldConfig, source: &Quintic, t: f64, tol: f64, cons: &Construction) -> IncidenceResiduals {
    let n = cfg.n_line();
    let parallel = xi_parallel_to_n(cfg, t, tol);
    let equidistant = if parallel {
        let d1 = geometry::parallel_distance(&cons.xi, &n).unwrap_or_else(|_| cons.xi.distance(n.foot()));
        let d2 = geometry::parallel_distance(&cons.xi, &cons.chi)
            .unwrap_or_else(|_| cons.xi.distance(cons.chi.foot()));
        (d1 - d2).abs()
    } else {
        0.0
    };
    let pivot_on_chi = match (parallel, geometry::fold_xi_meets(t, cfg.h, &n)) {
        (false, Some(x)) => cons.chi.distance(x) / x.norm().max(1.0),
        _ => 0.0,
    };
    IncidenceResiduals {
        q_on_m: (cons.q_image.y + cfg.h).abs(),
        p_on_l: (cons.p_image.x - cfg.k).abs(),
        align: cons.chi_image.canonical_distance(&cons.chi),
        bisect: geometry::bisector_defect(&cons.xi, &n, &cons.chi),
        quintic_value: source.evaluate(t).abs() / evaluation_scale(source, t),
        equidistant,
        pivot_on_chi,
    }
}

fn evaluation_scale(q: &Quintic, t: f64) -> f64 {
    q.coeffs().iter().fold(0.0, |acc, a| acc * t.abs() + a.abs()).max(1.0)
}

/// Builds the solution record for one root, or reports why it is unusable.
pub fn solve_at(cfg: &FoldConfig, source: &Quintic, t: f64, multiplicity: u32, tol: f64) -> std::result::Result<FoldSolution, Rejected> {
    let cons = construct(cfg, t);
    let n = cfg.n_line();
    let size = 1.0 + n.canonical().c.abs();
    if cons.chi_image.approx_eq(&n, tol * size) {
        return Err(Rejected {
            t,
            diagnostic: Diagnostic::ChiEqualsN,
        });
    }
    let residuals = residuals_for(cfg, source, t, tol, &cons);
    let mut diagnostics = Vec::new();
    if cons.low_confidence {
        diagnostics.push(Diagnostic::LowConfidence);
    }
    Ok(FoldSolution {
        t,
        multiplicity,
        s: cons.p_image.y,
        xi: cons.xi,
        chi: cons.chi,
        q_image: cons.q_image,
        p_image: cons.p_image,
        accepted: residuals.passes(tol),
        residuals,
        parallel_case: xi_parallel_to_n(cfg, t, tol),
        diagnostics,
    })
}

/// One fold pair per real root of `source`, in ascending order of `t`.
pub fn solve_all(cfg: &FoldConfig, source: &Quintic, opts: &SolveOptions) -> Result<SolveOutcome> {
    let source = polynomial::normalize_monic(source.coeffs())?;
    let err = cfg.roundtrip_error(&source)?;
    if err.is_nan() || err > ROUNDTRIP_TOL {
        return Err(Error::ConfigMismatch(err));
    }
    let roots = polynomial::real_roots_with(
        &source,
        &RootOptions {
            tol: opts.root_tol,
            ..RootOptions::default()
        },
    );
    let mut out = SolveOutcome::default();
    for root in roots {
        match solve_at(cfg, &source, root.value, root.multiplicity, opts.tol) {
            Ok(sol) => out.solutions.push(sol),
            Err(rej) => out.rejected.push(rej),
        }
    }
    Ok(out)
}
