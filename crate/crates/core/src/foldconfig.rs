//! From quintic coefficients to the points and lines of the two-fold
//! construction.
//!
//! The construction fixes `Q = (0, h)`, `m: y = -h`, `P = (p, q)`, `l: x = k`
//! and `n: x + b y = c`. A fold `xi` carrying `Q` onto `m` meets the x-axis at
//! `t`, and `t` is a root of
//!
//! ```text
//! t^5 + α t^4 + β t^3 + γ t^2 + δ t + ε
//! ```
//!
//! with the coefficients given by [`forward_coefficients`]. Going the other way,
//! `h` is picked so that the discriminant is nonnegative, `b` and `c` follow from
//! a quadratic, and `(k, p, q)` from a 3x3 linear system.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Line, Point};
use crate::polynomial::{self, Quintic};

/// Relative coefficient error allowed when checking a configuration against
/// its source quintic.
pub const ROUNDTRIP_TOL: f64 = 1e-8;

/// Sign choice for `√D` in `b` (and the opposite sign, tripled, in `c`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

impl FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "plus" | "+" => Ok(Branch::Plus),
            "minus" | "-" => Ok(Branch::Minus),
            other => Err(format!("unknown branch {other:?} (expected plus or minus)")),
        }
    }
}

/// The raw parameter tuple of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoldParams {
    pub b: f64,
    pub c: f64,
    pub k: f64,
    pub p: f64,
    pub q: f64,
    pub h: f64,
}

impl FoldParams {
    pub fn forward_coefficients(&self) -> [f64; 5] {
        forward_coefficients(self.b, self.c, self.k, self.p, self.q, self.h)
    }

    /// The monic quintic whose roots are the fold parameters `t`.
    pub fn quintic(&self) -> Quintic {
        let [al, be, ga, de, ep] = self.forward_coefficients();
        Quintic::monic(al, be, ga, de, ep)
    }
}

/// Coefficients `(α, β, γ, δ, ε)` of the monic quintic satisfied by `t` for
/// the configuration `(b, c, k, p, q, h)`.
pub fn forward_coefficients(b: f64, c: f64, k: f64, p: f64, q: f64, h: f64) -> [f64; 5] {
    let b2 = b * b;
    let h2 = h * h;
    let h3 = h2 * h;
    let h4 = h2 * h2;
    let alpha = (-k - p + 2.0 * b * q - b2 * k + b2 * p - 12.0 * b * h - 2.0 * c) / 4.0;
    let beta = h * (q + 2.0 * b * p - b2 * q + b * c - h + 2.0 * b2 * h);
    let gamma = h2 * (3.0 * p - k - 6.0 * b * q - b2 * k - 3.0 * b2 * p + 2.0 * b * h) / 2.0;
    let delta = -h3 * (q + 2.0 * b * p - b2 * q - b * c);
    let epsilon = h4 * (-k - p + 2.0 * b * q - b2 * k + b2 * p + 2.0 * c) / 4.0;
    [alpha, beta, gamma, delta, epsilon]
}

/// Largest coefficient difference relative to the coefficient vector
/// `[1, target...]`.
pub fn relative_coefficient_error(got: &[f64; 5], target: &[f64; 5]) -> f64 {
    let scale = target.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    got.iter()
        .zip(target)
        .map(|(g, t)| (g - t).abs())
        .fold(0.0, f64::max)
        / scale
}

/// `D(h) = (ε - h⁴α)² - 4h⁶(h⁴ + h²β + δ)`; real `b, c` exist iff `D >= 0`.
pub fn discriminant(q: &Quintic, h: f64) -> f64 {
    let h2 = h * h;
    let h4 = h2 * h2;
    let h6 = h4 * h2;
    let e = q.epsilon() - h4 * q.alpha();
    e * e - 4.0 * h6 * (h4 + h2 * q.beta() + q.delta())
}

/// Values of `h` tried by [`choose_h`], in order.
pub fn h_candidates() -> impl Iterator<Item = f64> {
    (0..=40)
        .map(|i| 0.5_f64.powi(i))
        .chain((1..=20).map(|i| 2.0_f64.powi(i)))
}

/// First `h` in [`h_candidates`] with a nonnegative discriminant.
pub fn choose_h(q: &Quintic) -> Result<f64> {
    if q.epsilon() == 0.0 {
        return Err(Error::ZeroConstantTerm);
    }
    h_candidates()
        .find(|&h| discriminant(q, h) >= 0.0)
        .ok_or(Error::NoValidH)
}

/// Solves the pair of constraints linking `(b, c)` to the quintic at this `h`.
pub fn compute_bc(q: &Quintic, h: f64, branch: Branch) -> Result<(f64, f64)> {
    check_h(h)?;
    let d = discriminant(q, h);
    if d < 0.0 {
        return Err(Error::NegativeDiscriminant(d));
    }
    let root = branch.sign() * d.sqrt();
    let e = q.epsilon() - h.powi(4) * q.alpha();
    let b = (e + root) / (4.0 * h.powi(5));
    let c = (e - 3.0 * root) / (4.0 * h.powi(4));
    Ok((b, c))
}

/// Solves the α, β and γ rows of the coefficient system for `(k, p, q)` with
/// `b, c, h` fixed.
pub fn compute_kpq(quintic: &Quintic, h: f64, b: f64, c: f64) -> Result<(f64, f64, f64)> {
    check_h(h)?;
    let b2 = b * b;
    let mut m = [
        [-(1.0 + b2), b2 - 1.0, 2.0 * b, 4.0 * quintic.alpha() + 12.0 * b * h + 2.0 * c],
        [0.0, 2.0 * b, 1.0 - b2, quintic.beta() / h - b * c + h - 2.0 * b2 * h],
        [-(1.0 + b2), 3.0 - 3.0 * b2, -6.0 * b, 2.0 * quintic.gamma() / (h * h) - 2.0 * b * h],
    ];
    let x = solve3(&mut m)?;
    Ok((x[0], x[1], x[2]))
}

/// Gaussian elimination with partial pivoting on an augmented 3x4 matrix.
fn solve3(m: &mut [[f64; 4]; 3]) -> Result<[f64; 3]> {
    let row_scale = m
        .iter()
        .map(|r| r[..3].iter().fold(0.0_f64, |a, v| a.max(v.abs())))
        .fold(0.0_f64, f64::max);
    let mut min_pivot = f64::INFINITY;
    for col in 0..3 {
        let pivot_row = (col..3)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        m.swap(col, pivot_row);
        let pivot = m[col][col];
        min_pivot = min_pivot.min(pivot.abs());
        if row_scale == 0.0 || pivot.abs() <= 1e-13 * row_scale {
            return Err(Error::SingularSystem {
                condition: if row_scale == 0.0 { 0.0 } else { pivot.abs() / row_scale },
            });
        }
        let top = m[col];
        for row in m.iter_mut().skip(col + 1) {
            let f = row[col] / pivot;
            for (v, t) in row.iter_mut().zip(top).skip(col) {
                *v -= f * t;
            }
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let s: f64 = (i + 1..3).map(|j| m[i][j] * x[j]).sum();
        x[i] = (m[i][3] - s) / m[i][i];
    }
    Ok(x)
}

fn check_h(h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidH(h))
    }
}

/// A solved configuration for one quintic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoldConfig {
    pub h: f64,
    pub b: f64,
    pub c: f64,
    pub k: f64,
    pub p: f64,
    pub q: f64,
    #[serde(rename = "D")]
    pub discriminant: f64,
    pub branch: Branch,
}

impl FoldConfig {
    pub fn params(&self) -> FoldParams {
        FoldParams {
            b: self.b,
            c: self.c,
            k: self.k,
            p: self.p,
            q: self.q,
            h: self.h,
        }
    }

    /// Wraps a parameter tuple directly, e.g. one drawn at random. The
    /// discriminant is recomputed from the tuple's own quintic.
    pub fn from_params(params: FoldParams, branch: Branch) -> Self {
        let d = discriminant(&params.quintic(), params.h);
        Self {
            h: params.h,
            b: params.b,
            c: params.c,
            k: params.k,
            p: params.p,
            q: params.q,
            discriminant: d,
            branch,
        }
    }

    pub fn forward_coefficients(&self) -> [f64; 5] {
        self.params().forward_coefficients()
    }

    pub fn quintic(&self) -> Quintic {
        self.params().quintic()
    }

    /// `Q = (0, h)`
    pub fn q_point(&self) -> Point {
        Point::new(0.0, self.h)
    }

    /// `m: y = -h`
    pub fn m_line(&self) -> Line {
        Line::horizontal(-self.h)
    }

    /// `P = (p, q)`
    pub fn p_point(&self) -> Point {
        Point::new(self.p, self.q)
    }

    /// `l: x = k`
    pub fn l_line(&self) -> Line {
        Line::vertical(self.k)
    }

    /// `n: x + b y = c`
    pub fn n_line(&self) -> Line {
        Line {
            a: 1.0,
            b: self.b,
            c: self.c,
        }
    }

    /// Largest parameter magnitude among `h, b, c, k, p, q`.
    pub fn max_magnitude(&self) -> f64 {
        [self.h, self.b, self.c, self.k, self.p, self.q]
            .iter()
            .fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Relative error of this configuration's coefficients against `source`.
    pub fn roundtrip_error(&self, source: &Quintic) -> Result<f64> {
        let source = polynomial::normalize_monic(source.coeffs())?;
        Ok(relative_coefficient_error(&self.forward_coefficients(), &source.lower()))
    }
}

/// Builds the configuration for `quintic`. With no `h_override`, `h` comes from
/// [`choose_h`].
pub fn build_config(quintic: &Quintic, h_override: Option<f64>, branch: Branch) -> Result<FoldConfig> {
    let q = polynomial::normalize_monic(quintic.coeffs())?;
    if q.epsilon() == 0.0 {
        return Err(Error::ZeroConstantTerm);
    }
    let h = match h_override {
        Some(h) => {
            check_h(h)?;
            h
        }
        None => choose_h(&q)?,
    };
    let d = discriminant(&q, h);
    let (b, c) = compute_bc(&q, h, branch)?;
    let (k, p, qy) = compute_kpq(&q, h, b, c)?;
    if (p - k).abs() <= 1e-12 * p.abs().max(k.abs()).max(1.0) {
        return Err(Error::DegenerateP(k));
    }
    let cfg = FoldConfig {
        h,
        b,
        c,
        k,
        p,
        q: qy,
        discriminant: d,
        branch,
    };
    let err = cfg.roundtrip_error(&q)?;
    if err.is_nan() || err > ROUNDTRIP_TOL {
        return Err(Error::ConfigMismatch(err));
    }
    Ok(cfg)
}

/// Intermediate results of the depress-then-scale route, where the
/// configuration is always built at `h = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NishimuraReport {
    pub source: Quintic,
    pub depressed: Quintic,
    pub shift: f64,
    pub scale: f64,
    pub scaled: Quintic,
    /// Whether the depressed quintic met the precondition before scaling.
    pub precondition_holds: bool,
    pub config: FoldConfig,
}

impl NishimuraReport {
    /// Maps a root of the scaled quintic back to a root of the source.
    pub fn map_root(&self, t_scaled: f64) -> f64 {
        self.scale * t_scaled - self.shift
    }
}

pub fn nishimura_pipeline(q: &Quintic) -> Result<NishimuraReport> {
    nishimura_pipeline_with(q, None, Branch::Plus)
}

/// Like [`nishimura_pipeline`], but with an optional fixed scale factor in
/// place of [`polynomial::find_scale_for_precondition`].
pub fn nishimura_pipeline_with(q: &Quintic, scale: Option<f64>, branch: Branch) -> Result<NishimuraReport> {
    let source = polynomial::normalize_monic(q.coeffs())?;
    let (depressed, shift) = polynomial::depress(&source);
    let precondition_holds = polynomial::nishimura_precondition(&depressed)?;
    let scale = match scale {
        Some(c) => c,
        None if precondition_holds => 1.0,
        None => polynomial::find_scale_for_precondition(&depressed)?,
    };
    let scaled = polynomial::scale(&depressed, scale)?;
    let config = build_config(&scaled, Some(1.0), branch)?;
    Ok(NishimuraReport {
        source,
        depressed,
        shift,
        scale,
        scaled,
        precondition_holds,
        config,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hendecagon() -> Quintic {
        Quintic::monic(1.0, -4.0, -3.0, 3.0, 1.0)
    }

    fn nishimura_scaled() -> Quintic {
        Quintic::monic(0.0, -110.0, -55.0, 2310.0, 979.0)
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&hendecagon(), 1.0), 0.0);
        assert!((discriminant(&nishimura_scaled(), 1.0) - 949637.0).abs() < 1e-6);
        let q = Quintic::monic(0.0, 0.0, 0.0, 0.0, 2.0);
        // 4 - 4e-6 * 1e-4
        assert!((discriminant(&q, 0.1) - (4.0 - 4e-10)).abs() < 1e-12);
    }

    #[test]
    fn choose_h_examples() {
        assert_eq!(choose_h(&hendecagon()).unwrap(), 1.0);
        assert_eq!(choose_h(&nishimura_scaled()).unwrap(), 1.0);
        let tiny = Quintic::monic(0.0, 0.0, 0.0, 0.0, 0.001);
        let h = choose_h(&tiny).unwrap();
        assert!(h <= 1.0);
        assert!(discriminant(&tiny, h) >= 0.0);
        assert_eq!(choose_h(&Quintic::monic(1.0, -4.0, -3.0, 3.0, 0.0)), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn compute_bc_examples() {
        for branch in [Branch::Plus, Branch::Minus] {
            assert_eq!(compute_bc(&hendecagon(), 1.0, branch).unwrap(), (0.0, 0.0));
        }
        let (b, c) = compute_bc(&nishimura_scaled(), 1.0, Branch::Plus).unwrap();
        let sd = 949637.0_f64.sqrt();
        assert!((b - (979.0 + sd) / 4.0).abs() < 1e-9);
        assert!((c - (979.0 - 3.0 * sd) / 4.0).abs() < 1e-9);

        let neg = Quintic::monic(0.0, 10.0, 0.0, 10.0, 0.0);
        assert!(matches!(compute_bc(&neg, 1.0, Branch::Plus), Err(Error::NegativeDiscriminant(_))));
    }

    #[test]
    fn compute_kpq_hendecagon() {
        let (k, p, q) = compute_kpq(&hendecagon(), 1.0, 0.0, 0.0).unwrap();
        assert!((k + 1.5).abs() < 1e-15);
        assert!((p + 2.5).abs() < 1e-15);
        assert!((q + 3.0).abs() < 1e-15);
    }

    #[test]
    fn forward_examples() {
        assert_eq!(forward_coefficients(0.0, 0.0, -1.5, -2.5, -3.0, 1.0), [1.0, -4.0, -3.0, 3.0, 1.0]);
        let [al, _, _, _, ep] = forward_coefficients(0.0, 0.0, -0.8, 0.8, 0.0, 1.0);
        assert_eq!(al, 0.0);
        assert_eq!(ep, 0.0);
    }

    #[test]
    fn build_config_examples() {
        let cfg = build_config(&hendecagon(), None, Branch::Plus).unwrap();
        assert_eq!(
            cfg,
            FoldConfig {
                h: 1.0,
                b: 0.0,
                c: 0.0,
                k: -1.5,
                p: -2.5,
                q: -3.0,
                discriminant: 0.0,
                branch: Branch::Plus
            }
        );

        let cfg = build_config(&nishimura_scaled(), Some(1.0), Branch::Plus).unwrap();
        let err = relative_coefficient_error(&cfg.forward_coefficients(), &nishimura_scaled().lower());
        assert!(err < ROUNDTRIP_TOL, "{err}");

        assert_eq!(
            build_config(&Quintic::monic(1.0, -4.0, -3.0, 3.0, 0.0), None, Branch::Plus),
            Err(Error::ZeroConstantTerm)
        );
        assert!(matches!(build_config(&hendecagon(), Some(-1.0), Branch::Plus), Err(Error::InvalidH(_))));
    }

    #[test]
    fn branches_coincide_when_discriminant_vanishes() {
        let plus = build_config(&hendecagon(), None, Branch::Plus).unwrap();
        let minus = build_config(&hendecagon(), None, Branch::Minus).unwrap();
        assert_eq!(plus.params(), minus.params());
    }

    #[test]
    fn nishimura_hendecagon() {
        let r = nishimura_pipeline_with(&hendecagon(), Some(0.2), Branch::Plus).unwrap();
        assert!(!r.precondition_holds);
        assert_eq!(r.shift, 0.2);
        let want = [0.0, -110.0, -55.0, 2310.0, 979.0];
        for (g, w) in r.scaled.lower().iter().zip(want) {
            assert!((g - w).abs() <= 1e-12 * w.abs().max(1.0));
        }
        assert!((r.config.discriminant - 949637.0).abs() < 1e-6);

        // the default search settles on the first passing candidate
        let auto = nishimura_pipeline(&hendecagon()).unwrap();
        assert!(polynomial::nishimura_precondition(&auto.scaled).unwrap());
    }

    #[test]
    fn nishimura_already_passing() {
        let r = nishimura_pipeline(&nishimura_scaled()).unwrap();
        assert!(r.precondition_holds);
        assert_eq!(r.scale, 1.0);
        assert_eq!(r.config.h, 1.0);
    }

    #[test]
    fn branch_parses() {
        assert_eq!("plus".parse::<Branch>().unwrap(), Branch::Plus);
        assert_eq!("MINUS".parse::<Branch>().unwrap(), Branch::Minus);
        assert!("both".parse::<Branch>().is_err());
    }
}
