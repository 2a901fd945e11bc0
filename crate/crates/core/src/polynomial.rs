//! Quintic polynomials: coefficient transforms and real-root isolation.
//!
//! Coefficients are stored in descending order, `[a5, a4, a3, a2, a1, a0]`.
//! For a monic quintic `t^5 + α t^4 + β t^3 + γ t^2 + δ t + ε` the accessors
//! [`Quintic::alpha`] through [`Quintic::epsilon`] name the lower coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real polynomial of exact degree five.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 6]", into = "[f64; 6]")]
pub struct Quintic {
    coeffs: [f64; 6],
}

impl Quintic {
    /// Builds a quintic from descending coefficients without normalizing.
    pub fn new(coeffs: [f64; 6]) -> Result<Self> {
        if coeffs[0] == 0.0 || !coeffs[0].is_finite() {
            return Err(Error::DegenerateDegree);
        }
        Ok(Self { coeffs })
    }

    /// Builds the monic quintic `t^5 + α t^4 + β t^3 + γ t^2 + δ t + ε`.
    pub fn monic(alpha: f64, beta: f64, gamma: f64, delta: f64, epsilon: f64) -> Self {
        Self {
            coeffs: [1.0, alpha, beta, gamma, delta, epsilon],
        }
    }

    pub fn coeffs(&self) -> [f64; 6] {
        self.coeffs
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0] == 1.0
    }

    pub fn alpha(&self) -> f64 {
        self.coeffs[1]
    }
    pub fn beta(&self) -> f64 {
        self.coeffs[2]
    }
    pub fn gamma(&self) -> f64 {
        self.coeffs[3]
    }
    pub fn delta(&self) -> f64 {
        self.coeffs[4]
    }
    pub fn epsilon(&self) -> f64 {
        self.coeffs[5]
    }

    /// The five lower coefficients `(α, β, γ, δ, ε)`.
    pub fn lower(&self) -> [f64; 5] {
        let c = self.coeffs;
        [c[1], c[2], c[3], c[4], c[5]]
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        horner(&self.coeffs, t)
    }

    /// Value of the `order`-th derivative at `t`.
    pub fn derivative_at(&self, order: usize, t: f64) -> f64 {
        let mut c = self.coeffs.to_vec();
        for _ in 0..order {
            c = derivative(&c);
        }
        horner(&c, t)
    }

    /// Cauchy bound `1 + max |a_i / a5|`; every root lies strictly inside.
    pub fn cauchy_bound(&self) -> f64 {
        let lead = self.coeffs[0].abs();
        1.0 + self.coeffs[1..]
            .iter()
            .map(|c| c.abs() / lead)
            .fold(0.0, f64::max)
    }
}

impl TryFrom<[f64; 6]> for Quintic {
    type Error = Error;

    fn try_from(coeffs: [f64; 6]) -> Result<Self> {
        Self::new(coeffs)
    }
}

impl From<Quintic> for [f64; 6] {
    fn from(q: Quintic) -> Self {
        q.coeffs
    }
}

impl fmt::Debug for Quintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Quintic").field(&self.coeffs).finish()
    }
}

impl fmt::Display for Quintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let power = 5 - i;
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (power, mag == 1.0) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{power}")?,
                (_, false) => write!(f, "{mag}t^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Divides through by the leading coefficient. Roots are unchanged.
pub fn normalize_monic(coeffs: [f64; 6]) -> Result<Quintic> {
    let lead = coeffs[0];
    if lead == 0.0 || !lead.is_finite() {
        return Err(Error::DegenerateDegree);
    }
    let mut out = coeffs.map(|c| c / lead);
    out[0] = 1.0;
    Ok(Quintic { coeffs: out })
}

pub fn evaluate(q: &Quintic, t: f64) -> f64 {
    q.evaluate(t)
}

/// Removes the quartic term with the shift `t = t' - α/5`.
///
/// Returns the depressed quintic in `t'` and the shift `α/5`, so a root `r'`
/// of the result maps back to `r' - shift`.
pub fn depress(q: &Quintic) -> (Quintic, f64) {
    let shift = q.alpha() / 5.0;
    if shift == 0.0 {
        return (*q, 0.0);
    }
    let mut c = taylor_shift(&q.coeffs, -shift);
    c[1] = 0.0;
    (Quintic { coeffs: c }, shift)
}

/// Substitutes `t = c t'` and renormalizes. Roots of the result are the input
/// roots divided by `c`.
pub fn scale(q: &Quintic, c: f64) -> Result<Quintic> {
    if c == 0.0 || !c.is_finite() {
        return Err(Error::ZeroScale);
    }
    let lead = q.leading();
    let mut out = [0.0; 6];
    // coefficient of t^j becomes a_j / (a5 c^(5-j))
    let mut div = lead;
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = q.coeffs[i] / div;
        div *= c;
    }
    out[0] = 1.0;
    Ok(Quintic { coeffs: out })
}

/// Existence condition for the configuration of a depressed quintic at unit
/// scale: `ε² - 4(β + δ + 1) >= 0`.
pub fn nishimura_precondition(q: &Quintic) -> Result<bool> {
    if q.alpha() != 0.0 {
        return Err(Error::NotDepressed(q.alpha()));
    }
    let q = normalize_monic(q.coeffs)?;
    Ok(q.epsilon().powi(2) - 4.0 * (q.beta() + q.delta() + 1.0) >= 0.0)
}

/// Scale factors tried by [`find_scale_for_precondition`], in order.
pub fn precondition_scale_candidates() -> impl Iterator<Item = f64> {
    std::iter::once(1.0)
        .chain((2..=64).map(|n| 1.0 / f64::from(n)))
        .chain((2..=64).map(f64::from))
}

/// First scale factor `c` such that `scale(q, c)` meets
/// [`nishimura_precondition`].
pub fn find_scale_for_precondition(q: &Quintic) -> Result<f64> {
    for c in precondition_scale_candidates() {
        if nishimura_precondition(&scale(q, c)?)? {
            return Ok(c);
        }
    }
    Err(Error::NoScaleFound {
        tried: "{1, 1/2, ..., 1/64, 2, ..., 64}".to_string(),
    })
}

/// A real root together with its detected multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub value: f64,
    pub multiplicity: u32,
}

/// Tuning for [`real_roots_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    /// Final bracket width.
    pub tol: f64,
    /// A derivative counts as vanishing when its magnitude is below this
    /// fraction of its own evaluation scale at the root.
    pub multiplicity_tol: f64,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            multiplicity_tol: 1e-6,
        }
    }
}

/// All real roots in ascending order, using default multiplicity detection.
pub fn real_roots(q: &Quintic, tol: f64) -> Vec<Root> {
    real_roots_with(
        q,
        &RootOptions {
            tol,
            ..RootOptions::default()
        },
    )
}

/// Sturm-sequence isolation followed by bisection and a guarded Newton polish.
pub fn real_roots_with(q: &Quintic, opts: &RootOptions) -> Vec<Root> {
    let tol = if opts.tol > 0.0 { opts.tol } else { 1e-12 };
    let chain = SturmChain::new(&q.coeffs);
    let bound = q.cauchy_bound();
    let mut roots = Vec::new();

    let mut stack = vec![(-bound, bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = chain.count(lo, hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            let (x, lo, hi) = refine_single(q, &chain, lo, hi, tol);
            roots.push((x, lo, hi, 1));
            continue;
        }
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            // unresolvable cluster; report once with the counted multiplicity
            roots.push((mid, lo, hi, count));
            continue;
        }
        stack.push((mid, hi));
        stack.push((lo, mid));
    }

    let mut out: Vec<Root> = roots
        .into_iter()
        .map(|(x, lo, hi, cluster)| {
            let m = detect_multiplicity(q, x, opts.multiplicity_tol);
            let crosses = q.evaluate(lo).signum() * q.evaluate(hi).signum() < 0.0
                || q.evaluate(hi) == 0.0 && q.evaluate(lo) != 0.0;
            let m = m.max(cluster);
            let m = match (crosses, m % 2 == 1) {
                (true, false) => m - 1,
                (false, true) if m < 5 => m + 1,
                _ => m,
            };
            Root {
                value: x,
                multiplicity: m.clamp(1, 5),
            }
        })
        .collect();
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    out
}

fn detect_multiplicity(q: &Quintic, x: f64, mtol: f64) -> u32 {
    let mut c = q.coeffs.to_vec();
    let mut m = 1;
    for _ in 1..5 {
        c = derivative(&c);
        let scale: f64 = {
            let r = x.abs().max(1.0);
            let n = c.len();
            c.iter()
                .enumerate()
                .map(|(i, a)| a.abs() * r.powi((n - 1 - i) as i32))
                .sum()
        };
        if horner(&c, x).abs() < mtol * scale {
            m += 1;
        } else {
            break;
        }
    }
    m
}

/// Narrows `(lo, hi]`, which holds exactly one distinct root.
fn refine_single(q: &Quintic, chain: &SturmChain, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64, f64) {
    let f_hi = q.evaluate(hi);
    if f_hi == 0.0 {
        return (hi, lo, hi);
    }
    let mut f_lo = q.evaluate(lo);
    let sign_change = f_lo.signum() != f_hi.signum();

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sign_change {
            let f_mid = q.evaluate(mid);
            if f_mid == 0.0 {
                return (mid, lo, hi);
            }
            if f_mid.signum() == f_lo.signum() {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        } else if chain.count(lo, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let x = newton_polish(q, 0.5 * (lo + hi), lo - tol, hi + tol);
    (x, lo, hi)
}

fn newton_polish(q: &Quintic, mut x: f64, lo: f64, hi: f64) -> f64 {
    let mut fx = q.evaluate(x).abs();
    for _ in 0..8 {
        if fx == 0.0 {
            break;
        }
        let d = q.derivative_at(1, x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - q.evaluate(x) / d;
        if !(lo..=hi).contains(&next) {
            break;
        }
        let f_next = q.evaluate(next).abs();
        if f_next >= fx {
            break;
        }
        x = next;
        fx = f_next;
    }
    x
}

struct SturmChain {
    polys: Vec<Vec<f64>>,
}

impl SturmChain {
    fn new(coeffs: &[f64]) -> Self {
        let p = normalize_max(trim(coeffs.to_vec(), 0.0));
        let dp = normalize_max(derivative(&p));
        let mut polys = vec![p, dp];
        loop {
            let n = polys.len();
            if polys[n - 1].len() <= 1 {
                break;
            }
            let r = remainder(&polys[n - 2], &polys[n - 1]);
            // members are normalized to unit max-norm, so this is relative
            let r = trim(r, 1e-11);
            if r.is_empty() {
                break;
            }
            polys.push(normalize_max(r.into_iter().map(|c| -c).collect()));
        }
        Self { polys }
    }

    fn sign_changes(&self, x: f64) -> usize {
        let mut changes = 0;
        let mut last = 0.0_f64;
        for p in &self.polys {
            let v = horner(p, x);
            if v == 0.0 {
                continue;
            }
            if last != 0.0 && v.signum() != last.signum() {
                changes += 1;
            }
            last = v;
        }
        changes
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: f64, hi: f64) -> u32 {
        self.sign_changes(lo).saturating_sub(self.sign_changes(hi)) as u32
    }
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().fold(0.0, |acc, &a| acc * x + a)
}

fn derivative(c: &[f64]) -> Vec<f64> {
    let n = c.len();
    if n <= 1 {
        return vec![0.0];
    }
    c[..n - 1]
        .iter()
        .enumerate()
        .map(|(i, &a)| a * (n - 1 - i) as f64)
        .collect()
}

/// Drops leading coefficients with magnitude `<= eps`.
fn trim(mut c: Vec<f64>, eps: f64) -> Vec<f64> {
    let lead = c.iter().position(|a| a.abs() > eps).unwrap_or(c.len());
    c.drain(..lead);
    c
}

fn normalize_max(c: Vec<f64>) -> Vec<f64> {
    let m = c.iter().fold(0.0_f64, |acc, a| acc.max(a.abs()));
    if m == 0.0 {
        return c;
    }
    c.into_iter().map(|a| a / m).collect()
}

fn remainder(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut r = num.to_vec();
    let dn = den.len();
    while r.len() >= dn {
        let factor = r[0] / den[0];
        for (i, d) in den.iter().enumerate() {
            r[i] -= factor * d;
        }
        r.remove(0);
    }
    r
}

/// Coefficients of `p(t + s)`, descending, by repeated synthetic division.
fn taylor_shift(c: &[f64; 6], s: f64) -> [f64; 6] {
    let mut a = *c;
    let n = a.len();
    for i in 0..n - 1 {
        for j in 1..n - i {
            a[j] += s * a[j - 1];
        }
    }
    a
}
