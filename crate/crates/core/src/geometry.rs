//! Points, lines in normal form, and the reflections that model a single fold.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative determinant threshold under which two normals count as dependent.
pub const PARALLEL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Self) -> Self {
        Self::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// The line `a x + b y = c`. Coefficients are kept as constructed; use
/// [`Line::canonical`] when comparing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if (a == 0.0 && b == 0.0) || !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::DegenerateLine);
        }
        Ok(Self { a, b, c })
    }

    /// `x = k`
    pub fn vertical(k: f64) -> Self {
        Self { a: 1.0, b: 0.0, c: k }
    }

    /// `y = v`
    pub fn horizontal(v: f64) -> Self {
        Self { a: 0.0, b: 1.0, c: v }
    }

    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    /// Unit direction vector, a quarter turn counterclockwise from the normal.
    pub fn direction(&self) -> Point {
        let n = self.normal();
        Point::new(-n.y, n.x) * (1.0 / n.norm())
    }

    /// Closest point of the line to the origin.
    pub fn foot(&self) -> Point {
        let n = self.normal();
        n * (self.c / n.dot(n))
    }

    /// Signed distance, positive on the side the normal points to.
    pub fn signed_distance(&self, p: Point) -> f64 {
        (self.normal().dot(p) - self.c) / self.normal().norm()
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.signed_distance(p).abs()
    }

    /// Unit normal with `a > 0`, or `a = 0` and `b > 0`.
    pub fn canonical(&self) -> Line {
        let s = self.normal().norm();
        let flip = if self.a < 0.0 || (self.a == 0.0 && self.b < 0.0) { -1.0 } else { 1.0 };
        let k = flip / s;
        Line {
            a: self.a * k,
            b: self.b * k,
            c: self.c * k,
        }
    }

    /// Distance between the canonical coefficient triples. Insensitive to the
    /// orientation flip near `a = 0`.
    pub fn canonical_distance(&self, other: &Line) -> f64 {
        let (u, v) = (self.canonical(), other.canonical());
        let same = ((u.a - v.a).powi(2) + (u.b - v.b).powi(2) + (u.c - v.c).powi(2)).sqrt();
        let opposite = ((u.a + v.a).powi(2) + (u.b + v.b).powi(2) + (u.c + v.c).powi(2)).sqrt();
        same.min(opposite)
    }

    pub fn approx_eq(&self, other: &Line, tol: f64) -> bool {
        self.canonical_distance(other) <= tol
    }

    /// `x` where the line crosses `y = 0`, if it does.
    pub fn x_intercept(&self) -> Option<f64> {
        (self.a != 0.0).then(|| self.c / self.a)
    }
}

/// The fold that carries `Q(0, h)` onto `y = -h` at `(2t, -h)`: `t x - h y = t²`.
pub fn fold_xi(t: f64, h: f64) -> Line {
    Line { a: t, b: -h, c: t * t }
}

/// The fold that carries `P(p, q)` onto `x = k` at `(k, s)`: the perpendicular
/// bisector of `P P'`.
pub fn fold_chi(p: f64, q: f64, k: f64, s: f64) -> Result<Line> {
    let (na, nb) = (k - p, s - q);
    if na == 0.0 && nb == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok(Line {
        a: na,
        b: nb,
        c: 0.5 * (s * s - q * q) + 0.5 * (k * k - p * p),
    })
}

pub fn reflect_point(p: Point, mirror: &Line) -> Point {
    let n = mirror.normal();
    let d = (n.dot(p) - mirror.c) / n.dot(n);
    p - n * (2.0 * d)
}

/// Image of `target` under the fold `mirror`, built from the images of the two
/// points one unit either side of the target's foot point.
pub fn reflect_line(target: &Line, mirror: &Line) -> Line {
    let foot = target.foot();
    let dir = target.direction();
    let r1 = reflect_point(foot - dir, mirror);
    let r2 = reflect_point(foot + dir, mirror);
    let d = r2 - r1;
    let n = Point::new(-d.y, d.x);
    Line {
        a: n.x,
        b: n.y,
        c: n.dot(r1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Intersection {
    Point(Point),
    Parallel,
}

fn normals_dependent(l1: &Line, l2: &Line, rel: f64) -> (bool, f64) {
    let det = l1.a * l2.b - l2.a * l1.b;
    let scale = l1.normal().norm() * l2.normal().norm();
    (det.abs() <= rel * scale, det)
}

pub fn intersect(l1: &Line, l2: &Line) -> Result<Intersection> {
    let (parallel, det) = normals_dependent(l1, l2, PARALLEL_EPS);
    if parallel {
        let scale = 1.0 + l1.canonical().c.abs().max(l2.canonical().c.abs());
        if l1.approx_eq(l2, 1e-12 * scale) {
            return Err(Error::CoincidentLines);
        }
        return Ok(Intersection::Parallel);
    }
    let x = (l1.c * l2.b - l2.c * l1.b) / det;
    let y = (l1.a * l2.c - l2.a * l1.c) / det;
    Ok(Intersection::Point(Point::new(x, y)))
}

/// Closed-form meeting point of `fold_xi(t, h)` with `n: a x + b y = c`, or
/// `None` when `b t + a h = 0`.
pub fn fold_xi_meets(t: f64, h: f64, n: &Line) -> Option<Point> {
    let den = n.b * t + n.a * h;
    if den == 0.0 {
        return None;
    }
    Some(Point::new(
        (n.b * t * t + n.c * h) / den,
        -t * (n.a * t - n.c) / den,
    ))
}

/// Distance between two parallel lines, after rescaling `l2` so its normal
/// matches that of `l1`.
pub fn parallel_distance(l1: &Line, l2: &Line) -> Result<f64> {
    let (parallel, _) = normals_dependent(l1, l2, 1e-9);
    if !parallel {
        return Err(Error::NotParallel);
    }
    let (n1, n2) = (l1.normal(), l2.normal());
    let lambda = n1.dot(n2) / n2.dot(n2);
    Ok((l1.c - lambda * l2.c).abs() / n1.norm())
}

/// `| |cos(xi, chi)| - |cos(xi, n)| |`, the defect in `xi` bisecting the angle
/// between `n` and `chi`.
pub fn bisector_defect(xi: &Line, n: &Line, chi: &Line) -> f64 {
    let nx = xi.normal();
    let cos = |l: &Line| (nx.dot(l.normal())).abs() / (nx.norm() * l.normal().norm());
    (cos(chi) - cos(n)).abs()
}

pub fn bisects(xi: &Line, n: &Line, chi: &Line, tol: f64) -> bool {
    bisector_defect(xi, n, chi) <= tol
}
