//! Closed-form Riemannian primitives for the hyperboloid model of the
//! m-dimensional hyperbolic space of constant curvature -a².
//!
//! Points live on the upper sheet of `<x,x>_M = -1/a²` in Minkowski space
//! `R^{m+1}` with the bilinear form `<u,v>_M = -u0*v0 + sum_{i>=1} ui*vi`.
//! Keeping the curvature scale `a` in the constraint (rather than
//! normalizing to -1) makes `a` a first-class runtime parameter: distances
//! carry the 1/a factor and all formulas below are exact for any a > 0.
//!
//! Every operation renormalizes its result onto the hyperboloid (points)
//! or re-projects onto the tangent space (vectors) to bound floating-point
//! drift in long flows.

use crate::error::{Error, Result};

/// How tightly returned points must satisfy the hyperboloid constraint.
pub const POINT_TOL: f64 = 1e-12;

/// Dimension and curvature scale of the model space (curvature -a²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceParams {
    m: usize,
    a: f64,
}

impl SpaceParams {
    pub fn new(m: usize, a: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParam(format!("dimension m = {m}, need m >= 2")));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidParam(format!("curvature scale a = {a}, need a > 0")));
        }
        Ok(SpaceParams { m, a })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// Number of Minkowski coordinates, m + 1.
    pub fn ambient_dim(&self) -> usize {
        self.m + 1
    }
}

/// Minkowski inner product `-u0*v0 + sum_{i>=1} ui*vi`.
pub fn mink_inner(u: &[f64], v: &[f64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch { expected: u.len(), actual: v.len() });
    }
    let mut acc = -u[0] * v[0];
    for i in 1..u.len() {
        acc += u[i] * v[i];
    }
    Ok(acc)
}

fn mink(u: &[f64], v: &[f64]) -> f64 {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = -u[0] * v[0];
    for i in 1..u.len() {
        acc += u[i] * v[i];
    }
    acc
}

/// A point on the upper sheet of the hyperboloid `<x,x>_M = -1/a²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    space: SpaceParams,
    coords: Vec<f64>,
}

impl Point {
    /// Builds a point from Minkowski coordinates, renormalizing onto the
    /// hyperboloid. Rejects coordinates that are far off the sheet
    /// (relative defect > 1e-6) or on the lower sheet.
    pub fn from_coords(space: SpaceParams, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != space.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: space.ambient_dim(),
                actual: coords.len(),
            });
        }
        if coords[0] <= 0.0 {
            return Err(Error::InvalidParam(
                "point must lie on the upper sheet (first coordinate > 0)".into(),
            ));
        }
        let q = mink(&coords, &coords);
        let target = -1.0 / (space.a * space.a);
        if !(q < 0.0) || ((q - target) / target).abs() > 1e-6 {
            return Err(Error::InvalidParam(format!(
                "coordinates are not on the hyperboloid: <x,x>_M = {q}, expected {target}"
            )));
        }
        let mut p = Point { space, coords };
        p.renormalize();
        Ok(p)
    }

    /// The base point (1/a, 0, ..., 0).
    pub fn origin(space: SpaceParams) -> Self {
        let mut coords = vec![0.0; space.ambient_dim()];
        coords[0] = 1.0 / space.a;
        Point { space, coords }
    }

    pub fn space(&self) -> SpaceParams {
        self.space
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Rescales the coordinates so that `<x,x>_M = -1/a²` exactly.
    fn renormalize(&mut self) {
        let q = mink(&self.coords, &self.coords);
        debug_assert!(q < 0.0, "renormalize: point left the timelike cone");
        let scale = 1.0 / (self.space.a * (-q).sqrt());
        for c in &mut self.coords {
            *c *= scale;
        }
    }

    fn from_raw(space: SpaceParams, coords: Vec<f64>) -> Self {
        let mut p = Point { space, coords };
        p.renormalize();
        p
    }

    /// Constraint defect `|<x,x>_M + 1/a²|`, useful in tests.
    pub fn constraint_defect(&self) -> f64 {
        (mink(&self.coords, &self.coords) + 1.0 / (self.space.a * self.space.a)).abs()
    }
}

/// A tangent vector anchored at a point: `<base, vec>_M = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector {
    base: Point,
    vec: Vec<f64>,
}

impl TangentVector {
    /// Builds a tangent vector at `base`, re-projecting onto the tangent
    /// space. Rejects vectors that are grossly non-tangent.
    pub fn new(base: Point, vec: Vec<f64>) -> Result<Self> {
        if vec.len() != base.space.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: base.space.ambient_dim(),
                actual: vec.len(),
            });
        }
        let a2 = base.space.a * base.space.a;
        let pairing = mink(base.coords(), &vec);
        let scale = vec.iter().map(|c| c.abs()).fold(1.0, f64::max);
        if (pairing * a2).abs() > 1e-6 * scale * (1.0 + base.coords[0] * base.space.a) {
            return Err(Error::InvalidParam(format!(
                "vector is not tangent at the base point: <x,v>_M = {pairing}"
            )));
        }
        Ok(Self::project(base, vec))
    }

    /// Projects an arbitrary ambient vector onto the tangent space at `base`.
    pub fn project(base: Point, mut vec: Vec<f64>) -> Self {
        let a2 = base.space.a * base.space.a;
        let pairing = mink(base.coords(), &vec);
        for (c, x) in vec.iter_mut().zip(base.coords()) {
            *c += a2 * pairing * x;
        }
        TangentVector { base, vec }
    }

    pub fn zero(base: Point) -> Self {
        let n = base.space.ambient_dim();
        TangentVector { base, vec: vec![0.0; n] }
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn components(&self) -> &[f64] {
        &self.vec
    }

    /// Riemannian norm (the Minkowski form is positive definite on tangent
    /// spaces).
    pub fn norm(&self) -> f64 {
        mink(&self.vec, &self.vec).max(0.0).sqrt()
    }

    /// Inner product with another vector at the same base point.
    pub fn inner(&self, other: &TangentVector) -> f64 {
        mink(&self.vec, &other.vec)
    }

    pub fn scale(&self, c: f64) -> TangentVector {
        TangentVector {
            base: self.base.clone(),
            vec: self.vec.iter().map(|v| c * v).collect(),
        }
    }

    pub fn add(&self, other: &TangentVector) -> TangentVector {
        debug_assert_eq!(self.vec.len(), other.vec.len());
        TangentVector {
            base: self.base.clone(),
            vec: self.vec.iter().zip(&other.vec).map(|(u, v)| u + v).collect(),
        }
    }

    /// Unit vector in the same direction; errors on (near-)zero input.
    pub fn normalized(&self) -> Result<TangentVector> {
        let n = self.norm();
        if n < 1e-14 {
            return Err(Error::InvalidParam("cannot normalize a zero tangent vector".into()));
        }
        Ok(self.scale(1.0 / n))
    }
}

fn assert_same_space(x: &Point, y: &Point) {
    assert!(
        x.space == y.space,
        "points belong to different spaces: {:?} vs {:?}",
        x.space,
        y.space
    );
}

/// Exponential map: follows the geodesic from the base of `v` with initial
/// velocity `v` for unit time. Total (hyperbolic space is complete).
pub fn exp_map(v: &TangentVector) -> Point {
    let a = v.base.space.a;
    let norm = v.norm();
    let x = v.base.coords();
    if norm < 1e-300 {
        return v.base.clone();
    }
    let c = (a * norm).cosh();
    let s = (a * norm).sinh() / (a * norm);
    let coords = x.iter().zip(&v.vec).map(|(xi, vi)| c * xi + s * vi).collect();
    Point::from_raw(v.base.space, coords)
}

/// Geodesic distance `(1/a)·arccosh(-a²<x,y>_M)`. The arccosh argument is
/// clamped to [1, ∞) to absorb rounding when x and y (nearly) coincide.
pub fn distance(x: &Point, y: &Point) -> f64 {
    assert_same_space(x, y);
    let a = x.space.a;
    let arg = (-(a * a) * mink(x.coords(), y.coords())).max(1.0);
    arg.acosh() / a
}

/// Inverse of the exponential map: the tangent vector at `x` whose
/// exponential is `y`. Returns the zero vector when the points coincide.
pub fn log_map(x: &Point, y: &Point) -> TangentVector {
    assert_same_space(x, y);
    let a = x.space.a;
    let a2 = a * a;
    let pairing = mink(x.coords(), y.coords());
    // Tangential part of y at x: y + a²<x,y> x, of norm sinh(a d)/a.
    let tangential: Vec<f64> = y
        .coords()
        .iter()
        .zip(x.coords())
        .map(|(yi, xi)| yi + a2 * pairing * xi)
        .collect();
    let tnorm = mink(&tangential, &tangential).max(0.0).sqrt();
    let d = distance(x, y);
    if tnorm < 1e-300 || d == 0.0 {
        return TangentVector::zero(x.clone());
    }
    let scale = d / tnorm;
    TangentVector {
        base: x.clone(),
        vec: tangential.into_iter().map(|c| c * scale).collect(),
    }
}

/// Parallel transport of `v` along the unique geodesic from its base point
/// to `to`. The component along the geodesic direction follows the velocity
/// field; the orthogonal complement is carried unchanged (it is constant in
/// Minkowski coordinates along hyperboloid geodesics).
pub fn parallel_transport(v: &TangentVector, to: &Point) -> TangentVector {
    assert_same_space(&v.base, to);
    let a = v.base.space.a;
    let d = distance(&v.base, to);
    if d < 1e-15 {
        return TangentVector::project(to.clone(), v.vec.clone());
    }
    let u = log_map(&v.base, to).scale(1.0 / d); // unit direction at the start
    let along = mink(&v.vec, u.components());
    // Velocity of the unit-speed geodesic at the endpoint.
    let (sh, ch) = ((a * d).sinh(), (a * d).cosh());
    let endpoint_velocity: Vec<f64> = v
        .base
        .coords()
        .iter()
        .zip(u.components())
        .map(|(xi, ui)| a * sh * xi + ch * ui)
        .collect();
    let vec = v
        .vec
        .iter()
        .zip(u.components())
        .zip(&endpoint_velocity)
        .map(|((vi, ui), wi)| (vi - along * ui) + along * wi)
        .collect();
    TangentVector::project(to.clone(), vec)
}

/// Deterministic orthonormal basis of the tangent space at `x`, built by
/// Gram-Schmidt over the ambient coordinate axes (in order).
pub fn tangent_frame(x: &Point) -> Vec<TangentVector> {
    orthonormalize(x, &[])
}

/// Deterministic orthonormal basis of the orthogonal complement of `n`
/// inside the tangent space at `x` (m - 1 vectors).
pub fn tangent_frame_against(x: &Point, n: &TangentVector) -> Vec<TangentVector> {
    orthonormalize(x, std::slice::from_ref(n))
}

fn orthonormalize(x: &Point, excluded: &[&TangentVector]) -> Vec<TangentVector> {
    let dim = x.space.ambient_dim();
    let want = x.space.m - excluded.len();
    let mut frame: Vec<TangentVector> = Vec::with_capacity(want);
    for axis in 0..dim {
        if frame.len() == want {
            break;
        }
        let mut e = vec![0.0; dim];
        e[axis] = 1.0;
        let mut w = TangentVector::project(x.clone(), e);
        for prev in excluded.iter().copied().chain(frame.iter()) {
            let c = mink(w.components(), prev.components());
            w = w.add(&prev.scale(-c));
        }
        if w.norm() > 1e-8 {
            frame.push(w.normalized().expect("norm checked above"));
        }
    }
    assert_eq!(frame.len(), want, "failed to complete a tangent frame");
    frame
}
