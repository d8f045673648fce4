//! Quaternion arithmetic and the fiber structure of geodesics in S³.
//!
//! S³ is identified with the unit quaternions, ℍ = {a + bi + cj + dk} with
//! i² = j² = k² = −1, ij = k, jk = i, ki = j. A pure unit quaternion p
//! defines two circle actions: the left p-fiber through x is
//! {(cos t + p sin t)·x} and the right p-fiber is {x·(cos t + p sin t)}.
//! Every geodesic of S³ is simultaneously a left fiber and a right fiber,
//! for a unique (up to sign) pair of axes; those axes drive everything in
//! [`crate::hopf`] and [`crate::classify`].

use crate::error::Error;
use crate::geom::{cross3, dot3, norm3, Vec3, Vec4};
use crate::Result;
use serde::{Deserialize, Serialize};

/// Tolerance for algebraic identities (products of a few exact operations).
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Tolerance for geometric reconstructions (≈ ten composed products).
pub const GEOMETRIC_TOL: f64 = 1e-9;

/// A quaternion a + bi + cj + dk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    pub const fn one() -> Self {
        Quaternion::new(1.0, 0.0, 0.0, 0.0)
    }

    pub const fn i() -> Self {
        Quaternion::new(0.0, 1.0, 0.0, 0.0)
    }

    pub const fn j() -> Self {
        Quaternion::new(0.0, 0.0, 1.0, 0.0)
    }

    pub const fn k() -> Self {
        Quaternion::new(0.0, 0.0, 0.0, 1.0)
    }

    /// View as a vector in ℝ⁴ with coordinates (a, b, c, d).
    pub const fn to_vec4(self) -> Vec4 {
        [self.a, self.b, self.c, self.d]
    }

    pub const fn from_vec4(v: Vec4) -> Self {
        Quaternion::new(v[0], v[1], v[2], v[3])
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn norm_sq(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Euclidean inner product of ℝ⁴; equals Re(self · other.conj()).
    pub fn dot(self, other: Self) -> f64 {
        self.a * other.a + self.b * other.b + self.c * other.c + self.d * other.d
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn normalized(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    /// Inverse of a nonzero quaternion: conj / |q|².
    pub fn inverse(self) -> Self {
        self.conj().scale(1.0 / self.norm_sq())
    }

    /// Imaginary part as a 3-vector (b, c, d).
    pub const fn imag(self) -> Vec3 {
        [self.b, self.c, self.d]
    }

    pub const fn from_imag(v: Vec3) -> Self {
        Quaternion::new(0.0, v[0], v[1], v[2])
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }
}

impl std::ops::Add for Quaternion {
    type Output = Quaternion;
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl std::ops::Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl std::ops::Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

impl std::ops::Mul for Quaternion {
    type Output = Quaternion;
    /// Hamilton product with ij = k, jk = i, ki = j.
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a * r.a - self.b * r.b - self.c * r.c - self.d * r.d,
            self.a * r.b + self.b * r.a + self.c * r.d - self.d * r.c,
            self.a * r.c - self.b * r.d + self.c * r.a + self.d * r.b,
            self.a * r.d + self.b * r.c - self.c * r.b + self.d * r.a,
        )
    }
}

/// Hamilton product as a free function, for call sites that read better
/// without operator syntax.
pub fn mul(q1: Quaternion, q2: Quaternion) -> Quaternion {
    q1 * q2
}

/// A pure unit quaternion: a point on the 2-sphere of zero-real-part unit
/// quaternions. Serializes as its imaginary 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "Vec3", from = "Vec3")]
pub struct PureUnit(Quaternion);

impl From<PureUnit> for Vec3 {
    fn from(p: PureUnit) -> Vec3 {
        p.imag()
    }
}

impl From<Vec3> for PureUnit {
    fn from(v: Vec3) -> PureUnit {
        PureUnit::snap(Quaternion::from_imag(v))
    }
}

impl PureUnit {
    /// Validates the invariants |Re| ≤ 1e−12 and ||q| − 1| ≤ 1e−12, then
    /// snaps the representative exactly onto the sphere.
    pub fn new(q: Quaternion) -> Result<Self> {
        if q.a.abs() > ALGEBRAIC_TOL {
            return Err(Error::NotOrthonormal(format!(
                "real part {:.3e} exceeds tolerance",
                q.a
            )));
        }
        if (q.norm() - 1.0).abs() > ALGEBRAIC_TOL {
            return Err(Error::NotOrthonormal(format!(
                "norm deviates from 1 by {:.3e}",
                q.norm() - 1.0
            )));
        }
        Ok(Self::snap(q))
    }

    /// Projects an almost-pure, almost-unit quaternion onto the sphere.
    /// Used internally where the drift is known to be a few ulps.
    pub(crate) fn snap(q: Quaternion) -> Self {
        let v = q.imag();
        let n = norm3(&v);
        PureUnit(Quaternion::from_imag([v[0] / n, v[1] / n, v[2] / n]))
    }

    pub fn from_imag_unit(v: Vec3) -> Result<Self> {
        Self::new(Quaternion::from_imag(v))
    }

    pub fn quaternion(self) -> Quaternion {
        self.0
    }

    pub fn imag(self) -> Vec3 {
        self.0.imag()
    }

    pub fn i() -> Self {
        PureUnit(Quaternion::i())
    }

    pub fn j() -> Self {
        PureUnit(Quaternion::j())
    }

    pub fn k() -> Self {
        PureUnit(Quaternion::k())
    }

    pub fn antipode(self) -> Self {
        PureUnit(-self.0)
    }

    /// Spherical (geodesic) distance on the pure-unit sphere, in [0, π].
    pub fn distance(self, other: Self) -> f64 {
        dot3(&self.imag(), &other.imag()).clamp(-1.0, 1.0).acos()
    }

    /// True when the two axes agree up to sign within `tol`.
    pub fn same_axis(self, other: Self, tol: f64) -> bool {
        let d = self.0.dot(other.0).abs();
        (d - 1.0).abs() <= tol * tol / 2.0 + tol
    }
}

/// The pair of fiber axes of an oriented geodesic. The geodesic through the
/// orthonormal pair (x, y), oriented x→y, is the left fiber of `left_axis`
/// and the right fiber of `right_axis`:
/// {(cos t + p_L sin t)·x} = {x·(cos t + q_R sin t)} = {x cos t + y sin t}.
///
/// Reversing the orientation of the circle negates both axes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FiberAxes {
    pub left_axis: PureUnit,
    pub right_axis: PureUnit,
}

/// Axes of the great circle through the orthonormal pair (x, y).
///
/// With p_L = y·x̄ and q_R = x̄·y both products have zero real part exactly
/// when ⟨x, y⟩ = 0, and (cos t + p_L sin t)·x = x cos t + y sin t pointwise.
pub fn fiber_axes(x: Quaternion, y: Quaternion) -> Result<FiberAxes> {
    let tol = 1e-10;
    if (x.norm() - 1.0).abs() > tol || (y.norm() - 1.0).abs() > tol {
        return Err(Error::NotOrthonormal(format!(
            "|x| = {}, |y| = {}",
            x.norm(),
            y.norm()
        )));
    }
    let ip = x.dot(y);
    if ip.abs() > tol {
        return Err(Error::NotOrthonormal(format!("<x,y> = {ip:.3e}")));
    }
    Ok(FiberAxes {
        left_axis: PureUnit::snap(y * x.conj()),
        right_axis: PureUnit::snap(x.conj() * y),
    })
}

/// The conjugation action x·p·x⁻¹ of a unit quaternion on the pure-unit
/// sphere. This is the double cover S³ → SO(3); each x acts as a rotation.
pub fn conj_action(x: Quaternion, p: PureUnit) -> PureUnit {
    PureUnit::snap(x * p.quaternion() * x.inverse())
}

/// A unit quaternion x with x·q·x⁻¹ = p, so that the left p-fiber and the
/// right q-fiber through x coincide.
///
/// Construction: rotate q onto p about the axis q×p by the half-angle
/// quaternion. When p = −q any axis orthogonal to q serves.
pub fn solve_axis_transport(p: PureUnit, q: PureUnit) -> Quaternion {
    let qp = q.imag();
    let pp = p.imag();
    let cos_angle = dot3(&qp, &pp).clamp(-1.0, 1.0);
    let axis = cross3(&qp, &pp);
    let axis_norm = norm3(&axis);
    if axis_norm < 1e-13 {
        if cos_angle > 0.0 {
            // p = q: anything commuting with q works; take the identity.
            return Quaternion::one();
        }
        // p = −q: rotate by π about any unit axis orthogonal to q.
        let candidates = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        let mut best = [0.0; 3];
        let mut best_norm = -1.0;
        for e in candidates {
            let w = cross3(&qp, &e);
            let n = norm3(&w);
            if n > best_norm {
                best_norm = n;
                best = [w[0] / n, w[1] / n, w[2] / n];
            }
        }
        return Quaternion::from_imag(best);
    }
    let angle = cos_angle.acos();
    let (s, c) = ((angle / 2.0).sin(), (angle / 2.0).cos());
    let u = [axis[0] / axis_norm, axis[1] / axis_norm, axis[2] / axis_norm];
    Quaternion::new(c, u[0] * s, u[1] * s, u[2] * s)
}

/// Which side a fiber axis acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberSide {
    Left,
    Right,
}

/// Minimum spherical distance from `x1` to any point of the fiber through
/// `x2` with the given axis and side, in [0, π/2].
///
/// The inner product of x1 with a point of the fiber is R·cos(t − φ) where
/// R² = ⟨x1,x2⟩² + ⟨x1, p·x2⟩² (left) or ⟨x1, x2·p⟩² (right), so the
/// minimum distance is arccos R. It does not depend on the representative
/// point chosen on either fiber.
pub fn fiber_distance(axis: PureUnit, side: FiberSide, x1: Quaternion, x2: Quaternion) -> f64 {
    let p = axis.quaternion();
    let moved = match side {
        FiberSide::Left => p * x2,
        FiberSide::Right => x2 * p,
    };
    let c = x1.dot(x2);
    let s = x1.dot(moved);
    (c * c + s * s).sqrt().clamp(0.0, 1.0).acos()
}

/// Phase of `x` along the fiber through `base` (same fiber assumed):
/// the t with x = (cos t + p sin t)·base for the left side, or
/// x = base·(cos t + p sin t) for the right side. Range (−π, π].
pub fn fiber_phase(axis: PureUnit, side: FiberSide, base: Quaternion, x: Quaternion) -> f64 {
    let p = axis.quaternion();
    let lambda = match side {
        FiberSide::Left => x * base.inverse(),
        FiberSide::Right => base.inverse() * x,
    };
    // lambda should be cos t + p sin t
    let sin_t = lambda.dot(p);
    let cos_t = lambda.a;
    sin_t.atan2(cos_t)
}
