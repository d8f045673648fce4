//! Great circles as oriented 2-planes through the origin in ℝ⁴.
//!
//! Two transverse planes meet S³ in disjoint circles that link exactly once;
//! the sign of the 4×4 determinant of the stacked oriented bases is the
//! linking number. That sign convention is not free-floating: it is pinned
//! against an independent Gauss linking integral (stereographic projection
//! to ℝ³ plus double quadrature), which is also what [`straighten`] uses to
//! check its preconditions on round-circle input.

use crate::error::Error;
use crate::geom::{
    self, add4, det4, dot4, norm4, normalize4, orthonormalize_pair, scale4, sub4, Mat4, Vec4,
};
use crate::quat::{fiber_axes, FiberAxes, Quaternion};
use crate::Result;
use serde::{Deserialize, Serialize};

/// Determinant threshold below which two planes are treated as non-transverse.
pub const TRANSVERSE_TOL: f64 = 1e-9;

/// An oriented great circle: a 2-plane through the origin with an ordered
/// orthonormal basis. The circle is {v₁ cos t + v₂ sin t}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreatCircle {
    basis: [Vec4; 2],
}

impl GreatCircle {
    /// Requires |v₁| = |v₂| = 1 and ⟨v₁,v₂⟩ = 0 within 1e−12.
    pub fn new(v1: Vec4, v2: Vec4) -> Result<Self> {
        let tol = 1e-12;
        if (norm4(&v1) - 1.0).abs() > tol || (norm4(&v2) - 1.0).abs() > tol {
            return Err(Error::NotOrthonormal(format!(
                "basis norms {} and {}",
                norm4(&v1),
                norm4(&v2)
            )));
        }
        if dot4(&v1, &v2).abs() > tol {
            return Err(Error::NotOrthonormal(format!(
                "<v1,v2> = {:.3e}",
                dot4(&v1, &v2)
            )));
        }
        Ok(GreatCircle { basis: [v1, v2] })
    }

    /// Orthonormalizes a spanning pair first (orientation kept).
    pub fn from_spanning(v1: Vec4, v2: Vec4) -> Result<Self> {
        let (u1, u2) = orthonormalize_pair(&v1, &v2)
            .ok_or_else(|| Error::NotOrthonormal("spanning pair is degenerate".into()))?;
        Ok(GreatCircle { basis: [u1, u2] })
    }

    pub fn basis(&self) -> &[Vec4; 2] {
        &self.basis
    }

    /// Point at parameter t.
    pub fn point(&self, t: f64) -> Vec4 {
        add4(
            &scale4(&self.basis[0], t.cos()),
            &scale4(&self.basis[1], t.sin()),
        )
    }

    /// Tangent direction at parameter t (unit).
    pub fn tangent(&self, t: f64) -> Vec4 {
        add4(
            &scale4(&self.basis[0], -t.sin()),
            &scale4(&self.basis[1], t.cos()),
        )
    }

    pub fn reversed(&self) -> Self {
        GreatCircle {
            basis: [self.basis[1], self.basis[0]],
        }
    }

    /// Left/right fiber axes of this circle (orientation v₁ → v₂).
    pub fn axes(&self) -> FiberAxes {
        fiber_axes(
            Quaternion::from_vec4(self.basis[0]),
            Quaternion::from_vec4(self.basis[1]),
        )
        .expect("great circle basis is orthonormal by construction")
    }

    /// Image under a linear map, re-orthonormalized. Fails if the map
    /// collapses the plane.
    pub fn transform(&self, m: &Mat4) -> Result<Self> {
        GreatCircle::from_spanning(m.apply(&self.basis[0]), m.apply(&self.basis[1]))
    }

    /// Mirror image: negate the last coordinate.
    pub fn mirror(&self) -> Self {
        let flip = |v: &Vec4| [v[0], v[1], v[2], -v[3]];
        GreatCircle {
            basis: [flip(&self.basis[0]), flip(&self.basis[1])],
        }
    }
}

/// True iff the two planes meet only at the origin, i.e. the stacked bases
/// have |det| above [`TRANSVERSE_TOL`]. Transverse great circles are
/// disjoint on S³ and link exactly once.
pub fn transverse(c1: &GreatCircle, c2: &GreatCircle) -> bool {
    plane_det(c1, c2).abs() > TRANSVERSE_TOL
}

/// det[v₁ v₂ w₁ w₂] of the stacked oriented bases.
pub fn plane_det(c1: &GreatCircle, c2: &GreatCircle) -> f64 {
    det4(&c1.basis[0], &c1.basis[1], &c2.basis[0], &c2.basis[1])
}

/// Linking number of two transverse oriented great circles: the sign of the
/// stacked-basis determinant (intersection sign of the spanning disks in the
/// 4-ball). Validated against [`gauss_linking_integral`].
pub fn linking_number(c1: &GreatCircle, c2: &GreatCircle) -> Result<i8> {
    let det = plane_det(c1, c2);
    if det.abs() <= TRANSVERSE_TOL {
        return Err(Error::NotTransverse { det });
    }
    Ok(if det > 0.0 { 1 } else { -1 })
}

/// A collection of pairwise transverse great circles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GCLink {
    components: Vec<GreatCircle>,
}

impl GCLink {
    /// Audits pairwise transversality (which for great circles forces
    /// pairwise linking ±1).
    pub fn new(components: Vec<GreatCircle>) -> Result<Self> {
        for i in 0..components.len() {
            for j in (i + 1)..components.len() {
                let det = plane_det(&components[i], &components[j]);
                if det.abs() <= TRANSVERSE_TOL {
                    return Err(Error::NotTransverse { det });
                }
            }
        }
        Ok(GCLink { components })
    }

    pub fn empty() -> Self {
        GCLink { components: Vec::new() }
    }

    pub fn components(&self) -> &[GreatCircle] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Pairwise linking matrix; diagonal entries are 0.
    pub fn linking_matrix(&self) -> Vec<Vec<i8>> {
        let n = self.components.len();
        let mut m = vec![vec![0i8; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m[i][j] = linking_number(&self.components[i], &self.components[j])
                        .expect("audited link is pairwise transverse");
                }
            }
        }
        m
    }

    pub fn mirror(&self) -> Self {
        GCLink {
            components: self.components.iter().map(|c| c.mirror()).collect(),
        }
    }

    pub fn transform(&self, m: &Mat4) -> Result<Self> {
        let comps = self
            .components
            .iter()
            .map(|c| c.transform(m))
            .collect::<Result<Vec<_>>>()?;
        GCLink::new(comps)
    }
}

/// A round circle on S³: the intersection of an affine 2-plane with the unit
/// sphere. `base` is the in-plane point closest to the origin (|base| < 1),
/// `dirs` an oriented orthonormal pair of plane directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RoundCircle {
    base: Vec4,
    dirs: [Vec4; 2],
}

impl RoundCircle {
    /// Builds from any affine description; the base point is projected to
    /// the perpendicular foot of the plane.
    pub fn new(point: Vec4, d1: Vec4, d2: Vec4) -> Result<Self> {
        let (u1, u2) = orthonormalize_pair(&d1, &d2)
            .ok_or_else(|| Error::NotOrthonormal("plane directions are degenerate".into()))?;
        let mut base = point;
        base = sub4(&base, &scale4(&u1, dot4(&base, &u1)));
        base = sub4(&base, &scale4(&u2, dot4(&base, &u2)));
        if norm4(&base) >= 1.0 - 1e-12 {
            return Err(Error::InvalidInput(format!(
                "affine plane misses the open unit ball (offset {})",
                norm4(&base)
            )));
        }
        Ok(RoundCircle { base, dirs: [u1, u2] })
    }

    pub fn from_great(c: &GreatCircle) -> Self {
        RoundCircle {
            base: [0.0; 4],
            dirs: *c.basis(),
        }
    }

    pub fn radius(&self) -> f64 {
        (1.0 - dot4(&self.base, &self.base)).sqrt()
    }

    /// Point on the sphere circle at angle t.
    pub fn point(&self, t: f64) -> Vec4 {
        let r = self.radius();
        add4(
            &self.base,
            &add4(
                &scale4(&self.dirs[0], r * t.cos()),
                &scale4(&self.dirs[1], r * t.sin()),
            ),
        )
    }

    /// The translate of the plane to the origin.
    pub fn to_great(&self) -> GreatCircle {
        GreatCircle {
            basis: self.dirs,
        }
    }
}

/// Numerical Gauss linking integral of two closed curves on S³, computed by
/// stereographic projection to ℝ³ and a double midpoint sum over
/// `samples` points per curve. Deterministic for a fixed sample count.
///
/// The projection pole is chosen from a fixed candidate grid to stay away
/// from both curves; the frame (u₁,u₂,u₃,pole) is kept positively oriented
/// so the sign convention matches [`linking_number`].
pub fn gauss_linking_integral<F, G>(curve1: F, curve2: G, samples: usize) -> f64
where
    F: Fn(f64) -> Vec4,
    G: Fn(f64) -> Vec4,
{
    let tau = std::f64::consts::TAU;
    let pts1: Vec<Vec4> = (0..samples)
        .map(|i| curve1((i as f64 + 0.5) * tau / samples as f64))
        .collect();
    let pts2: Vec<Vec4> = (0..samples)
        .map(|i| curve2((i as f64 + 0.5) * tau / samples as f64))
        .collect();

    // Fixed, deterministic pole candidates: vertices of a 24-cell plus a
    // few tilted ones, normalized.
    let mut candidates: Vec<Vec4> = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut v = [0.0; 4];
                v[i] = si;
                v[j] = sj;
                candidates.push(normalize4(&v));
            }
        }
    }
    candidates.push(normalize4(&[1.0, 2.0, 3.0, 4.0]));
    candidates.push(normalize4(&[-3.0, 1.0, -2.0, 5.0]));

    let pole = candidates
        .into_iter()
        .max_by(|a, b| {
            let da = pole_clearance(a, &pts1, &pts2);
            let db = pole_clearance(b, &pts1, &pts2);
            da.total_cmp(&db)
        })
        .unwrap();

    // Orthonormal frame of pole^⊥ with det[u1 u2 u3 pole] = +1.
    let seeds = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ];
    let mut frame: Vec<Vec4> = Vec::new();
    for s in seeds {
        let mut w = sub4(&s, &scale4(&pole, dot4(&s, &pole)));
        for u in &frame {
            w = sub4(&w, &scale4(u, dot4(&w, u)));
        }
        if norm4(&w) > 1e-6 {
            frame.push(normalize4(&w));
            if frame.len() == 3 {
                break;
            }
        }
    }
    if det4(&frame[0], &frame[1], &frame[2], &pole) < 0.0 {
        frame[2] = scale4(&frame[2], -1.0);
    }
    let project = |x: &Vec4| -> [f64; 3] {
        let denom = 1.0 - dot4(x, &pole);
        [
            dot4(x, &frame[0]) / denom,
            dot4(x, &frame[1]) / denom,
            dot4(x, &frame[2]) / denom,
        ]
    };

    let p1: Vec<[f64; 3]> = pts1.iter().map(&project).collect();
    let p2: Vec<[f64; 3]> = pts2.iter().map(&project).collect();

    let mut total = 0.0;
    for i in 0..samples {
        let a = p1[i];
        let a_next = p1[(i + 1) % samples];
        let da = [a_next[0] - a[0], a_next[1] - a[1], a_next[2] - a[2]];
        let am = [
            (a[0] + a_next[0]) / 2.0,
            (a[1] + a_next[1]) / 2.0,
            (a[2] + a_next[2]) / 2.0,
        ];
        for j in 0..samples {
            let b = p2[j];
            let b_next = p2[(j + 1) % samples];
            let db = [b_next[0] - b[0], b_next[1] - b[1], b_next[2] - b[2]];
            let bm = [
                (b[0] + b_next[0]) / 2.0,
                (b[1] + b_next[1]) / 2.0,
                (b[2] + b_next[2]) / 2.0,
            ];
            let r = [am[0] - bm[0], am[1] - bm[1], am[2] - bm[2]];
            let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
            let cross = geom::cross3(&da, &db);
            total += geom::dot3(&cross, &r) / (rn * rn * rn);
        }
    }
    total / (4.0 * std::f64::consts::PI)
}

fn pole_clearance(pole: &Vec4, pts1: &[Vec4], pts2: &[Vec4]) -> f64 {
    pts1.iter()
        .chain(pts2.iter())
        .map(|p| 1.0 - dot4(p, pole))
        .fold(f64::MAX, f64::min)
}

/// Gauss-integral linking of two round circles, rounded to the nearest
/// integer. Errors when the integral is not within `tol` of an integer.
pub fn round_circle_linking(c1: &RoundCircle, c2: &RoundCircle, tol: f64) -> Result<i32> {
    let lk = gauss_linking_integral(|t| c1.point(t), |t| c2.point(t), 96);
    let nearest = lk.round();
    if (lk - nearest).abs() > tol {
        return Err(Error::BadLinking(format!(
            "Gauss integral {lk:.4} is not near an integer"
        )));
    }
    Ok(nearest as i32)
}

/// Straightens a link of round circles into a great circle link by
/// translating each affine plane to the origin (the radial-projection
/// isotopy keeps components disjoint throughout).
///
/// Preconditions, checked numerically: circles pairwise disjoint on S³ and
/// pairwise Gauss linking ±1.
pub fn straighten(circles: &[RoundCircle]) -> Result<GCLink> {
    for i in 0..circles.len() {
        for j in (i + 1)..circles.len() {
            let mut min_dist = f64::MAX;
            for s in 0..64 {
                let t1 = s as f64 * std::f64::consts::TAU / 64.0;
                let p1 = circles[i].point(t1);
                for u in 0..64 {
                    let t2 = u as f64 * std::f64::consts::TAU / 64.0;
                    let d = norm4(&sub4(&p1, &circles[j].point(t2)));
                    min_dist = min_dist.min(d);
                }
            }
            if min_dist < 1e-6 {
                return Err(Error::BadLinking(format!(
                    "circles {i} and {j} intersect (min distance {min_dist:.3e})"
                )));
            }
            let lk = round_circle_linking(&circles[i], &circles[j], 0.1)?;
            if lk.abs() != 1 {
                return Err(Error::BadLinking(format!(
                    "circles {i} and {j} link {lk}, need ±1"
                )));
            }
        }
    }
    GCLink::new(circles.iter().map(|c| c.to_great()).collect())
}

/// Minimum of w²+x² (the first two coordinates) over the unit circle of a
/// plane: the smallest eigenvalue of the 2×2 Gram matrix of the projected
/// basis.
fn min_front_square(c: &GreatCircle) -> f64 {
    let p = |v: &Vec4| [v[0], v[1]];
    let a = p(&c.basis[0]);
    let b = p(&c.basis[1]);
    let g11 = a[0] * a[0] + a[1] * a[1];
    let g22 = b[0] * b[0] + b[1] * b[1];
    let g12 = a[0] * b[0] + a[1] * b[1];
    let tr = g11 + g22;
    let disc = ((g11 - g22) * (g11 - g22) + 4.0 * g12 * g12).sqrt();
    (tr - disc) / 2.0
}

/// Margin the torus-sum flow drives components to: w²+x² ≥ 1/√2 on every
/// remaining circle, safely inside the solid torus around span(e₁,e₂).
const FLOW_MARGIN: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Flow a standardized link (chosen component already at span(e₃,e₄)) so
/// that every other component satisfies w²+x² ≥ margin. Scaling the last
/// two coordinates by t scales the transversality determinants by powers of
/// t, so no sign ever changes along the flow.
fn flow_off_core(comps: &[GreatCircle]) -> Result<Vec<GreatCircle>> {
    let mut t = 1.0f64;
    for _ in 0..2000 {
        let m = Mat4::from_cols([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, t, 0.0],
            [0.0, 0.0, 0.0, t],
        ]);
        let flowed = comps
            .iter()
            .map(|c| c.transform(&m))
            .collect::<Result<Vec<_>>>()?;
        if flowed.iter().all(|c| min_front_square(c) >= FLOW_MARGIN) {
            return Ok(flowed);
        }
        t *= 0.93;
    }
    Err(Error::InvalidInput(
        "torus-sum flow failed to reach its margin".into(),
    ))
}

/// Positively oriented isometry taking the plane of `c` to span(e₃,e₄)
/// with orientation e₃ → e₄.
fn standardize_to_back(c: &GreatCircle) -> Mat4 {
    let basis = geom::extend_to_oriented_basis(&c.basis[0], &c.basis[1]);
    // Send (b1, b2, b3, b4) to (e3, e4, e1, e2): an even permutation of the
    // target axes, so the map stays in SO(4).
    let targets: [Vec4; 4] = [
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ];
    let mut cols = [[0.0; 4]; 4];
    // M x = Σ_k <b_k, x> t_k  ⇒ column j of M is Σ_k b_k[j] t_k.
    for j in 0..4 {
        let mut col = [0.0; 4];
        for (k, t) in targets.iter().enumerate() {
            col = add4(&col, &scale4(t, basis[k][j]));
        }
        cols[j] = col;
    }
    Mat4::from_cols(cols)
}

/// The torus sum of two great circle links along components `i` of `l1` and
/// `j` of `l2`: both links are standardized so the chosen component is
/// span(e₃,e₄), the remaining components are flowed into the solid torus
/// w²+x² ≥ 1/√2, and the second link is carried across the Clifford torus
/// by the swap (z,w) ↦ (w,z). The result has m+n−2 components.
pub fn torus_sum(l1: &GCLink, i: usize, l2: &GCLink, j: usize) -> Result<GCLink> {
    if l1.len() < 2 || l2.len() < 2 {
        return Err(Error::InvalidInput(
            "torus sum needs links with at least 2 components".into(),
        ));
    }
    if i >= l1.len() || j >= l2.len() {
        return Err(Error::InvalidInput("torus-sum index out of range".into()));
    }
    let part = |l: &GCLink, idx: usize| -> Result<Vec<GreatCircle>> {
        let m = standardize_to_back(&l.components()[idx]);
        let rest: Vec<GreatCircle> = l
            .components()
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, c)| c.transform(&m))
            .collect::<Result<Vec<_>>>()?;
        flow_off_core(&rest)
    };
    let left = part(l1, i)?;
    let right = part(l2, j)?;
    // Clifford swap (z, w) ↦ (w, z): coordinates (0,1) ↔ (2,3), det +1.
    let swap = Mat4::from_cols([
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ]);
    let mut comps = left;
    for c in right {
        comps.push(c.transform(&swap)?);
    }
    GCLink::new(comps)
}

/// The ±n Hopf link built from n fibers of the standard right-handed
/// (sign = +1) or left-handed (sign = −1) i-bundle, at distinct base
/// positions. Components pairwise link `sign`.
pub fn hopf_link(sign: i8, n: usize) -> GCLink {
    assert!(sign == 1 || sign == -1);
    // Base points spread along a circle of fibers.
    let comps: Vec<GreatCircle> = (0..n)
        .map(|m| {
            let s = m as f64 * std::f64::consts::PI / (n.max(2) as f64 + 0.1);
            let x = Quaternion::new(s.cos(), 0.0, s.sin(), 0.0);
            let y = if sign == 1 {
                Quaternion::i() * x
            } else {
                x * Quaternion::i()
            };
            GreatCircle::new(x.to_vec4(), y.to_vec4()).expect("fiber basis is orthonormal")
        })
        .collect();
    GCLink::new(comps).expect("distinct Hopf fibers are pairwise transverse")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub fn random_circle(rng: &mut ChaCha8Rng) -> GreatCircle {
        loop {
            let gauss = |rng: &mut ChaCha8Rng| -> f64 {
                let u1: f64 = rng.random::<f64>().max(1e-12);
                let u2: f64 = rng.random();
                (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
            };
            let v1: Vec4 = std::array::from_fn(|_| gauss(rng));
            let v2: Vec4 = std::array::from_fn(|_| gauss(rng));
            if let Ok(c) = GreatCircle::from_spanning(v1, v2) {
                return c;
            }
        }
    }

    fn e(i: usize) -> Vec4 {
        let mut v = [0.0; 4];
        v[i] = 1.0;
        v
    }

    #[test]
    fn transverse_examples() {
        let c12 = GreatCircle::new(e(0), e(1)).unwrap();
        let c34 = GreatCircle::new(e(2), e(3)).unwrap();
        assert!(transverse(&c12, &c34));
        assert!(!transverse(&c12, &c12));
    }

    #[test]
    fn linking_sign_examples() {
        let c12 = GreatCircle::new(e(0), e(1)).unwrap();
        let c34 = GreatCircle::new(e(2), e(3)).unwrap();
        assert_eq!(linking_number(&c12, &c34).unwrap(), 1);
        // Swapping one basis flips the sign.
        assert_eq!(linking_number(&c12, &c34.reversed()).unwrap(), -1);
        // Symmetry: even permutation of determinant columns.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = random_circle(&mut rng);
            let b = random_circle(&mut rng);
            if transverse(&a, &b) {
                assert_eq!(
                    linking_number(&a, &b).unwrap(),
                    linking_number(&b, &a).unwrap()
                );
            }
        }
    }

    #[test]
    fn linking_number_not_transverse_error() {
        let c = GreatCircle::new(e(0), e(1)).unwrap();
        assert!(matches!(
            linking_number(&c, &c),
            Err(Error::NotTransverse { .. })
        ));
    }

    #[test]
    fn gauss_integral_standard_hopf_pair() {
        let c12 = GreatCircle::new(e(0), e(1)).unwrap();
        let c34 = GreatCircle::new(e(2), e(3)).unwrap();
        let lk = gauss_linking_integral(|t| c12.point(t), |t| c34.point(t), 96);
        assert!((lk - 1.0).abs() < 0.02, "gauss integral {lk}");
    }

    #[test]
    fn gauss_integral_agrees_with_determinant_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut done = 0;
        while done < 100 {
            let a = random_circle(&mut rng);
            let b = random_circle(&mut rng);
            if !transverse(&a, &b) || plane_det(&a, &b).abs() < 0.05 {
                continue; // keep quadrature honest on well-separated pairs
            }
            let det_sign = linking_number(&a, &b).unwrap();
            let lk = gauss_linking_integral(|t| a.point(t), |t| b.point(t), 96);
            assert!(
                (lk - det_sign as f64).abs() < 0.1,
                "det sign {det_sign} vs integral {lk} (plane det {})",
                plane_det(&a, &b)
            );
            done += 1;
        }
    }

    #[test]
    fn straighten_identity_on_great_circles() {
        let c12 = RoundCircle::from_great(&GreatCircle::new(e(0), e(1)).unwrap());
        let c34 = RoundCircle::from_great(&GreatCircle::new(e(2), e(3)).unwrap());
        let link = straighten(&[c12, c34]).unwrap();
        assert_eq!(link.len(), 2);
        assert_eq!(link.components()[0].basis()[0], e(0));
        assert_eq!(link.components()[1].basis()[1], e(3));
    }

    #[test]
    fn straighten_removes_offsets() {
        // Hopf fibers offset by base points of norm 0.1.
        let c1 = RoundCircle::new([0.0, 0.0, 0.1, 0.0], e(0), e(1)).unwrap();
        let c2 = RoundCircle::new([0.1, 0.0, 0.0, 0.0], e(2), e(3)).unwrap();
        let link = straighten(&[c1, c2]).unwrap();
        assert_eq!(link.len(), 2);
        assert!((plane_det(&link.components()[0], &link.components()[1]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn straighten_rejects_unlinked() {
        // Two small parallel circles far apart: linking 0.
        let c1 = RoundCircle::new([0.9, 0.0, 0.0, 0.0], e(1), e(2)).unwrap();
        let c2 = RoundCircle::new([-0.9, 0.0, 0.0, 0.0], e(1), e(2)).unwrap();
        assert!(matches!(
            straighten(&[c1, c2]),
            Err(Error::BadLinking(_))
        ));
    }

    #[test]
    fn straighten_preserves_linking_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let base = hopf_link(1, 3);
        // Perturb with random base offsets < 0.2.
        let circles: Vec<RoundCircle> = base
            .components()
            .iter()
            .map(|c| {
                let off: Vec4 = std::array::from_fn(|_| (rng.random::<f64>() - 0.5) * 0.2);
                RoundCircle::new(off, c.basis()[0], c.basis()[1]).unwrap()
            })
            .collect();
        let link = straighten(&circles).unwrap();
        assert_eq!(link.linking_matrix(), base.linking_matrix());
    }

    #[test]
    fn hopf_link_pairwise_signs() {
        for sign in [1i8, -1] {
            let l = hopf_link(sign, 5);
            for i in 0..5 {
                for j in (i + 1)..5 {
                    assert_eq!(
                        linking_number(&l.components()[i], &l.components()[j]).unwrap(),
                        sign
                    );
                }
            }
        }
    }

    #[test]
    fn torus_sum_component_count() {
        let a = hopf_link(1, 3);
        let b = hopf_link(-1, 3);
        let s = torus_sum(&a, 0, &b, 0).unwrap();
        assert_eq!(s.len(), 4);
        let s2 = torus_sum(&hopf_link(1, 2), 1, &hopf_link(1, 2), 0).unwrap();
        assert_eq!(s2.len(), 2);
    }

    #[test]
    fn torus_sum_flow_never_crosses_zero() {
        // Mirror of the internal flow: determinant signs are constant at
        // 100 sampled flow times.
        let l = hopf_link(1, 4);
        let m0 = standardize_to_back(&l.components()[0]);
        let rest: Vec<GreatCircle> = l.components()[1..]
            .iter()
            .map(|c| c.transform(&m0).unwrap())
            .collect();
        let mut signs0: Vec<f64> = Vec::new();
        for a in 0..rest.len() {
            for b in (a + 1)..rest.len() {
                signs0.push(plane_det(&rest[a], &rest[b]).signum());
            }
        }
        for step in 0..100 {
            let t = 1.0 - 0.99 * (step as f64 / 99.0);
            let m = Mat4::from_cols([e(0), e(1), scale4(&e(2), t), scale4(&e(3), t)]);
            let flowed: Vec<GreatCircle> =
                rest.iter().map(|c| c.transform(&m).unwrap()).collect();
            let mut idx = 0;
            for a in 0..flowed.len() {
                for b in (a + 1)..flowed.len() {
                    let d = plane_det(&flowed[a], &flowed[b]);
                    assert!(d.abs() > 1e-12, "determinant vanished along flow");
                    assert_eq!(d.signum(), signs0[idx]);
                    idx += 1;
                }
            }
        }
    }

    #[test]
    fn torus_sum_output_audited() {
        let a = hopf_link(1, 3);
        let b = hopf_link(-1, 4);
        let s = torus_sum(&a, 1, &b, 2).unwrap();
        assert_eq!(s.len(), 5);
        // Constructor audits transversality; recheck linking values are ±1.
        let m = s.linking_matrix();
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    assert_eq!(m[i][j].abs(), 1);
                }
            }
        }
    }

    #[test]
    fn min_front_square_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let c = random_circle(&mut rng);
            let analytic = min_front_square(&c);
            let mut sampled = f64::MAX;
            for s in 0..2000 {
                let t = s as f64 * std::f64::consts::TAU / 2000.0;
                let p = c.point(t);
                sampled = sampled.min(p[0] * p[0] + p[1] * p[1]);
            }
            assert!((analytic - sampled).abs() < 1e-5);
        }
    }
}
