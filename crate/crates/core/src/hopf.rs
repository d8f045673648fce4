//! Hopf bundles as fiber quotients, and projections of geodesics.
//!
//! The quotient of S³ identifying left (resp. right) q-fibers is a
//! 2-sphere; the induced bundle is called right-handed (resp. left-handed).
//! Concretely the quotient maps are conjugations, constant on fibers:
//!
//! - right-handed bundle with axis q: x ↦ x̄·q·x,
//! - left-handed bundle with axis q:  x ↦ x·q·x̄,
//!
//! both landing on the pure-unit sphere. The image of a geodesic is a point
//! (when the geodesic is itself a fiber) or a circle; a non-fiber geodesic
//! traverses its image circle twice, which is why strand heights along a
//! fiber are compared after doubling the fiber phase.

use crate::error::Error;
use crate::geom::{dot3, norm3, Vec3};
use crate::link::{linking_number, GCLink, GreatCircle};
use crate::quat::{fiber_phase, solve_axis_transport, FiberSide, PureUnit, Quaternion};
use crate::Result;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    /// The side of the fibers this bundle quotients by: a right-handed
    /// bundle identifies left fibers and vice versa.
    pub fn fiber_side(self) -> FiberSide {
        match self {
            Handedness::Right => FiberSide::Left,
            Handedness::Left => FiberSide::Right,
        }
    }

    /// Sign of the linking number of two distinct fibers of this bundle.
    pub fn fiber_linking(self) -> i8 {
        match self {
            Handedness::Right => 1,
            Handedness::Left => -1,
        }
    }
}

/// A geodesic fibration of S³ given by an axis and a handedness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HopfBundle {
    pub axis: PureUnit,
    pub handedness: Handedness,
}

impl HopfBundle {
    pub fn right(axis: PureUnit) -> Self {
        HopfBundle { axis, handedness: Handedness::Right }
    }

    pub fn left(axis: PureUnit) -> Self {
        HopfBundle { axis, handedness: Handedness::Left }
    }

    /// The standard Hopf fibration: right-handed i-bundle.
    pub fn standard() -> Self {
        HopfBundle::right(PureUnit::i())
    }

    /// Quotient map evaluated at a unit quaternion.
    pub fn project_point(&self, x: Quaternion) -> PureUnit {
        let q = self.axis.quaternion();
        let y = match self.handedness {
            Handedness::Right => x.conj() * q * x,
            Handedness::Left => x * q * x.conj(),
        };
        PureUnit::snap(y)
    }

    /// The fiber-axis a geodesic must have (up to sign) to be a fiber of
    /// this bundle.
    fn detection_axis(&self, g: &GreatCircle) -> PureUnit {
        let axes = g.axes();
        match self.handedness {
            Handedness::Right => axes.left_axis,
            Handedness::Left => axes.right_axis,
        }
    }

    /// The axis whose image is the center of a projected circle: for a
    /// right-handed bundle the geodesic's right axis (and symmetrically).
    fn center_axis(&self, g: &GreatCircle) -> PureUnit {
        let axes = g.axes();
        match self.handedness {
            Handedness::Right => axes.right_axis,
            Handedness::Left => axes.left_axis,
        }
    }

    /// Phase of x along the fiber over its own image, measured from `base`
    /// (a point of the same fiber).
    fn phase_between(&self, base: Quaternion, x: Quaternion) -> f64 {
        fiber_phase(self.axis, self.handedness.fiber_side(), base, x)
    }
}

/// Image of a projected geodesic: a round circle on the quotient sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereCircle {
    /// Center on the pure-unit sphere, chosen so the radius is ≤ π/2.
    pub center: PureUnit,
    /// Angular radius in [0, π/2].
    pub angular_radius: f64,
    /// Phase offset of the strand against the reference section, mod 2π.
    /// The normalization is ours; only differences of phases carry meaning.
    pub twist: f64,
    /// The projected geodesic.
    pub source: GreatCircle,
}

impl SphereCircle {
    /// Spherical distance from the stored center; inside means < radius.
    pub fn contains(&self, p: PureUnit) -> bool {
        self.center.distance(p) < self.angular_radius
    }

    /// Signed clearance of a point from the circle (negative inside).
    pub fn clearance(&self, p: PureUnit) -> f64 {
        self.center.distance(p) - self.angular_radius
    }
}

/// Result of projecting a geodesic along a bundle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ProjImage {
    Point(PureUnit),
    Circle(SphereCircle),
}

/// Tolerance for detecting that a geodesic is a fiber (axis match).
pub const FIBER_DETECT_TOL: f64 = 1e-9;

/// Projects a geodesic along a Hopf bundle.
///
/// The image is a point exactly when the geodesic is a fiber of the bundle
/// (its identified-side axis matches ±bundle.axis); otherwise it is the
/// circle centered at the image of the common fiber h, traversed twice per
/// traversal of the geodesic.
pub fn project(g: &GreatCircle, bundle: &HopfBundle) -> ProjImage {
    let det_axis = bundle.detection_axis(g);
    if det_axis.same_axis(bundle.axis, FIBER_DETECT_TOL) {
        return ProjImage::Point(bundle.project_point(Quaternion::from_vec4(g.basis()[0])));
    }
    // The center is the image of the geodesic h that is both a fiber of
    // the bundle and a co-fiber of g, which is the center axis itself;
    // choose the sign that keeps the radius within [0, π/2].
    let center_raw = bundle.center_axis(g);
    let sample = bundle.project_point(Quaternion::from_vec4(g.basis()[0]));
    let d = center_raw.distance(sample);
    let (center, radius) = if d <= std::f64::consts::FRAC_PI_2 {
        (center_raw, d)
    } else {
        (center_raw.antipode(), std::f64::consts::PI - d)
    };
    // Twist: phase of the strand at parameter 0 against the reference
    // section over its image (see `section_point`).
    let x0 = Quaternion::from_vec4(g.basis()[0]);
    let twist = match section_point(bundle, sample, center) {
        Some(base) => bundle.phase_between(base, x0).rem_euclid(std::f64::consts::TAU),
        None => 0.0,
    };
    ProjImage::Circle(SphereCircle {
        center,
        angular_radius: radius,
        twist,
        source: *g,
    })
}

/// A reference point of the fiber over `y`: the section is defined away
/// from the antipode of `center`, transporting the axis to y by the
/// shortest rotation. Returns None only at the antipode itself.
fn section_point(bundle: &HopfBundle, y: PureUnit, center: PureUnit) -> Option<Quaternion> {
    if y.distance(center.antipode()) < 1e-9 {
        return None;
    }
    // x with x (axis) x^-1 = y lies on the fiber over y for the right-handed
    // bundle convention x̄ q x: check side and adapt.
    match bundle.handedness {
        Handedness::Right => {
            // want x̄ q x = y ⇔ x y x̄ = q: transport y to axis.
            Some(solve_axis_transport(bundle.axis, y))
        }
        Handedness::Left => {
            // want x q x̄ = y: transport axis to y.
            Some(solve_axis_transport(y, bundle.axis))
        }
    }
}

/// Pairwise relation of two projected circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairType {
    /// The strands can be slid apart across the regions where the two
    /// canonical disks agree (both or neither): disjoint side-by-side.
    PullApart,
    /// The strands can be slid across the one-disk-only lunes: one circle
    /// ends up inside the other.
    Nested,
    /// The circles do not meet on the sphere.
    Disjoint,
}

/// Intersection points of two circles on the unit 2-sphere; exactly 0 or 2
/// transverse points for generic circles. Near-tangency is an error.
pub fn circle_intersections(
    c1: &SphereCircle,
    c2: &SphereCircle,
) -> Result<Option<(Vec3, Vec3)>> {
    let n1 = c1.center.imag();
    let n2 = c2.center.imag();
    let (a1, a2) = (c1.angular_radius.cos(), c2.angular_radius.cos());
    let d = dot3(&n1, &n2);
    let denom = 1.0 - d * d;
    if denom < 1e-12 {
        // Concentric (or antipodal-concentric) circles: disjoint unless equal.
        return if (c1.angular_radius - c2.angular_radius).abs() < 1e-9
            && c1.center.distance(c2.center) < 1e-9
        {
            Err(Error::TangentCircles)
        } else {
            Ok(None)
        };
    }
    // Solve y = α n1 + β n2 + γ (n1×n2) with <y,n1> = a1, <y,n2> = a2.
    let alpha = (a1 - a2 * d) / denom;
    let beta = (a2 - a1 * d) / denom;
    let cross = crate::geom::cross3(&n1, &n2);
    let base = [
        alpha * n1[0] + beta * n2[0],
        alpha * n1[1] + beta * n2[1],
        alpha * n1[2] + beta * n2[2],
    ];
    let base_sq = dot3(&base, &base);
    let gamma_sq = (1.0 - base_sq) / dot3(&cross, &cross);
    // Tangency window: the discriminant in units of the crossing angle.
    if gamma_sq.abs() < 1e-14 {
        return Err(Error::TangentCircles);
    }
    if gamma_sq < 0.0 {
        return Ok(None);
    }
    let gamma = gamma_sq.sqrt();
    let p1 = [
        base[0] + gamma * cross[0],
        base[1] + gamma * cross[1],
        base[2] + gamma * cross[2],
    ];
    let p2 = [
        base[0] - gamma * cross[0],
        base[1] - gamma * cross[1],
        base[2] - gamma * cross[2],
    ];
    // Transversality in angle: reject near-tangent crossings.
    let sep = norm3(&crate::geom::sub3(&p1, &p2));
    if sep < 1e-7 {
        return Err(Error::TangentCircles);
    }
    Ok(Some((p1, p2)))
}

/// Winding sense of the projected (doubled) traversal of `c.source` around
/// the stored center: +1 counterclockwise, −1 clockwise. The image tangent
/// of a non-fiber geodesic never vanishes, so the sign is read off at the
/// parameter-0 point.
pub fn winding_sign(c: &SphereCircle, bundle: &HopfBundle) -> i8 {
    let g = &c.source;
    let y0 = bundle
        .project_point(Quaternion::from_vec4(g.point(0.0)))
        .imag();
    let h = 1e-5;
    let y1 = bundle
        .project_point(Quaternion::from_vec4(g.point(h)))
        .imag();
    let dy = crate::geom::sub3(&y1, &y0);
    // CCW around n means the tangent aligns with n × y.
    let ccw_dir = crate::geom::cross3(&c.center.imag(), &y0);
    if dot3(&dy, &ccw_dir) >= 0.0 {
        1
    } else {
        -1
    }
}

/// Classifies how two projected circles of the same bundle interact.
///
/// For circles meeting at two transverse points the deciding invariant is
/// the linking number of the source geodesics taken with canonical
/// orientations (each geodesic oriented so its image winds counterclockwise
/// around its stored center): reversing a stored orientation flips both the
/// raw linking sign and the winding sign, so the product is intrinsic.
/// Canonically oriented linking equal to the bundle's own fiber linking
/// means the strands slide apart across the regions where the two canonical
/// disks agree; the opposite sign means one disk can be slid inside the
/// other. (Comparing the doubled fiber phases of the strands over the two
/// crossings against a fixed branch point misclassifies nested pairs whose
/// phase offset straddles the cut — see `nested_family_regression` — which
/// is why the decision goes through the linking form instead.)
pub fn pair_type(c1: &SphereCircle, c2: &SphereCircle, bundle: &HopfBundle) -> Result<PairType> {
    match circle_intersections(c1, c2)? {
        None => Ok(PairType::Disjoint),
        Some(_) => {
            let lk = linking_number(&c1.source, &c2.source)?;
            let w1 = winding_sign(c1, bundle);
            let w2 = winding_sign(c2, bundle);
            let canonical = lk * w1 * w2;
            if canonical == bundle.handedness.fiber_linking() {
                Ok(PairType::PullApart)
            } else {
                Ok(PairType::Nested)
            }
        }
    }
}

/// A point image together with the component it came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointImage {
    pub component: usize,
    pub position: PureUnit,
}

/// A circle image together with the component it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleImage {
    pub component: usize,
    pub circle: SphereCircle,
}

/// The full combinatorial record of a projected link.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Configuration {
    pub points: Vec<PointImage>,
    pub circles: Vec<CircleImage>,
    /// For each circle (by index into `circles`): which points and which
    /// other circles lie strictly inside its canonical disk.
    pub nesting: Vec<NestingRecord>,
    /// Pair classification for every unordered pair of circles.
    pub pair_types: Vec<PairRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NestingRecord {
    pub circle: usize,
    pub contains_points: Vec<usize>,
    pub contains_circles: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub a: usize,
    pub b: usize,
    pub kind: PairType,
}

/// Projects a whole link and assembles the configuration.
///
/// `fiber_indices` lists the components that are required to be fibers of
/// the bundle (they project to points); all other components must project
/// to circles. Incidence is measured strictly; points or circles within
/// 1e−7 of a circle boundary make the configuration indeterminate.
pub fn configuration(
    link: &GCLink,
    bundle: &HopfBundle,
    fiber_indices: &[usize],
) -> Result<Configuration> {
    let mut points = Vec::new();
    let mut circles = Vec::new();
    for (idx, comp) in link.components().iter().enumerate() {
        match project(comp, bundle) {
            ProjImage::Point(p) => {
                if !fiber_indices.contains(&idx) {
                    // A component that happens to be a fiber even though the
                    // caller did not say so: still a point image.
                }
                points.push(PointImage { component: idx, position: p });
            }
            ProjImage::Circle(c) => {
                if fiber_indices.contains(&idx) {
                    return Err(Error::IndeterminateConfiguration(format!(
                        "component {idx} was declared a fiber but projects to a circle"
                    )));
                }
                circles.push(CircleImage { component: idx, circle: c });
            }
        }
    }
    let boundary_tol = 1e-7;
    let mut nesting = Vec::new();
    for (ci, c) in circles.iter().enumerate() {
        let mut contains_points = Vec::new();
        for (pi, p) in points.iter().enumerate() {
            let clear = c.circle.clearance(p.position);
            if clear.abs() < boundary_tol {
                return Err(Error::IndeterminateConfiguration(format!(
                    "point image of component {} lies on the circle of component {}",
                    p.component, c.component
                )));
            }
            if clear < 0.0 {
                contains_points.push(pi);
            }
        }
        let mut contains_circles = Vec::new();
        for (cj, other) in circles.iter().enumerate() {
            if ci == cj {
                continue;
            }
            // A circle is inside this disk iff they are disjoint and a
            // sample point (its center works: center is the deepest point)
            // is inside.
            if let Ok(None) = circle_intersections(&c.circle, &other.circle) {
                if c.circle.clearance(other.circle.center) < -other.circle.angular_radius {
                    contains_circles.push(cj);
                }
            }
        }
        nesting.push(NestingRecord { circle: ci, contains_points, contains_circles });
    }
    let mut pair_types = Vec::new();
    for a in 0..circles.len() {
        for b in (a + 1)..circles.len() {
            let kind = pair_type(&circles[a].circle, &circles[b].circle, bundle)?;
            pair_types.push(PairRecord { a, b, kind });
        }
    }
    Ok(Configuration { points, circles, nesting, pair_types })
}
