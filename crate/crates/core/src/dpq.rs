//! The great circle link family D_{p/q}.
//!
//! D_{p/q} is the orbit of the real great circle {(x, y) : x² + y² = 1} in
//! ℂ² under φ_{p/q}: (z, w) ↦ (e^{2πi/q} z, e^{2πip/q} w), for q odd and
//! gcd(p, q) = 1. Component n meets the z-axis circle {(z, 0)} at the
//! angle pair (2πn/q, 2πn/q + π) and the w-axis circle {(0, w)} at
//! (2πpn/q, 2πpn/q + π); all of that bookkeeping is exact in integer
//! multiples of π/q. As the z-axis intersection advances by π/q the w-axis
//! intersection advances by pπ/q, which is what the standard planar
//! projection draws: q near-diameter arcs inside the unit circle, arc k
//! joining boundary angles (kpπ/q, kpπ/q + π) and crossing over all earlier
//! arcs, closed around the outside crossing under.

use crate::error::Error;
use crate::exact::gcd;
use crate::geom::Mat4;
use crate::link::{GCLink, GreatCircle};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Parameters of a dihedral link, normalized so 2p ≤ q. The original
/// fraction is retained for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DpqParams {
    /// Normalized numerator, 1 ≤ p and 2p < q.
    pub p: i64,
    /// Odd denominator ≥ 3; the number of components.
    pub q: i64,
    /// The numerator as given, before normalization mod q and mirroring.
    pub original_p: i64,
}

impl DpqParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 3 || q % 2 == 0 {
            return Err(Error::InvalidParams(format!("q = {q} must be odd and ≥ 3")));
        }
        if p <= 0 {
            return Err(Error::InvalidParams(format!("p = {p} must be positive")));
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidParams(format!(
                "gcd({p}, {q}) = {} ≠ 1",
                gcd(p, q)
            )));
        }
        let r = p.rem_euclid(q);
        let norm = r.min(q - r);
        Ok(DpqParams { p: norm, q, original_p: p })
    }

    /// p/q as a float (normalized representative).
    pub fn ratio(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl std::fmt::Display for DpqParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D_{{{}/{}}}", self.p, self.q)
    }
}

/// An angle that is an exact integer multiple of π/q, stored mod 2q.
pub type AngleUnits = i64;

/// Axis intersection schedule, exact in units of π/q (integers mod 2q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisSchedule {
    pub params: DpqParams,
    /// Component n (orbit order) hits the z-axis at (2n, 2n+q) mod 2q.
    pub z_pairs: Vec<(AngleUnits, AngleUnits)>,
    /// Component n (orbit order) hits the w-axis at (2pn, 2pn+q) mod 2q.
    pub w_pairs: Vec<(AngleUnits, AngleUnits)>,
    /// w_label_to_orbit[m] = the orbit index of the component whose w-axis
    /// angles are (m, m+q); the w-axis ordering of §components.
    pub w_label_to_orbit: Vec<usize>,
}

/// The exact schedule of axis intersections of D_{p/q}.
pub fn axis_schedule(params: &DpqParams) -> AxisSchedule {
    let (p, q) = (params.p, params.q);
    let z_pairs: Vec<_> = (0..q)
        .map(|n| ((2 * n) % (2 * q), (2 * n + q) % (2 * q)))
        .collect();
    let w_pairs: Vec<_> = (0..q)
        .map(|n| ((2 * p * n) % (2 * q), (2 * p * n + q) % (2 * q)))
        .collect();
    // w-label m ↦ orbit n with 2pn ≡ m (mod q).
    let inv2p = mod_inv(2 * p % q, q);
    let w_label_to_orbit: Vec<usize> = (0..q)
        .map(|m| ((inv2p * m) % q) as usize)
        .collect();
    AxisSchedule { params: *params, z_pairs, w_pairs, w_label_to_orbit }
}

fn mod_inv(a: i64, m: i64) -> i64 {
    crate::twobridge::mod_inverse(a, m).expect("unit mod q")
}

/// The great circle link D_{p/q}: component n has plane basis
/// {(e^{2πin/q}, 0), (0, e^{2πipn/q})} in ℂ² ≅ ℝ⁴.
pub fn build(params: &DpqParams) -> GCLink {
    let (p, q) = (params.p, params.q);
    let comps: Vec<GreatCircle> = (0..q)
        .map(|n| {
            let a = TAU * n as f64 / q as f64;
            let b = TAU * (p * n % q) as f64 / q as f64;
            GreatCircle::new(
                [a.cos(), a.sin(), 0.0, 0.0],
                [0.0, 0.0, b.cos(), b.sin()],
            )
            .expect("unit coordinate circles are orthonormal")
        })
        .collect();
    GCLink::new(comps).expect("D_{p/q} components are pairwise transverse for odd q")
}

/// The isometry φ_{p/q} as a matrix: rotation by 2π/q on the z-plane and
/// 2πp/q on the w-plane. Permutes the components of `build` cyclically.
pub fn phi_map(params: &DpqParams) -> Mat4 {
    let a = TAU / params.q as f64;
    let b = TAU * params.p as f64 / params.q as f64;
    Mat4::from_cols([
        [a.cos(), a.sin(), 0.0, 0.0],
        [-a.sin(), a.cos(), 0.0, 0.0],
        [0.0, 0.0, b.cos(), b.sin()],
        [0.0, 0.0, -b.sin(), b.cos()],
    ])
}

/// Closed form of the transversality determinant between components m and
/// n of `build`: −sin(2π(n−m)/q)·sin(2πp(n−m)/q).
pub fn pair_determinant(params: &DpqParams, m: i64, n: i64) -> f64 {
    let d = (n - m).rem_euclid(params.q);
    let a = TAU * d as f64 / params.q as f64;
    let b = TAU * (params.p * d % params.q) as f64 / params.q as f64;
    -(a.sin()) * (b.sin())
}

// ---------------------------------------------------------------------------
// Standard planar diagram
// ---------------------------------------------------------------------------

/// Whether a crossing lies among the inner near-diameter arcs or the outer
/// closures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossingRegion {
    Inner,
    Outer,
}

/// One crossing of the standard diagram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub id: usize,
    pub over_arc: usize,
    pub under_arc: usize,
    pub sign: i8,
    pub region: CrossingRegion,
    /// Curve parameters of the crossing on the over and under strands,
    /// within that strand's half (inner or outer) of its component.
    pub over_pos: f64,
    pub under_pos: f64,
    /// Planar position (unit-circle coordinates).
    pub point: [f64; 2],
}

/// One entry of a Gauss code: this component passes over (O) or under (U)
/// crossing `id`, which has the given sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussEntry {
    pub crossing: usize,
    pub over: bool,
    pub sign: i8,
}

/// One component of the standard diagram: an inner near-diameter arc and an
/// outer closure. All endpoint angles are exact integers (units of π/q).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramArc {
    /// Arc index k; the endpoints are kp and kp+q in units of π/q.
    pub arc: usize,
    /// Orbit index of the component this arc draws.
    pub orbit: usize,
    /// Inner arc travels from this boundary angle...
    pub inner_from: AngleUnits,
    /// ...to this one (both mod 2q); the outer closure returns the other way.
    pub inner_to: AngleUnits,
}

/// The standard projection of D_{p/q}: q arcs inside the unit circle, arc k
/// crossing over arcs 0..k−1, closed outside crossing under.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub params: DpqParams,
    pub arcs: Vec<DiagramArc>,
    pub crossings: Vec<Crossing>,
    /// Gauss code per arc, in traversal order (inner strand then outer).
    pub gauss_codes: Vec<Vec<GaussEntry>>,
}

impl LinkDiagram {
    /// Linking number of arcs a and b: half the signed sum of their two
    /// crossings.
    pub fn linking(&self, a: usize, b: usize) -> i8 {
        let total: i32 = self
            .crossings
            .iter()
            .filter(|c| {
                (c.over_arc == a && c.under_arc == b) || (c.over_arc == b && c.under_arc == a)
            })
            .map(|c| c.sign as i32)
            .sum();
        debug_assert_eq!(total % 2, 0);
        (total / 2) as i8
    }

    /// Linking matrix indexed by ORBIT component order, for comparison with
    /// the plane-determinant convention of [`crate::link::linking_number`].
    pub fn linking_matrix_orbit(&self) -> Vec<Vec<i8>> {
        let q = self.params.q as usize;
        let mut m = vec![vec![0i8; q]; q];
        for a in 0..q {
            for b in 0..q {
                if a == b {
                    continue;
                }
                let (oa, ob) = (self.arcs[a].orbit, self.arcs[b].orbit);
                m[oa][ob] = self.linking(a, b);
            }
        }
        m
    }

    /// Gauss codes in the text format: one line per arc,
    /// `k: O3+, U7-, ...` with 1-based crossing labels.
    pub fn gauss_code_text(&self) -> String {
        let mut out = String::new();
        for (k, code) in self.gauss_codes.iter().enumerate() {
            out.push_str(&format!("{k}:"));
            for (i, e) in code.iter().enumerate() {
                out.push_str(if i == 0 { " " } else { ", " });
                out.push(if e.over { 'O' } else { 'U' });
                out.push_str(&format!("{}", e.crossing + 1));
                out.push(if e.sign > 0 { '+' } else { '-' });
            }
            out.push('\n');
        }
        out
    }
}

/// A circular arc: center, radius, start angle, signed sweep.
#[derive(Debug, Clone, Copy)]
struct CircArc {
    center: [f64; 2],
    radius: f64,
    start: f64,
    sweep: f64,
}

impl CircArc {
    /// The circle through three points (not collinear).
    fn through(p1: [f64; 2], p2: [f64; 2], p3: [f64; 2]) -> CircArc {
        let d = 2.0 * (p1[0] * (p2[1] - p3[1]) + p2[0] * (p3[1] - p1[1]) + p3[0] * (p1[1] - p2[1]));
        let sq = |p: [f64; 2]| p[0] * p[0] + p[1] * p[1];
        let ux = (sq(p1) * (p2[1] - p3[1]) + sq(p2) * (p3[1] - p1[1]) + sq(p3) * (p1[1] - p2[1])) / d;
        let uy = (sq(p1) * (p3[0] - p2[0]) + sq(p2) * (p1[0] - p3[0]) + sq(p3) * (p2[0] - p1[0])) / d;
        let center = [ux, uy];
        let radius = ((p1[0] - ux).powi(2) + (p1[1] - uy).powi(2)).sqrt();
        let ang = |p: [f64; 2]| (p[1] - uy).atan2(p[0] - ux);
        let (a1, a2, a3) = (ang(p1), ang(p2), ang(p3));
        // Sweep from a1 through a2 to a3.
        let ccw_dist = |from: f64, to: f64| (to - from).rem_euclid(TAU);
        let sweep = if ccw_dist(a1, a2) <= ccw_dist(a1, a3) {
            ccw_dist(a1, a3)
        } else {
            -(ccw_dist(a3, a1))
        };
        CircArc { center, radius, start: a1, sweep }
    }

    fn point(&self, t: f64) -> [f64; 2] {
        let a = self.start + t * self.sweep;
        [
            self.center[0] + self.radius * a.cos(),
            self.center[1] + self.radius * a.sin(),
        ]
    }

    /// Unit tangent in travel direction at parameter t.
    fn tangent(&self, t: f64) -> [f64; 2] {
        let a = self.start + t * self.sweep;
        let s = self.sweep.signum();
        [-a.sin() * s, a.cos() * s]
    }

    /// Parameter of an angle on the full circle, if it lies on the arc.
    fn param_of_angle(&self, ang: f64) -> Option<f64> {
        let rel = if self.sweep >= 0.0 {
            (ang - self.start).rem_euclid(TAU)
        } else {
            -((self.start - ang).rem_euclid(TAU))
        };
        let t = rel / self.sweep;
        if (-1e-9..=1.0 + 1e-9).contains(&t) {
            Some(t.clamp(0.0, 1.0))
        } else {
            None
        }
    }

    /// Intersections with another arc: (t_self, t_other, point).
    fn intersect(&self, other: &CircArc) -> Vec<(f64, f64, [f64; 2])> {
        let dx = other.center[0] - self.center[0];
        let dy = other.center[1] - self.center[1];
        let d = (dx * dx + dy * dy).sqrt();
        if d < 1e-12 || d > self.radius + other.radius || d < (self.radius - other.radius).abs() {
            return Vec::new();
        }
        let a = (self.radius * self.radius - other.radius * other.radius + d * d) / (2.0 * d);
        let h_sq = self.radius * self.radius - a * a;
        if h_sq < 0.0 {
            return Vec::new();
        }
        let h = h_sq.sqrt();
        let mx = self.center[0] + a * dx / d;
        let my = self.center[1] + a * dy / d;
        let mut out = Vec::new();
        for s in [1.0, -1.0] {
            let p = [mx + s * h * (-dy) / d, my + s * h * dx / d];
            let ang_self = (p[1] - self.center[1]).atan2(p[0] - self.center[0]);
            let ang_other = (p[1] - other.center[1]).atan2(p[0] - other.center[0]);
            if let (Some(t1), Some(t2)) =
                (self.param_of_angle(ang_self), other.param_of_angle(ang_other))
            {
                out.push((t1, t2, p));
            }
            if h < 1e-12 {
                break; // tangent circles: single point
            }
        }
        out
    }
}

/// Planar geometry of one diagram component: its inner and outer curve.
struct ArcGeometry {
    inner: CircArc,
    outer: CircArc,
}

fn unit_point(units: AngleUnits, q: i64) -> [f64; 2] {
    let a = units as f64 * PI / q as f64;
    [a.cos(), a.sin()]
}

/// Sagitta of the inner near-diameter arcs (left of travel).
const INNER_BULGE: f64 = 0.10;

fn arc_geometry(arc: &DiagramArc, q: i64, outer_bulge: f64) -> ArcGeometry {
    let from = unit_point(arc.inner_from, q);
    let to = unit_point(arc.inner_to, q);
    // Midpoint bulged to the left of the travel direction from→to. The
    // endpoints are antipodal, so travel direction is −from and the left
    // normal is (from.y, −from.x) rotated... rot90ccw(−from) = (from[1], −from[0]).
    let mid = [INNER_BULGE * from[1], -INNER_BULGE * from[0]];
    let inner = CircArc::through(from, mid, to);
    // Outer closure: from `to` back to `from`, counterclockwise around the
    // outside, through an apex at angle(to) + π/2.
    let to_angle = (arc.inner_to as f64) * PI / q as f64;
    let apex_angle = to_angle + PI / 2.0;
    let apex = [
        (1.0 + outer_bulge) * apex_angle.cos(),
        (1.0 + outer_bulge) * apex_angle.sin(),
    ];
    let outer = CircArc::through(to, apex, from);
    ArcGeometry { inner, outer }
}

/// The standard projection of D_{p/q}.
///
/// Arc k joins boundary angles kp and kp+q (units of π/q). Inner crossing
/// rule: larger k crosses over. Outer rule: larger k crosses under. The
/// traversal direction of each arc comes from the orbit parameterization of
/// its component (basis orientation), which is what makes the diagram's
/// signed crossings agree with the plane-determinant linking convention.
pub fn standard_diagram(params: &DpqParams) -> LinkDiagram {
    let (p, q) = (params.p, params.q);
    let two_q = 2 * q;
    // Arc k ↔ orbit component n with {2pn, 2pn+q} = {kp, kp+q} mod 2q.
    let mut arcs = Vec::with_capacity(q as usize);
    for k in 0..q {
        let kp = (k * p).rem_euclid(two_q);
        let orbit = (0..q)
            .find(|&n| {
                let wn = (2 * p * n).rem_euclid(two_q);
                wn == kp || wn == (kp + q) % two_q
            })
            .expect("every arc endpoint pair belongs to an orbit component");
        // Upper z-passage of this component: the representative of its
        // z-angle pair lying in {0, …, q−1}. At parameter u = 0 the
        // component sits at z-angle 2n; at u = π, at 2n+q. The inner arc is
        // the strand through the upper passage, traversed by increasing u.
        let z0 = (2 * orbit).rem_euclid(two_q);
        let w0 = (2 * p * orbit).rem_euclid(two_q);
        let (inner_from, inner_to) = if z0 < q {
            // upper passage at u = 0: inner strand runs u ∈ (−π/2, π/2),
            // from the w-point at w0+q to the w-point at w0.
            ((w0 + q) % two_q, w0)
        } else {
            // upper passage at u = π: inner strand runs u ∈ (π/2, 3π/2).
            (w0, (w0 + q) % two_q)
        };
        arcs.push(DiagramArc { arc: k as usize, orbit: orbit as usize, inner_from, inner_to });
    }

    // Geometry: outer bulges grow with k so closures stay distinct.
    let geoms: Vec<ArcGeometry> = arcs
        .iter()
        .enumerate()
        .map(|(k, a)| arc_geometry(a, q, 0.12 + 0.5 * (k as f64 + 1.0) / (q as f64 + 1.0)))
        .collect();

    let qn = q as usize;
    let mut crossings = Vec::new();
    // Inner crossings: arc k over arc j for j < k.
    for j in 0..qn {
        for k in (j + 1)..qn {
            let hits = geoms[k].inner.intersect(&geoms[j].inner);
            assert_eq!(
                hits.len(),
                1,
                "inner arcs {j} and {k} must cross exactly once, got {}",
                hits.len()
            );
            let (tk, tj, pt) = hits[0];
            let t_over = geoms[k].inner.tangent(tk);
            let t_under = geoms[j].inner.tangent(tj);
            let cross = t_over[0] * t_under[1] - t_over[1] * t_under[0];
            crossings.push(Crossing {
                id: 0,
                over_arc: k,
                under_arc: j,
                sign: if cross > 0.0 { 1 } else { -1 },
                region: CrossingRegion::Inner,
                over_pos: tk,
                under_pos: tj,
                point: pt,
            });
        }
    }
    // Outer crossings: arc j over arc k for j < k.
    for j in 0..qn {
        for k in (j + 1)..qn {
            let hits = geoms[j].outer.intersect(&geoms[k].outer);
            assert_eq!(
                hits.len(),
                1,
                "outer arcs {j} and {k} must cross exactly once, got {}",
                hits.len()
            );
            let (tj, tk, pt) = hits[0];
            let t_over = geoms[j].outer.tangent(tj);
            let t_under = geoms[k].outer.tangent(tk);
            let cross = t_over[0] * t_under[1] - t_over[1] * t_under[0];
            crossings.push(Crossing {
                id: 0,
                over_arc: j,
                under_arc: k,
                sign: if cross > 0.0 { 1 } else { -1 },
                region: CrossingRegion::Outer,
                over_pos: tj,
                under_pos: tk,
                point: pt,
            });
        }
    }
    for (i, c) in crossings.iter_mut().enumerate() {
        c.id = i;
    }

    // Gauss codes: traverse inner then outer, crossings ordered by curve
    // parameter.
    let mut gauss_codes = Vec::with_capacity(qn);
    for a in 0..qn {
        let mut entries: Vec<(f64, u8, GaussEntry)> = Vec::new();
        for c in &crossings {
            let (pos, over, region) = if c.over_arc == a {
                (c.over_pos, true, c.region)
            } else if c.under_arc == a {
                (c.under_pos, false, c.region)
            } else {
                continue;
            };
            let phase = match region {
                CrossingRegion::Inner => 0u8,
                CrossingRegion::Outer => 1u8,
            };
            entries.push((
                pos,
                phase,
                GaussEntry { crossing: c.id, over, sign: c.sign },
            ));
        }
        entries.sort_by(|x, y| (x.1, x.0).partial_cmp(&(y.1, y.0)).unwrap());
        gauss_codes.push(entries.into_iter().map(|(_, _, e)| e).collect());
    }

    LinkDiagram { params: *params, arcs, crossings, gauss_codes }
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

/// Rendering options; the default viewport is 512×512.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SvgOptions {
    pub size: u32,
    /// Gap half-width cut out of the under strand at each crossing, in
    /// curve-parameter units scaled by curve length.
    pub gap: f64,
    pub stroke_width: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { size: 512, gap: 0.022, stroke_width: 2.2 }
    }
}

fn component_color(k: usize, total: usize) -> String {
    let hue = 360.0 * k as f64 / total.max(1) as f64;
    let (h, s, l) = (hue, 0.65, 0.45);
    // hsl → rgb
    let c = (1.0 - (2.0 * l - 1.0f64).abs()) * s;
    let hp = h / 60.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0f64).abs());
    let (r1, g1, b1) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    format!(
        "#{:02x}{:02x}{:02x}",
        ((r1 + m) * 255.0).round() as u8,
        ((g1 + m) * 255.0).round() as u8,
        ((b1 + m) * 255.0).round() as u8
    )
}

/// Renders the standard diagram to SVG text. Deterministic: identical
/// input yields byte-identical output. Each component is one `<g>` group;
/// the under strand is broken at each crossing, so the diagram carries
/// exactly one visible gap per crossing.
pub fn render_svg(diagram: &LinkDiagram, options: &SvgOptions) -> String {
    let q = diagram.params.q;
    let qn = q as usize;
    let size = options.size as f64;
    let scale = size / 2.0 / 1.95; // outer bulges stay within view
    let to_px = |p: [f64; 2]| -> (f64, f64) {
        (size / 2.0 + p[0] * scale, size / 2.0 - p[1] * scale)
    };

    let geoms: Vec<ArcGeometry> = diagram
        .arcs
        .iter()
        .enumerate()
        .map(|(k, a)| arc_geometry(a, q, 0.12 + 0.5 * (k as f64 + 1.0) / (q as f64 + 1.0)))
        .collect();

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        options.size
    ));
    svg.push_str(&format!(
        "  <rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n",
        options.size
    ));

    for a in 0..qn {
        let color = component_color(a, qn);
        svg.push_str(&format!(
            "  <g fill=\"none\" stroke=\"{color}\" stroke-width=\"{:.2}\" stroke-linecap=\"round\" data-arc=\"{a}\">\n",
            options.stroke_width
        ));
        for (curve, region) in [
            (&geoms[a].inner, CrossingRegion::Inner),
            (&geoms[a].outer, CrossingRegion::Outer),
        ] {
            // Windows to cut out: crossings where this arc passes under.
            let mut cuts: Vec<f64> = diagram
                .crossings
                .iter()
                .filter(|c| c.under_arc == a && c.region == region)
                .map(|c| c.under_pos)
                .collect();
            cuts.sort_by(f64::total_cmp);
            // Gap half-width in parameter units for a fixed world-space gap.
            let curve_len = (curve.sweep.abs() * curve.radius).max(1e-9);
            let half_gap = options.gap / curve_len;
            let mut segments: Vec<(f64, f64)> = Vec::new();
            let mut t0 = 0.0;
            for &c in &cuts {
                let lo = (c - half_gap).max(0.0);
                let hi = (c + half_gap).min(1.0);
                if lo > t0 {
                    segments.push((t0, lo));
                }
                t0 = hi;
            }
            if t0 < 1.0 {
                segments.push((t0, 1.0));
            }
            for (s0, s1) in segments {
                let steps = 32;
                let mut d = String::new();
                for i in 0..=steps {
                    let t = s0 + (s1 - s0) * i as f64 / steps as f64;
                    let (x, y) = to_px(curve.point(t));
                    if i == 0 {
                        d.push_str(&format!("M {x:.3} {y:.3}"));
                    } else {
                        d.push_str(&format!(" L {x:.3} {y:.3}"));
                    }
                }
                svg.push_str(&format!("    <path d=\"{d}\"/>\n"));
            }
        }
        svg.push_str("  </g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}
