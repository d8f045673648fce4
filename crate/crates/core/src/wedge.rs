//! z/w-disk and wedge combinatorics for the surfaces S_{n..n+2p−1}.
//!
//! A z-disk of radius c sits over a point of the z-axis circle and extends
//! to |w| ≤ c; w-disks are symmetric. Wedges are unions of disks over angle
//! intervals. The closed genus-(2p−1) surface in S³ − D_{p/q} is the
//! boundary of two w-wedges joined by 2p z-wedge tubes, so its entire
//! combinatorics reduces to interval bookkeeping in exact multiples of π/q
//! with symbolic "just before/just after" offsets. Nothing in this module
//! touches floating point except the cross-check tests.
//!
//! The angle lattice is scaled by 4: an endpoint at u units of π/q with an
//! ε-offset tag is the integer 4u + tag, so ordering, shifts by φ_{p/q},
//! and point counting are exact i64 arithmetic on the circle of 8q.

use crate::dpq::DpqParams;
use crate::error::Error;
use crate::exact::Rational;
use crate::Result;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    Z,
    W,
}

/// Symbolic offset of a disk center or wedge endpoint from its lattice angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EpsTag {
    JustBefore,
    Exact,
    JustAfter,
}

impl EpsTag {
    fn offset(self) -> i64 {
        match self {
            EpsTag::JustBefore => -1,
            EpsTag::Exact => 0,
            EpsTag::JustAfter => 1,
        }
    }
}

/// A meridional disk of one of the two core solid tori.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiskSpec {
    pub axis: Axis,
    /// Center angle in units of π/q (mod 2q).
    pub center_units: i64,
    pub eps: EpsTag,
    /// Exact square of the radius c ∈ (0, 1]; the default surface radius
    /// is c = 1/√2, i.e. radius_sq = 1/2.
    pub radius_sq: Rational,
}

impl DiskSpec {
    pub fn new(axis: Axis, center_units: i64, eps: EpsTag, radius_sq: Rational) -> Result<Self> {
        if radius_sq <= Rational::integer(0) || radius_sq > Rational::integer(1) {
            return Err(Error::RangeError(format!(
                "disk radius² must be in (0, 1], got {radius_sq}"
            )));
        }
        Ok(DiskSpec { axis, center_units, eps, radius_sq })
    }
}

/// Outcome of intersecting two disks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiskIntersection {
    NoIntersect,
    /// Two same-axis disks of radius 1: they share the opposite core axis.
    Axis,
    /// Mixed-axis disks with c² + c′² = 1: a single point.
    Point,
    Region,
}

/// Intersection trichotomy of two disks, exact when the radii are exact:
/// same-axis disks meet only at radius c = c′ = 1 (in the opposite axis);
/// mixed-axis disks meet iff c² + c′² ≥ 1, in a point at equality.
pub fn disk_intersect(d1: &DiskSpec, d2: &DiskSpec) -> DiskIntersection {
    let one = Rational::integer(1);
    if d1.axis == d2.axis {
        if d1.center_units == d2.center_units && d1.eps == d2.eps {
            // Identical center: nested disks overlap outright.
            return DiskIntersection::Region;
        }
        if d1.radius_sq == one && d2.radius_sq == one {
            return DiskIntersection::Axis;
        }
        return DiskIntersection::NoIntersect;
    }
    let sum = d1.radius_sq + d2.radius_sq;
    match sum.cmp(&one) {
        std::cmp::Ordering::Less => DiskIntersection::NoIntersect,
        std::cmp::Ordering::Equal => DiskIntersection::Point,
        std::cmp::Ordering::Greater => DiskIntersection::Region,
    }
}

/// A counterclockwise interval on the angle circle, endpoints on the
/// ε-refined lattice. Scaled representation: positions are 4·units + ε on
/// the circle of 8q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WedgeInterval {
    start_scaled: i64,
    extent_scaled: i64,
    modulus: i64,
}

impl WedgeInterval {
    /// Interval from (u₁ + ε₁) to (u₂ + ε₂) counterclockwise, on the circle
    /// of 2q units of π/q.
    pub fn new(q: i64, from: (i64, EpsTag), to: (i64, EpsTag)) -> Self {
        let modulus = 8 * q;
        let start = (4 * from.0 + from.1.offset()).rem_euclid(modulus);
        let end = (4 * to.0 + to.1.offset()).rem_euclid(modulus);
        let extent = (end - start).rem_euclid(modulus);
        WedgeInterval { start_scaled: start, extent_scaled: extent, modulus }
    }

    pub fn start(&self) -> (i64, EpsTag) {
        Self::decode(self.start_scaled, self.modulus)
    }

    pub fn end(&self) -> (i64, EpsTag) {
        Self::decode(
            (self.start_scaled + self.extent_scaled).rem_euclid(self.modulus),
            self.modulus,
        )
    }

    fn decode(scaled: i64, modulus: i64) -> (i64, EpsTag) {
        let s = scaled.rem_euclid(modulus);
        let (u, r) = (s.div_euclid(4), s.rem_euclid(4));
        match r {
            0 => (u, EpsTag::Exact),
            1 => (u, EpsTag::JustAfter),
            3 => ((u + 1).rem_euclid(modulus / 4), EpsTag::JustBefore),
            _ => unreachable!("lattice positions use offsets in {{-1,0,1}}"),
        }
    }

    /// Strictly contains a lattice point at `units` of π/q?
    pub fn contains_unit(&self, units: i64) -> bool {
        let pos = (4 * units).rem_euclid(self.modulus);
        let rel = (pos - self.start_scaled).rem_euclid(self.modulus);
        rel > 0 && rel < self.extent_scaled
    }

    /// Lattice units strictly inside the interval.
    pub fn units_inside(&self) -> Vec<i64> {
        (0..self.modulus / 4).filter(|&u| self.contains_unit(u)).collect()
    }

    /// Does this interval contain `other` entirely?
    pub fn contains_interval(&self, other: &WedgeInterval) -> bool {
        debug_assert_eq!(self.modulus, other.modulus);
        let rel = (other.start_scaled - self.start_scaled).rem_euclid(self.modulus);
        rel + other.extent_scaled <= self.extent_scaled
    }

    /// Shift counterclockwise by whole units of π/q.
    pub fn shifted(&self, units: i64) -> WedgeInterval {
        WedgeInterval {
            start_scaled: (self.start_scaled + 4 * units).rem_euclid(self.modulus),
            extent_scaled: self.extent_scaled,
            modulus: self.modulus,
        }
    }

    /// Complementary intervals of a family of pairwise disjoint intervals,
    /// in counterclockwise order.
    pub fn complement(intervals: &[WedgeInterval]) -> Vec<WedgeInterval> {
        assert!(!intervals.is_empty());
        let modulus = intervals[0].modulus;
        let mut sorted: Vec<_> = intervals.to_vec();
        sorted.sort_by_key(|w| w.start_scaled);
        let mut out = Vec::new();
        for i in 0..sorted.len() {
            let end = (sorted[i].start_scaled + sorted[i].extent_scaled).rem_euclid(modulus);
            let next_start = sorted[(i + 1) % sorted.len()].start_scaled;
            let extent = (next_start - end).rem_euclid(modulus);
            out.push(WedgeInterval { start_scaled: end, extent_scaled: extent, modulus });
        }
        out
    }
}

/// The wedge description of the surface S_{n..n+2p−1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub params: DpqParams,
    /// Starting component in the w-axis ordering.
    pub start: i64,
    /// The two w-wedges (slightly expanded intervals of the w-axis circle).
    pub w_wedges: [WedgeInterval; 2],
    /// The 2p z-wedges, each holding arcs of exactly two components.
    pub z_wedges: Vec<WedgeInterval>,
    /// For each z-wedge: the w-labels of the two components inside.
    pub z_wedge_pairs: Vec<(i64, i64)>,
    pub genus: i64,
    pub euler_characteristic: i64,
    pub w_disks: Vec<DiskSpec>,
    pub z_disks: Vec<DiskSpec>,
    /// Components (w-labels) on the M′ side (inside the wedges).
    pub m_prime: Vec<i64>,
    /// Components on the M″ side.
    pub m_double_prime: Vec<i64>,
}

/// Builds the wedge description of S_{n..n+2p−1}. Needs p/q < 1/2 so the
/// two w-wedges are disjoint.
pub fn surface_spec(params: &DpqParams, start: i64) -> Result<SurfaceSpec> {
    let (p, q) = (params.p, params.q);
    if 2 * p >= q {
        return Err(Error::RangeError(format!(
            "surface needs p/q < 1/2, got {p}/{q}"
        )));
    }
    let n = start.rem_euclid(q);
    let half = Rational::new(1, 2);

    let w_wedges = [
        WedgeInterval::new(q, (n, EpsTag::JustBefore), (n + 2 * p - 1, EpsTag::JustAfter)),
        WedgeInterval::new(
            q,
            (n + q, EpsTag::JustBefore),
            (n + 2 * p - 1 + q, EpsTag::JustAfter),
        ),
    ];
    let w_disks = vec![
        DiskSpec::new(Axis::W, n.rem_euclid(2 * q), EpsTag::JustBefore, half)?,
        DiskSpec::new(Axis::W, (n + 2 * p - 1).rem_euclid(2 * q), EpsTag::JustAfter, half)?,
        DiskSpec::new(Axis::W, (n + q).rem_euclid(2 * q), EpsTag::JustBefore, half)?,
        DiskSpec::new(
            Axis::W,
            (n + 2 * p - 1 + q).rem_euclid(2 * q),
            EpsTag::JustAfter,
            half,
        )?,
    ];

    // Component with w-label m has z-residue p⁻¹·m (mod q); w-labels k and
    // k+p sit at consecutive z-residues r and r+1.
    let inv_p = crate::twobridge::mod_inverse(p, q).expect("gcd(p,q)=1");
    let mut z_wedges = Vec::with_capacity(2 * p as usize);
    let mut z_wedge_pairs = Vec::with_capacity(2 * p as usize);
    let mut z_disks = Vec::with_capacity(4 * p as usize);
    for k in n..(n + p) {
        let r = (inv_p * k.rem_euclid(q)).rem_euclid(q);
        for half_shift in [0, q] {
            z_wedges.push(WedgeInterval::new(
                q,
                (r + half_shift, EpsTag::JustBefore),
                (r + 1 + half_shift, EpsTag::JustAfter),
            ));
            z_wedge_pairs.push((k.rem_euclid(q), (k + p).rem_euclid(q)));
            z_disks.push(DiskSpec::new(
                Axis::Z,
                (r + half_shift).rem_euclid(2 * q),
                EpsTag::JustBefore,
                half,
            )?);
            z_disks.push(DiskSpec::new(
                Axis::Z,
                (r + 1 + half_shift).rem_euclid(2 * q),
                EpsTag::JustAfter,
                half,
            )?);
        }
    }

    let m_prime: Vec<i64> = (n..(n + 2 * p)).map(|m| m.rem_euclid(q)).collect();
    let m_double_prime: Vec<i64> = (0..q).filter(|m| !m_prime.contains(m)).collect();

    Ok(SurfaceSpec {
        params: *params,
        start: n,
        w_wedges,
        z_wedges,
        z_wedge_pairs,
        genus: 2 * p - 1,
        euler_characteristic: 4 - 4 * p,
        w_disks,
        z_disks,
        m_prime,
        m_double_prime,
    })
}

/// The verified premises of the incompressibility theorem's homeomorphism
/// lemma (M″ ≅ M′ after trivial fillings), all checked exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeCensus {
    pub params: DpqParams,
    /// Intersection points of the link with the w-axis inside each
    /// complementary w-wedge (each must be ≥ 2p).
    pub complementary_w_points: Vec<usize>,
    /// Components crossing each complementary z-wedge (each must be ≥ 2).
    pub complementary_z_arcs: Vec<usize>,
    /// φ(M′-wedges) land inside M″-wedges, one per M″-wedge.
    pub phi_maps_into_complement: bool,
}

/// Verifies the wedge census for S_{0..2p−1}. Requires p/q < 1/4; every
/// premise failure is reported as [`Error::PremiseFailure`] (its occurrence
/// on valid input signals an implementation bug, not a bad link).
pub fn wedge_census(params: &DpqParams) -> Result<WedgeCensus> {
    let (p, q) = (params.p, params.q);
    if 4 * p >= q {
        return Err(Error::RangeError(format!(
            "wedge census needs p/q < 1/4, got {p}/{q}"
        )));
    }
    let spec = surface_spec(params, 0)?;

    // Complementary w-wedges must each hold ≥ 2p intersection points.
    let w_complement = WedgeInterval::complement(&spec.w_wedges);
    let mut complementary_w_points = Vec::new();
    for wi in &w_complement {
        let count = wi.units_inside().len();
        if count < 2 * p as usize {
            return Err(Error::PremiseFailure(format!(
                "complementary w-wedge holds {count} points, needs ≥ {}",
                2 * p
            )));
        }
        complementary_w_points.push(count);
    }

    // Complementary z-wedges must each hold ≥ 2 arcs.
    let z_complement = WedgeInterval::complement(&spec.z_wedges);
    let mut complementary_z_arcs = Vec::new();
    for zi in &z_complement {
        let count = zi.units_inside().len();
        if count < 2 {
            return Err(Error::PremiseFailure(format!(
                "complementary z-wedge holds {count} arcs, needs ≥ 2"
            )));
        }
        complementary_z_arcs.push(count);
    }

    // φ_{p/q} advances w-angles by 2p units and z-angles by 2 units; each
    // image wedge must land in a complementary wedge, exactly one per wedge.
    let mut w_hits = vec![0usize; w_complement.len()];
    for w in &spec.w_wedges {
        let moved = w.shifted(2 * p);
        match w_complement.iter().position(|c| c.contains_interval(&moved)) {
            Some(i) => w_hits[i] += 1,
            None => {
                return Err(Error::PremiseFailure(
                    "φ(M′ w-wedge) escapes the complementary w-wedges".into(),
                ))
            }
        }
    }
    let mut z_hits = vec![0usize; z_complement.len()];
    for z in &spec.z_wedges {
        let moved = z.shifted(2);
        match z_complement.iter().position(|c| c.contains_interval(&moved)) {
            Some(i) => z_hits[i] += 1,
            None => {
                return Err(Error::PremiseFailure(
                    "φ(M′ z-wedge) escapes the complementary z-wedges".into(),
                ))
            }
        }
    }
    if w_hits.iter().any(|&h| h != 1) || z_hits.iter().any(|&h| h != 1) {
        return Err(Error::PremiseFailure(
            "an M″ wedge does not contain exactly one wedge of φ(M′)".into(),
        ));
    }

    Ok(WedgeCensus {
        params: *params,
        complementary_w_points,
        complementary_z_arcs,
        phi_maps_into_complement: true,
    })
}

/// One coannular boundary component and its slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoannularEntry {
    /// Component index in the w-axis ordering (0..2q−1 labeling, where
    /// label m and m+q name the same circle; the classical statement uses
    /// 0, 2p−1, 2p and 2q−1).
    pub component: i64,
    pub slope: i8,
}

/// The four slopes on ∂M_{p/q} coannular to S_{0..2p−1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoannularReport {
    pub entries: Vec<CoannularEntry>,
    pub count: usize,
}

/// Exactly four boundary components are coannular to the surface: the
/// components flanking the w-disks. Components 0 and 2p twist once
/// left-handed (slope −1); components 2p−1 and 2q−1 twist once
/// right-handed (slope +1). Requires p/q < 1/4.
pub fn coannular_slopes(p: i64, q: i64) -> Result<CoannularReport> {
    if crate::exact::gcd(p, q) != 1 || q % 2 == 0 || p <= 0 || q < 3 {
        return Err(Error::InvalidParams(format!("bad dihedral fraction {p}/{q}")));
    }
    if 4 * p >= q {
        return Err(Error::RangeError(format!(
            "coannular slopes need p/q < 1/4, got {p}/{q}"
        )));
    }
    let entries = vec![
        CoannularEntry { component: 0, slope: -1 },
        CoannularEntry { component: 2 * p - 1, slope: 1 },
        CoannularEntry { component: 2 * p, slope: -1 },
        CoannularEntry { component: 2 * q - 1, slope: 1 },
    ];
    Ok(CoannularReport { count: entries.len(), entries })
}

/// [`coannular_slopes`] for normalized parameters.
pub fn coannular_slopes_params(params: &DpqParams) -> Result<CoannularReport> {
    coannular_slopes(params.p, params.q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gcd;

    fn prm(p: i64, q: i64) -> DpqParams {
        DpqParams::new(p, q).unwrap()
    }

    #[test]
    fn interval_basics() {
        let w = WedgeInterval::new(9, (0, EpsTag::JustBefore), (3, EpsTag::JustAfter));
        assert!(w.contains_unit(0));
        assert!(w.contains_unit(3));
        assert!(!w.contains_unit(4));
        assert!(!w.contains_unit(17));
        assert_eq!(w.units_inside(), vec![0, 1, 2, 3]);
        // Wrap-around interval.
        let w = WedgeInterval::new(9, (16, EpsTag::JustBefore), (1, EpsTag::JustAfter));
        assert_eq!(w.units_inside(), vec![0, 1, 16, 17]);
    }

    #[test]
    fn interval_containment_and_shift() {
        let outer = WedgeInterval::new(9, (3, EpsTag::JustAfter), (9, EpsTag::JustBefore));
        let inner = WedgeInterval::new(9, (4, EpsTag::JustBefore), (7, EpsTag::JustAfter));
        assert!(outer.contains_interval(&inner));
        assert!(!inner.contains_interval(&outer));
        // (3, After) does not contain (3, Before ...).
        let touching = WedgeInterval::new(9, (3, EpsTag::JustBefore), (5, EpsTag::Exact));
        assert!(!outer.contains_interval(&touching));
        let moved = inner.shifted(4);
        assert_eq!(moved.start(), (8, EpsTag::JustBefore));
        assert_eq!(moved.end(), (11, EpsTag::JustAfter));
    }

    #[test]
    fn complement_partitions_circle() {
        let a = WedgeInterval::new(5, (0, EpsTag::JustBefore), (1, EpsTag::JustAfter));
        let b = WedgeInterval::new(5, (5, EpsTag::JustBefore), (6, EpsTag::JustAfter));
        let comp = WedgeInterval::complement(&[a, b]);
        assert_eq!(comp.len(), 2);
        let mut all_units: Vec<i64> = comp.iter().flat_map(|w| w.units_inside()).collect();
        all_units.sort_unstable();
        assert_eq!(all_units, vec![2, 3, 4, 7, 8, 9]);
    }

    #[test]
    fn disk_intersect_lemma() {
        let half = Rational::new(1, 2);
        let z1 = DiskSpec::new(Axis::Z, 0, EpsTag::Exact, Rational::new(9, 25)).unwrap();
        let w1 = DiskSpec::new(Axis::W, 3, EpsTag::Exact, Rational::new(49, 100)).unwrap();
        // 0.36 + 0.49 < 1.
        assert_eq!(disk_intersect(&z1, &w1), DiskIntersection::NoIntersect);
        // Two full-radius z-disks at different centers share the w-axis.
        let zfull1 = DiskSpec::new(Axis::Z, 0, EpsTag::Exact, Rational::integer(1)).unwrap();
        let zfull2 = DiskSpec::new(Axis::Z, 4, EpsTag::Exact, Rational::integer(1)).unwrap();
        assert_eq!(disk_intersect(&zfull1, &zfull2), DiskIntersection::Axis);
        // Same-axis, sub-full radius: disjoint.
        let z2 = DiskSpec::new(Axis::Z, 4, EpsTag::Exact, half).unwrap();
        let z3 = DiskSpec::new(Axis::Z, 0, EpsTag::Exact, half).unwrap();
        assert_eq!(disk_intersect(&z2, &z3), DiskIntersection::NoIntersect);
        // Mixed with c² + c′² = 1 exactly: a point.
        let zc = DiskSpec::new(Axis::Z, 0, EpsTag::Exact, Rational::new(9, 25)).unwrap();
        let wc = DiskSpec::new(Axis::W, 1, EpsTag::Exact, Rational::new(16, 25)).unwrap();
        assert_eq!(disk_intersect(&zc, &wc), DiskIntersection::Point);
        // And a region beyond.
        let wd = DiskSpec::new(Axis::W, 1, EpsTag::Exact, Rational::new(17, 25)).unwrap();
        assert_eq!(disk_intersect(&zc, &wd), DiskIntersection::Region);
    }

    #[test]
    fn disk_trichotomy_matches_float_sampler() {
        // Distance between a z-disk and a w-disk sampled densely: the
        // trichotomy must agree outside a thin band around c² + c′² = 1.
        let cases = [
            (Rational::new(1, 4), Rational::new(1, 4)),
            (Rational::new(1, 2), Rational::new(1, 2)),
            (Rational::new(9, 25), Rational::new(16, 25)),
            (Rational::new(4, 5), Rational::new(3, 5)),
            (Rational::new(1, 10), Rational::new(1, 2)),
        ];
        for (r1, r2) in cases {
            let zd = DiskSpec::new(Axis::Z, 0, EpsTag::Exact, r1).unwrap();
            let wd = DiskSpec::new(Axis::W, 3, EpsTag::Exact, r2).unwrap();
            let verdict = disk_intersect(&zd, &wd);
            let (c1, c2) = (r1.to_f64().sqrt(), r2.to_f64().sqrt());
            let theta = 0.0f64;
            let gamma = 3.0 * std::f64::consts::PI / 7.0; // any fixed angles
            let mut min_d = f64::MAX;
            let n = 100;
            for i in 0..=n {
                let wmag = c1 * i as f64 / n as f64;
                for wang in 0..n {
                    let wa = wang as f64 * std::f64::consts::TAU / n as f64;
                    let zmag = (1.0f64 - wmag * wmag).sqrt();
                    let p1 = [
                        zmag * theta.cos(),
                        zmag * theta.sin(),
                        wmag * wa.cos(),
                        wmag * wa.sin(),
                    ];
                    // nearest point on the w-disk: z small, w on circle gamma
                    for j in 0..=n {
                        let zmag2 = c2 * j as f64 / n as f64;
                        let za = theta; // best case along same z angle
                        let wmag2 = (1.0f64 - zmag2 * zmag2).sqrt();
                        let p2 = [
                            zmag2 * za.cos(),
                            zmag2 * za.sin(),
                            wmag2 * gamma.cos(),
                            wmag2 * gamma.sin(),
                        ];
                        let d: f64 = (0..4).map(|k| (p1[k] - p2[k]).powi(2)).sum::<f64>().sqrt();
                        min_d = min_d.min(d);
                    }
                }
            }
            let gap = (r1 + r2 - Rational::integer(1)).to_f64();
            if gap < -1e-9 {
                assert!(
                    verdict == DiskIntersection::NoIntersect && min_d > 1e-4,
                    "radii {r1},{r2}: verdict {verdict:?}, sampled min {min_d}"
                );
            } else if gap > 1e-9 {
                assert!(
                    verdict == DiskIntersection::Region && min_d < 2e-2,
                    "radii {r1},{r2}: verdict {verdict:?}, sampled min {min_d}"
                );
            } else {
                assert_eq!(verdict, DiskIntersection::Point);
                assert!(min_d < 2e-2);
            }
        }
    }

    #[test]
    fn surface_spec_2_9() {
        let s = surface_spec(&prm(2, 9), 0).unwrap();
        assert_eq!(s.genus, 3);
        assert_eq!(s.euler_characteristic, -4);
        assert_eq!(s.w_disks.len(), 4);
        assert_eq!(s.z_disks.len(), 8);
        assert_eq!(s.z_wedges.len(), 4);
        assert_eq!(s.m_prime, vec![0, 1, 2, 3]);
        assert_eq!(s.m_double_prime.len(), 5);
    }

    #[test]
    fn z_wedges_hold_exactly_the_paired_components() {
        for (p, q) in [(2, 9), (1, 5), (3, 13), (4, 17)] {
            let s = surface_spec(&prm(p, q), 0).unwrap();
            let inv2 = crate::twobridge::mod_inverse(2, q).unwrap();
            for (wedge, pair) in s.z_wedges.iter().zip(&s.z_wedge_pairs) {
                let units = wedge.units_inside();
                assert_eq!(units.len(), 2, "a z-wedge must hold exactly 2 arcs");
                // Each unit is the z-passage of the component with w-label
                // p · (z-residue) mod q.
                let mut labels: Vec<i64> =
                    units.iter().map(|&u| (p * u).rem_euclid(q)).collect();
                labels.sort_unstable();
                let mut expect = vec![pair.0, pair.1];
                expect.sort_unstable();
                assert_eq!(labels, expect);
                let _ = inv2;
            }
        }
    }

    #[test]
    fn census_examples() {
        assert!(wedge_census(&prm(2, 9)).is_ok());
        assert!(matches!(wedge_census(&prm(2, 7)), Err(Error::RangeError(_))));
        let c = wedge_census(&prm(1, 5)).unwrap();
        // For 1/5 there are exactly 2p = 2 complementary z-wedges, each
        // holding (q − 2p)/p = 3 arcs.
        assert_eq!(c.complementary_z_arcs, vec![3, 3]);
        assert_eq!(c.complementary_w_points, vec![3, 3]);
    }

    #[test]
    fn census_sweep_q_99() {
        let mut q = 5;
        while q <= 99 {
            for p in 1..q {
                if gcd(p, q) != 1 || 4 * p >= q {
                    continue;
                }
                let c = wedge_census(&prm(p, q)).unwrap_or_else(|e| {
                    panic!("census failed for {p}/{q}: {e}");
                });
                assert!(c
                    .complementary_w_points
                    .iter()
                    .all(|&n| n >= 2 * p as usize));
                assert!(c.complementary_z_arcs.iter().all(|&n| n >= 2));
                assert!(c.phi_maps_into_complement);
            }
            q += 2;
        }
    }

    #[test]
    fn coannular_examples() {
        let r = coannular_slopes(2, 9).unwrap();
        let got: Vec<(i64, i8)> = r.entries.iter().map(|e| (e.component, e.slope)).collect();
        assert_eq!(got, vec![(0, -1), (3, 1), (4, -1), (17, 1)]);
        let r = coannular_slopes(1, 5).unwrap();
        let got: Vec<(i64, i8)> = r.entries.iter().map(|e| (e.component, e.slope)).collect();
        assert_eq!(got, vec![(0, -1), (1, 1), (2, -1), (9, 1)]);
        assert_eq!(r.count, 4);
        assert!(matches!(coannular_slopes(2, 7), Err(Error::RangeError(_))));
    }

    #[test]
    fn coannular_sweep_q_99() {
        let mut q = 5;
        while q <= 99 {
            for p in 1..q {
                if gcd(p, q) != 1 || 4 * p >= q {
                    continue;
                }
                let r = coannular_slopes(p, q).unwrap();
                assert_eq!(r.count, 4);
                assert!(r.entries.iter().all(|e| e.slope == 1 || e.slope == -1));
                let comps: Vec<i64> = r.entries.iter().map(|e| e.component).collect();
                assert_eq!(comps, vec![0, 2 * p - 1, 2 * p, 2 * q - 1]);
            }
            q += 2;
        }
    }
}
