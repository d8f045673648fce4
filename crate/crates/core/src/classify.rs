//! Classification of great circle links with at most five components.
//!
//! Two- and three-component links are linear algebra: the third plane of a
//! standardized triple is the graph of a 2×2 map whose determinant sign is
//! the handedness (+3 or −3). Four- and five-component links are classified
//! by projecting along a Hopf fibration that turns a chosen triple into
//! three points of the quotient sphere; the remaining components project to
//! circles, and the combinatorics of points, disks and crossings reduces —
//! through the slide moves encoded in [`reduce_two_circles`] — to a pure
//! Hopf link, an iterated torus sum, or the single five-component
//! hyperbolic class.
//!
//! Classes form: ±n Hopf links; torus-sum paths with alternating signs
//! (adjacent same-sign pieces fuse into one fibered piece); and HYP5.

use crate::error::Error;
use crate::geom::{det4, Mat4, Vec4};
use crate::hopf::{
    circle_intersections, pair_type, project, HopfBundle, PairType, ProjImage, SphereCircle,
};
use crate::link::{GCLink, GreatCircle};
use crate::quat::PureUnit;
use crate::Result;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Canonical class of a great circle link with ≤ 5 components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LinkClass {
    /// The ±n Hopf link (sign irrelevant for n ≤ 2 and normalized to +).
    Hopf { sign: i8, n: u8 },
    /// An iterated torus sum: a path of Hopf pieces with alternating signs,
    /// in normal form (lexicographically minimal orientation).
    TorusSum(Vec<(i8, u8)>),
    /// The unique hyperbolic five-component link (the dihedral cover of the
    /// figure-eight knot complement).
    Hyperbolic5,
}

impl LinkClass {
    pub fn hopf(sign: i8, n: u8) -> Self {
        // One- and two-component links have a single unoriented class.
        if n <= 2 {
            LinkClass::Hopf { sign: 1, n }
        } else {
            LinkClass::Hopf { sign, n }
        }
    }

    /// Torus-sum path in normal form. Panics if adjacent signs agree
    /// (callers fuse those first).
    pub fn torus_sum_path(path: Vec<(i8, u8)>) -> Self {
        assert!(path.len() >= 2);
        for w in path.windows(2) {
            assert_ne!(w[0].0, w[1].0, "adjacent torus-sum pieces must alternate signs");
        }
        let key = |node: &(i8, u8)| (u8::MAX - node.1, if node.0 > 0 { 0u8 } else { 1 });
        let fwd: Vec<_> = path.iter().map(key).collect();
        let rev: Vec<_> = path.iter().rev().map(key).collect();
        if rev < fwd {
            LinkClass::TorusSum(path.into_iter().rev().collect())
        } else {
            LinkClass::TorusSum(path)
        }
    }

    /// Total number of link components in this class.
    pub fn components(&self) -> usize {
        match self {
            LinkClass::Hopf { n, .. } => *n as usize,
            LinkClass::TorusSum(path) => {
                path.iter().map(|(_, n)| *n as usize).sum::<usize>() - 2 * (path.len() - 1)
            }
            LinkClass::Hyperbolic5 => 5,
        }
    }

    /// The mirror class: all signs flipped, HYP5 fixed.
    pub fn mirror(&self) -> Self {
        match self {
            LinkClass::Hopf { sign, n } => LinkClass::hopf(-sign, *n),
            LinkClass::TorusSum(path) => {
                LinkClass::torus_sum_path(path.iter().map(|(s, n)| (-s, *n)).collect())
            }
            LinkClass::Hyperbolic5 => LinkClass::Hyperbolic5,
        }
    }
}

impl std::fmt::Display for LinkClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinkClass::Hopf { sign, n } => {
                write!(f, "{}{}", if *sign >= 0 { "+" } else { "-" }, n)
            }
            LinkClass::TorusSum(path) => {
                write!(f, "T(")?;
                for (i, (s, n)) in path.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}{}", if *s >= 0 { "+" } else { "-" }, n)?;
                }
                write!(f, ")")
            }
            LinkClass::Hyperbolic5 => write!(f, "HYP5"),
        }
    }
}

// ---------------------------------------------------------------------------
// Triple handedness and standardization
// ---------------------------------------------------------------------------

/// Block data of a standardized triple: the linear map sending the first
/// two planes to span(e₁,e₂), span(e₃,e₄) with positive determinant, and
/// the 2×2 graph matrix of the third plane.
struct TripleFrame {
    /// Standardizing map (det > 0).
    map: Mat4,
    /// Graph matrix A of the third plane, {(u, Au)}.
    graph: [[f64; 2]; 2],
}

fn triple_frame(a: &GreatCircle, b: &GreatCircle, c: &GreatCircle) -> Result<TripleFrame> {
    let m0 = Mat4::from_cols([a.basis()[0], a.basis()[1], b.basis()[0], b.basis()[1]]);
    let mut m = m0
        .inverse()
        .ok_or(Error::NotTransverse { det: m0.det() })?;
    if m0.det() < 0.0 {
        // Compose with diag(1,1,1,−1): fixes both standard planes setwise
        // and restores positive orientation.
        for col in m.cols.iter_mut() {
            col[3] = -col[3];
        }
    }
    let c1 = m.apply(&c.basis()[0]);
    let c2 = m.apply(&c.basis()[1]);
    // Normalize columns so the graph-degeneracy threshold is scale-free.
    let n1 = crate::geom::norm4(&c1);
    let n2 = crate::geom::norm4(&c2);
    let c1 = crate::geom::scale4(&c1, 1.0 / n1);
    let c2 = crate::geom::scale4(&c2, 1.0 / n2);
    let top = [[c1[0], c2[0]], [c1[1], c2[1]]];
    let bot = [[c1[2], c2[2]], [c1[3], c2[3]]];
    let det_top = top[0][0] * top[1][1] - top[0][1] * top[1][0];
    if det_top.abs() < 1e-9 {
        return Err(Error::DegenerateTriple { det: det_top });
    }
    // A = bot · top⁻¹.
    let inv = [
        [top[1][1] / det_top, -top[0][1] / det_top],
        [-top[1][0] / det_top, top[0][0] / det_top],
    ];
    let graph = [
        [
            bot[0][0] * inv[0][0] + bot[0][1] * inv[1][0],
            bot[0][0] * inv[0][1] + bot[0][1] * inv[1][1],
        ],
        [
            bot[1][0] * inv[0][0] + bot[1][1] * inv[1][0],
            bot[1][0] * inv[0][1] + bot[1][1] * inv[1][1],
        ],
    ];
    Ok(TripleFrame { map: m, graph })
}

/// Handedness of a triple of components: +1 when the triple is a
/// right-handed (+3) Hopf link, −1 for the left-handed one.
///
/// The first two components are standardized (orientation-preservingly) to
/// span(e₁,e₂) and span(e₃,e₄); the third is then the graph of a 2×2 map A
/// and the answer is sign(det A). If the graph block is degenerate the
/// roles are rotated; a triple degenerate in all three rotations is an
/// error.
pub fn triple_handedness(link: &GCLink, idx: [usize; 3]) -> Result<i8> {
    let comps = link.components();
    for (a, b, c) in [
        (idx[0], idx[1], idx[2]),
        (idx[1], idx[2], idx[0]),
        (idx[2], idx[0], idx[1]),
    ] {
        match triple_frame(&comps[a], &comps[b], &comps[c]) {
            Ok(frame) => {
                let det =
                    frame.graph[0][0] * frame.graph[1][1] - frame.graph[0][1] * frame.graph[1][0];
                if det.abs() < 1e-12 {
                    continue;
                }
                return Ok(if det > 0.0 { 1 } else { -1 });
            }
            Err(Error::DegenerateTriple { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::DegenerateTriple { det: 0.0 })
}

/// Standardizes a triple into fibers of an i-bundle: the triple becomes
/// the fibers through 1, j and (1+j)/√2 of the right-handed (σ = +1) or
/// left-handed (σ = −1) i-bundle, and the whole link is carried along by
/// the same (orientation-preserving) linear map.
pub fn standardize_triple(
    link: &GCLink,
    idx: [usize; 3],
) -> Result<(GCLink, HopfBundle, i8)> {
    let comps = link.components();
    let frame = triple_frame(&comps[idx[0]], &comps[idx[1]], &comps[idx[2]])?;
    let a = frame.graph;
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if det.abs() < 1e-12 {
        return Err(Error::DegenerateTriple { det });
    }
    let sigma: i8 = if det > 0.0 { 1 } else { -1 };
    // Post-map diag(I, S·A⁻¹) sends graph(A) to graph(S), S = I or
    // diag(1,−1); its determinant is positive either way.
    let inv = [
        [a[1][1] / det, -a[0][1] / det],
        [-a[1][0] / det, a[0][0] / det],
    ];
    let s_inv = if sigma == 1 {
        inv
    } else {
        [[inv[0][0], inv[0][1]], [-inv[1][0], -inv[1][1]]]
    };
    let post = Mat4::from_cols([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, s_inv[0][0], s_inv[1][0]],
        [0.0, 0.0, s_inv[0][1], s_inv[1][1]],
    ]);
    let total = post.mul(&frame.map);
    let moved = link.transform(&total)?;
    let bundle = match sigma {
        1 => HopfBundle::right(PureUnit::i()),
        _ => HopfBundle::left(PureUnit::i()),
    };
    Ok((moved, bundle, sigma))
}

// ---------------------------------------------------------------------------
// Configuration analysis
// ---------------------------------------------------------------------------

/// Occupancy of the four bigon regions cut out by two crossing circles,
/// labeled by canonical-disk membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct BigonCounts {
    /// Inside both disks (the lens).
    both: usize,
    /// Inside circle 1 only.
    only1: usize,
    /// Inside circle 2 only.
    only2: usize,
    /// Outside both.
    neither: usize,
}

/// Clearance below which a point is considered to sit on a circle and the
/// configuration is retried with another triple.
const BOUNDARY_TOL: f64 = 1e-7;

fn side_of(circle: &SphereCircle, p: PureUnit) -> Result<bool> {
    let c = circle.clearance(p);
    if c.abs() < BOUNDARY_TOL {
        return Err(Error::IndeterminateConfiguration(
            "a point image lies on a projected circle".into(),
        ));
    }
    Ok(c < 0.0)
}

/// Class of a configuration with one separating circle among `total`
/// components: `inside`/`outside` count the point images on the two sides.
fn one_circle_class(sigma: i8, total: u8, inside: usize, outside: usize) -> LinkClass {
    debug_assert_eq!(inside + outside, total as usize - 1);
    let (a, b) = (inside.min(outside), inside.max(outside));
    if a == 0 {
        // Empty disk: the circle isotopes to a fiber.
        return LinkClass::hopf(sigma, total);
    }
    if a == 1 {
        // One point walled off: the point, the circle and the far core form
        // a concentric (opposite-handed) triple.
        return LinkClass::torus_sum_path(vec![(-sigma, 3), (sigma, b as u8 + 1)]);
    }
    // Points on both sides beyond one: a fibered piece on each side of a
    // concentric middle.
    LinkClass::torus_sum_path(vec![
        (sigma, a as u8 + 1),
        (-sigma, 3),
        (sigma, b as u8 + 1),
    ])
}

/// Class of a configuration with two disjoint circles: point counts in the
/// two end regions and the middle annulus.
fn two_disjoint_class(
    sigma: i8,
    total: u8,
    end1: usize,
    middle: usize,
    end2: usize,
) -> LinkClass {
    if end1 == 0 {
        // The circle bounding the empty end shrinks to a fiber inside it.
        return one_circle_class(sigma, total, end2, middle + 1);
    }
    if end2 == 0 {
        return one_circle_class(sigma, total, end1, middle + 1);
    }
    if middle == 0 {
        // Adjacent nested circles: a four-piece concentric stack between
        // two fibered sides.
        let (a, b) = (end1.min(end2) as u8, end1.max(end2) as u8);
        if a == 1 {
            return LinkClass::torus_sum_path(vec![(-sigma, 4), (sigma, b + 1)]);
        }
        return LinkClass::torus_sum_path(vec![(sigma, a + 1), (-sigma, 4), (sigma, b + 1)]);
    }
    // Points in all three regions: (1,1,1) for five components.
    LinkClass::torus_sum_path(vec![(-sigma, 3), (sigma, 3), (-sigma, 3)])
}

/// Class of a configuration with two circles crossing at two points.
///
/// The pair type names the opposite bigon pair the strands can slide
/// across: pull-apart pairs empty a both/neither bigon, nested pairs a
/// one-disk-only bigon. If the slideable pair has an empty bigon the
/// crossing is removed and the disjoint analysis takes over; otherwise the
/// configuration is terminal.
fn two_crossing_class(sigma: i8, counts: &BigonCounts, kind: PairType) -> Result<LinkClass> {
    let (slide_a, slide_b, keep_a, keep_b) = match kind {
        PairType::PullApart => (counts.both, counts.neither, counts.only1, counts.only2),
        PairType::Nested => (counts.only1, counts.only2, counts.both, counts.neither),
        PairType::Disjoint => unreachable!("crossing circles are never Disjoint"),
    };
    if slide_a == 0 || slide_b == 0 {
        // Collapse an empty slideable bigon; the surviving slideable bigon
        // becomes the middle region, the kept pair the ends.
        let middle = if slide_a == 0 { slide_b } else { slide_a };
        return Ok(two_disjoint_class(sigma, 5, keep_a, middle, keep_b));
    }
    // Both slideable bigons occupied: terminal.
    let elsewhere = keep_a + keep_b;
    match elsewhere {
        0 => Ok(LinkClass::torus_sum_path(vec![
            (sigma, 3),
            (-sigma, 3),
            (sigma, 3),
        ])),
        1 => Ok(LinkClass::Hyperbolic5),
        _ => Err(Error::IndeterminateConfiguration(format!(
            "unexpected crossing-circle occupancy {counts:?}"
        ))),
    }
}

/// Attempts to classify via one standardized triple. Errors bubble up as
/// "try the next triple".
fn classify_via_triple(link: &GCLink, idx: [usize; 3]) -> Result<LinkClass> {
    let n = link.len() as u8;
    let (moved, bundle, sigma) = standardize_triple(link, idx)?;
    let mut points: Vec<PureUnit> = Vec::new();
    let mut circles: Vec<SphereCircle> = Vec::new();
    for comp in moved.components() {
        match project(comp, &bundle) {
            ProjImage::Point(p) => points.push(p),
            ProjImage::Circle(c) => circles.push(c),
        }
    }
    if points.len() < 3 {
        return Err(Error::IndeterminateConfiguration(
            "standardized triple did not project to points".into(),
        ));
    }
    match circles.len() {
        0 => Ok(LinkClass::hopf(sigma, n)),
        1 => {
            let c = &circles[0];
            let mut inside = 0;
            let mut outside = 0;
            for p in &points {
                if side_of(c, *p)? {
                    inside += 1;
                } else {
                    outside += 1;
                }
            }
            Ok(one_circle_class(sigma, n, inside, outside))
        }
        2 => {
            let (c1, c2) = (&circles[0], &circles[1]);
            match circle_intersections(c1, c2)? {
                None => {
                    // Disjoint circles: nested iff one canonical disk holds
                    // the other's center deeper than its radius.
                    let nested_12 = c1.clearance(c2.center) < -c2.angular_radius;
                    let nested_21 = c2.clearance(c1.center) < -c1.angular_radius;
                    let mut in1 = 0;
                    let mut in2 = 0;
                    let mut in_neither = 0;
                    let mut in_both = 0;
                    for p in &points {
                        match (side_of(c1, *p)?, side_of(c2, *p)?) {
                            (true, true) => in_both += 1,
                            (true, false) => in1 += 1,
                            (false, true) => in2 += 1,
                            (false, false) => in_neither += 1,
                        }
                    }
                    if nested_12 {
                        // disk(c2) ⊂ disk(c1): ends = inside c2, outside c1.
                        Ok(two_disjoint_class(sigma, n, in_both, in1, in_neither))
                    } else if nested_21 {
                        Ok(two_disjoint_class(sigma, n, in_both, in2, in_neither))
                    } else {
                        // Side-by-side disks: middle = outside both.
                        Ok(two_disjoint_class(sigma, n, in1, in_neither, in2))
                    }
                }
                Some(_) => {
                    let kind = pair_type(c1, c2, &bundle)?;
                    let mut counts = BigonCounts { both: 0, only1: 0, only2: 0, neither: 0 };
                    for p in &points {
                        match (side_of(c1, *p)?, side_of(c2, *p)?) {
                            (true, true) => counts.both += 1,
                            (true, false) => counts.only1 += 1,
                            (false, true) => counts.only2 += 1,
                            (false, false) => counts.neither += 1,
                        }
                    }
                    two_crossing_class(sigma, &counts, kind)
                }
            }
        }
        _ => Err(Error::IndeterminateConfiguration(format!(
            "{} circle images for a {n}-component link",
            circles.len()
        ))),
    }
}

/// Classifies a great circle link with 1..=5 components.
///
/// For four and five components every triple is tried until one yields a
/// decidable projected configuration; links where no triple decides are
/// reported as indeterminate rather than guessed.
pub fn classify(link: &GCLink) -> Result<LinkClass> {
    match link.len() {
        0 => Err(Error::UnsupportedSize(0)),
        1 => Ok(LinkClass::hopf(1, 1)),
        2 => Ok(LinkClass::hopf(1, 2)),
        3 => Ok(LinkClass::hopf(triple_handedness(link, [0, 1, 2])?, 3)),
        n @ (4 | 5) => {
            let mut last_err = None;
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        match classify_via_triple(link, [i, j, k]) {
                            Ok(class) => return Ok(class),
                            Err(e) => last_err = Some(e),
                        }
                    }
                }
            }
            Err(Error::IndeterminateConfiguration(format!(
                "no decidable triple: {}",
                last_err.map(|e| e.to_string()).unwrap_or_default()
            )))
        }
        n => Err(Error::UnsupportedSize(n)),
    }
}

/// Evidence trail of a classification: the triple used, its handedness,
/// and the projected configuration of the standardized link.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyEvidence {
    pub triple: Option<[usize; 3]>,
    pub handedness: Option<i8>,
    pub configuration: Option<crate::hopf::Configuration>,
}

/// [`classify`] plus the evidence of the decision, for reporting.
pub fn classify_with_evidence(link: &GCLink) -> Result<(LinkClass, ClassifyEvidence)> {
    let n = link.len();
    if !(4..=5).contains(&n) {
        let class = classify(link)?;
        let handedness = if n == 3 {
            Some(triple_handedness(link, [0, 1, 2])?)
        } else {
            None
        };
        return Ok((
            class,
            ClassifyEvidence { triple: None, handedness, configuration: None },
        ));
    }
    let mut last_err = None;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                match classify_via_triple(link, [i, j, k]) {
                    Ok(class) => {
                        let (moved, bundle, sigma) = standardize_triple(link, [i, j, k])?;
                        let fibers: Vec<usize> = moved
                            .components()
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| {
                                matches!(project(c, &bundle), ProjImage::Point(_))
                            })
                            .map(|(idx, _)| idx)
                            .collect();
                        let configuration =
                            crate::hopf::configuration(&moved, &bundle, &fibers).ok();
                        return Ok((
                            class,
                            ClassifyEvidence {
                                triple: Some([i, j, k]),
                                handedness: Some(sigma),
                                configuration,
                            },
                        ));
                    }
                    Err(e) => last_err = Some(e),
                }
            }
        }
    }
    Err(Error::IndeterminateConfiguration(format!(
        "no decidable triple: {}",
        last_err.map(|e| e.to_string()).unwrap_or_default()
    )))
}

/// Classifies via every decidable triple and checks they agree; used by
/// audits and tests.
pub fn classify_all_triples(link: &GCLink) -> Result<LinkClass> {
    let n = link.len();
    if !(4..=5).contains(&n) {
        return classify(link);
    }
    let mut found: Option<LinkClass> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if let Ok(class) = classify_via_triple(link, [i, j, k]) {
                    if let Some(prev) = &found {
                        if *prev != class {
                            return Err(Error::IndeterminateConfiguration(format!(
                                "triples disagree: {prev} vs {class}"
                            )));
                        }
                    } else {
                        found = Some(class);
                    }
                }
            }
        }
    }
    found.ok_or_else(|| Error::IndeterminateConfiguration("no decidable triple".into()))
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

/// Result of a randomized classification census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCensus {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Classes and their sample counts, sorted by descending count then
    /// by class.
    pub classes: Vec<(LinkClass, usize)>,
    /// Samples where no triple decided (tracked, never guessed).
    pub indeterminate: usize,
}

impl ClassCensus {
    pub fn distinct_classes(&self) -> usize {
        self.classes.len()
    }
}

/// A random great circle link: n orthonormalized Gaussian 4×2 frames,
/// resampled until pairwise transverse. The distribution is
/// rotation-invariant, hence unbiased over the Grassmannian.
pub fn random_link(n: usize, rng: &mut ChaCha8Rng) -> GCLink {
    let gauss = |rng: &mut ChaCha8Rng| -> f64 {
        let u1: f64 = rng.random::<f64>().max(1e-300);
        let u2: f64 = rng.random();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    };
    loop {
        let comps: Option<Vec<GreatCircle>> = (0..n)
            .map(|_| {
                let v1: Vec4 = std::array::from_fn(|_| gauss(rng));
                let v2: Vec4 = std::array::from_fn(|_| gauss(rng));
                GreatCircle::from_spanning(v1, v2).ok()
            })
            .collect();
        if let Some(comps) = comps {
            if let Ok(link) = GCLink::new(comps) {
                return link;
            }
        }
    }
}

/// Rejection-samples `samples` random n-component links and classifies
/// each. Deterministic for a fixed seed: the RNG stream of sample i is
/// stream i of a ChaCha8 generator seeded with `seed`, independent of how
/// samples are scheduled across threads.
pub fn census(n: usize, samples: usize, seed: u64) -> Result<ClassCensus> {
    if !(2..=5).contains(&n) {
        return Err(Error::UnsupportedSize(n));
    }
    if samples == 0 {
        return Err(Error::InvalidInput("census needs at least one sample".into()));
    }
    let results: Vec<Option<LinkClass>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64 + 1);
            let link = random_link(n, &mut rng);
            classify(&link).ok()
        })
        .collect();
    let mut counts: std::collections::BTreeMap<LinkClass, usize> = Default::default();
    let mut indeterminate = 0;
    for r in results {
        match r {
            Some(class) => *counts.entry(class).or_insert(0) += 1,
            None => indeterminate += 1,
        }
    }
    let mut classes: Vec<(LinkClass, usize)> = counts.into_iter().collect();
    classes.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(ClassCensus { n, samples, seed, classes, indeterminate })
}

/// Linking-sign product of a triple: an independent oracle for
/// [`triple_handedness`] (flipping any component's orientation flips two
/// pairwise signs, so the product is orientation-free).
pub fn triple_sign_product(link: &GCLink, idx: [usize; 3]) -> Result<i8> {
    let c = link.components();
    let l01 = crate::link::linking_number(&c[idx[0]], &c[idx[1]])?;
    let l02 = crate::link::linking_number(&c[idx[0]], &c[idx[2]])?;
    let l12 = crate::link::linking_number(&c[idx[1]], &c[idx[2]])?;
    Ok(l01 * l02 * l12)
}

/// Random special-orthogonal matrix, for invariance tests.
pub fn random_rotation(rng: &mut ChaCha8Rng) -> Mat4 {
    let gauss = |rng: &mut ChaCha8Rng| -> f64 {
        let u1: f64 = rng.random::<f64>().max(1e-300);
        let u2: f64 = rng.random();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    };
    loop {
        let mut cols: [Vec4; 4] = std::array::from_fn(|_| std::array::from_fn(|_| gauss(rng)));
        // Gram-Schmidt.
        let mut ok = true;
        for i in 0..4 {
            for j in 0..i {
                let d = crate::geom::dot4(&cols[i], &cols[j]);
                cols[i] = crate::geom::sub4(&cols[i], &crate::geom::scale4(&cols[j], d));
            }
            let n = crate::geom::norm4(&cols[i]);
            if n < 1e-6 {
                ok = false;
                break;
            }
            cols[i] = crate::geom::scale4(&cols[i], 1.0 / n);
        }
        if !ok {
            continue;
        }
        if det4(&cols[0], &cols[1], &cols[2], &cols[3]) < 0.0 {
            cols[3] = crate::geom::scale4(&cols[3], -1.0);
        }
        return Mat4::from_cols(cols);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::{hopf_link, torus_sum};

    #[test]
    fn class_display_and_normal_form() {
        assert_eq!(LinkClass::hopf(1, 5).to_string(), "+5");
        assert_eq!(LinkClass::hopf(-1, 3).to_string(), "-3");
        assert_eq!(
            LinkClass::torus_sum_path(vec![(-1, 3), (1, 4)]).to_string(),
            "T(+4,-3)"
        );
        assert_eq!(
            LinkClass::torus_sum_path(vec![(1, 3), (-1, 4)]).to_string(),
            "T(-4,+3)"
        );
        assert_eq!(
            LinkClass::torus_sum_path(vec![(-1, 3), (1, 3)]).to_string(),
            "T(+3,-3)"
        );
        assert_eq!(
            LinkClass::torus_sum_path(vec![(1, 3), (-1, 3), (1, 3)]).to_string(),
            "T(+3,-3,+3)"
        );
        // Normal form is orientation-free.
        assert_eq!(
            LinkClass::torus_sum_path(vec![(-1, 3), (1, 4)]),
            LinkClass::torus_sum_path(vec![(1, 4), (-1, 3)])
        );
        // Component counts.
        assert_eq!(LinkClass::torus_sum_path(vec![(1, 4), (-1, 3)]).components(), 5);
        assert_eq!(
            LinkClass::torus_sum_path(vec![(1, 3), (-1, 3), (1, 3)]).components(),
            5
        );
    }

    #[test]
    fn mirror_classes() {
        assert_eq!(LinkClass::hopf(1, 4).mirror(), LinkClass::hopf(-1, 4));
        assert_eq!(LinkClass::Hyperbolic5.mirror(), LinkClass::Hyperbolic5);
        // T(+3,-3) is its own mirror.
        let t = LinkClass::torus_sum_path(vec![(1, 3), (-1, 3)]);
        assert_eq!(t.mirror(), t);
    }

    #[test]
    fn triple_handedness_standard_fibers() {
        let plus = hopf_link(1, 3);
        assert_eq!(triple_handedness(&plus, [0, 1, 2]).unwrap(), 1);
        let minus = hopf_link(-1, 3);
        assert_eq!(triple_handedness(&minus, [0, 1, 2]).unwrap(), -1);
        // Mirroring flips the sign.
        assert_eq!(triple_handedness(&plus.mirror(), [0, 1, 2]).unwrap(), -1);
    }

    #[test]
    fn triple_handedness_all_triples_of_hopf5() {
        let link = hopf_link(1, 5);
        for i in 0..5 {
            for j in (i + 1)..5 {
                for k in (j + 1)..5 {
                    assert_eq!(triple_handedness(&link, [i, j, k]).unwrap(), 1);
                }
            }
        }
    }

    #[test]
    fn triple_handedness_matches_linking_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(211);
        for _ in 0..300 {
            let link = random_link(3, &mut rng);
            let h = triple_handedness(&link, [0, 1, 2]).unwrap();
            let p = triple_sign_product(&link, [0, 1, 2]).unwrap();
            assert_eq!(h, p, "handedness and linking product disagree");
        }
    }

    #[test]
    fn triple_handedness_role_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(223);
        for _ in 0..100 {
            let link = random_link(3, &mut rng);
            let h0 = triple_handedness(&link, [0, 1, 2]).unwrap();
            let h1 = triple_handedness(&link, [1, 2, 0]).unwrap();
            let h2 = triple_handedness(&link, [2, 0, 1]).unwrap();
            assert_eq!(h0, h1);
            assert_eq!(h0, h2);
        }
    }

    #[test]
    fn classify_small_sizes() {
        assert_eq!(
            classify(&hopf_link(1, 1)).unwrap(),
            LinkClass::hopf(1, 1)
        );
        assert_eq!(
            classify(&hopf_link(-1, 2)).unwrap(),
            LinkClass::hopf(1, 2)
        );
        assert_eq!(classify(&hopf_link(1, 3)).unwrap(), LinkClass::hopf(1, 3));
        assert_eq!(
            classify(&hopf_link(-1, 3)).unwrap(),
            LinkClass::hopf(-1, 3)
        );
    }

    #[test]
    fn classify_pure_hopf_4_and_5() {
        for n in [4usize, 5] {
            for sign in [1i8, -1] {
                let link = hopf_link(sign, n);
                assert_eq!(
                    classify(&link).unwrap(),
                    LinkClass::hopf(sign, n as u8),
                    "{sign:+} Hopf link with {n} components"
                );
            }
        }
    }

    #[test]
    fn classify_torus_sum_of_plus3_minus3() {
        let s = torus_sum(&hopf_link(1, 3), 0, &hopf_link(-1, 3), 0).unwrap();
        assert_eq!(
            classify(&s).unwrap(),
            LinkClass::torus_sum_path(vec![(1, 3), (-1, 3)])
        );
    }

    #[test]
    fn classify_torus_sum_of_2_2_is_hopf() {
        let s = torus_sum(&hopf_link(1, 2), 0, &hopf_link(1, 2), 1).unwrap();
        assert_eq!(classify(&s).unwrap(), LinkClass::hopf(1, 2));
    }

    #[test]
    fn classify_five_component_sums() {
        // T(+4,−3) two ways.
        let s = torus_sum(&hopf_link(1, 4), 0, &hopf_link(-1, 3), 0).unwrap();
        assert_eq!(
            classify(&s).unwrap(),
            LinkClass::torus_sum_path(vec![(1, 4), (-1, 3)])
        );
        let s = torus_sum(&hopf_link(-1, 4), 2, &hopf_link(1, 3), 1).unwrap();
        assert_eq!(
            classify(&s).unwrap(),
            LinkClass::torus_sum_path(vec![(-1, 4), (1, 3)])
        );
    }

    #[test]
    fn classify_iterated_sums_merge_correctly() {
        // Base: T(+3,−3); components 0..1 belong to the +3 piece, 2..3 to
        // the −3 piece.
        let base = || torus_sum(&hopf_link(1, 3), 0, &hopf_link(-1, 3), 0).unwrap();

        // Attach −3 at a +3-piece component: path −3 — +3 — −3.
        let s = torus_sum(&base(), 0, &hopf_link(-1, 3), 0).unwrap();
        assert_eq!(
            classify(&s).unwrap(),
            LinkClass::torus_sum_path(vec![(-1, 3), (1, 3), (-1, 3)])
        );
        // Attach −3 at a −3-piece component: pieces fuse into −4.
        let s = torus_sum(&base(), 2, &hopf_link(-1, 3), 0).unwrap();
        assert_eq!(
            classify(&s).unwrap(),
            LinkClass::torus_sum_path(vec![(-1, 4), (1, 3)])
        );
        // Attach +3 at a −3-piece component: path +3 — −3 — +3.
        let s = torus_sum(&base(), 2, &hopf_link(1, 3), 0).unwrap();
        assert_eq!(
            classify(&s).unwrap(),
            LinkClass::torus_sum_path(vec![(1, 3), (-1, 3), (1, 3)])
        );
        // Attach +3 at a +3-piece component: fuses into +4.
        let s = torus_sum(&base(), 1, &hopf_link(1, 3), 0).unwrap();
        assert_eq!(
            classify(&s).unwrap(),
            LinkClass::torus_sum_path(vec![(1, 4), (-1, 3)])
        );
    }

    #[test]
    fn classify_d25_is_hyperbolic() {
        let link = crate::dpq::build(&crate::dpq::DpqParams::new(2, 5).unwrap());
        assert_eq!(classify(&link).unwrap(), LinkClass::Hyperbolic5);
    }

    #[test]
    fn d25_configuration_shape() {
        // The projected configuration behind the hyperbolic verdict: three
        // points and two crossing circles, each circle separating the
        // points, with three of the four regions occupied.
        let link = crate::dpq::build(&crate::dpq::DpqParams::new(2, 5).unwrap());
        let (class, evidence) = classify_with_evidence(&link).unwrap();
        assert_eq!(class, LinkClass::Hyperbolic5);
        let cfg = evidence.configuration.expect("configuration recorded");
        assert_eq!(cfg.points.len(), 3);
        assert_eq!(cfg.circles.len(), 2);
        let (c1, c2) = (&cfg.circles[0].circle, &cfg.circles[1].circle);
        assert!(crate::hopf::circle_intersections(c1, c2)
            .unwrap()
            .is_some());
        let mut region_counts = [0usize; 4];
        for p in &cfg.points {
            let in1 = c1.contains(p.position);
            let in2 = c2.contains(p.position);
            region_counts[(in1 as usize) * 2 + in2 as usize] += 1;
        }
        let occupied = region_counts.iter().filter(|&&c| c > 0).count();
        assert_eq!(occupied, 3, "three occupied regions, got {region_counts:?}");
        for c in [c1, c2] {
            let inside = cfg.points.iter().filter(|p| c.contains(p.position)).count();
            assert!(
                inside > 0 && inside < 3,
                "each circle separates the three points"
            );
        }
    }

    #[test]
    fn classify_invariant_under_rotation_and_reordering() {
        let mut rng = ChaCha8Rng::seed_from_u64(227);
        for trial in 0..40 {
            let n = 4 + (trial % 2);
            let link = random_link(n, &mut rng);
            let class = match classify(&link) {
                Ok(c) => c,
                Err(_) => continue,
            };
            // Random rotation.
            let rot = random_rotation(&mut rng);
            let moved = link.transform(&rot).unwrap();
            assert_eq!(classify(&moved).unwrap(), class, "rotation changed the class");
            // Reorder components.
            let mut comps = link.components().to_vec();
            comps.reverse();
            let reordered = GCLink::new(comps).unwrap();
            assert_eq!(
                classify(&reordered).unwrap(),
                class,
                "reordering changed the class"
            );
            // Reverse one component's orientation.
            let mut comps = link.components().to_vec();
            comps[0] = comps[0].reversed();
            let flipped = GCLink::new(comps).unwrap();
            assert_eq!(
                classify(&flipped).unwrap(),
                class,
                "orientation reversal changed the class"
            );
        }
    }

    #[test]
    fn classify_mirror_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(229);
        for trial in 0..40 {
            let n = 4 + (trial % 2);
            let link = random_link(n, &mut rng);
            if let (Ok(c), Ok(m)) = (classify(&link), classify(&link.mirror())) {
                assert_eq!(m, c.mirror(), "mirror class mismatch");
            }
        }
    }

    #[test]
    fn classify_all_triples_agree_on_random_links() {
        let mut rng = ChaCha8Rng::seed_from_u64(233);
        for trial in 0..60 {
            let n = 4 + (trial % 2);
            let link = random_link(n, &mut rng);
            if let Ok(c) = classify(&link) {
                assert_eq!(classify_all_triples(&link).unwrap(), c);
            }
        }
    }

    #[test]
    fn classify_unsupported_sizes() {
        assert!(matches!(
            classify(&GCLink::empty()),
            Err(Error::UnsupportedSize(0))
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(239);
        let link = random_link(6, &mut rng);
        assert!(matches!(classify(&link), Err(Error::UnsupportedSize(6))));
    }

    #[test]
    fn census_counts_small() {
        let c2 = census(2, 100, 7).unwrap();
        assert_eq!(c2.distinct_classes(), 1);
        assert_eq!(c2.indeterminate, 0);
        let c3 = census(3, 400, 7).unwrap();
        assert_eq!(c3.distinct_classes(), 2);
    }

    #[test]
    fn census_deterministic() {
        let a = census(4, 300, 42).unwrap();
        let b = census(4, 300, 42).unwrap();
        assert_eq!(a, b);
    }
}
