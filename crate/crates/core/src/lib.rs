//! Great circle links in the three-sphere.
//!
//! A great circle link is a link in S³ whose components are all geodesics,
//! i.e. intersections of 2-planes through the origin in ℝ⁴ with the unit
//! sphere. This crate makes the structure of such links computable:
//!
//! - [`quat`]: quaternion arithmetic, the sphere of pure unit quaternions,
//!   and the left/right fiber structure of geodesics.
//! - [`link`]: great circles as oriented 2-planes, transversality, linking
//!   numbers, straightening of round-circle links, and torus sums.
//! - [`hopf`]: Hopf bundles as fiber quotients and the projection of
//!   geodesics to circles on the quotient 2-sphere.
//! - [`classify`]: the classification of great circle links with at most
//!   five components, plus a randomized census harness.
//! - [`dpq`]: the dihedral link family D_{p/q} with exact axis schedules,
//!   standard planar diagrams, Gauss codes, and SVG rendering.
//! - [`wedge`]: z/w-disk and wedge combinatorics for the closed surfaces
//!   in D_{p/q} complements, with coannular boundary slopes.
//! - [`twobridge`]: exact arithmetic for two-bridge knots K_{p/q}:
//!   equivalence, fiberedness, slope lifting, and a virtually-Haken
//!   Dehn-filling certifier.
//!
//! All geometry is plain `f64` except where a module states otherwise;
//! [`dpq`] and [`wedge`] keep their bookkeeping in exact integer multiples
//! of π/q, and [`twobridge`] is pure integer arithmetic.

pub mod classify;
pub mod dpq;
pub mod error;
pub mod exact;
pub mod geom;
pub mod hopf;
pub mod jsonio;
pub mod link;
pub mod quat;
pub mod twobridge;
pub mod wedge;

pub use classify::{ClassCensus, LinkClass};
pub use error::Error;
pub use hopf::{Configuration, Handedness, HopfBundle, PairType, ProjImage, SphereCircle};
pub use link::{GCLink, GreatCircle, RoundCircle};
pub use quat::{FiberAxes, PureUnit, Quaternion};
pub use twobridge::{Certificate, CertStatus, Fraction, MultipleSlope, Slope};
pub use wedge::{CoannularReport, DiskSpec, SurfaceSpec};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
