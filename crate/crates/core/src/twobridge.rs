//! Exact arithmetic for two-bridge (rational) knots K_{p/q}.
//!
//! The two-fold branched cover of S³ over K_{p/q} is the lens space
//! L_{p/q}, so two knots agree exactly when q = q′ and p^{±1} ≡ ±p′ mod q.
//! Fiberedness is read off continued fractions with all entries ±2, and the
//! q-fold dihedral cover of the knot complement is the great circle link
//! complement S³ − D_{p/q}, which is what makes the Dehn-filling certificate
//! below possible: fillings of slope 2m/l lift to the multiple slope
//! {m/l, …, m/l}, and distance ≥ 2 from the four coannular slopes ±1 keeps
//! the closed surface of [`crate::wedge`] incompressible after filling.
//!
//! The certificate is always "modulo Λ": the finite excluded slope set of
//! Wu's theorem is not computable from anything we have, so a successful
//! verdict records that caveat explicitly instead of silently ignoring it.

use crate::error::Error;
use crate::exact::{gcd, Rational};
use crate::wedge::{coannular_slopes, CoannularReport};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// A knot fraction p/q with gcd(p,q) = 1 and q odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub p: i64,
    pub q: i64,
}

impl Fraction {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q <= 0 {
            return Err(Error::InvalidFraction(format!("q = {q} must be positive")));
        }
        if q % 2 == 0 {
            return Err(Error::InvalidFraction(format!("q = {q} must be odd")));
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidFraction(format!(
                "gcd({p}, {q}) = {} != 1",
                gcd(p, q)
            )));
        }
        Ok(Fraction { p, q })
    }

    /// The four residues {p, −p, p⁻¹, −p⁻¹} mod q, as canonical
    /// representatives in (0, q). Fewer than four when they coincide.
    pub fn equivalent_residues(&self) -> Vec<i64> {
        let q = self.q;
        let p = self.p.rem_euclid(q);
        let pinv = mod_inverse(p, q).expect("p is a unit mod q");
        let mut set: Vec<i64> = vec![
            p,
            (q - p).rem_euclid(q),
            pinv,
            (q - pinv).rem_euclid(q),
        ];
        set.sort_unstable();
        set.dedup();
        set
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Modular inverse of a mod m (m ≥ 1), when gcd(a, m) = 1.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        None
    } else {
        Some(old_s.rem_euclid(m))
    }
}

/// Two-bridge knot equivalence: q = q′ and p′ ∈ {±p^{±1}} mod q.
pub fn equivalent(f1: &Fraction, f2: &Fraction) -> bool {
    f1.q == f2.q && f1.equivalent_residues().contains(&f2.p.rem_euclid(f1.q))
}

/// Continued fraction expansion p/q = 1/(a₁ + 1/(a₂ + …)) with every aᵢ a
/// nonzero even integer, or `None` when the expansion does not exist.
///
/// Each step writes the current value v as 1/(a + r) with a the nearest
/// even integer to 1/v and |r| < 1; the step fails exactly when 1/v is an
/// odd integer (r would be ±1). The remainder numerator strictly decreases,
/// so the recursion terminates.
pub fn even_cf(f: &Fraction) -> Option<Vec<i64>> {
    assert!(
        0 < f.p && f.p < f.q,
        "even_cf requires 0 < p < q, got {f}"
    );
    let mut terms = Vec::new();
    // value num/den in (−1, 1), nonzero
    let mut num = f.p;
    let mut den = f.q;
    loop {
        // 1/v = den/num; nearest even integer.
        let a = nearest_even(den, num)?;
        terms.push(a);
        let r_num = den - a * num; // remainder numerator over num
        debug_assert!(r_num.abs() < num.abs());
        if r_num == 0 {
            return Some(terms);
        }
        den = num;
        num = r_num;
    }
}

/// Nearest even integer to den/num; None when den/num is an odd integer
/// (the tie case, distance exactly 1 to both even neighbors).
fn nearest_even(den: i64, num: i64) -> Option<i64> {
    debug_assert!(num != 0);
    // Among even integers e, minimize |den - e*num| = |num| * |den/num - e|.
    let v = den as f64 / num as f64;
    let mut best: Option<(i64, i64)> = None;
    let base = (v / 2.0).floor() as i64;
    for k in [base - 1, base, base + 1, base + 2] {
        let e = 2 * k;
        let err = (den - e * num).abs();
        if best.is_none_or(|(_, b)| err < b) {
            best = Some((e, err));
        }
    }
    let (e, err) = best.unwrap();
    if err == num.abs() {
        // den/num is exactly an odd integer: no even integer within 1.
        return None;
    }
    debug_assert!(err < num.abs());
    Some(e)
}

/// Evaluates 1/(a₁ + 1/(a₂ + … )) exactly. Test oracle for [`even_cf`].
pub fn eval_cf(terms: &[i64]) -> Rational {
    let mut r = Rational::integer(0);
    for &a in terms.iter().rev() {
        r = (Rational::integer(a) + r).recip();
    }
    r
}

/// Gabai's criterion: K_{p/q} is fibered iff some representative of the
/// knot's equivalence class admits a continued fraction with every entry
/// in {+2, −2}. Decided by depth-first search over the two continuations
/// with memoization on the intermediate fraction.
pub fn fibered(f: &Fraction) -> bool {
    f.equivalent_residues()
        .into_iter()
        .filter(|&p| 0 < p && p < f.q)
        .any(|p| {
            let mut memo = HashSet::new();
            expand_pm2(f.q, p, &mut memo)
        })
}

/// Can num/den (|num| < den arrangement: value num/den ∈ (−1,1)∖{0}) be
/// written 1/(a + r) with a = ±2 and r admissible, recursively?
fn expand_pm2(den: i64, num: i64, failed: &mut HashSet<(i64, i64)>) -> bool {
    if failed.contains(&(den, num)) {
        return false;
    }
    for a in [2i64, -2] {
        let r_num = den - a * num;
        if r_num == 0 {
            return true;
        }
        if r_num.abs() < num.abs() && expand_pm2(num, r_num, failed) {
            return true;
        }
    }
    failed.insert((den, num));
    false
}

/// A slope m/l on a torus boundary component; 1/0 is the trivial filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    pub m: i64,
    pub l: i64,
}

impl Slope {
    pub fn new(m: i64, l: i64) -> Result<Self> {
        if m == 0 && l == 0 {
            return Err(Error::InvalidFraction("slope 0/0".into()));
        }
        if gcd(m, l) != 1 {
            return Err(Error::InvalidFraction(format!(
                "slope {m}/{l} is not reduced"
            )));
        }
        Ok(Slope { m, l })
    }

    pub const TRIVIAL: Slope = Slope { m: 1, l: 0 };
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.m, self.l)
    }
}

/// Minimal geometric intersection number Δ(r, s) = |m_r·l_s − l_r·m_s|.
pub fn delta(r: &Slope, s: &Slope) -> u64 {
    (r.m * s.l - r.l * s.m).unsigned_abs()
}

/// A uniform multiple slope: one copy of the same slope on each of the q
/// boundary tori of the dihedral cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleSlope {
    pub slope: Slope,
    pub copies: usize,
}

impl MultipleSlope {
    pub fn entries(&self) -> Vec<Slope> {
        vec![self.slope; self.copies]
    }
}

/// Lifts a filling of the knot complement to the dihedral cover: a slope
/// 2m/l lifts to the multiple slope {m/l, …, m/l} (q copies). Odd
/// numerators do not lift.
pub fn lift_filling(f: &Fraction, s: &Slope) -> Result<MultipleSlope> {
    if s.m.rem_euclid(2) != 0 {
        return Err(Error::OddNumerator);
    }
    let halved = Slope::new(s.m / 2, s.l)?;
    Ok(MultipleSlope {
        slope: halved,
        copies: f.q as usize,
    })
}

/// The finitely many fillings of K_{p/q} that yield reducible manifolds:
/// ±2q when p ≡ ±1 (mod q), and 0 when p ≡ 0 (mod q).
pub fn reducible_fillings(f: &Fraction) -> Vec<Slope> {
    let mut out = Vec::new();
    let r = f.p.rem_euclid(f.q);
    if r == 1 || r == f.q - 1 {
        out.push(Slope { m: 2 * f.q, l: 1 });
        out.push(Slope { m: -2 * f.q, l: 1 });
    }
    if r == 0 {
        out.push(Slope { m: 0, l: 1 });
    }
    out
}

/// Why a certificate was refused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotCertifiedReason {
    /// No equivalent representative p′/q with 1 < p′ and p′/q < 1/4.
    Range,
    /// The filling slope has odd numerator and does not lift.
    OddNumerator,
    /// The lifted slope is at distance < 2 from a coannular slope.
    Distance,
    /// The filling is one of the finitely many reducible fillings.
    Reducible,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "reason")]
pub enum CertStatus {
    CertifiedModuloLambda,
    NotCertified(NotCertifiedReason),
}

/// Evidence trail of a certificate run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertEvidence {
    /// The representative p′/q < 1/4 actually used (when one exists).
    pub representative: Option<Fraction>,
    pub lifted_slope: Option<Slope>,
    /// Δ(lifted, +1/1) and Δ(lifted, −1/1).
    pub delta_plus: Option<u64>,
    pub delta_minus: Option<u64>,
    pub coannular: Option<CoannularReport>,
    pub reducible_fillings: Vec<Slope>,
}

/// Verdict of the virtually-Haken Dehn-filling certifier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub input: Fraction,
    pub filling: Slope,
    #[serde(flatten)]
    pub status: CertStatus,
    pub evidence: CertEvidence,
    /// Always true on success: finitely many slopes in the unknown set Λ
    /// are excluded by the underlying theorem but cannot be identified.
    pub lambda_caveat: bool,
}

/// The caveat text attached to every successful certificate.
pub const LAMBDA_CAVEAT: &str = "certified modulo a finite excluded slope set \
Lambda that the underlying theorem guarantees but does not identify";

/// Certifies that filling K_{p/q} along `s` yields a virtually Haken
/// manifold, modulo the finite excluded set Λ.
///
/// Steps: find an equivalent representative p′/q with 1 < p′ and
/// p′/q < 1/4 (p′ = 1 would make the cover a Hopf link complement, which is
/// Seifert fibered and outside the theorem); lift the slope (numerator must
/// be even); require distance ≥ 2 from both coannular slopes ±1; require
/// the filling to avoid the reducible list.
pub fn certify_vhaken(f: &Fraction, s: &Slope) -> Certificate {
    let reducible = reducible_fillings(f);
    let mut evidence = CertEvidence {
        representative: None,
        lifted_slope: None,
        delta_plus: None,
        delta_minus: None,
        coannular: None,
        reducible_fillings: reducible.clone(),
    };
    let rep = f
        .equivalent_residues()
        .into_iter()
        .filter(|&p| p > 1 && 4 * p < f.q)
        .min();
    let rep = match rep {
        Some(p) => Fraction { p, q: f.q },
        None => {
            return Certificate {
                input: *f,
                filling: *s,
                status: CertStatus::NotCertified(NotCertifiedReason::Range),
                evidence,
                lambda_caveat: false,
            }
        }
    };
    evidence.representative = Some(rep);
    evidence.coannular = coannular_slopes(rep.p, rep.q).ok();

    let lifted = match lift_filling(f, s) {
        Ok(ms) => ms,
        Err(_) => {
            return Certificate {
                input: *f,
                filling: *s,
                status: CertStatus::NotCertified(NotCertifiedReason::OddNumerator),
                evidence,
                lambda_caveat: false,
            }
        }
    };
    evidence.lifted_slope = Some(lifted.slope);

    let plus = Slope { m: 1, l: 1 };
    let minus = Slope { m: -1, l: 1 };
    let d_plus = delta(&lifted.slope, &plus);
    let d_minus = delta(&lifted.slope, &minus);
    evidence.delta_plus = Some(d_plus);
    evidence.delta_minus = Some(d_minus);
    if d_plus < 2 || d_minus < 2 {
        return Certificate {
            input: *f,
            filling: *s,
            status: CertStatus::NotCertified(NotCertifiedReason::Distance),
            evidence,
            lambda_caveat: false,
        };
    }
    if reducible.contains(s) {
        return Certificate {
            input: *f,
            filling: *s,
            status: CertStatus::NotCertified(NotCertifiedReason::Reducible),
            evidence,
            lambda_caveat: false,
        };
    }
    Certificate {
        input: *f,
        filling: *s,
        status: CertStatus::CertifiedModuloLambda,
        evidence,
        lambda_caveat: true,
    }
}
