//! Minimal exact rational arithmetic.
//!
//! Enough for disk-radius comparisons and continued-fraction evaluation;
//! values stay tiny (denominators bounded by a few hundred in practice) so
//! i128 intermediates never overflow.

use std::cmp::Ordering;
use std::fmt;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(into = "(i64, i64)", from = "(i64, i64)")]
pub struct Rational {
    num: i64,
    den: i64,
}

impl From<Rational> for (i64, i64) {
    fn from(r: Rational) -> (i64, i64) {
        (r.num, r.den)
    }
}

impl From<(i64, i64)> for Rational {
    fn from((num, den): (i64, i64)) -> Rational {
        Rational::new(num, den)
    }
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub const fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn recip(&self) -> Self {
        assert!(self.num != 0, "reciprocal of zero");
        Rational::new(self.den, self.num)
    }

    pub fn abs(&self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, r: Rational) -> Rational {
        let num = self.num as i128 * r.den as i128 + r.num as i128 * self.den as i128;
        let den = self.den as i128 * r.den as i128;
        let g = gcd128(num, den);
        Rational::new((num / g) as i64, (den / g) as i64)
    }
}

impl std::ops::Sub for Rational {
    type Output = Rational;
    fn sub(self, r: Rational) -> Rational {
        self + Rational::new(-r.num, r.den)
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, r: Rational) -> Rational {
        let num = self.num as i128 * r.num as i128;
        let den = self.den as i128 * r.den as i128;
        let g = gcd128(num, den);
        Rational::new((num / g) as i64, (den / g) as i64)
    }
}

impl std::ops::Div for Rational {
    type Output = Rational;
    fn div(self, r: Rational) -> Rational {
        assert!(r.num != 0, "division by zero");
        let num = self.num as i128 * r.den as i128;
        let den = self.den as i128 * r.num as i128;
        let g = gcd128(num, den);
        Rational::new((num / g) as i64, (den / g) as i64)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}
