//! Minimal exact rational arithmetic for tightness certificates.
//!
//! Certificates compare integer degree sums against bounds with rational
//! coefficients; everything stays exact, no floating point.

use core::cmp::Ordering;
use core::fmt;

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// An exact rational with positive denominator, always reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    /// Reduces `num/den`; `None` if `den == 0`.
    pub fn new(num: i64, den: i64) -> Option<Rational> {
        if den == 0 {
            return None;
        }
        Some(Self::reduced(num as i128, den as i128))
    }

    fn reduced(num: i128, den: i128) -> Rational {
        debug_assert_ne!(den, 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        let num = sign * num / g;
        let den = sign * den / g;
        Rational {
            num: i64::try_from(num).expect("rational overflow"),
            den: i64::try_from(den).expect("rational overflow"),
        }
    }

    pub fn from_integer(v: i64) -> Rational {
        Rational { num: v, den: 1 }
    }

    /// Parses `"p"` or `"p/q"`.
    pub fn parse(text: &str) -> Option<Rational> {
        let text = text.trim();
        match text.split_once('/') {
            Some((p, q)) => Rational::new(p.trim().parse().ok()?, q.trim().parse().ok()?),
            None => Some(Rational::from_integer(text.parse().ok()?)),
        }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    /// Smallest integer `c` with `c * self >= 1`; requires `self > 0`.
    pub fn ceil_inverse(&self) -> i64 {
        debug_assert!(self.is_positive());
        let (n, d) = (self.num as i128, self.den as i128);
        i64::try_from((d + n - 1) / n).expect("fits")
    }

    pub fn add(&self, other: Rational) -> Rational {
        Rational::reduced(
            self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn sub(&self, other: Rational) -> Rational {
        self.add(Rational { num: -other.num, den: other.den })
    }

    pub fn mul(&self, other: Rational) -> Rational {
        Rational::reduced(
            self.num as i128 * other.num as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn mul_int(&self, v: i64) -> Rational {
        self.mul(Rational::from_integer(v))
    }

    pub fn add_int(&self, v: i64) -> Rational {
        self.add(Rational::from_integer(v))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
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

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}
