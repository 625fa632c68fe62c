//! Validated real enclosures with rational endpoints.
//!
//! Every function returns an interval guaranteed to contain the true value.
//! Intermediate quantities are rounded outward to dyadic rationals so that
//! sizes stay bounded by the requested precision.

use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rat::{ceil_dyadic, floor_dyadic, int, ratio, to_decimal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn point(q: BigRational) -> Self {
        Self { lo: q.clone(), hi: q }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// True iff every point of the interval is nonzero.
    pub fn excludes_zero(&self) -> bool {
        self.lo.is_positive() || self.hi.is_negative()
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = int(c);
        let (a, b) = (&self.lo * &c, &self.hi * &c);
        if a <= b { Self::new(a, b) } else { Self::new(b, a) }
    }

    /// `self / other` for a strictly positive `other`.
    pub fn div_positive(&self, other: &Self) -> Self {
        assert!(other.lo.is_positive(), "divisor must be positive");
        let lo = if self.lo.is_negative() { &self.lo / &other.lo } else { &self.lo / &other.hi };
        let hi = if self.hi.is_negative() { &self.hi / &other.hi } else { &self.hi / &other.lo };
        Self::new(lo, hi)
    }

    /// Outward rounding of both endpoints to multiples of `2^-bits`.
    pub fn round_out(&self, bits: u32) -> Self {
        Self::new(floor_dyadic(&self.lo, bits), ceil_dyadic(&self.hi, bits))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let lo = crate::rat::to_f64(&self.lo);
        let hi = crate::rat::to_f64(&self.hi);
        (lo.next_down(), hi.next_up())
    }

    /// Decimal endpoints with outward rounding at `digits` places.
    pub fn to_decimal(&self, digits: u32) -> (String, String) {
        (to_decimal(&self.lo, digits, false), to_decimal(&self.hi, digits, true))
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Enclosure of `sqrt(u)` for `u >= 0` with width at most `2^-bits`.
pub fn sqrt_enclosure(u: &BigRational, bits: u32) -> Interval {
    assert!(!u.is_negative(), "square root of a negative number");
    let scale = BigRational::from_integer(BigInt::one() << (2 * bits));
    let den = BigRational::from_integer(BigInt::one() << bits);
    let scaled = u * scale;
    let lo = scaled.floor().to_integer().sqrt();
    let c = scaled.ceil().to_integer();
    let mut hi = c.sqrt();
    if &hi * &hi < c {
        hi += 1;
    }
    Interval::new(BigRational::from_integer(lo) / &den, BigRational::from_integer(hi) / den)
}

/// Enclosure of `atan(s)` for rational `0 <= s <= 1` via Euler's series
/// `atan s = sum_k 2^(2k) (k!)^2 / (2k+1)! * s^(2k+1) / (1+s^2)^(k+1)`.
///
/// All terms are positive with ratio at most `y = s^2/(1+s^2) <= 1/2`, so
/// the tail after a term `t` is bounded by `t / (1 - y)`.
fn atan_small(s: &BigRational, bits: u32) -> Interval {
    debug_assert!(!s.is_negative() && s <= &int(1));
    if s.is_zero() {
        return Interval::zero();
    }
    let work = bits + 24;
    let one_plus = BigRational::one() + s * s;
    let y = s * s / &one_plus;
    let mut t_lo = floor_dyadic(&(s / &one_plus), work);
    let mut t_hi = ceil_dyadic(&(s / &one_plus), work);
    let mut sum_lo = BigRational::zero();
    let mut sum_hi = BigRational::zero();
    let eps = BigRational::new(BigInt::one(), BigInt::one() << (bits + 2));
    let mut k: i64 = 0;
    loop {
        sum_lo += &t_lo;
        sum_hi += &t_hi;
        let f = ratio(2 * k + 2, 2 * k + 3) * &y;
        t_lo = floor_dyadic(&(&t_lo * &f), work);
        t_hi = ceil_dyadic(&(&t_hi * &f), work);
        k += 1;
        let tail = &t_hi * &one_plus;
        if tail < eps {
            sum_hi += tail;
            break;
        }
    }
    Interval::new(sum_lo, sum_hi).round_out(bits + 2)
}

/// Enclosure of `pi` of width about `2^-bits`, from Machin's formula.
pub fn pi_enclosure(bits: u32) -> Interval {
    let a = atan_small(&ratio(1, 5), bits + 6);
    let b = atan_small(&ratio(1, 239), bits + 6);
    let lo = &a.lo * int(16) - &b.hi * int(4);
    let hi = &a.hi * int(16) - &b.lo * int(4);
    Interval::new(lo, hi).round_out(bits + 2)
}

/// Enclosure of `atan(s)` for rational `s >= 0`.
pub fn atan_enclosure(s: &BigRational, bits: u32) -> Interval {
    assert!(!s.is_negative(), "atan argument must be nonnegative");
    if s <= &int(1) {
        return atan_small(s, bits);
    }
    // atan s = pi/2 - atan(1/s)
    let pi = pi_enclosure(bits + 1);
    let inner = atan_small(&s.recip(), bits + 1);
    Interval::new(&pi.lo / int(2) - &inner.hi, &pi.hi / int(2) - &inner.lo)
}

/// Enclosure of `arccos(x)` for rational `-1 < x <= 1`, using
/// `arccos x = 2 atan(sqrt((1 - x)/(1 + x)))`.
pub fn arccos_enclosure(x: &BigRational, bits: u32) -> Interval {
    assert!(x > &int(-1) && x <= &int(1), "arccos argument {x} outside (-1, 1]");
    let u = (BigRational::one() - x) / (BigRational::one() + x);
    let s = sqrt_enclosure(&u, bits + 4);
    let lo = atan_enclosure(&s.lo, bits + 2).lo;
    let hi = atan_enclosure(&s.hi, bits + 2).hi;
    Interval::new(lo * int(2), hi * int(2))
}

/// Enclosure of `arccos` over every point of `[lo, hi]`; arccos is
/// decreasing.
pub fn arccos_range(lo: &BigRational, hi: &BigRational, bits: u32) -> Interval {
    let a = arccos_enclosure(hi, bits).lo;
    let b = arccos_enclosure(lo, bits).hi;
    Interval::new(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::to_f64;

    fn check(iv: &Interval, truth: f64, max_width: f64) {
        let (lo, hi) = iv.to_f64_pair();
        assert!(lo <= truth && truth <= hi, "{truth} not in [{lo}, {hi}]");
        assert!(to_f64(&iv.width()) <= max_width, "too wide: {}", to_f64(&iv.width()));
    }

    #[test]
    fn pi_digits() {
        let pi = pi_enclosure(100);
        let digits: BigInt = "3141592653589793238462643383279502884".parse().unwrap();
        let scale = BigInt::from(10).pow(36);
        let below = BigRational::new(digits.clone(), scale.clone());
        let above = BigRational::new(digits + 1, scale);
        assert!(pi.overlaps(&Interval::new(below, above)));
        assert!(pi.width() < BigRational::new(BigInt::one(), BigInt::one() << 98));
    }

    #[test]
    fn sqrt_brackets() {
        let s = sqrt_enclosure(&int(2), 60);
        assert!(s.lo() * s.lo() <= int(2) && s.hi() * s.hi() >= int(2));
        let e = sqrt_enclosure(&ratio(9, 4), 10);
        assert!(e.contains(&ratio(3, 2)));
    }

    #[test]
    fn atan_and_arccos_match_libm() {
        for (n, d) in [(1, 3), (1, 1), (7, 2), (0, 1), (100, 1)] {
            let s = ratio(n, d);
            check(&atan_enclosure(&s, 60), (n as f64 / d as f64).atan(), 1e-15);
        }
        for (n, d) in [(1, 2), (3, 4), (-3, 4), (127, 128), (-127, 128), (1, 1), (0, 1)] {
            let x = ratio(n, d);
            check(&arccos_enclosure(&x, 60), (n as f64 / d as f64).acos(), 1e-14);
        }
    }

    #[test]
    fn arccos_half_is_pi_over_three() {
        let a = arccos_enclosure(&ratio(1, 2), 80);
        let pi = pi_enclosure(80);
        let third = Interval::new(pi.lo() / int(3), pi.hi() / int(3));
        assert!(a.overlaps(&third));
        assert!(to_f64(&a.width()) < 1e-20);
    }

    #[test]
    fn interval_ops() {
        let a = Interval::new(int(-1), int(2));
        assert_eq!(a.scale(-2), Interval::new(int(-4), int(2)));
        assert_eq!(-&a, Interval::new(int(-2), int(1)));
        assert!(!a.excludes_zero());
        assert!(Interval::new(ratio(1, 3), int(1)).excludes_zero());
        let q = Interval::new(int(2), int(4));
        assert_eq!(a.div_positive(&q), Interval::new(ratio(-1, 2), int(1)));
        assert_eq!(Interval::zero().to_decimal(6), ("0".to_owned(), "0".to_owned()));
    }
}
