//! Small helpers over `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The rational with the smallest denominator (and, among those, the
/// smallest magnitude) strictly between `a` and `b`.
pub fn simplest_between(a: &BigRational, b: &BigRational) -> BigRational {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    assert!(a < b, "empty open interval");
    let zero = BigRational::zero();
    if a < &zero && b > &zero {
        return zero;
    }
    if b <= &zero {
        return -simplest_nonneg(&-b, &-a);
    }
    simplest_nonneg(a, b)
}

fn simplest_nonneg(a: &BigRational, b: &BigRational) -> BigRational {
    let n = a.floor();
    let next = &n + BigRational::one();
    if &next < b {
        return next;
    }
    let low = BigRational::one() / (b - &n);
    if *a == n {
        let y = low.floor() + BigRational::one();
        return n + y.recip();
    }
    let high = BigRational::one() / (a - &n);
    n + simplest_nonneg(&low, &high).recip()
}

pub fn floor_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (q * BigRational::from_integer(scale.clone())).floor();
    BigRational::new(scaled.to_integer(), scale)
}

pub fn ceil_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (q * BigRational::from_integer(scale.clone())).ceil();
    BigRational::new(scaled.to_integer(), scale)
}

/// Exact rational square root, if one exists.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Decimal rendering rounded towards `-inf` (`up = false`) or `+inf`
/// (`up = true`) at `digits` fractional digits, trailing zeros trimmed.
pub fn to_decimal(q: &BigRational, digits: u32, up: bool) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = q * BigRational::from_integer(scale.clone());
    let n = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let (int_part, frac) = n.abs().div_rem(&scale);
    let mut frac = format!("{:0>width$}", frac.to_string(), width = digits as usize);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Rounds a real number (given as an `f64` estimate) to `sig` significant
/// digits for tabular output.
pub fn fmt_significant(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let mag = v.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}
