//! Dense univariate integer polynomials and Sturm-sequence real root
//! isolation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rat::simplest_between;

/// `sum coeffs[i] x^i` over the integers. The coefficient vector never has
/// a trailing zero; the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_default();
        Self::new((0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        // Horner over the integers after clearing the denominator: the sign
        // of d^n p(n/d) equals the sign of p(n/d) for d > 0.
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc.sign_ordering()
    }

    /// Remainder of `self` by `other` over the rationals, rescaled by a
    /// positive rational to a primitive integer polynomial.
    pub fn rem_positive(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        let dd = other.coeffs.len() - 1;
        let mut r: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let lead = BigRational::from_integer(other.lead());
        while r.len() > dd {
            let top = r.pop().expect("len > dd >= 0");
            if top.is_zero() {
                continue;
            }
            let q = top / &lead;
            let shift = r.len() - dd;
            for (i, c) in other.coeffs[..dd].iter().enumerate() {
                r[shift + i] -= &q * BigRational::from_integer(c.clone());
            }
        }
        rational_to_primitive(r)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.rem_positive(&b);
            a = b;
            b = r;
        }
        if a.lead().is_negative() {
            a = a.scale(&BigInt::from(-1));
        }
        a
    }

    /// Exact quotient over the integers; panics if `other` does not divide
    /// `self` with an integral cofactor.
    pub fn div_exact(&self, other: &Self) -> Self {
        let dd = other.degree().expect("division by zero polynomial");
        let Some(dn) = self.degree() else {
            return Self::zero();
        };
        if dn < dd {
            assert!(self.is_zero(), "inexact polynomial division");
            return Self::zero();
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); dn - dd + 1];
        let lead = other.lead();
        for k in (0..=dn - dd).rev() {
            let top = &r[k + dd];
            let (qk, rem) = top.div_rem(&lead);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, c) in other.coeffs.iter().enumerate() {
                r[k + i] -= &qk * c;
            }
            q[k] = qk;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Self::new(q)
    }

    /// Primitive squarefree part with positive leading coefficient.
    pub fn squarefree(&self) -> Self {
        let p = self.primitive();
        let g = p.gcd(&p.derivative());
        let mut s = if g.degree().unwrap_or(0) == 0 { p } else { p.div_exact(&g).primitive() };
        if s.lead().is_negative() {
            s = s.scale(&BigInt::from(-1));
        }
        s
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...` with every member rescaled by
    /// a positive factor.
    pub fn sturm_sequence(&self) -> Vec<IntPoly> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative().primitive());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem_positive(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&BigInt::from(-1)));
        }
        seq
    }
}

fn rational_to_primitive(r: Vec<BigRational>) -> IntPoly {
    let l = r.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = r
        .into_iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    IntPoly::new(ints).primitive()
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn sign_variations(seq: &[IntPoly], x: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// A real root of a squarefree integer polynomial, either known exactly
/// or pinned inside an open rational interval that contains no other root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Rational(BigRational),
    Isolated(IsolatedRoot),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

impl IsolatedRoot {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
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

    /// One bisection step. The root is known irrational, so the midpoint is
    /// never a root.
    pub fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        let s_mid = self.poly.sign_at(&mid);
        debug_assert_ne!(s_mid, Ordering::Equal);
        if s_mid == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &BigRational) {
        while &self.width() > width {
            self.bisect();
        }
    }
}

impl RealRoot {
    pub fn lower(&self) -> &BigRational {
        match self {
            RealRoot::Rational(r) => r,
            RealRoot::Isolated(iso) => &iso.lo,
        }
    }

    pub fn upper(&self) -> &BigRational {
        match self {
            RealRoot::Rational(r) => r,
            RealRoot::Isolated(iso) => &iso.hi,
        }
    }

    pub fn refine(&mut self) {
        if let RealRoot::Isolated(iso) = self {
            iso.bisect();
        }
    }

    pub fn approx(&self) -> f64 {
        let two = BigRational::from_integer(BigInt::from(2));
        crate::rat::to_f64(&((self.lower() + self.upper()) / two))
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealRoot::Rational(r) => write!(f, "{r}"),
            RealRoot::Isolated(iso) => {
                write!(f, "root of {} in ({}, {})", iso.poly, iso.lo, iso.hi)
            }
        }
    }
}

/// All real roots of `p` in the open interval `(lo, hi)`, ascending.
///
/// Rational roots are detected exactly: a rational root `a/b` of a
/// primitive polynomial has `b | lead`, so once an isolating interval is
/// narrower than `1/lead^2` the only candidate is the simplest rational
/// inside it.
pub fn real_roots_in(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Vec<RealRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = p.squarefree();
    let seq = sf.sturm_sequence();
    let mut out = Vec::new();
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    // Endpoints that are themselves roots are excluded from the open
    // interval; nudge inwards so the Sturm counts are well defined.
    if sf.sign_at(&lo) == Ordering::Equal {
        lo = nudge(&sf, &seq, &lo, &hi, true);
    }
    if sf.sign_at(&hi) == Ordering::Equal {
        hi = nudge(&sf, &seq, &lo, &hi, false);
    }
    isolate(&sf, &seq, lo, hi, &mut out);
    let lead = sf.lead().abs();
    let limit = BigRational::new(BigInt::one(), &lead * &lead + BigInt::one());
    out.into_iter()
        .map(|root| match root {
            RealRoot::Isolated(mut iso) => {
                loop {
                    if iso.width() < limit {
                        break;
                    }
                    let mid = (&iso.lo + &iso.hi) / BigRational::from_integer(BigInt::from(2));
                    match sf.sign_at(&mid) {
                        Ordering::Equal => return RealRoot::Rational(mid),
                        s if s == sf.sign_at(&iso.lo) => iso.lo = mid,
                        _ => iso.hi = mid,
                    }
                }
                let cand = simplest_between(&iso.lo, &iso.hi);
                if sf.sign_at(&cand) == Ordering::Equal {
                    RealRoot::Rational(cand)
                } else {
                    RealRoot::Isolated(iso)
                }
            }
            r => r,
        })
        .collect()
}

fn nudge(
    sf: &IntPoly,
    seq: &[IntPoly],
    at: &BigRational,
    other: &BigRational,
    upward: bool,
) -> BigRational {
    // Sturm counts stay valid when an endpoint is a root: V(a) = V(a+).
    let two = BigRational::from_integer(BigInt::from(2));
    let mut step = (other - at).abs() / &two;
    loop {
        let cand = if upward { at + &step } else { at - &step };
        if sf.sign_at(&cand) != Ordering::Equal {
            let clear = if upward {
                roots_in_half_open(seq, at, &cand) == 0
            } else {
                roots_in_half_open(seq, &cand, at) == 1
            };
            if clear {
                return cand;
            }
        }
        step /= &two;
    }
}

/// Number of roots in `(a, b]` for a squarefree polynomial with `p(a) != 0`.
fn roots_in_half_open(seq: &[IntPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(seq, a).saturating_sub(sign_variations(seq, b))
}

fn isolate(sf: &IntPoly, seq: &[IntPoly], lo: BigRational, hi: BigRational, out: &mut Vec<RealRoot>) {
    let count = roots_in_half_open(seq, &lo, &hi);
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(RealRoot::Isolated(IsolatedRoot { poly: sf.clone(), lo, hi }));
        return;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mid = (&lo + &hi) / &two;
    if sf.sign_at(&mid) != Ordering::Equal {
        isolate(sf, seq, lo, mid.clone(), out);
        isolate(sf, seq, mid, hi, out);
        return;
    }
    // Midpoint is a root: carve out a window around it that holds no other
    // root and whose ends are not roots.
    let mut delta = (&hi - &lo) / BigRational::from_integer(BigInt::from(4));
    loop {
        let a = &mid - &delta;
        let b = &mid + &delta;
        if sf.sign_at(&a) != Ordering::Equal
            && sf.sign_at(&b) != Ordering::Equal
            && roots_in_half_open(seq, &a, &b) == 1
        {
            isolate(sf, seq, lo, a, out);
            out.push(RealRoot::Rational(mid));
            isolate(sf, seq, b, hi, out);
            return;
        }
        delta /= &two;
    }
}
