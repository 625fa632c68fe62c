//! Levine-Tristram signatures and the rho-invariant.
//!
//! For `omega = x + i y` on the unit circle the twisted form is
//! `(1 - conj(omega)) S + (1 - omega) S^T`, whose `(i, j)` entry is
//! `(1 - x)(S_ij + S_ji) + i y (S_ij - S_ji)`. With `x` rational, `y` lives
//! in `Q(sqrt(1 - x^2))`, where signatures are computed exactly.
//!
//! Profiles are indexed by the angle `theta in [0, pi]` with
//! `x = cos theta`, so they run from `x = 1` down to `x = -1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::enclosure::{arccos_enclosure, arccos_range, pi_enclosure, Interval};
use crate::field::{QuadField, QuadReal};
use crate::laurent::LaurentPolynomial;
use crate::linalg::{gaussian_hermitian_signature, inertia, OrderedField};
use crate::rat::{int, rational_sqrt, simplest_between};
use crate::seifert::SeifertMatrix;
use crate::upoly::{real_roots_in, IntPoly, RealRoot};

/// Exact location `x = cos theta` of a signature jump.
pub type Abscissa = RealRoot;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SignatureError {
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("polynomial {0} is not symmetric")]
    NotSymmetric(String),
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
}

/// The Hermitian form `lambda_omega` at `omega = x +- i sqrt(1 - x^2)`.
///
/// Entry `(i, j)` is `real[i][j] + i * imag[i][j]`, both over
/// `Q(sqrt(1 - x^2))`.
#[derive(Clone, Debug)]
pub struct HermitianForm {
    x: BigRational,
    field: QuadField,
    real: Vec<Vec<QuadReal>>,
    imag: Vec<Vec<QuadReal>>,
}

impl HermitianForm {
    pub fn dim(&self) -> usize {
        self.real.len()
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn real(&self, i: usize, j: usize) -> &QuadReal {
        &self.real[i][j]
    }

    pub fn imag(&self, i: usize, j: usize) -> &QuadReal {
        &self.imag[i][j]
    }

    pub fn is_zero(&self) -> bool {
        let f = &self.field;
        self.real.iter().chain(&self.imag).flatten().all(|e| f.is_zero(e))
    }

    /// Signature of the form. The real embedding `[[A, -B], [B, A]]` of
    /// `A + iB` is symmetric with exactly twice the inertia.
    pub fn signature(&self) -> i64 {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        if let Some((re, im)) = self.integral_entries() {
            return gaussian_hermitian_signature(&re, &im);
        }
        let f = &self.field;
        let mut m = vec![vec![QuadReal::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = self.real[i][j].clone();
                m[n + i][n + j] = self.real[i][j].clone();
                m[i][n + j] = f.neg(&self.imag[i][j]);
                m[n + i][j] = self.imag[i][j].clone();
            }
        }
        let doubled = inertia(f, m).signature();
        debug_assert_eq!(doubled % 2, 0);
        doubled / 2
    }

    /// When every entry is rational, the entries scaled by a common positive
    /// denominator.
    fn integral_entries(&self) -> Option<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)> {
        let all = || self.real.iter().chain(&self.imag).flatten();
        if all().any(|e| !e.b.is_zero()) {
            return None;
        }
        let den = all().fold(BigInt::one(), |acc, e| acc.lcm(e.a.denom()));
        let scale = |m: &[Vec<QuadReal>]| -> Vec<Vec<BigInt>> {
            m.iter()
                .map(|row| row.iter().map(|e| (&e.a * BigRational::from_integer(den.clone())).to_integer()).collect())
                .collect()
        };
        Some((scale(&self.real), scale(&self.imag)))
    }
}

/// Builds `lambda_omega` at `omega = x + i sqrt(1 - x^2)` (upper half) or its
/// conjugate. Panics unless `-1 <= x <= 1`.
pub fn hermitian_form(s: &SeifertMatrix, x: &BigRational, upper_half: bool) -> HermitianForm {
    assert!(x >= &int(-1) && x <= &int(1), "abscissa {x} outside [-1, 1]");
    let d = BigRational::one() - x * x;
    // d = 0 at omega = +-1, where the imaginary part vanishes; any split
    // context represents the rational entries.
    let field = QuadField::new(if d.is_zero() { BigRational::one() } else { d.clone() })
        .expect("positive radicand");
    let one_minus_x = BigRational::one() - x;
    let n = s.dim();
    let mut real = vec![vec![QuadReal::zero(); n]; n];
    let mut imag = vec![vec![QuadReal::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let sym = BigRational::from_integer(s.entry(i, j) + s.entry(j, i));
            let skew = BigRational::from_integer(s.entry(i, j) - s.entry(j, i));
            real[i][j] = QuadReal::rational(&one_minus_x * sym);
            if !d.is_zero() {
                let b = if upper_half { skew } else { -skew };
                imag[i][j] = field.element(BigRational::zero(), b);
            }
        }
    }
    HermitianForm { x: x.clone(), field, real, imag }
}

/// Levine-Tristram signature at `omega = x + i sqrt(1 - x^2)`. At a jump the
/// pointwise signature of the degenerate form is returned.
pub fn signature_at(s: &SeifertMatrix, x: &BigRational) -> i64 {
    if x == &int(1) {
        return 0;
    }
    // lambda_omega / (1 - x) has real part S + S^T and imaginary part
    // sqrt(u) (S - S^T), u = (1 + x)/(1 - x); same signature.
    let u = (BigRational::one() + x) / (BigRational::one() - x);
    match rational_sqrt(&u) {
        Some(r) => {
            // scale by the denominator of sqrt(u) to integer entries
            let n = s.dim();
            let (p, q) = (r.numer(), r.denom());
            let re: Vec<Vec<BigInt>> =
                (0..n).map(|i| (0..n).map(|j| q * (s.entry(i, j) + s.entry(j, i))).collect()).collect();
            let im: Vec<Vec<BigInt>> =
                (0..n).map(|i| (0..n).map(|j| p * (s.entry(i, j) - s.entry(j, i))).collect()).collect();
            gaussian_hermitian_signature(&re, &im)
        }
        None => reduced_form(s, x, u).signature(),
    }
}

/// `lambda_omega / (1 - x)` over `Q(sqrt(u))` for non-square `u`.
fn reduced_form(s: &SeifertMatrix, x: &BigRational, u: BigRational) -> HermitianForm {
    let field = QuadField::new(u).expect("positive radicand");
    let n = s.dim();
    let mut real = vec![vec![QuadReal::zero(); n]; n];
    let mut imag = vec![vec![QuadReal::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            real[i][j] = QuadReal::rational(BigRational::from_integer(s.entry(i, j) + s.entry(j, i)));
            imag[i][j] = QuadReal::new(BigRational::zero(), BigRational::from_integer(s.entry(i, j) - s.entry(j, i)));
        }
    }
    HermitianForm { x: x.clone(), field, real, imag }
}

/// `P(x)` with `Delta(e^{i theta}) = P(cos theta)`, using
/// `t^k + t^-k = 2 T_k(x)`.
pub fn chebyshev_rewrite(delta: &LaurentPolynomial) -> Result<IntPoly, SignatureError> {
    if !delta.is_symmetric() {
        return Err(SignatureError::NotSymmetric(delta.to_string()));
    }
    let top = delta.max_exp().unwrap_or(0).max(0) as usize;
    let mut cheb = vec![IntPoly::from_i64(&[1]), IntPoly::x()];
    let two_x = IntPoly::from_i64(&[0, 2]);
    while cheb.len() <= top {
        let k = cheb.len();
        let next = two_x.mul(&cheb[k - 1]).add(&cheb[k - 2].scale(&BigInt::from(-1)));
        cheb.push(next);
    }
    let mut p = IntPoly::constant(delta.coeff(0));
    for (k, t_k) in cheb.iter().enumerate().take(top + 1).skip(1) {
        let c = delta.coeff(k as i64);
        if !c.is_zero() {
            p = p.add(&t_k.scale(&(c * 2)));
        }
    }
    Ok(p)
}

/// All `x = cos theta`, `theta in (0, pi)`, with `Delta(e^{i theta}) = 0`,
/// ordered by increasing `theta` (decreasing `x`).
pub fn circle_roots(delta: &LaurentPolynomial) -> Result<Vec<Abscissa>, SignatureError> {
    let p = chebyshev_rewrite(delta)?;
    let mut roots = real_roots_in(&p, &int(-1), &int(1));
    roots.reverse();
    Ok(roots)
}

/// Piecewise-constant `sigma_omega` over `theta in [0, pi]`.
#[derive(Clone, Debug)]
pub struct SignatureProfile {
    genus: usize,
    jumps: Vec<Abscissa>,
    arc_values: Vec<i64>,
    endpoint_value: i64,
}

impl SignatureProfile {
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Jump abscissas by increasing angle.
    pub fn jumps(&self) -> &[Abscissa] {
        &self.jumps
    }

    /// Signature on each open arc; `arc_values[0]` is adjacent to
    /// `theta = 0`.
    pub fn arc_values(&self) -> &[i64] {
        &self.arc_values
    }

    pub fn endpoint_value(&self) -> i64 {
        self.endpoint_value
    }

    /// `(value after - value before)` at each jump.
    pub fn jump_sizes(&self) -> Vec<i64> {
        self.arc_values.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Index of the arc containing `x`, or `None` when `x` is not separated
    /// from every jump by the current isolating intervals.
    pub fn arc_index(&self, x: &BigRational) -> Option<usize> {
        let mut idx = 0;
        for root in &self.jumps {
            if x > root.upper() {
                return Some(idx);
            }
            if x >= root.lower() {
                return None;
            }
            idx += 1;
        }
        Some(idx)
    }
}

/// Builds the signature profile by isolating the circle roots of the
/// Alexander polynomial and sampling two rationals inside every arc.
pub fn signature_profile(s: &SeifertMatrix) -> Result<SignatureProfile, SignatureError> {
    let mut roots = circle_roots(&s.alexander())?;
    let minus_one = int(-1);
    let one = int(1);
    // Separate isolating intervals from each other and from +-1 so every arc
    // has a nonempty rational interior.
    loop {
        let mut ok = true;
        if let Some(first) = roots.first_mut() {
            if first.upper() >= &one {
                first.refine();
                ok = false;
            }
        }
        if let Some(last) = roots.last_mut() {
            if last.lower() <= &minus_one {
                last.refine();
                ok = false;
            }
        }
        for k in 1..roots.len() {
            if roots[k].upper() >= roots[k - 1].lower() {
                roots[k].refine();
                roots[k - 1].refine();
                ok = false;
            }
        }
        if ok {
            break;
        }
    }
    let gaps: Vec<(BigRational, BigRational)> = (0..=roots.len())
        .map(|i| {
            let hi = if i == 0 { one.clone() } else { roots[i - 1].lower().clone() };
            let lo = roots.get(i).map_or(minus_one.clone(), |r| r.upper().clone());
            (lo, hi)
        })
        .collect();
    let samples: Vec<Result<i64, SignatureError>> = gaps
        .par_iter()
        .map(|(lo, hi)| {
            let mid = (lo + hi) / int(2);
            let a = simplest_between(lo, &mid);
            let b = simplest_between(&mid, hi);
            let (va, vb) = (signature_at(s, &a), signature_at(s, &b));
            if va != vb {
                return Err(SignatureError::InternalInconsistency(format!(
                    "signatures {va} at {a} and {vb} at {b} disagree inside one arc"
                )));
            }
            Ok(va)
        })
        .collect();
    let values = samples.into_iter().collect::<Result<Vec<i64>, _>>()?;
    if values[0] != 0 {
        return Err(SignatureError::InternalInconsistency(format!(
            "signature {} next to theta = 0",
            values[0]
        )));
    }
    let endpoint_value = signature_at(s, &minus_one);
    if endpoint_value != *values.last().expect("at least one arc") {
        return Err(SignatureError::InternalInconsistency(
            "signature at theta = pi differs from the last arc".into(),
        ));
    }
    // Roots where the signature does not change are not jumps.
    let mut jumps = Vec::new();
    let mut arc_values = vec![values[0]];
    for (root, &v) in roots.into_iter().zip(&values[1..]) {
        if v != *arc_values.last().expect("nonempty") {
            jumps.push(root);
            arc_values.push(v);
        }
    }
    Ok(SignatureProfile { genus: s.genus(), jumps, arc_values, endpoint_value })
}

/// One summand `coeff * (pi - arccos r) / pi` of a rho-invariant.
#[derive(Clone, Debug)]
pub struct RhoTerm {
    pub coeff: i64,
    pub abscissa: Abscissa,
}

/// `rho = sum_k c_k (pi - arccos r_k) / pi` together with a validated
/// rational enclosure of its value.
#[derive(Clone, Debug)]
pub struct RhoValue {
    terms: Vec<RhoTerm>,
    enclosure: Interval,
}

impl RhoValue {
    pub fn zero() -> Self {
        Self { terms: Vec::new(), enclosure: Interval::zero() }
    }

    pub fn terms(&self) -> &[RhoTerm] {
        &self.terms
    }

    pub fn enclosure(&self) -> &Interval {
        &self.enclosure
    }

    /// No symbolic terms: the value is exactly zero.
    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn excludes_zero(&self) -> bool {
        self.enclosure.excludes_zero()
    }

    /// Formal sum; the enclosure is the sum of enclosures.
    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms, enclosure: &self.enclosure + &other.enclosure }
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| RhoTerm { coeff: -t.coeff, abscissa: t.abscissa.clone() })
            .collect();
        Self { terms, enclosure: -&self.enclosure }
    }

    pub fn sum<'a>(values: impl IntoIterator<Item = &'a RhoValue>) -> Self {
        values.into_iter().fold(Self::zero(), |acc, v| acc.add(v))
    }

    /// Symbolic form, e.g. `-2(π-arccos(1/2))/π`.
    pub fn symbolic(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            match (i, t.coeff < 0) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&format!("(π-arccos({}))/π", t.abscissa));
        }
        out
    }
}

impl fmt::Display for RhoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.symbolic(), self.enclosure)
    }
}

fn enclose_terms(terms: &[RhoTerm], bits: u32) -> Interval {
    let one = BigRational::one();
    let mut total = Interval::zero();
    for t in terms {
        let frac = theta_over_pi(&t.abscissa, bits);
        let unit = Interval::new(&one - frac.hi(), &one - frac.lo());
        total = &total + &unit.scale(t.coeff);
    }
    total
}

/// Enclosure of `theta / pi` where `cos theta` is the given abscissa.
pub fn theta_over_pi(abscissa: &Abscissa, bits: u32) -> Interval {
    let theta = match abscissa {
        RealRoot::Rational(r) => arccos_enclosure(r, bits),
        RealRoot::Isolated(iso) => arccos_range(iso.lo(), iso.hi(), bits),
    };
    theta.div_positive(&pi_enclosure(bits))
}

fn bits_for(q: &BigRational) -> u32 {
    // smallest b with 2^-b <= q
    let mut b = 0u32;
    let mut scale = BigRational::one();
    while &scale > q {
        scale /= int(2);
        b += 1;
    }
    b
}

/// Builds the validated rho value for the given jump terms.
pub fn rho_from_terms(mut terms: Vec<RhoTerm>, tol: &BigRational) -> Result<RhoValue, SignatureError> {
    if !tol.is_positive() {
        return Err(SignatureError::NonPositiveTolerance);
    }
    if terms.is_empty() {
        return Ok(RhoValue::zero());
    }
    let weight: i64 = terms.iter().map(|t| t.coeff.abs()).sum();
    let share = tol / int(8 * weight.max(1));
    for t in &mut terms {
        if let RealRoot::Isolated(iso) = &mut t.abscissa {
            iso.refine_to(&share);
        }
    }
    let mut bits = bits_for(tol) + 8 + bits_for(&BigRational::new(BigInt::one(), BigInt::from(weight)));
    loop {
        let enclosure = enclose_terms(&terms, bits).round_out(bits + 4);
        if &enclosure.width() <= tol {
            return Ok(RhoValue { terms, enclosure });
        }
        for t in &mut terms {
            for _ in 0..4 {
                t.abscissa.refine();
            }
        }
        bits += 4;
    }
}

/// `rho(K) = (1/pi) * integral_0^pi sigma_{e^{i theta}} d theta`, written as
/// `sum_k (jump_k) (pi - theta_k) / pi` over the jumps of the profile.
pub fn rho(s: &SeifertMatrix, tol: &BigRational) -> Result<RhoValue, SignatureError> {
    if !tol.is_positive() {
        return Err(SignatureError::NonPositiveTolerance);
    }
    let profile = signature_profile(s)?;
    let terms = profile
        .jump_sizes()
        .into_iter()
        .zip(profile.jumps)
        .map(|(coeff, abscissa)| RhoTerm { coeff, abscissa })
        .collect();
    rho_from_terms(terms, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ratio, to_f64};

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::from_i64(&[&[-1, 1], &[0, -1]]).unwrap()
    }

    fn j(m: i64) -> SeifertMatrix {
        SeifertMatrix::from_i64(&[&[1, 0], &[1, 2 * m]]).unwrap()
    }

    #[test]
    fn form_at_circle_endpoints() {
        let s = trefoil();
        assert!(hermitian_form(&s, &int(1), true).is_zero());
        let h = hermitian_form(&s, &int(-1), true);
        for i in 0..2 {
            for k in 0..2 {
                let expected = BigRational::from_integer(2 * (s.entry(i, k) + s.entry(k, i)));
                assert_eq!(h.real(i, k), &QuadReal::rational(expected));
                assert!(h.field().is_zero(h.imag(i, k)));
            }
        }
    }

    #[test]
    fn pointwise_signature_matches_full_form() {
        let big = SeifertMatrix::from_i64(&[&[3, 5, 7, 6], &[5, 0, 2, 3], &[6, 2, 6, 8], &[5, 2, 7, 9]]).unwrap();
        for s in [trefoil(), j(1), j(3), big] {
            for (n, d) in [(-1, 1), (-3, 5), (-1, 3), (0, 1), (1, 7), (1, 2), (3, 4), (7, 8), (99, 100), (5, 13)] {
                let x = ratio(n, d);
                assert_eq!(signature_at(&s, &x), hermitian_form(&s, &x, true).signature(), "{x}");
                assert_eq!(signature_at(&s, &x), hermitian_form(&s, &x, false).signature(), "{x}");
            }
        }
    }

    #[test]
    fn form_matches_complex_evaluation() {
        // omega = 3/5 + 4/5 i (split radicand) and omega = i.
        for (x, y) in [(ratio(3, 5), 0.8f64), (int(0), 1.0)] {
            let s = trefoil();
            let h = hermitian_form(&s, &x, true);
            let xf = to_f64(&x);
            let (wr, wi) = (xf, y);
            for i in 0..2 {
                for k in 0..2 {
                    let a = to_f64(&BigRational::from_integer(s.entry(i, k).clone()));
                    let b = to_f64(&BigRational::from_integer(s.entry(k, i).clone()));
                    // (1 - conj w) a + (1 - w) b
                    let re = (1.0 - wr) * a + (1.0 - wr) * b;
                    let im = wi * a - wi * b;
                    let hr = h.real(i, k);
                    let hi = h.imag(i, k);
                    let sq = to_f64(h.field().radicand()).sqrt();
                    let got_re = to_f64(&hr.a) + to_f64(&hr.b) * sq;
                    let got_im = to_f64(&hi.a) + to_f64(&hi.b) * sq;
                    assert!((re - got_re).abs() < 1e-12 && (im - got_im).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature_at(&trefoil(), &int(1)), 0);
        assert_eq!(signature_at(&trefoil(), &int(-1)), -2);
        assert_eq!(signature_at(&j(1), &int(-1)), 2);
        assert_eq!(signature_at(&trefoil(), &int(0)), -2);
        assert_eq!(signature_at(&trefoil(), &ratio(3, 4)), 0);
        assert_eq!(signature_at(&j(1), &ratio(7, 8)), 0);
        assert_eq!(signature_at(&j(1), &int(0)), 2);
        assert_eq!(signature_at(&SeifertMatrix::unknot(), &int(0)), 0);
        // at the jump the form is degenerate with one zero eigenvalue
        assert_eq!(signature_at(&trefoil(), &ratio(1, 2)), -1);
    }

    #[test]
    fn circle_roots_examples() {
        let d = j(1).alexander();
        assert_eq!(circle_roots(&d).unwrap(), vec![RealRoot::Rational(ratio(3, 4))]);
        assert!(circle_roots(&LaurentPolynomial::one()).unwrap().is_empty());
        let tre = trefoil().alexander();
        assert_eq!(circle_roots(&tre).unwrap(), vec![RealRoot::Rational(ratio(1, 2))]);
        let lopsided = LaurentPolynomial::from_dense(0, [BigInt::from(1), BigInt::from(1)]);
        assert!(circle_roots(&lopsided).is_err());
    }

    #[test]
    fn chebyshev_rewrite_of_degree_two() {
        // t^-2 - 3 + t^2 -> -3 + 2 T_2 = -5 + 4x^2
        let d = LaurentPolynomial::from_dense(-2, [1, 0, -3, 0, 1].map(BigInt::from));
        assert_eq!(chebyshev_rewrite(&d).unwrap(), IntPoly::from_i64(&[-5, 0, 4]));
    }

    #[test]
    fn profiles() {
        let p = signature_profile(&SeifertMatrix::unknot()).unwrap();
        assert!(p.jumps().is_empty());
        assert_eq!(p.arc_values(), &[0]);
        let p = signature_profile(&j(1)).unwrap();
        assert_eq!(p.jumps(), &[RealRoot::Rational(ratio(3, 4))]);
        assert_eq!(p.arc_values(), &[0, 2]);
        assert_eq!(p.endpoint_value(), 2);
        let p = signature_profile(&trefoil()).unwrap();
        assert_eq!(p.arc_values(), &[0, -2]);
        assert_eq!(p.arc_index(&ratio(3, 4)), Some(0));
        assert_eq!(p.arc_index(&ratio(1, 4)), Some(1));
    }

    #[test]
    fn trefoil_rho() {
        let tol = ratio(1, 1_000_000_000);
        let r = rho(&trefoil(), &tol).unwrap();
        assert_eq!(r.symbolic(), "-2(π-arccos(1/2))/π");
        assert!(r.enclosure().contains(&ratio(-4, 3)));
        assert!(r.enclosure().width() <= tol);
        let z = rho(&SeifertMatrix::unknot(), &tol).unwrap();
        assert!(z.is_exact_zero());
        assert_eq!(z.enclosure(), &Interval::zero());
        assert!(rho(&trefoil(), &int(0)).is_err());
    }

    #[test]
    fn rho_of_double_trefoil() {
        let s = trefoil().connected_sum(&trefoil());
        let tol = ratio(1, 1 << 30);
        let r = rho(&s, &tol).unwrap();
        assert_eq!(r.terms().len(), 1);
        assert_eq!(r.terms()[0].coeff, -4);
        assert!(r.enclosure().contains(&ratio(-8, 3)));
    }
}
