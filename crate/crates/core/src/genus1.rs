//! Genus-one algebraic sliceness and the curve-knot obstruction report.
//!
//! On a genus-one surface the Seifert form restricted to the diagonal is the
//! binary quadratic form `q(x, y) = a x^2 + b x y + c y^2` with
//! `a = S11`, `b = S12 + S21`, `c = S22`. Metabolizers are generated by
//! primitive zeros of `q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::seifert::SeifertMatrix;
use crate::signature::{rho, RhoValue, SignatureError};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Genus1Error {
    #[error("expected a genus-one Seifert matrix, got genus {0}")]
    WrongGenus(usize),
    #[error("Seifert form has no primitive class of zero self-linking")]
    NotAlgebraicallySlice,
    #[error("Alexander polynomial is 1")]
    AlexanderTrivial,
    #[error("no curve knot assigned to class {0}")]
    MissingAssignment(MetabolizerClass),
    #[error("{0} is not a metabolizer class of this surface")]
    UnknownClass(MetabolizerClass),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// A primitive integer class `(x, y)` up to sign, normalized so the first
/// nonzero coordinate is positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetabolizerClass {
    x: BigInt,
    y: BigInt,
}

impl MetabolizerClass {
    /// Reduces `(x, y)` to its primitive representative. `None` for `(0, 0)`.
    pub fn primitive(x: BigInt, y: BigInt) -> Option<Self> {
        let g = x.gcd(&y);
        if g.is_zero() {
            return None;
        }
        let (mut x, mut y) = (x / &g, y / &g);
        if x.is_negative() || (x.is_zero() && y.is_negative()) {
            x = -x;
            y = -y;
        }
        Some(Self { x, y })
    }

    pub fn from_i64(x: i64, y: i64) -> Option<Self> {
        Self::primitive(BigInt::from(x), BigInt::from(y))
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }
}

impl fmt::Display for MetabolizerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn require_genus_one(s: &SeifertMatrix) -> Result<(), Genus1Error> {
    if s.genus() == 1 { Ok(()) } else { Err(Genus1Error::WrongGenus(s.genus())) }
}

/// Coefficients `(a, b, c)` of the self-linking form.
fn form(s: &SeifertMatrix) -> (BigInt, BigInt, BigInt) {
    (s.entry(0, 0).clone(), s.entry(0, 1) + s.entry(1, 0), s.entry(1, 1).clone())
}

/// `v S v^T` for `v = (x, y)`.
pub fn self_linking(s: &SeifertMatrix, x: &BigInt, y: &BigInt) -> Result<BigInt, Genus1Error> {
    require_genus_one(s)?;
    let (a, b, c) = form(s);
    Ok(a * x * x + b * x * y + c * y * y)
}

fn discriminant(s: &SeifertMatrix) -> BigInt {
    let (a, b, c) = form(s);
    &b * &b - BigInt::from(4) * a * c
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_algebraically_slice_g1(s: &SeifertMatrix) -> Result<bool, Genus1Error> {
    require_genus_one(s)?;
    Ok(exact_sqrt(&discriminant(s)).is_some())
}

/// All primitive isotropic classes of the self-linking form, sorted.
pub fn metabolizer_classes(s: &SeifertMatrix) -> Result<Vec<MetabolizerClass>, Genus1Error> {
    require_genus_one(s)?;
    let Some(root) = exact_sqrt(&discriminant(s)) else {
        return Ok(Vec::new());
    };
    let (a, b, c) = form(s);
    let mut out: Vec<MetabolizerClass> = if a.is_zero() {
        // q = y (b x + c y)
        [(BigInt::from(1), BigInt::zero()), (c, -b)]
            .into_iter()
            .filter_map(|(x, y)| MetabolizerClass::primitive(x, y))
            .collect()
    } else {
        // x / y = (-b +- root) / 2a
        let two_a = BigInt::from(2) * &a;
        [-&b + &root, -&b - &root]
            .into_iter()
            .filter_map(|x| MetabolizerClass::primitive(x, two_a.clone()))
            .collect()
    };
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    Unobstructed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Unobstructed => "UNOBSTRUCTED",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub class: MetabolizerClass,
    pub rho: RhoValue,
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub classes: Vec<ClassReport>,
    pub verdict: Verdict,
}

/// Evaluates the hypothesis "some metabolizer curve has vanishing rho".
///
/// The verdict is `Obstructed` only when every assigned curve knot has a
/// validated rho enclosure excluding zero.
pub fn obstruction_report(
    s: &SeifertMatrix,
    curves: &BTreeMap<MetabolizerClass, SeifertMatrix>,
    tol: &BigRational,
) -> Result<ObstructionReport, Genus1Error> {
    let classes = metabolizer_classes(s)?;
    if classes.is_empty() {
        return Err(Genus1Error::NotAlgebraicallySlice);
    }
    if s.alexander().is_one() {
        return Err(Genus1Error::AlexanderTrivial);
    }
    if let Some(extra) = curves.keys().find(|k| !classes.contains(k)) {
        return Err(Genus1Error::UnknownClass(extra.clone()));
    }
    let assigned = classes
        .iter()
        .map(|c| curves.get(c).map(|k| (c, k)).ok_or_else(|| Genus1Error::MissingAssignment(c.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let reports = assigned
        .into_par_iter()
        .map(|(class, knot)| Ok(ClassReport { class: class.clone(), rho: rho(knot, tol)? }))
        .collect::<Result<Vec<_>, Genus1Error>>()?;
    let verdict = if reports.iter().all(|r| r.rho.excludes_zero()) {
        Verdict::Obstructed
    } else {
        Verdict::Unobstructed
    };
    Ok(ObstructionReport { classes: reports, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPolynomial;
    use crate::rat::ratio;

    fn m(rows: &[&[i64]]) -> SeifertMatrix {
        SeifertMatrix::from_i64(rows).unwrap()
    }

    fn cls(x: i64, y: i64) -> MetabolizerClass {
        MetabolizerClass::from_i64(x, y).unwrap()
    }

    fn trefoil() -> SeifertMatrix {
        m(&[&[-1, 1], &[0, -1]])
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn self_linking_values() {
        let s = m(&[&[1, 1], &[0, -2]]);
        assert_eq!(self_linking(&s, &b(1), &b(1)).unwrap(), b(0));
        assert_eq!(self_linking(&s, &b(0), &b(0)).unwrap(), b(0));
        assert_eq!(self_linking(&m(&[&[1, 0], &[1, 2]]), &b(1), &b(0)).unwrap(), b(1));
        assert_eq!(
            self_linking(&SeifertMatrix::unknot(), &b(1), &b(0)),
            Err(Genus1Error::WrongGenus(0))
        );
    }

    #[test]
    fn classes() {
        assert_eq!(metabolizer_classes(&m(&[&[1, 1], &[0, -2]])).unwrap(), vec![cls(1, 1), cls(2, -1)]);
        assert!(metabolizer_classes(&m(&[&[1, 0], &[1, 2]])).unwrap().is_empty());
        assert_eq!(metabolizer_classes(&m(&[&[0, 1], &[0, 3]])).unwrap(), vec![cls(1, 0), cls(3, -1)]);
        assert_eq!(metabolizer_classes(&m(&[&[0, 1], &[0, 0]])).unwrap(), vec![cls(0, 1), cls(1, 0)]);
        assert!(is_algebraically_slice_g1(&m(&[&[1, 1], &[0, -2]])).unwrap());
        assert!(!is_algebraically_slice_g1(&m(&[&[1, 0], &[1, 2]])).unwrap());
        for n in 0..5 {
            assert!(is_algebraically_slice_g1(&m(&[&[0, 1], &[0, n]])).unwrap());
        }
    }

    #[test]
    fn normalization() {
        assert_eq!(cls(-2, 4), cls(1, -2));
        assert_eq!(cls(0, -3), cls(0, 1));
        assert!(MetabolizerClass::from_i64(0, 0).is_none());
    }

    // Brute-force: for slice forms, every small primitive zero is a listed
    // class, every listed class is a zero, and Delta = +-t f(t) f(1/t).
    #[test]
    fn classes_agree_with_search_and_factorization() {
        let mut checked = 0;
        for a in -4..=4 {
            for c in -4..=4 {
                for s12 in -3..=3i64 {
                    for s21 in [s12 - 1, s12 + 1] {
                        let s = m(&[&[a, s12], &[s21, c]]);
                        let classes = metabolizer_classes(&s).unwrap();
                        assert_eq!(classes.is_empty(), !is_algebraically_slice_g1(&s).unwrap());
                        for k in &classes {
                            assert!(self_linking(&s, k.x(), k.y()).unwrap().is_zero());
                            assert!(k.x().gcd(k.y()) == b(1));
                        }
                        for x in -6..=6 {
                            for y in -6..=6 {
                                if let Some(k) = MetabolizerClass::from_i64(x, y) {
                                    if self_linking(&s, &b(x), &b(y)).unwrap().is_zero() {
                                        assert!(classes.contains(&k), "{k} missing for {s:?}");
                                    }
                                }
                            }
                        }
                        if !classes.is_empty() {
                            assert!(factors_as_norm(&s.alexander()), "{s:?}");
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 50);
    }

    /// Searches `f = u + v t` with `Delta = +- t^-1 f(t) f(t^-1) * t`, the
    /// genus-one shape of `+- t f(t) f(t^-1)` after centring.
    fn factors_as_norm(delta: &LaurentPolynomial) -> bool {
        let (lo, hi) = (delta.coeff(-1), delta.coeff(0));
        for u in -20i64..=20 {
            for v in -20i64..=20 {
                // f(t) f(1/t) = u v t^-1 + (u^2 + v^2) + u v t
                for sign in [1i64, -1] {
                    if b(sign * u * v) == lo && b(sign * (u * u + v * v)) == hi {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn report_verdicts() {
        let s = m(&[&[1, 1], &[0, -2]]);
        let tol = ratio(1, 1_000_000_000);
        let both = |k1: SeifertMatrix, k2: SeifertMatrix| {
            BTreeMap::from([(cls(1, 1), k1), (cls(2, -1), k2)])
        };
        let r = obstruction_report(&s, &both(SeifertMatrix::unknot(), SeifertMatrix::unknot()), &tol).unwrap();
        assert_eq!(r.verdict, Verdict::Unobstructed);
        assert!(r.classes.iter().all(|c| c.rho.is_exact_zero()));
        let r = obstruction_report(&s, &both(trefoil(), trefoil()), &tol).unwrap();
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert!(r.classes.iter().all(|c| c.rho.enclosure().contains(&ratio(-4, 3))));
        let r = obstruction_report(&s, &both(trefoil(), SeifertMatrix::unknot()), &tol).unwrap();
        assert_eq!(r.verdict, Verdict::Unobstructed);
    }

    #[test]
    fn report_errors() {
        let tol = ratio(1, 1000);
        let none = BTreeMap::new();
        assert_eq!(
            obstruction_report(&m(&[&[1, 0], &[1, 2]]), &none, &tol).unwrap_err(),
            Genus1Error::NotAlgebraicallySlice
        );
        assert_eq!(
            obstruction_report(&m(&[&[0, 1], &[0, 3]]), &none, &tol).unwrap_err(),
            Genus1Error::AlexanderTrivial
        );
        let s = m(&[&[1, 1], &[0, -2]]);
        let one = BTreeMap::from([(cls(1, 1), trefoil())]);
        assert_eq!(
            obstruction_report(&s, &one, &tol).unwrap_err(),
            Genus1Error::MissingAssignment(cls(2, -1))
        );
        let bad = BTreeMap::from([(cls(1, 0), trefoil())]);
        assert_eq!(obstruction_report(&s, &bad, &tol).unwrap_err(), Genus1Error::UnknownClass(cls(1, 0)));
        assert_eq!(
            obstruction_report(&SeifertMatrix::unknot(), &none, &tol).unwrap_err(),
            Genus1Error::WrongGenus(0)
        );
    }
}
