//! Exact desk-scale check that the angles `theta_j = arccos((4m_j - 1)/4m_j)`
//! admit no small integer relation.
//!
//! A relation `sum c_j theta_j in pi Z` forces the unit
//! `prod z_j^{c_j}`, `z_j = ((4m_j - 1) + xi_j) / 4m_j = e^{i theta_j}`, to be
//! `+-1`, in particular real. Each candidate is refuted by showing the exact
//! product in `Q(xi_1, ..., xi_n)` is not real.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::family::{params_from_primes, FamilyParams};
use crate::field::{radicand, square_class_rank, FieldError, MultiQuadElement, MultiQuadField};
use crate::signature::RhoValue;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("parameters do not match the field generators")]
    FieldMismatch,
    #[error("expected {expected} exponents, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("element does not have norm 1")]
    NotUnit,
    #[error("family size and search bound must be positive")]
    EmptySearch,
    #[error("search space of (2 * {bound} + 1)^{n} candidates is too large")]
    SearchTooLarge { n: usize, bound: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A norm-one element of a multiquadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitAlgebraic {
    index: usize,
    value: MultiQuadElement,
}

impl UnitAlgebraic {
    /// Wraps `value` after checking `value * conj(value) = 1`.
    pub fn new(index: usize, value: MultiQuadElement) -> Result<Self, IndependenceError> {
        let norm = value.mul(&value.conj())?;
        if !norm.is_one() {
            return Err(IndependenceError::NotUnit);
        }
        Ok(Self { index, value })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn value(&self) -> &MultiQuadElement {
        &self.value
    }

    pub fn inverse(&self) -> MultiQuadElement {
        self.value.conj()
    }

    /// `z^e` for any integer `e`, using `z^-1 = conj(z)`.
    pub fn pow(&self, e: i64) -> MultiQuadElement {
        if e >= 0 {
            self.value.pow(e as u64)
        } else {
            self.inverse().pow(e.unsigned_abs())
        }
    }
}

/// An integer exponent vector `c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationCandidate(pub Vec<i64>);

impl RelationCandidate {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

/// The field `Q(xi_1, ..., xi_n)` generated by the primes of `params`.
pub fn field_for(params: &[FamilyParams]) -> Result<Arc<MultiQuadField>, IndependenceError> {
    let primes: Vec<u64> = params.iter().map(|p| p.prime).collect();
    Ok(MultiQuadField::new(&primes)?)
}

/// `z_j = ((4m_j - 1) + xi_j) / 4m_j` inside `field`.
pub fn unit_z(params: &FamilyParams, field: &Arc<MultiQuadField>) -> Result<UnitAlgebraic, IndependenceError> {
    let pos = params.index.checked_sub(1).ok_or(IndependenceError::FieldMismatch)?;
    if field.primes().get(pos) != Some(&params.prime) {
        return Err(IndependenceError::FieldMismatch);
    }
    let four_m = BigInt::from(4) * BigInt::from(params.m);
    let mut coords = vec![BigRational::zero(); field.dimension()];
    coords[0] = BigRational::new(&four_m - 1, four_m.clone());
    coords[1 << pos] = BigRational::new(BigInt::one(), four_m);
    let z = UnitAlgebraic::new(params.index, MultiQuadElement::from_coords(field, coords)?)?;
    Ok(z)
}

pub fn units_for(params: &[FamilyParams]) -> Result<Vec<UnitAlgebraic>, IndependenceError> {
    let field = field_for(params)?;
    params.iter().map(|p| unit_z(p, &field)).collect()
}

/// `prod z_j^{c_j}`.
pub fn power_product(zs: &[UnitAlgebraic], c: &RelationCandidate) -> Result<MultiQuadElement, IndependenceError> {
    if zs.len() != c.0.len() {
        return Err(IndependenceError::LengthMismatch { expected: zs.len(), got: c.0.len() });
    }
    let Some(first) = zs.first() else {
        return Err(IndependenceError::EmptySearch);
    };
    let mut acc = MultiQuadElement::one(first.value.field());
    for (z, &e) in zs.iter().zip(&c.0) {
        if e != 0 {
            acc = acc.mul(&z.pow(e))?;
        }
    }
    Ok(acc)
}

pub fn is_real_product(zs: &[UnitAlgebraic], c: &RelationCandidate) -> Result<bool, IndependenceError> {
    Ok(power_product(zs, c)?.is_real())
}

/// Every nonzero `c` with `|c_j| <= bound` whose power product is real.
/// An empty result refutes all integer relations among
/// `theta_1, ..., theta_n` (and `pi`) with coefficients up to `bound`.
pub fn exhaustive_independence(n: usize, bound: u32) -> Result<Vec<RelationCandidate>, IndependenceError> {
    if n == 0 || bound == 0 {
        return Err(IndependenceError::EmptySearch);
    }
    let zs = units_for(&params_from_primes(n))?;
    search_real_products(&zs, bound)
}

/// Core of [`exhaustive_independence`] over an explicit list of units.
pub fn search_real_products(zs: &[UnitAlgebraic], bound: u32) -> Result<Vec<RelationCandidate>, IndependenceError> {
    let b = bound as i64;
    // powers[j][e + b] = z_j^e
    let powers: Vec<Vec<MultiQuadElement>> = zs.iter().map(|z| (-b..=b).map(|e| z.pow(e)).collect()).collect();
    let side = (2 * b + 1) as u64;
    let total = u32::try_from(zs.len())
        .ok()
        .and_then(|n| side.checked_pow(n))
        .ok_or(IndependenceError::SearchTooLarge { n: zs.len(), bound })?;
    let mut hits: Vec<RelationCandidate> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut rest = code;
            let mut c = Vec::with_capacity(zs.len());
            for _ in 0..zs.len() {
                c.push((rest % side) as i64 - b);
                rest /= side;
            }
            let cand = RelationCandidate(c);
            if cand.is_zero() {
                return None;
            }
            let mut acc = powers[0][(cand.0[0] + b) as usize].clone();
            for (j, &e) in cand.0.iter().enumerate().skip(1) {
                if e != 0 {
                    acc = acc.mul(&powers[j][(e + b) as usize]).expect("one field");
                }
            }
            acc.is_real().then_some(cand)
        })
        .collect();
    hits.sort();
    Ok(hits)
}

/// `[Q(xi_1, ..., xi_n) : Q] = 2^n`, via independence of the square classes
/// of `-p_j (p_j - 2)`.
pub fn galois_degree_check(params: &[FamilyParams]) -> bool {
    let radicands: Vec<BigInt> = params.iter().map(|p| radicand(p.prime)).collect();
    square_class_rank(&radicands).is_ok_and(|r| r == params.len())
}

/// True iff `z` is not a root of unity of order dividing 3, 4 or 6, the
/// only orders possible in a quadratic field besides 1 and 2.
pub fn root_of_unity_check(z: &UnitAlgebraic) -> bool {
    let one = MultiQuadElement::one(z.value.field());
    let minus_one = one.neg();
    let z3 = z.pow(3);
    let z4 = z.pow(4);
    let z6 = z3.square();
    z3 != one && z3 != minus_one && z4 != one && z6 != one
}

/// Abelian rho contribution of an infection along `eta`: `rho(J)` when
/// `eta` survives the coefficient map, zero otherwise.
pub fn infection_rho_contribution(eta_nontrivial: bool, rho_j: &RhoValue) -> RhoValue {
    if eta_nontrivial {
        rho_j.clone()
    } else {
        RhoValue::zero()
    }
}

/// Certifies `rho(J_1) + sum c_i rho(J_i) != 0` for nonnegative `c`.
///
/// With `rho(J_i) = 2 (pi - theta_i) / pi`, vanishing would give an integer
/// relation among `pi, theta_1, ..., theta_n` with exponent vector
/// `(1 + c_1, c_2, ..., c_n)`; a non-real power product rules it out.
pub fn obstruction_ledger(params: &[FamilyParams], c: &[u32]) -> Result<bool, IndependenceError> {
    if params.len() != c.len() {
        return Err(IndependenceError::LengthMismatch { expected: params.len(), got: c.len() });
    }
    let zs = units_for(params)?;
    let mut exps: Vec<i64> = c.iter().map(|&v| v as i64).collect();
    if let Some(first) = exps.first_mut() {
        *first += 1;
    }
    Ok(!is_real_product(&zs, &RelationCandidate(exps))?)
}

/// [`obstruction_ledger`] for every `c` with entries in `0..=bound`; returns
/// the vectors that could not be certified.
pub fn obstruction_ledger_exhaustive(params: &[FamilyParams], bound: u32) -> Result<Vec<Vec<u32>>, IndependenceError> {
    let zs = units_for(params)?;
    let n = zs.len();
    let side = bound as u64 + 1;
    let mut failures: Vec<Vec<u32>> = (0..side.pow(n as u32))
        .into_par_iter()
        .filter_map(|code| {
            let mut rest = code;
            let c: Vec<u32> = (0..n)
                .map(|_| {
                    let v = (rest % side) as u32;
                    rest /= side;
                    v
                })
                .collect();
            let mut exps: Vec<i64> = c.iter().map(|&v| v as i64).collect();
            exps[0] += 1;
            let real = is_real_product(&zs, &RelationCandidate(exps)).expect("lengths match");
            real.then_some(c)
        })
        .collect();
    failures.sort();
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn unit_for_p5() {
        let ps = params_from_primes(1);
        let f = field_for(&ps).unwrap();
        let z = unit_z(&ps[0], &f).unwrap();
        // m = 2: z = (7 + xi) / 8 with xi^2 = -15, norm (49 + 15) / 64 = 1
        assert_eq!(z.value().coord(0), &ratio(7, 8));
        assert_eq!(z.value().coord(1), &ratio(1, 8));
        assert!(z.value().mul(&z.inverse()).unwrap().is_one());
    }

    #[test]
    fn unit_rejects_wrong_field() {
        let ps = params_from_primes(2);
        let f = MultiQuadField::new(&[5]).unwrap();
        assert_eq!(unit_z(&ps[1], &f), Err(IndependenceError::FieldMismatch));
        let f = MultiQuadField::new(&[5, 17]).unwrap();
        assert_eq!(unit_z(&ps[1], &f), Err(IndependenceError::FieldMismatch));
    }

    #[test]
    fn non_units_rejected() {
        let f = MultiQuadField::new(&[5]).unwrap();
        let two = MultiQuadElement::from_rational(&f, ratio(2, 1));
        assert_eq!(UnitAlgebraic::new(1, two), Err(IndependenceError::NotUnit));
    }

    #[test]
    fn power_products() {
        let zs = units_for(&params_from_primes(2)).unwrap();
        let one = power_product(&zs, &RelationCandidate(vec![0, 0])).unwrap();
        assert!(one.is_one());
        assert_eq!(power_product(&zs, &RelationCandidate(vec![1, 0])).unwrap(), zs[0].value().clone());
        let z1 = units_for(&params_from_primes(1)).unwrap();
        let sq = power_product(&z1, &RelationCandidate(vec![2])).unwrap();
        assert_eq!(sq, z1[0].value().mul(z1[0].value()).unwrap());
        assert!(matches!(
            power_product(&zs, &RelationCandidate(vec![1])),
            Err(IndependenceError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn reality_of_products() {
        let zs = units_for(&params_from_primes(2)).unwrap();
        assert!(!is_real_product(&zs, &RelationCandidate(vec![1, 0])).unwrap());
        assert!(is_real_product(&zs, &RelationCandidate(vec![0, 0])).unwrap());
        assert!(!is_real_product(&zs, &RelationCandidate(vec![1, -1])).unwrap());
    }

    #[test]
    fn small_exhaustive_runs() {
        assert!(exhaustive_independence(1, 10).unwrap().is_empty());
        assert!(exhaustive_independence(2, 5).unwrap().is_empty());
        assert!(exhaustive_independence(0, 5).is_err());
    }

    #[test]
    fn search_finds_planted_relation() {
        // z and z^-1 give the relation theta - theta = 0 only when both
        // entries are the same unit; use z_1 twice.
        let z = units_for(&params_from_primes(1)).unwrap().remove(0);
        let hits = search_real_products(&[z.clone(), z], 1).unwrap();
        assert_eq!(hits, vec![RelationCandidate(vec![-1, 1]), RelationCandidate(vec![1, -1])]);
    }

    #[test]
    fn degree_checks() {
        assert!(galois_degree_check(&params_from_primes(1)));
        assert!(galois_degree_check(&params_from_primes(3)));
        let p = FamilyParams::new(1, 5).unwrap();
        let q = FamilyParams::new(2, 5).unwrap();
        assert!(!galois_degree_check(&[p, q]));
    }

    #[test]
    fn roots_of_unity() {
        for z in units_for(&params_from_primes(3)).unwrap() {
            assert!(root_of_unity_check(&z));
        }
        let f = MultiQuadField::new(&[5]).unwrap();
        let minus_one = UnitAlgebraic::new(1, MultiQuadElement::one(&f).neg()).unwrap();
        assert!(!root_of_unity_check(&minus_one));
        // p = 3 gives xi^2 = -3 and (1 + xi)/2, a primitive sixth root of unity
        let g = MultiQuadField::new(&[3]).unwrap();
        let w = MultiQuadElement::from_coords(&g, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert!(!root_of_unity_check(&UnitAlgebraic::new(1, w).unwrap()));
    }

    #[test]
    fn ledger_examples() {
        let ps = params_from_primes(3);
        assert!(obstruction_ledger(&ps, &[0, 0, 0]).unwrap());
        assert!(obstruction_ledger(&ps, &[1, 0, 0]).unwrap());
        assert!(obstruction_ledger(&ps, &[0, 0]).is_err());
    }

    #[test]
    fn infection_contributions() {
        let r = crate::family::jm_rho(1, &ratio(1, 1 << 20)).unwrap();
        assert_eq!(infection_rho_contribution(true, &r).symbolic(), r.symbolic());
        assert!(infection_rho_contribution(false, &r).is_exact_zero());
        let total = RhoValue::sum(&[
            infection_rho_contribution(true, &r),
            infection_rho_contribution(false, &r),
            infection_rho_contribution(true, &r),
        ]);
        assert_eq!(total.terms().len(), 2);
        assert!(total.enclosure().overlaps(&r.enclosure().scale(2)));
    }
}
