//! The knots `J_m` with Alexander polynomial `2m t - (4m - 1) + 2m t^-1` and
//! the prime-indexed parameters `m_j = (p_j - 1)^2 / 8`.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::field::is_prime;
use crate::seifert::SeifertMatrix;
use crate::signature::{rho, RhoValue, SignatureError};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("m must be positive")]
    NonPositive,
    #[error("{0} is not a prime >= 5 congruent to 1 mod 4")]
    InadmissiblePrime(u64),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// Genus-one realization `[[1, 0], [1, 2m]]` of `J_m`.
pub fn jm_seifert(m: u64) -> Result<SeifertMatrix, FamilyError> {
    if m == 0 {
        return Err(FamilyError::NonPositive);
    }
    let raw = vec![
        vec![BigInt::from(1), BigInt::from(0)],
        vec![BigInt::from(1), BigInt::from(2) * BigInt::from(m)],
    ];
    Ok(SeifertMatrix::validate(raw).expect("skew part is [[0, -1], [1, 0]]"))
}

/// `cos theta_m = (4m - 1) / 4m`.
pub fn jm_theta_cos(m: u64) -> Result<BigRational, FamilyError> {
    if m == 0 {
        return Err(FamilyError::NonPositive);
    }
    let four_m = BigInt::from(4) * BigInt::from(m);
    Ok(BigRational::new(&four_m - 1, four_m))
}

pub fn jm_rho(m: u64, tol: &BigRational) -> Result<RhoValue, FamilyError> {
    Ok(rho(&jm_seifert(m)?, tol)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    /// One-based position in the family.
    pub index: usize,
    pub prime: u64,
    pub m: u64,
    pub theta_cos: BigRational,
}

impl FamilyParams {
    pub fn new(index: usize, prime: u64) -> Result<Self, FamilyError> {
        if prime < 5 || prime % 4 != 1 || !is_prime(prime) {
            return Err(FamilyError::InadmissiblePrime(prime));
        }
        let m = (prime - 1) * (prime - 1) / 8;
        Ok(Self { index, prime, m, theta_cos: jm_theta_cos(m)? })
    }

    pub fn seifert(&self) -> SeifertMatrix {
        jm_seifert(self.m).expect("m >= 2")
    }
}

/// Primes `p >= 5` with `p = 1 (mod 4)`, in order.
pub fn admissible_primes() -> impl Iterator<Item = u64> {
    (5u64..).step_by(4).filter(|&p| is_prime(p))
}

/// Parameters for the first `n` admissible primes.
pub fn params_from_primes(n: usize) -> Vec<FamilyParams> {
    admissible_primes()
        .take(n)
        .enumerate()
        .map(|(i, p)| FamilyParams::new(i + 1, p).expect("admissible by construction"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPolynomial;
    use crate::rat::ratio;

    #[test]
    fn seifert_realization() {
        let s = jm_seifert(1).unwrap();
        assert_eq!(s, SeifertMatrix::from_i64(&[&[1, 0], &[1, 2]]).unwrap());
        let d = jm_seifert(2).unwrap().alexander();
        assert_eq!(d, LaurentPolynomial::from_dense(-1, [4, -7, 4].map(BigInt::from)));
        assert_eq!(jm_seifert(0), Err(FamilyError::NonPositive));
        for m in 1..20 {
            assert_eq!(jm_seifert(m).unwrap().arf(), 0);
        }
    }

    #[test]
    fn theta_cos() {
        assert_eq!(jm_theta_cos(1).unwrap(), ratio(3, 4));
        assert_eq!(jm_theta_cos(2).unwrap(), ratio(7, 8));
        assert!(jm_theta_cos(0).is_err());
    }

    #[test]
    fn params() {
        let ps = params_from_primes(3);
        let primes: Vec<u64> = ps.iter().map(|p| p.prime).collect();
        let ms: Vec<u64> = ps.iter().map(|p| p.m).collect();
        assert_eq!(primes, vec![5, 13, 17]);
        assert_eq!(ms, vec![2, 18, 32]);
        for p in &ps {
            assert_eq!(8 * p.m - 1, p.prime * (p.prime - 2));
        }
        let six: Vec<u64> = params_from_primes(6).iter().map(|p| p.prime).collect();
        assert_eq!(six, vec![5, 13, 17, 29, 37, 41]);
        assert!(FamilyParams::new(1, 7).is_err());
        assert!(FamilyParams::new(1, 21).is_err());
    }

    #[test]
    fn rho_has_single_positive_term() {
        let r = jm_rho(1, &ratio(1, 1 << 20)).unwrap();
        assert_eq!(r.terms().len(), 1);
        assert_eq!(r.terms()[0].coeff, 2);
        assert_eq!(r.symbolic(), "2(π-arccos(3/4))/π");
    }
}
