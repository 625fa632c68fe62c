//! Exact dense linear algebra: Bareiss determinants over the integers and
//! congruence diagonalization of symmetric matrices over ordered fields.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// An ordered field, passed as an explicit context so elements stay plain
/// values.
pub trait OrderedField {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// `y` is nonzero.
    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sign(&self, x: &Self::Elem) -> Ordering;
}

/// The field of rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl OrderedField for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x - y
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn div(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x / y
    }
    fn sign(&self, x: &BigRational) -> Ordering {
        x.cmp(&BigRational::zero())
    }
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of the symmetric matrix `m` by symmetric Gaussian elimination
/// (congruence `P M P^T`), which preserves inertia by Sylvester's law.
pub fn inertia<F: OrderedField>(field: &F, mut m: Vec<Vec<F::Elem>>) -> Inertia {
    let n = m.len();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        let pivot = (k..n).find(|&i| !field.is_zero(&m[i][i]));
        let pivot = match pivot {
            Some(p) => p,
            None => {
                // Zero diagonal: fold a row with a nonzero off-diagonal entry
                // into another, making the diagonal 2*m[i][j] != 0.
                let pair = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !field.is_zero(&m[i][j]));
                let Some((i, j)) = pair else {
                    out.zero += n - k;
                    return out;
                };
                for c in 0..n {
                    let v = field.add(&m[i][c], &m[j][c]);
                    m[i][c] = v;
                }
                for r in 0..n {
                    let v = field.add(&m[r][i], &m[r][j]);
                    m[r][i] = v;
                }
                i
            }
        };
        m.swap(k, pivot);
        for row in m.iter_mut() {
            row.swap(k, pivot);
        }
        let p = m[k][k].clone();
        match field.sign(&p) {
            Ordering::Greater => out.positive += 1,
            Ordering::Less => out.negative += 1,
            Ordering::Equal => unreachable!("pivot is nonzero"),
        }
        for r in k + 1..n {
            if field.is_zero(&m[r][k]) {
                continue;
            }
            let f = field.div(&m[r][k], &p);
            for c in k + 1..n {
                let v = field.sub(&m[r][c], &field.mul(&f, &m[k][c]));
                m[r][c] = v;
            }
            m[r][k] = field.zero();
        }
        for c in k + 1..n {
            m[k][c] = field.zero();
        }
        k += 1;
    }
    out
}

/// Determinant of a square integer matrix by fraction-free Bareiss
/// elimination. The empty matrix has determinant 1.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

/// Signature of a symmetric rational matrix.
pub fn rational_signature(m: Vec<Vec<BigRational>>) -> i64 {
    inertia(&Rationals, m).signature()
}

/// Signature of the Hermitian matrix `re + i im` with integer entries.
///
/// The characteristic polynomial (Faddeev-LeVerrier, exact over the
/// Gaussian integers) has only real roots, so Descartes' rule of signs
/// counts the positive and negative eigenvalues exactly.
pub fn gaussian_hermitian_signature(re: &[Vec<BigInt>], im: &[Vec<BigInt>]) -> i64 {
    if re.is_empty() {
        return 0;
    }
    let signs: Vec<Ordering> = match charpoly_i128(re, im) {
        Some(c) => c.iter().map(|v| v.cmp(&0)).collect(),
        None => charpoly_big(re, im).iter().map(|v| v.cmp(&BigInt::zero())).collect(),
    };
    descartes_count(&signs, false) - descartes_count(&signs, true)
}

/// Sign changes in the coefficients of `p(t)`, or of `p(-t)`.
fn descartes_count(signs: &[Ordering], negate: bool) -> i64 {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for (k, &s) in signs.iter().enumerate() {
        let s = if negate && k % 2 == 1 { s.reverse() } else { s };
        if s != Ordering::Equal {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

// Coefficients (ascending) of det(t I - H). With M_1 = I,
// c_{n-k} = -tr(H M_k) / k and M_{k+1} = H M_k + c_{n-k} I.
fn charpoly_big(re: &[Vec<BigInt>], im: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = re.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mr = vec![vec![BigInt::zero(); n]; n];
    let mut mi = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let (mut hr, hi) = if k == 1 {
            (re.to_vec(), im.to_vec())
        } else {
            let mut cr = vec![vec![BigInt::zero(); n]; n];
            let mut ci = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for l in 0..n {
                    let (xr, xi) = (&re[i][l], &im[i][l]);
                    for j in 0..n {
                        let (yr, yi) = (&mr[l][j], &mi[l][j]);
                        cr[i][j] += xr * yr - xi * yi;
                        ci[i][j] += xr * yi + xi * yr;
                    }
                }
            }
            (cr, ci)
        };
        let trace: BigInt = (0..n).map(|i| &hr[i][i]).sum();
        let c = -trace / BigInt::from(k);
        for (i, row) in hr.iter_mut().enumerate() {
            row[i] += &c;
        }
        (mr, mi) = (hr, hi);
        coeffs[n - k] = c;
    }
    coeffs
}

/// [`charpoly_big`] in checked `i128` arithmetic; `None` on overflow.
fn charpoly_i128(re: &[Vec<BigInt>], im: &[Vec<BigInt>]) -> Option<Vec<i128>> {
    let n = re.len();
    let small = |m: &[Vec<BigInt>]| -> Option<Vec<Vec<i128>>> {
        m.iter().map(|row| row.iter().map(|v| v.to_i128()).collect()).collect()
    };
    let (re, im) = (small(re)?, small(im)?);
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mr = vec![vec![0i128; n]; n];
    let mut mi = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let (mut hr, hi) = if k == 1 {
            (re.clone(), im.clone())
        } else {
            let mut cr = vec![vec![0i128; n]; n];
            let mut ci = vec![vec![0i128; n]; n];
            for i in 0..n {
                for l in 0..n {
                    let (xr, xi) = (re[i][l], im[i][l]);
                    for j in 0..n {
                        let (yr, yi) = (mr[l][j], mi[l][j]);
                        let r = xr.checked_mul(yr)?.checked_sub(xi.checked_mul(yi)?)?;
                        let c = xr.checked_mul(yi)?.checked_add(xi.checked_mul(yr)?)?;
                        cr[i][j] = cr[i][j].checked_add(r)?;
                        ci[i][j] = ci[i][j].checked_add(c)?;
                    }
                }
            }
            (cr, ci)
        };
        let mut trace = 0i128;
        for (i, row) in hr.iter().enumerate() {
            trace = trace.checked_add(row[i])?;
        }
        let c = trace.checked_neg()? / k as i128;
        for (i, row) in hr.iter_mut().enumerate() {
            row[i] = row[i].checked_add(c)?;
        }
        (mr, mi) = (hr, hi);
        coeffs[n - k] = c;
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn imat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn qmat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        assert_eq!(det_bareiss(&[]), BigInt::one());
        assert_eq!(det_bareiss(&imat(&[&[0, 1], &[-1, 0]])), BigInt::one());
        assert_eq!(det_bareiss(&imat(&[&[2, 1, 3], &[0, 0, 1], &[4, 5, 6]])), BigInt::from(-6));
        assert_eq!(det_bareiss(&imat(&[&[1, 2], &[2, 4]])), BigInt::zero());
        // needs a row swap at the second step
        assert_eq!(
            det_bareiss(&imat(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn inertia_of_small_forms() {
        let neg = qmat(&[&[-2, 1], &[1, -2]]);
        assert_eq!(rational_signature(neg), -2);
        let hyperbolic = qmat(&[&[0, 1], &[1, 0]]);
        let i = inertia(&Rationals, hyperbolic);
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        let degenerate = qmat(&[&[1, 1], &[1, 1]]);
        let i = inertia(&Rationals, degenerate);
        assert_eq!((i.positive, i.negative, i.zero), (1, 0, 1));
        let zero = qmat(&[&[0, 0], &[0, 0]]);
        assert_eq!(inertia(&Rationals, zero).zero, 2);
    }

    #[test]
    fn hermitian_signature_from_characteristic_polynomial() {
        let z = |rows: &[&[i64]]| imat(rows);
        // [[2, i], [-i, 2]] has eigenvalues 1, 3
        assert_eq!(gaussian_hermitian_signature(&z(&[&[2, 0], &[0, 2]]), &z(&[&[0, 1], &[-1, 0]])), 2);
        // [[1, 2i], [-2i, 1]] has eigenvalues -1, 3
        assert_eq!(gaussian_hermitian_signature(&z(&[&[1, 0], &[0, 1]]), &z(&[&[0, 2], &[-2, 0]])), 0);
        // [[1, i], [-i, 1]] is singular with eigenvalues 0, 2
        assert_eq!(gaussian_hermitian_signature(&z(&[&[1, 0], &[0, 1]]), &z(&[&[0, 1], &[-1, 0]])), 1);
        let zero = z(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let real = z(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]]);
        assert_eq!(gaussian_hermitian_signature(&real, &zero), -3);
        assert_eq!(gaussian_hermitian_signature(&zero, &zero), 0);
        assert_eq!(gaussian_hermitian_signature(&[], &[]), 0);
    }

    #[test]
    fn characteristic_polynomial_paths_agree() {
        let re = imat(&[&[4, 1, -3, 0], &[1, -2, 5, 2], &[-3, 5, 6, 1], &[0, 2, 1, -7]]);
        let im = imat(&[&[0, 2, 0, -1], &[-2, 0, 3, 0], &[0, -3, 0, 4], &[1, 0, -4, 0]]);
        let small = charpoly_i128(&re, &im).unwrap();
        let big = charpoly_big(&re, &im);
        assert_eq!(small.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(), big);
        // entries near 2^100 overflow i128 and take the exact path
        let huge: Vec<Vec<BigInt>> = re.iter().map(|r| r.iter().map(|v| v << 100).collect()).collect();
        let zero = vec![vec![BigInt::zero(); 4]; 4];
        assert!(charpoly_i128(&huge, &zero).is_none());
        let exact = gaussian_hermitian_signature(&huge, &zero);
        let q: Vec<Vec<BigRational>> = re.iter().map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect();
        assert_eq!(exact, rational_signature(q));
    }
}
