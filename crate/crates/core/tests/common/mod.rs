#![allow(dead_code)]

use knotrho::SeifertMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

/// `P (M + N) P^T` with `M` symmetric, `N` the standard hyperbolic
/// off-diagonal block and `P` a product of elementary unimodular matrices,
/// so that `det(S - S^T) = det(N - N^T) = 1`.
pub fn random_seifert<R: Rng>(rng: &mut R, genus: usize, entry: i64, shears: usize) -> SeifertMatrix {
    let n = 2 * genus;
    let mut s = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-entry..=entry);
            s[i][j] = v;
            s[j][i] = v;
        }
    }
    for i in 0..genus {
        s[i][i + genus] += 1;
    }
    for _ in 0..shears {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let c = rng.gen_range(-2..=2i64);
        // rows: r_a += c r_b, then columns: c_a += c c_b
        for k in 0..n {
            s[a][k] += c * s[b][k];
        }
        for k in 0..n {
            s[k][a] += c * s[k][b];
        }
    }
    let rows: Vec<&[i64]> = s.iter().map(|r| r.as_slice()).collect();
    SeifertMatrix::from_i64(&rows).expect("construction preserves the skew determinant")
}

/// Random rational in `(-1, 1)` with denominator at most `den`.
pub fn random_x<R: Rng>(rng: &mut R, den: i64) -> BigRational {
    let d = rng.gen_range(2..=den);
    let n = rng.gen_range(-(d - 1)..=(d - 1));
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random rational strictly between `lo` and `hi`.
pub fn random_between<R: Rng>(rng: &mut R, lo: &BigRational, hi: &BigRational) -> BigRational {
    let k = rng.gen_range(1..1000i64);
    lo + (hi - lo) * BigRational::new(BigInt::from(k), BigInt::from(1000))
}

pub fn trefoil() -> SeifertMatrix {
    SeifertMatrix::from_i64(&[&[-1, 1], &[0, -1]]).unwrap()
}

/// Two fixed valid 4x4 matrices drawn once from the generator above.
pub fn frozen_random_4x4() -> [SeifertMatrix; 2] {
    [
        SeifertMatrix::from_i64(&[&[3, 5, 7, 6], &[5, 0, 2, 3], &[6, 2, 6, 8], &[5, 2, 7, 9]]).unwrap(),
        SeifertMatrix::from_i64(&[&[4, 3, 5, 8], &[4, 2, 8, 5], &[5, 7, 13, 11], &[8, 4, 10, 12]]).unwrap(),
    ]
}
