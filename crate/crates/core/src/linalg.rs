//! Exact determinants for the minor computations.
//!
//! Rational matrices are cleared to integers row by row and handed to
//! fraction-free Bareiss elimination; prime-field matrices use ordinary
//! Gaussian elimination with pivot inverses.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

use crate::field::{FieldSpec, Scalar};

/// Determinant of a square matrix of scalars from one field.
/// The 0x0 determinant is 1 by convention.
pub(crate) fn determinant(spec: &FieldSpec, rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return spec.one();
    }
    match spec {
        FieldSpec::Rationals => det_rational(rows),
        FieldSpec::PrimeField(p) => det_prime(p, rows),
    }
}

fn det_rational(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    // Clear each row to integers; the determinant divides by the product
    // of the row multipliers at the end.
    let mut blow = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        let mut lcm = BigInt::one();
        for c in row {
            let Scalar::Rational(r) = c else { panic!("field mismatch") };
            lcm = lcm.lcm(r.denom());
        }
        let cleared = row
            .iter()
            .map(|c| {
                let Scalar::Rational(r) = c else { unreachable!() };
                r.numer() * (&lcm / r.denom())
            })
            .collect();
        blow *= &lcm;
        m.push(cleared);
    }

    // Fraction-free Bareiss: every division below is exact.
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Scalar::Rational(BigRational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = -det;
    }
    Scalar::Rational(BigRational::new(det, blow))
}

fn det_prime(p: &Arc<BigUint>, rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut det = FieldSpec::PrimeField(Arc::clone(p)).one();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return FieldSpec::PrimeField(Arc::clone(p)).zero(),
            }
        }
        let pivot = m[k][k].clone();
        let inv = pivot.inverse().expect("pivot is nonzero");
        det = det.mul(&pivot);
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].mul(&inv);
            for j in k..n {
                let t = m[k][j].mul(&factor);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    if negate {
        det.neg()
    } else {
        det
    }
}
