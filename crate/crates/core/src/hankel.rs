//! Hankel determinants and Hankel polynomials.
//!
//! For a sequence c_0, c_1, ... the order-k Hankel minor H_k is the
//! determinant of the k x k matrix [c_{i+j}] (i, j from 0), and the order-k
//! Hankel polynomial is the (k+1) x (k+1) determinant whose first k rows are
//! consecutive windows of the sequence and whose last row is 1, x, ..., x^k.
//! Writing h_{k,j} for the coefficient of x^{k-j}, the leading coefficient
//! h_{k,0} equals H_k.
//!
//! Two evaluation strategies live here: a naive minor-by-minor oracle and the
//! Jacobi-Joachimsthal three-term recursion, which obtains each polynomial
//! from its two predecessors and falls back to dedicated formulas (or to the
//! oracle) when the leading minors it divides by vanish.

use std::fmt;

use crate::field::{ArithError, FieldSpec, Scalar};
use crate::linalg::determinant;
use crate::poly::Polynomial;

/// A finite sequence c_0 ... c_L feeding the Hankel constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSequence {
    spec: FieldSpec,
    entries: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HankelError {
    /// The operation needs `needed` sequence entries but only `have` exist.
    SequenceTooShort { needed: usize, have: usize },
    /// Entries (or the requested field) disagree.
    MixedField,
}

impl fmt::Display for HankelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HankelError::SequenceTooShort { needed, have } => {
                write!(f, "sequence too short: need {} entries, have {}", needed, have)
            }
            HankelError::MixedField => write!(f, "sequence entries from different fields"),
        }
    }
}

impl std::error::Error for HankelError {}

impl GeneratorSequence {
    /// At least two entries (c_0 and c_1), all from `spec`'s field.
    pub fn new(spec: FieldSpec, entries: Vec<Scalar>) -> Result<GeneratorSequence, HankelError> {
        if entries.len() < 2 {
            return Err(HankelError::SequenceTooShort { needed: 2, have: entries.len() });
        }
        if entries.iter().any(|e| e.spec() != spec) {
            return Err(HankelError::MixedField);
        }
        Ok(GeneratorSequence { spec, entries })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires two entries
    }

    /// Largest k for which the order-k Hankel polynomial is defined
    /// (its bottom-right entry is c_{2k-1}).
    pub fn max_poly_order(&self) -> usize {
        self.entries.len() / 2
    }
}

/// An order-k Hankel polynomial with all k+1 coefficient slots retained,
/// ascending; leading slots may be zero and "identically zero" means every
/// slot is zero. Slot i holds h_{k,k-i}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelPolynomial {
    order: usize,
    coeffs: Vec<Scalar>,
}

impl HankelPolynomial {
    fn unit(spec: &FieldSpec) -> HankelPolynomial {
        HankelPolynomial { order: 0, coeffs: vec![spec.one()] }
    }

    /// Pads a trimmed polynomial of degree <= order back to order+1 slots.
    fn from_poly(spec: &FieldSpec, order: usize, p: &Polynomial) -> HankelPolynomial {
        let mut coeffs = p.coeffs().to_vec();
        debug_assert!(coeffs.len() <= order + 1, "degree exceeds Hankel order");
        while coeffs.len() < order + 1 {
            coeffs.push(spec.zero());
        }
        HankelPolynomial { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// All order+1 coefficient slots, ascending powers, untrimmed.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// h_{k,j}, the coefficient of x^{k-j}.
    pub fn coeff_desc(&self, j: usize) -> &Scalar {
        &self.coeffs[self.order - j]
    }

    /// h_{k,0} = H_k, the slot at x^k.
    pub fn leading_minor(&self) -> &Scalar {
        &self.coeffs[self.order]
    }

    pub fn is_identically_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Trimmed polynomial view.
    pub fn poly(&self) -> Polynomial {
        Polynomial::new(self.coeffs[0].spec(), self.coeffs.clone())
    }
}

/// L_r applied to ascending coefficients a_0..a_d: sum of c_{r+i} * a_i.
/// For a Hankel polynomial this is the row pairing that yields, e.g.,
/// H_k = L_{k-1}(coeffs of order k-1) and h_{k,1} = -L_k(same).
pub fn row_functional(
    seq: &GeneratorSequence,
    r: usize,
    coeffs: &[Scalar],
) -> Result<Scalar, HankelError> {
    let needed = r + coeffs.len();
    if needed > seq.entries.len() {
        return Err(HankelError::SequenceTooShort { needed, have: seq.entries.len() });
    }
    let mut acc = seq.spec.zero();
    for (i, a) in coeffs.iter().enumerate() {
        acc = acc.add(&seq.entries[r + i].mul(a));
    }
    Ok(acc)
}

/// H_k by direct determinant of the k x k window matrix (k = 0 gives 1).
pub fn hankel_minor_naive(seq: &GeneratorSequence, k: usize) -> Result<Scalar, HankelError> {
    if k == 0 {
        return Ok(seq.spec.one());
    }
    let needed = 2 * k - 1; // entries c_0 .. c_{2k-2}
    if needed > seq.entries.len() {
        return Err(HankelError::SequenceTooShort { needed, have: seq.entries.len() });
    }
    let rows: Vec<Vec<Scalar>> = (0..k)
        .map(|i| seq.entries[i..i + k].to_vec())
        .collect();
    Ok(determinant(&seq.spec, &rows))
}

/// The order-k Hankel polynomial by Laplace expansion along the variable
/// row: slot j is (-1)^{k+j} times the minor that deletes column j.
pub fn hankel_poly_naive(
    seq: &GeneratorSequence,
    k: usize,
) -> Result<HankelPolynomial, HankelError> {
    if k == 0 {
        return Ok(HankelPolynomial::unit(&seq.spec));
    }
    let needed = 2 * k; // entries c_0 .. c_{2k-1}
    if needed > seq.entries.len() {
        return Err(HankelError::SequenceTooShort { needed, have: seq.entries.len() });
    }
    let mut coeffs = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let rows: Vec<Vec<Scalar>> = (0..k)
            .map(|i| {
                (0..=k)
                    .filter(|&col| col != j)
                    .map(|col| seq.entries[i + col].clone())
                    .collect()
            })
            .collect();
        let minor = determinant(&seq.spec, &rows);
        coeffs.push(if (k + j) % 2 == 0 { minor } else { minor.neg() });
    }
    Ok(HankelPolynomial { order: k, coeffs })
}

/// The ladder of Hankel polynomials of orders 1..=kmax by the
/// Jacobi-Joachimsthal recursion.
///
/// Orders 1 and 2 seed the recursion. For k >= 3, with H_{k-1}, H_{k-2} the
/// leading minors of the two predecessors:
/// - H_{k-2} = 0: that order is recomputed naively and the recursion resumes.
/// - H_{k-1} != 0: the generic three-term identity
///   H_{k-1}^2 P_k = -[H_k^2 P_{k-2} + (H_k h_{k-1,1} - H_{k-1} h_{k,1}
///   - H_k H_{k-1} x) P_{k-1}], with H_k and h_{k,1} taken from the row
///   pairing of the order-(k-1) coefficients.
/// - H_{k-1} = 0, h_{k-1,1} = 0: P_{k-1} is identically zero and
///   P_k = (h_{k,2}/H_{k-2}) P_{k-2} with h_{k,2} = -L_k(P_{k-2})^2/H_{k-2}.
/// - H_{k-1} = 0, h_{k-1,1} != 0: the quadratic-multiplier bridge
///   P_k = (Q_2 x^2 + Q_1 x + Q_0) P_{k-2} + R P_{k-3}, with
///   H_k = -h_{k-1,1}^2/H_{k-2}, Q_2 = H_k/H_{k-2},
///   Q_1 = (h_{k,1} - Q_2 h_{k-2,1})/H_{k-2}, R = H_k h_{k-1,1}/H_{k-2}^2,
///   and Q_0 fixed by the vanishing of the row pairing at order k-1:
///   Q_0 = (Q_2 L_{k+1}(P_{k-2}) + Q_1 L_k(P_{k-2}) + R L_{k-1}(P_{k-3}))
///         / h_{k-1,1}.
pub fn hankel_sequence_jj(
    seq: &GeneratorSequence,
    kmax: usize,
) -> Result<Vec<HankelPolynomial>, HankelError> {
    let spec = seq.spec.clone();
    if kmax == 0 {
        return Ok(Vec::new());
    }
    let needed = 2 * kmax;
    if needed > seq.entries.len() {
        return Err(HankelError::SequenceTooShort { needed, have: seq.entries.len() });
    }

    let mut out: Vec<HankelPolynomial> = Vec::with_capacity(kmax);
    out.push(HankelPolynomial {
        order: 1,
        coeffs: vec![seq.entries[1].neg(), seq.entries[0].clone()],
    });
    if kmax >= 2 {
        out.push(hankel_poly_naive(seq, 2)?);
    }

    let invert = |s: &Scalar| -> Scalar {
        s.inverse()
            .unwrap_or_else(|e: ArithError| panic!("branch guard guarantees nonzero: {}", e))
    };

    for k in 3..=kmax {
        let prev = &out[k - 2]; // order k-1
        let prev2 = &out[k - 3]; // order k-2
        let minor_prev = prev.leading_minor().clone(); // H_{k-1}
        let minor_prev2 = prev2.leading_minor().clone(); // H_{k-2}

        let next = if minor_prev2.is_zero() {
            hankel_poly_naive(seq, k)?
        } else if !minor_prev.is_zero() {
            let minor_k = row_functional(seq, k - 1, prev.coeffs())?; // H_k
            let h_k1 = row_functional(seq, k, prev.coeffs())?.neg(); // h_{k,1}
            let h_prev1 = prev.coeff_desc(1).clone(); // h_{k-1,1}
            let lin = Polynomial::new(
                spec.clone(),
                vec![
                    minor_k.mul(&h_prev1).sub(&minor_prev.mul(&h_k1)),
                    minor_k.mul(&minor_prev).neg(),
                ],
            );
            let num = prev2
                .poly()
                .scale(&minor_k.mul(&minor_k))
                .add(&lin.mul(&prev.poly()));
            let scale = invert(&minor_prev.mul(&minor_prev)).neg();
            HankelPolynomial::from_poly(&spec, k, &num.scale(&scale))
        } else if prev.coeff_desc(1).is_zero() {
            // P_{k-1} is identically zero here; P_k is proportional to P_{k-2}.
            let g = row_functional(seq, k, prev2.coeffs())?;
            let h_k2 = g.mul(&g).mul(&invert(&minor_prev2)).neg();
            let factor = h_k2.mul(&invert(&minor_prev2));
            HankelPolynomial::from_poly(&spec, k, &prev2.poly().scale(&factor))
        } else {
            let h_prev1 = prev.coeff_desc(1).clone(); // h_{k-1,1} != 0
            let inv2 = invert(&minor_prev2);
            let minor_k = h_prev1.mul(&h_prev1).mul(&inv2).neg(); // H_k
            let h_k1 = row_functional(seq, k, prev.coeffs())?.neg();
            let q2 = minor_k.mul(&inv2);
            let q1 = h_k1.sub(&q2.mul(prev2.coeff_desc(1))).mul(&inv2);
            let r = minor_k.mul(&h_prev1).mul(&inv2).mul(&inv2);
            let prev3 = if k == 3 { HankelPolynomial::unit(&spec) } else { out[k - 4].clone() };
            let q0 = q2
                .mul(&row_functional(seq, k + 1, prev2.coeffs())?)
                .add(&q1.mul(&row_functional(seq, k, prev2.coeffs())?))
                .add(&r.mul(&row_functional(seq, k - 1, prev3.coeffs())?))
                .mul(&invert(&h_prev1));
            let quad = Polynomial::new(spec.clone(), vec![q0, q1, q2]);
            let combined = quad.mul(&prev2.poly()).add(&prev3.poly().scale(&r));
            HankelPolynomial::from_poly(&spec, k, &combined)
        };
        out.push(next);
    }
    Ok(out)
}
