//! Resultants and discriminants, from coefficients or from samples.
//!
//! The coefficient route is the classical Sylvester determinant. The sample
//! route never sees coefficients: given the values p(x_j)/q(x_j) at
//! N = n + m + 1 distinct nodes, the Hankel minors of the two derived
//! sequences vanish exactly when p and q share a root (for generic data),
//! and in the unique-common-zero regime the shared root itself is a ratio
//! of ladder coefficients, up to a correction term built from the two
//! leading coefficients of p.

use std::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::hankel::{hankel_minor_naive, hankel_sequence_jj};
use crate::interp::{tau_seq, tilde_tau_seq, InterpolationTable};
use crate::linalg::determinant;
use crate::poly::Polynomial;

/// Values p(x_j)/q(x_j) at N = n + m + 1 distinct nodes, with the degree
/// split declared by the caller. Zero ratios are rejected: the construction
/// needs both p(x_j) != 0 and q(x_j) != 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleRatioTable {
    spec: FieldSpec,
    nodes: Vec<Scalar>,
    ratios: Vec<Scalar>,
    num_degree: usize,
    den_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResultantError {
    /// Operand is constant or identically zero where a positive degree
    /// (>= 2 for discriminants) is required.
    DegenerateLeadingCoefficient,
    /// 1-based row whose ratio is zero.
    ZeroRatio { row: usize },
    /// Two rows share a node; 1-based row positions.
    DuplicateNodes { first: usize, second: usize },
    /// Node/ratio counts disagree with n + m + 1.
    RowCountMismatch { expected: usize, have: usize },
    /// Declared degrees must both be at least 1.
    DegreeTooSmall,
    MixedFields,
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::DegenerateLeadingCoefficient => {
                write!(f, "operand degree too small or leading coefficient zero")
            }
            ResultantError::ZeroRatio { row } => write!(f, "ratio at row {} is zero", row),
            ResultantError::DuplicateNodes { first, second } => {
                write!(f, "rows {} and {} share the same node", first, second)
            }
            ResultantError::RowCountMismatch { expected, have } => {
                write!(f, "need {} rows for the declared degrees, have {}", expected, have)
            }
            ResultantError::DegreeTooSmall => write!(f, "declared degrees must be at least 1"),
            ResultantError::MixedFields => write!(f, "entries from different fields"),
        }
    }
}

impl std::error::Error for ResultantError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommonZeroError {
    /// H_n over the reciprocal ratios is nonzero: no common zero detected.
    NotInCommonZeroRegime,
    /// H_{n-1} vanishes too: more than one common zero (or degenerate data);
    /// the single-zero formula does not apply.
    AmbiguousCommonZero,
    /// The supplied leading coefficient is zero.
    DegenerateLeadingCoefficient,
}

impl fmt::Display for CommonZeroError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommonZeroError::NotInCommonZeroRegime => {
                write!(f, "leading minor is nonzero; no common zero detected")
            }
            CommonZeroError::AmbiguousCommonZero => {
                write!(f, "two consecutive minors vanish; common zero not unique")
            }
            CommonZeroError::DegenerateLeadingCoefficient => {
                write!(f, "supplied leading coefficient is zero")
            }
        }
    }
}

impl std::error::Error for CommonZeroError {}

impl SampleRatioTable {
    pub fn new(
        spec: FieldSpec,
        nodes: Vec<Scalar>,
        ratios: Vec<Scalar>,
        num_degree: usize,
        den_degree: usize,
    ) -> Result<SampleRatioTable, ResultantError> {
        if num_degree < 1 || den_degree < 1 {
            return Err(ResultantError::DegreeTooSmall);
        }
        let expected = num_degree + den_degree + 1;
        if nodes.len() != expected || ratios.len() != expected {
            return Err(ResultantError::RowCountMismatch {
                expected,
                have: nodes.len().min(ratios.len()),
            });
        }
        if nodes.iter().chain(ratios.iter()).any(|s| s.spec() != spec) {
            return Err(ResultantError::MixedFields);
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if nodes[i] == nodes[j] {
                    return Err(ResultantError::DuplicateNodes { first: i + 1, second: j + 1 });
                }
            }
        }
        if let Some(i) = ratios.iter().position(Scalar::is_zero) {
            return Err(ResultantError::ZeroRatio { row: i + 1 });
        }
        Ok(SampleRatioTable { spec, nodes, ratios, num_degree, den_degree })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn nodes(&self) -> &[Scalar] {
        &self.nodes
    }

    pub fn ratios(&self) -> &[Scalar] {
        &self.ratios
    }

    pub fn num_degree(&self) -> usize {
        self.num_degree
    }

    pub fn den_degree(&self) -> usize {
        self.den_degree
    }

    /// The ratio table viewed as an interpolation table (values all nonzero).
    fn as_table(&self) -> InterpolationTable {
        InterpolationTable::new(self.spec.clone(), self.nodes.clone(), self.ratios.clone())
            .expect("validated at construction")
    }
}

/// The four leading Hankel minors that encode common-root information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantMinors {
    /// H_m over {tau}.
    pub h_m_tau: Scalar,
    /// H_{m+1} over {tau}.
    pub h_m1_tau: Scalar,
    /// H_n over {tau-tilde}.
    pub h_n_ttau: Scalar,
    /// H_{n+1} over {tau-tilde}.
    pub h_n1_ttau: Scalar,
}

impl ResultantMinors {
    /// Vanishing verdict: for generic samples both order-(n, m) minors are
    /// zero exactly when the source polynomials share a root.
    pub fn shared_root(&self) -> bool {
        self.h_n_ttau.is_zero() && self.h_m_tau.is_zero()
    }
}

/// Sylvester matrix with declared degrees n = deg p, m = deg q: m rows of
/// descending p-coefficients shifted right by 0..m-1, then n rows of
/// descending q-coefficients shifted by 0..n-1.
fn sylvester_det(spec: &FieldSpec, p: &Polynomial, q: &Polynomial, n: usize, m: usize) -> Scalar {
    let size = n + m;
    let desc = |poly: &Polynomial, deg: usize, i: usize| -> Scalar {
        // coefficient of x^{deg-i}, zero when the trimmed poly is shorter
        if i <= deg {
            poly.coeff(deg - i)
        } else {
            spec.zero()
        }
    };
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(size);
    for shift in 0..m {
        let mut row = vec![spec.zero(); size];
        for (i, slot) in row.iter_mut().skip(shift).take(n + 1).enumerate() {
            *slot = desc(p, n, i);
        }
        rows.push(row);
    }
    for shift in 0..n {
        let mut row = vec![spec.zero(); size];
        for (i, slot) in row.iter_mut().skip(shift).take(m + 1).enumerate() {
            *slot = desc(q, m, i);
        }
        rows.push(row);
    }
    determinant(spec, &rows)
}

/// Resultant of two nonconstant polynomials by the Sylvester determinant.
pub fn sylvester_resultant(p: &Polynomial, q: &Polynomial) -> Result<Scalar, ResultantError> {
    if p.spec() != q.spec() {
        return Err(ResultantError::MixedFields);
    }
    let (Some(n), Some(m)) = (p.degree(), q.degree()) else {
        return Err(ResultantError::DegenerateLeadingCoefficient);
    };
    if n < 1 || m < 1 {
        return Err(ResultantError::DegenerateLeadingCoefficient);
    }
    Ok(sylvester_det(p.spec(), p, q, n, m))
}

/// (-1)^{n(n-1)/2} Res(p, p') / p_lead for deg p = n >= 2. The resultant is
/// taken with p' at its declared degree n-1 even if its actual degree drops
/// (possible over small prime fields).
pub fn discriminant(p: &Polynomial) -> Result<Scalar, ResultantError> {
    let Some(n) = p.degree() else {
        return Err(ResultantError::DegenerateLeadingCoefficient);
    };
    if n < 2 {
        return Err(ResultantError::DegenerateLeadingCoefficient);
    }
    let res = sylvester_det(p.spec(), p, &p.derivative(), n, n - 1);
    let sign = p.spec().sign(n * (n - 1) / 2);
    Ok(sign
        .mul(&res)
        .div(p.leading().expect("degree >= 2"))
        .expect("leading coefficient of a trimmed polynomial is nonzero"))
}

/// The four minors H_m({tau}), H_{m+1}({tau}), H_n({tau-tilde}),
/// H_{n+1}({tau-tilde}) from the ratio samples alone. The sequences use the
/// ratios as table values: tau_k = sum r_j x_j^k / W'(x_j) and tau-tilde the
/// same with 1/r_j.
pub fn resultant_minors_from_samples(samples: &SampleRatioTable) -> ResultantMinors {
    let table = samples.as_table();
    let n = samples.num_degree;
    let m = samples.den_degree;
    let tau = tau_seq(&table, (2 * m).max(1));
    let ttau = tilde_tau_seq(&table, (2 * n).max(1)).expect("ratios are nonzero");
    ResultantMinors {
        h_m_tau: hankel_minor_naive(&tau, m).expect("entries cover order m"),
        h_m1_tau: hankel_minor_naive(&tau, m + 1).expect("entries cover order m+1"),
        h_n_ttau: hankel_minor_naive(&ttau, n).expect("entries cover order n"),
        h_n1_ttau: hankel_minor_naive(&ttau, n + 1).expect("entries cover order n+1"),
    }
}

/// Extracts the unique common zero of the sampled pair, given the two
/// leading coefficients p_0 (of x^n, nonzero) and p_1 (of x^{n-1}):
/// lambda = -p_1/p_0 + h_{n-1,1}/H_{n-1}, both Hankel objects over
/// {tau-tilde}. Requires H_n = 0 (a common zero exists) and H_{n-1} != 0
/// (it is unique).
pub fn common_zero_from_samples(
    samples: &SampleRatioTable,
    p0: &Scalar,
    p1: &Scalar,
) -> Result<Scalar, CommonZeroError> {
    if p0.is_zero() {
        return Err(CommonZeroError::DegenerateLeadingCoefficient);
    }
    let table = samples.as_table();
    let n = samples.num_degree;
    let ttau = tilde_tau_seq(&table, (2 * n - 1).max(1)).expect("ratios are nonzero");
    let ladder = hankel_sequence_jj(&ttau, n).expect("entries cover order n");
    if !ladder[n - 1].leading_minor().is_zero() {
        return Err(CommonZeroError::NotInCommonZeroRegime);
    }
    let (minor_prev, h_prev1) = if n == 1 {
        (table.spec().one(), table.spec().zero())
    } else {
        let prev = &ladder[n - 2];
        (prev.leading_minor().clone(), prev.coeff_desc(1).clone())
    };
    if minor_prev.is_zero() {
        return Err(CommonZeroError::AmbiguousCommonZero);
    }
    let correction = h_prev1.div(&minor_prev).expect("checked nonzero");
    Ok(p1.div(p0).expect("checked nonzero").neg().add(&correction))
}
