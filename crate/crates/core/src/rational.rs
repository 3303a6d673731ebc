//! Rational interpolation r = p/q with deg p = n, deg q <= m, n + m + 1 = N.
//!
//! For each degree split the candidate pair is a product of Hankel objects
//! over the two derived sequences of the table,
//!   numerator   = H_{m+1}({tau})      * P_n(x; {tau-tilde})
//!   denominator = H_n({tau-tilde})    * P_m(x; {tau}),
//! where P_k denotes the order-k Hankel polynomial and H_k the order-k
//! minor. The pair solves the interpolation conditions whenever the minor
//! H_n({tau-tilde}) is nonzero and the denominator avoids the nodes;
//! validity is certified afterwards by evaluating at every node, which also
//! catches unattainable points. No cancellation between numerator and
//! denominator is performed: a common node root is reported as a failure
//! node, not repaired.
//!
//! A combinatorial oracle ([`cauchy_oracle`]) computes the same object by
//! summing over index subsets; it is exponential in N and gated to small
//! tables, existing purely as an independent cross-check.

use std::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::hankel::{hankel_sequence_jj, row_functional, GeneratorSequence, HankelPolynomial};
use crate::interp::{tau_seq, tilde_tau_seq, InterpolationTable};
use crate::poly::Polynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterpolant {
    /// Numerator degree bound; deg(numerator) = n exactly when the split is
    /// nondegenerate.
    pub n: usize,
    /// Denominator degree bound, m = N - 1 - n.
    pub m: usize,
    /// Normalized: over the rationals the pair carries integer coefficients
    /// with no common integer factor and a positive leading reference
    /// coefficient; over a prime field the reference is monic. The
    /// reference is the denominator, or the numerator if the denominator is
    /// identically zero.
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    /// True when every node satisfies q(x_j) != 0 and p(x_j) = y_j q(x_j).
    pub valid: bool,
    /// Nodes where the check above fails.
    pub failure_nodes: Vec<Scalar>,
    /// True when H_n({tau-tilde}) = 0: the uniqueness hypothesis fails and
    /// the raw pair (kept below) collapses.
    pub degenerate: bool,
    /// The unnormalized Hankel products, for auditability.
    pub raw_numerator: Polynomial,
    pub raw_denominator: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalError {
    /// 1-based rows with y = 0; both derived sequences need nonzero values.
    ZeroValueInTable { rows: Vec<usize> },
    /// Numerator degree must satisfy 0 <= n <= N-1.
    DegreeOutOfRange { requested: usize, max: usize },
    /// The subset-sum oracle is exponential in the row count.
    TableTooLargeForOracle { rows: usize, max: usize },
}

impl fmt::Display for RationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalError::ZeroValueInTable { rows } => {
                write!(f, "table has zero values at rows {:?}", rows)
            }
            RationalError::DegreeOutOfRange { requested, max } => {
                write!(f, "numerator degree {} exceeds maximum {}", requested, max)
            }
            RationalError::TableTooLargeForOracle { rows, max } => {
                write!(f, "oracle limited to {} rows, table has {}", max, rows)
            }
        }
    }
}

impl std::error::Error for RationalError {}

/// Scales the pair, otherwise only defined up to a common numerical factor,
/// to a canonical form. Rationals: divide by the joint fractional
/// content (gcd of numerators over lcm of denominators, across both
/// polynomials) and fix the sign of the reference leading coefficient.
/// Prime fields: make the reference monic. The zero pair is untouched.
fn normalize_pair(num: &Polynomial, den: &Polynomial) -> (Polynomial, Polynomial) {
    let reference = if den.is_zero() { num } else { den };
    let Some(lead) = reference.leading() else {
        return (num.clone(), den.clone());
    };
    match lead {
        Scalar::Rational(_) => {
            let mut g = BigInt::zero();
            let mut l = BigInt::one();
            for c in num.coeffs().iter().chain(den.coeffs()) {
                let Scalar::Rational(r) = c else { unreachable!() };
                if r.is_zero() {
                    continue;
                }
                g = g.gcd(r.numer());
                l = l.lcm(r.denom());
            }
            let mut scale = BigRational::new(l, g);
            let Scalar::Rational(lr) = lead else { unreachable!() };
            if (lr * &scale).is_negative() {
                scale = -scale;
            }
            let s = Scalar::Rational(scale);
            (num.scale(&s), den.scale(&s))
        }
        Scalar::Residue { .. } => {
            let s = lead.inverse().expect("leading coefficient is nonzero");
            (num.scale(&s), den.scale(&s))
        }
    }
}

/// Node-by-node certification; returns the nodes where the pair fails.
fn failure_nodes(
    table: &InterpolationTable,
    num: &Polynomial,
    den: &Polynomial,
) -> Vec<Scalar> {
    table
        .nodes()
        .iter()
        .zip(table.values())
        .filter(|(x, y)| {
            let q = den.eval(x);
            q.is_zero() || num.eval(x) != y.mul(&q)
        })
        .map(|(x, _)| x.clone())
        .collect()
}

fn assemble(
    table: &InterpolationTable,
    n: usize,
    raw_numerator: Polynomial,
    raw_denominator: Polynomial,
    degenerate: bool,
) -> RationalInterpolant {
    let (numerator, denominator) = normalize_pair(&raw_numerator, &raw_denominator);
    let failures = failure_nodes(table, &numerator, &denominator);
    RationalInterpolant {
        n,
        m: table.len() - 1 - n,
        numerator,
        denominator,
        valid: failures.is_empty() && !degenerate,
        failure_nodes: failures,
        degenerate,
        raw_numerator,
        raw_denominator,
    }
}

/// Ladder lookup treating order 0 as the constant 1.
fn ladder_poly(spec: &FieldSpec, ladder: &[HankelPolynomial], k: usize) -> Polynomial {
    if k == 0 {
        Polynomial::one(spec.clone())
    } else {
        ladder[k - 1].poly()
    }
}

/// Order-k minor through the ladder: the leading slot for k within the
/// ladder, the row pairing H_{k} = L_{k-1}(order k-1 coefficients) one past
/// its end.
fn ladder_minor(
    seq: &GeneratorSequence,
    ladder: &[HankelPolynomial],
    k: usize,
) -> Scalar {
    if k == 0 {
        seq.spec().one()
    } else if k <= ladder.len() {
        ladder[k - 1].leading_minor().clone()
    } else {
        debug_assert_eq!(k, ladder.len() + 1);
        let prev_coeffs: Vec<Scalar> = if k == 1 {
            vec![seq.spec().one()]
        } else {
            ladder[k - 2].coeffs().to_vec()
        };
        row_functional(seq, k - 1, &prev_coeffs).expect("sequence covers the minor")
    }
}

fn build_split(
    table: &InterpolationTable,
    n: usize,
    tau: &GeneratorSequence,
    tau_ladder: &[HankelPolynomial],
    ttau: &GeneratorSequence,
    ttau_ladder: &[HankelPolynomial],
) -> RationalInterpolant {
    let spec = table.spec();
    let m = table.len() - 1 - n;
    let minor_m1_tau = ladder_minor(tau, tau_ladder, m + 1);
    let minor_n_ttau = ladder_minor(ttau, ttau_ladder, n);
    let raw_num = ladder_poly(spec, ttau_ladder, n).scale(&minor_m1_tau);
    let raw_den = ladder_poly(spec, tau_ladder, m).scale(&minor_n_ttau);
    assemble(table, n, raw_num, raw_den, minor_n_ttau.is_zero())
}

/// One degree split (numerator degree n, denominator degree N-1-n).
pub fn rational_interpolate(
    table: &InterpolationTable,
    n: usize,
) -> Result<RationalInterpolant, RationalError> {
    let n_rows = table.len();
    if n > n_rows - 1 {
        return Err(RationalError::DegreeOutOfRange { requested: n, max: n_rows - 1 });
    }
    let m = n_rows - 1 - n;
    let tau = tau_seq(table, (2 * m).max(1));
    let ttau = tilde_tau_seq(table, (2 * n).max(1)).map_err(|e| match e {
        crate::interp::InterpError::ZeroValueInTable { rows } => {
            RationalError::ZeroValueInTable { rows }
        }
    })?;
    let tau_ladder = hankel_sequence_jj(&tau, m).expect("entries cover order m");
    let ttau_ladder = hankel_sequence_jj(&ttau, n).expect("entries cover order n");
    Ok(build_split(table, n, &tau, &tau_ladder, &ttau, &ttau_ladder))
}

/// All N splits n = 0 .. N-1, sharing one pair of sequence runs and Hankel
/// ladders across the family.
pub fn rational_family(
    table: &InterpolationTable,
) -> Result<Vec<RationalInterpolant>, RationalError> {
    let n_rows = table.len();
    let upto = 2 * (n_rows - 1);
    let tau = tau_seq(table, upto);
    let ttau = tilde_tau_seq(table, upto).map_err(|e| match e {
        crate::interp::InterpError::ZeroValueInTable { rows } => {
            RationalError::ZeroValueInTable { rows }
        }
    })?;
    let tau_ladder = hankel_sequence_jj(&tau, n_rows - 1).expect("entries cover order N-1");
    let ttau_ladder = hankel_sequence_jj(&ttau, n_rows - 1).expect("entries cover order N-1");
    Ok((0..n_rows)
        .map(|n| build_split(table, n, &tau, &tau_ladder, &ttau, &ttau_ladder))
        .collect())
}

/// Index subsets of {0..n} of a given size, lexicographic.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // advance the rightmost index that can still move
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - size {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..size {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Independent combinatorial construction of the same split: the numerator
/// sums, over all (m+1)-subsets S of rows, the node polynomial of the
/// complement weighted by prod_{s in S} y_s / prod_{s in S, j not in S}
/// (x_s - x_j); the denominator sums, over all m-subsets S, the monic
/// polynomial with roots S weighted by prod y_s / prod_{j not in S, s in S}
/// (x_j - x_s), carrying a global sign (-1)^{mn}. Exponential in N; a test
/// oracle only.
pub fn cauchy_oracle(
    table: &InterpolationTable,
    n: usize,
) -> Result<RationalInterpolant, RationalError> {
    const MAX_ROWS: usize = 12;
    let n_rows = table.len();
    if n_rows > MAX_ROWS {
        return Err(RationalError::TableTooLargeForOracle { rows: n_rows, max: MAX_ROWS });
    }
    if n > n_rows - 1 {
        return Err(RationalError::DegreeOutOfRange { requested: n, max: n_rows - 1 });
    }
    let m = n_rows - 1 - n;
    let spec = table.spec();
    let nodes = table.nodes();
    let values = table.values();

    let mut num = Polynomial::zero(spec.clone());
    for s in subsets(n_rows, m + 1) {
        let in_s = |j: usize| s.binary_search(&j).is_ok();
        let mut weight = spec.one();
        for &i in &s {
            weight = weight.mul(&values[i]);
        }
        if weight.is_zero() {
            continue;
        }
        let mut denom = spec.one();
        let mut basis = Polynomial::one(spec.clone());
        for j in 0..n_rows {
            if in_s(j) {
                continue;
            }
            basis = basis.mul(&Polynomial::linear_root(&nodes[j]));
            for &i in &s {
                denom = denom.mul(&nodes[i].sub(&nodes[j]));
            }
        }
        num = num.add(&basis.scale(&weight.div(&denom).expect("distinct nodes")));
    }

    let mut den = Polynomial::zero(spec.clone());
    for s in subsets(n_rows, m) {
        let in_s = |j: usize| s.binary_search(&j).is_ok();
        let mut weight = spec.one();
        let mut basis = Polynomial::one(spec.clone());
        for &i in &s {
            weight = weight.mul(&values[i]);
            basis = basis.mul(&Polynomial::linear_root(&nodes[i]));
        }
        if weight.is_zero() {
            continue;
        }
        let mut denom = spec.one();
        for j in 0..n_rows {
            if in_s(j) {
                continue;
            }
            for &i in &s {
                denom = denom.mul(&nodes[j].sub(&nodes[i]));
            }
        }
        den = den.add(&basis.scale(&weight.div(&denom).expect("distinct nodes")));
    }
    den = den.scale(&spec.sign(m * n));

    Ok(assemble(table, n, num, den, false))
}
