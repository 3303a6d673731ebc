//! Polynomial interpolation three ways, plus the node-polynomial machinery
//! (W, the W' values, and the weighted power sums) shared by the correction
//! and rational-interpolation layers.
//!
//! For a table (x_1, y_1) ... (x_N, y_N) with distinct nodes, write
//! W(x) = prod (x - x_j) and W'(x_j) = prod_{k != j} (x_j - x_k). The two
//! derived sequences are
//!   tau_k       = sum y_j x_j^k / W'(x_j)
//!   tau-tilde_k = sum x_j^k / (y_j W'(x_j))
//! and the power sums sigma_k = sum x_j^{N+k-1} / W'(x_j) drive a coefficient
//! recursion equivalent to Lagrange's formula.

use std::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::hankel::{hankel_sequence_jj, GeneratorSequence};
use crate::poly::Polynomial;

/// A value table over one field with pairwise distinct nodes, N >= 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationTable {
    spec: FieldSpec,
    nodes: Vec<Scalar>,
    values: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    /// Fewer than two rows.
    TooFewRows { have: usize },
    LengthMismatch { nodes: usize, values: usize },
    /// Two rows share a node; 1-based row positions.
    DuplicateNodes { first: usize, second: usize },
    MixedFields,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::TooFewRows { have } => {
                write!(f, "table needs at least 2 rows, has {}", have)
            }
            TableError::LengthMismatch { nodes, values } => {
                write!(f, "table has {} nodes but {} values", nodes, values)
            }
            TableError::DuplicateNodes { first, second } => {
                write!(f, "rows {} and {} share the same node", first, second)
            }
            TableError::MixedFields => write!(f, "table entries from different fields"),
        }
    }
}

impl std::error::Error for TableError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterpError {
    /// The reciprocal-value sequence needs every y nonzero;
    /// 1-based row positions of the offenders.
    ZeroValueInTable { rows: Vec<usize> },
}

impl fmt::Display for InterpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterpError::ZeroValueInTable { rows } => {
                write!(f, "table has zero values at rows {:?}", rows)
            }
        }
    }
}

impl std::error::Error for InterpError {}

impl InterpolationTable {
    pub fn new(
        spec: FieldSpec,
        nodes: Vec<Scalar>,
        values: Vec<Scalar>,
    ) -> Result<InterpolationTable, TableError> {
        if nodes.len() != values.len() {
            return Err(TableError::LengthMismatch { nodes: nodes.len(), values: values.len() });
        }
        if nodes.len() < 2 {
            return Err(TableError::TooFewRows { have: nodes.len() });
        }
        if nodes.iter().chain(values.iter()).any(|s| s.spec() != spec) {
            return Err(TableError::MixedFields);
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if nodes[i] == nodes[j] {
                    return Err(TableError::DuplicateNodes { first: i + 1, second: j + 1 });
                }
            }
        }
        Ok(InterpolationTable { spec, nodes, values })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn nodes(&self) -> &[Scalar] {
        &self.nodes
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Number of rows N.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires two rows
    }

    /// 1-based rows whose value is zero.
    pub fn zero_value_rows(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, y)| y.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// A copy with the rows at the given 0-based positions removed.
    /// Panics if fewer than two rows would remain.
    pub(crate) fn without_rows(&self, drop: &[usize]) -> InterpolationTable {
        let keep = |i: &usize| !drop.contains(i);
        let nodes: Vec<Scalar> = (0..self.len())
            .filter(keep)
            .map(|i| self.nodes[i].clone())
            .collect();
        let values: Vec<Scalar> = (0..self.len())
            .filter(keep)
            .map(|i| self.values[i].clone())
            .collect();
        InterpolationTable::new(self.spec.clone(), nodes, values)
            .expect("subset of a valid table")
    }
}

/// W(x) = prod (x - x_j): monic, degree N, roots exactly the nodes.
pub fn nodes_poly(table: &InterpolationTable) -> Polynomial {
    let mut w = Polynomial::one(table.spec.clone());
    for x in &table.nodes {
        w = w.mul(&Polynomial::linear_root(x));
    }
    w
}

/// W'(x_j) for each j by the product form prod_{k != j} (x_j - x_k).
/// Distinct nodes make every output nonzero.
pub fn wprime_at_nodes(table: &InterpolationTable) -> Vec<Scalar> {
    table
        .nodes
        .iter()
        .enumerate()
        .map(|(j, xj)| {
            let mut acc = table.spec.one();
            for (k, xk) in table.nodes.iter().enumerate() {
                if k != j {
                    acc = acc.mul(&xj.sub(xk));
                }
            }
            acc
        })
        .collect()
}

fn weighted_power_sums(table: &InterpolationTable, weights: &[Scalar], upto: usize) -> Vec<Scalar> {
    let mut powers: Vec<Scalar> = vec![table.spec.one(); table.len()];
    let mut out = Vec::with_capacity(upto + 1);
    for _ in 0..=upto {
        let mut acc = table.spec.zero();
        for (p, w) in powers.iter().zip(weights) {
            acc = acc.add(&p.mul(w));
        }
        out.push(acc);
        for (p, x) in powers.iter_mut().zip(&table.nodes) {
            *p = p.mul(x);
        }
    }
    out
}

/// The sequence tau_0 .. tau_upto with tau_k = sum y_j x_j^k / W'(x_j).
/// Needs upto >= 1 (a generator sequence holds at least two entries).
pub fn tau_seq(table: &InterpolationTable, upto: usize) -> GeneratorSequence {
    let wp = wprime_at_nodes(table);
    let weights: Vec<Scalar> = table
        .values
        .iter()
        .zip(&wp)
        .map(|(y, w)| y.div(w).expect("W' values are nonzero"))
        .collect();
    GeneratorSequence::new(table.spec.clone(), weighted_power_sums(table, &weights, upto))
        .expect("upto >= 1 gives at least two entries")
}

/// The sequence tau-tilde_0 .. tau-tilde_upto with
/// tau-tilde_k = sum x_j^k / (y_j W'(x_j)). Needs upto >= 1.
pub fn tilde_tau_seq(
    table: &InterpolationTable,
    upto: usize,
) -> Result<GeneratorSequence, InterpError> {
    let rows = table.zero_value_rows();
    if !rows.is_empty() {
        return Err(InterpError::ZeroValueInTable { rows });
    }
    let wp = wprime_at_nodes(table);
    let weights: Vec<Scalar> = table
        .values
        .iter()
        .zip(&wp)
        .map(|(y, w)| y.mul(w).inverse().expect("y and W' are nonzero"))
        .collect();
    Ok(
        GeneratorSequence::new(table.spec.clone(), weighted_power_sums(table, &weights, upto))
            .expect("upto >= 1 gives at least two entries"),
    )
}

/// sigma_1 .. sigma_{N-1} with sigma_k = sum x_j^{N+k-1} / W'(x_j).
/// (The lower power sums sum x_j^k / W'(x_j) vanish for k <= N-2 and equal
/// 1 at k = N-1, so these are the first nontrivial ones.)
pub fn sigma_seq(table: &InterpolationTable) -> Vec<Scalar> {
    let n = table.len();
    let wp = wprime_at_nodes(table);
    let weights: Vec<Scalar> = wp
        .iter()
        .map(|w| w.inverse().expect("W' values are nonzero"))
        .collect();
    let sums = weighted_power_sums(table, &weights, 2 * n - 2);
    sums[n..].to_vec()
}

/// The unique polynomial of degree <= N-1 through the table, by summing
/// y_j W_j(x)/W'(x_j) with W_j = W/(x - x_j) obtained by exact deflation.
/// This is the reference the other two methods are checked against.
pub fn interpolate_lagrange(table: &InterpolationTable) -> Polynomial {
    let w = nodes_poly(table);
    let wp = wprime_at_nodes(table);
    let mut acc = Polynomial::zero(table.spec.clone());
    for ((x, y), wpj) in table.nodes.iter().zip(&table.values).zip(&wp) {
        if y.is_zero() {
            continue;
        }
        let wj = w.deflate(x).expect("nodes are roots of W");
        acc = acc.add(&wj.scale(&y.div(wpj).expect("W' values are nonzero")));
    }
    acc
}

/// Interpolation through the power-sum recursion: with descending
/// coefficients p_0 (at x^{N-1}) .. p_{N-1}, p_0 = tau_0 and
/// p_k = tau_k - (p_0 sigma_k + ... + p_{k-1} sigma_1).
pub fn interpolate_sigma_recursion(table: &InterpolationTable) -> Polynomial {
    let n = table.len();
    let tau = tau_seq(table, n - 1);
    let sigma = sigma_seq(table);
    let mut desc: Vec<Scalar> = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = tau.entries()[k].clone();
        for (i, p) in desc.iter().enumerate() {
            c = c.sub(&p.mul(&sigma[k - 1 - i]));
        }
        desc.push(c);
    }
    desc.reverse();
    Polynomial::new(table.spec.clone(), desc)
}

/// Interpolation as a single Hankel polynomial over the reciprocal-value
/// sequence: p(x) = (-1)^{N(N-1)/2} (prod y_j) P_{N-1}(x; {tau-tilde}),
/// with the ladder computed by the fast recursion.
pub fn interpolate_hankel(table: &InterpolationTable) -> Result<Polynomial, InterpError> {
    let n = table.len();
    let ttau = tilde_tau_seq(table, 2 * n - 3)?;
    let ladder = hankel_sequence_jj(&ttau, n - 1).expect("2(N-1) entries cover order N-1");
    let mut prod = table.spec.one();
    for y in &table.values {
        prod = prod.mul(y);
    }
    let sign = table.spec.sign(n * (n - 1) / 2);
    Ok(ladder[n - 2].poly().scale(&sign.mul(&prod)))
}
