//! Detection, location, and correction of corrupted rows in a redundant
//! value table.
//!
//! If a table of N rows was produced by a polynomial of degree n < N-1 and
//! at most E rows were altered, the Hankel ladders over the two derived
//! sequences carry the damage report: over {tau} the order-E polynomial is
//! proportional to the error locator prod (x - x_e), and over {tau-tilde}
//! the order-(n+E) polynomial is proportional to locator * p while the
//! orders strictly between n+E and N-E-1 vanish identically.
//!
//! The decoder searches E upward from zero. A candidate E is accepted only
//! after three independent checks: the order-E ladder polynomial has exact
//! degree E with all E roots among the table nodes, re-interpolation of the
//! remaining rows stays within the degree bound, and (when the reciprocal
//! sequence exists) the order-(d+E) polynomial over {tau-tilde} is a nonzero
//! multiple of locator * recovered. Node roots are found by evaluating at
//! the N table nodes only; no general root finding is attempted.

use std::fmt;

use crate::field::Scalar;
use crate::hankel::{hankel_sequence_jj, HankelPolynomial};
use crate::interp::{interpolate_lagrange, tau_seq, tilde_tau_seq, InterpolationTable};
use crate::poly::Polynomial;

/// Requested generating degree: supplied by the caller or detected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeSpec {
    Auto,
    Fixed(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeScan {
    /// Least degree consistent with the whole (uncorrupted) table.
    Degree(usize),
    /// The table uses its full degree-(N-1) freedom; no redundancy present.
    NotRedundant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorrectionStatus {
    Clean,
    Corrected,
    Undecodable,
}

impl fmt::Display for CorrectionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorrectionStatus::Clean => write!(f, "Clean"),
            CorrectionStatus::Corrected => write!(f, "Corrected"),
            CorrectionStatus::Undecodable => write!(f, "Undecodable"),
        }
    }
}

/// Shape classification of one ladder polynomial, for the evidence trail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HankelClass {
    /// Every coefficient slot is zero.
    Zero,
    /// Nonzero scalar multiple of the nearest previous nonzero ladder
    /// polynomial (order 0 meaning the constant 1).
    Proportional { order: usize },
    /// Trimmed degree equals the order.
    FullDegree,
    /// Nonzero, degree below order, and not proportional to the previous
    /// nonzero entry.
    Deficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderEntry {
    pub order: usize,
    pub class: HankelClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionReport {
    pub status: CorrectionStatus,
    /// Operative degree bound: the requested degree, or the detected degree
    /// in auto mode. Absent when undecodable.
    pub degree: Option<usize>,
    pub error_count: usize,
    /// Nodes of the located corrupt rows, in table order.
    pub error_nodes: Vec<Scalar>,
    /// Monic product of (x - e) over the error nodes; 1 when clean.
    pub locator: Option<Polynomial>,
    pub recovered: Option<Polynomial>,
    /// Classifications of the ladder over {tau}, orders 1..=E_max.
    pub tau_diagnostics: Vec<LadderEntry>,
    /// Classifications of the ladder over {tau-tilde}, orders 1..=N-1;
    /// empty when a zero value makes that sequence undefined.
    pub ttau_diagnostics: Vec<LadderEntry>,
    /// Further (error count, degree) pairs that also passed every check,
    /// beyond the minimal one reported above.
    pub alternates: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorrectError {
    /// Fixed degree n leaves no redundant rows (n >= N-1).
    InsufficientRedundancy { degree: usize, rows: usize },
    /// Auto mode needs the reciprocal sequence; 1-based rows with y = 0.
    ZeroValueInTable { rows: Vec<usize> },
}

impl fmt::Display for CorrectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorrectError::InsufficientRedundancy { degree, rows } => write!(
                f,
                "degree {} admits no redundancy in a {}-row table",
                degree, rows
            ),
            CorrectError::ZeroValueInTable { rows } => {
                write!(f, "table has zero values at rows {:?}", rows)
            }
        }
    }
}

impl std::error::Error for CorrectError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocatorError {
    /// No error count within the redundancy budget produces a locator with
    /// full degree and node roots.
    NoConsistentLocator,
}

impl fmt::Display for LocatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocatorError::NoConsistentLocator => write!(f, "no consistent error locator"),
        }
    }
}

impl std::error::Error for LocatorError {}

/// Classifies ladder polynomials against the chain of previous nonzero ones.
fn classify_ladder(ladder: &[HankelPolynomial]) -> Vec<LadderEntry> {
    let mut out = Vec::with_capacity(ladder.len());
    // Order 0 is the constant 1.
    let mut prev_nonzero: (usize, Option<Polynomial>) = (0, None);
    for h in ladder {
        let p = h.poly();
        let class = if p.is_zero() {
            HankelClass::Zero
        } else {
            let against = match &prev_nonzero.1 {
                Some(q) => q.clone(),
                None => Polynomial::one(p.spec().clone()),
            };
            let class = if p.is_proportional_to(&against) {
                HankelClass::Proportional { order: prev_nonzero.0 }
            } else if p.degree() == Some(h.order()) {
                HankelClass::FullDegree
            } else {
                HankelClass::Deficient
            };
            prev_nonzero = (h.order(), Some(p));
            class
        };
        out.push(LadderEntry { order: h.order(), class });
    }
    out
}

/// Scans the ladder over {tau-tilde} for the least degree n whose trailing
/// structure is that of an uncorrupted table: the orders n+1 .. N-2 vanish
/// identically and the order-n polynomial is a nonzero multiple of the
/// order-(N-1) one. All values must be nonzero.
pub fn degree_scan(table: &InterpolationTable) -> Result<DegreeScan, CorrectError> {
    let n_rows = table.len();
    let ttau = tilde_tau_seq(table, 2 * n_rows - 3)
        .map_err(|e| match e {
            crate::interp::InterpError::ZeroValueInTable { rows } => {
                CorrectError::ZeroValueInTable { rows }
            }
        })?;
    let ladder = hankel_sequence_jj(&ttau, n_rows - 1).expect("entries cover order N-1");
    let top = ladder[n_rows - 2].poly(); // order N-1; nonzero since all y != 0
    for n in 0..n_rows - 1 {
        let band_clear =
            (n + 1..=n_rows - 2).all(|k| ladder[k - 1].is_identically_zero());
        if !band_clear {
            continue;
        }
        let anchor = if n == 0 {
            Polynomial::one(table.spec().clone())
        } else {
            ladder[n - 1].poly()
        };
        if anchor.is_proportional_to(&top) {
            return Ok(DegreeScan::Degree(n));
        }
    }
    Ok(DegreeScan::NotRedundant)
}

/// Shape of an accepted correction candidate.
struct Candidate {
    error_count: usize,
    degree: usize,
    drop: Vec<usize>, // 0-based rows
    locator: Polynomial,
    recovered: Polynomial,
}

/// Degree-E locator extraction from the ladder over {tau}: exact degree E
/// and exactly E roots among the table nodes. Returns the 0-based rows of
/// the roots and the monic locator.
fn locator_candidate(
    table: &InterpolationTable,
    h: &HankelPolynomial,
) -> Option<(Vec<usize>, Polynomial)> {
    let e = h.order();
    let p = h.poly();
    if p.degree() != Some(e) {
        return None;
    }
    let drop: Vec<usize> = table
        .nodes()
        .iter()
        .enumerate()
        .filter(|(_, x)| p.eval(x).is_zero())
        .map(|(i, _)| i)
        .collect();
    if drop.len() != e {
        return None;
    }
    Some((drop, p.monic().expect("degree checked nonzero")))
}

/// Error-count search from the {tau} side alone, without re-interpolation:
/// E = 0 is accepted when the table already fits degree n, and E >= 1 when
/// the order-E ladder polynomial has exact degree E with E node roots.
/// Intended for n < N-2 (otherwise only E = 0 is in budget).
pub fn locator_from_tau(
    table: &InterpolationTable,
    n: usize,
) -> Result<(usize, Polynomial), LocatorError> {
    let n_rows = table.len();
    let full = interpolate_lagrange(table);
    if full.degree().map_or(true, |d| d <= n) {
        return Ok((0, Polynomial::one(table.spec().clone())));
    }
    let e_max = n_rows.saturating_sub(n + 1) / 2;
    if e_max >= 1 {
        let tau = tau_seq(table, 2 * e_max - 1);
        let ladder = hankel_sequence_jj(&tau, e_max).expect("entries cover E_max");
        for h in &ladder {
            if let Some((_, locator)) = locator_candidate(table, h) {
                return Ok((h.order(), locator));
            }
        }
    }
    Err(LocatorError::NoConsistentLocator)
}

/// Full validation of one error count E.
///
/// `bound` is the degree cap for the recovered polynomial: the fixed n, or
/// N-2E-1 in auto mode. The cross-check against `ttau_ladder` demands that
/// the order-(d+E) polynomial over {tau-tilde} (d the recovered degree) be a
/// nonzero multiple of locator * recovered; it is skipped when that ladder
/// is unavailable or the recovered polynomial is identically zero.
fn validate_candidate(
    table: &InterpolationTable,
    h: Option<&HankelPolynomial>, // None encodes E = 0
    bound: usize,
    report_degree_fixed: Option<usize>,
    ttau_ladder: Option<&[HankelPolynomial]>,
) -> Option<Candidate> {
    let (drop, locator) = match h {
        None => (Vec::new(), Polynomial::one(table.spec().clone())),
        Some(h) => locator_candidate(table, h)?,
    };
    let e = drop.len();
    let sub = if e == 0 { table.clone() } else { table.without_rows(&drop) };
    let recovered = interpolate_lagrange(&sub);
    if recovered.degree().map_or(false, |d| d > bound) {
        return None;
    }
    if e > 0 {
        if let (Some(ladder), Some(d)) = (ttau_ladder, recovered.degree()) {
            let product = locator.mul(&recovered);
            if !ladder[d + e - 1].poly().is_proportional_to(&product) {
                return None;
            }
        }
    }
    Some(Candidate {
        error_count: e,
        degree: report_degree_fixed
            .unwrap_or_else(|| recovered.degree().unwrap_or(0)),
        drop,
        locator,
        recovered,
    })
}

/// Locates and repairs up to `max_errors` corrupted rows (default: as many
/// as the redundancy budget allows). With a fixed degree n the table may
/// contain zero values; auto mode detects the degree and needs all values
/// nonzero. The minimal passing error count wins; any larger error counts
/// that also pass every check are listed as alternates.
pub fn correct_table(
    table: &InterpolationTable,
    degree: DegreeSpec,
    max_errors: Option<usize>,
) -> Result<CorrectionReport, CorrectError> {
    let n_rows = table.len();

    let ttau_ladder: Option<Vec<HankelPolynomial>> = match degree {
        DegreeSpec::Auto => {
            let rows = table.zero_value_rows();
            if !rows.is_empty() {
                return Err(CorrectError::ZeroValueInTable { rows });
            }
            let ttau = tilde_tau_seq(table, 2 * n_rows - 3).expect("no zero values");
            Some(hankel_sequence_jj(&ttau, n_rows - 1).expect("entries cover order N-1"))
        }
        DegreeSpec::Fixed(n) => {
            if n >= n_rows - 1 {
                return Err(CorrectError::InsufficientRedundancy { degree: n, rows: n_rows });
            }
            if table.zero_value_rows().is_empty() {
                let ttau = tilde_tau_seq(table, 2 * n_rows - 3).expect("no zero values");
                Some(hankel_sequence_jj(&ttau, n_rows - 1).expect("entries cover order N-1"))
            } else {
                None
            }
        }
    };

    let budget = match degree {
        DegreeSpec::Fixed(n) => (n_rows - 1 - n) / 2,
        DegreeSpec::Auto => (n_rows - 1) / 2,
    };
    let e_max = max_errors.map_or(budget, |m| m.min(budget));

    let tau_ladder: Vec<HankelPolynomial> = if e_max >= 1 {
        let tau = tau_seq(table, 2 * e_max - 1);
        hankel_sequence_jj(&tau, e_max).expect("entries cover E_max")
    } else {
        Vec::new()
    };

    let mut chosen: Option<Candidate> = None;
    let mut alternates: Vec<(usize, usize)> = Vec::new();
    for e in 0..=e_max {
        let h = if e == 0 { None } else { Some(&tau_ladder[e - 1]) };
        let (bound, fixed) = match degree {
            DegreeSpec::Fixed(n) => (n, Some(n)),
            // E = 0 only asks for some redundancy; E >= 1 needs the
            // correction bound degree < N - 2E.
            DegreeSpec::Auto if e == 0 => (n_rows - 2, None),
            DegreeSpec::Auto => (n_rows - 2 * e - 1, None),
        };
        if let Some(c) =
            validate_candidate(table, h, bound, fixed, ttau_ladder.as_deref())
        {
            match &chosen {
                None => chosen = Some(c),
                Some(_) => alternates.push((c.error_count, c.degree)),
            }
        }
    }

    let tau_diagnostics = classify_ladder(&tau_ladder);
    let ttau_diagnostics = ttau_ladder.as_deref().map_or_else(Vec::new, classify_ladder);

    Ok(match chosen {
        Some(c) => {
            let status = if c.error_count == 0 {
                CorrectionStatus::Clean
            } else {
                CorrectionStatus::Corrected
            };
            CorrectionReport {
                status,
                degree: Some(c.degree),
                error_count: c.error_count,
                error_nodes: c.drop.iter().map(|&i| table.nodes()[i].clone()).collect(),
                locator: Some(c.locator),
                recovered: Some(c.recovered),
                tau_diagnostics,
                ttau_diagnostics,
                alternates,
            }
        }
        None => CorrectionReport {
            status: CorrectionStatus::Undecodable,
            degree: None,
            error_count: 0,
            error_nodes: Vec::new(),
            locator: None,
            recovered: None,
            tau_diagnostics,
            ttau_diagnostics,
            alternates,
        },
    })
}
