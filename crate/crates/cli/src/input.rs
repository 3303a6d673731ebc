//! File ingestion: JSON and CSV parsing, field resolution, scalar reading
//! with the bit-size guard, and mapping of structural problems onto exit
//! codes. Exit 2 marks anything wrong with the request or the files; the
//! mathematics only gets to fail later, with exit 1.

use std::path::Path;

use num_bigint::BigUint;
use serde::Deserialize;

use hankel_interp::{
    scalar_parse, FieldSpec, GeneratorSequence, InterpolationTable, Polynomial,
    SampleRatioTable, Scalar, TableError,
};

use crate::output::Failure;

pub const DEFAULT_MAX_BITS: u64 = 1_000_000;

/// Bit cap for every scalar read or written, from HANKEL_INTERP_MAX_BITS.
pub fn max_bits() -> Result<u64, Failure> {
    match std::env::var("HANKEL_INTERP_MAX_BITS") {
        Err(_) => Ok(DEFAULT_MAX_BITS),
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            Failure::input(
                "bad_env",
                format!("HANKEL_INTERP_MAX_BITS must be a positive integer, got {:?}", text),
            )
        }),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawField {
    Name(String),
    Prime { prime: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSequence {
    field: Option<RawField>,
    entries: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    field: Option<RawField>,
    nodes: Vec<String>,
    values: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRatioTable {
    field: Option<RawField>,
    nodes: Vec<String>,
    ratios: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolynomial {
    field: Option<RawField>,
    coefficients: Vec<String>,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input("io_failure", format!("cannot read {}: {}", path.display(), e)))
}

fn malformed(path: &Path, detail: impl std::fmt::Display) -> Failure {
    Failure::input("malformed_file", format!("{}: {}", path.display(), detail))
}

/// A field named on the command line: "rational" or a prime modulus.
fn field_from_arg(text: &str) -> Result<FieldSpec, Failure> {
    if text.eq_ignore_ascii_case("rational") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = text
        .parse::<BigUint>()
        .map_err(|_| Failure::input("bad_field", format!("--field must be \"rational\" or a prime modulus, got {:?}", text)))?;
    FieldSpec::prime_field(digits)
        .map_err(|e| Failure::input("bad_field", format!("--field {}: {}", text, e)))
}

fn field_from_file(raw: RawField, path: &Path) -> Result<FieldSpec, Failure> {
    match raw {
        RawField::Name(name) if name == "rational" => Ok(FieldSpec::Rationals),
        RawField::Name(name) => Err(malformed(
            path,
            format!("field must be \"rational\" or {{\"prime\": \"...\"}}, got {:?}", name),
        )),
        RawField::Prime { prime } => {
            let digits = prime
                .parse::<BigUint>()
                .map_err(|_| malformed(path, format!("prime modulus {:?} is not a number", prime)))?;
            FieldSpec::prime_field(digits)
                .map_err(|e| malformed(path, format!("prime modulus {}: {}", prime, e)))
        }
    }
}

/// The file's own field wins only when the flag agrees or is absent;
/// a contradiction is refused rather than silently resolved.
fn resolve_field(
    cli: Option<&str>,
    file: Option<RawField>,
    path: &Path,
) -> Result<FieldSpec, Failure> {
    let from_cli = cli.map(field_from_arg).transpose()?;
    let from_file = file.map(|f| field_from_file(f, path)).transpose()?;
    match (from_cli, from_file) {
        (Some(a), Some(b)) if a != b => Err(Failure::input(
            "field_mismatch",
            format!("--field disagrees with the field declared in {}", path.display()),
        )),
        (_, Some(b)) => Ok(b),
        (Some(a), None) => Ok(a),
        (None, None) => Ok(FieldSpec::Rationals),
    }
}

/// Parses scalars against one field, enforcing the bit cap and counting
/// values a prime field silently rewrote (reduction, unreduced fractions).
struct ScalarReader<'a> {
    spec: &'a FieldSpec,
    cap: u64,
    path: &'a Path,
    rewritten: usize,
    total: usize,
}

impl<'a> ScalarReader<'a> {
    fn new(spec: &'a FieldSpec, cap: u64, path: &'a Path) -> ScalarReader<'a> {
        ScalarReader { spec, cap, path, rewritten: 0, total: 0 }
    }

    fn parse(&mut self, text: &str) -> Result<Scalar, Failure> {
        let s = scalar_parse(text, self.spec)
            .map_err(|e| malformed(self.path, format!("scalar {:?}: {}", text, e)))?;
        if s.bit_size() > self.cap {
            return Err(Failure::input(
                "input_too_large",
                format!(
                    "{}: scalar {:?} exceeds the {}-bit cap (HANKEL_INTERP_MAX_BITS)",
                    self.path.display(),
                    text,
                    self.cap
                ),
            ));
        }
        self.total += 1;
        if self.spec.is_prime_field() && s.to_string() != text.trim() {
            self.rewritten += 1;
        }
        Ok(s)
    }

    fn parse_all(&mut self, texts: &[String]) -> Result<Vec<Scalar>, Failure> {
        texts.iter().map(|t| self.parse(t)).collect()
    }

    /// One stderr line per file, only when a prime field changed something.
    fn notice(&self) {
        if self.rewritten > 0 {
            let modulus = self.spec.modulus().expect("prime field").clone();
            eprintln!(
                "notice: {} of {} scalars in {} normalized modulo {}",
                self.rewritten,
                self.total,
                self.path.display(),
                modulus
            );
        }
    }
}

fn table_error(e: TableError, path: &Path) -> Failure {
    match e {
        TableError::DuplicateNodes { first, second } => Failure::input(
            "duplicate_nodes",
            format!("{}: rows {} and {} hold the same node", path.display(), first, second),
        ),
        other => malformed(path, other),
    }
}

pub fn load_sequence(
    path: &Path,
    cli_field: Option<&str>,
    cap: u64,
) -> Result<GeneratorSequence, Failure> {
    let text = read(path)?;
    let raw: RawSequence =
        serde_json::from_str(&text).map_err(|e| malformed(path, e))?;
    let spec = resolve_field(cli_field, raw.field, path)?;
    let mut reader = ScalarReader::new(&spec, cap, path);
    let entries = reader.parse_all(&raw.entries)?;
    reader.notice();
    GeneratorSequence::new(spec, entries).map_err(|e| malformed(path, e))
}

pub fn load_table(
    path: &Path,
    cli_field: Option<&str>,
    cap: u64,
) -> Result<InterpolationTable, Failure> {
    let text = read(path)?;
    let (spec, raw_nodes, raw_values) = if text.trim_start().starts_with('{') {
        let raw: RawTable = serde_json::from_str(&text).map_err(|e| malformed(path, e))?;
        (resolve_field(cli_field, raw.field, path)?, raw.nodes, raw.values)
    } else {
        let (nodes, values) = split_csv(&text, path)?;
        (resolve_field(cli_field, None, path)?, nodes, values)
    };
    let mut reader = ScalarReader::new(&spec, cap, path);
    let nodes = reader.parse_all(&raw_nodes)?;
    let values = reader.parse_all(&raw_values)?;
    reader.notice();
    InterpolationTable::new(spec, nodes, values).map_err(|e| table_error(e, path))
}

/// Two columns x,y per row; an unparseable first row is taken as a header.
fn split_csv(text: &str, path: &Path) -> Result<(Vec<String>, Vec<String>), Failure> {
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != 2 {
            return Err(malformed(path, format!("line {}: expected two columns x,y", i + 1)));
        }
        if nodes.is_empty() && i == 0 && !looks_like_scalar(cells[0]) {
            continue;
        }
        nodes.push(cells[0].to_string());
        values.push(cells[1].to_string());
    }
    if nodes.is_empty() {
        return Err(malformed(path, "no data rows"));
    }
    Ok((nodes, values))
}

fn looks_like_scalar(cell: &str) -> bool {
    !cell.is_empty()
        && cell.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '/')
        && cell.chars().any(|c| c.is_ascii_digit())
}

pub fn load_ratio_table(
    path: &Path,
    cli_field: Option<&str>,
    cap: u64,
    num_degree: usize,
    den_degree: usize,
) -> Result<SampleRatioTable, Failure> {
    let text = read(path)?;
    let raw: RawRatioTable =
        serde_json::from_str(&text).map_err(|e| malformed(path, e))?;
    let spec = resolve_field(cli_field, raw.field, path)?;
    let mut reader = ScalarReader::new(&spec, cap, path);
    let nodes = reader.parse_all(&raw.nodes)?;
    let ratios = reader.parse_all(&raw.ratios)?;
    reader.notice();
    SampleRatioTable::new(spec, nodes, ratios, num_degree, den_degree)
        .map_err(|e| malformed(path, e))
}

pub fn load_polynomial(
    path: &Path,
    cli_field: Option<&str>,
    cap: u64,
) -> Result<Polynomial, Failure> {
    let text = read(path)?;
    let raw: RawPolynomial =
        serde_json::from_str(&text).map_err(|e| malformed(path, e))?;
    let spec = resolve_field(cli_field, raw.field, path)?;
    let mut reader = ScalarReader::new(&spec, cap, path);
    let coeffs = reader.parse_all(&raw.coefficients)?;
    reader.notice();
    Ok(Polynomial::new(spec, coeffs))
}
