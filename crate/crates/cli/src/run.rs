//! Subcommand dispatch: each arm loads inputs, runs one library operation,
//! and shapes the JSON payload plus the process exit status.

use serde_json::{json, Value};

use hankel_interp::{
    correct_table, hankel_poly_naive, hankel_sequence_jj, interpolate_hankel,
    interpolate_lagrange, interpolate_sigma_recursion, rational_family, rational_interpolate,
    resultant_minors_from_samples, sylvester_resultant, CorrectError, CorrectionStatus,
    DegreeSpec, HankelError, HankelPolynomial, InterpError, InterpolationTable, Polynomial,
    RationalError, RationalInterpolant, ResultantError, Scalar,
};

use crate::input;
use crate::output::{
    emit_error, ensure_bits, field_json, object, poly_display, poly_json, scalar_json, Failure,
};
use crate::{Cli, Command, Method};

pub fn execute(cli: Cli) -> i32 {
    match dispatch(&cli) {
        Ok((payload, code)) => {
            let text = serde_json::to_string_pretty(&payload).expect("value tree") + "\n";
            match &cli.output {
                None => {
                    print!("{}", text);
                    code
                }
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => code,
                    Err(e) => {
                        emit_error(
                            "io_failure",
                            &format!("cannot write {}: {}", path.display(), e),
                        );
                        2
                    }
                },
            }
        }
        Err(f) => {
            emit_error(f.code, &f.message);
            f.exit
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(Value, i32), Failure> {
    let cap = input::max_bits()?;
    let field = cli.field.as_deref();
    match &cli.cmd {
        Command::Hankel { seq, kmax, naive } => {
            let seq = input::load_sequence(seq, field, cap)?;
            let kmax = kmax.unwrap_or_else(|| seq.max_poly_order());
            let ladder: Vec<HankelPolynomial> = if *naive {
                (1..=kmax)
                    .map(|k| hankel_poly_naive(&seq, k))
                    .collect::<Result<_, _>>()
                    .map_err(hankel_error)?
            } else {
                hankel_sequence_jj(&seq, kmax).map_err(hankel_error)?
            };
            for h in &ladder {
                ensure_bits(h.coeffs(), cap)?;
            }
            let orders: Vec<Value> = ladder
                .iter()
                .map(|h| {
                    let mut entries = vec![
                        ("coefficients", poly_json(&h.poly())),
                        ("minor", scalar_json(h.leading_minor())),
                        ("order", json!(h.order())),
                    ];
                    if cli.pretty {
                        entries.push(("display", json!(poly_display(&h.poly()))));
                    }
                    object(entries)
                })
                .collect();
            let payload = object(vec![
                ("field", field_json(seq.spec())),
                ("kmax", json!(kmax)),
                ("method", json!(if *naive { "naive" } else { "recursive" })),
                ("orders", Value::Array(orders)),
            ]);
            Ok((payload, 0))
        }

        Command::Interp { table, method } => {
            let t = input::load_table(table, field, cap)?;
            let (p, name) = match method {
                Method::Lagrange => (interpolate_lagrange(&t), "lagrange"),
                Method::Sigma => (interpolate_sigma_recursion(&t), "sigma"),
                Method::Hankel => {
                    (interpolate_hankel(&t).map_err(interp_error)?, "hankel")
                }
            };
            ensure_bits(p.coeffs(), cap)?;
            let mut entries = vec![
                ("coefficients", poly_json(&p)),
                ("degree", degree_json(&p)),
                ("field", field_json(t.spec())),
                ("method", json!(name)),
            ];
            if cli.pretty {
                entries.push(("display", json!(poly_display(&p))));
            }
            Ok((object(entries), 0))
        }

        Command::Correct { table, degree, max_errors } => {
            let t = input::load_table(table, field, cap)?;
            let spec = degree.map(DegreeSpec::Fixed).unwrap_or(DegreeSpec::Auto);
            let report = correct_table(&t, spec, *max_errors).map_err(correct_error)?;
            let errors = error_rows(&t, &report.error_nodes, report.recovered.as_ref(), cap)?;
            if let Some(p) = &report.recovered {
                ensure_bits(p.coeffs(), cap)?;
            }
            let mut entries = vec![
                ("degree", report.degree.map_or(Value::Null, |d| json!(d))),
                ("errors", errors),
                ("field", field_json(t.spec())),
                (
                    "polynomial",
                    report.recovered.as_ref().map_or(Value::Null, poly_json),
                ),
                ("status", json!(report.status.to_string())),
            ];
            if cli.pretty {
                if let Some(p) = &report.recovered {
                    entries.push(("display", json!(poly_display(p))));
                }
            }
            let code = if report.status == CorrectionStatus::Undecodable { 1 } else { 0 };
            Ok((object(entries), code))
        }

        Command::Rational { table, num_degree, all } => {
            let t = input::load_table(table, field, cap)?;
            if *all {
                let family = rational_family(&t).map_err(rational_error)?;
                let rendered: Vec<Value> = family
                    .iter()
                    .map(|r| interpolant_json(r, cli.pretty, cap))
                    .collect::<Result<_, _>>()?;
                let payload = object(vec![
                    ("field", field_json(t.spec())),
                    ("interpolants", Value::Array(rendered)),
                ]);
                return Ok((payload, 0));
            }
            let n = num_degree.ok_or_else(|| {
                Failure::input("usage", "rational needs --num-degree N or --all")
            })?;
            let r = rational_interpolate(&t, n).map_err(rational_error)?;
            let mut payload = interpolant_json(&r, cli.pretty, cap)?;
            if let Value::Object(map) = &mut payload {
                map.insert("field".into(), field_json(t.spec()));
            }
            let code = if r.valid && !r.degenerate { 0 } else { 1 };
            Ok((payload, code))
        }

        Command::Resultant { table, num_degree, den_degree, p, q } => {
            match (table, p, q) {
                (Some(path), None, None) => {
                    let (n, m) = (num_degree.unwrap(), den_degree.unwrap());
                    let samples = input::load_ratio_table(path, field, cap, n, m)?;
                    let minors = resultant_minors_from_samples(&samples);
                    ensure_bits(
                        [&minors.h_m_tau, &minors.h_m1_tau, &minors.h_n_ttau, &minors.h_n1_ttau],
                        cap,
                    )?;
                    let payload = object(vec![
                        ("den_degree", json!(m)),
                        ("field", field_json(samples.spec())),
                        (
                            "minors",
                            object(vec![
                                ("h_m1_tau", scalar_json(&minors.h_m1_tau)),
                                ("h_m_tau", scalar_json(&minors.h_m_tau)),
                                ("h_n1_ttau", scalar_json(&minors.h_n1_ttau)),
                                ("h_n_ttau", scalar_json(&minors.h_n_ttau)),
                            ]),
                        ),
                        ("num_degree", json!(n)),
                        ("resultant_vanishes", json!(minors.shared_root())),
                    ]);
                    Ok((payload, 0))
                }
                (None, Some(p_path), Some(q_path)) => {
                    if num_degree.is_some() || den_degree.is_some() {
                        return Err(Failure::input(
                            "usage",
                            "--num-degree/--den-degree belong to sample mode (--table)",
                        ));
                    }
                    let p = input::load_polynomial(p_path, field, cap)?;
                    let q = input::load_polynomial(q_path, field, cap)?;
                    if p.spec() != q.spec() {
                        return Err(Failure::input(
                            "field_mismatch",
                            "the two polynomial files declare different fields",
                        ));
                    }
                    let res = sylvester_resultant(&p, &q).map_err(resultant_error)?;
                    ensure_bits([&res], cap)?;
                    let payload = object(vec![
                        ("field", field_json(p.spec())),
                        ("p", poly_json(&p)),
                        ("q", poly_json(&q)),
                        ("resultant", scalar_json(&res)),
                        ("resultant_vanishes", json!(res.is_zero())),
                    ]);
                    Ok((payload, 0))
                }
                _ => Err(Failure::input(
                    "usage",
                    "resultant needs either --table with --num-degree/--den-degree, or --p and --q",
                )),
            }
        }
    }
}

fn degree_json(p: &Polynomial) -> Value {
    p.degree().map_or(Value::Null, |d| json!(d))
}

/// One object per corrupted row: the node, the value the table held, and
/// the value the recovered polynomial demands.
fn error_rows(
    t: &InterpolationTable,
    nodes: &[Scalar],
    recovered: Option<&Polynomial>,
    cap: u64,
) -> Result<Value, Failure> {
    let mut rows = Vec::new();
    for node in nodes {
        let idx = t
            .nodes()
            .iter()
            .position(|x| x == node)
            .expect("reported nodes come from the table");
        let corrected = recovered.expect("corrections imply a recovered polynomial").eval(node);
        ensure_bits([&corrected], cap)?;
        rows.push(object(vec![
            ("corrected", scalar_json(&corrected)),
            ("given", scalar_json(&t.values()[idx])),
            ("node", scalar_json(node)),
        ]));
    }
    Ok(Value::Array(rows))
}

fn interpolant_json(r: &RationalInterpolant, pretty: bool, cap: u64) -> Result<Value, Failure> {
    ensure_bits(r.numerator.coeffs().iter().chain(r.denominator.coeffs()), cap)?;
    let mut entries = vec![
        ("degenerate", json!(r.degenerate)),
        ("denominator", poly_json(&r.denominator)),
        (
            "failure_nodes",
            Value::Array(r.failure_nodes.iter().map(scalar_json).collect()),
        ),
        ("m", json!(r.m)),
        ("n", json!(r.n)),
        ("numerator", poly_json(&r.numerator)),
        ("valid", json!(r.valid)),
    ];
    if pretty {
        entries.push((
            "display",
            json!(format!("({}) / ({})", poly_display(&r.numerator), poly_display(&r.denominator))),
        ));
    }
    Ok(object(entries))
}

fn hankel_error(e: HankelError) -> Failure {
    match e {
        HankelError::SequenceTooShort { .. } => Failure::input("sequence_too_short", e.to_string()),
        HankelError::MixedField => Failure::input("field_mismatch", e.to_string()),
    }
}

fn interp_error(e: InterpError) -> Failure {
    match e {
        InterpError::ZeroValueInTable { .. } => Failure::domain("zero_value", e.to_string()),
    }
}

fn correct_error(e: CorrectError) -> Failure {
    match e {
        CorrectError::InsufficientRedundancy { .. } => {
            Failure::input("insufficient_redundancy", e.to_string())
        }
        CorrectError::ZeroValueInTable { .. } => Failure::domain("zero_value", e.to_string()),
    }
}

fn rational_error(e: RationalError) -> Failure {
    match e {
        RationalError::ZeroValueInTable { .. } => Failure::domain("zero_value", e.to_string()),
        RationalError::DegreeOutOfRange { .. } => {
            Failure::input("degree_out_of_range", e.to_string())
        }
        RationalError::TableTooLargeForOracle { .. } => {
            Failure::input("table_too_large", e.to_string())
        }
    }
}

fn resultant_error(e: ResultantError) -> Failure {
    match e {
        ResultantError::MixedFields => Failure::input("field_mismatch", e.to_string()),
        other => Failure::input("degenerate_polynomial", other.to_string()),
    }
}
