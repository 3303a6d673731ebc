//! Payload rendering. serde_json maps are BTree-backed, so building plain
//! Value trees already yields sorted keys and byte-stable output.

use serde_json::{json, Map, Value};

use hankel_interp::{FieldSpec, Polynomial, Scalar};

/// A failed run: machine-readable code, human message, process exit status.
pub struct Failure {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
}

impl Failure {
    /// Bad request or bad file: exit 2.
    pub fn input(code: &'static str, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into(), exit: 2 }
    }

    /// The mathematics refused valid-looking input: exit 1.
    pub fn domain(code: &'static str, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into(), exit: 1 }
    }
}

pub fn emit_error(code: &str, message: &str) {
    let payload = json!({ "code": code, "message": message });
    eprintln!("{}", serde_json::to_string_pretty(&payload).expect("static shape"));
}

pub fn field_json(spec: &FieldSpec) -> Value {
    match spec.modulus() {
        None => Value::String("rational".into()),
        Some(p) => json!({ "prime": p.to_string() }),
    }
}

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

/// Ascending coefficient array in canonical scalar text.
pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_json).collect())
}

/// Descending-power human notation: "2*x^6 - 4*x^5 + 2*x^3 - 6*x^2 - 8".
/// Fractions are parenthesized so the precedence reads correctly.
pub fn poly_display(p: &Polynomial) -> String {
    let coeffs = p.coeffs();
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (sign, magnitude) = match text.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", text),
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let coeff = if magnitude.contains('/') { format!("({})", magnitude) } else { magnitude };
        match i {
            0 => out.push_str(&coeff),
            _ => {
                if coeff == "1" {
                    out.push('x');
                } else {
                    out.push_str(&coeff);
                    out.push_str("*x");
                }
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Every scalar that will be printed must respect the bit cap; symbolic
/// blowup surfaces as a clear domain failure instead of a gigantic payload.
pub fn ensure_bits<'a>(
    scalars: impl IntoIterator<Item = &'a Scalar>,
    cap: u64,
) -> Result<(), Failure> {
    for s in scalars {
        if s.bit_size() > cap {
            return Err(Failure::domain(
                "scalar_too_large",
                format!(
                    "a computed scalar needs {} bits, above the {}-bit cap (HANKEL_INTERP_MAX_BITS)",
                    s.bit_size(),
                    cap
                ),
            ));
        }
    }
    Ok(())
}

pub fn object(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
