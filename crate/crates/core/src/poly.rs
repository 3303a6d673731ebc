//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! Coefficients are stored in ascending power order and kept trimmed: the
//! leading coefficient of a nonzero polynomial is never zero, and the zero
//! polynomial is the empty list with degree `None`.

use std::fmt;

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    spec: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    /// Trims trailing zeros. All coefficients must belong to `spec`.
    pub fn new(spec: FieldSpec, mut coeffs: Vec<Scalar>) -> Polynomial {
        debug_assert!(coeffs.iter().all(|c| c.spec() == spec), "mixed-field coefficients");
        while coeffs.last().map_or(false, Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { spec, coeffs }
    }

    pub fn zero(spec: FieldSpec) -> Polynomial {
        Polynomial { spec, coeffs: Vec::new() }
    }

    pub fn one(spec: FieldSpec) -> Polynomial {
        let one = spec.one();
        Polynomial { spec, coeffs: vec![one] }
    }

    pub fn constant(c: Scalar) -> Polynomial {
        Polynomial::new(c.spec(), vec![c])
    }

    /// x - root
    pub fn linear_root(root: &Scalar) -> Polynomial {
        let spec = root.spec();
        Polynomial { spec: spec.clone(), coeffs: vec![root.neg(), spec.one()] }
    }

    /// Convenience constructor from small integers, ascending order.
    pub fn from_i64(spec: &FieldSpec, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(spec.clone(), coeffs.iter().map(|&c| spec.from_i64(c)).collect())
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Ascending coefficients, trimmed; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Coefficient of x^i, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::new(self.spec.clone(), out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.spec.clone());
        }
        let mut out = vec![self.spec.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(self.spec.clone(), out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.spec.clone());
        }
        Polynomial {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplication by x^k.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.spec.zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Polynomial { spec: self.spec.clone(), coeffs: out }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(self.spec.clone());
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&self.spec.from_i64(i as i64)));
        }
        Polynomial::new(self.spec.clone(), out)
    }

    /// Exact quotient by (x - root), or `None` when root is not a zero.
    pub fn deflate(&self, root: &Scalar) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let mut quotient = vec![self.spec.zero(); self.coeffs.len() - 1];
        let mut acc = self.spec.zero();
        for i in (1..self.coeffs.len()).rev() {
            acc = self.coeffs[i].add(&acc.mul(root));
            quotient[i - 1] = acc.clone();
        }
        let remainder = self.coeffs[0].add(&acc.mul(root));
        if remainder.is_zero() {
            Some(Polynomial::new(self.spec.clone(), quotient))
        } else {
            None
        }
    }

    /// Scales so the leading coefficient is 1; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Polynomial> {
        let lead = self.leading()?;
        let inv = lead.inverse().expect("leading coefficient is nonzero");
        Some(self.scale(&inv))
    }

    /// True when `self = c * other` for some nonzero scalar `c` (both nonzero).
    pub fn is_proportional_to(&self, other: &Polynomial) -> bool {
        self.proportionality(other).map_or(false, |c| !c.is_zero())
    }

    /// The scalar `c` with `self = c * other`, when it exists. Both zero
    /// yields 1; zero `other` against nonzero `self` yields `None`.
    pub fn proportionality(&self, other: &Polynomial) -> Option<Scalar> {
        if other.is_zero() {
            return if self.is_zero() { Some(self.spec.one()) } else { None };
        }
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let c = self
            .leading()
            .expect("same length as nonzero other")
            .div(other.leading().expect("nonzero"))
            .expect("leading coefficient is nonzero");
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

impl fmt::Display for Polynomial {
    /// Descending human notation, e.g. `2x^6 - 4x^5 + 2x^3 - 6x^2 - 8`.
    /// Non-integer rational coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (sign, magnitude) = match text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_owned()),
                None => ("+", text),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let wrapped = if magnitude.contains('/') {
                format!("({})", magnitude)
            } else {
                magnitude.clone()
            };
            match i {
                0 => write!(f, "{}", wrapped)?,
                _ => {
                    if magnitude == "1" {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{}x", wrapped)?;
                    }
                    if i > 1 {
                        write!(f, "^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}
