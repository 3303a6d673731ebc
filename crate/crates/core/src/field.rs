//! Exact scalar arithmetic over the two supported coefficient fields:
//! arbitrary-precision rationals and prime residue fields GF(p).
//!
//! Every [`Scalar`] knows its field and refuses arithmetic with scalars from a
//! different field. Rationals are kept reduced with a positive denominator;
//! residues are kept in the range `[0, p)`. All operations are pure, so values
//! can be shared freely across threads.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Selects the coefficient field. Prime moduli are validated at construction;
/// there is no way to build a `PrimeField` around a composite or even modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(Arc<BigUint>),
}

/// Rejection reasons for a would-be prime field modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    ModulusTooSmall(BigUint),
    ModulusNotPrime(BigUint),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::ModulusTooSmall(m) => write!(f, "modulus {} is below 3", m),
            FieldError::ModulusNotPrime(m) => write!(f, "modulus {} is not prime", m),
        }
    }
}

impl std::error::Error for FieldError {}

impl FieldSpec {
    /// Builds a prime-field spec; the modulus must be a prime >= 3.
    pub fn prime_field(modulus: BigUint) -> Result<FieldSpec, FieldError> {
        if modulus < BigUint::from(3u32) {
            return Err(FieldError::ModulusTooSmall(modulus));
        }
        if !is_prime(&modulus) {
            return Err(FieldError::ModulusNotPrime(modulus));
        }
        Ok(FieldSpec::PrimeField(Arc::new(modulus)))
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::PrimeField(_))
    }

    pub fn modulus(&self) -> Option<&BigUint> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: BigUint::zero(),
                modulus: Arc::clone(p),
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(v)),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: reduce_mod(&v, p),
                modulus: Arc::clone(p),
            },
        }
    }

    /// -1 raised to `exponent`, as a field element.
    pub fn sign(&self, exponent: usize) -> Scalar {
        if exponent % 2 == 0 {
            self.one()
        } else {
            self.from_i64(-1)
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rational"),
            FieldSpec::PrimeField(p) => write!(f, "GF({})", p),
        }
    }
}

fn reduce_mod(v: &BigInt, p: &BigUint) -> BigUint {
    let pi = BigInt::from_biguint(Sign::Plus, p.clone());
    let mut r = v % &pi;
    if r.is_negative() {
        r += &pi;
    }
    r.to_biguint().expect("reduced residue is nonnegative")
}

/// An exact field element: a reduced rational or a reduced residue mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: BigUint, modulus: Arc<BigUint> },
}

/// Errors from the fallible arithmetic entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    FieldMismatch,
    DivisionByZero,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::FieldMismatch => write!(f, "operands belong to different fields"),
            ArithError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for ArithError {}

/// Errors from [`scalar_parse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseScalarError {
    MalformedNumber(String),
    ZeroDenominator,
    NonInvertibleDenominator,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseScalarError::MalformedNumber(t) => write!(f, "malformed number {:?}", t),
            ParseScalarError::ZeroDenominator => write!(f, "zero denominator"),
            ParseScalarError::NonInvertibleDenominator => {
                write!(f, "denominator is not invertible modulo p")
            }
        }
    }
}

impl std::error::Error for ParseScalarError {}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(Arc::clone(modulus)),
        }
    }

    pub fn same_field(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Residue { modulus: a, .. }, Scalar::Residue { modulus: b, .. }) => a == b,
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => value.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => value.is_one(),
        }
    }

    /// Largest of the numerator/denominator bit sizes (residues: the value).
    /// Used by callers that cap symbolic growth.
    pub fn bit_size(&self) -> u64 {
        match self {
            Scalar::Rational(r) => r.numer().bits().max(r.denom().bits()),
            Scalar::Residue { value, .. } => value.bits(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                assert_eq!(p, q, "field mismatch");
                let mut v = a + b;
                if v >= **p {
                    v -= &**p;
                }
                Scalar::Residue { value: v, modulus: Arc::clone(p) }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                assert_eq!(p, q, "field mismatch");
                let v = if a >= b { a - b } else { a + (&**p - b) };
                Scalar::Residue { value: v, modulus: Arc::clone(p) }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                assert_eq!(p, q, "field mismatch");
                Scalar::Residue { value: (a * b) % &**p, modulus: Arc::clone(p) }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => {
                let v = if value.is_zero() { BigUint::zero() } else { &**modulus - value };
                Scalar::Residue { value: v, modulus: Arc::clone(modulus) }
            }
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Scalar, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue { value, modulus } => {
                // Fermat: p prime, value not divisible by p.
                let e = &**modulus - BigUint::from(2u32);
                Scalar::Residue {
                    value: value.modpow(&e, modulus),
                    modulus: Arc::clone(modulus),
                }
            }
        })
    }

    /// Exact division; panics on field mismatch, errors on zero divisor.
    pub fn div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        if !self.same_field(other) {
            return Err(ArithError::FieldMismatch);
        }
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        if !self.same_field(other) {
            return Err(ArithError::FieldMismatch);
        }
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        if !self.same_field(other) {
            return Err(ArithError::FieldMismatch);
        }
        Ok(self.mul(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        if !self.same_field(other) {
            return Err(ArithError::FieldMismatch);
        }
        self.div(other)
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `-?digits` or `-?digits/digits`; residues print as
    /// the reduced value. `parse` of the output round-trips exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{}", value),
        }
    }
}

/// Arithmetic operation selector for [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Dispatching entry point over a pair of scalars; checks fields and zero
/// divisors before touching the operands.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ArithError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// Parses `-?digits` or `-?digits/digits` into a canonical scalar of the given
/// field. Over GF(p) the fraction is resolved through a modular inverse.
pub fn scalar_parse(text: &str, spec: &FieldSpec) -> Result<Scalar, ParseScalarError> {
    let t = text.trim();
    let (num_text, den_text) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let num = parse_integer(num_text).ok_or_else(|| ParseScalarError::MalformedNumber(text.to_owned()))?;
    let den = match den_text {
        Some(d) => parse_integer(d).ok_or_else(|| ParseScalarError::MalformedNumber(text.to_owned()))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ParseScalarError::ZeroDenominator);
    }
    match spec {
        FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
        FieldSpec::PrimeField(p) => {
            let d = reduce_mod(&den, p);
            if d.is_zero() {
                return Err(ParseScalarError::NonInvertibleDenominator);
            }
            let n = spec.from_bigint(num);
            let d = Scalar::Residue { value: d, modulus: Arc::clone(p) };
            Ok(n.mul(&d.inverse().expect("nonzero residue is invertible")))
        }
    }
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text
        .strip_prefix('-')
        .or_else(|| text.strip_prefix('+'))
        .unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(text.as_bytes(), 10)
}

/// Deterministic primality test.
///
/// Trial division handles everything with a factor below 100. Up to the known
/// bound 3317044064679887385961981 the first twelve prime bases make
/// Miller-Rabin exact; beyond it we use base-2 Miller-Rabin plus a strong
/// Lucas test (no counterexample to that combination is known, and none exists
/// below 2^64).
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    if n.is_even() {
        return *n == two;
    }
    const SMALL: [u32; 24] = [
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
        97,
    ];
    for &q in SMALL.iter() {
        let bq = BigUint::from(q);
        if *n == bq {
            return true;
        }
        if (n % &bq).is_zero() {
            return false;
        }
    }
    let exact_bound = BigUint::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    if *n < exact_bound {
        const WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        return WITNESSES.iter().all(|&a| miller_rabin_passes(n, &BigUint::from(a)));
    }
    miller_rabin_passes(n, &two) && strong_lucas_passes(n)
}

/// One Miller-Rabin round; `n` odd, 2 <= a < n.
fn miller_rabin_passes(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().expect("n odd so n-1 > 0");
    let d = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice
/// (P = 1, Q = (1 - D)/4 for the first D in 5, -7, 9, ... with Jacobi(D, n) = -1).
fn strong_lucas_passes(n: &BigUint) -> bool {
    if is_perfect_square(n) {
        // Jacobi(D, n) never hits -1 for squares; they are composite here
        // anyway (n exceeds the trial-division range).
        return false;
    }
    let ni = BigInt::from_biguint(Sign::Plus, n.clone());
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, &ni) {
            0 => return false, // shares a factor with n
            -1 => break,
            _ => {}
        }
        let two = BigInt::from(2);
        d = if d.is_positive() { -(&d + two) } else { -(&d - two) };
    }
    let q = (BigInt::one() - &d) / BigInt::from(4);
    // n odd: 2^{-1} mod n
    let inv2 = (&ni + BigInt::one()) / BigInt::from(2);
    let np1 = n + BigUint::one();
    let s = np1.trailing_zeros().expect("n + 1 is even");
    let t = &np1 >> s;

    // Lucas ladder for U_t, V_t, Q^t mod n, MSB first.
    let md = |x: BigInt| -> BigInt {
        let r = x % &ni;
        if r.is_negative() {
            r + &ni
        } else {
            r
        }
    };
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2);
    let mut qk = BigInt::one();
    let bits = t.bits();
    for i in (0..bits).rev() {
        // double: (U, V, Q^k) -> (U V, V^2 - 2 Q^k, Q^{2k})
        let nu = md(&u * &v);
        let nv = md(&v * &v - BigInt::from(2) * &qk);
        qk = md(&qk * &qk);
        u = nu;
        v = nv;
        if t.bit(i) {
            // advance one step with P = 1
            let nu = md((&u + &v) * &inv2);
            let nv = md((&d * &u + &v) * &inv2);
            u = nu;
            v = nv;
            qk = md(&qk * &q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = md(&v * &v - BigInt::from(2) * &qk);
        if v.is_zero() {
            return true;
        }
        qk = md(&qk * &qk);
    }
    false
}

fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1i32;
    let three = BigInt::from(3);
    let four = BigInt::from(4);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}
