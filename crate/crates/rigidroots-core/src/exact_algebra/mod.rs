//! Exact arithmetic in the real cyclotomic field `Q(x)`, `x = 2cos(pi/M)`.
//!
//! Elements are polynomials in `x` with rational coefficients, reduced
//! modulo the minimal polynomial of `x` and kept in canonical form
//! (degree below the minimal polynomial, trailing zeros trimmed). Because
//! the representation is faithful, equality of canonical forms is equality
//! of real numbers, and the sign of a nonzero element can always be
//! certified by interval evaluation at sufficient precision.

pub mod interval;
mod minpoly;
mod symbolic;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use interval::{decimal_approx, eval_poly_interval, two_cos_pi_over, RatInterval};
pub use minpoly::{cyclotomic, euler_phi, minimal_polynomial, MinimalPolynomial};
pub use symbolic::SymbolicPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("field parameter M = {m} is below 2")]
    FieldParameterTooSmall { m: u32 },
}

/// An element of `Q(2cos(pi/M))` in canonical form.
///
/// The coefficient vector is ascending in powers of `x`, strictly shorter
/// than the minimal polynomial, and has no trailing zeros; the zero
/// element is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicElement {
    m: u32,
    coeffs: Vec<BigRational>,
}

impl AlgebraicElement {
    /// Builds an element from arbitrary ascending coefficients, reducing
    /// modulo the minimal polynomial of `2cos(pi/M)`.
    pub fn from_coeffs(m: u32, coeffs: Vec<BigRational>) -> Result<Self, AlgebraError> {
        let poly = minimal_polynomial(m)?;
        let mut coeffs = coeffs;
        reduce_mod(&mut coeffs, poly.coeffs());
        trim(&mut coeffs);
        Ok(AlgebraicElement { m, coeffs })
    }

    pub fn zero(m: u32) -> Self {
        debug_assert!(m >= 2, "field parameter below 2");
        AlgebraicElement { m, coeffs: Vec::new() }
    }

    pub fn one(m: u32) -> Self {
        Self::from_integer(m, 1)
    }

    pub fn from_integer(m: u32, value: i64) -> Self {
        debug_assert!(m >= 2, "field parameter below 2");
        if value == 0 {
            return Self::zero(m);
        }
        AlgebraicElement {
            m,
            coeffs: vec![BigRational::from_integer(BigInt::from(value))],
        }
    }

    pub fn from_rational(m: u32, value: BigRational) -> Self {
        if value.is_zero() {
            return Self::zero(m);
        }
        AlgebraicElement { m, coeffs: vec![value] }
    }

    /// The generator `x = 2cos(pi/M)` itself.
    pub fn generator(m: u32) -> Result<Self, AlgebraError> {
        Self::from_coeffs(m, vec![BigRational::zero(), BigRational::one()])
    }

    /// `2cos(k pi / M)` as an element of the field, via `p_k(x) = 2T_k(x/2)`.
    pub fn two_cos_multiple(m: u32, k: u32) -> Result<Self, AlgebraError> {
        let p = minpoly::two_cos_multiple_poly(k);
        Self::from_coeffs(m, p.into_iter().map(BigRational::from_integer).collect())
    }

    /// The field tag `M`.
    pub fn field_m(&self) -> u32 {
        self.m
    }

    /// Canonical ascending coefficients; empty for zero.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `Some(r)` when the element is rational (degree 0 in `x`).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.m, other.m,
            "elements of Q(2cos(pi/{})) and Q(2cos(pi/{})) cannot be combined",
            self.m, other.m
        );
    }

    /// Certified sign: `0` exactly when the canonical form is zero,
    /// otherwise the sign of the real number. Starts interval evaluation
    /// at 64 bits and doubles until conclusive; a nonzero canonical form
    /// is a nonzero real, so this terminates.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.coeffs.len() == 1 {
            return if self.coeffs[0].is_positive() { 1 } else { -1 };
        }
        let mut bits = 64;
        loop {
            let x = two_cos_pi_over(self.m, bits);
            let value = eval_poly_interval(&self.coeffs, &x);
            if let Some(s) = value.sign() {
                return s;
            }
            bits *= 2;
            assert!(
                bits <= 1 << 20,
                "sign determination did not converge; canonical form corrupted"
            );
        }
    }

    /// Certified enclosure of the element's real value at width `2^-bits`-ish.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        if let Some(r) = self.as_rational() {
            return RatInterval::point(r);
        }
        let x = two_cos_pi_over(self.m, bits + 8);
        eval_poly_interval(&self.coeffs, &x)
    }

    /// Numeric value as `f64` (midpoint of a 128-bit enclosure); intended
    /// for display and cross-checks, not for decisions.
    pub fn to_f64(&self) -> f64 {
        self.enclosure(128).midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal approximation to 12 significant digits.
    pub fn approx_decimal(&self) -> String {
        decimal_approx(&self.enclosure(128).midpoint(), 12)
    }

    /// Canonical text form: ascending coefficient list plus a 12-digit
    /// decimal approximation, e.g. `[0, 1] ~ 1.41421356237`.
    pub fn canonical_text(&self) -> String {
        let list = self
            .coeffs
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(", ");
        format!("[{}] ~ {}", list, self.approx_decimal())
    }
}

fn trim(coeffs: &mut Vec<BigRational>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// Reduce `coeffs` modulo the monic integer polynomial `modulus` in place.
fn reduce_mod(coeffs: &mut Vec<BigRational>, modulus: &[BigInt]) {
    let deg = modulus.len() - 1;
    while coeffs.len() > deg {
        let lead = coeffs.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let offset = coeffs.len() - deg;
        for (i, c) in modulus.iter().take(deg).enumerate() {
            if !c.is_zero() {
                coeffs[offset + i] -= &lead * c;
            }
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl std::ops::Add for &AlgebraicElement {
    type Output = AlgebraicElement;
    fn add(self, rhs: &AlgebraicElement) -> AlgebraicElement {
        self.check_field(rhs);
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c += r;
        }
        trim(&mut coeffs);
        AlgebraicElement { m: self.m, coeffs }
    }
}

impl std::ops::Sub for &AlgebraicElement {
    type Output = AlgebraicElement;
    fn sub(self, rhs: &AlgebraicElement) -> AlgebraicElement {
        self.check_field(rhs);
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c -= r;
        }
        trim(&mut coeffs);
        AlgebraicElement { m: self.m, coeffs }
    }
}

impl std::ops::Neg for &AlgebraicElement {
    type Output = AlgebraicElement;
    fn neg(self) -> AlgebraicElement {
        AlgebraicElement {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &AlgebraicElement {
    type Output = AlgebraicElement;
    fn mul(self, rhs: &AlgebraicElement) -> AlgebraicElement {
        self.check_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return AlgebraicElement::zero(self.m);
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        // every field here has degree >= 1, so a constant product needs no
        // reduction; this covers all of the degree-one fields (m = 2, 3)
        if coeffs.len() > 1 {
            let poly = minimal_polynomial(self.m).expect("tag validated at construction");
            reduce_mod(&mut coeffs, poly.coeffs());
        }
        trim(&mut coeffs);
        AlgebraicElement { m: self.m, coeffs }
    }
}

impl fmt::Display for AlgebraicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(usize, String, bool)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p, format_coeff_abs(&c.abs(), p), c.is_negative()))
            .collect();
        write_terms(f, &terms)
    }
}

fn format_coeff_abs(c: &BigRational, power: usize) -> String {
    let coeff = if c.is_one() && power > 0 {
        String::new()
    } else if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    };
    match power {
        0 => {
            if coeff.is_empty() {
                "1".to_string()
            } else {
                coeff
            }
        }
        1 => format!("{coeff}x"),
        _ => format!("{coeff}x^{power}"),
    }
}

pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(usize, String, bool)],
) -> fmt::Result {
    for (i, (_, text, negative)) in terms.iter().enumerate() {
        if i == 0 {
            if *negative {
                write!(f, "-")?;
            }
        } else if *negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{text}")?;
    }
    Ok(())
}

// Serialized as { m, coeffs: ["n/d", ...] } so reports stay readable.
impl Serialize for AlgebraicElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("AlgebraicElement", 3)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field(
            "coeffs",
            &self.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
        )?;
        s.serialize_field("approx", &self.approx_decimal())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for AlgebraicElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            m: u32,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| serde::de::Error::custom("bad rational")))
            .collect::<Result<Vec<_>, _>>()?;
        AlgebraicElement::from_coeffs(raw.m, coeffs).map_err(serde::de::Error::custom)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => Some(BigRational::new(n.parse().ok()?, d.parse().ok()?)),
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
