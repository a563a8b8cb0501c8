//! Integer polynomials in a generic `x`, for roots computed before the
//! Coxeter label `m` is specialized.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{write_terms, AlgebraError, AlgebraicElement};

/// An element of `Z[x]` with `x` left unreduced; ascending coefficients,
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymbolicPolynomial {
    coeffs: Vec<BigInt>,
}

impl SymbolicPolynomial {
    pub fn zero() -> Self {
        SymbolicPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(value: i64) -> Self {
        if value == 0 {
            return Self::zero();
        }
        SymbolicPolynomial { coeffs: vec![BigInt::from(value)] }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        SymbolicPolynomial { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SymbolicPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Reduces the polynomial modulo the minimal polynomial of
    /// `2cos(pi/M)`, landing in the concrete field.
    pub fn specialize(&self, m: u32) -> Result<AlgebraicElement, AlgebraError> {
        AlgebraicElement::from_coeffs(
            m,
            self.coeffs.iter().cloned().map(BigRational::from_integer).collect(),
        )
    }
}

impl std::ops::Add for &SymbolicPolynomial {
    type Output = SymbolicPolynomial;
    fn add(self, rhs: &SymbolicPolynomial) -> SymbolicPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c += r;
        }
        SymbolicPolynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &SymbolicPolynomial {
    type Output = SymbolicPolynomial;
    fn sub(self, rhs: &SymbolicPolynomial) -> SymbolicPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c -= r;
        }
        SymbolicPolynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Neg for &SymbolicPolynomial {
    type Output = SymbolicPolynomial;
    fn neg(self) -> SymbolicPolynomial {
        SymbolicPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl std::ops::Mul for &SymbolicPolynomial {
    type Output = SymbolicPolynomial;
    fn mul(self, rhs: &SymbolicPolynomial) -> SymbolicPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return SymbolicPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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
        SymbolicPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for SymbolicPolynomial {
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
            .map(|(p, c)| {
                let abs = c.abs();
                let coeff = if abs.is_one() && p > 0 { String::new() } else { abs.to_string() };
                let text = match p {
                    0 => {
                        if coeff.is_empty() {
                            "1".to_string()
                        } else {
                            coeff
                        }
                    }
                    1 => format!("{coeff}x"),
                    _ => format!("{coeff}x^{p}"),
                };
                (p, text, c.is_negative())
            })
            .collect();
        write_terms(f, &terms)
    }
}
