//! The root lattice of the rank-2 Kac-Moody algebra `H(m)` with Cartan
//! matrix `((2, -m), (-m, 2))`.
//!
//! Lattice vectors `[a, b]` are written in the simple-root basis. A vector
//! is a root exactly when `Q([a,b]) = a^2 + b^2 - m a b <= 1`; real roots
//! have `Q = 1`, imaginary ones `Q <= 0`. A root is reduced when
//! `gcd(a,b) = 1` and `ab != 0`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("[{a},{b}] is not in the positive primitive lattice")]
    NotPrimitivePositive { a: i64, b: i64 },
    #[error("Cartan parameter m = {m} is below 2")]
    CartanParameterTooSmall { m: u32 },
    #[error("coordinate overflow at [{a},{b}]")]
    Overflow { a: i64, b: i64 },
}

/// An element `[a, b]` of the root lattice of `H(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    a: i64,
    b: i64,
}

impl LatticeVector {
    pub fn new(a: i64, b: i64) -> Self {
        LatticeVector { a, b }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// Membership in `P+`: both coordinates strictly positive and coprime.
    pub fn in_positive_lattice(&self) -> bool {
        self.a >= 1 && self.b >= 1 && self.a.gcd(&self.b) == 1
    }

    pub fn require_positive(&self) -> Result<(), LatticeError> {
        if self.in_positive_lattice() {
            Ok(())
        } else {
            Err(LatticeError::NotPrimitivePositive { a: self.a, b: self.b })
        }
    }

    /// The diagonal mirror `[b, a]`.
    pub fn swapped(&self) -> Self {
        LatticeVector { a: self.b, b: self.a }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

// Serialized as the two-element array `[a, b]`.
impl Serialize for LatticeVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.a, self.b).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticeVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (a, b) = <(i64, i64)>::deserialize(deserializer)?;
        Ok(LatticeVector { a, b })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    RealRoot,
    ImaginaryRoot,
    NotRoot,
}

/// Classification of a lattice vector: root kind plus reducedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClass {
    pub kind: RootKind,
    pub reduced: bool,
}

impl RootClass {
    pub fn is_root(&self) -> bool {
        !matches!(self.kind, RootKind::NotRoot)
    }
}

/// The Cartan datum of `H(m)`; `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanData {
    m: u32,
}

impl CartanData {
    pub fn new(m: u32) -> Result<Self, LatticeError> {
        if m < 2 {
            return Err(LatticeError::CartanParameterTooSmall { m });
        }
        Ok(CartanData { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn cartan_matrix(&self) -> [[i64; 2]; 2] {
        let m = i64::from(self.m);
        [[2, -m], [-m, 2]]
    }

    /// The Weyl-invariant quadratic form `Q([a,b]) = a^2 + b^2 - m a b`.
    pub fn q_form(&self, v: LatticeVector) -> i128 {
        let (a, b) = (i128::from(v.a), i128::from(v.b));
        a * a + b * b - i128::from(self.m) * a * b
    }

    /// Root classification by the criterion `Q <= 1`; the zero vector is
    /// never a root.
    pub fn classify(&self, v: LatticeVector) -> RootClass {
        let reduced = v.a != 0 && v.b != 0 && v.a.gcd(&v.b) == 1;
        if v.is_zero() {
            return RootClass { kind: RootKind::NotRoot, reduced: false };
        }
        let q = self.q_form(v);
        let kind = if q > 1 {
            RootKind::NotRoot
        } else if q == 1 {
            RootKind::RealRoot
        } else {
            RootKind::ImaginaryRoot
        };
        RootClass { kind, reduced }
    }

    /// The simple reflection `sigma_1 [a,b] = [-a + mb, b]`.
    pub fn sigma1(&self, v: LatticeVector) -> LatticeVector {
        let a = checked(i128::from(self.m) * i128::from(v.b) - i128::from(v.a), v);
        LatticeVector { a, b: v.b }
    }

    /// The simple reflection `sigma_2 [a,b] = [a, -b + ma]`.
    pub fn sigma2(&self, v: LatticeVector) -> LatticeVector {
        let b = checked(i128::from(self.m) * i128::from(v.a) - i128::from(v.b), v);
        LatticeVector { a: v.a, b }
    }

    /// `F_0 = 0, F_1 = 1, F_n = m F_{n-1} - F_{n-2}`.
    pub fn f_sequence(&self, count: usize) -> Vec<i64> {
        assert!(count >= 2, "at least two terms required");
        let mut seq = vec![0i64, 1];
        self.extend_recurrence(&mut seq, count);
        seq
    }

    /// `E_0 = E_1 = 1, E_n = m E_{n-1} - E_{n-2}`.
    pub fn e_sequence(&self, count: usize) -> Vec<i64> {
        assert!(count >= 2, "at least two terms required");
        let mut seq = vec![1i64, 1];
        self.extend_recurrence(&mut seq, count);
        seq
    }

    pub(crate) fn extend_recurrence(&self, seq: &mut Vec<i64>, count: usize) {
        while seq.len() < count {
            let next = i128::from(self.m) * i128::from(seq[seq.len() - 1])
                - i128::from(seq[seq.len() - 2]);
            seq.push(i64::try_from(next).expect("recurrence overflow"));
        }
    }

    /// All reduced positive roots `[a,b]` with `1 <= a, b <= bound`, in
    /// lexicographic order.
    pub fn enumerate_reduced_positive(&self, bound: i64) -> Vec<LatticeVector> {
        assert!(bound >= 1, "bound must be positive");
        let mut out = Vec::new();
        for a in 1..=bound {
            for b in 1..=bound {
                let v = LatticeVector::new(a, b);
                let class = self.classify(v);
                if class.is_root() && class.reduced {
                    out.push(v);
                }
            }
        }
        out
    }
}

fn checked(value: i128, context: LatticeVector) -> i64 {
    i64::try_from(value)
        .unwrap_or_else(|_| panic!("coordinate overflow applying a reflection to {context}"))
}
