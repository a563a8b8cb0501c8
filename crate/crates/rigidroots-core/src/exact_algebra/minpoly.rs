//! Minimal polynomials of `2cos(pi/M)`.
//!
//! `2cos(pi/M) = z + 1/z` for a primitive `2M`-th root of unity `z`, so its
//! minimal polynomial is obtained by folding the palindromic cyclotomic
//! polynomial `Phi_{2M}`: writing `Phi_{2M}(y) / y^(deg/2)` in the basis
//! `y^j + y^-j` and substituting the Chebyshev-style polynomials
//! `p_j(x) = 2 T_j(x/2)` for them. Everything is exact integer arithmetic;
//! `Phi_n` itself comes from repeated exact division of `y^n - 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use super::AlgebraError;

/// Monic integer minimal polynomial of `2cos(pi/M)` over the rationals.
/// Coefficients are stored in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    m: u32,
    coeffs: Vec<BigInt>,
}

impl MinimalPolynomial {
    /// The `M` of the field `Q(2cos(pi/M))`.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ascending coefficients; monic, so the last entry is `1`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

static MINPOLY_CACHE: Lazy<Mutex<HashMap<u32, Arc<MinimalPolynomial>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

thread_local! {
    // Field arithmetic reduces modulo the minimal polynomial on every
    // multiplication; a thread-local mirror of the shared cache keeps the
    // hot path free of lock traffic.
    static MINPOLY_LOCAL: std::cell::RefCell<HashMap<u32, Arc<MinimalPolynomial>>> =
        std::cell::RefCell::new(HashMap::new());
}

/// The minimal polynomial of `2cos(pi/M)`, computed once per `M` and shared.
pub fn minimal_polynomial(m: u32) -> Result<Arc<MinimalPolynomial>, AlgebraError> {
    if m < 2 {
        return Err(AlgebraError::FieldParameterTooSmall { m });
    }
    MINPOLY_LOCAL.with(|local| {
        if let Some(p) = local.borrow().get(&m) {
            return Ok(Arc::clone(p));
        }
        let poly = minimal_polynomial_shared(m);
        local.borrow_mut().insert(m, Arc::clone(&poly));
        Ok(poly)
    })
}

fn minimal_polynomial_shared(m: u32) -> Arc<MinimalPolynomial> {
    let mut cache = MINPOLY_CACHE.lock().unwrap();
    if let Some(p) = cache.get(&m) {
        return Arc::clone(p);
    }
    let phi = cyclotomic(2 * u64::from(m));
    let coeffs = fold_palindrome(&phi);
    debug_assert_eq!(coeffs.len() as u64 - 1, euler_phi(2 * u64::from(m)) / 2);
    let poly = Arc::new(MinimalPolynomial { m, coeffs });
    cache.insert(m, Arc::clone(&poly));
    poly
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `n`-th cyclotomic polynomial, ascending coefficients:
/// `(y^n - 1)` divided by `Phi_d` for every proper divisor `d` of `n`.
pub fn cyclotomic(n: u64) -> Vec<BigInt> {
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // y^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_memo(d, memo);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    memo.insert(n, num.clone());
    num
}

/// Exact division of integer polynomials (ascending coefficients); panics
/// if the division leaves a remainder, which would mean a broken divisor
/// tower rather than bad input.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    assert!(den[dd].is_one(), "cyclotomic divisors are monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    assert!(rem.iter().all(BigInt::is_zero), "non-exact polynomial division");
    quot
}

/// Fold a palindromic polynomial `P(y)` of even degree `2k` into the
/// polynomial `psi(x)` with `P(y) = y^k psi(y + 1/y)`.
fn fold_palindrome(phi: &[BigInt]) -> Vec<BigInt> {
    let deg = phi.len() - 1;
    assert!(deg.is_multiple_of(2), "expected even degree");
    let k = deg / 2;
    for j in 0..=deg {
        assert_eq!(phi[j], phi[deg - j], "expected a palindromic polynomial");
    }
    // p_j(x) represents y^j + y^-j: p_0 = 2, p_1 = x, p_j = x p_{j-1} - p_{j-2}.
    let mut p_prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut p_cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    let mut out = vec![BigInt::zero(); k + 1];
    out[0] = phi[k].clone();
    for j in 1..=k {
        let a = &phi[k + j];
        if !a.is_zero() {
            for (i, c) in p_cur.iter().enumerate() {
                out[i] += a * c;
            }
        }
        if j < k {
            // advance: p_{j+1} = x p_j - p_{j-1}
            let mut next = vec![BigInt::zero(); p_cur.len() + 1];
            for (i, c) in p_cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            for (i, c) in p_prev.iter().enumerate() {
                next[i] -= c;
            }
            p_prev = std::mem::replace(&mut p_cur, next);
        }
    }
    assert!(out[k].is_one(), "folded polynomial must be monic");
    out
}

/// The Chebyshev-style polynomial `p_k` with `p_k(2cos t) = 2cos(k t)`,
/// as ascending integer coefficients.
pub fn two_cos_multiple_poly(k: u32) -> Vec<BigInt> {
    match k {
        0 => vec![BigInt::from(2)],
        1 => vec![BigInt::zero(), BigInt::one()],
        _ => {
            let mut prev = two_cos_multiple_poly(0);
            let mut cur = two_cos_multiple_poly(1);
            for _ in 2..=k {
                let mut next = vec![BigInt::zero(); cur.len() + 1];
                for (i, c) in cur.iter().enumerate() {
                    next[i + 1] = c.clone();
                }
                for (i, c) in prev.iter().enumerate() {
                    next[i] -= c;
                }
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}
