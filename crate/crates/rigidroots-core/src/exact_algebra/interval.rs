//! Exact rational interval arithmetic and certified enclosures of
//! `2cos(pi/M)`.
//!
//! All endpoints are `BigRational`, so every operation here is exact; the
//! only approximation is the width of an enclosure, which the caller
//! controls through a bit count. Enclosures of `pi` come from the Machin
//! formula, cosines from the alternating Taylor series with the first
//! omitted term as the error bound.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `Some(sign)` when the interval determines it: entirely positive,
    /// entirely negative, or the exact point zero. `None` when the interval
    /// straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn add_scalar(&self, s: &BigRational) -> Self {
        RatInterval {
            lo: &self.lo + s,
            hi: &self.hi + s,
        }
    }

    pub fn mul_scalar(&self, s: &BigRational) -> Self {
        if s.is_negative() {
            RatInterval {
                lo: &self.hi * s,
                hi: &self.lo * s,
            }
        } else {
            RatInterval {
                lo: &self.lo * s,
                hi: &self.hi * s,
            }
        }
    }

    /// Round outward to endpoints with denominator `2^bits`. Keeps later
    /// arithmetic cheap without giving up soundness.
    pub fn round_out(&self, bits: u32) -> Self {
        RatInterval {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn dyadic_floor(r: &BigRational, bits: u32) -> BigRational {
    let scaled = r * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.floor().to_integer(), pow2(bits))
}

fn dyadic_ceil(r: &BigRational, bits: u32) -> BigRational {
    let scaled = r * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.ceil().to_integer(), pow2(bits))
}

/// Horner evaluation of a polynomial (ascending coefficients) over an
/// interval argument.
pub fn eval_poly_interval(coeffs: &[BigRational], x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(BigRational::zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add_scalar(c);
    }
    acc
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Enclosure of `atan(1/x)` for integer `x >= 2` with error below `eps`.
/// The Leibniz series alternates with strictly decreasing terms, so the
/// first omitted term bounds the truncation error.
fn atan_inv_enclosure(x: i64, eps: &BigRational) -> RatInterval {
    let x2 = BigRational::from_integer(BigInt::from(x * x));
    let mut term = rat(1, x);
    let mut sum = BigRational::zero();
    let mut k: i64 = 0;
    let mut positive = true;
    loop {
        let contribution = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        if positive {
            sum += &contribution;
        } else {
            sum -= &contribution;
        }
        positive = !positive;
        term /= &x2;
        k += 1;
        let next = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        if next < *eps {
            return RatInterval::new(&sum - &next, &sum + &next);
        }
    }
}

/// Enclosure of `pi` to roughly `bits` fractional bits.
pub fn pi_enclosure(bits: u32) -> RatInterval {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    let eps = BigRational::new(BigInt::one(), pow2(bits + 8));
    let a5 = atan_inv_enclosure(5, &eps);
    let a239 = atan_inv_enclosure(239, &eps);
    a5.mul_scalar(&rat(16, 1))
        .add(&a239.mul_scalar(&rat(-4, 1)))
        .round_out(bits + 4)
}

/// Enclosure of `cos(t)` for exact rational `0 <= t < 2`, error below `eps`.
fn cos_point_enclosure(t: &BigRational, eps: &BigRational) -> RatInterval {
    let t2 = t * t;
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    let mut k: u32 = 0;
    loop {
        if k.is_multiple_of(2) {
            sum += &term;
        } else {
            sum -= &term;
        }
        // term_{k+1} = term_k * t^2 / ((2k+1)(2k+2))
        term = &term * &t2
            / BigRational::from_integer(BigInt::from((2 * k as i64 + 1) * (2 * k as i64 + 2)));
        k += 1;
        // Terms decrease from k >= 2 for t < 2, making the alternating
        // bound valid once we are past that point.
        if k >= 3 && term < *eps {
            return RatInterval::new(&sum - &term, &sum + &term);
        }
    }
}

/// Enclosure of `cos` over an interval contained in `[0, pi]`, where the
/// cosine is decreasing.
fn cos_interval_enclosure(theta: &RatInterval, eps: &BigRational) -> RatInterval {
    let at_hi = cos_point_enclosure(theta.hi(), eps);
    let at_lo = cos_point_enclosure(theta.lo(), eps);
    RatInterval::new(at_hi.lo.clone(), at_lo.hi.clone())
}

static TWO_COS_CACHE: Lazy<Mutex<HashMap<u32, (u32, RatInterval)>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Certified enclosure of `2cos(pi/M)` of width at most `2^-bits`.
/// Results are cached per `M` at the best precision computed so far.
pub fn two_cos_pi_over(m: u32, bits: u32) -> RatInterval {
    assert!(m >= 2, "field parameter must be at least 2");
    {
        let cache = TWO_COS_CACHE.lock().unwrap();
        if let Some((have_bits, iv)) = cache.get(&m) {
            if *have_bits >= bits {
                return iv.clone();
            }
        }
    }
    let work_bits = bits + 16;
    let pi = pi_enclosure(work_bits);
    let theta = pi.mul_scalar(&rat(1, i64::from(m)));
    let eps = BigRational::new(BigInt::one(), pow2(work_bits));
    let result = cos_interval_enclosure(&theta, &eps)
        .mul_scalar(&rat(2, 1))
        .round_out(bits + 4);
    assert!(
        result.width() <= BigRational::new(BigInt::one(), pow2(bits)),
        "enclosure of 2cos(pi/{m}) wider than requested"
    );
    let mut cache = TWO_COS_CACHE.lock().unwrap();
    cache.insert(m, (bits, result.clone()));
    result
}

/// Render a rational to `sig` significant decimal digits (round half away
/// from zero). Plain positional notation; exact big-integer arithmetic.
pub fn decimal_approx(r: &BigRational, sig: u32) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let abs = r.abs();
    // Find the decimal exponent e with 10^e <= abs < 10^(e+1).
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut e: i64 = 0;
    let mut scaled = abs.clone();
    while scaled >= ten {
        scaled /= &ten;
        e += 1;
    }
    while scaled < BigRational::one() {
        scaled *= &ten;
        e -= 1;
    }
    // digits = round(abs * 10^(sig-1-e)) as an integer with `sig` digits.
    let shift = i64::from(sig) - 1 - e;
    let mut shifted = abs;
    if shift >= 0 {
        for _ in 0..shift {
            shifted *= &ten;
        }
    } else {
        for _ in 0..(-shift) {
            shifted /= &ten;
        }
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut digits = (shifted + half).floor().to_integer().to_string();
    if digits.len() > sig as usize {
        // Rounding carried over (e.g. 999.96 -> 1000); adjust exponent.
        e += 1;
        digits.truncate(sig as usize);
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if e >= 0 {
        let int_len = (e + 1) as usize;
        if int_len >= digits.len() {
            out.push_str(&digits);
            for _ in 0..(int_len - digits.len()) {
                out.push('0');
            }
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    // Trim trailing fractional zeros for stability of the rendering.
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}
