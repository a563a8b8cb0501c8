//! Descent from an arbitrary element of `P+` to a reduced root of `H(m)`
//! carrying the same rigid reflection.
//!
//! One step locates the unique interval `F_{n-1}/F_n < b/a < F_n/F_{n+1}`
//! (exact cross-multiplied comparisons, never floating point) and
//! subtracts the matching multiple of `[F_n, F_{n-1}]` or
//! `[F_{n+1}, F_n]`; at least one of the two candidates stays in `P+`,
//! the form value `Q` strictly decreases, and the transformation is
//! unimodular, so primitivity survives. Inputs with `a < b` run through
//! the diagonal mirror: the step operates on the swapped vector, records
//! `swapped`, and the net parity of swaps tells how many times the
//! 1 <-> 3 relabeling applies to the final word comparison.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rank2_roots::{CartanData, LatticeError, LatticeVector, RootClass};

/// Coordinate bound keeping every intermediate value comfortably inside
/// 64-bit arithmetic.
pub const MAX_COORD: i64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("{v} is already a root of H({m}); nothing to locate")]
    InputIsRoot { v: LatticeVector, m: u32 },
    #[error("{v} requires a > b here")]
    NotDescending { v: LatticeVector },
    #[error("{v} exceeds the supported coordinate range {max}")]
    CoordinatesTooLarge { v: LatticeVector, max: i64 },
    #[error("shift normalization needs b >= 1 and gcd(|a|, b) = 1, got ({a},{b})")]
    BadShiftInput { a: i64, b: i64 },
}

/// Which of the two candidate subtractions a step took.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "subtract_Fn")]
    SubtractFn,
    #[serde(rename = "subtract_Fn1")]
    SubtractFn1,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Branch::SubtractFn => write!(f, "subtract_Fn"),
            Branch::SubtractFn1 => write!(f, "subtract_Fn1"),
        }
    }
}

/// One certified descent step.
///
/// `kappa` is the step invariant of the branch taken, computed on the
/// working (possibly swapped) pair `[p,q]`: `-F_{n-1} p + F_n q` for
/// `subtract_Fn` (positive), `-F_n p + F_{n+1} q` for `subtract_Fn1`
/// (negative); `m |kappa|` is the multiple subtracted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub input: LatticeVector,
    pub n: u32,
    pub kappa: i64,
    pub branch: Branch,
    pub swapped: bool,
    pub both_valid: bool,
    pub output: LatticeVector,
    pub q_before: i64,
    pub q_after: i64,
}

/// A full reduction run: start, certified steps, final reduced root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub m: u32,
    pub start: LatticeVector,
    pub steps: Vec<ReductionStep>,
    pub result: LatticeVector,
    pub result_class: RootClass,
    /// True when an odd number of steps ran on the mirrored pair; the
    /// crossing word of `result` then matches the crossing word of
    /// `start` only after one 1 <-> 3 relabeling.
    pub net_swap_odd: bool,
}

impl ReductionTrace {
    /// The result mirrored back to the start's orientation: its crossing
    /// word spells exactly the start's group element, with no relabeling.
    pub fn oriented_result(&self) -> LatticeVector {
        if self.net_swap_odd {
            self.result.swapped()
        } else {
            self.result
        }
    }
}

fn check_range(v: LatticeVector) -> Result<(), ReductionError> {
    if v.a().abs() > MAX_COORD || v.b().abs() > MAX_COORD {
        return Err(ReductionError::CoordinatesTooLarge { v, max: MAX_COORD });
    }
    Ok(())
}

/// Extends the `F` sequence until index `upto` exists.
fn ensure_f(cartan: &CartanData, f: &mut Vec<i64>, upto: usize) {
    if f.is_empty() {
        f.push(0);
        f.push(1);
    }
    cartan.extend_recurrence(f, upto + 1);
}

/// The unique `n >= 1` with `F_{n-1}/F_n < b/a < F_n/F_{n+1}`, for a
/// non-root with `a > b`. Hitting a ratio exactly would force `Q = 1`,
/// contradicting the non-root hypothesis, and aborts.
pub fn locate_interval(v: LatticeVector, m: u32) -> Result<u32, ReductionError> {
    v.require_positive()?;
    check_range(v)?;
    let cartan = CartanData::new(m)?;
    if cartan.classify(v).is_root() {
        return Err(ReductionError::InputIsRoot { v, m });
    }
    if v.a() <= v.b() {
        return Err(ReductionError::NotDescending { v });
    }
    let (n, _) = locate_with_sequence(&cartan, v.a(), v.b());
    Ok(n)
}

/// Core search shared with `reduce_step`; returns the interval index and
/// the `F` prefix covering `F_{n+1}`.
fn locate_with_sequence(cartan: &CartanData, a: i64, b: i64) -> (u32, Vec<i64>) {
    let cross = |x: i64, y: i64| i128::from(x) * i128::from(y);
    let mut f: Vec<i64> = Vec::new();
    let mut n = 1usize;
    loop {
        ensure_f(cartan, &mut f, n + 1);
        let lhs = cross(b, f[n + 1]);
        let rhs = cross(a, f[n]);
        assert!(
            lhs != rhs,
            "[{a},{b}] sits on the ratio F_{n}/F_{}: it would be a root",
            n + 1
        );
        if lhs < rhs {
            // b/a < F_n/F_{n+1}; the lower bound F_{n-1}/F_n < b/a holds
            // because n is the first such index (or trivially at n = 1).
            let low_lhs = cross(f[n - 1], a);
            let low_rhs = cross(f[n], b);
            assert!(
                low_lhs != low_rhs,
                "[{a},{b}] sits on the ratio F_{}/F_{n}: it would be a root",
                n - 1
            );
            debug_assert!(low_lhs < low_rhs);
            return (n as u32, f);
        }
        n += 1;
    }
}

/// One descent step on a non-root element of `P+`.
pub fn reduce_step(v: LatticeVector, m: u32) -> Result<ReductionStep, ReductionError> {
    reduce_step_choosing(v, m, None)
}

fn reduce_step_choosing(
    v: LatticeVector,
    m: u32,
    prefer: Option<Branch>,
) -> Result<ReductionStep, ReductionError> {
    v.require_positive()?;
    check_range(v)?;
    let cartan = CartanData::new(m)?;
    let q_before_full = cartan.q_form(v);
    if cartan.classify(v).is_root() {
        return Err(ReductionError::InputIsRoot { v, m });
    }
    let q_before = i64::try_from(q_before_full)
        .map_err(|_| ReductionError::CoordinatesTooLarge { v, max: MAX_COORD })?;

    let swapped = v.a() < v.b();
    let (p, q) = if swapped { (v.b(), v.a()) } else { (v.a(), v.b()) };
    // a = b only happens at [1,1], which is always a root and was rejected.
    debug_assert!(p > q);

    let (n, f) = locate_with_sequence(&cartan, p, q);
    let n = n as usize;
    let mi = i128::from(m);
    let cross = |x: i64, y: i64| i128::from(x) * i128::from(y);

    let kappa1 = cross(f[n], q) - cross(f[n - 1], p);
    let cand1 = (
        i128::from(p) - mi * kappa1 * i128::from(f[n]),
        i128::from(q) - mi * kappa1 * i128::from(f[n - 1]),
    );
    let kappa2 = cross(f[n + 1], q) - cross(f[n], p);
    let cand2 = (
        i128::from(p) + mi * kappa2 * i128::from(f[n + 1]),
        i128::from(q) + mi * kappa2 * i128::from(f[n]),
    );
    let ok1 = cand1.0 >= 1 && cand1.1 >= 1;
    let ok2 = cand2.0 >= 1 && cand2.1 >= 1;
    assert!(ok1 || ok2, "neither descent candidate lies in P+ at {v}, m={m}");
    let both_valid = ok1 && ok2;

    let to_vec = |c: (i128, i128)| {
        LatticeVector::new(
            i64::try_from(c.0).expect("descent shrank coordinates"),
            i64::try_from(c.1).expect("descent shrank coordinates"),
        )
    };
    let pick1 = (Branch::SubtractFn, to_vec(cand1), kappa1);
    let pick2 = (Branch::SubtractFn1, to_vec(cand2), kappa2);
    let (branch, output, kappa_raw) = if both_valid {
        match prefer {
            Some(Branch::SubtractFn) => pick1,
            Some(Branch::SubtractFn1) => pick2,
            // smaller Q wins; ties go to the first branch
            None => {
                if cartan.q_form(pick1.1) <= cartan.q_form(pick2.1) {
                    pick1
                } else {
                    pick2
                }
            }
        }
    } else if ok1 {
        pick1
    } else {
        pick2
    };

    let q_after_full = cartan.q_form(output);
    assert!(
        q_after_full < q_before_full,
        "Q failed to decrease at {v} -> {output}, m={m}"
    );
    assert!(
        num_integer::gcd(output.a(), output.b()) == 1,
        "descent output {output} lost primitivity"
    );
    Ok(ReductionStep {
        input: v,
        n: n as u32,
        kappa: i64::try_from(kappa_raw).expect("kappa exceeds 64 bits"),
        branch,
        swapped,
        both_valid,
        output,
        q_before,
        q_after: i64::try_from(q_after_full).expect("Q decreased below the input bound"),
    })
}

/// Iterates descent steps until the vector is a root of `H(m)`.
pub fn reduce(v: LatticeVector, m: u32) -> Result<ReductionTrace, ReductionError> {
    reduce_with_first_choice(v, m, None)
}

/// Like [`reduce`], but forcing the given branch at the first step where
/// both candidates are valid. The verification suite uses this to probe
/// that the final reduced root does not depend on the tie-break.
pub fn reduce_with_first_choice(
    v: LatticeVector,
    m: u32,
    mut force_first_both: Option<Branch>,
) -> Result<ReductionTrace, ReductionError> {
    v.require_positive()?;
    check_range(v)?;
    let cartan = CartanData::new(m)?;
    let mut steps = Vec::new();
    let mut current = v;
    let mut net_swap_odd = false;
    while !cartan.classify(current).is_root() {
        let step = reduce_step_choosing(current, m, force_first_both)?;
        if step.both_valid {
            // the override is consumed by the first both-valid step
            force_first_both = None;
        }
        net_swap_odd ^= step.swapped;
        current = step.output;
        steps.push(step);
    }
    let result_class = cartan.classify(current);
    debug_assert!(result_class.reduced);
    Ok(ReductionTrace {
        m,
        start: v,
        steps,
        result: current,
        result_class,
        net_swap_odd,
    })
}

/// Horizontal shifts into `P+`: the least `j >= 0` with `a + j m b >= 1`.
pub fn shift_normalize(a: i64, b: i64, m: u32) -> Result<LatticeVector, ReductionError> {
    if b < 1 || num_integer::gcd(a.abs(), b) != 1 {
        return Err(ReductionError::BadShiftInput { a, b });
    }
    check_range(LatticeVector::new(a, b))?;
    let step = i128::from(m) * i128::from(b);
    let mut first = i128::from(a);
    while first < 1 {
        first += step;
    }
    Ok(LatticeVector::new(
        i64::try_from(first).expect("shift overflow"),
        b,
    ))
}
