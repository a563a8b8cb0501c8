//! Batch verification drivers.
//!
//! `run_check` sweeps the surjectivity statement at desk scale: every
//! primitive positive pair up to the bound reduces to a reduced root
//! spelling the same group element (modulo the recorded swap parity), and
//! the reduced positive roots up to the bound are probed for image
//! collisions, which would contradict the injectivity conjecture.
//! `run_lemmas` replays the word-calculus identities behind the descent
//! argument at the matrix level.
//!
//! Reflections are compared through their sign-normalized roots: unit
//! roots determine reflections, and two reflections coincide exactly when
//! their positive roots do, so the root comparison is equivalent to full
//! matrix equality at a fraction of the cost. The collision census runs
//! on modular fingerprints of the full word matrices over two word-size
//! primes; any fingerprint class with more than one member is re-verified
//! with exact arithmetic, so reported collisions and image counts are
//! exact, never probabilistic.
//!
//! Sweeps fan out over rayon; results are collected and sorted, so
//! reports are deterministic regardless of scheduling.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterPresentation, Word};
use crate::lattice_words::{crossing_word, dyck_word, WordsError};
use crate::rank2_roots::{CartanData, LatticeError, LatticeVector};
use crate::reduction::{reduce, reduce_with_first_choice, Branch, ReductionError};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Words(#[from] WordsError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error("bound must be at least 1, got {0}")]
    BadBound(i64),
    #[error("depth must be at least 2, got {0}")]
    BadDepth(i64),
}

/// Outcome of a `check` sweep. `surjectivity_failures` empty means every
/// checked pair satisfied the end-to-end word equality; `collisions`
/// empty means the reduced-root-to-reflection map was injective on the
/// checked range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub m: u32,
    pub bound: i64,
    pub pairs_checked: u64,
    pub surjectivity_failures: Vec<LatticeVector>,
    pub reduced_roots: u64,
    pub image_size: u64,
    pub collisions: Vec<(LatticeVector, LatticeVector)>,
    /// Pairs whose reduction hit a step with both candidates valid, and
    /// those among them where the two choices ended at different reduced
    /// roots (after mirroring by each route's swap parity).
    pub both_choice_events: u64,
    pub both_choice_mismatches: Vec<LatticeVector>,
    pub elapsed_seconds: f64,
}

impl VerificationReport {
    /// Process-level verdict: surjectivity failures always fail; image
    /// collisions fail only at m = 2, where bijectivity is a theorem
    /// rather than a conjecture.
    pub fn passed(&self) -> bool {
        self.surjectivity_failures.is_empty() && (self.m != 2 || self.collisions.is_empty())
    }
}

/// Every primitive pair in `[1, bound]^2`, lexicographic.
fn positive_pairs(bound: i64) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    for a in 1..=bound {
        for b in 1..=bound {
            if num_integer::gcd(a, b) == 1 {
                out.push(LatticeVector::new(a, b));
            }
        }
    }
    out
}

/// Reduces `v` and checks the word-level contract: the crossing word of
/// the result spells the same reflection as the crossing word of the
/// start, with the 1 <-> 3 relabeling applied once when the trace's swap
/// parity is odd. Returns `(held, both_valid_seen, both_choice_mismatch)`.
fn check_pair(
    p: &CoxeterPresentation,
    v: LatticeVector,
    m: u32,
) -> Result<(bool, bool, bool), VerifyError> {
    let trace = reduce(v, m)?;
    if trace.steps.is_empty() {
        return Ok((true, false, false));
    }
    let result_root = p.reflection_root(&crossing_word(trace.result)?)?;
    let mut start_root = p.reflection_root(&crossing_word(v)?)?;
    if trace.net_swap_odd {
        start_root = start_root.mirrored_13();
    }
    let ok = result_root == start_root;
    let saw_both = trace.steps.iter().any(|s| s.both_valid);
    let mut mismatch = false;
    if saw_both {
        let r1 = reduce_with_first_choice(v, m, Some(Branch::SubtractFn))?;
        let r2 = reduce_with_first_choice(v, m, Some(Branch::SubtractFn1))?;
        mismatch = r1.oriented_result() != r2.oriented_result();
    }
    Ok((ok, saw_both, mismatch))
}

// ---------------------------------------------------------------------
// Modular fingerprints for the collision census.

/// Word-size primes for the fingerprint matrices: a Mersenne prime and
/// the Goldilocks prime.
const FINGERPRINT_PRIMES: [u64; 2] = [(1 << 61) - 1, 18_446_744_069_414_584_321];

/// The geometric representation with entries in `F_p[x]/(psi(x) mod p)`.
/// Generator rows are integer polynomials in `x`, so reducing them mod a
/// prime loses no structure; equal exact matrices always agree here.
struct ModRing {
    p: u64,
    /// minimal polynomial mod p, ascending, monic
    psi: Vec<u64>,
    degree: usize,
    rank: usize,
    /// gen[i][j]: coefficient vector (length `degree`) of the entry the
    /// i-th generator writes into column j of the update rule
    gen: Vec<Vec<Vec<u64>>>,
}

impl ModRing {
    fn new(pres: &CoxeterPresentation, p: u64) -> Self {
        let poly = crate::exact_algebra::minimal_polynomial(pres.field_m())
            .expect("presentation fields are valid");
        let degree = poly.degree();
        let to_mod = |value: &BigInt| -> u64 {
            value.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
        };
        let psi: Vec<u64> = poly.coeffs().iter().map(to_mod).collect();
        let rank = pres.rank();
        let mut gen = Vec::with_capacity(rank);
        for i in 1..=rank as u8 {
            let matrix = pres.generator_matrix(i).expect("generator in range");
            let mut row = Vec::with_capacity(rank);
            for j in 0..rank {
                let entry = matrix.entry((i - 1) as usize, j);
                let mut coeffs = vec![0u64; degree];
                for (k, c) in entry.coeffs().iter().enumerate() {
                    assert!(
                        c.denom() == &BigInt::from(1),
                        "generator entries are integer polynomials"
                    );
                    coeffs[k] = to_mod(c.numer());
                }
                row.push(coeffs);
            }
            gen.push(row);
        }
        ModRing { p, psi, degree, rank, gen }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((u128::from(a) * u128::from(b)) % u128::from(self.p)) as u64
    }

    fn add_assign(&self, a: &mut u64, b: u64) {
        // the Goldilocks prime is close to 2^64, so sums go through u128
        *a = ((u128::from(*a) + u128::from(b)) % u128::from(self.p)) as u64;
    }

    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// c += a * b in the quotient ring.
    fn mul_add_into(&self, c: &mut [u64], a: &[u64], b: &[u64]) {
        let d = self.degree;
        let mut wide = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    let prod = self.mul(x, y);
                    self.add_assign(&mut wide[i + j], prod);
                }
            }
        }
        // reduce mod psi (monic)
        for k in (d..wide.len()).rev() {
            let lead = wide[k];
            if lead == 0 {
                continue;
            }
            wide[k] = 0;
            for (i, &c) in self.psi.iter().take(d).enumerate() {
                if c != 0 {
                    let sub = self.mul(lead, c);
                    let slot = &mut wide[k - d + i];
                    *slot = ((u128::from(*slot) + u128::from(self.p) - u128::from(sub))
                        % u128::from(self.p)) as u64;
                }
            }
        }
        for i in 0..d {
            self.add_assign(&mut c[i], wide[i]);
        }
    }

    /// Flattened matrix of the word's group element mod p.
    fn word_fingerprint(&self, w: &Word) -> Vec<u64> {
        let n = self.rank;
        let d = self.degree;
        let mut mat = vec![vec![0u64; d]; n * n];
        for r in 0..n {
            mat[r * n + r][0] = 1;
        }
        for &letter in w.letters() {
            let i = (letter - 1) as usize;
            for r in 0..n {
                let pivot = mat[r * n + i].clone();
                if pivot.iter().all(|&c| c == 0) {
                    continue;
                }
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let g = &self.gen[i][j];
                    if g.iter().any(|&c| c != 0) {
                        self.mul_add_into(&mut mat[r * n + j], &pivot, g);
                    }
                }
                for c in mat[r * n + i].iter_mut() {
                    *c = self.neg(*c);
                }
            }
        }
        mat.into_iter().flatten().collect()
    }
}

/// Census over the reduced positive roots: distinct images and exact
/// collisions. Fingerprints group candidates; exact arithmetic settles
/// every group with more than one member.
fn image_census(
    p: &CoxeterPresentation,
    roots: &[LatticeVector],
) -> Result<(u64, Vec<(LatticeVector, LatticeVector)>), VerifyError> {
    let rings: Vec<ModRing> =
        FINGERPRINT_PRIMES.iter().map(|&prime| ModRing::new(p, prime)).collect();
    let keys: Vec<(LatticeVector, Vec<u64>)> = roots
        .par_iter()
        .map(|&r| {
            let word = crossing_word(r).expect("reduced roots are primitive and positive");
            let mut key = Vec::new();
            for ring in &rings {
                key.extend(ring.word_fingerprint(&word));
            }
            (r, key)
        })
        .collect();
    let mut groups: HashMap<Vec<u64>, Vec<LatticeVector>> = HashMap::new();
    for (r, key) in keys {
        groups.entry(key).or_default().push(r);
    }
    let mut image_size = 0u64;
    let mut collisions = Vec::new();
    for members in groups.values() {
        if members.len() == 1 {
            image_size += 1;
            continue;
        }
        // suspected collision: settle exactly
        let mut exact_classes: Vec<(crate::coxeter::GroupMatrix, Vec<LatticeVector>)> = Vec::new();
        for &r in members {
            let mat = p.eval(&crossing_word(r)?)?;
            match exact_classes.iter_mut().find(|(known, _)| *known == mat) {
                Some((_, list)) => list.push(r),
                None => exact_classes.push((mat, vec![r])),
            }
        }
        image_size += exact_classes.len() as u64;
        for (_, list) in &mut exact_classes {
            list.sort();
            for later in &list[1..] {
                collisions.push((list[0], *later));
            }
        }
    }
    collisions.sort();
    Ok((image_size, collisions))
}

/// The full desk-scale verification for one `m`: reduce-and-compare over
/// `P+` up to `bound`, then an image/collision census over the reduced
/// positive roots up to `bound`.
pub fn run_check(m: u32, bound: i64) -> Result<VerificationReport, VerifyError> {
    if bound < 1 {
        return Err(VerifyError::BadBound(bound));
    }
    let started = Instant::now();
    let cartan = CartanData::new(m)?;
    let p = CoxeterPresentation::w_m(m)?;

    let pairs = positive_pairs(bound);
    let results: Vec<(LatticeVector, bool, bool, bool)> = pairs
        .par_iter()
        .map(|&v| {
            let (ok, saw_both, mismatch) =
                check_pair(&p, v, m).unwrap_or_else(|e| panic!("sweep failed at {v}: {e}"));
            (v, ok, saw_both, mismatch)
        })
        .collect();

    let surjectivity_failures: Vec<LatticeVector> =
        results.iter().filter(|(_, ok, _, _)| !ok).map(|(v, ..)| *v).collect();
    let both_choice_events = results.iter().filter(|(_, _, saw, _)| *saw).count() as u64;
    let both_choice_mismatches: Vec<LatticeVector> = results
        .iter()
        .filter(|(_, _, _, mism)| *mism)
        .map(|(v, ..)| *v)
        .collect();

    let roots = cartan.enumerate_reduced_positive(bound);
    let (image_size, collisions) = image_census(&p, &roots)?;

    Ok(VerificationReport {
        m,
        bound,
        pairs_checked: pairs.len() as u64,
        surjectivity_failures,
        reduced_roots: roots.len() as u64,
        image_size,
        collisions,
        both_choice_events,
        both_choice_mismatches,
        elapsed_seconds: started.elapsed().as_secs_f64(),
    })
}

/// One named identity suite within a lemma run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

/// Outcome of the lemma identity suites at a given depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOutcome {
    pub m: u32,
    pub depth: i64,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

/// Chebyshev-word growth makes the closed-form identities impractical far
/// beyond this index, so the closed-form suites cap there.
const MAX_CHEBYSHEV_INDEX: i64 = 8;
/// Shift exponent cap for the shift-identity suite.
const MAX_SHIFT_J: i64 = 5;

fn word(parts: &[&str]) -> Word {
    let joined: String = parts.concat();
    Word::parse(&joined).expect("static word")
}

/// Runs the matrix-level identity suites: the Dyck-word identities, the
/// closed forms for the Chebyshev-index Dyck words, the order-m
/// identities, and the shift identity.
pub fn run_lemmas(m: u32, depth: i64) -> Result<LemmaOutcome, VerifyError> {
    if depth < 2 {
        return Err(VerifyError::BadDepth(depth));
    }
    let p = CoxeterPresentation::w_m(m)?;
    let cartan = CartanData::new(m)?;
    let mut checks = Vec::new();

    // s([a,b]) = s_3 s_2 s^{a x b} s_1
    {
        let mut cases = 0;
        let mut failures = Vec::new();
        for a in 1..=depth {
            for b in 1..=a {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                cases += 1;
                let v = LatticeVector::new(a, b);
                let lhs = p.eval(&crossing_word(v)?)?;
                let rhs = p.eval(&Word::concat(&[
                    &word(&["32"]),
                    &dyck_word(a, b)?,
                    &word(&["1"]),
                ]))?;
                if lhs != rhs {
                    failures.push(format!("dyck factorization fails at {v}"));
                }
            }
        }
        checks.push(LemmaCheck { name: "dyck_factorization".into(), cases, failures });
    }

    // s_1 s_3 s_2 s^{a x b} s_2 s_3 s_1 = s^{c x d}, [c,d] = sigma1 sigma2 [a,b]
    {
        let mut cases = 0;
        let mut failures = Vec::new();
        for a in 1..=depth {
            for b in 1..=a {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                cases += 1;
                let v = LatticeVector::new(a, b);
                let image = cartan.sigma1(cartan.sigma2(v));
                let lhs = p.eval(&Word::concat(&[
                    &word(&["132"]),
                    &dyck_word(a, b)?,
                    &word(&["231"]),
                ]))?;
                let rhs = p.eval(&dyck_word(image.a(), image.b())?)?;
                if lhs != rhs {
                    failures.push(format!("dyck conjugation fails at {v}"));
                }
            }
        }
        checks.push(LemmaCheck { name: "dyck_conjugation".into(), cases, failures });
    }

    // s_3 s_2 s_1 s([a,b]) s_1 s_2 s_3 = s([c,d])
    {
        let mut cases = 0;
        let mut failures = Vec::new();
        for a in 1..=depth {
            for b in 1..=a {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                cases += 1;
                let v = LatticeVector::new(a, b);
                let (image, holds) = crate::lattice_words::sigma_conjugate_check(v, m)?;
                if !holds {
                    failures.push(format!("segment conjugation fails at {v} -> {image}"));
                }
            }
        }
        checks.push(LemmaCheck { name: "segment_conjugation".into(), cases, failures });
    }

    // closed forms for s^{F_n x F_{n-1}} and s^{E_n x E_{n-1}}
    {
        let n_max = depth.clamp(2, MAX_CHEBYSHEV_INDEX) as usize;
        let f = cartan.f_sequence(n_max + 1);
        let e = cartan.e_sequence(n_max + 1);
        let mut cases = 0;
        let mut failures = Vec::new();
        for n in 2..=n_max {
            cases += 2;
            let f_expected = match (n, n % 2) {
                (2, _) => word(&["21"]),
                (_, 1) => {
                    let k = (n - 3) / 2;
                    Word::concat(&[
                        &word(&["1"]),
                        &word(&["321"]).repeat(k),
                        &word(&["23"]),
                        &word(&["123"]).repeat(k),
                        &word(&["1"]),
                    ])
                }
                (_, _) => {
                    let k = (n - 4) / 2;
                    Word::concat(&[
                        &word(&["1"]),
                        &word(&["321"]).repeat(k),
                        &word(&["3123"]),
                        &word(&["123"]).repeat(k),
                        &word(&["1"]),
                    ])
                }
            };
            if p.eval(&dyck_word(f[n], f[n - 1])?)? != p.eval(&f_expected)? {
                failures.push(format!("F-side closed form fails at n={n}"));
            }
            let e_expected = match (n, n % 2) {
                (2, _) => word(&["31"]),
                (_, 1) => {
                    let k = (n - 3) / 2;
                    Word::concat(&[
                        &word(&["1"]),
                        &word(&["321"]).repeat(k),
                        &word(&["2123"]),
                        &word(&["123"]).repeat(k),
                        &word(&["1"]),
                    ])
                }
                (_, _) => {
                    let k = (n - 4) / 2;
                    Word::concat(&[
                        &word(&["1"]),
                        &word(&["321"]).repeat(k),
                        &word(&["323123"]),
                        &word(&["123"]).repeat(k),
                        &word(&["1"]),
                    ])
                }
            };
            if p.eval(&dyck_word(e[n], e[n - 1])?)? != p.eval(&e_expected)? {
                failures.push(format!("E-side closed form fails at n={n}"));
            }
        }
        checks.push(LemmaCheck { name: "chebyshev_closed_forms".into(), cases, failures });
    }

    // (s_3 s_2 s_1 s([F_n, F_{n-1}]))^m = (s_1 s_2 s_3 s([F_n, F_{n-1}]))^m = e
    {
        let n_max = depth.clamp(2, MAX_CHEBYSHEV_INDEX) as usize;
        let f = cartan.f_sequence(n_max + 1);
        let mut cases = 0;
        let mut failures = Vec::new();
        for n in 1..=n_max {
            cases += 2;
            // [F_1, F_0] = [1, 0] lies on the axis; its segment crosses
            // nothing and contributes s([1,0]) = s_1, consistent with the
            // Dyck identity s([a,b]) = s_3 s_2 s^{a x b} s_1.
            let base = if n == 1 {
                word(&["1"])
            } else {
                crossing_word(LatticeVector::new(f[n], f[n - 1]))?
            };
            for conj in ["321", "123"] {
                let mat = p.eval(&Word::concat(&[&word(&[conj]), &base]))?;
                if !mat.pow(m).is_identity() {
                    failures.push(format!("order-m identity fails on the {conj} side at n={n}"));
                }
            }
        }
        checks.push(LemmaCheck { name: "order_m_identities".into(), cases, failures });
    }

    // s([a + j m b, b]) = s([a, b])
    {
        let j_max = depth.min(MAX_SHIFT_J);
        let mut cases = 0;
        let mut failures = Vec::new();
        for a in 1..=depth {
            for b in 1..=depth {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let v = LatticeVector::new(a, b);
                let base = p.eval(&crossing_word(v)?)?;
                for j in 1..=j_max {
                    cases += 1;
                    let shifted = crate::lattice_words::shift(v, j as u32, m);
                    if p.eval(&crossing_word(shifted)?)? != base {
                        failures.push(format!("shift identity fails at {v}, j={j}"));
                    }
                }
            }
        }
        checks.push(LemmaCheck { name: "shift_identity".into(), cases, failures });
    }

    Ok(LemmaOutcome { m, depth, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_check_runs_clean() {
        for m in [2u32, 3, 4, 5] {
            let report = run_check(m, 12).unwrap();
            assert!(report.passed(), "m = {m}: {report:?}");
            assert!(report.surjectivity_failures.is_empty());
            assert!(report.collisions.is_empty());
            assert!(report.both_choice_mismatches.is_empty());
            assert!(report.pairs_checked > 0);
            assert!(report.image_size <= report.reduced_roots);
        }
    }

    #[test]
    fn trivial_bound_passes() {
        let report = run_check(5, 1).unwrap();
        assert_eq!(report.pairs_checked, 1);
        assert_eq!(report.reduced_roots, 1);
        assert_eq!(report.image_size, 1);
        assert!(report.passed());
    }

    #[test]
    fn image_size_counts_fibers_at_m2() {
        // at m = 2 up to bound 5 the distinct images are s2 and the two
        // alternating families with n <= 4
        let report = run_check(2, 5).unwrap();
        assert_eq!(report.image_size, 9);
        assert!(report.collisions.is_empty());
    }

    #[test]
    fn fingerprints_agree_with_exact_matrices() {
        // fingerprint equality must match exact equality on known equal
        // and unequal pairs
        let p = CoxeterPresentation::w_m(3).unwrap();
        let ring = ModRing::new(&p, FINGERPRINT_PRIMES[0]);
        let w1 = crossing_word(LatticeVector::new(30, 11)).unwrap();
        let w2 = crossing_word(LatticeVector::new(3, 2)).unwrap();
        let w3 = crossing_word(LatticeVector::new(5, 3)).unwrap();
        assert_eq!(ring.word_fingerprint(&w1), ring.word_fingerprint(&w2));
        assert_ne!(ring.word_fingerprint(&w2), ring.word_fingerprint(&w3));
        assert_eq!(p.eval(&w1).unwrap(), p.eval(&w2).unwrap());
    }

    #[test]
    fn fingerprint_invariant_under_cancellation() {
        let mut state: u64 = 0x2545f4914f6cdd1d;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for m in [2u32, 3, 4, 5, 6] {
            let p = CoxeterPresentation::w_m(m).unwrap();
            let rings: Vec<ModRing> =
                FINGERPRINT_PRIMES.iter().map(|&q| ModRing::new(&p, q)).collect();
            for _ in 0..12 {
                let len = (next() % 30) as usize;
                let letters: Vec<u8> = (0..len).map(|_| (next() % 3 + 1) as u8).collect();
                let w1 = Word::new(letters.clone());
                // a guaranteed-equal variant: append s_i s_i
                let extra = (next() % 3 + 1) as u8;
                let mut padded = letters.clone();
                padded.push(extra);
                padded.push(extra);
                let w2 = Word::new(padded);
                for ring in &rings {
                    assert_eq!(ring.word_fingerprint(&w1), ring.word_fingerprint(&w2));
                }
            }
        }
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = run_check(3, 6).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn lemma_suites_pass_at_small_depth() {
        for m in [2u32, 3, 4] {
            let outcome = run_lemmas(m, 6).unwrap();
            assert!(outcome.passed(), "m = {m}: {outcome:?}");
            assert_eq!(outcome.checks.len(), 6);
            for check in &outcome.checks {
                assert!(check.cases > 0, "{} ran nothing", check.name);
            }
        }
    }

    #[test]
    fn dyck_identities_hold_at_m5() {
        // the Dyck-word identities are needed through m = 5 by the big
        // sweep; the Chebyshev closed forms grow too fast there, so this
        // runs the first three suites only
        let p = CoxeterPresentation::w_m(5).unwrap();
        let cartan = CartanData::new(5).unwrap();
        for a in 1..=25i64 {
            for b in 1..=a {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let v = LatticeVector::new(a, b);
                let lhs = p.eval(&crossing_word(v).unwrap()).unwrap();
                let rhs = p
                    .eval(&Word::concat(&[
                        &word(&["32"]),
                        &dyck_word(a, b).unwrap(),
                        &word(&["1"]),
                    ]))
                    .unwrap();
                assert_eq!(lhs, rhs, "dyck factorization fails at {v}, m=5");
                let image = cartan.sigma1(cartan.sigma2(v));
                let conj = p
                    .eval(&Word::concat(&[
                        &word(&["132"]),
                        &dyck_word(a, b).unwrap(),
                        &word(&["231"]),
                    ]))
                    .unwrap();
                assert_eq!(
                    conj,
                    p.eval(&dyck_word(image.a(), image.b()).unwrap()).unwrap(),
                    "dyck conjugation fails at {v}, m=5"
                );
                let (_, holds) = crate::lattice_words::sigma_conjugate_check(v, 5).unwrap();
                assert!(holds, "segment conjugation fails at {v}, m=5");
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(run_check(3, 0), Err(VerifyError::BadBound(0))));
        assert!(matches!(run_lemmas(3, 1), Err(VerifyError::BadDepth(1))));
        assert!(run_check(1, 5).is_err());
    }
}
