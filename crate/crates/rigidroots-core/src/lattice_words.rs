//! Words read off the triangulated torus.
//!
//! The universal cover carries three line families: horizontal lines
//! `y = j` (letter 1), vertical lines `x = i` (letter 3), and
//! anti-diagonals `x + y = k` (letter 2). The crossing word of a primitive
//! segment `(0,0) -> (a,b)` lists the letters of the lines it crosses in
//! parameter order. Crossing parameters are compared as exact rationals;
//! primitivity makes ties impossible, so a tie aborts rather than being
//! reordered silently.

use thiserror::Error;

use crate::coxeter::{CoxeterPresentation, CoxeterError, Word};
use crate::rank2_roots::{CartanData, LatticeError, LatticeVector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordsError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("segment direction [{c},{d}] must be primitive and nonzero")]
    BadDirection { c: i64, d: i64 },
    #[error("Dyck shape {a1}x{a2} needs a1 >= a2 >= 1")]
    BadDyckShape { a1: i64, a2: i64 },
    #[error("spiral form outside the supported shape: {0}")]
    BadSpiralForm(String),
}

/// The crossing word of the segment `(0,0) -> (a,b)` for `[a,b]` in `P+`:
/// an odd palindrome of length `2(a+b) - 3`.
pub fn crossing_word(v: LatticeVector) -> Result<Word, WordsError> {
    v.require_positive()?;
    let word = crossing_word_general(v.a(), v.b())?;
    debug_assert_eq!(word.len() as i64, 2 * (v.a() + v.b()) - 3);
    debug_assert!(word.is_reflection_word());
    Ok(word)
}

/// Crossing word of a segment toward an arbitrary primitive direction
/// `(c,d) != (0,0)`. Used for the spiral shapes of admissible curves whose
/// line-segment part leaves the positive quadrant.
pub fn crossing_word_general(c: i64, d: i64) -> Result<Word, WordsError> {
    if (c == 0 && d == 0) || num_integer::gcd(c, d) != 1 {
        return Err(WordsError::BadDirection { c, d });
    }
    // Crossing times as exact fractions num/den in (0,1), den > 0.
    let mut events: Vec<(i64, i64, u8)> = Vec::new();
    let mut family = |target: i64, letter: u8| {
        // Lines of one family crossed by t -> t(c,d) sit at parameters
        // i/|target| for 0 < i < |target|, whatever the direction's sign.
        if target != 0 {
            let den = target.abs();
            for i in 1..den {
                events.push((i, den, letter));
            }
        }
    };
    family(c, 3);
    family(d, 1);
    family(c + d, 2);
    events.sort_by(|x, y| (i128::from(x.0) * i128::from(y.1)).cmp(&(i128::from(y.0) * i128::from(x.1))));
    for pair in events.windows(2) {
        assert!(
            i128::from(pair[0].0) * i128::from(pair[1].1)
                != i128::from(pair[1].0) * i128::from(pair[0].1),
            "crossing parameters coincide for direction ({c},{d}): primitivity violated"
        );
    }
    Ok(Word::new(events.into_iter().map(|(_, _, l)| l).collect()))
}

/// The exact crossing points of the segment for `[a,b]` in `P+`, as
/// `(numerator, denominator, letter)` with `t = num/den`. Feeds the SVG
/// rendering; same ordering as `crossing_word`.
pub fn crossing_points(v: LatticeVector) -> Result<Vec<(i64, i64, u8)>, WordsError> {
    v.require_positive()?;
    let (a, b) = (v.a(), v.b());
    let mut events: Vec<(i64, i64, u8)> = Vec::new();
    for i in 1..a {
        events.push((i, a, 3));
    }
    for j in 1..b {
        events.push((j, b, 1));
    }
    for k in 1..a + b {
        events.push((k, a + b, 2));
    }
    events.sort_by(|x, y| (i128::from(x.0) * i128::from(y.1)).cmp(&(i128::from(y.0) * i128::from(x.1))));
    Ok(events)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyckStep {
    H,
    V,
}

/// The maximal Dyck path of type `a1 x a2`: the lattice path from `(0,0)`
/// to `(a1,a2)` weakly below the diagonal and closest to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckPath {
    width: i64,
    height: i64,
    steps: Vec<DyckStep>,
}

impl DyckPath {
    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }
}

/// Greedy construction: after `i` horizontal units the path height is
/// `floor(i * a2 / a1)`, the standard characterization of the maximal
/// path below the diagonal.
pub fn dyck_path(a1: i64, a2: i64) -> Result<DyckPath, WordsError> {
    if !(a1 >= a2 && a2 >= 1) {
        return Err(WordsError::BadDyckShape { a1, a2 });
    }
    let mut steps = Vec::with_capacity((a1 + a2) as usize);
    let mut height = 0i64;
    for i in 1..=a1 {
        steps.push(DyckStep::H);
        let target = (i128::from(i) * i128::from(a2) / i128::from(a1)) as i64;
        for _ in height..target {
            steps.push(DyckStep::V);
        }
        height = target;
    }
    debug_assert_eq!(height, a2);
    Ok(DyckPath { width: a1, height: a2, steps })
}

/// The word of `s^{a1 x a2}`: `23` per horizontal step, `21` per vertical.
pub fn dyck_word(a1: i64, a2: i64) -> Result<Word, WordsError> {
    let path = dyck_path(a1, a2)?;
    let mut letters = Vec::with_capacity(2 * path.steps.len());
    for step in path.steps() {
        match step {
            DyckStep::H => letters.extend_from_slice(&[2, 3]),
            DyckStep::V => letters.extend_from_slice(&[2, 1]),
        }
    }
    Ok(Word::new(letters))
}

/// The horizontal shift `[a + j m b, b]`, which does not change the rigid
/// reflection of the crossing word.
pub fn shift(v: LatticeVector, j: u32, m: u32) -> LatticeVector {
    let a = i128::from(v.a())
        + i128::from(j) * i128::from(m) * i128::from(v.b());
    LatticeVector::new(i64::try_from(a).expect("shift overflow"), v.b())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpiralVariant {
    /// `(321)^n s(nu) (123)^n`
    Plain,
    /// `(321)^n s_3 s(nu) s_3 (123)^n`
    Three,
    /// `(321)^n s_3 s_2 s(nu) s_2 s_3 (123)^n`
    ThreeTwo,
}

/// A counterclockwise spiral followed by a line segment toward `(c,d)`,
/// then the opposite spiral: the normal form of a non-self-crossing
/// admissible curve on the torus. Clockwise curves are the 1 <-> 3
/// relabeling of these and are handled by mirroring before construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpiralForm {
    pub depth: u32,
    pub variant: SpiralVariant,
    pub c: i64,
    pub d: i64,
}

impl SpiralForm {
    pub fn new(depth: u32, variant: SpiralVariant, c: i64, d: i64) -> Result<Self, WordsError> {
        let form = SpiralForm { depth, variant, c, d };
        form.validate()?;
        Ok(form)
    }

    fn validate(&self) -> Result<(), WordsError> {
        if self.d < 1 {
            return Err(WordsError::BadSpiralForm(format!(
                "segment endpoint ({},{}) must have positive second coordinate",
                self.c, self.d
            )));
        }
        if num_integer::gcd(self.c, self.d) != 1 {
            return Err(WordsError::BadSpiralForm(format!(
                "segment endpoint ({},{}) must be primitive",
                self.c, self.d
            )));
        }
        // Each variant fixes where the segment part may point: into the
        // positive quadrant for plain; into the second quadrant with the
        // first crossing horizontal for three (-d < c <= -1); past the
        // anti-diagonal for threetwo (c + d <= -1).
        let ok = match self.variant {
            SpiralVariant::Plain => self.c >= 1,
            SpiralVariant::Three => -self.d < self.c && self.c <= -1,
            SpiralVariant::ThreeTwo => self.c + self.d <= -1,
        };
        if !ok {
            return Err(WordsError::BadSpiralForm(format!(
                "endpoint ({},{}) does not fit the {:?} shape",
                self.c, self.d, self.variant
            )));
        }
        Ok(())
    }

    /// The admissible-curve word of the form, built from the generic
    /// crossing word of the segment part.
    pub fn word(&self) -> Result<Word, WordsError> {
        self.validate()?;
        let nu = crossing_word_general(self.c, self.d)?;
        let (open, close) = match self.variant {
            SpiralVariant::Plain => (Word::empty(), Word::empty()),
            SpiralVariant::Three => (Word::new(vec![3]), Word::new(vec![3])),
            SpiralVariant::ThreeTwo => (Word::new(vec![3, 2]), Word::new(vec![2, 3])),
        };
        let spiral_in = Word::parse("321").unwrap().repeat(self.depth as usize);
        let spiral_out = Word::parse("123").unwrap().repeat(self.depth as usize);
        Ok(Word::concat(&[&spiral_in, &open, &nu, &close, &spiral_out]))
    }
}

/// Normalizes a spiral form to a vector `[a,b]` in `P+` whose crossing
/// word spells the same group element in `W(m)`.
///
/// Following the normalization proof: the `three` and `threetwo` variants
/// replace the endpoint `(c,d)` by `(c + md, d)`, iterating for
/// `threetwo` until the first coordinate is positive; horizontal shifts
/// then enforce `a >= b`, and each level of spiral depth applies
/// `sigma_1 sigma_2`.
pub fn spiral_normalize(form: &SpiralForm, m: u32) -> Result<LatticeVector, WordsError> {
    form.validate()?;
    let cartan = CartanData::new(m)?;
    let md = i128::from(m) * i128::from(form.d);
    let mut first = i128::from(form.c);
    match form.variant {
        SpiralVariant::Plain => {}
        SpiralVariant::Three => {
            // -d < c <= -1 and m >= 2 put c + md in [ (m-1)d, md ): positive.
            first += md;
            debug_assert!(first >= 1);
        }
        SpiralVariant::ThreeTwo => {
            first += md;
            while first < 1 {
                first += md;
            }
        }
    }
    let mut v = LatticeVector::new(i64::try_from(first).expect("shift overflow"), form.d);
    debug_assert!(v.in_positive_lattice());
    // Orient with a >= b so the depth conjugation applies.
    while v.a() < v.b() {
        v = shift(v, 1, m);
    }
    for _ in 0..form.depth {
        v = cartan.sigma1(cartan.sigma2(v));
    }
    Ok(v)
}

/// Computes `[c,d] = sigma_1 sigma_2 [a,b]` and verifies at the matrix
/// level that conjugating the crossing word by `s_3 s_2 s_1` realizes it:
/// `s_3 s_2 s_1 s([a,b]) s_1 s_2 s_3 = s([c,d])`.
pub fn sigma_conjugate_check(
    v: LatticeVector,
    m: u32,
) -> Result<(LatticeVector, bool), WordsError> {
    v.require_positive()?;
    if v.a() < v.b() {
        return Err(WordsError::BadSpiralForm(format!(
            "{v} needs a >= b for the conjugation identity"
        )));
    }
    let cartan = CartanData::new(m)?;
    let image = cartan.sigma1(cartan.sigma2(v));
    let p = CoxeterPresentation::w_m(m)?;
    let conjugated = Word::concat(&[
        &Word::parse("321").unwrap(),
        &crossing_word(v)?,
        &Word::parse("123").unwrap(),
    ]);
    let holds = p.eval(&conjugated)? == p.eval(&crossing_word(image)?)?;
    Ok((image, holds))
}
