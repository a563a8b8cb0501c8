//! Coxeter presentations and their geometric representation.
//!
//! A presentation fixes generators `s_1..s_n` with relations
//! `(s_i s_j)^{m_ij} = e`. The geometric representation acts on the span
//! of the simple roots by `s_i(v) = v - 2B(v, a_i) a_i` with
//! `B(a_i, a_j) = -cos(pi/m_ij)`; the representation is faithful, so
//! exact matrix equality decides the word problem. All matrix entries
//! live in the single field `Q(2cos(pi/M))` with `M` the lcm of the
//! finite labels.

use std::fmt;

use thiserror::Error;

use crate::exact_algebra::{AlgebraError, AlgebraicElement, SymbolicPolynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("generator {letter} out of range for rank {rank}")]
    GeneratorOutOfRange { letter: u8, rank: usize },
    #[error("word is not an odd-length palindrome")]
    NotReflectionWord,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An off-diagonal Coxeter label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Finite(u32),
    Infinite,
}

/// A finite word in the generators, letters `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Parses either a space-free digit string ("2321232") or a
    /// comma-separated list ("2,3,2") for ranks above 9.
    pub fn parse(text: &str) -> Result<Self, CoxeterError> {
        let bad = |t: &str| CoxeterError::InvalidPresentation(format!("unparseable word {t:?}"));
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let letters = if text.contains(',') {
            text.split(',')
                .map(|p| p.trim().parse::<u8>().map_err(|_| bad(text)))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad(text)))
                .collect::<Result<Vec<_>, _>>()?
        };
        if letters.contains(&0) {
            return Err(bad(text));
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Odd-length palindromes are exactly the words spelling reflections.
    pub fn is_reflection_word(&self) -> bool {
        let k = self.letters.len();
        k % 2 == 1 && (0..k / 2).all(|j| self.letters[j] == self.letters[k - 1 - j])
    }

    pub fn concat(parts: &[&Word]) -> Word {
        let mut letters = Vec::new();
        for p in parts {
            letters.extend_from_slice(&p.letters);
        }
        Word { letters }
    }

    pub fn repeat(&self, times: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    /// The diagonal-mirror relabeling of the rank-3 alphabet: 1 <-> 3,
    /// 2 fixed. Extends to a group automorphism of any presentation that
    /// is symmetric under that swap, such as `W(m)`.
    pub fn relabel_13(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|&l| match l {
                    1 => 3,
                    3 => 1,
                    other => other,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().any(|&l| l > 9) {
            let parts: Vec<String> = self.letters.iter().map(u8::to_string).collect();
            write!(f, "{}", parts.join(","))
        } else {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        }
    }
}

/// A Coxeter presentation together with its geometric-representation data.
#[derive(Clone, Debug)]
pub struct CoxeterPresentation {
    n: usize,
    labels: Vec<Vec<Label>>,
    field_m: u32,
    /// `gen_coeffs[i][j] = -2B(a_j, a_i)`, the off-diagonal entries of the
    /// i-th generator matrix's modified row; `gen_coeffs[i][i] = -1`.
    gen_coeffs: Vec<Vec<AlgebraicElement>>,
}

impl CoxeterPresentation {
    pub fn new(labels: Vec<Vec<Label>>) -> Result<Self, CoxeterError> {
        let n = labels.len();
        if n == 0 {
            return Err(CoxeterError::InvalidPresentation("empty rank".into()));
        }
        for (i, row) in labels.iter().enumerate() {
            if row.len() != n {
                return Err(CoxeterError::InvalidPresentation("label matrix not square".into()));
            }
            for (j, &l) in row.iter().enumerate() {
                if i == j {
                    if l != Label::Finite(1) {
                        return Err(CoxeterError::InvalidPresentation(
                            "diagonal labels must be 1".into(),
                        ));
                    }
                } else {
                    if l != labels[j][i] {
                        return Err(CoxeterError::InvalidPresentation(
                            "label matrix not symmetric".into(),
                        ));
                    }
                    if let Label::Finite(v) = l {
                        if v < 2 {
                            return Err(CoxeterError::InvalidPresentation(
                                "off-diagonal labels must be at least 2".into(),
                            ));
                        }
                    }
                }
            }
        }
        let mut field_m: u32 = 1;
        for (i, row) in labels.iter().enumerate() {
            for (j, &l) in row.iter().enumerate() {
                if i != j {
                    if let Label::Finite(v) = l {
                        field_m = num_integer::lcm(field_m, v);
                    }
                }
            }
        }
        let field_m = field_m.max(2);
        let mut gen_coeffs = Vec::with_capacity(n);
        for (i, label_row) in labels.iter().enumerate() {
            let mut row = Vec::with_capacity(n);
            for (j, &label) in label_row.iter().enumerate() {
                let e = if i == j {
                    AlgebraicElement::from_integer(field_m, -1)
                } else {
                    match label {
                        // -2B(a_j, a_i) = 2cos(pi/m_ij) = p_{M/m_ij}(x)
                        Label::Finite(l) => {
                            AlgebraicElement::two_cos_multiple(field_m, field_m / l)?
                        }
                        Label::Infinite => AlgebraicElement::from_integer(field_m, 2),
                    }
                };
                row.push(e);
            }
            gen_coeffs.push(row);
        }
        Ok(CoxeterPresentation { n, labels, field_m, gen_coeffs })
    }

    /// The rank-3 group `W(m)`: labels `m_12 = m_23 = m`, `m_13` infinite.
    pub fn w_m(m: u32) -> Result<Self, CoxeterError> {
        if m < 2 {
            return Err(CoxeterError::InvalidPresentation(format!(
                "W(m) requires m >= 2, got {m}"
            )));
        }
        let one = Label::Finite(1);
        let fm = Label::Finite(m);
        Self::new(vec![
            vec![one, fm, Label::Infinite],
            vec![fm, one, fm],
            vec![Label::Infinite, fm, one],
        ])
    }

    /// The rank-`n` presentation with every off-diagonal label infinite.
    pub fn all_infinity(n: usize) -> Result<Self, CoxeterError> {
        let labels = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Label::Finite(1) } else { Label::Infinite })
                    .collect()
            })
            .collect();
        Self::new(labels)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels[i - 1][j - 1]
    }

    /// The `M` of the coordinate field `Q(2cos(pi/M))`.
    pub fn field_m(&self) -> u32 {
        self.field_m
    }

    /// The symmetric bilinear form `B(a_i, a_j) = -cos(pi/m_ij)` as an
    /// n-by-n matrix; the infinite label contributes `-1`.
    pub fn bilinear_form(&self) -> GroupMatrix {
        let minus_half = AlgebraicElement::from_rational(
            self.field_m,
            num_rational::BigRational::new((-1).into(), 2.into()),
        );
        let mut entries = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if i == j {
                    entries.push(AlgebraicElement::one(self.field_m));
                } else {
                    // B_ij = -(1/2) * (-2B)_ji with the stored sign flipped:
                    // gen_coeffs[i][j] holds -2B(a_j, a_i) = -2B_ij.
                    entries.push(&minus_half * &self.gen_coeffs[i][j]);
                }
            }
        }
        GroupMatrix { n: self.n, entries }
    }

    /// `B(u, v)` for coordinate vectors in the simple-root basis.
    pub fn b_value(&self, u: &[AlgebraicElement], v: &[AlgebraicElement]) -> AlgebraicElement {
        let b = self.bilinear_form();
        let mut acc = AlgebraicElement::zero(self.field_m);
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                acc = &acc + &(&(ui * vj) * b.entry(i, j));
            }
        }
        acc
    }

    /// The matrix of `s_i` in the simple-root basis: the identity with row
    /// `i` replaced by the reflection row. An involution preserving `B`.
    pub fn generator_matrix(&self, i: u8) -> Result<GroupMatrix, CoxeterError> {
        self.check_letter(i)?;
        let mut m = GroupMatrix::identity(self);
        let row = (i - 1) as usize;
        for j in 0..self.n {
            m.entries[row * self.n + j] = self.gen_coeffs[row][j].clone();
        }
        Ok(m)
    }

    fn check_letter(&self, letter: u8) -> Result<(), CoxeterError> {
        if letter == 0 || letter as usize > self.n {
            return Err(CoxeterError::GeneratorOutOfRange { letter, rank: self.n });
        }
        Ok(())
    }

    /// Evaluates a word to its matrix, the product of generator matrices
    /// in word order; the empty word is the identity.
    pub fn eval(&self, w: &Word) -> Result<GroupMatrix, CoxeterError> {
        let mut m = GroupMatrix::identity(self);
        for &letter in w.letters() {
            self.check_letter(letter)?;
            self.right_mul_generator(&mut m, letter);
        }
        Ok(m)
    }

    /// In-place `A <- A * M_i`. Only column `i` of `A` feeds the update:
    /// column `j` gains `A[.,i] * g_j` and column `i` flips sign.
    fn right_mul_generator(&self, a: &mut GroupMatrix, letter: u8) {
        let i = (letter - 1) as usize;
        let g = &self.gen_coeffs[i];
        for r in 0..self.n {
            let pivot = a.entries[r * self.n + i].clone();
            if pivot.is_zero() {
                continue;
            }
            for (j, gj) in g.iter().enumerate() {
                if j == i {
                    continue;
                }
                if !gj.is_zero() {
                    let cell = &a.entries[r * self.n + j];
                    a.entries[r * self.n + j] = cell + &(&pivot * gj);
                }
            }
            a.entries[r * self.n + i] = -&pivot;
        }
    }

    /// Applies the word's group element to the `basis`-th simple root,
    /// walking the generators right to left. A column extraction that
    /// avoids full matrix products.
    pub fn apply_word_to_basis(
        &self,
        w: &Word,
        basis: u8,
    ) -> Result<Vec<AlgebraicElement>, CoxeterError> {
        self.check_letter(basis)?;
        let mut vec = vec![AlgebraicElement::zero(self.field_m); self.n];
        vec[(basis - 1) as usize] = AlgebraicElement::one(self.field_m);
        for &letter in w.letters().iter().rev() {
            self.check_letter(letter)?;
            let i = (letter - 1) as usize;
            let g = &self.gen_coeffs[i];
            // only coordinate i moves: v_i <- -v_i + sum_{j != i} g_j v_j
            let mut acc = -&vec[i];
            for (j, value) in vec.iter().enumerate() {
                if j != i && !g[j].is_zero() && !value.is_zero() {
                    acc = &acc + &(&g[j] * value);
                }
            }
            vec[i] = acc;
        }
        Ok(vec)
    }

    /// The positive root of the reflection spelled by an odd palindrome:
    /// the word's prefix applied to the central simple root, then
    /// sign-normalized so every coordinate is nonnegative.
    pub fn reflection_root(&self, w: &Word) -> Result<RootVector, CoxeterError> {
        if !w.is_reflection_word() {
            return Err(CoxeterError::NotReflectionWord);
        }
        let half = w.len() / 2;
        let prefix = Word::new(w.letters()[..half].to_vec());
        let center = w.letters()[half];
        let coords = self.apply_word_to_basis(&prefix, center)?;
        Ok(RootVector::normalized(coords))
    }

    /// The matrix of the reflection determined by a unit root `r`:
    /// `v -> v - 2B(v, r) r`. Used to cross-check `reflection_root`.
    pub fn reflection_matrix(&self, root: &RootVector) -> GroupMatrix {
        let b = self.bilinear_form();
        // (S)_{jt} = delta_jt - 2 r_j (B r)_t
        let mut br = vec![AlgebraicElement::zero(self.field_m); self.n];
        for (t, slot) in br.iter_mut().enumerate() {
            for k in 0..self.n {
                *slot = &*slot + &(b.entry(t, k) * &root.coords[k]);
            }
        }
        let two = AlgebraicElement::from_integer(self.field_m, 2);
        let mut m = GroupMatrix::identity(self);
        for j in 0..self.n {
            for (t, brt) in br.iter().enumerate() {
                let correction = &(&two * &root.coords[j]) * brt;
                let cell = &m.entries[j * self.n + t];
                m.entries[j * self.n + t] = cell - &correction;
            }
        }
        m
    }
}

/// An exact matrix over `Q(2cos(pi/M))` in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMatrix {
    n: usize,
    entries: Vec<AlgebraicElement>,
}

impl GroupMatrix {
    pub fn identity(p: &CoxeterPresentation) -> Self {
        let mut entries = vec![AlgebraicElement::zero(p.field_m); p.n * p.n];
        for i in 0..p.n {
            entries[i * p.n + i] = AlgebraicElement::one(p.field_m);
        }
        GroupMatrix { n: p.n, entries }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &AlgebraicElement {
        &self.entries[row * self.n + col]
    }

    pub fn mul(&self, other: &GroupMatrix) -> GroupMatrix {
        assert_eq!(self.n, other.n, "rank mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = &self.entries[r * n] * &other.entries[c];
                for k in 1..n {
                    acc = &acc + &(&self.entries[r * n + k] * &other.entries[k * n + c]);
                }
                entries.push(acc);
            }
        }
        GroupMatrix { n, entries }
    }

    pub fn pow(&self, e: u32) -> GroupMatrix {
        assert!(e >= 1);
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn transpose(&self) -> GroupMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(self.entries[c * n + r].clone());
            }
        }
        GroupMatrix { n, entries }
    }

    /// Applies the matrix to a coordinate column vector.
    pub fn apply(&self, v: &[AlgebraicElement]) -> Vec<AlgebraicElement> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| {
                let mut acc = &self.entries[r * self.n] * &v[0];
                for (k, vk) in v.iter().enumerate().skip(1) {
                    acc = &acc + &(&self.entries[r * self.n + k] * vk);
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(idx, e)| {
            if idx / self.n == idx % self.n {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// A stable textual key for hashing and grouping exact matrices.
    pub fn canonical_key(&self) -> String {
        use std::fmt::Write;
        let mut key = format!("n{};", self.n);
        for e in &self.entries {
            key.push('[');
            for c in e.coeffs() {
                let _ = write!(key, "{}/{},", c.numer(), c.denom());
            }
            key.push(']');
        }
        key
    }
}

impl fmt::Display for GroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            write!(f, "[ ")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// Coordinates of a root in the simple-root basis, sign-normalized to the
/// positive side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVector {
    coords: Vec<AlgebraicElement>,
}

impl RootVector {
    /// Normalizes prefix-image coordinates: a root whose nonzero
    /// coordinates are all negative is negated; mixed signs cannot occur
    /// for genuine roots and abort.
    fn normalized(coords: Vec<AlgebraicElement>) -> Self {
        let signs: Vec<i8> = coords.iter().map(AlgebraicElement::sign).collect();
        let has_pos = signs.iter().any(|&s| s > 0);
        let has_neg = signs.iter().any(|&s| s < 0);
        assert!(
            !(has_pos && has_neg),
            "mixed-sign root coordinates: not a root image"
        );
        assert!(has_pos || has_neg, "zero vector is not a root");
        if has_neg {
            RootVector { coords: coords.iter().map(|c| -c).collect() }
        } else {
            RootVector { coords }
        }
    }

    pub fn coords(&self) -> &[AlgebraicElement] {
        &self.coords
    }

    /// The image of the root under the rank-3 diagonal-mirror relabeling:
    /// coordinates 1 and 3 exchanged. Normalization is unaffected.
    pub fn mirrored_13(&self) -> RootVector {
        assert_eq!(self.coords.len(), 3, "the 1 <-> 3 mirror is a rank-3 notion");
        RootVector {
            coords: vec![self.coords[2].clone(), self.coords[1].clone(), self.coords[0].clone()],
        }
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Root coordinates of a rank-3 reflection word over generic `m`: matrix
/// entries live in `Z[x]` with the two finite labels left as `x` and the
/// infinite pair contributing the constant 2. Coordinates are returned
/// exactly as computed, without sign normalization.
pub fn reflection_root_symbolic(w: &Word) -> Result<Vec<SymbolicPolynomial>, CoxeterError> {
    if !w.is_reflection_word() {
        return Err(CoxeterError::NotReflectionWord);
    }
    if let Some(&bad) = w.letters().iter().find(|&&l| l == 0 || l > 3) {
        return Err(CoxeterError::GeneratorOutOfRange { letter: bad, rank: 3 });
    }
    let x = SymbolicPolynomial::x;
    let minus_one = || SymbolicPolynomial::constant(-1);
    let two = || SymbolicPolynomial::constant(2);
    // gen_coeffs rows of the generic W(m) shape
    let g: [Vec<SymbolicPolynomial>; 3] = [
        vec![minus_one(), x(), two()],
        vec![x(), minus_one(), x()],
        vec![two(), x(), minus_one()],
    ];
    let half = w.len() / 2;
    let center = (w.letters()[half] - 1) as usize;
    let mut mat: Vec<SymbolicPolynomial> = (0..9)
        .map(|idx| {
            if idx / 3 == idx % 3 {
                SymbolicPolynomial::one()
            } else {
                SymbolicPolynomial::zero()
            }
        })
        .collect();
    for &letter in &w.letters()[..half] {
        let i = (letter - 1) as usize;
        for r in 0..3 {
            let pivot = mat[r * 3 + i].clone();
            if pivot.is_zero() {
                continue;
            }
            for j in 0..3 {
                if j == i || g[i][j].is_zero() {
                    continue;
                }
                mat[r * 3 + j] = &mat[r * 3 + j] + &(&pivot * &g[i][j]);
            }
            mat[r * 3 + i] = -&pivot;
        }
    }
    Ok((0..3).map(|r| mat[r * 3 + center].clone()).collect())
}
