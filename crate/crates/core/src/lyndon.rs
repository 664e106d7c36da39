//! Free Lie algebras via Lyndon words.
//!
//! Degree-`n` Lie elements are expanded in the bracketed Lyndon basis coming
//! from the standard (right) factorization: a Lyndon word `w` of length >= 2
//! splits as `w = u v` with `v` its longest proper Lyndon suffix, and the
//! basis element is `[B(u), B(v)]`. Lyndon words are listed in lexicographic
//! order; coordinates always follow that order.
//!
//! Membership in the Lie subspace is decided by the Dynkin criterion: a
//! homogeneous `a` of degree `n` is a Lie element iff `D(a) = n a`, where `D`
//! left-brackets the letters of each word.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::linalg::{QMatrix, Subspace};
use crate::rational::{qi, Q};
use crate::series::Series;
use crate::word::{words_of_length, Alphabet, Word};

/// A full bracketing of a word, e.g. `[e0, [e0, e1]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Letter(u8),
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    /// Expands into the word algebra as an exact polynomial.
    pub fn expand(&self, alphabet: &Alphabet, max_degree: usize) -> Series {
        match self {
            Bracketing::Letter(l) => {
                Series::monomial(alphabet, max_degree, Word::single(*l), qi(1))
            }
            Bracketing::Node(a, b) => {
                a.expand(alphabet, max_degree).bracket(&b.expand(alphabet, max_degree))
            }
        }
    }

    pub fn display_in(&self, alphabet: &Alphabet) -> String {
        match self {
            Bracketing::Letter(l) => alphabet.name(*l).to_owned(),
            Bracketing::Node(a, b) => {
                format!("[{}, {}]", a.display_in(alphabet), b.display_in(alphabet))
            }
        }
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Letter(l) => write!(f, "{l}"),
            Bracketing::Node(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

/// Whether `w` is strictly smaller than all of its proper rotations.
pub fn is_lyndon(w: &Word) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    let l = w.letters();
    (1..n).all(|i| {
        let rotation = l[i..].iter().chain(l[..i].iter());
        l.iter().lt(rotation)
    })
}

/// All Lyndon words of the exact length `n`, in lexicographic order (Duval).
pub fn lyndon_words(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    if n == 0 {
        return Vec::new();
    }
    let k = alphabet.len() as u8;
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word::from_indices(w.clone()));
        }
        // Extend periodically to length n, then increment the last
        // incrementable position.
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() % m];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => return out,
        }
    }
}

/// Standard factorization `w = u v`: `v` is the longest proper Lyndon suffix.
pub fn standard_factorization(w: &Word) -> (Word, Word) {
    assert!(w.len() >= 2, "factorization needs length >= 2");
    debug_assert!(is_lyndon(w), "standard factorization is for Lyndon words");
    for i in 1..w.len() {
        let v = w.slice(i, w.len());
        if is_lyndon(&v) {
            return (w.slice(0, i), v);
        }
    }
    unreachable!("every Lyndon word of length >= 2 has a proper Lyndon suffix");
}

fn bracketing_of(w: &Word) -> Bracketing {
    if w.len() == 1 {
        Bracketing::Letter(w.letters()[0])
    } else {
        let (u, v) = standard_factorization(w);
        Bracketing::Node(Box::new(bracketing_of(&u)), Box::new(bracketing_of(&v)))
    }
}

/// The degree-`n` slice of the free Lie algebra on `alphabet`.
///
/// Obtained through [`lyndon_basis`], which caches one instance per
/// (alphabet, degree) pair.
pub struct LyndonBasis {
    alphabet: Alphabet,
    degree: usize,
    words: Vec<Word>,
    bracketings: Vec<Bracketing>,
    expansions: Vec<Series>,
    /// Column `j` holds the expansion of basis element `j` in the degree-`n`
    /// word basis (lexicographic order).
    expansion_matrix: QMatrix,
}

type BasisCache = Mutex<HashMap<(Alphabet, usize), Arc<LyndonBasis>>>;
static CACHE: LazyLock<BasisCache> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Cached Lyndon basis of the free Lie algebra slice of the given degree.
pub fn lyndon_basis(alphabet: &Alphabet, degree: usize) -> Arc<LyndonBasis> {
    let key = (alphabet.clone(), degree);
    if let Some(b) = CACHE.lock().unwrap().get(&key) {
        return Arc::clone(b);
    }
    let built = Arc::new(LyndonBasis::build(alphabet, degree));
    CACHE.lock().unwrap().entry(key).or_insert(built).clone()
}

impl LyndonBasis {
    fn build(alphabet: &Alphabet, degree: usize) -> Self {
        let words = lyndon_words(alphabet, degree);
        let bracketings: Vec<Bracketing> = words.iter().map(bracketing_of).collect();
        let expansions: Vec<Series> =
            bracketings.iter().map(|b| b.expand(alphabet, degree)).collect();
        let all_words = words_of_length(alphabet, degree);
        let index: HashMap<&Word, usize> =
            all_words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut m = QMatrix::zero(all_words.len(), words.len());
        for (j, e) in expansions.iter().enumerate() {
            for (w, c) in e.terms() {
                m.set(index[w], j, c.clone());
            }
        }
        LyndonBasis {
            alphabet: alphabet.clone(),
            degree,
            words,
            bracketings,
            expansions,
            expansion_matrix: m,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the Lie slice (the number of Lyndon words).
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn bracketings(&self) -> &[Bracketing] {
        &self.bracketings
    }

    /// Expansions of the basis elements, exact at truncation `degree`.
    pub fn expansions(&self) -> &[Series] {
        &self.expansions
    }

    /// Coordinates of a homogeneous degree-`degree` Lie element.
    pub fn to_coords(&self, s: &Series) -> Result<Vec<Q>> {
        assert_eq!(s.alphabet(), &self.alphabet, "alphabet mismatch");
        if !s.is_zero() && s.homogeneous_degree() != Some(self.degree) {
            return Err(AlgebraError::NotHomogeneous);
        }
        let all_words = words_of_length(&self.alphabet, self.degree);
        let v: Vec<Q> = all_words.iter().map(|w| s.coeff(w)).collect();
        self.expansion_matrix.solve(&v).ok_or(AlgebraError::NotLie)
    }

    /// The Lie element with the given Lyndon coordinates, exact at truncation
    /// `degree`.
    pub fn from_coords(&self, coords: &[Q]) -> Series {
        assert_eq!(coords.len(), self.dim(), "coordinate count mismatch");
        let mut acc = Series::zero(&self.alphabet, self.degree);
        for (c, e) in coords.iter().zip(&self.expansions) {
            if !c.is_zero() {
                acc = acc.add(&e.scale(c));
            }
        }
        acc
    }

    /// Coefficient vector of a homogeneous series in the degree-`degree` word
    /// basis (lexicographic order).
    pub fn word_vector(&self, s: &Series) -> Vec<Q> {
        words_of_length(&self.alphabet, self.degree).iter().map(|w| s.coeff(w)).collect()
    }

    /// Transports a subspace from Lyndon coordinates to word coordinates.
    pub fn coords_subspace_to_words(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient_dim(), self.dim(), "expected Lyndon-coordinate ambient");
        let gens = s.basis().iter().map(|v| self.word_vector(&self.from_coords(v)));
        Subspace::from_spanning(self.alphabet.len().pow(self.degree as u32), gens.collect::<Vec<_>>())
    }
}

/// Dynkin left-bracketing of a single word: `w_1 w_2 .. w_n` goes to
/// `[..[[w_1, w_2], w_3].., w_n]`.
pub fn dynkin_of_word(alphabet: &Alphabet, w: &Word) -> Series {
    let n = w.len();
    assert!(n >= 1, "Dynkin map needs a nonempty word");
    let letters = w.letters();
    let mut acc = Series::monomial(alphabet, n, Word::single(letters[0]), qi(1));
    for &l in &letters[1..] {
        let e = Series::monomial(alphabet, n, Word::single(l), qi(1));
        acc = acc.bracket(&e);
    }
    acc
}

/// Dynkin map extended linearly; preserves each graded piece.
pub fn dynkin(s: &Series) -> Series {
    let mut acc = Series::zero(s.alphabet(), s.max_degree());
    for (w, c) in s.terms() {
        if w.is_empty() {
            continue;
        }
        acc = acc.add(&dynkin_of_word(s.alphabet(), w).with_truncation(s.max_degree()).scale(c));
    }
    acc
}

/// Dynkin criterion: `s` lies in the free Lie algebra iff it has no constant
/// term and `D(s_n) = n s_n` for every graded piece.
pub fn is_lie(s: &Series) -> bool {
    if !s.constant_term().is_zero() {
        return false;
    }
    let Some(top) = s.top_degree() else { return true };
    (1..=top).all(|n| {
        let comp = s.graded_component(n);
        dynkin(&comp) == comp.scale(&qi(n as i64))
    })
}

/// Lie bracket of exact polynomials, lifted so no cross term is truncated
/// away.
pub fn lie_bracket(a: &Series, b: &Series) -> Series {
    let need = a.top_degree().unwrap_or(0) + b.top_degree().unwrap_or(0);
    let max = a.max_degree().max(b.max_degree()).max(need);
    a.with_truncation(max).bracket(&b.with_truncation(max))
}

/// The derivation `d_a` on the `{e0, e1}` algebra: `e0 -> 0`, `e1 -> [e1, a]`.
fn ihara_derivation(a: &Series, target: &Series) -> Series {
    let max = target.max_degree();
    let alphabet = target.alphabet();
    let e1 = Series::letter(alphabet, max, "e1");
    let images = vec![Series::zero(alphabet, max), e1.bracket(&a.with_truncation(max))];
    target.derivation_apply(&images)
}

/// Ihara bracket `<a, b> = [a, b] + d_a(b) - d_b(a)` on exact Lie polynomials
/// over `{e0, e1}`.
pub fn ihara_bracket(a: &Series, b: &Series) -> Series {
    assert_eq!(a.alphabet(), &Alphabet::e01(), "Ihara bracket lives over {{e0, e1}}");
    let need = a.top_degree().unwrap_or(0) + b.top_degree().unwrap_or(0);
    let max = a.max_degree().max(b.max_degree()).max(need);
    let (al, bl) = (a.with_truncation(max), b.with_truncation(max));
    al.bracket(&bl).add(&ihara_derivation(&al, &bl)).sub(&ihara_derivation(&bl, &al))
}

/// A Lie element: an exact Lie polynomial, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement(Series);

impl LieElement {
    pub fn new(s: Series) -> Result<Self> {
        if !is_lie(&s) {
            return Err(AlgebraError::NotLie);
        }
        Ok(LieElement(s))
    }

    pub fn series(&self) -> &Series {
        &self.0
    }

    pub fn into_series(self) -> Series {
        self.0
    }

    pub fn bracket(&self, other: &LieElement) -> LieElement {
        LieElement(lie_bracket(&self.0, &other.0))
    }

    pub fn ihara(&self, other: &LieElement) -> LieElement {
        LieElement(ihara_bracket(&self.0, &other.0))
    }
}
