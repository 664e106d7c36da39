//! A three-by-three matrix model over the two-sided word algebra.
//!
//! The carrier is the span of pairs (e-word, f-word): the completed tensor
//! square of the two-letter word algebra, with the `e` side commuting with
//! the `f` side structurally. On top of it sit the representation sending
//! `e0`, `e1` to the matrices `rho0`, `rho1`, the comparison between the
//! matrix-side coefficients and the harmonic coproduct, the commutant
//! computations with their closed-form parameterizations, and exactness rank
//! checks for three short complexes.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::dmr::{delta_w, y_word, WElement};
use crate::linalg::{QMatrix, Subspace};
use crate::lyndon::lyndon_basis;
use crate::rational::{qi, Q};
use crate::series::Series;
use crate::word::{words_of_length, words_up_to, Alphabet, Word};

use num_traits::Zero;

/// Element of the algebra spanned by pairs (e-word, f-word), truncated in
/// total degree. Multiplication concatenates the two sides independently;
/// no rewriting is involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    max_degree: usize,
    terms: BTreeMap<(Word, Word), Q>,
}

impl BiSeries {
    pub fn zero(max_degree: usize) -> Self {
        BiSeries { max_degree, terms: BTreeMap::new() }
    }

    pub fn one(max_degree: usize) -> Self {
        BiSeries::monomial(Word::empty(), Word::empty(), max_degree)
    }

    /// A single pair with coefficient 1. Panics beyond the truncation.
    pub fn monomial(e_word: Word, f_word: Word, max_degree: usize) -> Self {
        assert!(
            e_word.len() + f_word.len() <= max_degree,
            "monomial of total degree {} beyond truncation {max_degree}",
            e_word.len() + f_word.len(),
        );
        let mut terms = BTreeMap::new();
        terms.insert((e_word, f_word), qi(1));
        BiSeries { max_degree, terms }
    }

    pub fn e_letter(max_degree: usize, name: &str) -> Self {
        let idx = Alphabet::e01().index_of(name).expect("an e-letter");
        BiSeries::monomial(Word::single(idx), Word::empty(), max_degree)
    }

    pub fn f_letter(max_degree: usize, name: &str) -> Self {
        let idx = Alphabet::f01().index_of(name).expect("an f-letter");
        BiSeries::monomial(Word::empty(), Word::single(idx), max_degree)
    }

    /// Left leg of the tensor square: words become e-words.
    pub fn embed_e(s: &Series) -> BiSeries {
        assert_eq!(s.alphabet().len(), 2, "two-letter source alphabet");
        let mut out = BiSeries::zero(s.max_degree());
        for (w, c) in s.terms() {
            out.terms.insert((w.clone(), Word::empty()), c.clone());
        }
        out
    }

    /// Right leg of the tensor square: words become f-words.
    pub fn embed_f(s: &Series) -> BiSeries {
        assert_eq!(s.alphabet().len(), 2, "two-letter source alphabet");
        let mut out = BiSeries::zero(s.max_degree());
        for (w, c) in s.terms() {
            out.terms.insert((Word::empty(), w.clone()), c.clone());
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e_word: &Word, f_word: &Word) -> Q {
        self.terms.get(&(e_word.clone(), f_word.clone())).cloned().unwrap_or_else(Q::zero)
    }

    fn insert(&mut self, key: (Word, Word), c: Q) {
        if c.is_zero() || key.0.len() + key.1.len() > self.max_degree {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            // re-fetch to remove; cheap since the map is small at this point
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let mut out = BiSeries::zero(self.max_degree.min(other.max_degree));
        for (k, c) in self.terms.iter().chain(other.terms.iter()) {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiSeries) -> BiSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiSeries {
        self.scale(&qi(-1))
    }

    pub fn scale(&self, k: &Q) -> BiSeries {
        let mut out = BiSeries::zero(self.max_degree);
        if k.is_zero() {
            return out;
        }
        for (key, c) in &self.terms {
            out.terms.insert(key.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &BiSeries) -> BiSeries {
        let max = self.max_degree.min(other.max_degree);
        let mut out = BiSeries::zero(max);
        for ((e1, f1), c1) in &self.terms {
            for ((e2, f2), c2) in &other.terms {
                if e1.len() + f1.len() + e2.len() + f2.len() > max {
                    continue;
                }
                out.insert((e1.concat(e2), f1.concat(f2)), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> BiSeries {
        let mut out = BiSeries::one(self.max_degree);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Terms of total degree exactly `n`.
    pub fn graded_component(&self, n: usize) -> BiSeries {
        let mut out = BiSeries::zero(self.max_degree);
        for ((e, f), c) in &self.terms {
            if e.len() + f.len() == n {
                out.terms.insert((e.clone(), f.clone()), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let e_names = Alphabet::e01();
        let f_names = Alphabet::f01();
        let mut first = true;
        for ((ew, fw), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (ew.is_empty(), fw.is_empty()) {
                (true, true) => "1".to_string(),
                (false, true) => ew.display_in(&e_names),
                (true, false) => fw.display_in(&f_names),
                (false, false) => format!("{}{}", ew.display_in(&e_names), fw.display_in(&f_names)),
            };
            write!(f, "{c}*{mono}")?;
        }
        Ok(())
    }
}

/// Dense matrix over [`BiSeries`] with a uniform truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiMat {
    rows: usize,
    cols: usize,
    entries: Vec<BiSeries>,
}

/// 3×3 case of [`BiMat`]; the representation and its commutants live here.
pub type Mat3 = BiMat;

impl BiMat {
    pub fn zero(rows: usize, cols: usize, max_degree: usize) -> Self {
        BiMat { rows, cols, entries: vec![BiSeries::zero(max_degree); rows * cols] }
    }

    pub fn identity(n: usize, max_degree: usize) -> Self {
        let mut m = BiMat::zero(n, n, max_degree);
        for i in 0..n {
            m.set(i, i, BiSeries::one(max_degree));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BiSeries>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        BiMat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BiSeries {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BiSeries) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn max_degree(&self) -> usize {
        self.entries.first().map_or(0, BiSeries::max_degree)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiSeries::is_zero)
    }

    pub fn add(&self, other: &BiMat) -> BiMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        BiMat { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &BiMat) -> BiMat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiMat {
        BiMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(BiSeries::neg).collect(),
        }
    }

    pub fn mul(&self, other: &BiMat) -> BiMat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let max = self.max_degree().min(other.max_degree());
        let mut out = BiMat::zero(self.rows, other.cols, max);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BiSeries::zero(max);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Entrywise left multiplication by a scalar series.
    pub fn scale_left(&self, s: &BiSeries) -> BiMat {
        BiMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| s.mul(a)).collect(),
        }
    }

    /// Entrywise right multiplication by a scalar series.
    pub fn scale_right(&self, s: &BiSeries) -> BiMat {
        BiMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> BiMat {
        assert_eq!(self.rows, self.cols, "square matrix");
        let mut out = BiMat::identity(self.rows, self.max_degree());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn commutator(&self, other: &BiMat) -> BiMat {
        self.mul(other).sub(&other.mul(self))
    }
}

/// The constants of the three-dimensional representation at a fixed
/// truncation: the two generator images, the rank-one factorization of the
/// second one, and the bordered row/column entering the commutant
/// description.
pub struct Rep3 {
    max_degree: usize,
}

impl Rep3 {
    pub fn new(max_degree: usize) -> Self {
        Rep3 { max_degree }
    }

    fn e(&self, name: &str) -> BiSeries {
        BiSeries::e_letter(self.max_degree, name)
    }

    fn f(&self, name: &str) -> BiSeries {
        BiSeries::f_letter(self.max_degree, name)
    }

    fn z(&self) -> BiSeries {
        BiSeries::zero(self.max_degree)
    }

    /// `-f0 - f1`.
    pub fn f_inf(&self) -> BiSeries {
        self.f("f0").neg().sub(&self.f("f1"))
    }

    pub fn rho0(&self) -> Mat3 {
        BiMat::from_rows(vec![
            vec![self.e("e0"), self.z(), self.z()],
            vec![self.e("e1"), self.f("f0"), self.e("e1").neg()],
            vec![self.z(), self.z(), self.e("e0")],
        ])
    }

    /// Column (1, -1, 0)^T.
    pub fn col(&self) -> BiMat {
        BiMat::from_rows(vec![
            vec![BiSeries::one(self.max_degree)],
            vec![BiSeries::one(self.max_degree).neg()],
            vec![self.z()],
        ])
    }

    /// Row (e1, -f1, 0).
    pub fn row(&self) -> BiMat {
        BiMat::from_rows(vec![vec![self.e("e1"), self.f("f1").neg(), self.z()]])
    }

    /// Rank-one: `rho1 = col · row`.
    pub fn rho1(&self) -> Mat3 {
        self.col().mul(&self.row())
    }

    /// Bordered column (f1, e1, -e0 - f_inf)^T.
    pub fn border_col(&self) -> BiMat {
        BiMat::from_rows(vec![
            vec![self.f("f1")],
            vec![self.e("e1")],
            vec![self.e("e0").neg().sub(&self.f_inf())],
        ])
    }

    /// Bordered row (0, 0, 1).
    pub fn border_row(&self) -> BiMat {
        BiMat::from_rows(vec![vec![self.z(), self.z(), BiSeries::one(self.max_degree)]])
    }

    /// The algebra morphism with `e0 -> rho0`, `e1 -> rho1`.
    pub fn rho(&self, s: &Series) -> Mat3 {
        assert_eq!(s.alphabet(), &Alphabet::e01(), "series over {{e0, e1}}");
        let images = [self.rho0(), self.rho1()];
        let mut out = BiMat::zero(3, 3, self.max_degree);
        for (w, c) in s.terms() {
            let mut m = BiMat::identity(3, self.max_degree);
            for &l in w.letters() {
                m = m.mul(&images[l as usize]);
            }
            out = out.add(&m.scale_left(&BiSeries::one(self.max_degree).scale(c)));
        }
        out
    }
}

/// The coefficient `row · rho0^{n-1} · col` of the matrix model.
pub fn delta_rho(n: usize) -> BiSeries {
    assert!(n >= 1, "positive degree");
    let rep = Rep3::new(n);
    rep.row().mul(&rep.rho0().pow(n - 1)).mul(&rep.col()).at(0, 0).clone()
}

/// Moves a trailing `e1` to the front; the empty word is fixed.
fn rotate_trailing_e1(w: &Word) -> Word {
    if w.is_empty() {
        return w.clone();
    }
    debug_assert_eq!(w.last(), Alphabet::e01().index_of("e1"), "a W-word ends in e1");
    let mut v = Vec::with_capacity(w.len());
    v.push(w.letters()[w.len() - 1]);
    v.extend_from_slice(&w.letters()[..w.len() - 1]);
    Word::from_indices(v)
}

/// The harmonic-coproduct route to the same coefficient: apply the
/// coproduct to `y_n = e0^{n-1} e1`, rotate the trailing `e1` of each tensor
/// leg to the front, and embed the left leg in e-letters, the right in
/// f-letters.
pub fn delta_w_rl(n: usize) -> BiSeries {
    assert!(n >= 1, "positive degree");
    let alphabet = Alphabet::e01();
    let yn = Series::from_terms(&alphabet, n, [(y_word(&[n]), qi(1))]);
    let t = delta_w(&WElement::new(yn).expect("y_n is a W-word"));
    let mut out = BiSeries::zero(n);
    for ((u, v), c) in t.terms() {
        let e_word = rotate_trailing_e1(u);
        let f_word = rotate_trailing_e1(v);
        out.insert((e_word, f_word), c.clone());
    }
    out
}

/// The bordered matrix `phi(e1, f1)·I + B·m·C` with
/// `B = [[f1,0],[e1,0],[0,1]]` and `C = [[1,1,0],[0,0,1]]`. `phi` must be a
/// polynomial in the commuting pair `(e1, f1)`; `m` is any 2×2 matrix.
/// The result commutes with `rho1` identically.
pub fn m_param(phi: &BiSeries, m: &BiMat) -> Mat3 {
    assert_eq!((m.rows(), m.cols()), (2, 2), "2x2 parameter matrix");
    let e1 = Alphabet::e01().index_of("e1").unwrap();
    let f1 = Alphabet::f01().index_of("f1").unwrap();
    assert!(
        phi.terms().all(|((ew, fw), _)| {
            ew.letters().iter().all(|&l| l == e1) && fw.letters().iter().all(|&l| l == f1)
        }),
        "phi must be a polynomial in e1 and f1",
    );
    let max = phi.max_degree().min(m.max_degree());
    let rep = Rep3::new(max);
    let b = BiMat::from_rows(vec![
        vec![rep.f("f1"), rep.z()],
        vec![rep.e("e1"), rep.z()],
        vec![rep.z(), BiSeries::one(max)],
    ]);
    let c = BiMat::from_rows(vec![
        vec![BiSeries::one(max), BiSeries::one(max), rep.z()],
        vec![rep.z(), rep.z(), BiSeries::one(max)],
    ]);
    BiMat::identity(3, max).scale_left(phi).add(&b.mul(m).mul(&c))
}

/// Basis of the degree-`d` slice of the centralizer of `e0`:
/// `{e0^k · f-word : k + |f-word| = d}`.
pub fn cv_e0_basis(d: usize) -> Vec<BiSeries> {
    let e0 = Alphabet::e01().index_of("e0").unwrap();
    let f01 = Alphabet::f01();
    let mut out = Vec::new();
    for k in (0..=d).rev() {
        let e_word = Word::from_indices(vec![e0; k]);
        for f_word in words_of_length(&f01, d - k) {
            out.push(BiSeries::monomial(e_word.clone(), f_word, d));
        }
    }
    out
}

/// All pairs (e-word, f-word) of total degree at most `d`, ordered
/// lexicographically pairwise (each side length-then-lex). This is the
/// coordinate order for every subspace of matrices below, positions
/// `(row, col)` outermost.
pub fn bi_monomials_up_to(d: usize) -> Vec<(Word, Word)> {
    let e01 = Alphabet::e01();
    let f01 = Alphabet::f01();
    let mut out = Vec::new();
    for e_word in words_up_to(&e01, d) {
        for f_word in words_up_to(&f01, d - e_word.len()) {
            out.push((e_word.clone(), f_word));
        }
    }
    out
}

/// Flattens a matrix of entry degree ≤ `d` into the monomial-entry
/// coordinates of [`bi_monomials_up_to`].
pub fn mat_to_vector(m: &BiMat, d: usize) -> Vec<Q> {
    let monos = bi_monomials_up_to(d);
    let mut v = vec![Q::zero(); m.rows() * m.cols() * monos.len()];
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            for ((ew, fw), c) in m.at(i, j).terms() {
                let k = monos
                    .binary_search_by(|probe| probe.cmp(&(ew.clone(), fw.clone())))
                    .expect("entry degree within bound");
                v[(i * m.cols() + j) * monos.len() + k] = c.clone();
            }
        }
    }
    v
}

/// Dimension and basis of the space of 3×3 matrices with entries of total
/// degree ≤ `degree` commuting with every constraint, by exact nullspace
/// over the monomial-entry basis. Constraints must have entries of degree
/// ≤ 1 and a truncation exceeding `degree` so products are not dropped.
pub fn commutant(constraints: &[Mat3], degree: usize) -> (usize, Subspace) {
    for g in constraints {
        assert!(g.max_degree() > degree, "constraint truncation too small");
    }
    let monos = bi_monomials_up_to(degree);
    let target_monos = bi_monomials_up_to(degree + 1);
    let tm = target_monos.len();
    let cols = 9 * monos.len();
    let rows = 9 * tm * constraints.len();
    let mut m = QMatrix::zero(rows, cols);
    for (r, c) in (0..3).flat_map(|r| (0..3).map(move |c| (r, c))) {
        for (k, (ew, fw)) in monos.iter().enumerate() {
            let col_idx = (r * 3 + c) * monos.len() + k;
            let mut x = BiMat::zero(3, 3, degree + 1);
            x.set(r, c, BiSeries::monomial(ew.clone(), fw.clone(), degree + 1));
            for (gi, g) in constraints.iter().enumerate() {
                let comm = x.commutator(g);
                for i in 0..3 {
                    for j in 0..3 {
                        for ((we, wf), coeff) in comm.at(i, j).terms() {
                            let t = target_monos
                                .binary_search_by(|p| p.cmp(&(we.clone(), wf.clone())))
                                .expect("within degree + 1");
                            let row_idx = gi * 9 * tm + (i * 3 + j) * tm + t;
                            m.set(row_idx, col_idx, coeff.clone());
                        }
                    }
                }
            }
        }
    }
    let space = m.nullspace();
    (space.dim(), space)
}

/// Span of the bordered family `phi(e1,f1)·I + B·m·C` with entry degree
/// ≤ `d`, in the coordinates of [`mat_to_vector`].
pub fn rho1_family_span(d: usize) -> Subspace {
    let max = d + 1;
    let e1 = Alphabet::e01().index_of("e1").unwrap();
    let f1 = Alphabet::f01().index_of("f1").unwrap();
    let mut gens: Vec<Vec<Q>> = Vec::new();
    let zero2 = BiMat::zero(2, 2, max);
    for i in 0..=d {
        for j in 0..=(d - i) {
            let phi = BiSeries::monomial(
                Word::from_indices(vec![e1; i]),
                Word::from_indices(vec![f1; j]),
                max,
            );
            gens.push(mat_to_vector(&m_param(&phi, &zero2), d));
        }
    }
    // the top row of `m` picks up a degree from the border, the bottom does not
    let phi0 = BiSeries::zero(max);
    for (slot_i, slot_j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let bound = if slot_i == 0 {
            match d.checked_sub(1) {
                Some(b) => b,
                None => continue,
            }
        } else {
            d
        };
        for (ew, fw) in bi_monomials_up_to(bound) {
            let mut m2 = BiMat::zero(2, 2, max);
            m2.set(slot_i, slot_j, BiSeries::monomial(ew, fw, max));
            gens.push(mat_to_vector(&m_param(&phi0, &m2), d));
        }
    }
    Subspace::from_spanning(9 * bi_monomials_up_to(d).len(), gens)
}

/// Span of `k·I + border_col · c · border_row` with `c` running over the
/// centralizer of `e0` in degrees ≤ `d - 1`, entry degree ≤ `d`.
pub fn rho0_rho1_family_span(d: usize) -> Subspace {
    let max = d + 1;
    let rep = Rep3::new(max);
    let mut gens: Vec<Vec<Q>> = vec![mat_to_vector(&BiMat::identity(3, max), d)];
    for j in 0..d {
        for c in cv_e0_basis(j) {
            // raise the truncation so border products survive
            let mut lifted = BiSeries::zero(max);
            for ((ew, fw), coeff) in c.terms() {
                lifted.insert((ew.clone(), fw.clone()), coeff.clone());
            }
            let mat = rep.border_col().scale_right(&lifted).mul(&rep.border_row());
            gens.push(mat_to_vector(&mat, d));
        }
    }
    Subspace::from_spanning(9 * bi_monomials_up_to(d).len(), gens)
}

/// The three short complexes whose middle-slice exactness is rank-checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactComplex {
    /// `x -> (f1·x, e1·x)`, `(u, v) -> e1·u - f1·v` over the pair algebra.
    E1F1,
    /// `(phi, gamma) -> (phi + gamma·q, phi + q·gamma)`, `(u, v) -> q·u - v·q`
    /// with `q = e0 + f_inf`, `phi` a polynomial in the commuting `e0, f_inf`.
    E0FInf,
    /// `(c, u) -> (x·c + u, c·x + u, [u, x])`, `(a, b, z) -> a·x - x·b - z`
    /// over the free algebra on `{x, y}` with `u, z` Lie.
    FreeXY,
}

impl ExactComplex {
    pub fn name(&self) -> &'static str {
        match self {
            ExactComplex::E1F1 => "e1f1",
            ExactComplex::E0FInf => "e0finf",
            ExactComplex::FreeXY => "xy",
        }
    }
}

/// The two numbers compared by an exactness check: the rank of the first
/// map and the kernel dimension of the second.
#[derive(Clone, Debug, Serialize)]
pub struct ExactnessRanks {
    pub first_map: usize,
    pub second_kernel: usize,
}

/// Rank data for the degree-`n` middle slice of one complex.
#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub check: String,
    pub degree: usize,
    pub ranks: ExactnessRanks,
    #[serde(rename = "pass")]
    pub exact: bool,
}

/// Pairs of total degree exactly `n`, ordered like [`bi_monomials_up_to`].
fn bi_monomials_of(n: usize) -> Vec<(Word, Word)> {
    bi_monomials_up_to(n).into_iter().filter(|(e, f)| e.len() + f.len() == n).collect()
}

fn bi_to_vector(s: &BiSeries, monos: &[(Word, Word)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); monos.len()];
    for ((e, f), c) in s.terms() {
        if let Ok(k) = monos.binary_search_by(|p| p.cmp(&(e.clone(), f.clone()))) {
            v[k] = c.clone();
        }
    }
    v
}

fn series_to_vector(s: &Series, words: &[Word]) -> Vec<Q> {
    let mut v = vec![Q::zero(); words.len()];
    for (w, c) in s.terms() {
        if let Ok(k) = words.binary_search(w) {
            v[k] = c.clone();
        }
    }
    v
}

fn columns_to_matrix(rows: usize, cols: Vec<Vec<Q>>) -> QMatrix {
    let mut m = QMatrix::zero(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            if !c.is_zero() {
                m.set(i, j, c.clone());
            }
        }
    }
    m
}

/// Assembles the degree-`n` slice of the named complex and compares
/// `dim ker(second)` with `rank(first)`. The composite is zero identically,
/// so equality is exactness of the middle slice.
pub fn exactness_check(which: ExactComplex, n: usize) -> ExactnessReport {
    assert!(n >= 1, "positive middle degree");
    let (first, second) = match which {
        ExactComplex::E1F1 => {
            let mid = bi_monomials_of(n);
            let lo = bi_monomials_of(n - 1);
            let hi = bi_monomials_of(n + 1);
            let max = n + 1;
            let e1 = BiSeries::e_letter(max, "e1");
            let f1 = BiSeries::f_letter(max, "f1");
            let mut first_cols = Vec::new();
            for (ew, fw) in &lo {
                let x = BiSeries::monomial(ew.clone(), fw.clone(), max);
                let mut col = bi_to_vector(&f1.mul(&x), &mid);
                col.extend(bi_to_vector(&e1.mul(&x), &mid));
                first_cols.push(col);
            }
            let mut second_cols = Vec::new();
            for (ew, fw) in &mid {
                let u = BiSeries::monomial(ew.clone(), fw.clone(), max);
                second_cols.push(bi_to_vector(&e1.mul(&u), &hi));
            }
            for (ew, fw) in &mid {
                let v = BiSeries::monomial(ew.clone(), fw.clone(), max);
                second_cols.push(bi_to_vector(&f1.mul(&v).neg(), &hi));
            }
            (
                columns_to_matrix(2 * mid.len(), first_cols),
                columns_to_matrix(hi.len(), second_cols),
            )
        }
        ExactComplex::E0FInf => {
            let mid = bi_monomials_of(n);
            let lo = bi_monomials_of(n - 1);
            let hi = bi_monomials_of(n + 1);
            let max = n + 1;
            let rep = Rep3::new(max);
            let q = rep.e("e0").add(&rep.f_inf());
            let e0 = Alphabet::e01().index_of("e0").unwrap();
            let mut first_cols = Vec::new();
            for a in 0..=n {
                // e0^a f_inf^{n-a}
                let phi = BiSeries::monomial(Word::from_indices(vec![e0; a]), Word::empty(), max)
                    .mul(&rep.f_inf().pow(n - a));
                let mut col = bi_to_vector(&phi, &mid);
                col.extend(bi_to_vector(&phi, &mid));
                first_cols.push(col);
            }
            for (ew, fw) in &lo {
                let g = BiSeries::monomial(ew.clone(), fw.clone(), max);
                let mut col = bi_to_vector(&g.mul(&q), &mid);
                col.extend(bi_to_vector(&q.mul(&g), &mid));
                first_cols.push(col);
            }
            let mut second_cols = Vec::new();
            for (ew, fw) in &mid {
                let u = BiSeries::monomial(ew.clone(), fw.clone(), max);
                second_cols.push(bi_to_vector(&q.mul(&u), &hi));
            }
            for (ew, fw) in &mid {
                let v = BiSeries::monomial(ew.clone(), fw.clone(), max);
                second_cols.push(bi_to_vector(&v.mul(&q).neg(), &hi));
            }
            (
                columns_to_matrix(2 * mid.len(), first_cols),
                columns_to_matrix(hi.len(), second_cols),
            )
        }
        ExactComplex::FreeXY => {
            let xy = Alphabet::xy();
            let max = n + 1;
            let mid_words = words_of_length(&xy, n);
            let lo_words = words_of_length(&xy, n - 1);
            let hi_words = words_of_length(&xy, n + 1);
            let lie_mid = lyndon_basis(&xy, n);
            let lie_hi = lyndon_basis(&xy, n + 1);
            let x = Series::letter(&xy, max, "x");
            let middle_dim = 2 * mid_words.len() + lie_hi.dim();
            let mut first_cols = Vec::new();
            for w in &lo_words {
                let c = Series::from_terms(&xy, max, [(w.clone(), qi(1))]);
                let mut col = series_to_vector(&x.mul(&c), &mid_words);
                col.extend(series_to_vector(&c.mul(&x), &mid_words));
                col.extend(vec![Q::zero(); lie_hi.dim()]);
                first_cols.push(col);
            }
            for u in lie_mid.expansions() {
                let u = u.with_truncation(max);
                let mut col = series_to_vector(&u, &mid_words);
                col.extend(series_to_vector(&u, &mid_words));
                let bracket = u.bracket(&x);
                col.extend(lie_hi.to_coords(&bracket).expect("bracket of Lie is Lie"));
                first_cols.push(col);
            }
            let mut second_cols = Vec::new();
            for w in &mid_words {
                let a = Series::from_terms(&xy, max, [(w.clone(), qi(1))]);
                second_cols.push(series_to_vector(&a.mul(&x), &hi_words));
            }
            for w in &mid_words {
                let b = Series::from_terms(&xy, max, [(w.clone(), qi(1))]);
                second_cols.push(series_to_vector(&x.mul(&b).neg(), &hi_words));
            }
            for z in lie_hi.expansions() {
                second_cols.push(series_to_vector(&z.neg(), &hi_words));
            }
            (
                columns_to_matrix(middle_dim, first_cols),
                columns_to_matrix(hi_words.len(), second_cols),
            )
        }
    };
    let first_map = first.rank();
    let second_kernel = second.nullspace().dim();
    ExactnessReport {
        check: which.name().to_string(),
        degree: n,
        ranks: ExactnessRanks { first_map, second_kernel },
        exact: first_map == second_kernel,
    }
}
