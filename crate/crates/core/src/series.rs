//! Truncated noncommutative power series over the rationals.
//!
//! A [`Series`] is a finite `Word -> Q` map together with a truncation order:
//! all arithmetic is performed modulo words of length `> max_degree`.
//! Combining two series takes the minimum of the two truncations, since
//! coefficients beyond either bound are unknown. Zero coefficients are never
//! stored, so structural equality is semantic equality at equal truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::rational::{q_from_str, q_to_string, qi, Q};
use crate::word::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct Series {
    alphabet: Alphabet,
    max_degree: usize,
    terms: BTreeMap<Word, Q>,
}

impl Series {
    pub fn zero(alphabet: &Alphabet, max_degree: usize) -> Self {
        Series { alphabet: alphabet.clone(), max_degree, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: &Alphabet, max_degree: usize) -> Self {
        Self::monomial(alphabet, max_degree, Word::empty(), Q::one())
    }

    pub fn constant(alphabet: &Alphabet, max_degree: usize, c: Q) -> Self {
        Self::monomial(alphabet, max_degree, Word::empty(), c)
    }

    /// The length-one series for a named letter.
    pub fn letter(alphabet: &Alphabet, max_degree: usize, name: &str) -> Self {
        let idx = alphabet
            .index_of(name)
            .unwrap_or_else(|| panic!("letter {name} not in alphabet"));
        Self::monomial(alphabet, max_degree, Word::single(idx), Q::one())
    }

    pub fn monomial(alphabet: &Alphabet, max_degree: usize, word: Word, coeff: Q) -> Self {
        Self::from_terms(alphabet, max_degree, [(word, coeff)])
    }

    /// Builds a series from terms, dropping zeros and words beyond the
    /// truncation order (the latter is exactly what truncation means).
    pub fn from_terms<I>(alphabet: &Alphabet, max_degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Q)>,
    {
        let mut map: BTreeMap<Word, Q> = BTreeMap::new();
        for (w, c) in terms {
            assert!(
                w.letters().iter().all(|&l| (l as usize) < alphabet.len()),
                "word letter out of range for alphabet"
            );
            if c.is_zero() || w.len() > max_degree {
                continue;
            }
            *map.entry(w).or_insert_with(Q::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Series { alphabet: alphabet.clone(), max_degree, terms: map }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Word::empty())
    }

    /// Smallest degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    /// Largest degree carrying a nonzero term.
    pub fn top_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// `Some(n)` if every nonzero term has length `n`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let first = self.min_degree()?;
        (self.top_degree() == Some(first)).then_some(first)
    }

    fn joint_truncation(&self, other: &Series) -> usize {
        assert_eq!(
            self.alphabet, other.alphabet,
            "cannot combine series over different alphabets"
        );
        self.max_degree.min(other.max_degree)
    }

    pub fn add(&self, other: &Series) -> Series {
        let max = self.joint_truncation(other);
        Series::from_terms(
            &self.alphabet,
            max,
            self.terms.iter().chain(other.terms.iter()).map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    pub fn sub(&self, other: &Series) -> Series {
        let max = self.joint_truncation(other);
        Series::from_terms(
            &self.alphabet,
            max,
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone()))
                .chain(other.terms.iter().map(|(w, c)| (w.clone(), -c))),
        )
    }

    pub fn neg(&self) -> Series {
        self.scale(&qi(-1))
    }

    pub fn scale(&self, k: &Q) -> Series {
        if k.is_zero() {
            return Series::zero(&self.alphabet, self.max_degree);
        }
        Series {
            alphabet: self.alphabet.clone(),
            max_degree: self.max_degree,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Concatenation product, truncated.
    pub fn mul(&self, other: &Series) -> Series {
        let max = self.joint_truncation(other);
        let mut map: BTreeMap<Word, Q> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            if wa.len() > max {
                continue;
            }
            for (wb, cb) in &other.terms {
                if wa.len() + wb.len() > max {
                    break; // terms are length-sorted
                }
                let c = ca * cb;
                let slot = map.entry(wa.concat(wb)).or_insert_with(Q::zero);
                *slot += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Series { alphabet: self.alphabet.clone(), max_degree: max, terms: map }
    }

    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one(&self.alphabet, self.max_degree);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `[a, b] = ab - ba`.
    pub fn bracket(&self, other: &Series) -> Series {
        self.mul(other).sub(&other.mul(self))
    }

    /// Drops terms of degree other than `n`.
    pub fn graded_component(&self, n: usize) -> Series {
        Series {
            alphabet: self.alphabet.clone(),
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lowers the truncation order (never raises knowledge: terms beyond the
    /// new bound are dropped).
    pub fn truncate(&self, max_degree: usize) -> Series {
        let max = self.max_degree.min(max_degree);
        Series {
            alphabet: self.alphabet.clone(),
            max_degree: max,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= max)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the series at a different truncation order. Raising the
    /// order asserts exactness: it is only meaningful for polynomials whose
    /// coefficients beyond the old bound are genuinely zero (e.g. homogeneous
    /// Lie elements being lifted into a higher-degree computation).
    pub fn with_truncation(&self, max_degree: usize) -> Series {
        let mut s = self.clone();
        if max_degree < s.max_degree {
            return s.truncate(max_degree);
        }
        s.max_degree = max_degree;
        s
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm("exp".into()));
        }
        let mut acc = Series::one(&self.alphabet, self.max_degree);
        let mut term = acc.clone();
        for k in 1..=self.max_degree {
            term = term.mul(self).scale(&Q::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `log` of a series with constant term 1.
    pub fn log(&self) -> Result<Series> {
        if !self.constant_term().is_one() {
            return Err(AlgebraError::NonzeroConstantTerm("log requires constant term 1".into()));
        }
        let u = self.sub(&Series::one(&self.alphabet, self.max_degree));
        let mut acc = Series::zero(&self.alphabet, self.max_degree);
        let mut upow = Series::one(&self.alphabet, self.max_degree);
        for k in 1..=self.max_degree {
            upow = upow.mul(&u);
            if upow.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&upow.scale(&Q::new(sign.into(), k.into())));
        }
        Ok(acc)
    }

    /// Two-sided inverse; requires an invertible (nonzero) constant term.
    pub fn inverse(&self) -> Result<Series> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(AlgebraError::ZeroConstantTerm);
        }
        let cinv = c.recip();
        // self = c (1 + u) with u constant-free, so self^{-1} = (sum (-u)^k) c^{-1}.
        let u = self.scale(&cinv).sub(&Series::one(&self.alphabet, self.max_degree));
        let mut acc = Series::one(&self.alphabet, self.max_degree);
        let mut upow = Series::one(&self.alphabet, self.max_degree);
        for _ in 1..=self.max_degree {
            upow = upow.mul(&u).neg();
            if upow.is_zero() {
                break;
            }
            acc = acc.add(&upow);
        }
        Ok(acc.scale(&cinv))
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate(&self, g: &Series) -> Result<Series> {
        Ok(g.mul(self).mul(&g.inverse()?))
    }

    /// Applies the algebra morphism sending letter `i` to `images[i]`.
    ///
    /// Images must live over one common alphabet and have zero constant term
    /// (otherwise a truncated input would not determine a truncated output).
    pub fn substitute(&self, images: &[Series]) -> Series {
        assert_eq!(images.len(), self.alphabet.len(), "one image per letter");
        let target = images[0].alphabet.clone();
        let mut max = self.max_degree;
        for im in images {
            assert_eq!(im.alphabet, target, "images must share an alphabet");
            assert!(im.constant_term().is_zero(), "substitution images must be constant-free");
            max = max.min(im.max_degree);
        }
        let mut acc = Series::zero(&target, max);
        for (w, c) in &self.terms {
            let mut prod = Series::constant(&target, max, c.clone());
            for &l in w.letters() {
                prod = prod.mul(&images[l as usize]);
                if prod.is_zero() {
                    break;
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Applies the derivation sending letter `i` to `images[i]`, i.e. the sum
    /// over all single-letter replacements.
    ///
    /// If some image has terms of degree 0 the derivation lowers degree; that
    /// is sound only on exact polynomial inputs, which is how such derivations
    /// are used here.
    pub fn derivation_apply(&self, images: &[Series]) -> Series {
        assert_eq!(images.len(), self.alphabet.len(), "one image per letter");
        let target = images[0].alphabet.clone();
        let mut max = self.max_degree;
        for im in images {
            assert_eq!(im.alphabet, target, "images must share an alphabet");
            max = max.min(im.max_degree);
        }
        assert_eq!(self.alphabet, target, "derivation images must stay in the same alphabet");
        let mut out: BTreeMap<Word, Q> = BTreeMap::new();
        for (w, c) in &self.terms {
            let letters = w.letters();
            for i in 0..letters.len() {
                let img = &images[letters[i] as usize];
                if img.is_zero() {
                    continue;
                }
                for (iw, ic) in &img.terms {
                    let new_len = letters.len() - 1 + iw.len();
                    if new_len > max {
                        continue;
                    }
                    let mut v = Vec::with_capacity(new_len);
                    v.extend_from_slice(&letters[..i]);
                    v.extend_from_slice(iw.letters());
                    v.extend_from_slice(&letters[i + 1..]);
                    let slot = out.entry(Word::from_indices(v)).or_insert_with(Q::zero);
                    *slot += c * ic;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Series { alphabet: target, max_degree: max, terms: out }
    }

    /// Human-readable rendering in the global term order.
    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&q_to_string(c));
            if !w.is_empty() {
                out.push('·');
                out.push_str(&w.display_in(&self.alphabet));
            }
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    alphabet: Vec<String>,
    max_degree: usize,
    terms: BTreeMap<String, String>,
}

impl From<Series> for SeriesRepr {
    fn from(s: Series) -> Self {
        SeriesRepr {
            alphabet: s.alphabet.names().to_vec(),
            max_degree: s.max_degree,
            terms: s.terms.iter().map(|(w, c)| (w.to_key(), q_to_string(c))).collect(),
        }
    }
}

impl TryFrom<SeriesRepr> for Series {
    type Error = AlgebraError;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        let alphabet = Alphabet::new(&r.alphabet);
        let mut terms = BTreeMap::new();
        for (k, v) in &r.terms {
            let w = Word::from_key(k, &alphabet)?;
            if w.len() > r.max_degree {
                return Err(AlgebraError::BeyondTruncation {
                    degree: w.len(),
                    max_degree: r.max_degree,
                });
            }
            let c = q_from_str(v)?;
            if !c.is_zero() {
                terms.insert(w, c);
            }
        }
        Ok(Series { alphabet, max_degree: r.max_degree, terms })
    }
}
