//! The bridge from the free Lie algebra on `{x, y}` into its derivations.
//!
//! The substitution `x ↦ e0`, `y ↦ -e1` identifies the two-letter free Lie
//! algebra with the one underlying the double shuffle machinery; pulling the
//! distinguished slice back through it gives a subspace `ds` on the `{x, y}`
//! side. The map `nu` sends a series to the derivation `y ↦ [y, F]`,
//! `x + y ↦ 0` built from the sign-twisted substitution `F` of its input,
//! and membership in the special derivations (both images of bracket form)
//! cuts out exactly the push-invariant part of the algebra on the other
//! side. Everything here is a finite exact linear computation per degree.

use crate::dmr::dmr0_component;
use crate::error::{AlgebraError, Result};
use crate::linalg::{QMatrix, Subspace};
use crate::lyndon::{is_lie, lyndon_basis};
use crate::rational::Q;
use crate::series::Series;
use crate::word::{words_of_length, Alphabet};

use num_traits::Zero;

/// A derivation of the free Lie algebra on `{x, y}` recorded through its
/// generator images. Both images must be homogeneous Lie elements of degree
/// `degree + 1` (or zero), so the derivation raises degree by `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentialDerivation {
    degree: usize,
    image_x: Series,
    image_y: Series,
}

impl TangentialDerivation {
    pub fn new(degree: usize, image_x: Series, image_y: Series) -> Result<Self> {
        let xy = Alphabet::xy();
        for im in [&image_x, &image_y] {
            if im.alphabet() != &xy {
                return Err(AlgebraError::AlphabetMismatch(
                    im.alphabet().names().join(","),
                    xy.names().join(","),
                ));
            }
            if !is_lie(im) {
                return Err(AlgebraError::NotLie);
            }
            if !im.is_zero() && im.homogeneous_degree() != Some(degree + 1) {
                return Err(AlgebraError::NotHomogeneous);
            }
        }
        Ok(TangentialDerivation {
            degree,
            image_x: image_x.truncate(degree + 1),
            image_y: image_y.truncate(degree + 1),
        })
    }

    pub fn zero(degree: usize) -> Self {
        let xy = Alphabet::xy();
        TangentialDerivation {
            degree,
            image_x: Series::zero(&xy, degree + 1),
            image_y: Series::zero(&xy, degree + 1),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image_x(&self) -> &Series {
        &self.image_x
    }

    pub fn image_y(&self) -> &Series {
        &self.image_y
    }

    pub fn is_zero(&self) -> bool {
        self.image_x.is_zero() && self.image_y.is_zero()
    }

    /// Applies the derivation to a series, raising its degree by
    /// [`Self::degree`]; the truncation grows accordingly so nothing is
    /// dropped.
    pub fn apply(&self, s: &Series) -> Series {
        let max = s.max_degree() + self.degree;
        s.with_truncation(max).derivation_apply(&[
            self.image_x.with_truncation(max),
            self.image_y.with_truncation(max),
        ])
    }

    /// Commutator of derivations, again recorded through generator images.
    pub fn bracket(&self, other: &TangentialDerivation) -> Result<TangentialDerivation> {
        let x = self.apply(&other.image_x).sub(&other.apply(&self.image_x));
        let y = self.apply(&other.image_y).sub(&other.apply(&self.image_y));
        TangentialDerivation::new(self.degree + other.degree, x, y)
    }
}

/// The isomorphism `x ↦ e0`, `y ↦ -e1` onto series over `{e0, e1}`.
pub fn iso_i(f: &Series) -> Series {
    assert_eq!(f.alphabet(), &Alphabet::xy(), "series over {{x, y}}");
    let e01 = Alphabet::e01();
    let m = f.max_degree();
    f.substitute(&[
        Series::letter(&e01, m, "e0"),
        Series::letter(&e01, m, "e1").neg(),
    ])
}

/// Inverse of [`iso_i`]: `e0 ↦ x`, `e1 ↦ -y`.
pub fn iso_i_inv(s: &Series) -> Series {
    assert_eq!(s.alphabet(), &Alphabet::e01(), "series over {{e0, e1}}");
    let xy = Alphabet::xy();
    let m = s.max_degree();
    s.substitute(&[Series::letter(&xy, m, "x"), Series::letter(&xy, m, "y").neg()])
}

/// The automorphism `x ↦ x`, `y ↦ -y`.
fn alpha(f: &Series) -> Series {
    let xy = Alphabet::xy();
    let m = f.max_degree();
    f.substitute(&[Series::letter(&xy, m, "x"), Series::letter(&xy, m, "y").neg()])
}

/// Degree-`n` slice of `ds`: the pullback of the double shuffle slice
/// through [`iso_i`], in Lyndon coordinates over `{x, y}`.
pub fn ds_component(n: usize) -> Subspace {
    assert!(n >= 2, "ds slices live in degree >= 2");
    let e01 = lyndon_basis(&Alphabet::e01(), n);
    let xy = lyndon_basis(&Alphabet::xy(), n);
    let gens: Vec<Vec<Q>> = dmr0_component(n)
        .basis()
        .iter()
        .map(|coords| {
            let pulled = iso_i_inv(&e01.from_coords(coords));
            xy.to_coords(&pulled).expect("isomorphic image of a Lie element")
        })
        .collect();
    Subspace::from_spanning(xy.dim(), gens)
}

/// Expansions of a basis of [`ds_component`] as series over `{x, y}`.
pub fn ds_basis(n: usize) -> Vec<Series> {
    let xy = lyndon_basis(&Alphabet::xy(), n);
    ds_component(n).basis().iter().map(|v| xy.from_coords(v)).collect()
}

/// The composed sign twist `F(x, y) = ftilde(-x-y, -y)`.
#[allow(non_snake_case)]
pub fn f_to_F(ftilde: &Series) -> Series {
    let xy = Alphabet::xy();
    let m = ftilde.max_degree();
    let x = Series::letter(&xy, m, "x");
    let y = Series::letter(&xy, m, "y");
    ftilde.substitute(&[x.neg().sub(&y), y.neg()])
}

/// The derivation `y ↦ [y, F]`, `x + y ↦ 0` attached to a homogeneous Lie
/// series.
pub fn nu(ftilde: &Series) -> Result<TangentialDerivation> {
    if !is_lie(ftilde) {
        return Err(AlgebraError::NotLie);
    }
    let Some(n) = ftilde.homogeneous_degree() else {
        return if ftilde.is_zero() {
            Ok(TangentialDerivation::zero(0))
        } else {
            Err(AlgebraError::NotHomogeneous)
        };
    };
    let m = n + 1;
    let y = Series::letter(&Alphabet::xy(), m, "y");
    let image_y = y.bracket(&f_to_F(ftilde).with_truncation(m));
    TangentialDerivation::new(n, image_y.neg(), image_y)
}

/// Is a letter image of the form `[letter, u]` with `u` Lie? Reports the
/// solvability of the exact linear system over the Lyndon basis.
fn is_bracket_multiple(letter: &str, image: &Series) -> bool {
    if image.is_zero() {
        return true;
    }
    let Some(deg) = image.homogeneous_degree() else { return false };
    if deg < 2 {
        // degree-1 images would need a degree-0 Lie factor, which is zero
        return false;
    }
    let xy = Alphabet::xy();
    let source = lyndon_basis(&xy, deg - 1);
    let target = lyndon_basis(&xy, deg);
    let l = Series::letter(&xy, deg, letter);
    let mut m = QMatrix::zero(target.dim(), source.dim());
    for (j, u) in source.expansions().iter().enumerate() {
        let col = target
            .to_coords(&l.bracket(&u.with_truncation(deg)))
            .expect("bracket of Lie is Lie");
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v);
            }
        }
    }
    let rhs = target.to_coords(image).expect("homogeneous Lie image");
    m.solve(&rhs).is_some()
}

/// Membership in the special derivations: both images of bracket form and
/// the sum of the images zero.
pub fn is_sder(d: &TangentialDerivation) -> bool {
    d.image_x().add(d.image_y()).is_zero()
        && is_bracket_multiple("x", d.image_x())
        && is_bracket_multiple("y", d.image_y())
}

/// Solvability of `[x, alpha(ftilde)] + [-x-y, v] = 0` for Lie `v`. For a
/// homogeneous Lie input this is equivalent to push-invariance of
/// [`iso_i`] of the input.
pub fn check_inert_equivalence(ftilde: &Series) -> bool {
    assert!(is_lie(ftilde), "homogeneous Lie input");
    if ftilde.is_zero() {
        return true;
    }
    let n = ftilde.homogeneous_degree().expect("homogeneous Lie input");
    let xy = Alphabet::xy();
    let m = n + 1;
    let x = Series::letter(&xy, m, "x");
    let y = Series::letter(&xy, m, "y");
    let q = x.neg().sub(&y);
    let source = lyndon_basis(&xy, n);
    let target = lyndon_basis(&xy, n + 1);
    let mut mat = QMatrix::zero(target.dim(), source.dim());
    for (j, v) in source.expansions().iter().enumerate() {
        let col = target
            .to_coords(&q.bracket(&v.with_truncation(m)))
            .expect("bracket of Lie is Lie");
        for (i, c) in col.into_iter().enumerate() {
            if !c.is_zero() {
                mat.set(i, j, c);
            }
        }
    }
    let rhs = target
        .to_coords(&x.bracket(&alpha(ftilde).with_truncation(m)).neg())
        .expect("bracket of Lie is Lie");
    mat.solve(&rhs).is_some()
}

/// Rank of `nu` restricted to the degree-`n` slice of `ds`; equality with
/// the slice dimension is the injectivity statement.
pub fn nu_rank_on_ds(n: usize) -> usize {
    let basis = ds_basis(n);
    if basis.is_empty() {
        return 0;
    }
    let words = words_of_length(&Alphabet::xy(), n + 1);
    let mut m = QMatrix::zero(words.len(), basis.len());
    for (j, f) in basis.iter().enumerate() {
        let d = nu(f).expect("ds elements are homogeneous Lie");
        for (w, c) in d.image_y().terms() {
            let i = words.binary_search(w).expect("homogeneous image");
            m.set(i, j, c.clone());
        }
    }
    m.rank()
}

/// The bracket on `{x, y}` series transported from the Ihara bracket
/// through [`iso_i`]: `[a, b] + d_a(b) - d_b(a)` with `d_a : x ↦ 0,
/// y ↦ [y, a]`.
pub fn ihara_bracket_xy(a: &Series, b: &Series) -> Series {
    assert_eq!(a.alphabet(), &Alphabet::xy(), "series over {{x, y}}");
    let need = a.top_degree().unwrap_or(0) + b.top_degree().unwrap_or(0);
    let max = a.max_degree().max(b.max_degree()).max(need);
    let (al, bl) = (a.with_truncation(max), b.with_truncation(max));
    let d = |f: &Series, g: &Series| {
        let y = Series::letter(&Alphabet::xy(), max, "y");
        g.derivation_apply(&[Series::zero(&Alphabet::xy(), max), y.bracket(f)])
    };
    al.bracket(&bl).add(&d(&al, &bl)).sub(&d(&bl, &al))
}

/// Does `nu` turn the transported Ihara bracket of the two inputs into the
/// commutator of their images? Guaranteed on `ds`; measured, not assumed,
/// elsewhere. Images are compared at a common truncation, so zero
/// derivations of different nominal degrees count as equal.
pub fn nu_respects_ihara(a: &Series, b: &Series) -> Result<bool> {
    let lhs = nu(&ihara_bracket_xy(a, b))?;
    let rhs = nu(a)?.bracket(&nu(b)?)?;
    let m = (lhs.degree() + 1).max(rhs.degree() + 1);
    let same = |p: &Series, q: &Series| p.with_truncation(m).sub(&q.with_truncation(m)).is_zero();
    Ok(same(lhs.image_x(), rhs.image_x()) && same(lhs.image_y(), rhs.image_y()))
}
