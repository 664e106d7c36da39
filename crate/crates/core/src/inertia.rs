//! The push operator, inertial Lie elements, and the involution `theta` on
//! both the Lie and the group level.
//!
//! Everything here revolves around the third letter `einf = -e0 - e1` and
//! the presentation of the algebra on `{e0, einf}`. A word in that
//! presentation segments as `einf^{a0} e0 einf^{a1} e0 .. e0 einf^{ar}`;
//! `push` right-rotates the exponent vector `(a0, .., ar)` to
//! `(ar, a0, .., a_{r-1})` and conjugates back to `{e0, e1}` coordinates.
//!
//! A Lie element `a` with `push(a) = a` is *inert*: `[a, e0] + [b, einf] = 0`
//! has a (unique, for homogeneous degree >= 2) Lie solution `b`, computable
//! in closed form by [`b_of`]. Swapping `e0 <-> einf` in `b` defines the
//! involution [`lie_theta`].
//!
//! On the group side, `g` is inert when `g e0 g^{-1} + e1 + h einf h^{-1} = 0`
//! for some group element `h`; [`solve_h`] finds the normalized `h` degree by
//! degree and [`group_theta`] is again the `e0 <-> einf` swap of it.

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{AlgebraError, Result};
use crate::linalg::{QMatrix, Subspace};
use crate::lyndon::{is_lie, lyndon_basis};
use crate::rational::{qi, Q};
use crate::series::Series;
use crate::word::{words_of_length, Alphabet, Word};

/// Rewrites a series over `{e0, e1}` in the letters `{e0, einf}` via
/// `e1 = -e0 - einf`.
pub fn to_einf(s: &Series) -> Series {
    assert_eq!(s.alphabet(), &Alphabet::e01(), "to_einf starts from {{e0, e1}}");
    let t = Alphabet::e0inf();
    let e0 = Series::letter(&t, s.max_degree(), "e0");
    let einf = Series::letter(&t, s.max_degree(), "einf");
    s.substitute(&[e0.clone(), e0.neg().sub(&einf)])
}

/// Inverse of [`to_einf`]: `einf = -e0 - e1`.
pub fn from_einf(s: &Series) -> Series {
    assert_eq!(s.alphabet(), &Alphabet::e0inf(), "from_einf starts from {{e0, einf}}");
    let t = Alphabet::e01();
    let e0 = Series::letter(&t, s.max_degree(), "e0");
    let e1 = Series::letter(&t, s.max_degree(), "e1");
    s.substitute(&[e0.clone(), e0.neg().sub(&e1)])
}

/// Right-rotation of the `einf`-run lengths of a `{e0, einf}` word.
fn rotate_einf_runs(w: &Word) -> Word {
    let mut exps: Vec<usize> = vec![0];
    for &l in w.letters() {
        if l == 1 {
            *exps.last_mut().unwrap() += 1;
        } else {
            exps.push(0);
        }
    }
    let r = exps.len() - 1;
    if r == 0 {
        return w.clone();
    }
    let mut rotated = Vec::with_capacity(exps.len());
    rotated.push(exps[r]);
    rotated.extend_from_slice(&exps[..r]);
    let mut v = Vec::with_capacity(w.len());
    for (i, &a) in rotated.iter().enumerate() {
        v.extend(std::iter::repeat(1u8).take(a));
        if i < r {
            v.push(0);
        }
    }
    Word::from_indices(v)
}

/// The push operator on `{e0, e1}` series: degree-preserving, linear, and
/// the identity on `e0`, `e1` and every `dmr0` slice.
pub fn push(s: &Series) -> Series {
    let bar = to_einf(s);
    let rotated = Series::from_terms(
        bar.alphabet(),
        bar.max_degree(),
        bar.terms().map(|(w, c)| (rotate_einf_runs(w), c.clone())),
    );
    from_einf(&rotated)
}

pub fn is_push_invariant(s: &Series) -> bool {
    push(s) == *s
}

/// The degree-`n` inertial slice `{a in G_n : push(a) = a}`, in Lyndon
/// coordinates. The ambient Lie algebra `G` of the group has vanishing
/// degree-1 part, so the slice is zero below degree 2; there the companion
/// of [`b_of`] would not even be unique.
pub fn ginert_component(degree: usize) -> Subspace {
    let alphabet = Alphabet::e01();
    let basis = lyndon_basis(&alphabet, degree);
    if degree < 2 {
        return Subspace::zero(basis.dim());
    }
    let mut m = QMatrix::zero(alphabet.len().pow(degree as u32), basis.dim());
    for (j, e) in basis.expansions().iter().enumerate() {
        for (i, c) in basis.word_vector(&push(e).sub(e)).into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    m.nullspace()
}

/// Lie-element basis of the inertial slice.
pub fn ginert_basis(degree: usize) -> Vec<Series> {
    let basis = lyndon_basis(&Alphabet::e01(), degree);
    ginert_component(degree).basis().iter().map(|v| basis.from_coords(v)).collect()
}

/// Splits by last letter: `s = s_0 . l_0 + s_1 . l_1` for a two-letter
/// alphabet. The constant term must vanish.
pub fn decompose_right(s: &Series) -> (Series, Series) {
    assert_eq!(s.alphabet().len(), 2, "decompose_right expects a two-letter alphabet");
    assert!(s.constant_term().is_zero(), "decompose_right needs a constant-free series");
    let max = s.max_degree().saturating_sub(1);
    let mut parts = [Series::zero(s.alphabet(), max), Series::zero(s.alphabet(), max)];
    for (w, c) in s.terms() {
        let l = w.last().expect("constant-free");
        parts[l as usize] = parts[l as usize].add(&Series::monomial(
            s.alphabet(),
            max,
            w.slice(0, w.len() - 1),
            c.clone(),
        ));
    }
    let [p0, p1] = parts;
    (p0, p1)
}

/// Closed-form companion of an inert element: writing `to_einf(a) =
/// abar_0 e0 + abar_inf einf`, returns
///
/// ```text
/// b = sum_i ((-1)^i / i!) einf^i e0 dinf^i(abar_inf)
/// ```
///
/// back in `{e0, e1}` coordinates, where `dinf` is the derivation
/// `einf -> 1, e0 -> 0`. For exact Lie polynomials with `push(a) = a` this is
/// the unique Lie solution of `[a, e0] + [b, einf] = 0`.
pub fn b_of(a: &Series) -> Series {
    let max = a.max_degree();
    let abar = to_einf(a);
    let (_, mut cur) = decompose_right(&abar);
    cur = cur.with_truncation(max);
    let t = Alphabet::e0inf();
    let e0 = Series::letter(&t, max, "e0");
    let einf = Series::letter(&t, max, "einf");
    let dinf_images = vec![Series::zero(&t, max), Series::one(&t, max)];
    let mut acc = Series::zero(&t, max);
    let mut i = 0usize;
    let mut inv_factorial = Q::one();
    while !cur.is_zero() {
        let sign = if i % 2 == 0 { qi(1) } else { qi(-1) };
        acc = acc.add(&einf.pow(i).mul(&e0).mul(&cur).scale(&(sign * &inv_factorial)));
        i += 1;
        inv_factorial /= qi(i as i64);
        cur = cur.derivation_apply(&dinf_images);
    }
    from_einf(&acc)
}

/// The series `-e0 - e1` at the given truncation.
fn einf_in_e01(max: usize) -> Series {
    let t = Alphabet::e01();
    Series::letter(&t, max, "e0").neg().sub(&Series::letter(&t, max, "e1"))
}

/// Solves `[a, e0] + [b, einf] = 0` for a homogeneous Lie `b` of the same
/// degree as `a`, by linear algebra. `None` when no Lie solution exists
/// (i.e. `a` is not inert).
pub fn solve_b(a: &Series) -> Option<Series> {
    let n = a.homogeneous_degree()?;
    let alphabet = Alphabet::e01();
    let basis = lyndon_basis(&alphabet, n);
    let einf = einf_in_e01(n + 1);
    let words = words_of_length(&alphabet, n + 1);
    let mut m = QMatrix::zero(words.len(), basis.dim());
    for (j, ej) in basis.expansions().iter().enumerate() {
        let col = ej.with_truncation(n + 1).bracket(&einf);
        for (i, w) in words.iter().enumerate() {
            m.set(i, j, col.coeff(w));
        }
    }
    let rhs_series = a
        .with_truncation(n + 1)
        .bracket(&Series::letter(&alphabet, n + 1, "e0"))
        .neg();
    let rhs: Vec<Q> = words.iter().map(|w| rhs_series.coeff(w)).collect();
    m.solve(&rhs).map(|coords| basis.from_coords(&coords))
}

/// The algebra automorphism exchanging `e0` and `einf` (it fixes `e1`),
/// written in `{e0, e1}` coordinates: `e0 -> -e0-e1, e1 -> e1`.
pub fn swap_e0_einf(s: &Series) -> Series {
    let t = Alphabet::e01();
    let e0 = Series::letter(&t, s.max_degree(), "e0");
    let e1 = Series::letter(&t, s.max_degree(), "e1");
    s.substitute(&[e0.neg().sub(&e1), e1.clone()])
}

/// `theta` on the Lie level: the swap of the companion,
/// `theta(a) = swap(b_of(a))`. Defined only on inert elements.
pub fn lie_theta(a: &Series) -> Result<Series> {
    if !is_push_invariant(a) {
        return Err(AlgebraError::NotInert);
    }
    Ok(swap_e0_einf(&b_of(a)))
}

/// A group-like series `g` with `g(0) = 1`, `log g` Lie, and no degree-1
/// part. These invariants make the normalized `h` of [`solve_h`] unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement(Series);

impl GroupElement {
    pub fn new(s: Series) -> Result<Self> {
        if !s.constant_term().is_one() {
            return Err(AlgebraError::InconsistentInput(
                "group element must have constant term 1".into(),
            ));
        }
        let log = s.log()?;
        if !is_lie(&log) {
            return Err(AlgebraError::NotLie);
        }
        if !log.graded_component(1).is_zero() {
            return Err(AlgebraError::InconsistentInput(
                "group element must have vanishing degree-1 coefficients".into(),
            ));
        }
        Ok(GroupElement(s))
    }

    pub fn identity(max_degree: usize) -> Self {
        GroupElement(Series::one(&Alphabet::e01(), max_degree))
    }

    /// `exp` of a Lie polynomial without linear part.
    pub fn from_log(log: &Series) -> Result<Self> {
        GroupElement::new(log.exp()?)
    }

    pub fn series(&self) -> &Series {
        &self.0
    }

    pub fn log(&self) -> Series {
        self.0.log().expect("constant term 1 by construction")
    }

    pub fn max_degree(&self) -> usize {
        self.0.max_degree()
    }
}

/// The group law `(g, h) -> h(g e0 g^{-1}, e1) . g`.
pub fn circledast(g: &GroupElement, h: &GroupElement) -> GroupElement {
    let max = g.max_degree().min(h.max_degree());
    let alphabet = Alphabet::e01();
    let e0 = Series::letter(&alphabet, max, "e0");
    let e1 = Series::letter(&alphabet, max, "e1");
    let gs = g.series().truncate(max);
    let ad_g_e0 = e0.conjugate(&gs).expect("unit constant term");
    let product = h.series().truncate(max).substitute(&[ad_g_e0, e1]).mul(&gs);
    GroupElement::new(product).expect("the group law preserves the invariants")
}

/// `g e0 g^{-1} + e1 + h einf h^{-1}`; inert pairs are exactly the zeros.
pub fn inertia_defect(g: &GroupElement, h: &GroupElement) -> Series {
    let max = g.max_degree().min(h.max_degree());
    let alphabet = Alphabet::e01();
    let e0 = Series::letter(&alphabet, max, "e0");
    let e1 = Series::letter(&alphabet, max, "e1");
    let einf = einf_in_e01(max);
    e0.conjugate(&g.series().truncate(max))
        .expect("unit constant term")
        .add(&e1)
        .add(&einf.conjugate(&h.series().truncate(max)).expect("unit constant term"))
}

/// Solves `[m, einf] = rhs` for a homogeneous Lie `m` of degree `d`.
fn solve_bracket_einf(d: usize, rhs: &Series) -> Option<Series> {
    let alphabet = Alphabet::e01();
    let basis = lyndon_basis(&alphabet, d);
    let einf = einf_in_e01(d + 1);
    let words = words_of_length(&alphabet, d + 1);
    let mut m = QMatrix::zero(words.len(), basis.dim());
    for (j, ej) in basis.expansions().iter().enumerate() {
        let col = ej.with_truncation(d + 1).bracket(&einf);
        for (i, w) in words.iter().enumerate() {
            m.set(i, j, col.coeff(w));
        }
    }
    let v: Vec<Q> = words.iter().map(|w| rhs.coeff(w)).collect();
    m.solve(&v).map(|coords| basis.from_coords(&coords))
}

/// Finds the normalized group element `h` with
/// `g e0 g^{-1} + e1 + h einf h^{-1} = 0` (mod degree > truncation), degree
/// by degree. `None` when some degree is obstructed, i.e. `g` is not inert.
///
/// The identity pins `log h` only below the truncation degree (the top
/// component first shows up one degree beyond it); that component is set to
/// zero here. Identities built from `solve_h` therefore hold exactly on
/// elements whose own top log component vanishes, and modulo the top degree
/// otherwise.
pub fn solve_h(g: &GroupElement) -> Option<GroupElement> {
    let max = g.max_degree();
    let alphabet = Alphabet::e01();
    let mut log_h = Series::zero(&alphabet, max);
    for d in 2..max {
        let trunc = d + 1;
        let e0 = Series::letter(&alphabet, trunc, "e0");
        let e1 = Series::letter(&alphabet, trunc, "e1");
        let einf = einf_in_e01(trunc);
        let h_partial = log_h.truncate(trunc).exp().expect("constant-free log");
        let defect = e0
            .conjugate(&g.series().truncate(trunc))
            .expect("unit constant term")
            .add(&e1)
            .add(&einf.conjugate(&h_partial).expect("unit constant term"));
        debug_assert!(defect.truncate(d).is_zero(), "lower degrees were already cleared");
        let dd = defect.graded_component(d + 1);
        if dd.is_zero() {
            continue;
        }
        let m_d = solve_bracket_einf(d, &dd.neg())?;
        log_h = log_h.add(&m_d.with_truncation(max));
    }
    let h = GroupElement(log_h.exp().expect("constant-free log"));
    debug_assert!(inertia_defect(g, &h).is_zero());
    Some(h)
}

pub fn is_inert(g: &GroupElement) -> bool {
    solve_h(g).is_some()
}

/// `theta` on the group level: the `e0 <-> einf` swap of the normalized `h`.
/// Conjugating the associated special automorphism by the swap shows this is
/// a `circledast`-automorphism; the involution and homomorphism laws hold
/// modulo the top-degree convention of [`solve_h`].
pub fn group_theta(g: &GroupElement) -> Result<GroupElement> {
    let h = solve_h(g).ok_or(AlgebraError::NotInert)?;
    GroupElement::new(swap_e0_einf(h.series()))
}

/// Dimension gap of `[Lie_d, e0] + [Lie_d, einf]` inside `Lie_{d+1}`; a zero
/// gap means the joint correction step below can never be obstructed at
/// degree `d`.
pub fn e0_einf_span_deficit(d: usize) -> usize {
    let alphabet = Alphabet::e01();
    let basis = lyndon_basis(&alphabet, d);
    let target = lyndon_basis(&alphabet, d + 1);
    let e0 = Series::letter(&alphabet, d + 1, "e0");
    let einf = einf_in_e01(d + 1);
    let words = words_of_length(&alphabet, d + 1);
    let mut m = QMatrix::zero(words.len(), 2 * basis.dim());
    for (j, ej) in basis.expansions().iter().enumerate() {
        let lifted = ej.with_truncation(d + 1);
        for (i, w) in words.iter().enumerate() {
            m.set(i, j, lifted.bracket(&e0).coeff(w));
            m.set(i, basis.dim() + j, lifted.bracket(&einf).coeff(w));
        }
    }
    target.dim() - m.rank()
}

/// Lyndon coordinates outside the pivot set of the inertial subspace. They
/// span a direct complement of `ginert_d` inside `Lie_d`.
fn ginert_complement_indices(degree: usize) -> Vec<usize> {
    let space = ginert_component(degree);
    let dim = lyndon_basis(&Alphabet::e01(), degree).dim();
    let pivots: Vec<usize> = space
        .basis()
        .iter()
        .map(|row| row.iter().position(|c| !c.is_zero()).expect("nonzero basis row"))
        .collect();
    (0..dim).filter(|j| !pivots.contains(j)).collect()
}

/// Builds the inert pair whose degree-`d` inertial content is the prescribed
/// `directions[d]` (an element of `ginert_d`, zero allowed). Each degree gets
/// the unique correction `(delta, m_d)` with `[delta, e0] + [m_d, einf] =
/// -defect` and `delta` transverse to `ginert_d`, so the prescribed
/// directions are never cancelled. `None` if some degree is obstructed.
pub fn inert_pair_from_directions(
    directions: &[Series],
    max_degree: usize,
) -> Option<(GroupElement, GroupElement)> {
    let alphabet = Alphabet::e01();
    let mut log_g = Series::zero(&alphabet, max_degree);
    let mut log_h = Series::zero(&alphabet, max_degree);
    for d in 2..max_degree {
        if let Some(a_d) = directions.get(d) {
            log_g = log_g.add(&a_d.with_truncation(max_degree));
        }

        let trunc = d + 1;
        let e0 = Series::letter(&alphabet, trunc, "e0");
        let e1 = Series::letter(&alphabet, trunc, "e1");
        let einf = einf_in_e01(trunc);
        let g_partial = log_g.truncate(trunc).exp().expect("constant-free log");
        let h_partial = log_h.truncate(trunc).exp().expect("constant-free log");
        let defect = e0
            .conjugate(&g_partial)
            .expect("unit constant term")
            .add(&e1)
            .add(&einf.conjugate(&h_partial).expect("unit constant term"));
        let dd = defect.graded_component(d + 1);
        if dd.is_zero() {
            continue;
        }

        // Joint solve for (delta, m_d), with delta restricted to the
        // complement of ginert_d; the restricted system has trivial kernel.
        let basis = lyndon_basis(&alphabet, d);
        let complement = ginert_complement_indices(d);
        let words = words_of_length(&alphabet, d + 1);
        let mut m = QMatrix::zero(words.len(), complement.len() + basis.dim());
        for (j, &cj) in complement.iter().enumerate() {
            let lifted = basis.expansions()[cj].with_truncation(d + 1);
            let col = lifted.bracket(&e0);
            for (i, w) in words.iter().enumerate() {
                m.set(i, j, col.coeff(w));
            }
        }
        for (j, ej) in basis.expansions().iter().enumerate() {
            let lifted = ej.with_truncation(d + 1);
            let col = lifted.bracket(&einf);
            for (i, w) in words.iter().enumerate() {
                m.set(i, complement.len() + j, col.coeff(w));
            }
        }
        let rhs_series = dd.neg();
        let rhs: Vec<Q> = words.iter().map(|w| rhs_series.coeff(w)).collect();
        let sol = m.solve(&rhs)?;
        let (delta_compl, m_coords) = sol.split_at(complement.len());
        let mut delta_coords = vec![Q::zero(); basis.dim()];
        for (j, &cj) in complement.iter().enumerate() {
            delta_coords[cj] = delta_compl[j].clone();
        }
        log_g = log_g.add(&basis.from_coords(&delta_coords).with_truncation(max_degree));
        log_h = log_h.add(&basis.from_coords(m_coords).with_truncation(max_degree));
    }
    let g = GroupElement(log_g.exp().expect("constant-free log"));
    let h = GroupElement(log_h.exp().expect("constant-free log"));
    debug_assert!(inertia_defect(&g, &h).is_zero());
    Some((g, h))
}

/// Draws an inert group element at the given truncation: each degree takes a
/// random inertial direction, corrected as in [`inert_pair_from_directions`].
/// Returns the pair `(g, h)`; `None` if some degree is obstructed.
pub fn make_inert_group_element<R: Rng>(
    rng: &mut R,
    max_degree: usize,
) -> Option<(GroupElement, GroupElement)> {
    let mut directions = Vec::with_capacity(max_degree);
    for d in 0..max_degree {
        let mut a_d = Series::zero(&Alphabet::e01(), max_degree);
        if d >= 2 {
            for e in ginert_basis(d) {
                let c = qi(rng.gen_range(-3..=3));
                a_d = a_d.add(&e.with_truncation(max_degree).scale(&c));
            }
        }
        directions.push(a_d);
    }
    inert_pair_from_directions(&directions, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dmr::dmr0_basis;
    use crate::lyndon::{ihara_bracket, lie_bracket};
    use crate::rational::qr;
    use rand::SeedableRng;

    fn e01(max: usize) -> (Series, Series) {
        let a = Alphabet::e01();
        (Series::letter(&a, max, "e0"), Series::letter(&a, max, "e1"))
    }

    #[test]
    fn einf_round_trip() {
        let (e0, e1) = e01(4);
        let s = e0.bracket(&e1).scale(&qr(3, 7)).add(&e1.mul(&e0).mul(&e1));
        assert_eq!(from_einf(&to_einf(&s)), s);
        let bar = to_einf(&s);
        assert_eq!(to_einf(&from_einf(&bar)), bar);
    }

    #[test]
    fn push_pinned_values() {
        let (e0, e1) = e01(2);
        assert_eq!(push(&e0.mul(&e1)), e1.mul(&e0));
        assert_eq!(push(&e0.bracket(&e1)), e0.bracket(&e1).neg());
        assert_eq!(push(&e0), e0);
        assert_eq!(push(&e1), e1);
    }

    #[test]
    fn push_is_linear_and_degree_preserving() {
        let (e0, e1) = e01(3);
        let s = e0.mul(&e1).add(&e1.pow(3).scale(&qr(2, 5)));
        let t = e1.mul(&e0).mul(&e0);
        assert_eq!(push(&s.add(&t)), push(&s).add(&push(&t)));
        assert_eq!(push(&s).graded_component(2), push(&s.graded_component(2)));
    }

    #[test]
    fn ginert_dimensions() {
        let dims: Vec<usize> = (1..=6).map(|n| ginert_component(n).dim()).collect();
        assert_eq!(dims, vec![0, 0, 1, 0, 3, 0]);
    }

    #[test]
    fn dmr0_sits_inside_ginert() {
        for n in 2..=6 {
            for s in dmr0_basis(n) {
                assert!(is_push_invariant(&s), "degree {n}");
            }
        }
    }

    #[test]
    fn companion_identity_and_agreement() {
        let (e0, e1) = e01(1);
        for n in [3usize, 5] {
            for a in ginert_basis(n) {
                let b = b_of(&a);
                assert!(is_lie(&b));
                let lhs = lie_bracket(&a, &e0).add(&lie_bracket(&b, &einf_in_e01(n + 1)));
                assert!(lhs.is_zero(), "identity at degree {n}");
                assert_eq!(solve_b(&a), Some(b));
            }
        }
        // [e0, e1] is not inert: no Lie companion exists.
        assert_eq!(solve_b(&e0.bracket(&e1).with_truncation(2)), None);
    }

    #[test]
    fn theta_is_an_involution_on_inert_elements() {
        for n in [3usize, 5] {
            for a in ginert_basis(n) {
                let th = lie_theta(&a).unwrap();
                assert!(is_push_invariant(&th), "theta stays inert");
                assert_eq!(lie_theta(&th).unwrap(), a);
            }
        }
        let sigma = &dmr0_basis(3)[0];
        assert_eq!(&lie_theta(sigma).unwrap(), sigma);
        let (e0, e1) = e01(2);
        assert!(matches!(lie_theta(&e0.bracket(&e1)), Err(AlgebraError::NotInert)));
    }

    #[test]
    fn group_element_invariants() {
        let (e0, e1) = e01(3);
        assert!(GroupElement::new(e0.clone()).is_err());
        let not_group_like = Series::one(e0.alphabet(), 3).add(&e0.mul(&e1));
        assert!(GroupElement::new(not_group_like).is_err());
        let has_linear_part = e1.exp().unwrap();
        assert!(GroupElement::new(has_linear_part).is_err());
        assert!(GroupElement::from_log(&e0.bracket(&e1).with_truncation(3)).is_ok());
    }

    #[test]
    fn circledast_has_a_neutral_element() {
        let g = GroupElement::from_log(&{
            let (e0, e1) = e01(4);
            e0.bracket(&e1).scale(&qr(1, 3))
        })
        .unwrap();
        let id = GroupElement::identity(4);
        assert_eq!(circledast(&g, &id), g);
        assert_eq!(circledast(&id, &g), g);
    }

    #[test]
    fn bracket_exponential_is_obstructed() {
        let (e0, e1) = e01(4);
        let g = GroupElement::from_log(&e0.bracket(&e1).with_truncation(4)).unwrap();
        assert_eq!(solve_h(&g), None);
        assert!(!is_inert(&g));
        assert!(matches!(group_theta(&g), Err(AlgebraError::NotInert)));
    }

    #[test]
    fn constructed_inert_elements_solve() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let (g, h) = make_inert_group_element(&mut rng, 5).expect("construction feasible");
        assert!(inertia_defect(&g, &h).is_zero());
        assert_eq!(solve_h(&g), Some(h));
    }

    #[test]
    fn span_deficits_vanish_in_low_degree() {
        for d in 2..=4 {
            assert_eq!(e0_einf_span_deficit(d), 0, "degree {d}");
        }
    }

    fn inert_pair_led_by(v: &Series, max: usize) -> (GroupElement, GroupElement) {
        let d = v.homogeneous_degree().expect("homogeneous direction");
        let mut dirs = vec![Series::zero(&Alphabet::e01(), max); max];
        dirs[d] = v.with_truncation(max);
        inert_pair_from_directions(&dirs, max).expect("correction unobstructed")
    }

    #[test]
    fn prescribed_directions_survive_the_correction() {
        let s3 = dmr0_basis(3).pop().unwrap();
        let (g, h) = inert_pair_led_by(&s3, 6);
        assert!(inertia_defect(&g, &h).is_zero());
        assert_eq!(g.log().graded_component(3), s3.with_truncation(6).graded_component(3));
    }

    #[test]
    fn group_commutator_leading_term_is_the_ihara_bracket() {
        let s3 = dmr0_basis(3).pop().unwrap();
        let s5 = dmr0_basis(5).pop().unwrap();
        let (g1, _) = inert_pair_led_by(&s3, 8);
        let (g2, _) = inert_pair_led_by(&s5, 8);
        let p12 = circledast(&g1, &g2);
        let p21 = circledast(&g2, &g1);
        assert!(is_inert(&p12) && is_inert(&p21));
        let diff = p12.series().sub(p21.series());
        assert!(diff.truncate(7).is_zero());
        let expected = ihara_bracket(&s3, &s5).with_truncation(8);
        assert!(!expected.is_zero());
        assert_eq!(diff.graded_component(8), expected.graded_component(8));
    }

    #[test]
    fn group_theta_respects_the_group_law() {
        // Truncation 9 so that degree 8, where the two orders first differ,
        // survives dropping the top degree.
        let s3 = dmr0_basis(3).pop().unwrap();
        let s5 = dmr0_basis(5).pop().unwrap();
        let (g1, _) = inert_pair_led_by(&s3, 9);
        let (g2, _) = inert_pair_led_by(&s5, 9);
        let t = |g: &GroupElement| group_theta(g).unwrap();
        let lhs = t(&circledast(&g1, &g2));
        let cut = |x: &GroupElement| x.series().truncate(8);
        assert_eq!(cut(&lhs), cut(&circledast(&t(&g1), &t(&g2))));
        assert_ne!(cut(&lhs), cut(&circledast(&t(&g2), &t(&g1))));
    }
}
