//! Factoring a pair of series intertwined through multiplication by `x`.
//!
//! Given invertible series `a`, `b` over `{x, y}` and a Lie series `z` of
//! degree ≥ 2 with `a·x = (x + z)·b`, there is a group-like `h`, a scalar
//! `gamma` and a series `c` with
//!
//! ```text
//! a = h·(gamma + x·c),    b = h·(gamma + c·x),    x + z = h·x·h⁻¹.
//! ```
//!
//! The factorization is produced degree by degree: at each step the three
//! requirements form one inhomogeneous linear system whose coefficient
//! matrix is the first map `(c, u) ↦ (x·c + u, c·x + u, [u, x])` of the
//! exactness complex over `{x, y}`, and the consistency of that system in
//! degree `n` is precisely the degree-`(n+1)` slice of the intertwining
//! identity. The canonical [`QMatrix::solve`] convention (free variables
//! zero) makes the output deterministic even though the factorization is
//! not unique.

use num_traits::Zero;
use rand::Rng;

use crate::linalg::QMatrix;
use crate::lyndon::{is_lie, lyndon_basis};
use crate::rational::{qi, Q};
use crate::series::Series;
use crate::word::{words_of_length, Alphabet, Word};

/// Result of [`torsor_factor`]: `h` is group-like with constant term 1 and
/// truncation `n_max`; `c` carries degrees below `n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsorFactorization {
    pub h: Series,
    pub gamma: Q,
    pub c: Series,
}

impl TorsorFactorization {
    /// Checks the three defining identities against the inputs: the two
    /// factorizations up to degree `n_max`, the conjugation up to
    /// `n_max + 1`.
    pub fn verify(&self, a: &Series, b: &Series, z: &Series, n_max: usize) -> bool {
        let xy = Alphabet::xy();
        let m = n_max + 1;
        let x = Series::letter(&xy, m, "x");
        let h = self.h.with_truncation(m);
        let c = self.c.with_truncation(m);
        let gamma = Series::one(&xy, m).scale(&self.gamma);
        let fac_a = h.mul(&gamma.add(&x.mul(&c))).truncate(n_max);
        let fac_b = h.mul(&gamma.add(&c.mul(&x))).truncate(n_max);
        if fac_a != a.truncate(n_max) || fac_b != b.truncate(n_max) {
            return false;
        }
        let conj = h.mul(&x).mul(&h.inverse().expect("constant term 1"));
        conj == x.add(&z.truncate(m).with_truncation(m))
    }
}

/// First map of the `{x, y}` complex in degree `n`, as a matrix over the
/// coordinates (words of degree `n-1`, Lyndon coordinates of degree `n`),
/// with rows (words of degree `n`, words of degree `n`, Lyndon coordinates
/// of degree `n+1`).
fn xy_first_map(n: usize) -> QMatrix {
    let xy = Alphabet::xy();
    let max = n + 1;
    let words_lo = words_of_length(&xy, n - 1);
    let words_mid = words_of_length(&xy, n);
    let lie_mid = lyndon_basis(&xy, n);
    let lie_hi = lyndon_basis(&xy, n + 1);
    let x = Series::letter(&xy, max, "x");
    let rows = 2 * words_mid.len() + lie_hi.dim();
    let mut out = QMatrix::zero(rows, words_lo.len() + lie_mid.dim());
    let mut fill = |col: usize, vec: Vec<Q>| {
        for (i, v) in vec.into_iter().enumerate() {
            if !v.is_zero() {
                out.set(i, col, v);
            }
        }
    };
    for (j, w) in words_lo.iter().enumerate() {
        let c = Series::from_terms(&xy, max, [(w.clone(), qi(1))]);
        let mut v = series_on_words(&x.mul(&c), &words_mid);
        v.extend(series_on_words(&c.mul(&x), &words_mid));
        v.extend(vec![Q::zero(); lie_hi.dim()]);
        fill(j, v);
    }
    for (j, u) in lie_mid.expansions().iter().enumerate() {
        let u = u.with_truncation(max);
        let mut v = series_on_words(&u, &words_mid);
        v.extend(series_on_words(&u, &words_mid));
        v.extend(lie_hi.to_coords(&u.bracket(&x)).expect("bracket of Lie is Lie"));
        fill(words_lo.len() + j, v);
    }
    out
}

fn series_on_words(s: &Series, words: &[Word]) -> Vec<Q> {
    let mut v = vec![Q::zero(); words.len()];
    for (w, c) in s.terms() {
        if let Ok(k) = words.binary_search(w) {
            v[k] = c.clone();
        }
    }
    v
}

/// Factors `(a, b, z)` with `a·x = (x + z)·b` into `(h, gamma, c)` as in
/// the module description, working up to degree `n_max` (the conjugation
/// identity holds one degree further). Returns `None` when the inputs
/// violate a precondition: non-invertible or mismatched constant terms, a
/// `z` that is not Lie of degree ≥ 2, or an intertwining identity that
/// fails in some degree ≤ `n_max + 1`.
pub fn torsor_factor(
    a: &Series,
    b: &Series,
    z: &Series,
    n_max: usize,
) -> Option<TorsorFactorization> {
    let xy = Alphabet::xy();
    assert_eq!(a.alphabet(), &xy, "series over {{x, y}}");
    assert_eq!(b.alphabet(), &xy, "series over {{x, y}}");
    assert_eq!(z.alphabet(), &xy, "series over {{x, y}}");
    let m = n_max + 1;
    let a = a.truncate(n_max).with_truncation(m);
    let b = b.truncate(n_max).with_truncation(m);
    let z = z.truncate(m).with_truncation(m);

    let gamma = a.constant_term();
    if gamma.is_zero() || b.constant_term() != gamma {
        return None;
    }
    if !z.graded_component(0).is_zero() || !z.graded_component(1).is_zero() || !is_lie(&z) {
        return None;
    }

    let x = Series::letter(&xy, m, "x");
    let mut rem_a = a;
    let mut rem_b = b;
    let mut conj = x.add(&z);
    let mut h = Series::one(&xy, m);
    let mut c = Series::zero(&xy, m);

    for n in 1..=n_max {
        let words_lo = words_of_length(&xy, n - 1);
        let words_mid = words_of_length(&xy, n);
        let lie_mid = lyndon_basis(&xy, n);
        let lie_hi = lyndon_basis(&xy, n + 1);

        let mut rhs = series_on_words(&rem_a.graded_component(n), &words_mid);
        rhs.extend(series_on_words(&rem_b.graded_component(n), &words_mid));
        let z_next = conj.graded_component(n + 1).scale(&gamma);
        rhs.extend(lie_hi.to_coords(&z_next).ok()?);

        let sol = xy_first_map(n).solve(&rhs)?;
        let (c_part, u_part) = sol.split_at(words_lo.len());
        let c_n = Series::from_terms(
            &xy,
            m,
            words_lo.iter().cloned().zip(c_part.iter().cloned()),
        );
        let u_n = lie_mid.from_coords(u_part).with_truncation(m).scale(&gamma.recip());

        let g = u_n.exp().expect("zero constant term");
        let g_inv = u_n.neg().exp().expect("zero constant term");
        rem_a = g_inv.mul(&rem_a);
        rem_b = g_inv.mul(&rem_b);
        conj = g_inv.mul(&conj).mul(&g);
        h = h.mul(&g);
        c = c.add(&c_n);
    }

    Some(TorsorFactorization {
        h: h.truncate(n_max),
        gamma,
        c: c.truncate(n_max.saturating_sub(1)),
    })
}

/// Manufactures a factorable triple `(a, b, z)` from a random witness
/// `(h, gamma, c)`: the intertwining identity holds by construction, so
/// [`torsor_factor`] must succeed on it. `a` and `b` come back truncated at
/// `n_max`, `z` at `n_max + 1`.
pub fn random_torsor_instance<R: Rng>(rng: &mut R, n_max: usize) -> (Series, Series, Series) {
    assert!(n_max >= 1, "positive truncation");
    let xy = Alphabet::xy();
    let m = n_max + 1;
    let mut log_h = Series::zero(&xy, m);
    for d in 1..=n_max {
        let basis = lyndon_basis(&xy, d);
        let coords: Vec<Q> = (0..basis.dim()).map(|_| qi(rng.gen_range(-2..=2))).collect();
        log_h = log_h.add(&basis.from_coords(&coords).with_truncation(m));
    }
    let h = log_h.exp().expect("zero constant term");
    let gamma = loop {
        let g = rng.gen_range(-3..=3i64);
        if g != 0 {
            break qi(g);
        }
    };
    let c = Series::from_terms(
        &xy,
        m,
        crate::word::words_up_to(&xy, n_max - 1)
            .into_iter()
            .map(|w| (w, qi(rng.gen_range(-2..=2)))),
    );
    let x = Series::letter(&xy, m, "x");
    let gamma_s = Series::one(&xy, m).scale(&gamma);
    let a = h.mul(&gamma_s.add(&x.mul(&c)));
    let b = h.mul(&gamma_s.add(&c.mul(&x)));
    let z = h.mul(&x).mul(&h.inverse().expect("constant term 1")).sub(&x);
    (a.truncate(n_max), b.truncate(n_max), z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn xy() -> Alphabet {
        Alphabet::xy()
    }

    #[test]
    fn trivial_instance_returns_the_trivial_factorization() {
        let one = Series::one(&xy(), 4);
        let zero = Series::zero(&xy(), 5);
        let fact = torsor_factor(&one, &one, &zero, 4).unwrap();
        assert_eq!(fact.h, Series::one(&xy(), 4));
        assert_eq!(fact.gamma, qi(1));
        assert!(fact.c.is_zero());
        assert!(fact.verify(&one, &one, &zero, 4));
    }

    #[test]
    fn pinned_two_letter_instance() {
        let x = Series::letter(&xy(), 3, "x");
        let y = Series::letter(&xy(), 3, "y");
        let one = Series::one(&xy(), 3);
        let a = one.add(&x.mul(&y));
        let b = one.add(&y.mul(&x));
        let zero = Series::zero(&xy(), 4);
        let fact = torsor_factor(&a, &b, &zero, 3).unwrap();
        // the degree-2 solve is unique here, so the witness itself comes back
        assert_eq!(fact.h, Series::one(&xy(), 3));
        assert_eq!(fact.gamma, qi(1));
        assert_eq!(fact.c, y.truncate(2));
        assert!(fact.verify(&a, &b, &zero, 3));
    }

    #[test]
    fn non_unit_constant_term_is_carried_through() {
        let x = Series::letter(&xy(), 3, "x");
        let y = Series::letter(&xy(), 3, "y");
        let two = Series::one(&xy(), 3).scale(&qi(2));
        let a = two.add(&x.mul(&y));
        let b = two.add(&y.mul(&x));
        let zero = Series::zero(&xy(), 4);
        let fact = torsor_factor(&a, &b, &zero, 3).unwrap();
        assert_eq!(fact.gamma, qi(2));
        assert!(fact.verify(&a, &b, &zero, 3));
    }

    #[test]
    fn round_trip_on_random_witnesses() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let (a, b, z) = random_torsor_instance(&mut rng, 4);
            let fact = torsor_factor(&a, &b, &z, 4).expect("manufactured instance factors");
            assert!(fact.verify(&a, &b, &z, 4));
            assert!(is_lie(&fact.h.log().unwrap()), "log h must be Lie");
            let again = torsor_factor(&a, &b, &z, 4).unwrap();
            assert_eq!(fact, again, "output must be deterministic");
        }
    }

    #[test]
    fn rejects_inconsistent_pairs() {
        let one = Series::one(&xy(), 2);
        let y = Series::letter(&xy(), 2, "y");
        let zero = Series::zero(&xy(), 3);
        assert!(torsor_factor(&one, &one.add(&y), &zero, 2).is_none());
    }

    #[test]
    fn rejects_bad_constants_and_non_lie_z() {
        let one = Series::one(&xy(), 2);
        let x = Series::letter(&xy(), 3, "x");
        let zero = Series::zero(&xy(), 3);
        assert!(torsor_factor(&Series::zero(&xy(), 2), &one, &zero, 2).is_none());
        assert!(torsor_factor(&one, &one.scale(&qi(2)), &zero, 2).is_none());
        assert!(torsor_factor(&one, &one, &x.mul(&x), 2).is_none());
    }
}
