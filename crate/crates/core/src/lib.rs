//! Exact-arithmetic algebra for the double shuffle Lie algebra and the
//! special inertial derivations around it.
//!
//! The crate builds up from exact rational linear algebra and truncated
//! noncommutative series to:
//!
//! - free Lie algebras with Lyndon bases, the Ihara bracket,
//! - the harmonic coproducts and the double shuffle space `dmr0`,
//! - the `einf`-rotation (`push`) operator, the inertial subspace, the
//!   involution `theta` on both the Lie and the group level,
//! - a 3x3 matrix model with its commutant computations, graded exactness
//!   checks and a constructive torsor factorization,
//! - the change of letters into the Kashiwara-Vergne setting.
//!
//! Everything is computed over `Q` with no floating point anywhere, so all
//! results are exact and reproducible bit for bit.

pub mod error;
pub mod rational;

pub mod linalg;
pub mod word;

pub mod dmr;
pub mod inertia;
pub mod kv;
pub mod lyndon;
pub mod matrep;
pub mod series;
pub mod torsor;

pub use dmr::{
    counit_laws_hold, delta_m, delta_w, delta_w_left, delta_w_right, dmr0_basis, dmr0_component,
    dmr0_component_wordspace, gamma_correction, gamma_series, is_m_primitive, project_to_m,
    w_factorize, w_words_of_degree, y_word, MElement, WElement, WTensor, WTensor3,
};
pub use error::{AlgebraError, Result};
pub use inertia::{
    b_of, circledast, decompose_right, from_einf, ginert_basis, ginert_component, group_theta,
    inert_pair_from_directions, inertia_defect, is_inert, is_push_invariant, lie_theta,
    make_inert_group_element, push, solve_b, solve_h, swap_e0_einf, to_einf, GroupElement,
};
pub use kv::{
    check_inert_equivalence, ds_basis, ds_component, f_to_F, ihara_bracket_xy, is_sder, iso_i,
    iso_i_inv, nu, nu_rank_on_ds, nu_respects_ihara, TangentialDerivation,
};
pub use linalg::{QMatrix, Subspace};
pub use matrep::{
    bi_monomials_up_to, commutant, cv_e0_basis, delta_rho, delta_w_rl, exactness_check,
    m_param, mat_to_vector, rho0_rho1_family_span, rho1_family_span, BiMat, BiSeries,
    ExactComplex, ExactnessRanks, ExactnessReport, Mat3, Rep3,
};
pub use lyndon::{
    ihara_bracket, is_lie, lie_bracket, lyndon_basis, lyndon_words, Bracketing, LieElement,
    LyndonBasis,
};
pub use rational::{q_from_str, q_to_string, qi, qr, Q};
pub use series::Series;
pub use torsor::{random_torsor_instance, torsor_factor, TorsorFactorization};
pub use word::{words_of_length, words_up_to, Alphabet, Word};
