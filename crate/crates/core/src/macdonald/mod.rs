//! Macdonald polynomials and the bases used to state their integrality:
//! `E_lambda`, `calE_lambda`, `t`-monomials, `calJ_lambda`, Hall-Littlewood
//! and `t`-Schur functions, Kostka matrices, and the Jack limit.

mod cache;
mod expansion;
mod jack;
mod kostka;
mod nonsym;
mod oracle;
mod symmetric;
mod tmonomial;

pub use expansion::{Basis, BasisExpansion};
pub use jack::{
    expand_in_limit_monomials, jack_creation, jack_nonsym, jack_sym, numeric_limit_check, numeric_limit_error_at,
    JackPoly,
};
pub use kostka::{kostka_matrix, KostkaMatrix};
pub use nonsym::{haction_step, nonsym_cal_e, nonsym_e, QtLaurent};
pub use oracle::{eigen_oracle_e, lower_set, xi_on_monomial};
pub use symmetric::{
    character, divide_by_difference, expand_symmetric, hall_littlewood, hecke_symmetrize, monomial_symmetric,
    schur_polynomial, sym_cal_j, symmetric_basis_element, t_schur, HallLittlewoodKind,
};
pub use tmonomial::{
    expand_in_partial_t_monomials, expand_in_plain_partial_t_monomials, expand_in_t_monomials, t_monomial,
    t_monomial_by_word, t_monomial_hecke_action, t_monomial_partial,
};

#[cfg(test)]
mod tests;
