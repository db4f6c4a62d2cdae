//! Sparse multivariate polynomials over the scalar fields.

mod monomial;
mod order;
mod polynomial;
mod symmetric;

pub use monomial::{default_names, Monomial};
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::{pencil_poly, Polynomial};
pub use symmetric::{binomial, ci_hilbert_series_coeff, elementary_symmetric, monomial_basis, monomial_basis_in, power_sum};

#[cfg(test)]
mod tests;
