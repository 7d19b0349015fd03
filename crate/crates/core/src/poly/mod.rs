//! Exact polynomial families: path and cycle characteristic polynomials,
//! Chebyshev polynomials, and exact evaluation at Gaussian-rational points.

mod det;
mod families;
mod gaussian;
mod int_poly;

pub use det::{charpoly_from_adjacency, cycle_adjacency, path_adjacency, Adjacency};
pub use families::{
    chebyshev_t, chebyshev_u, compose_u_neg_half, cycle_charpoly, cycle_recursion_check,
    cycle_recursion_literal_check, lemma_fib_check, lemma_fib_sweep, path_charpoly,
    path_charpoly_recursive, path_charpoly_table, u_at_neg_half_i,
};
pub use gaussian::GaussianRational;
pub use int_poly::IntPolynomial;

/// Exact evaluation `p(z)`.
pub fn eval_exact(p: &IntPolynomial, z: &GaussianRational) -> GaussianRational {
    p.eval_exact(z)
}
