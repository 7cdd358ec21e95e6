//! The two symmetries on the set of means: the group-structure symmetry `S`
//! and the Gauss-equation symmetry `σ`, in numeric form ([`numeric`]) and as
//! coefficient recursions on asymptotic expansions ([`series`]).

pub mod numeric;
pub mod series;

pub use numeric::{
    coincidence_residual, functional_symmetry, functional_symmetry_lc, group_symmetry, phi,
    phi_inverse, star, CoincidenceResidual, GaussSolverConfig,
};
pub use series::{
    expansion_pair, s_coeffs, sigma_coeffs, verify_c2_relation, SymmetricExpansionPair,
};
