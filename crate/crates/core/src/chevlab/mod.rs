//! Explicit integral models: exterior powers of the natural module of
//! `Sp_{2l}` and `∧^k V ⊗ ∧^k V^*` for `SL_n`, with Chevalley divided powers,
//! generated Weyl lattices, and two independent orthogonality oracles.

pub mod cache;
mod forms;
mod hnf;
mod lattice;
mod solver;
mod space;

pub use forms::{
    evenness_witness, fixed_space, fixed_space_dim, full_gamma, gamma_vector_a, gamma_vector_c,
    has_even_form, in_radical_mod2, oracle_gram, oracle_gram_a, oracle_gram_c, q_half_eval,
    q_half_of_vector, y_wedge, zero_weight_generators_a, zero_weight_generators_c,
};
pub use hnf::HermiteLattice;
pub use lattice::{expected_rank, generate_weyl_lattice_a, generate_weyl_lattice_c, LatticeModule};
pub use solver::{oracle_solver, oracle_solver_a, oracle_solver_c};
pub use space::{
    Caps, ChevalleyOperator, IntWedgeVector, Monomial, RootVector, SpaceFamily, Unit, WedgeSpace,
    WeightBlock,
};
