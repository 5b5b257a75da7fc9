//! Discrete families: Hahn polynomials on the lattice simplex and
//! Krawtchouk polynomials, with their bridges to the continuous case.

pub mod hahn;
pub mod krawtchouk;

pub use hahn::{
    hahn_1d, hahn_connection, hahn_connection_gram, hahn_from_generating, hahn_lattice, hahn_multi, hahn_norm_b,
    p_nu, verify_b_a, verify_hahn_connection, verify_hahn_generating, verify_hahn_orthogonality, HahnContext,
};
pub use krawtchouk::{
    connection_limit_check, hahn_to_kraw_limit_check, kraw_cc_cyclic, kraw_connection_gram, kraw_dual_map,
    kraw_points, kraw_weight, krawtchouk_1d, krawtchouk_multi, krawtchouk_norm_c, verify_kraw_duality,
    verify_kraw_orthogonality, KrawContext, KrawCyclicForm,
};
