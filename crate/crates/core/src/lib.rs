//! Shifted symplectic tableaux, U-turn alternating sign matrices and U-turn
//! square ice, the bijections between them, and exact verification of the
//! deformed Weyl character identities they satisfy.
//!
//! Everything is exact: polynomials carry big-integer coefficients and the
//! closed-form counts are evaluated in big rationals.

pub mod bijection;
pub mod charpoly;
pub mod combinat;
pub mod error;
pub mod fixtures;
pub mod ice;
pub mod poly;
pub mod tableaux;
pub mod uasm;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use bijection::{big_psi, big_psi_inv, psi, psi_inv};
pub use charpoly::{
    asm_count, sp_dimension, sp_schur_t, uasm_count_product, uasm_count_recurrence, verify_identity,
    weyl_denominator, IdentityReport,
};
pub use combinat::{add_staircase, remove_staircase, staircase, Partition, StrictPartition};
pub use error::{Error, Report, Result, Violation};
pub use ice::{chi, chi_inv, ConfigMatrix, IceStats, VertexType};
pub use poly::{Coefficient, Exponents, LaurentPoly, TermRecord};
pub use tableaux::{
    for_each_shifted, generate_ordinary, generate_shifted, generate_shifted_par, Level, OrdinaryTableau,
    ShiftedTableau, TableauStats,
};
pub use uasm::{brute_force_uasms, brute_force_uasms_par, for_each_uasm, phi, phi_inv, MuUasm, SignatureMatrix, UasmStats};

/// Laurent polynomials with big-integer coefficients.
pub type Poly = LaurentPoly<BigInt>;

/// Laurent polynomials with big-rational coefficients.
pub type RationalPoly = LaurentPoly<BigRational>;
