//! Exact linear algebra over the ring tier: matrices, Smith normal form,
//! finitely presented modules and subquotients.

mod matrix;
mod module;
mod snf;
mod subquotient;

pub use matrix::Matrix;
pub use module::{cokernel_presentation, kernel_basis, lattice_contains, solve, ElementaryDivisors, FgModule};
pub use snf::{smith_normal_form, SmithForm};
pub use subquotient::{preimage, Subquotient};

