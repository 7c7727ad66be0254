//! Exact tensor-triangular geometry of path algebras `RQ` over principal
//! ideal rings: supports, the spectrum `Spec(R) x Q_0`, thick tensor-ideals,
//! compactly generated tensor-aisles and filtration systems.

pub mod error;
pub mod gen;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod ring;
pub mod tstruct;
pub mod tt;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{ElementaryDivisors, FgModule, Matrix};
pub use quiver::{Quiver, VertexSet};
pub use rep::{ComplexR, ComplexRQ, Representation};
pub use ring::spec::{PrimeIdeal, SpClosedSet};
pub use ring::{Integers, IntegersLocalized, IntegersMod, PolyOverPrimeField, PrimeField, Rationals, Ring, RingDesc};

pub type ZComplex = ComplexRQ<Integers>;
pub type FpComplex = ComplexRQ<PrimeField>;
pub type QComplex = ComplexRQ<Rationals>;
pub type ZRep = Representation<Integers>;
pub type FpRep = Representation<PrimeField>;
