//! Exact computations in the fractal Lie superalgebra `R = Lie(v0, v1)` of Grassmann
//! superderivations and its associative hull `A = Alg(v0, v1)`.
//!
//! All algebraic types are generic over a coefficient [`Ring`]; the aliases below fix
//! the common choices.

pub mod basis;
pub mod error;
pub mod gradings;
pub mod grassmann;
pub mod growth;
pub mod hull;
pub mod operators;
pub mod scalars;
pub mod span;
pub mod verify;

pub use error::Error;
pub use grassmann::GrassmannMonomial;
pub use hull::{HullElement, HullMonomial};
pub use operators::{Element, PivotMonomial};
pub use scalars::{CharZero, Field, Integers, PrimeField, Rationals, Ring};

pub type IntegerElement = Element<Integers>;
pub type RationalElement = Element<Rationals>;
pub type ModularElement = Element<PrimeField>;
pub type IntegerHullElement = HullElement<Integers>;
pub type RationalHullElement = HullElement<Rationals>;
pub type ModularHullElement = HullElement<PrimeField>;
