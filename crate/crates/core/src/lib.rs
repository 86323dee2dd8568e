pub mod backend;
pub mod bitset;
pub mod cstar;
pub mod doc;
pub mod error;
pub mod exec;
pub mod frobenius;
pub mod groupoid;
pub mod projorder;
pub mod tensor;

pub use backend::{AnyMorphism, Backend, LinearMap, Morphism, ObjectRef, Relation, Tolerance, C64};
pub use error::{Error, Result};
pub use frobenius::{Axiom, AxiomReport, FrobeniusAlgebra, Point};
