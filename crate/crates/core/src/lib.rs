//! Exact combinatorics of Iwahori-Weyl groups: admissible sets, parahoric
//! levels, fibers of level-changing maps and the quantum Bruhat graph.

pub mod admissible;
pub mod checks;
pub mod cli;
pub mod error;
pub mod fibers;
pub mod finite_weyl;
pub mod intmat;
pub mod irreducibility;
pub mod iwahori_weyl;
pub mod qbg;
pub mod root_datum;

pub use admissible::{AdmissibleK, AdmissibleSet};
pub use error::{Error, Result};
pub use fibers::{FiberDescriptor, SchubertSweep};
pub use finite_weyl::{FiniteSubset, Side, WeylElement, WeylTable};
pub use irreducibility::{Component, ComponentReport, Irreducibility};
pub use iwahori_weyl::{AffineElement, AffineRoot, SphericalSubset};
pub use qbg::{EdgeKind, QBGEdge, QuantumBruhatGraph, TieBreak};
pub use root_datum::{build_root_datum, CartanSpec, CorootVec, Coweight, Family, LatticeKind, Root, RootDatum};
