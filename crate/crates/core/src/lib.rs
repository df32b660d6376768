//! Algebraic combinatorics of permutations: Stanley symmetric functions,
//! Edelman-Greene tableaux, Lascoux-Schutzenberger transition trees and
//! James-Peel decompositions of Rothe diagrams.
//!
//! Every symmetric function here is a Schur-positive expansion, so a Specht
//! module `S^D` is modelled by its multiset of irreducible shapes.

pub mod diagram;
pub mod edelman_greene;
pub mod error;
pub mod exec;
pub mod jp;
pub mod ls;
pub mod monomial;
pub mod perm;
pub mod schur;

pub use diagram::{Diagram, JpMove, MoveKind};
pub use edelman_greene::{EgTableau, RecordingTableau};
pub use error::{Error, Result};
pub use exec::Execution;
pub use jp::{EdgeKind, JpEdge, JpTree, JpVertex};
pub use ls::{LsNode, LsTree};
pub use perm::{Code, Permutation};
pub use schur::{Partition, SchurExpansion};
