//! Computations on matroids with group-labeled elements: explicit basis
//! families, proximity of bases to label-constrained bases, serial symmetric
//! exchange orderings, CNF generation for ordering-free basis families, and
//! multi-constraint variants.
//!
//! Everything here is deterministic: basis families are kept sorted, searches
//! break ties by smallest element id, and randomized helpers take explicit
//! seeds. The crate is no_std + alloc; IO and process handling live in the
//! companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod gen;
pub mod graph;
pub mod group;
pub mod iso;
pub mod labels;
pub mod matroid;
pub mod multilabel;
pub mod ordering;
pub mod proximity;
pub mod rng;
pub mod satgen;
pub mod set;
pub mod sibo;

pub use graph::{make_graphic, make_r10, Graph};
pub use group::{AbelianGroup, GroupElem};
pub use labels::{ForbiddenSet, Labeling, Partition};
pub use matroid::Matroid;
pub use set::ElemSet;
