#![no_std]
#![forbid(unsafe_code)]

//! Chamber graphs of Coxeter complexes, type-A buildings and order complexes
//! of geometric lattices, together with constructive families of internally
//! disjoint galleries and a max-flow engine that certifies them.
//!
//! The crate only needs `alloc`. File formats, the CLI and any parallel
//! orchestration live in the companion `gallery` crate.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod building;
pub mod complex;
pub mod connectivity;
pub mod coxeter;
pub mod field;
pub mod lattice;

pub use complex::{ChamberGraph, Edge, GraphError, Provenance, PureComplex, TypeLabeling};
pub use connectivity::{ConnectivityReport, PathFamily};

/// Size caps shared by the constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_chambers: usize,
    pub max_elements: usize,
    /// Lattices keep a full join table, so this bounds memory quadratically.
    pub max_lattice_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 100_000,
            max_chambers: 200_000,
            max_elements: 20_000,
            max_lattice_elements: 4_096,
        }
    }
}
