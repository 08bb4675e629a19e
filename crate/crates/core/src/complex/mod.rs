//! Pure simplicial complexes, balanced colourings and chamber graphs.

mod graph;
mod pure;

pub use graph::{generators, ChamberGraph, Edge, GraphError, Provenance};
pub use pure::{
    balanced_type_labeling, chamber_graph_from_complex, ComplexError, PureComplex, TypeLabeling,
};
