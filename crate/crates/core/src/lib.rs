//! L(3,2,1)- and k-radio labelings of circulant graphs.
//!
//! The crate computes, verifies and constructs distance-constrained vertex
//! labelings: exact backtracking search (`solver`), periodic pattern
//! tiling and composition (`pattern`), distance-graph window lower bounds
//! (`bounds`), and a built-in catalog of known values and patterns for the
//! three 4-valent circulant families `C_n({1,s,n-s,n-1})`, `s` in {3,4,5}
//! (`catalog`).

pub mod bounds;
pub mod catalog;
pub mod graph;
pub mod labeling;
pub mod pattern;
pub mod solver;

pub use graph::{BoundedDistances, CirculantSpec, DistanceWindowSpec, Graph, GraphError, Origin};
pub use labeling::{check_labeling, ConstraintProfile, Labeling, LabelingError, Violation};
pub use solver::{
    extend_prefix, lambda_exact, solve, AnchorPolicy, LambdaResult, Outcome, SearchResult,
    SolveError, SolveOptions,
};
