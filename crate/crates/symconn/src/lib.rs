//! Exact-arithmetic connectivity decisions for symmetric semi-algebraic sets.
//!
//! Given polynomials `f_1,...,f_s` in `n` variables, all invariant under
//! permutations of the variables and of degree `d < n`, and two points with
//! non-decreasing coordinates inside the set `S = {f_i >= 0 / = 0}`, this
//! crate decides whether the points lie in the same connected component of
//! `S` intersected with the sorted cone — entirely in rational arithmetic.
//!
//! The decision pipeline retracts both query points onto a `d`-dimensional
//! boundary of the sorted cone (minimizing the next power sum on the fiber
//! of the power-sum map), builds a bipartite graph whose vertices represent
//! connected components of pairwise differences and intersections of the
//! face restrictions, and reads the answer off the graph components.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `symconn` binary for the command-line interface.

pub mod compositions;
pub mod error;
pub mod pipeline;
pub mod polycore;
pub mod realroots;
pub mod saoracle;
pub mod uniongraph;
pub mod vandermonde;
pub mod zerodim;

pub use error::{Error, Result};
