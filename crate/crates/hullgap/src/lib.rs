//! Exact-arithmetic planar geometry: convex hulls with a full three-way
//! classification of input points, and decision procedures for closeness
//! questions on number multisets obtained by lifting them onto parabolas.
//!
//! All coordinates are arbitrary-precision rationals, so every predicate in
//! the crate is decided exactly; there is no tolerance anywhere.
//!
//! The `hullgap` binary exposes the decision procedures, a randomized
//! verification suite, a predicate-count benchmark, and an SVG plotter over
//! simple text file formats; see the crate README.

pub mod cli;
pub mod geom;
pub mod hull;
pub mod numeric;
pub mod oracles;
pub mod reductions;
