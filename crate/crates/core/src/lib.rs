//! Exact tilings of convex polygons by equilateral triangles on the
//! triangular lattice.

pub mod appendix;
pub mod bounds;
pub mod cli;
pub mod conformance;
pub mod constructions;
pub mod format;
pub mod gamma;
pub mod geom;
pub mod lattice;
pub mod render;
pub mod scalar;
pub mod search;
pub mod sequences;
pub mod tiling;

pub use geom::{ConvexLatticePolygon, LatticePoint, Orientation, ShapeClass, Tile};
pub use scalar::ExactScalar;
pub use tiling::{Tiling, TilingStats, VertexClass};
