//! Exact tools for the rectilinear crossing number of small and medium
//! planar point sets: orientation predicates, j-edge censuses, crossing
//! counts, lower and upper bounds derived from (<=k)-edge counts, and the
//! point-motion machinery that reduces a set to a triangular hull without
//! increasing its crossings.

pub mod bounds;
pub mod census;
pub mod crossings;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod io;
pub mod motion;
pub mod rational;

pub use census::{CumulativeEdgeVector, EdgeVector};
pub use crossings::{CrossingReport, Method};
pub use error::{Error, Result};
pub use geometry::{Orientation, Point, PointSet, Vector};
