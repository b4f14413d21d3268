//! Stable subsets of the cycle and the search problems built on them.
//!
//! * [`set`]: element sets, stability, enumeration and counting.
//! * [`family`], [`graph`], [`exact`]: Kneser-type graph families, their
//!   explicit form, and exact chromatic/independence numbers.
//! * [`oracle`]: black-box colorings with query counting.
//! * [`schrijver`]: monochromatic-edge solvers for Schrijver graphs.
//! * [`uncovered`]: unfair independent sets in the cycle and the four-split.
//! * [`reductions`]: transformations between the problems above.

pub mod error;
pub mod exact;
pub mod family;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod schrijver;
pub mod set;
pub mod uncovered;

pub use error::{Error, Result};
pub use family::{chi_bounds, Family, GraphFamilySpec};
pub use graph::{materialize, ExplicitGraph, Graph};
pub use oracle::{Color, ColoringOracle, Rule};
pub use reductions::{CtInstance, FiscInstance, RawCt, RawFisc};
pub use schrijver::{MonochromaticEdge, SubSolver};
pub use set::{enumerate_stable, is_stable, ElementSet};
pub use uncovered::{RawInstance, UncoveredInstance};
