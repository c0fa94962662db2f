//! Combinatorics of weakly separated collections, positroids, plabic
//! tilings and plabic graphs, in type A and in the symmetric (type C)
//! setting of the Lagrangian Grassmannian.
//!
//! The crate is organized bottom-up:
//!
//! * [`cyclic`] — subset arithmetic on `[m]`: cyclic orders, Gale orders,
//!   weak separation, the bar involution, pair classification.
//! * [`positroid`] — decorated permutations, Grassmann necklaces,
//!   positroid membership, alignments, type-C predicates.
//! * [`collections`] — weakly separated collections, maximality, square
//!   moves, spines, enumeration.
//! * [`tiling`] — embedded plabic tilings and SVG rendering.
//! * [`plabic`] — plabic graphs, trips, reducedness, face labels.
//! * [`verify`] — executable checks of the purity theorems at desk scale.

pub mod collections;
pub mod cyclic;
pub mod error;
pub mod io;
pub mod plabic;
pub mod positroid;
pub mod tiling;
pub mod verify;

pub use collections::{Spine, WsCollection};
pub use cyclic::{CyclicSet, Handedness, PairType};
pub use error::{Error, Result};
pub use plabic::{FaceLabeling, PlabicGraph, Trip};
pub use positroid::{DecoratedPermutation, FixedColor, GrassmannNecklace, PositroidHandle};
pub use tiling::{Color, PlabicTiling, TilingCell, TilingVertex};
pub use verify::CheckReport;
