//! Shared fixtures for the benchmark suite.

use symsep_core::collections::WsCollection;
use symsep_core::positroid::{top_cell_necklace, EnumerationBudget, PositroidHandle};

/// The anchored top-cell collection at half-ambient `n`, completed to a
/// maximal collection.
pub fn top_cell_maximal(n: usize) -> WsCollection {
    let anchor = PositroidHandle::new(top_cell_necklace(n).expect("valid n"));
    WsCollection::from_anchor(anchor)
        .complete_to_maximal(EnumerationBudget::default())
        .expect("top cell completes")
}
