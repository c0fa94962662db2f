//! Embedded plabic tilings of maximal weakly separated collections:
//! vertices at subset sums of boundary points, white/black clique cells,
//! polygon and trivial-clique edges, reflection checks, SVG rendering.

use std::collections::{BTreeMap, BTreeSet};

use crate::collections::WsCollection;
use crate::cyclic::{bar, is_pair_free, CyclicSet};
use crate::error::{Error, Result};
use crate::positroid::EnumerationBudget;

/// Geometric tolerance for axis membership and mirror checks.
pub const GEOM_EPS: f64 = 1e-9;

/// Tile (and, dually, plabic-graph vertex) color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// A tiling vertex `v_I = Σ_{i∈I} v_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct TilingVertex {
    pub label: CyclicSet,
    pub position: (f64, f64),
}

/// A two-dimensional cell: a non-trivial white or black clique, with its
/// boundary labels in clockwise order starting from the extra/removed
/// element of smallest index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingCell {
    pub color: Color,
    /// The `(k-1)`-set `K` (white) or `(k+1)`-set `L` (black).
    pub witness: CyclicSet,
    pub vertices: Vec<CyclicSet>,
}

/// The embedded CW-complex `Σ(C)` of a maximal collection.
#[derive(Debug, Clone, PartialEq)]
pub struct PlabicTiling {
    m: usize,
    k: usize,
    vertices: Vec<TilingVertex>,
    cells: Vec<TilingCell>,
    edges: BTreeSet<(CyclicSet, CyclicSet)>,
    boundary: Vec<CyclicSet>,
}

/// Boundary points `v_1, ..., v_m` on the unit circle at
/// `θ_i = 180° − (2i−1)·(180°/m)` (clockwise with increasing index).
///
/// For even `m` the points are built from one quadrant and mirrored, so
/// `v_{i'} = (x_i, −y_i)` holds exactly and `Σ_{a∈[n]} x_a = 0` exactly.
pub fn embed_points(m: usize) -> Result<Vec<(f64, f64)>> {
    if m < 3 {
        return Err(Error::domain(format!(
            "embed_points: need at least 3 boundary points, got {m}"
        )));
    }
    let theta = |i: usize| -> f64 {
        std::f64::consts::PI * (1.0 - (2 * i - 1) as f64 / m as f64)
    };
    if m % 2 != 0 {
        return Ok((1..=m).map(|i| (theta(i).cos(), theta(i).sin())).collect());
    }
    let n = m / 2;
    let mut points = vec![(0.0, 0.0); m];
    // Upper half, left quadrant; the rest by exact reflections.
    for a in 1..=n.div_ceil(2) {
        let (x, y) = if 2 * a == n + 1 {
            (0.0, 1.0)
        } else {
            (theta(a).cos(), theta(a).sin())
        };
        points[a - 1] = (x, y);
        points[n - a] = (-x, y); // vertical mirror within the upper half
    }
    for a in 1..=n {
        let (x, y) = points[a - 1];
        points[m - a] = (x, -y); // horizontal mirror: v_{a'} below v_a
    }
    Ok(points)
}

fn vertex_position(points: &[(f64, f64)], label: &CyclicSet) -> (f64, f64) {
    let mut x = 0.0;
    let mut y = 0.0;
    for i in label.iter() {
        x += points[i - 1].0;
        y += points[i - 1].1;
    }
    (x, y)
}

/// Rotates `items` (paired with their ordering keys) so the smallest key
/// comes first, preserving cyclic order.
fn rotate_to_min<T: Clone>(keys: &[usize], items: &[T]) -> Vec<T> {
    let start = keys
        .iter()
        .enumerate()
        .min_by_key(|(_, &k)| k)
        .map(|(idx, _)| idx)
        .unwrap_or(0);
    (0..items.len())
        .map(|offset| items[(start + offset) % items.len()].clone())
        .collect()
}

/// Builds the plabic tiling of a collection that is maximal by size
/// (equivalently, by inclusion) in its anchoring positroid.
pub fn build_tiling(c: &WsCollection, budget: EnumerationBudget) -> Result<PlabicTiling> {
    let anchor = c
        .anchor()
        .ok_or_else(|| Error::domain("build_tiling requires an anchored collection"))?
        .clone();
    if !c.validate()? {
        return Err(Error::domain("build_tiling: collection is not valid"));
    }
    if !c.is_max_by_inclusion(budget)? {
        return Err(Error::domain("build_tiling: collection is not maximal"));
    }
    let m = c.ambient();
    let k = c.k();
    let points = embed_points(m)?;

    let vertices: Vec<TilingVertex> = c
        .members()
        .map(|label| TilingVertex {
            label: *label,
            position: vertex_position(&points, label),
        })
        .collect();

    // White cliques: K -> the extra elements a with K ∪ {a} ∈ C.
    let mut white: BTreeMap<CyclicSet, Vec<usize>> = BTreeMap::new();
    // Black cliques: L -> the removed elements b with L ∖ {b} ∈ C.
    let mut black: BTreeMap<CyclicSet, Vec<usize>> = BTreeMap::new();
    for member in c.members() {
        for a in member.iter() {
            white.entry(member.without(a)?).or_default().push(a);
        }
        for b in 1..=m {
            if !member.contains(b) {
                black.entry(member.with(b)?).or_default().push(b);
            }
        }
    }

    // Ascending element order makes each clique polygon clockwise.
    for extras in white.values_mut().chain(black.values_mut()) {
        extras.sort_unstable();
    }

    let mut cells = Vec::new();
    let mut edges: BTreeSet<(CyclicSet, CyclicSet)> = BTreeSet::new();
    let mut edge = |a: CyclicSet, b: CyclicSet| {
        edges.insert((a.min(b), a.max(b)));
    };
    for (witness, extras) in &white {
        if extras.len() < 3 {
            continue;
        }
        let labels: Vec<CyclicSet> = extras
            .iter()
            .map(|&a| witness.with(a))
            .collect::<Result<_>>()?;
        let labels = rotate_to_min(extras, &labels);
        for i in 0..labels.len() {
            edge(labels[i], labels[(i + 1) % labels.len()]);
        }
        cells.push(TilingCell {
            color: Color::White,
            witness: *witness,
            vertices: labels,
        });
    }
    for (witness, removed) in &black {
        if removed.len() < 3 {
            continue;
        }
        let labels: Vec<CyclicSet> = removed
            .iter()
            .map(|&b| witness.without(b))
            .collect::<Result<_>>()?;
        let labels = rotate_to_min(removed, &labels);
        for i in 0..labels.len() {
            edge(labels[i], labels[(i + 1) % labels.len()]);
        }
        cells.push(TilingCell {
            color: Color::Black,
            witness: *witness,
            vertices: labels,
        });
    }
    // Trivial-clique edges: {I, J} forming both the full white clique of
    // I ∩ J and the full black clique of I ∪ J.
    for (witness, extras) in &white {
        if extras.len() != 2 {
            continue;
        }
        let union = witness.with(extras[0])?.with(extras[1])?;
        if black.get(&union).map(Vec::len) == Some(2) {
            edge(witness.with(extras[0])?, witness.with(extras[1])?);
        }
    }

    let boundary: Vec<CyclicSet> = anchor.necklace().entries().to_vec();
    let tiling = PlabicTiling {
        m,
        k,
        vertices,
        cells,
        edges,
        boundary,
    };
    Ok(tiling)
}

impl PlabicTiling {
    pub fn ambient(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[TilingVertex] {
        &self.vertices
    }

    pub fn cells(&self) -> &[TilingCell] {
        &self.cells
    }

    pub fn edges(&self) -> impl Iterator<Item = &(CyclicSet, CyclicSet)> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Necklace labels `I_1, ..., I_m` around the boundary.
    pub fn boundary(&self) -> &[CyclicSet] {
        &self.boundary
    }

    pub fn position(&self, label: &CyclicSet) -> Option<(f64, f64)> {
        self.vertices
            .iter()
            .find(|v| &v.label == label)
            .map(|v| v.position)
    }

    /// True iff the 1-skeleton is connected (vacuously for ≤ 1 vertex).
    pub fn is_connected(&self) -> bool {
        if self.vertices.len() <= 1 {
            return true;
        }
        let index: BTreeMap<CyclicSet, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.label, i))
            .collect();
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (a, b) in &self.edges {
                let (ia, ib) = (index[a], index[b]);
                let next = if ia == v {
                    ib
                } else if ib == v {
                    ia
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    fn cell_key(&self, color: Color, witness: &CyclicSet) -> Option<&TilingCell> {
        self.cells
            .iter()
            .find(|c| c.color == color && &c.witness == witness)
    }

    /// True iff the labels are bar-closed and bar maps each white cell
    /// with witness `K` onto a black cell with witness `bar(K)` (and
    /// conversely), per the reflection of cliques.
    pub fn is_symmetric_tiling(&self) -> Result<bool> {
        if self.m % 2 != 0 {
            return Err(Error::domain("is_symmetric_tiling: ambient must be even"));
        }
        let labels: BTreeSet<CyclicSet> = self.vertices.iter().map(|v| v.label).collect();
        for label in &labels {
            if !labels.contains(&bar(label)?) {
                return Ok(false);
            }
        }
        for cell in &self.cells {
            let mirrored_witness = bar(&cell.witness)?;
            let Some(partner) = self.cell_key(cell.color.opposite(), &mirrored_witness)
            else {
                return Ok(false);
            };
            let image: BTreeSet<CyclicSet> = cell
                .vertices
                .iter()
                .map(bar)
                .collect::<Result<_>>()?;
            let target: BTreeSet<CyclicSet> = partner.vertices.iter().copied().collect();
            if image != target {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff a vertex lies on the vertical axis exactly when its label
    /// is pair-free.
    pub fn pair_free_on_axis(&self) -> Result<bool> {
        if self.m % 2 != 0 {
            return Err(Error::domain("pair_free_on_axis: ambient must be even"));
        }
        for v in &self.vertices {
            if (v.position.0.abs() <= GEOM_EPS) != is_pair_free(&v.label)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Signed area sum of the 2-cells (shoelace; clockwise cells give
    /// negative area, so the absolute value is reported).
    pub fn total_cell_area(&self) -> f64 {
        let mut total = 0.0;
        for cell in &self.cells {
            let pts: Vec<(f64, f64)> = cell
                .vertices
                .iter()
                .map(|l| self.position(l).expect("cell vertex has a position"))
                .collect();
            let mut twice = 0.0;
            for i in 0..pts.len() {
                let (x1, y1) = pts[i];
                let (x2, y2) = pts[(i + 1) % pts.len()];
                twice += x1 * y2 - x2 * y1;
            }
            total += (twice / 2.0).abs();
        }
        total
    }

    /// True iff every 2-cell is a strictly convex clockwise polygon.
    pub fn cells_strictly_convex(&self) -> bool {
        for cell in &self.cells {
            let pts: Vec<(f64, f64)> = cell
                .vertices
                .iter()
                .map(|l| self.position(l).expect("cell vertex has a position"))
                .collect();
            let len = pts.len();
            for i in 0..len {
                let a = pts[i];
                let b = pts[(i + 1) % len];
                let c = pts[(i + 2) % len];
                let cross = (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0);
                if cross >= -GEOM_EPS {
                    return false;
                }
            }
        }
        true
    }

    /// Deterministic SVG: cells, then edges, then labeled vertices, with
    /// the vertical midline for even ambient.
    pub fn render_svg(&self) -> String {
        const SCALE: f64 = 60.0;
        const MARGIN: f64 = 50.0;
        let extent = self
            .vertices
            .iter()
            .flat_map(|v| [v.position.0.abs(), v.position.1.abs()])
            .fold(1.0_f64, f64::max);
        let half = extent * SCALE + MARGIN;
        let size = 2.0 * half;
        // SVG y grows downward; flip the vertical coordinate.
        let tx = |p: (f64, f64)| (half + p.0 * SCALE, half - p.1 * SCALE);
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size:.0}\" \
             height=\"{size:.0}\" viewBox=\"0 0 {size:.0} {size:.0}\">\n"
        ));
        if self.m % 2 == 0 {
            out.push_str(&format!(
                "  <line x1=\"{half:.1}\" y1=\"0\" x2=\"{half:.1}\" y2=\"{size:.1}\" \
                 stroke=\"#999999\" stroke-dasharray=\"6,4\"/>\n"
            ));
        }
        for cell in &self.cells {
            let fill = match cell.color {
                Color::White => "#ffffff",
                Color::Black => "#555555",
            };
            let pts: Vec<String> = cell
                .vertices
                .iter()
                .map(|l| {
                    let (x, y) = tx(self.position(l).expect("cell vertex has a position"));
                    format!("{x:.4},{y:.4}")
                })
                .collect();
            out.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"{fill}\" stroke=\"#000000\"/>\n",
                pts.join(" ")
            ));
        }
        for (a, b) in &self.edges {
            let (x1, y1) = tx(self.position(a).expect("edge end has a position"));
            let (x2, y2) = tx(self.position(b).expect("edge end has a position"));
            out.push_str(&format!(
                "  <line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" \
                 stroke=\"#000000\"/>\n"
            ));
        }
        for v in &self.vertices {
            let (x, y) = tx(v.position);
            out.push_str(&format!(
                "  <circle cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"3\" fill=\"#cc0000\"/>\n"
            ));
            out.push_str(&format!(
                "  <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"12\">{}</text>\n",
                x + 5.0,
                y - 5.0,
                v.label
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collections::{enumerate_maximal, enumerate_maximal_symmetric};
    use crate::cyclic::{handedness, Handedness};
    use crate::positroid::{
        necklace_from_perm, top_cell_necklace, DecoratedPermutation, PositroidHandle,
    };

    fn set(m: usize, elems: &[usize]) -> CyclicSet {
        CyclicSet::new(m, elems.iter().copied()).unwrap()
    }

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    fn top_cell_collections(n: usize) -> Vec<crate::collections::WsCollection> {
        let anchor = PositroidHandle::new(top_cell_necklace(n).unwrap());
        enumerate_maximal(&anchor, budget()).unwrap()
    }

    fn fan_tiling() -> PlabicTiling {
        // The n=2 top-cell collection {12, 23, 34, 14, 13}.
        let anchor = PositroidHandle::new(top_cell_necklace(2).unwrap());
        let c = crate::collections::WsCollection::anchored(
            anchor,
            [
                set(4, &[1, 2]),
                set(4, &[2, 3]),
                set(4, &[3, 4]),
                set(4, &[1, 4]),
                set(4, &[1, 3]),
            ],
        )
        .unwrap();
        build_tiling(&c, budget()).unwrap()
    }

    const R: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn embed_points_examples() {
        let pts = embed_points(4).unwrap();
        let expected = [(-R, R), (R, R), (R, -R), (-R, -R)];
        for (got, want) in pts.iter().zip(expected) {
            assert!((got.0 - want.0).abs() < 1e-12 && (got.1 - want.1).abs() < 1e-12);
        }
        // Mirror pairs are exact by construction.
        for m in [4usize, 6, 8, 10] {
            let pts = embed_points(m).unwrap();
            for i in 1..=m / 2 {
                assert_eq!(pts[i - 1].0, pts[m - i].0);
                assert_eq!(pts[i - 1].1, -pts[m - i].1);
            }
            let upper_x: f64 = (0..m / 2).map(|i| pts[i].0).sum();
            assert!(upper_x.abs() < 1e-9, "sum of upper x at m = {m}");
        }
        assert!(embed_points(2).is_err());
        assert_eq!(embed_points(5).unwrap().len(), 5);
    }

    #[test]
    fn top_cell_endpoints_on_axis() {
        let pts = embed_points(4).unwrap();
        let top = vertex_position(&pts, &set(4, &[1, 2]));
        let bottom = vertex_position(&pts, &set(4, &[3, 4]));
        assert!((top.0).abs() < 1e-12 && (top.1 - 2.0 * R).abs() < 1e-12);
        assert!((bottom.0).abs() < 1e-12 && (bottom.1 + 2.0 * R).abs() < 1e-12);
        assert!(top.1 > bottom.1);
    }

    #[test]
    fn build_tiling_fan() {
        let t = fan_tiling();
        assert_eq!(t.vertices().len(), 5);
        assert_eq!(t.cells().len(), 4);
        let whites: Vec<&TilingCell> = t
            .cells()
            .iter()
            .filter(|c| c.color == Color::White)
            .collect();
        let blacks: Vec<&TilingCell> = t
            .cells()
            .iter()
            .filter(|c| c.color == Color::Black)
            .collect();
        assert_eq!(whites.len(), 2);
        assert_eq!(blacks.len(), 2);
        let white_witnesses: BTreeSet<CyclicSet> =
            whites.iter().map(|c| c.witness).collect();
        assert_eq!(
            white_witnesses,
            [set(4, &[1]), set(4, &[3])].into_iter().collect()
        );
        let black_witnesses: BTreeSet<CyclicSet> =
            blacks.iter().map(|c| c.witness).collect();
        assert_eq!(
            black_witnesses,
            [set(4, &[1, 2, 3]), set(4, &[1, 3, 4])].into_iter().collect()
        );
        assert_eq!(t.edge_count(), 8);
        assert_eq!(t.boundary().len(), 4);
        assert!(t.is_connected());
        // Euler count: 5 - 8 + 4 = 1, a disk.
        assert_eq!(
            t.vertices().len() as isize - t.edge_count() as isize
                + t.cells().len() as isize,
            1
        );
    }

    #[test]
    fn build_tiling_rejects_non_maximal() {
        let anchor = PositroidHandle::new(top_cell_necklace(2).unwrap());
        let c = crate::collections::WsCollection::from_anchor(anchor);
        assert!(build_tiling(&c, budget()).is_err());

        let unanchored =
            crate::collections::WsCollection::new(4, 2, [set(4, &[1, 2])]).unwrap();
        assert!(build_tiling(&unanchored, budget()).is_err());
    }

    #[test]
    fn k1_single_white_polygon() {
        // All 1-subsets of [4] share the trivial witness ∅ and form one
        // white polygon.
        let f = DecoratedPermutation::new(vec![2, 3, 4, 1], &[], &[]).unwrap();
        let anchor = PositroidHandle::new(necklace_from_perm(&f));
        assert_eq!(anchor.k(), 1);
        let c = crate::collections::WsCollection::from_anchor(anchor)
            .complete_to_maximal(budget())
            .unwrap();
        let t = build_tiling(&c, budget()).unwrap();
        assert_eq!(t.cells().len(), 1);
        assert_eq!(t.cells()[0].color, Color::White);
        assert!(t.cells()[0].witness.is_empty());
        assert_eq!(t.cells()[0].vertices.len(), 4);
    }

    #[test]
    fn symmetric_tiling_examples() {
        let t = fan_tiling();
        assert!(t.is_symmetric_tiling().unwrap());

        // A non-symmetric maximal collection in a non-type-C positroid.
        let f = DecoratedPermutation::new(vec![3, 1, 2, 4], &[], &[4]).unwrap();
        let anchor = PositroidHandle::new(necklace_from_perm(&f));
        let mut found_asymmetric = false;
        for c in enumerate_maximal(&anchor, budget()).unwrap() {
            if !c.is_symmetric().unwrap() {
                let t = build_tiling(&c, budget()).unwrap();
                assert!(!t.is_symmetric_tiling().unwrap());
                found_asymmetric = true;
            }
        }
        assert!(found_asymmetric);
    }

    #[test]
    fn mirror_positions_match_bar() {
        for n in 1..=3 {
            let anchor = PositroidHandle::new(top_cell_necklace(n).unwrap());
            for c in enumerate_maximal_symmetric(&anchor, budget()).unwrap() {
                if 2 * n < 3 {
                    continue; // no embedding below three boundary points
                }
                let t = build_tiling(&c, budget()).unwrap();
                assert!(t.is_symmetric_tiling().unwrap());
                for v in t.vertices() {
                    let (bx, by) = t.position(&bar(&v.label).unwrap()).unwrap();
                    assert!((bx + v.position.0).abs() < GEOM_EPS);
                    assert!((by - v.position.1).abs() < GEOM_EPS);
                }
            }
        }
    }

    #[test]
    fn pair_free_on_axis_examples() {
        let t = fan_tiling();
        assert!(t.pair_free_on_axis().unwrap());
        for (label, expect_sign) in [
            (set(4, &[1, 2]), 0),
            (set(4, &[1, 3]), 0),
            (set(4, &[3, 4]), 0),
            (set(4, &[1, 4]), -1),
            (set(4, &[2, 3]), 1),
        ] {
            let (x, _) = t.position(&label).unwrap();
            match expect_sign {
                0 => assert!(x.abs() <= GEOM_EPS),
                -1 => assert!(x < -GEOM_EPS),
                _ => assert!(x > GEOM_EPS),
            }
        }
    }

    #[test]
    fn handedness_matches_coordinate_sign() {
        // Left-handed admissible labels sit strictly left of the axis.
        for n in 2..=3 {
            for c in top_cell_collections(n) {
                let t = build_tiling(&c, budget()).unwrap();
                for v in t.vertices() {
                    if !crate::cyclic::is_admissible(&v.label).unwrap() {
                        continue;
                    }
                    let expected = match handedness(&v.label).unwrap() {
                        Handedness::OnAxis => 0,
                        Handedness::Left => -1,
                        Handedness::Right => 1,
                    };
                    let x = v.position.0;
                    match expected {
                        0 => assert!(x.abs() <= GEOM_EPS, "{} at x = {x}", v.label),
                        -1 => assert!(x < -GEOM_EPS, "{} at x = {x}", v.label),
                        _ => assert!(x > GEOM_EPS, "{} at x = {x}", v.label),
                    }
                }
            }
        }
    }

    #[test]
    fn distinct_members_distinct_positions() {
        for n in 1..=3 {
            if 2 * n < 3 {
                continue;
            }
            for c in top_cell_collections(n) {
                let t = build_tiling(&c, budget()).unwrap();
                for (i, a) in t.vertices().iter().enumerate() {
                    for b in &t.vertices()[i + 1..] {
                        let dx = a.position.0 - b.position.0;
                        let dy = a.position.1 - b.position.1;
                        assert!(
                            dx.abs() > GEOM_EPS || dy.abs() > GEOM_EPS,
                            "{} and {} coincide",
                            a.label,
                            b.label
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cells_convex_and_area_invariant_under_mutation() {
        for n in 2..=3 {
            let collections = top_cell_collections(n);
            let mut area = None;
            for c in collections {
                let t = build_tiling(&c, budget()).unwrap();
                assert!(t.cells_strictly_convex());
                let total = t.total_cell_area();
                match area {
                    None => area = Some(total),
                    Some(a) => assert!(
                        (a - total).abs() < 1e-9,
                        "area changed under mutation at n = {n}"
                    ),
                }
            }
        }
    }

    #[test]
    fn svg_rendering() {
        let t = fan_tiling();
        let svg = t.render_svg();
        assert_eq!(svg, t.render_svg());
        assert_eq!(svg.matches("<polygon").count(), 4);
        assert_eq!(svg.matches("<text").count(), 5);
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
