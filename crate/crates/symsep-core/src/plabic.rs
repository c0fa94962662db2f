//! Plabic graphs as combinatorial maps: the planar dual of a tiling,
//! trips by the rules of the road, the decorated trip permutation, the
//! four reducedness criteria, face labels, and the symmetry check.
//!
//! Representation: half-edges with `twin(h) = h ^ 1` and a clockwise
//! rotation system per vertex. Faces are computed on the map augmented
//! with virtual arcs joining consecutive boundary vertices along the
//! disk rim; with clockwise rotations, the orbit rule
//! `next(h) = rotation-predecessor of twin(h)` walks the face to the
//! right of each half-edge, and the outer face is exactly the orbit of
//! the counterclockwise arcs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::cyclic::CyclicSet;
use crate::error::{Error, Result};
use crate::positroid::DecoratedPermutation;
use crate::tiling::{Color, PlabicTiling};

/// An embedded planar bipartite-boundary graph in a disk. Vertices
/// `0..m` are the boundary vertices `1..=m` in clockwise order; the rest
/// are colored internal vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct PlabicGraph {
    m: usize,
    /// `None` for boundary vertices, `Some(color)` for internal ones.
    colors: Vec<Option<Color>>,
    positions: Vec<(f64, f64)>,
    /// Origin vertex of each half-edge; `twin(h) = h ^ 1`.
    origin: Vec<usize>,
    /// Outgoing half-edges per vertex, in clockwise order.
    rotations: Vec<Vec<usize>>,
}

/// One journey by the rules of the road: enter at a boundary vertex,
/// turn maximally left at white and maximally right at black.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trip {
    pub start: usize,
    pub end: usize,
    /// Directed real half-edges, legs first and last.
    pub steps: Vec<usize>,
}

/// Scott labels: one subset per face, with the boundary faces reading
/// the Grassmann necklace clockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLabeling {
    m: usize,
    k: usize,
    labels: Vec<CyclicSet>,
    /// `boundary[i - 1]` is the face between legs `i-1` and `i`.
    boundary: Vec<usize>,
}

impl FaceLabeling {
    pub fn ambient(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[CyclicSet] {
        &self.labels
    }

    /// The label of the boundary face between legs `i-1` and `i`,
    /// which is the necklace entry `I_i`.
    pub fn boundary_label(&self, i: usize) -> &CyclicSet {
        &self.labels[self.boundary[i - 1]]
    }

    /// The distinct labels as a collection.
    pub fn collection(&self) -> BTreeSet<CyclicSet> {
        self.labels.iter().copied().collect()
    }
}

/// Record of removed boundary leaves, sufficient to restore labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafReindex {
    /// Original ambient size.
    pub old_m: usize,
    /// Removed original boundary indices with the leaf color.
    pub removed: Vec<(usize, Color)>,
    /// `old_of_new[j]` is the original index of new boundary `j+1`.
    pub old_of_new: Vec<usize>,
}

impl LeafReindex {
    /// Maps a label of the stripped graph back to the original ambient:
    /// surviving indices are renamed back and white-leaf indices added.
    pub fn restore(&self, label: &CyclicSet) -> Result<CyclicSet> {
        let mut elements: Vec<usize> =
            label.iter().map(|e| self.old_of_new[e - 1]).collect();
        for &(i, color) in &self.removed {
            if color == Color::White {
                elements.push(i);
            }
        }
        CyclicSet::new(self.old_m, elements)
    }
}

impl PlabicGraph {
    /// Builds a graph from an edge list and a clockwise rotation system
    /// given as edge indices per vertex. Vertices `0..m` are boundary.
    pub fn from_parts(
        m: usize,
        internal: Vec<(Color, (f64, f64))>,
        edges: &[(usize, usize)],
        rotations_by_edge: &[Vec<usize>],
    ) -> Result<Self> {
        let vertex_count = m + internal.len();
        if rotations_by_edge.len() != vertex_count {
            return Err(Error::domain(
                "rotation system must list every vertex exactly once",
            ));
        }
        let mut colors = vec![None; m];
        let mut positions = vec![(0.0, 0.0); m];
        for (color, position) in &internal {
            colors.push(Some(*color));
            positions.push(*position);
        }
        let mut origin = Vec::with_capacity(2 * edges.len());
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::domain("edge endpoint out of range"));
            }
            if a == b {
                return Err(Error::domain("self-loops are not supported"));
            }
            origin.push(a);
            origin.push(b);
        }
        let mut rotations = vec![Vec::new(); vertex_count];
        let mut used = vec![0usize; edges.len()];
        for (v, edge_ids) in rotations_by_edge.iter().enumerate() {
            for &e in edge_ids {
                let h = if edges[e].0 == v {
                    2 * e
                } else if edges[e].1 == v {
                    2 * e + 1
                } else {
                    return Err(Error::domain(format!(
                        "rotation at vertex {v} lists non-incident edge {e}"
                    )));
                };
                rotations[v].push(h);
                used[e] += 1;
            }
        }
        if used.iter().any(|&u| u != 2) {
            return Err(Error::domain(
                "each edge must appear in exactly its two endpoint rotations",
            ));
        }
        for i in 0..m {
            if rotations[i].len() != 1 {
                return Err(Error::domain(format!(
                    "boundary vertex {} must have degree one",
                    i + 1
                )));
            }
        }
        Ok(PlabicGraph {
            m,
            colors,
            positions,
            origin,
            rotations,
        })
    }

    pub fn ambient(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn internal_count(&self) -> usize {
        self.colors.len() - self.m
    }

    pub fn color(&self, vertex: usize) -> Option<Color> {
        self.colors[vertex]
    }

    pub fn position(&self, vertex: usize) -> (f64, f64) {
        self.positions[vertex]
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.rotations[vertex].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.origin[2 * e], self.origin[2 * e + 1])
    }

    /// The clockwise rotation at `vertex`, as edge indices.
    pub fn rotation_edges(&self, vertex: usize) -> Vec<usize> {
        self.rotations[vertex].iter().map(|&h| h / 2).collect()
    }

    fn target(&self, h: usize) -> usize {
        self.origin[h ^ 1]
    }

    /// The unique real half-edge out of boundary vertex `i` (1-based).
    fn leg(&self, i: usize) -> usize {
        self.rotations[i - 1][0]
    }

    fn rotation_step(&self, v: usize, h: usize, forward: bool) -> Result<usize> {
        let ring = &self.rotations[v];
        let idx = ring
            .iter()
            .position(|&x| x == h)
            .ok_or_else(|| Error::domain("half-edge missing from its rotation"))?;
        let len = ring.len();
        Ok(if forward {
            ring[(idx + 1) % len]
        } else {
            ring[(idx + len - 1) % len]
        })
    }

    /// Walks one trip from boundary vertex `start` (1-based).
    fn trace_trip(&self, start: usize) -> Result<Trip> {
        let cap = 2 * self.origin.len() + 2;
        let mut steps = vec![self.leg(start)];
        loop {
            if steps.len() > cap {
                return Err(Error::structural(format!(
                    "trip from {start} fails to terminate"
                )));
            }
            let h = *steps.last().unwrap();
            let v = self.target(h);
            match self.colors[v] {
                None => {
                    return Ok(Trip {
                        start,
                        end: v + 1,
                        steps,
                    });
                }
                Some(color) => {
                    // Maximal left turn at white: the clockwise successor
                    // of the reversed arrival; maximal right at black.
                    let out = self.rotation_step(v, h ^ 1, color == Color::White)?;
                    steps.push(out);
                }
            }
        }
    }

    /// All `m` trips, in order of starting vertex.
    pub fn trips(&self) -> Result<Vec<Trip>> {
        (1..=self.m).map(|i| self.trace_trip(i)).collect()
    }

    /// The decorated trip permutation; fixed points take the color of
    /// their boundary leaf.
    pub fn trip_permutation(&self) -> Result<DecoratedPermutation> {
        let trips = self.trips()?;
        let mut image = vec![0usize; self.m];
        let mut white = Vec::new();
        let mut black = Vec::new();
        for trip in &trips {
            image[trip.start - 1] = trip.end;
            if trip.start == trip.end {
                let neighbor = self.target(trip.steps[0]);
                if self.degree(neighbor) != 1 {
                    return Err(Error::structural(format!(
                        "fixed point {} without a boundary leaf",
                        trip.start
                    )));
                }
                match self.colors[neighbor] {
                    Some(Color::White) => white.push(trip.start),
                    Some(Color::Black) => black.push(trip.start),
                    None => {
                        return Err(Error::structural(
                            "trip of length zero between boundary vertices",
                        ))
                    }
                }
            }
        }
        DecoratedPermutation::new(image, &white, &black)
    }

    // ----- faces ---------------------------------------------------------

    /// Number of real half-edges; arc half-edge `j` (0-based, joining
    /// boundary `j` to `j+1 mod m`) gets ids `base + 2j` and `base + 2j + 1`.
    fn arc_base(&self) -> usize {
        self.origin.len()
    }

    fn augmented_rotation(&self, v: usize) -> Vec<usize> {
        if v >= self.m {
            return self.rotations[v].clone();
        }
        let base = self.arc_base();
        let prev = (v + self.m - 1) % self.m;
        // Clockwise at the rim: arc toward v+1, then the leg, then the
        // arc toward v-1.
        vec![base + 2 * v, self.rotations[v][0], base + 2 * prev + 1]
    }

    fn augmented_target(&self, h: usize) -> usize {
        let base = self.arc_base();
        if h < base {
            return self.target(h);
        }
        let j = (h - base) / 2;
        if (h - base) % 2 == 0 {
            (j + 1) % self.m
        } else {
            j
        }
    }

    fn face_next(&self, h: usize, rotation_index: &BTreeMap<usize, (usize, usize)>) -> usize {
        let v = self.augmented_target(h);
        let (_, idx) = rotation_index[&(h ^ 1)];
        debug_assert_eq!(rotation_index[&(h ^ 1)].0, v);
        let ring_len = self.augmented_rotation(v).len();
        self.augmented_rotation(v)[(idx + ring_len - 1) % ring_len]
    }

    /// Face id per augmented half-edge, plus the cycles. The outer face
    /// (the orbit of the counterclockwise arcs) is excluded; ids index
    /// the returned cycles.
    pub fn faces(&self) -> Result<(Vec<Vec<usize>>, BTreeMap<usize, usize>)> {
        if self.m == 0 {
            return Err(Error::domain("faces: graph has no boundary"));
        }
        let base = self.arc_base();
        let total = base + 2 * self.m;
        let mut rotation_index: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for v in 0..self.colors.len() {
            for (idx, &h) in self.augmented_rotation(v).iter().enumerate() {
                if rotation_index.insert(h, (v, idx)).is_some() {
                    return Err(Error::domain("half-edge appears in two rotations"));
                }
            }
        }
        if rotation_index.len() != total {
            return Err(Error::domain("rotation system does not cover all half-edges"));
        }
        let mut face_of: BTreeMap<usize, usize> = BTreeMap::new();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let outer_start = base + 1; // the arc from boundary 2 back to 1
        for h0 in (0..total).rev() {
            // Start with the outer orbit so it can be dropped by id.
            let h0 = if h0 == total - 1 { outer_start } else { h0 };
            if face_of.contains_key(&h0) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = h0;
            loop {
                cycle.push(h);
                h = self.face_next(h, &rotation_index);
                if h == h0 {
                    break;
                }
            }
            let id = cycles.len();
            for &e in &cycle {
                face_of.insert(e, id);
            }
            cycles.push(cycle);
        }
        // Drop the outer face (always id 0 by construction).
        let outer = face_of[&outer_start];
        debug_assert_eq!(outer, 0);
        if cycles[outer].len() != self.m
            || cycles[outer].iter().any(|&h| h < base || (h - base) % 2 == 0)
        {
            return Err(Error::structural(
                "outer face is not the full rim; rotation system is not planar",
            ));
        }
        cycles.remove(outer);
        let mut faces = BTreeMap::new();
        for (h, id) in face_of {
            if id != outer {
                faces.insert(h, id - 1);
            }
        }
        // Euler check for the disk: V - (E + m) + (F + 1) = 2.
        let v = self.colors.len() as isize;
        let e = (self.edge_count() + self.m) as isize;
        let f = (cycles.len() + 1) as isize;
        if v - e + f != 2 {
            return Err(Error::structural(
                "Euler characteristic check failed; embedding is not a disk",
            ));
        }
        Ok((cycles, faces))
    }

    pub fn face_count(&self) -> Result<usize> {
        Ok(self.faces()?.0.len())
    }

    // ----- reducedness ---------------------------------------------------

    fn is_boundary_leaf_trip(&self, trip: &Trip) -> bool {
        trip.start == trip.end
            && trip.steps.len() == 2
            && self.degree(self.target(trip.steps[0])) == 1
    }

    /// The four trip criteria for reducedness.
    pub fn is_reduced(&self) -> Result<bool> {
        let trips = self.trips()?;
        // (1) Every real half-edge is used exactly once over all trips.
        let mut uses = vec![0usize; self.origin.len()];
        for trip in &trips {
            for &h in &trip.steps {
                uses[h] += 1;
            }
        }
        if uses.iter().any(|&u| u != 1) {
            return Ok(false);
        }
        // (2) Internal leaves must be adjacent to the boundary.
        for v in self.m..self.colors.len() {
            if self.degree(v) == 1 && self.target(self.rotations[v][0]) >= self.m {
                return Ok(false);
            }
        }
        // (3) No trip uses an edge in both directions, except a trip to
        // a boundary leaf.
        for trip in &trips {
            if self.is_boundary_leaf_trip(trip) {
                continue;
            }
            let edges: BTreeSet<usize> = trip.steps.iter().map(|&h| h / 2).collect();
            if edges.len() != trip.steps.len() {
                return Ok(false);
            }
        }
        // (4) No two trips share two edges in the same relative order.
        for (a, trip_a) in trips.iter().enumerate() {
            for trip_b in &trips[a + 1..] {
                let pos_b: BTreeMap<usize, usize> = trip_b
                    .steps
                    .iter()
                    .enumerate()
                    .map(|(idx, &h)| (h / 2, idx))
                    .collect();
                let shared: Vec<usize> = trip_a
                    .steps
                    .iter()
                    .filter_map(|&h| pos_b.get(&(h / 2)).copied())
                    .collect();
                if shared.windows(2).any(|w| w[0] < w[1]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    // ----- face labels ---------------------------------------------------

    /// Scott labels: a face gets `i` when it lies in the region to the
    /// left of the trip ending at `i`; a white boundary leaf puts its
    /// index in every label, a black one in none.
    pub fn face_labels(&self) -> Result<FaceLabeling> {
        if !self.is_reduced()? {
            return Err(Error::domain("face_labels requires a reduced graph"));
        }
        let (cycles, face_of) = self.faces()?;
        let trips = self.trips()?;
        let base = self.arc_base();
        // Face adjacency across each real edge, indexed by edge.
        let adjacency: Vec<(usize, usize, usize)> = (0..self.edge_count())
            .map(|e| (e, face_of[&(2 * e)], face_of[&(2 * e + 1)]))
            .collect();
        let mut members: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cycles.len()];
        for trip in &trips {
            if trip.start == trip.end {
                if self.colors[self.target(trip.steps[0])] == Some(Color::White) {
                    for face in &mut members {
                        face.insert(trip.end);
                    }
                }
                continue;
            }
            // Flood the region to the trip's left: seed with the faces
            // immediately left of each step, then expand across edges
            // the trip does not use.
            let used: BTreeSet<usize> = trip.steps.iter().map(|&h| h / 2).collect();
            let mut left = vec![false; cycles.len()];
            let mut queue = VecDeque::new();
            for &h in &trip.steps {
                let f = face_of[&(h ^ 1)];
                if !left[f] {
                    left[f] = true;
                    queue.push_back(f);
                }
            }
            while let Some(f) = queue.pop_front() {
                for &(e, fa, fb) in &adjacency {
                    if used.contains(&e) {
                        continue;
                    }
                    let other = if fa == f {
                        fb
                    } else if fb == f {
                        fa
                    } else {
                        continue;
                    };
                    if !left[other] {
                        left[other] = true;
                        queue.push_back(other);
                    }
                }
            }
            for (f, is_left) in left.iter().enumerate() {
                if *is_left {
                    members[f].insert(trip.end);
                }
            }
        }
        let labels: Vec<CyclicSet> = members
            .into_iter()
            .map(|elems| CyclicSet::new(self.m, elems))
            .collect::<Result<_>>()?;
        let k = labels.first().map(|l| l.len()).unwrap_or(0);
        if labels.iter().any(|l| l.len() != k) {
            return Err(Error::structural(
                "face labels do not share a common cardinality",
            ));
        }
        // Boundary face between legs i-1 and i: the face of the inward
        // arc from boundary i-1 to i (arc index i-2 mod m, forward).
        let boundary: Vec<usize> = (1..=self.m)
            .map(|i| face_of[&(base + 2 * ((i + self.m - 2) % self.m))])
            .collect();
        Ok(FaceLabeling {
            m: self.m,
            k,
            labels,
            boundary,
        })
    }

    // ----- symmetry ------------------------------------------------------

    /// True iff the graph admits a color-reversing isomorphism onto its
    /// mirror image (reversed rotations, boundary `i ↦ i'`), anchored by
    /// matching each leg `i` with leg `i'`.
    pub fn is_symmetric_graph(&self) -> Result<bool> {
        if self.m % 2 != 0 {
            return Err(Error::domain("is_symmetric_graph: ambient must be even"));
        }
        // φ maps half-edges of G to half-edges of the mirror; since the
        // mirror shares G's half-edge set, φ is an endofunction with
        // φ(twin) = twin(φ) and φ(rot-successor) = rot-predecessor(φ).
        let mut phi: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for i in 1..=self.m {
            let mirrored = self.m - i + 1;
            phi.insert(self.leg(i), self.leg(mirrored));
            queue.push_back(self.leg(i));
        }
        while let Some(h) = queue.pop_front() {
            let img = phi[&h];
            let (v, w) = (self.origin[h], self.origin[img]);
            // Colors must flip on internal vertices; boundary must land
            // on the mirrored index.
            match (self.colors[v], self.colors[w]) {
                (None, None) => {
                    if w != self.m - v - 1 {
                        return Ok(false);
                    }
                }
                (Some(a), Some(b)) => {
                    if a != b.opposite() {
                        return Ok(false);
                    }
                }
                _ => return Ok(false),
            }
            if self.degree(v) != self.degree(w) {
                return Ok(false);
            }
            let pairs = [
                (h ^ 1, img ^ 1),
                (
                    self.rotation_step(v, h, true)?,
                    self.rotation_step(w, img, false)?,
                ),
            ];
            for (a, b) in pairs {
                match phi.get(&a) {
                    Some(&existing) => {
                        if existing != b {
                            return Ok(false);
                        }
                    }
                    None => {
                        phi.insert(a, b);
                        queue.push_back(a);
                    }
                }
            }
        }
        // Every half-edge is reachable from some leg along twins and
        // rotations, since each component touches the boundary.
        Ok(phi.len() == self.origin.len())
    }

    // ----- boundary leaves ----------------------------------------------

    /// Removes all boundary leaves (lollipops) and renumbers the
    /// remaining boundary vertices consecutively.
    pub fn strip_boundary_leaves(&self) -> Result<(PlabicGraph, LeafReindex)> {
        let mut removed = Vec::new();
        let mut keep_boundary = Vec::new();
        let mut dead_vertices = BTreeSet::new();
        for i in 1..=self.m {
            let neighbor = self.target(self.leg(i));
            if neighbor >= self.m && self.degree(neighbor) == 1 {
                removed.push((i, self.colors[neighbor].unwrap()));
                dead_vertices.insert(i - 1);
                dead_vertices.insert(neighbor);
            } else {
                keep_boundary.push(i);
            }
        }
        let new_m = keep_boundary.len();
        // Old vertex id -> new vertex id: surviving boundary first (in
        // order), then surviving internal vertices.
        let mut new_id: BTreeMap<usize, usize> = BTreeMap::new();
        for (j, &i) in keep_boundary.iter().enumerate() {
            new_id.insert(i - 1, j);
        }
        let mut internal = Vec::new();
        for v in self.m..self.colors.len() {
            if !dead_vertices.contains(&v) {
                new_id.insert(v, new_m + internal.len());
                internal.push((self.colors[v].unwrap(), self.positions[v]));
            }
        }
        let mut new_edge_of: BTreeMap<usize, usize> = BTreeMap::new();
        let mut edges = Vec::new();
        for e in 0..self.edge_count() {
            let (a, b) = (self.origin[2 * e], self.origin[2 * e + 1]);
            if dead_vertices.contains(&a) || dead_vertices.contains(&b) {
                continue;
            }
            new_edge_of.insert(e, edges.len());
            edges.push((new_id[&a], new_id[&b]));
        }
        let mut rotations_by_edge = vec![Vec::new(); new_m + internal.len()];
        for (old_v, &v) in &new_id {
            rotations_by_edge[v] = self.rotations[*old_v]
                .iter()
                .map(|&h| new_edge_of[&(h / 2)])
                .collect();
        }
        let mut stripped =
            PlabicGraph::from_parts(new_m, internal, &edges, &rotations_by_edge)?;
        for (j, &i) in keep_boundary.iter().enumerate() {
            stripped.positions[j] = self.positions[i - 1];
        }
        Ok((
            stripped,
            LeafReindex {
                old_m: self.m,
                removed,
                old_of_new: keep_boundary,
            },
        ))
    }

    // ----- export --------------------------------------------------------

    /// Deterministic Graphviz output.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plabic {\n");
        for i in 1..=self.m {
            out.push_str(&format!("  b{i} [shape=plaintext, label=\"{i}\"];\n"));
        }
        for v in self.m..self.colors.len() {
            let fill = match self.colors[v] {
                Some(Color::White) => "white",
                _ => "black",
            };
            out.push_str(&format!(
                "  v{v} [shape=circle, style=filled, fillcolor={fill}, label=\"\"];\n"
            ));
        }
        let name = |v: usize| {
            if v < self.m {
                format!("b{}", v + 1)
            } else {
                format!("v{v}")
            }
        };
        for e in 0..self.edge_count() {
            out.push_str(&format!(
                "  {} -- {};\n",
                name(self.origin[2 * e]),
                name(self.origin[2 * e + 1])
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Dualizes a tiling: one internal vertex per 2-cell, edges across
/// interior tiling edges, legs across boundary tiling edges, direct
/// boundary-to-boundary edges across bridges, and lollipops at the
/// necklace's degenerate gaps (fixed points).
pub fn dual_graph(t: &PlabicTiling) -> Result<PlabicGraph> {
    if !t.is_connected() {
        return Err(Error::domain("dual_graph: tiling complex is disconnected"));
    }
    let m = t.ambient();
    // Where each tiling edge appears as a cell side.
    let mut sides: BTreeMap<(CyclicSet, CyclicSet), Vec<(usize, usize)>> = BTreeMap::new();
    for (cell_idx, cell) in t.cells().iter().enumerate() {
        let len = cell.vertices.len();
        for s in 0..len {
            let (a, b) = (cell.vertices[s], cell.vertices[(s + 1) % len]);
            sides
                .entry((a.min(b), a.max(b)))
                .or_default()
                .push((cell_idx, s));
        }
    }
    for (edge, cells) in &sides {
        if cells.len() > 2 {
            return Err(Error::domain(format!(
                "dual_graph: tiling edge ({}, {}) bounds more than two cells",
                edge.0, edge.1
            )));
        }
    }

    let radius = t
        .vertices()
        .iter()
        .map(|v| v.position.0.hypot(v.position.1))
        .fold(0.0_f64, f64::max)
        + 1.0;
    let boundary_angle =
        |i: usize| std::f64::consts::PI * (1.0 - (2 * i) as f64 / m as f64);

    let mut internal: Vec<(Color, (f64, f64))> = t
        .cells()
        .iter()
        .map(|cell| {
            let mut x = 0.0;
            let mut y = 0.0;
            for label in &cell.vertices {
                let p = t.position(label).expect("cell vertex embedded");
                x += p.0;
                y += p.1;
            }
            let n = cell.vertices.len() as f64;
            (cell.color, (x / n, y / n))
        })
        .collect();

    let mut boundary_positions = vec![(0.0, 0.0); m];
    let cell_count = t.cells().len();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Dual edge index assigned to each cell side, for rotations.
    let mut side_edge: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut lollipop_rotations: Vec<(usize, usize)> = Vec::new(); // (vertex, edge)
    let mut boundary_edge_of: Vec<Option<usize>> = vec![None; m];
    let mut bridge_ends: BTreeMap<(CyclicSet, CyclicSet), Vec<usize>> = BTreeMap::new();

    // Interior edges between cells.
    for (_, cells) in sides.iter().filter(|(_, c)| c.len() == 2) {
        let e = edges.len();
        edges.push((m + cells[0].0, m + cells[1].0));
        side_edge.insert(cells[0], e);
        side_edge.insert(cells[1], e);
    }

    // Walk the boundary: leg, bridge crossing, or lollipop per gap.
    let necklace = t.boundary();
    for i in 1..=m {
        let here = necklace[i - 1];
        let next = necklace[i % m];
        if here == next {
            // Fixed point: a lollipop whose color says whether i stays
            // in every label (white) or none (black).
            let color = if here.contains(i) {
                Color::White
            } else {
                Color::Black
            };
            let angle = boundary_angle(i);
            let leaf = m + internal.len();
            internal.push((color, (0.85 * radius * angle.cos(), 0.85 * radius * angle.sin())));
            boundary_positions[i - 1] = (radius * angle.cos(), radius * angle.sin());
            let e = edges.len();
            edges.push((i - 1, leaf));
            boundary_edge_of[i - 1] = Some(e);
            lollipop_rotations.push((leaf, e));
            continue;
        }
        let key = (here.min(next), here.max(next));
        let pa = t.position(&here).expect("necklace label embedded");
        let pb = t.position(&next).expect("necklace label embedded");
        let (mx, my) = ((pa.0 + pb.0) / 2.0, (pa.1 + pb.1) / 2.0);
        let norm = mx.hypot(my);
        boundary_positions[i - 1] = if norm > 1e-9 {
            (radius * mx / norm, radius * my / norm)
        } else {
            let angle = boundary_angle(i);
            (radius * angle.cos(), radius * angle.sin())
        };
        match sides.get(&key).map(Vec::len).unwrap_or(0) {
            1 => {
                let (cell_idx, s) = sides[&key][0];
                let e = edges.len();
                edges.push((i - 1, m + cell_idx));
                side_edge.insert((cell_idx, s), e);
                boundary_edge_of[i - 1] = Some(e);
            }
            0 => {
                if !t.edges().any(|edge| edge == &key) {
                    return Err(Error::domain(format!(
                        "dual_graph: necklace gap ({}, {}) is not a tiling edge",
                        key.0, key.1
                    )));
                }
                bridge_ends.entry(key).or_default().push(i);
            }
            _ => {
                return Err(Error::domain(
                    "dual_graph: necklace gap crosses an interior edge",
                ));
            }
        }
    }
    for (edge, ends) in bridge_ends {
        if ends.len() != 2 {
            return Err(Error::domain(format!(
                "dual_graph: bridge ({}, {}) is crossed {} times, expected 2",
                edge.0,
                edge.1,
                ends.len()
            )));
        }
        let e = edges.len();
        edges.push((ends[0] - 1, ends[1] - 1));
        boundary_edge_of[ends[0] - 1] = Some(e);
        boundary_edge_of[ends[1] - 1] = Some(e);
    }

    // Rotations: boundary vertices are degree one; cell vertices take
    // their sides in clockwise polygon order; lollipop leaves are
    // degree one.
    let mut rotations = vec![Vec::new(); m + internal.len()];
    for i in 0..m {
        let e = boundary_edge_of[i].ok_or_else(|| {
            Error::structural("dual_graph: a boundary vertex received no edge")
        })?;
        rotations[i] = vec![e];
    }
    for (cell_idx, cell) in t.cells().iter().enumerate() {
        let mut ring = Vec::new();
        for s in 0..cell.vertices.len() {
            let e = side_edge.get(&(cell_idx, s)).ok_or_else(|| {
                Error::structural(
                    "dual_graph: a cell side is neither interior nor on the boundary walk",
                )
            })?;
            ring.push(*e);
        }
        rotations[m + cell_idx] = ring;
    }
    for (leaf, e) in lollipop_rotations {
        rotations[leaf] = vec![e];
    }
    let _ = cell_count;
    let mut graph = PlabicGraph::from_parts(m, internal, &edges, &rotations)?;
    graph.positions[..m].copy_from_slice(&boundary_positions);
    // The construction must embed as a disk.
    graph.faces()?;
    Ok(graph)
}
