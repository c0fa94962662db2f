//! JSON serialization of the domain types, matching the documented
//! file formats: decorated permutations, collections (with optional
//! anchor), tiling dumps and plabic graphs. Writers are deterministic;
//! readers validate before constructing.

use serde::{Deserialize, Serialize};

use crate::collections::WsCollection;
use crate::cyclic::CyclicSet;
use crate::error::{Error, Result};
use crate::plabic::PlabicGraph;
use crate::positroid::{
    necklace_from_perm, perm_from_necklace, DecoratedPermutation, PositroidHandle,
};
use crate::tiling::{Color, PlabicTiling};

// ----- decorated permutations ---------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermDto {
    pub m: usize,
    pub image: Vec<usize>,
    #[serde(default)]
    pub white_fixed: Vec<usize>,
    #[serde(default)]
    pub black_fixed: Vec<usize>,
}

impl PermDto {
    pub fn from_perm(f: &DecoratedPermutation) -> Self {
        PermDto {
            m: f.size(),
            image: f.image().to_vec(),
            white_fixed: f.white_fixed_points(),
            black_fixed: f.black_fixed_points(),
        }
    }

    pub fn to_perm(&self) -> Result<DecoratedPermutation> {
        if self.image.len() != self.m {
            return Err(Error::domain(format!(
                "permutation image has length {}, expected m = {}",
                self.image.len(),
                self.m
            )));
        }
        DecoratedPermutation::new(self.image.clone(), &self.white_fixed, &self.black_fixed)
    }
}

pub fn perm_to_json(f: &DecoratedPermutation) -> String {
    serde_json::to_string_pretty(&PermDto::from_perm(f)).expect("serialization cannot fail")
}

pub fn perm_from_json(text: &str) -> Result<DecoratedPermutation> {
    let dto: PermDto =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("bad permutation JSON: {e}")))?;
    dto.to_perm()
}

// ----- Grassmann necklaces ---------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NecklaceDto {
    pub m: usize,
    pub k: usize,
    pub entries: Vec<Vec<usize>>,
}

pub fn necklace_to_json(necklace: &crate::positroid::GrassmannNecklace) -> String {
    let dto = NecklaceDto {
        m: necklace.ambient(),
        k: necklace.k(),
        entries: necklace.entries().iter().map(|s| s.elements()).collect(),
    };
    serde_json::to_string_pretty(&dto).expect("serialization cannot fail")
}

pub fn necklace_from_json(text: &str) -> Result<crate::positroid::GrassmannNecklace> {
    let dto: NecklaceDto =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("bad necklace JSON: {e}")))?;
    if dto.entries.len() != dto.m {
        return Err(Error::domain("necklace must have one entry per index"));
    }
    let entries: Vec<CyclicSet> = dto
        .entries
        .iter()
        .map(|elems| CyclicSet::new(dto.m, elems.iter().copied()))
        .collect::<Result<_>>()?;
    let necklace = crate::positroid::GrassmannNecklace::new(entries)?;
    if necklace.k() != dto.k {
        return Err(Error::domain("necklace k field disagrees with entries"));
    }
    Ok(necklace)
}

// ----- collections ----------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CollectionDto {
    pub m: usize,
    pub k: usize,
    /// Members as element lists, sorted canonically on write.
    pub members: Vec<Vec<usize>>,
    pub anchor: Option<PermDto>,
}

impl CollectionDto {
    pub fn from_collection(c: &WsCollection) -> Result<Self> {
        let anchor = match c.anchor() {
            Some(handle) => Some(PermDto::from_perm(&perm_from_necklace(handle.necklace())?)),
            None => None,
        };
        Ok(CollectionDto {
            m: c.ambient(),
            k: c.k(),
            members: c.members().map(|s| s.elements()).collect(),
            anchor,
        })
    }

    pub fn to_collection(&self) -> Result<WsCollection> {
        let members: Vec<CyclicSet> = self
            .members
            .iter()
            .map(|elems| CyclicSet::new(self.m, elems.iter().copied()))
            .collect::<Result<_>>()?;
        match &self.anchor {
            Some(perm) => {
                let f = perm.to_perm()?;
                if f.size() != self.m {
                    return Err(Error::domain("anchor ambient differs from collection"));
                }
                let handle = PositroidHandle::new(necklace_from_perm(&f));
                if handle.k() != self.k {
                    return Err(Error::domain("anchor k differs from collection"));
                }
                WsCollection::anchored(handle, members)
            }
            None => WsCollection::new(self.m, self.k, members),
        }
    }
}

pub fn collection_to_json(c: &WsCollection) -> Result<String> {
    Ok(serde_json::to_string_pretty(&CollectionDto::from_collection(c)?)
        .expect("serialization cannot fail"))
}

pub fn collection_from_json(text: &str) -> Result<WsCollection> {
    let dto: CollectionDto =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("bad collection JSON: {e}")))?;
    dto.to_collection()
}

// ----- tilings ---------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingDto {
    pub m: usize,
    pub k: usize,
    pub vertices: Vec<TilingVertexDto>,
    pub cells: Vec<TilingCellDto>,
    /// Edges as pairs of vertex labels.
    pub edges: Vec<(String, String)>,
    pub boundary: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingVertexDto {
    pub label: String,
    pub position: (f64, f64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingCellDto {
    pub color: String,
    pub witness: String,
    pub vertices: Vec<String>,
}

fn color_name(color: Color) -> &'static str {
    match color {
        Color::White => "white",
        Color::Black => "black",
    }
}

/// A one-way dump of the embedded complex for downstream tools.
pub fn tiling_to_json(t: &PlabicTiling) -> String {
    let dto = TilingDto {
        m: t.ambient(),
        k: t.k(),
        vertices: t
            .vertices()
            .iter()
            .map(|v| TilingVertexDto {
                label: v.label.to_string(),
                position: v.position,
            })
            .collect(),
        cells: t
            .cells()
            .iter()
            .map(|cell| TilingCellDto {
                color: color_name(cell.color).to_string(),
                witness: cell.witness.to_string(),
                vertices: cell.vertices.iter().map(|s| s.to_string()).collect(),
            })
            .collect(),
        edges: t
            .edges()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        boundary: t.boundary().iter().map(|s| s.to_string()).collect(),
    };
    serde_json::to_string_pretty(&dto).expect("serialization cannot fail")
}

// ----- plabic graphs ----------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDto {
    pub m: usize,
    pub internal: Vec<GraphVertexDto>,
    /// Endpoints index boundary vertices as `0..m`, internal as `m..`.
    pub edges: Vec<(usize, usize)>,
    /// Clockwise rotation per vertex, as edge indices.
    pub rotations: Vec<Vec<usize>>,
    /// Face labels, when the graph is reduced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphVertexDto {
    pub color: String,
    pub position: (f64, f64),
}

pub fn graph_to_json(g: &PlabicGraph) -> Result<String> {
    let face_labels = if g.is_reduced()? {
        Some(
            g.face_labels()?
                .labels()
                .iter()
                .map(|s| s.to_string())
                .collect(),
        )
    } else {
        None
    };
    let dto = GraphDto {
        m: g.ambient(),
        internal: (g.ambient()..g.vertex_count())
            .map(|v| GraphVertexDto {
                color: color_name(g.color(v).expect("internal vertex colored")).to_string(),
                position: g.position(v),
            })
            .collect(),
        edges: (0..g.edge_count()).map(|e| g.edge_endpoints(e)).collect(),
        rotations: (0..g.vertex_count()).map(|v| g.rotation_edges(v)).collect(),
        face_labels,
    };
    Ok(serde_json::to_string_pretty(&dto).expect("serialization cannot fail"))
}

pub fn graph_from_json(text: &str) -> Result<PlabicGraph> {
    let dto: GraphDto =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("bad graph JSON: {e}")))?;
    let internal: Vec<(Color, (f64, f64))> = dto
        .internal
        .iter()
        .map(|v| {
            let color = match v.color.as_str() {
                "white" => Color::White,
                "black" => Color::Black,
                other => return Err(Error::domain(format!("unknown color {other:?}"))),
            };
            Ok((color, v.position))
        })
        .collect::<Result<_>>()?;
    PlabicGraph::from_parts(dto.m, internal, &dto.edges, &dto.rotations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collections::enumerate_maximal;
    use crate::plabic::dual_graph;
    use crate::positroid::{top_cell_necklace, EnumerationBudget};
    use crate::tiling::build_tiling;

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    fn top_cell_pieces() -> (WsCollection, PlabicTiling, PlabicGraph) {
        let anchor = PositroidHandle::new(top_cell_necklace(2).unwrap());
        let c = WsCollection::from_anchor(anchor)
            .complete_to_maximal(budget())
            .unwrap();
        let t = build_tiling(&c, budget()).unwrap();
        let g = dual_graph(&t).unwrap();
        (c, t, g)
    }

    #[test]
    fn perm_round_trip_matches_documented_shape() {
        let f = DecoratedPermutation::new(vec![3, 4, 1, 2], &[], &[]).unwrap();
        let text = perm_to_json(&f);
        assert!(text.contains("\"image\""));
        assert_eq!(perm_from_json(&text).unwrap(), f);

        let decorated = DecoratedPermutation::new(vec![1, 2], &[1], &[2]).unwrap();
        let text = perm_to_json(&decorated);
        assert_eq!(perm_from_json(&text).unwrap(), decorated);

        // The documented literal form parses.
        let f = perm_from_json(
            r#"{"m": 4, "image": [3,4,1,2], "white_fixed": [], "black_fixed": []}"#,
        )
        .unwrap();
        assert_eq!(f.image(), &[3, 4, 1, 2]);
        assert!(perm_from_json(r#"{"m": 3, "image": [1,2]}"#).is_err());
    }

    #[test]
    fn collection_round_trip_with_and_without_anchor() {
        let (c, _, _) = top_cell_pieces();
        let text = collection_to_json(&c).unwrap();
        let back = collection_from_json(&text).unwrap();
        assert_eq!(
            back.members().collect::<Vec<_>>(),
            c.members().collect::<Vec<_>>()
        );
        assert!(back.anchor().is_some());

        let plain = WsCollection::new(
            4,
            2,
            [CyclicSet::new(4, [1, 2]).unwrap(), CyclicSet::new(4, [1, 3]).unwrap()],
        )
        .unwrap();
        let text = collection_to_json(&plain).unwrap();
        assert!(text.contains("\"anchor\": null"));
        let back = collection_from_json(&text).unwrap();
        assert!(back.anchor().is_none());
        assert_eq!(back.len(), 2);
    }

    #[test]
    fn collection_writes_members_canonically() {
        let (c, _, _) = top_cell_pieces();
        let a = collection_to_json(&c).unwrap();
        let b = collection_to_json(&collection_from_json(&a).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tiling_dump_contains_complex() {
        let (_, t, _) = top_cell_pieces();
        let text = tiling_to_json(&t);
        let dto: TilingDto = serde_json::from_str(&text).unwrap();
        assert_eq!(dto.m, 4);
        assert_eq!(dto.vertices.len(), 5);
        assert_eq!(dto.cells.len(), 4);
        assert_eq!(dto.edges.len(), 8);
        assert_eq!(dto.boundary.len(), 4);
    }

    #[test]
    fn graph_round_trip_preserves_trips_and_labels() {
        let (c, _, g) = top_cell_pieces();
        let text = graph_to_json(&g).unwrap();
        let back = graph_from_json(&text).unwrap();
        assert_eq!(back.trip_permutation().unwrap(), g.trip_permutation().unwrap());
        assert_eq!(
            back.face_labels().unwrap().collection(),
            c.members().copied().collect()
        );
        // Labels are embedded for reduced graphs.
        let dto: GraphDto = serde_json::from_str(&text).unwrap();
        assert_eq!(dto.face_labels.map(|l| l.len()), Some(5));
    }

    #[test]
    fn graph_json_round_trips_all_maximal_collections_m5() {
        for f in crate::positroid::all_decorated_perms(5) {
            let anchor = PositroidHandle::new(necklace_from_perm(&f));
            for c in enumerate_maximal(&anchor, budget()).unwrap() {
                let g = dual_graph(&build_tiling(&c, budget()).unwrap()).unwrap();
                let back = graph_from_json(&graph_to_json(&g).unwrap()).unwrap();
                assert_eq!(back.trip_permutation().unwrap(), f);
            }
        }
    }
}
